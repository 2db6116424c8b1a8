#include "kgbound/tables.hpp"

#include <cmath>
#include <stdexcept>

namespace kg::tables {

namespace {

using B = Branch;

std::vector<PublishedTable> build() {
    std::vector<PublishedTable> t;
    // Reference table 1: tanh family, m = 0.25, S0 = 4, V0 = 0.35.
    t.push_back({1,
                 Family::Tanh,
                 {0.25, 4.0, 0.35},
                 {
                     {0, B::Plus, 1.83314, 3.98281, 3.049, std::nullopt},
                     {1, B::Plus, 2.99136, 3.32952, 1.70229, std::nullopt},
                     {2, B::Plus, 3.39932, 2.96043, 0.071382, std::nullopt},
                     {0, B::Minus, -1.88921, 3.61226, 3.41955, std::nullopt},
                     {1, B::Minus, -3.09985, 2.48214, 2.54967, std::nullopt},
                     {2, B::Minus, -3.68852, 1.32395, 1.70786, std::nullopt},
                 }});
    // Reference table 2: tanh family, m = 0.5, S0 = 4, V0 = 0.35.
    t.push_back({2,
                 Family::Tanh,
                 {0.5, 4.0, 0.35},
                 {
                     {0, B::Plus, 1.791, 4.26304, 2.76877, std::nullopt},
                     {1, B::Plus, 2.8921, 3.71318, 1.31863, std::nullopt},
                     {0, B::Minus, -1.90315, 3.8953, 3.13652, std::nullopt},
                     {1, B::Minus, -3.10908, 2.87833, 2.15348, std::nullopt},
                 }});
    // Reference table 3: exp family, m = 1.6, S0 = 4, V0 = 0.25.
    t.push_back({3,
                 Family::Exp,
                 {1.6, 4.0, 0.25},
                 {
                     {0, B::Plus, 1.08989, std::nullopt, std::nullopt, 1.17139},
                     {1, B::Plus, 1.58713, std::nullopt, std::nullopt, 1.20252},
                     {0, B::Minus, -1.22751, std::nullopt, std::nullopt, 1.02626},
                     {1, B::Minus, -1.6, std::nullopt, std::nullopt, 1.00294},
                 }});
    // Reference table 4: linear family, m = 0.5, S0 = 4, V0 = 0.35.
    t.push_back({4,
                 Family::Linear,
                 {0.5, 4.0, 0.35},
                 {
                     {0, B::Plus, 1.36234, std::nullopt, std::nullopt, std::nullopt},
                     {1, B::Plus, 2.39166, std::nullopt, std::nullopt, std::nullopt},
                     {2, B::Plus, 3.10035, std::nullopt, std::nullopt, std::nullopt},
                     {0, B::Minus, -1.44984, std::nullopt, std::nullopt, std::nullopt},
                     {1, B::Minus, -2.47916, std::nullopt, std::nullopt, std::nullopt},
                     {2, B::Minus, -3.18785, std::nullopt, std::nullopt, std::nullopt},
                 }});
    return t;
}

} // namespace

const std::vector<PublishedTable>& published_tables() {
    static const std::vector<PublishedTable> tabs = build();
    return tabs;
}

const PublishedTable& published_table(int id) {
    for (const auto& t : published_tables())
        if (t.id == id) return t;
    throw std::invalid_argument("published_table: id must be 1..4");
}

TableCheck check_table(int id) {
    const auto& pub = published_table(id);
    TableCheck check;
    check.id = pub.id;
    check.family = pub.family;
    check.couplings = pub.couplings;
    check.max_abs_diff = 0.0;
    for (const auto& row : pub.rows) {
        const auto st = models::solve_level(pub.family, pub.couplings, row.n, row.sign);
        if (!st) throw std::runtime_error("check_table: published level has no real root");
        TableCheckRow out;
        out.n = row.n;
        out.sign = row.sign;
        out.cells.push_back({"E", st->energy, row.energy, std::abs(st->energy - row.energy)});
        if (row.s1)
            out.cells.push_back(
                {"s1", st->tanh_shape->s1, *row.s1, std::abs(st->tanh_shape->s1 - *row.s1)});
        if (row.s2)
            out.cells.push_back(
                {"s2", st->tanh_shape->s2, *row.s2, std::abs(st->tanh_shape->s2 - *row.s2)});
        if (row.a_pm)
            out.cells.push_back(
                {"A", st->exp_shape->a_pm, *row.a_pm, std::abs(st->exp_shape->a_pm - *row.a_pm)});
        for (const auto& cell : out.cells)
            check.max_abs_diff = std::max(check.max_abs_diff, cell.abs_diff);
        check.rows.push_back(std::move(out));
    }
    check.pass = check.max_abs_diff < 1e-4;
    return check;
}

} // namespace kg::tables
