#include <cmath>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "kgbound/tables.hpp"

using namespace kg;
using namespace kg::tables;

TEST_SUITE("tables") {
    TEST_CASE("four reference tables with the benchmark couplings") {
        const auto& tabs = published_tables();
        REQUIRE(tabs.size() == 4);

        CHECK(tabs[0].id == 1);
        CHECK(tabs[0].family == Family::Tanh);
        CHECK(tabs[0].couplings.m == 0.25);
        CHECK(tabs[0].couplings.s0 == 4.0);
        CHECK(tabs[0].couplings.v0 == 0.35);
        CHECK(tabs[0].rows.size() == 6);

        CHECK(tabs[1].id == 2);
        CHECK(tabs[1].family == Family::Tanh);
        CHECK(tabs[1].couplings.m == 0.5);
        CHECK(tabs[1].rows.size() == 4);

        CHECK(tabs[2].id == 3);
        CHECK(tabs[2].family == Family::Exp);
        CHECK(tabs[2].couplings.m == 1.6);
        CHECK(tabs[2].couplings.v0 == 0.25);
        CHECK(tabs[2].rows.size() == 4);

        CHECK(tabs[3].id == 4);
        CHECK(tabs[3].family == Family::Linear);
        CHECK(tabs[3].couplings.m == 0.5);
        CHECK(tabs[3].rows.size() == 6);
    }

    TEST_CASE("published_table lookup and bad ids") {
        for (int id = 1; id <= 4; ++id) CHECK(published_table(id).id == id);
        CHECK_THROWS_AS(published_table(0), std::invalid_argument);
        CHECK_THROWS_AS(published_table(5), std::invalid_argument);
        CHECK_THROWS_AS(published_table(-1), std::invalid_argument);
    }

    TEST_CASE("golden spot values survive as written") {
        const auto& t1 = published_table(1);
        CHECK(t1.rows[0].n == 0);
        CHECK(t1.rows[0].sign == Branch::Plus);
        CHECK(t1.rows[0].energy == 1.83314);
        CHECK(*t1.rows[0].s1 == 3.98281);
        CHECK(*t1.rows[0].s2 == 3.049);
        CHECK_FALSE(t1.rows[0].a_pm.has_value());

        const auto& t3 = published_table(3);
        CHECK(t3.rows[3].energy == -1.6); // ground of the minus branch sits at -m
        CHECK(*t3.rows[3].a_pm == 1.00294);
        CHECK_FALSE(t3.rows[3].s1.has_value());

        const auto& t4 = published_table(4);
        CHECK(t4.rows[2].energy == 3.10035);
        CHECK_FALSE(t4.rows[2].s1.has_value());
        CHECK_FALSE(t4.rows[2].a_pm.has_value());
    }

    TEST_CASE("check_table reproduces every table to ~1e-5") {
        for (int id = 1; id <= 4; ++id) {
            const auto check = check_table(id);
            CHECK(check.id == id);
            CHECK(check.pass);
            CHECK(check.max_abs_diff < 1e-4);
            // measured agreement is ~5e-6; leave headroom but pin the order
            CHECK(check.max_abs_diff < 1e-5);
            CHECK(check.rows.size() == published_table(id).rows.size());
        }
    }

    TEST_CASE("check rows carry the per-family quantities in order") {
        const auto t1 = check_table(1);
        REQUIRE(t1.rows[0].cells.size() == 3);
        CHECK(std::string(t1.rows[0].cells[0].quantity) == "E");
        CHECK(std::string(t1.rows[0].cells[1].quantity) == "s1");
        CHECK(std::string(t1.rows[0].cells[2].quantity) == "s2");

        const auto t3 = check_table(3);
        REQUIRE(t3.rows[0].cells.size() == 2);
        CHECK(std::string(t3.rows[0].cells[0].quantity) == "E");
        CHECK(std::string(t3.rows[0].cells[1].quantity) == "A");

        const auto t4 = check_table(4);
        REQUIRE(t4.rows[0].cells.size() == 1);
        CHECK(std::string(t4.rows[0].cells[0].quantity) == "E");
    }

    TEST_CASE("diffs are |computed - published| and rows keep published order") {
        const auto check = check_table(2);
        const auto& pub = published_table(2);
        double worst = 0.0;
        for (size_t i = 0; i < check.rows.size(); ++i) {
            CHECK(check.rows[i].n == pub.rows[i].n);
            CHECK(check.rows[i].sign == pub.rows[i].sign);
            for (const auto& cell : check.rows[i].cells) {
                CHECK(cell.abs_diff == std::abs(cell.computed - cell.published));
                worst = std::max(worst, cell.abs_diff);
            }
        }
        CHECK(check.max_abs_diff == worst);
    }

    TEST_CASE("computed cells match an independent closed-form call") {
        const auto check = check_table(1);
        const auto st = models::solve_level(Family::Tanh, {0.25, 4.0, 0.35}, 2, Branch::Minus);
        REQUIRE(st);
        // row order: three plus rows then three minus rows
        const auto& row = check.rows[5];
        REQUIRE(row.n == 2);
        REQUIRE(row.sign == Branch::Minus);
        CHECK(row.cells[0].computed == st->energy);
        CHECK(row.cells[1].computed == st->tanh_shape->s1);
        CHECK(row.cells[2].computed == st->tanh_shape->s2);
    }
}
