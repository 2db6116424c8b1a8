#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "kgbound/cli.hpp"
#include "kgbound/models.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"kg"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code =
        kg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur)) {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

std::string fmt17(double d) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

} // namespace

TEST_SUITE("cli") {
    TEST_CASE("help exits 0 and lists the subcommands") {
        const auto r = run_cli({"--help"});
        CHECK(r.code == 0);
        for (const char* name : {"spectrum", "tables", "wavefunction", "verify"})
            CHECK(r.out.find(name) != std::string::npos);
    }

    TEST_CASE("usage errors exit 1") {
        CHECK(run_cli({}).code == 1);
        CHECK(run_cli({"spectrum"}).code == 1); // missing required flags
        CHECK(run_cli({"spectrum", "--family", "cosh", "--m", "1", "--s0", "4",
                       "--v0", "0.3"})
                  .code == 1);
        const auto r = run_cli({"nosuchcommand"});
        CHECK(r.code == 1);
        CHECK_FALSE(r.err.empty());
    }

    TEST_CASE("precondition violations exit 2") {
        const auto bad_m = run_cli(
            {"spectrum", "--family", "tanh", "--m", "-1", "--s0", "4", "--v0", "0.35"});
        CHECK(bad_m.code == 2);
        CHECK(bad_m.err.find("precondition violation") != std::string::npos);
        // |V0| >= |S0| leaves no binding well
        CHECK(run_cli({"spectrum", "--family", "tanh", "--m", "1", "--s0", "0.3",
                       "--v0", "4"})
                  .code == 2);
        // malformed grid string
        CHECK(run_cli({"wavefunction", "--family", "tanh", "--m", "0.25", "--s0", "4",
                       "--v0", "0.35", "--n", "0", "--sign", "plus", "--grid", "1:2"})
                  .code == 2);
        // shift inside the tanh pole band
        CHECK(run_cli({"wavefunction", "--family", "tanh", "--m", "0.25", "--s0", "4",
                       "--v0", "0.35", "--n", "0", "--sign", "plus", "--shift", "1.6"})
                  .code == 2);
    }

    TEST_CASE("rejected levels exit 3") {
        const auto r = run_cli({"wavefunction", "--family", "tanh", "--m", "0.25",
                                "--s0", "4", "--v0", "0.35", "--n", "3", "--sign",
                                "plus"});
        CHECK(r.code == 3);
        CHECK(r.err.find("rejected state") != std::string::npos);
    }

    TEST_CASE("spectrum json record matches the library closed forms") {
        const auto r = run_cli(
            {"spectrum", "--family", "tanh", "--m", "0.25", "--s0", "4", "--v0", "0.35"});
        REQUIRE(r.code == 0);
        const json rec = json::parse(r.out);
        CHECK(rec["schema_version"] == "1");
        CHECK(rec["command"] == "spectrum");
        CHECK(rec["inputs"]["family"] == "tanh");
        CHECK(rec["inputs"]["m"] == 0.25);
        CHECK(rec["inputs"]["s0"] == 4.0);
        CHECK(rec["inputs"]["v0"] == 0.35);
        CHECK(rec["warnings"].is_array());

        const auto& acc = rec["results"]["accepted"];
        REQUIRE(acc.size() == 6); // three per branch at these couplings
        const auto report =
            kg::models::enumerate_spectrum(kg::Family::Tanh, {0.25, 4.0, 0.35});
        REQUIRE(report.accepted.size() == 6);
        for (size_t i = 0; i < acc.size(); ++i) {
            const auto& st = report.accepted[i];
            CHECK(acc[i]["n"] == st.n);
            CHECK(acc[i]["sign"] == kg::to_string(st.sign));
            // %.16e round-trips doubles exactly through the parser
            CHECK(acc[i]["energy"].get<double>() == st.energy);
            CHECK(acc[i]["epsilon"].get<double>() ==
                  kg::models::epsilon_of(st));
            CHECK(acc[i]["s1"].get<double>() == st.tanh_shape->s1);
            CHECK(acc[i]["s2"].get<double>() == st.tanh_shape->s2);
        }
        CHECK(rec["results"]["rejected"].size() > 0);
        CHECK(rec["results"]["rejected"][0].contains("reason"));

        // full precision appears literally in the record
        CHECK(r.out.find("1.8331405366731652") != std::string::npos);
    }

    TEST_CASE("spectrum runs are byte-identical") {
        const auto a = run_cli(
            {"spectrum", "--family", "exp", "--m", "1.6", "--s0", "4", "--v0", "0.25"});
        const auto b = run_cli(
            {"spectrum", "--family", "exp", "--m", "1.6", "--s0", "4", "--v0", "0.25"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }

    TEST_CASE("echoed inputs reproduce the identical record") {
        const auto first = run_cli(
            {"spectrum", "--family", "linear", "--m", "0.5", "--s0", "4", "--v0", "0.35"});
        REQUIRE(first.code == 0);
        const json rec = json::parse(first.out);
        const std::string m = fmt17(rec["inputs"]["m"].get<double>());
        const std::string s0 = fmt17(rec["inputs"]["s0"].get<double>());
        const std::string v0 = fmt17(rec["inputs"]["v0"].get<double>());
        const std::string family = rec["inputs"]["family"].get<std::string>();
        const auto second = run_cli({"spectrum", "--family", family.c_str(), "--m",
                                     m.c_str(), "--s0", s0.c_str(), "--v0", v0.c_str()});
        CHECK(second.code == 0);
        CHECK(json::parse(second.out)["results"] == rec["results"]);
    }

    TEST_CASE("spectrum csv has a header, CRLF rows, and comment rejections") {
        const auto r = run_cli({"spectrum", "--family", "tanh", "--m", "0.25", "--s0",
                                "4", "--v0", "0.35", "--format", "csv"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("\r\n") != std::string::npos);
        const auto lines = split_lines(r.out);
        REQUIRE(lines.size() >= 7);
        CHECK(lines[0] == "n,sign,energy,epsilon,A,B,s1,s2,A_pm,level_bound");
        CHECK(lines[1].substr(0, 7) == "0,plus,");
        CHECK(lines[1].find("1.8331405366731652") != std::string::npos);
        bool has_rejected_comment = false;
        for (const auto& line : lines)
            if (line.rfind("# rejected:", 0) == 0) has_rejected_comment = true;
        CHECK(has_rejected_comment);
    }

    TEST_CASE("tables json checks all four tables by default") {
        const auto r = run_cli({"tables"});
        REQUIRE(r.code == 0);
        const json rec = json::parse(r.out);
        CHECK(rec["command"] == "tables");
        REQUIRE(rec["results"]["tables"].size() == 4);
        CHECK(rec["results"]["all_pass"] == true);
        CHECK(rec["results"]["max_abs_diff"].get<double>() < 1e-4);
        for (const auto& t : rec["results"]["tables"]) {
            CHECK(t["pass"] == true);
            CHECK(t["rows"].size() >= 4);
        }
    }

    TEST_CASE("tables --table narrows to one table; csv mirrors the verdict") {
        const auto r = run_cli({"tables", "--table", "2"});
        REQUIRE(r.code == 0);
        const json rec = json::parse(r.out);
        REQUIRE(rec["results"]["tables"].size() == 1);
        CHECK(rec["results"]["tables"][0]["id"] == 2);
        CHECK(rec["results"]["tables"][0]["family"] == "tanh");

        const auto csv = run_cli({"tables", "--table", "2", "--format", "csv"});
        REQUIRE(csv.code == 0);
        const auto lines = split_lines(csv.out);
        CHECK(lines[0] == "table,n,sign,quantity,computed,published,abs_diff");
        CHECK(csv.out.find("# all_pass=true") != std::string::npos);
    }

    TEST_CASE("wavefunction csv: samples, trailing summary comments") {
        const auto r = run_cli({"wavefunction", "--family", "linear", "--m", "0.5",
                                "--s0", "4", "--v0", "0.35", "--n", "1", "--sign",
                                "plus", "--grid", "-6:6:201"});
        REQUIRE(r.code == 0);
        const auto lines = split_lines(r.out);
        CHECK(lines[0] == "x,re(psi),im(psi)");
        int data = 0;
        bool saw_energy = false, saw_nodes = false;
        for (size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].rfind("# energy = ", 0) == 0) saw_energy = true;
            else if (lines[i] == "# node_count = 1") saw_nodes = true;
            else if (!lines[i].empty() && lines[i][0] != '#') ++data;
        }
        CHECK(data == 201);
        CHECK(saw_energy);
        CHECK(saw_nodes);
        // real levels have exactly zero imaginary samples
        CHECK(lines[1].substr(lines[1].rfind(',') + 1) == "0.0000000000000000e+00");
    }

    TEST_CASE("wavefunction json with a shift reports the shifted residual") {
        const auto r = run_cli({"wavefunction", "--family", "tanh", "--m", "0.25",
                                "--s0", "4", "--v0", "0.35", "--n", "0", "--sign",
                                "plus", "--shift", "0.3", "--grid", "-15:15:4001",
                                "--format", "json"});
        REQUIRE(r.code == 0);
        const json rec = json::parse(r.out);
        CHECK(rec["inputs"]["shift"] == 0.3);
        CHECK(rec["results"]["residual"].get<double>() < 1e-3);
        CHECK(rec["results"]["node_count"] == 0);
        CHECK(rec["results"]["normalized"] == true);
        REQUIRE(rec["results"]["samples"].size() == 4001);
        // shifted samples are genuinely complex
        double max_imag = 0.0;
        for (const auto& p : rec["results"]["samples"])
            max_imag = std::max(max_imag, std::abs(p[2].get<double>()));
        CHECK(max_imag > 1e-3);
        const auto st =
            kg::models::solve_level(kg::Family::Tanh, {0.25, 4.0, 0.35}, 0,
                                    kg::Branch::Plus);
        REQUIRE(st);
        CHECK(rec["results"]["state"]["energy"].get<double>() == st->energy);
    }

    TEST_CASE("verify json on the exp benchmark passes every check") {
        const auto r = run_cli(
            {"verify", "--family", "exp", "--m", "1.6", "--s0", "4", "--v0", "0.25"});
        REQUIRE(r.code == 0);
        const json rec = json::parse(r.out);
        CHECK(rec["command"] == "verify");
        CHECK(rec["results"]["all_pass"] == true);
        REQUIRE(rec["results"]["rows"].size() > 0);
        bool saw_oracle = false, saw_shape = false, saw_shifted = false;
        for (const auto& row : rec["results"]["rows"]) {
            const std::string check = row["check"].get<std::string>();
            const std::string status = row["status"].get<std::string>();
            CHECK((status == "pass" || status == "skipped_marginal"));
            if (check == "oracle") saw_oracle = true;
            if (check == "shape") saw_shape = true;
            if (check == "shifted_residual") saw_shifted = true;
        }
        CHECK(saw_oracle);
        CHECK(saw_shape);
        CHECK(saw_shifted);
        // the weakly-bound minus-branch top level is skipped, with a warning
        CHECK(rec["warnings"].size() > 0);
    }

    TEST_CASE("verify exits 4 when a check fails") {
        // a shift close to the pole band edge blows up the shifted residual
        const auto r = run_cli({"verify", "--family", "tanh", "--m", "0.25", "--s0",
                                "4", "--v0", "0.35", "--check", "pt", "--shift",
                                "1.5"});
        CHECK(r.code == 4);
        const json rec = json::parse(r.out);
        CHECK(rec["results"]["all_pass"] == false);
    }

    TEST_CASE("verify csv emits one row per check with a verdict comment") {
        const auto r = run_cli({"verify", "--family", "exp", "--m", "1.6", "--s0", "4",
                                "--v0", "0.25", "--check", "shape", "--format", "csv"});
        REQUIRE(r.code == 0);
        const auto lines = split_lines(r.out);
        CHECK(lines[0] == "check,n,sign,status,details");
        CHECK(r.out.find("# all_pass=true") != std::string::npos);
        int rows = 0;
        for (size_t i = 1; i < lines.size(); ++i)
            if (!lines[i].empty() && lines[i][0] != '#') ++rows;
        CHECK(rows == 4); // two accepted levels per branch
    }
}
