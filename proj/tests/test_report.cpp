#include <sstream>

#include "doctest.h"
#include "tamellc/report.hpp"

using namespace tamellc;

TEST_CASE("JSON schema keys") {
    auto R = conjecture_report(params_from_q(3, 2, 1, 0, 4));
    auto j = report_json(R);
    for (const char* k : {"p", "a", "q", "e", "f", "m", "r", "n"}) CHECK(j["params"].contains(k));
    CHECK(j["params"]["q"] == 3);
    REQUIRE(j["checks"].is_array());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("method_values"));
        CHECK(c.contains("status"));
    }
    CHECK(j["checks"][1]["method_values"]["lhs_counting"] == "18");
    CHECK(j["checks"][2]["status"] == "OK");
    CHECK(j["paper_typo_notes"].size() == 3);
    CHECK(j["timing_ms"].is_null());
    CHECK(report_json(R, true)["timing_ms"].is_number());
}

TEST_CASE("reports are reproducible") {
    SweepRanges R{{3, 5}, 3, 2, 4, true};
    auto a = sweep_json(R, sweep_report(R, 1)).dump();
    auto b = sweep_json(R, sweep_report(R, 3)).dump();
    CHECK(a == b);
}

TEST_CASE("CSV and JSON carry the same values") {
    auto R = conjecture_report(params_from_q(3, 1, 2, 0, 3));
    auto j = report_json(R);
    std::istringstream csv(reports_csv({R}));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "p,a,q,e,f,m,r,n,check,method,value,status");
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
        // p,a,q,e,f,m,r,n,check,method,"value",status
        std::vector<std::string> cells;
        std::string cell;
        bool quoted = false;
        for (char ch : line) {
            if (ch == '"') quoted = !quoted;
            else if (ch == ',' && !quoted) cells.push_back(cell), cell.clear();
            else cell += ch;
        }
        cells.push_back(cell);
        REQUIRE(cells.size() == 12);
        bool found = false;
        for (const auto& c : j["checks"])
            if (c["name"] == cells[8]) {
                CHECK(c["status"] == cells[11]);
                CHECK(c["method_values"][cells[9]] == cells[10]);
                found = true;
            }
        CHECK(found);
    }
    std::size_t want = 0;
    for (const auto& c : j["checks"]) want += c["method_values"].size();
    CHECK(rows == want);
}

TEST_CASE("factors report") {
    auto j = factors_json(params_from_q(5, 1, 2, 0, 2));
    CHECK(j["adjoint"]["conductor"]["filtration"] == 4);
    CHECK(j["adjoint"]["abs_gamma0"] == "125/3");
    CHECK(j["principal"]["abs_gamma0"] == "25/6");
    CHECK(j["adjoint"]["L"]["closed"] == j["adjoint"]["L"]["matrix"]);
}
