#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "q4s/report.hpp"

using namespace q4s;

TEST_CASE("check constructors set residual and pass flags") {
    auto c = check_close("s", "id", "a = b", 0.5, "25/2", 1.0 + 1e-10, 1.0, 1e-9);
    CHECK(c.pass);
    CHECK(c.residual == Catch::Approx(1e-10));

    auto cf = check_close("s", "id", "a = b", 0.5, "25/2", 1.0 + 1e-8, 1.0, 1e-9);
    CHECK(!cf.pass);

    auto le = check_le("s", "id", "r <= tol", 0.5, "-", 2e-9, 1e-9);
    CHECK(!le.pass);
    CHECK(le.expected == 1e-9);

    auto ge = check_ge("s", "id", "n >= t", 0.5, "-", 0.5, 0.4);
    CHECK(ge.pass);
    CHECK(check_ge("s", "id", "n >= t", 0.5, "-", 0.3, 0.4).pass == false);
}

TEST_CASE("records sort by suite, check id, q, cutoff") {
    std::vector<Record> rs = {
        check_le("b", "x", "", 0.5, "1", 0, 1),  check_le("a", "y", "", 0.5, "1", 0, 1),
        check_le("a", "x", "", 0.8, "1", 0, 1),  check_le("a", "x", "", 0.3, "1", 0, 1),
    };
    sort_records(rs);
    CHECK(rs[0].suite == "a");
    CHECK(rs[0].check_id == "x");
    CHECK(rs[0].q == 0.3);
    CHECK(rs[1].q == 0.8);
    CHECK(rs[2].check_id == "y");
    CHECK(rs[3].suite == "b");
    CHECK(all_pass(rs));
}

TEST_CASE("JSON output carries the schema version and escapes strings") {
    std::vector<Record> rs = {check_le("s", "id", "max |a \"quoted\"| <= t", 0.5, "-", 0, 1)};
    std::ostringstream os;
    emit_json(rs, os);
    const std::string j = os.str();
    CHECK(j.find("\"schema\": 1") != std::string::npos);
    CHECK(j.find("\\\"quoted\\\"") != std::string::npos);
    CHECK(j.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("CSV output quotes fields containing commas") {
    std::vector<Record> rs = {check_le("s", "id", "f(a, b) <= t", 0.5, "-", 0, 1)};
    std::ostringstream os;
    emit_csv(rs, os);
    const std::string c = os.str();
    CHECK(c.rfind("suite,check_id,paper_anchor,q,cutoff,value,expected,residual,tolerance,pass",
                  0) == 0);
    CHECK(c.find("\"f(a, b) <= t\"") != std::string::npos);
}

TEST_CASE("double formatting is round-trip exact") {
    const double v = 0.1 + 0.2;
    CHECK(std::stod(detail::fmt_double(v)) == v);
    CHECK(detail::fmt_double(v) == detail::fmt_double(v));
}
