#include "doctest.h"
#include "pcv/report.hpp"

using namespace pcv;

TEST_CASE("report json round-trip") {
    VerificationReport r;
    r.check = "theorem1";
    r.ell = 13;
    r.precision = 50;
    r.status = CheckStatus::fail;
    r.first_mismatch = 3;
    r.lhs = "7";
    r.rhs = "9";
    r.note = "division-form: fail";
    r.elapsed_ms = 42;

    auto text = report_to_json(r);
    auto back = report_from_json(text);
    CHECK(back == r);
    CHECK(report_to_json(back) == text);

    VerificationReport minimal;
    minimal.check = "theta";
    minimal.status = CheckStatus::skipped;
    CHECK(report_from_json(report_to_json(minimal)) == minimal);
}

TEST_CASE("report array serialization is deterministic") {
    VerificationReport a;
    a.check = "cor12";
    a.ell = 5;
    a.n_max = 100;
    VerificationReport b;
    b.check = "prop31";
    b.ell = 7;
    b.n_max = 20;
    b.status = CheckStatus::pass;

    std::vector<VerificationReport> reports{a, b};
    auto one = reports_to_json(reports);
    auto two = reports_to_json(reports_from_json(one));
    CHECK(one == two);

    auto table = reports_to_table(reports);
    CHECK(table.find("cor12") != std::string::npos);
    CHECK(table.find("prop31") != std::string::npos);
}
