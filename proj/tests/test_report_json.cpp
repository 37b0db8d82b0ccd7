#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "quartic/lucas.hpp"
#include "quartic/report_json.hpp"
#include "quartic/solver.hpp"

using namespace quartic;
using solver::Form;

namespace {

solver::SolveReport roundtrip(const solver::SolveReport& report) {
    std::string text = json_io::to_json(report).dump();
    return json_io::report_from_json(nlohmann::json::parse(text));
}

} // namespace

TEST_CASE("solve reports survive a serialize/parse round trip") {
    for (auto inst : {solver::EquationInstance{Form::X2Y4, 5, 1, 4},
                      solver::EquationInstance{Form::X2Y4, 2, 1, 1},
                      solver::EquationInstance{Form::X2Y4, 3, 5, 1},   // no fundamental
                      solver::EquationInstance{Form::X2Y4, 5, 19, 4},  // even r
                      solver::EquationInstance{Form::X4Y2, 1, 3, 4},   // heuristic bound
                      solver::EquationInstance{Form::X4Y2, 7, 3, 4}}) {
        auto report = solver::solve(inst);
        CHECK(roundtrip(report) == report);
    }
}

TEST_CASE("integers are serialized as decimal strings") {
    auto report = solver::solve({Form::X2Y4, 5, 1, 4});
    auto j = json_io::to_json(report);
    CHECK(j["instance"]["A"].is_string());
    CHECK(j["theorem_bound"].is_string());
    CHECK(j["fundamental"]["trace"].is_string());
    CHECK(j["solutions"][0]["x"].is_string());
    CHECK(j["solutions"][0]["coprime"].is_boolean());
    // huge values stay exact
    lucas::TraceUnit t(mpz_class("18446744073709551629"));
    auto big = lucas::p_value(t, 201);
    pell::PellFundamental fund{5, 1, 4, 1, 1, 3};
    solver::SolveReport rep;
    rep.instance = {Form::X2Y4, 5, 1, 4};
    rep.fundamental = fund;
    rep.candidates.push_back({201, 1, 201, big, big - 1, big, solver::Verdict::NotSquare});
    auto back = roundtrip(rep);
    CHECK(back.candidates[0].p_n == big);
}

TEST_CASE("scan violations serialize with kind tags") {
    oracle::ScanViolation v{6, 7, oracle::ScanViolation::Kind::QSquare, 169};
    auto j = json_io::to_json(v);
    CHECK(j["kind"] == "q_square");
    CHECK(j["t"] == "6");
    CHECK(j["n"] == "7");
    CHECK(j["value"] == "169");
}
