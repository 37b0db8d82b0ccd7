#include "quartic/report_json.hpp"

#include "quartic/errors.hpp"

namespace quartic::json_io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string dec(const mpz_class& v) { return v.get_str(); }

mpz_class parse_int(const json& j) {
    if (!j.is_string()) throw ValidationError(ValidationError::Code::NotAdmissible,
                                              "expected a decimal string field");
    return mpz_class(j.get<std::string>());
}

} // namespace

ordered_json to_json(const pell::CfExpansion& cf) {
    ordered_json period = ordered_json::array();
    for (const auto& a : cf.period) period.push_back(dec(a));
    return {{"D", dec(cf.D)}, {"a0", dec(cf.a0)}, {"period", std::move(period)}};
}

ordered_json to_json(const pell::PellUnit& unit) {
    return {{"D", dec(unit.D)}, {"t1", dec(unit.t1)}, {"u1", dec(unit.u1)}};
}

ordered_json to_json(const pell::PellFundamental& fund) {
    return {{"A", dec(fund.A)}, {"B", dec(fund.B)}, {"C", std::to_string(fund.C)},
            {"a", dec(fund.a)}, {"b", dec(fund.b)}, {"trace", dec(fund.trace)}};
}

ordered_json to_json(const solver::EquationInstance& inst) {
    return {{"form", solver::to_string(inst.form)},
            {"A", dec(inst.A)},
            {"B", dec(inst.B)},
            {"C", std::to_string(inst.C)}};
}

ordered_json to_json(const solver::CandidateOutcome& outcome) {
    return {{"n", dec(outcome.n)},
            {"r", dec(outcome.r)},
            {"multiplier", dec(outcome.multiplier)},
            {"p_n", dec(outcome.p_n)},
            {"q_n", dec(outcome.q_n)},
            {"square_test_value", dec(outcome.square_test_value)},
            {"verdict", outcome.verdict == solver::Verdict::Solution ? "solution" : "not_square"}};
}

ordered_json to_json(const solver::SolutionRecord& rec) {
    return {{"x", dec(rec.x)}, {"y", dec(rec.y)}, {"n", dec(rec.n)}, {"coprime", rec.coprime}};
}

ordered_json to_json(const solver::SolveReport& report) {
    ordered_json j;
    j["instance"] = to_json(report.instance);
    j["fundamental"] = report.fundamental ? to_json(*report.fundamental) : ordered_json(nullptr);

    ordered_json candidates = ordered_json::array();
    for (const auto& c : report.candidates) candidates.push_back(to_json(c));
    j["candidates"] = std::move(candidates);

    ordered_json solutions = ordered_json::array();
    for (const auto& s : report.solutions) solutions.push_back(to_json(s));
    j["solutions"] = std::move(solutions);

    j["theorem_bound"] = std::to_string(report.theorem_bound);
    if (report.certificate) {
        const auto& cert = *report.certificate;
        j["two_solution_condition"] = {{"quantity", dec(cert.condition.quantity)},
                                       {"is_square", cert.condition.is_square}};
        j["theorem_flags"] = {{"single_by_c1", cert.single_by_c1},
                              {"single_by_c4_b3mod4", cert.single_by_c4_b3mod4},
                              {"single_by_c2_b1mod4", cert.single_by_c2_b1mod4},
                              {"coprime_bound_one", cert.coprime_bound_one}};
    } else {
        j["two_solution_condition"] = nullptr;
        j["theorem_flags"] = nullptr;
    }

    if (report.completeness.kind == solver::Completeness::Kind::Certified) {
        j["completeness"] = {{"kind", "certified"}};
    } else {
        j["completeness"] = {{"kind", "heuristic_bound"},
                             {"n_max", dec(report.completeness.n_max)}};
    }
    return j;
}

ordered_json to_json(const oracle::ScanViolation& violation) {
    return {{"kind", violation.kind == oracle::ScanViolation::Kind::PSquare ? "p_square"
                                                                            : "q_square"},
            {"t", std::to_string(violation.t)},
            {"n", std::to_string(violation.n)},
            {"value", dec(violation.value)}};
}

solver::SolveReport report_from_json(const json& j) {
    solver::SolveReport report;

    const json& inst = j.at("instance");
    auto form = solver::form_from_string(inst.at("form").get<std::string>());
    if (!form) throw ValidationError(ValidationError::Code::UnsupportedForm, "unknown form");
    report.instance.form = *form;
    report.instance.A = parse_int(inst.at("A"));
    report.instance.B = parse_int(inst.at("B"));
    report.instance.C = static_cast<int>(parse_int(inst.at("C")).get_si());

    if (!j.at("fundamental").is_null()) {
        const json& f = j.at("fundamental");
        pell::PellFundamental fund;
        fund.A = parse_int(f.at("A"));
        fund.B = parse_int(f.at("B"));
        fund.C = static_cast<int>(parse_int(f.at("C")).get_si());
        fund.a = parse_int(f.at("a"));
        fund.b = parse_int(f.at("b"));
        fund.trace = parse_int(f.at("trace"));
        report.fundamental = std::move(fund);
    }

    for (const json& c : j.at("candidates")) {
        solver::CandidateOutcome outcome;
        outcome.n = parse_int(c.at("n"));
        outcome.r = parse_int(c.at("r"));
        outcome.multiplier = parse_int(c.at("multiplier"));
        outcome.p_n = parse_int(c.at("p_n"));
        outcome.q_n = parse_int(c.at("q_n"));
        outcome.square_test_value = parse_int(c.at("square_test_value"));
        outcome.verdict = c.at("verdict").get<std::string>() == "solution"
                              ? solver::Verdict::Solution
                              : solver::Verdict::NotSquare;
        report.candidates.push_back(std::move(outcome));
    }

    for (const json& s : j.at("solutions")) {
        solver::SolutionRecord rec;
        rec.x = parse_int(s.at("x"));
        rec.y = parse_int(s.at("y"));
        rec.n = parse_int(s.at("n"));
        rec.coprime = s.at("coprime").get<bool>();
        report.solutions.push_back(std::move(rec));
    }

    report.theorem_bound = static_cast<int>(parse_int(j.at("theorem_bound")).get_si());

    if (!j.at("two_solution_condition").is_null()) {
        solver::TheoremCertificate cert;
        cert.bound = report.theorem_bound;
        cert.condition.quantity = parse_int(j.at("two_solution_condition").at("quantity"));
        cert.condition.is_square = j.at("two_solution_condition").at("is_square").get<bool>();
        const json& flags = j.at("theorem_flags");
        cert.single_by_c1 = flags.at("single_by_c1").get<bool>();
        cert.single_by_c4_b3mod4 = flags.at("single_by_c4_b3mod4").get<bool>();
        cert.single_by_c2_b1mod4 = flags.at("single_by_c2_b1mod4").get<bool>();
        cert.coprime_bound_one = flags.at("coprime_bound_one").get<bool>();
        report.certificate = std::move(cert);
    }

    const json& comp = j.at("completeness");
    if (comp.at("kind").get<std::string>() == "certified") {
        report.completeness = {solver::Completeness::Kind::Certified, 0};
    } else {
        report.completeness = {solver::Completeness::Kind::HeuristicBound,
                               parse_int(comp.at("n_max"))};
    }
    return report;
}

} // namespace quartic::json_io
