#include "quartic/solver.hpp"

#include "quartic/arith.hpp"
#include "quartic/lucas.hpp"

namespace quartic::solver {

const char* to_string(Form form) {
    return form == Form::X2Y4 ? "x2y4" : "x4y2";
}

std::optional<Form> form_from_string(const std::string& name) {
    if (name == "x2y4") return Form::X2Y4;
    if (name == "x4y2") return Form::X4Y2;
    return std::nullopt;
}

std::optional<ValidationError::Code> admissibility_failure(const EquationInstance& inst) {
    using Code = ValidationError::Code;
    if (inst.A < 1 || inst.B < 1) return Code::NotAdmissible;
    if (inst.C != 1 && inst.C != 2 && inst.C != 4) return Code::NotAdmissible;
    if (inst.form == Form::X4Y2 && inst.C != 4) return Code::UnsupportedForm;
    if (arith::squarefree_split(inst.A).k != 1) return Code::NotSquarefreeA;
    if (inst.A * inst.B < 2 || arith::as_perfect_square(inst.A * inst.B)) return Code::SquareAB;
    if (inst.C % 2 == 0 && mpz_even_p(mpz_class(inst.A * inst.B).get_mpz_t()))
        return Code::ParityViolation;
    if (inst.form == Form::X2Y4 && inst.A == 1 && inst.C != 2) return Code::AEqualsOneRequiresC2;
    return std::nullopt;
}

EquationInstance validate(const EquationInstance& inst) {
    if (auto code = admissibility_failure(inst)) {
        std::string detail = std::string(to_string(inst.form)) + " A=" + inst.A.get_str() +
                             " B=" + inst.B.get_str() + " C=" + std::to_string(inst.C);
        throw ValidationError(*code, std::string(to_string(*code)) + ": " + detail);
    }
    return inst;
}

CandidateSet candidate_exponents(const pell::PellFundamental& fund, Form form) {
    const mpz_class& decomposed = (form == Form::X2Y4) ? fund.b : fund.a;
    mpz_class r = arith::squarefree_split(decomposed).r;
    if (mpz_even_p(r.get_mpz_t()))
        throw ValidationError(ValidationError::Code::EvenR,
                              "squarefree part " + r.get_str() + " of " + decomposed.get_str() +
                                  " is even; no odd exponent n can satisfy r | n");
    CandidateSet set{r, {}};
    set.exponents.push_back(r);
    set.exponents.push_back(3 * r);
    return set;
}

Extraction extract_solution(const pell::PellFundamental& fund, const mpz_class& n, Form form) {
    internal_check(n >= 1 && mpz_odd_p(n.get_mpz_t()), "extract_solution: n must be odd positive");

    const mpz_class& decomposed = (form == Form::X2Y4) ? fund.b : fund.a;
    const mpz_class r = arith::squarefree_split(decomposed).r;

    lucas::TraceUnit t(fund.trace);
    auto [uk, uk1] = lucas::u_pair(t, mpz_class((n - 1) / 2));
    mpz_class p_n = uk1 + uk;
    mpz_class q_n = uk1 - uk;

    CandidateOutcome outcome;
    outcome.n = n;
    outcome.r = r;
    outcome.multiplier = mpz_divisible_p(n.get_mpz_t(), r.get_mpz_t()) ? mpz_class(n / r)
                                                                       : mpz_class(0);
    outcome.p_n = p_n;
    outcome.q_n = q_n;
    outcome.square_test_value = (form == Form::X2Y4) ? mpz_class(fund.b * p_n)
                                                     : mpz_class(fund.a * q_n);

    auto root = arith::as_perfect_square(outcome.square_test_value);
    if (!root) {
        outcome.verdict = Verdict::NotSquare;
        return {std::move(outcome), std::nullopt};
    }
    outcome.verdict = Verdict::Solution;

    SolutionRecord rec;
    rec.n = n;
    if (form == Form::X2Y4) {
        rec.y = *root;                // y^2 = b * P_n
        rec.x = fund.a * q_n;         // x = a * Q_n
        internal_check(fund.A * rec.x * rec.x - fund.B * rec.y * rec.y * rec.y * rec.y == fund.C,
                       "extract_solution: x2y4 solution fails the equation");
    } else {
        rec.x = *root;                // x^2 = a * Q_n
        rec.y = fund.b * p_n;         // y = b * P_n
        internal_check(fund.A * rec.x * rec.x * rec.x * rec.x - fund.B * rec.y * rec.y == fund.C,
                       "extract_solution: x4y2 solution fails the equation");
    }
    rec.coprime = (arith::gcd(rec.x, rec.y) == 1);
    return {std::move(outcome), std::move(rec)};
}

TheoremCertificate theorem_certificate(const EquationInstance& inst,
                                       const pell::PellFundamental& fund) {
    TheoremCertificate cert;
    mpz_class quantity;
    if (inst.form == Form::X2Y4) {
        quantity = 4 * inst.B * fund.b * fund.b;
        internal_check(mpz_divisible_ui_p(quantity.get_mpz_t(),
                                          static_cast<unsigned long>(inst.C)) != 0,
                       "theorem_certificate: C does not divide 4*B*b^2");
        quantity = quantity / inst.C + 3; // equals trace + 1
        internal_check(quantity == fund.trace + 1, "theorem_certificate: quantity != trace + 1");
        cert.single_by_c1 = (inst.C == 1);
        cert.single_by_c4_b3mod4 = (inst.C == 4 && mpz_fdiv_ui(inst.B.get_mpz_t(), 4) == 3);
        cert.single_by_c2_b1mod4 = (inst.C == 2 && mpz_fdiv_ui(inst.B.get_mpz_t(), 4) == 1);
        cert.coprime_bound_one = (inst.C == 4);
    } else {
        quantity = inst.B * fund.b * fund.b + 1; // equals trace - 1 at C = 4
        internal_check(quantity == fund.trace - 1, "theorem_certificate: quantity != trace - 1");
    }
    cert.condition.quantity = quantity;
    cert.condition.is_square = arith::as_perfect_square(quantity).has_value();

    // The flagged branches make the quantity a non-square (3 mod 4, 2 mod 4
    // or 5 mod 8), so the square test alone decides the bound.
    if (cert.condition.is_square) {
        internal_check(!cert.single_by_c1 && !cert.single_by_c4_b3mod4 && !cert.single_by_c2_b1mod4,
                       "theorem_certificate: square quantity in an excluded branch");
        cert.bound = 2;
    } else {
        cert.bound = 1;
    }
    return cert;
}

SolveReport solve(const EquationInstance& raw, const mpz_class& heuristic_n_max) {
    SolveReport report;
    report.instance = validate(raw);
    const EquationInstance& inst = report.instance;

    mpz_class n_max = heuristic_n_max;
    if (n_max < 1) n_max = 1;
    if (mpz_even_p(n_max.get_mpz_t())) n_max -= 1;

    auto fund = pell::minimal_solution(inst.A, inst.B, inst.C);
    if (!fund) return report; // unsolvable Pell layer: no solutions, bound 0

    report.fundamental = *fund;
    TheoremCertificate cert = theorem_certificate(inst, *fund);
    report.theorem_bound = cert.bound;
    report.certificate = cert;

    CandidateSet candidates;
    try {
        candidates = candidate_exponents(*fund, inst.form);
    } catch (const ValidationError& e) {
        if (e.code() != ValidationError::Code::EvenR) throw;
        // r even forces v2(b) (x2y4) resp. v2(a) (x4y2) odd and the trace
        // even, so every square test value b*P_n / a*Q_n has odd 2-adic
        // valuation: certified empty without scanning anything.
        internal_check(mpz_even_p(fund->trace.get_mpz_t()),
                       "solve: even r with odd trace");
        return report;
    }

    for (const mpz_class& n : candidates.exponents) {
        Extraction ex = extract_solution(*fund, n, inst.form);
        report.candidates.push_back(ex.outcome);
        if (ex.solution) report.solutions.push_back(*ex.solution);
    }

    const bool even_b = mpz_even_p(fund->b.get_mpz_t());
    if (inst.form == Form::X4Y2 && even_b) {
        // Even trace: the n > 3r exclusion is unavailable, so scan the
        // remaining odd multiples of r up to n_max and say so in the report.
        report.completeness = {Completeness::Kind::HeuristicBound, n_max};
        for (mpz_class n = 5 * candidates.r; n <= n_max; n += 2 * candidates.r) {
            Extraction ex = extract_solution(*fund, n, inst.form);
            if (ex.solution) report.solutions.push_back(*ex.solution);
        }
    }
    return report;
}

} // namespace quartic::solver
