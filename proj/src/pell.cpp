#include "quartic/pell.hpp"

#include "quartic/arith.hpp"
#include "quartic/errors.hpp"

namespace quartic::pell {

namespace {

void require_nonsquare(const mpz_class& D, const mpz_class& a0) {
    if (a0 * a0 == D)
        throw ValidationError(ValidationError::Code::PerfectSquareInput,
                              "D must not be a perfect square, got " + D.get_str());
}

} // namespace

CfExpansion cf_expand_sqrt(const mpz_class& D) {
    if (D < 2)
        throw ValidationError(ValidationError::Code::PerfectSquareInput,
                              "D must be >= 2 and not a perfect square, got " + D.get_str());
    mpz_class a0 = arith::isqrt(D);
    require_nonsquare(D, a0);

    // x_i = (P_i + sqrt(D))/Q_i, a_i = floor(x_i),
    // P_{i+1} = a_i*Q_i - P_i, Q_{i+1} = (D - P_{i+1}^2)/Q_i (always exact).
    mpz_class P = a0;          // state after splitting off a0
    mpz_class Q = D - a0 * a0;
    const mpz_class P1 = P, Q1 = Q;

    std::vector<mpz_class> period;
    for (;;) {
        mpz_class a = (P + a0) / Q;
        period.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
        if (P == P1 && Q == Q1) break;
    }

    internal_check(period.back() == 2 * a0, "cf_expand_sqrt: period must end in 2*a0");
    return {D, std::move(a0), std::move(period)};
}

PellUnit pell_unit(const mpz_class& D) {
    CfExpansion cf = cf_expand_sqrt(D);
    const size_t len = cf.period.size();

    // Convergent over the first `len` partial quotients (a0 and the period
    // up to, not including, its last element): p^2 - D*q^2 = (-1)^len.
    mpz_class p_prev = 1, p = cf.a0;
    mpz_class q_prev = 0, q = 1;
    for (size_t i = 0; i + 1 < len; ++i) {
        mpz_class pn = cf.period[i] * p + p_prev;
        mpz_class qn = cf.period[i] * q + q_prev;
        p_prev = p;
        p = pn;
        q_prev = q;
        q = qn;
    }

    PellUnit unit{D, p, q};
    if (len % 2 != 0) {
        // p^2 - D*q^2 = -1; square it to reach norm +1.
        unit.t1 = p * p + D * q * q;
        unit.u1 = 2 * p * q;
    }
    internal_check(unit.t1 * unit.t1 - D * unit.u1 * unit.u1 == 1,
                   "pell_unit: norm +1 check failed");
    return unit;
}

std::optional<PellFundamental> minimal_solution(const mpz_class& A, const mpz_class& B, int C) {
    if (A < 1 || B < 1 || (C != 1 && C != 2 && C != 4))
        throw ValidationError(ValidationError::Code::NotAdmissible,
                              "minimal_solution requires A, B >= 1 and C in {1, 2, 4}");
    if (arith::squarefree_split(A).k != 1)
        throw ValidationError(ValidationError::Code::NotAdmissible,
                              "minimal_solution requires squarefree A, got " + A.get_str());

    const mpz_class D = A * B;
    if (D < 2 || arith::as_perfect_square(D))
        throw ValidationError(ValidationError::Code::NotAdmissible,
                              "minimal_solution requires nonsquare A*B, got " + D.get_str());

    const PellUnit unit = pell_unit(D);
    const mpz_class N = A * C;

    // v range containing the fundamental solution of every class:
    // v^2 <= u1^2 * N / (2*(t1+1)); +1 absorbs the floored quotient.
    const mpz_class vmax = arith::isqrt(unit.u1 * unit.u1 * N / (2 * (unit.t1 + 1))) + 1;

    std::vector<std::pair<mpz_class, mpz_class>> reps; // (u, v)
    for (mpz_class v = 0; v <= vmax; ++v) {
        mpz_class u2 = N + D * v * v;
        if (auto u = arith::as_perfect_square(u2)) reps.emplace_back(*u, v);
    }
    if (reps.empty()) return std::nullopt; // no class exists, so no solutions at all

    // The smallest positive v appears either at a representative or at the
    // first unit multiple of (u, v) or (u, -v).
    std::optional<std::pair<mpz_class, mpz_class>> best; // (v, u)
    auto consider = [&](mpz_class u, mpz_class v) {
        if (u <= 0 || v <= 0) return;
        if (!best || v < best->first) best = {std::move(v), std::move(u)};
    };
    for (const auto& [u, v] : reps) {
        consider(u, v);
        consider(u * unit.t1 + v * unit.u1 * D, u * unit.u1 + v * unit.t1);
        consider(u * unit.t1 - v * unit.u1 * D, u * unit.u1 - v * unit.t1);
    }
    internal_check(best.has_value(), "minimal_solution: no positive candidate");

    const mpz_class& u = best->second;
    const mpz_class& v = best->first;
    internal_check(u % A == 0, "minimal_solution: A does not divide u");

    PellFundamental fund{A, B, C, u / A, v, 0};
    internal_check(A * fund.a * fund.a - B * fund.b * fund.b == C,
                   "minimal_solution: solution check failed");

    mpz_class trace_num = 4 * B * fund.b * fund.b + 2 * C;
    internal_check(mpz_divisible_ui_p(trace_num.get_mpz_t(), static_cast<unsigned long>(C)) != 0,
                   "minimal_solution: trace is not integral");
    fund.trace = trace_num / C;
    internal_check(fund.trace >= 3, "minimal_solution: trace below 3");
    return fund;
}

} // namespace quartic::pell
