#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace quartic::pell {

// One full period of the continued fraction of sqrt(D), D >= 2 nonsquare.
// The expansion is [a0; period repeated], and the last period element is
// always 2*a0.
struct CfExpansion {
    mpz_class D;
    mpz_class a0;
    std::vector<mpz_class> period;

    bool operator==(const CfExpansion&) const = default;
};

// Exact integer (P, Q) state recurrence with cycle detection on the state
// returning to the first reduced state. No floating point.
CfExpansion cf_expand_sqrt(const mpz_class& D);

// Minimal positive (t1, u1) with t1^2 - D*u1^2 = 1.
struct PellUnit {
    mpz_class D;
    mpz_class t1;
    mpz_class u1;

    bool operator==(const PellUnit&) const = default;
};

// Read off the convergent at the end of one period (even period length)
// or square the norm -1 unit found there (odd period length).
PellUnit pell_unit(const mpz_class& D);

// Minimal positive solution (a, b) of A*a^2 - B*b^2 = C, together with the
// integer trace t = eps + eps' = 4*B*b^2/C + 2 of the unit
// eps = ((a*sqrt(A) + b*sqrt(B))/sqrt(C))^2.
struct PellFundamental {
    mpz_class A;
    mpz_class B;
    int C = 1;
    mpz_class a;
    mpz_class b;
    mpz_class trace;

    bool operator==(const PellFundamental&) const = default;
};

// Reduction to u^2 - (AB)*v^2 = A*C with u = A*a (A | u is automatic since A
// is squarefree and divides u^2). Class representatives are enumerated under
// the classical fundamental-solution bound
//   0 <= v <= u1 * sqrt(N) / sqrt(2*(t1+1)),  N = A*C,
// so an empty enumeration proves the equation unsolvable; the minimum of b
// over representatives and their first unit multiples is the answer.
// Minimality means smallest b; a is then determined by b.
std::optional<PellFundamental> minimal_solution(const mpz_class& A, const mpz_class& B, int C);

} // namespace quartic::pell
