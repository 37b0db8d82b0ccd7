#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "quartic/solver.hpp"

namespace quartic::oracle {

// A perfect square observed where a scan did not expect one:
// P_n(t) square with n > 3, or Q_n(t) square with n > 3.
struct ScanViolation {
    enum class Kind { PSquare, QSquare };

    std::int64_t t = 0;
    std::uint64_t n = 0;
    Kind kind = Kind::PSquare;
    mpz_class value;

    bool operator==(const ScanViolation&) const = default;
};

// Exhaustive solutions of the instance with y <= bound (x2y4) or x <= bound
// (x4y2). Solves for the other variable: x^2 = (B*y^4 + C)/A requires exact
// divisibility before the square test, so no root finding happens on the
// quartic side. Results are ordered by the loop variable; n is set to 0
// because enumeration knows nothing about exponents.
std::vector<solver::SolutionRecord> brute_force(const solver::EquationInstance& inst,
                                                const mpz_class& bound);

// Scans t in [t_min, t_max] (t >= 3) and odd n in [5, n_max]: P_n(t) square
// tests for every t, Q_n(t) square tests only for odd t. Expected empty.
// The range is partitioned across `threads` workers; output is merged in
// (t, n) order regardless of the worker count.
std::vector<ScanViolation> lemma_scan(std::int64_t t_min, std::int64_t t_max,
                                      std::uint64_t n_max, unsigned threads = 1);

// Same scan restricted to even traces and Q only. Hits here are expected
// and document where the odd-trace hypothesis is essential (the smallest is
// Q_7(6) = 169 = 13^2); they are data, not failures.
std::vector<ScanViolation> q_even_trace_probe(std::int64_t t_max, std::uint64_t n_max,
                                              unsigned threads = 1);

// Windowed comparison of a solve report against brute_force: the report's
// solutions with y <= bound (x2y4) resp. x <= bound (x4y2) must coincide
// with the enumerated set. Solutions beyond the window cannot be checked by
// enumeration and are ignored.
struct Comparison {
    bool match = true;
    std::vector<solver::SolutionRecord> missing; // enumerated but not reported
    std::vector<solver::SolutionRecord> extra;   // reported in-window but not enumerated
};
Comparison compare_with_brute_force(const solver::SolveReport& report, const mpz_class& bound);

} // namespace quartic::oracle
