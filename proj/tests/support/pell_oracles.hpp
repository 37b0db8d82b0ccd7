#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>

#include "quartic/arith.hpp"

// Independent ground truth for the Pell layer.

namespace testsupport {

// Minimal (t, u) with t^2 - D u^2 = 1 by scanning u upward. Only usable when
// the fundamental is small; callers bound the scan.
inline std::optional<std::pair<mpz_class, mpz_class>> pell_unit_by_scan(const mpz_class& D,
                                                                        unsigned long u_limit) {
    for (mpz_class u = 1; u <= u_limit; ++u) {
        if (auto t = quartic::arith::as_perfect_square(1 + D * u * u))
            return std::make_pair(*t, u);
    }
    return std::nullopt;
}

// The chakravala cycle, a different route to the fundamental solution of
// t^2 - D u^2 = 1 than the continued fraction expansion. Keep (p, q, m) with
// p^2 - D q^2 = m, gcd(p, q) = 1, and compose with (x, 1, x^2 - D) where
// x = -p * q^{-1} (mod |m|) and x^2 is nearest to D; all three divisions by
// |m| are then exact, and the cycle lands on m = 1 with the minimal solution.
inline std::pair<mpz_class, mpz_class> chakravala(const mpz_class& D) {
    using quartic::arith::isqrt;

    mpz_class a0 = isqrt(D);
    if (a0 * a0 == D) throw std::invalid_argument("chakravala: square D");

    auto exact_div = [](const mpz_class& num, const mpz_class& den) {
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw std::logic_error("chakravala: inexact division");
        return mpz_class(num / den);
    };

    mpz_class p = a0, q = 1, m = a0 * a0 - D;
    while (m != 1) {
        mpz_class mm = abs(m);
        mpz_class qinv;
        if (!mpz_invert(qinv.get_mpz_t(), q.get_mpz_t(), mm.get_mpz_t()))
            throw std::logic_error("chakravala: q not invertible");
        mpz_class x = ((-p * qinv) % mm + mm) % mm;

        // move x next to sqrt(D) within its residue class, then compare the
        // two straddling candidates
        if (x < a0) x += ((a0 - x) / mm) * mm;
        mpz_class lo = (x > a0 && x >= mm) ? mpz_class(x - mm) : x;
        mpz_class hi = (lo == x) ? mpz_class(x + mm) : x;
        x = (abs(lo * lo - D) <= abs(hi * hi - D)) ? lo : hi;

        mpz_class p_next = exact_div(p * x + D * q, mm);
        mpz_class q_next = exact_div(p + x * q, mm);
        mpz_class m_next = exact_div(x * x - D, m);
        p = p_next;
        q = q_next;
        m = m_next;
    }
    if (p < 0) p = -p;
    if (q < 0) q = -q;
    if (p * p - D * q * q != 1) throw std::logic_error("chakravala: bad result");
    return {p, q};
}

} // namespace testsupport
