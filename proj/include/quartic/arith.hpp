#pragma once

#include <gmpxx.h>

#include <optional>

namespace quartic::arith {

// Decomposition n = r * k^2 with r squarefree.
struct SquarefreeSplit {
    mpz_class r;
    mpz_class k;

    bool operator==(const SquarefreeSplit&) const = default;
};

// Floor of sqrt(n), n >= 0. Newton iteration on integers: the start value
// 2^ceil(bits/2) is >= sqrt(n), every iterate stays >= floor(sqrt(n)), and
// the sequence strictly decreases until the first non-decreasing step, at
// which point the current value is exactly floor(sqrt(n)).
mpz_class isqrt(const mpz_class& n);

// s with s*s == n when n is a perfect square, empty otherwise. Quadratic
// residue tables mod 64, 63, 65 and 11 reject most non-squares cheaply; the
// final isqrt comparison is the source of truth.
std::optional<mpz_class> as_perfect_square(const mpz_class& n);

// Unique (r, k) with n = r * k^2, r squarefree, n >= 1. Trial division up to
// cbrt(n) followed by a square test on the remaining cofactor (which has at
// most two prime factors). Cost is O(n^(1/3)) divisions; intended for Pell
// coordinates at desk scale (~1e12), not general factoring.
SquarefreeSplit squarefree_split(const mpz_class& n);

mpz_class gcd(const mpz_class& a, const mpz_class& b);

} // namespace quartic::arith
