#include "quartic/arith.hpp"

#include <array>

#include "quartic/errors.hpp"

namespace quartic::arith {

namespace {

template <unsigned M>
constexpr std::array<bool, M> square_residues() {
    std::array<bool, M> table{};
    for (unsigned i = 0; i < M; ++i) table[(i * i) % M] = true;
    return table;
}

constexpr auto kQr64 = square_residues<64>();
constexpr auto kQr63 = square_residues<63>();
constexpr auto kQr65 = square_residues<65>();
constexpr auto kQr11 = square_residues<11>();

} // namespace

mpz_class isqrt(const mpz_class& n) {
    internal_check(n >= 0, "isqrt: negative input");
    if (n < 2) return n;

    const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    mpz_class x = 1;
    x <<= (bits + 1) / 2; // 2^ceil(bits/2) >= sqrt(n)
    for (;;) {
        mpz_class y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

std::optional<mpz_class> as_perfect_square(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    if (!kQr64[mpz_fdiv_ui(n.get_mpz_t(), 64)]) return std::nullopt;
    if (!kQr63[mpz_fdiv_ui(n.get_mpz_t(), 63)]) return std::nullopt;
    if (!kQr65[mpz_fdiv_ui(n.get_mpz_t(), 65)]) return std::nullopt;
    if (!kQr11[mpz_fdiv_ui(n.get_mpz_t(), 11)]) return std::nullopt;

    mpz_class s = isqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

SquarefreeSplit squarefree_split(const mpz_class& n) {
    internal_check(n >= 1, "squarefree_split: input must be positive");

    mpz_class m = n;
    mpz_class r = 1;
    mpz_class k = 1;

    // After the loop every prime factor p of m satisfies p^3 > m, so m is
    // 1, p, p^2 or p*q.
    mpz_class cube;
    for (unsigned long d = 2; true; d += (d == 2) ? 1 : 2) {
        cube = d;
        cube *= d;
        cube *= d;
        if (cube > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            unsigned long e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
                ++e;
            }
            if (e & 1) r *= d;
            if (e / 2 > 0) {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), d, e / 2);
                k *= p;
            }
        }
    }

    if (m > 1) {
        if (auto s = as_perfect_square(m)) {
            k *= *s;
        } else {
            r *= m; // prime or product of two distinct primes
        }
    }

    internal_check(r * k * k == n, "squarefree_split: decomposition mismatch");
    return {r, k};
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace quartic::arith
