#pragma once

#include <gmpxx.h>

#include <utility>

#include "quartic/errors.hpp"

namespace quartic::lucas {

// A real unit eps > 1 of norm +1, represented by its integer trace
// t = eps + eps' >= 3 (t >= 3 is what makes eps real and > 1).
class TraceUnit {
public:
    explicit TraceUnit(mpz_class t);

    const mpz_class& t() const noexcept { return t_; }

    bool operator==(const TraceUnit&) const = default;

private:
    mpz_class t_;
};

// U_k = (eps^k - eps'^k)/(eps - eps'), V_k = eps^k + eps'^k.
// U_0 = 0, U_1 = 1, V_0 = 2, V_1 = t, both satisfy X_{k+1} = t*X_k - X_{k-1},
// and V_k^2 - (t^2 - 4)*U_k^2 = 4 throughout.
struct LucasPair {
    mpz_class k;
    mpz_class U;
    mpz_class V;

    bool operator==(const LucasPair&) const = default;
};

// Exact (U_k, V_k) by fast doubling:
//   U_2k   = U_k * V_k          V_2k   = V_k^2 - 2
//   U_2k+1 = U_{k+1} * V_k - 1  V_2k+1 = V_{k+1} * V_k - t
// O(log k) big-integer multiplications.
LucasPair lucas_uv(const TraceUnit& t, const mpz_class& k);

// Step-by-step evaluation of the same recurrence, O(k). Kept as the
// differential oracle for lucas_uv.
LucasPair lucas_uv_naive(const TraceUnit& t, unsigned long k);

// (U_k, U_{k+1}) in one doubling pass.
std::pair<mpz_class, mpz_class> u_pair(const TraceUnit& t, const mpz_class& k);

// P_n = U_{(n+1)/2} + U_{(n-1)/2} for odd n >= 1; P_1 = 1, P_3 = t + 1.
// Equals eps'^{(n-1)/2} * (eps^n - 1)/(eps - 1).
mpz_class p_value(const TraceUnit& t, const mpz_class& n);

// Q_n = U_{(n+1)/2} - U_{(n-1)/2} for odd n >= 1; Q_1 = 1, Q_3 = t - 1.
// Equals eps'^{(n-1)/2} * (eps^n + 1)/(eps + 1).
mpz_class q_value(const TraceUnit& t, const mpz_class& n);

// Trace of eps^s (that is, V_s), s >= 1. Sequences evaluated "at eps^s"
// are the sequences at this trace: P_{s*r}(t) = P_s(t) * P_r(compose_trace(t, s)).
TraceUnit compose_trace(const TraceUnit& t, const mpz_class& s);

} // namespace quartic::lucas
