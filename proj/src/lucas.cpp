#include "quartic/lucas.hpp"

namespace quartic::lucas {

namespace {

struct UvWindow {
    mpz_class u;  // U_m
    mpz_class v;  // V_m
    mpz_class u1; // U_{m+1}
    mpz_class v1; // V_{m+1}
};

// Walk the bits of k from the top, maintaining the window at index m and
// mapping m -> 2m or 2m+1 per bit via the doubling laws.
UvWindow uv_window(const mpz_class& t, const mpz_class& k) {
    UvWindow w{0, 2, 1, t};
    if (k == 0) return w;

    const mp_bitcnt_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    mpz_class u2m, v2m, u2m1, v2m1;
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        u2m1 = w.u1 * w.v - 1;
        v2m1 = w.v1 * w.v - t;
        if (mpz_tstbit(k.get_mpz_t(), i)) {
            w.u = u2m1;
            w.v = v2m1;
            w.u1 = w.u1 * w.v1;      // U_{2m+2} = U_{m+1} V_{m+1}
            w.v1 = w.v1 * w.v1 - 2;  // V_{2m+2} = V_{m+1}^2 - 2
        } else {
            u2m = w.u * w.v;         // U_2m = U_m V_m
            v2m = w.v * w.v - 2;     // V_2m = V_m^2 - 2
            w.u = u2m;
            w.v = v2m;
            w.u1 = u2m1;
            w.v1 = v2m1;
        }
    }
    return w;
}

void require_odd_positive(const mpz_class& n) {
    if (n < 1 || mpz_even_p(n.get_mpz_t()))
        throw ValidationError(ValidationError::Code::EvenIndex,
                              "index must be an odd positive integer, got " + n.get_str());
}

} // namespace

TraceUnit::TraceUnit(mpz_class t) : t_(std::move(t)) {
    if (t_ < 3)
        throw ValidationError(ValidationError::Code::NotAdmissible,
                              "trace must be >= 3, got " + t_.get_str());
}

LucasPair lucas_uv(const TraceUnit& t, const mpz_class& k) {
    internal_check(k >= 0, "lucas_uv: negative index");
    UvWindow w = uv_window(t.t(), k);
    return {k, std::move(w.u), std::move(w.v)};
}

LucasPair lucas_uv_naive(const TraceUnit& t, unsigned long k) {
    mpz_class u_prev = 0, u = 1;
    mpz_class v_prev = 2, v = t.t();
    if (k == 0) return {0, 0, 2};
    for (unsigned long i = 1; i < k; ++i) {
        mpz_class un = t.t() * u - u_prev;
        mpz_class vn = t.t() * v - v_prev;
        u_prev = u;
        u = un;
        v_prev = v;
        v = vn;
    }
    return {k, u, v};
}

std::pair<mpz_class, mpz_class> u_pair(const TraceUnit& t, const mpz_class& k) {
    internal_check(k >= 0, "u_pair: negative index");
    UvWindow w = uv_window(t.t(), k);
    return {std::move(w.u), std::move(w.u1)};
}

mpz_class p_value(const TraceUnit& t, const mpz_class& n) {
    require_odd_positive(n);
    auto [uk, uk1] = u_pair(t, mpz_class((n - 1) / 2));
    return uk1 + uk;
}

mpz_class q_value(const TraceUnit& t, const mpz_class& n) {
    require_odd_positive(n);
    auto [uk, uk1] = u_pair(t, mpz_class((n - 1) / 2));
    return uk1 - uk;
}

TraceUnit compose_trace(const TraceUnit& t, const mpz_class& s) {
    internal_check(s >= 1, "compose_trace: exponent must be >= 1");
    return TraceUnit(lucas_uv(t, s).V);
}

} // namespace quartic::lucas
