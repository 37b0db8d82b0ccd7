#pragma once

#include <gmpxx.h>

// Exact arithmetic in Q(sqrt(Delta)): values x + y*sqrt(Delta) with rational
// x, y. Test-only oracle; it evaluates the defining expressions
//   P_n = eps'^{(n-1)/2} (eps^n - 1)/(eps - 1),
//   Q_n = eps'^{(n-1)/2} (eps^n + 1)/(eps + 1),
// with eps = (t + sqrt(t^2-4))/2, independently of any Lucas recurrence.

namespace testsupport {

struct QuadRat {
    mpq_class x;
    mpq_class y;
    mpz_class delta; // shared radicand

    QuadRat(mpq_class x_, mpq_class y_, mpz_class delta_)
        : x(std::move(x_)), y(std::move(y_)), delta(std::move(delta_)) {}

    QuadRat conj() const { return {x, -y, delta}; }

    QuadRat operator+(const QuadRat& o) const { return {x + o.x, y + o.y, delta}; }
    QuadRat operator-(const QuadRat& o) const { return {x - o.x, y - o.y, delta}; }

    QuadRat operator*(const QuadRat& o) const {
        return {x * o.x + y * o.y * delta, x * o.y + y * o.x, delta};
    }

    QuadRat inverse() const {
        mpq_class norm = x * x - y * y * delta;
        return {x / norm, -y / norm, delta};
    }

    QuadRat operator/(const QuadRat& o) const { return *this * o.inverse(); }

    QuadRat pow(unsigned long e) const {
        QuadRat acc{1, 0, delta};
        QuadRat base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool is_rational_integer() const {
        return y == 0 && x.get_den() == 1;
    }
};

inline QuadRat unit_from_trace(const mpz_class& t) {
    mpz_class delta = t * t - 4;
    return {mpq_class(t) / 2, mpq_class(1) / 2, delta};
}

// P_n or Q_n straight from the eps expression; n odd.
inline mpz_class pq_from_unit(const mpz_class& t, unsigned long n, bool p_not_q) {
    QuadRat eps = unit_from_trace(t);
    QuadRat eps_conj = eps.conj();
    QuadRat one{1, 0, eps.delta};
    QuadRat num = p_not_q ? (eps.pow(n) - one) : (eps.pow(n) + one);
    QuadRat den = p_not_q ? (eps - one) : (eps + one);
    QuadRat value = eps_conj.pow((n - 1) / 2) * (num / den);
    if (!value.is_rational_integer()) throw std::runtime_error("pq_from_unit: not an integer");
    return mpz_class(value.x.get_num());
}

} // namespace testsupport
