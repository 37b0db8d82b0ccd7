#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <set>
#include <utility>

#include "quartic/arith.hpp"
#include "quartic/lucas.hpp"
#include "quartic/oracle.hpp"

using namespace quartic;
using oracle::ScanViolation;
using solver::Form;

namespace {

std::set<std::pair<mpz_class, mpz_class>> pairs(const std::vector<solver::SolutionRecord>& v) {
    std::set<std::pair<mpz_class, mpz_class>> out;
    for (const auto& s : v) out.insert({s.x, s.y});
    return out;
}

} // namespace

TEST_CASE("brute_force fixed instances") {
    CHECK(pairs(oracle::brute_force({Form::X2Y4, 5, 1, 4}, 100)) ==
          std::set<std::pair<mpz_class, mpz_class>>{{1, 1}, {2, 2}});
    CHECK(pairs(oracle::brute_force({Form::X2Y4, 2, 1, 1}, 1000)) ==
          std::set<std::pair<mpz_class, mpz_class>>{{1, 1}});
    CHECK(pairs(oracle::brute_force({Form::X4Y2, 7, 3, 4}, 100)) ==
          std::set<std::pair<mpz_class, mpz_class>>{{1, 1}, {2, 6}});
    CHECK(oracle::brute_force({Form::X2Y4, 3, 5, 1}, 500).empty());
}

TEST_CASE("brute_force results satisfy the defining equation, in loop order") {
    auto recs = oracle::brute_force({Form::X2Y4, 1, 7, 2}, 3000);
    REQUIRE(!recs.empty());
    mpz_class prev_y = 0;
    for (const auto& s : recs) {
        CHECK(s.x * s.x - 7 * s.y * s.y * s.y * s.y == 2);
        CHECK(s.y > prev_y);
        prev_y = s.y;
        CHECK(s.n == 0);
        CHECK(s.coprime == (arith::gcd(s.x, s.y) == 1));
    }
}

TEST_CASE("brute_force validates the instance first") {
    CHECK_THROWS_AS(oracle::brute_force({Form::X2Y4, 4, 3, 1}, 10), ValidationError);
}

TEST_CASE("lemma_scan finds nothing at desk scale") {
    CHECK(oracle::lemma_scan(3, 50, 99).empty());
    CHECK(oracle::lemma_scan(3, 3, 5).empty()); // Q_5(3)=5, P_5(3)=11, neither square
    lucas::TraceUnit t3(3);
    CHECK(lucas::q_value(t3, 5) == 5);
    CHECK(lucas::p_value(t3, 5) == 11);
}

TEST_CASE("lemma_scan skips Q at even traces") {
    // Q_7(6) = 169 = 13^2 would be a hit, but 6 is even so Q is not scanned
    lucas::TraceUnit t6(6);
    CHECK(lucas::q_value(t6, 7) == 169);
    CHECK(oracle::lemma_scan(4, 4, 99).empty());
    CHECK(oracle::lemma_scan(6, 6, 99).empty());
}

TEST_CASE("lemma_scan output is deterministic across thread counts") {
    auto seq = oracle::lemma_scan(3, 120, 99, 1);
    auto par = oracle::lemma_scan(3, 120, 99, 4);
    CHECK(seq == par);
}

TEST_CASE("q_even_trace_probe surfaces the even-trace squares") {
    auto hits = oracle::q_even_trace_probe(50, 99);
    REQUIRE(!hits.empty());
    bool found_t6_n7 = false;
    for (const auto& h : hits) {
        CHECK(h.t % 2 == 0);
        CHECK(h.n > 3);
        CHECK(h.n % 2 == 1);
        CHECK(h.kind == ScanViolation::Kind::QSquare);
        // self-consistency: the reported value is Q_n(t) and is a square
        lucas::TraceUnit t(h.t);
        CHECK(lucas::q_value(t, h.n) == h.value);
        CHECK(arith::as_perfect_square(h.value).has_value());
        if (h.t == 6 && h.n == 7) {
            found_t6_n7 = true;
            CHECK(h.value == 169);
        }
    }
    CHECK(found_t6_n7);

    auto par = oracle::q_even_trace_probe(50, 99, 3);
    CHECK(par == hits);
}
