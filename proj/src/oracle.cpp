#include "quartic/oracle.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "quartic/arith.hpp"
#include "quartic/errors.hpp"

namespace quartic::oracle {

namespace {

// Walk U_k incrementally and test P_n / Q_n at n = 2k - 1.
void scan_trace(std::int64_t t, std::uint64_t n_max, bool test_p, bool test_q,
                std::vector<ScanViolation>& out) {
    const mpz_class trace = t;
    mpz_class u_prev = 1; // U_1
    mpz_class u = trace;  // U_2
    for (std::uint64_t k = 2; 2 * k - 1 <= n_max; ++k) {
        const std::uint64_t n = 2 * k - 1;
        if (n >= 5) {
            if (test_p) {
                mpz_class p = u + u_prev;
                if (arith::as_perfect_square(p))
                    out.push_back({t, n, ScanViolation::Kind::PSquare, std::move(p)});
            }
            if (test_q) {
                mpz_class q = u - u_prev;
                if (arith::as_perfect_square(q))
                    out.push_back({t, n, ScanViolation::Kind::QSquare, std::move(q)});
            }
        }
        mpz_class next = trace * u - u_prev;
        u_prev = u;
        u = next;
    }
}

std::vector<ScanViolation> partitioned_scan(std::int64_t t_min, std::int64_t t_max,
                                            std::uint64_t n_max, unsigned threads,
                                            bool p_for_all, bool q_for_odd, bool q_for_even) {
    if (t_min > t_max || n_max < 5) return {};
    if (threads == 0) threads = 1;
    const std::uint64_t span = static_cast<std::uint64_t>(t_max - t_min) + 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, span));

    std::vector<std::vector<ScanViolation>> buckets(threads);
    auto worker = [&](unsigned idx) {
        for (std::int64_t t = t_min + static_cast<std::int64_t>(idx); t <= t_max;
             t += static_cast<std::int64_t>(threads)) {
            const bool odd = (t % 2 != 0);
            const bool test_q = odd ? q_for_odd : q_for_even;
            if (p_for_all || test_q) scan_trace(t, n_max, p_for_all, test_q, buckets[idx]);
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }

    std::vector<ScanViolation> merged;
    for (auto& b : buckets) merged.insert(merged.end(), std::make_move_iterator(b.begin()),
                                          std::make_move_iterator(b.end()));
    std::sort(merged.begin(), merged.end(), [](const ScanViolation& a, const ScanViolation& b) {
        if (a.t != b.t) return a.t < b.t;
        if (a.n != b.n) return a.n < b.n;
        return a.kind < b.kind;
    });
    return merged;
}

} // namespace

std::vector<solver::SolutionRecord> brute_force(const solver::EquationInstance& inst,
                                                const mpz_class& bound) {
    solver::validate(inst);
    std::vector<solver::SolutionRecord> found;

    if (inst.form == solver::Form::X2Y4) {
        for (mpz_class y = 1; y <= bound; ++y) {
            mpz_class y2 = y * y;
            mpz_class num = inst.B * y2 * y2 + inst.C;
            if (!mpz_divisible_p(num.get_mpz_t(), inst.A.get_mpz_t())) continue;
            if (auto x = arith::as_perfect_square(num / inst.A))
                found.push_back({*x, y, 0, arith::gcd(*x, y) == 1});
        }
    } else {
        for (mpz_class x = 1; x <= bound; ++x) {
            mpz_class x2 = x * x;
            mpz_class num = inst.A * x2 * x2 - inst.C;
            if (num < 1) continue;
            if (!mpz_divisible_p(num.get_mpz_t(), inst.B.get_mpz_t())) continue;
            if (auto y = arith::as_perfect_square(num / inst.B))
                found.push_back({x, *y, 0, arith::gcd(x, *y) == 1});
        }
    }
    return found;
}

std::vector<ScanViolation> lemma_scan(std::int64_t t_min, std::int64_t t_max,
                                      std::uint64_t n_max, unsigned threads) {
    internal_check(t_min >= 3, "lemma_scan: t_min must be >= 3");
    return partitioned_scan(t_min, t_max, n_max, threads,
                            /*p_for_all=*/true, /*q_for_odd=*/true, /*q_for_even=*/false);
}

std::vector<ScanViolation> q_even_trace_probe(std::int64_t t_max, std::uint64_t n_max,
                                              unsigned threads) {
    return partitioned_scan(4, t_max, n_max, threads,
                            /*p_for_all=*/false, /*q_for_odd=*/false, /*q_for_even=*/true);
}

Comparison compare_with_brute_force(const solver::SolveReport& report, const mpz_class& bound) {
    auto enumerated = brute_force(report.instance, bound);

    std::set<std::pair<mpz_class, mpz_class>> oracle_set;
    for (const auto& s : enumerated) oracle_set.insert({s.x, s.y});

    const bool window_on_y = report.instance.form == solver::Form::X2Y4;
    std::set<std::pair<mpz_class, mpz_class>> solver_set;
    for (const auto& s : report.solutions) {
        if ((window_on_y ? s.y : s.x) <= bound) solver_set.insert({s.x, s.y});
    }

    Comparison cmp;
    for (const auto& s : enumerated) {
        if (!solver_set.count({s.x, s.y})) cmp.missing.push_back(s);
    }
    for (const auto& s : report.solutions) {
        if ((window_on_y ? s.y : s.x) <= bound && !oracle_set.count({s.x, s.y}))
            cmp.extra.push_back(s);
    }
    cmp.match = cmp.missing.empty() && cmp.extra.empty();
    return cmp;
}

} // namespace quartic::oracle
