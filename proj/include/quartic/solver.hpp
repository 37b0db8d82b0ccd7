#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "quartic/errors.hpp"
#include "quartic/pell.hpp"

namespace quartic::solver {

// X2Y4: A*x^2 - B*y^4 = C with C in {1, 2, 4}
// X4Y2: A*x^4 - B*y^2 = 4
enum class Form { X2Y4, X4Y2 };

const char* to_string(Form form);
std::optional<Form> form_from_string(const std::string& name);

struct EquationInstance {
    Form form = Form::X2Y4;
    mpz_class A;
    mpz_class B;
    int C = 1;

    bool operator==(const EquationInstance&) const = default;
};

// Checks every instance constraint and returns the instance unchanged:
//   A squarefree, A*B not a square, A*B odd when C is even,
//   C = 2 when A = 1 (x2y4 only), C = 4 for x4y2.
// Throws ValidationError with the matching code otherwise.
EquationInstance validate(const EquationInstance& inst);

// Same checks without throwing; empty result means admissible.
std::optional<ValidationError::Code> admissibility_failure(const EquationInstance& inst);

enum class Verdict { Solution, NotSquare };

// One tested exponent: n = multiplier * r where r is the squarefree part of
// b (x2y4) or of a (x4y2), and the square test is on b*P_n resp. a*Q_n.
struct CandidateOutcome {
    mpz_class n;
    mpz_class r;
    mpz_class multiplier; // 1 or 3 on the certified path
    mpz_class p_n;
    mpz_class q_n;
    mpz_class square_test_value;
    Verdict verdict = Verdict::NotSquare;

    bool operator==(const CandidateOutcome&) const = default;
};

struct SolutionRecord {
    mpz_class x;
    mpz_class y;
    mpz_class n; // exponent it came from; 0 when found by enumeration only
    bool coprime = false;

    bool operator==(const SolutionRecord&) const = default;
};

// The exponent candidates {r, 3r}. Throws ValidationError(EvenR) when the
// squarefree part r comes out even; solve() turns that into a certified
// empty solution set (see there).
struct CandidateSet {
    mpz_class r;
    std::vector<mpz_class> exponents;
};
CandidateSet candidate_exponents(const pell::PellFundamental& fund, Form form);

// Square-tests one exponent and, on success, builds the solution record.
// The record is re-checked against the defining equation exactly; a failed
// re-check is an InternalError.
struct Extraction {
    CandidateOutcome outcome;
    std::optional<SolutionRecord> solution;
};
Extraction extract_solution(const pell::PellFundamental& fund, const mpz_class& n, Form form);

struct TwoSolutionCondition {
    mpz_class quantity; // 4*B*b^2/C + 3 (x2y4) or B*b^2 + 1 (x4y2)
    bool is_square = false;

    bool operator==(const TwoSolutionCondition&) const = default;
};

// Solution-count bound and which single-solution branch produced it.
// The flagged congruence branches force the quantity to be a non-square, so
// `bound` is 1 exactly when the quantity is not a perfect square.
struct TheoremCertificate {
    int bound = 0; // 1 or 2 when a fundamental exists
    TwoSolutionCondition condition;
    bool single_by_c1 = false;        // C = 1
    bool single_by_c4_b3mod4 = false; // C = 4 and B = 3 (mod 4)
    bool single_by_c2_b1mod4 = false; // C = 2 and B = 1 (mod 4)
    bool coprime_bound_one = false;   // x2y4 with C = 4: at most one coprime solution

    bool operator==(const TheoremCertificate&) const = default;
};
TheoremCertificate theorem_certificate(const EquationInstance& inst,
                                       const pell::PellFundamental& fund);

struct Completeness {
    enum class Kind { Certified, HeuristicBound };
    Kind kind = Kind::Certified;
    mpz_class n_max; // meaningful for HeuristicBound only

    bool operator==(const Completeness&) const = default;
};

struct SolveReport {
    EquationInstance instance;
    std::optional<pell::PellFundamental> fundamental;
    std::vector<CandidateOutcome> candidates;
    std::vector<SolutionRecord> solutions;
    int theorem_bound = 0;
    std::optional<TheoremCertificate> certificate;
    Completeness completeness;

    bool operator==(const SolveReport&) const = default;
};

// The full pipeline: validate, obtain the Pell fundamental, derive the
// candidate exponents, extract solutions, certify the count bound.
//
// Completeness is Certified except for x4y2 with even fundamental b, where
// the square-test exclusion needs an odd trace; there every odd n <=
// heuristic_n_max with r | n is scanned instead and the report says
// HeuristicBound. An even r (possible, e.g. A=5 B=19 C=4 gives b=2) means no
// odd n is admissible at all; that case is certified empty: v2(b) (resp.
// v2(a)) is odd while P_n and Q_n are odd for every n once the trace is
// even, so b*P_n (resp. a*Q_n) has odd 2-adic valuation and is never a
// square.
SolveReport solve(const EquationInstance& inst, const mpz_class& heuristic_n_max = 99);

} // namespace quartic::solver
