#pragma once
// Factorization-free search in the admissible window
//   L = ceil(P/4 + 3/4) <= A <= floor(3P/4 - 3/4) = U.
// "direct" scans a parameter grid (r, s) producing candidate smallest
// denominators A; "back" starts from a candidate A and reconstructs the
// parameters. Both reduce to the quadratic x^2 - Sx + M = 0 with
// M = A/alpha and m = 4A - P, whose discriminant S^2 - 4M must be a
// perfect square.

#include <optional>
#include <set>
#include <vector>

#include "esd/decomp.hpp"

namespace esd::appd {

using arith::Nat;

struct Window {
    Nat lo, hi;  // inclusive; empty iff lo > hi
    bool empty() const { return lo > hi; }
};

// Integer window bounds for prime (or odd) P.
Window window(const Nat& p);

// Exact equivalence used throughout: given b', c' with sum S and product
// M, checks S = b' + c', M = b' * c' against x^2 - Sx + M = (x-b')(x-c').
bool prod_sum_equiv(const Nat& s, const Nat& m, const Nat& bp, const Nat& cp);

// Roots of x^2 - Sx + M when the discriminant is a perfect square and the
// roots are integers; returned as (larger, smaller). nullopt otherwise.
std::optional<std::pair<Nat, Nat>> quadratic_roots(const Nat& s, const Nat& m);

// Smallest d' >= 1 with (4A - P)^2 * d'^2 >= 4A/alpha, compared in
// integers as alpha * m^2 * d'^2 >= 4A. DomainError if 4A <= P.
Nat disc_lower_bound(const Nat& a, const Nat& alpha, const Nat& p);

struct Hit {
    Nat a;                 // smallest denominator
    Nat alpha, r, s;       // parameters: d' = r, b' = s
    Nat m, m_rs;           // m = 4A - P, M_rs = 4*alpha*s*r - 1
    Nat c_prime;           // c' = m*r - s
    decomp::Decomposition dec;
};

// Direct scan: for r in [1, r_max], s in [1, s_max], with
// M_rs = 4*alpha*s*r - 1, keep (r, s) iff M_rs | 4*alpha*s^2 + P; then
// m = (4*alpha*s^2 + P)/M_rs, c' = m*r - s, A = alpha*s*c'. Emitted A must
// land in the window and the built decomposition must verify.
std::vector<Hit> direct_search(const Nat& p, const Nat& alpha, const Nat& r_max,
                               const Nat& s_max);

// Back search: given candidate A in the window with alpha | A, set
// m = 4A - P, M = A/alpha, and scan u over positive multiples of m with
// u <= M + 1; a hit requires u^2 - 4M = v^2 a perfect square with
// u ≡ v (mod 2), giving roots (u ± v)/2 = (c', b') and d' = u/m. The
// reconstructed decomposition must verify.
std::vector<Hit> back_search(const Nat& p, const Nat& alpha, const Nat& a);

// Candidate set F(P): all A in the window such that back_search finds at
// least one hit for this alpha; returned ascending, deduplicated.
std::vector<Nat> candidate_set_F(const Nat& p, const Nat& alpha);

// Divisor constructor: for parameter s, m_s = 4*alpha*s^2 + P; every
// divisor d of m_s with d ≡ -1 (mod 4*alpha*s) yields r = (d+1)/(4*alpha*s),
// m = m_s/d, c' = m*r - s, A = alpha*s*c'. Returns hits with A in window.
std::vector<Hit> divisor_constructor(const Nat& p, const Nat& alpha, const Nat& s,
                                     uint64_t budget = 0);

// Exact rational coefficients of the line lambda(r, s) = alpha*s*r/(4*alpha*s*r - 1),
// which lies in (1/4, 1/3] for admissible parameters. Returned as a pair
// of exact rationals (num/den reduced): lambda itself and its distance to 1/4.
struct AffineCoeffs {
    mpq_class lambda;
    mpq_class margin;  // lambda - 1/4, always > 0
};
AffineCoeffs affine_coeffs(const Nat& alpha, const Nat& r, const Nat& s);

// Counting criterion: with H the union of hit sets over a parameter range
// and Tgt the target candidate set, coverage requires |H| >= |Tgt|.
bool counting_criterion(const std::set<Nat>& h_union, const std::set<Nat>& tgt_union);

}  // namespace esd::appd
