#pragma once
// Second exact-denominator parameterization (ED2). A solution is encoded
// by a triple (delta, b, c) with
//   4bc - b - c = P * delta,    delta | bc,
// yielding A = bc/delta, B = bP, C = cP. Writing delta = alpha * d'^2
// with alpha squarefree and g = alpha * d', every triple arises from a
// factorization X * Y = N := 4*P*delta + 1 with X ≡ Y ≡ -1 (mod 4g),
// via b = g*b', c = g*c', b' = (X+1)/(4g), c' = (Y+1)/(4g).

#include <functional>
#include <optional>
#include <vector>

#include "esd/decomp.hpp"

namespace esd::ed2 {

using arith::Nat;

struct SplitDelta {
    Nat alpha;    // squarefree part
    Nat d_prime;  // delta = alpha * d_prime^2
    Nat g;        // g = alpha * d_prime
};

SplitDelta split_delta(const Nat& delta, uint64_t budget = 0);

struct Triple {
    Nat delta, b, c;          // the defining parameters, b <= c
    Nat alpha, d_prime, g;    // split of delta
    Nat b_prime, c_prime;     // b = g*b', c = g*c'
    Nat x, y, n;              // X*Y = N = 4*P*delta + 1, X <= Y
};

// Enumerate all ED2 triples with delta <= delta_max for prime P, in
// ascending (delta, X) order. For each factorization X*Y = N with both
// factors ≡ -1 (mod 4g), the candidate is kept iff delta | bc. The
// derived quantity (b' + c')/d' is always the integer 4*alpha*b'*c' - P;
// it is ≡ 3 (mod 4) exactly when P ≡ 1 (mod 4).
std::vector<Triple> enumerate_ed2(const Nat& p, const Nat& delta_max,
                                  uint64_t budget = 0);

// Build a verified Decomposition from (delta, b, c); nullopt if
// 4bc - b - c != P*delta, delta does not divide bc, or verification fails.
std::optional<decomp::Decomposition> build_from_triple(const Nat& p, const Nat& delta,
                                                       const Nat& b, const Nat& c);

// The t/k form: t = 4bc - b - c, k = bc; returns (t, k) and checks
// t = P*delta, delta | k when delta is supplied.
struct TK {
    Nat t, k;
};
TK tk_parameterize(const Nat& b, const Nat& c);

// Order a pair so the first component is the smaller.
std::pair<Nat, Nat> normalize_pair(const Nat& x, const Nat& y);

enum class SweepStatus { SOLVED, EXHAUSTED, BUDGET_EXCEEDED };

struct SweepResult {
    SweepStatus status = SweepStatus::EXHAUSTED;
    std::vector<decomp::Decomposition> found;
    Nat last_delta;          // last delta fully processed
    uint64_t n_candidates = 0;  // factorizations examined
};

// Sweep delta = 1, 2, ... up to delta_max, collecting verified solutions.
// stop_after > 0 stops the sweep once that many solutions are verified
// ("stop rule"); 0 means sweep the whole range. A factorization budget
// blow-up inside the sweep is reported as BUDGET_EXCEEDED rather than
// thrown.
SweepResult sweep_delta(const Nat& p, const Nat& delta_max, unsigned stop_after,
                        uint64_t budget = 0);

}  // namespace esd::ed2
