#pragma once
// First exact-denominator parameterization (ED1). A solution is encoded by
// a quad (gamma, c, u, v) with
//   4c - 1 = gamma * P,    gamma ≡ 3P (mod 4),
//   u * v = c^2,           u ≡ v ≡ -c (mod gamma),
//   u ≢ -c (mod P)         (excludes the double-multiple branch),
// yielding A = (u+c)/gamma, B = (v+c)/gamma, C = c*P.

#include <optional>
#include <vector>

#include "esd/decomp.hpp"

namespace esd::ed1 {

using arith::Nat;

struct Quad {
    Nat gamma, c, u, v;  // u <= v
};

// Smallest admissible gamma >= 3 with gamma ≡ 3P (mod 4).
Nat gamma_min(const Nat& p);

// c = (gamma*P + 1) / 4; DomainError if gamma*P + 1 is not divisible by 4.
Nat c_of(const Nat& p, const Nat& gamma);

// Enumerate all quads with gamma <= gamma_max in ascending (gamma, u)
// order. Every quad satisfies uv = c^2, u <= v, the congruences above,
// and u < ((3*gamma - 1)*P - 1)/4 (equivalent to the bound 4A < 3P).
// When exclude_p_multiples is true (the default), quads with
// u ≡ -c (mod P) are dropped; those correspond to P | A and P | B.
std::vector<Quad> enumerate_ed1(const Nat& p, const Nat& gamma_max,
                                bool exclude_p_multiples = true,
                                uint64_t budget = 0);

// Turn a quad into a verified Decomposition; nullopt if the quad is not
// admissible (wrong congruence, uv != c^2, or verification fails).
std::optional<decomp::Decomposition> build_from_quad(const Nat& p, const Quad& q);

// Count divisors u of c^2 with u ≡ a (mod m) and u ≡ inv(b)*c^2 (mod n);
// the second congruence is vacuous when n = 1 and the count is 0 when
// gcd(b, n) != 1 (no inverse). Counts all divisors, not only u <= c.
Nat count_admissible_pairs(const Nat& c, const Nat& m, const Nat& a,
                           const Nat& n, const Nat& b, uint64_t budget = 0);

}  // namespace esd::ed1
