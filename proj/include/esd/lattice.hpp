#pragma once
// Axis-aligned affine lattices (independent congruence per coordinate),
// exact point counting and density experiments, plus the rank-2 diagonal
// lattice attached to an ED2 parameter pair and a constructive box-hitting
// procedure with a structured diagnostic on failure.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "esd/arith.hpp"

namespace esd::lattice {

using arith::Nat;

// Points (x_1, ..., x_k) with x_i ≡ residue[i] (mod modulus[i]).
struct AffineLattice {
    std::vector<Nat> moduli;    // all >= 1
    std::vector<Nat> residues;  // 0 <= residue[i] < modulus[i]
    Nat index() const;          // product of moduli
};

// Axis-aligned box [lo_i, hi_i) per coordinate (half-open).
struct Box {
    std::vector<Nat> lo, hi;
};

// Exact number of lattice points in the box (product of per-axis counts).
Nat count_points(const AffineLattice& lat, const Box& box);

struct DensityReport {
    Nat exact;        // exact count in [1, T]^k
    mpq_class ideal;  // T^k / index
    mpq_class error;  // exact - ideal
    bool within_bound;  // |error| <= 3 * max_modulus * T^(k-1)
};

// Compare the exact count over the cube [1, T]^k with the ideal density
// T^k / index. The error bound 3 * max_modulus * T^(k-1) is coarse but
// dimension-uniform for k <= 3.
DensityReport density_experiment(const AffineLattice& lat, const Nat& t);

// The ED2 hit lattice for (delta, g) with m3 = 4g^2: triples
// (t, b, c) with t ≡ delta (mod m3-slot modulus), b ≡ 0 (mod g),
// c ≡ 0 (mod g). The first slot records delta's residue class.
AffineLattice ed2_lattice(const Nat& delta, const Nat& g, const Nat& m3);

// Rank-2 sublattice of Z^2: L = {(u, v) : u*b' + v*c' ≡ 0 (mod g)},
// for gcd(b', g) = gcd(c', g) = 1. Basis used throughout:
//   v1 = (c', -b'),   v2 = (d', d')   where d' = g / gcd(g, b' + c').
struct DiagonalLattice {
    Nat g, b_prime, c_prime;
    Nat alpha_diag;  // gcd(g, b' + c')
    Nat d_prime;     // g / alpha_diag
    std::array<mpz_class, 2> v1() const { return {c_prime, -b_prime}; }
    std::array<mpz_class, 2> v2() const { return {d_prime, d_prime}; }
    bool contains(const mpz_class& u, const mpz_class& v) const;
};

DiagonalLattice diagonal_lattice(const Nat& g, const Nat& b_prime, const Nat& c_prime);

// The unique x in [x0, x0 + m) with x ≡ r (mod m). DomainError if the
// window is narrower than m (callers must pass width >= m).
mpz_class unique_representative(const mpz_class& x0, const Nat& width,
                                const Nat& m, const Nat& r);

// 2-D box with integer (possibly negative) corner, half-open.
struct Box2 {
    mpz_class u0, v0;
    Nat width, height;
};

struct HitBoxResult {
    bool found = false;
    mpz_class u = 0, v = 0;  // the lattice point when found
    std::string diagnostic;  // structured failure note when not found
};

// Two-step construction: pick the unique u* ≡ c' (mod d') in the box's
// u-window, then step along the diagonal direction v2 = (d', d') from the
// base point (u*, v*) so both coordinates land in the box. The first step
// needs width >= d' and the second height >= d'; when the diagonal coset
// through u* misses the v-window the result reports a structured
// diagnostic instead of a point (the construction is not complete for
// arbitrary boxes).
HitBoxResult hit_box(const DiagonalLattice& dl, const Box2& box);

}  // namespace esd::lattice
