#include "esd/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace esd::lattice {

Nat AffineLattice::index() const {
    Nat idx = 1;
    for (const Nat& m : moduli) idx *= m;
    return idx;
}

namespace {

void check_lattice(const AffineLattice& lat) {
    if (lat.moduli.size() != lat.residues.size() || lat.moduli.empty())
        throw arith::DomainError("lattice: moduli/residues size mismatch");
    for (size_t i = 0; i < lat.moduli.size(); ++i) {
        if (lat.moduli[i] < 1) throw arith::DomainError("lattice: modulus must be >= 1");
        if (lat.residues[i] < 0 || lat.residues[i] >= lat.moduli[i])
            throw arith::DomainError("lattice: residue out of range");
    }
}

// Count of x in [lo, hi) with x ≡ r (mod m).
Nat axis_count(const Nat& lo, const Nat& hi, const Nat& m, const Nat& r) {
    if (hi <= lo) return 0;
    // Smallest x >= lo with x ≡ r (mod m).
    Nat shift = ((r - lo) % m + m) % m;
    Nat first = lo + shift;
    if (first >= hi) return 0;
    return (hi - 1 - first) / m + 1;
}

}  // namespace

Nat count_points(const AffineLattice& lat, const Box& box) {
    check_lattice(lat);
    if (box.lo.size() != lat.moduli.size() || box.hi.size() != lat.moduli.size())
        throw arith::DomainError("count_points: box dimension mismatch");
    Nat total = 1;
    for (size_t i = 0; i < lat.moduli.size(); ++i)
        total *= axis_count(box.lo[i], box.hi[i], lat.moduli[i], lat.residues[i]);
    return total;
}

DensityReport density_experiment(const AffineLattice& lat, const Nat& t) {
    check_lattice(lat);
    if (t < 1) throw arith::DomainError("density_experiment: need T >= 1");
    size_t k = lat.moduli.size();
    Box box;
    for (size_t i = 0; i < k; ++i) {
        box.lo.push_back(1);
        box.hi.push_back(t + 1);  // cube [1, T]
    }
    DensityReport rep;
    rep.exact = count_points(lat, box);
    Nat tk = 1;
    for (size_t i = 0; i < k; ++i) tk *= t;
    rep.ideal = mpq_class(tk) / mpq_class(lat.index());
    rep.ideal.canonicalize();
    rep.error = mpq_class(rep.exact) - rep.ideal;
    rep.error.canonicalize();
    Nat max_mod = 0;
    for (const Nat& m : lat.moduli) max_mod = std::max(max_mod, m);
    Nat tk1 = 1;
    for (size_t i = 0; i + 1 < k; ++i) tk1 *= t;
    mpq_class bound(3 * max_mod * tk1);
    rep.within_bound = abs(rep.error) <= bound;
    return rep;
}

AffineLattice ed2_lattice(const Nat& delta, const Nat& g, const Nat& m3) {
    if (g < 1 || m3 < 1) throw arith::DomainError("ed2_lattice: bad moduli");
    AffineLattice lat;
    lat.moduli = {m3, g, g};
    lat.residues = {((delta % m3) + m3) % m3, 0, 0};
    return lat;
}

bool DiagonalLattice::contains(const mpz_class& u, const mpz_class& v) const {
    return ((u * b_prime + v * c_prime) % g) == 0;
}

DiagonalLattice diagonal_lattice(const Nat& g, const Nat& b_prime, const Nat& c_prime) {
    if (g < 1) throw arith::DomainError("diagonal_lattice: need g >= 1");
    Nat gb, gc;
    mpz_gcd(gb.get_mpz_t(), g.get_mpz_t(), b_prime.get_mpz_t());
    mpz_gcd(gc.get_mpz_t(), g.get_mpz_t(), c_prime.get_mpz_t());
    if (gb != 1 || gc != 1)
        throw arith::DomainError("diagonal_lattice: b', c' must be coprime to g");
    DiagonalLattice dl;
    dl.g = g;
    dl.b_prime = b_prime % g;
    dl.c_prime = c_prime % g;
    Nat sum = b_prime + c_prime;
    mpz_gcd(dl.alpha_diag.get_mpz_t(), g.get_mpz_t(), sum.get_mpz_t());
    dl.d_prime = g / dl.alpha_diag;
    // Keep the stored b', c' in canonical residue form but nonzero when
    // possible; the basis vectors use these values directly.
    if (dl.b_prime == 0) dl.b_prime = g;
    if (dl.c_prime == 0) dl.c_prime = g;
    return dl;
}

mpz_class unique_representative(const mpz_class& x0, const Nat& width,
                                const Nat& m, const Nat& r) {
    if (m < 1) throw arith::DomainError("unique_representative: need m >= 1");
    if (width < m)
        throw arith::DomainError("unique_representative: window narrower than modulus");
    mpz_class shift = ((r - x0) % m + m) % m;
    return x0 + shift;
}

HitBoxResult hit_box(const DiagonalLattice& dl, const Box2& box) {
    HitBoxResult res;
    if (box.width < dl.d_prime) {
        res.diagnostic = "u-window narrower than d'";
        return res;
    }
    // Base point p0 = v1 = (c', -b') lies in L. Step 1: the unique
    // u* ≡ c' (mod d') in [u0, u0 + d').
    mpz_class u_star =
        unique_representative(box.u0, dl.d_prime, dl.d_prime, dl.c_prime % dl.d_prime);
    // Step 2: walk from p0 along v2 = (d', d') to reach u*; both
    // coordinates move together, so v is forced.
    mpz_class steps = (u_star - dl.c_prime) / dl.d_prime;
    mpz_class v_cand = mpz_class(-dl.b_prime) + steps * dl.d_prime;
    if (!dl.contains(u_star, v_cand)) {
        // Cannot happen: p0 + steps*v2 stays in L by linearity.
        res.diagnostic = "internal: constructed point left the lattice";
        return res;
    }
    if (v_cand >= box.v0 && v_cand < box.v0 + box.height) {
        res.found = true;
        res.u = u_star;
        res.v = v_cand;
        return res;
    }
    std::ostringstream os;
    os << "diagonal coset through u=" << u_star.get_str()
       << " meets v=" << v_cand.get_str() << " outside [" << box.v0.get_str() << ", "
       << mpz_class(box.v0 + box.height).get_str() << ")";
    res.diagnostic = os.str();
    return res;
}

}  // namespace esd::lattice
