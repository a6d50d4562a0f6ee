#include "esd/ed1.hpp"

#include <algorithm>
#include <sstream>

namespace esd::ed1 {

Nat gamma_min(const Nat& p) {
    if (p < 2) throw arith::DomainError("gamma_min: need P >= 2");
    Nat target = (3 * p) % 4;
    Nat g = 3;
    while (g % 4 != target) ++g;
    return g;
}

Nat c_of(const Nat& p, const Nat& gamma) {
    Nat num = gamma * p + 1;
    if (num % 4 != 0)
        throw arith::DomainError("c_of: gamma*P + 1 not divisible by 4");
    return num / 4;
}

std::vector<Quad> enumerate_ed1(const Nat& p, const Nat& gamma_max,
                                bool exclude_p_multiples, uint64_t budget) {
    if (p < 2) throw arith::DomainError("enumerate_ed1: need P >= 2");
    std::vector<Quad> out;
    for (Nat gamma = gamma_min(p); gamma <= gamma_max; gamma += 4) {
        Nat c = c_of(p, gamma);
        Nat c2 = c * c;
        Nat neg_c_mod_gamma = ((-c) % gamma + gamma) % gamma;
        Nat neg_c_mod_p = ((-c) % p + p) % p;
        std::vector<Quad> batch;
        for (const Nat& u : arith::divisors(c2, budget)) {
            if (u > c) break;  // u <= v means u <= c
            Nat v = c2 / u;
            if (u % gamma != neg_c_mod_gamma) continue;
            if (v % gamma != neg_c_mod_gamma) continue;
            if (exclude_p_multiples && u % p == neg_c_mod_p) continue;
            // Bound 4A < 3P on A = (u+c)/gamma, kept in exact integer form.
            if (!(4 * (u + c) < 3 * gamma * p)) continue;
            batch.push_back(Quad{gamma, c, u, v});
        }
        std::sort(batch.begin(), batch.end(),
                  [](const Quad& x, const Quad& y) { return x.u < y.u; });
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::optional<decomp::Decomposition> build_from_quad(const Nat& p, const Quad& q) {
    if (q.gamma < 1 || q.c < 1 || q.u < 1 || q.v < 1) return std::nullopt;
    if (4 * q.c - 1 != q.gamma * p) return std::nullopt;
    if (q.u * q.v != q.c * q.c) return std::nullopt;
    Nat uc = q.u + q.c, vc = q.v + q.c;
    if (uc % q.gamma != 0 || vc % q.gamma != 0) return std::nullopt;
    Nat a = uc / q.gamma, b = vc / q.gamma, c = q.c * p;
    std::ostringstream ps;
    ps << "{\"gamma\":\"" << q.gamma.get_str() << "\",\"c\":\"" << q.c.get_str()
       << "\",\"u\":\"" << q.u.get_str() << "\",\"v\":\"" << q.v.get_str() << "\"}";
    return decomp::make_verified(p, a, b, c, decomp::Method::ED1, ps.str());
}

Nat count_admissible_pairs(const Nat& c, const Nat& m, const Nat& a,
                           const Nat& n, const Nat& b, uint64_t budget) {
    if (c < 1 || m < 1 || n < 1)
        throw arith::DomainError("count_admissible_pairs: c, m, n must be positive");
    Nat g;
    mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), n.get_mpz_t());
    if (g != 1) return 0;  // no inverse of b modulo n
    Nat c2 = c * c;
    Nat want_n = 0;
    if (n > 1) {
        Nat binv;
        if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), n.get_mpz_t()) == 0) return 0;
        want_n = (binv * c2) % n;
    }
    Nat am = ((a % m) + m) % m;
    Nat count = 0;
    for (const Nat& u : arith::divisors(c2, budget)) {
        if (u % m != am) continue;
        if (n > 1 && u % n != want_n) continue;
        ++count;
    }
    return count;
}

}  // namespace esd::ed1
