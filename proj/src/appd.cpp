#include "esd/appd.hpp"

#include <algorithm>
#include <sstream>

namespace esd::appd {

Window window(const Nat& p) {
    if (p < 2) throw arith::DomainError("window: need P >= 2");
    // L = ceil((P + 3)/4), U = floor((3P - 3)/4).
    Nat lo = (p + 3 + 3) / 4;
    Nat hi = (3 * p - 3) / 4;
    return Window{lo, hi};
}

bool prod_sum_equiv(const Nat& s, const Nat& m, const Nat& bp, const Nat& cp) {
    return bp + cp == s && bp * cp == m;
}

std::optional<std::pair<Nat, Nat>> quadratic_roots(const Nat& s, const Nat& m) {
    Nat disc = s * s - 4 * m;
    Nat v;
    if (disc < 0 || !arith::is_square(disc, &v)) return std::nullopt;
    if ((s + v) % 2 != 0) return std::nullopt;
    Nat big = (s + v) / 2, small = (s - v) / 2;
    return std::make_pair(big, small);
}

Nat disc_lower_bound(const Nat& a, const Nat& alpha, const Nat& p) {
    if (alpha < 1 || a < 1) throw arith::DomainError("disc_lower_bound: bad arguments");
    Nat m = 4 * a - p;
    if (m <= 0) throw arith::DomainError("disc_lower_bound: need 4A > P");
    // Smallest d' with alpha * m^2 * d'^2 >= 4A.
    Nat lhs_unit = alpha * m * m;
    Nat target = 4 * a;
    // d' >= sqrt(target / lhs_unit); compute by integer sqrt then adjust.
    Nat d = arith::isqrt(target / lhs_unit);
    while (lhs_unit * d * d < target) ++d;
    if (d < 1) d = 1;
    return d;
}

namespace {

std::string hit_params(const Nat& alpha, const Nat& r, const Nat& s) {
    std::ostringstream ps;
    ps << "{\"alpha\":\"" << alpha.get_str() << "\",\"r\":\"" << r.get_str()
       << "\",\"s\":\"" << s.get_str() << "\"}";
    return ps.str();
}

// Assemble a Hit from validated parameters; nullopt if the induced
// decomposition does not verify or A misses the window.
std::optional<Hit> make_hit(const Nat& p, const Nat& alpha, const Nat& r,
                            const Nat& s, const Nat& m, const Nat& c_prime) {
    Nat a = alpha * s * c_prime;
    Window w = window(p);
    if (a < w.lo || a > w.hi) return std::nullopt;
    // The decomposition induced by the parameters: delta = alpha * r^2,
    // b = alpha * r * s, c = alpha * r * c'.
    Nat g = alpha * r;
    auto dec = decomp::make_verified(p, a, g * s * p, g * c_prime * p,
                                     decomp::Method::DIRECT,
                                     hit_params(alpha, r, s));
    if (!dec) return std::nullopt;
    Hit h;
    h.a = a;
    h.alpha = alpha;
    h.r = r;
    h.s = s;
    h.m = m;
    h.m_rs = 4 * alpha * s * r - 1;
    h.c_prime = c_prime;
    h.dec = *dec;
    return h;
}

}  // namespace

std::vector<Hit> direct_search(const Nat& p, const Nat& alpha, const Nat& r_max,
                               const Nat& s_max) {
    if (p < 2 || alpha < 1) throw arith::DomainError("direct_search: bad arguments");
    std::vector<Hit> out;
    for (Nat r = 1; r <= r_max; ++r) {
        for (Nat s = 1; s <= s_max; ++s) {
            Nat m_rs = 4 * alpha * s * r - 1;
            Nat num = 4 * alpha * s * s + p;
            if (num % m_rs != 0) continue;
            Nat m = num / m_rs;
            if (m * r <= s) continue;
            Nat c_prime = m * r - s;
            if (auto h = make_hit(p, alpha, r, s, m, c_prime)) out.push_back(*h);
        }
    }
    std::sort(out.begin(), out.end(), [](const Hit& l, const Hit& r2) {
        if (l.a != r2.a) return l.a < r2.a;
        if (l.r != r2.r) return l.r < r2.r;
        return l.s < r2.s;
    });
    return out;
}

std::vector<Hit> back_search(const Nat& p, const Nat& alpha, const Nat& a) {
    if (p < 2 || alpha < 1) throw arith::DomainError("back_search: bad arguments");
    std::vector<Hit> out;
    Window w = window(p);
    if (a < w.lo || a > w.hi || a % alpha != 0) return out;
    Nat m = 4 * a - p;
    Nat big_m = a / alpha;  // M = A / alpha = b' * c'
    // The root sum u = b' + c' = m * d' is a multiple of m, and
    // u <= M + 1 (since b' >= 1 forces c' <= M).
    for (Nat u = m; u <= big_m + 1; u += m) {
        auto roots = quadratic_roots(u, big_m);
        if (!roots) continue;
        auto [c_prime, b_prime] = *roots;
        if (b_prime < 1) continue;
        Nat r = u / m;  // d'
        if (auto h = make_hit(p, alpha, r, b_prime, m, c_prime)) {
            h->dec.method = decomp::Method::BACK;
            out.push_back(*h);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Hit& l, const Hit& r2) { return l.r < r2.r; });
    return out;
}

std::vector<Nat> candidate_set_F(const Nat& p, const Nat& alpha) {
    std::vector<Nat> out;
    Window w = window(p);
    for (Nat a = w.lo; a <= w.hi; ++a) {
        if (a % alpha != 0) continue;
        if (!back_search(p, alpha, a).empty()) out.push_back(a);
    }
    return out;
}

std::vector<Hit> divisor_constructor(const Nat& p, const Nat& alpha, const Nat& s,
                                     uint64_t budget) {
    if (p < 2 || alpha < 1 || s < 1)
        throw arith::DomainError("divisor_constructor: bad arguments");
    std::vector<Hit> out;
    Nat m_s = 4 * alpha * s * s + p;
    Nat mod = 4 * alpha * s;
    Nat want = mod - 1;  // d ≡ -1 (mod 4*alpha*s)
    for (const Nat& d : arith::divisors(m_s, budget)) {
        if (d % mod != want) continue;
        Nat r = (d + 1) / mod;
        Nat m = m_s / d;
        if (m * r <= s) continue;
        Nat c_prime = m * r - s;
        if (auto h = make_hit(p, alpha, r, s, m, c_prime)) out.push_back(*h);
    }
    std::sort(out.begin(), out.end(),
              [](const Hit& l, const Hit& r2) { return l.r < r2.r; });
    return out;
}

AffineCoeffs affine_coeffs(const Nat& alpha, const Nat& r, const Nat& s) {
    if (alpha < 1 || r < 1 || s < 1)
        throw arith::DomainError("affine_coeffs: arguments must be positive");
    mpq_class num(alpha * s * r);
    mpq_class den(4 * alpha * s * r - 1);
    mpq_class lambda = num / den;
    lambda.canonicalize();
    mpq_class margin = lambda - mpq_class(1, 4);
    margin.canonicalize();
    return AffineCoeffs{lambda, margin};
}

bool counting_criterion(const std::set<Nat>& h_union, const std::set<Nat>& tgt_union) {
    return h_union.size() >= tgt_union.size();
}

}  // namespace esd::appd
