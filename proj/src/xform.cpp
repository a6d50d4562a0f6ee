#include "esd/xform.hpp"

#include <sstream>

namespace esd::xform {

std::string convolve_rejection_name(ConvolveRejection r) {
    switch (r) {
        case ConvolveRejection::NONE: return "none";
        case ConvolveRejection::NO_ADMISSIBLE_Y: return "no_admissible_y";
        case ConvolveRejection::P2_NOT_PRIME: return "p2_not_prime";
        case ConvolveRejection::GCD_Y_C_NOT_ONE: return "gcd_y_c_not_one";
        case ConvolveRejection::U_NOT_DIVISOR: return "u_not_divisor";
        case ConvolveRejection::CONGRUENCE_FAILS: return "congruence_fails";
        case ConvolveRejection::VERIFY_FAILS: return "verify_fails";
    }
    return "?";
}

ConvolveResult convolve(const Nat& p, const Nat& delta, const Nat& b, const Nat& c,
                        YPolicy policy, uint64_t budget) {
    ConvolveResult res;
    if (delta < 1 || b < 1 || c < 1 || (b * c) % delta != 0 ||
        4 * b * c - b - c != p * delta)
        throw arith::DomainError("convolve: not an ED2 triple for this P");
    Nat a = b * c / delta;
    Nat s = 4 * c - 1;  // always ≡ 3 (mod 4)
    if (policy == YPolicy::CANONICAL) {
        if (s % p != 0) {
            res.rejection = ConvolveRejection::NO_ADMISSIBLE_Y;
            return res;
        }
        res.y = s / p;
        if (res.y % 4 != 3) {
            res.rejection = ConvolveRejection::NO_ADMISSIBLE_Y;
            return res;
        }
    } else {
        // Smallest divisor y of s with y ≡ 3 (mod 4); y = s itself always
        // qualifies, so one exists.
        for (const Nat& d : arith::divisors(s, budget)) {
            if (d % 4 == 3) {
                res.y = d;
                break;
            }
        }
    }
    res.p2 = s / res.y;
    // Fixed rejection order: primality, gcd, divisor, congruence, verify.
    if (!arith::is_prime(res.p2)) {
        res.rejection = ConvolveRejection::P2_NOT_PRIME;
        return res;
    }
    Nat g;
    mpz_gcd(g.get_mpz_t(), res.y.get_mpz_t(), c.get_mpz_t());
    if (g != 1) {
        res.rejection = ConvolveRejection::GCD_Y_C_NOT_ONE;
        return res;
    }
    Nat u = res.y * a - c;
    Nat c2 = c * c;
    if (u <= 0 || c2 % u != 0) {
        res.rejection = ConvolveRejection::U_NOT_DIVISOR;
        return res;
    }
    Nat v = c2 / u;
    Nat neg_c = ((-c) % res.y + res.y) % res.y;
    if (u % res.y != neg_c || v % res.y != neg_c) {
        res.rejection = ConvolveRejection::CONGRUENCE_FAILS;
        return res;
    }
    ed1::Quad q{res.y, c, std::min(u, v), std::max(u, v)};
    auto dec = ed1::build_from_quad(res.p2, q);
    if (!dec) {
        res.rejection = ConvolveRejection::VERIFY_FAILS;
        return res;
    }
    dec->method = decomp::Method::TRANSFORM;
    res.quad = q;
    res.dec = dec;
    return res;
}

ConvolveResult convolve(const Nat& p, const ed2::Triple& t, YPolicy policy,
                        uint64_t budget) {
    return convolve(p, t.delta, t.b, t.c, policy, budget);
}

AnticonvolveResult anticonvolve(const ed1::Quad& q, const Nat& m, const Nat& o) {
    if (m < 1 || o < 1) throw arith::DomainError("anticonvolve: moduli must be positive");
    Nat g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), o.get_mpz_t());
    if (g != 1) throw arith::DomainError("anticonvolve: gcd(m, o) != 1");
    Nat mo = m * o;
    mpz_gcd(g.get_mpz_t(), q.gamma.get_mpz_t(), mo.get_mpz_t());
    if (g != 1) throw arith::DomainError("anticonvolve: gcd(y, m*o) != 1");
    if (q.u * q.v != q.c * q.c)
        throw arith::DomainError("anticonvolve: u*v != c^2");
    Nat neg_c = ((-q.c) % q.gamma + q.gamma) % q.gamma;
    if (q.u % q.gamma != neg_c)
        throw arith::DomainError("anticonvolve: u not ≡ -c (mod y)");
    Nat d;
    mpz_invert(d.get_mpz_t(), q.gamma.get_mpz_t(), mo.get_mpz_t());
    AnticonvolveResult res;
    res.modulus = mo;
    res.residue = (d * (q.u + q.c)) % mo;
    res.size_condition = q.c > 0 && q.c < std::min(m, o);
    return res;
}

std::optional<ed2::Triple> reconstruct_ed2(const Nat& p, const ed1::Quad& q,
                                           const Nat& a, uint64_t budget) {
    // The shared c and A determine b: substituting delta = bc/A into
    // 4bc - b - c = P*delta gives b * (A*(4c - 1) - P*c) = c*A.
    if (a < 1) return std::nullopt;
    Nat den = a * (4 * q.c - 1) - p * q.c;
    if (den <= 0) return std::nullopt;
    Nat num = q.c * a;
    if (num % den != 0) return std::nullopt;
    Nat b = num / den;
    if ((b * q.c) % a != 0) return std::nullopt;
    Nat delta = b * q.c / a;
    if (delta < 1 || 4 * b * q.c - b - q.c != p * delta) return std::nullopt;
    if (!ed2::build_from_triple(p, delta, b, q.c)) return std::nullopt;
    auto sp = ed2::split_delta(delta, budget);
    ed2::Triple t;
    t.delta = delta;
    t.b = std::min(b, q.c);
    t.c = std::max(b, q.c);
    if (t.b % sp.g != 0 || t.c % sp.g != 0) return std::nullopt;
    t.alpha = sp.alpha;
    t.d_prime = sp.d_prime;
    t.g = sp.g;
    t.b_prime = t.b / sp.g;
    t.c_prime = t.c / sp.g;
    t.x = 4 * t.b_prime * sp.g - 1;
    t.y = 4 * t.c_prime * sp.g - 1;
    t.n = 4 * p * delta + 1;
    return t;
}

std::vector<RoundtripRow> roundtrip_report(const Nat& p, const Nat& delta_max,
                                           YPolicy policy, uint64_t budget) {
    std::vector<RoundtripRow> rows;
    for (const auto& t : ed2::enumerate_ed2(p, delta_max, budget)) {
        RoundtripRow row;
        row.p = p;
        row.a = t.b * t.c / t.delta;
        row.b = t.b;
        row.c = t.c;
        auto cv = convolve(p, t, policy, budget);
        if (cv.rejection != ConvolveRejection::NONE) {
            row.note = convolve_rejection_name(cv.rejection);
            rows.push_back(row);
            continue;
        }
        row.convolved = true;
        row.y = cv.y;
        row.c_shared = t.c;
        row.p2 = cv.p2;
        row.a2 = cv.dec->a;
        row.b2 = cv.dec->b;
        row.c2 = cv.dec->c;
        row.identity_ok = arith::check_unit_fraction_identity(cv.p2, cv.dec->a,
                                                              cv.dec->b, cv.dec->c);
        auto back = reconstruct_ed2(p, *cv.quad, row.a, budget);
        row.roundtrip_ok = back && back->delta == t.delta &&
                           ((back->b == t.b && back->c == t.c) ||
                            (back->b == t.c && back->c == t.b));
        rows.push_back(row);
    }
    return rows;
}

std::string roundtrip_csv_header() {
    return "p,a,b,c,convolved,y,c_shared,p2,a2,b2,c2,identity_ok,roundtrip_ok,note";
}

std::string roundtrip_csv_row(const RoundtripRow& r) {
    std::ostringstream os;
    os << r.p.get_str() << ',' << r.a.get_str() << ',' << r.b.get_str() << ','
       << r.c.get_str() << ',' << (r.convolved ? 1 : 0) << ',';
    if (r.convolved) {
        os << r.y.get_str() << ',' << r.c_shared.get_str() << ',' << r.p2.get_str()
           << ',' << r.a2.get_str() << ',' << r.b2.get_str() << ',' << r.c2.get_str()
           << ',' << (r.identity_ok ? 1 : 0) << ',' << (r.roundtrip_ok ? 1 : 0) << ',';
    } else {
        os << ",,,,,,,," << r.note;
        return os.str();
    }
    os << r.note;
    return os.str();
}

}  // namespace esd::xform
