#include "esd/decomp.hpp"

#include <algorithm>
#include <sstream>

namespace esd::decomp {

std::string method_name(Method m) {
    switch (m) {
        case Method::ED1: return "ed1";
        case Method::ED2: return "ed2";
        case Method::EXPLICIT_3MOD4: return "explicit_3mod4";
        case Method::DIRECT: return "direct";
        case Method::BACK: return "back";
        case Method::TRANSFORM: return "transform";
    }
    return "?";
}

std::string rejection_name(Rejection r) {
    switch (r) {
        case Rejection::NONE: return "none";
        case Rejection::NOT_POSITIVE: return "not_positive";
        case Rejection::IDENTITY_FAILS: return "identity_fails";
        case Rejection::BOUNDS_VIOLATED: return "bounds_violated";
        case Rejection::PROFILE_INVALID: return "profile_invalid";
    }
    return "?";
}

std::string mult_class_name(MultClass m) {
    switch (m) {
        case MultClass::SINGLE_C: return "single_c";
        case MultClass::DOUBLE_BC: return "double_bc";
        case MultClass::INVALID: return "invalid";
    }
    return "?";
}

namespace {
void sort3(Nat& a, Nat& b, Nat& c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
}
}  // namespace

bool bounds_check(const Nat& p, const Nat& a) {
    return p < 4 * a && 4 * a < 3 * p;
}

MultiplicityProfile classify_multiplicity(const Nat& p, Nat a, Nat b, Nat c) {
    sort3(a, b, c);
    MultiplicityProfile prof;
    prof.p_divides_a = mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t());
    prof.p_divides_b = mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t());
    prof.p_divides_c = mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t());
    return prof;
}

MultClass profile_class(const MultiplicityProfile& prof) {
    switch (prof.count()) {
        case 1:
            return prof.p_divides_c ? MultClass::SINGLE_C : MultClass::INVALID;
        case 2:
            return (prof.p_divides_b && prof.p_divides_c) ? MultClass::DOUBLE_BC
                                                          : MultClass::INVALID;
        default:
            return MultClass::INVALID;  // zero or three multiples
    }
}

Rejection verify(const Nat& p, Nat a, Nat b, Nat c) {
    if (p < 1 || a < 1 || b < 1 || c < 1) return Rejection::NOT_POSITIVE;
    sort3(a, b, c);
    if (!arith::check_unit_fraction_identity(p, a, b, c))
        return Rejection::IDENTITY_FAILS;
    if (p <= 3) return Rejection::NONE;  // structural lemmas assume P >= 5
    if (!bounds_check(p, a)) return Rejection::BOUNDS_VIOLATED;
    if (profile_class(classify_multiplicity(p, a, b, c)) == MultClass::INVALID)
        return Rejection::PROFILE_INVALID;
    return Rejection::NONE;
}

std::optional<Decomposition> make_verified(const Nat& p, const Nat& a, const Nat& b,
                                           const Nat& c, Method method,
                                           const std::string& params) {
    if (verify(p, a, b, c) != Rejection::NONE) return std::nullopt;
    Decomposition d{p, a, b, c, method, params};
    sort3(d.a, d.b, d.c);
    return d;
}

Decomposition explicit_3mod4(const Nat& p) {
    if (p < 3 || p % 4 != 3)
        throw arith::DomainError("explicit_3mod4: need P ≡ 3 (mod 4)");
    Nat a = (p + 1) / 4;
    Nat bc = (p + 1) * p / 2;
    auto d = make_verified(p, a, bc, bc, Method::EXPLICIT_3MOD4);
    if (!d) throw arith::DomainError("explicit_3mod4: construction failed to verify");
    return *d;
}

bool check_b_multiple_impossible(const Nat& p, Nat a, Nat b, Nat c) {
    sort3(a, b, c);
    auto prof = classify_multiplicity(p, a, b, c);
    bool b_only = prof.count() == 1 && prof.p_divides_b;
    bool a_only = prof.count() == 1 && prof.p_divides_a;
    return !(b_only || a_only);
}

std::string to_json(const Decomposition& d) {
    std::ostringstream os;
    os << "{\"p\":\"" << d.p.get_str() << "\",\"a\":\"" << d.a.get_str()
       << "\",\"b\":\"" << d.b.get_str() << "\",\"c\":\"" << d.c.get_str()
       << "\",\"method\":\"" << method_name(d.method) << "\",\"params\":" << (d.params.empty() ? "{}" : d.params)
       << "}";
    return os.str();
}

std::string csv_header() { return "p,a,b,c,method,params"; }

std::string to_csv_row(const Decomposition& d) {
    std::ostringstream os;
    std::string params = d.params.empty() ? "{}" : d.params;
    // CSV-quote the params field (it contains commas).
    std::string quoted = "\"";
    for (char ch : params) {
        if (ch == '"') quoted += "\"\"";
        else quoted += ch;
    }
    quoted += "\"";
    os << d.p.get_str() << ',' << d.a.get_str() << ',' << d.b.get_str() << ','
       << d.c.get_str() << ',' << method_name(d.method) << ',' << quoted;
    return os.str();
}

}  // namespace esd::decomp
