#pragma once
// Decomposition records 4/P = 1/A + 1/B + 1/C, the single verification
// gate every producer must pass, and multiplicity classification of how
// many of A, B, C the prime P divides.

#include <optional>
#include <string>

#include "esd/arith.hpp"

namespace esd::decomp {

using arith::Nat;

enum class Method { ED1, ED2, EXPLICIT_3MOD4, DIRECT, BACK, TRANSFORM };

std::string method_name(Method m);

struct Decomposition {
    Nat p;  // the prime
    Nat a, b, c;  // denominators, kept sorted a <= b <= c
    Method method = Method::ED1;
    std::string params;  // producer-specific parameter record (JSON text)
};

enum class Rejection {
    NONE,
    NOT_POSITIVE,
    IDENTITY_FAILS,
    BOUNDS_VIOLATED,     // violates P < 4A < 3P (smallest denominator)
    PROFILE_INVALID,     // multiplicity pattern impossible for a solution
};

std::string rejection_name(Rejection r);

// Which of the sorted denominators P divides.
struct MultiplicityProfile {
    bool p_divides_a = false;
    bool p_divides_b = false;
    bool p_divides_c = false;
    int count() const { return int(p_divides_a) + int(p_divides_b) + int(p_divides_c); }
};

enum class MultClass { SINGLE_C, DOUBLE_BC, INVALID };

std::string mult_class_name(MultClass m);

// The one verification gate. Sorts the denominators, then checks in fixed
// order: positivity, the exact identity, the bounds P < 4A < 3P on the
// smallest denominator, and the multiplicity profile. P = 2 and P = 3 are
// accepted with the bounds and profile checks skipped (the structural
// lemmas assume P >= 5). Returns NONE on acceptance.
Rejection verify(const Nat& p, Nat a, Nat b, Nat c);

// Convenience wrapper: sorted, verified Decomposition or nullopt.
std::optional<Decomposition> make_verified(const Nat& p, const Nat& a,
                                           const Nat& b, const Nat& c,
                                           Method method,
                                           const std::string& params = "{}");

// Bounds check alone: P < 4A < 3P for the smallest denominator A.
bool bounds_check(const Nat& p, const Nat& a);

// Closed-form solution for P ≡ 3 (mod 4):
// A = (P+1)/4 and B = C = (P+1)P/2; 4/P = 1/A + 1/B + 1/C exactly. The
// emitted triple is verified before return; any other P is a DomainError.
Decomposition explicit_3mod4(const Nat& p);

// Multiplicity flags of a (sorted) triple with respect to p.
MultiplicityProfile classify_multiplicity(const Nat& p, Nat a, Nat b, Nat c);

// Classify a profile: exactly one multiple must be the largest denominator
// (SINGLE_C); exactly two must be the two largest (DOUBLE_BC); zero or
// three multiples are INVALID for a verified solution with P >= 5.
MultClass profile_class(const MultiplicityProfile& prof);

// Structural impossibility: in a verified solution with P >= 5 the pattern
// "P | B only" (exactly one multiple, and it is not the largest) cannot
// occur. Returns true iff the pattern is indeed absent for this triple.
bool check_b_multiple_impossible(const Nat& p, Nat a, Nat b, Nat c);

// Serialization: one JSON object per decomposition, all numbers as
// decimal strings, and a CSV row with the same fields.
std::string to_json(const Decomposition& d);
std::string to_csv_row(const Decomposition& d);
std::string csv_header();

}  // namespace esd::decomp
