#pragma once
// Convolution: map an ED2 triple at prime P to an ED1 quad at a (possibly
// different) prime P'' via a divisor y of s = 4c - 1 with y ≡ 3 (mod 4)
// and P'' = s / y. Anticonvolution recovers the congruence class of A
// modulo a product of coprime moduli, and the full reverse reconstructs
// the originating ED2 triple.

#include <optional>
#include <string>
#include <vector>

#include "esd/ed1.hpp"
#include "esd/ed2.hpp"

namespace esd::xform {

using arith::Nat;

enum class YPolicy { MINIMAL, CANONICAL };  // smallest admissible y, or y = (4c-1)/P

enum class ConvolveRejection {
    NONE,
    NO_ADMISSIBLE_Y,     // canonical policy only: P does not divide 4c - 1
    P2_NOT_PRIME,
    GCD_Y_C_NOT_ONE,
    U_NOT_DIVISOR,       // u = y*A - c is nonpositive or does not divide c^2
    CONGRUENCE_FAILS,    // u ≢ -c (mod y)
    VERIFY_FAILS,
};

std::string convolve_rejection_name(ConvolveRejection r);

struct ConvolveResult {
    ConvolveRejection rejection = ConvolveRejection::NONE;
    Nat y, p2;                       // divisor and target prime (set once chosen)
    std::optional<ed1::Quad> quad;   // (y, c, u, v) at modulus p2
    std::optional<decomp::Decomposition> dec;  // verified result at p2
};

// Rejection checks run in fixed order: choose y, P'' primality,
// gcd(y, c) = 1, u | c^2, congruence, final verification.
ConvolveResult convolve(const Nat& p, const ed2::Triple& t,
                        YPolicy policy = YPolicy::MINIMAL, uint64_t budget = 0);

// Same transform starting from raw (delta, b, c).
ConvolveResult convolve(const Nat& p, const Nat& delta, const Nat& b, const Nat& c,
                        YPolicy policy = YPolicy::MINIMAL, uint64_t budget = 0);

// From an ED1 quad at modulus p: report the congruence class of
// A = (u + c)/y modulo m*o, namely A ≡ d*(u + c) (mod m*o) with
// d = y^{-1} (mod m*o). Preconditions: gcd(m, o) = 1 and gcd(y, m*o) = 1
// (DomainError otherwise); u*v = c^2 and u ≡ -c (mod y) are re-checked.
struct AnticonvolveResult {
    Nat modulus;   // m * o
    Nat residue;   // class of A
    bool size_condition;  // whether 0 < c < min(m, o) also held
};

AnticonvolveResult anticonvolve(const ed1::Quad& q, const Nat& m, const Nat& o);

// Reverse reconstruction from a successful convolution: the shared c and
// the original A determine b via b*(A*(4c - 1) - P*c) = c*A, and then
// delta = b*c/A. Returns nullopt when the reconstruction is not integral
// or fails ED2 verification at p.
std::optional<ed2::Triple> reconstruct_ed2(const Nat& p, const ed1::Quad& q,
                                           const Nat& a, uint64_t budget = 0);

struct RoundtripRow {
    Nat p, a, b, c;           // the ED2 solution at p
    bool convolved = false;
    Nat y, c_shared, p2;      // transform data (when convolved)
    Nat a2, b2, c2;           // ED1 decomposition at p2 (when convolved)
    bool identity_ok = false;     // 4/p2 identity of the image
    bool roundtrip_ok = false;    // reconstruction returns the original triple
    std::string note;             // rejection name when not convolved
};

// Convolve every ED2 solution with delta <= delta_max, attempt the
// round trip on successes, and tabulate one row per solution.
std::vector<RoundtripRow> roundtrip_report(const Nat& p, const Nat& delta_max,
                                           YPolicy policy = YPolicy::MINIMAL,
                                           uint64_t budget = 0);

std::string roundtrip_csv_header();
std::string roundtrip_csv_row(const RoundtripRow& r);

}  // namespace esd::xform
