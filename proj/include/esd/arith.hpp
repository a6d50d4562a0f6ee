#pragma once
// Exact integer arithmetic kernel: primality, factorization, divisors,
// Jacobi symbols, progression sieves, and the unit-fraction identity check.
// All big values are GMP integers (mpz_class); nothing here ever rounds.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace esd::arith {

using Nat = mpz_class;

// Thrown when factorize() exceeds its step budget before finishing.
struct BudgetExceeded : std::runtime_error {
    Nat remaining;  // the unfactored cofactor at the time of exhaustion
    explicit BudgetExceeded(const Nat& rem)
        : std::runtime_error("factorization budget exceeded; unfactored cofactor " +
                             rem.get_str()),
          remaining(rem) {}
};

// Thrown on precondition violations (non-positive inputs, even Jacobi
// modulus, and the like).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Prime -> exponent, primes in ascending order.
using Factorization = std::map<Nat, unsigned>;

// Deterministic primality test. For n < 2^64 this uses the Miller-Rabin
// witness set {2,3,5,7,11,13,17,19,23,29,31,37}, which is exhaustive in
// that range. Larger n fall back to a fixed extended base set plus a
// Lucas-style double-check via mpz_probab_prime_p; no input in this
// project exceeds 2^64 in practice.
bool is_prime(const Nat& n);

// Complete factorization via trial division (odd primes up to a small
// bound) followed by Brent's rho with a deterministic seed sequence.
// `budget` caps the total number of rho iterations + trial divisions;
// exceeding it throws BudgetExceeded. budget == 0 means "use default".
Factorization factorize(const Nat& n, uint64_t budget = 0);

// All divisors of n in ascending order, from a precomputed factorization.
std::vector<Nat> divisors(const Factorization& f);
std::vector<Nat> divisors(const Nat& n, uint64_t budget = 0);

// Jacobi symbol (a/n); n must be positive and odd, else DomainError.
int jacobi(const Nat& a, const Nat& n);

// Primes p <= limit with p % modulus == residue, ascending.
// modulus == 1 returns all primes <= limit.
std::vector<Nat> primes_in_progression(const Nat& limit, const Nat& modulus,
                                       const Nat& residue);

// Exact check of 4/p == 1/a + 1/b + 1/c, i.e. 4abc == p(ab + bc + ca).
// All arguments must be positive, else DomainError.
bool check_unit_fraction_identity(const Nat& p, const Nat& a, const Nat& b,
                                  const Nat& c);

// Integer square root helper: largest r with r*r <= n (n >= 0).
Nat isqrt(const Nat& n);

// True iff n is a perfect square; if so and root != nullptr, stores the root.
bool is_square(const Nat& n, Nat* root = nullptr);

// Default factorization budget, overridable by the ESD_BUDGET environment
// variable (read once by the CLI; library callers pass it explicitly).
inline constexpr uint64_t kDefaultBudget = 10'000'000;

}  // namespace esd::arith
