#include "esd/arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace esd::arith {

namespace {

// Exhaustive Miller-Rabin witness set for n < 2^64.
const uint64_t kWitnesses64[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Single Miller-Rabin round; n odd, n > 2, 1 < a < n - 1 assumed reduced.
bool mr_round(const Nat& n, const Nat& a) {
    Nat d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    Nat x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

Nat two_to_64() {
    Nat v = 1;
    v <<= 64;
    return v;
}

// Brent's cycle-finding rho; returns a nontrivial factor of odd composite n
// or 0 if the step budget ran out. `steps` is decremented in place.
Nat brent_rho(const Nat& n, uint64_t cseed, uint64_t& steps) {
    Nat c = cseed;
    Nat x = 2, y = 2, d = 1, q = 1, ys = y;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Nat& v) -> Nat { return (v * v + c) % n; };
    while (d == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && d == 1) {
            ys = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                if (steps == 0) return 0;
                --steps;
                y = f(y);
                Nat diff = x - y;
                mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
                q = (q * diff) % n;
            }
            mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
        }
        r *= 2;
    }
    if (d == n) {
        // Backtrack one step at a time.
        do {
            if (steps == 0) return 0;
            --steps;
            ys = f(ys);
            Nat diff = x - ys;
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (d == 1);
    }
    return (d == n) ? Nat(0) : d;
}

void factor_rec(const Nat& n, Factorization& out, uint64_t& steps) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // Deterministic seed sequence for the rho polynomial constant.
    for (uint64_t cseed = 1;; ++cseed) {
        if (steps == 0) throw BudgetExceeded(n);
        Nat d = brent_rho(n, cseed, steps);
        if (d == 0) throw BudgetExceeded(n);
        if (d > 1 && d < n) {
            factor_rec(d, out, steps);
            factor_rec(n / d, out, steps);
            return;
        }
    }
}

}  // namespace

bool is_prime(const Nat& n) {
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < two_to_64()) {
        for (uint64_t a : kWitnesses64)
            if (!mr_round(n, Nat(a))) return false;
        return true;
    }
    // Beyond 64 bits: extended fixed bases, then GMP's BPSW-style check.
    for (uint64_t a : {41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
        if (!mr_round(n, Nat(a))) return false;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 24) != 0;
}

Factorization factorize(const Nat& n, uint64_t budget) {
    if (n < 1) throw DomainError("factorize: argument must be positive");
    if (budget == 0) budget = kDefaultBudget;
    Factorization out;
    Nat m = n;
    uint64_t steps = budget;
    // Trial division by 2 and small odd numbers.
    while (mpz_even_p(m.get_mpz_t())) {
        ++out[2];
        m >>= 1;
    }
    for (uint64_t d = 3; d <= 100'000 && Nat(d) * d <= m; d += 2) {
        if (steps == 0) throw BudgetExceeded(m);
        --steps;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            ++out[d];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        }
    }
    factor_rec(m, out, steps);
    return out;
}

std::vector<Nat> divisors(const Factorization& f) {
    std::vector<Nat> out{1};
    for (const auto& [p, e] : f) {
        size_t base = out.size();
        Nat pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Nat> divisors(const Nat& n, uint64_t budget) {
    return divisors(factorize(n, budget));
}

int jacobi(const Nat& a, const Nat& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw DomainError("jacobi: modulus must be positive and odd");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

std::vector<Nat> primes_in_progression(const Nat& limit, const Nat& modulus,
                                       const Nat& residue) {
    if (modulus < 1) throw DomainError("primes_in_progression: modulus must be >= 1");
    if (residue < 0 || residue >= modulus)
        throw DomainError("primes_in_progression: residue out of range");
    if (limit > 100'000'000)
        throw DomainError("primes_in_progression: limit too large for sieve");
    long lim = limit.get_si();
    std::vector<Nat> out;
    if (lim < 2) return out;
    std::vector<bool> comp(size_t(lim) + 1, false);
    for (long i = 2; i * i <= lim; ++i)
        if (!comp[i])
            for (long j = i * i; j <= lim; j += i) comp[j] = true;
    for (long i = 2; i <= lim; ++i)
        if (!comp[i] && Nat(i) % modulus == residue) out.emplace_back(i);
    return out;
}

bool check_unit_fraction_identity(const Nat& p, const Nat& a, const Nat& b,
                                  const Nat& c) {
    if (p < 1 || a < 1 || b < 1 || c < 1)
        throw DomainError("check_unit_fraction_identity: arguments must be positive");
    return 4 * a * b * c == p * (a * b + b * c + c * a);
}

Nat isqrt(const Nat& n) {
    if (n < 0) throw DomainError("isqrt: negative argument");
    Nat r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Nat& n, Nat* root) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

}  // namespace esd::arith
