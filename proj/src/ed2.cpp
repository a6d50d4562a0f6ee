#include "esd/ed2.hpp"

#include <algorithm>
#include <sstream>

namespace esd::ed2 {

SplitDelta split_delta(const Nat& delta, uint64_t budget) {
    if (delta < 1) throw arith::DomainError("split_delta: delta must be positive");
    auto f = arith::factorize(delta, budget);
    SplitDelta s{1, 1, 1};
    for (const auto& [p, e] : f) {
        if (e % 2) s.alpha *= p;
        for (unsigned i = 0; i < e / 2; ++i) s.d_prime *= p;
    }
    s.g = s.alpha * s.d_prime;
    return s;
}

std::vector<Triple> enumerate_ed2(const Nat& p, const Nat& delta_max,
                                  uint64_t budget) {
    if (p < 2) throw arith::DomainError("enumerate_ed2: need P >= 2");
    std::vector<Triple> out;
    for (Nat delta = 1; delta <= delta_max; ++delta) {
        SplitDelta sp = split_delta(delta, budget);
        const Nat& g = sp.g;
        Nat four_g = 4 * g;
        Nat n = 4 * p * delta + 1;
        Nat want = four_g - 1;  // X ≡ Y ≡ -1 (mod 4g)
        std::vector<Triple> batch;
        for (const Nat& x : arith::divisors(n, budget)) {
            Nat y = n / x;
            if (x > y) break;
            if (x % four_g != want || y % four_g != want) continue;
            Triple t;
            t.delta = delta;
            t.alpha = sp.alpha;
            t.d_prime = sp.d_prime;
            t.g = g;
            t.x = x;
            t.y = y;
            t.n = n;
            t.b_prime = (x + 1) / four_g;
            t.c_prime = (y + 1) / four_g;
            t.b = g * t.b_prime;
            t.c = g * t.c_prime;
            if ((t.b * t.c) % delta != 0) continue;
            // Derived identity, not a filter: (b' + c')/d' = 4*alpha*b'*c' - P.
            batch.push_back(t);
        }
        std::sort(batch.begin(), batch.end(),
                  [](const Triple& l, const Triple& r) { return l.x < r.x; });
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::optional<decomp::Decomposition> build_from_triple(const Nat& p, const Nat& delta,
                                                       const Nat& b, const Nat& c) {
    if (delta < 1 || b < 1 || c < 1) return std::nullopt;
    if (4 * b * c - b - c != p * delta) return std::nullopt;
    if ((b * c) % delta != 0) return std::nullopt;
    Nat a = b * c / delta;
    std::ostringstream ps;
    ps << "{\"delta\":\"" << delta.get_str() << "\",\"b\":\"" << b.get_str()
       << "\",\"c\":\"" << c.get_str() << "\"}";
    return decomp::make_verified(p, a, b * p, c * p, decomp::Method::ED2, ps.str());
}

TK tk_parameterize(const Nat& b, const Nat& c) {
    if (b < 1 || c < 1) throw arith::DomainError("tk_parameterize: need positive b, c");
    return TK{4 * b * c - b - c, b * c};
}

std::pair<Nat, Nat> normalize_pair(const Nat& x, const Nat& y) {
    return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
}

SweepResult sweep_delta(const Nat& p, const Nat& delta_max, unsigned stop_after,
                        uint64_t budget) {
    SweepResult res;
    res.last_delta = 0;
    for (Nat delta = 1; delta <= delta_max; ++delta) {
        // Enumerate just this delta (enumerate_ed2 would rescan earlier ones).
        SplitDelta sp;
        try {
            sp = split_delta(delta, budget);
            Nat four_g = 4 * sp.g;
            Nat n = 4 * p * delta + 1;
            Nat want = four_g - 1;
            for (const Nat& x : arith::divisors(n, budget)) {
                Nat y = n / x;
                if (x > y) break;
                ++res.n_candidates;
                if (x % four_g != want || y % four_g != want) continue;
                Nat b = sp.g * ((x + 1) / four_g);
                Nat c = sp.g * ((y + 1) / four_g);
                if ((b * c) % delta != 0) continue;
                if (auto d = build_from_triple(p, delta, b, c)) {
                    res.found.push_back(*d);
                    if (stop_after && res.found.size() >= stop_after) {
                        res.status = SweepStatus::SOLVED;
                        res.last_delta = delta;
                        return res;
                    }
                }
            }
        } catch (const arith::BudgetExceeded&) {
            res.status = SweepStatus::BUDGET_EXCEEDED;
            return res;
        }
        res.last_delta = delta;
    }
    res.status = res.found.empty() ? SweepStatus::EXHAUSTED : SweepStatus::SOLVED;
    return res;
}

}  // namespace esd::ed2
