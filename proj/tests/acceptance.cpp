// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Each criterion is self-contained and
// uses independent oracles (sieves, brute-force scans, exact rational
// arithmetic) rather than the code paths under test wherever possible.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "esd/appd.hpp"
#include "esd/decomp.hpp"
#include "esd/ed1.hpp"
#include "esd/ed2.hpp"
#include "esd/lattice.hpp"
#include "esd/xform.hpp"

using esd::arith::Nat;

namespace {

int g_failures = 0;

void report(int n, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << ": criterion " << n << " — " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

// ---- Criterion 1: first-parameterization golden table for P = 2521 ----

void criterion1() {
    // Frozen reference rows: gamma, A, B, C, c, u, v as decimal strings.
    const std::vector<std::vector<std::string>> expect = {
        {"15", "638", "51997", "23833534", "9454", "116", "770501"},
        {"15", "652", "18908", "23833534", "9454", "326", "274166"},
        {"27", "748", "4004", "42899857", "17017", "3179", "91091"},
        {"35", "1026", "1634", "55610739", "22059", "13851", "35131"},
        {"83", "636", "69748", "131876031", "52311", "477", "5736773"},
        {"83", "658", "14946", "131876031", "52311", "2303", "1188207"},
    };
    auto t0 = std::chrono::steady_clock::now();
    auto quads = esd::ed1::enumerate_ed1(2521, 83);
    bool ok = quads.size() == expect.size();
    for (size_t i = 0; ok && i < quads.size(); ++i) {
        auto d = esd::ed1::build_from_quad(2521, quads[i]);
        ok = d.has_value() && quads[i].gamma.get_str() == expect[i][0] &&
             d->a.get_str() == expect[i][1] && d->b.get_str() == expect[i][2] &&
             d->c.get_str() == expect[i][3] && quads[i].c.get_str() == expect[i][4] &&
             quads[i].u.get_str() == expect[i][5] && quads[i].v.get_str() == expect[i][6];
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < 30.0;
    std::ostringstream d;
    d << quads.size() << " rows, " << secs << " s";
    report(1, "golden first-parameterization rows for P = 2521", ok, d.str());
}

// ---- Criterion 2: second-parameterization golden tables ----

struct G2 {
    const char *alpha, *bp, *cp, *g, *b, *c, *delta, *x, *y, *n, *a, *bb, *cc, *dp;
};

bool check_table2(const Nat& p, const Nat& dmax, const std::vector<G2>& expect) {
    auto triples = esd::ed2::enumerate_ed2(p, dmax);
    std::sort(triples.begin(), triples.end(),
              [](const esd::ed2::Triple& l, const esd::ed2::Triple& r) {
                  if (l.alpha != r.alpha) return l.alpha < r.alpha;
                  if (l.d_prime != r.d_prime) return l.d_prime < r.d_prime;
                  return l.x < r.x;
              });
    if (triples.size() != expect.size()) return false;
    for (size_t i = 0; i < expect.size(); ++i) {
        const auto& t = triples[i];
        const auto& e = expect[i];
        auto dec = esd::ed2::build_from_triple(p, t.delta, t.b, t.c);
        if (!dec) return false;
        if (t.x * t.y != t.n) return false;
        if (t.alpha.get_str() != e.alpha || t.b_prime.get_str() != e.bp ||
            t.c_prime.get_str() != e.cp || t.g.get_str() != e.g ||
            t.b.get_str() != e.b || t.c.get_str() != e.c ||
            t.delta.get_str() != e.delta || t.x.get_str() != e.x ||
            t.y.get_str() != e.y || t.n.get_str() != e.n ||
            dec->a.get_str() != e.a || dec->b.get_str() != e.bb ||
            dec->c.get_str() != e.cc || t.d_prime.get_str() != e.dp)
            return false;
    }
    return true;
}

void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = check_table2(
        2521, 98,
        {{"1", "4", "161", "3", "12", "483", "9", "47", "1931", "90757", "644",
          "30252", "1217643", "3"},
         {"2", "2", "159", "14", "28", "2226", "98", "111", "8903", "988233", "636",
          "70588", "5611746", "7"},
         {"11", "2", "29", "11", "22", "319", "11", "87", "1275", "110925", "638",
          "55462", "804199", "1"}});
    ok = ok && check_table2(
                   3529, 650,
                   {{"1", "5", "186", "1", "5", "186", "1", "19", "743", "14117",
                     "930", "17645", "656394", "1"},
                    {"1", "3", "307", "2", "6", "614", "4", "23", "2455", "56465",
                     "921", "21174", "2166806", "2"},
                    {"1", "3", "296", "13", "39", "3848", "169", "155", "15391",
                     "2385605", "888", "137631", "13579592", "13"},
                    {"2", "4", "111", "10", "40", "1110", "50", "159", "4439",
                     "705801", "888", "141160", "3917190", "5"},
                    {"5", "1", "181", "10", "10", "1810", "20", "39", "7239",
                     "282321", "905", "35290", "6387490", "2"},
                    {"13", "4", "17", "39", "156", "663", "117", "623", "2651",
                     "1651573", "884", "550524", "2339727", "3"},
                    {"17", "2", "26", "68", "136", "1768", "272", "543", "7071",
                     "3839553", "884", "479944", "6239272", "4"},
                    {"26", "1", "34", "130", "130", "4420", "650", "519", "17679",
                     "9175401", "884", "458770", "15598180", "5"}});
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < 60.0;
    report(2, "golden second-parameterization rows for P = 2521 and P = 3529", ok);
}

// ---- Criterion 3: worked small examples ----

void criterion3() {
    bool ok = true;
    // P = 13 -> (4, 20, 130) from the quad (3, 10, 2, 50).
    auto d13 = esd::ed1::build_from_quad(13, esd::ed1::Quad{3, 10, 2, 50});
    ok = ok && d13 && d13->a == 4 && d13->b == 20 && d13->c == 130;
    // P = 29 -> (8, 116, 232) from (delta, b, c) = (4, 4, 8).
    auto d29 = esd::ed2::build_from_triple(29, 4, 4, 8);
    ok = ok && d29 && d29->a == 8 && d29->b == 116 && d29->c == 232;
    // P = 53 -> (14, 318, 1113) from (delta, b, c) = (9, 6, 21).
    auto d53 = esd::ed2::build_from_triple(53, 9, 6, 21);
    ok = ok && d53 && d53->a == 14 && d53->b == 318 && d53->c == 1113;
    // P = 5 direct scan, (r, s) = (1, 1): A = 2, and 3 * 7 = 21 = 4*5*1 + 1.
    auto h5 = esd::appd::direct_search(5, 1, 1, 1);
    ok = ok && h5.size() == 1 && h5[0].a == 2 && h5[0].r == 1 && h5[0].s == 1;
    ok = ok && Nat(3) * 7 == 4 * Nat(5) * 1 + 1;
    report(3, "worked examples P = 13, 29, 53 and P = 5 direct", ok);
}

// ---- Criteria 4, 5, 6: identity gate, multiplicity, coverage sweep ----

void criteria456() {
    auto t0 = std::chrono::steady_clock::now();
    // Sieve primes below 10^4 (independent oracle).
    const int N = 10000;
    std::vector<bool> comp(N, false);
    for (int i = 2; i * i < N; ++i)
        if (!comp[i])
            for (int j = i * i; j < N; j += i) comp[j] = true;
    bool identity_ok = true, mult_ok = true;
    int exhausted = 0, solved = 0, total1mod4 = 0;
    for (int p = 2; p < N; ++p) {
        if (comp[p] || p < 2) continue;
        std::vector<esd::decomp::Decomposition> sols;
        if (p == 2) {
            continue;  // outside the conjecture's prime range of interest
        } else if (p % 4 == 3) {
            sols.push_back(esd::decomp::explicit_3mod4(p));
        } else {
            ++total1mod4;
            auto sw = esd::ed2::sweep_delta(p, 4096, 2);
            if (sw.status != esd::ed2::SweepStatus::SOLVED || sw.found.empty()) {
                ++exhausted;
                continue;
            }
            ++solved;
            sols = sw.found;
        }
        for (const auto& s : sols) {
            // Exact identity and bounds, recomputed here rather than
            // trusting the producer's own gate.
            if (4 * s.a * s.b * s.c != Nat(p) * (s.a * s.b + s.a * s.c + s.b * s.c))
                identity_ok = false;
            if (p >= 5 && !(Nat(p) < 4 * s.a && 4 * s.a < 3 * Nat(p)))
                identity_ok = false;
            auto prof = esd::decomp::classify_multiplicity(p, s.a, s.b, s.c);
            auto cls = esd::decomp::profile_class(prof);
            if (p >= 5 && cls != esd::decomp::MultClass::SINGLE_C &&
                cls != esd::decomp::MultClass::DOUBLE_BC)
                mult_ok = false;
        }
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(4, "identity and bounds hold for every emitted decomposition", identity_ok);
    report(5, "multiplicity profile is SINGLE_C or DOUBLE_BC for all solutions",
           mult_ok);
    std::ostringstream d;
    d << solved << "/" << total1mod4 << " primes ≡ 1 (mod 4) below 10^4 solved, "
      << exhausted << " exhausted, " << secs << " s";
    report(6, "coverage sweep of primes ≡ 1 (mod 4) below 10^4",
           exhausted == 0 && solved == total1mod4 && secs < 600.0, d.str());
}

// ---- Criterion 7: direct/back equivalence ----

void criterion7() {
    int mismatches = 0;
    for (int p = 5; p < 500; ++p) {
        if (!esd::arith::is_prime(p)) continue;
        for (int alpha : {1, 2, 3}) {
            // Grid (r <= 130, s <= 20) is complete for this range:
            // d' = u/m <= (M+1)/3 <= 125 and the smaller root is <= sqrt(M) < 20.
            std::set<std::array<Nat, 3>> ds, bs;
            for (const auto& h : esd::appd::direct_search(p, alpha, 130, 20))
                ds.insert({h.dec.a, h.dec.b, h.dec.c});
            auto w = esd::appd::window(p);
            for (Nat a = w.lo; a <= w.hi; ++a)
                for (const auto& h : esd::appd::back_search(p, alpha, a))
                    bs.insert({h.dec.a, h.dec.b, h.dec.c});
            if (ds != bs) ++mismatches;
        }
    }
    report(7, "direct and back searches agree for P < 500, alpha in {1,2,3}",
           mismatches == 0,
           mismatches ? std::to_string(mismatches) + " mismatching (P, alpha)" : "");
}

// ---- Criterion 8: lattice density ----

void criterion8() {
    bool ok = true;
    for (long t : {30, 300, 3000}) {
        esd::lattice::AffineLattice lat{{3, 3, 3}, {0, 1, 2}};
        auto rep = esd::lattice::density_experiment(lat, t);
        Nat expect = Nat(t) * t * t / 27;
        if (rep.exact != expect || rep.error != 0) ok = false;
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        esd::lattice::AffineLattice lat;
        long maxmod = 0;
        long t = 10 + long(rng() % 500);
        for (int i = 0; i < 3; ++i) {
            long m;
            do {
                m = 2 + long(rng() % 29);
            } while (t % m == 0);  // non-divisible configuration
            maxmod = std::max(maxmod, m);
            lat.moduli.emplace_back(m);
            lat.residues.emplace_back(long(rng() % m));
        }
        auto rep = esd::lattice::density_experiment(lat, t);
        mpq_class bound(Nat(3) * maxmod * t * t);
        if (abs(rep.error) > bound) ok = false;
        if (!rep.within_bound) ok = false;
    }
    report(8, "lattice density exact and bounded-error counts", ok);
}

// ---- Criterion 9: hit-box trials ----

void criterion9() {
    std::mt19937_64 rng(11);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        long g = 2 + long(rng() % 49);
        long bp, cp;
        do {
            bp = 1 + long(rng() % 100);
        } while (std::gcd(bp, g) != 1);
        do {
            cp = 1 + long(rng() % 100);
        } while (std::gcd(cp, g) != 1);
        auto dl = esd::lattice::diagonal_lattice(g, bp, cp);
        long dprime = dl.d_prime.get_si();
        // H = W = d'; the box is placed around a point of the diagonal
        // coset, which the two-step construction must then find.
        long m0 = long(rng() % 2001) - 1000;
        mpz_class qu = dl.c_prime + m0 * dl.d_prime;
        mpz_class qv = -mpz_class(dl.b_prime) + m0 * dl.d_prime;
        esd::lattice::Box2 box;
        box.width = dprime;
        box.height = dprime;
        box.u0 = qu - long(rng() % std::max<long>(1, dprime));
        box.v0 = qv - long(rng() % std::max<long>(1, dprime));
        auto res = esd::lattice::hit_box(dl, box);
        bool good = res.found && dl.contains(res.u, res.v) && res.u >= box.u0 &&
                    res.u < box.u0 + box.width && res.v >= box.v0 &&
                    res.v < box.v0 + box.height &&
                    (res.u - dl.c_prime) == (res.v + dl.b_prime) &&
                    (res.u - dl.c_prime) % dl.d_prime == 0;
        if (!good) ++failures;
    }
    report(9, "1000 hit-box trials with H = W = d'", failures == 0,
           failures ? std::to_string(failures) + " failures" : "");
}

// ---- Criterion 10: anticonvolution congruence trials ----

void criterion10() {
    std::mt19937_64 rng(13);
    // Pool of quads from several primes.
    std::vector<std::pair<Nat, esd::ed1::Quad>> pool;
    for (int p : {13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 2521})
        for (const auto& q : esd::ed1::enumerate_ed1(p, 43)) pool.emplace_back(p, q);
    int done = 0, bad = 0;
    while (done < 1000) {
        const auto& [p, q] = pool[rng() % pool.size()];
        Nat m = 2 + long(rng() % 60), o = 2 + long(rng() % 60);
        Nat g1, g2, mo = m * o;
        mpz_gcd(g1.get_mpz_t(), m.get_mpz_t(), o.get_mpz_t());
        mpz_gcd(g2.get_mpz_t(), q.gamma.get_mpz_t(), mo.get_mpz_t());
        if (g1 != 1 || g2 != 1) continue;
        auto res = esd::xform::anticonvolve(q, m, o);
        Nat a = (q.u + q.c) / q.gamma;
        if (a % mo != res.residue || res.modulus != mo) ++bad;
        ++done;
    }
    report(10, "1000 anticonvolution congruence trials", bad == 0,
           bad ? std::to_string(bad) + " violations" : "");
}

// ---- Criterion 11: brute-force oracles ----

void criterion11() {
    bool ok = true;
    // First parameterization vs a direct scan, P <= 200, gamma <= 30.
    for (int p = 5; p <= 200 && ok; ++p) {
        if (!esd::arith::is_prime(p)) continue;
        std::set<std::array<Nat, 4>> oracle;
        for (Nat gamma = 3; gamma <= 30; ++gamma) {
            if ((gamma * p) % 4 != 3) continue;  // need 4c - 1 = gamma * P
            Nat c = (gamma * p + 1) / 4;
            Nat c2 = c * c;
            Nat negg = ((-c) % gamma + gamma) % gamma;
            Nat negp = ((-c) % Nat(p) + p) % p;
            for (Nat u = 1; u <= c; ++u) {
                if (c2 % u != 0) continue;
                Nat v = c2 / u;
                if (u % gamma != negg || v % gamma != negg) continue;
                if (u % p == negp) continue;
                if (!(4 * (u + c) < 3 * gamma * p)) continue;
                oracle.insert({gamma, c, u, v});
            }
        }
        std::set<std::array<Nat, 4>> got;
        for (const auto& q : esd::ed1::enumerate_ed1(p, 30))
            got.insert({q.gamma, q.c, q.u, q.v});
        if (oracle != got) ok = false;
    }
    report(11, "first-parameterization enumeration equals brute force (P <= 200)", ok);
    // Second parameterization vs a direct (b, c) scan, P <= 300, delta <= 50.
    bool ok2 = true;
    for (int p = 5; p <= 300 && ok2; ++p) {
        if (!esd::arith::is_prime(p)) continue;
        std::set<std::array<Nat, 3>> oracle;
        for (int delta = 1; delta <= 50; ++delta)
            for (long b = 1; b <= 200; ++b) {
                long num = long(p) * delta + b, den = 4 * b - 1;
                if (num % den) continue;
                long c = num / den;
                if (c < b || (Nat(b) * c) % delta != 0) continue;
                oracle.insert({Nat(delta), Nat(b), Nat(c)});
            }
        std::set<std::array<Nat, 3>> got;
        for (const auto& t : esd::ed2::enumerate_ed2(p, 50))
            got.insert({t.delta, t.b, t.c});
        if (oracle != got) ok2 = false;
    }
    report(11, "second-parameterization enumeration equals brute force (P <= 300)", ok2);
    // quadratic_roots vs factor-pair scan for M <= 10^4.
    bool ok3 = true;
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300 && ok3; ++trial) {
        long m = 1 + long(rng() % 10000);
        std::set<long> sums;
        for (long d = 1; d * d <= m; ++d)
            if (m % d == 0) sums.insert(d + m / d);
        long smax = m + 1;
        for (long s : {*sums.begin(), *sums.rbegin(), smax, smax + 7, 1L}) {
            auto r = esd::appd::quadratic_roots(s, m);
            bool representable = sums.count(s) > 0;
            if (r.has_value() != representable) ok3 = false;
            if (r && (r->first * r->second != m || r->first + r->second != s))
                ok3 = false;
        }
    }
    report(11, "quadratic roots equal the factor-pair oracle (M <= 10^4)", ok3);
    if (!(ok && ok2 && ok3)) {
        // The three sub-reports above already counted the failures.
    }
}

// ---- Criterion 12: diagnostics in place of non-reproducible claims ----

void criterion12() {
    // Round-trip diagnostics over two reference primes.
    int convolved = 0, total = 0, round_ok = 0;
    for (int p : {2521, 3529}) {
        for (const auto& row : esd::xform::roundtrip_report(p, 700)) {
            ++total;
            if (row.convolved) {
                ++convolved;
                if (row.roundtrip_ok) ++round_ok;
            }
        }
    }
    // Empirical iteration counts for the delta sweep: log the mean number
    // of candidate factorizations examined per prime in growing ranges.
    std::ostringstream log;
    log << "roundtrip " << convolved << "/" << total << " convolved ("
        << round_ok << " round-trips ok); sweep candidates per prime:";
    for (int hi : {1000, 3000, 10000}) {
        uint64_t cands = 0;
        int n = 0;
        for (int p = hi - 400; p < hi; ++p) {
            if (!esd::arith::is_prime(p) || p % 4 != 1) continue;
            auto sw = esd::ed2::sweep_delta(p, 4096, 2);
            cands += sw.n_candidates;
            ++n;
        }
        log << " P~" << hi << ": " << (n ? double(cands) / n : 0.0);
    }
    // Diagnostic substitution only — reported, never asserted.
    report(12, "diagnostic substitutes for non-reproducible claims", true, log.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criteria456();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::cout << (g_failures ? "RESULT: FAIL (" + std::to_string(g_failures) + ")"
                             : "RESULT: PASS")
              << std::endl;
    return g_failures ? 1 : 0;
}
