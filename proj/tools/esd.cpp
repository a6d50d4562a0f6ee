// Command-line front end. Subcommands cover solving single primes and
// ranges, reproducing the reference tables, verifying triples, lattice
// density and box-hitting experiments, the two parameterization
// enumerations, the window searches, and the convolution transforms.
//
// Exit codes: 0 success, 2 no solution / verification failed,
// 3 budget exceeded, 4 domain error, 64 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "esd/appd.hpp"
#include "esd/decomp.hpp"
#include "esd/ed1.hpp"
#include "esd/ed2.hpp"
#include "esd/lattice.hpp"
#include "esd/xform.hpp"

namespace {

using esd::arith::Nat;

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDomain = 4;

struct Options {
    std::string delta_max, gamma_max;
    Nat alpha = 1;
    unsigned stop_after = 2;
    uint64_t budget = 0;
    unsigned workers = 1;
    uint64_t seed = 0;
    std::string format = "jsonl";
    std::string out;
};

uint64_t env_budget() {
    if (const char* e = std::getenv("ESD_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(e, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 0;
}

uint64_t effective_budget(const Options& o) {
    if (o.budget) return o.budget;
    if (uint64_t e = env_budget()) return e;
    return esd::arith::kDefaultBudget;
}

// ceil(log2(p)), at least 1.
unsigned ceil_log2(const Nat& p) {
    size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);
    Nat pow = Nat(1) << (bits - 1);
    return (pow == p) ? unsigned(bits - 1) : unsigned(bits);
}

Nat default_delta_max(const Nat& p) {
    Nat l = ceil_log2(p);
    Nat v = l * l * l;
    return std::max(Nat(64), v);
}

Nat default_gamma_max(const Nat& p) {
    Nat v = 4 * Nat(ceil_log2(p)) - 1;
    Nat target = (3 * p) % 4;
    while (v % 4 != target) --v;
    return std::max(v, esd::ed1::gamma_min(p));
}

Nat resolved_delta_max(const Options& o, const Nat& p) {
    return o.delta_max.empty() ? default_delta_max(p) : Nat(o.delta_max);
}

Nat resolved_gamma_max(const Options& o, const Nat& p) {
    return o.gamma_max.empty() ? default_gamma_max(p) : Nat(o.gamma_max);
}

class Sink {
  public:
    Sink(const Options& o) : format_(o.format) {
        if (!o.out.empty()) {
            file_.open(o.out);
            if (!file_) throw esd::arith::DomainError("cannot open output file: " + o.out);
        }
        if (format_ == "csv") line(esd::decomp::csv_header());
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    void line(const std::string& s) { stream() << s << '\n'; }
    void emit(const esd::decomp::Decomposition& d) {
        line(format_ == "csv" ? esd::decomp::to_csv_row(d) : esd::decomp::to_json(d));
    }

  private:
    std::string format_;
    std::ofstream file_;
};

// Strategy chain for one prime. Returns the solutions found (possibly
// empty) or throws BudgetExceeded.
std::vector<esd::decomp::Decomposition> solve_prime(const Nat& p, const Options& o) {
    std::vector<esd::decomp::Decomposition> out;
    if (p == 2) {
        out.push_back({p, 1, 2, 2, esd::decomp::Method::EXPLICIT_3MOD4, "{}"});
        return out;
    }
    if (p % 4 == 3) {
        out.push_back(esd::decomp::explicit_3mod4(p));
        return out;
    }
    uint64_t budget = effective_budget(o);
    auto sweep = esd::ed2::sweep_delta(p, resolved_delta_max(o, p), o.stop_after, budget);
    if (sweep.status == esd::ed2::SweepStatus::BUDGET_EXCEEDED)
        throw esd::arith::BudgetExceeded(p);
    out = sweep.found;
    if (!out.empty()) return out;
    // Factorization-free fallbacks, then the first parameterization.
    for (const auto& h : esd::appd::direct_search(p, o.alpha, 64, 16)) {
        out.push_back(h.dec);
        if (o.stop_after && out.size() >= o.stop_after) return out;
    }
    if (!out.empty()) return out;
    auto w = esd::appd::window(p);
    for (Nat a = w.lo; a <= w.hi; ++a) {
        for (const auto& h : esd::appd::back_search(p, o.alpha, a)) {
            out.push_back(h.dec);
            if (o.stop_after && out.size() >= o.stop_after) return out;
        }
    }
    if (!out.empty()) return out;
    for (const auto& q : esd::ed1::enumerate_ed1(p, resolved_gamma_max(o, p), true, budget)) {
        if (auto d = esd::ed1::build_from_quad(p, q)) {
            out.push_back(*d);
            if (o.stop_after && out.size() >= o.stop_after) return out;
        }
    }
    return out;
}

int cmd_solve(const std::string& p_str, const Options& o) {
    Nat p(p_str);
    if (!esd::arith::is_prime(p)) throw esd::arith::DomainError("solve: P must be prime");
    auto sols = solve_prime(p, o);
    Sink sink(o);
    for (const auto& d : sols) sink.emit(d);
    return sols.empty() ? kExitNoSolution : kExitOk;
}

int cmd_sweep(const std::string& lo_str, const std::string& hi_str, const Options& o) {
    Nat lo(lo_str), hi(hi_str);
    auto primes = esd::arith::primes_in_progression(hi, 1, 0);
    std::vector<Nat> targets;
    for (const auto& p : primes)
        if (p >= lo) targets.push_back(p);
    unsigned workers = std::max(1u, o.workers);
    std::vector<std::vector<esd::decomp::Decomposition>> results(targets.size());
    std::vector<bool> failed(targets.size(), false);
    bool budget_hit = false;
    // Static block partition; each worker handles a contiguous slice and
    // the merge below restores ascending-P order deterministically.
    auto run_slice = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            try {
                results[i] = solve_prime(targets[i], o);
            } catch (const esd::arith::BudgetExceeded&) {
                failed[i] = true;
            }
        }
    };
    if (workers == 1 || targets.size() < 2) {
        run_slice(0, targets.size());
    } else {
        std::vector<std::future<void>> futs;
        size_t chunk = (targets.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            size_t b = std::min(targets.size(), size_t(w) * chunk);
            size_t e = std::min(targets.size(), b + chunk);
            if (b < e) futs.push_back(std::async(std::launch::async, run_slice, b, e));
        }
        for (auto& f : futs) f.get();
    }
    Sink sink(o);
    bool all_solved = true;
    for (size_t i = 0; i < targets.size(); ++i) {
        if (failed[i]) {
            budget_hit = true;
            continue;
        }
        if (results[i].empty()) all_solved = false;
        for (const auto& d : results[i]) sink.emit(d);
    }
    if (budget_hit) return kExitBudget;
    return all_solved ? kExitOk : kExitNoSolution;
}

int cmd_table(int which, const std::string& p_str, const Options& o) {
    Nat p(p_str);
    Sink sink(o);
    if (which == 1) {
        Nat gmax = o.gamma_max.empty() ? Nat(83) : Nat(o.gamma_max);
        sink.line("no,gamma,a,b,c_den,c,u,v,uv_eq_c2,congruence_ok");
        int i = 0;
        for (const auto& q : esd::ed1::enumerate_ed1(p, gmax, true, effective_budget(o))) {
            auto d = esd::ed1::build_from_quad(p, q);
            if (!d) continue;
            ++i;
            std::ostringstream os;
            Nat negc = ((-q.c) % q.gamma + q.gamma) % q.gamma;
            bool congr = q.u % q.gamma == negc && q.v % q.gamma == negc;
            os << i << ',' << q.gamma.get_str() << ',' << d->a.get_str() << ','
               << d->b.get_str() << ',' << d->c.get_str() << ',' << q.c.get_str() << ','
               << q.u.get_str() << ',' << q.v.get_str() << ','
               << (q.u * q.v == q.c * q.c ? 1 : 0) << ',' << (congr ? 1 : 0);
            sink.line(os.str());
        }
        return i > 0 ? kExitOk : kExitNoSolution;
    }
    if (which == 2) {
        Nat dmax = resolved_delta_max(o, p);
        sink.line("no,alpha,b_prime,c_prime,g,b,c,delta,x,y,n,a,b_den,c_den,d_prime,ok");
        auto triples = esd::ed2::enumerate_ed2(p, dmax, effective_budget(o));
        std::sort(triples.begin(), triples.end(),
                  [](const esd::ed2::Triple& l, const esd::ed2::Triple& r) {
                      if (l.alpha != r.alpha) return l.alpha < r.alpha;
                      if (l.d_prime != r.d_prime) return l.d_prime < r.d_prime;
                      return l.x < r.x;
                  });
        int i = 0;
        for (const auto& t : triples) {
            auto d = esd::ed2::build_from_triple(p, t.delta, t.b, t.c);
            if (!d) continue;
            ++i;
            std::ostringstream os;
            os << i << ',' << t.alpha.get_str() << ',' << t.b_prime.get_str() << ','
               << t.c_prime.get_str() << ',' << t.g.get_str() << ',' << t.b.get_str()
               << ',' << t.c.get_str() << ',' << t.delta.get_str() << ','
               << t.x.get_str() << ',' << t.y.get_str() << ',' << t.n.get_str() << ','
               << d->a.get_str() << ',' << d->b.get_str() << ',' << d->c.get_str()
               << ',' << t.d_prime.get_str() << ",1";
            sink.line(os.str());
        }
        return i > 0 ? kExitOk : kExitNoSolution;
    }
    throw CLI::ValidationError("table", "which must be 1 or 2");
}

int cmd_verify(const std::string& p, const std::string& a, const std::string& b,
               const std::string& c) {
    auto r = esd::decomp::verify(Nat(p), Nat(a), Nat(b), Nat(c));
    std::cout << esd::decomp::rejection_name(r) << '\n';
    return r == esd::decomp::Rejection::NONE ? kExitOk : kExitNoSolution;
}

int cmd_density(const std::vector<std::string>& moduli,
                const std::vector<std::string>& residues, const std::string& t_str) {
    esd::lattice::AffineLattice lat;
    for (const auto& m : moduli) lat.moduli.emplace_back(m);
    for (const auto& r : residues) lat.residues.emplace_back(r);
    auto rep = esd::lattice::density_experiment(lat, Nat(t_str));
    std::cout << "{\"exact\":\"" << rep.exact.get_str() << "\",\"ideal\":\""
              << rep.ideal.get_str() << "\",\"error\":\"" << rep.error.get_str()
              << "\",\"within_bound\":" << (rep.within_bound ? "true" : "false")
              << "}\n";
    return rep.within_bound ? kExitOk : kExitNoSolution;
}

int cmd_hitbox(const std::string& g, const std::string& bp, const std::string& cp,
               const std::string& u0, const std::string& v0, const std::string& w,
               const std::string& h) {
    auto dl = esd::lattice::diagonal_lattice(Nat(g), Nat(bp), Nat(cp));
    esd::lattice::Box2 box{mpz_class(u0), mpz_class(v0), Nat(w), Nat(h)};
    auto res = esd::lattice::hit_box(dl, box);
    if (res.found) {
        std::cout << "{\"found\":true,\"u\":\"" << res.u.get_str() << "\",\"v\":\""
                  << res.v.get_str() << "\"}\n";
        return kExitOk;
    }
    std::cout << "{\"found\":false,\"diagnostic\":\"" << res.diagnostic << "\"}\n";
    return kExitNoSolution;
}

int cmd_convolve(const std::string& p, const std::string& delta, const std::string& b,
                 const std::string& c, const std::string& policy, const Options& o) {
    auto pol = policy == "canonical" ? esd::xform::YPolicy::CANONICAL
                                     : esd::xform::YPolicy::MINIMAL;
    auto res = esd::xform::convolve(Nat(p), Nat(delta), Nat(b), Nat(c), pol,
                                    effective_budget(o));
    if (res.rejection != esd::xform::ConvolveRejection::NONE) {
        std::cout << "{\"rejection\":\"" << convolve_rejection_name(res.rejection)
                  << "\"}\n";
        return kExitNoSolution;
    }
    std::cout << "{\"y\":\"" << res.y.get_str() << "\",\"p2\":\"" << res.p2.get_str()
              << "\",\"decomposition\":" << esd::decomp::to_json(*res.dec) << "}\n";
    return kExitOk;
}

int cmd_anticonvolve(const std::string& gamma, const std::string& c,
                     const std::string& u, const std::string& v, const std::string& m,
                     const std::string& o_str) {
    esd::ed1::Quad q{Nat(gamma), Nat(c), Nat(u), Nat(v)};
    auto res = esd::xform::anticonvolve(q, Nat(m), Nat(o_str));
    std::cout << "{\"modulus\":\"" << res.modulus.get_str() << "\",\"residue\":\""
              << res.residue.get_str() << "\",\"size_condition\":"
              << (res.size_condition ? "true" : "false") << "}\n";
    return kExitOk;
}

int cmd_direct(const std::string& p, const Options& o, const std::string& r_max,
               const std::string& s_max) {
    auto hits = esd::appd::direct_search(Nat(p), o.alpha, Nat(r_max), Nat(s_max));
    Sink sink(o);
    for (const auto& h : hits) sink.emit(h.dec);
    return hits.empty() ? kExitNoSolution : kExitOk;
}

int cmd_back(const std::string& p, const std::string& a, const Options& o) {
    auto hits = esd::appd::back_search(Nat(p), o.alpha, Nat(a));
    Sink sink(o);
    for (const auto& h : hits) sink.emit(h.dec);
    return hits.empty() ? kExitNoSolution : kExitOk;
}

int cmd_ed1(const std::string& p, const Options& o) {
    Nat pp(p);
    auto quads = esd::ed1::enumerate_ed1(pp, resolved_gamma_max(o, pp), true,
                                         effective_budget(o));
    Sink sink(o);
    int n = 0;
    for (const auto& q : quads)
        if (auto d = esd::ed1::build_from_quad(pp, q)) {
            sink.emit(*d);
            ++n;
        }
    return n ? kExitOk : kExitNoSolution;
}

int cmd_ed2(const std::string& p, const Options& o) {
    Nat pp(p);
    auto triples = esd::ed2::enumerate_ed2(pp, resolved_delta_max(o, pp),
                                           effective_budget(o));
    Sink sink(o);
    int n = 0;
    for (const auto& t : triples)
        if (auto d = esd::ed2::build_from_triple(pp, t.delta, t.b, t.c)) {
            sink.emit(*d);
            ++n;
        }
    return n ? kExitOk : kExitNoSolution;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Erdos-Straus decompositions 4/P = 1/A + 1/B + 1/C"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    std::string alpha_str = "1";
    app.add_option("--delta-max", opt.delta_max, "Cap for the delta sweep");
    app.add_option("--gamma-max", opt.gamma_max, "Cap for the gamma enumeration");
    app.add_option("--alpha", alpha_str, "Squarefree part parameter");
    app.add_option("--stop-after", opt.stop_after, "Stop after N verified solutions (0 = all)");
    app.add_option("--budget", opt.budget, "Factorization step budget");
    app.add_option("--workers", opt.workers, "Worker threads for sweep");
    app.add_option("--seed", opt.seed, "Seed for randomized experiments");
    app.add_option("--format", opt.format, "Output format: jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    app.add_option("--out", opt.out, "Write output to FILE instead of stdout");

    std::string p, p_hi, a, b, c, delta, gamma, u, v, m, o2, t_arg;
    std::string r_max = "64", s_max = "16", policy = "minimal";
    std::vector<std::string> moduli, residues;
    std::string g, bp, cp, u0, v0, bw, bh;
    int which = 1;

    auto* solve = app.add_subcommand("solve", "Find decompositions for one prime");
    solve->add_option("P", p)->required();
    auto* sweep = app.add_subcommand("sweep", "Solve every prime in [LO, HI]");
    sweep->add_option("LO", p)->required();
    sweep->add_option("HI", p_hi)->required();
    auto* table = app.add_subcommand("table", "Reproduce a reference table");
    table->add_option("WHICH", which)->required()->check(CLI::Range(1, 2));
    table->add_option("P", p)->required();
    auto* verify = app.add_subcommand("verify", "Verify 4/P = 1/A + 1/B + 1/C");
    verify->add_option("P", p)->required();
    verify->add_option("A", a)->required();
    verify->add_option("B", b)->required();
    verify->add_option("C", c)->required();
    auto* density = app.add_subcommand("density", "Affine-lattice density experiment");
    density->add_option("--moduli", moduli)->required()->delimiter(',');
    density->add_option("--residues", residues)->required()->delimiter(',');
    density->add_option("-T,--cube", t_arg)->required();
    auto* hitbox = app.add_subcommand("hitbox", "Constructive diagonal-lattice box hit");
    hitbox->add_option("G", g)->required();
    hitbox->add_option("BPRIME", bp)->required();
    hitbox->add_option("CPRIME", cp)->required();
    hitbox->add_option("U0", u0)->required();
    hitbox->add_option("V0", v0)->required();
    hitbox->add_option("WIDTH", bw)->required();
    hitbox->add_option("HEIGHT", bh)->required();
    auto* convolve = app.add_subcommand("convolve", "Transform an ED2 triple to an ED1 quad");
    convolve->add_option("P", p)->required();
    convolve->add_option("DELTA", delta)->required();
    convolve->add_option("B", b)->required();
    convolve->add_option("C", c)->required();
    convolve->add_option("--policy", policy)->check(CLI::IsMember({"minimal", "canonical"}));
    auto* anticonvolve = app.add_subcommand("anticonvolve", "Congruence class of A from a quad");
    anticonvolve->add_option("GAMMA", gamma)->required();
    anticonvolve->add_option("C", c)->required();
    anticonvolve->add_option("U", u)->required();
    anticonvolve->add_option("V", v)->required();
    anticonvolve->add_option("M", m)->required();
    anticonvolve->add_option("O", o2)->required();
    auto* direct = app.add_subcommand("direct", "Window search over the (r, s) grid");
    direct->add_option("P", p)->required();
    direct->add_option("--r-max", r_max);
    direct->add_option("--s-max", s_max);
    auto* back = app.add_subcommand("back", "Reconstruct parameters from candidate A");
    back->add_option("P", p)->required();
    back->add_option("A", a)->required();
    auto* ed1c = app.add_subcommand("ed1", "Enumerate first-parameterization solutions");
    ed1c->add_option("P", p)->required();
    auto* ed2c = app.add_subcommand("ed2", "Enumerate second-parameterization solutions");
    ed2c->add_option("P", p)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        opt.alpha = Nat(alpha_str);
        if (solve->parsed()) return cmd_solve(p, opt);
        if (sweep->parsed()) return cmd_sweep(p, p_hi, opt);
        if (table->parsed()) return cmd_table(which, p, opt);
        if (verify->parsed()) return cmd_verify(p, a, b, c);
        if (density->parsed()) return cmd_density(moduli, residues, t_arg);
        if (hitbox->parsed()) return cmd_hitbox(g, bp, cp, u0, v0, bw, bh);
        if (convolve->parsed()) return cmd_convolve(p, delta, b, c, policy, opt);
        if (anticonvolve->parsed()) return cmd_anticonvolve(gamma, c, u, v, m, o2);
        if (direct->parsed()) return cmd_direct(p, opt, r_max, s_max);
        if (back->parsed()) return cmd_back(p, a, opt);
        if (ed1c->parsed()) return cmd_ed1(p, opt);
        if (ed2c->parsed()) return cmd_ed2(p, opt);
    } catch (const esd::arith::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const esd::arith::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad argument: " << e.what() << '\n';
        return 64;
    }
    return 64;
}
