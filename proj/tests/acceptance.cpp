// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if
// all pass. Counts and time limits are fixed below.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "checks.hpp"
#include "cli.hpp"
#include "wz/expr.hpp"

using namespace wz;

namespace {

const Rational q23{Rational(2) / Rational(3)};

constexpr int fuzz_pairs = 500;
constexpr int summable_inputs = 200;
constexpr int reduction_inputs = 500;
constexpr int residue_inputs = 200;
constexpr int factor_products = 200;
constexpr int roundtrip_exprs = 500;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

RatFunc R(const char* s) { return parse_ratfunc(s); }

std::optional<Rational> q_for(OpKind kind) {
    if (kind == OpKind::q_shift) return q23;
    return std::nullopt;
}

struct NamedCase {
    std::string name;
    OperatorCase op;
};

std::vector<NamedCase> fuzz_cases() {
    return {{"diff", {OpKind::derivation, OpKind::derivation}},
            {"shift", {OpKind::shift, OpKind::shift}},
            {"qshift", {OpKind::q_shift, OpKind::q_shift, q23}},
            {"shift-qshift", {OpKind::shift, OpKind::q_shift, q23}},
            {"mixed-sx", {OpKind::shift, OpKind::derivation}},
            {"mixed-qx", {OpKind::q_shift, OpKind::derivation, q23}}};
}

// corpus shared by the generate and round-trip criteria
std::vector<std::pair<std::string, WZPair>>& corpus() {
    static std::vector<std::pair<std::string, WZPair>> pairs;
    return pairs;
}

Outcome integrable_fraction() {
    Outcome o;
    RatFunc f = R("(1-x^2)/(x^2+1)^2");
    auto rep = residues(f, Var::x, ResidueKind::pseudo);
    if (rep.entries.size() != 1 || *rep.entries[0].place != parse_ratfunc("x^2+1").num() ||
        rep.entries[0].residue != RatFunc(-1))
        o.fail("pseudo-residue at x^2+1 is not -1");
    auto d = decide_telescoping(f, Var::x, OpKind::derivation);
    if (!d.telescopes || !d.witness) return o.fail("not integrable"), o;
    if (d.witness->derivative(Var::x) != f) o.fail("witness derivative differs");
    if (!(*d.witness - R("x/(x^2+1)")).is_constant()) o.fail("witness differs by a non-constant");
    o.detail = o.pass ? "residue -1, witness " + to_string(*d.witness) : o.detail;
    return o;
}

Outcome linear_cyclic_pair() {
    Outcome o;
    const OperatorCase c(OpKind::shift, OpKind::shift);
    WZPair p{R("1/(2*x+3*y)+1/(2*x+2+3*y)+1/(2*x+4+3*y)"), R("1/(2*x+3*y)+1/(2*x+3*y+3)"), c};
    if (!verify_wz(p)) return o.fail("pair does not verify"), o;
    Decomposition d = decompose_shift(p);
    if (d.cyclic.size() != 1) return o.fail(std::to_string(d.cyclic.size()) + " cyclic components"), o;
    const auto& cc = d.cyclic[0];
    if (cc.s != 3 || cc.t != 2) o.fail("(s, t) = (" + std::to_string(cc.s) + ", " + std::to_string(cc.t) + ")");
    if (cc.h != R("1/(2*x+3*y)")) o.fail("h = " + to_string(cc.h));
    if (!d.exact_h.is_zero()) o.fail("nonzero exact part");
    WZPair r = reconstruct(d);
    if (r.f != p.f || r.g != p.g) o.fail("reconstruction differs");
    if (o.pass) o.detail = "h = " + to_string(cc.h) + ", (s, t) = (3, 2)";
    return o;
}

Outcome generate_verify() {
    Outcome o;
    corpus().clear();
    for (const auto& [name, c] : fuzz_cases()) {
        for (int i = 0; i < fuzz_pairs; ++i) {
            WZPair p = random_pair(static_cast<std::uint64_t>(i), c);
            if (!verify_wz(p)) o.fail(name + " seed " + std::to_string(i) + " does not verify");
            corpus().emplace_back(name, std::move(p));
        }
    }
    if (o.pass) o.detail = std::to_string(corpus().size()) + " pairs verified";
    return o;
}

Outcome decompose_reconstruct() {
    Outcome o;
    int n = 0;
    for (const auto& [name, p] : corpus()) {
        try {
            WZPair r = reconstruct(decompose(p));
            if (r.f != p.f || r.g != p.g) o.fail(name + ": reconstruction differs from " + to_string(p.f));
        } catch (const Error& e) {
            o.fail(name + ": " + e.what());
        }
        ++n;
    }
    if (n == 0) o.fail("empty corpus");
    if (o.pass) o.detail = std::to_string(n) + " exact round trips";
    return o;
}

// an irreducible b depending on v, outside the orbits of every factor of den
BiPoly fresh_base(oracle::Rng& rng, const BiPoly& den, Var v, OpKind kind) {
    const auto factors = factor_irreducible(den).factors;
    while (true) {
        BiPoly b = rng.poly(static_cast<int>(rng.range(1, 2)), 9, 2).unit_normal();
        if (!b.depends_on(v)) continue;
        if (kind == OpKind::q_shift && divide_exact(b, v == Var::x ? BiPoly::x() : BiPoly::y())) continue;
        auto fb = factor_irreducible(b).factors;
        if (fb.size() != 1 || fb[0].second != 1) continue;
        bool fresh = true;
        for (const auto& [f, m] : factors)
            if (f.depends_on(v) && (kind == OpKind::derivation ? f == b : oracle::same_orbit(f, b, v, kind, q23)))
                fresh = false;
        if (fresh) return b;
    }
}

Outcome summability() {
    Outcome o;
    oracle::Rng rng(5);
    for (OpKind kind : {OpKind::derivation, OpKind::shift, OpKind::q_shift}) {
        const std::string k(to_string(kind));
        for (int i = 0; i < summable_inputs; ++i) {
            const Var v = rng.coin() ? Var::x : Var::y;
            RatFunc g = rng.ratfunc(3, 9);
            RatFunc f = check::delta(g, v, kind, q23);
            auto d = decide_telescoping(f, v, kind, q_for(kind));
            if (!d.telescopes || !d.witness || check::delta(*d.witness, v, kind, q23) != f) {
                o.fail(k + ": summable input rejected: " + to_string(f));
                continue;
            }
            BiPoly b = fresh_base(rng, f.den(), v, kind);
            RatFunc h = f + RatFunc(BiPoly(1), b);
            if (decide_telescoping(h, v, kind, q_for(kind)).telescopes) {
                o.fail(k + ": perturbed input accepted: " + to_string(h));
                continue;
            }
            ResidueReport rep;
            if (kind == OpKind::derivation) {
                rep = residues(hermite_reduce(h, v).remainder.value(), v, ResidueKind::differential);
            } else {
                rep = residues(h, v, kind == OpKind::shift ? ResidueKind::shift : ResidueKind::q_shift, q_for(kind));
            }
            bool found = false;
            for (const auto& e : rep.entries) {
                if (!e.place || e.residue.is_zero()) continue;
                if (kind == OpKind::derivation ? *e.place == b : oracle::same_orbit(*e.place, b, v, kind, q23))
                    found = true;
            }
            if (!found) o.fail(k + ": no residue at the orbit of " + to_string(b));
        }
    }
    if (o.pass) o.detail = std::to_string(3 * summable_inputs) + " summable and perturbed inputs";
    return o;
}

Outcome reduction_invariants() {
    Outcome o;
    oracle::Rng rng(6);
    for (OpKind kind : {OpKind::derivation, OpKind::shift, OpKind::q_shift}) {
        const std::string k(to_string(kind));
        for (int i = 0; i < reduction_inputs; ++i) {
            const Var v = rng.coin() ? Var::x : Var::y;
            RatFunc f = rng.ratfunc(4, 9);
            auto r = reduce(f, v, kind, q_for(kind));
            if (f - check::delta(r.certificate, v, kind, q23) - r.remainder.value() != RatFunc())
                o.fail(k + ": identity fails for " + to_string(f));
            if (auto why = check::canonical_violation(r.remainder, v, kind, q23)) o.fail(k + ": " + *why);
        }
    }
    if (o.pass) o.detail = std::to_string(3 * reduction_inputs) + " reductions";
    return o;
}

bool same_report(const ResidueReport& a, const ResidueReport& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const auto& s = a.entries[i];
        const auto& t = b.entries[i];
        if (s.place != t.place || s.multiplicity != t.multiplicity || s.residue != t.residue) return false;
    }
    return true;
}

Outcome residue_invariance() {
    Outcome o;
    oracle::Rng rng(7);
    for (OpKind kind : {OpKind::derivation, OpKind::shift, OpKind::q_shift}) {
        const std::string k(to_string(kind));
        for (int i = 0; i < residue_inputs; ++i) {
            const Var v = rng.coin() ? Var::x : Var::y;
            RatFunc f = rng.ratfunc(3, 9), g = rng.ratfunc(2, 9);
            RatFunc h = f + check::delta(g, v, kind, q23);
            bool same;
            if (kind == OpKind::derivation) {
                // differential residues live on the squarefree Hermite remainder
                same = same_report(residues(hermite_reduce(f, v).remainder.value(), v, ResidueKind::differential),
                                   residues(hermite_reduce(h, v).remainder.value(), v, ResidueKind::differential));
            } else {
                ResidueKind rk = kind == OpKind::shift ? ResidueKind::shift : ResidueKind::q_shift;
                same = same_report(residues(f, v, rk, q_for(kind)), residues(h, v, rk, q_for(kind)));
            }
            if (!same) o.fail(k + ": residues change for " + to_string(f));
        }
    }
    if (o.pass) o.detail = std::to_string(3 * residue_inputs) + " pairs";
    return o;
}

Outcome factorization_oracle() {
    Outcome o;
    oracle::Rng rng(8);
    for (int i = 0; i < factor_products; ++i) {
        BiPoly p(rng.nonzero(5));
        int budget = 12;
        while (budget > 0) {
            int d = static_cast<int>(rng.range(1, std::min(3, budget)));
            BiPoly f = rng.poly(d, 7, 2);
            if (oracle::kronecker_divisor(f)) continue;
            int m = d * 2 <= budget && rng.range(0, 3) == 0 ? 2 : 1;
            p *= pow(f, m);
            budget -= d * m;
        }
        Factorization f = factor_irreducible(p);
        if (f.expand() != p) o.fail("expansion differs for " + to_string(p));
        if (oracle::sorted_factors(f) != oracle::kronecker_factor(p)) o.fail("factors differ for " + to_string(p));
    }
    if (o.pass) o.detail = std::to_string(factor_products) + " products";
    return o;
}

Outcome cli_contract() {
    Outcome o;
    auto run = [](std::vector<std::string> args, std::string& out) {
        std::ostringstream os, es;
        std::istringstream in;
        int code = cli::run_command(args, os, es, in);
        out = os.str();
        return code;
    };
    std::string out;
    int code = run({"verify", "--case", "shift", "-f", "1/(2*x+3*y)+1/(2*x+2+3*y)+1/(2*x+4+3*y)", "-g",
                    "1/(2*x+3*y)+1/(2*x+3*y+3)"},
                   out);
    if (code != 0 || out != "verified: true\n") o.fail("verify example: exit " + std::to_string(code));
    code = run({"residues", "--var", "x", "--kind", "pseudo", "-f", "(1-x^2)/(x^2+1)^2"}, out);
    if (code != 0 || out != "kind: pseudo\nentry: (x^2+1, 1, -1)\n") o.fail("residues example: " + out);
    std::string again;
    code = run({"generate", "--case", "diff", "--kind", "random", "--seed", "7"}, out);
    int code2 = run({"generate", "--case", "diff", "--kind", "random", "--seed", "7"}, again);
    if (code != 0 || code2 != 0 || out != again || out.empty()) o.fail("generate is not deterministic");

    oracle::Rng rng(9);
    for (int i = 0; i < roundtrip_exprs; ++i) {
        RatFunc v = rng.ratfunc(4, 9).scaled(rng.scalar(9));
        if (eval_expr(*parse_expr(to_string(v))) != v) o.fail("round trip fails for " + to_string(v));
    }
    if (o.pass) o.detail = "3 command examples, " + std::to_string(roundtrip_exprs) + " round trips";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 means no time limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "integrable fraction with nonzero pseudo-residue", 1.0, integrable_fraction},
        {2, "cyclic pair over 2x+3y", 1.0, linear_cyclic_pair},
        {3, "generate and verify fuzz", 600.0, generate_verify},
        {4, "decompose and reconstruct round trip", 0.0, decompose_reconstruct},
        {5, "summability criterion cross-check", 0.0, summability},
        {6, "reduction invariants", 0.0, reduction_invariants},
        {7, "residue invariance", 0.0, residue_invariance},
        {8, "factorization oracle", 0.0, factorization_oracle},
        {9, "cli contract and parser round trip", 0.0, cli_contract},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds)
            o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        if (!o.pass) ++failures;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << secs << " s";
        if (c.limit_seconds > 0) line << ", limit " << c.limit_seconds << " s";
        line << ")";
        if (!o.detail.empty()) line << " - " << o.detail;
        std::cout << line.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
