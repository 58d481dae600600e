#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wz/expr.hpp"
#include "wz/wz.hpp"

namespace wz::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, std::pair<OpKind, OpKind>>& case_table() {
    static const std::map<std::string, std::pair<OpKind, OpKind>> t = {
        {"diff", {OpKind::derivation, OpKind::derivation}},
        {"shift", {OpKind::shift, OpKind::shift}},
        {"qshift", {OpKind::q_shift, OpKind::q_shift}},
        {"shift-qshift", {OpKind::shift, OpKind::q_shift}},
        {"qshift-shift", {OpKind::q_shift, OpKind::shift}},
        {"mixed-sx", {OpKind::shift, OpKind::derivation}},
        {"mixed-qx", {OpKind::q_shift, OpKind::derivation}},
        {"mixed-sy", {OpKind::derivation, OpKind::shift}},
        {"mixed-qy", {OpKind::derivation, OpKind::q_shift}},
    };
    return t;
}

std::vector<std::string> case_names() {
    std::vector<std::string> v;
    for (const auto& [k, _] : case_table()) v.push_back(k);
    return v;
}

// Only reduced literals such as 2/3 or -5 are accepted.
std::optional<Rational> parse_q(const std::string& text) {
    if (text.empty()) return std::nullopt;
    static const std::regex lit(R"(-?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(text, lit)) throw UsageError("--q expects a rational literal such as 2/3, got '" + text + "'");
    auto slash = text.find('/');
    if (slash != std::string::npos && text.find_first_not_of('0', slash + 1) == std::string::npos)
        throw UsageError("--q has a zero denominator");
    Rational q = Rational::parse(text);
    if (q.to_string() != text) throw UsageError("--q must be a reduced literal (" + q.to_string() + "), got '" + text + "'");
    return q;
}

OperatorCase make_case(const std::string& name, const std::optional<Rational>& q) {
    auto [dx, dy] = case_table().at(name);
    return OperatorCase(dx, dy, q);
}

std::string case_name(const OperatorCase& c) {
    for (const auto& [k, v] : case_table())
        if (v.first == c.dx() && v.second == c.dy()) return k;
    return "unknown";
}

Limits limits_from_env() {
    Limits l;
    if (const char* v = std::getenv("WZ_MAX_DEGREE")) {
        char* end = nullptr;
        long d = std::strtol(v, &end, 10);
        if (end == v || *end != '\0' || d < 1 || d > 100000) throw UsageError("WZ_MAX_DEGREE must be a positive integer");
        l.max_degree = static_cast<int>(d);
    }
    return l;
}

RatFunc read_expr(const std::string& s) { return parse_ratfunc(s); }

BiPoly read_poly(const std::string& s) {
    RatFunc f = read_expr(s);
    if (!f.is_polynomial()) throw UsageError("expected a polynomial, got '" + s + "'");
    return f.num().scaled(f.den().coeff(0, 0).inverse());
}

UPoly read_minpoly(std::string s) {
    for (auto& ch : s) {
        if (ch == 'x' || ch == 'y') throw UsageError("minpoly must be a polynomial in t");
        if (ch == 't') ch = 'x';
    }
    return read_poly(s).as_univariate(Var::x);
}

std::string show_upoly_t(const UPoly& p) { return to_string(p, 't'); }

// b(t) = sum_k t^k b[k] as one polynomial in x, y, t.
std::string show_template(const std::vector<BiPoly>& b) {
    if (b.size() == 1) return to_string(b[0]);
    std::string out;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k].is_zero()) continue;
        std::string tk = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        std::string part;
        if (k == 0) {
            part = to_string(b[k]);
        } else if (b[k] == BiPoly(1)) {
            part = tk;
        } else if (b[k] == BiPoly(-1)) {
            part = "-" + tk;
        } else if (b[k].term_count() == 1) {
            part = to_string(b[k]) + "*" + tk;
        } else {
            part = tk + "*(" + to_string(b[k]) + ")";
        }
        if (!out.empty() && part[0] != '-') out += "+";
        out += part;
    }
    return out.empty() ? "0" : out;
}

std::string show_latex_template(const std::vector<BiPoly>& b) {
    std::string out;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k].is_zero()) continue;
        std::string part = "(" + to_latex(b[k]) + ")";
        if (k == 1) part += " t";
        if (k > 1) part += " t^{" + std::to_string(k) + "}";
        if (!out.empty()) out += " + ";
        out += part;
    }
    return out.empty() ? "0" : out;
}

class Printer {
public:
    explicit Printer(std::string format) : format_(std::move(format)) {}

    bool json_mode() const { return format_ == "json"; }
    bool latex() const { return format_ == "latex"; }
    std::string expr(const RatFunc& f) const { return latex() ? to_latex(f) : to_string(f); }
    std::string poly(const BiPoly& p) const { return latex() ? to_latex(p) : to_string(p); }

    // text and latex: "key: value" lines
    void line(const std::string& key, const std::string& value) {
        if (latex()) {
            body_ << "\\text{" << key << "}: " << value << " \\\\\n";
        } else {
            body_ << key << ": " << value << "\n";
        }
    }

    void emit(std::ostream& out, const json& doc) const {
        if (json_mode()) {
            out << doc.dump(2) << "\n";
        } else {
            out << body_.str();
        }
    }

private:
    std::string format_;
    std::ostringstream body_;
};

json q_json(const OperatorCase& c) { return c.q() ? json(c.q()->to_string()) : json(nullptr); }

json pair_doc(const std::string& command, const WZPair& p) {
    json doc;
    doc["command"] = command;
    doc["case"] = case_name(p.op);
    doc["q"] = q_json(p.op);
    doc["f"] = to_string(p.f);
    doc["g"] = to_string(p.g);
    return doc;
}

json decomposition_json(const Decomposition& d) {
    json j;
    j["exact_h"] = to_string(d.exact_h);
    j["logder"] = json::array();
    for (const auto& l : d.logder) {
        json e;
        e["minpoly"] = show_upoly_t(l.minpoly);
        if (l.is_rational()) e["c"] = l.constant().to_string();
        e["b"] = json::array();
        for (const auto& p : l.b) e["b"].push_back(to_string(p));
        j["logder"].push_back(e);
    }
    j["cyclic"] = json::array();
    for (const auto& c : d.cyclic) j["cyclic"].push_back({{"h", to_string(c.h)}, {"s", c.s}, {"t", c.t}});
    j["mixed_u"] = to_string(d.mixed_u);
    j["mixed_v"] = to_string(d.mixed_v);
    return j;
}

Decomposition decomposition_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("case") || !doc.contains("decomposition"))
        throw UsageError("input document needs 'case' and 'decomposition'");
    std::optional<Rational> q;
    if (doc.contains("q") && !doc["q"].is_null()) q = parse_q(doc["q"].get<std::string>());
    const std::string name = doc["case"].get<std::string>();
    if (!case_table().count(name)) throw UsageError("unknown case '" + name + "'");
    const json& j = doc["decomposition"];
    Decomposition d{make_case(name, q), read_expr(j.at("exact_h").get<std::string>()), {}, {}, {}, {}};
    for (const auto& e : j.at("logder")) {
        LogDerComponent l;
        l.minpoly = read_minpoly(e.at("minpoly").get<std::string>());
        for (const auto& b : e.at("b")) l.b.push_back(read_poly(b.get<std::string>()));
        d.logder.push_back(std::move(l));
    }
    for (const auto& e : j.at("cyclic"))
        d.cyclic.push_back({read_expr(e.at("h").get<std::string>()), e.at("s").get<long>(), e.at("t").get<long>()});
    d.mixed_u = read_expr(j.at("mixed_u").get<std::string>());
    d.mixed_v = read_expr(j.at("mixed_v").get<std::string>());
    return d;
}

void print_pair(Printer& pr, const WZPair& p) {
    pr.line("case", case_name(p.op));
    if (p.op.q()) pr.line("q", p.op.q()->to_string());
    pr.line("f", pr.expr(p.f));
    pr.line("g", pr.expr(p.g));
}

int cmd_verify(Printer& pr, std::ostream& out, const WZPair& p) {
    const bool ok = verify_wz(p);
    json doc = pair_doc("verify", p);
    doc["verified"] = ok;
    pr.line("verified", ok ? "true" : "false");
    pr.emit(out, doc);
    return ok ? ExitCode::ok : ExitCode::not_wz;
}

int cmd_decompose(Printer& pr, std::ostream& out, const WZPair& p, const Limits& limits) {
    Decomposition d = decompose(p, limits);
    json doc = pair_doc("decompose", p);
    doc["decomposition"] = decomposition_json(d);
    pr.line("case", case_name(p.op));
    pr.line("exact_h", pr.expr(d.exact_h));
    for (const auto& l : d.logder) {
        if (l.is_rational()) {
            pr.line("logder", "c = " + (pr.latex() ? to_latex(RatFunc(l.constant())) : l.constant().to_string()) +
                                  ", b = " + pr.poly(l.b[0]));
        } else {
            pr.line("logder", "minpoly = " + show_upoly_t(l.minpoly) +
                                  ", b = " + (pr.latex() ? show_latex_template(l.b) : show_template(l.b)));
        }
    }
    for (const auto& c : d.cyclic)
        pr.line("cyclic", "h = " + pr.expr(c.h) + ", s = " + std::to_string(c.s) + ", t = " + std::to_string(c.t));
    if (p.op.is_automorphism(Var::x) != p.op.is_automorphism(Var::y)) {
        pr.line("mixed_u", pr.expr(d.mixed_u));
        pr.line("mixed_v", pr.expr(d.mixed_v));
    }
    pr.emit(out, doc);
    return ExitCode::ok;
}

Var read_var(const std::string& v) { return v == "x" ? Var::x : Var::y; }

int cmd_reduce(Printer& pr, std::ostream& out, const RatFunc& f, const std::string& var, const std::string& op,
               const std::optional<Rational>& q, const Limits& limits) {
    const Var v = read_var(var);
    ReductionResult r;
    if (op == "hermite") {
        r = hermite_reduce(f, v);
    } else if (op == "abramov") {
        r = abramov_reduce(f, v, limits);
    } else {
        if (!q) fail(ErrorKind::QInvalid, "qabramov requires --q");
        r = q_abramov_reduce(f, v, *q, limits);
    }
    json doc;
    doc["command"] = "reduce";
    doc["var"] = var;
    doc["op"] = op;
    doc["q"] = op == "qabramov" ? json(q->to_string()) : json(nullptr);
    doc["f"] = to_string(f);
    doc["certificate"] = to_string(r.certificate);
    json rem;
    rem["constant"] = to_string(r.remainder.constant_part);
    rem["terms"] = json::array();
    for (const auto& t : r.remainder.terms)
        rem["terms"].push_back({{"numerator", to_string(t.numerator)}, {"base", to_string(t.base)}, {"power", t.power}});
    rem["value"] = to_string(r.remainder.value());
    doc["remainder"] = rem;

    pr.line("certificate", pr.expr(r.certificate));
    if (op == "qabramov") pr.line("constant", pr.expr(r.remainder.constant_part));
    for (const auto& t : r.remainder.terms)
        pr.line("term", "numerator = " + pr.expr(t.numerator) + ", base = " + pr.poly(t.base) +
                            ", power = " + std::to_string(t.power));
    pr.line("remainder", pr.expr(r.remainder.value()));
    pr.emit(out, doc);
    return ExitCode::ok;
}

int cmd_residues(Printer& pr, std::ostream& out, const RatFunc& f, const std::string& var, const std::string& kind,
                 const std::optional<Rational>& q, const Limits& limits) {
    static const std::map<std::string, ResidueKind> kinds = {{"diff", ResidueKind::differential},
                                                             {"pseudo", ResidueKind::pseudo},
                                                             {"shift", ResidueKind::shift},
                                                             {"qshift", ResidueKind::q_shift}};
    ResidueReport rep = residues(f, read_var(var), kinds.at(kind), kind == "qshift" ? q : std::nullopt, limits);
    json doc;
    doc["command"] = "residues";
    doc["var"] = var;
    doc["kind"] = kind;
    doc["q"] = kind == "qshift" && q ? json(q->to_string()) : json(nullptr);
    doc["f"] = to_string(f);
    doc["entries"] = json::array();
    pr.line("kind", kind);
    for (const auto& e : rep.entries) {
        doc["entries"].push_back({{"place", e.place ? json(to_string(*e.place)) : json(nullptr)},
                                  {"multiplicity", e.multiplicity},
                                  {"residue", to_string(e.residue)}});
        pr.line("entry", "(" + (e.place ? pr.poly(*e.place) : std::string("infinity")) + ", " +
                             std::to_string(e.multiplicity) + ", " + pr.expr(e.residue) + ")");
    }
    pr.emit(out, doc);
    return ExitCode::ok;
}

int cmd_generate(Printer& pr, std::ostream& out, const OperatorCase& c, const std::string& kind, std::uint64_t seed,
                 int max_degree, int height) {
    if (max_degree < 1 || height < 1) throw UsageError("--max-degree and --height must be positive");
    SizeParams size;
    size.max_degree = max_degree;
    size.height = height;
    const bool ax = c.is_automorphism(Var::x), ay = c.is_automorphism(Var::y);
    if (kind == "exact") {
        size.counts = {0, 0, 0};
    } else if (kind == "logder") {
        if (ax || ay) fail(ErrorKind::UnsupportedOperator, "log-derivative pairs need the diff case");
        size.exact = false;
        size.counts = {1, 0, 0};
    } else if (kind == "cyclic") {
        if (!ax || !ay) fail(ErrorKind::UnsupportedOperator, "cyclic pairs need automorphisms in x and y");
        size.exact = false;
        size.counts = {0, 1, 0};
    }
    WZPair p = random_pair(seed, c, size);
    json doc = pair_doc("generate", p);
    doc["kind"] = kind;
    doc["seed"] = seed;
    doc["verified"] = verify_wz(p);
    print_pair(pr, p);
    pr.emit(out, doc);
    return ExitCode::ok;
}

int cmd_reconstruct(Printer& pr, std::ostream& out, std::istream& in, const std::string& input) {
    std::string text;
    if (input.empty() || input == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream file(input);
        if (!file) throw UsageError("cannot read " + input);
        std::ostringstream ss;
        ss << file.rdbuf();
        text = ss.str();
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseFailure(0, {"json document"}, e.what());
    }
    auto read = [&] {
        try {
            return decomposition_from_json(doc);
        } catch (const json::exception& e) {
            throw UsageError(std::string("malformed decomposition: ") + e.what());
        }
    };
    WZPair p = reconstruct(read());
    json res = pair_doc("reconstruct", p);
    res["verified"] = verify_wz(p);
    print_pair(pr, p);
    pr.emit(out, res);
    return ExitCode::ok;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Exact verification, decomposition and generation of rational WZ-pairs", "wz"};
    app.require_subcommand(1);
    std::string format = "text", case_str, q_str, f_str, g_str, var = "y", op, kind, input;
    std::uint64_t seed = 0;
    int max_degree = 3, height = 9;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
    };
    auto add_case = [&](CLI::App* sub) {
        sub->add_option("--case", case_str, "operator case")->required()->check(CLI::IsMember(case_names()));
        sub->add_option("--q", q_str, "q as a reduced rational literal");
    };

    CLI::App* verify = app.add_subcommand("verify", "check d_x(f) = d_y(g)");
    add_case(verify);
    verify->add_option("-f", f_str)->required();
    verify->add_option("-g", g_str)->required();
    add_format(verify);

    CLI::App* decomp = app.add_subcommand("decompose", "split a WZ-pair into exact and special parts");
    add_case(decomp);
    decomp->add_option("-f", f_str)->required();
    decomp->add_option("-g", g_str)->required();
    add_format(decomp);

    CLI::App* red = app.add_subcommand("reduce", "Hermite or (q-)Abramov reduction");
    red->add_option("--var", var)->required()->check(CLI::IsMember({"x", "y"}));
    red->add_option("--op", op)->required()->check(CLI::IsMember({"hermite", "abramov", "qabramov"}));
    red->add_option("--q", q_str);
    red->add_option("-f", f_str)->required();
    add_format(red);

    CLI::App* res = app.add_subcommand("residues", "residues of f in one variable");
    res->add_option("--var", var)->required()->check(CLI::IsMember({"x", "y"}));
    res->add_option("--kind", kind)->required()->check(CLI::IsMember({"diff", "pseudo", "shift", "qshift"}));
    res->add_option("--q", q_str);
    res->add_option("-f", f_str)->required();
    add_format(res);

    CLI::App* gen = app.add_subcommand("generate", "random WZ-pairs");
    add_case(gen);
    gen->add_option("--kind", kind)->required()->check(CLI::IsMember({"exact", "logder", "cyclic", "random"}));
    gen->add_option("--seed", seed)->required();
    gen->add_option("--max-degree", max_degree);
    gen->add_option("--height", height);
    add_format(gen);

    CLI::App* rec = app.add_subcommand("reconstruct", "rebuild a pair from a json decomposition");
    rec->group("");
    rec->add_option("--input", input, "file, or - for stdin");
    add_format(rec);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitCode::usage;
    }

    Printer pr(format);
    try {
        const Limits limits = limits_from_env();
        const std::optional<Rational> q = parse_q(q_str);
        if (*verify || *decomp) {
            OperatorCase c = make_case(case_str, q);
            WZPair p{read_expr(f_str), read_expr(g_str), c};
            if (*verify) return cmd_verify(pr, out, p);
            return cmd_decompose(pr, out, p, limits);
        }
        if (*red) return cmd_reduce(pr, out, read_expr(f_str), var, op, q, limits);
        if (*res) return cmd_residues(pr, out, read_expr(f_str), var, kind, q, limits);
        if (*gen) return cmd_generate(pr, out, make_case(case_str, q), kind, seed, max_degree, height);
        if (*rec) return cmd_reconstruct(pr, out, in, input);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitCode::usage;
    } catch (const ParseFailure& e) {
        err << "parse error " << e.what() << "\n";
        return ExitCode::parse_error;
    } catch (const Error& e) {
        err << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::NotAWZPair: return ExitCode::not_wz;
            case ErrorKind::ParseError:
            case ErrorKind::DivisionByZero: return ExitCode::parse_error;
            default: return ExitCode::structure;
        }
    }
    err << "usage error: no command\n";
    return ExitCode::usage;
}

}  // namespace wz::cli
