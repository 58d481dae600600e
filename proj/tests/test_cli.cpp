#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace wz;
using namespace wz::test;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    int code = cli::run_command(args, out, err, in);
    return {code, out.str(), err.str()};
}

const char* cyclic_f = "1/(2*x+3*y)+1/(2*x+2+3*y)+1/(2*x+4+3*y)";
const char* cyclic_g = "1/(2*x+3*y)+1/(2*x+3*y+3)";

}  // namespace

TEST_CASE("verify prints the documented payload") {
    Run r = run({"verify", "--case", "shift", "-f", cyclic_f, "-g", cyclic_g});
    CHECK(r.code == 0);
    CHECK(r.out == "verified: true\n");
    r = run({"verify", "--case", "diff", "-f", "y", "-g", "y"});
    CHECK(r.code == 1);
    CHECK(r.out == "verified: false\n");
}

TEST_CASE("pseudo residues print the documented entry") {
    Run r = run({"residues", "--var", "x", "--kind", "pseudo", "-f", "(1-x^2)/(x^2+1)^2"});
    CHECK(r.code == 0);
    CHECK(r.out == "kind: pseudo\nentry: (x^2+1, 1, -1)\n");
}

TEST_CASE("generation is deterministic") {
    Run a = run({"generate", "--case", "diff", "--kind", "random", "--seed", "7"});
    Run b = run({"generate", "--case", "diff", "--kind", "random", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
    for (const char* fmt : {"json", "latex"}) {
        a = run({"generate", "--case", "qshift", "--q", "2/3", "--kind", "random", "--seed", "7", "--format", fmt});
        b = run({"generate", "--case", "qshift", "--q", "2/3", "--kind", "random", "--seed", "7", "--format", fmt});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("decompose text output") {
    Run r = run({"decompose", "--case", "shift", "-f", cyclic_f, "-g", cyclic_g});
    CHECK(r.code == 0);
    CHECK(r.out == "case: shift\nexact_h: 0\ncyclic: h = 1/(2*x+3*y), s = 3, t = 2\n");
}

TEST_CASE("exit codes") {
    CHECK(run({"decompose", "--case", "diff", "-f", "y", "-g", "y"}).code == 1);
    CHECK(run({"verify", "--case", "diff", "-f", "x+", "-g", "y"}).code == 2);
    CHECK(run({"verify", "--case", "diff", "-f", "1/0", "-g", "y"}).code == 2);
    CHECK(run({"verify", "--case", "qshift", "--q", "1", "-f", "y", "-g", "y"}).code == 3);
    CHECK(run({"verify", "--case", "qshift", "--q", "-1", "-f", "y", "-g", "y"}).code == 3);
    CHECK(run({"verify", "--case", "qshift", "--q", "4/6", "-f", "y", "-g", "y"}).code == 4);
    CHECK(run({"verify", "--case", "qshift", "-f", "y", "-g", "y"}).code == 3);
    CHECK(run({"verify", "--case", "nonsense", "-f", "y", "-g", "y"}).code == 4);
    CHECK(run({"frobnicate"}).code == 4);
    CHECK(run({"residues", "--var", "y", "--kind", "diff", "-f", "1/y^2"}).code == 3);
    CHECK(run({"reduce", "--var", "y", "--op", "qabramov", "--q", "0", "-f", "y"}).code == 3);
}

TEST_CASE("parse errors carry the offset") {
    Run r = run({"verify", "--case", "diff", "-f", "x+", "-g", "y"});
    CHECK(r.err.find("offset 2") != std::string::npos);
    try {
        parse_expr("x+");
        FAIL("parsed");
    } catch (const ParseFailure& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("expression evaluation examples") {
    CHECK(parse_ratfunc("x^2 - x^2").is_zero());
    CHECK(parse_ratfunc("(y^2-x^2)/(y-x)") == R("y+x"));
    CHECK(parse_ratfunc("(1-x^2)/(x^2+1)^2") == apply_delta(R("x/(x^2+1)"), Var::x, diff_case()));
    CHECK(parse_ratfunc("1/(2*x+3*y)").den() == P("x+3/2*y"));
    CHECK(parse_ratfunc("-x^2") == R("0-x^2"));
    CHECK(parse_ratfunc("x^-2") == R("1/x^2"));
    try {
        parse_ratfunc("1/0");
        FAIL("evaluated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("printed values parse back to the same value") {
    oracle::Rng rng(41);
    for (int i = 0; i < 500; ++i) {
        RatFunc v = rng.ratfunc(4, 9).scaled(rng.scalar(9));
        std::string text = to_string(v);
        CHECK(parse_ratfunc(text) == v);
        // the json printer embeds the same strings
        nlohmann::json j = text;
        CHECK(parse_ratfunc(nlohmann::json::parse(j.dump()).get<std::string>()) == v);
    }
}

TEST_CASE("json output round trips through reconstruct") {
    for (const auto& [name, c] : all_cases()) {
        CAPTURE(name);
        std::vector<std::string> q;
        if (c.q()) q = {"--q", "2/3"};
        std::vector<std::string> gen = {"generate", "--case", name, "--kind", "random", "--seed", "5", "--format", "json"};
        gen.insert(gen.end(), q.begin(), q.end());
        Run g = run(gen);
        REQUIRE(g.code == 0);
        auto doc = nlohmann::json::parse(g.out);
        std::vector<std::string> dec = {"decompose", "--case", name, "-f", doc["f"], "-g", doc["g"], "--format", "json"};
        dec.insert(dec.end(), q.begin(), q.end());
        Run d = run(dec);
        REQUIRE(d.code == 0);
        Run back = run({"reconstruct", "--format", "json"}, d.out);
        REQUIRE(back.code == 0);
        auto rec = nlohmann::json::parse(back.out);
        CHECK(parse_ratfunc(rec["f"].get<std::string>()) == parse_ratfunc(doc["f"].get<std::string>()));
        CHECK(parse_ratfunc(rec["g"].get<std::string>()) == parse_ratfunc(doc["g"].get<std::string>()));
        CHECK(rec["verified"] == true);
    }
}
