#include <catch_amalgamated.hpp>

#include <sstream>

#include "pfu/cli/app.hpp"
#include "support.hpp"

using namespace pfu;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PFU_DATA_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("parser reads the lambda coefficient") {
  Polynomial x = Polynomial::x();
  RationalFunction expected(Polynomial{Rational(32), Rational(-41), Rational(36)},
                            Polynomial{Rational(144)} * x * x * (x - Polynomial(Rational(1))).pow(2));
  CHECK(parse_ratfunc("(36*x^2 - 41*x + 32)/(144*x^2*(x-1)^2)") == expected);
  CHECK(parse_ratfunc("x") == RationalFunction::x());
}

TEST_CASE("parser precedence") {
  RationalFunction x = RationalFunction::x();
  CHECK(parse_ratfunc("-x^2") == -(x * x));
  CHECK(parse_ratfunc("1 - 2*x/3") == RationalFunction(1) - x * Rational(2, 3));
  CHECK(parse_ratfunc("2/3/x") == RationalFunction(Rational(2, 3)) / x);
  CHECK(parse_ratfunc("x^-2") == RationalFunction(1) / (x * x));
  CHECK(parse_ratfunc("  ( x + 1 ) ^ 2 ") == (x + RationalFunction(1)) * (x + RationalFunction(1)));
}

TEST_CASE("parser errors carry a position") {
  try {
    parse_ratfunc("1/(x");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_ratfunc("2x"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("x + y"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("x^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(""), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("1/(x-x)"), InputError);
}

TEST_CASE("printing and re-parsing round-trips") {
  testing::Gen g(41);
  for (int i = 0; i < 200; ++i) {
    RationalFunction f = g.ratfunc(g.integer(0, 4), g.integer(0, 4));
    INFO(to_string(f));
    CHECK(parse_ratfunc(to_string(f, "x")) == f);
    CHECK(parse_ratfunc(to_string(f, "s"), 's') == f);
  }
}

TEST_CASE("ODE files") {
  auto lambda = cli::load_ode(data("lambda.ode"));
  CHECK(lambda.var == 's');
  CHECK(lambda.op == std::get<LinearODE>(load_fixture("lambda").payload));
  CHECK(cli::load_ode(data("family_e_pf.ode")).op == std::get<LinearODE>(load_fixture("family-E-pf").payload));
  CHECK(cli::load_ode("fixture:lambda").op == lambda.op);

  CHECK_THROWS_AS(cli::parse_ode("var: x\nP1: 1\n"), InputError);
  CHECK_THROWS_AS(cli::parse_ode("order: 2\nP1: 1/x\n"), InputError);
  CHECK_THROWS_AS(cli::parse_ode("order: 1\nP1: 1\nP2: 1\n"), InputError);
  CHECK_THROWS_AS(cli::parse_ode("order: 1\ncoef: 1\n"), InputError);
  CHECK_THROWS_AS(cli::parse_ode("var: t\norder: 1\nP1: 1/x\n"), InputError);
  CHECK_THROWS_AS(cli::load_ode("fixture:family-E"), InputError);
  CHECK_THROWS_AS(cli::load_ode("fixture:missing"), UnknownFixture);
}

TEST_CASE("signature files") {
  auto sig = cli::load_signature(data("signature_n1.sig"));
  auto fix = std::get<FrickeOrbifoldData>(load_fixture("signature-n1").payload);
  CHECK(sig.data.level() == 1);
  CHECK(sig.data.signature() == fix.signature());
  CHECK_THROWS_AS(cli::parse_signature("n: 2\nelliptic: 0 2\ncusp: 0\n"), SignatureValueCollision);
  CHECK_THROWS_AS(cli::parse_signature("n: 2\nelliptic: 0 5\n"), InputError);
  CHECK_THROWS_AS(cli::parse_signature("elliptic: 0 2\n"), InputError);
  CHECK_THROWS_AS(cli::parse_signature("n: 1\ncusp: x\n"), InputError);
}

TEST_CASE("elliptic verdict for family E") {
  auto r = run_cli({"elliptic", "--g2", "27*s/(s-1)", "--g3", "27*s/(s-1)"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "  - location: 0\n    fiber: II\n  - location: 1\n    fiber: III*\n  - location: inf\n    fiber: I1\n"));
  CHECK(contains(r.out, "verdict: MODULAR\n"));
  CHECK(run_cli({"elliptic", "--model", "fixture:family-E"}).out == r.out);
}

TEST_CASE("elliptic negative control") {
  auto r = run_cli({"elliptic", "--g2", "27*z^2/(z^2-1)", "--g3", "27*z^2/(z^2-1)"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "J: z^2\n"));
  CHECK(contains(r.out, "verdict: NOT MODULAR\n"));
}

TEST_CASE("mirror map output") {
  auto literal = run_cli({"mirror-map", "--ode", "fixture:family-E-pf", "--point", "inf", "--terms", "4"});
  REQUIRE(literal.code == 0);
  CHECK(contains(literal.out, "series: q - 31/72*q^2 + 9907/82944*q^3 - 2193143/80621568*q^4 + O(q^5)\n"));

  auto scaled = run_cli({"mirror-map", "--ode", data("family_e_pf.ode"), "--point", "inf", "--terms", "4", "--scale",
                         "1728", "--json"});
  REQUIRE(scaled.code == 0);
  auto j = nlohmann::json::parse(scaled.out);
  CHECK(j["series"] == "q - 744*q^2 + 356652*q^3 - 140361152*q^4 + O(q^5)");
  CHECK(j["coordinate"] == "s = 1/1728/t");

  CHECK(run_cli({"mirror-map", "--ode", "fixture:lambda", "--point", "0", "--terms", "3"}).code == 1);
}

TEST_CASE("sqrt of a non-square is a verdict") {
  auto r = run_cli({"sqrt", "--ode", data("sym_nonsquare.ode"), "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "NotSymmetricSquare");
  CHECK_FALSE(j.contains("operator"));
}

TEST_CASE("sym2 then sqrt returns the normal form") {
  auto sq = run_cli({"sym2", "--ode", "fixture:lambda"});
  REQUIRE(sq.code == 0);
  CHECK(contains(sq.out, "order: 3\n"));
  // Feed the printed operator back through an ODE file.
  std::string text = "var: s\n";
  std::istringstream in(sq.out);
  std::string line;
  while (std::getline(in, line)) {
    auto t = cli::detail::trim(line);
    if (t.rfind("order:", 0) == 0 || (t.size() > 1 && t[0] == 'P' && std::isdigit(static_cast<unsigned char>(t[1]))))
      text += t + "\n";
  }
  auto cube = cli::parse_ode(text);
  CHECK(sym2_root(cube.op) == std::get<LinearODE>(load_fixture("lambda").payload));
}

TEST_CASE("uniformize applies the normal form") {
  auto r = run_cli({"uniformize", "--ode", data("hypergeometric.ode"), "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "UNIFORMIZING");
  CHECK(j["signature"] == "{(0, 2), (1, 3), (inf, inf)}");
  CHECK(j.contains("note"));
  REQUIRE(j["points"].size() == 3);
  CHECK(j["points"][2]["classification"] == "LOGARITHMIC");

  auto lambda = nlohmann::json::parse(run_cli({"uniformize", "--ode", "fixture:lambda", "--json"}).out);
  CHECK(lambda["signature"] == "{(0, 3), (1, 2), (inf, inf)}");
  CHECK_FALSE(lambda.contains("note"));
}

TEST_CASE("pullback report") {
  auto r = run_cli({"pullback", "--ode", "fixture:lambda", "--map", "z^2", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["points"].size() == 4);
  CHECK(j["points"][1]["location"] == "0");
  CHECK(j["points"][1]["ramification"] == 2);
  CHECK(j["points"][1]["difference"] == "2/3");
  CHECK(j["normal_form"]["coefficients"]["P1"] == "0");
  CHECK(run_cli({"pullback", "--ode", "fixture:lambda", "--map", "5"}).code == 1);
}

TEST_CASE("k3-check") {
  auto ok = run_cli({"k3-check", "--hn", "x^3", "--signature", "fixture:signature-n1"});
  REQUIRE(ok.code == 0);
  CHECK(contains(ok.out, "verdict: MODULAR\n"));

  // r = 3 over an order-2 point.
  auto bad = run_cli({"k3-check", "--hn", "1 + x^3", "--signature", data("signature_n1.sig"), "--json"});
  REQUIRE(bad.code == 0);
  auto j = nlohmann::json::parse(bad.out);
  CHECK(j["verdict"] == "NOT MODULAR");
  bool found = false;
  for (const auto& p : j["points"])
    if (p["classification"] == "INADMISSIBLE") found = p["order"] == "2" && p["multiplicity"] == 3;
  CHECK(found);
}

TEST_CASE("analyze report fields") {
  auto j = nlohmann::json::parse(run_cli({"analyze", "--ode", "fixture:lambda", "--json"}).out);
  CHECK(j["command"] == "analyze");
  CHECK(j["verdict"] == "FUCHSIAN");
  REQUIRE(j["points"].size() == 3);
  CHECK(j["points"][0]["exponents"] == nlohmann::json::array({"1/3", "2/3"}));
  CHECK(j["points"][1]["classification"] == "ORBIFOLD(2)");
}

TEST_CASE("reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "--ode", data("hypergeometric.ode")},
           {"elliptic", "--model", "fixture:family-E", "--json"},
           {"k3-check", "--hn", "x^2*(x-4)", "--signature", "fixture:signature-n1"}}) {
    auto a = run_cli(args), b = run_cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"analyze"}).code == 1);
  CHECK(run_cli({"analyze", "--ode", data("missing.ode")}).code == 1);
  CHECK(run_cli({"elliptic", "--g2", "1/(s", "--g3", "s"}).code == 1);
  CHECK(run_cli({"elliptic", "--g2", "s", "--g3", "s", "--model", "fixture:family-E"}).code == 1);
  CHECK(run_cli({"pnf", "--ode", "fixture:lambda", "--help"}).code == 0);
  auto err = run_cli({"elliptic", "--g2", "1/(s", "--g3", "s"}).err;
  CHECK(contains(err, "position 4"));
}
