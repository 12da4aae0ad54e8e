#include <catch_amalgamated.hpp>

#include "pfu/cli/parser.hpp"
#include "pfu/elliptic/weierstrass.hpp"
#include "support.hpp"

using namespace pfu;

namespace {

RationalFunction F(const std::string& s) { return parse_ratfunc(s); }

const WeierstrassModel kFamilyE{F("27*s/(s-1)"), F("27*s/(s-1)")};
const WeierstrassModel kSimple{F("s"), F("s")};
const auto kZero = AlgebraicPoint::rational(0);
const auto kOne = AlgebraicPoint::rational(1);
const auto kInf = AlgebraicPoint::infinity();

/// Tate's table on minimal valuations (a, b, c) = (v g2, v g3, v Delta).
std::string neron_type(int a, int b, int c) {
  if (c == 0) return "I0";
  if (a == 0 && b == 0) return "I" + std::to_string(c);
  if (b == 1) return "II";
  if (a == 1) return "III";
  if (b == 2) return "IV";
  if (a == 2 && b == 3) return "I" + std::to_string(c - 6) + "*";
  if ((a == 2 && b >= 4) || (a >= 3 && b == 3)) return "I0*";
  if (b == 4) return "IV*";
  if (a == 3) return "III*";
  if (b == 5) return "II*";
  return "non-minimal";
}

int val0(const RationalFunction& f) { return f.is_zero() ? 1000 : f.valuation(Polynomial::x()); }

}  // namespace

TEST_CASE("discriminant and functional invariant") {
  CHECK(discriminant(kFamilyE) == F("19683*s^2/(s-1)^3"));
  CHECK(discriminant(kSimple) == F("s^2*(s-27)"));
  WeierstrassModel flat{F("s^2+1"), F("0")};
  CHECK(discriminant(flat) == F("(s^2+1)^3"));
  CHECK(delta_aux(flat).is_zero());
  CHECK(functional_invariant(kFamilyE) == F("s"));
  CHECK(functional_invariant(kSimple) == F("s/(s-27)"));
  CHECK(functional_invariant(flat) == F("1"));
  CHECK_THROWS_AS(discriminant(WeierstrassModel{F("3"), F("1")}), IdenticallySingular);
  CHECK_THROWS_AS(griffiths_pf(flat), ConstantJ);
}

TEST_CASE("Griffiths operator and the J-line pullback") {
  LinearODE lambda = lambda_operator();
  CHECK(lambda.coeff(2) == F("(36*s^2 - 41*s + 32)/(144*s^2*(s-1)^2)"));
  CHECK(pnf2(griffiths_pf(kFamilyE)) == lambda);
  CHECK(lambda_J(F("s")) == lambda);
  CHECK(pnf2(griffiths_pf(kSimple)) == lambda_J(F("s/(s-27)")));
  auto generic = analyze_point(lambda_J(F("s^2")), kZero);
  CHECK(generic.classification == PointType::Generic);
}

TEST_CASE("normal form of the Griffiths operator equals the J-line pullback", "[property][oracle]") {
  std::vector<WeierstrassModel> models{kFamilyE, kSimple, {F("s^2"), F("s^3 + 1")}, {F("s+1"), F("s^2")},
                                       {F("3*s^4 + s"), F("s^6 - 2")}, {F("1/(s-2)"), F("s/(s-2)^2")}};
  testing::Gen gen(307);
  for (const auto& w : models) {
    LinearODE base = pnf2(griffiths_pf(w));
    CHECK(base == lambda_J(functional_invariant(w)));
    for (int i = 0; i < 2; ++i) {
      RationalFunction u = gen.ratfunc(gen.integer(0, 2), gen.integer(0, 1), 4);
      if (u.is_zero()) continue;
      WeierstrassModel twisted{w.g2 * u.pow(4), w.g3 * u.pow(6)};
      CHECK(pnf2(griffiths_pf(twisted)) == base);
    }
  }
}

TEST_CASE("Kodaira types") {
  CHECK(kodaira_type(kFamilyE, kZero).str() == "II");
  CHECK(kodaira_type(kFamilyE, kOne).str() == "III*");
  CHECK(kodaira_type(kFamilyE, kInf).str() == "I1");
  CHECK(kodaira_type(kSimple, AlgebraicPoint::rational(27)).str() == "I1");
  CHECK(kodaira_type(kSimple, kZero).str() == "II");
  auto c = census(kFamilyE);
  REQUIRE(c.size() == 3);
  CHECK(c[0].second.str() == "II");
  CHECK(c[1].second.str() == "III*");
  CHECK(c[2].first == kInf);
  std::vector<KodairaFiber> types;
  for (const auto& [p, f] : c) types.push_back(f);
  CHECK(euler_sum(types) == 12);
}

TEST_CASE("Kodaira types match the Neron table", "[property][oracle]") {
  testing::Gen gen(311);
  for (int trial = 0; trial < 60; ++trial) {
    int e2 = gen.integer(-3, 6), e3 = gen.integer(-3, 8);
    RationalFunction s = F("s");
    RationalFunction g2 = trial % 7 == 0 ? RationalFunction() : s.pow(e2) * F("s+2") * gen.nonzero_rational(4);
    RationalFunction g3 = trial % 7 == 3 ? RationalFunction() : s.pow(e3) * F("s-3") * gen.nonzero_rational(4);
    if (trial % 5 == 0) g3 = g2 * F("s");  // forces cancellation patterns in Delta
    WeierstrassModel w{g2, g3};
    RationalFunction d = g2.pow(3) - g3 * g3 * Rational(27);
    if (d.is_zero() || functional_invariant(w).is_constant()) continue;
    INFO("g2 = " << to_string(g2, "s") << ", g3 = " << to_string(g3, "s"));
    auto m = minimal_valuations(w, kZero);
    CHECK(std::min(m.g2, m.g3) >= 0);
    CHECK((m.g2 < 4 || m.g3 < 6));
    CHECK(m.discriminant == val0(d) + (m.g2 == detail::kInfiniteValuation ? (m.g3 - val0(g3)) * 2
                                                                          : (m.g2 - val0(g2)) * 3));
    KodairaFiber k = kodaira_type(w, kZero);
    CHECK(k.str() == neron_type(std::min(m.g2, 1000), std::min(m.g3, 1000), m.discriminant));

    // Zero orders of J mod 3 for II, IV, IV*, II*.
    RationalFunction J = functional_invariant(w);
    using K = KodairaFiber::Kind;
    if (k.kind() == K::II || k.kind() == K::IIStar || k.kind() == K::IV || k.kind() == K::IVStar) {
      int v = val0(J);
      CHECK(v > 0);
      int expect = (k.kind() == K::II || k.kind() == K::IVStar) ? 1 : 2;
      CHECK(v % 3 == expect);
    }
    if (k.kind() == K::III || k.kind() == K::IIIStar) CHECK(val0(J - 1) % 2 == 1);

    RationalFunction u = F("1 + s") * gen.nonzero_rational(3);
    CHECK(kodaira_type(WeierstrassModel{g2 * u.pow(4), g3 * u.pow(6)}, kZero) == k);
  }
}

TEST_CASE("elliptic modularity verdicts") {
  auto e = check_elliptic_modularity(kFamilyE);
  CHECK(e.modular);
  CHECK(e.riemann_hurwitz_defect == 0);
  CHECK(e.extra_ramification.empty());
  CHECK(e.forbidden_fibers.empty());

  auto square = check_elliptic_modularity(F("z^2"));
  CHECK_FALSE(square.modular);
  REQUIRE(square.order_failures.size() == 1);
  CHECK(square.order_failures[0].location == kZero);

  WeierstrassModel four{F("s^3"), F("s^2")};
  CHECK(kodaira_type(four, kZero).str() == "IV");
  auto rep = check_elliptic_modularity(four);
  CHECK_FALSE(rep.modular);
  CHECK(rep.forbidden_fibers == std::vector<AlgebraicPoint>{kZero});
  CHECK_THROWS_AS(check_elliptic_modularity(F("7")), ConstantJ);
}

TEST_CASE("fiber configurations of rational elliptic modular surfaces") {
  auto rows = modular_list();
  REQUIRE(rows.size() == 33);
  auto text = [](const std::vector<KodairaFiber>& r) {
    std::string s;
    for (const auto& f : r) s += (s.empty() ? "" : ", ") + f.str();
    return s;
  };
  CHECK(text(rows.front()) == "I1, II, III*");
  CHECK(text(rows.back()) == "I3, I3, I3, I3");
  for (const auto& r : rows) {
    CHECK(euler_sum(r) == 12);
    CHECK(std::none_of(r.begin(), r.end(), is_forbidden_fiber));
  }
  CHECK(euler_sum({}) == 0);
  CHECK(KodairaFiber::parse("I4*").euler_number() == 10);
  CHECK_THROWS_AS(KodairaFiber::parse("V"), InputError);
}
