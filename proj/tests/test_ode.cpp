#include <catch_amalgamated.hpp>

#include "pfu/cli/parser.hpp"
#include "pfu/ode/analysis.hpp"
#include "support.hpp"

using namespace pfu;

namespace {

RationalFunction F(const std::string& s) { return parse_ratfunc(s); }
LinearODE op2(const std::string& p1, const std::string& p2) { return LinearODE({F(p1), F(p2)}); }

const LinearODE kLambda = op2("0", "(36*x^2 - 41*x + 32)/(144*x^2*(x-1)^2)");
const LinearODE kFamilyPF = op2("1/x", "((31/144)*x - 1/36)/(x^2*(x-1)^2)");
const auto kZero = AlgebraicPoint::rational(0);
const auto kOne = AlgebraicPoint::rational(1);
const auto kInf = AlgebraicPoint::infinity();

Rational R(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> rational_exponents(const LinearODE& L, const AlgebraicPoint& p) {
  auto e = exponents(L, p);
  std::vector<Rational> out;
  for (const auto& v : e) out.push_back(v.rational());
  std::sort(out.begin(), out.end());
  return out;
}

// Substitutes u^rho * sum_j S_j log(u)^j into the operator, expanding the
// coefficients directly at the point; returns the log components of L y.
std::vector<QSeries> residual(const LinearODE& L, const AlgebraicPoint& at, const LogSolution& sol) {
  Rational rho = sol.exponent.rational_value();
  std::vector<QSeries> y;
  for (const auto& s : sol.log_terms) y.push_back(to_rational(s));
  auto derive = [&](const std::vector<QSeries>& v) {
    std::vector<QSeries> d(v.size());
    for (size_t j = 0; j < v.size(); ++j) {
      d[j] = v[j].shift(-1) * rho + derivative(v[j]);
      if (j + 1 < v.size()) d[j] = d[j] + v[j + 1].shift(-1) * Rational(static_cast<long>(j + 1));
    }
    return d;
  };
  const int k = L.order();
  const int prec = sol.log_terms.front().precision();
  std::vector<std::vector<QSeries>> ders{y};
  for (int i = 1; i <= k; ++i) ders.push_back(derive(ders.back()));
  std::vector<QSeries> out(y.size(), QSeries());
  for (int i = 0; i <= k; ++i) {
    QSeries p = to_rational(local_series(L.coeff(i), at, prec));
    for (size_t j = 0; j < y.size(); ++j) out[j] = out[j] + p * ders[k - i][j];
  }
  return out;
}

}  // namespace

TEST_CASE("change of variable preserves solutions", "[oracle]") {
  // f'' - 2/x^2 f = 0 has solutions x^2 and 1/x.
  LinearODE L = op2("0", "-2/x^2");
  CHECK(L.apply(F("x^2")).is_zero());
  CHECK(L.apply(F("1/x")).is_zero());
  testing::Gen gen(7);
  for (int i = 0; i < 10; ++i) {
    RationalFunction phi(gen.poly(gen.integer(1, 2), 4), gen.poly(gen.integer(0, 1), 4));
    if (phi.derivative().is_zero()) continue;
    LinearODE Lt = change_variable(L, phi);
    CHECK(Lt.apply(F("x^2").compose(phi)).is_zero());
    CHECK(Lt.apply(F("1/x").compose(phi)).is_zero());
  }
  CHECK(at_infinity(op2("0", "0")) == op2("2/x", "0"));
}

TEST_CASE("indicial polynomials and exponents of the uniformizing operator") {
  auto ind = indicial(kLambda, kZero);
  CHECK(ind == Poly<Residue>{Residue(R(2, 9)), Residue(-1), Residue(1)});
  CHECK(rational_exponents(kLambda, kZero) == std::vector<Rational>{R(1, 3), R(2, 3)});
  CHECK(rational_exponents(kLambda, kOne) == std::vector<Rational>{R(1, 4), R(3, 4)});
  CHECK(rational_exponents(kLambda, kInf) == std::vector<Rational>{R(1, 2), R(1, 2)});
}

TEST_CASE("quadratic exponents") {
  LinearODE L = op2("0", "1/x^2");
  auto e = exponents(L, kZero);
  REQUIRE(e.size() == 2);
  CHECK_FALSE(e[0].is_exact());
  CHECK(e[0].radicand() == Residue(R(-3, 4)));
  auto r = analyze_point(L, kZero);
  CHECK(r.classification == PointType::Generic);
}

TEST_CASE("Fuchs relation on the uniformizing operator", "[property]") {
  // Sum over finite points of (alpha + beta) minus the same at infinity, in the
  // growth convention, equals s - 2.
  auto pts = singular_points(kLambda);
  REQUIRE(pts.size() == 3);
  Rational total;
  for (const auto& p : pts) {
    Rational s;
    for (const auto& e : exponents(kLambda, p)) s += e.rational();
    total += p.is_infinity() ? -s : s;
  }
  CHECK(total == Rational(static_cast<long>(pts.size()) - 2));
}

TEST_CASE("Fuchs relation on random operators", "[property]") {
  // Infinity always counts, whether or not it is singular.
  testing::Gen gen(13);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial xx1{R(0), R(-1), R(1)};
    LinearODE L({RationalFunction(gen.poly(1, 4), xx1), RationalFunction(gen.poly(2, 4), xx1.pow(2))});
    REQUIRE(is_fuchsian(L));
    auto finite = finite_singular_points(L);
    Rational total = -(-indicial(L, kInf)[1].rational_value());
    for (const auto& p : finite) total += -indicial(L, p)[1].rational_value();
    CHECK(total == Rational(static_cast<long>(finite.size()) + 1 - 2));
  }
}

TEST_CASE("singular points and fuchsian check") {
  auto pts = singular_points(kFamilyPF);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == kZero);
  CHECK(pts[1] == kOne);
  CHECK(pts[2] == kInf);
  CHECK(is_fuchsian(kFamilyPF));

  LinearODE osc = op2("0", "1");
  CHECK(singular_points(osc) == std::vector<AlgebraicPoint>{kInf});
  CHECK_FALSE(is_fuchsian(osc));
  CHECK_FALSE(is_fuchsian(op2("0", "1/x^3")));
  CHECK(singular_points(op2("0", "0")).empty());

  auto alg = singular_points(op2("0", "1/(x^2+1)^2"));
  REQUIRE(alg.size() == 1);
  CHECK(alg[0].degree() == 2);
}

TEST_CASE("projective normal forms") {
  CHECK(pnf2(kFamilyPF) == kLambda);
  CHECK(pnf2(kLambda) == kLambda);
  CHECK(pnf2(op2("2/x", "0")) == op2("0", "0"));
  LinearODE zero3({RationalFunction(), RationalFunction(), RationalFunction()});
  CHECK(pnf3(zero3) == zero3);
  Rational a = R(5, 7);
  LinearODE cube({RationalFunction(a * 3), RationalFunction(a * a * 3), RationalFunction(a * a * a)});
  CHECK(pnf3(cube) == zero3);
}

TEST_CASE("pnf2 preserves exponent differences", "[property]") {
  testing::Gen gen(19);
  for (int trial = 0; trial < 15; ++trial) {
    LinearODE L({RationalFunction(gen.poly(1, 5), Polynomial{R(0), R(-1), R(1)}),
                 RationalFunction(gen.poly(2, 5), Polynomial{R(0), R(-1), R(1)}.pow(2))});
    LinearODE N = pnf2(L);
    for (const auto& p : {kZero, kOne, kInf}) {
      auto a = analyze_point(L, p), b = analyze_point(N, p);
      CHECK(*a.exponent_difference == *b.exponent_difference);
    }
  }
}

TEST_CASE("Frobenius bases") {
  SECTION("1 and log z") {
    auto b = frobenius_basis(op2("1/x", "0"), kZero, 6);
    REQUIRE(b.solutions.size() == 2);
    CHECK(b.solutions[0].log_degree() == 0);
    CHECK(to_rational(b.solutions[0].log_terms[0]) == QSeries(0, {1}, 6));
    CHECK(b.solutions[1].log_degree() == 1);
    CHECK(to_rational(b.solutions[1].log_terms[1]) == QSeries(0, {1}, 6));
    CHECK(b.solutions[1].log_terms[0].is_zero());
  }
  SECTION("x^2 and 1/x") {
    auto b = frobenius_basis(op2("0", "-2/x^2"), kZero, 6);
    REQUIRE(b.solutions.size() == 2);
    CHECK_FALSE(b.has_log());
    CHECK(b.solutions[0].exponent == Residue(-1));
    CHECK(to_rational(b.solutions[0].log_terms[0]) == QSeries(0, {1}, 6));
    CHECK(to_rational(b.solutions[1].log_terms[0]) == QSeries(3, {1}, 6));
  }
  SECTION("uniformizing operator at infinity") {
    auto b = frobenius_basis(kLambda, kInf, 6);
    REQUIRE(b.solutions.size() == 2);
    CHECK(b.solutions[0].exponent == Residue(R(-1, 2)));
    CHECK(b.solutions[0].log_degree() == 0);
    CHECK(b.solutions[1].log_degree() == 1);
  }
}

TEST_CASE("Frobenius solutions annihilate the operator", "[property][oracle]") {
  testing::Gen gen(31);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Rational r1 = gen.rational(3);
    Rational r2 = trial % 3 == 0 ? r1 + Rational(gen.integer(0, 3)) : gen.rational(3);
    Rational p0 = Rational(1) - r1 - r2, q0 = r1 * r2;
    RationalFunction x = RationalFunction::x();
    RationalFunction p1 = RationalFunction(p0) / x + RationalFunction(gen.rational(4)) / (x - 1);
    RationalFunction p2 = RationalFunction(q0) / (x * x) + RationalFunction(gen.rational(4)) / (x * (x - 1)) +
                          RationalFunction(gen.rational(4)) / ((x - 1) * (x - 1));
    LinearODE L({p1, p2});
    if (trial % 5 == 4) L = change_variable(L, F("x/(1+x)"));
    auto basis = frobenius_basis(L, kZero, 8);
    CHECK(basis.solutions.size() == 2);
    for (const auto& s : basis.solutions) {
      auto res = residual(L, kZero, s);
      for (const auto& comp : res) {
        CHECK(comp.is_zero());
        CHECK(comp.precision() >= 4);
      }
      ++checked;
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("Frobenius for order three with a full log ladder") {
  // theta^3 y = x y  (u^3 L = theta^3 - u), all exponents 0.
  LinearODE L({F("3/x"), F("1/x^2"), F("-1/x^2")});
  auto b = frobenius_basis(L, kZero, 6);
  REQUIRE(b.solutions.size() == 3);
  CHECK(b.max_log_degree() == 2);
  for (const auto& s : b.solutions)
    for (const auto& comp : residual(L, kZero, s)) CHECK(comp.is_zero());
  CHECK(mum_check(L, kZero));
}

TEST_CASE("point classification") {
  CHECK(is_apparent(op2("0", "-2/x^2"), kZero) == PointType::Apparent);
  CHECK(is_apparent(kLambda, kInf) == PointType::Logarithmic);
  CHECK(is_apparent(op2("0", "0"), AlgebraicPoint::rational(5)) == PointType::Ordinary);
  CHECK_THROWS_AS(is_apparent(kLambda, kZero), NotIntegerDifference);

  auto r0 = analyze_point(kLambda, kZero);
  CHECK(r0.classification == PointType::Orbifold);
  CHECK(r0.orbifold_weight == 3);
  CHECK(analyze_point(kLambda, kOne).orbifold_weight == 2);
  auto ri = analyze_point(kLambda, kInf);
  CHECK(ri.classification == PointType::Logarithmic);
  CHECK(ri.log_obstruction_checked);
  CHECK(analyze_point(op2("0", "0"), kInf).classification == PointType::Ordinary);
  // exponents {0, 1} with a pole of the PNF coefficient: log forced.
  CHECK(analyze_point(op2("0", "1/x"), kZero).classification == PointType::Logarithmic);
}

TEST_CASE("maximal unipotent monodromy") {
  CHECK(mum_check(kFamilyPF, kInf));
  CHECK_FALSE(mum_check(kLambda, kZero));
  CHECK(mum_check(kLambda, kInf));
}

TEST_CASE("algebraic singular point") {
  // f'' + 1/(4 (x^2+1)^2) ... exponents at the roots of x^2+1.
  LinearODE L = op2("0", "(3/16)*(-4)/(x^2+1)^2");
  auto pts = singular_points(L);
  REQUIRE(pts.size() == 1);
  auto r = analyze_point(L, pts[0]);
  REQUIRE(r.exponent_difference.has_value());
  // Leading coefficient at a root a of x^2+1: -3/4 / (2a)^2 = 3/16.
  CHECK(r.exponent_difference->is_rational());
  CHECK(r.exponent_difference->rational() == R(1, 2));
  CHECK(r.classification == PointType::Orbifold);
}
