#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pfu/cli/parser.hpp"
#include "pfu/elliptic/weierstrass.hpp"
#include "pfu/k3/k3.hpp"

namespace pfu {

using FiberTable = std::vector<std::vector<KodairaFiber>>;

struct Fixture {
  std::string name;
  std::variant<LinearODE, WeierstrassModel, FiberTable, QSeries, FrickeOrbifoldData> payload;
  std::string provenance;
};

inline std::vector<std::string> fixture_names() {
  return {"lambda", "family-E-pf", "family-E", "modular-33", "j-series", "mirror-map-E", "signature-n1"};
}

inline Fixture load_fixture(const std::string& name) {
  auto f = [](const char* s) { return parse_ratfunc(s, 's'); };
  auto series = [](int val, std::vector<long> c, int prec) {
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    return QSeries(val, std::move(r), prec);
  };
  if (name == "lambda")
    return {name, LinearODE({f("0"), f("(36*s^2 - 41*s + 32)/(144*s^2*(s-1)^2)")}),
            "uniformizing equation of PSL(2,Z) on the J-line"};
  if (name == "family-E-pf")
    return {name, LinearODE({f("1/s"), f("((31/144)*s - 1/36)/(s^2*(s-1)^2)")}),
            "Picard-Fuchs equation of the family E"};
  if (name == "family-E")
    return {name, WeierstrassModel{f("27*s/(s-1)"), f("27*s/(s-1)")},
            "family E: y^2 = 4x^3 - 27s/(s-1) x - 27s/(s-1)"};
  if (name == "modular-33") return {name, modular_list(), "fiber types of the rational elliptic modular surfaces"};
  if (name == "j-series")
    return {name, series(-1, {1, 744, 196884, 21493760}, 3), "q-expansion of the elliptic modular function J"};
  if (name == "mirror-map-E")
    return {name, series(1, {1, -744, 356652, -140361152}, 5), "printed mirror map 1/J(q) of the family E"};
  if (name == "signature-n1")
    return {name,
            FrickeOrbifoldData(1, {{AlgebraicPoint::rational(0), 3}, {AlgebraicPoint::rational(1), 2}},
                               {AlgebraicPoint::infinity()}),
            "orbifold signature (3, 2, inf) of PSL(2,Z), read off the exponents of lambda"};
  throw UnknownFixture("unknown fixture '" + name + "'");
}

}  // namespace pfu
