#pragma once

// Line-oriented input files.
//
//   ODE file:        var: s / order: 2 / P1: <expr> / P2: <expr>
//   signature file:  n: 1 / elliptic: <value> <order> / cusp: <value or inf>
//
// Blank lines and lines starting with '#' are ignored. Either kind of input
// may instead name a bundled fixture as "fixture:<name>".

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfu/data/fixtures.hpp"

namespace pfu::cli {

struct OdeInput {
  LinearODE op;
  char var = 'x';
};

struct SignatureInput {
  FrickeOrbifoldData data;
  char var = 'x';
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// (key, value, line number) triples.
struct Entry {
  std::string key;
  std::string value;
  int line;
};

inline std::vector<Entry> read_entries(std::istream& in, const std::string& source) {
  std::vector<Entry> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t colon = t.find(':');
    if (colon == std::string::npos) throw InputError(source + ":" + std::to_string(n) + ": expected 'key: value'");
    out.push_back({trim(t.substr(0, colon)), trim(t.substr(colon + 1)), n});
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::string where(const std::string& source, int line) { return source + ":" + std::to_string(line) + ": "; }

}  // namespace detail

/// Point of P^1 written as "inf" or a rational constant expression.
inline AlgebraicPoint parse_point(const std::string& text) {
  std::string t = detail::trim(text);
  if (t == "inf" || t == "infinity") return AlgebraicPoint::infinity();
  RationalFunction v = parse_ratfunc(t);
  if (!v.is_constant()) throw InputError("point '" + t + "' is not a constant");
  return AlgebraicPoint::rational(v.constant_value());
}

inline OdeInput parse_ode(const std::string& text, const std::string& source = "<ode>") {
  std::istringstream in(text);
  auto entries = detail::read_entries(in, source);
  std::optional<char> var;
  int order = 0;
  std::map<int, std::pair<std::string, int>> coeffs;
  for (const auto& e : entries) {
    if (e.key == "var") {
      if (e.value.size() != 1 || !std::isalpha(static_cast<unsigned char>(e.value[0])))
        throw InputError(detail::where(source, e.line) + "var must be a single letter");
      var = e.value[0];
    } else if (e.key == "order") {
      try {
        order = std::stoi(e.value);
      } catch (const std::exception&) {
        throw InputError(detail::where(source, e.line) + "order must be an integer");
      }
      if (order < 1) throw InputError(detail::where(source, e.line) + "order must be positive");
    } else if (e.key.size() >= 2 && e.key[0] == 'P' && e.key.find_first_not_of("0123456789", 1) == std::string::npos) {
      coeffs[std::stoi(e.key.substr(1))] = {e.value, e.line};
    } else {
      throw InputError(detail::where(source, e.line) + "unknown key '" + e.key + "'");
    }
  }
  if (order == 0) throw InputError(source + ": missing 'order:' line");
  std::vector<RationalFunction> p;
  for (int i = 1; i <= order; ++i) {
    auto it = coeffs.find(i);
    if (it == coeffs.end()) throw InputError(source + ": missing P" + std::to_string(i));
    try {
      p.push_back(parse_ratfunc_tracking(it->second.first, var));
    } catch (const ParseError& err) {
      throw InputError(detail::where(source, it->second.second) + "P" + std::to_string(i) + ": " + err.what());
    }
  }
  if (coeffs.size() != static_cast<size_t>(order) || coeffs.rbegin()->first != order)
    throw InputError(source + ": coefficient index exceeds the order");
  return {LinearODE(std::move(p)), var.value_or('x')};
}

inline SignatureInput parse_signature(const std::string& text, const std::string& source = "<signature>") {
  std::istringstream in(text);
  auto entries = detail::read_entries(in, source);
  std::optional<int> n;
  std::vector<EllipticPoint> elliptic;
  std::vector<AlgebraicPoint> cusps;
  for (const auto& e : entries) {
    try {
      if (e.key == "n") {
        n = std::stoi(e.value);
      } else if (e.key == "elliptic") {
        size_t space = e.value.find_last_of(" \t");
        if (space == std::string::npos) throw InputError("expected 'elliptic: <value> <order>'");
        elliptic.push_back({parse_point(e.value.substr(0, space)), std::stoi(e.value.substr(space + 1))});
      } else if (e.key == "cusp") {
        cusps.push_back(parse_point(e.value));
      } else {
        throw InputError("unknown key '" + e.key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw InputError(detail::where(source, e.line) + "expected an integer");
    } catch (const SignatureValueCollision&) {
      throw;
    } catch (const InputError& err) {
      throw InputError(detail::where(source, e.line) + err.what());
    }
  }
  if (!n) throw InputError(source + ": missing 'n:' line");
  return {FrickeOrbifoldData(*n, std::move(elliptic), std::move(cusps)), 'x'};
}

/// Loads an ODE from a path or "fixture:<name>".
inline OdeInput load_ode(const std::string& source) {
  if (source.rfind("fixture:", 0) == 0) {
    Fixture f = load_fixture(source.substr(8));
    if (!std::holds_alternative<LinearODE>(f.payload)) throw InputError("fixture " + f.name + " is not an operator");
    return {std::get<LinearODE>(f.payload), 's'};
  }
  return parse_ode(detail::read_file(source), source);
}

inline SignatureInput load_signature(const std::string& source) {
  if (source.rfind("fixture:", 0) == 0) {
    Fixture f = load_fixture(source.substr(8));
    if (!std::holds_alternative<FrickeOrbifoldData>(f.payload))
      throw InputError("fixture " + f.name + " is not a signature");
    return {std::get<FrickeOrbifoldData>(f.payload), 'x'};
  }
  return parse_signature(detail::read_file(source), source);
}

}  // namespace pfu::cli
