#pragma once

#include <catch_amalgamated.hpp>

#include "generators.hpp"

#include "pfu/exact/algebraic.hpp"

template <>
struct Catch::StringMaker<pfu::Rational> {
  static std::string convert(const pfu::Rational& r) { return r.str(); }
};
template <>
struct Catch::StringMaker<pfu::Residue> {
  static std::string convert(const pfu::Residue& r) { return r.str(); }
};
template <>
struct Catch::StringMaker<pfu::Polynomial> {
  static std::string convert(const pfu::Polynomial& p) { return pfu::to_string(p, "x"); }
};
template <>
struct Catch::StringMaker<pfu::RationalFunction> {
  static std::string convert(const pfu::RationalFunction& f) { return pfu::to_string(f, "x"); }
};
