#pragma once

#include <string>
#include <vector>

#include "pfu/error.hpp"

namespace pfu {

/// Kodaira singular fiber type.
class KodairaFiber {
 public:
  enum class Kind { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

  KodairaFiber() = default;
  KodairaFiber(Kind kind, int n = 0) : kind_(kind), n_(n) {  // NOLINT
    if (n < 0 || (n > 0 && kind != Kind::I && kind != Kind::IStar)) throw InputError("bad Kodaira index");
  }

  static KodairaFiber I(int n) { return {Kind::I, n}; }
  static KodairaFiber IStar(int n) { return {Kind::IStar, n}; }

  /// Parses "I3", "I0*", "II", "III*", ...
  static KodairaFiber parse(const std::string& s) {
    bool star = !s.empty() && s.back() == '*';
    std::string body = star ? s.substr(0, s.size() - 1) : s;
    if (body == "II") return star ? Kind::IIStar : Kind::II;
    if (body == "III") return star ? Kind::IIIStar : Kind::III;
    if (body == "IV") return star ? Kind::IVStar : Kind::IV;
    if (body.size() >= 2 && body[0] == 'I' && body.find_first_not_of("0123456789", 1) == std::string::npos)
      return {star ? Kind::IStar : Kind::I, std::stoi(body.substr(1))};
    throw InputError("unknown Kodaira fiber '" + s + "'");
  }

  Kind kind() const { return kind_; }
  int index() const { return n_; }

  int euler_number() const {
    switch (kind_) {
      case Kind::I: return n_;
      case Kind::II: return 2;
      case Kind::III: return 3;
      case Kind::IV: return 4;
      case Kind::IStar: return n_ + 6;
      case Kind::IVStar: return 8;
      case Kind::IIIStar: return 9;
      case Kind::IIStar: return 10;
    }
    return 0;
  }

  bool is_smooth() const { return kind_ == Kind::I && n_ == 0; }

  std::string str() const {
    switch (kind_) {
      case Kind::I: return "I" + std::to_string(n_);
      case Kind::II: return "II";
      case Kind::III: return "III";
      case Kind::IV: return "IV";
      case Kind::IStar: return "I" + std::to_string(n_) + "*";
      case Kind::IVStar: return "IV*";
      case Kind::IIIStar: return "III*";
      case Kind::IIStar: return "II*";
    }
    return "?";
  }

  friend bool operator==(const KodairaFiber&, const KodairaFiber&) = default;

 private:
  Kind kind_ = Kind::I;
  int n_ = 0;
};

inline int euler_sum(const std::vector<KodairaFiber>& fibers) {
  int s = 0;
  for (const auto& f : fibers) s += f.euler_number();
  return s;
}

/// Fiber types forbidden on elliptic modular surfaces.
inline bool is_forbidden_fiber(const KodairaFiber& f) {
  return f.kind() == KodairaFiber::Kind::IV || f.kind() == KodairaFiber::Kind::IIStar;
}

/// The 33 fiber configurations of rational elliptic modular surfaces, read
/// column by column from the printed three-column table.
inline std::vector<std::vector<KodairaFiber>> modular_list() {
  static const char* const rows[] = {
      "I1 II III*",     "I2 II IV*",      "I1 I2 III*",     "I3 III III III", "I1 I3 IV*",    "I4 II III III",
      "I5 II II III",   "I1 I1 I4*",      "I2 I2 I2*",      "I6 II II II",    "I1 I5 III III",
      "I2 I4 III III",  "I3 I3 III III",  "I1 I6 II III",   "I2 I5 II III",   "I3 I4 II III", "I1 I7 II II",
      "I2 I6 II II",    "I4 I4 II II",    "I1 I1 I7 III",   "I1 I2 I6 III",   "I1 I3 I5 III",
      "I2 I3 I4 III",   "I1 I1 I8 II",    "I1 I2 I7 II",    "I1 I4 I5 II",    "I2 I3 I5 II",  "I1 I1 I1 I9",
      "I1 I1 I2 I8",    "I1 I2 I3 I6",    "I1 I1 I5 I5",    "I2 I2 I4 I4",    "I3 I3 I3 I3",
  };
  std::vector<std::vector<KodairaFiber>> out;
  for (const char* row : rows) {
    std::vector<KodairaFiber> fibers;
    std::string s(row);
    size_t pos = 0;
    while (pos < s.size()) {
      size_t end = s.find(' ', pos);
      if (end == std::string::npos) end = s.size();
      fibers.push_back(KodairaFiber::parse(s.substr(pos, end - pos)));
      pos = end + 1;
    }
    out.push_back(std::move(fibers));
  }
  return out;
}

}  // namespace pfu
