#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "ncshell/errors.hpp"

namespace ncshell {

enum class Family { A, B, D, I2, H3, H4, F4, E6, E7, E8, G2 };

// A finite irreducible Coxeter type. `parameter` is the rank for A/B/D and m
// for I2(m); it is ignored for the exceptional families.
struct CoxeterType {
  Family family = Family::A;
  int parameter = 1;

  static CoxeterType make(Family f, int parameter = 0) {
    CoxeterType t{f, parameter};
    t.validate();
    return t;
  }

  void validate() const {
    switch (family) {
      case Family::A:
        if (parameter < 1) throw ConfigError("type A requires rank >= 1");
        break;
      case Family::B:
        if (parameter < 2) throw ConfigError("type B requires rank >= 2");
        break;
      case Family::D:
        if (parameter < 3) throw ConfigError("type D requires rank >= 3");
        break;
      case Family::I2:
        if (parameter < 2) throw ConfigError("type I2(m) requires m >= 2");
        break;
      default:
        break;
    }
  }

  int rank() const {
    switch (family) {
      case Family::A:
      case Family::B:
      case Family::D:
        return parameter;
      case Family::I2:
      case Family::G2:
        return 2;
      case Family::H3:
        return 3;
      case Family::H4:
      case Family::F4:
        return 4;
      case Family::E6:
        return 6;
      case Family::E7:
        return 7;
      case Family::E8:
        return 8;
    }
    return 0;
  }

  // Degrees of the basic invariants, ascending.
  std::vector<int> degrees() const {
    std::vector<int> d;
    const int n = parameter;
    switch (family) {
      case Family::A:
        for (int i = 2; i <= n + 1; ++i) d.push_back(i);
        break;
      case Family::B:
        for (int i = 1; i <= n; ++i) d.push_back(2 * i);
        break;
      case Family::D:
        for (int i = 1; i < n; ++i) d.push_back(2 * i);
        d.push_back(n);
        break;
      case Family::I2:
        d = {2, n};
        break;
      case Family::H3:
        d = {2, 6, 10};
        break;
      case Family::H4:
        d = {2, 12, 20, 30};
        break;
      case Family::F4:
        d = {2, 6, 8, 12};
        break;
      case Family::E6:
        d = {2, 5, 6, 8, 9, 12};
        break;
      case Family::E7:
        d = {2, 6, 8, 10, 12, 14, 18};
        break;
      case Family::E8:
        d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
      case Family::G2:
        d = {2, 6};
        break;
    }
    std::sort(d.begin(), d.end());
    return d;
  }

  int coxeter_number() const {
    const auto d = degrees();
    return d.back();
  }

  bool crystallographic() const {
    switch (family) {
      case Family::I2:
      case Family::H3:
      case Family::H4:
        return false;
      default:
        return true;
    }
  }

  // E6 and above, and H4, are gated behind an explicit opt-in.
  bool large() const {
    return family == Family::E6 || family == Family::E7 || family == Family::E8 ||
           family == Family::H4;
  }

  bool classical() const {
    return family == Family::A || family == Family::B || family == Family::D;
  }

  std::string name() const {
    switch (family) {
      case Family::A:
        return "A" + std::to_string(parameter);
      case Family::B:
        return "B" + std::to_string(parameter);
      case Family::D:
        return "D" + std::to_string(parameter);
      case Family::I2:
        return "I2:" + std::to_string(parameter);
      case Family::H3:
        return "H3";
      case Family::H4:
        return "H4";
      case Family::F4:
        return "F4";
      case Family::E6:
        return "E6";
      case Family::E7:
        return "E7";
      case Family::E8:
        return "E8";
      case Family::G2:
        return "G2";
    }
    return "?";
  }

  // Accepts "A3", "b4", "I2:5", "I2(5)", "H3", "F4", "E6", "G2".
  static CoxeterType parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    auto number = [&](std::string_view digits) {
      int v = 0;
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (ec != std::errc() || p != digits.data() + digits.size() || digits.empty()) {
        throw ConfigError("cannot parse Coxeter type '" + std::string(text) + "'");
      }
      return v;
    };
    if (s.rfind("I2", 0) == 0 && s.size() > 2) {
      std::string_view rest(s);
      rest.remove_prefix(2);
      if (rest.front() == ':') {
        rest.remove_prefix(1);
      } else if (rest.front() == '(' && rest.back() == ')') {
        rest.remove_prefix(1);
        rest.remove_suffix(1);
      } else {
        throw ConfigError("cannot parse Coxeter type '" + std::string(text) + "'");
      }
      return make(Family::I2, number(rest));
    }
    if (s == "H3") return make(Family::H3);
    if (s == "H4") return make(Family::H4);
    if (s == "F4") return make(Family::F4);
    if (s == "E6") return make(Family::E6);
    if (s == "E7") return make(Family::E7);
    if (s == "E8") return make(Family::E8);
    if (s == "G2") return make(Family::G2);
    if (s.size() >= 2) {
      const std::string_view digits = std::string_view(s).substr(1);
      switch (s[0]) {
        case 'A':
          return make(Family::A, number(digits));
        case 'B':
          return make(Family::B, number(digits));
        case 'D':
          return make(Family::D, number(digits));
        default:
          break;
      }
    }
    throw ConfigError("unsupported Coxeter type '" + std::string(text) + "'");
  }

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

// Generalized Catalan number prod (d_i + h) / d_i, the size of the
// noncrossing partition lattice.
inline long long catalan_number(const CoxeterType& t) {
  const int h = t.coxeter_number();
  long long num = 1, den = 1;
  for (int d : t.degrees()) {
    num *= d + h;
    den *= d;
  }
  return num / den;
}

// prod (d_i + h - 2) / d_i, the absolute value of the Moebius number.
inline long long positive_catalan_number(const CoxeterType& t) {
  const int h = t.coxeter_number();
  long long num = 1, den = 1;
  for (int d : t.degrees()) {
    num *= d + h - 2;
    den *= d;
  }
  return num / den;
}

}  // namespace ncshell
