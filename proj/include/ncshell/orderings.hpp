#pragma once

// Total orderings of the reflection set: the reflection-ordering axiom,
// compatibility with a Coxeter element, the Steinberg ordering and the
// classical orderings of types A, B and D.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncshell/errors.hpp"
#include "ncshell/group.hpp"
#include "ncshell/ncposet.hpp"
#include "ncshell/roots.hpp"

namespace ncshell {

class TotalOrder {
 public:
  TotalOrder() = default;

  // Reflections listed from smallest to largest.
  static TotalOrder from_sequence(std::vector<std::size_t> sequence) {
    TotalOrder o;
    o.position_.assign(sequence.size(), SIZE_MAX);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      const auto r = sequence[i];
      if (r >= sequence.size() || o.position_[r] != SIZE_MAX) {
        throw DomainError("ordering is not a permutation of the reflections");
      }
      o.position_[r] = i;
    }
    o.sequence_ = std::move(sequence);
    return o;
  }

  static TotalOrder by_index(std::size_t n) {
    std::vector<std::size_t> seq(n);
    std::iota(seq.begin(), seq.end(), std::size_t{0});
    return from_sequence(std::move(seq));
  }

  std::size_t size() const { return sequence_.size(); }
  std::size_t position(std::size_t reflection) const { return position_.at(reflection); }
  const std::vector<std::size_t>& sequence() const { return sequence_; }
  bool less(std::size_t a, std::size_t b) const { return position_[a] < position_[b]; }

  TotalOrder reversed() const {
    return from_sequence(std::vector<std::size_t>(sequence_.rbegin(), sequence_.rend()));
  }

  friend bool operator==(const TotalOrder&, const TotalOrder&) = default;

 private:
  std::vector<std::size_t> position_;
  std::vector<std::size_t> sequence_;
};

inline TotalOrder random_order(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> seq(n);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(seq.begin(), seq.end(), rng);
  return TotalOrder::from_sequence(std::move(seq));
}

struct OrderViolation {
  std::string reason;
  std::vector<std::size_t> roots;  // the offending reflections
};

struct OrderCheck {
  std::optional<OrderViolation> violation;
  bool ok() const { return !violation.has_value(); }
  explicit operator bool() const { return ok(); }
};

// Within each rank-2 subsystem the order must be monotone along the
// rotational order (or its reverse); for three or more members this is the
// same as every member lying between the two it is a positive combination of.
inline OrderCheck is_reflection_ordering(const std::vector<Rank2Subsystem>& subsystems,
                                         const TotalOrder& ord) {
  for (const auto& sub : subsystems) {
    const auto& rot = sub.rotational_order;
    for (std::size_t k = 1; k + 1 < rot.size(); ++k) {
      const auto a = ord.position(rot[k - 1]);
      const auto b = ord.position(rot[k]);
      const auto c = ord.position(rot[k + 1]);
      if ((a < b) != (b < c)) {
        return {OrderViolation{"reflection " + std::to_string(rot[k]) +
                                   " is not between " + std::to_string(rot[k - 1]) + " and " +
                                   std::to_string(rot[k + 1]),
                               {rot[k - 1], rot[k], rot[k + 1]}}};
      }
    }
  }
  return {};
}

inline OrderCheck is_reflection_ordering(const RootSystem& rs, const TotalOrder& ord) {
  if (ord.size() != rs.size()) throw DimensionError("ordering size differs from |T|");
  return is_reflection_ordering(rank2_subsystems(rs), ord);
}

// For each irreducible subsystem with simple pair (a, b): if t_a t_b is a
// member then t_a < t_b, and if t_b t_a is a member then t_b < t_a. A
// subsystem where both products are members is reported as a violation.
inline OrderCheck check_compatibility(
    const RootSystem& rs, const TotalOrder& ord, const std::vector<Rank2Subsystem>& subsystems,
    const std::function<bool(const GroupElement&)>& member) {
  if (auto bad = is_reflection_ordering(subsystems, ord); !bad) return bad;
  for (const auto& sub : subsystems) {
    if (!sub.irreducible) continue;
    const auto [a, b] = sub.simple_pair;
    const GroupElement ta = reflection_element(rs, a), tb = reflection_element(rs, b);
    const bool ab = member(compose(ta, tb));
    const bool ba = member(compose(tb, ta));
    if (ab && ba) {
      return {OrderViolation{"both products of the simple pair " + std::to_string(a) + ", " +
                                 std::to_string(b) + " lie below the Coxeter element",
                             {a, b}}};
    }
    if (ab && !ord.less(a, b)) {
      return {OrderViolation{"t_" + std::to_string(a) + " t_" + std::to_string(b) +
                                 " is below the Coxeter element but " + std::to_string(b) +
                                 " precedes " + std::to_string(a),
                             {a, b}}};
    }
    if (ba && !ord.less(b, a)) {
      return {OrderViolation{"t_" + std::to_string(b) + " t_" + std::to_string(a) +
                                 " is below the Coxeter element but " + std::to_string(a) +
                                 " precedes " + std::to_string(b),
                             {b, a}}};
    }
  }
  return {};
}

// Compatibility with the top element of p.
inline OrderCheck compatible_with(const RootSystem& rs, const TotalOrder& ord, const NCPoset& p) {
  if (ord.size() != rs.size()) throw DimensionError("ordering size differs from |T|");
  return check_compatibility(rs, ord, rank2_subsystems(rs),
                             [&](const GroupElement& g) { return p.index_of(g).has_value(); });
}

// ---------------------------------------------------------------------------
// Steinberg ordering.

struct SteinbergOrder {
  TotalOrder order;
  GroupElement gamma;
  std::vector<std::size_t> sigma;  // simple roots, block one then block two
  std::vector<std::size_t> rho;    // rho_1, ..., rho_{l h / 2}
};

// rho_i = t_{sigma_1} ... t_{sigma_{i-1}} (sigma_i), sigma indexed cyclically;
// the order lists t_{rho_1} < t_{rho_2} < ... and gamma = t_{sigma_1} ...
// t_{sigma_l}.
inline SteinbergOrder steinberg_order(const RootSystem& rs, bool swap_blocks = false) {
  SteinbergOrder out;
  out.sigma = bipartite_simple_order(rs, swap_blocks);
  const std::size_t l = out.sigma.size();
  const std::size_t count = l * static_cast<std::size_t>(rs.coxeter_number()) / 2;
  std::vector<bool> seen(rs.size(), false);
  GroupElement prefix = GroupElement::identity(rs.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t s = out.sigma[i % l];
    const RootCode rho = prefix(positive_code(s));
    if (!code_positive(rho) || seen[code_index(rho)]) {
      throw InternalError("Steinberg sequence of " + rs.type().name() + " fails at step " +
                          std::to_string(i + 1));
    }
    seen[code_index(rho)] = true;
    out.rho.push_back(code_index(rho));
    prefix = compose(prefix, reflection_element(rs, s));
  }
  if (out.rho.size() != rs.size()) {
    throw InternalError("Steinberg sequence does not cover the positive roots");
  }
  out.order = TotalOrder::from_sequence(out.rho);
  out.gamma = coxeter_element(rs, out.sigma);
  return out;
}

// ---------------------------------------------------------------------------
// Classical orderings and signed-cycle names.

namespace detail {

inline Vec signed_sum(std::size_t dim, int i, int j) {
  // e_i - e_j for j > 0, e_i + e_|j| for j < 0, e_i for j == 0 (1-based).
  Vec v(dim);
  v[static_cast<std::size_t>(i - 1)] = 1;
  if (j > 0) v[static_cast<std::size_t>(j - 1)] = -1;
  if (j < 0) v[static_cast<std::size_t>(-j - 1)] = 1;
  return v;
}

inline std::size_t classical_root(const RootSystem& rs, int i, int j) {
  const auto hit = rs.lookup(signed_sum(rs.ambient_dim(), i, j));
  if (!hit || hit->sign < 0) throw InternalError("classical root missing");
  return hit->index;
}

}  // namespace detail

// "(i,j)" in type A; "((i,j))", "((i,-j))", "[i]" in types B and D.
inline std::optional<std::string> reflection_name(const RootSystem& rs, std::size_t r) {
  if (!rs.type().classical()) return std::nullopt;
  const Vec& a = rs.root(r);
  std::vector<std::pair<int, int>> support;  // (coordinate, sign)
  for (std::size_t c = 0; c < a.size(); ++c)
    if (!a[c].is_zero()) support.emplace_back(static_cast<int>(c) + 1, a[c].sign());
  const auto s = [](int v) { return std::to_string(v); };
  if (rs.type().family == Family::A) {
    return "(" + s(support[0].first) + "," + s(support[1].first) + ")";
  }
  if (support.size() == 1) return "[" + s(support[0].first) + "]";
  const bool minus = support[1].second < 0;
  return "((" + s(support[0].first) + "," + (minus ? "" : "-") + s(support[1].first) + "))";
}

struct ClassicalOrder {
  TotalOrder order;
  GroupElement gamma;
};

// Lexicographic transpositions with gamma = (1, 2, ..., n) in type A; the
// displayed signed orderings with gamma = [1, ..., n] in type B and
// gamma = [1, ..., n-1][n] in type D.
inline ClassicalOrder classical_order(const RootSystem& rs) {
  const auto& t = rs.type();
  if (!t.classical()) throw DomainError("classical ordering requires type A, B or D");
  const int dim = static_cast<int>(rs.ambient_dim());
  std::vector<std::size_t> seq;
  std::vector<int> gamma(static_cast<std::size_t>(dim));
  auto root = [&](int i, int j) { return detail::classical_root(rs, i, j); };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j) seq.push_back(root(i, j));
      for (int c = 0; c < dim; ++c) gamma[c] = (c + 1) % dim + 1;
      break;
    case Family::B: {
      const int n = dim;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) seq.push_back(root(i, j));
      for (int i = 1; i <= n; ++i) {
        seq.push_back(root(i, 0));
        for (int j = i + 1; j <= n; ++j) seq.push_back(root(i, -j));
      }
      for (int c = 0; c + 1 < n; ++c) gamma[c] = c + 2;
      gamma[n - 1] = -1;
      break;
    }
    case Family::D: {
      const int n = dim;
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) seq.push_back(root(i, j));
      for (int i = 1; i <= n - 1; ++i) {
        seq.push_back(root(i, n));
        seq.push_back(root(i, -n));
        for (int j = i + 1; j <= n - 1; ++j) seq.push_back(root(i, -j));
      }
      for (int c = 0; c + 2 < n; ++c) gamma[c] = c + 2;
      gamma[n - 2] = -1;
      gamma[n - 1] = -n;
      break;
    }
    default:
      break;
  }
  return {TotalOrder::from_sequence(std::move(seq)), element_from_signed_permutation(rs, gamma)};
}

inline ClassicalOrder classical_order(const CoxeterType& t) {
  return classical_order(build_root_system(t));
}

}  // namespace ncshell
