#pragma once

// Exhaustive property sweeps over NC_W(gamma): label properties of maximal
// chains, interval translation, restriction of compatible orderings to
// parabolic subposets, Hurwitz transitivity, basis properties of chain
// labels, fixed-space description of the reflections below an element, and
// the root-decomposition property of crystallographic root systems.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncshell/group.hpp"
#include "ncshell/ncposet.hpp"
#include "ncshell/orderings.hpp"
#include "ncshell/roots.hpp"
#include "ncshell/shellcheck.hpp"

namespace ncshell {

struct PropertyReport {
  explicit PropertyReport(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first_violation;

  bool ok() const { return violations == 0; }
  void fail(const std::string& what) {
    if (violations++ == 0) first_violation = what;
  }
};

namespace detail {

inline std::string pair_name(std::size_t u, std::size_t v) {
  return "[" + std::to_string(u) + ", " + std::to_string(v) + "]";
}

template <typename F>
void for_each_nonsingleton(const NCPoset& p, F&& f) {
  const FinitePoset& q = p.order();
  for (std::size_t u = 0; u < p.size(); ++u) {
    const Bitset& up = q.up(u);
    for (auto v = up.find_next(u); v != Bitset::npos; v = up.find_next(v)) f(u, v);
  }
}

}  // namespace detail

// Labels of any maximal chain of [u, v] are distinct and each labels a cover
// leaving u inside [u, v]; in a length-two interval every label (s, t) is
// followed by some (t, s').
inline PropertyReport label_properties_check(const NCPoset& p) {
  PropertyReport rep{"chain label properties"};
  const FinitePoset& q = p.order();
  detail::for_each_nonsingleton(p, [&](std::size_t u, std::size_t v) {
    const Interval iv = interval(q, u, v);
    Bitset leaving(p.num_reflections());
    for (auto c : q.up_covers(u))
      if (iv.mask.test(q.cover(c).hi)) leaving.set(q.cover(c).label);
    std::set<std::vector<std::size_t>> label_set;
    for_each_maximal_chain(p, iv, [&](const Chain& c) {
      ++rep.instances;
      label_set.insert(c.labels);
      std::vector<std::size_t> sorted = c.labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        rep.fail("repeated label in a chain of " + detail::pair_name(u, v));
      for (auto t : c.labels)
        if (!leaving.test(t))
          rep.fail("label " + std::to_string(t) + " of " + detail::pair_name(u, v) +
                   " does not leave the bottom");
    });
    if (iv.length == 2) {
      for (const auto& l : label_set) {
        bool found = false;
        for (const auto& m : label_set) found = found || m[0] == l[1];
        if (!found) rep.fail("length-two interval " + detail::pair_name(u, v) + " not closed");
      }
    }
  });
  return rep;
}

// x -> u x is a label-preserving isomorphism [1, u^{-1} v] -> [u, v] and
// both intervals have the same number of maximal chains.
inline PropertyReport translation_check(const NCPoset& p) {
  PropertyReport rep{"interval translation"};
  const FinitePoset& q = p.order();
  detail::for_each_nonsingleton(p, [&](std::size_t u, std::size_t v) {
    ++rep.instances;
    if (!interval_translate_check(p, u, v)) {
      rep.fail("translation fails on " + detail::pair_name(u, v));
      return;
    }
    const auto w = *p.index_of(compose(inverse(p.element(u)), p.element(v)));
    if (count_maximal_chains(q, interval(q, p.bottom(), w)) !=
        count_maximal_chains(q, interval(q, u, v)))
      rep.fail("chain counts differ on " + detail::pair_name(u, v));
  });
  return rep;
}

// For every w of rank >= 2: every rank-2 subsystem spanned by reflections
// below w lies entirely below w, and the ordering restricted to the
// reflections below w is a reflection ordering compatible with w.
inline PropertyReport parabolic_restriction_check(const RootSystem& rs, const NCPoset& p,
                                                  const TotalOrder& ord) {
  PropertyReport rep{"parabolic restriction"};
  const auto all = rank2_subsystems(rs);
  for (std::size_t w = 0; w < p.size(); ++w) {
    if (p.rank_of(w) < 2) continue;
    ++rep.instances;
    const Bitset below = p.reflections_below(w);
    std::vector<Rank2Subsystem> local;
    bool closed = true;
    for (const auto& sub : all) {
      std::size_t inside = 0;
      for (auto m : sub.members) inside += below.test(m) ? 1 : 0;
      if (inside < 2) continue;
      if (inside != sub.members.size()) closed = false;
      local.push_back(sub);
    }
    if (!closed) {
      rep.fail("a rank-2 subsystem of element " + std::to_string(w) + " is not induced");
      continue;
    }
    const auto check = check_compatibility(rs, ord, local, [&](const GroupElement& g) {
      const auto i = p.index_of(g);
      return i && p.le(*i, w);
    });
    if (!check.ok())
      rep.fail("element " + std::to_string(w) + ": " + check.violation->reason);
  }
  return rep;
}

// The Hurwitz orbit of one reduced factorization of w is all of them, for
// every w (w = gamma is the statement for Coxeter elements).
inline PropertyReport hurwitz_check(const RootSystem& rs, const NCPoset& p) {
  PropertyReport rep{"Hurwitz transitivity"};
  for (std::size_t w = 1; w < p.size(); ++w) {
    ++rep.instances;
    const auto r = hurwitz_transitive_report(rs, p, w);
    if (!r.ok)
      rep.fail("element " + std::to_string(w) + ": orbit " + std::to_string(r.orbit_size) +
               " of " + std::to_string(r.factorization_count));
  }
  const auto top = hurwitz_transitive_report(rs, p);
  if (top.orbit_size != count_maximal_chains(p.order(), interval(p, p.bottom(), p.top())))
    rep.fail("orbit size differs from the maximal chain count");
  return rep;
}

inline bool linearly_independent(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  std::set<std::size_t> distinct(roots.begin(), roots.end());
  if (distinct.size() != roots.size()) return false;
  if (rs.dihedral()) return roots.size() <= 2;
  Matrix m;
  for (auto r : roots) m.push_back(rs.simple_coordinates(r));
  return rank(m) == roots.size();
}

// Label roots of every maximal chain of [1, gamma] are a linear basis, and a
// Z-basis of the root lattice in crystallographic types; for crystallographic
// types every Hurwitz move keeps the Z-basis property.
inline PropertyReport chain_basis_check(const RootSystem& rs, const NCPoset& p) {
  PropertyReport rep{"chain label bases"};
  for (const auto& f : reduced_factorizations(p, p.top())) {
    ++rep.instances;
    if (!linearly_independent(rs, f.reflections)) rep.fail("dependent chain labels");
    if (!rs.crystallographic()) continue;
    if (!zbasis_check(rs, f.reflections)) rep.fail("chain labels are not a Z-basis");
    for (std::size_t i = 1; i < f.reflections.size(); ++i) {
      const auto g = hurwitz_step(rs, f, i);
      if (!zbasis_check(rs, g.reflections)) rep.fail("Hurwitz move breaks the Z-basis");
    }
  }
  return rep;
}

// The reflections below w in the poset are those whose hyperplane contains
// F(w); they are closed under conjugation and their simple system has
// l_T(w) roots.
inline PropertyReport parabolic_subsystem_check(const RootSystem& rs, const NCPoset& p) {
  PropertyReport rep{"parabolic subsystems"};
  for (std::size_t w = 0; w < p.size(); ++w) {
    ++rep.instances;
    const GroupElement& e = p.element(w);
    const Bitset below = p.reflections_below(w);
    if (below != reflections_below(rs, e)) {
      rep.fail("element " + std::to_string(w) + ": atoms below differ from the fixed-space test");
      continue;
    }
    for (auto s = below.find_first(); s != Bitset::npos; s = below.find_next(s))
      for (auto t = below.find_first(); t != Bitset::npos; t = below.find_next(t))
        if (!below.test(code_index(rs.reflect(s, positive_code(t)))))
          rep.fail("element " + std::to_string(w) + ": reflections below are not conjugation closed");
    const auto simple = subsystem_simple_roots(rs, to_mask(below));
    if (simple.size() != reflection_length(rs, e) ||
        static_cast<int>(simple.size()) != p.rank_of(w))
      rep.fail("element " + std::to_string(w) + ": parabolic rank differs from l_T");
  }
  return rep;
}

// For reflections s, t the conjugate s t s is a reflection.
inline PropertyReport conjugation_closure_check(const RootSystem& rs) {
  PropertyReport rep{"conjugation closure"};
  for (std::size_t s = 0; s < rs.size(); ++s)
    for (std::size_t t = 0; t < rs.size(); ++t) {
      ++rep.instances;
      const GroupElement ts = reflection_element(rs, s);
      const GroupElement c = compose(compose(ts, reflection_element(rs, t)), ts);
      if (!as_reflection(rs, c)) rep.fail("conjugate is not a reflection");
    }
  return rep;
}

// If a_1 + ... + a_r = a is a root then a_1 = a or a_1 + a_i is a root or
// zero for some i >= 2. Lists of two or three roots are checked
// exhaustively; longer lists up to `max_terms` by random search until
// `samples` instances are found.
inline PropertyReport root_decomposition_check(const RootSystem& rs, std::size_t samples,
                                               std::uint64_t seed, std::size_t max_terms = 5) {
  require_crystallographic(rs, "root decomposition check");
  PropertyReport rep{"root decomposition"};
  std::vector<Vec> roots;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    roots.push_back(rs.root(i));
    roots.push_back(-rs.root(i));
  }
  auto is_root_or_zero = [&](const Vec& v) { return is_zero(v) || rs.lookup(v).has_value(); };
  auto check = [&](const std::vector<std::size_t>& terms, const Vec& sum) {
    ++rep.instances;
    if (roots[terms[0]] == sum) return;
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (is_root_or_zero(roots[terms[0]] + roots[terms[i]])) return;
    rep.fail("decomposition without a mergeable pair");
  };
  const std::size_t n = roots.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec ab = roots[a] + roots[b];
      if (rs.lookup(ab)) check({a, b}, ab);
      for (std::size_t c = 0; c < n; ++c) {
        const Vec abc = ab + roots[c];
        if (rs.lookup(abc)) check({a, b, c}, abc);
      }
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::size_t found = 0;
  for (std::size_t attempt = 0; found < samples && attempt < samples * 200; ++attempt) {
    const std::size_t r = 4 + attempt % (max_terms > 3 ? max_terms - 3 : 1);
    // Draw r - 1 summands and a target root; the last summand is forced.
    std::vector<std::size_t> terms;
    Vec sum(rs.ambient_dim());
    for (std::size_t i = 0; i + 1 < r; ++i) {
      terms.push_back(pick(rng));
      sum = sum + roots[terms.back()];
    }
    const std::size_t target = pick(rng);
    const auto last = rs.lookup(roots[target] - sum);
    if (!last) continue;
    terms.push_back(2 * last->index + (last->sign > 0 ? 0 : 1));
    check(terms, roots[target]);
    ++found;
  }
  return rep;
}

}  // namespace ncshell
