#pragma once

// EL-labelling verification of the natural edge labelling, rising and
// falling chains, the Moebius function, and the Hurwitz action on reduced
// reflection factorizations.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncshell/errors.hpp"
#include "ncshell/group.hpp"
#include "ncshell/ncposet.hpp"
#include "ncshell/orderings.hpp"
#include "ncshell/roots.hpp"

namespace ncshell {

// ---------------------------------------------------------------------------
// Chains.

struct ChainKind {
  bool rising = false;   // label positions strictly increase
  bool falling = false;  // label positions weakly decrease
  bool neither() const { return !rising && !falling; }
};

inline ChainKind classify_labels(std::span<const std::size_t> labels, const TotalOrder& ord) {
  ChainKind k{true, true};
  for (std::size_t i = 1; i < labels.size(); ++i) {
    const auto a = ord.position(labels[i - 1]), b = ord.position(labels[i]);
    if (!(a < b)) k.rising = false;
    if (!(b <= a)) k.falling = false;
  }
  return k;
}

inline ChainKind classify_chain(const Chain& c, const TotalOrder& ord) {
  return classify_labels(c.labels, ord);
}

// Entry-by-entry comparison of label positions.
inline bool lex_less(std::span<const std::size_t> a, std::span<const std::size_t> b,
                     const TotalOrder& ord) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const auto pa = ord.position(a[i]), pb = ord.position(b[i]);
    if (pa != pb) return pa < pb;
  }
  return a.size() < b.size();
}

inline std::size_t count_rising(const FinitePoset& p, const Interval& iv, const TotalOrder& ord) {
  std::size_t n = 0;
  walk_chains(
      p, iv,
      [&](const std::optional<std::size_t>& prev, std::size_t next) {
        return !prev || ord.position(*prev) < ord.position(next);
      },
      [&](const Chain&) { ++n; });
  return n;
}

inline std::size_t count_falling(const FinitePoset& p, const Interval& iv, const TotalOrder& ord) {
  std::size_t n = 0;
  walk_chains(
      p, iv,
      [&](const std::optional<std::size_t>& prev, std::size_t next) {
        return !prev || ord.position(next) <= ord.position(*prev);
      },
      [&](const Chain&) { ++n; });
  return n;
}

inline std::size_t count_falling(const NCPoset& p, const Interval& iv, const TotalOrder& ord) {
  return count_falling(p.order(), iv, ord);
}

inline std::vector<Chain> rising_chains(const FinitePoset& p, const Interval& iv,
                                        const TotalOrder& ord) {
  std::vector<Chain> out;
  walk_chains(
      p, iv,
      [&](const std::optional<std::size_t>& prev, std::size_t next) {
        return !prev || ord.position(*prev) < ord.position(next);
      },
      [&](const Chain& c) { out.push_back(c); });
  return out;
}

struct LexSmallest {
  Chain chain;
  bool unique = true;
};

// The lexicographically smallest maximal chain, by dynamic programming over
// the interval from the top down. Ties between equal labels are resolved by
// comparing suffixes, and uniqueness is tracked.
inline LexSmallest lex_smallest_chain(const FinitePoset& p, const Interval& iv,
                                      const TotalOrder& ord) {
  std::map<std::size_t, LexSmallest> best;
  std::vector<std::size_t> members = iv.members;
  std::sort(members.begin(), members.end(),
            [&](auto a, auto b) { return p.rank(a) > p.rank(b); });
  for (auto x : members) {
    LexSmallest here;
    here.chain.elements.push_back(x);
    if (x == iv.top) {
      best.emplace(x, std::move(here));
      continue;
    }
    std::optional<std::vector<std::size_t>> min_labels;
    std::size_t ties = 0;
    const LexSmallest* via = nullptr;
    std::size_t via_label = 0;
    for (auto c : p.up_covers(x)) {
      const auto& cv = p.cover(c);
      if (!iv.mask.test(cv.hi)) continue;
      const LexSmallest& suffix = best.at(cv.hi);
      std::vector<std::size_t> labels{cv.label};
      labels.insert(labels.end(), suffix.chain.labels.begin(), suffix.chain.labels.end());
      if (!min_labels || lex_less(labels, *min_labels, ord)) {
        min_labels = std::move(labels);
        ties = 1;
        via = &suffix;
        via_label = cv.label;
      } else if (!lex_less(*min_labels, labels, ord)) {
        ++ties;
      }
    }
    here.unique = ties == 1 && via->unique;
    here.chain.labels.push_back(via_label);
    here.chain.elements.insert(here.chain.elements.end(), via->chain.elements.begin(),
                               via->chain.elements.end());
    here.chain.labels.insert(here.chain.labels.end(), via->chain.labels.begin(),
                             via->chain.labels.end());
    best.emplace(x, std::move(here));
  }
  return best.at(iv.bottom);
}

// ---------------------------------------------------------------------------
// EL check.

struct IntervalResult {
  std::size_t bottom = 0;
  std::size_t top = 0;
  int length = 0;
  std::size_t rising_count = 0;
  Chain lex_smallest;
  bool lex_unique = true;
  bool lex_is_rising = false;
  std::size_t occurrences = 1;  // intervals [u, v] with u^{-1} v equal to this top
  std::vector<Chain> rising;    // kept for failing intervals only

  bool ok() const { return rising_count == 1 && lex_unique && lex_is_rising; }
};

struct ELReport {
  std::vector<IntervalResult> intervals;
  bool pass = true;
  bool paranoid = false;
  std::optional<std::size_t> witness;  // first failing entry of `intervals`
  std::size_t intervals_covered = 0;   // non-singleton intervals accounted for
  std::size_t falling_full = 0;        // falling maximal chains of [1, gamma]
};

inline IntervalResult check_interval(const FinitePoset& p, std::size_t u, std::size_t v,
                                     const TotalOrder& ord) {
  const Interval iv = interval(p, u, v);
  IntervalResult r;
  r.bottom = u;
  r.top = v;
  r.length = iv.length;
  r.rising_count = count_rising(p, iv, ord);
  auto lex = lex_smallest_chain(p, iv, ord);
  r.lex_smallest = std::move(lex.chain);
  r.lex_unique = lex.unique;
  r.lex_is_rising = classify_chain(r.lex_smallest, ord).rising;
  if (!r.ok()) r.rising = rising_chains(p, iv, ord);
  return r;
}

// Number of pairs u <= v, u != v, with u^{-1} v equal to each element.
inline std::vector<std::size_t> translation_occurrences(const NCPoset& p) {
  std::vector<std::size_t> occ(p.size(), 0);
  for (std::size_t u = 0; u < p.size(); ++u) {
    const GroupElement ui = inverse(p.element(u));
    const Bitset& up = p.order().up(u);
    for (auto v = up.find_next(u); v != Bitset::npos; v = up.find_next(v)) {
      if (v == u) continue;
      const auto w = p.index_of(compose(ui, p.element(v)));
      if (!w) throw InternalError("interval translate lies outside the poset");
      ++occ[*w];
    }
  }
  return occ;
}

// Checks the intervals [1, w] and weights each by its number of translates;
// with `paranoid` every non-singleton interval [u, v] is checked directly.
inline ELReport el_check(const NCPoset& p, const TotalOrder& ord, bool paranoid = false) {
  if (ord.size() != p.num_reflections()) throw DimensionError("ordering size differs from |T|");
  ELReport rep;
  rep.paranoid = paranoid;
  const FinitePoset& q = p.order();
  if (paranoid) {
    for (std::size_t u = 0; u < p.size(); ++u) {
      const Bitset& up = q.up(u);
      for (auto v = up.find_first(); v != Bitset::npos; v = up.find_next(v)) {
        if (v == u) continue;
        rep.intervals.push_back(check_interval(q, u, v, ord));
        ++rep.intervals_covered;
      }
    }
  } else {
    const auto occ = translation_occurrences(p);
    for (std::size_t w = 1; w < p.size(); ++w) {
      IntervalResult r = check_interval(q, p.bottom(), w, ord);
      r.occurrences = occ[w];
      rep.intervals_covered += occ[w];
      rep.intervals.push_back(std::move(r));
    }
  }
  for (std::size_t i = 0; i < rep.intervals.size(); ++i)
    if (!rep.intervals[i].ok()) {
      rep.pass = false;
      rep.witness = i;
      break;
    }
  rep.falling_full = count_falling(q, interval(q, p.bottom(), p.top()), ord);
  return rep;
}

// For an arbitrary total order: every non-singleton interval has a unique
// lexicographically smallest maximal chain and that chain is rising.
inline bool lex_smallest_rising_check(const NCPoset& p, const TotalOrder& ord) {
  const FinitePoset& q = p.order();
  for (std::size_t u = 0; u < p.size(); ++u) {
    const Bitset& up = q.up(u);
    for (auto v = up.find_first(); v != Bitset::npos; v = up.find_next(v)) {
      if (v == u) continue;
      const auto lex = lex_smallest_chain(q, interval(q, u, v), ord);
      if (!lex.unique || !classify_chain(lex.chain, ord).rising) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Moebius function.

// Rows mu(x, .) computed on demand by mu(x, x) = 1 and
// sum_{x <= z <= y} mu(x, z) = 0. A row is stored only once complete.
class MobiusTable {
 public:
  explicit MobiusTable(const FinitePoset& p) : p_(&p), rows_(p.size()) {}

  const std::vector<long long>& row(std::size_t x) {
    if (!rows_[x]) rows_[x] = compute(x);
    return *rows_[x];
  }

  long long operator()(std::size_t x, std::size_t y) { return row(x)[y]; }

 private:
  std::vector<long long> compute(std::size_t x) const {
    const FinitePoset& p = *p_;
    std::vector<long long> mu(p.size(), 0);
    std::vector<std::size_t> above;
    const Bitset& up = p.up(x);
    for (auto z = up.find_first(); z != Bitset::npos; z = up.find_next(z)) above.push_back(z);
    std::stable_sort(above.begin(), above.end(),
                     [&](auto a, auto b) { return p.rank(a) < p.rank(b); });
    for (auto z : above) {
      if (z == x) {
        mu[z] = 1;
        continue;
      }
      const Bitset between = up & p.down(z);
      long long s = 0;
      for (auto y = between.find_first(); y != Bitset::npos; y = between.find_next(y))
        if (y != z) s += mu[y];
      mu[z] = -s;
    }
    return mu;
  }

  const FinitePoset* p_;
  std::vector<std::optional<std::vector<long long>>> rows_;
};

inline long long mobius(const FinitePoset& p, const Interval& iv) {
  MobiusTable t(p);
  return t(iv.bottom, iv.top);
}

inline long long mobius(const NCPoset& p, const Interval& iv) { return mobius(p.order(), iv); }

struct MobiusReport {
  bool ok = true;
  std::size_t intervals_checked = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  long long witness_mobius = 0;
  std::size_t witness_falling = 0;
  long long full_mobius = 0;
  std::size_t full_falling = 0;
  explicit operator bool() const { return ok; }
};

// mu(u, v) = (-1)^{rank difference} times the falling chain count, over
// every interval including singletons.
inline MobiusReport mobius_falling_report(const NCPoset& p, const TotalOrder& ord) {
  const FinitePoset& q = p.order();
  MobiusTable mu(q);
  MobiusReport rep;
  for (std::size_t u = 0; u < p.size(); ++u) {
    const Bitset& up = q.up(u);
    for (auto v = up.find_first(); v != Bitset::npos; v = up.find_next(v)) {
      const Interval iv = interval(q, u, v);
      const long long m = mu(u, v);
      const std::size_t f = count_falling(q, iv, ord);
      const long long sign = iv.length % 2 == 0 ? 1 : -1;
      ++rep.intervals_checked;
      if (u == p.bottom() && v == p.top()) {
        rep.full_mobius = m;
        rep.full_falling = f;
      }
      if (rep.ok && m != sign * static_cast<long long>(f)) {
        rep.ok = false;
        rep.witness = {u, v};
        rep.witness_mobius = m;
        rep.witness_falling = f;
      }
    }
  }
  return rep;
}

inline bool mobius_falling_check(const NCPoset& p, const TotalOrder& ord) {
  return mobius_falling_report(p, ord).ok;
}

// ---------------------------------------------------------------------------
// Reduced factorizations and the Hurwitz action.

struct Factorization {
  std::vector<std::size_t> reflections;
  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

inline GroupElement product(const RootSystem& rs, const Factorization& f) {
  return product_of_reflections(rs, f.reflections);
}

// Label sequences of the maximal chains of [1, w].
inline std::vector<Factorization> reduced_factorizations(const NCPoset& p, std::size_t w) {
  if (w >= p.size()) throw DomainError("element index out of range");
  std::vector<Factorization> out;
  for_each_maximal_chain(p, interval(p, p.bottom(), w),
                         [&](const Chain& c) { out.push_back({c.labels}); });
  return out;
}

// (t_i, t_{i+1}) -> (t_i t_{i+1} t_i, t_i) at the 1-based position i.
inline Factorization hurwitz_step(const RootSystem& rs, Factorization f, std::size_t i) {
  if (i < 1 || i >= f.reflections.size()) throw DomainError("Hurwitz position out of range");
  const std::size_t a = f.reflections[i - 1], b = f.reflections[i];
  f.reflections[i - 1] = code_index(rs.reflect(a, positive_code(b)));
  f.reflections[i] = a;
  return f;
}

// (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1} t_i t_{i+1}), undoing hurwitz_step.
inline Factorization hurwitz_step_inverse(const RootSystem& rs, Factorization f, std::size_t i) {
  if (i < 1 || i >= f.reflections.size()) throw DomainError("Hurwitz position out of range");
  const std::size_t a = f.reflections[i - 1], b = f.reflections[i];
  f.reflections[i - 1] = b;
  f.reflections[i] = code_index(rs.reflect(b, positive_code(a)));
  return f;
}

inline std::set<Factorization> hurwitz_orbit(const RootSystem& rs, const Factorization& start) {
  std::set<Factorization> seen{start};
  std::vector<Factorization> queue{start};
  while (!queue.empty()) {
    Factorization f = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 1; i < f.reflections.size(); ++i)
      for (auto g : {hurwitz_step(rs, f, i), hurwitz_step_inverse(rs, f, i)})
        if (seen.insert(g).second) queue.push_back(std::move(g));
  }
  return seen;
}

struct HurwitzReport {
  bool ok = false;
  std::size_t orbit_size = 0;
  std::size_t factorization_count = 0;
  explicit operator bool() const { return ok; }
};

// The orbit of one reduced factorization of w equals the set of all of them.
inline HurwitzReport hurwitz_transitive_report(const RootSystem& rs, const NCPoset& p,
                                               std::size_t w) {
  const auto all = reduced_factorizations(p, w);
  HurwitzReport rep;
  rep.factorization_count = all.size();
  if (all.empty()) return rep;
  const auto orbit = hurwitz_orbit(rs, all.front());
  rep.orbit_size = orbit.size();
  rep.ok = orbit == std::set<Factorization>(all.begin(), all.end());
  return rep;
}

inline HurwitzReport hurwitz_transitive_report(const RootSystem& rs, const NCPoset& p) {
  return hurwitz_transitive_report(rs, p, p.top());
}

inline bool hurwitz_transitive_check(const RootSystem& rs, const NCPoset& p) {
  return hurwitz_transitive_report(rs, p).ok;
}

// ---------------------------------------------------------------------------
// Rising chains and simple systems.

inline std::vector<bool> to_mask(const Bitset& b) {
  std::vector<bool> m(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) m[i] = b.test(i);
  return m;
}

// True iff the label set of the rising chain of [1, w] is the simple
// system of the subsystem of reflections below w.
inline bool rising_labels_simple_for(const RootSystem& rs, const NCPoset& p, std::size_t w,
                                     const TotalOrder& ord) {
  const auto rising = rising_chains(p.order(), interval(p, p.bottom(), w), ord);
  if (rising.size() != 1) return false;
  std::vector<std::size_t> labels = rising.front().labels;
  std::sort(labels.begin(), labels.end());
  const auto mask = to_mask(p.reflections_below(w));
  if (rs.crystallographic()) {
    try {
      return simple_system_certificate(rs, mask, labels);
    } catch (const PropertyViolation&) {
      return false;
    }
  }
  return subsystem_simple_roots(rs, mask) == labels;
}

// The rising chain of [1, gamma] is labelled by the simple reflections, and
// for every w the rising chain of [1, w] by the simple system of Phi_w.
inline bool rising_chain_is_simple_system(const RootSystem& rs, const NCPoset& p,
                                          const TotalOrder& ord) {
  const auto rising = rising_chains(p.order(), interval(p, p.bottom(), p.top()), ord);
  if (rising.size() != 1) return false;
  std::vector<std::size_t> labels = rising.front().labels, simple = rs.simple();
  std::sort(labels.begin(), labels.end());
  std::sort(simple.begin(), simple.end());
  if (labels != simple) return false;
  for (std::size_t w = 1; w < p.size(); ++w)
    if (!rising_labels_simple_for(rs, p, w, ord)) return false;
  return true;
}

}  // namespace ncshell
