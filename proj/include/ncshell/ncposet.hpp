#pragma once

// The noncrossing partition lattice NC_W(gamma) = [1, gamma] in absolute
// order, with its natural edge labelling lambda(u, v) = u^{-1} v.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ncshell/errors.hpp"
#include "ncshell/group.hpp"
#include "ncshell/roots.hpp"

namespace ncshell {

using Bitset = boost::dynamic_bitset<>;

struct Cover {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t label = 0;  // reflection index
  friend bool operator==(const Cover&, const Cover&) = default;
};

// A finite graded poset given by its cover relations, with the order
// relation materialised as one up-set and one down-set bitset per element.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::vector<int> ranks, std::vector<Cover> covers)
      : ranks_(std::move(ranks)), covers_(std::move(covers)) {
    const std::size_t n = ranks_.size();
    up_covers_.assign(n, {});
    down_covers_.assign(n, {});
    for (std::size_t c = 0; c < covers_.size(); ++c) {
      const auto& cv = covers_[c];
      if (cv.lo >= n || cv.hi >= n) throw DomainError("cover endpoint out of range");
      if (ranks_[cv.hi] != ranks_[cv.lo] + 1) throw DomainError("cover does not raise rank by one");
      up_covers_[cv.lo].push_back(c);
      down_covers_[cv.hi].push_back(c);
    }
    for (auto& v : up_covers_)
      std::sort(v.begin(), v.end(),
                [&](auto a, auto b) { return covers_[a].label < covers_[b].label; });
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return ranks_[a] > ranks_[b]; });
    up_.assign(n, Bitset(n));
    for (auto x : order) {
      up_[x].set(x);
      for (auto c : up_covers_[x]) up_[x] |= up_[covers_[c].hi];
    }
    down_.assign(n, Bitset(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto x = *it;
      down_[x].set(x);
      for (auto c : down_covers_[x]) down_[x] |= down_[covers_[c].lo];
    }
  }

  std::size_t size() const { return ranks_.size(); }
  int rank(std::size_t x) const { return ranks_[x]; }
  const std::vector<Cover>& covers() const { return covers_; }
  const Cover& cover(std::size_t c) const { return covers_[c]; }
  // Cover indices leaving x upward, sorted by label.
  const std::vector<std::size_t>& up_covers(std::size_t x) const { return up_covers_[x]; }
  const std::vector<std::size_t>& down_covers(std::size_t x) const { return down_covers_[x]; }
  bool le(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  const Bitset& up(std::size_t x) const { return up_[x]; }
  const Bitset& down(std::size_t x) const { return down_[x]; }

 private:
  std::vector<int> ranks_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> up_covers_;
  std::vector<std::vector<std::size_t>> down_covers_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

class NCPoset;
NCPoset build_nc(const RootSystem& rs, const GroupElement& gamma);

class NCPoset {
 public:
  std::size_t size() const { return elements_.size(); }
  int rank() const { return rank_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  int rank_of(std::size_t i) const { return order_.rank(i); }
  const FinitePoset& order() const { return order_; }
  const std::vector<Cover>& covers() const { return order_.covers(); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }
  const GroupElement& gamma() const { return elements_.back(); }
  bool le(std::size_t x, std::size_t y) const { return order_.le(x, y); }

  std::optional<std::size_t> index_of(const GroupElement& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::size_t> rank_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(rank_) + 1, 0);
    for (std::size_t i = 0; i < size(); ++i) ++counts[static_cast<std::size_t>(rank_of(i))];
    return counts;
  }

  // Reflections t <= w for the element w, read off the covers above 1.
  Bitset reflections_below(std::size_t w) const {
    Bitset mask(num_reflections_);
    for (auto c : order_.up_covers(bottom())) {
      const auto& cv = order_.cover(c);
      if (le(cv.hi, w)) mask.set(cv.label);
    }
    return mask;
  }

  std::size_t num_reflections() const { return num_reflections_; }

 private:
  friend NCPoset build_nc(const RootSystem& rs, const GroupElement& gamma);

  int rank_ = 0;
  std::size_t num_reflections_ = 0;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
  FinitePoset order_;
};

// Downward breadth-first search from gamma: v t is added below v for every
// reflection t <= v, which keeps every discovered element below gamma.
// Elements are indexed by (rank, canonical key).
inline NCPoset build_nc(const RootSystem& rs, const GroupElement& gamma) {
  if (gamma.degree() != rs.size()) throw DimensionError("gamma acts on a different root system");
  const int l = rs.rank();
  if (reflection_length(rs, gamma) != static_cast<std::size_t>(l)) {
    throw DomainError("top element is not of full reflection length");
  }
  std::vector<std::map<GroupElement, std::size_t>> levels(static_cast<std::size_t>(l) + 1);
  std::vector<GroupElement> found{gamma};
  std::vector<int> rank_of{l};
  struct RawCover {
    std::size_t lo, hi, label;
  };
  std::vector<RawCover> raw;
  levels[static_cast<std::size_t>(l)].emplace(gamma, 0);
  for (int r = l; r >= 1; --r) {
    std::vector<std::size_t> current;
    for (const auto& [_, id] : levels[static_cast<std::size_t>(r)]) current.push_back(id);
    auto& below = levels[static_cast<std::size_t>(r - 1)];
    for (auto v : current) {
      const GroupElement vv = found[v];
      const Bitset mask = reflections_below(rs, vv);
      for (std::size_t t = mask.find_first(); t != Bitset::npos; t = mask.find_next(t)) {
        GroupElement u = compose(vv, reflection_element(rs, t));
        auto it = below.find(u);
        std::size_t uid;
        if (it == below.end()) {
          uid = found.size();
          below.emplace(u, uid);
          found.push_back(std::move(u));
          rank_of.push_back(r - 1);
        } else {
          uid = it->second;
        }
        raw.push_back({uid, v, t});
      }
    }
  }
  // Deterministic reindexing.
  std::vector<std::size_t> perm(found.size());
  std::size_t next = 0;
  NCPoset p;
  p.rank_ = l;
  p.num_reflections_ = rs.size();
  for (std::size_t r = 0; r <= static_cast<std::size_t>(l); ++r)
    for (const auto& [elem, id] : levels[r]) {
      perm[id] = next++;
      p.elements_.push_back(elem);
    }
  std::vector<int> ranks(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) ranks[perm[i]] = rank_of[i];
  std::vector<Cover> covers;
  covers.reserve(raw.size());
  for (const auto& c : raw) covers.push_back({perm[c.lo], perm[c.hi], c.label});
  std::sort(covers.begin(), covers.end(), [](const Cover& a, const Cover& b) {
    return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
  });
  for (std::size_t i = 0; i < p.elements_.size(); ++i) p.index_.emplace(p.elements_[i], i);
  if (!p.elements_.front().is_identity()) throw InternalError("bottom of NC is not the identity");
  p.order_ = FinitePoset(std::move(ranks), std::move(covers));
  return p;
}

// ---------------------------------------------------------------------------
// Intervals and chains.

struct Interval {
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::vector<std::size_t> members;  // ascending
  std::vector<std::size_t> covers;   // cover indices inside the interval
  Bitset mask;
  int length = 0;
};

struct Chain {
  std::vector<std::size_t> elements;
  std::vector<std::size_t> labels;
};

inline Interval interval(const FinitePoset& p, std::size_t u, std::size_t v) {
  if (u >= p.size() || v >= p.size()) throw DomainError("interval endpoint out of range");
  if (!p.le(u, v)) throw DomainError("interval endpoints are incomparable");
  Interval iv;
  iv.bottom = u;
  iv.top = v;
  iv.mask = p.up(u) & p.down(v);
  iv.length = p.rank(v) - p.rank(u);
  for (auto x = iv.mask.find_first(); x != Bitset::npos; x = iv.mask.find_next(x)) {
    iv.members.push_back(x);
    for (auto c : p.up_covers(x))
      if (iv.mask.test(p.cover(c).hi)) iv.covers.push_back(c);
  }
  return iv;
}

inline Interval interval(const NCPoset& p, std::size_t u, std::size_t v) {
  return interval(p.order(), u, v);
}

// Depth-first walk over the maximal chains of an interval; `step` decides
// whether a cover with label `next` may follow a cover with label `prev`
// (prev is empty for the first step). Visits chains in label-index order.
template <typename Step, typename Visit>
void walk_chains(const FinitePoset& p, const Interval& iv, Step&& step, Visit&& visit) {
  Chain chain;
  chain.elements.push_back(iv.bottom);
  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (x == iv.top) {
      visit(static_cast<const Chain&>(chain));
      return;
    }
    for (auto c : p.up_covers(x)) {
      const auto& cv = p.cover(c);
      if (!iv.mask.test(cv.hi)) continue;
      const std::optional<std::size_t> prev =
          chain.labels.empty() ? std::nullopt : std::optional<std::size_t>(chain.labels.back());
      if (!step(prev, cv.label)) continue;
      chain.elements.push_back(cv.hi);
      chain.labels.push_back(cv.label);
      go(cv.hi);
      chain.elements.pop_back();
      chain.labels.pop_back();
    }
  };
  go(iv.bottom);
}

template <typename Visit>
void for_each_maximal_chain(const NCPoset& p, const Interval& iv, Visit&& visit) {
  walk_chains(
      p.order(), iv, [](const std::optional<std::size_t>&, std::size_t) { return true; },
      std::forward<Visit>(visit));
}

inline std::vector<Chain> maximal_chains(const NCPoset& p, const Interval& iv) {
  std::vector<Chain> out;
  for_each_maximal_chain(p, iv, [&](const Chain& c) { out.push_back(c); });
  return out;
}

inline std::size_t count_maximal_chains(const FinitePoset& p, const Interval& iv) {
  // Path counting from the top down.
  std::vector<std::size_t> ways(p.size(), 0);
  ways[iv.top] = 1;
  std::vector<std::size_t> members = iv.members;
  std::sort(members.begin(), members.end(),
            [&](auto a, auto b) { return p.rank(a) > p.rank(b); });
  for (auto x : members) {
    if (x == iv.top) continue;
    for (auto c : p.up_covers(x))
      if (iv.mask.test(p.cover(c).hi)) ways[x] += ways[p.cover(c).hi];
  }
  return ways[iv.bottom];
}

// ---------------------------------------------------------------------------
// Structural checks.

// Every pair has a join and a meet.
inline bool is_lattice(const FinitePoset& p) {
  const std::size_t n = p.size();
  auto has_extreme = [&](const Bitset& bounds, bool upper) {
    for (auto z = bounds.find_first(); z != Bitset::npos; z = bounds.find_next(z)) {
      const Bitset& cone = upper ? p.up(z) : p.down(z);
      if (cone == bounds) return true;
    }
    return false;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const Bitset ub = p.up(x) & p.up(y);
      if (ub.none() || !has_extreme(ub, true)) return false;
      const Bitset lb = p.down(x) & p.down(y);
      if (lb.none() || !has_extreme(lb, false)) return false;
    }
  return true;
}

inline bool is_lattice(const NCPoset& p) { return is_lattice(p.order()); }

// w -> w^{-1} gamma is an order-reversing bijection of NC_W(gamma).
inline bool self_duality_check(const NCPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> image(n);
  Bitset hit(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = p.index_of(compose(inverse(p.element(i)), p.gamma()));
    if (!j || hit.test(*j)) return false;
    hit.set(*j);
    image[i] = *j;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.le(x, y) != p.le(image[y], image[x])) return false;
  return true;
}

// x -> u x is a label-preserving isomorphism [1, u^{-1} v] -> [u, v].
inline bool interval_translate_check(const NCPoset& p, std::size_t u, std::size_t v) {
  if (!p.le(u, v)) return false;
  const GroupElement& ue = p.element(u);
  const auto w = p.index_of(compose(inverse(ue), p.element(v)));
  if (!w) return false;
  const Interval source = interval(p, p.bottom(), *w);
  const Interval target = interval(p, u, v);
  if (source.members.size() != target.members.size() ||
      source.covers.size() != target.covers.size()) {
    return false;
  }
  std::unordered_map<std::size_t, std::size_t> f;
  Bitset image(p.size());
  for (auto x : source.members) {
    const auto y = p.index_of(compose(ue, p.element(x)));
    if (!y || !target.mask.test(*y) || image.test(*y)) return false;
    image.set(*y);
    f.emplace(x, *y);
  }
  for (auto c : source.covers) {
    const auto& cv = p.order().cover(c);
    const auto lo = f.at(cv.lo), hi = f.at(cv.hi);
    bool found = false;
    for (auto d : p.order().up_covers(lo)) {
      const auto& dv = p.order().cover(d);
      if (dv.hi == hi) {
        found = dv.label == cv.label;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ncshell
