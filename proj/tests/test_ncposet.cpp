#include <algorithm>

#include <gtest/gtest.h>

#include "ncshell/ncposet.hpp"
#include "ncshell/orderings.hpp"
#include "oracles.hpp"

using namespace ncshell;

namespace {

RootSystem rs_of(const char* name) { return build_root_system(CoxeterType::parse(name)); }

NCPoset nc_of(const RootSystem& rs) { return build_nc(rs, bipartite_coxeter_element(rs)); }

const std::vector<const char*> kTypes{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D3",
                                      "D4", "G2", "F4", "H3", "I2:5", "I2:7", "I2:12"};

// Cycles of the permutation matrix of a type-A element as a set partition.
oracle::Partition cycle_partition(const RootSystem& rs, const GroupElement& w) {
  const Matrix m = ambient_matrix(rs, w);
  const std::size_t n = m.size();
  std::vector<std::size_t> image(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][j] == Scalar(1)) image[j] = i;
  std::vector<bool> seen(n, false);
  oracle::Partition p;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> block;
    for (std::size_t x = s; !seen[x]; x = image[x]) {
      seen[x] = true;
      block.push_back(static_cast<int>(x) + 1);
    }
    p.push_back(block);
  }
  return oracle::normalize(p);
}

}  // namespace

TEST(BuildNC, DihedralHasMPlusTwoElements) {
  for (int m = 2; m <= 12; ++m) {
    const RootSystem rs = build_root_system(CoxeterType::make(Family::I2, m));
    const NCPoset p = nc_of(rs);
    EXPECT_EQ(p.size(), static_cast<std::size_t>(m + 2));
    EXPECT_EQ(p.rank_counts(), (std::vector<std::size_t>{1, static_cast<std::size_t>(m), 1}));
  }
}

TEST(BuildNC, SmallTypeACounts) {
  EXPECT_EQ(nc_of(rs_of("A2")).size(), 5u);
  EXPECT_EQ(nc_of(rs_of("A3")).size(), 14u);
  EXPECT_EQ(nc_of(rs_of("D3")).size(), 14u);
}

TEST(BuildNC, TypeAMatchesClassicalNoncrossingPartitions) {
  for (int n = 2; n <= 5; ++n) {
    const RootSystem rs = build_root_system(CoxeterType::make(Family::A, n - 1));
    const auto classical = classical_order(rs);
    const NCPoset p = build_nc(rs, classical.gamma);
    std::vector<oracle::Partition> got;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto part = cycle_partition(rs, p.element(i));
      EXPECT_EQ(p.rank_of(i), n - static_cast<int>(part.size()));
      got.push_back(part);
    }
    std::sort(got.begin(), got.end());
    auto expected = oracle::noncrossing_partitions(n);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected) << "n = " << n;
  }
}

TEST(BuildNC, ElementCountIsCatalanNumber) {
  for (auto name : kTypes) {
    const RootSystem rs = rs_of(name);
    EXPECT_EQ(static_cast<long long>(nc_of(rs).size()), oracle::degree_product(rs.degrees(), 0))
        << name;
  }
}

TEST(BuildNC, RejectsNonCoxeterTop) {
  const RootSystem rs = rs_of("A3");
  EXPECT_THROW(build_nc(rs, reflection_element(rs, 0)), DomainError);
  EXPECT_THROW(build_nc(rs, GroupElement::identity(rs.size())), DomainError);
  EXPECT_THROW(build_nc(rs, GroupElement::identity(2)), DimensionError);
}

TEST(BuildNC, StructuralInvariants) {
  for (auto name : kTypes) {
    const RootSystem rs = rs_of(name);
    const NCPoset p = nc_of(rs);
    EXPECT_TRUE(p.element(p.bottom()).is_identity());
    EXPECT_EQ(p.gamma(), bipartite_coxeter_element(rs));
    EXPECT_EQ(p.rank(), rs.rank());
    for (const auto& c : p.covers()) {
      EXPECT_EQ(p.rank_of(c.hi), p.rank_of(c.lo) + 1);
      const auto lab = compose(inverse(p.element(c.lo)), p.element(c.hi));
      EXPECT_EQ(as_reflection(rs, lab), c.label) << name;
    }
    // Atoms are exactly the reflections.
    std::vector<std::size_t> atoms;
    for (auto c : p.order().up_covers(p.bottom())) atoms.push_back(p.order().cover(c).label);
    std::sort(atoms.begin(), atoms.end());
    std::vector<std::size_t> all(rs.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    EXPECT_EQ(atoms, all) << name;
    // Symmetric rank counts.
    const auto rc = p.rank_counts();
    EXPECT_TRUE(std::equal(rc.begin(), rc.end(), rc.rbegin())) << name;
    for (std::size_t i = 1; i < p.size(); ++i)
      EXPECT_TRUE(p.rank_of(i - 1) < p.rank_of(i) ||
                  (p.rank_of(i - 1) == p.rank_of(i) && p.element(i - 1) < p.element(i)));
  }
}

TEST(BuildNC, DeterministicIndexing) {
  const RootSystem rs = rs_of("B3");
  const NCPoset a = nc_of(rs), b = nc_of(rs);
  EXPECT_EQ(a.elements(), b.elements());
  EXPECT_EQ(a.covers(), b.covers());
}

TEST(IntervalTest, Examples) {
  const RootSystem rs = rs_of("A3");
  const NCPoset p = nc_of(rs);
  const Interval full = interval(p, p.bottom(), p.top());
  EXPECT_EQ(full.members.size(), p.size());
  EXPECT_EQ(full.covers.size(), p.covers().size());
  EXPECT_EQ(full.length, 3);
  const Interval single = interval(p, 3, 3);
  EXPECT_EQ(single.members, std::vector<std::size_t>{3});
  EXPECT_EQ(single.length, 0);
  const Interval atom = interval(p, p.bottom(), 1);
  EXPECT_EQ(atom.members.size(), 2u);
  EXPECT_EQ(maximal_chains(p, atom).size(), 1u);
  EXPECT_THROW(interval(p, 1, 2), DomainError);
  EXPECT_THROW(interval(p, p.top(), p.bottom()), DomainError);
  EXPECT_THROW(interval(p, 0, p.size()), DomainError);
}

TEST(IntervalTest, MembersAreTheClosedRange) {
  const RootSystem rs = rs_of("D4");
  const NCPoset p = nc_of(rs);
  for (std::size_t u = 0; u < p.size(); u += 3)
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (!p.le(u, v)) continue;
      const Interval iv = interval(p, u, v);
      std::vector<std::size_t> expected;
      for (std::size_t x = 0; x < p.size(); ++x)
        if (absolute_le(rs, p.element(u), p.element(x)) &&
            absolute_le(rs, p.element(x), p.element(v)))
          expected.push_back(x);
      EXPECT_EQ(iv.members, expected);
      EXPECT_EQ(iv.length, p.rank_of(v) - p.rank_of(u));
    }
}

TEST(Chains, Examples) {
  for (int m = 2; m <= 12; ++m) {
    const RootSystem rs = build_root_system(CoxeterType::make(Family::I2, m));
    const NCPoset p = nc_of(rs);
    const Interval full = interval(p, p.bottom(), p.top());
    EXPECT_EQ(maximal_chains(p, full).size(), static_cast<std::size_t>(m));
    EXPECT_EQ(count_maximal_chains(p.order(), full), static_cast<std::size_t>(m));
  }
  const NCPoset a2 = nc_of(rs_of("A2"));
  EXPECT_EQ(maximal_chains(a2, interval(a2, a2.bottom(), a2.top())).size(), 3u);
}

TEST(Chains, CountsAgreeWithBruteForceAndFormula) {
  // n^{n-2} chains in type A_{n-1}; h^l l! / |W| in general.
  const std::vector<std::pair<const char*, std::size_t>> known{
      {"A3", 16}, {"A4", 125}, {"B3", 27}, {"B4", 256}, {"D4", 162}, {"H3", 50}, {"F4", 432}};
  for (auto [name, count] : known) {
    const NCPoset p = nc_of(rs_of(name));
    const Interval full = interval(p, p.bottom(), p.top());
    EXPECT_EQ(count_maximal_chains(p.order(), full), count) << name;
    EXPECT_EQ(oracle::all_label_sequences(p.order(), p.bottom(), p.top()).size(), count);
  }
  for (auto name : {"A3", "B3", "H3"}) {
    const RootSystem rs = rs_of(name);
    const NCPoset p = nc_of(rs);
    for (std::size_t u = 0; u < p.size(); ++u)
      for (std::size_t v = 0; v < p.size(); ++v) {
        if (!p.le(u, v)) continue;
        const Interval iv = interval(p, u, v);
        const auto chains = maximal_chains(p, iv);
        auto brute = oracle::all_label_sequences(p.order(), u, v);
        std::vector<std::vector<std::size_t>> labels;
        for (const auto& c : chains) {
          labels.push_back(c.labels);
          EXPECT_EQ(c.elements.size(), c.labels.size() + 1);
          for (std::size_t i = 0; i < c.labels.size(); ++i) {
            const auto lab = compose(inverse(p.element(c.elements[i])), p.element(c.elements[i + 1]));
            EXPECT_EQ(as_reflection(rs, lab).value(), c.labels[i]);
          }
        }
        EXPECT_TRUE(std::is_sorted(labels.begin(), labels.end())) << "label-index order";
        std::sort(brute.begin(), brute.end());
        EXPECT_EQ(labels, brute) << name;
        EXPECT_EQ(count_maximal_chains(p.order(), iv), chains.size());
      }
  }
}

TEST(Lattice, NoncrossingPosetsAreLattices) {
  for (auto name : kTypes) EXPECT_TRUE(is_lattice(nc_of(rs_of(name)))) << name;
}

TEST(Lattice, TwoByTwoAntichainIsNot) {
  // 0 < a, b < c, d < 1: a and b have two minimal upper bounds.
  const std::vector<int> ranks{0, 1, 1, 2, 2, 3};
  std::vector<Cover> covers{{0, 1, 0}, {0, 2, 1}, {1, 3, 2}, {1, 4, 3}, {2, 3, 4},
                            {2, 4, 5}, {3, 5, 6}, {4, 5, 7}};
  const FinitePoset bowtie(ranks, covers);
  EXPECT_FALSE(is_lattice(bowtie));
  // Removing one of the crossing covers restores meets and joins.
  covers.erase(covers.begin() + 5);
  EXPECT_TRUE(is_lattice(FinitePoset(ranks, covers)));
}

TEST(Lattice, RejectsMalformedPosets) {
  EXPECT_THROW(FinitePoset({0, 2}, {{0, 1, 0}}), DomainError);
  EXPECT_THROW(FinitePoset({0, 1}, {{0, 2, 0}}), DomainError);
}

TEST(SelfDuality, Holds) {
  for (auto name : kTypes) EXPECT_TRUE(self_duality_check(nc_of(rs_of(name)))) << name;
  for (auto name : {"A3", "B3", "D4"}) {
    const RootSystem rs = rs_of(name);
    EXPECT_TRUE(self_duality_check(build_nc(rs, classical_order(rs).gamma))) << name;
  }
}

TEST(Translation, EveryIntervalOfA3AndB3) {
  for (auto name : {"A3", "B3", "D4", "H3"}) {
    const NCPoset p = nc_of(rs_of(name));
    EXPECT_TRUE(interval_translate_check(p, p.bottom(), p.top()));
    std::size_t checked = 0;
    for (std::size_t u = 0; u < p.size(); ++u)
      for (std::size_t v = 0; v < p.size(); ++v)
        if (p.le(u, v)) {
          EXPECT_TRUE(interval_translate_check(p, u, v)) << name << " [" << u << ", " << v << "]";
          ++checked;
        }
    EXPECT_GT(checked, p.size());
    EXPECT_FALSE(interval_translate_check(p, 1, 2));
  }
}

TEST(Labels, ChainLabelsAreDistinct) {
  for (auto name : {"A4", "B4", "D4", "F4", "H3"}) {
    const NCPoset p = nc_of(rs_of(name));
    for_each_maximal_chain(p, interval(p, p.bottom(), p.top()), [&](const Chain& c) {
      auto s = c.labels;
      std::sort(s.begin(), s.end());
      EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end()) << name;
    });
  }
}
