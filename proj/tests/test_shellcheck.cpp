#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "ncshell/ncposet.hpp"
#include "ncshell/orderings.hpp"
#include "ncshell/shellcheck.hpp"
#include "oracles.hpp"

using namespace ncshell;

namespace {

RootSystem rs_of(const char* name) { return build_root_system(CoxeterType::parse(name)); }

RootSystem dihedral(int m) { return build_root_system(CoxeterType::make(Family::I2, m)); }

Interval full(const NCPoset& p) { return interval(p, p.bottom(), p.top()); }

struct Setup {
  RootSystem rs;
  SteinbergOrder st;
  NCPoset p;
};

Setup steinberg(const RootSystem& rs) {
  auto st = steinberg_order(rs);
  NCPoset p = build_nc(rs, st.gamma);
  return {rs, std::move(st), std::move(p)};
}

const std::vector<const char*> kTypes{"A1", "A2", "A3", "A4", "B2", "B3", "B4",  "D3",
                                      "D4", "G2", "H3", "F4", "I2:5", "I2:8", "I2:12"};

}  // namespace

TEST(Classify, Examples) {
  for (int m = 3; m <= 9; ++m) {
    const auto ord = TotalOrder::by_index(static_cast<std::size_t>(m));
    const std::size_t tm = static_cast<std::size_t>(m - 1);
    const std::vector<std::size_t> rise{0, tm}, fall{1, 0};
    EXPECT_TRUE(classify_labels(rise, ord).rising);
    EXPECT_FALSE(classify_labels(rise, ord).falling);
    EXPECT_TRUE(classify_labels(fall, ord).falling);
    EXPECT_FALSE(classify_labels(fall, ord).rising);
  }
  const auto ord = TotalOrder::by_index(4);
  const std::vector<std::size_t> one{2}, mixed{0, 3, 1}, tie{1, 1};
  EXPECT_TRUE(classify_labels(one, ord).rising);
  EXPECT_TRUE(classify_labels(one, ord).falling);
  EXPECT_TRUE(classify_labels(mixed, ord).neither());
  // Weakly decreasing counts as falling.
  EXPECT_TRUE(classify_labels(tie, ord).falling);
  EXPECT_FALSE(classify_labels(tie, ord).rising);
}

TEST(LexLess, ComparesPositions) {
  const auto ord = TotalOrder::from_sequence({2, 0, 1});
  const std::vector<std::size_t> a{2, 1}, b{0, 1}, c{0, 2};
  EXPECT_TRUE(lex_less(a, b, ord));
  EXPECT_FALSE(lex_less(b, a, ord));
  EXPECT_TRUE(lex_less(c, b, ord));
  EXPECT_FALSE(lex_less(a, a, ord));
}

TEST(ELCheck, PassesForDihedralRotationalOrder) {
  for (int m = 2; m <= 12; ++m) {
    const RootSystem rs = dihedral(m);
    const NCPoset p = build_nc(rs, bipartite_coxeter_element(rs));
    const auto rep = el_check(p, TotalOrder::by_index(rs.size()));
    EXPECT_TRUE(rep.pass) << m;
    // The unique rising chain of [1, gamma] is t_1 t_m.
    const auto rising = rising_chains(p.order(), full(p), TotalOrder::by_index(rs.size()));
    ASSERT_EQ(rising.size(), 1u);
    EXPECT_EQ(rising[0].labels, (std::vector<std::size_t>{0, static_cast<std::size_t>(m - 1)}));
  }
}

TEST(ELCheck, PassesForClassicalOrders) {
  for (auto name : {"A2", "A3", "A4", "B2", "B3", "B4", "D3", "D4"}) {
    const RootSystem rs = rs_of(name);
    const auto c = classical_order(rs);
    const NCPoset p = build_nc(rs, c.gamma);
    const auto rep = el_check(p, c.order);
    EXPECT_TRUE(rep.pass) << name;
    EXPECT_EQ(static_cast<long long>(rep.falling_full), oracle::degree_product(rs.degrees(), -2));
  }
}

TEST(ELCheck, PassesForSteinbergOrders) {
  for (auto name : kTypes) {
    const auto s = steinberg(rs_of(name));
    const auto rep = el_check(s.p, s.st.order);
    EXPECT_TRUE(rep.pass) << name;
    EXPECT_FALSE(rep.witness.has_value());
    // Every non-singleton interval is accounted for once.
    std::size_t nonsingleton = 0;
    for (std::size_t u = 0; u < s.p.size(); ++u) nonsingleton += s.p.order().up(u).count() - 1;
    EXPECT_EQ(rep.intervals_covered, nonsingleton) << name;
  }
}

static bool brute_el(const NCPoset& p, const TotalOrder& ord) {
  for (std::size_t u = 0; u < p.size(); ++u)
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (u == v || !p.le(u, v)) continue;
      const auto b = oracle::brute_force(p.order(), u, v, ord);
      if (!(b.rising == 1 && b.unique && classify_labels(b.labels, ord).rising)) return false;
    }
  return true;
}

TEST(ELCheck, AdversarialOrdersFailWithWitness) {
  const RootSystem rs = rs_of("A3");
  const auto c = classical_order(rs);
  const NCPoset p = build_nc(rs, c.gamma);
  // Move each reflection to the end in turn, and also reverse the whole order.
  std::vector<TotalOrder> candidates{c.order.reversed()};
  for (std::size_t t = 0; t < rs.size(); ++t) {
    auto seq = c.order.sequence();
    seq.erase(std::find(seq.begin(), seq.end(), t));
    seq.push_back(t);
    candidates.push_back(TotalOrder::from_sequence(seq));
  }
  std::size_t failing = 0;
  for (const auto& bad : candidates) {
    const bool expect = brute_el(p, bad);
    for (bool paranoid : {false, true}) {
      const auto rep = el_check(p, bad, paranoid);
      EXPECT_EQ(rep.pass, expect);
      if (expect) continue;
      ASSERT_TRUE(rep.witness.has_value());
      const auto& w = rep.intervals[*rep.witness];
      EXPECT_FALSE(w.ok());
      EXPECT_EQ(w.rising.size(), w.rising_count);
      // The witness is really bad: confirm against brute force.
      const auto brute = oracle::brute_force(p.order(), w.bottom, w.top, bad);
      EXPECT_EQ(brute.rising, w.rising_count);
      const bool lex_rising = classify_labels(brute.labels, bad).rising;
      EXPECT_FALSE(brute.rising == 1 && brute.unique && lex_rising);
    }
    if (!expect) {
      ++failing;
      EXPECT_FALSE(compatible_with(rs, bad, p).ok());
    }
  }
  EXPECT_GT(failing, 0u);
  EXPECT_FALSE(brute_el(p, c.order.reversed()));
}

TEST(ELCheck, ParanoidAgreesWithTranslation) {
  for (auto name : {"A3", "B3", "D4", "H3"}) {
    const auto s = steinberg(rs_of(name));
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const TotalOrder ord = seed == 0 ? s.st.order : random_order(s.rs.size(), seed);
      const auto fast = el_check(s.p, ord), slow = el_check(s.p, ord, true);
      EXPECT_EQ(fast.pass, slow.pass) << name;
      EXPECT_EQ(fast.intervals_covered, slow.intervals_covered);
      EXPECT_EQ(fast.falling_full, slow.falling_full);
      std::size_t bad_fast = 0, bad_slow = 0;
      for (const auto& r : fast.intervals) bad_fast += r.ok() ? 0 : r.occurrences;
      for (const auto& r : slow.intervals) bad_slow += r.ok() ? 0 : 1;
      EXPECT_EQ(bad_fast, bad_slow) << name << " seed " << seed;
    }
  }
}

TEST(ELCheck, IntervalResultsAgreeWithBruteForce) {
  for (auto name : {"A3", "B3", "H3"}) {
    const auto s = steinberg(rs_of(name));
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const TotalOrder ord = seed == 0 ? s.st.order : random_order(s.rs.size(), seed);
      const auto rep = el_check(s.p, ord, true);
      for (const auto& r : rep.intervals) {
        const auto brute = oracle::brute_force(s.p.order(), r.bottom, r.top, ord);
        EXPECT_EQ(r.rising_count, brute.rising);
        EXPECT_EQ(r.lex_smallest.labels, brute.labels);
        EXPECT_EQ(r.lex_unique, brute.unique);
        const Interval iv = interval(s.p, r.bottom, r.top);
        EXPECT_EQ(count_falling(s.p, iv, ord), brute.falling);
        EXPECT_EQ(count_rising(s.p.order(), iv, ord), brute.rising);
      }
    }
  }
}

TEST(LexSmallestRising, RandomOrders) {
  for (auto name : {"A3", "B3", "D4", "H3"}) {
    const auto s = steinberg(rs_of(name));
    for (std::uint64_t seed = 0; seed < 100; ++seed)
      EXPECT_TRUE(lex_smallest_rising_check(s.p, random_order(s.rs.size(), seed)))
          << name << " seed " << seed;
  }
}

TEST(LexSmallestRising, EveryOrderOfI2Seven) {
  const RootSystem rs = dihedral(7);
  const NCPoset p = build_nc(rs, bipartite_coxeter_element(rs));
  std::vector<std::size_t> seq(rs.size());
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  std::size_t orders = 0;
  do {
    const auto ord = TotalOrder::from_sequence(seq);
    EXPECT_TRUE(lex_smallest_rising_check(p, ord));
    ++orders;
  } while (std::next_permutation(seq.begin(), seq.end()));
  EXPECT_EQ(orders, 5040u);
}

TEST(LexSmallestRising, MatchesBruteForce) {
  const auto s = steinberg(rs_of("B3"));
  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    const auto ord = random_order(s.rs.size(), seed);
    for (std::size_t u = 0; u < s.p.size(); ++u)
      for (std::size_t v = 0; v < s.p.size(); ++v) {
        if (u == v || !s.p.le(u, v)) continue;
        const auto lex = lex_smallest_chain(s.p.order(), interval(s.p, u, v), ord);
        const auto brute = oracle::brute_force(s.p.order(), u, v, ord);
        EXPECT_EQ(lex.chain.labels, brute.labels);
        EXPECT_EQ(lex.unique, brute.unique);
        EXPECT_TRUE(brute.unique);
        EXPECT_TRUE(classify_labels(brute.labels, ord).rising);
      }
  }
}

TEST(CountFalling, Examples) {
  for (int m = 2; m <= 12; ++m) {
    const RootSystem rs = dihedral(m);
    const NCPoset p = build_nc(rs, bipartite_coxeter_element(rs));
    EXPECT_EQ(count_falling(p, full(p), TotalOrder::by_index(rs.size())),
              static_cast<std::size_t>(m - 1));
  }
  const RootSystem a3 = rs_of("A3");
  const auto c = classical_order(a3);
  const NCPoset p = build_nc(a3, c.gamma);
  EXPECT_EQ(count_falling(p, full(p), c.order), 5u);
  EXPECT_EQ(count_falling(p, interval(p, p.bottom(), 1), c.order), 1u);
}

TEST(Mobius, Examples) {
  const RootSystem a2 = rs_of("A2");
  const NCPoset p = build_nc(a2, bipartite_coxeter_element(a2));
  EXPECT_EQ(mobius(p, interval(p, 2, 2)), 1);
  EXPECT_EQ(mobius(p, interval(p, p.bottom(), 1)), -1);
  EXPECT_EQ(mobius(p, full(p)), 2);
}

TEST(Mobius, MatchesNaiveRecursion) {
  for (auto name : {"A3", "B3", "D4", "H3", "I2:6"}) {
    const auto s = steinberg(rs_of(name));
    oracle::NaiveMobius naive(s.p.order());
    MobiusTable table(s.p.order());
    for (std::size_t u = 0; u < s.p.size(); ++u)
      for (std::size_t v = 0; v < s.p.size(); ++v) {
        EXPECT_EQ(table(u, v), naive(u, v)) << name;
        if (s.p.le(u, v)) { EXPECT_EQ(mobius(s.p, interval(s.p, u, v)), naive(u, v)); }
      }
  }
}

TEST(MobiusFalling, SteinbergOrders) {
  for (auto name : kTypes) {
    const auto s = steinberg(rs_of(name));
    const auto rep = mobius_falling_report(s.p, s.st.order);
    EXPECT_TRUE(rep.ok) << name;
    const long long sign = s.rs.rank() % 2 == 0 ? 1 : -1;
    EXPECT_EQ(rep.full_mobius, sign * oracle::degree_product(s.rs.degrees(), -2)) << name;
    EXPECT_EQ(static_cast<long long>(rep.full_falling), oracle::degree_product(s.rs.degrees(), -2));
  }
  for (int m = 2; m <= 12; ++m) {
    const auto s = steinberg(dihedral(m));
    const auto rep = mobius_falling_report(s.p, s.st.order);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.full_mobius, m - 1);
    EXPECT_EQ(rep.full_falling, static_cast<std::size_t>(m - 1));
  }
}

TEST(MobiusFalling, FailsWithoutAnELLabeling) {
  // Some random order on A3 breaks the identity; the report names a witness.
  const auto s = steinberg(rs_of("A3"));
  bool seen_failure = false;
  for (std::uint64_t seed = 0; seed < 50 && !seen_failure; ++seed) {
    const auto ord = random_order(s.rs.size(), seed);
    const auto rep = mobius_falling_report(s.p, ord);
    if (!rep.ok) {
      seen_failure = true;
      ASSERT_TRUE(rep.witness.has_value());
      const auto [u, v] = *rep.witness;
      oracle::NaiveMobius naive(s.p.order());
      EXPECT_EQ(rep.witness_mobius, naive(u, v));
      const long long sign = (s.p.rank_of(v) - s.p.rank_of(u)) % 2 == 0 ? 1 : -1;
      EXPECT_NE(rep.witness_mobius, sign * static_cast<long long>(rep.witness_falling));
    }
  }
  EXPECT_TRUE(seen_failure);
}

TEST(Factorizations, Examples) {
  for (int m = 2; m <= 12; ++m) {
    const RootSystem rs = dihedral(m);
    const NCPoset p = build_nc(rs, bipartite_coxeter_element(rs));
    const auto fs = reduced_factorizations(p, p.top());
    EXPECT_EQ(fs.size(), static_cast<std::size_t>(m));
    for (const auto& f : fs) EXPECT_EQ(product(rs, f), p.gamma());
    // gamma = t_{k+1} t_k for every k, and t_1 t_m.
    std::set<Factorization> expected{{{0, static_cast<std::size_t>(m - 1)}}};
    for (std::size_t k = 0; k + 1 < rs.size(); ++k) expected.insert({{k + 1, k}});
    EXPECT_EQ(std::set<Factorization>(fs.begin(), fs.end()), expected);
  }
  const auto a2 = steinberg(rs_of("A2"));
  EXPECT_EQ(reduced_factorizations(a2.p, a2.p.top()).size(), 3u);
  for (std::size_t t = 1; t <= a2.rs.size(); ++t) {
    const auto fs = reduced_factorizations(a2.p, t);
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_EQ(fs[0].reflections.size(), 1u);
  }
  EXPECT_THROW(reduced_factorizations(a2.p, a2.p.size()), DomainError);
}

TEST(Hurwitz, StepExamples) {
  for (int m = 3; m <= 12; ++m) {
    const RootSystem rs = dihedral(m);
    const Factorization f{{0, static_cast<std::size_t>(m - 1)}};
    const auto g = hurwitz_step(rs, f, 1);
    EXPECT_EQ(g.reflections, (std::vector<std::size_t>{1, 0})) << m;
    EXPECT_EQ(hurwitz_step_inverse(rs, g, 1), f);
    EXPECT_EQ(product(rs, g), product(rs, f));
  }
  const RootSystem rs = dihedral(5);
  const Factorization f{{0, 4}};
  EXPECT_THROW(hurwitz_step(rs, f, 0), DomainError);
  EXPECT_THROW(hurwitz_step(rs, f, 2), DomainError);
  EXPECT_THROW(hurwitz_step_inverse(rs, f, 2), DomainError);
}

TEST(Hurwitz, StepsPreserveProductAndInvert) {
  for (auto name : {"A4", "B4", "D4", "F4", "H3"}) {
    const auto s = steinberg(rs_of(name));
    for (const auto& f : reduced_factorizations(s.p, s.p.top()))
      for (std::size_t i = 1; i < f.reflections.size(); ++i) {
        const auto g = hurwitz_step(s.rs, f, i);
        EXPECT_EQ(product(s.rs, g), s.p.gamma());
        EXPECT_EQ(hurwitz_step_inverse(s.rs, g, i), f);
        EXPECT_EQ(hurwitz_step(s.rs, hurwitz_step_inverse(s.rs, f, i), i), f);
        // The new first reflection is the conjugate t_i t_{i+1} t_i.
        const auto ti = reflection_element(s.rs, f.reflections[i - 1]);
        const auto conj = compose(compose(ti, reflection_element(s.rs, f.reflections[i])), ti);
        EXPECT_EQ(reflection_element(s.rs, g.reflections[i - 1]), conj);
      }
  }
}

TEST(Hurwitz, TransitiveOnReducedFactorizations) {
  for (int m = 2; m <= 12; ++m) {
    const auto s = steinberg(dihedral(m));
    const auto rep = hurwitz_transitive_report(s.rs, s.p);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.orbit_size, static_cast<std::size_t>(m));
  }
  for (auto name : kTypes) {
    const auto s = steinberg(rs_of(name));
    const auto rep = hurwitz_transitive_report(s.rs, s.p);
    EXPECT_TRUE(rep.ok) << name;
    EXPECT_TRUE(hurwitz_transitive_check(s.rs, s.p));
    EXPECT_EQ(rep.orbit_size, count_maximal_chains(s.p.order(), full(s.p))) << name;
  }
}

TEST(RisingChain, IsSimpleSystem) {
  for (auto name : kTypes) {
    const auto s = steinberg(rs_of(name));
    EXPECT_TRUE(rising_chain_is_simple_system(s.rs, s.p, s.st.order)) << name;
  }
  for (auto name : {"A3", "B3", "D4"}) {
    const RootSystem rs = rs_of(name);
    const auto c = classical_order(rs);
    // The classical gamma is not built from the simple system, so only the
    // local statement applies.
    const NCPoset p = build_nc(rs, c.gamma);
    for (std::size_t w = 1; w < p.size(); ++w)
      EXPECT_TRUE(rising_labels_simple_for(rs, p, w, c.order)) << name << " w " << w;
  }
  const auto a2 = steinberg(rs_of("A2"));
  const auto rising = rising_chains(a2.p.order(), full(a2.p), a2.st.order);
  ASSERT_EQ(rising.size(), 1u);
  auto labels = rising[0].labels;
  std::sort(labels.begin(), labels.end());
  auto simple = a2.rs.simple();
  std::sort(simple.begin(), simple.end());
  EXPECT_EQ(labels, simple);
}

// The combinatorial model I2(m) for m = 3, 4, 6 against geometric A2, B2, G2:
// isomorphic posets through the rotational enumeration, same EL data.
TEST(DihedralCrossCheck, MatchesGeometricRankTwo) {
  for (auto [m, name] : {std::pair{3, "A2"}, std::pair{4, "B2"}, std::pair{6, "G2"}}) {
    const auto d = steinberg(dihedral(m));
    const auto g = steinberg(rs_of(name));
    EXPECT_EQ(d.p.size(), g.p.size());
    EXPECT_EQ(d.p.rank_counts(), g.p.rank_counts());
    const auto dr = el_check(d.p, d.st.order), gr = el_check(g.p, g.st.order);
    EXPECT_EQ(dr.pass, gr.pass);
    EXPECT_EQ(dr.falling_full, gr.falling_full);
    EXPECT_EQ(mobius(d.p, full(d.p)), mobius(g.p, full(g.p)));
    // The geometric Steinberg order follows the rotational order of the plane.
    const auto sub = rank2_subsystem(g.rs, g.rs.simple()[0], g.rs.simple()[1]);
    auto rot = sub.rotational_order;
    if (rot.front() != g.st.order.sequence().front()) std::reverse(rot.begin(), rot.end());
    EXPECT_EQ(g.st.order.sequence(), rot) << name;
  }
}
