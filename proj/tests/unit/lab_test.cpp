#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "oracle.hpp"
#include "sgforge/census.hpp"
#include "sgforge/error.hpp"
#include "sgforge/lab.hpp"

using namespace sgforge;

namespace {

NumericalSemigroup gen(std::initializer_list<int> g) { return NumericalSemigroup::from_generators(g); }

// (S ∪ {F}) ∖ {m} computed on raw gap lists.
std::vector<int> ordinarize_by_hand(const std::vector<int>& gaps, int m) {
  std::vector<int> out(gaps.begin(), gaps.end() - 1);
  out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Wilf, Examples) {
  const auto a = check_wilf(gen({2, 3}));
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.f_plus_1, 2);
  EXPECT_EQ(a.n, 1);
  EXPECT_EQ(a.e, 2);
  const auto b = check_wilf(gen({3, 5}));
  EXPECT_EQ(b.f_plus_1, 8);
  EXPECT_EQ(b.n, 4);
  EXPECT_EQ(b.e, 2);
  const auto root = check_wilf(NumericalSemigroup{});
  EXPECT_TRUE(root.holds);
  EXPECT_EQ(root.f_plus_1, 0);
}

TEST(Wilf, NodeAgreesWithSemigroup) {
  for (int g = 0; g <= 9; ++g) {
    oracle::for_each_gapset(g, [&](const oracle::Gapset& gs) {
      const auto s = NumericalSemigroup::from_gaps(gs.gaps);
      const auto a = check_wilf(s);
      const auto b = check_wilf(Node::from_semigroup(s, 4 * g + 2 > 4 ? 4 * g + 2 : 4));
      ASSERT_EQ(a.n, b.n);
      ASSERT_EQ(a.e, b.e);
      ASSERT_EQ(a.holds, b.holds);
    });
  }
}

TEST(Ordinarization, Examples) {
  EXPECT_EQ(ordinarize(gen({2, 5})), ordinary(2));
  EXPECT_THROW(ordinarize(ordinary(4)), Error);
  // <2,7>: gaps 1,3,5; swap F = 5 for m = 2 to get gaps 1,2,3.
  EXPECT_EQ(ordinarize(gen({2, 7})), NumericalSemigroup::from_gaps(std::vector<int>{1, 2, 3}));
  const auto n = ordinarization_census(2);
  EXPECT_EQ(n[2], (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(n[0], std::vector<std::uint64_t>{1});
  EXPECT_EQ(n[1], std::vector<std::uint64_t>{1});
}

TEST(Ordinarization, Properties) {
  for (int g = 1; g <= 12; ++g) {
    oracle::for_each_gapset(g, [&](const oracle::Gapset& gs) {
      auto s = NumericalSemigroup::from_gaps(gs.gaps);
      int steps = 0;
      while (!s.is_ordinary()) {
        const auto next = ordinarize(s);
        ASSERT_EQ(next.gaps(), ordinarize_by_hand(s.gaps(), s.multiplicity()));
        ASSERT_EQ(next.genus(), g);
        ASSERT_GT(next.multiplicity(), s.multiplicity());
        s = next;
        ++steps;
      }
      ASSERT_EQ(s, ordinary(g));
      ASSERT_EQ(ordinarization_number(NumericalSemigroup::from_gaps(gs.gaps)), steps);
    });
  }
}

TEST(Ordinarization, CensusSums) {
  const auto t = census(14);
  const auto n = ordinarization_census(14);
  for (int g = 0; g <= 14; ++g) {
    std::uint64_t total = 0;
    for (auto v : n[static_cast<std::size_t>(g)]) total += v;
    EXPECT_EQ(total, t.n_of_g(g));
    EXPECT_EQ(n[static_cast<std::size_t>(g)][0], 1u);
  }
}

TEST(Buchweitz, Examples) {
  for (int g = 2; g <= 10; ++g) {
    EXPECT_TRUE(buchweitz_check(ordinary(g)));
    EXPECT_EQ(gap_sumset_size(ordinary(g)), 2 * g - 1);
    EXPECT_TRUE(buchweitz_check(gen({2, 2 * g + 1})));
    EXPECT_EQ(gap_sumset_size(gen({2, 2 * g + 1})), 2 * g - 1);
  }
  EXPECT_THROW(buchweitz_check(gen({2, 3})), Error);
}

TEST(Buchweitz, SumsetImplementationsAgree) {
  const auto b = enumerate({12, std::nullopt}, BuchweitzCollector(12, 12));
  EXPECT_EQ(b.mismatches().total(), 0u);
  for (int g = 2; g <= 12; ++g) EXPECT_EQ(b.failures(g), 0u);
}

TEST(Pflueger, Examples) {
  EXPECT_EQ(pflueger_bound(1), 0);
  EXPECT_EQ(weight_data(gen({2, 3})).effective_weight, 0);
  const auto sweep = pflueger_sweep(16);
  EXPECT_EQ(sweep.violations.total(), 0u);
  for (int g = 0; g <= 16; ++g) {
    EXPECT_LE(sweep.max_ewt[static_cast<std::size_t>(g)], sweep.bound[static_cast<std::size_t>(g)]);
  }
}

TEST(Pflueger, NodeEwtMatchesDefinition) {
  struct Audit {
    std::uint64_t bad = 0;
    void visit(const TreeFrame& f) {
      bad += effective_weight(f.node()) != weight_data(f.semigroup()).effective_weight;
    }
    void merge(const Audit& o) { bad += o.bad; }
  };
  EXPECT_EQ(enumerate({12, std::nullopt}, Audit{}).bad, 0u);
}

TEST(Ye, Identity) {
  const auto t = census(16);
  const auto y1 = ye_identity(1, t);
  EXPECT_EQ(y1.lhs, 4);
  EXPECT_EQ(t.strongly_descended(2), 2u);
  EXPECT_TRUE(y1.holds);
  const auto y0 = ye_identity(0, t);
  EXPECT_EQ(y0.lhs, 2);
  EXPECT_EQ(t.strongly_descended(1), 1u);
  EXPECT_TRUE(y0.holds);
  for (int g = 0; g <= 14; ++g) {
    const auto y = ye_identity(g, t);
    EXPECT_TRUE(y.holds) << g << ": " << y.lhs << " vs " << y.rhs;
    EXPECT_TRUE(y.corollary_holds);
  }
  EXPECT_THROW(ye_identity(15, t), Error);
}

TEST(Zhai, Examples) {
  const auto c = enumerate({12, 12}, ZhaiCollector{});
  const auto r23 = zhai_lemma_check(2, 3, c);
  EXPECT_EQ(r23.class_size, 1u);
  EXPECT_NEAR(r23.lhs, 1.0 / std::numbers::phi, 1e-12);
  EXPECT_NEAR(r23.rhs, 15.0, 1e-12);
  EXPECT_TRUE(r23.holds);
  // empty class
  const auto empty = zhai_lemma_check(7, 8, ZhaiCollector{});
  EXPECT_EQ(empty.lhs, 0.0);
  EXPECT_TRUE(empty.holds);
  EXPECT_THROW(zhai_lemma_check(3, 6, c), Error);
}

TEST(Concentration, Examples) {
  const auto t = census(12, CensusTable::kFrobeniusMultiplicity);
  const auto half = concentration_stats(t, 0.5);
  EXPECT_EQ(half.front().genus, 1);
  EXPECT_EQ(half.front().frobenius_fraction, 0.0);
  for (double eps : {0.1, 0.5, 0.999}) {
    for (const auto& r : concentration_stats(t, eps)) {
      EXPECT_GE(r.frobenius_fraction, 0.0);
      EXPECT_LE(r.frobenius_fraction, 1.0);
      EXPECT_GE(r.multiplicity_fraction, 0.0);
      EXPECT_LE(r.multiplicity_fraction, 1.0);
    }
  }
  EXPECT_THROW(concentration_stats(census(5), 0.25), Error);
}

TEST(Ratios, Examples) {
  const auto t = census(15);
  const auto rows = ratio_report(t);
  EXPECT_EQ(rows.front().genus, 2);
  EXPECT_EQ(rows.front().fib_ratio, 1.0);
  EXPECT_DOUBLE_EQ(rows[2].fib_ratio, 6.0 / 7.0);
  EXPECT_DOUBLE_EQ(rows.back().phi_ratio, 2857.0 / 1693.0);
}

TEST(Decomposition, PartsAndBounds) {
  const auto d = enumerate({18, std::nullopt}, DecompositionCollector(18));
  const auto t = census(18);
  for (int g = 0; g <= 18; ++g) {
    EXPECT_EQ(d.n2(g) + d.n3(g), t.n_of_g(g));
    EXPECT_LE(d.n2(g), t.t_f3m(g));
  }
  EXPECT_EQ(d.anchor_violations().total(), 0u);
  EXPECT_EQ(d.descendant_violations().total(), 0u);
}

TEST(WitnessList, KeepsSmallestInOrder) {
  WitnessList a(2);
  WitnessList b(2);
  a.add(ordinary(4));
  a.add(gen({2, 3}));
  b.add(gen({2, 5}));
  b.add(ordinary(6));
  a.merge(b);
  EXPECT_EQ(a.total(), 4u);
  ASSERT_EQ(a.items().size(), 2u);
  EXPECT_EQ(a.items()[0], gen({2, 3}));
  EXPECT_EQ(a.items()[1], gen({2, 5}));
}

TEST(Verification, NamesAndReports) {
  const auto& names = verification_names();
  for (const char* required : {"wilf", "ye", "bras-amoros", "ordinarization", "pflueger", "zhai-lemma",
                               "kunz-oracle", "recurrence", "buchweitz"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), required), names.end()) << required;
  }
  SweepConfig c;
  c.max_genus = 10;
  c.max_multiplicity = 6;
  for (const auto& n : names) {
    const auto r = run_verification(n, c);
    EXPECT_TRUE(r.passed()) << n << " " << r.summary_json();
    EXPECT_FALSE(r.table.columns.empty()) << n;
  }
  EXPECT_THROW(run_verification("nope", c), Error);
}

TEST(Verification, SplitIndependent) {
  SweepConfig a;
  a.max_genus = 14;
  SweepConfig b = a;
  b.parallel = {5, 3};
  for (const char* n : {"wilf", "buchweitz", "pflueger", "ordinarization", "zhai-lemma"}) {
    const auto ra = run_verification(n, a);
    const auto rb = run_verification(n, b);
    EXPECT_EQ(ra.summary_json(), rb.summary_json()) << n;
    EXPECT_EQ(ra.witnesses, rb.witnesses) << n;
    EXPECT_EQ(ra.table.rows, rb.table.rows) << n;
  }
}
