#include "gtm/periodicity.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gtm;

TEST(PowerCycle, MatchesOrbitOracle) {
  for (std::uint32_t L = 2; L <= 40; ++L)
    for (std::uint32_t k = 2; k <= 12; ++k) {
      const auto cycle = power_cycle(k, L);
      const auto [pre, per] = oracle::orbit_of_powers(k, L);
      ASSERT_EQ(cycle.preperiod, pre) << "k=" << k << " L=" << L;
      ASSERT_EQ(cycle.period, per) << "k=" << k << " L=" << L;
    }
}

TEST(Classify, ThueMorseIsNonPeriodic) {
  const auto verdict = classify(thue_morse());
  EXPECT_EQ(verdict.status, PeriodicityStatus::non_periodic);
  EXPECT_FALSE(verdict.shift.has_value());
  // A = 0 only: y = 1 fails because 1 != 1 * 2 (mod 2).
  ASSERT_EQ(verdict.refutations.size(), 1u);
  EXPECT_EQ(verdict.refutations[0], (Refutation{0, 1, 1}));
}

TEST(Classify, ZeroKappaIsPeriodicWithPeriodL) {
  for (std::uint32_t L = 2; L <= 5; ++L) {
    const auto verdict = classify(KappaSpec::zero(L, 3));
    ASSERT_TRUE(verdict.is_periodic());
    EXPECT_EQ(verdict.shift, 0u);
    EXPECT_EQ(*verdict.period, L);
    EXPECT_EQ(verdict.root_exponent, 0u);
  }
}

TEST(Classify, BaseThreeAlternating) {
  const auto spec = KappaSpec::constant(2, 3, {1, 0});
  const auto verdict = classify(spec);
  ASSERT_TRUE(verdict.is_periodic());
  EXPECT_EQ(verdict.shift, 0u);
  EXPECT_EQ(*verdict.period, 2);
  const auto prefix = generate_prefix_morphic(spec, 8);
  for (std::size_t n = 0; n < prefix.size(); ++n) ASSERT_EQ(prefix[n], n % 2);
}

TEST(Classify, ConstructedSpecsArePeriodicAtOrBelowTheirShift) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    const std::uint32_t L = oracle::uniform(rng, 2, 6), k = oracle::uniform(rng, 2, 5);
    const auto built = oracle::periodic_by_construction(rng, L, k, oracle::uniform(rng, 0, 3));
    const auto verdict = classify(built.spec);
    ASSERT_TRUE(verdict.is_periodic());
    EXPECT_LE(*verdict.shift, built.shift);
    EXPECT_EQ(*verdict.period, BigInt(L) * pow_big(k, *verdict.shift));
  }
}

TEST(Classify, PeriodicVerdictIsSoundOnPrefix) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 40; ++i) {
    const std::uint32_t L = oracle::uniform(rng, 2, 4), k = oracle::uniform(rng, 2, 4);
    const auto built = oracle::periodic_by_construction(rng, L, k, oracle::uniform(rng, 0, 2));
    const auto verdict = classify(built.spec);
    ASSERT_TRUE(verdict.is_periodic());
    const auto P = static_cast<std::size_t>(*verdict.period);
    const auto kA = P / L;
    const auto window = equally_spaced(built.spec, 0, 1, 4 * P);
    const auto found = brute_force_period(window.values, kA, P);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(P % found->period, 0u);
    EXPECT_LE(found->preperiod, kA);
  }
}

TEST(Classify, NonPeriodicRefutesEveryShift) {
  for (const auto& spec : oracle::random_corpus(80, 23)) {
    const auto verdict = classify(spec);
    if (!verdict.is_non_periodic()) continue;
    ASSERT_EQ(verdict.refutations.size(), spec.preperiod() + *spec.period());
    for (std::size_t A = 0; A < verdict.refutations.size(); ++A) {
      const auto& r = verdict.refutations[A];
      EXPECT_EQ(r.shift, A);
      // The refutation is a genuine failure of the congruence.
      std::uint64_t power = 1;
      for (std::uint64_t y = 0; y < r.y; ++y) power = power * spec.base() % spec.modulus();
      EXPECT_NE(spec(r.digit, A + r.y),
                spec(1, A) * r.digit % spec.modulus() * power % spec.modulus());
    }
  }
}

TEST(Classify, InvariantUnderUnrolling) {
  std::mt19937_64 rng(24);
  std::vector<KappaSpec> specs = oracle::random_corpus(60, 25);
  for (int i = 0; i < 30; ++i)
    specs.push_back(oracle::periodic_by_construction(rng, oracle::uniform(rng, 2, 6),
                                                     oracle::uniform(rng, 2, 5),
                                                     oracle::uniform(rng, 0, 3))
                        .spec);
  for (const auto& spec : specs) {
    const auto base = classify(spec);
    for (std::size_t times : {2u, 3u}) {
      const auto unrolled = classify(spec.unrolled(times));
      ASSERT_EQ(unrolled.status, base.status);
      ASSERT_EQ(unrolled.shift, base.shift);
    }
  }
}

TEST(Classify, FiniteWindowIsUnknown) {
  const auto spec = KappaSpec::finite_window(3, 3, {{1, 2, 0, 1}, {2, 2, 1, 0}});
  const auto verdict = classify(spec);
  EXPECT_EQ(verdict.status, PeriodicityStatus::unknown_up_to_bound);
  EXPECT_EQ(verdict.bound, 4u);
  const auto zero_window = classify(KappaSpec::finite_window(2, 2, {{0, 0, 0}}));
  EXPECT_EQ(zero_window.status, PeriodicityStatus::unknown_up_to_bound);
  EXPECT_EQ(zero_window.shift, 0u);
}

TEST(ClassifyConstant, Examples) {
  const std::vector<Residue> tm{1};
  EXPECT_TRUE(classify_constant(2, 2, tm).is_non_periodic());
  const std::vector<Residue> alt{1, 0};
  EXPECT_TRUE(classify_constant(2, 3, alt).is_periodic());
  const std::vector<Residue> zeros(4, 0);
  EXPECT_TRUE(classify_constant(6, 5, zeros).is_periodic());
  EXPECT_THROW(classify_constant(2, 3, tm), invalid_argument);
  const std::vector<Residue> out_of_range{2};
  EXPECT_THROW(classify_constant(2, 2, out_of_range), invalid_argument);
}

TEST(ClassifyConstant, ExhaustiveAgreementWithClassify) {
  for (std::uint32_t L = 2; L <= 6; ++L)
    for (std::uint32_t k = 2; k <= 6; ++k) {
      std::vector<Residue> values(k - 1, 0);
      while (true) {
        const auto fast = classify_constant(L, k, values);
        const auto full = classify(KappaSpec::constant(L, k, values));
        ASSERT_EQ(fast.status, full.status);
        ASSERT_EQ(fast.shift, full.shift);
        ASSERT_EQ(fast.period, full.period);
        ASSERT_EQ(fast.refutations, full.refutations);
        std::size_t i = 0;
        while (i < values.size() && ++values[i] == L) values[i++] = 0;
        if (i == values.size()) break;
      }
    }
}

TEST(BruteForcePeriod, Examples) {
  std::vector<Residue> alternating(40);
  for (std::size_t i = 0; i < alternating.size(); ++i) alternating[i] = i % 2;
  EXPECT_EQ(brute_force_period(alternating, 4, 8), (WindowPeriod{0, 2}));

  const std::vector<Residue> constant(30, 3);
  EXPECT_EQ(brute_force_period(constant, 2, 5), (WindowPeriod{0, 1}));

  std::vector<Residue> tail{2, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0};
  EXPECT_EQ(brute_force_period(tail, 3, 4), (WindowPeriod{1, 3}));
  EXPECT_EQ(brute_force_period(tail, 0, 4), std::nullopt);

  EXPECT_THROW(brute_force_period(constant, 20, 6), insufficient_length);
  EXPECT_THROW(brute_force_period(constant, 0, 0), invalid_argument);
}

TEST(BruteForcePeriod, ThueMorsePrefixHasNoPeriod) {
  const auto prefix = generate_prefix_morphic(thue_morse(), 16);
  EXPECT_EQ(brute_force_period(prefix, 0, 4096), std::nullopt);
  EXPECT_EQ(brute_force_period(prefix, 2048, 2048), std::nullopt);
}

TEST(Aenp, ThueMorseReportIsEmpty) {
  const auto report = aenp_scan(thue_morse(), 8, 8, 4096);
  EXPECT_TRUE(report.hits.empty());
  EXPECT_EQ(report.windows_scanned, 72u);
}

TEST(Aenp, PeriodicSpecFlagsEveryWindow) {
  const auto spec = KappaSpec::constant(2, 3, {1, 0});
  const auto report = aenp_scan(spec, 4, 5, 256);
  ASSERT_EQ(report.hits.size(), 25u);
  for (std::size_t i = 1; i < report.hits.size(); ++i) {
    const auto& a = report.hits[i - 1];
    const auto& b = report.hits[i];
    EXPECT_TRUE(a.stride < b.stride || (a.stride == b.stride && a.start < b.start));
  }
}

TEST(Aenp, ZeroKappaWindowsAreConstant) {
  const auto report = aenp_scan(KappaSpec::zero(3, 2), 3, 3, 64);
  ASSERT_EQ(report.hits.size(), 12u);
  for (const auto& hit : report.hits) {
    EXPECT_TRUE(hit.constant);
    EXPECT_EQ(hit.window_period, (WindowPeriod{0, 1}));
  }
}

TEST(Aenp, OutputIndependentOfJobs) {
  const auto spec = KappaSpec::constant(3, 2, {0});
  const auto serial = aenp_scan(spec, 5, 6, 128, 1);
  const auto parallel = aenp_scan(spec, 5, 6, 128, 4);
  EXPECT_EQ(serial.hits, parallel.hits);
  EXPECT_THROW(aenp_scan(spec, 1, 1, 3), insufficient_length);
}
