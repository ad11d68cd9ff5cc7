#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "parklot/bijections.hpp"
#include "parklot/enumeration.hpp"

using namespace parklot;

namespace {

const std::vector<int> kTwelveStepWord{2, -1, 0, 1, -1, -1, 0, 3, -1, -1, -1, 0};
const std::vector<int> kSortedPf{1, 1, 1, 3, 4, 4, 7, 8, 8, 8, 8, 12};
const std::vector<int> kRelabelledPf{8, 1, 1, 12, 3, 4, 8, 4, 7, 1, 8, 8};

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return v;
}

template <class Fn>
void for_each_pf_inc(int n, Fn fn) {
  generate({Family::pf_inc, n, {}}, [&](const Object& o) { fn(std::get<ParkingPreference>(o)); });
}

} // namespace

TEST(PsiPfToLuk, Examples) {
  EXPECT_EQ(psi_pf_to_luk(ParkingPreference(kSortedPf)).vector(), kTwelveStepWord);
  EXPECT_EQ(psi_pf_to_luk(ParkingPreference(kRelabelledPf)).vector(), kTwelveStepWord);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(psi_pf_to_luk(ParkingPreference(iota_vec(n))).vector(), std::vector<int>(static_cast<std::size_t>(n), 0));
  }
  EXPECT_EQ(psi_pf_to_luk(ParkingPreference({1, 2, 1})).vector(), (std::vector<int>{1, 0, -1}));
  EXPECT_THROW(psi_pf_to_luk(ParkingPreference({2, 2})), domain_error);
}

TEST(PsiLukToPf, Examples) {
  EXPECT_EQ(psi_luk_to_pf(LukasiewiczWord(kTwelveStepWord)).vector(), kSortedPf);
  EXPECT_EQ(psi_luk_to_pf(LukasiewiczWord({0, 0, 0, 0})).vector(), iota_vec(4));
  EXPECT_EQ(psi_luk_to_pf(LukasiewiczWord({3, -1, -1, -1})).vector(), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_THROW(psi_luk_to_pf(LukasiewiczWord{}), domain_error);
}

TEST(GraphicalReading, Examples) {
  EXPECT_EQ(psi_luk_to_pf_graphical(LukasiewiczWord(kTwelveStepWord)).vector(), kSortedPf);
  EXPECT_EQ(psi_luk_to_pf_graphical(LukasiewiczWord({0, 0, 0})).vector(), iota_vec(3));
  for (int n = 1; n <= 8; ++n) {
    generate({Family::luk, n, {}}, [&](const Object& o) {
      const auto& w = std::get<LukasiewiczWord>(o);
      EXPECT_EQ(psi_luk_to_pf_graphical(w), psi_luk_to_pf(w));
    });
  }
}

TEST(PfToDyck, Examples) {
  const ParkingPreference p({1, 1, 2, 4, 4});
  EXPECT_EQ(pf_to_dyck_string(p, DyckStyle::EN), "EENENNEENN");
  EXPECT_EQ(pf_to_dyck(p).to_string(), "EENENNEENN");
  EXPECT_EQ(pf_to_dyck_string(p, DyckStyle::UD), "UUDUDDUUDD");
  std::string en;
  for (int i = 0; i < 4; ++i) en += "EN";
  EXPECT_EQ(pf_to_dyck_string(ParkingPreference(iota_vec(4)), DyckStyle::EN), en);
  EXPECT_EQ(pf_to_dyck_string(ParkingPreference({1, 1, 1, 1}), DyckStyle::EN), "EEEENNNN");
  EXPECT_THROW(pf_to_dyck(ParkingPreference({2, 1})), domain_error);
  EXPECT_THROW(pf_to_dyck(ParkingPreference({2, 2})), domain_error);
}

TEST(DyckArea, ExamplesAgainstSquareCountOracle) {
  EXPECT_EQ(oracle::dyck_area("EENENNEENN"), 3);
  EXPECT_EQ(dyck_area(DyckPath::parse("EENENNEENN")), 3);
  EXPECT_EQ(dyck_area(DyckPath::parse("ENENENEN")), 0);
  for (int n = 1; n <= 7; ++n) {
    const auto staircase = std::string(static_cast<std::size_t>(n), 'E') + std::string(static_cast<std::size_t>(n), 'N');
    EXPECT_EQ(oracle::dyck_area(staircase), n * (n - 1) / 2);
    EXPECT_EQ(dyck_area(DyckPath::parse(staircase)), n * (n - 1) / 2);
    EXPECT_EQ(displacement(ParkingPreference(std::vector<int>(static_cast<std::size_t>(n), 1))).total(), n * (n - 1) / 2);
  }
  for (int n = 1; n <= 7; ++n) {
    generate({Family::dyck, n, {}}, [&](const Object& o) {
      const auto& d = std::get<DyckPath>(o);
      EXPECT_EQ(dyck_area(d), oracle::dyck_area(d.to_string()));
    });
  }
}

TEST(Labelled, EncodeRelabelledExample) {
  const auto lw = encode_labelled(ParkingPreference(kRelabelledPf));
  EXPECT_EQ(lw.word().vector(), kTwelveStepWord);
  using L = LabelledLukasiewiczWord::Label;
  const std::vector<L> expected{std::vector<int>{2, 3, 10}, std::nullopt, std::vector<int>{5}, std::vector<int>{6, 8},
                                std::nullopt, std::nullopt, std::vector<int>{9}, std::vector<int>{1, 7, 11, 12},
                                std::nullopt, std::nullopt, std::nullopt, std::vector<int>{4}};
  EXPECT_EQ(lw.labels(), expected);
  EXPECT_EQ(decode_labelled(LabelledLukasiewiczWord(LukasiewiczWord(kTwelveStepWord), expected)).vector(), kRelabelledPf);
}

TEST(Labelled, IdentityHasSingletonLabels) {
  const auto lw = encode_labelled(ParkingPreference(iota_vec(5)));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(*lw.labels()[static_cast<std::size_t>(i)], std::vector<int>{i + 1});
  EXPECT_EQ(decode_labelled(lw).vector(), iota_vec(5));
}

TEST(Labelled, NonDecreasingGivesConsecutiveBlocks) {
  for (int n = 1; n <= 7; ++n) {
    for_each_pf_inc(n, [&](const ParkingPreference& p) {
      int next = 1;
      for (const auto& label : encode_labelled(p).labels()) {
        if (!label) continue;
        for (int car : *label) EXPECT_EQ(car, next++);
      }
    });
  }
}

TEST(PrimeReduce, Examples) {
  EXPECT_EQ(prime_luk_reduce(LukasiewiczWord({3, -1, -1, 1, 0, -1, 0, -1})).vector(),
            (std::vector<int>{2, -1, -1, 1, 0, -1, 0}));
  EXPECT_EQ(prime_luk_reduce(LukasiewiczWord({1, -1})).vector(), std::vector<int>{0});
  EXPECT_TRUE(prime_luk_reduce(LukasiewiczWord({0})).empty());
  EXPECT_THROW(prime_luk_reduce(LukasiewiczWord({0, 0})), domain_error);
  EXPECT_THROW(prime_luk_reduce(LukasiewiczWord(kTwelveStepWord)), domain_error);
}

TEST(PrimeReduce, RoundtripsAndIsOnto) {
  for (int n = 1; n <= 9; ++n) {
    std::set<std::vector<int>> image;
    generate({Family::prime_luk, n, {}}, [&](const Object& o) {
      const auto& w = std::get<LukasiewiczWord>(o);
      const auto r = prime_luk_reduce(w);
      EXPECT_EQ(prime_luk_extend(r), w);
      image.insert(r.vector());
    });
    EXPECT_EQ(image.size(), oracle::catalan(n - 1));
  }
}

TEST(PrimeTruncate, Examples) {
  EXPECT_EQ(prime_pf_truncate(ParkingPreference({1, 1, 1, 1})).vector(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(breakpoints(ParkingPreference({1, 1, 2})), std::vector<int>{3});
  EXPECT_EQ(prime_pf_truncate(ParkingPreference({1, 1, 2})).vector(), (std::vector<int>{1, 2}));
  EXPECT_THROW(prime_pf_truncate(ParkingPreference({1, 2, 3})), domain_error);
  EXPECT_THROW(prime_pf_truncate(ParkingPreference({1, 2, 1})), domain_error);
  for (int n = 2; n <= 9; ++n) {
    std::set<std::vector<int>> image;
    generate({Family::prime_pf_inc, n, {}}, [&](const Object& o) {
      const auto& p = std::get<ParkingPreference>(o);
      const auto q = prime_pf_truncate(p);
      EXPECT_EQ(prime_pf_extend(q), p);
      EXPECT_TRUE(is_parking_function(q));
      image.insert(q.vector());
    });
    EXPECT_EQ(image.size(), oracle::catalan(n - 1));
  }
}

TEST(Fiber, LexicographicDistinctPermutations) {
  std::vector<std::vector<int>> seen;
  for (const auto& p : fiber(LukasiewiczWord({1, 0, -1}))) seen.push_back(p);
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));
  std::size_t count = 0;
  for (const auto& p : fiber(LukasiewiczWord(kTwelveStepWord))) {
    (void)p;
    ++count;
  }
  // 12! / (3! 1! 2! 1! 4! 1!)
  EXPECT_EQ(count, 479001600u / (6 * 2 * 24));
}

TEST(StatisticTransport, NonDecreasingAreaAndHeight) {
  for (int n = 1; n <= 8; ++n) {
    for_each_pf_inc(n, [&](const ParkingPreference& p) {
      const auto d = displacement(p);
      const auto w = psi_pf_to_luk(p);
      EXPECT_EQ(d.total(), area(w));
      EXPECT_EQ(d.max(), height(w));
      EXPECT_EQ(psi_luk_to_pf(w), p);
    });
  }
}

TEST(StatisticTransport, RelabelledWitnessBreaksHeight) {
  const ParkingPreference p(kRelabelledPf);
  const auto w = psi_pf_to_luk(p);
  EXPECT_EQ(displacement(p).total(), area(w));
  EXPECT_EQ(displacement(p).max(), 5);
  EXPECT_EQ(height(w), 3);
}

TEST(PerStepBlock, WorkedExample) {
  // cars preferring spot 8 are cars 8..11 at height 0 before a step of size 3
  const ParkingPreference p(kSortedPf);
  const auto d = displacement(p).vector();
  EXPECT_EQ((std::vector<int>(d.begin() + 7, d.begin() + 11)), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(twice_step_area(3, 0), 2 * (0 + 1 + 2 + 3));
  // cars preferring spot 1: block (0,1,2) under step 2 at height 0
  EXPECT_EQ((std::vector<int>(d.begin(), d.begin() + 3)), (std::vector<int>{0, 1, 2}));
}
