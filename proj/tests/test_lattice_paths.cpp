#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "parklot/enumeration.hpp"
#include "parklot/lattice_paths.hpp"
#include "parklot/render.hpp"

using namespace parklot;

namespace {

const std::vector<int> kTwelveStepWord{2, -1, 0, 1, -1, -1, 0, 3, -1, -1, -1, 0};

WordDefect defect_of(std::vector<int> steps) {
  try {
    validate_word(std::move(steps));
  } catch (const invalid_word& e) {
    return e.defect();
  }
  ADD_FAILURE() << "word was accepted";
  return WordDefect::nonzero_total;
}

std::vector<int> down_after(int n) {
  std::vector<int> v(static_cast<std::size_t>(n), -1);
  v[0] = n - 1;
  return v;
}

} // namespace

TEST(ValidateWord, AcceptsAndRejects) {
  EXPECT_NO_THROW(validate_word(kTwelveStepWord));
  EXPECT_NO_THROW(validate_word({0, 0, 0, 0}));
  EXPECT_NO_THROW(validate_word({}));
  EXPECT_EQ(defect_of({-1, 1}), WordDefect::negative_prefix);
  EXPECT_EQ(defect_of({1, -2, 1}), WordDefect::step_below_minus_one);
  EXPECT_EQ(defect_of({1, 0}), WordDefect::nonzero_total);
  try {
    validate_word({0, -1, 1});
  } catch (const invalid_word& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(PrefixHeight, Examples) {
  const LukasiewiczWord w(kTwelveStepWord);
  EXPECT_EQ(prefix_height(w, 0), 0);
  EXPECT_EQ(prefix_height(w, 1), 2);
  EXPECT_EQ(prefix_height(w, 8), 3);
  EXPECT_EQ(prefix_height(w, 12), 0);
  EXPECT_THROW(prefix_height(w, 13), std::out_of_range);
}

TEST(Height, Examples) {
  EXPECT_EQ(height(LukasiewiczWord(kTwelveStepWord)), 3);
  EXPECT_EQ(height(LukasiewiczWord({0, 0, 0})), 0);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(height(LukasiewiczWord(down_after(n))), n - 1);
}

TEST(Area, ExamplesAgainstShoelaceOracle) {
  EXPECT_EQ(oracle::twice_area(kTwelveStepWord), 26);
  EXPECT_EQ(area(LukasiewiczWord(kTwelveStepWord)), 13);
  EXPECT_EQ(area(LukasiewiczWord({0, 0, 0, 0})), 0);
  EXPECT_EQ(oracle::twice_area({1, -1}), 2);
  EXPECT_EQ(area(LukasiewiczWord({1, -1})), 1);
}

TEST(Area, TrapeziumFormulaMatchesShoelaceOnAllWords) {
  for (int n = 0; n <= 8; ++n) {
    generate({Family::luk, n, {}}, [&](const Object& o) {
      const auto& w = std::get<LukasiewiczWord>(o);
      EXPECT_EQ(twice_area(w), oracle::twice_area(w.vector()));
      EXPECT_EQ(height(w), oracle::height(w.vector()));
      EXPECT_LE(area(w), 1LL * n * (n - 1) / 2);
    });
  }
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(area(LukasiewiczWord(down_after(n))), 1LL * n * (n - 1) / 2);
}

TEST(PlaneTree, StarAndPath) {
  for (int n = 1; n <= 6; ++n) {
    PlaneTree star;
    for (int i = 0; i < n; ++i) star.add_child(star.root());
    std::vector<int> expected(static_cast<std::size_t>(n), -1);
    expected[0] = n - 1;
    EXPECT_EQ(tree_to_word(star).vector(), expected);
    EXPECT_EQ(word_to_tree(LukasiewiczWord(expected)), star);

    PlaneTree path;
    std::size_t tip = path.root();
    for (int i = 0; i < n; ++i) tip = path.add_child(tip);
    EXPECT_EQ(tree_to_word(path).vector(), std::vector<int>(static_cast<std::size_t>(n), 0));
  }
  EXPECT_TRUE(tree_to_word(PlaneTree{}).empty());
  EXPECT_EQ(word_to_tree(LukasiewiczWord{}).node_count(), 1u);
}

TEST(PlaneTree, DownStepWordIsStarWithImplicitLeaf) {
  // (n-1, -1, ..., -1): root with n children, all leaves
  for (int n = 1; n <= 6; ++n) {
    const LukasiewiczWord w(down_after(n));
    const auto t = word_to_tree(w);
    EXPECT_EQ(t.children(t.root()).size(), static_cast<std::size_t>(n));
    EXPECT_EQ(tree_to_word(t), w);
  }
}

TEST(PlaneTree, TwelveStepWordRoundtrip) {
  const LukasiewiczWord w(kTwelveStepWord);
  const auto t = word_to_tree(w);
  EXPECT_EQ(t.node_count(), 13u);
  auto degrees = t.preorder_degrees();
  EXPECT_EQ(degrees.back(), 0);
  degrees.pop_back();
  for (std::size_t i = 0; i < degrees.size(); ++i) EXPECT_EQ(degrees[i] - 1, kTwelveStepWord[i]);
}

TEST(PlaneTree, RandomTreesRoundtrip) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    PlaneTree t;
    const int extra = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int i = 0; i < extra; ++i) {
      t.add_child(std::uniform_int_distribution<std::size_t>(0, t.node_count() - 1)(rng));
    }
    const auto w = tree_to_word(t);
    EXPECT_EQ(w.size() + 1, t.node_count());
    EXPECT_EQ(word_to_tree(w), t);
  }
}

TEST(DyckPath, ParseAndStyles) {
  const auto d = DyckPath::parse("EENENNEENN");
  EXPECT_EQ(d.heights(), (std::vector<int>{0, 0, 1, 3, 3}));
  EXPECT_EQ(d.to_string(DyckStyle::EN), "EENENNEENN");
  EXPECT_EQ(d.to_string(DyckStyle::UD), "UUDUDDUUDD");
  EXPECT_EQ(DyckPath::parse("UUDUDDUUDD"), d);
  EXPECT_THROW(DyckPath::parse("NE"), input_error);
  EXPECT_THROW(DyckPath::parse("EEN"), input_error);
  EXPECT_THROW(DyckPath::parse("EXN"), input_error);
  EXPECT_THROW(DyckPath::from_heights({0, 2}), input_error);
}

TEST(LabelledWord, Validation) {
  const LukasiewiczWord w({1, -1});
  EXPECT_NO_THROW(LabelledLukasiewiczWord(w, {std::vector<int>{2, 1}, std::nullopt}));
  EXPECT_EQ(LabelledLukasiewiczWord(w, {std::vector<int>{2, 1}, std::nullopt}).labels()[0], (std::vector<int>{1, 2}));
  EXPECT_THROW(LabelledLukasiewiczWord(w, {std::vector<int>{1}, std::nullopt}), input_error);
  EXPECT_THROW(LabelledLukasiewiczWord(w, {std::vector<int>{1, 2}, std::vector<int>{1}}), input_error);
  EXPECT_THROW(LabelledLukasiewiczWord(LukasiewiczWord({0, 0}), {std::vector<int>{1}, std::vector<int>{1}}), input_error);
  EXPECT_THROW(LabelledLukasiewiczWord(w, {std::vector<int>{1, 3}, std::nullopt}), input_error);
  EXPECT_THROW(LabelledLukasiewiczWord(w, {std::vector<int>{1, 2}}), input_error);
}

TEST(Render, AsciiShapes) {
  EXPECT_EQ(render(LukasiewiczWord({0, 0, 0})), "___\n");
  EXPECT_EQ(render(LukasiewiczWord({1, -1})), " _\n/ \\\n");
  const auto fig = render(LukasiewiczWord(kTwelveStepWord));
  // one row per unit of height, and each unit column plus down step is one cell wide
  EXPECT_EQ(std::count(fig.begin(), fig.end(), '\n'), 4);
  EXPECT_EQ(std::count(fig.begin(), fig.end(), '/'), 2 + 1 + 3);
  EXPECT_EQ(std::count(fig.begin(), fig.end(), '\\'), 6);
  EXPECT_EQ(std::count(fig.begin(), fig.end(), '_'), 6);
}

TEST(Render, AsciiAnnotationReadsPreference) {
  RenderOptions opt;
  opt.annotate_spots = true;
  const auto out = render(LukasiewiczWord(kTwelveStepWord), opt);
  EXPECT_NE(out.find("spots: 1,1,1,3,4,4,7,8,8,8,8,12"), std::string::npos);
}

TEST(Render, SvgIsDeterministicPolyline) {
  RenderOptions opt;
  opt.format = RenderFormat::svg;
  opt.scale = 10;
  const auto svg = render(LukasiewiczWord({1, -1}), opt);
  EXPECT_EQ(svg, render(LukasiewiczWord({1, -1}), opt));
  EXPECT_NE(svg.find("points=\"10,20 30,10 30,20\""), std::string::npos);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  const auto flat = render(LukasiewiczWord({0, 0}), opt);
  EXPECT_NE(flat.find("points=\"10,10 20,10 30,10\""), std::string::npos);
  opt.scale = 0;
  EXPECT_THROW(render(LukasiewiczWord({0}), opt), input_error);
}
