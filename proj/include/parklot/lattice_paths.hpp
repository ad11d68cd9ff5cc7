#pragma once

// Łukasiewicz words, Dyck paths, plane trees and labelled words.
//
// A Łukasiewicz word (l_1, ..., l_n) has entries >= -1, nonnegative prefix
// sums and total 0. Drawn as a lattice path, entry k is the step (k+1, k),
// so a path of n steps runs from (0,0) to (n,0) and never dips below the axis.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parklot/error.hpp"
#include "parklot/format.hpp"

namespace parklot {

enum class WordDefect { step_below_minus_one, negative_prefix, nonzero_total };

inline const char* describe(WordDefect defect) {
  switch (defect) {
  case WordDefect::step_below_minus_one: return "step below -1";
  case WordDefect::negative_prefix: return "negative prefix sum";
  case WordDefect::nonzero_total: return "nonzero total sum";
  }
  return "?";
}

class invalid_word : public input_error {
public:
  // `position` is the 1-based step at which the defect shows (n for nonzero_total).
  invalid_word(WordDefect defect, std::size_t position)
      : input_error(std::string("not a Lukasiewicz word: ") + describe(defect) + " at step " +
                    std::to_string(position)),
        defect_(defect), position_(position) {}

  WordDefect defect() const noexcept { return defect_; }
  std::size_t position() const noexcept { return position_; }

private:
  WordDefect defect_;
  std::size_t position_;
};

struct WordCheck {
  WordDefect defect;
  std::size_t position;
};

inline std::optional<WordCheck> find_word_defect(std::span<const int> steps) {
  long long sum = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] < -1) return WordCheck{WordDefect::step_below_minus_one, i + 1};
    sum += steps[i];
    if (sum < 0) return WordCheck{WordDefect::negative_prefix, i + 1};
  }
  if (sum != 0) return WordCheck{WordDefect::nonzero_total, steps.size()};
  return std::nullopt;
}

class LukasiewiczWord {
public:
  LukasiewiczWord() = default;
  explicit LukasiewiczWord(std::vector<int> steps) : steps_(std::move(steps)) {
    if (auto defect = find_word_defect(steps_)) throw invalid_word(defect->defect, defect->position);
  }

  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  // 1-based step access.
  int step(std::size_t i) const { return steps_.at(i - 1); }
  std::span<const int> values() const noexcept { return steps_; }
  const std::vector<int>& vector() const noexcept { return steps_; }

  auto operator<=>(const LukasiewiczWord&) const = default;

private:
  std::vector<int> steps_;
};

inline LukasiewiczWord validate_word(std::vector<int> steps) { return LukasiewiczWord(std::move(steps)); }

inline int prefix_height(const LukasiewiczWord& w, std::size_t j) {
  if (j > w.size()) {
    throw std::out_of_range("prefix index " + std::to_string(j) + " outside [0, " +
                            std::to_string(w.size()) + "]");
  }
  int h = 0;
  for (std::size_t i = 0; i < j; ++i) h += w.vector()[i];
  return h;
}

// h[j] = height after j steps, j = 0..n.
inline std::vector<int> prefix_heights(const LukasiewiczWord& w) {
  std::vector<int> h(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) h[i + 1] = h[i] + w.vector()[i];
  return h;
}

inline int height(const LukasiewiczWord& w) {
  const auto h = prefix_heights(w);
  return *std::max_element(h.begin(), h.end());
}

// Area under a step of size k that starts at height h, doubled: (k+1)(2h+k).
constexpr long long twice_step_area(long long k, long long h) { return (k + 1) * (2 * h + k); }

inline long long twice_area(const LukasiewiczWord& w) {
  long long total = 0;
  long long h = 0;
  for (int k : w.vector()) {
    total += twice_step_area(k, h);
    h += k;
  }
  return total;
}

inline long long area(const LukasiewiczWord& w) { return twice_area(w) / 2; }

// Prefix heights strictly positive between the endpoints. Vacuous for n <= 1.
inline bool is_prime_word(const LukasiewiczWord& w) {
  int h = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    h += w.vector()[i];
    if (h <= 0) return false;
  }
  return true;
}

inline bool is_motzkin_word(const LukasiewiczWord& w) {
  return std::all_of(w.vector().begin(), w.vector().end(), [](int k) { return k <= 1; });
}

// ---------------------------------------------------------------------------
// Plane trees

// Rooted ordered tree stored as an arena; node 0 is the root and each node
// keeps its children left to right.
class PlaneTree {
public:
  PlaneTree() : children_(1) {}

  std::size_t root() const noexcept { return 0; }
  std::size_t node_count() const noexcept { return children_.size(); }
  std::span<const std::size_t> children(std::size_t node) const { return children_.at(node); }

  std::size_t add_child(std::size_t parent) {
    if (parent >= children_.size()) throw std::out_of_range("no such node");
    children_.emplace_back();
    const std::size_t id = children_.size() - 1;
    children_[parent].push_back(id);
    return id;
  }

  // Child counts in depth-first preorder (children visited left to right).
  std::vector<int> preorder_degrees() const {
    std::vector<int> degrees;
    degrees.reserve(children_.size());
    std::vector<std::size_t> stack{root()};
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      const auto& kids = children_[node];
      degrees.push_back(static_cast<int>(kids.size()));
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return degrees;
  }

  // Shape equality; node numbering is irrelevant.
  friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
    return a.preorder_degrees() == b.preorder_degrees();
  }

private:
  std::vector<std::vector<std::size_t>> children_;
};

inline LukasiewiczWord tree_to_word(const PlaneTree& t) {
  auto degrees = t.preorder_degrees();
  degrees.pop_back(); // the last node in preorder is a leaf
  for (int& d : degrees) --d;
  return LukasiewiczWord(std::move(degrees));
}

inline PlaneTree word_to_tree(const LukasiewiczWord& w) {
  PlaneTree tree;
  // (node, children still to attach)
  std::vector<std::pair<std::size_t, int>> open;
  const std::size_t n = w.size();
  auto degree_of = [&](std::size_t i) { return i < n ? w.vector()[i] + 1 : 0; };
  open.emplace_back(tree.root(), degree_of(0));
  for (std::size_t i = 1; i <= n; ++i) {
    while (!open.empty() && open.back().second == 0) open.pop_back();
    if (open.empty()) throw std::logic_error("word does not describe a tree");
    --open.back().second;
    const std::size_t node = tree.add_child(open.back().first);
    open.emplace_back(node, degree_of(i));
  }
  return tree;
}

// ---------------------------------------------------------------------------
// Dyck paths

enum class DyckStyle { EN, UD };

// Lattice path from (0,0) to (n,n) with E=(1,0) and N=(0,1) steps that stays
// weakly below y = x. Held as the heights h_1 <= ... <= h_n of its E steps.
class DyckPath {
public:
  DyckPath() = default;

  static DyckPath from_heights(std::vector<int> heights) {
    for (std::size_t i = 0; i < heights.size(); ++i) {
      if (heights[i] < 0 || heights[i] > static_cast<int>(i) ||
          (i > 0 && heights[i] < heights[i - 1])) {
        throw input_error("invalid Dyck height sequence at E step " + std::to_string(i + 1));
      }
    }
    DyckPath d;
    d.heights_ = std::move(heights);
    return d;
  }

  // Accepts E/N or U/D letters (U reads as E, D as N).
  static DyckPath parse(std::string_view text) {
    std::vector<int> heights;
    int north = 0;
    int east = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == 'E' || c == 'U') {
        heights.push_back(north);
        ++east;
      } else if (c == 'N' || c == 'D') {
        if (++north > east) throw input_error("Dyck path crosses the diagonal at step " + std::to_string(i + 1));
      } else {
        throw input_error(std::string("unexpected Dyck step '") + c + "'");
      }
    }
    if (north != east) throw input_error("Dyck path does not end on the diagonal");
    return from_heights(std::move(heights));
  }

  std::size_t semilength() const noexcept { return heights_.size(); }
  const std::vector<int>& heights() const noexcept { return heights_; }

  std::string to_string(DyckStyle style = DyckStyle::EN) const {
    const char east = style == DyckStyle::EN ? 'E' : 'U';
    const char north = style == DyckStyle::EN ? 'N' : 'D';
    std::string out;
    const int n = static_cast<int>(heights_.size());
    for (int i = 0; i < n; ++i) {
      out += east;
      const int next = i + 1 < n ? heights_[static_cast<std::size_t>(i + 1)] : n;
      out.append(static_cast<std::size_t>(next - heights_[static_cast<std::size_t>(i)]), north);
    }
    return out;
  }

  auto operator<=>(const DyckPath&) const = default;

private:
  std::vector<int> heights_;
};

// ---------------------------------------------------------------------------
// Labelled words

// Each step of size k >= 0 carries a set of k+1 cars; down steps carry none.
// The sets partition [n].
class LabelledLukasiewiczWord {
public:
  using Label = std::optional<std::vector<int>>;

  LabelledLukasiewiczWord(LukasiewiczWord word, std::vector<Label> labels)
      : word_(std::move(word)), labels_(std::move(labels)) {
    const std::size_t n = word_.size();
    if (labels_.size() != n) throw input_error("expected one label entry per step");
    std::vector<char> seen(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const int k = word_.vector()[i];
      auto& label = labels_[i];
      if (k == -1) {
        if (label && !label->empty()) throw input_error("down step " + std::to_string(i + 1) + " carries a label");
        label.reset();
        continue;
      }
      if (!label || label->size() != static_cast<std::size_t>(k + 1)) {
        throw input_error("step " + std::to_string(i + 1) + " needs a label of size " + std::to_string(k + 1));
      }
      std::sort(label->begin(), label->end());
      for (int car : *label) {
        if (car < 1 || car > static_cast<int>(n)) throw input_error("label " + std::to_string(car) + " outside [1, n]");
        if (seen[static_cast<std::size_t>(car)]) throw input_error("car " + std::to_string(car) + " labels two steps");
        seen[static_cast<std::size_t>(car)] = 1;
      }
    }
    // Sizes sum to n and no car repeats, so every car is covered.
  }

  const LukasiewiczWord& word() const noexcept { return word_; }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  bool operator==(const LabelledLukasiewiczWord&) const = default;

private:
  LukasiewiczWord word_;
  std::vector<Label> labels_;
};

inline std::string to_string(const LukasiewiczWord& w) { return join(w.vector()); }

} // namespace parklot
