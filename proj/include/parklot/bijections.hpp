#pragma once

// Maps between parking functions, Łukasiewicz words, Dyck paths, plane trees
// and labelled words, plus the prime reductions.
//
// psi_pf_to_luk sends p to the word whose i-th entry is one less than the
// number of cars preferring spot i. Restricted to non-decreasing parking
// functions it is a bijection carrying total displacement to area and maximum
// displacement to height; on all parking functions it is onto, and its fibres
// are the rearrangements of the non-decreasing representative.

#include <algorithm>
#include <iterator>
#include <string>
#include <vector>

#include "parklot/error.hpp"
#include "parklot/lattice_paths.hpp"
#include "parklot/parking.hpp"

namespace parklot {

inline LukasiewiczWord psi_pf_to_luk(const ParkingPreference& p) {
  if (!is_parking_function(p)) throw domain_error("not a parking function: " + to_string(p));
  std::vector<int> steps(static_cast<std::size_t>(p.size()), -1);
  for (int spot : p.values()) ++steps[static_cast<std::size_t>(spot - 1)];
  return LukasiewiczWord(std::move(steps));
}

// Append spot i to the preference (l_i + 1) times, for i = 1..n.
inline ParkingPreference psi_luk_to_pf(const LukasiewiczWord& w) {
  if (w.empty()) throw domain_error("the empty word has no parking function");
  std::vector<int> prefs;
  prefs.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    prefs.insert(prefs.end(), static_cast<std::size_t>(w.vector()[i] + 1), static_cast<int>(i + 1));
  }
  return ParkingPreference(std::move(prefs));
}

// Reads the preference off the drawn path: p_i is the index of the step that
// crosses the strip between x = i-1 and x = i.
inline ParkingPreference psi_luk_to_pf_graphical(const LukasiewiczWord& w) {
  if (w.empty()) throw domain_error("the empty word has no parking function");
  const int n = static_cast<int>(w.size());
  std::vector<int> starts(w.size());
  int x = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    starts[j] = x;
    x += w.vector()[j] + 1;
  }
  std::vector<int> prefs(w.size(), 0);
  for (int strip = 1; strip <= n; ++strip) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const int x0 = starts[j];
      const int x1 = x0 + w.vector()[j] + 1;
      if (x1 > x0 && x0 <= strip - 1 && x1 >= strip) {
        prefs[static_cast<std::size_t>(strip - 1)] = static_cast<int>(j + 1);
        break;
      }
    }
  }
  return ParkingPreference(std::move(prefs));
}

// ---------------------------------------------------------------------------
// Dyck paths

inline void require_non_decreasing_pf(const ParkingPreference& p) {
  if (!is_non_decreasing(p.values())) throw domain_error("parking preference is not non-decreasing: " + to_string(p));
  if (!is_parking_function(p)) throw domain_error("not a parking function: " + to_string(p));
}

inline DyckPath pf_to_dyck(const ParkingPreference& p) {
  require_non_decreasing_pf(p);
  std::vector<int> heights(p.vector());
  for (int& h : heights) --h;
  return DyckPath::from_heights(std::move(heights));
}

// Builds the step string directly: EN style as E N^(h2-h1) E ... E N^(n-hn)
// with h_i = p_i - 1, UD style as U^q1 D U^q2 D ... U^qn D with q_i the number
// of cars preferring spot i.
inline std::string pf_to_dyck_string(const ParkingPreference& p, DyckStyle style) {
  require_non_decreasing_pf(p);
  const int n = p.size();
  std::string out;
  if (style == DyckStyle::EN) {
    for (int i = 1; i <= n; ++i) {
      out += 'E';
      const int next = i < n ? p.of_car(i + 1) - 1 : n;
      out.append(static_cast<std::size_t>(next - (p.of_car(i) - 1)), 'N');
    }
    return out;
  }
  for (int spot = 1; spot <= n; ++spot) {
    const auto q = std::count(p.values().begin(), p.values().end(), spot);
    out.append(static_cast<std::size_t>(q), 'U');
    out += 'D';
  }
  return out;
}

inline ParkingPreference dyck_to_pf(const DyckPath& d) {
  std::vector<int> prefs(d.heights());
  for (int& v : prefs) ++v;
  return ParkingPreference(std::move(prefs));
}

// Complete unit squares between the path and the diagonal: an E step from
// (x, y) to (x+1, y) leaves x - y full squares above it in its column.
inline long long dyck_area(const DyckPath& d) {
  long long total = 0;
  int x = 0;
  int y = 0;
  for (char c : d.to_string(DyckStyle::EN)) {
    if (c == 'E') {
      total += x - y;
      ++x;
    } else {
      ++y;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Labelled words

inline LabelledLukasiewiczWord encode_labelled(const ParkingPreference& p) {
  auto word = psi_pf_to_luk(p);
  std::vector<LabelledLukasiewiczWord::Label> labels(word.size());
  for (int car = 1; car <= p.size(); ++car) {
    auto& label = labels[static_cast<std::size_t>(p.of_car(car) - 1)];
    if (!label) label.emplace();
    label->push_back(car);
  }
  return LabelledLukasiewiczWord(std::move(word), std::move(labels));
}

inline ParkingPreference decode_labelled(const LabelledLukasiewiczWord& lw) {
  std::vector<int> prefs(lw.word().size(), 0);
  for (std::size_t i = 0; i < lw.labels().size(); ++i) {
    if (!lw.labels()[i]) continue;
    for (int car : *lw.labels()[i]) prefs[static_cast<std::size_t>(car - 1)] = static_cast<int>(i + 1);
  }
  return ParkingPreference(std::move(prefs));
}

// ---------------------------------------------------------------------------
// Prime reductions

// (l_1, ..., l_n) -> (l_1 - 1, l_2, ..., l_{n-1}); a bijection from prime words
// of length n onto all words of length n-1.
inline LukasiewiczWord prime_luk_reduce(const LukasiewiczWord& w) {
  if (w.empty() || !is_prime_word(w)) throw domain_error("not a prime Lukasiewicz word: " + to_string(w));
  std::vector<int> steps(w.vector().begin(), w.vector().end() - 1);
  if (!steps.empty()) --steps.front();
  return LukasiewiczWord(std::move(steps));
}

inline LukasiewiczWord prime_luk_extend(const LukasiewiczWord& w) {
  std::vector<int> steps(w.vector());
  if (steps.empty()) return LukasiewiczWord({0});
  ++steps.front();
  steps.push_back(-1);
  return LukasiewiczWord(std::move(steps));
}

inline bool is_prime_non_decreasing_pf(const ParkingPreference& p) {
  if (!is_non_decreasing(p.values()) || p.of_car(1) != 1) return false;
  for (int i = 2; i <= p.size(); ++i) {
    if (p.of_car(i) >= i) return false;
  }
  return true;
}

inline ParkingPreference prime_pf_truncate(const ParkingPreference& p) {
  if (!is_prime_non_decreasing_pf(p)) throw domain_error("not a non-decreasing prime parking function: " + to_string(p));
  if (p.size() == 1) throw domain_error("truncating a single car leaves no parking function");
  return ParkingPreference(std::vector<int>(p.vector().begin() + 1, p.vector().end()));
}

inline ParkingPreference prime_pf_extend(const ParkingPreference& p) {
  std::vector<int> prefs{1};
  prefs.insert(prefs.end(), p.vector().begin(), p.vector().end());
  return ParkingPreference(std::move(prefs));
}

// ---------------------------------------------------------------------------
// Fibres

// Distinct rearrangements of a sequence, produced lazily in lexicographic order.
class DistinctPermutations {
public:
  explicit DistinctPermutations(std::vector<int> values) : first_(std::move(values)) {
    std::sort(first_.begin(), first_.end());
  }

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<int>;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::vector<int>*;
    using reference = const std::vector<int>&;

    iterator() = default;
    explicit iterator(std::vector<int> start) : current_(std::move(start)), done_(false) {}

    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }
    iterator& operator++() {
      done_ = !std::next_permutation(current_.begin(), current_.end());
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const noexcept { return done_; }

  private:
    std::vector<int> current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(first_); }
  std::default_sentinel_t end() const noexcept { return {}; }

private:
  std::vector<int> first_;
};

// All parking functions sharing the word w, lexicographically.
inline DistinctPermutations fiber(const LukasiewiczWord& w) {
  return DistinctPermutations(psi_luk_to_pf(w).vector());
}

} // namespace parklot
