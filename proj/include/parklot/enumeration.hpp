#pragma once

// Exhaustive generation and counting for every family handled by the library.
//
// Each family has two generators: a recursive constructor that only visits
// (or nearly only visits) members, and a brute-force filter over the ambient
// space ([n]^n, all step sequences, all E/N strings). Both emit objects in
// lexicographic order of their canonical sequence, so they can be compared
// element by element.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parklot/bijections.hpp"
#include "parklot/error.hpp"
#include "parklot/lattice_paths.hpp"
#include "parklot/parking.hpp"

namespace parklot {

using BigInt = boost::multiprecision::cpp_int;

enum class Family {
  pf,
  pf_inc,
  prime_pf,
  prime_pf_inc,
  upf,
  upf_inc,
  motzkin_pf,
  motzkin_pf_inc,
  luk,
  prime_luk,
  dyck,
  motz,
  motz_height_le_1,
  plane_tree,
};

inline constexpr Family all_families[] = {
    Family::pf,        Family::pf_inc, Family::prime_pf,  Family::prime_pf_inc,     Family::upf,
    Family::upf_inc,   Family::motzkin_pf, Family::motzkin_pf_inc, Family::luk,   Family::prime_luk,
    Family::dyck,      Family::motz,   Family::motz_height_le_1, Family::plane_tree,
};

inline std::string_view family_name(Family f) {
  switch (f) {
  case Family::pf: return "pf";
  case Family::pf_inc: return "pf_inc";
  case Family::prime_pf: return "prime_pf";
  case Family::prime_pf_inc: return "prime_pf_inc";
  case Family::upf: return "upf";
  case Family::upf_inc: return "upf_inc";
  case Family::motzkin_pf: return "motzkin_pf";
  case Family::motzkin_pf_inc: return "motzkin_pf_inc";
  case Family::luk: return "luk";
  case Family::prime_luk: return "prime_luk";
  case Family::dyck: return "dyck";
  case Family::motz: return "motz";
  case Family::motz_height_le_1: return "motz_le1";
  case Family::plane_tree: return "plane_tree";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : all_families) {
    if (family_name(f) == name) return f;
  }
  if (name == "motz_height_le_1") return Family::motz_height_le_1;
  throw input_error("unknown family '" + std::string(name) + "'");
}

inline bool is_preference_family(Family f) {
  switch (f) {
  case Family::pf:
  case Family::pf_inc:
  case Family::prime_pf:
  case Family::prime_pf_inc:
  case Family::upf:
  case Family::upf_inc:
  case Family::motzkin_pf:
  case Family::motzkin_pf_inc:
    return true;
  default:
    return false;
  }
}

inline bool is_word_family(Family f) {
  return f == Family::luk || f == Family::prime_luk || f == Family::motz || f == Family::motz_height_le_1;
}

// Optional restrictions, all evaluated on the object's Łukasiewicz word
// (psi_pf_to_luk for preferences, the tree's DFS word for trees, the word of
// the matching preference for Dyck paths).
struct PathFilter {
  std::optional<int> max_height;
  std::optional<int> max_step;
  std::optional<long long> min_area;
  std::optional<long long> max_area;

  bool empty() const { return !max_height && !max_step && !min_area && !max_area; }

  bool accepts(const LukasiewiczWord& w) const {
    if (max_height && height(w) > *max_height) return false;
    if (max_step && std::any_of(w.vector().begin(), w.vector().end(), [&](int k) { return k > *max_step; }))
      return false;
    if (min_area || max_area) {
      const long long a = area(w);
      if (min_area && a < *min_area) return false;
      if (max_area && a > *max_area) return false;
    }
    return true;
  }
};

struct FamilySpec {
  Family family = Family::pf;
  int n = 1;
  PathFilter filter{};
};

inline void validate_spec(const FamilySpec& spec) {
  const bool allows_zero =
      spec.family == Family::luk || spec.family == Family::dyck || spec.family == Family::plane_tree;
  if (spec.n < 0 || (spec.n == 0 && !allows_zero)) {
    throw input_error("family " + std::string(family_name(spec.family)) + " needs n >= 1, got " +
                      std::to_string(spec.n));
  }
}

using Object = std::variant<ParkingPreference, LukasiewiczWord, DyckPath, PlaneTree>;

inline LukasiewiczWord associated_word(const Object& obj) {
  return std::visit(
      [](const auto& o) -> LukasiewiczWord {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ParkingPreference>) {
          return psi_pf_to_luk(o);
        } else if constexpr (std::is_same_v<T, LukasiewiczWord>) {
          return o;
        } else if constexpr (std::is_same_v<T, DyckPath>) {
          if (o.semilength() == 0) return LukasiewiczWord{};
          return psi_pf_to_luk(dyck_to_pf(o));
        } else {
          return tree_to_word(o);
        }
      },
      obj);
}

enum class Strategy { recursive, ambient_filter };

inline constexpr std::uint64_t default_cap = 100'000'000;

// ---------------------------------------------------------------------------
// Closed forms

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

inline BigInt power(int base, int exponent) {
  BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

// Ordered set partitions: a(0) = 1, a(n) = sum_{k=1..n} C(n,k) a(n-k).
inline BigInt fubini(int n) {
  std::vector<BigInt> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= m; ++k) a[static_cast<std::size_t>(m)] += binomial(m, k) * a[static_cast<std::size_t>(m - k)];
  }
  return a[static_cast<std::size_t>(n)];
}

// M(0) = M(1) = 1, M(n) = M(n-1) + sum_{k=0..n-2} M(k) M(n-2-k).
inline BigInt motzkin(int n) {
  std::vector<BigInt> m(static_cast<std::size_t>(std::max(n, 1)) + 1, 0);
  m[0] = 1;
  m[1] = 1;
  for (int i = 2; i <= n; ++i) {
    BigInt s = m[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k <= i - 2; ++k) s += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(i - 2 - k)];
    m[static_cast<std::size_t>(i)] = s;
  }
  return m[static_cast<std::size_t>(n)];
}

// Known cardinality of an unfiltered family, or nullopt where no closed form
// is tabulated (Motzkin parking functions in arbitrary order).
inline std::optional<BigInt> formula_count(Family family, int n) {
  switch (family) {
  case Family::pf: return power(n + 1, n - 1);
  case Family::pf_inc:
  case Family::luk:
  case Family::dyck:
  case Family::plane_tree: return catalan(n);
  case Family::prime_pf: return power(n - 1, n - 1);
  case Family::prime_pf_inc:
  case Family::prime_luk: return catalan(n - 1);
  case Family::upf: return fubini(n);
  case Family::upf_inc:
  case Family::motz_height_le_1: return power(2, n - 1);
  case Family::motzkin_pf_inc:
  case Family::motz: return motzkin(n);
  case Family::motzkin_pf: return std::nullopt;
  }
  return std::nullopt;
}

// Size of the space a strategy walks, used against the cap.
inline BigInt projected_count(const FamilySpec& spec, Strategy strategy) {
  const int n = spec.n;
  if (strategy == Strategy::ambient_filter) {
    if (is_preference_family(spec.family)) return power(n, n);
    if (is_word_family(spec.family)) return power(n + 1, n);
    if (spec.family == Family::dyck) return power(2, 2 * n);
    return catalan(n);
  }
  if (auto exact = formula_count(spec.family, n)) return *exact;
  return power(n + 1, n - 1); // motzkin_pf is a subset of PF_n
}

namespace detail {

using SeqSink = std::function<void(const std::vector<int>&)>;

// Preferences in [n]^n, lexicographic, pruned to prefixes that can still be
// completed: with r cars left, every j needs |{chosen <= j}| + r >= j (+1 for
// j < n when prime). Motzkin pruning bounds multiplicities by two.
inline void recurse_preferences(int n, bool prime, bool motzkin, const SeqSink& sink) {
  std::vector<int> seq;
  std::vector<int> multiplicity(static_cast<std::size_t>(n) + 1, 0);
  seq.reserve(static_cast<std::size_t>(n));
  auto feasible = [&]() {
    const int remaining = n - static_cast<int>(seq.size());
    int below = 0;
    for (int j = 1; j <= n; ++j) {
      below += multiplicity[static_cast<std::size_t>(j)];
      const int need = (prime && j < n) ? j + 1 : j;
      if (below + remaining < need) return false;
    }
    return true;
  };
  std::function<void()> step = [&]() {
    if (static_cast<int>(seq.size()) == n) {
      sink(seq);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (motzkin && multiplicity[static_cast<std::size_t>(v)] == 2) continue;
      seq.push_back(v);
      ++multiplicity[static_cast<std::size_t>(v)];
      if (feasible()) step();
      --multiplicity[static_cast<std::size_t>(v)];
      seq.pop_back();
    }
  };
  step();
}

// Non-decreasing parking functions: p_1 = 1... p_i in [p_{i-1}, i] (or i-1 when
// prime and i >= 2), with multiplicities at most two for Motzkin.
inline void recurse_non_decreasing(int n, bool prime, bool motzkin, const SeqSink& sink) {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(n));
  std::function<void(int)> step = [&](int run) {
    const int i = static_cast<int>(seq.size()) + 1;
    if (i > n) {
      sink(seq);
      return;
    }
    const int lo = seq.empty() ? 1 : seq.back();
    const int hi = (prime && i >= 2) ? i - 1 : i;
    for (int v = lo; v <= hi; ++v) {
      const int next_run = (!seq.empty() && v == seq.back()) ? run + 1 : 1;
      if (motzkin && next_run > 2) continue;
      seq.push_back(v);
      step(next_run);
      seq.pop_back();
    }
  };
  step(0);
}

// Unit-interval: simulate as we go and refuse any car displaced by 2 or more.
inline void recurse_unit_interval(int n, const SeqSink& sink) {
  std::vector<int> seq;
  std::vector<char> taken(static_cast<std::size_t>(n) + 2, 0);
  seq.reserve(static_cast<std::size_t>(n));
  std::function<void()> step = [&]() {
    if (static_cast<int>(seq.size()) == n) {
      sink(seq);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      int spot = v;
      if (taken[static_cast<std::size_t>(spot)]) ++spot;
      if (spot > n || taken[static_cast<std::size_t>(spot)]) continue;
      taken[static_cast<std::size_t>(spot)] = 1;
      seq.push_back(v);
      step();
      seq.pop_back();
      taken[static_cast<std::size_t>(spot)] = 0;
    }
  };
  step();
}

inline void recurse_unit_interval_non_decreasing(int n, const SeqSink& sink) {
  std::vector<int> seq{1};
  std::function<void()> step = [&]() {
    const int i = static_cast<int>(seq.size()) + 1;
    if (i > n) {
      sink(seq);
      return;
    }
    for (int v : {i - 1, i}) {
      seq.push_back(v);
      step();
      seq.pop_back();
    }
  };
  step();
}

struct WordShape {
  bool prime = false;
  std::optional<int> max_step;
  std::optional<int> max_height;
};

// Steps in increasing order from -1; after step i the height must lie in
// [0 or 1, n - i] so the remaining down steps can still return to the axis.
inline void recurse_words(int n, WordShape shape, const SeqSink& sink) {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(n));
  std::function<void(int)> step = [&](int h) {
    const int i = static_cast<int>(seq.size()) + 1;
    if (i > n) {
      sink(seq);
      return;
    }
    const int floor = (shape.prime && i < n) ? 1 : 0;
    int ceiling = n - i;
    if (shape.max_height) ceiling = std::min(ceiling, *shape.max_height);
    for (int k = -1; h + k <= ceiling; ++k) {
      if (shape.max_step && k > *shape.max_step) break;
      if (h + k < floor) continue;
      seq.push_back(k);
      step(h + k);
      seq.pop_back();
    }
  };
  step(0);
}

inline void recurse_dyck(int n, const std::function<void(const std::string&)>& sink) {
  std::string s;
  std::function<void(int, int)> step = [&](int east, int north) {
    if (east == n && north == n) {
      sink(s);
      return;
    }
    if (east < n) {
      s.push_back('E');
      step(east + 1, north);
      s.pop_back();
    }
    if (north < east) {
      s.push_back('N');
      step(east, north + 1);
      s.pop_back();
    }
  };
  step(0, 0);
}

// Plane trees built structurally: a tree is a root over an ordered forest,
// and a forest with m edges is a first tree (plus the edge to it) followed by
// a forest with the remaining edges. Shapes are preorder child counts.
struct Forest {
  int roots = 0;
  std::vector<int> degrees;
};

inline std::vector<std::vector<int>> tree_shapes(int edges);

inline std::vector<Forest> forest_shapes(int edges) {
  if (edges == 0) return {Forest{}};
  std::vector<Forest> out;
  for (int first_edges = 0; first_edges < edges; ++first_edges) {
    const auto firsts = tree_shapes(first_edges);
    const auto rests = forest_shapes(edges - 1 - first_edges);
    for (const auto& first : firsts) {
      for (const auto& rest : rests) {
        Forest f{rest.roots + 1, first};
        f.degrees.insert(f.degrees.end(), rest.degrees.begin(), rest.degrees.end());
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

inline std::vector<std::vector<int>> tree_shapes(int edges) {
  std::vector<std::vector<int>> out;
  for (const auto& f : forest_shapes(edges)) {
    std::vector<int> d{f.roots};
    d.insert(d.end(), f.degrees.begin(), f.degrees.end());
    out.push_back(std::move(d));
  }
  return out;
}

inline PlaneTree tree_from_preorder(const std::vector<int>& degrees) {
  PlaneTree tree;
  std::vector<std::pair<std::size_t, int>> open{{tree.root(), degrees.at(0)}};
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    while (open.back().second == 0) open.pop_back();
    --open.back().second;
    open.emplace_back(tree.add_child(open.back().first), degrees[i]);
  }
  return tree;
}

inline bool odometer_next(std::vector<int>& seq, int lo, int hi) {
  for (std::size_t i = seq.size(); i-- > 0;) {
    if (seq[i] < hi) {
      ++seq[i];
      return true;
    }
    seq[i] = lo;
  }
  return false;
}

inline bool preference_in_family(Family f, const ParkingPreference& p) {
  if (!park(p).parked()) return false;
  switch (f) {
  case Family::pf: return true;
  case Family::pf_inc: return is_non_decreasing(p.values());
  case Family::prime_pf: return breakpoints(p).size() == 1;
  case Family::prime_pf_inc: return is_non_decreasing(p.values()) && breakpoints(p).size() == 1;
  case Family::upf: return displacement(p).max() <= 1;
  case Family::upf_inc: return is_non_decreasing(p.values()) && displacement(p).max() <= 1;
  case Family::motzkin_pf: return satisfies_motzkin_restriction(p.values());
  case Family::motzkin_pf_inc: return is_non_decreasing(p.values()) && satisfies_motzkin_restriction(p.values());
  default: return false;
  }
}

inline bool word_in_family(Family f, std::span<const int> steps) {
  if (find_word_defect(steps)) return false;
  const LukasiewiczWord w(std::vector<int>(steps.begin(), steps.end()));
  switch (f) {
  case Family::luk: return true;
  case Family::prime_luk: return !w.empty() && is_prime_word(w);
  case Family::motz: return is_motzkin_word(w);
  case Family::motz_height_le_1: return is_motzkin_word(w) && height(w) <= 1;
  default: return false;
  }
}

} // namespace detail

inline void check_cap(const FamilySpec& spec, Strategy strategy, std::uint64_t cap) {
  const BigInt projected = projected_count(spec, strategy);
  if (projected > cap) {
    throw cap_exceeded("enumerating " + std::string(family_name(spec.family)) + " at n=" +
                       std::to_string(spec.n) + " would visit " + projected.str() + " objects, cap is " +
                       std::to_string(cap));
  }
}

// Streams every object of the family exactly once, lexicographically by its
// canonical sequence (preferences, steps, E<N strings, tree DFS words).
template <class Visitor>
void generate(const FamilySpec& spec, Visitor&& visit, Strategy strategy = Strategy::recursive,
              std::uint64_t cap = default_cap) {
  validate_spec(spec);
  check_cap(spec, strategy, cap);
  const int n = spec.n;
  const Family f = spec.family;
  auto emit = [&](Object obj) {
    if (!spec.filter.empty() && !spec.filter.accepts(associated_word(obj))) return;
    visit(static_cast<const Object&>(obj));
  };
  auto emit_pref = [&](const std::vector<int>& seq) { emit(ParkingPreference(seq)); };
  auto emit_word = [&](const std::vector<int>& seq) { emit(LukasiewiczWord(seq)); };

  if (strategy == Strategy::recursive) {
    switch (f) {
    case Family::pf: return detail::recurse_preferences(n, false, false, emit_pref);
    case Family::prime_pf: return detail::recurse_preferences(n, true, false, emit_pref);
    case Family::motzkin_pf: return detail::recurse_preferences(n, false, true, emit_pref);
    case Family::pf_inc: return detail::recurse_non_decreasing(n, false, false, emit_pref);
    case Family::prime_pf_inc: return detail::recurse_non_decreasing(n, true, false, emit_pref);
    case Family::motzkin_pf_inc: return detail::recurse_non_decreasing(n, false, true, emit_pref);
    case Family::upf: return detail::recurse_unit_interval(n, emit_pref);
    case Family::upf_inc: return detail::recurse_unit_interval_non_decreasing(n, emit_pref);
    case Family::luk: return detail::recurse_words(n, {}, emit_word);
    case Family::prime_luk: return detail::recurse_words(n, detail::WordShape{true, std::nullopt, std::nullopt}, emit_word);
    case Family::motz: return detail::recurse_words(n, detail::WordShape{false, 1, std::nullopt}, emit_word);
    case Family::motz_height_le_1: return detail::recurse_words(n, detail::WordShape{false, 1, 1}, emit_word);
    case Family::dyck:
      return detail::recurse_dyck(n, [&](const std::string& s) { emit(DyckPath::parse(s)); });
    case Family::plane_tree:
      return detail::recurse_words(n, {}, [&](const std::vector<int>& seq) {
        emit(word_to_tree(LukasiewiczWord(seq)));
      });
    }
    return;
  }

  if (is_preference_family(f)) {
    std::vector<int> seq(static_cast<std::size_t>(n), 1);
    do {
      ParkingPreference p(seq);
      if (detail::preference_in_family(f, p)) emit(std::move(p));
    } while (detail::odometer_next(seq, 1, n));
    return;
  }
  if (is_word_family(f)) {
    std::vector<int> seq(static_cast<std::size_t>(n), -1);
    do {
      if (detail::word_in_family(f, seq)) emit(LukasiewiczWord(seq));
    } while (detail::odometer_next(seq, -1, n - 1));
    return;
  }
  if (f == Family::dyck) {
    std::vector<int> bits(static_cast<std::size_t>(2 * n), 0);
    do {
      std::string s;
      for (int b : bits) s += b ? 'N' : 'E';
      int balance = 0;
      bool ok = true;
      for (char c : s) {
        balance += c == 'E' ? 1 : -1;
        if (balance < 0) ok = false;
      }
      if (ok && balance == 0) emit(DyckPath::parse(s));
    } while (detail::odometer_next(bits, 0, 1));
    return;
  }
  // plane trees
  auto degrees = detail::tree_shapes(n);
  std::sort(degrees.begin(), degrees.end()); // same order as their words
  for (const auto& d : degrees) emit(detail::tree_from_preorder(d));
}

inline std::vector<Object> collect(const FamilySpec& spec, Strategy strategy = Strategy::recursive,
                                   std::uint64_t cap = default_cap) {
  std::vector<Object> out;
  generate(spec, [&](const Object& o) { out.push_back(o); }, strategy, cap);
  return out;
}

inline BigInt count(const FamilySpec& spec, Strategy strategy = Strategy::recursive,
                    std::uint64_t cap = default_cap) {
  std::uint64_t total = 0;
  generate(spec, [&](const Object&) { ++total; }, strategy, cap);
  return BigInt(total);
}

// ---------------------------------------------------------------------------
// Statistics

enum class Stat { area, height, total_disp, max_disp };

inline std::string_view stat_name(Stat s) {
  switch (s) {
  case Stat::area: return "area";
  case Stat::height: return "height";
  case Stat::total_disp: return "total_disp";
  case Stat::max_disp: return "max_disp";
  }
  return "?";
}

inline Stat parse_stat(std::string_view name) {
  for (Stat s : {Stat::area, Stat::height, Stat::total_disp, Stat::max_disp}) {
    if (stat_name(s) == name) return s;
  }
  throw input_error("unknown statistic '" + std::string(name) + "'");
}

// Area and height come from the associated word; displacement statistics from
// the object's parking function (the non-decreasing one for words, paths and
// trees). Dyck paths report their own square-count area.
inline std::vector<long long> statistics(const Object& obj, std::span<const Stat> stats) {
  const LukasiewiczWord word = associated_word(obj);
  std::optional<DisplacementVector> disp;
  auto displacement_of = [&]() -> const DisplacementVector& {
    if (!disp) {
      if (word.empty()) {
        disp.emplace(std::vector<int>{});
      } else if (const auto* p = std::get_if<ParkingPreference>(&obj)) {
        disp.emplace(displacement(*p));
      } else {
        disp.emplace(displacement(psi_luk_to_pf(word)));
      }
    }
    return *disp;
  };
  std::vector<long long> values;
  values.reserve(stats.size());
  for (Stat s : stats) {
    switch (s) {
    case Stat::area:
      if (const auto* d = std::get_if<DyckPath>(&obj)) {
        values.push_back(dyck_area(*d));
      } else {
        values.push_back(area(word));
      }
      break;
    case Stat::height: values.push_back(height(word)); break;
    case Stat::total_disp: values.push_back(displacement_of().total()); break;
    case Stat::max_disp: values.push_back(displacement_of().max()); break;
    }
  }
  return values;
}

using Histogram = std::map<std::vector<long long>, std::uint64_t>;

inline Histogram joint_distribution(const FamilySpec& spec, std::span<const Stat> stats,
                                    Strategy strategy = Strategy::recursive, std::uint64_t cap = default_cap) {
  if (stats.empty()) throw input_error("at least one statistic is required");
  Histogram hist;
  generate(spec, [&](const Object& o) { ++hist[statistics(o, stats)]; }, strategy, cap);
  return hist;
}

} // namespace parklot
