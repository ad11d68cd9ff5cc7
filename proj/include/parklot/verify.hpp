#pragma once

// Exhaustive property checks over small sizes. Each property runs for
// n = 1..min(max_n, ceiling), where the ceiling keeps brute-force scans of
// [n]^n affordable, and stops at its first counterexample.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "parklot/bijections.hpp"
#include "parklot/enumeration.hpp"
#include "parklot/lattice_paths.hpp"
#include "parklot/parking.hpp"

namespace parklot {

struct PropertyResult {
  std::string name;
  int checked_up_to = 0; // largest n examined
  std::uint64_t cases = 0;
  bool passed = true;
  std::string counterexample;
  double seconds = 0;
};

namespace verify_detail {

using Failure = std::optional<std::string>;

struct Property {
  std::string name;
  int ceiling;
  std::function<Failure(int n, std::uint64_t& cases)> check;
  std::function<Failure(std::uint64_t& cases)> fixed = {}; // size-independent witnesses
};

// Every preference in [n]^n, lexicographically; stops when fn returns a failure.
inline Failure for_each_preference(int n, const std::function<Failure(const ParkingPreference&)>& fn) {
  std::vector<int> seq(static_cast<std::size_t>(n), 1);
  do {
    if (auto f = fn(ParkingPreference(seq))) return f;
  } while (detail::odometer_next(seq, 1, n));
  return std::nullopt;
}

inline Failure for_each_pf(int n, const std::function<Failure(const ParkingPreference&)>& fn) {
  return for_each_preference(n, [&](const ParkingPreference& p) -> Failure {
    if (!park(p).parked()) return std::nullopt;
    return fn(p);
  });
}

inline Failure for_each_object(const FamilySpec& spec, const std::function<Failure(const Object&)>& fn,
                               Strategy strategy = Strategy::recursive) {
  Failure failure;
  generate(spec, [&](const Object& o) {
    if (!failure) failure = fn(o);
  }, strategy);
  return failure;
}

inline Failure for_each_word(int n, Family f, const std::function<Failure(const LukasiewiczWord&)>& fn) {
  return for_each_object({f, n, {}}, [&](const Object& o) { return fn(std::get<LukasiewiczWord>(o)); });
}

inline Failure for_each_pref_in(int n, Family f, const std::function<Failure(const ParkingPreference&)>& fn) {
  return for_each_object({f, n, {}}, [&](const Object& o) { return fn(std::get<ParkingPreference>(o)); });
}

inline Failure fail(const std::string& what) { return what; }

inline Failure expect_count(const std::string& label, const BigInt& got, const BigInt& want) {
  if (got == want) return std::nullopt;
  return label + ": counted " + got.str() + ", expected " + want.str();
}

inline std::vector<Property> properties() {
  std::vector<Property> ps;

  // ---- parking processes ------------------------------------------------
  ps.push_back({"pf-three-way-agreement", 7, [](int n, std::uint64_t& cases) {
    return for_each_preference(n, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      const bool a = is_parking_function(p, PfMethod::simulate);
      const bool b = is_parking_function(p, PfMethod::sorted);
      const bool c = is_parking_function(p, PfMethod::counting);
      if (a != b || b != c) return fail("methods disagree on " + to_string(p));
      return std::nullopt;
    });
  }});

  ps.push_back({"outcome-is-permutation", 7, [](int n, std::uint64_t& cases) {
    return for_each_pf(n, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      if (!park(p).outcome().is_permutation()) return fail("outcome of " + to_string(p) + " is not a permutation");
      return std::nullopt;
    });
  }});

  ps.push_back({"sorted-outcome-identity", 9, [](int n, std::uint64_t& cases) {
    return for_each_pref_in(n, Family::pf_inc, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      const auto o = park(p).outcome().vector();
      for (int i = 0; i < n; ++i) {
        if (o[static_cast<std::size_t>(i)] != i + 1) return fail("outcome of " + to_string(p) + " is not 1..n");
      }
      return std::nullopt;
    });
  }});

  ps.push_back({"displacement-sum-formula", 7, [](int n, std::uint64_t& cases) {
    return for_each_pf(n, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      long long sum = 0;
      for (int v : p.values()) sum += v;
      if (displacement(p).total() != 1LL * n * (n + 1) / 2 - sum)
        return fail("total displacement of " + to_string(p) + " differs from n(n+1)/2 - sum");
      return std::nullopt;
    });
  }});

  ps.push_back({"order-preservation", 7, [](int n, std::uint64_t& cases) {
    return for_each_pf(n, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      const auto o = park(p).outcome();
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (p.of_car(i) <= p.of_car(j) && o.of_car(i) >= o.of_car(j))
            return fail("cars " + std::to_string(i) + "," + std::to_string(j) + " out of order in " + to_string(p));
        }
      }
      return std::nullopt;
    });
  }});

  ps.push_back({"unit-interval-characterisation", 7, [](int n, std::uint64_t& cases) {
    return for_each_pf(n, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      if ((displacement(p).max() <= 1) != parks_within_one_spot(p))
        return fail("max displacement and one-spot test disagree on " + to_string(p));
      return std::nullopt;
    });
  }});

  ps.push_back({"motzkin-necessity", 7,
    [](int n, std::uint64_t& cases) {
      return for_each_pf(n, [&](const ParkingPreference& p) -> Failure {
        ++cases;
        const auto c = classify(p);
        if (c.is_unit_interval && !c.is_motzkin) return fail("unit-interval but not Motzkin: " + to_string(p));
        return std::nullopt;
      });
    },
    [](std::uint64_t& cases) -> Failure {
      ++cases;
      const auto c = classify(ParkingPreference({1, 2, 1}));
      if (!c.is_pf || !c.is_motzkin || c.is_unit_interval) return fail("(1,2,1) should be Motzkin but not unit-interval");
      return std::nullopt;
    }});

  // ---- lattice paths ----------------------------------------------------
  ps.push_back({"area-integrality-and-bounds", 10, [](int n, std::uint64_t& cases) {
    return for_each_word(n, Family::luk, [&](const LukasiewiczWord& w) -> Failure {
      ++cases;
      const long long twice = twice_area(w);
      if (twice % 2 != 0) return fail("odd doubled area for " + to_string(w));
      const int h = height(w);
      if (h < 0 || h > n - 1) return fail("height out of [0, n-1] for " + to_string(w));
      if (twice / 2 < 0 || twice / 2 > 1LL * n * (n - 1) / 2) return fail("area out of bounds for " + to_string(w));
      return std::nullopt;
    });
  }});

  ps.push_back({"tree-word-roundtrip", 8, [](int n, std::uint64_t& cases) -> Failure {
    if (auto f = for_each_word(n, Family::luk, [&](const LukasiewiczWord& w) -> Failure {
          ++cases;
          const auto t = word_to_tree(w);
          if (t.node_count() != static_cast<std::size_t>(n) + 1) return fail("wrong node count for " + to_string(w));
          if (tree_to_word(t) != w) return fail("word roundtrip fails for " + to_string(w));
          return std::nullopt;
        }))
      return f;
    return for_each_object({Family::plane_tree, n, {}}, [&](const Object& o) -> Failure {
      ++cases;
      const auto& t = std::get<PlaneTree>(o);
      if (!(word_to_tree(tree_to_word(t)) == t)) return fail("tree roundtrip fails for " + to_string(tree_to_word(t)));
      return std::nullopt;
    }, Strategy::ambient_filter); // structurally built trees, not decoded words
  }});

  ps.push_back({"luk-count-catalan", 10, [](int n, std::uint64_t& cases) {
    ++cases;
    return expect_count("|Luk_" + std::to_string(n) + "|", count({Family::luk, n, {}}), catalan(n));
  }});

  // ---- bijections -------------------------------------------------------
  ps.push_back({"bijection-roundtrip", 9, [](int n, std::uint64_t& cases) -> Failure {
    if (auto f = for_each_pref_in(n, Family::pf_inc, [&](const ParkingPreference& p) -> Failure {
          ++cases;
          if (psi_luk_to_pf(psi_pf_to_luk(p)) != p) return fail("pf -> word -> pf fails for " + to_string(p));
          return std::nullopt;
        }))
      return f;
    return for_each_word(n, Family::luk, [&](const LukasiewiczWord& w) -> Failure {
      ++cases;
      const auto p = psi_luk_to_pf(w);
      if (!is_non_decreasing(p.values()) || !is_parking_function(p)) return fail("image of " + to_string(w) + " not in PF_inc");
      if (psi_pf_to_luk(p) != w) return fail("word -> pf -> word fails for " + to_string(w));
      return std::nullopt;
    });
  }});

  ps.push_back({"statistic-transport-non-decreasing", 9, [](int n, std::uint64_t& cases) {
    return for_each_pref_in(n, Family::pf_inc, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      const auto d = displacement(p);
      const auto w = psi_pf_to_luk(p);
      if (d.total() != area(w)) return fail("total displacement != area for " + to_string(p));
      if (d.max() != height(w)) return fail("max displacement != height for " + to_string(p));
      return std::nullopt;
    });
  }});

  ps.push_back({"statistic-transport-general", 6,
    [](int n, std::uint64_t& cases) {
      return for_each_pf(n, [&](const ParkingPreference& p) -> Failure {
        ++cases;
        if (displacement(p).total() != area(psi_pf_to_luk(p))) return fail("total displacement != area for " + to_string(p));
        return std::nullopt;
      });
    },
    [](std::uint64_t& cases) -> Failure {
      ++cases;
      const ParkingPreference p({8, 1, 1, 12, 3, 4, 8, 4, 7, 1, 8, 8});
      const auto d = displacement(p);
      const auto w = psi_pf_to_luk(p);
      if (d.total() != 13 || area(w) != 13 || d.max() != 5 || height(w) != 3)
        return fail("relabelled witness should have total 13 = area, max 5 != height 3");
      return std::nullopt;
    }});

  ps.push_back({"fiber-structure", 6, [](int n, std::uint64_t& cases) -> Failure {
    std::map<LukasiewiczWord, std::set<std::vector<int>>> fibers;
    for_each_pf(n, [&](const ParkingPreference& p) -> Failure {
      fibers[psi_pf_to_luk(p)].insert(p.vector());
      return std::nullopt;
    });
    return for_each_word(n, Family::luk, [&](const LukasiewiczWord& w) -> Failure {
      ++cases;
      std::set<std::vector<int>> perms;
      for (const auto& perm : fiber(w)) perms.insert(perm);
      if (perms != fibers[w]) return fail("fibre of " + to_string(w) + " is not the rearrangement set");
      return std::nullopt;
    });
  }});

  ps.push_back({"breakpoint-axis-duality", 7, [](int n, std::uint64_t& cases) {
    return for_each_pf(n, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      const auto bps = breakpoints(p);
      const auto h = prefix_heights(psi_pf_to_luk(p));
      for (int j = 1; j <= n; ++j) {
        const bool is_bp = std::find(bps.begin(), bps.end(), j) != bps.end();
        if (is_bp != (h[static_cast<std::size_t>(j)] == 0))
          return fail("breakpoint/axis mismatch at j=" + std::to_string(j) + " for " + to_string(p));
      }
      return std::nullopt;
    });
  }});

  ps.push_back({"excess-cars-identity", 7, [](int n, std::uint64_t& cases) {
    return for_each_pf(n, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      const auto w = psi_pf_to_luk(p);
      for (int j = 0; j <= n; ++j) {
        const auto at_or_below = std::count_if(p.values().begin(), p.values().end(), [&](int v) { return v <= j; });
        if (prefix_height(w, static_cast<std::size_t>(j)) != at_or_below - j)
          return fail("excess cars differ from height at j=" + std::to_string(j) + " for " + to_string(p));
      }
      return std::nullopt;
    });
  }});

  ps.push_back({"per-step-displacement-block", 7, [](int n, std::uint64_t& cases) {
    return for_each_pref_in(n, Family::pf_inc, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      const auto d = displacement(p).vector();
      const auto w = psi_pf_to_luk(p);
      int h = 0;
      std::size_t first_car = 0; // cars preferring spots <= j
      for (std::size_t j = 0; j < w.size(); ++j) {
        const int k = w.vector()[j];
        long long block_sum = 0;
        for (int t = 0; t <= k; ++t) {
          if (d[first_car + static_cast<std::size_t>(t)] != h + t)
            return fail("displacement block under step " + std::to_string(j + 1) + " wrong for " + to_string(p));
          block_sum += d[first_car + static_cast<std::size_t>(t)];
        }
        if (2 * block_sum != twice_step_area(k, h))
          return fail("block sum != step area under step " + std::to_string(j + 1) + " for " + to_string(p));
        first_car += static_cast<std::size_t>(k + 1);
        h += k;
      }
      return std::nullopt;
    });
  }});

  ps.push_back({"graphical-reading-agreement", 9, [](int n, std::uint64_t& cases) {
    return for_each_word(n, Family::luk, [&](const LukasiewiczWord& w) -> Failure {
      ++cases;
      if (psi_luk_to_pf_graphical(w) != psi_luk_to_pf(w)) return fail("graphical reading differs for " + to_string(w));
      return std::nullopt;
    });
  }});

  ps.push_back({"dyck-consistency", 8, [](int n, std::uint64_t& cases) {
    return for_each_pref_in(n, Family::pf_inc, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      const auto d = pf_to_dyck(p);
      const long long total = displacement(p).total();
      if (dyck_area(d) != total || area(psi_pf_to_luk(p)) != total)
        return fail("Dyck area, displacement and word area disagree for " + to_string(p));
      if (pf_to_dyck_string(p, DyckStyle::EN) != d.to_string(DyckStyle::EN) ||
          pf_to_dyck_string(p, DyckStyle::UD) != d.to_string(DyckStyle::UD))
        return fail("EN/UD step strings disagree for " + to_string(p));
      if (DyckPath::parse(pf_to_dyck_string(p, DyckStyle::UD)) != d || dyck_to_pf(d) != p)
        return fail("Dyck roundtrip fails for " + to_string(p));
      return std::nullopt;
    });
  }});

  ps.push_back({"labelled-roundtrip", 7, [](int n, std::uint64_t& cases) {
    return for_each_pf(n, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      const auto lw = encode_labelled(p);
      if (decode_labelled(lw) != p) return fail("labelled roundtrip fails for " + to_string(p));
      if (is_non_decreasing(p.values())) {
        for (const auto& label : lw.labels()) {
          if (label && label->back() - label->front() + 1 != static_cast<int>(label->size()))
            return fail("labels of non-decreasing " + to_string(p) + " are not consecutive blocks");
        }
      }
      return std::nullopt;
    });
  }});

  ps.push_back({"prime-reductions", 9, [](int n, std::uint64_t& cases) -> Failure {
    std::set<LukasiewiczWord> image;
    if (auto f = for_each_word(n, Family::prime_luk, [&](const LukasiewiczWord& w) -> Failure {
          ++cases;
          const auto reduced = prime_luk_reduce(w);
          if (reduced.size() + 1 != w.size() || prime_luk_extend(reduced) != w)
            return fail("prime word reduction does not invert for " + to_string(w));
          image.insert(reduced);
          return std::nullopt;
        }))
      return f;
    if (BigInt(image.size()) != catalan(n - 1)) return fail("prime word reduction is not onto Luk_{n-1}");
    if (n < 2) return std::nullopt;
    return for_each_pref_in(n, Family::prime_pf_inc, [&](const ParkingPreference& p) -> Failure {
      ++cases;
      const auto q = prime_pf_truncate(p);
      if (!is_non_decreasing(q.values()) || !is_parking_function(q) || prime_pf_extend(q) != p)
        return fail("prime truncation does not invert for " + to_string(p));
      if (psi_pf_to_luk(q) != prime_luk_reduce(psi_pf_to_luk(p)))
        return fail("truncation and word reduction disagree for " + to_string(p));
      return std::nullopt;
    });
  }});

  // ---- counting ---------------------------------------------------------
  ps.push_back({"catalan-family-counts", 10, [](int n, std::uint64_t& cases) -> Failure {
    for (Family f : {Family::pf_inc, Family::luk, Family::dyck, Family::plane_tree}) {
      ++cases;
      if (auto e = expect_count(std::string(family_name(f)) + " n=" + std::to_string(n), count({f, n, {}}), catalan(n)))
        return e;
    }
    return std::nullopt;
  }});

  ps.push_back({"motzkin-pf-count", 10, [](int n, std::uint64_t& cases) {
    ++cases;
    return expect_count("motzkin_pf_inc n=" + std::to_string(n), count({Family::motzkin_pf_inc, n, {}}),
                        count({Family::motz, n, {}}));
  }});

  ps.push_back({"prime-non-decreasing-counts", 9, [](int n, std::uint64_t& cases) -> Failure {
    cases += 2;
    if (auto e = expect_count("prime_pf_inc n=" + std::to_string(n), count({Family::prime_pf_inc, n, {}}), catalan(n - 1)))
      return e;
    return expect_count("prime_luk n=" + std::to_string(n), count({Family::prime_luk, n, {}}), catalan(n - 1));
  }});

  ps.push_back({"prime-counts", 6, [](int n, std::uint64_t& cases) {
    ++cases;
    return expect_count("prime_pf n=" + std::to_string(n), count({Family::prime_pf, n, {}}), power(n - 1, n - 1));
  }});

  ps.push_back({"unit-interval-non-decreasing-counts", 10, [](int n, std::uint64_t& cases) -> Failure {
    cases += 2;
    if (auto e = expect_count("upf_inc n=" + std::to_string(n), count({Family::upf_inc, n, {}}), power(2, n - 1)))
      return e;
    if (auto e = expect_count("motz_le1 n=" + std::to_string(n), count({Family::motz_height_le_1, n, {}}), power(2, n - 1)))
      return e;
    // A 1-Motzkin path is determined by the set of interior indices at height 1.
    std::set<std::vector<int>> subsets;
    Failure failure = for_each_word(n, Family::motz_height_le_1, [&](const LukasiewiczWord& w) -> Failure {
      const auto h = prefix_heights(w);
      std::vector<int> subset;
      for (int j = 1; j < n; ++j) {
        if (h[static_cast<std::size_t>(j)] == 1) subset.push_back(j);
      }
      std::vector<int> rebuilt(static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) {
        const int before = (j > 1 && std::binary_search(subset.begin(), subset.end(), j - 1)) ? 1 : 0;
        const int after = (j < n && std::binary_search(subset.begin(), subset.end(), j)) ? 1 : 0;
        rebuilt[static_cast<std::size_t>(j - 1)] = after - before;
      }
      if (rebuilt != w.vector()) return fail("subset does not rebuild 1-Motzkin path " + to_string(w));
      subsets.insert(subset);
      return std::nullopt;
    });
    if (failure) return failure;
    if (BigInt(subsets.size()) != power(2, n - 1)) return fail("1-Motzkin subsets are not all distinct");
    return std::nullopt;
  }});

  ps.push_back({"unit-interval-counts", 6, [](int n, std::uint64_t& cases) {
    ++cases;
    return expect_count("upf n=" + std::to_string(n), count({Family::upf, n, {}}), fubini(n));
  }});

  ps.push_back({"permutation-invariance", 6,
    [](int n, std::uint64_t& cases) {
      return for_each_pref_in(n, Family::prime_pf, [&](const ParkingPreference& p) -> Failure {
        ++cases;
        for (const auto& perm : DistinctPermutations(p.vector())) {
          const ParkingPreference q(perm);
          if (!is_parking_function(q) || breakpoints(q).size() != 1)
            return fail("rearrangement " + join(perm) + " of prime " + to_string(p) + " is not prime");
        }
        return std::nullopt;
      });
    },
    [](std::uint64_t& cases) -> Failure {
      ++cases;
      if (!classify(ParkingPreference({1, 1, 2})).is_unit_interval || classify(ParkingPreference({1, 2, 1})).is_unit_interval)
        return fail("(1,1,2) should be unit-interval while its rearrangement (1,2,1) is not");
      return std::nullopt;
    }});

  ps.push_back({"generator-agreement", 6, [](int n, std::uint64_t& cases) -> Failure {
    for (Family f : all_families) {
      ++cases;
      const FamilySpec spec{f, n, {}};
      const auto fast = collect(spec, Strategy::recursive);
      const auto slow = collect(spec, Strategy::ambient_filter);
      if (fast != slow)
        return fail(std::string(family_name(f)) + " n=" + std::to_string(n) + ": recursive and filtered generators differ");
      for (const auto& o : fast) {
        bool sound = true;
        if (const auto* p = std::get_if<ParkingPreference>(&o)) sound = detail::preference_in_family(f, *p);
        if (const auto* w = std::get_if<LukasiewiczWord>(&o)) sound = detail::word_in_family(f, w->values());
        if (!sound) return fail(std::string(family_name(f)) + " generator emitted a non-member");
      }
    }
    return std::nullopt;
  }});

  ps.push_back({"area-displacement-histograms", 8, [](int n, std::uint64_t& cases) -> Failure {
    ++cases;
    const Stat by_area[] = {Stat::area};
    const Stat by_disp[] = {Stat::total_disp};
    if (joint_distribution({Family::luk, n, {}}, by_area) != joint_distribution({Family::pf_inc, n, {}}, by_disp))
      return fail("area histogram of Luk_" + std::to_string(n) + " differs from total displacement of PF_inc");
    const Stat by_height[] = {Stat::height};
    const Stat by_max[] = {Stat::max_disp};
    if (joint_distribution({Family::luk, n, {}}, by_height) != joint_distribution({Family::pf_inc, n, {}}, by_max))
      return fail("height histogram of Luk_" + std::to_string(n) + " differs from max displacement of PF_inc");
    return std::nullopt;
  }});

  // ---- harness self-test --------------------------------------------------
  ps.push_back({"mutation-self-test", 9, [](int n, std::uint64_t& cases) {
    std::mt19937 rng(0x5eed + static_cast<unsigned>(n));
    return for_each_word(n, Family::luk, [&](const LukasiewiczWord& w) -> Failure {
      ++cases;
      std::vector<int> mutated = w.vector();
      const auto pos = std::uniform_int_distribution<std::size_t>(0, mutated.size() - 1)(rng);
      mutated[pos] += (mutated[pos] == -1 || (rng() & 1)) ? 1 : -1;
      if (!find_word_defect(mutated)) return fail("mutated word " + join(mutated) + " passed validation");
      return std::nullopt;
    });
  }});

  return ps;
}

} // namespace verify_detail

inline std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& p : verify_detail::properties()) names.push_back(p.name);
  return names;
}

// Runs the named property, or all of them when `only` is empty.
inline std::vector<PropertyResult> run_verification(int max_n, const std::vector<std::string>& only = {}) {
  std::vector<PropertyResult> results;
  for (const auto& prop : verify_detail::properties()) {
    if (!only.empty() && std::find(only.begin(), only.end(), prop.name) == only.end()) continue;
    PropertyResult r;
    r.name = prop.name;
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::string> failure;
    if (prop.fixed) failure = prop.fixed(r.cases);
    const int top = std::min(max_n, prop.ceiling);
    for (int n = 1; n <= top && !failure; ++n) {
      failure = prop.check(n, r.cases);
      r.checked_up_to = n;
    }
    if (failure) {
      r.passed = false;
      r.counterexample = *failure;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

} // namespace parklot
