#pragma once

// Classical and MVP parking processes on a one-way street of n spots,
// displacement statistics, and membership tests for the parking-function
// subfamilies (non-decreasing, prime, unit-interval, Motzkin).
//
// Cars and spots are 1-based in every value that crosses this interface.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parklot/error.hpp"
#include "parklot/format.hpp"

namespace parklot {

class ParkingPreference {
public:
  explicit ParkingPreference(std::vector<int> prefs) : prefs_(std::move(prefs)) {
    if (prefs_.empty()) throw input_error("parking preference must have at least one car");
    const int n = size();
    for (std::size_t i = 0; i < prefs_.size(); ++i) {
      if (prefs_[i] < 1 || prefs_[i] > n) {
        throw input_error("preference of car " + std::to_string(i + 1) + " is " +
                          std::to_string(prefs_[i]) + ", outside [1, " + std::to_string(n) + "]");
      }
    }
  }

  int size() const noexcept { return static_cast<int>(prefs_.size()); }
  // Preferred spot of car `car` (1-based car index).
  int of_car(int car) const { return prefs_.at(static_cast<std::size_t>(car - 1)); }
  std::span<const int> values() const noexcept { return prefs_; }
  const std::vector<int>& vector() const noexcept { return prefs_; }

  auto operator<=>(const ParkingPreference&) const = default;

private:
  std::vector<int> prefs_;
};

// spots[i] is the final spot of car i+1; always a permutation of 1..n.
class Outcome {
public:
  explicit Outcome(std::vector<int> spots) : spots_(std::move(spots)) {}

  int size() const noexcept { return static_cast<int>(spots_.size()); }
  int of_car(int car) const { return spots_.at(static_cast<std::size_t>(car - 1)); }
  std::span<const int> values() const noexcept { return spots_; }
  const std::vector<int>& vector() const noexcept { return spots_; }

  bool is_permutation() const {
    std::vector<char> seen(spots_.size() + 1, 0);
    for (int s : spots_) {
      if (s < 1 || s > size() || seen[static_cast<std::size_t>(s)]) return false;
      seen[static_cast<std::size_t>(s)] = 1;
    }
    return true;
  }

  auto operator<=>(const Outcome&) const = default;

private:
  std::vector<int> spots_;
};

class DisplacementVector {
public:
  explicit DisplacementVector(std::vector<int> d) : d_(std::move(d)) {}

  std::span<const int> values() const noexcept { return d_; }
  const std::vector<int>& vector() const noexcept { return d_; }
  long long total() const { return std::accumulate(d_.begin(), d_.end(), 0LL); }
  int max() const { return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end()); }

  auto operator<=>(const DisplacementVector&) const = default;

private:
  std::vector<int> d_;
};

// A car that drove past spot n. `occupancy[s-1]` is the car parked in spot s
// at the moment of failure, or 0 when the spot is empty.
struct ParkFailure {
  int car = 0;
  std::vector<int> occupancy;

  bool operator==(const ParkFailure&) const = default;
};

class ParkResult {
public:
  ParkResult(Outcome outcome) : outcome_(std::move(outcome)) {}
  ParkResult(ParkFailure failure) : failure_(std::move(failure)) {}

  bool parked() const noexcept { return outcome_.has_value(); }
  explicit operator bool() const noexcept { return parked(); }

  const Outcome& outcome() const {
    if (!outcome_) throw domain_error("car " + std::to_string(failure_->car) + " fails to park");
    return *outcome_;
  }
  const ParkFailure& failure() const {
    if (!failure_) throw std::logic_error("every car parked");
    return *failure_;
  }

private:
  std::optional<Outcome> outcome_;
  std::optional<ParkFailure> failure_;
};

// Cars arrive in order 1..n. Car i takes spot p_i if it is free, otherwise the
// first free spot after p_i; if there is none the car exits and the process stops.
inline ParkResult park(const ParkingPreference& p) {
  const int n = p.size();
  std::vector<int> occupant(static_cast<std::size_t>(n), 0);
  std::vector<int> spots(static_cast<std::size_t>(n), 0);
  for (int car = 1; car <= n; ++car) {
    int spot = p.of_car(car);
    while (spot <= n && occupant[static_cast<std::size_t>(spot - 1)] != 0) ++spot;
    if (spot > n) return ParkFailure{car, std::move(occupant)};
    occupant[static_cast<std::size_t>(spot - 1)] = car;
    spots[static_cast<std::size_t>(car - 1)] = spot;
  }
  return Outcome(std::move(spots));
}

// MVP process: the arriving car always takes its preferred spot. A car it
// evicts does not bump anyone; it parks in the first free spot strictly after
// the one it lost.
inline ParkResult mvp_park(const ParkingPreference& p) {
  const int n = p.size();
  std::vector<int> occupant(static_cast<std::size_t>(n), 0);
  std::vector<int> spots(static_cast<std::size_t>(n), 0);
  for (int car = 1; car <= n; ++car) {
    const int spot = p.of_car(car);
    const int evicted = occupant[static_cast<std::size_t>(spot - 1)];
    occupant[static_cast<std::size_t>(spot - 1)] = car;
    spots[static_cast<std::size_t>(car - 1)] = spot;
    if (evicted == 0) continue;
    int next = spot + 1;
    while (next <= n && occupant[static_cast<std::size_t>(next - 1)] != 0) ++next;
    if (next > n) {
      spots[static_cast<std::size_t>(evicted - 1)] = 0;
      return ParkFailure{evicted, std::move(occupant)};
    }
    occupant[static_cast<std::size_t>(next - 1)] = evicted;
    spots[static_cast<std::size_t>(evicted - 1)] = next;
  }
  return Outcome(std::move(spots));
}

enum class PfMethod { simulate, sorted, counting };

namespace detail {

// counts[j] = |{i : p_i <= j}| for j = 0..n.
inline std::vector<int> cumulative_counts(std::span<const int> prefs) {
  const std::size_t n = prefs.size();
  std::vector<int> counts(n + 1, 0);
  for (int v : prefs) ++counts[static_cast<std::size_t>(v)];
  for (std::size_t j = 1; j <= n; ++j) counts[j] += counts[j - 1];
  return counts;
}

} // namespace detail

inline bool is_parking_function(const ParkingPreference& p, PfMethod method = PfMethod::counting) {
  switch (method) {
  case PfMethod::simulate:
    return park(p).parked();
  case PfMethod::sorted: {
    std::vector<int> sorted = p.vector();
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] > static_cast<int>(i) + 1) return false;
    }
    return true;
  }
  case PfMethod::counting: {
    const auto counts = detail::cumulative_counts(p.values());
    for (std::size_t i = 1; i < counts.size(); ++i) {
      if (counts[i] < static_cast<int>(i)) return false;
    }
    return true;
  }
  }
  return false;
}

inline DisplacementVector displacement(const ParkingPreference& p) {
  const ParkResult result = park(p);
  if (!result) {
    throw domain_error("not a parking function: car " + std::to_string(result.failure().car) +
                       " fails to park");
  }
  const auto& spots = result.outcome().vector();
  std::vector<int> d(spots.size());
  for (std::size_t i = 0; i < spots.size(); ++i) d[i] = spots[i] - p.vector()[i];
  return DisplacementVector(std::move(d));
}

// Indices j with exactly j cars preferring one of the first j spots. Always contains n.
inline std::vector<int> breakpoints(const ParkingPreference& p) {
  if (!is_parking_function(p)) throw domain_error("breakpoints are defined for parking functions only");
  const auto counts = detail::cumulative_counts(p.values());
  std::vector<int> result;
  for (std::size_t j = 1; j < counts.size(); ++j) {
    if (counts[j] == static_cast<int>(j)) result.push_back(static_cast<int>(j));
  }
  return result;
}

inline bool is_non_decreasing(std::span<const int> values) {
  return std::is_sorted(values.begin(), values.end());
}

// No spot is preferred by more than two cars.
inline bool satisfies_motzkin_restriction(std::span<const int> prefs) {
  std::vector<int> multiplicity(prefs.size() + 1, 0);
  for (int v : prefs) {
    if (++multiplicity[static_cast<std::size_t>(v)] > 2) return false;
  }
  return true;
}

// Each car ends in its preferred spot or the one right after it.
// Requires a parking function.
inline bool parks_within_one_spot(const ParkingPreference& p) {
  const auto o = park(p).outcome();
  for (int car = 1; car <= p.size(); ++car) {
    const int gap = o.of_car(car) - p.of_car(car);
    if (gap != 0 && gap != 1) return false;
  }
  return true;
}

// Every flag other than is_pf refers to the parking-function family of that
// name, so all of them are false when is_pf is false.
struct Classification {
  bool is_pf = false;
  bool is_non_decreasing = false;
  bool is_prime = false;
  bool is_unit_interval = false;
  bool is_motzkin = false;

  bool operator==(const Classification&) const = default;
};

inline Classification classify(const ParkingPreference& p) {
  Classification c;
  c.is_pf = is_parking_function(p);
  if (!c.is_pf) return c;
  c.is_non_decreasing = is_non_decreasing(p.values());
  const auto bps = breakpoints(p);
  c.is_prime = bps.size() == 1;
  c.is_unit_interval = displacement(p).max() <= 1;
  assert(c.is_unit_interval == parks_within_one_spot(p));
  c.is_motzkin = satisfies_motzkin_restriction(p.values());
  return c;
}

inline std::string to_string(const ParkingPreference& p) { return join(p.vector()); }

} // namespace parklot
