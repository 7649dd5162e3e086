#pragma once

#include <optional>
#include <vector>

#include "gm/rational.hpp"

namespace gm {

// A single-minded agent's declaration. The object is a size demand; a
// per-bin size vector replaces the scalar when the bins are heterogeneous.
// Arrival/departure are slot indices and only appear in online instances.
struct Bid {
  int agent_id = 0;
  Rational value;
  Rational size;
  std::optional<std::vector<Rational>> size_vector;
  std::optional<int> arrival;
  std::optional<int> departure;

  bool operator==(const Bid&) const = default;
};

struct BinSpec {
  int bin_id = 0;
  Rational capacity;
  std::optional<int> slot;

  bool operator==(const BinSpec&) const = default;
};

struct Instance {
  std::vector<Bid> bids;
  std::vector<BinSpec> bins;
  std::optional<int> bin_budget;
  bool online = false;

  int num_agents() const { return static_cast<int>(bids.size()); }
  int num_bins() const { return static_cast<int>(bins.size()); }

  // Effective size of agent i in bin j: the size-vector entry when present,
  // the scalar size otherwise.
  const Rational& size_in(int agent, int bin) const;

  bool operator==(const Instance&) const = default;
};

// Partition of the selected agents across bins. per_bin[j] holds bin j's
// agent ids in ascending order; empty bins hold empty vectors.
struct Assignment {
  std::vector<std::vector<int>> per_bin;

  explicit Assignment(int num_bins = 0) : per_bin(num_bins) {}

  bool contains(int agent) const;
  // Bin index of the agent, or nullopt when unselected.
  std::optional<int> bin_of(int agent) const;
  // All selected agents, ascending.
  std::vector<int> selected() const;
  std::size_t selected_count() const;

  bool operator==(const Assignment&) const = default;
};

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Returns the instance unchanged iff every structural invariant holds;
// throws ValidationError naming the first violation otherwise.
const Instance& validate_instance(const Instance& inst);

// Disjointness plus per-bin capacity feasibility (effective sizes).
// Throws ValidationError on the first violation.
void validate_assignment(const Assignment& a, const Instance& inst);
bool assignment_feasible(const Assignment& a, const Instance& inst);

// Total value of the selected agents.
Rational assignment_value(const Assignment& a, const Instance& inst);

// Bid-improvement partial order: a weakly higher value, weakly smaller
// demand, and (when temporal fields are present) a weakly wider window.
// Bids with mismatched optional fields are incomparable.
bool improves(const Bid& from, const Bid& to);

}  // namespace gm
