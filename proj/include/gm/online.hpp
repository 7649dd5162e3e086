#pragma once

#include "gm/packing.hpp"

namespace gm {

// One processed time slot: who was present (arrived, not departed, not yet
// selected) and who the slot's oracle picked.
struct SlotEvent {
  int slot = 0;
  std::vector<int> present;
  std::vector<int> chosen;

  bool operator==(const SlotEvent&) const = default;
};

struct SimulationResult {
  Assignment assignment;
  std::vector<SlotEvent> trace;
  std::size_t oracle_calls = 0;
};

// Time-ordered iterative packing: at each slot the oracle sees exactly the
// bids whose window covers the slot and that are still unassigned; its
// output is committed irrevocably. The allocator never inspects a bid
// before its reported arrival.
SimulationResult simulate_online(const Instance& inst, const SingleBinOracle& oracle);
SimulationResult simulate_online(const Instance& inst, const OracleKind& kind);

// Expiring-items auction: unit-capacity slots, unit-size items, the most
// valuable present item wins each slot. Throws ValidationError when sizes
// or capacities are not all 1.
SimulationResult dynamic_auction(const Instance& inst);

// Multi-item variant: each slot runs the monotone FPTAS over the present
// bids against the slot's capacity.
SimulationResult dynamic_multi_auction(const Instance& inst, const Rational& eps);

}  // namespace gm
