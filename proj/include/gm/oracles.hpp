#pragma once

#include <span>
#include <vector>

#include "gm/model.hpp"

namespace gm {

// Output of a single-bin oracle. `selected` holds agent ids in ascending
// order and always fits the bin. `reported_value` is the value the oracle
// compared on internally; for the half-greedy oracle that can be the
// fractional lower bound of its density route, which never exceeds the
// true value of the selected set.
struct OracleResult {
  std::vector<int> selected;
  Rational reported_value;

  bool operator==(const OracleResult&) const = default;
};

struct FptasConfig {
  Rational epsilon;  // in (0,1)
};

// Two greedy passes, one by value and one by profit density, each skipping
// items that overflow; returns the better of the two sets. Ties inside a
// pass and between the passes break toward the lower agent index, with the
// value pass preferred on an exact tie. 2-approximate but not
// loser-independent.
OracleResult max_greedy(std::span<const Bid> bids, const Rational& capacity);

// Best of (a) the single most valuable item and (b) a density greedy over
// small items (size <= W/2) that stops once half the bin is covered. The
// density route is scored by the fractional value of the prefix that fills
// exactly half the bin. 2-approximate, monotone and loser-independent.
OracleResult half_greedy(std::span<const Bid> bids, const Rational& capacity);

// Exact knapsack on integer values: dynamic program over achievable total
// value, minimizing weight. Among optimal subsets the reconstruction
// prefers excluding higher-indexed items, so the output is a deterministic
// function of the input.
std::vector<int> pseudo_pack(const std::vector<BigInt>& scaled_values,
                             const std::vector<Rational>& sizes,
                             const Rational& capacity);

// Value scaling for one FPTAS round: truncate at 2^k, scale by
// alpha_k = n/(eps*2^k) with an exact rational floor, and de-scale back.
struct ScaledValues {
  std::vector<BigInt> scaled;
  std::vector<Rational> descaled;
};
ScaledValues scale_k(std::span<const Bid> bids, long k, const Rational& eps);

// Monotone FPTAS: runs pseudo_pack on a descending range of scalings and
// keeps the result with the strictly largest de-scaled value, so the
// earliest scaling in loop order wins ties. Guarantees
// value(selected) >= (1-eps) * OPT.
OracleResult monotone_fptas(std::span<const Bid> bids, const Rational& capacity,
                            const FptasConfig& cfg);

// Picks the single most valuable bid that fits the bin on its own (lowest
// index on ties). Optimal for a single-item auction, hence monotone and
// loser-independent.
OracleResult max_value_oracle(std::span<const Bid> bids, const Rational& capacity);

}  // namespace gm
