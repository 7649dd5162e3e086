#pragma once

#include <functional>
#include <string>

#include "gm/oracles.hpp"

namespace gm {

enum class OracleTag { max_greedy, half_greedy, fptas, max_value };

// Which single-bin oracle a composition runs, plus the accuracy parameter
// for the FPTAS.
struct OracleKind {
  OracleTag tag = OracleTag::half_greedy;
  Rational eps;  // meaningful only when tag == fptas

  static OracleKind MaxGreedy() { return {OracleTag::max_greedy, 0}; }
  static OracleKind HalfGreedy() { return {OracleTag::half_greedy, 0}; }
  static OracleKind Fptas(Rational eps) { return {OracleTag::fptas, std::move(eps)}; }
  static OracleKind MaxValue() { return {OracleTag::max_value, 0}; }

  bool operator==(const OracleKind&) const = default;
};

using SingleBinOracle =
    std::function<OracleResult(std::span<const Bid>, const Rational&)>;

OracleResult run_oracle(const OracleKind& kind, std::span<const Bid> bids,
                        const Rational& capacity);
SingleBinOracle oracle_fn(const OracleKind& kind);

// "maxgreedy", "halfgreedy", "fptas:EPS", "maxvalue" — the CLI spelling.
std::string oracle_name(const OracleKind& kind);
// Parses the CLI spelling back; throws std::invalid_argument.
OracleKind parse_oracle(const std::string& name);

struct PackResult {
  Assignment assignment;
  std::size_t oracle_calls = 0;
};

// Local greedy: bins in declaration order, each packed by the oracle over
// the not-yet-selected bids, no backtracking. Uses the per-bin effective
// size, so instances with size vectors pack consistently. Makes exactly m
// oracle calls.
PackResult iterative_pack(const Instance& inst, const SingleBinOracle& oracle);
PackResult iterative_pack(const Instance& inst, const OracleKind& kind);

// Same composition, but requires every bid to carry a full per-bin size
// vector; throws ValidationError otherwise.
PackResult gap_iterative_pack(const Instance& inst, const SingleBinOracle& oracle);
PackResult gap_iterative_pack(const Instance& inst, const OracleKind& kind);

// Global greedy under a bin budget: each round runs the oracle on every
// still-empty bin and commits the best (bin, set) pair, lowest bin index
// on value ties; stops early once no bin improves the solution. At most
// bin_budget rounds and bin_budget * m oracle calls.
PackResult global_greedy_pack(const Instance& inst, const SingleBinOracle& oracle);
PackResult global_greedy_pack(const Instance& inst, const OracleKind& kind);

}  // namespace gm
