#include "gm/packing.hpp"

#include <algorithm>

namespace gm {

OracleResult run_oracle(const OracleKind& kind, std::span<const Bid> bids,
                        const Rational& capacity) {
  switch (kind.tag) {
    case OracleTag::max_greedy:
      return max_greedy(bids, capacity);
    case OracleTag::half_greedy:
      return half_greedy(bids, capacity);
    case OracleTag::fptas:
      return monotone_fptas(bids, capacity, FptasConfig{kind.eps});
    case OracleTag::max_value:
      return max_value_oracle(bids, capacity);
  }
  throw std::logic_error("unreachable oracle tag");
}

SingleBinOracle oracle_fn(const OracleKind& kind) {
  return [kind](std::span<const Bid> bids, const Rational& capacity) {
    return run_oracle(kind, bids, capacity);
  };
}

std::string oracle_name(const OracleKind& kind) {
  switch (kind.tag) {
    case OracleTag::max_greedy:
      return "maxgreedy";
    case OracleTag::half_greedy:
      return "halfgreedy";
    case OracleTag::fptas:
      return "fptas:" + to_string(kind.eps);
    case OracleTag::max_value:
      return "maxvalue";
  }
  throw std::logic_error("unreachable oracle tag");
}

OracleKind parse_oracle(const std::string& name) {
  if (name == "maxgreedy") return OracleKind::MaxGreedy();
  if (name == "halfgreedy") return OracleKind::HalfGreedy();
  if (name == "maxvalue") return OracleKind::MaxValue();
  if (name.rfind("fptas:", 0) == 0) {
    const Rational eps = parse_rational(name.substr(6));
    if (eps <= 0 || eps >= 1)
      throw std::invalid_argument("fptas eps must lie in (0,1)");
    return OracleKind::Fptas(eps);
  }
  throw std::invalid_argument("unknown oracle '" + name +
                              "' (expected maxgreedy|halfgreedy|fptas:EPS|maxvalue)");
}

namespace {

// Bids still in play for bin j, with the effective per-bin size substituted
// for the scalar so oracles never see size vectors.
std::vector<Bid> remaining_for_bin(const Instance& inst, int bin,
                                   const std::vector<char>& taken) {
  std::vector<Bid> out;
  for (int i = 0; i < inst.num_agents(); ++i) {
    if (taken[i]) continue;
    Bid b = inst.bids[i];
    b.size = inst.size_in(i, bin);
    b.size_vector.reset();
    out.push_back(std::move(b));
  }
  return out;
}

Rational true_value(const Instance& inst, const std::vector<int>& agents) {
  Rational v = 0;
  for (int i : agents) v += inst.bids[i].value;
  return v;
}

}  // namespace

PackResult iterative_pack(const Instance& inst, const SingleBinOracle& oracle) {
  PackResult out{Assignment(inst.num_bins()), 0};
  std::vector<char> taken(inst.bids.size(), 0);
  for (int j = 0; j < inst.num_bins(); ++j) {
    const std::vector<Bid> remaining = remaining_for_bin(inst, j, taken);
    OracleResult res = oracle(remaining, inst.bins[j].capacity);
    ++out.oracle_calls;
    for (int id : res.selected) taken[id] = 1;
    out.assignment.per_bin[j] = std::move(res.selected);
  }
  return out;
}

PackResult iterative_pack(const Instance& inst, const OracleKind& kind) {
  return iterative_pack(inst, oracle_fn(kind));
}

PackResult gap_iterative_pack(const Instance& inst, const SingleBinOracle& oracle) {
  for (int i = 0; i < inst.num_agents(); ++i) {
    const auto& sv = inst.bids[i].size_vector;
    if (!sv || static_cast<int>(sv->size()) != inst.num_bins())
      throw ValidationError("bid " + std::to_string(i) +
                            ": gap packing requires a size vector entry per bin");
  }
  return iterative_pack(inst, oracle);
}

PackResult gap_iterative_pack(const Instance& inst, const OracleKind& kind) {
  return gap_iterative_pack(inst, oracle_fn(kind));
}

PackResult global_greedy_pack(const Instance& inst, const SingleBinOracle& oracle) {
  const int m = inst.num_bins();
  const int budget = inst.bin_budget.value_or(m);
  PackResult out{Assignment(m), 0};
  std::vector<char> taken(inst.bids.size(), 0);
  std::vector<char> used(m, 0);

  for (int round = 0; round < budget; ++round) {
    int best_bin = -1;
    OracleResult best_res;
    Rational best_val = 0;
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      const std::vector<Bid> remaining = remaining_for_bin(inst, j, taken);
      OracleResult res = oracle(remaining, inst.bins[j].capacity);
      ++out.oracle_calls;
      // Compositions compare on the true value of the selected set, not on
      // the oracle's internal score.
      const Rational val = true_value(inst, res.selected);
      if (best_bin == -1 ? val > 0 : val > best_val) {
        best_bin = j;
        best_res = std::move(res);
        best_val = val;
      }
    }
    if (best_bin == -1) break;  // committing an empty set would be a no-op
    used[best_bin] = 1;
    for (int id : best_res.selected) taken[id] = 1;
    out.assignment.per_bin[best_bin] = std::move(best_res.selected);
  }
  return out;
}

PackResult global_greedy_pack(const Instance& inst, const OracleKind& kind) {
  return global_greedy_pack(inst, oracle_fn(kind));
}

}  // namespace gm
