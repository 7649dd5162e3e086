#include "gm/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gm {

namespace {

Rational total_value(std::span<const Bid> bids, const std::vector<std::size_t>& picks) {
  Rational v = 0;
  for (std::size_t p : picks) v += bids[p].value;
  return v;
}

std::vector<int> to_agent_ids(std::span<const Bid> bids,
                              std::vector<std::size_t> picks) {
  std::vector<int> ids;
  ids.reserve(picks.size());
  for (std::size_t p : picks) ids.push_back(bids[p].agent_id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Positions sorted by descending value, agent index breaking ties.
std::vector<std::size_t> value_order(std::span<const Bid> bids) {
  std::vector<std::size_t> order(bids.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (bids[a].value != bids[b].value) return bids[a].value > bids[b].value;
    return bids[a].agent_id < bids[b].agent_id;
  });
  return order;
}

// Positions sorted by descending profit density (value/size), agent index
// breaking ties. Sizes are positive, so cross-multiplication is exact.
std::vector<std::size_t> density_order(std::span<const Bid> bids) {
  std::vector<std::size_t> order(bids.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Rational lhs = bids[a].value * bids[b].size;
    const Rational rhs = bids[b].value * bids[a].size;
    if (lhs != rhs) return lhs > rhs;
    return bids[a].agent_id < bids[b].agent_id;
  });
  return order;
}

std::vector<std::size_t> greedy_fill(std::span<const Bid> bids,
                                     const std::vector<std::size_t>& order,
                                     const Rational& capacity) {
  std::vector<std::size_t> picks;
  Rational load = 0;
  for (std::size_t p : order) {
    if (load + bids[p].size <= capacity) {
      picks.push_back(p);
      load += bids[p].size;
    }
  }
  return picks;
}

}  // namespace

OracleResult max_greedy(std::span<const Bid> bids, const Rational& capacity) {
  const auto by_value = greedy_fill(bids, value_order(bids), capacity);
  const auto by_density = greedy_fill(bids, density_order(bids), capacity);
  const Rational v1 = total_value(bids, by_value);
  const Rational v2 = total_value(bids, by_density);
  if (v1 >= v2) return {to_agent_ids(bids, by_value), v1};
  return {to_agent_ids(bids, by_density), v2};
}

OracleResult half_greedy(std::span<const Bid> bids, const Rational& capacity) {
  const Rational half = capacity / 2;

  // Route 1: the single most valuable item that fits the bin at all.
  std::vector<std::size_t> best_single;
  Rational v1 = 0;
  for (std::size_t p = 0; p < bids.size(); ++p) {
    if (bids[p].size > capacity) continue;
    if (best_single.empty() || bids[p].value > v1 ||
        (bids[p].value == v1 && bids[p].agent_id < bids[best_single[0]].agent_id)) {
      best_single = {p};
      v1 = bids[p].value;
    }
  }

  // Route 2: density greedy over small items, stopping once the covered
  // size reaches half the capacity. Every item here has size <= W/2, so
  // the total never exceeds W.
  std::vector<Bid> small;
  for (const Bid& b : bids)
    if (b.size <= half) small.push_back(b);
  const auto order = density_order(small);
  std::vector<std::size_t> picks;
  Rational load = 0;
  for (std::size_t p : order) {
    if (load >= half) break;
    picks.push_back(p);
    load += small[p].size;
  }

  // Fractional score of the density route: full value of all but the last
  // pick, plus the portion of the last pick that lies before the half-way
  // mark. When the small items never reach W/2 the minimum degenerates to
  // the full last size, so no special case is needed.
  Rational v2 = 0;
  if (!picks.empty()) {
    Rational prefix = 0;
    for (std::size_t t = 0; t + 1 < picks.size(); ++t) {
      v2 += small[picks[t]].value;
      prefix += small[picks[t]].size;
    }
    const Bid& last = small[picks.back()];
    v2 += last.value / last.size * std::min(last.size, Rational(half - prefix));
  }

  if (v1 >= v2) return {to_agent_ids(bids, best_single), v1};
  std::vector<int> ids;
  for (std::size_t p : picks) ids.push_back(small[p].agent_id);
  std::sort(ids.begin(), ids.end());
  return {ids, v2};
}

std::vector<int> pseudo_pack(const std::vector<BigInt>& scaled_values,
                             const std::vector<Rational>& sizes,
                             const Rational& capacity) {
  const std::size_t n = scaled_values.size();
  if (sizes.size() != n)
    throw std::invalid_argument("pseudo_pack: values/sizes length mismatch");

  BigInt total_big = 0;
  for (const BigInt& v : scaled_values) {
    if (v < 0) throw std::invalid_argument("pseudo_pack: negative scaled value");
    total_big += v;
  }
  if (total_big > 50'000'000)
    throw std::length_error("pseudo_pack: scaled value range too large");
  const std::size_t total = total_big.convert_to<std::size_t>();

  // dp[v] = minimum weight achieving scaled value exactly v; unset when
  // unreachable. excluded[i][v] records whether the canonical solution for
  // the prefix 0..i at value v leaves item i out, which pins the
  // reconstruction to a deterministic representative.
  std::vector<std::optional<Rational>> dp(total + 1);
  dp[0] = Rational(0);
  std::vector<std::vector<char>> excluded(n, std::vector<char>(total + 1, 1));

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t vi = scaled_values[i].convert_to<std::size_t>();
    const Rational& wi = sizes[i];
    if (vi == 0) continue;  // adding value 0 never beats excluding
    for (std::size_t v = total; v >= vi; --v) {
      if (!dp[v - vi]) continue;
      const Rational cand = *dp[v - vi] + wi;
      if (!dp[v] || cand < *dp[v]) {
        dp[v] = cand;
        excluded[i][v] = 0;
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t v = total; v > 0; --v) {
    if (dp[v] && *dp[v] <= capacity) {
      best = v;
      break;
    }
  }

  std::vector<int> picked;
  std::size_t v = best;
  for (std::size_t i = n; i-- > 0;) {
    if (v == 0) break;
    if (!excluded[i][v]) {
      picked.push_back(static_cast<int>(i));
      v -= scaled_values[i].convert_to<std::size_t>();
    }
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

ScaledValues scale_k(std::span<const Bid> bids, long k, const Rational& eps) {
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("scale_k: eps must lie in (0,1)");
  const Rational two_k = pow2(k);
  const Rational alpha = Rational(bids.size()) / (eps * two_k);
  ScaledValues out;
  out.scaled.reserve(bids.size());
  out.descaled.reserve(bids.size());
  for (const Bid& b : bids) {
    const Rational truncated = std::min(b.value, two_k);
    const BigInt scaled = floor_rat(alpha * truncated);
    out.scaled.push_back(scaled);
    out.descaled.push_back(Rational(scaled) / alpha);
  }
  return out;
}

OracleResult monotone_fptas(std::span<const Bid> bids, const Rational& capacity,
                            const FptasConfig& cfg) {
  const Rational& eps = cfg.epsilon;
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("monotone_fptas: eps must lie in (0,1)");

  Rational max_value = 0;
  for (const Bid& b : bids) max_value = std::max(max_value, b.value);
  if (bids.empty() || max_value <= 0) return {{}, 0};

  const Rational n(bids.size());
  const long k_hi = ceil_log2(n * max_value / eps);
  const long k_lo = floor_log2(max_value * (1 - eps) / n) - 1;

  std::vector<Rational> sizes;
  sizes.reserve(bids.size());
  for (const Bid& b : bids) sizes.push_back(b.size);

  std::vector<std::size_t> best_picks;
  Rational best = 0;
  for (long k = k_hi; k >= k_lo; --k) {
    const ScaledValues sv = scale_k(bids, k, eps);
    const std::vector<int> picks = pseudo_pack(sv.scaled, sizes, capacity);
    Rational descaled = 0;
    for (int p : picks) descaled += sv.descaled[p];
    if (descaled > best) {
      best = descaled;
      best_picks.assign(picks.begin(), picks.end());
    }
  }
  return {to_agent_ids(bids, best_picks), best};
}

OracleResult max_value_oracle(std::span<const Bid> bids, const Rational& capacity) {
  const Bid* best = nullptr;
  for (const Bid& b : bids) {
    if (b.size > capacity) continue;
    if (!best || b.value > best->value ||
        (b.value == best->value && b.agent_id < best->agent_id))
      best = &b;
  }
  if (!best) return {{}, 0};
  return {{best->agent_id}, best->value};
}

}  // namespace gm
