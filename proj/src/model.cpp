#include "gm/model.hpp"

#include <algorithm>
#include <string>

namespace gm {

const Rational& Instance::size_in(int agent, int bin) const {
  const Bid& b = bids[agent];
  if (b.size_vector) return (*b.size_vector)[bin];
  return b.size;
}

bool Assignment::contains(int agent) const {
  for (const auto& bin : per_bin)
    if (std::binary_search(bin.begin(), bin.end(), agent)) return true;
  return false;
}

std::optional<int> Assignment::bin_of(int agent) const {
  for (std::size_t j = 0; j < per_bin.size(); ++j)
    if (std::binary_search(per_bin[j].begin(), per_bin[j].end(), agent))
      return static_cast<int>(j);
  return std::nullopt;
}

std::vector<int> Assignment::selected() const {
  std::vector<int> all;
  for (const auto& bin : per_bin) all.insert(all.end(), bin.begin(), bin.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::size_t Assignment::selected_count() const {
  std::size_t n = 0;
  for (const auto& bin : per_bin) n += bin.size();
  return n;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

std::string agent_tag(int i) { return "bid " + std::to_string(i); }
std::string bin_tag(int j) { return "bin " + std::to_string(j); }

}  // namespace

const Instance& validate_instance(const Instance& inst) {
  const int n = inst.num_agents();
  const int m = inst.num_bins();

  for (int i = 0; i < n; ++i) {
    const Bid& b = inst.bids[i];
    if (b.agent_id != i) fail(agent_tag(i) + ": agent ids must be dense 0..n-1");
    if (b.value < 0) fail(agent_tag(i) + ": negative value");
    if (b.size <= 0) fail(agent_tag(i) + ": nonpositive size");
    if (b.size_vector) {
      if (static_cast<int>(b.size_vector->size()) != m)
        fail(agent_tag(i) + ": size vector length differs from bin count");
      for (const Rational& w : *b.size_vector)
        if (w <= 0) fail(agent_tag(i) + ": nonpositive size vector entry");
    }
    if (b.arrival.has_value() != b.departure.has_value())
      fail(agent_tag(i) + ": arrival and departure must come together");
    if (b.arrival && *b.arrival > *b.departure)
      fail(agent_tag(i) + ": arrival after departure");
  }

  for (int j = 0; j < m; ++j) {
    const BinSpec& s = inst.bins[j];
    if (s.bin_id != j) fail(bin_tag(j) + ": bin ids must be dense 0..m-1");
    if (s.capacity <= 0) fail(bin_tag(j) + ": nonpositive capacity");
  }

  if (inst.online) {
    for (int i = 0; i < n; ++i)
      if (!inst.bids[i].arrival)
        fail(agent_tag(i) + ": online instance requires arrival/departure");
    for (int j = 0; j < m; ++j) {
      if (!inst.bins[j].slot) fail(bin_tag(j) + ": online instance requires slots");
      if (j > 0 && *inst.bins[j].slot <= *inst.bins[j - 1].slot)
        fail(bin_tag(j) + ": slots must be strictly increasing");
    }
  }

  if (inst.bin_budget) {
    if (*inst.bin_budget < 0 || *inst.bin_budget > m)
      fail("bin budget out of range 0..m");
  }

  return inst;
}

void validate_assignment(const Assignment& a, const Instance& inst) {
  const int m = inst.num_bins();
  if (static_cast<int>(a.per_bin.size()) != m)
    fail("assignment bin count differs from instance");
  std::vector<char> seen(inst.bids.size(), 0);
  for (int j = 0; j < m; ++j) {
    Rational load = 0;
    for (int i : a.per_bin[j]) {
      if (i < 0 || i >= inst.num_agents()) fail(bin_tag(j) + ": unknown agent id");
      if (seen[i]) fail(agent_tag(i) + ": assigned to more than one bin");
      seen[i] = 1;
      load += inst.size_in(i, j);
    }
    if (load > inst.bins[j].capacity) fail(bin_tag(j) + ": capacity exceeded");
  }
}

bool assignment_feasible(const Assignment& a, const Instance& inst) {
  try {
    validate_assignment(a, inst);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

Rational assignment_value(const Assignment& a, const Instance& inst) {
  Rational total = 0;
  for (const auto& bin : a.per_bin)
    for (int i : bin) total += inst.bids[i].value;
  return total;
}

bool improves(const Bid& from, const Bid& to) {
  if (to.value < from.value) return false;
  if (from.size_vector.has_value() != to.size_vector.has_value()) return false;
  if (from.size_vector) {
    if (from.size_vector->size() != to.size_vector->size()) return false;
    for (std::size_t j = 0; j < from.size_vector->size(); ++j)
      if ((*to.size_vector)[j] > (*from.size_vector)[j]) return false;
  } else {
    if (to.size > from.size) return false;
  }
  if (from.arrival.has_value() != to.arrival.has_value()) return false;
  if (from.departure.has_value() != to.departure.has_value()) return false;
  if (from.arrival && *to.arrival > *from.arrival) return false;
  if (from.departure && *to.departure < *from.departure) return false;
  return true;
}

}  // namespace gm
