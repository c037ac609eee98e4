#pragma once

// Minimum number of CUs serving a set of DUs. A CU sits on an edge PoP, may
// only serve DUs whose PoP is within the latency budget of that edge PoP, and
// serves at most `max_dus_per_cu` DUs. Several CUs may share an edge PoP.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ranslice {

struct PlacementProblem {
  int du_count = 0;
  int pop_count = 0;
  std::vector<std::vector<bool>> feasible;  // [du][pop]
  int max_dus_per_cu = 1;
};

struct CuGroup {
  int pop = -1;
  std::vector<int> dus;  // ascending

  bool operator==(const CuGroup&) const = default;
};

using Placement = std::vector<CuGroup>;

/// Largest instance the planner hands to place_exact (3^n subset pairs).
inline constexpr int kMaxExactDus = 16;

namespace detail {

inline bool every_du_has_a_pop(const PlacementProblem& p) {
  if (p.max_dus_per_cu < 1) throw std::invalid_argument("a CU must admit at least one DU");
  for (int d = 0; d < p.du_count; ++d) {
    if (std::none_of(p.feasible[d].begin(), p.feasible[d].end(), [](bool b) { return b; })) return false;
  }
  return true;
}

inline void normalize(Placement& placement) {
  for (auto& g : placement) std::sort(g.dus.begin(), g.dus.end());
  std::sort(placement.begin(), placement.end(),
            [](const CuGroup& a, const CuGroup& b) { return a.dus.front() < b.dus.front(); });
}

}  // namespace detail

/// Exact minimum via dynamic programming over DU subsets. Each CU is a group
/// of at most `max_dus_per_cu` DUs that share a feasible PoP (the lowest index
/// one is used). Returns nullopt when some DU has no
/// feasible PoP.
inline std::optional<Placement> place_exact(const PlacementProblem& p) {
  if (p.du_count > 20) throw std::invalid_argument("place_exact supports at most 20 DUs");
  if (p.du_count == 0) return Placement{};
  if (!detail::every_du_has_a_pop(p)) return std::nullopt;

  const std::uint32_t full = (1u << p.du_count) - 1;
  std::vector<std::uint32_t> pop_mask(p.pop_count, 0);
  for (int d = 0; d < p.du_count; ++d) {
    for (int q = 0; q < p.pop_count; ++q) {
      if (p.feasible[d][q]) pop_mask[q] |= 1u << d;
    }
  }
  std::vector<int> group_pop(full + 1, -1);
  for (std::uint32_t group = 1; group <= full; ++group) {
    if (std::popcount(group) > p.max_dus_per_cu) continue;
    for (int q = 0; q < p.pop_count; ++q) {
      if ((group & ~pop_mask[q]) == 0) {
        group_pop[group] = q;
        break;
      }
    }
  }

  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> best(full + 1, kInf);
  std::vector<std::uint32_t> choice(full + 1, 0);
  best[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    // Enumerate groups containing the lowest DU of `mask`.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t group = sub | low;
      if (best[mask ^ group] + 1 < best[mask] && group_pop[group] >= 0) {
        best[mask] = best[mask ^ group] + 1;
        choice[mask] = group;
      }
      if (sub == 0) break;
    }
  }

  Placement placement;
  for (std::uint32_t mask = full; mask != 0; mask ^= choice[mask]) {
    const std::uint32_t group = choice[mask];
    CuGroup g{group_pop[group], {}};
    for (int d = 0; d < p.du_count; ++d) {
      if (group & (1u << d)) g.dus.push_back(d);
    }
    placement.push_back(std::move(g));
  }
  detail::normalize(placement);
  return placement;
}

/// Greedy first-fit-decreasing: repeatedly open a CU on the PoP that can reach
/// the most unassigned DUs (ties: lowest index) and fill it, most constrained
/// DUs first.
inline std::optional<Placement> place_greedy(const PlacementProblem& p) {
  if (!detail::every_du_has_a_pop(p)) return std::nullopt;
  std::vector<int> alternatives(p.du_count, 0);
  for (int d = 0; d < p.du_count; ++d) {
    alternatives[d] = static_cast<int>(std::count(p.feasible[d].begin(), p.feasible[d].end(), true));
  }
  std::vector<bool> assigned(p.du_count, false);
  int remaining = p.du_count;
  Placement placement;
  while (remaining > 0) {
    int best_pop = -1;
    int best_degree = 0;
    for (int q = 0; q < p.pop_count; ++q) {
      int degree = 0;
      for (int d = 0; d < p.du_count; ++d) degree += (!assigned[d] && p.feasible[d][q]) ? 1 : 0;
      if (degree > best_degree) {
        best_degree = degree;
        best_pop = q;
      }
    }
    std::vector<int> candidates;
    for (int d = 0; d < p.du_count; ++d) {
      if (!assigned[d] && p.feasible[d][best_pop]) candidates.push_back(d);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int a, int b) { return alternatives[a] < alternatives[b]; });
    candidates.resize(std::min<std::size_t>(candidates.size(), p.max_dus_per_cu));
    for (int d : candidates) assigned[d] = true;
    remaining -= static_cast<int>(candidates.size());
    placement.push_back({best_pop, candidates});
  }
  detail::normalize(placement);
  return placement;
}

}  // namespace ranslice
