#pragma once

// Deployment area: regions with cell sites and RUs, aggregation/edge PoPs and
// the transport links between them.

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ranslice/descriptors.hpp"
#include "ranslice/error.hpp"

namespace ranslice {

struct HostCapacity {
  int vcpu = 0;
  double ram_gb = 0;

  bool operator==(const HostCapacity&) const = default;
};

struct Region {
  std::string region_id;
  std::string region_class;
  double area_km2 = 0;
  FronthaulTech fronthaul_tech = FronthaulTech::Cpri;
  std::vector<std::string> cell_sites;
  std::string aggregation_pop;

  bool operator==(const Region&) const = default;
};

struct Pop {
  std::string pop_id;
  PopTier tier = PopTier::Aggregation;
  HostCapacity host_capacity;

  bool operator==(const Pop&) const = default;
};

struct TransportLink {
  std::string pop_a;
  std::string pop_b;
  double latency_ms = 0;

  bool operator==(const TransportLink&) const = default;
};

struct DeploymentArea {
  std::string area_id;
  std::vector<Region> regions;
  std::vector<Pop> pops;
  std::vector<TransportLink> links;
  std::vector<RuPnfd> rus;

  const Region* find_region(std::string_view id) const {
    for (const auto& r : regions) {
      if (r.region_id == id) return &r;
    }
    return nullptr;
  }
  const Pop* find_pop(std::string_view id) const {
    for (const auto& p : pops) {
      if (p.pop_id == id) return &p;
    }
    return nullptr;
  }
  /// Edge-tier PoP ids in ascending order.
  std::vector<std::string> edge_pops() const {
    std::vector<std::string> out;
    for (const auto& p : pops) {
      if (p.tier == PopTier::Edge) out.push_back(p.pop_id);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  bool operator==(const DeploymentArea&) const = default;
};

namespace detail {

inline std::set<std::string> checked_targets(const DeploymentArea& area,
                                             std::span<const std::string> target_regions) {
  std::set<std::string> targets;
  for (const auto& id : target_regions) {
    if (area.find_region(id) == nullptr) {
      throw Error(ErrorCode::UnknownRegion, "region '" + id + "' is not part of area '" + area.area_id + "'");
    }
    targets.insert(id);
  }
  return targets;
}

}  // namespace detail

/// RUs located in any of `target_regions`, sorted by RU id.
inline std::vector<RuPnfd> select_rus(const DeploymentArea& area, std::span<const std::string> target_regions) {
  const auto targets = detail::checked_targets(area, target_regions);
  std::vector<RuPnfd> out;
  for (const auto& ru : area.rus) {
    if (targets.contains(ru.region_id)) out.push_back(ru);
  }
  std::sort(out.begin(), out.end(), [](const RuPnfd& a, const RuPnfd& b) { return a.ru_id < b.ru_id; });
  return out;
}

/// Union of the fronthaul technologies of the target regions (CPRI before ECPRI).
inline std::vector<FronthaulTech> fronthaul_techs(const DeploymentArea& area,
                                                  std::span<const std::string> target_regions) {
  std::set<FronthaulTech> techs;
  for (const auto& id : detail::checked_targets(area, target_regions)) {
    techs.insert(area.find_region(id)->fronthaul_tech);
  }
  return {techs.begin(), techs.end()};
}

/// Shortest-path latencies from `source` to every reachable PoP.
inline std::map<std::string, double> latencies_from(const DeploymentArea& area, const std::string& source) {
  if (area.find_pop(source) == nullptr) {
    throw Error(ErrorCode::UnknownPop, "PoP '" + source + "' does not exist");
  }
  std::map<std::string, std::vector<std::pair<std::string, double>>> adjacency;
  for (const auto& link : area.links) {
    adjacency[link.pop_a].emplace_back(link.pop_b, link.latency_ms);
    adjacency[link.pop_b].emplace_back(link.pop_a, link.latency_ms);
  }

  std::map<std::string, double> dist{{source, 0.0}};
  using Entry = std::pair<double, std::string>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  frontier.emplace(0.0, source);
  while (!frontier.empty()) {
    auto [d, pop] = frontier.top();
    frontier.pop();
    if (d > dist[pop]) continue;
    for (const auto& [next, latency] : adjacency[pop]) {
      const double candidate = d + latency;
      auto it = dist.find(next);
      if (it == dist.end() || candidate < it->second) {
        dist[next] = candidate;
        frontier.emplace(candidate, next);
      }
    }
  }
  return dist;
}

/// Minimal path latency between two PoPs over the transport links.
inline double pop_latency(const DeploymentArea& area, const std::string& pop_a, const std::string& pop_b) {
  if (area.find_pop(pop_b) == nullptr) {
    throw Error(ErrorCode::UnknownPop, "PoP '" + pop_b + "' does not exist");
  }
  // Always search from the smaller id so that the float sum is symmetric.
  const auto& [from, to] = std::minmax(pop_a, pop_b);
  const auto dist = latencies_from(area, from);
  auto it = dist.find(to);
  if (it == dist.end()) {
    throw Error(ErrorCode::Unreachable, "no transport path between '" + pop_a + "' and '" + pop_b + "'");
  }
  return it->second;
}

}  // namespace ranslice
