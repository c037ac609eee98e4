#pragma once

// RAN slice subnet planning: RU selection, gNB NSD flavor, DU dimensioning
// per region, latency-constrained CU minimization and gNB IL-subset lookup.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ranslice/cu_placement.hpp"
#include "ranslice/descriptors.hpp"
#include "ranslice/error.hpp"
#include "ranslice/radio_profiler.hpp"
#include "ranslice/topology.hpp"
#include "ranslice/validation.hpp"

namespace ranslice {

struct PlannerConfig {
  double cu_du_latency_budget_ms = 10.0;
  double activity_factor = 0.1;
  int exact_solver_limit = 12;

  bool operator==(const PlannerConfig&) const = default;
};

struct DuPlan {
  std::string du_id;
  std::string region_id;
  std::string region_class;
  FronthaulTech fronthaul_tech = FronthaulTech::Cpri;
  SplitOption split = SplitOption::Split8;
  std::vector<std::string> served_cell_sites;
  std::vector<std::string> served_rus;
  std::string du_vnfd_ref;
  int du_flavor_id = 0;
  std::string il_subset_id;
  std::string host_pop;
  double offered_load_mbps = 0;

  bool operator==(const DuPlan&) const = default;
};

struct CuPlan {
  std::string host_pop;
  std::string cu_vnfd_ref;
  int cu_flavor_id = 0;
  std::string il_subset_id;

  bool operator==(const CuPlan&) const = default;
};

struct GnbPlan {
  std::string gnb_id;
  CuPlan cu;
  std::vector<DuPlan> dus;
  std::string nsd_ref;
  int nsd_flavor_id = 0;
  std::string nsd_il_subset_id;

  bool operator==(const GnbPlan&) const = default;
};

struct RegionLoad {
  std::string region_id;
  double peak_load_mbps = 0;

  bool operator==(const RegionLoad&) const = default;
};

struct SlicePlan {
  SNssai s_nssai;
  std::string nsst_ref;
  RanNsst nsst;
  int nsd_flavor_id = 0;
  std::vector<GnbPlan> gnbs;
  std::vector<std::string> selected_rus;
  std::vector<RegionLoad> offered_load;

  bool operator==(const SlicePlan&) const = default;
};

/// CU and DU IL-subset choices of one gNB, as fed to the NSD subset search.
struct DuSelection {
  std::string region_class;
  FronthaulTech fronthaul_tech = FronthaulTech::Cpri;
  std::string du_subset_id;
};

inline int select_gnb_flavor(const std::vector<FronthaulTech>& techs) {
  const bool cpri = std::find(techs.begin(), techs.end(), FronthaulTech::Cpri) != techs.end();
  const bool ecpri = std::find(techs.begin(), techs.end(), FronthaulTech::Ecpri) != techs.end();
  if (cpri && ecpri) return 3;
  if (ecpri) return 2;
  if (cpri) return 1;
  throw Error(ErrorCode::InvalidRequest, "at least one fronthaul technology is required");
}

/// Peak offered load of a region: density * covered area * max(dl, ul) * activity.
inline double region_peak_load(const Region& region, const SliceRequirements& req, const PlannerConfig& config,
                               double covered_fraction = 1.0) {
  return req.ue_density_per_km2 * region.area_km2 * covered_fraction *
         std::max(req.throughput_dl_mbps, req.throughput_ul_mbps) * config.activity_factor;
}

/// Smallest IL of `subset` whose capacity carries `offered_load_mbps`.
template <class Subset>
const typename Subset::level_type& select_il_for_traffic(const Subset& subset, double offered_load_mbps) {
  if (subset.levels.empty()) throw Error(ErrorCode::NoMatchingSubset, "IL subset '" + subset.subset_id + "' is empty");
  if (offered_load_mbps < 0) throw Error(ErrorCode::InvalidRequest, "offered load must be non-negative");
  for (const auto& level : subset.levels) {
    if (level.aggregate_capacity_mbps >= offered_load_mbps) return level;
  }
  throw Error(ErrorCode::LoadExceedsSubset, std::to_string(offered_load_mbps) + " Mbps exceeds IL subset '" +
                                                subset.subset_id + "'");
}

namespace detail {

inline const Flavor<DuIlSubset>* du_flavor_for(const DuVnfd& vnfd, FronthaulTech tech) {
  for (const auto& f : vnfd.flavors) {
    if (f.fronthaul_techs.size() == 1 && f.fronthaul_techs.front() == tech) return &f;
  }
  return nullptr;
}

/// Narrowest subset whose cell-site range contains `sites` (ties: lowest id).
inline const DuIlSubset* du_subset_for(const std::vector<const DuIlSubset*>& candidates, int sites) {
  const DuIlSubset* best = nullptr;
  for (const auto* s : candidates) {
    if (!s->key.contains(sites)) continue;
    if (best == nullptr || s->key.max_cell_sites < best->key.max_cell_sites ||
        (s->key.max_cell_sites == best->key.max_cell_sites && s->subset_id < best->subset_id)) {
      best = s;
    }
  }
  return best;
}

inline std::vector<int> balanced_sizes(int total, int parts) {
  std::vector<int> sizes(parts, total / parts);
  for (int i = 0; i < total % parts; ++i) ++sizes[i];
  return sizes;
}

inline int cu_capacity(const Flavor<CuIlSubset>& flavor) {
  int capacity = 0;
  for (const auto& s : flavor.il_subsets) {
    if (!s.levels.empty()) capacity = std::max(capacity, s.levels.back().max_dus);
  }
  return capacity;
}

inline const CuIlSubset* cu_subset_for(const Flavor<CuIlSubset>& flavor, int du_count) {
  const CuIlSubset* best = nullptr;
  for (const auto& s : flavor.il_subsets) {
    if (!s.key.contains(du_count) || s.levels.empty() || s.levels.back().max_dus < du_count) continue;
    if (best == nullptr || s.key.max_dus < best->key.max_dus ||
        (s.key.max_dus == best->key.max_dus && s.subset_id < best->subset_id)) {
      best = &s;
    }
  }
  return best;
}

template <class F>
auto run_stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw e.with_stage(name);
  }
}

}  // namespace detail

/// Minimal number of DUs for `region`. Cell sites are split into balanced
/// groups; each group takes the narrowest DU IL subset covering its size and
/// must carry its share of `peak_load_mbps` at the subset's top IL.
inline std::vector<DuPlan> dimension_dus(const Region& region, double peak_load_mbps, const DuVnfd& du_vnfd,
                                         const PlannerConfig& /*config*/ = {}) {
  if (region.cell_sites.empty()) throw Error(ErrorCode::InvalidRequest, "region '" + region.region_id + "' has no cell sites");
  if (peak_load_mbps < 0) throw Error(ErrorCode::InvalidRequest, "peak load must be non-negative");

  const auto* flavor = detail::du_flavor_for(du_vnfd, region.fronthaul_tech);
  if (flavor == nullptr) {
    throw Error(ErrorCode::NoMatchingSubset, "DU VNFD '" + du_vnfd.descriptor_id + "' has no " +
                                                 std::string(to_string(region.fronthaul_tech)) + " flavor");
  }
  std::vector<const DuIlSubset*> candidates;
  for (const auto& s : flavor->il_subsets) {
    if (s.key.region_class == region.region_class && s.key.fronthaul_tech == region.fronthaul_tech && !s.levels.empty()) {
      candidates.push_back(&s);
    }
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::NoMatchingSubset, "no DU IL subset for (" + region.region_class + ", " +
                                                 std::string(to_string(region.fronthaul_tech)) + ")");
  }

  auto sites = region.cell_sites;
  std::sort(sites.begin(), sites.end());
  const int total = static_cast<int>(sites.size());

  for (int n = 1; n <= total; ++n) {
    const auto sizes = detail::balanced_sizes(total, n);
    std::vector<const DuIlSubset*> chosen;
    for (int size : sizes) {
      const auto* subset = detail::du_subset_for(candidates, size);
      const double share = peak_load_mbps * size / total;
      if (subset == nullptr || subset->levels.back().aggregate_capacity_mbps < share) break;
      chosen.push_back(subset);
    }
    if (chosen.size() != sizes.size()) continue;

    std::vector<DuPlan> plans;
    auto next_site = sites.begin();
    for (int i = 0; i < n; ++i) {
      DuPlan du;
      du.du_id = "du-" + region.region_id + "-" + std::to_string(i + 1);
      du.region_id = region.region_id;
      du.region_class = region.region_class;
      du.fronthaul_tech = region.fronthaul_tech;
      du.split = split_for(region.fronthaul_tech);
      du.served_cell_sites.assign(next_site, next_site + sizes[i]);
      next_site += sizes[i];
      du.du_vnfd_ref = du_vnfd.descriptor_id;
      du.du_flavor_id = flavor->flavor_id;
      du.il_subset_id = chosen[i]->subset_id;
      du.host_pop = region.aggregation_pop;
      du.offered_load_mbps = peak_load_mbps * sizes[i] / total;
      plans.push_back(std::move(du));
    }
    return plans;
  }
  throw Error(ErrorCode::InsufficientDuCapacity,
              "region '" + region.region_id + "' cannot carry " + std::to_string(peak_load_mbps) +
                  " Mbps even with one DU per cell site");
}

/// Groups DUs under the fewest CUs placed on edge PoPs within the CU-DU
/// latency budget. Exact up to `exact_solver_limit` DUs (at most
/// kMaxExactDus), greedy above.
/// Returned gNBs have CU and DUs filled in; NSD fields are left empty.
inline std::vector<GnbPlan> assign_dus_to_cus(const std::vector<DuPlan>& dus, const DeploymentArea& area,
                                              const CuVnfd& cu_vnfd, const PlannerConfig& config) {
  if (dus.empty()) throw Error(ErrorCode::InvalidRequest, "no DUs to assign");
  if (cu_vnfd.flavors.empty()) throw Error(ErrorCode::NoMatchingSubset, "CU VNFD has no flavor");
  const auto& cu_flavor = cu_vnfd.flavors.front();
  const int capacity = detail::cu_capacity(cu_flavor);
  if (capacity < 1) throw Error(ErrorCode::NoMatchingSubset, "CU VNFD admits no DUs");

  const auto edges = area.edge_pops();
  PlacementProblem problem{static_cast<int>(dus.size()), static_cast<int>(edges.size()), {}, capacity};
  std::map<std::string, std::map<std::string, double>> reach;
  for (const auto& du : dus) {
    if (!reach.contains(du.host_pop)) reach[du.host_pop] = latencies_from(area, du.host_pop);
    const auto& dist = reach[du.host_pop];
    std::vector<bool> row;
    for (const auto& edge : edges) {
      auto it = dist.find(edge);
      row.push_back(it != dist.end() && it->second <= config.cu_du_latency_budget_ms);
    }
    if (std::none_of(row.begin(), row.end(), [](bool b) { return b; })) {
      throw Error(ErrorCode::InfeasibleLatency, "DU '" + du.du_id + "' has no edge PoP within " +
                                                    std::to_string(config.cu_du_latency_budget_ms) + " ms");
    }
    problem.feasible.push_back(std::move(row));
  }

  const bool exact = problem.du_count <= std::min(config.exact_solver_limit, kMaxExactDus);
  const auto placement = exact ? place_exact(problem) : place_greedy(problem);
  if (!placement) throw Error(ErrorCode::InfeasibleLatency, "no latency-feasible CU placement");

  std::vector<GnbPlan> gnbs;
  for (const auto& group : *placement) {
    GnbPlan gnb;
    gnb.gnb_id = "gnb-" + std::to_string(gnbs.size() + 1);
    const int count = static_cast<int>(group.dus.size());
    const auto* subset = detail::cu_subset_for(cu_flavor, count);
    if (subset == nullptr) {
      throw Error(ErrorCode::NoMatchingSubset, "no CU IL subset admits " + std::to_string(count) + " DUs");
    }
    gnb.cu = {edges[group.pop], cu_vnfd.descriptor_id, cu_flavor.flavor_id, subset->subset_id};
    for (int d : group.dus) gnb.dus.push_back(dus[d]);
    gnbs.push_back(std::move(gnb));
  }
  return gnbs;
}

/// The gNB NSD IL subset under `flavor_id` keyed by the DUs' (region class,
/// fronthaul tech) multiset whose ILs reference the chosen CU and DU subsets.
inline const NsdIlSubset& derive_gnb_il_subset(const Catalog& catalog, const GnbNsd& nsd, int flavor_id,
                                               const std::string& cu_subset_id,
                                               const std::vector<DuSelection>& du_selections) {
  const auto* flavor = nsd.find_flavor(flavor_id);
  if (flavor == nullptr) {
    throw Error(ErrorCode::NoMatchingSubset, "gNB NSD '" + nsd.descriptor_id + "' has no flavor " +
                                                 std::to_string(flavor_id));
  }
  NsdSubsetKey key;
  for (const auto& sel : du_selections) key.du_regions.push_back({sel.region_class, sel.fronthaul_tech});

  const CuVnfd* cu = catalog.find_cu_vnfd(nsd.cu_vnfd_ref);
  const DuVnfd* du = catalog.find_du_vnfd(nsd.du_vnfd_ref);
  auto referenced_subsets = [&](const NsdIlSubset& subset) {
    std::set<std::string> cu_subsets;
    std::set<std::string> du_subsets;
    for (const auto& level : subset.levels) {
      if (auto r = detail::resolve_il(cu, level.cu_il); r.subset != nullptr) cu_subsets.insert(r.subset->subset_id);
      for (const auto& ref : level.du_ils) {
        if (auto r = detail::resolve_il(du, ref); r.subset != nullptr) du_subsets.insert(r.subset->subset_id);
      }
    }
    return std::pair(cu_subsets, du_subsets);
  };

  const NsdIlSubset* match = nullptr;
  for (const auto& subset : flavor->il_subsets) {
    if (!subset.key.same_multiset(key)) continue;
    const auto [cu_refs, du_refs] = referenced_subsets(subset);
    bool ok = cu_refs.contains(cu_subset_id);
    for (const auto& sel : du_selections) ok = ok && du_refs.contains(sel.du_subset_id);
    if (ok && (match == nullptr || subset.subset_id < match->subset_id)) match = &subset;
  }
  if (match == nullptr) {
    std::string missing;
    for (const auto& rt : key.sorted()) {
      missing += (missing.empty() ? "" : "+") + rt.region_class + "/" + std::string(to_string(rt.fronthaul_tech));
    }
    throw Error(ErrorCode::NoMatchingSubset, "flavor " + std::to_string(flavor_id) + " has no IL subset for [" +
                                                 missing + "] with CU subset '" + cu_subset_id + "'");
  }
  return *match;
}

/// Independent re-check of a plan: latency budget, CU capacity, IL subset
/// ranges and keys, and coverage of the selected RUs. Empty means sound.
inline std::vector<std::string> verify_plan(const SlicePlan& plan, const DeploymentArea& area, const Catalog& catalog,
                                            const PlannerConfig& config) {
  std::vector<std::string> issues;
  std::map<std::string, int> site_uses;
  std::map<std::string, int> ru_uses;
  std::set<std::string> du_ids;

  for (const auto& gnb : plan.gnbs) {
    const std::string where = "gNB '" + gnb.gnb_id + "': ";
    if (gnb.dus.empty()) issues.push_back(where + "has no DUs");
    const CuVnfd* cu = catalog.find_cu_vnfd(gnb.cu.cu_vnfd_ref);
    const auto* cu_flavor = cu ? cu->find_flavor(gnb.cu.cu_flavor_id) : nullptr;
    const auto* cu_subset = cu_flavor ? cu_flavor->find_subset(gnb.cu.il_subset_id) : nullptr;
    const Pop* cu_pop = area.find_pop(gnb.cu.host_pop);
    if (cu_subset == nullptr) {
      issues.push_back(where + "CU IL subset does not resolve");
    } else {
      const int n = static_cast<int>(gnb.dus.size());
      if (!cu_subset->key.contains(n)) issues.push_back(where + "CU IL subset range excludes the DU count");
      if (cu_subset->levels.empty() || n > cu_subset->levels.back().max_dus) {
        issues.push_back(where + "more DUs than the largest CU IL admits");
      }
    }
    if (cu_pop == nullptr || cu_pop->tier != PopTier::Edge) issues.push_back(where + "CU is not on an edge PoP");

    const GnbNsd* nsd = catalog.find_nsd(gnb.nsd_ref);
    const auto* nsd_flavor = nsd ? nsd->find_flavor(gnb.nsd_flavor_id) : nullptr;
    const auto* nsd_subset = nsd_flavor ? nsd_flavor->find_subset(gnb.nsd_il_subset_id) : nullptr;
    NsdSubsetKey du_key;

    for (const auto& du : gnb.dus) {
      const std::string at = where + "DU '" + du.du_id + "': ";
      if (!du_ids.insert(du.du_id).second) issues.push_back(at + "duplicate DU id");
      du_key.du_regions.push_back({du.region_class, du.fronthaul_tech});
      const Region* region = area.find_region(du.region_id);
      if (region == nullptr) {
        issues.push_back(at + "unknown region");
        continue;
      }
      if (du.host_pop != region->aggregation_pop) issues.push_back(at + "not hosted on its region's aggregation PoP");
      if (du.fronthaul_tech != region->fronthaul_tech || du.split != split_for(region->fronthaul_tech)) {
        issues.push_back(at + "split does not match the region fronthaul");
      }
      if (nsd_flavor != nullptr && !nsd_flavor->permits(du.fronthaul_tech)) {
        issues.push_back(at + "fronthaul not permitted by the gNB flavor");
      }
      try {
        if (cu_pop != nullptr && pop_latency(area, gnb.cu.host_pop, du.host_pop) > config.cu_du_latency_budget_ms) {
          issues.push_back(at + "CU-DU latency exceeds the budget");
        }
      } catch (const Error&) {
        issues.push_back(at + "CU is unreachable");
      }
      const DuVnfd* du_vnfd = catalog.find_du_vnfd(du.du_vnfd_ref);
      const auto* du_flavor = du_vnfd ? du_vnfd->find_flavor(du.du_flavor_id) : nullptr;
      const auto* du_subset = du_flavor ? du_flavor->find_subset(du.il_subset_id) : nullptr;
      if (du_subset == nullptr) {
        issues.push_back(at + "DU IL subset does not resolve");
      } else if (!du_subset->key.contains(static_cast<int>(du.served_cell_sites.size()))) {
        issues.push_back(at + "served cell sites outside the IL subset range");
      } else if (du_subset->levels.back().aggregate_capacity_mbps < du.offered_load_mbps) {
        issues.push_back(at + "offered load exceeds the IL subset");
      }
      if (du.served_cell_sites.empty()) issues.push_back(at + "serves no cell site");
      for (const auto& site : du.served_cell_sites) {
        ++site_uses[site];
        if (std::find(region->cell_sites.begin(), region->cell_sites.end(), site) == region->cell_sites.end()) {
          issues.push_back(at + "cell site '" + site + "' lies outside its region");
        }
      }
      for (const auto& ru : du.served_rus) ++ru_uses[ru];
    }
    if (nsd_subset == nullptr) {
      issues.push_back(where + "gNB NSD IL subset does not resolve");
    } else if (!nsd_subset->key.same_multiset(du_key)) {
      issues.push_back(where + "gNB NSD IL subset key differs from the DU set");
    }
  }

  std::set<std::string> expected_sites;
  for (const auto& ru_id : plan.selected_rus) {
    auto it = std::find_if(area.rus.begin(), area.rus.end(), [&](const RuPnfd& r) { return r.ru_id == ru_id; });
    if (it == area.rus.end()) {
      issues.push_back("RU '" + ru_id + "' is not part of the area");
      continue;
    }
    expected_sites.insert(it->cell_site_id);
    if (ru_uses[ru_id] != 1) {
      issues.push_back("RU '" + ru_id + "' is served by " + std::to_string(ru_uses[ru_id]) + " DUs");
    }
  }
  for (const auto& [ru, n] : ru_uses) {
    if (std::find(plan.selected_rus.begin(), plan.selected_rus.end(), ru) == plan.selected_rus.end()) {
      issues.push_back("RU '" + ru + "' is served but not selected");
    }
  }
  for (const auto& [site, n] : site_uses) {
    if (n != 1) issues.push_back("cell site '" + site + "' is served by " + std::to_string(n) + " DUs");
  }
  for (const auto& site : expected_sites) {
    if (!site_uses.contains(site)) issues.push_back("cell site '" + site + "' is not served");
  }
  return issues;
}

/// End-to-end planning of one slice request over `area` with `catalog`.
inline SlicePlan plan_slice(const SliceRequirements& request, Sst sst, const DeploymentArea& area,
                            const Catalog& catalog, const PlannerConfig& config = {},
                            const ProfilerPolicy& policy = ProfilerPolicy::defaults()) {
  // Target order carries no meaning; sorting keeps the plan independent of it.
  SliceRequirements req = request;
  std::sort(req.target_regions.begin(), req.target_regions.end());
  detail::run_stage("validate", [&] {
    if (auto report = validate_requirements(req, "request"); !report.empty()) {
      throw Error(ErrorCode::InvalidRequest, report.front().message);
    }
    if (!(config.cu_du_latency_budget_ms > 0) || !(config.activity_factor > 0 && config.activity_factor <= 1)) {
      throw Error(ErrorCode::InvalidRequest, "planner config needs a positive budget and activity in (0,1]");
    }
    if (auto report = validate_policy(policy); !report.empty()) {
      throw Error(ErrorCode::InvalidPolicy, report.front().path + ": " + report.front().message);
    }
    return 0;
  });

  SlicePlan plan;
  plan.nsst = detail::run_stage("build_ran_nsst", [&] {
    const RanNsst* stored = catalog.find_nsst(sst);
    std::string nsd_ref;
    if (stored != nullptr) {
      nsd_ref = stored->nsd_ref;
    } else if (!catalog.nsds.empty()) {
      nsd_ref = std::min_element(catalog.nsds.begin(), catalog.nsds.end(), [](const auto& a, const auto& b) {
                  return a.descriptor_id < b.descriptor_id;
                })->descriptor_id;
    }
    if (catalog.find_nsd(nsd_ref) == nullptr) {
      throw Error(ErrorCode::DanglingPlanReference, "catalog has no gNB NSD for this slice");
    }
    return build_ran_nsst(req, sst, nsd_ref, policy, stored ? stored->nsst_id : std::string{});
  });
  plan.s_nssai = plan.nsst.s_nssai;
  plan.nsst_ref = plan.nsst.nsst_id;
  const GnbNsd& nsd = *catalog.find_nsd(plan.nsst.nsd_ref);

  const auto rus = detail::run_stage("select_rus", [&] { return select_rus(area, req.target_regions); });
  for (const auto& ru : rus) plan.selected_rus.push_back(ru.ru_id);
  const auto techs = detail::run_stage("fronthaul_techs", [&] { return fronthaul_techs(area, req.target_regions); });
  plan.nsd_flavor_id = detail::run_stage("select_gnb_flavor", [&] { return select_gnb_flavor(techs); });

  const std::set<std::string> regions(req.target_regions.begin(), req.target_regions.end());
  std::vector<DuPlan> dus = detail::run_stage("dimension_dus", [&] {
    const DuVnfd* du_vnfd = catalog.find_du_vnfd(nsd.du_vnfd_ref);
    if (du_vnfd == nullptr) throw Error(ErrorCode::DanglingPlanReference, "unknown DU VNFD '" + nsd.du_vnfd_ref + "'");
    std::vector<DuPlan> all;
    for (const auto& region_id : regions) {
      const Region& region = *area.find_region(region_id);
      const double load = region_peak_load(region, req, config);
      plan.offered_load.push_back({region_id, load});
      for (auto& du : dimension_dus(region, load, *du_vnfd, config)) all.push_back(std::move(du));
    }
    return all;
  });
  for (auto& du : dus) {
    for (const auto& ru : rus) {
      if (std::find(du.served_cell_sites.begin(), du.served_cell_sites.end(), ru.cell_site_id) !=
          du.served_cell_sites.end()) {
        du.served_rus.push_back(ru.ru_id);
      }
    }
  }

  plan.gnbs = detail::run_stage("assign_dus_to_cus", [&] {
    const CuVnfd* cu_vnfd = catalog.find_cu_vnfd(nsd.cu_vnfd_ref);
    if (cu_vnfd == nullptr) throw Error(ErrorCode::DanglingPlanReference, "unknown CU VNFD '" + nsd.cu_vnfd_ref + "'");
    return assign_dus_to_cus(dus, area, *cu_vnfd, config);
  });

  detail::run_stage("derive_gnb_il_subset", [&] {
    for (auto& gnb : plan.gnbs) {
      std::vector<FronthaulTech> gnb_techs;
      std::vector<DuSelection> selections;
      for (const auto& du : gnb.dus) {
        gnb_techs.push_back(du.fronthaul_tech);
        selections.push_back({du.region_class, du.fronthaul_tech, du.il_subset_id});
      }
      gnb.nsd_ref = nsd.descriptor_id;
      gnb.nsd_flavor_id = select_gnb_flavor(gnb_techs);
      gnb.nsd_il_subset_id =
          derive_gnb_il_subset(catalog, nsd, gnb.nsd_flavor_id, gnb.cu.il_subset_id, selections).subset_id;
    }
    return 0;
  });

  detail::run_stage("verify", [&] {
    if (auto issues = verify_plan(plan, area, catalog, config); !issues.empty()) {
      throw Error(ErrorCode::Internal, issues.front());
    }
    return 0;
  });
  return plan;
}

}  // namespace ranslice
