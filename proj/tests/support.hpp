#pragma once

// Random generators and brute-force oracles shared by the unit suite and the
// acceptance runner. Oracles here never call into the planner.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ranslice/builtin_catalog.hpp"
#include "ranslice/cu_placement.hpp"
#include "ranslice/documents.hpp"
#include "ranslice/slice_planner.hpp"

namespace ranslice::testkit {

using Rng = std::mt19937_64;

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Log-uniform positive value, a mix of "round" and arbitrary numbers.
inline double positive(Rng& rng, double lo, double hi) {
  const double v = std::exp(uniform_real(rng, std::log(lo), std::log(hi)));
  switch (uniform_int(rng, 0, 3)) {
    case 0: return std::max(lo, std::round(v));
    case 1: return std::max(lo, std::round(v * 10) / 10);
    default: return v;
  }
}

inline std::string ident(Rng& rng, const std::string& prefix) { return prefix + "-" + std::to_string(uniform_int(rng, 0, 99999)); }

template <class E>
E pick_enum(Rng& rng) {
  const auto& table = EnumNames<E>::table;
  return table[uniform_int(rng, 0, static_cast<int>(table.size()) - 1)].first;
}

inline std::string pick_class(Rng& rng) {
  const std::array<std::string_view, 3> classes{kIndustrial, kSuburban, kCityCenter};
  return std::string(classes[uniform_int(rng, 0, 2)]);
}

inline SliceRequirements random_requirements(Rng& rng, const std::vector<std::string>& regions) {
  SliceRequirements r;
  r.latency_ms = positive(rng, 0.5, 1e6);
  r.max_mobility_kmh = coin(rng, 0.2) ? 0.0 : positive(rng, 1, 500);
  r.throughput_ul_mbps = positive(rng, 0.01, 2000);
  r.throughput_dl_mbps = positive(rng, 0.01, 2000);
  r.ue_density_per_km2 = positive(rng, 1, 1e6);
  if (coin(rng)) r.reliability_pct = std::min(99.99999, uniform_real(rng, 90, 100));
  r.priority = pick_enum<Priority>(rng);
  r.ue_type = coin(rng) ? "" : ident(rng, "ue");
  for (const auto& region : regions) {
    if (coin(rng)) r.target_regions.push_back(region);
  }
  if (r.target_regions.empty()) r.target_regions.push_back(regions.front());
  return r;
}

inline VmSpec random_vm(Rng& rng) { return {uniform_int(rng, 1, 64), positive(rng, 1, 4), positive(rng, 1, 512)}; }

inline RadioConfig random_radio_config(Rng& rng) {
  RadioConfig rc;
  rc.numerology_mu = uniform_int(rng, 0, 3);
  for (int i = uniform_int(rng, 1, 2); i > 0; --i) rc.bands.push_back({pick_enum<BandRange>(rng), positive(rng, 5, 400)});
  rc.slot_format_id = uniform_int(rng, 0, 55);
  rc.five_qi = {uniform_int(rng, 1, 90), uniform_int(rng, 1, 127), positive(rng, 5, 300), std::pow(10.0, -uniform_int(rng, 1, 8))};
  rc.mcs_set = pick_enum<McsSet>(rng);
  rc.scheduler_policy = pick_enum<SchedulerPolicy>(rng);
  return rc;
}

inline RanNsst random_nsst(Rng& rng) {
  RanNsst n;
  n.nsst_id = ident(rng, "nsst");
  n.s_nssai.sst = pick_enum<Sst>(rng);
  if (coin(rng)) n.s_nssai.sd = "0a1b2c";
  n.radio_config = random_radio_config(rng);
  n.nsd_ref = ident(rng, "nsd");
  n.requirement_profile = random_requirements(rng, {"region-1", "region-2"});
  return n;
}

inline Catalog random_catalog(Rng& rng) {
  Catalog c;
  DuVnfd du{ident(rng, "du"), {}};
  const int du_flavors = uniform_int(rng, 1, 2);
  for (int f = 1; f <= du_flavors; ++f) {
    const auto tech = f == 1 ? FronthaulTech::Cpri : FronthaulTech::Ecpri;
    Flavor<DuIlSubset> flavor{f, {tech}, coin(rng) ? std::optional(split_for(tech)) : std::nullopt, {}};
    for (int s = uniform_int(rng, 0, 2); s > 0; --s) {
      DuIlSubset subset{ident(rng, "sub"), {pick_class(rng), tech, uniform_int(rng, 1, 4), uniform_int(rng, 4, 8)}, {}};
      for (int l = uniform_int(rng, 0, 3); l > 0; --l) {
        subset.levels.push_back({ident(rng, "il"), random_vm(rng), uniform_int(rng, 1, 8), positive(rng, 1, 1e5)});
      }
      flavor.il_subsets.push_back(std::move(subset));
    }
    du.flavors.push_back(std::move(flavor));
  }
  c.du_vnfds.push_back(du);
  CuVnfd cu{ident(rng, "cu"), {{1, {}, SplitOption::Split2, {}}}};
  for (int s = uniform_int(rng, 0, 2); s > 0; --s) {
    CuIlSubset subset{ident(rng, "cus"), {uniform_int(rng, 1, 3), uniform_int(rng, 3, 8)}, {}};
    for (int l = uniform_int(rng, 0, 2); l > 0; --l) {
      subset.levels.push_back({ident(rng, "il"), random_vm(rng), uniform_int(rng, 1, 8), positive(rng, 1, 1e6)});
    }
    cu.flavors[0].il_subsets.push_back(std::move(subset));
  }
  c.cu_vnfds.push_back(cu);
  GnbNsd nsd{ident(rng, "nsd"), cu.descriptor_id, du.descriptor_id, {}};
  const int nsd_flavors = uniform_int(rng, 0, 3);
  for (int f = 1; f <= nsd_flavors; ++f) {
    Flavor<NsdIlSubset> flavor{f, {pick_enum<FronthaulTech>(rng)}, std::nullopt, {}};
    NsdIlSubset subset{ident(rng, "nsub"), {}, {}};
    for (int k = uniform_int(rng, 1, 3); k > 0; --k) subset.key.du_regions.push_back({pick_class(rng), pick_enum<FronthaulTech>(rng)});
    subset.levels.push_back({ident(rng, "nil"), 1, {cu.descriptor_id, 1, "x"}, {{du.descriptor_id, 2, "y"}}});
    flavor.il_subsets.push_back(std::move(subset));
    nsd.flavors.push_back(std::move(flavor));
  }
  c.nsds.push_back(nsd);
  for (int r = uniform_int(rng, 0, 4); r > 0; --r) {
    c.rus.push_back({ident(rng, "ru"), ident(rng, "region"), ident(rng, "cs"),
                     {uniform_real(rng, -10, 10), uniform_real(rng, -10, 10)}, pick_enum<FronthaulTech>(rng)});
  }
  for (int n = uniform_int(rng, 0, 2); n > 0; --n) c.nssts.push_back(random_nsst(rng));
  return c;
}

/// Random connected-or-not area: `regions` regions each with its own
/// aggregation PoP, `edges` edge PoPs, random links.
inline DeploymentArea random_area(Rng& rng, int regions, int edges, double link_probability = 0.6) {
  DeploymentArea a;
  a.area_id = ident(rng, "area");
  for (int r = 1; r <= regions; ++r) {
    const std::string n = std::to_string(r);
    const auto tech = pick_enum<FronthaulTech>(rng);
    Region region{"region-" + n, pick_class(rng), positive(rng, 0.1, 10), tech, {}, "agg-" + n};
    const int sites = uniform_int(rng, 1, 8);
    for (int s = 1; s <= sites; ++s) {
      const std::string site = "cs-" + n + "-" + std::to_string(s);
      region.cell_sites.push_back(site);
      a.rus.push_back({"ru-" + n + "-" + std::to_string(s), region.region_id, site,
                       {uniform_real(rng, 0, 20), uniform_real(rng, 0, 20)}, tech});
    }
    a.regions.push_back(std::move(region));
    a.pops.push_back({"agg-" + n, PopTier::Aggregation, {uniform_int(rng, 1, 128), positive(rng, 1, 512)}});
  }
  for (int e = 1; e <= edges; ++e) {
    a.pops.push_back({"edge-" + std::to_string(e), PopTier::Edge, {uniform_int(rng, 1, 512), positive(rng, 1, 2048)}});
  }
  for (std::size_t i = 0; i < a.pops.size(); ++i) {
    for (std::size_t j = i + 1; j < a.pops.size(); ++j) {
      if (coin(rng, link_probability)) a.links.push_back({a.pops[i].pop_id, a.pops[j].pop_id, positive(rng, 0.05, 8)});
    }
  }
  return a;
}

inline SlicePlan random_plan(Rng& rng) {
  SlicePlan p;
  p.s_nssai = {pick_enum<Sst>(rng), coin(rng) ? std::optional<std::string>("ff") : std::nullopt};
  p.nsst = random_nsst(rng);
  p.nsst_ref = p.nsst.nsst_id;
  p.nsd_flavor_id = uniform_int(rng, 1, 3);
  for (int g = uniform_int(rng, 0, 3); g > 0; --g) {
    GnbPlan gnb{ident(rng, "gnb"), {ident(rng, "edge"), "cu-vnfd", 1, ident(rng, "cus")}, {}, "gnb-nsd",
                uniform_int(rng, 1, 3), ident(rng, "nsub")};
    for (int d = uniform_int(rng, 1, 4); d > 0; --d) {
      const auto tech = pick_enum<FronthaulTech>(rng);
      DuPlan du{ident(rng, "du"), ident(rng, "region"), pick_class(rng), tech, split_for(tech), {}, {}, "du-vnfd",
                uniform_int(rng, 1, 2), ident(rng, "sub"), ident(rng, "agg"), positive(rng, 0.01, 1e6)};
      for (int s = uniform_int(rng, 1, 3); s > 0; --s) {
        du.served_cell_sites.push_back(ident(rng, "cs"));
        du.served_rus.push_back(ident(rng, "ru"));
        p.selected_rus.push_back(du.served_rus.back());
      }
      gnb.dus.push_back(std::move(du));
    }
    p.gnbs.push_back(std::move(gnb));
  }
  for (int r = uniform_int(rng, 0, 3); r > 0; --r) p.offered_load.push_back({ident(rng, "region"), positive(rng, 0.01, 1e6)});
  return p;
}

inline ProfilerPolicy random_policy(Rng& rng) {
  auto p = ProfilerPolicy::defaults();
  for (auto& t : p.latency_tiers) t.achievable_latency_ms = positive(rng, 0.1, 100);
  p.mobility_uplift_kmh = positive(rng, 10, 500);
  if (coin(rng)) p.slot_formats.back().max_dl_ul_ratio = positive(rng, 3, 100);
  p.fiveqi_table.push_back({uniform_int(rng, 100, 200), uniform_int(rng, 1, 127), positive(rng, 1, 500), 1e-3});
  p.mcs_threshold_mbps = positive(rng, 1, 1000);
  p.bandwidth.activity_factor = uniform_real(rng, 0.01, 1);
  p.semi_persistent_max_mbps = positive(rng, 0.1, 10);
  return p;
}

inline PlannerConfig random_config(Rng& rng) {
  return {positive(rng, 0.1, 20), uniform_real(rng, 0.01, 1), uniform_int(rng, 1, 16)};
}

inline SliceRequest random_request(Rng& rng) {
  return {pick_enum<Sst>(rng), coin(rng) ? std::optional<std::string>("00ab") : std::nullopt,
          random_requirements(rng, {"region-1", "region-2", "region-3"})};
}

/// A random document of the given kind.
inline DocumentEnvelope random_document(Rng& rng, DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Catalog: return make_document(random_catalog(rng));
    case DocumentKind::Topology: return make_document(random_area(rng, uniform_int(rng, 1, 4), uniform_int(rng, 0, 3)));
    case DocumentKind::SliceRequest: return make_document(random_request(rng));
    case DocumentKind::SlicePlan: return make_document(random_plan(rng));
    case DocumentKind::ProfilerPolicy: return make_document(random_policy(rng));
    case DocumentKind::PlannerConfig: return make_document(random_config(rng));
  }
  return {};
}

inline const std::array<DocumentKind, 6>& all_kinds() {
  static const std::array<DocumentKind, 6> kinds{DocumentKind::Catalog,      DocumentKind::Topology,
                                                 DocumentKind::SliceRequest, DocumentKind::SlicePlan,
                                                 DocumentKind::ProfilerPolicy, DocumentKind::PlannerConfig};
  return kinds;
}

// ---------------------------------------------------------------------------
// CU-count oracle

/// Random placement instance as the planner sees it: DUs hosted on
/// aggregation PoPs, CUs on edge PoPs, a CU-DU budget and a CU capacity.
struct CuInstance {
  DeploymentArea area;
  std::vector<DuPlan> dus;
  CuVnfd cu_vnfd;
  PlannerConfig config;
  int capacity = 1;
};

inline CuVnfd cu_vnfd_with_capacity(int capacity) {
  CuIlSubset subset{"cu-1to" + std::to_string(capacity), {1, capacity}, {}};
  for (int k = 1; k <= capacity; ++k) {
    subset.levels.push_back({"cu-il" + std::to_string(k), {k, 2.0, 4.0 * k}, k, 1000.0 * k});
  }
  return {"cu-vnfd", {{1, {}, SplitOption::Split2, {subset}}}};
}

inline CuInstance random_cu_instance(Rng& rng, int max_dus = 12, int max_edges = 4) {
  CuInstance inst;
  const int aggs = uniform_int(rng, 1, 6);
  const int edges = uniform_int(rng, 1, max_edges);
  inst.area = random_area(rng, aggs, edges, uniform_real(rng, 0.3, 0.9));
  // Multiples of 1/8 ms sum exactly in any order, so path lengths computed by
  // different algorithms compare identically against the budget.
  for (auto& link : inst.area.links) link.latency_ms = uniform_int(rng, 1, 48) / 8.0;
  inst.capacity = uniform_int(rng, 1, 5);
  inst.cu_vnfd = cu_vnfd_with_capacity(inst.capacity);
  inst.config.cu_du_latency_budget_ms = uniform_int(rng, 1, 80) / 8.0;
  const int du_count = uniform_int(rng, 1, max_dus);
  for (int d = 0; d < du_count; ++d) {
    DuPlan du;
    du.du_id = "du-" + std::to_string(d + 1);
    const auto& region = inst.area.regions[uniform_int(rng, 0, aggs - 1)];
    du.region_id = region.region_id;
    du.region_class = region.region_class;
    du.fronthaul_tech = region.fronthaul_tech;
    du.split = split_for(region.fronthaul_tech);
    du.host_pop = region.aggregation_pop;
    inst.dus.push_back(std::move(du));
  }
  return inst;
}

/// All-pairs shortest paths by Floyd-Warshall over the PoP graph.
inline std::map<std::string, std::map<std::string, double>> all_pairs_latency(const DeploymentArea& area) {
  const double inf = std::numeric_limits<double>::infinity();
  std::map<std::string, std::map<std::string, double>> d;
  for (const auto& a : area.pops) {
    for (const auto& b : area.pops) d[a.pop_id][b.pop_id] = a.pop_id == b.pop_id ? 0.0 : inf;
  }
  for (const auto& l : area.links) {
    d[l.pop_a][l.pop_b] = std::min(d[l.pop_a][l.pop_b], l.latency_ms);
    d[l.pop_b][l.pop_a] = std::min(d[l.pop_b][l.pop_a], l.latency_ms);
  }
  for (const auto& k : area.pops) {
    for (const auto& i : area.pops) {
      for (const auto& j : area.pops) {
        const double via = d[i.pop_id][k.pop_id] + d[k.pop_id][j.pop_id];
        if (via < d[i.pop_id][j.pop_id]) d[i.pop_id][j.pop_id] = via;
      }
    }
  }
  return d;
}

/// Minimum number of CUs by exhaustive enumeration of every DU -> edge PoP
/// assignment; a PoP receiving n DUs needs ceil(n / capacity) CUs.
/// nullopt when some DU reaches no edge PoP within the budget.
inline std::optional<int> oracle_min_cus(const CuInstance& inst) {
  const auto dist = all_pairs_latency(inst.area);
  std::vector<std::string> edges;
  for (const auto& p : inst.area.pops) {
    if (p.tier == PopTier::Edge) edges.push_back(p.pop_id);
  }
  const int n = static_cast<int>(inst.dus.size());
  const int e = static_cast<int>(edges.size());
  std::vector<std::vector<int>> options(n);
  for (int d = 0; d < n; ++d) {
    for (int q = 0; q < e; ++q) {
      if (dist.at(inst.dus[d].host_pop).at(edges[q]) <= inst.config.cu_du_latency_budget_ms) options[d].push_back(q);
    }
    if (options[d].empty()) return std::nullopt;
  }
  // Every DU on the same host PoP has the same options; enumerate how many of
  // each host group go to each edge PoP instead of every DU individually.
  std::map<std::string, int> group_size;
  std::map<std::string, std::vector<int>> group_options;
  for (int d = 0; d < n; ++d) {
    ++group_size[inst.dus[d].host_pop];
    group_options[inst.dus[d].host_pop] = options[d];
  }
  std::vector<std::pair<int, std::vector<int>>> groups;
  for (const auto& [host, size] : group_size) groups.emplace_back(size, group_options[host]);

  int best = std::numeric_limits<int>::max();
  std::vector<int> load(e, 0);
  auto cost = [&] {
    int total = 0;
    for (int q = 0; q < e; ++q) total += (load[q] + inst.capacity - 1) / inst.capacity;
    return total;
  };
  // Distribute group g's remaining DUs over its options starting at option o.
  auto rec = [&](auto&& self, std::size_t g, std::size_t o, int remaining) -> void {
    if (g == groups.size()) {
      best = std::min(best, cost());
      return;
    }
    const auto& [size, opts] = groups[g];
    if (o + 1 == opts.size()) {
      load[opts[o]] += remaining;
      self(self, g + 1, 0, g + 1 < groups.size() ? groups[g + 1].first : 0);
      load[opts[o]] -= remaining;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      load[opts[o]] += k;
      self(self, g, o + 1, remaining - k);
      load[opts[o]] -= k;
    }
  };
  rec(rec, 0, 0, groups.front().first);
  return best;
}

/// Literal per-DU enumeration of assignments; only for tiny instances.
inline std::optional<int> oracle_min_cus_literal(const CuInstance& inst) {
  const auto dist = all_pairs_latency(inst.area);
  std::vector<std::string> edges;
  for (const auto& p : inst.area.pops) {
    if (p.tier == PopTier::Edge) edges.push_back(p.pop_id);
  }
  const int n = static_cast<int>(inst.dus.size());
  const int e = static_cast<int>(edges.size());
  std::vector<int> choice(n, 0);
  std::optional<int> best;
  while (true) {
    bool ok = true;
    std::vector<int> load(e, 0);
    for (int d = 0; d < n && ok; ++d) {
      ok = dist.at(inst.dus[d].host_pop).at(edges[choice[d]]) <= inst.config.cu_du_latency_budget_ms;
      ++load[choice[d]];
    }
    if (ok) {
      int total = 0;
      for (int l : load) total += (l + inst.capacity - 1) / inst.capacity;
      if (!best || total < *best) best = total;
    }
    int i = 0;
    while (i < n && ++choice[i] == e) choice[i++] = 0;
    if (i == n) break;
  }
  return best;
}

}  // namespace ranslice::testkit
