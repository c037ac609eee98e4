#pragma once

// Reference data: the three-region city, the eMBB/mMTC/uRLLC requests and a
// catalog whose gNB NSD, CU VNFD and DU VNFD serve all three slices.
//
// VM sizes and capacities are illustrative, not normative. They only have to
// satisfy the ladder invariants and make the reference requests plannable.

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "ranslice/descriptors.hpp"
#include "ranslice/topology.hpp"

namespace ranslice {

inline constexpr std::string_view kBuiltinNsdId = "gnb-nsd";
inline constexpr std::string_view kBuiltinCuVnfdId = "cu-vnfd";
inline constexpr std::string_view kBuiltinDuVnfdId = "du-vnfd";

struct ReferenceSlice {
  std::string name;
  Sst sst;
  SliceRequirements requirements;
};

/// Industrial (eCPRI), suburban (CPRI) and city-center (eCPRI) regions, one
/// aggregation PoP each, two edge PoPs.
inline DeploymentArea reference_area() {
  DeploymentArea area;
  area.area_id = "reference-city";

  struct RegionSpec {
    const char* id;
    std::string_view cls;
    double area_km2;
    FronthaulTech tech;
    int sites;
    double x0;
  };
  const std::array<RegionSpec, 3> specs{{
      {"region-1", kIndustrial, 3.0, FronthaulTech::Ecpri, 4, 0.0},
      {"region-2", kSuburban, 2.0, FronthaulTech::Cpri, 6, 4.0},
      {"region-3", kCityCenter, 1.0, FronthaulTech::Ecpri, 8, 8.0},
  }};
  for (std::size_t r = 0; r < specs.size(); ++r) {
    const auto& spec = specs[r];
    const std::string n = std::to_string(r + 1);
    Region region{spec.id, std::string(spec.cls), spec.area_km2, spec.tech, {}, "agg-" + n};
    for (int s = 1; s <= spec.sites; ++s) {
      const std::string site = "cs-" + n + "-" + std::to_string(s);
      region.cell_sites.push_back(site);
      area.rus.push_back({"ru-" + n + "-" + std::to_string(s), spec.id, site,
                          {spec.x0 + 0.5 * ((s - 1) % 4), 0.5 * ((s - 1) / 4)}, spec.tech});
    }
    area.regions.push_back(std::move(region));
    area.pops.push_back({"agg-" + n, PopTier::Aggregation, {64, 256.0}});
  }
  area.pops.push_back({"edge-1", PopTier::Edge, {256, 1024.0}});
  area.pops.push_back({"edge-2", PopTier::Edge, {256, 1024.0}});
  area.links = {
      {"agg-1", "edge-1", 1.0}, {"agg-2", "edge-1", 1.5}, {"agg-3", "edge-1", 0.5},
      {"agg-2", "edge-2", 2.0}, {"agg-3", "edge-2", 0.5}, {"edge-1", "edge-2", 0.8},
  };
  return area;
}

/// The eMBB, mMTC and uRLLC requests over the reference city. The mMTC
/// latency ("seconds to hours") is encoded as its tightest reading, 1 s.
inline std::vector<ReferenceSlice> reference_slices() {
  SliceRequirements embb{10.0, 10.0, 50.0, 300.0, 5000.0, std::nullopt, Priority::Low, "Pedestrians", {"region-3"}};
  SliceRequirements mmtc{1000.0, 0.0, 0.1, 0.1, 500000.0, std::nullopt, Priority::Medium, "Stationary sensors",
                         {"region-1", "region-2", "region-3"}};
  SliceRequirements urllc{5.0, 250.0, 25.0, 1.0, 50.0, 99.999, Priority::High, "Remote-controlled vehicles",
                          {"region-2"}};
  return {{"eMBB", Sst::Embb, embb}, {"mMTC", Sst::Mmtc, mmtc}, {"uRLLC", Sst::Urllc, urllc}};
}

namespace detail {

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline double du_capacity_base(std::string_view region_class) {
  if (region_class == kCityCenter) return 12000.0;
  if (region_class == kIndustrial) return 5000.0;
  return 2500.0;
}

inline DuVnfd builtin_du_vnfd() {
  DuVnfd vnfd{std::string(kBuiltinDuVnfdId), {}};
  const std::array<std::string_view, 3> classes{kIndustrial, kSuburban, kCityCenter};
  for (auto tech : {FronthaulTech::Cpri, FronthaulTech::Ecpri}) {
    Flavor<DuIlSubset> flavor{tech == FronthaulTech::Cpri ? 1 : 2, {tech}, split_for(tech), {}};
    for (auto cls : classes) {
      const double base = du_capacity_base(cls);
      const std::string prefix = "du-" + lower(to_string(tech)) + "-" + lower(cls);
      DuIlSubset small{prefix + "-1to4", {std::string(cls), tech, 1, 4}, {}};
      small.levels = {
          {small.subset_id + "-il1", {4, 2.4, 8.0}, 4, base},
          {small.subset_id + "-il2", {8, 2.4, 16.0}, 4, 2 * base},
          {small.subset_id + "-il3", {16, 3.0, 32.0}, 4, 4 * base},
      };
      DuIlSubset large{prefix + "-5to8", {std::string(cls), tech, 5, 8}, {}};
      large.levels = {
          {large.subset_id + "-il1", {24, 3.0, 48.0}, 8, 6 * base},
          {large.subset_id + "-il2", {40, 3.2, 80.0}, 8, 10 * base},
      };
      flavor.il_subsets.push_back(std::move(small));
      flavor.il_subsets.push_back(std::move(large));
    }
    vnfd.flavors.push_back(std::move(flavor));
  }
  return vnfd;
}

inline CuVnfd builtin_cu_vnfd() {
  Flavor<CuIlSubset> flavor{1, {}, SplitOption::Split2, {}};
  flavor.il_subsets = {
      {"cu-1to2", {1, 2}, {{"cu-1to2-il1", {2, 2.4, 4.0}, 2, 20000.0}, {"cu-1to2-il2", {4, 2.4, 8.0}, 2, 80000.0}}},
      {"cu-3to4", {3, 4}, {{"cu-3to4-il1", {8, 2.4, 16.0}, 4, 160000.0}, {"cu-3to4-il2", {12, 3.0, 24.0}, 4, 320000.0}}},
      {"cu-5to8", {5, 8}, {{"cu-5to8-il1", {16, 3.0, 32.0}, 8, 400000.0}, {"cu-5to8-il2", {24, 3.2, 48.0}, 8, 800000.0}}},
  };
  return {std::string(kBuiltinCuVnfdId), {flavor}};
}

// One gNB NSD subset per DU multiset. Level j walks every DU up its DU ladder
// in lock-step and pairs it with the CU ladder of the matching DU count.
inline NsdIlSubset builtin_nsd_subset(int flavor_id, const std::vector<RegionTech>& du_regions, const DuVnfd& du,
                                      const CuVnfd& cu) {
  std::map<RegionTech, int> counts;
  for (const auto& rt : du_regions) ++counts[rt];
  std::string id = "f" + std::to_string(flavor_id);
  bool first = true;
  for (const auto& [rt, n] : counts) {
    id += (first ? "-" : "+") + lower(rt.region_class) + "-" + lower(to_string(rt.fronthaul_tech)) + "-x" +
          std::to_string(n);
    first = false;
  }
  NsdIlSubset subset{id, {du_regions}, {}};

  const int du_count = static_cast<int>(du_regions.size());
  const CuIlSubset* cu_subset = nullptr;
  for (const auto& s : cu.flavors.front().il_subsets) {
    if (s.key.contains(du_count)) cu_subset = &s;
  }
  auto du_ladder = [&](const RegionTech& rt) {
    std::vector<VnfIlRef> ladder;
    const int flavor = rt.fronthaul_tech == FronthaulTech::Cpri ? 1 : 2;
    for (const auto& s : du.find_flavor(flavor)->il_subsets) {
      if (s.key.region_class != rt.region_class) continue;
      for (const auto& l : s.levels) ladder.push_back({du.descriptor_id, flavor, l.il_id});
    }
    return ladder;
  };
  const std::size_t ranks = du_ladder(du_regions.front()).size();
  const std::size_t cu_levels = cu_subset->levels.size();
  for (std::size_t j = 0; j < ranks; ++j) {
    NsdLevel level;
    level.il_id = id + "-il" + std::to_string(j + 1);
    level.du_count = du_count;
    level.cu_il = {cu.descriptor_id, 1, cu_subset->levels[j * cu_levels / ranks].il_id};
    for (const auto& rt : du_regions) level.du_ils.push_back(du_ladder(rt)[j]);
    subset.levels.push_back(std::move(level));
  }
  return subset;
}

inline GnbNsd builtin_nsd(const DuVnfd& du, const CuVnfd& cu) {
  GnbNsd nsd{std::string(kBuiltinNsdId), cu.descriptor_id, du.descriptor_id, {}};
  const std::array<std::string_view, 3> classes{kIndustrial, kSuburban, kCityCenter};
  for (auto tech : {FronthaulTech::Cpri, FronthaulTech::Ecpri}) {
    const int flavor_id = tech == FronthaulTech::Cpri ? 1 : 2;
    Flavor<NsdIlSubset> flavor{flavor_id, {tech}, std::nullopt, {}};
    for (auto cls : classes) {
      for (int m = 1; m <= 4; ++m) {
        std::vector<RegionTech> key(m, RegionTech{std::string(cls), tech});
        flavor.il_subsets.push_back(builtin_nsd_subset(flavor_id, key, du, cu));
      }
    }
    nsd.flavors.push_back(std::move(flavor));
  }
  Flavor<NsdIlSubset> mixed{3, {FronthaulTech::Cpri, FronthaulTech::Ecpri}, std::nullopt, {}};
  mixed.il_subsets.push_back(builtin_nsd_subset(3,
                                                {{std::string(kIndustrial), FronthaulTech::Ecpri},
                                                 {std::string(kSuburban), FronthaulTech::Cpri},
                                                 {std::string(kCityCenter), FronthaulTech::Ecpri}},
                                                du, cu));
  nsd.flavors.push_back(std::move(mixed));
  return nsd;
}

}  // namespace detail

/// Catalog with the shared gNB NSD, its CU/DU VNFDs, the RU PNFDs of the
/// reference city and the eMBB/uRLLC/mMTC RAN NSSTs.
inline Catalog builtin_catalog() {
  Catalog catalog;
  catalog.du_vnfds.push_back(detail::builtin_du_vnfd());
  catalog.cu_vnfds.push_back(detail::builtin_cu_vnfd());
  catalog.nsds.push_back(detail::builtin_nsd(catalog.du_vnfds.front(), catalog.cu_vnfds.front()));
  catalog.rus = reference_area().rus;

  const auto slices = reference_slices();
  auto requirements_of = [&](Sst sst) {
    for (const auto& s : slices) {
      if (s.sst == sst) return s.requirements;
    }
    return SliceRequirements{};
  };
  const std::string nsd(kBuiltinNsdId);
  catalog.nssts = {
      {"nsst-embb",
       {Sst::Embb, std::nullopt},
       {2,
        {{BandRange::Sub6, 100.0}, {BandRange::MmWave, 400.0}},
        28,
        {80, 66, 10.0, 1e-6},
        McsSet::Extended256Qam,
        SchedulerPolicy::DynamicGuaranteedThroughput},
       nsd,
       requirements_of(Sst::Embb)},
      {"nsst-urllc",
       {Sst::Urllc, std::nullopt},
       {3, {{BandRange::MmWave, 5.0}}, 10, {81, 11, 5.0, 1e-5}, McsSet::LteCompatible,
        SchedulerPolicy::DynamicGuaranteedDelay},
       nsd,
       requirements_of(Sst::Urllc)},
      {"nsst-mmtc",
       {Sst::Mmtc, std::nullopt},
       {0, {{BandRange::Sub6, 5.0}}, 45, {4, 50, 300.0, 1e-6}, McsSet::LteCompatible, SchedulerPolicy::SemiPersistent},
       nsd,
       requirements_of(Sst::Mmtc)},
  };
  return catalog;
}

}  // namespace ranslice
