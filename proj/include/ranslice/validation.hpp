#pragma once

// Invariant checks over catalogs and deployment areas. Violations are data:
// every check appends to a report, nothing throws.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ranslice/descriptors.hpp"
#include "ranslice/topology.hpp"

namespace ranslice {

namespace rule {
inline constexpr std::string_view kFlavorCount = "flavor-count";
inline constexpr std::string_view kFlavorTech = "flavor-tech";
inline constexpr std::string_view kFlavorSplit = "flavor-split";
inline constexpr std::string_view kDuplicateId = "duplicate-id";
inline constexpr std::string_view kDanglingReference = "dangling-reference";
inline constexpr std::string_view kDuCountMismatch = "du-count-mismatch";
inline constexpr std::string_view kNsdDuFlavorTech = "nsd-du-flavor-tech";
inline constexpr std::string_view kNsdKeyMismatch = "nsd-key-mismatch";
inline constexpr std::string_view kIlEmpty = "il-empty";
inline constexpr std::string_view kIlNonPositive = "il-nonpositive";
inline constexpr std::string_view kIlNonMonotone = "il-non-monotone";
inline constexpr std::string_view kIlRange = "il-range";
inline constexpr std::string_view kSnssaiSd = "snssai-sd";
inline constexpr std::string_view kFiveQi = "fiveqi-invalid";
inline constexpr std::string_view kNumerology = "numerology-range";
inline constexpr std::string_view kBandsEmpty = "bands-empty";
inline constexpr std::string_view kCarrierBandwidth = "carrier-bandwidth";
inline constexpr std::string_view kMu3Band = "mu3-band";
inline constexpr std::string_view kRequirements = "requirements-invalid";
inline constexpr std::string_view kRuMixedTech = "ru-mixed-tech";
inline constexpr std::string_view kRuTechMismatch = "ru-tech-mismatch";
inline constexpr std::string_view kRegionAggregationPop = "region-aggregation-pop";
inline constexpr std::string_view kCellSiteRegion = "cell-site-region";
inline constexpr std::string_view kLinkLatency = "link-latency";
inline constexpr std::string_view kPopCapacity = "pop-capacity";
inline constexpr std::string_view kRegionShape = "region-shape";
}  // namespace rule

struct Violation {
  std::string document_id;
  std::string path;
  std::string rule_id;
  std::string message;

  auto operator<=>(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

namespace detail {

class Reporter {
 public:
  void add(std::string doc, std::string path, std::string_view rule_id, std::string message) {
    report_.push_back({std::move(doc), std::move(path), std::string(rule_id), std::move(message)});
  }
  ValidationReport take() {
    std::sort(report_.begin(), report_.end());
    report_.erase(std::unique(report_.begin(), report_.end()), report_.end());
    return std::move(report_);
  }
  void append(const ValidationReport& other) { report_.insert(report_.end(), other.begin(), other.end()); }

 private:
  ValidationReport report_;
};

inline std::string idx(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

inline bool is_hex(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isxdigit(c) != 0; });
}

template <class Item, class IdOf>
void check_unique(Reporter& out, const std::vector<Item>& items, IdOf id_of, std::string_view kind) {
  std::map<std::string, int> seen;
  for (const auto& item : items) ++seen[std::string(id_of(item))];
  for (const auto& [id, n] : seen) {
    if (n > 1) out.add(id, std::string(kind), rule::kDuplicateId, "identifier appears " + std::to_string(n) + " times");
  }
}

inline bool vm_leq(const VmSpec& a, const VmSpec& b) {
  return a.vcpu_count <= b.vcpu_count && a.cpu_ghz <= b.cpu_ghz && a.ram_gb <= b.ram_gb;
}

inline bool vm_positive(const VmSpec& vm) { return vm.vcpu_count > 0 && vm.cpu_ghz > 0 && vm.ram_gb > 0; }

// Shared checks for DU and CU ladders: positivity, ordering and key range.
template <class Subset, class SizeOf, class KeyMin, class KeyMax>
void check_vnf_subset(Reporter& out, const std::string& doc, const std::string& path, const Subset& subset,
                      SizeOf size_of, KeyMin key_min, KeyMax key_max) {
  if (subset.levels.empty()) {
    out.add(doc, path, rule::kIlEmpty, "IL subset '" + subset.subset_id + "' has no levels");
    return;
  }
  if (key_min(subset.key) < 1 || key_min(subset.key) > key_max(subset.key)) {
    out.add(doc, path + ".key", rule::kIlRange, "subset range must satisfy 1 <= min <= max");
  }
  for (std::size_t i = 0; i < subset.levels.size(); ++i) {
    const auto& level = subset.levels[i];
    const auto lpath = idx(path + ".levels", i);
    if (!vm_positive(level.vm) || size_of(level) <= 0 || !(level.aggregate_capacity_mbps > 0)) {
      out.add(doc, lpath, rule::kIlNonPositive, "IL '" + level.il_id + "' has a non-positive resource or capacity");
    }
    if (size_of(level) > key_max(subset.key) || size_of(level) < key_min(subset.key)) {
      out.add(doc, lpath, rule::kIlRange, "IL '" + level.il_id + "' size lies outside the subset range");
    }
    if (i > 0) {
      const auto& prev = subset.levels[i - 1];
      const bool non_decreasing = vm_leq(prev.vm, level.vm) && size_of(prev) <= size_of(level) &&
                                  prev.aggregate_capacity_mbps <= level.aggregate_capacity_mbps;
      const bool strictly_more =
          size_of(prev) < size_of(level) || prev.aggregate_capacity_mbps < level.aggregate_capacity_mbps;
      if (!non_decreasing || !strictly_more) {
        out.add(doc, lpath, rule::kIlNonMonotone,
                "IL '" + level.il_id + "' does not grow over '" + prev.il_id + "'");
      }
    }
  }
}

template <class Subset>
void check_flavor_common(Reporter& out, const std::string& doc, const std::string& path, const Flavor<Subset>& flavor) {
  if (flavor.il_subsets.empty()) {
    out.add(doc, path, rule::kIlEmpty, "flavor " + std::to_string(flavor.flavor_id) + " has no IL subsets");
  }
  // IL references name a level by id within the flavor, so ids must not repeat across subsets.
  std::set<std::string> seen;
  for (const auto& subset : flavor.il_subsets) {
    for (const auto& level : subset.levels) {
      if (!seen.insert(level.il_id).second) {
        out.add(doc, path, rule::kDuplicateId, "IL id '" + level.il_id + "' repeats within the flavor");
      }
    }
  }
}

inline void check_du_vnfd(Reporter& out, const DuVnfd& vnfd) {
  const auto& doc = vnfd.descriptor_id;
  if (vnfd.flavors.size() != 2) {
    out.add(doc, "flavors", rule::kFlavorCount, "expected 2, found " + std::to_string(vnfd.flavors.size()));
  }
  check_unique(out, vnfd.flavors, [](const auto& f) { return std::to_string(f.flavor_id); }, "flavors");
  std::set<FronthaulTech> techs;
  for (std::size_t f = 0; f < vnfd.flavors.size(); ++f) {
    const auto& flavor = vnfd.flavors[f];
    const auto path = idx("flavors", f);
    check_flavor_common(out, doc, path, flavor);
    if (flavor.fronthaul_techs.size() != 1 || !flavor.split || *flavor.split != split_for(flavor.fronthaul_techs[0])) {
      out.add(doc, path, rule::kFlavorSplit, "DU flavor must pair ECPRI with SPLIT_7 or CPRI with SPLIT_8");
    } else {
      techs.insert(flavor.fronthaul_techs[0]);
    }
    for (std::size_t s = 0; s < flavor.il_subsets.size(); ++s) {
      const auto& subset = flavor.il_subsets[s];
      const auto spath = idx(path + ".il_subsets", s);
      if (flavor.fronthaul_techs.size() == 1 && subset.key.fronthaul_tech != flavor.fronthaul_techs[0]) {
        out.add(doc, spath + ".key", rule::kFlavorTech, "subset tech differs from its flavor");
      }
      check_vnf_subset(
          out, doc, spath, subset, [](const DuLevel& l) { return l.max_cell_sites; },
          [](const DuSubsetKey& k) { return k.min_cell_sites; }, [](const DuSubsetKey& k) { return k.max_cell_sites; });
    }
  }
  if (vnfd.flavors.size() == 2 && techs.size() != 2) {
    out.add(doc, "flavors", rule::kFlavorSplit, "DU flavors must cover both SPLIT_7 and SPLIT_8");
  }
}

inline void check_cu_vnfd(Reporter& out, const CuVnfd& vnfd) {
  const auto& doc = vnfd.descriptor_id;
  if (vnfd.flavors.size() != 1) {
    out.add(doc, "flavors", rule::kFlavorCount, "expected 1, found " + std::to_string(vnfd.flavors.size()));
  }
  for (std::size_t f = 0; f < vnfd.flavors.size(); ++f) {
    const auto& flavor = vnfd.flavors[f];
    const auto path = idx("flavors", f);
    check_flavor_common(out, doc, path, flavor);
    if (!flavor.fronthaul_techs.empty() || flavor.split != SplitOption::Split2) {
      out.add(doc, path, rule::kFlavorSplit, "CU flavor must declare SPLIT_2 and no fronthaul tech");
    }
    for (std::size_t s = 0; s < flavor.il_subsets.size(); ++s) {
      check_vnf_subset(
          out, doc, idx(path + ".il_subsets", s), flavor.il_subsets[s], [](const CuLevel& l) { return l.max_dus; },
          [](const CuSubsetKey& k) { return k.min_dus; }, [](const CuSubsetKey& k) { return k.max_dus; });
    }
  }
}

inline const std::vector<FronthaulTech>& expected_nsd_techs(int flavor_id) {
  static const std::vector<FronthaulTech> cpri{FronthaulTech::Cpri};
  static const std::vector<FronthaulTech> ecpri{FronthaulTech::Ecpri};
  static const std::vector<FronthaulTech> both{FronthaulTech::Cpri, FronthaulTech::Ecpri};
  static const std::vector<FronthaulTech> none;
  switch (flavor_id) {
    case 1: return cpri;
    case 2: return ecpri;
    case 3: return both;
    default: return none;
  }
}

template <class Subset>
struct ResolvedIl {
  const Flavor<Subset>* flavor = nullptr;
  const Subset* subset = nullptr;
  const typename Subset::level_type* level = nullptr;
};

template <class Subset>
ResolvedIl<Subset> resolve_il(const VnfDescriptor<Subset>* vnfd, const VnfIlRef& ref) {
  ResolvedIl<Subset> out;
  if (vnfd == nullptr || vnfd->descriptor_id != ref.vnfd_id) return out;
  out.flavor = vnfd->find_flavor(ref.flavor_id);
  if (out.flavor == nullptr) return out;
  out.subset = out.flavor->subset_of_level(ref.il_id);
  if (out.subset != nullptr) out.level = out.subset->find_level(ref.il_id);
  return out;
}

inline void check_nsd(Reporter& out, const GnbNsd& nsd, const Catalog& catalog) {
  const auto& doc = nsd.descriptor_id;
  if (nsd.flavors.size() != 3) {
    out.add(doc, "flavors", rule::kFlavorCount, "expected 3, found " + std::to_string(nsd.flavors.size()));
  }
  check_unique(out, nsd.flavors, [](const auto& f) { return std::to_string(f.flavor_id); }, "flavors");
  const CuVnfd* cu = catalog.find_cu_vnfd(nsd.cu_vnfd_ref);
  const DuVnfd* du = catalog.find_du_vnfd(nsd.du_vnfd_ref);
  if (cu == nullptr) out.add(doc, "cu_vnfd_ref", rule::kDanglingReference, "unknown CU VNFD '" + nsd.cu_vnfd_ref + "'");
  if (du == nullptr) out.add(doc, "du_vnfd_ref", rule::kDanglingReference, "unknown DU VNFD '" + nsd.du_vnfd_ref + "'");

  for (std::size_t f = 0; f < nsd.flavors.size(); ++f) {
    const auto& flavor = nsd.flavors[f];
    const auto path = idx("flavors", f);
    check_flavor_common(out, doc, path, flavor);
    auto techs = flavor.fronthaul_techs;
    std::sort(techs.begin(), techs.end());
    if (techs != expected_nsd_techs(flavor.flavor_id) || flavor.split.has_value()) {
      out.add(doc, path, rule::kFlavorTech,
              "flavor " + std::to_string(flavor.flavor_id) + " must be 1={CPRI}, 2={ECPRI} or 3={CPRI,ECPRI}");
    }
    check_unique(out, flavor.il_subsets, [](const auto& s) { return s.subset_id; }, path + ".il_subsets");

    for (std::size_t s = 0; s < flavor.il_subsets.size(); ++s) {
      const auto& subset = flavor.il_subsets[s];
      const auto spath = idx(path + ".il_subsets", s);
      if (subset.levels.empty()) {
        out.add(doc, spath, rule::kIlEmpty, "IL subset '" + subset.subset_id + "' has no levels");
      }
      for (const auto& rt : subset.key.du_regions) {
        if (!flavor.permits(rt.fronthaul_tech)) {
          out.add(doc, spath + ".key", rule::kNsdKeyMismatch,
                  std::string(to_string(rt.fronthaul_tech)) + " is not permitted by flavor " +
                      std::to_string(flavor.flavor_id));
        }
      }
      double prev_capacity = -1;
      int prev_du_count = 0;
      for (std::size_t l = 0; l < subset.levels.size(); ++l) {
        const auto& level = subset.levels[l];
        const auto lpath = idx(spath + ".levels", l);
        if (level.du_count <= 0) out.add(doc, lpath, rule::kIlNonPositive, "du_count must be positive");
        if (level.du_count != static_cast<int>(level.du_ils.size())) {
          out.add(doc, lpath, rule::kDuCountMismatch,
                  "du_count " + std::to_string(level.du_count) + " but " + std::to_string(level.du_ils.size()) +
                      " DU IL references");
        }
        if (level.du_count != static_cast<int>(subset.key.du_regions.size())) {
          out.add(doc, lpath, rule::kNsdKeyMismatch, "du_count differs from the subset key size");
        }

        bool resolved = true;
        double capacity = 0;
        const auto cu_il = resolve_il(cu, level.cu_il);
        if (cu_il.level == nullptr) {
          resolved = false;
          out.add(doc, lpath + ".cu_il", rule::kDanglingReference,
                  "unresolved CU IL " + level.cu_il.vnfd_id + "/" + std::to_string(level.cu_il.flavor_id) + "/" +
                      level.cu_il.il_id);
        } else {
          capacity += cu_il.level->aggregate_capacity_mbps;
          if (!cu_il.subset->key.contains(level.du_count)) {
            out.add(doc, lpath + ".cu_il", rule::kIlRange, "CU IL subset does not admit du_count DUs");
          }
        }
        std::vector<RegionTech> referenced;
        for (std::size_t d = 0; d < level.du_ils.size(); ++d) {
          const auto& ref = level.du_ils[d];
          const auto dpath = idx(lpath + ".du_ils", d);
          const auto du_il = resolve_il(du, ref);
          if (du_il.level == nullptr) {
            resolved = false;
            out.add(doc, dpath, rule::kDanglingReference,
                    "unresolved DU IL " + ref.vnfd_id + "/" + std::to_string(ref.flavor_id) + "/" + ref.il_id);
            continue;
          }
          capacity += du_il.level->aggregate_capacity_mbps;
          const auto tech = du_il.subset->key.fronthaul_tech;
          if (!flavor.permits(tech)) {
            out.add(doc, dpath, rule::kNsdDuFlavorTech,
                    "DU flavor uses " + std::string(to_string(tech)) + ", not permitted by gNB flavor " +
                        std::to_string(flavor.flavor_id));
          }
          referenced.push_back({du_il.subset->key.region_class, tech});
        }
        if (resolved && !NsdSubsetKey{referenced}.same_multiset(subset.key)) {
          out.add(doc, lpath, rule::kNsdKeyMismatch, "DU IL references do not match the subset key");
        }
        if (resolved && l > 0 && (capacity <= prev_capacity || level.du_count < prev_du_count)) {
          out.add(doc, lpath, rule::kIlNonMonotone, "IL '" + level.il_id + "' does not grow over its predecessor");
        }
        prev_capacity = resolved ? capacity : prev_capacity;
        prev_du_count = level.du_count;
      }
    }
  }
}

}  // namespace detail

inline ValidationReport validate_radio_config(const RadioConfig& rc, const std::string& doc,
                                              const std::string& path = "radio_config") {
  detail::Reporter out;
  if (rc.numerology_mu < 0 || rc.numerology_mu > 3) {
    out.add(doc, path + ".numerology_mu", rule::kNumerology, "numerology must be 0..3");
  }
  if (rc.bands.empty()) out.add(doc, path + ".bands", rule::kBandsEmpty, "at least one band is required");
  for (std::size_t i = 0; i < rc.bands.size(); ++i) {
    const auto& band = rc.bands[i];
    const double max_bw = band.range == BandRange::Sub6 ? 100.0 : 400.0;
    if (!(band.carrier_bandwidth_mhz >= 5.0 && band.carrier_bandwidth_mhz <= max_bw)) {
      out.add(doc, detail::idx(path + ".bands", i), rule::kCarrierBandwidth,
              "carrier bandwidth outside [5, " + std::to_string(static_cast<int>(max_bw)) + "] MHz");
    }
    if (rc.numerology_mu == 3 && band.range != BandRange::MmWave) {
      out.add(doc, detail::idx(path + ".bands", i), rule::kMu3Band, "numerology 3 requires mmWave bands only");
    }
  }
  const auto& q = rc.five_qi;
  if (q.id <= 0 || q.priority_level <= 0 || !(q.packet_delay_budget_ms > 0) ||
      !(q.packet_error_rate > 0 && q.packet_error_rate < 1)) {
    out.add(doc, path + ".five_qi", rule::kFiveQi, "5QI fields must be positive with PER in (0,1)");
  }
  return out.take();
}

inline ValidationReport validate_requirements(const SliceRequirements& req, const std::string& doc,
                                              const std::string& path = "requirements") {
  detail::Reporter out;
  auto bad = [&](std::string what) { out.add(doc, path, rule::kRequirements, std::move(what)); };
  if (!(req.latency_ms > 0)) bad("latency_ms must be positive");
  if (!(req.max_mobility_kmh >= 0)) bad("max_mobility_kmh must be non-negative");
  if (!(req.throughput_ul_mbps >= 0) || !(req.throughput_dl_mbps >= 0)) bad("throughputs must be non-negative");
  if (!(req.throughput_ul_mbps > 0 || req.throughput_dl_mbps > 0)) bad("one throughput must be positive");
  if (!(req.ue_density_per_km2 > 0)) bad("ue_density_per_km2 must be positive");
  if (req.reliability_pct && !(*req.reliability_pct > 0 && *req.reliability_pct < 100)) {
    bad("reliability_pct must lie in (0,100)");
  }
  if (req.target_regions.empty()) bad("target_regions must be non-empty");
  return out.take();
}

inline ValidationReport validate_nsst(const RanNsst& nsst) {
  detail::Reporter out;
  const auto& doc = nsst.nsst_id;
  if (nsst.s_nssai.sd && (nsst.s_nssai.sd->empty() || nsst.s_nssai.sd->size() > 6 || !detail::is_hex(*nsst.s_nssai.sd))) {
    out.add(doc, "s_nssai.sd", rule::kSnssaiSd, "SD must be 1-6 hex characters");
  }
  out.append(validate_radio_config(nsst.radio_config, doc));
  out.append(validate_requirements(nsst.requirement_profile, doc, "requirement_profile"));
  return out.take();
}

/// Structural checks of a deployment area.
inline ValidationReport validate_area(const DeploymentArea& area) {
  detail::Reporter out;
  const auto& doc = area.area_id;
  detail::check_unique(out, area.regions, [](const Region& r) { return r.region_id; }, "regions");
  detail::check_unique(out, area.pops, [](const Pop& p) { return p.pop_id; }, "pops");
  detail::check_unique(out, area.rus, [](const RuPnfd& r) { return r.ru_id; }, "rus");

  std::map<std::string, std::string> site_owner;
  std::map<std::string, std::string> aggregation_owner;
  for (std::size_t i = 0; i < area.regions.size(); ++i) {
    const auto& region = area.regions[i];
    const auto path = detail::idx("regions", i);
    if (!(region.area_km2 > 0) || region.cell_sites.empty() || region.region_class.empty()) {
      out.add(doc, path, rule::kRegionShape, "region '" + region.region_id + "' needs a class, area and cell sites");
    }
    for (const auto& site : region.cell_sites) {
      auto [it, inserted] = site_owner.emplace(site, region.region_id);
      if (!inserted) {
        out.add(doc, path, rule::kCellSiteRegion, "cell site '" + site + "' belongs to several regions");
      }
    }
    const Pop* agg = area.find_pop(region.aggregation_pop);
    if (agg == nullptr) {
      out.add(doc, path + ".aggregation_pop", rule::kDanglingReference, "unknown PoP '" + region.aggregation_pop + "'");
    } else if (agg->tier != PopTier::Aggregation) {
      out.add(doc, path + ".aggregation_pop", rule::kRegionAggregationPop, "PoP '" + agg->pop_id + "' is not AGGREGATION");
    }
    auto [it, inserted] = aggregation_owner.emplace(region.aggregation_pop, region.region_id);
    if (!inserted) {
      out.add(doc, path + ".aggregation_pop", rule::kRegionAggregationPop,
              "PoP '" + region.aggregation_pop + "' already serves region '" + it->second + "'");
    }
  }
  for (std::size_t i = 0; i < area.pops.size(); ++i) {
    const auto& pop = area.pops[i];
    if (pop.host_capacity.vcpu <= 0 || !(pop.host_capacity.ram_gb > 0)) {
      out.add(doc, detail::idx("pops", i), rule::kPopCapacity, "PoP '" + pop.pop_id + "' needs positive capacity");
    }
  }
  for (std::size_t i = 0; i < area.links.size(); ++i) {
    const auto& link = area.links[i];
    const auto path = detail::idx("links", i);
    if (!(link.latency_ms > 0)) out.add(doc, path, rule::kLinkLatency, "link latency must be positive");
    if (area.find_pop(link.pop_a) == nullptr || area.find_pop(link.pop_b) == nullptr) {
      out.add(doc, path, rule::kDanglingReference, "link endpoint is not a known PoP");
    }
  }
  for (std::size_t i = 0; i < area.rus.size(); ++i) {
    const auto& ru = area.rus[i];
    const auto path = detail::idx("rus", i);
    const Region* region = area.find_region(ru.region_id);
    if (region == nullptr) {
      out.add(doc, path, rule::kDanglingReference, "RU '" + ru.ru_id + "' references unknown region");
      continue;
    }
    if (ru.connection_tech != region->fronthaul_tech) {
      out.add(doc, path, rule::kRuTechMismatch,
              "RU '" + ru.ru_id + "' uses " + std::string(to_string(ru.connection_tech)) + " in a " +
                  std::string(to_string(region->fronthaul_tech)) + " region");
    }
    auto owner = site_owner.find(ru.cell_site_id);
    if (owner == site_owner.end() || owner->second != ru.region_id) {
      out.add(doc, path, rule::kCellSiteRegion, "RU '" + ru.ru_id + "' sits on a cell site outside its region");
    }
  }
  return out.take();
}

/// Every invariant violation of `catalog`. When `area` is given, RU PNFDs are
/// also checked against the fronthaul technology of their region.
inline ValidationReport validate_catalog(const Catalog& catalog, const DeploymentArea* area = nullptr) {
  detail::Reporter out;
  detail::check_unique(out, catalog.nsds, [](const GnbNsd& d) { return d.descriptor_id; }, "nsds");
  detail::check_unique(out, catalog.cu_vnfds, [](const CuVnfd& d) { return d.descriptor_id; }, "cu_vnfds");
  detail::check_unique(out, catalog.du_vnfds, [](const DuVnfd& d) { return d.descriptor_id; }, "du_vnfds");
  detail::check_unique(out, catalog.rus, [](const RuPnfd& r) { return r.ru_id; }, "rus");
  detail::check_unique(out, catalog.nssts, [](const RanNsst& n) { return n.nsst_id; }, "nssts");

  for (const auto& vnfd : catalog.du_vnfds) detail::check_du_vnfd(out, vnfd);
  for (const auto& vnfd : catalog.cu_vnfds) detail::check_cu_vnfd(out, vnfd);
  for (const auto& nsd : catalog.nsds) detail::check_nsd(out, nsd, catalog);
  for (const auto& nsst : catalog.nssts) {
    out.append(validate_nsst(nsst));
    if (catalog.find_nsd(nsst.nsd_ref) == nullptr) {
      out.add(nsst.nsst_id, "nsd_ref", rule::kDanglingReference, "unknown gNB NSD '" + nsst.nsd_ref + "'");
    }
  }

  std::map<std::string, std::set<FronthaulTech>> region_techs;
  for (const auto& ru : catalog.rus) region_techs[ru.region_id].insert(ru.connection_tech);
  for (const auto& [region, techs] : region_techs) {
    if (techs.size() > 1) out.add(region, "rus", rule::kRuMixedTech, "RUs of one region use different fronthaul techs");
  }
  if (area != nullptr) {
    for (const auto& ru : catalog.rus) {
      const Region* region = area->find_region(ru.region_id);
      if (region == nullptr) {
        out.add(ru.ru_id, "region_id", rule::kDanglingReference, "unknown region '" + ru.region_id + "'");
      } else if (region->fronthaul_tech != ru.connection_tech) {
        out.add(ru.ru_id, "connection_tech", rule::kRuTechMismatch, "RU tech differs from its region's fronthaul");
      }
    }
  }
  return out.take();
}

}  // namespace ranslice
