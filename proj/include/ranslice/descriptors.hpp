#pragma once

// Harmonized RAN slice descriptor model: RAN NSST (3GPP side) on top of a
// gNB NSD that references CU/DU VNFDs (NFV side), plus RU PNFDs.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ranslice {

enum class Sst : int { Embb = 1, Urllc = 2, Mmtc = 3 };
enum class FronthaulTech { Cpri, Ecpri };
enum class SplitOption { Split2, Split7, Split8 };
enum class BandRange { Sub6, MmWave };
enum class McsSet { LteCompatible, Extended256Qam };
enum class SchedulerPolicy { DynamicGuaranteedThroughput, SemiPersistent, DynamicGuaranteedDelay };
enum class Priority { Low, Medium, High };
enum class PopTier { Aggregation, Edge };

template <class E>
struct EnumNames;

template <>
struct EnumNames<Sst> {
  static constexpr std::array<std::pair<Sst, std::string_view>, 3> table{
      {{Sst::Embb, "EMBB"}, {Sst::Urllc, "URLLC"}, {Sst::Mmtc, "MMTC"}}};
};
template <>
struct EnumNames<FronthaulTech> {
  static constexpr std::array<std::pair<FronthaulTech, std::string_view>, 2> table{
      {{FronthaulTech::Cpri, "CPRI"}, {FronthaulTech::Ecpri, "ECPRI"}}};
};
template <>
struct EnumNames<SplitOption> {
  static constexpr std::array<std::pair<SplitOption, std::string_view>, 3> table{
      {{SplitOption::Split2, "SPLIT_2"}, {SplitOption::Split7, "SPLIT_7"}, {SplitOption::Split8, "SPLIT_8"}}};
};
template <>
struct EnumNames<BandRange> {
  static constexpr std::array<std::pair<BandRange, std::string_view>, 2> table{
      {{BandRange::Sub6, "SUB6_450_6000"}, {BandRange::MmWave, "MMWAVE_24250_52600"}}};
};
template <>
struct EnumNames<McsSet> {
  static constexpr std::array<std::pair<McsSet, std::string_view>, 2> table{
      {{McsSet::LteCompatible, "LTE_COMPATIBLE"}, {McsSet::Extended256Qam, "EXTENDED_256QAM"}}};
};
template <>
struct EnumNames<SchedulerPolicy> {
  static constexpr std::array<std::pair<SchedulerPolicy, std::string_view>, 3> table{
      {{SchedulerPolicy::DynamicGuaranteedThroughput, "DYNAMIC_GUARANTEED_THROUGHPUT"},
       {SchedulerPolicy::SemiPersistent, "SEMI_PERSISTENT"},
       {SchedulerPolicy::DynamicGuaranteedDelay, "DYNAMIC_GUARANTEED_DELAY"}}};
};
template <>
struct EnumNames<Priority> {
  static constexpr std::array<std::pair<Priority, std::string_view>, 3> table{
      {{Priority::Low, "LOW"}, {Priority::Medium, "MEDIUM"}, {Priority::High, "HIGH"}}};
};
template <>
struct EnumNames<PopTier> {
  static constexpr std::array<std::pair<PopTier, std::string_view>, 2> table{
      {{PopTier::Aggregation, "AGGREGATION"}, {PopTier::Edge, "EDGE"}}};
};

template <class E>
constexpr std::string_view to_string(E value) {
  for (const auto& [v, name] : EnumNames<E>::table) {
    if (v == value) return name;
  }
  return "?";
}

template <class E>
constexpr std::optional<E> enum_from_string(std::string_view name) {
  for (const auto& [v, n] : EnumNames<E>::table) {
    if (n == name) return v;
  }
  return std::nullopt;
}

/// Split option used on the DU-RU interface for a fronthaul technology.
constexpr SplitOption split_for(FronthaulTech tech) {
  return tech == FronthaulTech::Ecpri ? SplitOption::Split7 : SplitOption::Split8;
}

// Region classes of the reference city. Catalogs may use further classes.
inline constexpr std::string_view kIndustrial = "INDUSTRIAL";
inline constexpr std::string_view kSuburban = "SUBURBAN";
inline constexpr std::string_view kCityCenter = "CITY_CENTER";

// ---------------------------------------------------------------------------
// 3GPP side
// ---------------------------------------------------------------------------

struct SNssai {
  Sst sst = Sst::Embb;
  std::optional<std::string> sd;  // stored, never interpreted

  bool operator==(const SNssai&) const = default;
};

struct FiveQi {
  int id = 0;
  int priority_level = 0;
  double packet_delay_budget_ms = 0;
  double packet_error_rate = 0;

  bool operator==(const FiveQi&) const = default;
};

struct Band {
  BandRange range = BandRange::Sub6;
  double carrier_bandwidth_mhz = 0;

  bool operator==(const Band&) const = default;
};

struct RadioConfig {
  int numerology_mu = 0;
  std::vector<Band> bands;
  int slot_format_id = 0;
  FiveQi five_qi;
  McsSet mcs_set = McsSet::LteCompatible;
  SchedulerPolicy scheduler_policy = SchedulerPolicy::DynamicGuaranteedThroughput;

  bool operator==(const RadioConfig&) const = default;
};

struct SliceRequirements {
  double latency_ms = 0;
  double max_mobility_kmh = 0;
  double throughput_ul_mbps = 0;
  double throughput_dl_mbps = 0;
  double ue_density_per_km2 = 0;
  std::optional<double> reliability_pct;
  Priority priority = Priority::Low;
  std::string ue_type;
  std::vector<std::string> target_regions;

  bool operator==(const SliceRequirements&) const = default;
};

struct RanNsst {
  std::string nsst_id;
  SNssai s_nssai;
  RadioConfig radio_config;
  std::string nsd_ref;
  SliceRequirements requirement_profile;

  bool operator==(const RanNsst&) const = default;
};

// ---------------------------------------------------------------------------
// NFV side
// ---------------------------------------------------------------------------

struct VmSpec {
  int vcpu_count = 0;
  double cpu_ghz = 0;
  double ram_gb = 0;

  bool operator==(const VmSpec&) const = default;
};

struct DuLevel {
  std::string il_id;
  VmSpec vm;
  int max_cell_sites = 0;
  double aggregate_capacity_mbps = 0;

  bool operator==(const DuLevel&) const = default;
};

struct CuLevel {
  std::string il_id;
  VmSpec vm;
  int max_dus = 0;
  double aggregate_capacity_mbps = 0;

  bool operator==(const CuLevel&) const = default;
};

/// (flavor, IL) entry of a VNFD, as referenced from a gNB NSD IL.
struct VnfIlRef {
  std::string vnfd_id;
  int flavor_id = 0;
  std::string il_id;

  bool operator==(const VnfIlRef&) const = default;
};

struct NsdLevel {
  std::string il_id;
  int du_count = 0;
  VnfIlRef cu_il;
  std::vector<VnfIlRef> du_ils;

  bool operator==(const NsdLevel&) const = default;
};

struct RegionTech {
  std::string region_class;
  FronthaulTech fronthaul_tech = FronthaulTech::Cpri;

  auto operator<=>(const RegionTech&) const = default;
};

struct DuSubsetKey {
  std::string region_class;
  FronthaulTech fronthaul_tech = FronthaulTech::Cpri;
  int min_cell_sites = 1;
  int max_cell_sites = 1;

  bool contains(int sites) const { return sites >= min_cell_sites && sites <= max_cell_sites; }
  bool operator==(const DuSubsetKey&) const = default;
};

struct CuSubsetKey {
  int min_dus = 1;
  int max_dus = 1;

  bool contains(int dus) const { return dus >= min_dus && dus <= max_dus; }
  bool operator==(const CuSubsetKey&) const = default;
};

/// Multiset of (region class, fronthaul tech) pairs, one per DU of the gNB.
struct NsdSubsetKey {
  std::vector<RegionTech> du_regions;

  std::vector<RegionTech> sorted() const {
    auto copy = du_regions;
    std::sort(copy.begin(), copy.end());
    return copy;
  }
  bool same_multiset(const NsdSubsetKey& other) const { return sorted() == other.sorted(); }
  bool operator==(const NsdSubsetKey&) const = default;
};

template <class Key, class Level>
struct IlSubset {
  using key_type = Key;
  using level_type = Level;

  std::string subset_id;
  Key key;
  std::vector<Level> levels;

  const Level* find_level(std::string_view il_id) const {
    for (const auto& level : levels) {
      if (level.il_id == il_id) return &level;
    }
    return nullptr;
  }
  bool operator==(const IlSubset&) const = default;
};

using DuIlSubset = IlSubset<DuSubsetKey, DuLevel>;
using CuIlSubset = IlSubset<CuSubsetKey, CuLevel>;
using NsdIlSubset = IlSubset<NsdSubsetKey, NsdLevel>;

template <class Subset>
struct Flavor {
  int flavor_id = 0;
  std::vector<FronthaulTech> fronthaul_techs;  // empty for the CU flavor
  std::optional<SplitOption> split;            // unset for gNB NSD flavors
  std::vector<Subset> il_subsets;

  const Subset* find_subset(std::string_view subset_id) const {
    for (const auto& s : il_subsets) {
      if (s.subset_id == subset_id) return &s;
    }
    return nullptr;
  }
  /// Subset holding the IL `il_id`, or nullptr.
  const Subset* subset_of_level(std::string_view il_id) const {
    for (const auto& s : il_subsets) {
      if (s.find_level(il_id) != nullptr) return &s;
    }
    return nullptr;
  }
  bool permits(FronthaulTech tech) const {
    return std::find(fronthaul_techs.begin(), fronthaul_techs.end(), tech) != fronthaul_techs.end();
  }
  bool operator==(const Flavor&) const = default;
};

template <class Subset>
struct VnfDescriptor {
  std::string descriptor_id;
  std::vector<Flavor<Subset>> flavors;

  const Flavor<Subset>* find_flavor(int flavor_id) const {
    for (const auto& f : flavors) {
      if (f.flavor_id == flavor_id) return &f;
    }
    return nullptr;
  }
  bool operator==(const VnfDescriptor&) const = default;
};

using CuVnfd = VnfDescriptor<CuIlSubset>;
using DuVnfd = VnfDescriptor<DuIlSubset>;

struct GnbNsd {
  std::string descriptor_id;
  std::string cu_vnfd_ref;
  std::string du_vnfd_ref;
  std::vector<Flavor<NsdIlSubset>> flavors;

  const Flavor<NsdIlSubset>* find_flavor(int flavor_id) const {
    for (const auto& f : flavors) {
      if (f.flavor_id == flavor_id) return &f;
    }
    return nullptr;
  }
  bool operator==(const GnbNsd&) const = default;
};

struct Coordinates {
  double x_km = 0;
  double y_km = 0;

  bool operator==(const Coordinates&) const = default;
};

struct RuPnfd {
  std::string ru_id;
  std::string region_id;
  std::string cell_site_id;
  Coordinates coordinates;
  FronthaulTech connection_tech = FronthaulTech::Cpri;

  bool operator==(const RuPnfd&) const = default;
};

struct Catalog {
  std::vector<GnbNsd> nsds;
  std::vector<CuVnfd> cu_vnfds;
  std::vector<DuVnfd> du_vnfds;
  std::vector<RuPnfd> rus;
  std::vector<RanNsst> nssts;

  const GnbNsd* find_nsd(std::string_view id) const { return find_by(nsds, id); }
  const CuVnfd* find_cu_vnfd(std::string_view id) const { return find_by(cu_vnfds, id); }
  const DuVnfd* find_du_vnfd(std::string_view id) const { return find_by(du_vnfds, id); }
  const RuPnfd* find_ru(std::string_view id) const {
    for (const auto& ru : rus) {
      if (ru.ru_id == id) return &ru;
    }
    return nullptr;
  }
  /// First NSST (by id) carrying `sst`.
  const RanNsst* find_nsst(Sst sst) const {
    const RanNsst* best = nullptr;
    for (const auto& n : nssts) {
      if (n.s_nssai.sst == sst && (best == nullptr || n.nsst_id < best->nsst_id)) best = &n;
    }
    return best;
  }
  bool operator==(const Catalog&) const = default;

 private:
  template <class T>
  static const T* find_by(const std::vector<T>& docs, std::string_view id) {
    for (const auto& d : docs) {
      if (d.descriptor_id == id) return &d;
    }
    return nullptr;
  }
};

}  // namespace ranslice
