#pragma once

// Field-by-field JSON mapping of every document type. A single `fields()`
// listing per type drives both directions; decoding is strict (unknown keys,
// missing keys and wrong JSON types are errors with a JSON-pointer-like path).

#include <concepts>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "ranslice/descriptors.hpp"
#include "ranslice/error.hpp"
#include "ranslice/radio_profiler.hpp"
#include "ranslice/slice_planner.hpp"
#include "ranslice/topology.hpp"

namespace ranslice {

using json = nlohmann::json;

/// Body of a SLICE_REQUEST document.
struct SliceRequest {
  Sst sst = Sst::Embb;
  std::optional<std::string> sd;
  SliceRequirements requirements;

  bool operator==(const SliceRequest&) const = default;
};

namespace codec {

template <class S, class T>
concept Is = std::same_as<std::remove_const_t<S>, T>;

template <class T>
struct is_optional : std::false_type {};
template <class T>
struct is_optional<std::optional<T>> : std::true_type {};

template <class T>
struct is_vector : std::false_type {};
template <class T>
struct is_vector<std::vector<T>> : std::true_type {};

template <class T>
concept Enum = std::is_enum_v<T>;

template <class T>
struct is_il_subset : std::false_type {};
template <class K, class L>
struct is_il_subset<IlSubset<K, L>> : std::true_type {};

template <class T>
struct is_flavor : std::false_type {};
template <class S>
struct is_flavor<Flavor<S>> : std::true_type {};

// clang-format off
template <class V, Is<SNssai> S> void fields(V& v, S& x) { v("sst", x.sst); v("sd", x.sd); }
template <class V, Is<FiveQi> S> void fields(V& v, S& x) {
  v("id", x.id); v("priority_level", x.priority_level);
  v("packet_delay_budget_ms", x.packet_delay_budget_ms); v("packet_error_rate", x.packet_error_rate);
}
template <class V, Is<Band> S> void fields(V& v, S& x) { v("band_range", x.range); v("carrier_bandwidth_mhz", x.carrier_bandwidth_mhz); }
template <class V, Is<RadioConfig> S> void fields(V& v, S& x) {
  v("numerology_mu", x.numerology_mu); v("bands", x.bands); v("slot_format_id", x.slot_format_id);
  v("five_qi", x.five_qi); v("mcs_set", x.mcs_set); v("scheduler_policy", x.scheduler_policy);
}
template <class V, Is<SliceRequirements> S> void fields(V& v, S& x) {
  v("latency_ms", x.latency_ms); v("max_mobility_kmh", x.max_mobility_kmh);
  v("throughput_ul_mbps", x.throughput_ul_mbps); v("throughput_dl_mbps", x.throughput_dl_mbps);
  v("ue_density_per_km2", x.ue_density_per_km2); v("reliability_pct", x.reliability_pct);
  v("priority", x.priority); v("ue_type", x.ue_type); v("target_regions", x.target_regions);
}
template <class V, Is<RanNsst> S> void fields(V& v, S& x) {
  v("nsst_id", x.nsst_id); v("s_nssai", x.s_nssai); v("radio_config", x.radio_config);
  v("nsd_ref", x.nsd_ref); v("requirement_profile", x.requirement_profile);
}
template <class V, Is<VmSpec> S> void fields(V& v, S& x) { v("vcpu_count", x.vcpu_count); v("cpu_ghz", x.cpu_ghz); v("ram_gb", x.ram_gb); }
template <class V, Is<DuLevel> S> void fields(V& v, S& x) {
  v("il_id", x.il_id); v("vm", x.vm); v("max_cell_sites", x.max_cell_sites); v("aggregate_capacity_mbps", x.aggregate_capacity_mbps);
}
template <class V, Is<CuLevel> S> void fields(V& v, S& x) {
  v("il_id", x.il_id); v("vm", x.vm); v("max_dus", x.max_dus); v("aggregate_capacity_mbps", x.aggregate_capacity_mbps);
}
template <class V, Is<VnfIlRef> S> void fields(V& v, S& x) { v("vnfd_id", x.vnfd_id); v("flavor_id", x.flavor_id); v("il_id", x.il_id); }
template <class V, Is<NsdLevel> S> void fields(V& v, S& x) { v("il_id", x.il_id); v("du_count", x.du_count); v("cu_il", x.cu_il); v("du_ils", x.du_ils); }
template <class V, Is<RegionTech> S> void fields(V& v, S& x) { v("region_class", x.region_class); v("fronthaul_tech", x.fronthaul_tech); }
template <class V, Is<DuSubsetKey> S> void fields(V& v, S& x) {
  v("region_class", x.region_class); v("fronthaul_tech", x.fronthaul_tech);
  v("min_cell_sites", x.min_cell_sites); v("max_cell_sites", x.max_cell_sites);
}
template <class V, Is<CuSubsetKey> S> void fields(V& v, S& x) { v("min_dus", x.min_dus); v("max_dus", x.max_dus); }
template <class V, Is<NsdSubsetKey> S> void fields(V& v, S& x) { v("du_regions", x.du_regions); }
template <class V, class S> requires is_il_subset<std::remove_const_t<S>>::value
void fields(V& v, S& x) { v("subset_id", x.subset_id); v("key", x.key); v("levels", x.levels); }
template <class V, class S> requires is_flavor<std::remove_const_t<S>>::value void fields(V& v, S& x) {
  v("flavor_id", x.flavor_id); v("fronthaul_techs", x.fronthaul_techs); v("split", x.split); v("il_subsets", x.il_subsets);
}
template <class V, Is<GnbNsd> S> void fields(V& v, S& x) {
  v("descriptor_id", x.descriptor_id); v("cu_vnfd_ref", x.cu_vnfd_ref); v("du_vnfd_ref", x.du_vnfd_ref); v("flavors", x.flavors);
}
template <class V, Is<CuVnfd> S> void fields(V& v, S& x) { v("descriptor_id", x.descriptor_id); v("flavors", x.flavors); }
template <class V, Is<DuVnfd> S> void fields(V& v, S& x) { v("descriptor_id", x.descriptor_id); v("flavors", x.flavors); }
template <class V, Is<Coordinates> S> void fields(V& v, S& x) { v("x_km", x.x_km); v("y_km", x.y_km); }
template <class V, Is<RuPnfd> S> void fields(V& v, S& x) {
  v("ru_id", x.ru_id); v("region_id", x.region_id); v("cell_site_id", x.cell_site_id);
  v("coordinates", x.coordinates); v("connection_tech", x.connection_tech);
}
template <class V, Is<Catalog> S> void fields(V& v, S& x) {
  v("nsds", x.nsds); v("cu_vnfds", x.cu_vnfds); v("du_vnfds", x.du_vnfds); v("rus", x.rus); v("nssts", x.nssts);
}
template <class V, Is<HostCapacity> S> void fields(V& v, S& x) { v("vcpu", x.vcpu); v("ram_gb", x.ram_gb); }
template <class V, Is<Region> S> void fields(V& v, S& x) {
  v("region_id", x.region_id); v("region_class", x.region_class); v("area_km2", x.area_km2);
  v("fronthaul_tech", x.fronthaul_tech); v("cell_sites", x.cell_sites); v("aggregation_pop", x.aggregation_pop);
}
template <class V, Is<Pop> S> void fields(V& v, S& x) { v("pop_id", x.pop_id); v("tier", x.tier); v("host_capacity", x.host_capacity); }
template <class V, Is<TransportLink> S> void fields(V& v, S& x) { v("pop_a", x.pop_a); v("pop_b", x.pop_b); v("latency_ms", x.latency_ms); }
template <class V, Is<DeploymentArea> S> void fields(V& v, S& x) {
  v("area_id", x.area_id); v("regions", x.regions); v("pops", x.pops); v("links", x.links); v("rus", x.rus);
}
template <class V, Is<LatencyTier> S> void fields(V& v, S& x) { v("achievable_latency_ms", x.achievable_latency_ms); v("mu", x.mu); }
template <class V, Is<SlotFormatEntry> S> void fields(V& v, S& x) {
  v("min_dl_ul_ratio", x.min_dl_ul_ratio); v("max_dl_ul_ratio", x.max_dl_ul_ratio); v("slot_format_id", x.slot_format_id);
  v("dl_symbols", x.dl_symbols); v("ul_symbols", x.ul_symbols); v("flexible_symbols", x.flexible_symbols);
}
template <class V, Is<BandwidthPolicy> S> void fields(V& v, S& x) {
  v("reference_cell_area_km2", x.reference_cell_area_km2); v("activity_factor", x.activity_factor);
  v("spectral_efficiency_bps_per_hz", x.spectral_efficiency_bps_per_hz);
  v("max_concurrent_ues_per_cell", x.max_concurrent_ues_per_cell);
}
template <class V, Is<ProfilerPolicy> S> void fields(V& v, S& x) {
  v("latency_tiers", x.latency_tiers); v("mobility_uplift_kmh", x.mobility_uplift_kmh);
  v("slot_formats", x.slot_formats); v("fiveqi_table", x.fiveqi_table);
  v("high_priority_max_level", x.high_priority_max_level); v("medium_priority_max_level", x.medium_priority_max_level);
  v("mcs_threshold_mbps", x.mcs_threshold_mbps); v("bandwidth", x.bandwidth);
  v("semi_persistent_max_mbps", x.semi_persistent_max_mbps);
  v("guaranteed_delay_max_latency_ms", x.guaranteed_delay_max_latency_ms);
}
template <class V, Is<PlannerConfig> S> void fields(V& v, S& x) {
  v("cu_du_latency_budget_ms", x.cu_du_latency_budget_ms); v("activity_factor", x.activity_factor);
  v("exact_solver_limit", x.exact_solver_limit);
}
template <class V, Is<DuPlan> S> void fields(V& v, S& x) {
  v("du_id", x.du_id); v("region_id", x.region_id); v("region_class", x.region_class);
  v("fronthaul_tech", x.fronthaul_tech); v("split", x.split); v("served_cell_sites", x.served_cell_sites);
  v("served_rus", x.served_rus); v("du_vnfd_ref", x.du_vnfd_ref); v("du_flavor_id", x.du_flavor_id);
  v("il_subset_id", x.il_subset_id); v("host_pop", x.host_pop); v("offered_load_mbps", x.offered_load_mbps);
}
template <class V, Is<CuPlan> S> void fields(V& v, S& x) {
  v("host_pop", x.host_pop); v("cu_vnfd_ref", x.cu_vnfd_ref); v("cu_flavor_id", x.cu_flavor_id); v("il_subset_id", x.il_subset_id);
}
template <class V, Is<GnbPlan> S> void fields(V& v, S& x) {
  v("gnb_id", x.gnb_id); v("cu", x.cu); v("dus", x.dus); v("nsd_ref", x.nsd_ref);
  v("nsd_flavor_id", x.nsd_flavor_id); v("nsd_il_subset_id", x.nsd_il_subset_id);
}
template <class V, Is<RegionLoad> S> void fields(V& v, S& x) { v("region_id", x.region_id); v("peak_load_mbps", x.peak_load_mbps); }
template <class V, Is<SlicePlan> S> void fields(V& v, S& x) {
  v("s_nssai", x.s_nssai); v("nsst_ref", x.nsst_ref); v("nsst", x.nsst); v("nsd_flavor_id", x.nsd_flavor_id);
  v("gnbs", x.gnbs); v("selected_rus", x.selected_rus); v("offered_load", x.offered_load);
}
template <class V, Is<SliceRequest> S> void fields(V& v, S& x) { v("sst", x.sst); v("sd", x.sd); v("requirements", x.requirements); }
// clang-format on

[[noreturn]] inline void shape_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ShapeMismatch, (path.empty() ? std::string("/") : path) + ": " + what);
}

// ---------------------------------------------------------------------------
// encode

json encode(const std::string& s);
json encode(int v);
json encode(double v);
json encode(Sst v);
template <Enum E>
json encode(E v);
template <class T>
json encode(const std::vector<T>& items);
template <class T>
  requires(!Enum<T> && !is_vector<T>::value)
json encode(const T& value);

inline json encode(const std::string& s) { return s; }
inline json encode(int v) { return v; }
inline json encode(double v) { return v; }
inline json encode(Sst v) { return static_cast<int>(v); }

template <Enum E>
json encode(E v) {
  return std::string(to_string(v));
}

template <class T>
json encode(const std::vector<T>& items) {
  json out = json::array();
  for (const auto& item : items) out.push_back(encode(item));
  return out;
}

struct Writer {
  json& out;

  template <class T>
  void operator()(const char* key, const T& member) {
    if constexpr (is_optional<T>::value) {
      if (member) out[key] = encode(*member);
    } else {
      out[key] = encode(member);
    }
  }
};

template <class T>
  requires(!Enum<T> && !is_vector<T>::value)
json encode(const T& value) {
  json out = json::object();
  Writer w{out};
  fields(w, value);
  return out;
}

// ---------------------------------------------------------------------------
// decode

inline void decode(const json& j, const std::string& path, std::string& out) {
  if (!j.is_string()) shape_error(path, "expected a string");
  out = j.get<std::string>();
}

inline void decode(const json& j, const std::string& path, int& out) {
  if (!j.is_number_integer()) shape_error(path, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) shape_error(path, "integer out of range");
  out = static_cast<int>(v);
}

inline void decode(const json& j, const std::string& path, double& out) {
  if (!j.is_number()) shape_error(path, "expected a number");
  out = j.get<double>();
}

inline void decode(const json& j, const std::string& path, Sst& out) {
  int v = 0;
  decode(j, path, v);
  if (v < 1 || v > 3) shape_error(path, "SST must be 1, 2 or 3");
  out = static_cast<Sst>(v);
}

template <Enum E>
void decode(const json& j, const std::string& path, E& out) {
  if (!j.is_string()) shape_error(path, "expected an enumeration name");
  const auto v = enum_from_string<E>(j.get<std::string>());
  if (!v) shape_error(path, "unknown value '" + j.get<std::string>() + "'");
  out = *v;
}

template <class T>
void decode(const json& j, const std::string& path, std::vector<T>& out);

template <class T>
  requires(!Enum<T> && !is_vector<T>::value)
void decode(const json& j, const std::string& path, T& out);

template <class T>
void decode(const json& j, const std::string& path, std::vector<T>& out) {
  if (!j.is_array()) shape_error(path, "expected an array");
  out.clear();
  for (std::size_t i = 0; i < j.size(); ++i) {
    T item{};
    decode(j[i], path + "/" + std::to_string(i), item);
    out.push_back(std::move(item));
  }
}

struct Reader {
  const json& in;
  const std::string& path;
  std::set<std::string> seen;

  template <class T>
  void operator()(const char* key, T& member) {
    seen.insert(key);
    const std::string child = path + "/" + key;
    auto it = in.find(key);
    if constexpr (is_optional<T>::value) {
      if (it == in.end()) {
        member.reset();
      } else {
        typename T::value_type value{};
        decode(*it, child, value);
        member = std::move(value);
      }
    } else {
      if (it == in.end()) shape_error(child, "missing required field");
      decode(*it, child, member);
    }
  }
};

template <class T>
  requires(!Enum<T> && !is_vector<T>::value)
void decode(const json& j, const std::string& path, T& out) {
  if (!j.is_object()) shape_error(path, "expected an object");
  Reader r{j, path, {}};
  fields(r, out);
  for (const auto& [key, value] : j.items()) {
    if (!r.seen.contains(key)) shape_error(path + "/" + key, "unknown field");
  }
}

}  // namespace codec

template <class T>
json to_json_value(const T& value) {
  return codec::encode(value);
}

template <class T>
T from_json_value(const json& j, const std::string& path = {}) {
  T out{};
  codec::decode(j, path, out);
  return out;
}

}  // namespace ranslice
