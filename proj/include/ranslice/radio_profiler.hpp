#pragma once

// Slice requirements -> radio configuration of a RAN NSST. Every selector is
// driven by a table in ProfilerPolicy; the defaults reproduce the eMBB, mMTC
// and uRLLC reference slices.

#include <algorithm>
#include <cctype>
#include <tuple>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ranslice/descriptors.hpp"
#include "ranslice/error.hpp"
#include "ranslice/validation.hpp"

namespace ranslice {

/// Lowest latency a numerology can deliver. A request of `latency_ms` can use
/// every tier whose `achievable_latency_ms` does not exceed it.
struct LatencyTier {
  double achievable_latency_ms = 0;
  int mu = 0;

  bool operator==(const LatencyTier&) const = default;
};

/// Slot format chosen for DL/UL ratios in [min_dl_ul_ratio, max_dl_ul_ratio).
/// An unset maximum means unbounded (and includes DL-only traffic).
struct SlotFormatEntry {
  double min_dl_ul_ratio = 0;
  std::optional<double> max_dl_ul_ratio;
  int slot_format_id = 0;
  int dl_symbols = 0;
  int ul_symbols = 0;
  int flexible_symbols = 0;

  bool contains(double ratio) const {
    return ratio >= min_dl_ul_ratio && (!max_dl_ul_ratio || ratio < *max_dl_ul_ratio);
  }
  bool operator==(const SlotFormatEntry&) const = default;
};

/// Cell-demand model behind the carrier bandwidth:
///   active = min(density * reference_cell_area * activity_factor, max_concurrent_ues_per_cell)
///   bandwidth_mhz = active * max(dl, ul) / spectral_efficiency
struct BandwidthPolicy {
  double reference_cell_area_km2 = 0.1;
  double activity_factor = 0.1;
  double spectral_efficiency_bps_per_hz = 10.0;
  double max_concurrent_ues_per_cell = 100.0;

  bool operator==(const BandwidthPolicy&) const = default;
};

struct ProfilerPolicy {
  std::vector<LatencyTier> latency_tiers;
  double mobility_uplift_kmh = 200.0;
  std::vector<SlotFormatEntry> slot_formats;
  std::vector<FiveQi> fiveqi_table;
  int high_priority_max_level = 20;    // priority levels <= this are HIGH
  int medium_priority_max_level = 55;  // (HIGH, this] are MEDIUM, above is LOW
  double mcs_threshold_mbps = 100.0;
  BandwidthPolicy bandwidth;
  double semi_persistent_max_mbps = 1.0;
  double guaranteed_delay_max_latency_ms = 5.0;

  static ProfilerPolicy defaults() {
    ProfilerPolicy p;
    p.latency_tiers = {{2.0, 3}, {5.0, 2}, {20.0, 1}, {100.0, 0}};
    p.slot_formats = {
        {0.0, 0.5, 10, 0, 13, 1},
        {0.5, 2.0, 45, 6, 6, 2},
        {2.0, std::nullopt, 28, 12, 1, 1},
    };
    p.fiveqi_table = {
        {1, 20, 100.0, 1e-2}, {4, 50, 300.0, 1e-6},  {9, 90, 300.0, 1e-6},
        {80, 66, 10.0, 1e-6}, {81, 11, 5.0, 1e-5},   {82, 19, 10.0, 1e-4},
    };
    return p;
  }

  const SlotFormatEntry* find_slot_format(int id) const {
    for (const auto& e : slot_formats) {
      if (e.slot_format_id == id) return &e;
    }
    return nullptr;
  }
  bool operator==(const ProfilerPolicy&) const = default;
};

/// Table-shape checks; the selectors assume a policy that passes them.
inline ValidationReport validate_policy(const ProfilerPolicy& policy, const std::string& doc = "profiler-policy") {
  detail::Reporter out;
  const auto bad = [&](std::string path, std::string message) {
    out.add(doc, std::move(path), "policy-invalid", std::move(message));
  };
  if (policy.latency_tiers.empty()) bad("latency_tiers", "at least one latency tier is required");
  for (std::size_t i = 0; i < policy.latency_tiers.size(); ++i) {
    const auto& t = policy.latency_tiers[i];
    if (!(t.achievable_latency_ms > 0) || t.mu < 0 || t.mu > 3) {
      bad(detail::idx("latency_tiers", i), "tier needs positive latency and mu in 0..3");
    }
    if (i > 0) {
      const auto& prev = policy.latency_tiers[i - 1];
      if (!(prev.achievable_latency_ms < t.achievable_latency_ms) || !(prev.mu > t.mu)) {
        bad(detail::idx("latency_tiers", i), "latency must increase and mu decrease along the list");
      }
    }
  }
  if (policy.slot_formats.empty() || policy.slot_formats.front().min_dl_ul_ratio != 0.0 ||
      policy.slot_formats.back().max_dl_ul_ratio.has_value()) {
    bad("slot_formats", "intervals must start at 0 and end unbounded");
  }
  for (std::size_t i = 0; i < policy.slot_formats.size(); ++i) {
    const auto& e = policy.slot_formats[i];
    if (e.max_dl_ul_ratio && !(*e.max_dl_ul_ratio > e.min_dl_ul_ratio)) {
      bad(detail::idx("slot_formats", i), "empty ratio interval");
    }
    if (i + 1 < policy.slot_formats.size() &&
        (!e.max_dl_ul_ratio || *e.max_dl_ul_ratio != policy.slot_formats[i + 1].min_dl_ul_ratio)) {
      bad(detail::idx("slot_formats", i), "ratio intervals must be contiguous and disjoint");
    }
    if (e.dl_symbols < 0 || e.ul_symbols < 0 || e.flexible_symbols < 0 ||
        e.dl_symbols + e.ul_symbols + e.flexible_symbols != 14) {
      bad(detail::idx("slot_formats", i), "a slot carries 14 OFDM symbols");
    }
  }
  if (policy.fiveqi_table.empty()) bad("fiveqi_table", "at least one 5QI is required");
  for (std::size_t i = 0; i < policy.fiveqi_table.size(); ++i) {
    const auto& q = policy.fiveqi_table[i];
    if (q.id <= 0 || q.priority_level <= 0 || !(q.packet_delay_budget_ms > 0) ||
        !(q.packet_error_rate > 0 && q.packet_error_rate < 1)) {
      bad(detail::idx("fiveqi_table", i), "5QI fields must be positive with PER in (0,1)");
    }
  }
  const auto& bw = policy.bandwidth;
  if (!(bw.reference_cell_area_km2 > 0) || !(bw.activity_factor > 0 && bw.activity_factor <= 1) ||
      !(bw.spectral_efficiency_bps_per_hz > 0) || !(bw.max_concurrent_ues_per_cell > 0)) {
    bad("bandwidth", "bandwidth model constants must be positive (activity in (0,1])");
  }
  if (!(policy.mcs_threshold_mbps > 0)) bad("mcs_threshold_mbps", "must be positive");
  if (policy.high_priority_max_level >= policy.medium_priority_max_level) {
    bad("high_priority_max_level", "priority class bands must be ordered");
  }
  return out.take();
}

/// Smallest numerology meeting `latency_ms`, raised one step for UEs faster
/// than the mobility threshold (capped at 3).
inline int select_numerology(double latency_ms, double max_mobility_kmh, const ProfilerPolicy& policy) {
  if (!(latency_ms > 0)) throw Error(ErrorCode::InvalidRequest, "latency_ms must be positive");
  std::optional<int> mu;
  for (const auto& tier : policy.latency_tiers) {
    if (tier.achievable_latency_ms <= latency_ms && (!mu || tier.mu < *mu)) mu = tier.mu;
  }
  if (!mu) {
    throw Error(ErrorCode::UnsatisfiableLatency,
                "latency " + std::to_string(latency_ms) + " ms is below what any numerology achieves");
  }
  if (max_mobility_kmh > policy.mobility_uplift_kmh) mu = std::min(*mu + 1, 3);
  return *mu;
}

inline double carrier_demand_mhz(double throughput_dl_mbps, double throughput_ul_mbps, double ue_density_per_km2,
                                 const BandwidthPolicy& bw) {
  const double active_ues = std::min(ue_density_per_km2 * bw.reference_cell_area_km2 * bw.activity_factor,
                                     bw.max_concurrent_ues_per_cell);
  const double cell_mbps = active_ues * std::max(throughput_dl_mbps, throughput_ul_mbps);
  return cell_mbps / bw.spectral_efficiency_bps_per_hz;
}

inline std::vector<Band> select_operation_bands(double throughput_dl_mbps, double throughput_ul_mbps,
                                                double ue_density_per_km2, int mu,
                                                const ProfilerPolicy& policy = ProfilerPolicy::defaults()) {
  if (mu < 0 || mu > 3) throw Error(ErrorCode::InvalidRequest, "numerology must be 0..3");
  if (!(throughput_dl_mbps > 0 || throughput_ul_mbps > 0)) {
    throw Error(ErrorCode::InvalidRequest, "one throughput must be positive");
  }
  const double demand = carrier_demand_mhz(throughput_dl_mbps, throughput_ul_mbps, ue_density_per_km2, policy.bandwidth);
  std::vector<Band> bands;
  if (mu != 3) bands.push_back({BandRange::Sub6, std::clamp(demand, 5.0, 100.0)});
  if (mu != 0) bands.push_back({BandRange::MmWave, std::clamp(demand, 5.0, 400.0)});
  return bands;
}

inline const SlotFormatEntry& select_slot_format_entry(double throughput_dl_mbps, double throughput_ul_mbps,
                                                       const ProfilerPolicy& policy) {
  if (!(throughput_dl_mbps > 0 || throughput_ul_mbps > 0)) {
    throw Error(ErrorCode::InvalidRequest, "one throughput must be positive");
  }
  const double ratio = throughput_ul_mbps > 0 ? throughput_dl_mbps / throughput_ul_mbps
                                              : std::numeric_limits<double>::infinity();
  for (const auto& entry : policy.slot_formats) {
    if (entry.contains(ratio)) return entry;
  }
  throw Error(ErrorCode::InvalidPolicy, "no slot format covers DL/UL ratio " + std::to_string(ratio));
}

inline int select_slot_format(double throughput_dl_mbps, double throughput_ul_mbps, const ProfilerPolicy& policy) {
  return select_slot_format_entry(throughput_dl_mbps, throughput_ul_mbps, policy).slot_format_id;
}

inline Priority priority_class_of(int priority_level, const ProfilerPolicy& policy) {
  if (priority_level <= policy.high_priority_max_level) return Priority::High;
  if (priority_level <= policy.medium_priority_max_level) return Priority::Medium;
  return Priority::Low;
}

/// 5QI with the largest delay budget within `latency_ms` that meets the
/// reliability target. Ties prefer the requested priority class, then the
/// lowest priority level, then the lowest 5QI id.
inline FiveQi select_5qi(double latency_ms, std::optional<double> reliability_pct, Priority priority,
                         const ProfilerPolicy& policy) {
  if (!(latency_ms > 0)) throw Error(ErrorCode::InvalidRequest, "latency_ms must be positive");
  const double max_per = reliability_pct ? (1.0 - *reliability_pct / 100.0) * (1.0 + 1e-9) : 1.0;

  const FiveQi* best = nullptr;
  auto rank = [&](const FiveQi& q) {
    return std::tuple(-q.packet_delay_budget_ms, priority_class_of(q.priority_level, policy) == priority ? 0 : 1,
                      q.priority_level, q.id);
  };
  for (const auto& q : policy.fiveqi_table) {
    if (q.packet_delay_budget_ms > latency_ms || q.packet_error_rate > max_per) continue;
    if (best == nullptr || rank(q) < rank(*best)) best = &q;
  }
  if (best == nullptr) {
    throw Error(ErrorCode::NoMatching5qi, "no 5QI meets a delay budget of " + std::to_string(latency_ms) + " ms");
  }
  return *best;
}

inline McsSet select_mcs_set(double throughput_dl_mbps, const ProfilerPolicy& policy) {
  return throughput_dl_mbps >= policy.mcs_threshold_mbps ? McsSet::Extended256Qam : McsSet::LteCompatible;
}

inline SchedulerPolicy select_scheduler(const SliceRequirements& req, const ProfilerPolicy& policy) {
  const double hi = std::max(req.throughput_dl_mbps, req.throughput_ul_mbps);
  const double lo = std::min(req.throughput_dl_mbps, req.throughput_ul_mbps);
  const bool stationary = req.max_mobility_kmh == 0.0;
  const bool symmetric = hi > 0 && lo / hi >= 0.5;
  if (stationary && symmetric && hi < policy.semi_persistent_max_mbps) return SchedulerPolicy::SemiPersistent;
  if (req.latency_ms <= policy.guaranteed_delay_max_latency_ms) return SchedulerPolicy::DynamicGuaranteedDelay;
  return SchedulerPolicy::DynamicGuaranteedThroughput;
}

inline std::string default_nsst_id(Sst sst) {
  std::string id = "nsst-";
  for (char c : to_string(sst)) id.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return id;
}

inline RanNsst build_ran_nsst(const SliceRequirements& req, Sst sst, const std::string& nsd_ref,
                              const ProfilerPolicy& policy, std::string nsst_id = {}) {
  if (auto report = validate_requirements(req, "request"); !report.empty()) {
    throw Error(ErrorCode::InvalidRequest, report.front().message);
  }
  RanNsst nsst;
  nsst.nsst_id = nsst_id.empty() ? default_nsst_id(sst) : std::move(nsst_id);
  nsst.s_nssai.sst = sst;
  nsst.nsd_ref = nsd_ref;
  nsst.requirement_profile = req;

  auto& rc = nsst.radio_config;
  rc.numerology_mu = select_numerology(req.latency_ms, req.max_mobility_kmh, policy);
  rc.bands = select_operation_bands(req.throughput_dl_mbps, req.throughput_ul_mbps, req.ue_density_per_km2,
                                    rc.numerology_mu, policy);
  rc.slot_format_id = select_slot_format(req.throughput_dl_mbps, req.throughput_ul_mbps, policy);
  rc.five_qi = select_5qi(req.latency_ms, req.reliability_pct, req.priority, policy);
  rc.mcs_set = select_mcs_set(req.throughput_dl_mbps, policy);
  rc.scheduler_policy = select_scheduler(req, policy);
  return nsst;
}

}  // namespace ranslice
