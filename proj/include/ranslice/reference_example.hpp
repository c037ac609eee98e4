#pragma once

// Runs the three reference slices (eMBB, mMTC, uRLLC) against the builtin
// catalog and reference area and renders a parameter-by-slice comparison,
// checking each cell against the expected configuration.

#include <algorithm>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ranslice/builtin_catalog.hpp"
#include "ranslice/slice_planner.hpp"

namespace ranslice {

struct ExampleCheck {
  std::string slice;
  std::string parameter;
  std::string expected;
  std::string actual;

  bool passed() const { return expected == actual; }
};

struct ExampleReport {
  std::string text;
  std::vector<ExampleCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.passed(); });
  }
};

namespace detail {

struct ExampleColumn {
  std::string slice;
  std::vector<std::string> cells;  // one per row; "" when the slice failed to plan
};

inline std::string format_bands(const std::vector<Band>& bands) {
  std::vector<std::string> parts;
  for (const auto& b : bands) parts.push_back(fmt::format("{} {:g} MHz", to_string(b.range), b.carrier_bandwidth_mhz));
  return fmt::format("{}", fmt::join(parts, " + "));
}

inline std::string format_5qi(const FiveQi& q) {
  return fmt::format("5QI={} (prio {}, PDB {:g} ms, PER {:.0e})", q.id, q.priority_level, q.packet_delay_budget_ms,
                     q.packet_error_rate);
}

inline std::string format_slot(const ProfilerPolicy& policy, int slot_format_id) {
  if (const auto* e = policy.find_slot_format(slot_format_id)) {
    return fmt::format("#{} ({}D/{}U/{}F)", e->slot_format_id, e->dl_symbols, e->ul_symbols, e->flexible_symbols);
  }
  return fmt::format("#{}", slot_format_id);
}

inline std::string format_regions(const SlicePlan& plan, const DeploymentArea& area) {
  std::vector<std::string> regions;
  for (const auto& id : plan.selected_rus) {
    for (const auto& ru : area.rus) {
      if (ru.ru_id == id && std::find(regions.begin(), regions.end(), ru.region_id) == regions.end()) {
        regions.push_back(ru.region_id);
      }
    }
  }
  std::sort(regions.begin(), regions.end());
  return fmt::format("{} ({} RUs)", fmt::join(regions, ","), plan.selected_rus.size());
}

inline std::string format_key(const Catalog& catalog, const GnbPlan& gnb) {
  const auto* nsd = catalog.find_nsd(gnb.nsd_ref);
  const auto* flavor = nsd ? nsd->find_flavor(gnb.nsd_flavor_id) : nullptr;
  const auto* subset = flavor ? flavor->find_subset(gnb.nsd_il_subset_id) : nullptr;
  if (!subset) return "?";
  // Count runs in the plan's DU order so the key reads region by region.
  std::vector<std::pair<std::string, int>> runs;
  for (const auto& du : gnb.dus) {
    auto label = fmt::format("{}/{}", du.region_class, to_string(du.fronthaul_tech));
    if (!runs.empty() && runs.back().first == label) {
      ++runs.back().second;
    } else {
      runs.emplace_back(std::move(label), 1);
    }
  }
  std::vector<std::string> parts;
  for (const auto& [label, n] : runs) parts.push_back(n == 1 ? label : fmt::format("{}x {}", n, label));
  return fmt::format("{}", fmt::join(parts, " + "));
}

inline const std::vector<std::string>& example_rows() {
  static const std::vector<std::string> rows = {
      "Numerology",         "Operation bands", "Slot format",  "5QI",
      "MCS set",            "Scheduler",       "RUs selected", "gNBs",
      "gNB NSD flavor",     "gNB IL subset key",
  };
  return rows;
}

// Expected cells per slice, in row order. The gNB count is reported but has
// no fixed expectation.
inline std::vector<std::string> expected_cells(Sst sst) {
  switch (sst) {
    case Sst::Embb:
      return {"mu=2",
              "SUB6_450_6000 100 MHz + MMWAVE_24250_52600 400 MHz",
              "#28 (12D/1U/1F)",
              "5QI=80 (prio 66, PDB 10 ms, PER 1e-06)",
              "EXTENDED_256QAM",
              "DYNAMIC_GUARANTEED_THROUGHPUT",
              "region-3 (8 RUs)",
              "",
              "#2 (ECPRI)",
              "4x CITY_CENTER/ECPRI"};
    case Sst::Mmtc:
      return {"mu=0",
              "SUB6_450_6000 5 MHz",
              "#45 (6D/6U/2F)",
              "5QI=4 (prio 50, PDB 300 ms, PER 1e-06)",
              "LTE_COMPATIBLE",
              "SEMI_PERSISTENT",
              "region-1,region-2,region-3 (18 RUs)",
              "",
              "#3 (CPRI+ECPRI)",
              "INDUSTRIAL/ECPRI + SUBURBAN/CPRI + CITY_CENTER/ECPRI"};
    case Sst::Urllc:
      return {"mu=3",
              "MMWAVE_24250_52600 5 MHz",
              "#10 (0D/13U/1F)",
              "5QI=81 (prio 11, PDB 5 ms, PER 1e-05)",
              "LTE_COMPATIBLE",
              "DYNAMIC_GUARANTEED_DELAY",
              "region-2 (6 RUs)",
              "",
              "#1 (CPRI)",
              "SUBURBAN/CPRI"};
  }
  return {};
}

inline std::string flavor_label(int flavor_id) {
  switch (flavor_id) {
    case 1: return "#1 (CPRI)";
    case 2: return "#2 (ECPRI)";
    case 3: return "#3 (CPRI+ECPRI)";
  }
  return fmt::format("#{}", flavor_id);
}

inline std::vector<std::string> actual_cells(const SlicePlan& plan, const DeploymentArea& area, const Catalog& catalog,
                                             const ProfilerPolicy& policy) {
  const auto& rc = plan.nsst.radio_config;
  std::vector<std::string> keys;
  for (const auto& gnb : plan.gnbs) keys.push_back(format_key(catalog, gnb));
  return {fmt::format("mu={}", rc.numerology_mu),
          format_bands(rc.bands),
          format_slot(policy, rc.slot_format_id),
          format_5qi(rc.five_qi),
          std::string(to_string(rc.mcs_set)),
          std::string(to_string(rc.scheduler_policy)),
          format_regions(plan, area),
          std::to_string(plan.gnbs.size()),
          flavor_label(plan.nsd_flavor_id),
          fmt::format("{}", fmt::join(keys, " | "))};
}

}  // namespace detail

inline ExampleReport run_reference_example() {
  const auto catalog = builtin_catalog();
  const auto area = reference_area();
  const auto policy = ProfilerPolicy::defaults();
  const auto& rows = detail::example_rows();

  ExampleReport report;
  std::vector<detail::ExampleColumn> columns;
  std::vector<std::string> errors;
  for (const auto& slice : reference_slices()) {
    detail::ExampleColumn column{slice.name, std::vector<std::string>(rows.size())};
    const auto expected = detail::expected_cells(slice.sst);
    try {
      const auto plan = plan_slice(slice.requirements, slice.sst, area, catalog, PlannerConfig{}, policy);
      column.cells = detail::actual_cells(plan, area, catalog, policy);
    } catch (const Error& e) {
      errors.push_back(fmt::format("{}: {}", slice.name, e.what()));
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (expected[r].empty()) continue;
      report.checks.push_back({slice.name, rows[r], expected[r], column.cells[r]});
    }
    columns.push_back(std::move(column));
  }

  std::size_t label_width = 0;
  for (const auto& r : rows) label_width = std::max(label_width, r.size());
  std::vector<std::size_t> widths;
  for (const auto& c : columns) {
    std::size_t w = c.slice.size();
    for (const auto& cell : c.cells) w = std::max(w, cell.size());
    widths.push_back(w);
  }

  auto line = [&](const std::string& label, auto cell_of) {
    std::string out = fmt::format("{:<{}}", label, label_width);
    for (std::size_t i = 0; i < columns.size(); ++i) out += fmt::format(" | {:<{}}", cell_of(i), widths[i]);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  auto rule = [&] {
    std::string out(label_width, '-');
    for (auto w : widths) out += "-+-" + std::string(w, '-');
    return out + "\n";
  };

  std::string& text = report.text;
  text += line("Parameter", [&](std::size_t i) { return columns[i].slice; });
  text += rule();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    text += line(rows[r], [&](std::size_t i) { return columns[i].cells[r]; });
  }
  text += "\n";
  for (const auto& e : errors) text += fmt::format("ERROR {}\n", e);
  for (const auto& c : report.checks) {
    if (c.passed()) {
      text += fmt::format("PASS {} {}\n", c.slice, c.parameter);
    } else {
      text += fmt::format("FAIL {} {}: expected '{}', got '{}'\n", c.slice, c.parameter, c.expected, c.actual);
    }
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](const auto& c) { return !c.passed(); });
  text += fmt::format("{} checks, {} failed: {}\n", report.checks.size(), failed, report.passed() ? "OK" : "MISMATCH");
  return report;
}

}  // namespace ranslice
