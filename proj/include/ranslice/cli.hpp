#pragma once

// Command-line front end. Exit codes: 0 success, 1 validation/planning error
// (diagnostic on the error stream), 2 usage error.

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ranslice/builtin_catalog.hpp"
#include "ranslice/bundle.hpp"
#include "ranslice/documents.hpp"
#include "ranslice/reference_example.hpp"
#include "ranslice/validation.hpp"

namespace ranslice {

// Path arguments that name built-in documents instead of files.
inline constexpr std::string_view kBuiltinCatalogPath = "builtin";
inline constexpr std::string_view kReferenceTopologyPath = "reference";

namespace cli {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline DocumentEnvelope load_document(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.stage());
  }
}

template <class T>
T load_body(const std::string& path, DocumentKind kind) {
  const auto env = load_document(path);
  try {
    return expect_body<T>(env, kind);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

inline Catalog load_catalog(const std::string& path) {
  return path == kBuiltinCatalogPath ? builtin_catalog() : load_body<Catalog>(path, DocumentKind::Catalog);
}

inline DeploymentArea load_topology(const std::string& path) {
  return path == kReferenceTopologyPath ? reference_area() : load_body<DeploymentArea>(path, DocumentKind::Topology);
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file_atomic(out_path, text);
  }
}

inline void print_report(const ValidationReport& report, std::ostream& err) {
  for (const auto& v : report) err << v.document_id << " " << v.path << " [" << v.rule_id << "] " << v.message << "\n";
}

// Options every subcommand accepts.
struct CommonOptions {
  std::optional<std::uint64_t> seed;
  std::string config_path;
};

inline void add_common(CLI::App& cmd, CommonOptions& common) {
  cmd.add_option("--seed", common.seed, "Seed for randomized steps (planning is deterministic)");
  cmd.add_option("--config", common.config_path, "PLANNER_CONFIG document");
}

inline PlannerConfig load_config(const CommonOptions& common) {
  if (common.config_path.empty()) return {};
  return load_body<PlannerConfig>(common.config_path, DocumentKind::PlannerConfig);
}

}  // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"RAN slice descriptor compiler and deployment planner", "ranslice"};
  app.require_subcommand(1);
  cli::CommonOptions common;
  cli::add_common(app, common);

  std::string catalog_path;
  std::string topology_path;
  std::string request_path;
  std::string plan_path;
  std::string policy_path;
  std::string out_path;
  std::string out_dir;

  auto* validate = app.add_subcommand("validate", "Validate a catalog, optionally against a topology");
  validate->add_option("catalog", catalog_path, "CATALOG document or 'builtin'")->required();
  validate->add_option("topology", topology_path, "TOPOLOGY document or 'reference'");
  cli::add_common(*validate, common);

  auto* plan = app.add_subcommand("plan", "Plan a slice and write a SLICE_PLAN document");
  plan->add_option("request", request_path, "SLICE_REQUEST document")->required();
  plan->add_option("topology", topology_path, "TOPOLOGY document or 'reference'")->required();
  plan->add_option("catalog", catalog_path, "CATALOG document or 'builtin'")->required();
  plan->add_option("--policy", policy_path, "PROFILER_POLICY document");
  plan->add_option("--out", out_path, "Output file (default: stdout)");
  cli::add_common(*plan, common);

  auto* emit = app.add_subcommand("emit", "Write the onboarding bundle for a plan");
  emit->add_option("plan", plan_path, "SLICE_PLAN document")->required();
  emit->add_option("catalog", catalog_path, "CATALOG document or 'builtin'")->required();
  emit->add_option("--out-dir", out_dir, "Bundle directory")->required();
  cli::add_common(*emit, common);

  auto* example = app.add_subcommand("paper-example", "Plan the three reference slices and compare with the expected table");
  cli::add_common(*example, common);

  auto* export_builtin = app.add_subcommand("export-builtin", "Write the builtin catalog, reference topology and requests");
  export_builtin->add_option("dir", out_dir, "Output directory")->required();
  cli::add_common(*export_builtin, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    // A bad --config is reported by every subcommand, not only by plan.
    const auto config = cli::load_config(common);

    if (validate->parsed()) {
      const auto catalog = cli::load_catalog(catalog_path);
      ValidationReport report;
      if (topology_path.empty()) {
        report = validate_catalog(catalog);
      } else {
        const auto area = cli::load_topology(topology_path);
        report = validate_area(area);
        const auto more = validate_catalog(catalog, &area);
        report.insert(report.end(), more.begin(), more.end());
      }
      cli::print_report(report, err);
      out << (report.empty() ? "valid\n" : std::to_string(report.size()) + " violation(s)\n");
      return report.empty() ? 0 : 1;
    }

    if (plan->parsed()) {
      const auto request = cli::load_body<SliceRequest>(request_path, DocumentKind::SliceRequest);
      const auto area = cli::load_topology(topology_path);
      const auto catalog = cli::load_catalog(catalog_path);
      const auto policy = policy_path.empty()
                              ? ProfilerPolicy::defaults()
                              : cli::load_body<ProfilerPolicy>(policy_path, DocumentKind::ProfilerPolicy);
      auto result = plan_slice(request.requirements, request.sst, area, catalog, config, policy);
      result.s_nssai.sd = request.sd;
      result.nsst.s_nssai.sd = request.sd;
      cli::emit(serialize_document(make_document(std::move(result))), out_path, out);
      return 0;
    }

    if (emit->parsed()) {
      const auto slice_plan = cli::load_body<SlicePlan>(plan_path, DocumentKind::SlicePlan);
      const auto catalog = cli::load_catalog(catalog_path);
      const auto bundle = emit_onboarding_bundle(slice_plan, catalog);
      write_bundle(bundle, out_dir);
      for (const auto& f : bundle.files) out << (std::filesystem::path(out_dir) / f.name).string() << "\n";
      return 0;
    }

    if (example->parsed()) {
      const auto report = run_reference_example();
      out << report.text;
      return report.passed() ? 0 : 1;
    }

    if (export_builtin->parsed()) {
      std::filesystem::create_directories(out_dir);
      const std::filesystem::path dir(out_dir);
      write_file_atomic(dir / "catalog.json", serialize_document(make_document(builtin_catalog())));
      write_file_atomic(dir / "topology.json", serialize_document(make_document(reference_area())));
      write_file_atomic(dir / "profiler-policy.json", serialize_document(make_document(ProfilerPolicy::defaults())));
      write_file_atomic(dir / "planner-config.json", serialize_document(make_document(PlannerConfig{})));
      for (const auto& slice : reference_slices()) {
        const auto name = "request-" + detail::lower(slice.name) + ".json";
        write_file_atomic(dir / name, serialize_document(make_document(SliceRequest{slice.sst, {}, slice.requirements})));
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error";
    if (!e.stage().empty()) err << " [" << e.stage() << "]";
    err << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace ranslice
