#pragma once

// Onboarding bundle handed to an orchestrator: the NSD, VNFD excerpts limited
// to the selected flavors and IL subsets, the RU PNFD list, the selected
// flavor/IL manifest and the radio configuration manifest.

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ranslice/codec.hpp"
#include "ranslice/descriptors.hpp"
#include "ranslice/error.hpp"
#include "ranslice/slice_planner.hpp"

namespace ranslice {

struct BundleFile {
  std::string name;
  std::string content;

  bool operator==(const BundleFile&) const = default;
};

struct OnboardingBundle {
  json manifest;
  json configuration;
  std::vector<BundleFile> files;  // sorted by name
};

/// Writes `content` to `path` via a sibling temporary file and rename.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename into " + path.string());
  }
}

namespace detail {

[[noreturn]] inline void dangling(const std::string& what) { throw Error(ErrorCode::DanglingPlanReference, what); }

// Collects the flavors and IL subsets a plan uses from one VNFD.
template <class Subset>
struct VnfUsage {
  std::map<int, std::set<std::string>> subsets_by_flavor;

  void note(const VnfDescriptor<Subset>& vnfd, int flavor_id, const std::string& subset_id) {
    const auto* flavor = vnfd.find_flavor(flavor_id);
    if (!flavor) dangling(vnfd.descriptor_id + " has no flavor " + std::to_string(flavor_id));
    if (!flavor->find_subset(subset_id)) {
      dangling(vnfd.descriptor_id + " flavor " + std::to_string(flavor_id) + " has no IL subset " + subset_id);
    }
    subsets_by_flavor[flavor_id].insert(subset_id);
  }

  VnfDescriptor<Subset> excerpt(const VnfDescriptor<Subset>& vnfd) const {
    VnfDescriptor<Subset> out{vnfd.descriptor_id, {}};
    for (const auto& [flavor_id, subset_ids] : subsets_by_flavor) {
      auto flavor = *vnfd.find_flavor(flavor_id);
      std::erase_if(flavor.il_subsets, [&](const Subset& s) { return !subset_ids.contains(s.subset_id); });
      out.flavors.push_back(std::move(flavor));
    }
    return out;
  }
};

inline std::string document_text(const json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

inline OnboardingBundle emit_onboarding_bundle(const SlicePlan& plan, const Catalog& catalog) {
  std::map<std::string, detail::VnfUsage<CuIlSubset>> cu_usage;
  std::map<std::string, detail::VnfUsage<DuIlSubset>> du_usage;
  std::map<std::string, std::map<int, std::set<std::string>>> nsd_usage;

  json gnbs = json::array();
  for (const auto& gnb : plan.gnbs) {
    const auto* nsd = catalog.find_nsd(gnb.nsd_ref);
    if (!nsd) detail::dangling("NSD " + gnb.nsd_ref + " is not in the catalog");
    const auto* flavor = nsd->find_flavor(gnb.nsd_flavor_id);
    if (!flavor) detail::dangling(gnb.nsd_ref + " has no flavor " + std::to_string(gnb.nsd_flavor_id));
    const auto* subset = flavor->find_subset(gnb.nsd_il_subset_id);
    if (!subset) detail::dangling(gnb.nsd_ref + " has no IL subset " + gnb.nsd_il_subset_id);
    nsd_usage[gnb.nsd_ref][gnb.nsd_flavor_id].insert(gnb.nsd_il_subset_id);

    const auto* cu_vnfd = catalog.find_cu_vnfd(gnb.cu.cu_vnfd_ref);
    if (!cu_vnfd) detail::dangling("CU VNFD " + gnb.cu.cu_vnfd_ref + " is not in the catalog");
    cu_usage[cu_vnfd->descriptor_id].note(*cu_vnfd, gnb.cu.cu_flavor_id, gnb.cu.il_subset_id);

    json dus = json::array();
    json rus = json::array();
    for (const auto& du : gnb.dus) {
      const auto* du_vnfd = catalog.find_du_vnfd(du.du_vnfd_ref);
      if (!du_vnfd) detail::dangling("DU VNFD " + du.du_vnfd_ref + " is not in the catalog");
      du_usage[du_vnfd->descriptor_id].note(*du_vnfd, du.du_flavor_id, du.il_subset_id);
      for (const auto& ru : du.served_rus) {
        if (!catalog.find_ru(ru)) detail::dangling("RU " + ru + " is not in the catalog");
        rus.push_back(ru);
      }
      dus.push_back({{"du_id", du.du_id},
                     {"vnfd_ref", du.du_vnfd_ref},
                     {"flavor_id", du.du_flavor_id},
                     {"il_subset_id", du.il_subset_id},
                     {"host_pop", du.host_pop}});
    }
    gnbs.push_back({{"gnb_id", gnb.gnb_id},
                    {"nsd_ref", gnb.nsd_ref},
                    {"flavor_id", gnb.nsd_flavor_id},
                    {"il_subset_id", gnb.nsd_il_subset_id},
                    {"il_subset_key", to_json_value(subset->key)},
                    {"cu",
                     {{"vnfd_ref", gnb.cu.cu_vnfd_ref},
                      {"flavor_id", gnb.cu.cu_flavor_id},
                      {"il_subset_id", gnb.cu.il_subset_id},
                      {"host_pop", gnb.cu.host_pop}}},
                    {"dus", dus},
                    {"ru_pnfds", rus}});
  }

  OnboardingBundle bundle;
  bundle.manifest = {{"s_nssai", to_json_value(plan.s_nssai)},
                     {"nsst_ref", plan.nsst_ref},
                     {"nsd_flavor_id", plan.nsd_flavor_id},
                     {"gnbs", gnbs}};
  bundle.configuration = {{"s_nssai", to_json_value(plan.s_nssai)},
                          {"radio_config", to_json_value(plan.nsst.radio_config)}};

  json nsds = json::array();
  for (const auto& [ref, subsets_by_flavor] : nsd_usage) {
    const auto& full = *catalog.find_nsd(ref);
    GnbNsd nsd{full.descriptor_id, full.cu_vnfd_ref, full.du_vnfd_ref, {}};
    for (const auto& [flavor_id, subset_ids] : subsets_by_flavor) {
      auto flavor = *full.find_flavor(flavor_id);
      std::erase_if(flavor.il_subsets, [&](const NsdIlSubset& s) { return !subset_ids.contains(s.subset_id); });
      nsd.flavors.push_back(std::move(flavor));
    }
    nsds.push_back(to_json_value(nsd));
  }
  json pnfds = json::array();
  for (const auto& ru : plan.selected_rus) {
    const auto* pnfd = catalog.find_ru(ru);
    if (!pnfd) detail::dangling("RU " + ru + " is not in the catalog");
    pnfds.push_back(to_json_value(*pnfd));
  }

  bundle.files.push_back({"configuration.json", detail::document_text(bundle.configuration)});
  bundle.files.push_back({"manifest.json", detail::document_text(bundle.manifest)});
  bundle.files.push_back({"nsd.json", detail::document_text(nsds.size() == 1 ? nsds[0] : nsds)});
  bundle.files.push_back({"pnfds.json", detail::document_text(pnfds)});
  for (const auto& [id, usage] : cu_usage) {
    bundle.files.push_back({"vnfd-" + id + ".json", detail::document_text(to_json_value(usage.excerpt(*catalog.find_cu_vnfd(id))))});
  }
  for (const auto& [id, usage] : du_usage) {
    bundle.files.push_back({"vnfd-" + id + ".json", detail::document_text(to_json_value(usage.excerpt(*catalog.find_du_vnfd(id))))});
  }
  std::sort(bundle.files.begin(), bundle.files.end(),
            [](const BundleFile& a, const BundleFile& b) { return a.name < b.name; });
  return bundle;
}

inline void write_bundle(const OnboardingBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string());
  for (const auto& file : bundle.files) write_file_atomic(dir / file.name, file.content);
}

}  // namespace ranslice
