#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "ranslice/builtin_catalog.hpp"
#include "ranslice/topology.hpp"
#include "support.hpp"

using namespace ranslice;

namespace {

std::vector<std::string> ru_ids(const std::vector<RuPnfd>& rus) {
  std::vector<std::string> ids;
  for (const auto& r : rus) ids.push_back(r.ru_id);
  return ids;
}

DeploymentArea pops_only(std::vector<std::string> ids, std::vector<TransportLink> links) {
  DeploymentArea a;
  a.area_id = "t";
  for (auto& id : ids) a.pops.push_back({id, PopTier::Edge, {1, 1.0}});
  a.links = std::move(links);
  return a;
}

// Length of the shortest simple path by enumerating every simple path.
double shortest_simple_path(const DeploymentArea& a, const std::string& from, const std::string& to) {
  double best = std::numeric_limits<double>::infinity();
  std::set<std::string> visited{from};
  std::function<void(const std::string&, double)> walk = [&](const std::string& at, double length) {
    if (at == to) {
      best = std::min(best, length);
      return;
    }
    for (const auto& l : a.links) {
      for (const auto& [x, y] : {std::pair(l.pop_a, l.pop_b), std::pair(l.pop_b, l.pop_a)}) {
        if (x == at && !visited.contains(y)) {
          visited.insert(y);
          walk(y, length + l.latency_ms);
          visited.erase(y);
        }
      }
    }
  };
  walk(from, 0.0);
  return best;
}

}  // namespace

TEST(SelectRus, CityCenterOnly) {
  const auto area = reference_area();
  const std::vector<std::string> targets{"region-3"};
  const auto rus = select_rus(area, targets);
  ASSERT_EQ(rus.size(), 8u);
  for (const auto& r : rus) EXPECT_EQ(r.region_id, "region-3");
}

TEST(SelectRus, WholeCity) {
  const auto area = reference_area();
  const std::vector<std::string> targets{"region-1", "region-2", "region-3"};
  EXPECT_EQ(select_rus(area, targets).size(), area.rus.size());
}

TEST(SelectRus, EmptyTargetsGiveNoRus) {
  EXPECT_TRUE(select_rus(reference_area(), std::vector<std::string>{}).empty());
}

TEST(SelectRus, UnknownRegion) {
  try {
    select_rus(reference_area(), std::vector<std::string>{"region-9"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownRegion);
  }
}

TEST(SelectRus, OrderOfTargetsDoesNotMatter) {
  const auto area = reference_area();
  EXPECT_EQ(ru_ids(select_rus(area, std::vector<std::string>{"region-3", "region-1"})),
            ru_ids(select_rus(area, std::vector<std::string>{"region-1", "region-3", "region-1"})));
}

TEST(FronthaulTechs, PerRegionSets) {
  const auto area = reference_area();
  EXPECT_EQ(fronthaul_techs(area, std::vector<std::string>{"region-2"}), std::vector{FronthaulTech::Cpri});
  EXPECT_EQ(fronthaul_techs(area, std::vector<std::string>{"region-3"}), std::vector{FronthaulTech::Ecpri});
  EXPECT_EQ(fronthaul_techs(area, std::vector<std::string>{"region-1", "region-2", "region-3"}),
            (std::vector{FronthaulTech::Cpri, FronthaulTech::Ecpri}));
}

TEST(PopLatency, Identity) {
  EXPECT_EQ(pop_latency(reference_area(), "edge-1", "edge-1"), 0.0);
}

TEST(PopLatency, SingleLink) {
  const auto a = pops_only({"p", "q"}, {{"p", "q", 0.4}});
  EXPECT_DOUBLE_EQ(pop_latency(a, "p", "q"), 0.4);
}

TEST(PopLatency, TriangleTakesTwoHops) {
  const auto a = pops_only({"a", "b", "c"}, {{"a", "b", 1.0}, {"b", "c", 1.0}, {"a", "c", 2.5}});
  const double expected = shortest_simple_path(a, "a", "c");
  EXPECT_DOUBLE_EQ(expected, 2.0);
  EXPECT_DOUBLE_EQ(pop_latency(a, "a", "c"), expected);
}

TEST(PopLatency, ReferenceAreaHops) {
  const auto area = reference_area();
  EXPECT_DOUBLE_EQ(pop_latency(area, "agg-2", "edge-2"), 2.0);
  EXPECT_DOUBLE_EQ(pop_latency(area, "agg-1", "edge-2"), 1.8);
  EXPECT_DOUBLE_EQ(pop_latency(area, "agg-1", "agg-3"), 1.5);
}

TEST(PopLatency, UnknownAndUnreachable) {
  const auto a = pops_only({"p", "q", "r"}, {{"p", "q", 1.0}});
  try {
    pop_latency(a, "p", "zz");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownPop);
  }
  try {
    pop_latency(a, "p", "r");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unreachable);
  }
}

TEST(PopLatency, MatchesPathEnumerationOnRandomGraphs) {
  testkit::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto area = testkit::random_area(rng, testkit::uniform_int(rng, 1, 3), testkit::uniform_int(rng, 1, 3));
    for (const auto& a : area.pops) {
      for (const auto& b : area.pops) {
        const double oracle = shortest_simple_path(area, a.pop_id, b.pop_id);
        if (std::isinf(oracle)) {
          EXPECT_THROW(pop_latency(area, a.pop_id, b.pop_id), Error);
          continue;
        }
        const double d = pop_latency(area, a.pop_id, b.pop_id);
        EXPECT_NEAR(d, oracle, 1e-9);
        EXPECT_EQ(d, pop_latency(area, b.pop_id, a.pop_id));
      }
    }
  }
}

TEST(PopLatency, TriangleInequality) {
  testkit::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto area = testkit::random_area(rng, 3, 3, 0.9);
    const auto all = testkit::all_pairs_latency(area);
    for (const auto& a : area.pops) {
      for (const auto& b : area.pops) {
        for (const auto& c : area.pops) {
          if (std::isinf(all.at(a.pop_id).at(b.pop_id)) || std::isinf(all.at(b.pop_id).at(c.pop_id))) continue;
          EXPECT_LE(pop_latency(area, a.pop_id, c.pop_id),
                    pop_latency(area, a.pop_id, b.pop_id) + pop_latency(area, b.pop_id, c.pop_id) + 1e-9);
        }
      }
    }
  }
}

TEST(DeploymentArea, EdgePopsSorted) {
  EXPECT_EQ(reference_area().edge_pops(), (std::vector<std::string>{"edge-1", "edge-2"}));
}
