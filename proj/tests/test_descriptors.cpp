#include <gtest/gtest.h>

#include "ranslice/builtin_catalog.hpp"

using namespace ranslice;

TEST(Enums, NamesRoundTrip) {
  for (const auto& [value, name] : EnumNames<SchedulerPolicy>::table) {
    EXPECT_EQ(enum_from_string<SchedulerPolicy>(name), value);
    EXPECT_EQ(to_string(value), name);
  }
  EXPECT_EQ(enum_from_string<BandRange>("MMWAVE_24250_52600"), BandRange::MmWave);
  EXPECT_FALSE(enum_from_string<FronthaulTech>("cpri").has_value());
}

TEST(Enums, SstNumericEncoding) {
  EXPECT_EQ(static_cast<int>(Sst::Embb), 1);
  EXPECT_EQ(static_cast<int>(Sst::Urllc), 2);
  EXPECT_EQ(static_cast<int>(Sst::Mmtc), 3);
}

TEST(Enums, SplitFollowsFronthaul) {
  EXPECT_EQ(split_for(FronthaulTech::Ecpri), SplitOption::Split7);
  EXPECT_EQ(split_for(FronthaulTech::Cpri), SplitOption::Split8);
}

TEST(SubsetKeys, DuRangeIsInclusive) {
  DuSubsetKey key{std::string(kSuburban), FronthaulTech::Cpri, 5, 8};
  EXPECT_FALSE(key.contains(4));
  EXPECT_TRUE(key.contains(5));
  EXPECT_TRUE(key.contains(8));
  EXPECT_FALSE(key.contains(9));
}

TEST(SubsetKeys, NsdKeyIsAMultiset) {
  const RegionTech a{std::string(kIndustrial), FronthaulTech::Ecpri};
  const RegionTech b{std::string(kSuburban), FronthaulTech::Cpri};
  EXPECT_TRUE((NsdSubsetKey{{a, b, a}}).same_multiset(NsdSubsetKey{{b, a, a}}));
  EXPECT_FALSE((NsdSubsetKey{{a, b}}).same_multiset(NsdSubsetKey{{a, b, b}}));
  EXPECT_FALSE((NsdSubsetKey{{a, a}}).same_multiset(NsdSubsetKey{{a, b}}));
}

TEST(BuiltinCatalog, FlavorCounts) {
  const auto c = builtin_catalog();
  ASSERT_EQ(c.nsds.size(), 1u);
  EXPECT_EQ(c.nsds[0].flavors.size(), 3u);
  ASSERT_EQ(c.du_vnfds.size(), 1u);
  EXPECT_EQ(c.du_vnfds[0].flavors.size(), 2u);
  ASSERT_EQ(c.cu_vnfds.size(), 1u);
  EXPECT_EQ(c.cu_vnfds[0].flavors.size(), 1u);
}

TEST(BuiltinCatalog, StoredNsstsMatchReferenceConfiguration) {
  const auto c = builtin_catalog();
  const auto* embb = c.find_nsst(Sst::Embb);
  ASSERT_NE(embb, nullptr);
  EXPECT_EQ(embb->radio_config.numerology_mu, 2);
  const auto* mmtc = c.find_nsst(Sst::Mmtc);
  ASSERT_NE(mmtc, nullptr);
  EXPECT_EQ(mmtc->radio_config.five_qi.id, 4);
  EXPECT_EQ(mmtc->radio_config.five_qi.packet_delay_budget_ms, 300.0);
  const auto* urllc = c.find_nsst(Sst::Urllc);
  ASSERT_NE(urllc, nullptr);
  EXPECT_EQ(urllc->radio_config.five_qi.id, 81);
}

TEST(BuiltinCatalog, MixedFlavorHoldsTheThreeRegionKey) {
  const auto c = builtin_catalog();
  const auto* flavor = c.nsds[0].find_flavor(3);
  ASSERT_NE(flavor, nullptr);
  ASSERT_EQ(flavor->il_subsets.size(), 1u);
  const NsdSubsetKey expected{{{std::string(kIndustrial), FronthaulTech::Ecpri},
                               {std::string(kSuburban), FronthaulTech::Cpri},
                               {std::string(kCityCenter), FronthaulTech::Ecpri}}};
  EXPECT_TRUE(flavor->il_subsets[0].key.same_multiset(expected));
  EXPECT_TRUE(flavor->permits(FronthaulTech::Cpri));
  EXPECT_TRUE(flavor->permits(FronthaulTech::Ecpri));
}

TEST(BuiltinCatalog, LookupsMissReturnNull) {
  const auto c = builtin_catalog();
  EXPECT_EQ(c.find_nsd("nope"), nullptr);
  EXPECT_EQ(c.find_du_vnfd("nope"), nullptr);
  EXPECT_EQ(c.find_ru("nope"), nullptr);
  EXPECT_NE(c.find_ru("ru-2-6"), nullptr);
  EXPECT_EQ(c.nsds[0].find_flavor(4), nullptr);
}

TEST(BuiltinCatalog, FindNsstPicksLowestIdForDuplicateSst) {
  auto c = builtin_catalog();
  auto extra = *c.find_nsst(Sst::Embb);
  extra.nsst_id = "nsst-a-embb";
  c.nssts.push_back(extra);
  EXPECT_EQ(c.find_nsst(Sst::Embb)->nsst_id, "nsst-a-embb");
}

TEST(ErrorType, CarriesCodeAndStage) {
  const Error e(ErrorCode::NoMatchingSubset, "x");
  EXPECT_EQ(e.code(), ErrorCode::NoMatchingSubset);
  EXPECT_NE(std::string(e.what()).find("NO_MATCHING_SUBSET"), std::string::npos);
  EXPECT_EQ(e.with_stage("dimension").stage(), "dimension");
  EXPECT_EQ(e.with_stage("a").with_stage("b").stage(), "a");
}
