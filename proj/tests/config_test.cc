// Copyright 2026 The cubemr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cubemr/config.h"

#include <fstream>

#include "cubemr/error.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace cubemr {
namespace {

constexpr char kAdsConfig[] = R"(# ad impressions
[metric]
impressions

[dimensions]
region = country state
device = device
website = site_category website_id
advertiser = advertiser

[grouping]
region device   # users
website
advertiser

[cardinality]
country = 4
website_id = 1000

[skew]
website = 1.2
)";

TEST(ConfigTest, ParsesThreeGroups) {
  const CubeConfig config = ParseConfig(kAdsConfig, "ads.conf");
  EXPECT_EQ(config.schema.num_dimensions(), 4u);
  EXPECT_EQ(config.schema.num_columns(), 6u);
  EXPECT_EQ(config.schema.metric_name(), "impressions");
  ASSERT_EQ(config.grouping.num_groups(), 3u);
  EXPECT_EQ(config.grouping.ranges()[0].begin, 0u);
  EXPECT_EQ(config.grouping.ranges()[0].end, 3u);
  EXPECT_EQ(config.grouping.ranges()[2].begin, 5u);
  EXPECT_EQ(PlanPhases(config.schema, config.grouping).size(), 3u);
  EXPECT_EQ(config.cardinality.at("website_id"), 1000u);
  EXPECT_DOUBLE_EQ(config.skew.at("website"), 1.2);
}

TEST(ConfigTest, MissingGroupingMeansSingleGroup) {
  const CubeConfig config = ParseConfig(
      "[metric]\ncount\n[dimensions]\na = a1 a2\nb = b\n", "x");
  ASSERT_EQ(config.grouping.num_groups(), 1u);
  EXPECT_EQ(config.grouping.ranges()[0].begin, 0u);
  EXPECT_EQ(config.grouping.ranges()[0].end, 3u);
  EXPECT_TRUE(config.group_names.empty());
}

TEST(ConfigTest, DimensionInTwoGroupsIsRejected) {
  EXPECT_THROW(ParseConfig("[metric]\nm\n[dimensions]\na = a\nb = b\n"
                           "[grouping]\na b\nb\n",
                           "x"),
               CubeError);
}

TEST(ConfigTest, UnassignedDimensionIsRejected) {
  EXPECT_THROW(ParseConfig("[metric]\nm\n[dimensions]\na = a\nb = b\n"
                           "[grouping]\na\n",
                           "x"),
               CubeError);
}

TEST(ConfigTest, ErrorsNameSourceAndLine) {
  const std::string text = "[metric]\nm\n[dimensions]\na = a\nbogus line\n";
  try {
    ParseConfig(text, "bad.conf");
    FAIL() << "expected a parse error";
  } catch (const CubeError& e) {
    EXPECT_EQ(e.code(), CubeError::Code::kParse);
    EXPECT_NE(std::string(e.what()).find("bad.conf:5:"), std::string::npos)
        << e.what();
  }
}

TEST(ConfigTest, RejectsBadValues) {
  const std::string base = "[metric]\nm\n[dimensions]\na = a\n";
  EXPECT_THROW(ParseConfig(base + "[cardinality]\na = 0\n", "x"), CubeError);
  EXPECT_THROW(ParseConfig(base + "[cardinality]\na = ten\n", "x"), CubeError);
  EXPECT_THROW(ParseConfig(base + "[cardinality]\nzz = 3\n", "x"), CubeError);
  EXPECT_THROW(ParseConfig(base + "[skew]\na = -1\n", "x"), CubeError);
  EXPECT_THROW(ParseConfig(base + "[unknown]\n", "x"), CubeError);
  EXPECT_THROW(ParseConfig(base + "[metric]\nn\n", "x"), CubeError);
  EXPECT_THROW(ParseConfig("[dimensions]\na = a\n", "x"), CubeError);
  EXPECT_THROW(ParseConfig("[metric]\na\n[dimensions]\na = a\n", "x"),
               CubeError);
}

TEST(ConfigTest, LoadFromFile) {
  const std::string path = testing::TempPath("ads.conf");
  std::ofstream(path) << kAdsConfig;
  EXPECT_EQ(LoadConfig(path).schema.num_columns(), 6u);
  EXPECT_THROW(LoadConfig(path + ".missing"), CubeError);
}

}  // namespace
}  // namespace cubemr
