// Copyright 2026 The dyperm Authors.
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

#include "dyperm/partition.hpp"

#include <gtest/gtest.h>

#include "dyperm/error.hpp"
#include "dyperm/graph.hpp"
#include "dyperm/random.hpp"
#include "support/fixtures.hpp"

namespace dyperm {
namespace {

TEST(PartitionTest, MoveToOtherCommunity) {
  Partition p;
  p.Assign(0, 10);
  p.Assign(1, 10);
  EXPECT_FALSE(p.Move(1, 11));
  EXPECT_EQ(p.Members(10), (std::set<NodeId>{0}));
  EXPECT_EQ(p.Members(11), (std::set<NodeId>{1}));
}

TEST(PartitionTest, MoveToOwnCommunityIsNoOp) {
  Partition p;
  p.Assign(0, 10);
  p.Assign(1, 10);
  const Partition before = p;
  EXPECT_FALSE(p.Move(0, 10));
  EXPECT_EQ(p, before);
}

TEST(PartitionTest, EmptiedCommunityIsErased) {
  Partition p;
  p.Assign(0, 10);
  EXPECT_TRUE(p.Move(0, 11));
  EXPECT_FALSE(p.HasCommunity(10));
  EXPECT_EQ(p.CommunityCount(), 1u);
  p.Audit();
}

TEST(PartitionTest, Errors) {
  Partition p;
  p.Assign(0, 1);
  try {
    p.Assign(0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateNode);
  }
  try {
    p.Move(5, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingNode);
  }
  try {
    (void)p.Members(42);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingCommunity);
  }
}

TEST(PartitionTest, UnassignReportsEmptiedCommunity) {
  Partition p = fixtures::MakePartition({{0, 1}, {2}});
  EXPECT_FALSE(p.Unassign(0));
  EXPECT_TRUE(p.Unassign(2));
  EXPECT_EQ(p.Communities(), (std::vector<CommunityId>{0}));
  EXPECT_EQ(p.MaxCommunityId(), CommunityId{0});
}

TEST(PartitionTest, AuditDetectsNodeSetMismatch) {
  Graph g = fixtures::MakeGraph({{0, 1}, {1, 2}});
  Partition p = fixtures::MakePartition({{0, 1}});
  EXPECT_THROW(p.Audit(&g), Error);
  p.Assign(2, 5);
  p.Audit(&g);
}

TEST(PartitionProperty, RandomMovesKeepInverseConsistency) {
  Rng rng(3);
  Partition p;
  for (NodeId u = 0; u < 30; ++u) p.Assign(u, rng.UniformIndex(5));
  for (int step = 0; step < 2000; ++step) {
    p.Move(rng.UniformIndex(30), rng.UniformIndex(8));
    p.Audit();
  }
  EXPECT_EQ(p.NodeCount(), 30u);
}

}  // namespace
}  // namespace dyperm
