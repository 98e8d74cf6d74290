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

#include "dyperm/io.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "dyperm/error.hpp"
#include "support/fixtures.hpp"

namespace dyperm {
namespace {

Error ParseFailure(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorCode::kInvariantViolation, "none");
}

TEST(EdgeListTest, ParsesCommentsBlanksAndIsolatedNodes) {
  std::istringstream in("# header\n0 1\n\n  2\t1 \n7\n");
  Snapshot s = ParseEdgeList(in);
  EXPECT_EQ(s.nodes, (std::set<NodeId>{0, 1, 2, 7}));
  EXPECT_EQ(s.edges, (std::set<Edge>{{0, 1}, {1, 2}}));
}

TEST(EdgeListTest, SelfLoopCarriesLineNumber) {
  std::istringstream in("0 1\n# c\n3 3\n");
  Error e = ParseFailure([&] { ParseEdgeList(in); });
  EXPECT_EQ(e.code(), ErrorCode::kParseError);
  EXPECT_EQ(e.line(), 3u);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
}

TEST(EdgeListTest, DuplicateEdgeRejected) {
  std::istringstream in("0 1\n1 0\n");
  EXPECT_EQ(ParseFailure([&] { ParseEdgeList(in); }).line(), 2u);
}

TEST(EdgeListTest, MalformedTokens) {
  for (const char* text : {"0 x\n", "-1 2\n", "1 2 3\n", "1.5 2\n"}) {
    std::istringstream in(text);
    EXPECT_EQ(ParseFailure([&] { ParseEdgeList(in); }).code(),
              ErrorCode::kParseError)
        << text;
  }
}

TEST(EdgeListTest, RoundTrip) {
  Snapshot s;
  s.nodes = {0, 1, 2, 9};
  s.edges = {{0, 1}, {1, 2}};
  std::ostringstream out;
  WriteEdgeList(out, s);
  std::istringstream in(out.str());
  EXPECT_EQ(ParseEdgeList(in), s);
  EXPECT_EQ(ToSnapshot(ToGraph(s)), s);
}

TEST(CommunityFileTest, ParseAndRemap) {
  std::istringstream in("3 900\n0 5\n1 5\n2 900\n");
  Labeling labels = ParseCommunities(in);
  ASSERT_EQ(labels.size(), 4u);
  EXPECT_EQ(labels.front(), (std::pair<NodeId, std::uint64_t>{0, 5}));
  Partition p = PartitionFromLabels(labels);
  EXPECT_EQ(p.CommunityOf(0), 0u);
  EXPECT_EQ(p.CommunityOf(3), 1u);
  Partition q = PartitionFromLabels(labels, 10);
  EXPECT_EQ(q.CommunityOf(2), 11u);
}

TEST(CommunityFileTest, DuplicateNodeRejected) {
  std::istringstream in("0 1\n0 2\n");
  Error e = ParseFailure([&] { ParseCommunities(in); });
  EXPECT_EQ(e.code(), ErrorCode::kParseError);
  EXPECT_EQ(e.line(), 2u);
}

TEST(CommunityFileTest, WriteSortedByNode) {
  Partition p = fixtures::MakePartition({{2, 0}, {1}});
  std::ostringstream out;
  WriteCommunities(out, p);
  EXPECT_EQ(out.str(), "0 0\n1 1\n2 0\n");
  EXPECT_EQ(LabelsOf(p), (Labeling{{0, 0}, {1, 1}, {2, 0}}));
}

TEST(EventFileTest, ParseAllKinds) {
  std::istringstream in("# stream\n1 AN 4\n1 AE 4 0\n2 RE 0 4\n3 RN 4\n");
  auto events = ParseEvents(in);
  ASSERT_EQ(events.size(), 4u);
  EXPECT_EQ(events[0], AtomicEvent::NewNode(1, 4));
  EXPECT_EQ(events[1], AtomicEvent::NewEdge(1, 4, 0));
  EXPECT_EQ(events[2], AtomicEvent::RemoveEdge(2, 0, 4));
  EXPECT_EQ(events[3], AtomicEvent::RemoveNode(3, 4));
  EXPECT_EQ(events[1].line, 3u);
}

TEST(EventFileTest, Rejections) {
  struct Case {
    const char* text;
    std::size_t line;
  };
  for (Case c : {Case{"1 AE 2 2\n", 1}, Case{"1 XX 2\n", 1},
                 Case{"1 AN 2\n1 AE 3\n", 2}, Case{"2 AN 1\n1 AN 2\n", 2},
                 Case{"1 RN 2 3\n", 1}}) {
    std::istringstream in(c.text);
    Error e = ParseFailure([&] { ParseEvents(in); });
    EXPECT_EQ(e.code(), ErrorCode::kParseError) << c.text;
    EXPECT_EQ(e.line(), c.line) << c.text;
  }
}

TEST(EventFileTest, RoundTrip) {
  std::vector<AtomicEvent> events = {
      AtomicEvent::NewNode(0, 1), AtomicEvent::NewEdge(0, 1, 2),
      AtomicEvent::RemoveEdge(5, 2, 1), AtomicEvent::RemoveNode(7, 1)};
  std::ostringstream out;
  WriteEvents(out, events);
  EXPECT_EQ(out.str(), "0 AN 1\n0 AE 1 2\n5 RE 2 1\n7 RN 1\n");
  std::istringstream in(out.str());
  EXPECT_EQ(ParseEvents(in), events);
}

TEST(FileTest, MissingFile) {
  EXPECT_EQ(ParseFailure([] { ReadFile("/nonexistent/dyperm/file"); }).code(),
            ErrorCode::kMissingFile);
}

}  // namespace
}  // namespace dyperm
