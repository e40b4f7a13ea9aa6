#include <gtest/gtest.h>

#include "hnet/metrics.hpp"
#include "hnet/routing.hpp"
#include "hnet/topology.hpp"
#include "test_util.hpp"

namespace hnet {
namespace {

using testing::all_labels;
using testing::lab;
using testing::spec;

const std::vector<std::string> kWorkedPath1{"01010", "11010", "00010", "11110", "00000",
                                           "11111", "00001", "11101", "00101", "10101"};
const std::vector<std::string> kWorkedPath2{"0210312", "1210312", "0000312", "1111112",
                                           "0000000", "1111123", "0000023", "1221023"};
const std::vector<std::string> kWorkedPath3{"102302", "002302", "112302", "000002", "000003",
                                           "111113", "000013", "111013", "001013", "101013"};

TEST(SwapTowardRoot, Steps) {
  const RadixSpec s = spec("2,3,3,3,4,4,4");
  EXPECT_EQ(format_label(swap_toward_root(lab(s, "0210312"))), "1210312");
  EXPECT_EQ(format_label(swap_toward_root(lab(s, "1210312"))), "0000312");
  EXPECT_EQ(format_label(swap_toward_root(lab(s, "0000312"))), "1111312");
  EXPECT_EQ(format_label(swap_toward_root(lab(s, "1111312"))), "0000000");
  EXPECT_HNET_ERROR(Errc::is_root, swap_toward_root(Label::root(s)));
}

TEST(SwapTowardRoot, AdjacentAndOneCloser) {
  for (const char* text : {"2,3,4", "3,2,2,3", "2,2,2,2,2"}) {
    for (const Label& x : all_labels(spec(text))) {
      if (alt(x) == 0) continue;
      const Label y = swap_toward_root(x);
      EXPECT_TRUE(is_adjacent(x, y).has_value());
      EXPECT_EQ(alt(y) + 1, alt(x));
    }
  }
}

TEST(Descent, Lengths) {
  const RadixSpec s = spec("2,3,3,3,4,4,4");
  const Path p = descent(lab(s, "0210312"));
  EXPECT_EQ(p.edge_count(), 4u);
  EXPECT_EQ(p.destination(), Label::root(s));
  EXPECT_EQ(descent(Label::root(s)).edge_count(), 0u);
  EXPECT_EQ(descent(lab(spec("2,2,3,4,2"), "10230")).edge_count(), 3u);
}

TEST(Route, WorkedExampleOneVerbatim) {
  const RadixSpec s = binomial_spec(5);
  const Path p = route(lab(s, "01010"), lab(s, "10101"));
  EXPECT_EQ(testing::strings(p.vertices), kWorkedPath1);
  EXPECT_EQ(validate_path(p), std::nullopt);
}

TEST(Route, WorkedExampleTwo) {
  const RadixSpec s = spec("2,3,3,3,4,4,4");
  const Path p = route(lab(s, "0210312"), lab(s, "1221023"));
  EXPECT_EQ(p.edge_count(), 7u);
  EXPECT_EQ(validate_path(p), std::nullopt);
  EXPECT_EQ(format_path(p), "0210312 -> 1210312 -> 0000312 -> 1111312 -> 0000000 -> "
                            "1111123 -> 0000023 -> 1221023");
  // The transcribed path has one hop that is not an edge.
  EXPECT_EQ(validate_path(parse_path(kWorkedPath2, s)), 2u);
}

TEST(Route, WorkedExampleThree) {
  const RadixSpec s = spec("2,2,3,4,2,4");
  const Path p = route(lab(s, "102302"), lab(s, "101013"));
  EXPECT_EQ(p.edge_count(), 9u);
  EXPECT_EQ(validate_path(p), std::nullopt);
  EXPECT_EQ(testing::strings(p.vertices), kWorkedPath3);
  EXPECT_EQ(is_adjacent(lab(s, "000002"), lab(s, "000003")), EdgeKind::root_clique);
  EXPECT_EQ(validate_path(parse_path(kWorkedPath3, s)), std::nullopt);
}

TEST(Route, SameVertexAndMismatch) {
  const RadixSpec s = spec("2,3");
  EXPECT_EQ(route(lab(s, "11"), lab(s, "11")).vertices.size(), 1u);
  EXPECT_HNET_ERROR(Errc::spec_mismatch, route(lab(s, "11"), lab(spec("3,3"), "11")));
}

TEST(NextHop, Examples) {
  EXPECT_EQ(format_label(next_hop(lab(binomial_spec(5), "01010"), lab(binomial_spec(5), "10101"))),
            "11010");
  const RadixSpec s = spec("2,2,3,4,2,4");
  EXPECT_EQ(format_label(next_hop(lab(s, "102302"), lab(s, "101013"))), "002302");
  EXPECT_EQ(next_hop(lab(s, "000002"), lab(s, "000003")), lab(s, "000003"));
  EXPECT_HNET_ERROR(Errc::same_vertex, next_hop(lab(s, "000002"), lab(s, "000002")));
}

TEST(NextHop, AdjacentPairsStepDirectly) {
  for (const Label& x : all_labels(spec("3,2,3"))) {
    for (const Neighbor& n : neighbors(x)) EXPECT_EQ(next_hop(x, n.label), n.label);
  }
}

TEST(ValidatePath, Diagnostics) {
  const RadixSpec s = spec("2,3");
  EXPECT_EQ(validate_path(parse_path({"10", "00", "11"}, s)), std::nullopt);
  EXPECT_EQ(validate_path(parse_path({"10", "11"}, s)), 0u);
  EXPECT_EQ(validate_path(parse_path({"10", "10"}, s)), 0u);
  EXPECT_EQ(validate_path(parse_path({"10"}, s)), std::nullopt);
  Path mixed{{lab(s, "10"), lab(spec("3,3"), "00")}};
  EXPECT_EQ(validate_path(mixed), 0u);
  for (const Label& x : all_labels(spec("2,3,4"))) EXPECT_EQ(validate_path(descent(x)), std::nullopt);
}

TEST(Route, DeterministicAndOptimalOnMixedSpec) {
  const RadixSpec s = spec("3,2,4,2");
  const auto labels = all_labels(s);
  for (const Label& x : labels) {
    for (const Label& y : labels) {
      const Path p = route(x, y);
      ASSERT_EQ(validate_path(p), std::nullopt);
      ASSERT_EQ(p.edge_count(), distance(x, y).value);
      ASSERT_EQ(p, route(x, y));
    }
  }
}

}  // namespace
}  // namespace hnet
