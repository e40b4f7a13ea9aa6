#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "brute_force.hpp"
#include "hnet/topology.hpp"
#include "test_util.hpp"

namespace hnet {
namespace {

using testing::all_labels;
using testing::lab;
using testing::spec;
using testing::strings;

brute::Tuple tuple(const Label& x) { return brute::Tuple(x.digits().begin(), x.digits().end()); }

TEST(IsAdjacent, RuleExamples) {
  const RadixSpec s = spec("2,3,3,3,4,4,4");
  EXPECT_EQ(is_adjacent(lab(s, "0000312"), lab(s, "1111312")), EdgeKind::zero_block_flip);
  EXPECT_EQ(is_adjacent(lab(s, "0000312"), lab(s, "1111112")), std::nullopt);
  EXPECT_EQ(is_adjacent(lab(spec("2,3"), "01"), lab(spec("2,3"), "02")),
            EdgeKind::root_clique);
  const RadixSpec t = spec("2,3,4");
  EXPECT_EQ(is_adjacent(Label::root(t), lab(t, "111")), EdgeKind::zero_block_flip);
  EXPECT_EQ(is_adjacent(lab(t, "021"), lab(t, "121")), EdgeKind::first_digit);
}

TEST(IsAdjacent, Errors) {
  const RadixSpec s = spec("2,3");
  EXPECT_HNET_ERROR(Errc::same_vertex, is_adjacent(lab(s, "01"), lab(s, "01")));
  EXPECT_HNET_ERROR(Errc::spec_mismatch, is_adjacent(lab(s, "01"), lab(spec("3,3"), "02")));
}

TEST(IsAdjacent, AgreesWithBruteForceRules) {
  for (const char* text : {"2,3", "3,3", "2,3,4", "3,2,2", "2,2,3,4", "4,3,2", "5"}) {
    const RadixSpec s = spec(text);
    const auto labels = all_labels(s);
    for (const Label& x : labels) {
      for (const Label& y : labels) {
        if (x == y) continue;
        const auto expected = brute::rule(tuple(x), tuple(y));
        const auto got = is_adjacent(x, y);
        ASSERT_EQ(got.has_value(), expected.has_value())
            << text << " " << format_label(x) << " " << format_label(y);
        if (got) {
          EXPECT_EQ(static_cast<int>(*got), *expected);
        }
      }
    }
  }
}

TEST(Neighbors, SmallExamples) {
  const RadixSpec s = spec("2,3");
  EXPECT_EQ(strings({neighbors(lab(s, "10"))[0].label}), std::vector<std::string>{"00"});
  EXPECT_EQ(neighbors(lab(s, "10")).size(), 1u);

  const auto root = neighbors(lab(s, "00"));
  ASSERT_EQ(root.size(), 3u);
  EXPECT_EQ(format_label(root[0].label), "10");
  EXPECT_EQ(root[0].kind, EdgeKind::first_digit);
  EXPECT_EQ(format_label(root[1].label), "11");
  EXPECT_EQ(root[1].kind, EdgeKind::zero_block_flip);
  EXPECT_EQ(format_label(root[2].label), "12");
  EXPECT_EQ(root[2].kind, EdgeKind::zero_block_flip);

  for (std::size_t k = 1; k <= 8; ++k) {
    EXPECT_EQ(neighbors(Label::root(binomial_spec(k))).size(), k);
  }
}

TEST(Neighbors, MatchDegreeAndPredicate) {
  for (const char* text : {"2,3,4", "3,3,3", "4,2,3", "2,2,2,2", "6"}) {
    const RadixSpec s = spec(text);
    std::uint64_t sum = 0;
    for (const Label& x : all_labels(s)) {
      const auto nb = neighbors(x);
      EXPECT_EQ(nb.size(), degree(x)) << format_label(x);
      sum += nb.size();
      std::set<std::string> seen;
      for (const Neighbor& n : nb) {
        EXPECT_EQ(is_adjacent(x, n.label), n.kind);
        EXPECT_TRUE(seen.insert(format_label(n.label)).second) << "duplicate neighbor";
      }
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end(), [](const Neighbor& a, const Neighbor& b) {
        return a.label < b.label;
      }));
    }
    EXPECT_EQ(sum, 2 * size_closed_form(s).total()) << text;
  }
}

TEST(Edges, CountsPerRule) {
  const RadixSpec s = spec("2,3,4");
  const EdgeStream e = edges(s);
  EXPECT_EQ(e.size(), 33u);
  std::array<int, 3> counts{};
  for (const Edge& edge : e) ++counts[static_cast<int>(edge.kind)];
  // Brute-force enumeration: 12 / 14 / 7.
  EXPECT_EQ(brute::Model({2, 3, 4}).edge_counts_by_rule(), (std::vector<int>{12, 14, 7}));
  EXPECT_EQ(counts[0], 12);
  EXPECT_EQ(counts[1], 14);
  EXPECT_EQ(counts[2], 7);

  const EdgeStream b2 = edges(spec("2,2"));
  EXPECT_EQ(b2.size(), 3u);
}

TEST(Edges, CanonicalOrder) {
  const EdgeStream e = edges(spec("3,2,3"));
  for (std::size_t i = 0; i < e.size(); ++i) {
    EXPECT_LT(e[i].u, e[i].v);
    if (i) {
      EXPECT_TRUE(std::pair(e[i - 1].u.index(), e[i - 1].v.index()) <
                  std::pair(e[i].u.index(), e[i].v.index()));
    }
  }
}

TEST(Edges, CapIsEnforced) {
  EXPECT_HNET_ERROR(Errc::order_cap_exceeded, edges(spec("2,3,4"), 10));
  EXPECT_HNET_ERROR(Errc::order_cap_exceeded, build_recursive(spec("2,3,4"), 23));
}

TEST(SizeClosedForm, Terms) {
  EXPECT_EQ(size_closed_form(spec("2,3,4")), (SizeTerms{12, 14, 7}));
  EXPECT_EQ(size_closed_form(spec("2,3,4")).total(), 33u);
  EXPECT_EQ(size_closed_form(spec("3,3")), (SizeTerms{9, 4, 1}));
  EXPECT_EQ(brute::Model({3, 3}).edge_counts_by_rule(), (std::vector<int>{9, 4, 1}));
  for (std::size_t k = 1; k <= 30; ++k) {
    EXPECT_EQ(size_closed_form(binomial_spec(k)).total(), (std::uint64_t{1} << k) - 1);
  }
  EXPECT_EQ(size_closed_form(spec("7")).total(), 21u);
}

TEST(SizeClosedForm, OverflowIsReported) {
  EXPECT_HNET_ERROR(Errc::arithmetic_overflow, size_closed_form(RadixSpec::binomial(80)));
}

TEST(SizeRecursive, MatchesClosedForm) {
  EXPECT_EQ(size_recursive(spec("2,3")), 6u);
  EXPECT_EQ(size_recursive(spec("2,3,4")), 33u);
  EXPECT_EQ(size_recursive(spec("2")), 1u);
  for (const char* text : {"3,3", "5,2,7,3", "2,2,2,2,2,2", "9,9,9,9"}) {
    EXPECT_EQ(size_recursive(spec(text)), size_closed_form(spec(text)).total()) << text;
  }
}

TEST(BuildRecursive, EqualsRuleEdges) {
  EXPECT_EQ(build_recursive(spec("2,3")), edges(spec("2,3")));
  EXPECT_EQ(build_recursive(spec("2,3,4")), edges(spec("2,3,4")));
  EXPECT_EQ(build_recursive(spec("2,3,4")).size(), 33u);
  const EdgeStream k2 = build_recursive(spec("2"));
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(format_label(k2[0].u), "0");
  EXPECT_EQ(format_label(k2[0].v), "1");
  EXPECT_EQ(build_recursive(spec("4,3,2,3")), edges(spec("4,3,2,3")));
}

TEST(CliqueOf, VariesFirstDigit) {
  const RadixSpec s = spec("2,3,4");
  EXPECT_EQ(strings(clique_of(lab(s, "021"))), (std::vector<std::string>{"021", "121"}));
  const auto c = clique_of(lab(spec("3,3"), "12"));
  EXPECT_EQ(strings(c), (std::vector<std::string>{"02", "12", "22"}));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      EXPECT_EQ(is_adjacent(c[i], c[j]), EdgeKind::first_digit);
}

TEST(CopyVertices, RootAndPeripherals) {
  const CopyView v = copy_vertices(spec("2,3"), {1});
  EXPECT_EQ(strings(v.vertices), (std::vector<std::string>{"01", "11"}));
  EXPECT_EQ(format_label(v.root), "01");
  EXPECT_EQ(strings(v.peripherals), (std::vector<std::string>{"11"}));

  const CopyView single = copy_vertices(spec("2,3,4"), {1, 2, 3});
  EXPECT_EQ(strings(single.vertices), (std::vector<std::string>{"123"}));

  EXPECT_HNET_ERROR(Errc::digit_out_of_range, copy_vertices(spec("2,3,4"), {4}));
  EXPECT_HNET_ERROR(Errc::length_mismatch, copy_vertices(spec("2,3,4"), {}));
}

TEST(CopyVertices, InducedSubgraphIsSmallerMember) {
  const RadixSpec s = spec("2,3,4");
  const CopyView v = copy_vertices(s, {2});
  EXPECT_EQ(v.vertices.size(), 6u);
  std::set<std::pair<std::string, std::string>> induced;
  for (const Label& a : v.vertices)
    for (const Label& b : v.vertices)
      if (a < b && is_adjacent(a, b))
        induced.emplace(format_label(a).substr(0, 2), format_label(b).substr(0, 2));
  std::set<std::pair<std::string, std::string>> smaller;
  for (const Edge& e : edges(spec("2,3"))) smaller.emplace(format_label(e.u), format_label(e.v));
  EXPECT_EQ(induced, smaller);
  EXPECT_EQ(induced.size(), 6u);
}

TEST(RootClique, Members) {
  const auto tri = root_clique(spec("2,3,4"), 3, {});
  EXPECT_EQ(strings(tri), (std::vector<std::string>{"001", "002", "003"}));
  for (std::size_t i = 0; i < tri.size(); ++i)
    for (std::size_t j = i + 1; j < tri.size(); ++j)
      EXPECT_EQ(is_adjacent(tri[i], tri[j]), EdgeKind::root_clique);

  EXPECT_EQ(strings(root_clique(spec("2,3"), 2, {})), (std::vector<std::string>{"01", "02"}));
  EXPECT_EQ(root_clique(spec("2,2,3"), 2, {1}).size(), 1u);
  EXPECT_HNET_ERROR(Errc::position_out_of_range, root_clique(spec("2,3"), 1, {3}));
  EXPECT_HNET_ERROR(Errc::position_out_of_range, root_clique(spec("2,3"), 3, {}));
  EXPECT_HNET_ERROR(Errc::digit_out_of_range, root_clique(spec("2,3,4"), 2, {4}));
}

TEST(Quotient, CollapsesCopies) {
  EXPECT_EQ(quotient(spec("2,3,4"), 1), edge_pairs(edges(spec("3,4"))));
  EXPECT_EQ(quotient(spec("2,3"), 1), edge_pairs(edges(spec("3"))));
  EXPECT_EQ(quotient(spec("2,3"), 1).size(), 3u);
  EXPECT_EQ(quotient(spec("2,3,4"), 2), edge_pairs(edges(spec("4"))));
  EXPECT_EQ(quotient(spec("3,2,2,3"), 2), edge_pairs(edges(spec("2,3"))));
  EXPECT_HNET_ERROR(Errc::position_out_of_range, quotient(spec("2,3"), 2));
  EXPECT_HNET_ERROR(Errc::position_out_of_range, quotient(spec("2,3"), 0));
}

}  // namespace
}  // namespace hnet
