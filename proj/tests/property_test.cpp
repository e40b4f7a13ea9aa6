#include <gtest/gtest.h>

#include <random>

#include "hnet/metrics.hpp"
#include "hnet/routing.hpp"
#include "hnet/topology.hpp"
#include "test_util.hpp"

namespace hnet {
namespace {

using testing::all_labels;

// Random specs with k in [1, 5], radices in [2, 5], order <= 400.
std::vector<RadixSpec> random_specs(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<RadixSpec> out;
  while (out.size() < count) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<Digit> r(k);
    for (Digit& n : r) n = std::uniform_int_distribution<Digit>(2, 5)(rng);
    RadixSpec s(std::move(r));
    if (s.order() <= 400) out.push_back(std::move(s));
  }
  return out;
}

class RandomSpec : public ::testing::TestWithParam<RadixSpec> {};

TEST_P(RandomSpec, LabelAlgebra) {
  const RadixSpec& s = GetParam();
  const auto labels = all_labels(s);
  for (const Label& x : labels) {
    const std::size_t a = alt(x);
    EXPECT_LE(a, s.k());
    EXPECT_EQ(a == 0, classify(x).is_root);

    const BlockView v = blocks(x);
    std::vector<Digit> joined;
    for (std::size_t i = 0; i < v.blocks.size(); ++i) {
      const Block& b = v.blocks[i];
      ASSERT_GT(b.length, 0u);
      if (i) {
        EXPECT_NE(b.kind, v.blocks[i - 1].kind);
      }
      for (std::size_t j = b.start; j < b.start + b.length; ++j) {
        EXPECT_EQ(x[j] == 0, b.kind == BlockKind::zero);
        joined.push_back(x[j]);
      }
    }
    EXPECT_EQ(joined, std::vector<Digit>(x.digits().begin(), x.digits().end()));
    if (!classify(x).is_root) {
      EXPECT_EQ(a, v.blocks.size() - (v.last().kind == BlockKind::zero ? 1 : 0));
    }
    EXPECT_EQ(classify(x).is_uniform, v.blocks.size() == 1);

    EXPECT_EQ(parse_label(format_label(x, LabelFormat::comma), s), x);
    EXPECT_EQ(parse_label(format_label(x, LabelFormat::compact), s), x);
    EXPECT_EQ(Label::from_index(s, x.index()), x);
  }
  for (const Label& x : labels) {
    for (const Label& y : labels) {
      EXPECT_EQ(common_suffix_len(x, y), common_suffix_len(y, x));
      EXPECT_EQ(common_suffix_len(x, y) == s.k(), x == y);
    }
  }
}

TEST_P(RandomSpec, StructureAndSize) {
  const RadixSpec& s = GetParam();
  const EdgeStream e = edges(s);
  EXPECT_EQ(e, build_recursive(s));
  EXPECT_EQ(e.size(), size_closed_form(s).total());
  EXPECT_EQ(size_recursive(s), size_closed_form(s).total());
  for (const Edge& edge : e) {
    EXPECT_EQ(is_adjacent(edge.v, edge.u), edge.kind);
  }
  std::uint64_t layered = 0;
  for (auto c : layer_counts(s)) {
    EXPECT_GT(c, 0u);
    layered += c;
  }
  EXPECT_EQ(layered, s.order());
}

TEST_P(RandomSpec, DistanceAndRouting) {
  const RadixSpec& s = GetParam();
  const auto labels = all_labels(s);
  const Label root = Label::root(s);
  for (const Label& x : labels) {
    EXPECT_EQ(dist_to_root(x), distance(x, root).value);
    const Path d = descent(x);
    EXPECT_EQ(d.edge_count(), alt(x));
    for (std::size_t i = 1; i < d.vertices.size(); ++i) {
      EXPECT_EQ(alt(d.vertices[i]) + 1, alt(d.vertices[i - 1]));
    }
    for (const Label& y : labels) {
      const auto dxy = distance(x, y).value;
      EXPECT_EQ(dxy, distance(y, x).value);
      EXPECT_LE(dxy, diameter(s));
      EXPECT_EQ(dxy == 0, x == y);
      if (x == y) continue;
      const Path p = route(x, y);
      EXPECT_EQ(p.edge_count(), dxy);
      EXPECT_EQ(p.vertices[1], next_hop(x, y));
    }
  }
}

TEST(BinomialConjugation, IsAnInvolutiveAutomorphism) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const RadixSpec s = binomial_spec(k);
    const auto labels = all_labels(s);
    for (const Label& x : labels) {
      EXPECT_EQ(conjugate(conjugate(x)), x);
      for (const Label& y : labels) {
        if (x == y) continue;
        EXPECT_EQ(is_adjacent(x, y).has_value(), is_adjacent(conjugate(x), conjugate(y)).has_value());
      }
    }
    EXPECT_TRUE(classify(conjugate(Label::root(s))).is_peripheral);
  }
}

INSTANTIATE_TEST_SUITE_P(Generated, RandomSpec,
                         ::testing::ValuesIn(random_specs(7, 24)),
                         [](const ::testing::TestParamInfo<RadixSpec>& info) {
                           std::string name = "n";
                           for (Digit n : info.param.radices()) name += std::to_string(n);
                           return name + "_" + std::to_string(info.index);
                         });

}  // namespace
}  // namespace hnet
