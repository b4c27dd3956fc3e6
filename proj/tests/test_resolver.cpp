// Copyright 2026 The metdim Authors
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


#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "metdim/composer.hpp"
#include "metdim/domination.hpp"
#include "metdim/error.hpp"
#include "metdim/resolver.hpp"
#include "metdim/tree.hpp"
#include "oracle.hpp"

namespace metdim {
namespace {

Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

TEST(IsResolving, Basics) {
  EXPECT_TRUE(is_resolving(petersen(), {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
  EXPECT_TRUE(is_resolving(path_graph(4), {0}));
  EXPECT_FALSE(is_resolving(cycle_graph(4), {0}));
  EXPECT_TRUE(is_resolving(cycle_graph(4), {0, 1}));
  EXPECT_FALSE(is_resolving(cycle_graph(4), {0, 2}));
  EXPECT_THROW(is_resolving(path_graph(3), {5}), InvalidArgument);
  const Resolver r(cycle_graph(4));
  EXPECT_TRUE(r.is_resolving({1, 2}));
  EXPECT_FALSE(r.is_resolving({1, 3}));
}

TEST(Resolver, RejectsBadInput) {
  EXPECT_THROW(Resolver(Graph(3, {{0, 1}})), NotConnected);
  EXPECT_THROW(Resolver(empty_graph(1)), InvalidArgument);
  Limits small;
  small.max_search_order = 5;
  EXPECT_THROW(Resolver(path_graph(6), small), GuardrailExceeded);
  EXPECT_THROW(Resolver(path_graph(65)), GuardrailExceeded);
}

TEST(Resolver, NamedDimensions) {
  EXPECT_EQ(metric_dimension(complete_graph(6)).size, 5u);
  EXPECT_EQ(metric_dimension(complete_graph(6)).witness, (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(metric_dimension(star_graph(5)).size, 4u);
  EXPECT_EQ(metric_dimension(petersen()).size, 3u);
  EXPECT_EQ(metric_dimension(path_graph(2)).size, 1u);
  EXPECT_EQ(metric_dimension(path_graph(7)).witness, (VertexSet{0}));
  EXPECT_EQ(metric_dimension(cycle_graph(9)).size, 2u);
  EXPECT_EQ(metric_dimension(join_with_k1(fixtures::apex_member_h())).size, 3u);
}

TEST(Resolver, LargeOrderStillExact) {
  EXPECT_EQ(metric_dimension(path_graph(64)).size, 1u);
  EXPECT_EQ(metric_dimension(cycle_graph(40)).size, 2u);
  EXPECT_EQ(metric_dimension(complete_graph(30)).size, 29u);
}

TEST(Resolver, EnumeratesBases) {
  EXPECT_EQ(enumerate_bases(path_graph(3)).bases, (std::vector<VertexSet>{{0}, {2}}));
  EXPECT_EQ(enumerate_bases(cycle_graph(4)).bases,
            (std::vector<VertexSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  EXPECT_EQ(enumerate_bases(complete_graph(4)).bases,
            (std::vector<VertexSet>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
}

TEST(Resolver, EnumerationCapAndGuardrail) {
  const ResolveReport r = enumerate_bases(complete_graph(5), 3);
  EXPECT_EQ(r.bases.size(), 3u);
  EXPECT_TRUE(r.truncated);
  EXPECT_FALSE(enumerate_bases(complete_graph(5), 5).truncated);
  EXPECT_THROW(enumerate_bases(path_graph(25)), GuardrailExceeded);
  Limits raised;
  raised.max_enumeration_order = 30;
  EXPECT_EQ(enumerate_bases(path_graph(25), std::nullopt, raised).bases.size(), 2u);
  Limits tiny;
  tiny.max_bases = 2;
  EXPECT_THROW(Resolver(complete_graph(4), tiny).all_bases("test"), TruncatedEnumeration);
}

TEST(Resolver, UpperDimension) {
  EXPECT_EQ(upper_metric_dimension(path_graph(5)), 2u);
  EXPECT_EQ(upper_metric_dimension(cycle_graph(7)), 2u);
  EXPECT_EQ(upper_metric_dimension(complete_graph(5)), 4u);
  EXPECT_EQ(upper_metric_dimension(path_graph(2)), 1u);
  EXPECT_EQ(upper_metric_dimension(path_graph(3)), 1u);
  EXPECT_EQ(upper_metric_dimension(path_graph(4)), 2u);
}

TEST(Resolver, AttachingDimension) {
  EXPECT_EQ(attaching_dimension(complete_graph(5), {1, 3}).size, 2u);
  EXPECT_EQ(attaching_dimension(path_graph(6), {2}).size, 1u);
  EXPECT_EQ(attaching_dimension(cycle_graph(6), {0, 3}).size, 1u);
  EXPECT_EQ(attaching_dimension(cycle_graph(6), {0, 2}).size, 0u);
  const MinimumSet m = attaching_dimension(complete_graph(5), {0});
  EXPECT_EQ(m.size, 3u);
  EXPECT_EQ(m.witness, (VertexSet{1, 2, 3}));
  EXPECT_EQ(attaching_dimension(star_graph(3), {}).size, 2u);
}

TEST(Resolver, Tau) {
  EXPECT_EQ(tau(cycle_graph(4), {0, 1, 2, 3}), 2u);
  EXPECT_EQ(tau(complete_graph(3), {0}), 1u);
  EXPECT_EQ(tau(petersen(), {}), 0u);
}

TEST(Resolver, BasisMembership) {
  EXPECT_TRUE(basis_membership(path_graph(5), 0));
  EXPECT_FALSE(basis_membership(path_graph(5), 2));
  const Graph h = fixtures::radius_three_h();
  EXPECT_FALSE(basis_membership(join_with_k1(h), h.order()));
  const Graph c = fixtures::apex_member_h();
  EXPECT_TRUE(basis_membership(join_with_k1(c), c.order()));
}

TEST(Resolver, IsolationIndex) {
  EXPECT_EQ(isolation_index(complete_graph(5)), 1u);
  EXPECT_EQ(isolation_index(cycle_graph(4)), 0u);
  EXPECT_EQ(isolation_index(build_family_F(4)), 5u);
}

TEST(Resolver, FullReport) {
  const ResolveReport r = Resolver(cycle_graph(5)).full_report();
  EXPECT_EQ(r.dim, 2u);
  EXPECT_EQ(r.upper_dim, 2u);
  EXPECT_EQ(r.bases.size(), 10u);
  EXPECT_EQ(r.membership, std::vector<bool>(5, true));
}

TEST(Domination, Examples) {
  EXPECT_EQ(domination_number(complete_graph(6)).size, 1u);
  EXPECT_EQ(domination_number(cycle_graph(4)).size, 2u);
  EXPECT_EQ(domination_number(cycle_graph(4)).witness, (VertexSet{0, 1}));
  EXPECT_EQ(domination_number(empty_graph(3)).size, 3u);
  EXPECT_EQ(domination_number(star_graph(4)).witness, (VertexSet{0}));
  EXPECT_THROW(domination_number(path_graph(65)), GuardrailExceeded);
}

TEST(Domination, IsolatedAfterRemoval) {
  EXPECT_TRUE(isolated_after_removal(complete_graph(3), {0}).empty());
  EXPECT_EQ(isolated_after_removal(star_graph(3), {0}), (VertexSet{1, 2, 3}));
  EXPECT_TRUE(isolated_after_removal(cycle_graph(4), {}).empty());
}

TEST(TreeProfile, Examples) {
  const TreeProfile s = tree_profile(star_graph(4));
  EXPECT_EQ(s.leaf_count, 4u);
  EXPECT_EQ(s.exterior_major, (VertexSet{0}));
  EXPECT_EQ(s.terminal_degree[0], 4u);
  const TreeProfile t = tree_profile(build_tree_T(3, 7, 12));
  EXPECT_EQ(t.leaf_count, 7u);
  EXPECT_EQ(t.exterior_count(), 4u);
  const TreeProfile p = tree_profile(path_graph(5));
  EXPECT_EQ(p.leaf_count, 2u);
  EXPECT_EQ(p.exterior_count(), 0u);
  EXPECT_THROW(tree_profile(cycle_graph(4)), InvalidArgument);
  EXPECT_THROW(tree_profile(path_graph(2)), InvalidArgument);
}

TEST(TreeProfile, TwoExteriorMajorsJoinedByAPath) {
  const Graph t(9, {{0, 2}, {0, 3}, {0, 5}, {5, 4}, {4, 6}, {6, 1}, {1, 7}, {1, 8}});
  const TreeProfile p = tree_profile(t);
  EXPECT_EQ(p.major, (VertexSet{0, 1}));
  EXPECT_EQ(p.terminal_degree[0], 2u);
  EXPECT_EQ(p.terminal_degree[1], 2u);
  EXPECT_EQ(p.terminal_owner[7], Vertex{1});
  EXPECT_FALSE(p.terminal_owner[4].has_value());
}

class ResolverProperty : public ::testing::TestWithParam<int> {};

TEST_P(ResolverProperty, AgreesWithBruteForce) {
  std::mt19937 rng(static_cast<unsigned>(GetParam()));
  for (int trial = 0; trial < 8; ++trial) {
    std::uniform_int_distribution<std::size_t> pick_n(2, 9);
    const std::size_t n = pick_n(rng);
    const Graph g = oracle::random_connected(n, 0.3, rng);
    const Resolver r(g);
    const auto ref_bases = oracle::bases(g);
    ASSERT_EQ(r.dim(), oracle::dim(g));
    const ResolveReport rep = r.enumerate_bases();
    ASSERT_EQ(rep.bases, ref_bases);
    ASSERT_EQ(r.metric_dimension().witness, ref_bases.front());
    ASSERT_EQ(r.upper_dimension(), oracle::upper_dim(g));
    ASSERT_GE(r.upper_dimension(), r.dim());
    ASSERT_EQ(r.isolation_index(), oracle::isolation_index(g));
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_EQ(r.basis_membership(v), oracle::in_some_basis(g, v));
      ASSERT_EQ(r.basis_membership(v), static_cast<bool>(rep.membership[v]));
    }
    for (const auto& b : rep.bases) ASSERT_TRUE(is_resolving(g, b));

    VertexSet a;
    std::bernoulli_distribution coin(0.35);
    for (Vertex v = 0; v < n; ++v)
      if (coin(rng)) a.push_back(v);
    const MinimumSet ds = r.attaching_dimension(a);
    ASSERT_EQ(ds.size, oracle::dim_star(g, a));
    VertexSet joint = a;
    joint.insert(joint.end(), ds.witness.begin(), ds.witness.end());
    ASSERT_TRUE(is_resolving(g, normalized(joint)));
    for (Vertex w : ds.witness) ASSERT_FALSE(contains(a, w));
    ASSERT_LE(ds.size, r.dim());
    ASSERT_EQ(r.tau(a), oracle::tau(g, a));
    ASSERT_LE(r.tau(a), std::min(a.size(), r.dim()));

    const DominatingSet dom = domination_number(g);
    ASSERT_EQ(dom.size, oracle::domination(g));
    ASSERT_LE(2 * dom.size, n);
    ASSERT_EQ(dom.witness.size(), dom.size);
    ASSERT_TRUE(isolated_after_removal(g, {}).empty());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ResolverProperty, ::testing::Range(1, 9));

TEST(ResolverProperty, SupersetOfResolvingSetResolves) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(3 + trial % 10, 0.2, rng);
    VertexSet b = metric_dimension(g).witness;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (contains(b, v)) continue;
      b.insert(std::lower_bound(b.begin(), b.end(), v), v);
      ASSERT_TRUE(is_resolving(g, b));
    }
  }
}

}  // namespace
}  // namespace metdim
