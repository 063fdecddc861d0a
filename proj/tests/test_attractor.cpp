#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle/geometry.hpp"
#include "sturm/attractor.hpp"
#include "sturm/enumerate.hpp"
#include "sturm/error.hpp"

namespace sturm {
namespace {

const Permutation kSeven(fixtures::kSeven);
const Permutation kStar(fixtures::kSigmaStar);

std::vector<int> line(const Permutation& p) { return {p.one_line().begin(), p.one_line().end()}; }

// Zero numbers from the tangent-orientation crossing count and connections
// straight from the blocking definition.
std::vector<Connection> oracle_connections(const Permutation& p) {
  const std::vector<int> v = line(p);
  const int n = p.size();
  const auto morse = morse_indices(p);
  auto zero = [&](int a, int b) {
    if (a == b) return morse[a];
    const int j = std::min(a, b);
    const int k = std::max(a, b);
    if (j == 1 || k == n) return 0;
    const int up = morse[j + 1] > morse[j] ? 0 : 1;
    return morse[j] - up + oracle::geometric_crossing(v, j, k, j);
  };
  std::vector<Connection> out;
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t) {
      if (morse[s] <= morse[t]) continue;
      bool blocked = false;
      for (int w = std::min(s, t) + 1; w < std::max(s, t); ++w)
        if (zero(w, s) == zero(t, w) && zero(t, w) == zero(t, s)) blocked = true;
      if (!blocked) out.emplace_back(s, t);
    }
  return out;
}

TEST(Connections, Seven) {
  const AttractorModel m = build_model(kSeven);
  const std::vector<Connection> expected{{2, 1}, {2, 7}, {3, 1}, {3, 2}, {3, 4}, {3, 5},
                                         {3, 6}, {3, 7}, {4, 1}, {4, 5}, {6, 5}, {6, 7}};
  EXPECT_EQ(m.connections(), expected);
  EXPECT_TRUE(m.connects(3, 6));
  EXPECT_FALSE(m.connects(6, 3));
  EXPECT_FALSE(m.connects(2, 5));
  EXPECT_FALSE(m.connects(3, 3));
}

TEST(Connections, BlockerReported) {
  const AttractorModel m = build_model(kSeven);
  const ZAdjacency adj = is_z_adjacent(m, 2, 5);
  EXPECT_FALSE(adj.adjacent);
  ASSERT_TRUE(adj.blocker.has_value());
  EXPECT_TRUE(is_z_adjacent(m, 3, 6).adjacent);
  EXPECT_TRUE(connects(m, 4, 5));
}

TEST(Connections, AgreeWithGeometricOracle) {
  for (int n : {3, 5, 7, 9})
    for (const Permutation& p : enumerate_sturm(n))
      ASSERT_EQ(build_model(p).connections(), oracle_connections(p)) << format_permutation(p);
}

TEST(Connections, ReachableIsTransitive) {
  const AttractorModel m = build_model(kSeven);
  EXPECT_TRUE(m.reachable(3, 5));
  EXPECT_TRUE(m.reachable(4, 5));
  EXPECT_FALSE(m.reachable(5, 3));
  EXPECT_FALSE(m.reachable(3, 3));
  for (const auto& [s, t] : m.connections()) EXPECT_TRUE(m.reachable(s, t));
}

TEST(Graph, NodesAndEdges) {
  const ConnectionGraph g = connection_graph(build_model(kSeven));
  ASSERT_EQ(g.nodes.size(), 7u);
  EXPECT_EQ(g.nodes[2].label, 3);
  EXPECT_EQ(g.nodes[2].morse, 2);
  EXPECT_EQ(g.edges.size(), 12u);
}

TEST(Neighbors, Seven) {
  const NeighborQuartet q = boundary_neighbors(build_model(kSeven), 3);
  EXPECT_EQ(q.w0_minus, 2);
  EXPECT_EQ(q.w0_plus, 4);
  EXPECT_EQ(q.w1_minus, 6);
  EXPECT_EQ(q.w1_plus, 2);
  EXPECT_EQ(q.get(Boundary::x1, Sign::minus), 6);
}

TEST(Neighbors, EndsHaveOnlyOneSide) {
  const NeighborQuartet q = boundary_neighbors(build_model(kSeven), 1);
  EXPECT_FALSE(q.w0_minus.has_value());
  EXPECT_FALSE(q.w1_minus.has_value());
  EXPECT_EQ(q.w0_plus, 2);
  EXPECT_EQ(q.w1_plus, 4);
}

TEST(TargetSets, Seven) {
  const AttractorModel m = build_model(kSeven);
  EXPECT_EQ(target_set(m, 3, 1, Sign::plus), (std::vector<Label>{4, 5, 6}));
  EXPECT_EQ(target_set(m, 3, 1, Sign::minus), (std::vector<Label>{2}));
  EXPECT_EQ(target_set(m, 3, 0, Sign::plus), (std::vector<Label>{7}));
  EXPECT_EQ(target_set(m, 3, 0, Sign::minus), (std::vector<Label>{1}));
  EXPECT_THROW(target_set(m, 1, 0, Sign::plus), Error);
  EXPECT_THROW(target_set(m, 3, 2, Sign::plus), Error);
}

TEST(Minimax, Seven) {
  const MinimaxEquilibria e = minimax(build_model(kSeven), 3, 1, Sign::plus);
  EXPECT_EQ(e.closest_x0, 4);
  EXPECT_EQ(e.closest_x1, 6);
  EXPECT_EQ(e.most_distant_x0, 6);
  EXPECT_EQ(e.most_distant_x1, 4);
  EXPECT_EQ(e.closest(Boundary::x1), 6);
  EXPECT_EQ(e.most_distant(Boundary::x0), 6);
}

TEST(Minimax, SigmaStar) {
  const AttractorModel m = build_model(kStar);
  EXPECT_EQ(target_set(m, 3, 1, Sign::plus), (std::vector<Label>{4, 7, 8, 9, 10}));
  const MinimaxEquilibria e = minimax(m, 3, 1, Sign::plus);
  EXPECT_EQ(e.closest_x0, 4);
  EXPECT_EQ(e.closest_x1, 10);
  EXPECT_EQ(e.most_distant_x0, 10);
  EXPECT_EQ(e.most_distant_x1, 4);
  const NeighborQuartet q = boundary_neighbors(m, 3);
  EXPECT_EQ(q.w0_plus, 4);
  EXPECT_EQ(q.w1_minus, 10);
}

TEST(Theorem, IdentifiedSign) {
  EXPECT_EQ(identified_sign(Boundary::x0, Sign::plus, 1), Sign::plus);
  EXPECT_EQ(identified_sign(Boundary::x0, Sign::minus, 2), Sign::minus);
  EXPECT_EQ(identified_sign(Boundary::x1, Sign::minus, 1), Sign::minus);
  EXPECT_EQ(identified_sign(Boundary::x1, Sign::minus, 2), Sign::plus);
  EXPECT_EQ(identified_sign(Boundary::x1, Sign::plus, 2), Sign::minus);
}

TEST(Theorem, SigmaStarVerdict) {
  const TheoremVerdict v = verify_minimax_theorem(build_model(kStar), 3);
  EXPECT_TRUE(v.passed());
  EXPECT_TRUE(v.extended_passed());
  EXPECT_EQ(v.n, 2);
  bool saw_w0_plus = false;
  for (const MinimaxCase& c : v.cases) {
    if (c.boundary == Boundary::x0 && c.sign == Sign::plus) {
      saw_w0_plus = true;
      EXPECT_EQ(c.neighbor, 4);
      EXPECT_EQ(c.closest, 4);
      EXPECT_EQ(c.most_distant_opposite, 4);
    }
    EXPECT_FALSE(c.blocking_triple.has_value());
  }
  EXPECT_TRUE(saw_w0_plus);
}

TEST(Theorem, RejectsStableBase) {
  EXPECT_THROW(verify_minimax_theorem(build_model(kSeven), 1), Error);
}

TEST(Theorem, IdentificationsCoverNeighbours) {
  const auto ids = identify_neighbors(build_model(kSeven), 3);
  ASSERT_EQ(ids.size(), 4u);
  for (const auto& id : ids) {
    EXPECT_EQ(id.applicable, id.neighbor_morse == 1);
    if (id.applicable) EXPECT_TRUE(id.holds);
  }
}

TEST(Theorem, HoldsExhaustively) {
  for (int n : {3, 5, 7, 9})
    for (const Permutation& p : enumerate_sturm(n)) {
      const AttractorModel m = build_model(p);
      for (Label O = 1; O <= n; ++O) {
        if (m.morse()[O] == 0) continue;
        const TheoremVerdict v = verify_minimax_theorem(m, O);
        ASSERT_TRUE(v.passed()) << format_permutation(p) << " O=" << O;
        ASSERT_TRUE(v.extended_passed()) << format_permutation(p) << " O=" << O;
      }
    }
}

}  // namespace
}  // namespace sturm
