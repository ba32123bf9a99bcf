#include <doctest.h>

#include "direach/matrix.hpp"
#include "support/testgen.hpp"

using namespace direach;

namespace {

DistMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const auto r = static_cast<Vertex>(rows.size());
  const auto c = static_cast<Vertex>(rows.empty() ? 0 : rows[0].size());
  DistMatrix m(r, c);
  for (Vertex i = 0; i < r; ++i) {
    for (Vertex j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

constexpr std::int64_t INF = DistMatrix::kInfEntry;

}  // namespace

TEST_CASE("bool_matmul: identity, path row, zero") {
  const BoolMatrix a = testgen::random_bool_matrix(2, 2, 60, 7);
  CHECK(bool_matmul(BoolMatrix::identity(2), a) == a);

  // row of source 0 in path 0->1->2 with self-loops
  BoolMatrix adj = BoolMatrix::identity(3);
  adj.set(0, 1);
  adj.set(1, 2);
  BoolMatrix b(1, 3);
  b.set(0, 0);
  b.set(0, 1);
  const BoolMatrix one = bool_matmul(b, adj);
  CHECK(one.get(0, 0));
  CHECK(one.get(0, 1));
  CHECK(one.get(0, 2));

  const BoolMatrix zero(2, 2);
  CHECK(bool_matmul(zero, a) == BoolMatrix(2, 2));
}

TEST_CASE("bool_matmul: repeated products walk the path frontier") {
  // A' = adjacency of 0->1->2 plus self-loops; products extend reach one hop
  BoolMatrix adj = BoolMatrix::identity(3);
  adj.set(0, 1);
  adj.set(1, 2);
  BoolMatrix row(1, 3);
  row.set(0, 0);

  row = bool_matmul(row, adj);
  CHECK(row.count_ones() == 2);  // {0,1}
  CHECK(row.get(0, 1));
  row = bool_matmul(row, adj);
  CHECK(row.count_ones() == 3);  // {0,1,2}
  CHECK(row.get(0, 2));
}

TEST_CASE("minplus_product: examples") {
  const DistMatrix b = from_rows({{0, 3}, {INF, 0}});
  const DistMatrix a = from_rows({{0, 1}, {INF, 0}});
  const DistMatrix c = minplus_product(b, a);
  CHECK(c == from_rows({{0, 1}, {INF, 0}}));

  CHECK(minplus_product(b, DistMatrix::minplus_identity(2)) == b);

  const DistMatrix inf_row = from_rows({{INF, INF}});
  const DistMatrix out = minplus_product(inf_row, a);
  CHECK(out.at(0, 0) == INF);
  CHECK(out.at(0, 1) == INF);
}

TEST_CASE("products agree with the brute-force triple loop") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 31);  // up to 32
    const Vertex r = 1 + static_cast<Vertex>(seed % 7);

    const BoolMatrix bb = testgen::random_bool_matrix(r, n, 30, seed);
    const BoolMatrix ba = testgen::random_bool_matrix(n, n, 30, seed + 100);
    CHECK(bool_matmul(bb, ba) == testgen::bool_matmul_brute(bb, ba));

    const DistMatrix db = testgen::random_dist_matrix(r, n, 100, 25, seed + 200);
    const DistMatrix da = testgen::random_dist_matrix(n, n, 100, 25, seed + 300);
    CHECK(minplus_product(db, da) == testgen::minplus_brute(db, da));
  }
}

TEST_CASE("products are identical across thread counts") {
  const BoolMatrix bb = testgen::random_bool_matrix(17, 40, 35, 11);
  const BoolMatrix ba = testgen::random_bool_matrix(40, 40, 35, 12);
  CHECK(bool_matmul(bb, ba, 1) == bool_matmul(bb, ba, 3));

  const DistMatrix db = testgen::random_dist_matrix(17, 40, 1000, 20, 13);
  const DistMatrix da = testgen::random_dist_matrix(40, 40, 1000, 20, 14);
  CHECK(minplus_product(db, da, 1) == minplus_product(db, da, 4));
  CHECK(approx_distance_product(db, da, 0.25, 1) == approx_distance_product(db, da, 0.25, 4));
}

TEST_CASE("minplus_product is associative") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 15);  // up to 16
    const DistMatrix b = testgen::random_dist_matrix(3, n, 50, 30, seed);
    const DistMatrix a = testgen::random_dist_matrix(n, n, 50, 30, seed + 1);
    CHECK(minplus_product(minplus_product(b, a), a) == minplus_product(b, minplus_product(a, a)));
  }
}

TEST_CASE("scale_clamp: hand-traced entries") {
  DistMatrix m(1, 3);
  m.at(0, 0) = 5;
  m.at(0, 1) = 0;
  m.at(0, 2) = 9;

  const DistMatrix k2 = scale_clamp(m, 2, 2);  // threshold 8
  CHECK(k2.at(0, 0) == 2);  // ceil(5/4)
  CHECK(k2.at(0, 1) == 0);
  CHECK(k2.at(0, 2) == INF);  // 9 > 8

  const DistMatrix k1 = scale_clamp(m, 1, 2);  // threshold 4
  CHECK(k1.at(0, 0) == INF);  // 5 > 4

  CHECK_THROWS_AS(scale_clamp(m, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(scale_clamp(m, -1, 2), std::invalid_argument);
}

TEST_CASE("approx_distance_product: hand-traced 1x1 cases") {
  SUBCASE("scaled levels") {
    const DistMatrix b = from_rows({{5}});
    const DistMatrix a = from_rows({{3}});
    const DistMatrix c = approx_distance_product(b, a, 0.5);
    CHECK(c.at(0, 0) == 12);  // level k=2 is the only finite one
    // exact product is 8; 8 <= 12 <= (1 + 4*0.5) * 8
    CHECK(c.at(0, 0) >= 8);
    CHECK(c.at(0, 0) <= 24);
  }
  SUBCASE("small entries fall back to the exact product") {
    const DistMatrix b = from_rows({{1}});
    const DistMatrix a = from_rows({{1}});
    CHECK(approx_distance_product(b, a, 0.5).at(0, 0) == 2);
  }
  SUBCASE("infinite rows stay infinite") {
    const DistMatrix b = from_rows({{INF, INF}});
    const DistMatrix a = testgen::random_dist_matrix(2, 2, 64, 0, 3);
    const DistMatrix c = approx_distance_product(b, a, 0.25);
    CHECK(c.at(0, 0) == INF);
    CHECK(c.at(0, 1) == INF);
  }
  SUBCASE("rejects xi <= 0") {
    const DistMatrix b = from_rows({{1}});
    CHECK_THROWS_AS(approx_distance_product(b, b, 0.0), std::invalid_argument);
  }
}

TEST_CASE("approx_distance_product: sandwich bound and integrality") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 15);
    const Vertex r = 1 + static_cast<Vertex>(seed % 5);
    const DistMatrix b = testgen::random_dist_matrix(r, n, 1 << 10, 15, seed * 2 + 1);
    const DistMatrix a = testgen::random_dist_matrix(n, n, 1 << 10, 15, seed * 2 + 2);
    for (const int rdenom : {2, 4, 8}) {
      const double xi = 1.0 / rdenom;
      const DistMatrix exact = testgen::minplus_brute(b, a);
      const DistMatrix approx = approx_distance_product(b, a, xi);
      for (Vertex i = 0; i < exact.rows(); ++i) {
        for (Vertex j = 0; j < exact.cols(); ++j) {
          const std::int64_t e = exact.at(i, j);
          const std::int64_t p = approx.at(i, j);
          if (e == INF) {
            CHECK(p == INF);
            continue;
          }
          CHECK(p >= e);
          // p <= (1 + 4/rdenom) e, in integer arithmetic
          CHECK(p * rdenom <= e * rdenom + 4 * e);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("rows_restrict: selection, copy, empty") {
  const DistMatrix a = testgen::random_dist_matrix(3, 3, 9, 10, 5);
  CHECK(rows_restrict(a, full_subset(3)) == a);

  const DistMatrix first = rows_restrict(a, make_subset({0}, 3));
  CHECK(first.rows() == 1);
  CHECK(first.at(0, 1) == a.at(0, 1));

  const DistMatrix none = rows_restrict(a, make_subset({}, 3));
  CHECK(none.rows() == 0);
  CHECK(none.cols() == 3);

  CHECK_THROWS_AS(rows_restrict(a, make_subset({0}, 4)), std::invalid_argument);
}
