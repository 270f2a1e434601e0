#include <doctest.h>

#include <random>

#include "support.hpp"
#include "toric/linalg.hpp"

using namespace toric;
using support::cone;
using support::lattice_vectors;

namespace {

Polytope poly(std::size_t dim, std::initializer_list<std::initializer_list<long>> rows) {
  return Polytope::from_points(dim, lattice_vectors(rows));
}

Polytope cross_polytope(std::size_t m) {
  std::vector<LatticeVector> v;
  for (std::size_t i = 0; i < m; ++i) {
    v.push_back(LatticeVector::unit(m, i));
    v.push_back(-LatticeVector::unit(m, i));
  }
  return Polytope::from_points(m, v);
}

std::vector<oracle::Vec> integral_vertices(const Polytope& p) {
  std::vector<oracle::Vec> out;
  for (const auto& v : p.vertices()) out.push_back(support::to_vec(v.to_lattice()));
  return out;
}

void check_faces_against_oracle(const Polytope& p, std::int64_t box) {
  const auto lattice = polytope_faces(p);
  const auto expected = oracle::polytope_faces(integral_vertices(p), p.dim(), box);
  for (std::size_t k = 0; k <= p.dim(); ++k) {
    const auto& got = lattice.faces[k];
    const std::set<std::vector<std::size_t>> got_set(got.begin(), got.end());
    CHECK(got_set == expected.at(k));
  }
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("square and its polar") {
    const auto sq = poly(2, {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}});
    CHECK(polar_polytope(sq) == cross_polytope(2));
    CHECK(polytope_faces(sq).counts() == std::vector<std::size_t>{4, 4, 1});
  }

  TEST_CASE("3-cube polar is the octahedron and back") {
    const auto cube = cube_polytope(3);
    const auto oct = polar_polytope(cube);
    CHECK(oct == cross_polytope(3));
    CHECK(polar_polytope(oct) == cube);
  }

  TEST_CASE("face counts match the oracle") {
    const auto cube = cube_polytope(3);
    CHECK(polytope_faces(cube).counts() == std::vector<std::size_t>{8, 12, 6, 1});
    CHECK(polytope_faces(cross_polytope(3)).counts() == std::vector<std::size_t>{6, 12, 8, 1});
    check_faces_against_oracle(cube, 1);
    check_faces_against_oracle(cross_polytope(3), 1);
    check_faces_against_oracle(poly(3, {{0, 0, 0}, {2, 0, 0}, {0, 3, 0}, {0, 0, 1}, {1, 1, 1}}), 12);
  }

  TEST_CASE("euler relation on random 3-polytopes") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
      std::vector<LatticeVector> pts;
      for (int i = 0; i < 8; ++i) pts.push_back(support::random_vector(rng, 3, -1, 1));
      const auto p = Polytope::from_points(3, pts);
      if (!p.is_full_dimensional()) continue;
      const auto c = polytope_faces(p).counts();
      CHECK(static_cast<long>(c[0]) - static_cast<long>(c[1]) + static_cast<long>(c[2]) == 2);
      check_faces_against_oracle(p, 16);
    }
  }

  TEST_CASE("non-vertices are dropped") {
    const auto p = poly(2, {{0, 0}, {2, 0}, {0, 2}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(p.vertices().size() == 3);
  }

  TEST_CASE("rational vertices") {
    const std::vector<RationalVector> pts{{Rational(1, 2), Rational(0)}, {Rational(-1, 2), Rational(0)},
                                          {Rational(0), Rational(1, 3)}, {Rational(0), Rational(-1, 3)}};
    const auto p = Polytope::from_points(2, pts);
    CHECK_FALSE(p.is_lattice());
    const auto q = polar_polytope(p);
    CHECK(q == poly(2, {{2, 3}, {2, -3}, {-2, 3}, {-2, -3}}));
    CHECK(polar_polytope(q) == p);
  }

  TEST_CASE("double polar on random centrally symmetric polytopes") {
    std::mt19937_64 rng(4);
    int checked = 0;
    for (int t = 0; t < 60; ++t) {
      const std::size_t dim = 2 + t % 2;
      std::vector<LatticeVector> pts;
      for (int i = 0; i < 3; ++i) {
        const auto v = support::random_vector(rng, dim, -4, 4);
        pts.push_back(v);
        pts.push_back(-v);
      }
      const auto p = Polytope::from_points(dim, pts);
      if (!p.is_full_dimensional()) continue;
      CHECK(polar_polytope(polar_polytope(p)) == p);
      ++checked;
    }
    CHECK(checked > 30);
  }

  TEST_CASE("errors") {
    const auto shifted = poly(2, {{0, 0}, {1, 0}, {0, 1}});
    try {
      polar_polytope(shifted);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OriginNotInterior);
    }
    try {
      polytope_faces(poly(2, {{0, 0}, {1, 1}}));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegeneratePolytope);
    }
    const std::vector<RationalVector> half{{Rational(1, 2)}, {Rational(-1)}};
    try {
      face_fan(Polytope::from_points(1, half));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonLatticeVertex);
    }
    CHECK_THROWS_AS(cube_polytope(0), Error);
    CHECK_THROWS_AS(cube_polytope(5), Error);
  }
}

TEST_SUITE("fan") {
  TEST_CASE("face fan of the octahedron has the eight octants") {
    const auto fan = face_fan(cross_polytope(3));
    const auto max = fan.maximal_cones();
    CHECK(max.size() == 8);
    for (const auto& c : max) {
      CHECK(c.generators().size() == 3);
      CHECK(std::llabs(linalg::determinant(c.generators())) == 1);
    }
    CHECK(is_fan(fan.cones()));
    CHECK(fan.cones().size() == 1 + 6 + 12 + 8);
  }

  TEST_CASE("cross-polytope in the plane gives four quadrants") {
    const auto fan = face_fan(cross_polytope(2));
    CHECK(fan.maximal_cones().size() == 4);
  }

  TEST_CASE("segment gives the fan of the projective line") {
    const auto fan = face_fan(poly(1, {{-1}, {1}}));
    CHECK(fan.cones() == std::vector<Cone>{zero_cone(1), cone(1, {{-1}}), cone(1, {{1}})});
  }

  TEST_CASE("is_fan") {
    const auto orthant = cone(2, {{1, 0}, {0, 1}});
    CHECK(is_fan(cone_faces(orthant)));
    CHECK_FALSE(is_fan(std::vector<Cone>{orthant, zero_cone(2)}));

    auto bad = cone_faces(orthant);
    const auto other = cone_faces(cone(2, {{1, 1}, {-1, 1}}));
    bad.insert(bad.end(), other.begin(), other.end());
    CHECK_FALSE(is_fan(bad));

    CHECK_FALSE(is_fan(std::vector<Cone>{}));
    CHECK_FALSE(is_fan(cone_faces(cone(2, {{1, 0}, {-1, 0}}))));
    CHECK_THROWS_AS(Fan::create(2, bad), Error);
  }

  TEST_CASE("face fans of random symmetric polytopes are fans") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
      std::vector<LatticeVector> pts;
      for (int i = 0; i < 3; ++i) {
        const auto v = support::random_vector(rng, 3, -2, 2);
        pts.push_back(v);
        pts.push_back(-v);
      }
      const auto p = Polytope::from_points(3, pts);
      if (!p.is_full_dimensional()) continue;
      CHECK(is_fan(face_fan(p).cones()));
    }
  }
}
