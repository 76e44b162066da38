#include <random>

#include "cosets/complex.hpp"
#include "cosets/errors.hpp"
#include "doctest.h"

using namespace cosets;

namespace {

using Faces = std::vector<std::vector<std::uint32_t>>;

SimplicialComplex random_complex(std::mt19937& rng, std::size_t vertices, std::size_t facets, std::size_t max_size) {
  Faces faces;
  for (std::size_t i = 0; i < facets; ++i) {
    std::vector<std::uint32_t> f;
    for (std::uint32_t v = 0; v < vertices; ++v)
      if (rng() % 2) f.push_back(v);
    while (f.size() > max_size) f.erase(f.begin() + static_cast<long>(rng() % f.size()));
    if (!f.empty()) faces.push_back(f);
  }
  return SimplicialComplex::from_faces(vertices, faces);
}

// Dense boundary composition, entry by entry, over the integers.
bool boundary_squares_to_zero(const SimplicialComplex& x, int k, unsigned p) {
  auto upper = boundary_rows(x, k + 1);
  auto lower = boundary_rows(x, k);
  std::vector<long long> acc;
  for (const auto& row : upper) {
    acc.assign(x.face_count(k - 1), 0);
    for (auto [c, v] : row)
      for (auto [c2, v2] : lower[c]) acc[c2] += static_cast<long long>(v) * v2;
    for (long long a : acc)
      if (a % static_cast<long long>(p) != 0) return false;
  }
  return true;
}

SimplicialComplex real_projective_plane() {
  return SimplicialComplex::from_faces(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

}  // namespace

TEST_CASE("order complex of small posets") {
  SimplicialComplex empty = order_complex(FinitePoset::antichain(0));
  CHECK(empty.f_vector() == std::vector<std::size_t>{1});
  CHECK(empty.dimension() == -1);

  auto two = order_complex(FinitePoset::from_relations(2, {{0, 1}}));
  CHECK(two.f_vector() == std::vector<std::size_t>{1, 2, 1});

  // A 3-chain is a 2-simplex.
  auto chain = order_complex(FinitePoset::from_relations(3, {{0, 1}, {1, 2}}));
  CHECK(chain.f_vector() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(chain.is_downward_closed());
  CHECK_THROWS_AS(FinitePoset::from_relations(2, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("join") {
  auto x = SimplicialComplex::points(3);
  auto xe = join(x, SimplicialComplex());
  CHECK(xe.f_vector() == x.f_vector());
  CHECK(join(SimplicialComplex::points(2), SimplicialComplex::points(2)).f_vector() == std::vector<std::size_t>{1, 4, 4});
  CHECK(join(SimplicialComplex::points(2), SimplicialComplex::points(9)).f_vector() == std::vector<std::size_t>{1, 11, 18});
}

TEST_CASE("reduced Euler characteristic and Betti numbers") {
  CHECK(reduced_euler_characteristic(SimplicialComplex()) == -1);
  auto pts = reduced_betti(SimplicialComplex::points(3), 2);
  CHECK(pts.at(0) == 2);
  CHECK(pts.at(-1) == 0);

  auto empty = reduced_betti(SimplicialComplex(), 2);
  CHECK(empty.at(-1) == 1);
  CHECK_FALSE(is_acyclic(SimplicialComplex(), 2));
  CHECK(is_acyclic(SimplicialComplex::simplex(3), 2));
  CHECK(is_acyclic(SimplicialComplex::simplex(3), 5));

  // Boundary of the 3-simplex is a 2-sphere.
  auto sphere = SimplicialComplex::from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  for (unsigned p : {2u, 3u}) {
    auto b = reduced_betti(sphere, p);
    CHECK(b.at(2) == 1);
    CHECK(b.euler_characteristic() == reduced_euler_characteristic(sphere));
  }

  // The coefficient field matters: H_1(RP^2; Z) = Z/2.
  auto rp2 = real_projective_plane();
  CHECK(rp2.f_vector() == std::vector<std::size_t>{1, 6, 15, 10});
  auto b2 = reduced_betti(rp2, 2);
  CHECK(b2.at(1) == 1);
  CHECK(b2.at(2) == 1);
  CHECK(is_acyclic(rp2, 3));
}

TEST_CASE("kunneth_join_betti") {
  BettiVector unit{2, {1}};
  BettiVector y{2, {0, 3, 0, 2}};
  CHECK(kunneth_join_betti(unit, y) == y);
  BettiVector point_pair{2, {0, 1}};
  CHECK(kunneth_join_betti(point_pair, point_pair) == BettiVector{2, {0, 0, 1}});
  BettiVector eight{2, {0, 8}};
  CHECK(kunneth_join_betti(point_pair, eight).at(1) == 8);
  CHECK_THROWS_AS(kunneth_join_betti(BettiVector{2, {1}}, BettiVector{3, {1}}), MismatchError);
}

TEST_CASE("properties on random complexes") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = random_complex(rng, 6, 1 + rng() % 5, 4);
    auto y = random_complex(rng, 5, 1 + rng() % 4, 3);
    CHECK(x.is_downward_closed());
    for (int k = 1; k < x.dimension(); ++k) {
      CHECK(boundary_squares_to_zero(x, k, 2));
      CHECK(boundary_squares_to_zero(x, k, 3));
    }
    // Euler-Poincare.
    for (unsigned p : {2u, 3u, 5u}) CHECK(reduced_betti(x, p).euler_characteristic() == reduced_euler_characteristic(x));

    // f-vector of a join is the convolution of the factors' f-vectors.
    auto xy = join(x, y);
    auto fx = x.f_vector(), fy = y.f_vector(), fz = xy.f_vector();
    std::vector<std::size_t> conv(fx.size() + fy.size() - 1, 0);
    for (std::size_t i = 0; i < fx.size(); ++i)
      for (std::size_t j = 0; j < fy.size(); ++j) conv[i + j] += fx[i] * fy[j];
    CHECK(fz == conv);

    // Kunneth for joins, direct construction against the formula.
    for (unsigned p : {2u, 3u})
      CHECK(reduced_betti(xy, p) == kunneth_join_betti(reduced_betti(x, p), reduced_betti(y, p)));
  }
}
