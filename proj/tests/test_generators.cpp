#include "planelog/generators.hpp"
#include "planelog/morphism.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace planelog;

TEST_CASE("projective planes") {
  const TwoFrame fano = gen_pg2(2);
  CHECK(fano.num_points() == 7);
  CHECK(fano.num_lines() == 7);
  for (std::size_t l = 0; l < 7; ++l) CHECK(fano.points_on(l).count() == 3);
  CHECK(fano.point_labels().front() == "P(0,0,1)");
  CHECK(fano.line_labels().back() == "L(1,1,1)");

  const TwoFrame pg3 = gen_pg2(3);
  CHECK(pg3.num_points() == 13);
  for (std::size_t l = 0; l < 13; ++l) CHECK(pg3.points_on(l).count() == 4);
  CHECK(gen_pg2(13).num_points() == 183);

  CHECK_THROWS_AS(gen_pg2(4), PreconditionError);
  CHECK_THROWS_AS(gen_pg2(1), PreconditionError);
  CHECK_THROWS_AS(gen_pg2(17), PreconditionError);
}

TEST_CASE("plus of PG(2,p) is a non-degenerate projective 1-plane") {
  for (int p : {2, 3}) {
    auto c = classify(plus(gen_pg2(p)));
    CHECK(c.kind == QuasiKind::QuasiProjective);
    CHECK(c.is_plane);
    CHECK(c.is_nondegenerate);
  }
}

TEST_CASE("polarity graphs") {
  const OneFrame g = gen_polarity_graph(2);
  CHECK(g.size() == 7);
  const auto pts = projective_points(2);
  std::vector<Triple> absolute;
  for (std::size_t i = 0; i < 7; ++i)
    if (g.related(i, i)) absolute.push_back(pts[i]);
  CHECK(absolute == std::vector<Triple>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(check_O(g, OCondition::O3).holds);

  for (int p : {2, 3, 5}) {
    const OneFrame h = gen_polarity_graph(p);
    CHECK(h.size() == static_cast<std::size_t>(p * p + p + 1));
    std::size_t loops = 0;
    for (std::size_t i = 0; i < h.size(); ++i) loops += h.related(i, i);
    CHECK(loops == static_cast<std::size_t>(p + 1));
    CHECK(oracle::o3(h) == true);
    CHECK(oracle::o5(h) == true);
  }
  CHECK_THROWS_AS(gen_polarity_graph(6), PreconditionError);
}

TEST_CASE("windmills") {
  CHECK(gen_windmill(1) == OneFrame(3, {{0, 1}, {1, 2}, {0, 2}}, true));
  for (std::size_t k = 1; k <= 5; ++k) {
    const OneFrame w = gen_windmill(k);
    CHECK(w.size() == 2 * k + 1);
    CHECK(check_irreflexive(w).holds);
    // any two distinct vertices have exactly one common neighbour
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b) CHECK((w.neighbours(a) & w.neighbours(b)).count() == 1);
    CHECK(check_O(w, OCondition::O5).holds);
    CHECK(check_O(w, OCondition::O3).holds);
    CHECK_FALSE(check_O(w, OCondition::O4Prime).holds);
    CHECK_FALSE(oracle::o4_prime(w));
  }
  CHECK_THROWS_AS(gen_windmill(0), PreconditionError);
}

TEST_CASE("the seed path") {
  const OneFrame f0 = gen_f0();
  CHECK(f0.edges().size() == 6);
  CHECK(check_O(f0, OCondition::O4Prime).tuple == std::vector<std::size_t>{0, 1, 2, 3});
  auto c = classify(f0);
  CHECK(c.is_serial);
  CHECK(c.kind != QuasiKind::QuasiElliptic);
}

TEST_CASE("random quasi-1-planes") {
  auto r = gen_random_quasi(1, RandomKind::Elliptic, 5);
  CHECK(r.frame == OneFrame(1, {{0, 0}}));
  r = gen_random_quasi(2, RandomKind::Projective, 5);
  CHECK(r.frame == OneFrame(2, {{0, 1}}, true));
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    for (auto kind : {RandomKind::Elliptic, RandomKind::Projective})
      for (std::size_t n : {3u, 6u, 9u, 12u}) {
        const OneFrame f = gen_random_quasi(n, kind, seed).frame;
        CHECK(f.size() == n);
        CHECK(oracle::quasi(f));
        CHECK(oracle::connected(f));
        CHECK(oracle::i2_class_count(f) == (kind == RandomKind::Elliptic ? 1u : 2u));
        if (kind == RandomKind::Elliptic) CHECK(oracle::o5(f));
      }
  CHECK(gen_random_quasi(6, RandomKind::Elliptic, 7).frame == gen_random_quasi(6, RandomKind::Elliptic, 7).frame);
  CHECK_THROWS_AS(gen_random_quasi(13, RandomKind::Elliptic, 1), PreconditionError);
  CHECK_THROWS_AS(gen_random_quasi(1, RandomKind::Projective, 1), PreconditionError);
  CHECK_THROWS_AS(gen_random_quasi(12, RandomKind::Projective, 1, 0), std::runtime_error);
}
