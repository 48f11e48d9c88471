#include <doctest.h>

#include <random>

#include "oracle/snf_oracle.hpp"
#include "pathdepth/formulas.hpp"
#include "pathdepth/simplicial.hpp"
#include "support.hpp"

using namespace pathdepth;

namespace {

const FieldSpec gf2 = FieldSpec::prime(2);

std::vector<VertexSet> pairs_of(std::size_t n) {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back((VertexSet{1} << i) | (VertexSet{1} << j));
  }
  return out;
}

}  // namespace

TEST_SUITE("simplicial") {
  TEST_CASE("void and empty complexes are different") {
    const auto v = SimplicialComplex::void_complex(3);
    const auto e = SimplicialComplex::from_faces(3, {0});
    CHECK(v.is_void());
    CHECK_FALSE(e.is_void());
    CHECK(e.dimension() == -1);
    CHECK_THROWS_AS((void)v.dimension(), Error);
    CHECK(reduced_homology_dims(v, gf2).empty());
    CHECK(reduced_homology_dims(e, gf2) == std::map<int, std::uint64_t>{{-1, 1}});
  }

  TEST_CASE("from_faces keeps only maximal faces") {
    const auto c = SimplicialComplex::from_faces(3, {0b001, 0b011, 0b110, 0b010});
    CHECK(c.facets() == std::vector<VertexSet>{0b011, 0b110});
    CHECK(c.contains_face(0b100));
    CHECK_FALSE(c.contains_face(0b101));
    CHECK(c.faces().size() == 6);  // {}, 3 vertices, 2 edges
  }

  TEST_CASE("stanley-reisner complexes") {
    CHECK(stanley_reisner(testing::ideal("x1*x2*x3", 3)).facets() == std::vector<VertexSet>{0b011, 0b101, 0b110});
    CHECK(stanley_reisner(MonomialIdeal::zero(RingContext(4))).facets() == std::vector<VertexSet>{0b1111});
    CHECK(stanley_reisner(square_path_ideal(4)).facets() == pairs_of(4));
    try {
      (void)stanley_reisner(testing::ideal("x1^2", 1));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("polarize first") != std::string::npos);
    }
  }

  TEST_CASE("faces of the stanley-reisner complex are the squarefree non-members") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 7;
      const auto i = testing::random_squarefree(rng, n, 6);
      const auto c = stanley_reisner(i);
      for (VertexSet f = 0; f <= full_set(n); ++f) {
        CHECK(c.contains_face(f) == !contains(i, Monomial::from_support(n, f)));
      }
    }
  }

  TEST_CASE("induced subcomplexes") {
    const auto triangle = stanley_reisner(testing::ideal("x1*x2*x3", 3));
    CHECK(induced_subcomplex(triangle, 0b111) == triangle);
    CHECK(induced_subcomplex(triangle, 0b011).facets() == std::vector<VertexSet>{0b011});
    CHECK(induced_subcomplex(triangle, 0).facets() == std::vector<VertexSet>{0});
  }

  TEST_CASE("reduced homology of standard complexes") {
    const auto circle = stanley_reisner(testing::ideal("x1*x2*x3", 3));
    CHECK(reduced_homology_dims(circle, gf2) == std::map<int, std::uint64_t>{{1, 1}});
    const auto simplex = SimplicialComplex::from_faces(4, {0b1111});
    CHECK(reduced_homology_dims(simplex, gf2).empty());
    const auto skeleton = stanley_reisner(square_path_ideal(4));
    CHECK(reduced_homology_dims(skeleton, gf2) == std::map<int, std::uint64_t>{{1, 3}});
    const auto two_points = SimplicialComplex::from_faces(2, {0b01, 0b10});
    CHECK(reduced_homology_dims(two_points, FieldSpec::rationals()) == std::map<int, std::uint64_t>{{0, 1}});
  }

  TEST_CASE("projective plane homology depends on the characteristic") {
    // six-vertex triangulation of RP^2
    const std::vector<VertexSet> tri{0b000111, 0b001101, 0b011001, 0b110001, 0b100011,
                                   0b010110, 0b101100, 0b011010, 0b110100, 0b101010};
    const auto rp2 = SimplicialComplex::from_faces(6, tri);
    CHECK(reduced_homology_dims(rp2, FieldSpec::rationals()).empty());
    CHECK(reduced_homology_dims(rp2, FieldSpec::prime(3)).empty());
    CHECK(reduced_homology_dims(rp2, gf2) == std::map<int, std::uint64_t>{{1, 1}, {2, 1}});
  }

  TEST_CASE("homology agrees with the smith-form oracle on random complexes") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t n = 2 + trial % 6;
      const auto c = stanley_reisner(testing::random_squarefree(rng, n, 5));
      const auto faces = c.faces();
      for (unsigned p : {0u, 2u, 3u}) {
        const auto field = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
        CHECK(reduced_homology_dims(c, field) == oracle::reduced_homology(faces, p));
      }
    }
  }
}
