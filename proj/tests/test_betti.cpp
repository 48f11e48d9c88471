#include <doctest.h>

#include <atomic>
#include <random>

#include "oracle/snf_oracle.hpp"
#include "pathdepth/betti.hpp"
#include "pathdepth/formulas.hpp"
#include "support.hpp"

using namespace pathdepth;

namespace {

const FieldSpec gf2 = FieldSpec::prime(2);

std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> flatten(const BettiTable& t) {
  std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> out;
  for (const auto& [key, value] : t.entries()) out[{key.i, key.subset}] = value;
  return out;
}

}  // namespace

TEST_SUITE("betti") {
  TEST_CASE("betti table of a single cubic") {
    const auto t = hochster_betti(testing::ideal("x1*x2*x3", 3), gf2);
    CHECK(flatten(t) == std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t>{{{0, 0}, 1}, {{1, 0b111}, 1}});
    CHECK(t.projective_dimension() == 1);
    CHECK(t.totals() == std::vector<std::uint64_t>{1, 1});
  }

  TEST_CASE("koszul case of one variable") {
    const auto t = hochster_betti(testing::ideal("x1", 1), gf2);
    CHECK(t.at(1, 0b1) == 1);
    CHECK(t.at(0, 0) == 1);
  }

  TEST_CASE("zero ideal has only beta_0") {
    const auto t = hochster_betti(MonomialIdeal::zero(RingContext(3)), gf2);
    CHECK(t.entries().size() == 1);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.projective_dimension() == 0);
    CHECK(depth_squarefree(MonomialIdeal::zero(RingContext(3)), gf2) == 3);
  }

  TEST_CASE("projective dimension and depth of squared-path ideals") {
    CHECK(projective_dimension(square_path_ideal(7), gf2) == 5);
    CHECK(projective_dimension(square_path_ideal(4), gf2) == 2);
    CHECK(depth_squarefree(square_path_ideal(3), gf2) == 2);
    CHECK(depth_squarefree(square_path_ideal(9), gf2) == 4);
  }

  TEST_CASE("depth of non-squarefree powers through polarization") {
    const auto i = square_path_ideal(4);
    CHECK(depth_general(ideal_power(i, 2), gf2) == 1);
    CHECK(depth_general(ideal_power(i, 3), gf2) == 0);
    CHECK(depth_general(i, gf2) == depth_squarefree(i, gf2));
  }

  TEST_CASE("polarization cap suggests the socle test") {
    HochsterOptions options;
    options.limits.max_polarized_vars = 8;
    try {
      (void)depth_general(ideal_power(square_path_ideal(4), 3), gf2, options);
      FAIL("expected LimitExceeded");
    } catch (const LimitExceeded& e) {
      CHECK(std::string(e.what()).find("socle") != std::string::npos);
    }
  }

  TEST_CASE("subset cap names the required subset count") {
    HochsterOptions options;
    options.limits.max_subsets = 1000;
    try {
      (void)hochster_betti(square_path_ideal(12), gf2, options);
      FAIL("expected LimitExceeded");
    } catch (const LimitExceeded& e) {
      CHECK(std::string(e.what()).find("2^12") != std::string::npos);
    }
    CHECK_THROWS_AS(hochster_betti(testing::ideal("x1^2", 1), gf2), Error);
  }

  TEST_CASE("single-subset queries match the full table") {
    const auto i = square_path_ideal(6);
    const auto t = hochster_betti(i, gf2);
    for (VertexSet w = 0; w < 64; ++w) {
      for (const auto& [k, v] : betti_at_subset(i, w, gf2)) CHECK(t.at(k, w) == v);
    }
    CHECK_THROWS_AS(betti_at_subset(i, VertexSet{1} << 6, gf2), Error);
  }

  TEST_CASE("hochster tables equal the smith-form oracle entry by entry") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const auto i = testing::random_squarefree(rng, n, 6);
      for (unsigned p : {2u, 3u, 0u}) {
        const auto field = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
        CHECK_MESSAGE(flatten(hochster_betti(i, field)) == oracle::hochster_table(i, p), format_ideal(i));
      }
    }
    for (long n = 3; n <= 6; ++n) CHECK(flatten(hochster_betti(square_path_ideal(n), gf2)) == oracle::hochster_table(square_path_ideal(n), 2));
  }

  TEST_CASE("depth of random small ideals matches the koszul oracle") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + trial % 3;
      const auto i = testing::random_ideal(rng, n, 3, 2);
      CHECK_MESSAGE(depth_general(i, gf2) == n - oracle::koszul_projective_dimension(i, 2), format_ideal(i));
    }
  }

  TEST_CASE("worker threads do not change the table") {
    HochsterOptions threaded;
    threaded.threads = 4;
    const auto i = square_path_ideal(11);
    CHECK(flatten(hochster_betti(i, gf2, threaded)) == flatten(hochster_betti(i, gf2)));
  }

  TEST_CASE("progress reports reach the total") {
    HochsterOptions options;
    std::atomic<std::uint64_t> last{0};
    options.progress = [&](std::uint64_t done, std::uint64_t total) {
      CHECK(total == 1024);
      last = std::max<std::uint64_t>(last, done);
    };
    (void)hochster_betti(square_path_ideal(10), gf2, options);
    CHECK(last == 1024);
  }

  TEST_CASE("betti json is sorted by subset size, subset, index") {
    const auto j = betti_to_json(hochster_betti(testing::ideal("x1*x2, x3", 3), gf2));
    CHECK(j.dump() ==
          R"j({"entries":[{"W":[],"beta":1,"i":0},{"W":[3],"beta":1,"i":1},{"W":[1,2],"beta":1,"i":1},)j"
          R"j({"W":[1,2,3],"beta":1,"i":2}],"field":"GF(2)"})j");
  }

  TEST_CASE("auslander-buchsbaum: depth plus pd is the number of variables") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 2 + trial % 7;
      const auto i = testing::random_squarefree(rng, n, 8);
      CHECK(depth_squarefree(i, gf2) + projective_dimension(i, gf2) == n);
    }
  }
}
