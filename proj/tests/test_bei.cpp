#include "binedge/bei.hpp"
#include "binedge/errors.hpp"
#include "binedge/poly_text.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace binedge;

TEST_CASE("build_gbei") {
  const auto e = build_gbei(2, path_graph(2));
  REQUIRE(e.ideal.generators().size() == 1);
  CHECK(e.ideal.generators()[0] == edge_binomial(e.ideal.ring(), 1, 2));
  CHECK(e.mu() == 1);
  CHECK(build_gbei(2, cycle_graph(4)).mu() == 4);
  const auto m3 = build_gbei(3, path_graph(2));
  const RingSpec& r = m3.ideal.ring();
  CHECK(m3.ideal.generators() ==
        std::vector<Polynomial>{minor(r, 1, 2, 1, 2), minor(r, 1, 3, 1, 2), minor(r, 2, 3, 1, 2)});
  CHECK(generator_count(4, complete_graph(4)) == 36);
  CHECK_THROWS_AS(build_gbei(1, path_graph(2)), InvalidArgument);
  CHECK(build_gbei(2, cycle_graph(5), 3).ideal.ring().characteristic() == 3);
}

TEST_CASE("generators are distinct and counted by m(m-1)/2 |E|") {
  for (int m = 2; m <= 4; ++m)
    testsupport::for_each_connected_graph(4, [&](const SimpleGraph& g) {
      const auto e = build_gbei(m, g);
      const auto& gens = e.ideal.generators();
      CHECK(static_cast<int>(gens.size()) == generator_count(m, g));
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) CHECK(!(gens[i] == gens[j]));
    });
}

TEST_CASE("prime components") {
  const auto p = prime_component(2, cycle_graph(4), {2, 4});
  const RingSpec& r = p.ideal.ring();
  CHECK(p.ideal.generators() == std::vector<Polynomial>{matrix_variable(r, 1, 2), matrix_variable(r, 2, 2),
                                                        matrix_variable(r, 1, 4), matrix_variable(r, 2, 4)});
  CHECK(p.height == 4);
  CHECK(p.components == std::vector<VertexSet>{{1}, {3}});

  const auto empty = prime_component(3, path_graph(4), {});
  CHECK(empty.height == 2 * 3);
  CHECK(ideal_equal(empty.ideal, build_gbei(3, complete_graph(4)).ideal));

  const auto mid = prime_component(2, path_graph(3), {2});
  CHECK(mid.height == 2);
  CHECK(mid.ideal.generators().size() == 2);
}

TEST_CASE("minimal primes follow the cut sets") {
  CHECK(minimal_primes(2, complete_graph(4)).size() == 1);
  const auto c4 = minimal_primes(2, cycle_graph(4));
  REQUIRE(c4.size() == 3);
  CHECK(c4[1].cut == VertexSet{1, 3});
  CHECK(c4[2].cut == VertexSet{2, 4});
  CHECK(minimal_primes(2, path_graph(3)).size() == 2);
  CHECK_THROWS_AS(minimal_primes(2, SimpleGraph(3, {{1, 2}})), DisconnectedGraph);
}

TEST_CASE("prime heights agree with the oracle") {
  for (int n = 2; n <= 4; ++n)
    testsupport::for_each_connected_graph(n, [&](const SimpleGraph& g) {
      for (const auto& p : minimal_primes(2, g)) CHECK(height_oracle(p.ideal) == p.height);
    });
  for (const auto& p : minimal_primes(3, cycle_graph(4))) CHECK(height_oracle(p.ideal) == p.height);
}

TEST_CASE("height formula") {
  for (int n = 2; n <= 7; ++n) CHECK(height_formula(2, path_graph(n)) == n - 1);
  for (int m = 2; m <= 5; ++m) CHECK(height_formula(m, star_graph(3)) == m);
  CHECK(height_formula(2, cycle_graph(4)) == 3);
  CHECK(height_formula(2, star_graph(5)) == 2);
  for (int n = 2; n <= 4; ++n)
    testsupport::for_each_connected_graph(n, [&](const SimpleGraph& g) {
      CHECK(height_formula(2, g) == height_oracle(build_gbei(2, g).ideal));
    });
  CHECK_THROWS_AS(height_formula(2, SimpleGraph(1)), InvalidArgument);
}

TEST_CASE("sum_height_empty_T") {
  CHECK(sum_height_empty_T(2, cycle_graph(4), {2, 4}) == 5);
  CHECK(sum_height_empty_T(3, star_graph(3), {1}) == 5);
  CHECK(sum_height_empty_T(2, cycle_graph(5), {1, 3}) == 2 + 4);  // |T| = k(G)
  CHECK_THROWS_AS(sum_height_empty_T(2, cycle_graph(4), {}), InvalidArgument);
  // The value is the height of P_empty + P_T.
  const auto pe = prime_component(2, cycle_graph(4), {});
  const auto pt = prime_component(2, cycle_graph(4), {2, 4});
  auto gens = pe.ideal.generators();
  for (const auto& g : pt.ideal.generators()) gens.push_back(g);
  CHECK(height_oracle(Ideal(pe.ideal.ring(), gens)) == 5);
}

TEST_CASE("CI and ACI") {
  CHECK(classify_ci(2, path_graph(5)).value);
  CHECK(!classify_ci(3, path_graph(5)).value);
  CHECK(!classify_ci(2, cycle_graph(4)).value);
  CHECK(classify_ci(2, cycle_graph(4)).witness == "mu = 4 > ht = 3");
  CHECK(classify_aci(3, path_graph(2)).value);
  CHECK(!classify_aci(4, path_graph(2)).value);
  CHECK(classify_aci(2, cycle_graph(4)).value);
  CHECK(!classify_aci(2, path_graph(4)).value);
  CHECK(!classify_aci(2, complete_graph(4)).value);
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= 3; ++m)
      testsupport::for_each_connected_graph(n, [&](const SimpleGraph& g) {
        const auto ci = classify_ci(m, g);
        CHECK(ci.structural == ci.numeric);
      });
}

TEST_CASE("ACI graphs for n >= 3 only occur for m = 2") {
  for (int n = 3; n <= 5; ++n)
    for (int m = 3; m <= 4; ++m)
      testsupport::for_each_connected_graph(n, [&](const SimpleGraph& g) { CHECK(!classify_aci(m, g).value); });
}

TEST_CASE("pairwise cd bounds") {
  CHECK(pairwise_cd_lower(2, cycle_graph(4), {2, 4}) == 4);
  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m <= 4; ++m) {
      VertexSet interior;
      for (int v = 2; v < n; ++v) interior.push_back(v);
      CHECK(pairwise_cd_lower(m, path_graph(n), interior) == m * n - m - 2);
      const auto p = pairwise_cd_bounds(m, path_graph(n), interior, 5);
      CHECK(p.lower == m * n - m - 2);
      CHECK(p.upper == m * n - m - 2);
      const auto z = pairwise_cd_bounds(m, path_graph(n), interior, 0);
      CHECK(z.upper == m * n - 3);
    }
  CHECK(pairwise_cd_lower(2, star_graph(4), {1}) == 8 - 2 - 4 + 1);
  CHECK(!pairwise_cd_bounds(2, cycle_graph(4), {2, 4}, 0).upper);
  CHECK_THROWS_AS(pairwise_cd_lower(2, cycle_graph(4), {}), InvalidArgument);
  CHECK_THROWS_AS(pairwise_cd_lower(2, cycle_graph(4), {1, 2}), InvalidArgument);
}

TEST_CASE("decomposition") {
  using S = DecompositionResult::Status;
  CHECK(decompose_verify(2, complete_graph(4)).status == S::Verified);
  CHECK(decompose_verify(2, cycle_graph(4)).status == S::Verified);
  CHECK(decompose_verify(2, cycle_graph(4)).prime_count == 3);
  CHECK(decompose_verify(2, path_graph(4)).status == S::Verified);
  CHECK(decompose_verify(3, path_graph(3)).status == S::Verified);
  CHECK(decompose_verify(2, cycle_graph(5), {}, 7).status == S::Verified);
  CHECK(decompose_verify(2, cycle_graph(6), {0, 20}).status == S::NotAttempted);
}
