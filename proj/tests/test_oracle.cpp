#include <doctest.h>

#include <random>

#include "gmalg/families.hpp"
#include "gmalg/oracle.hpp"

using namespace gmalg;

namespace {

const Ring<Zn> F3(3);

std::vector<oracle::Elem> listed(const Submodule<Zn>& s) {
  std::vector<oracle::Elem> out;
  for (const auto& v : *s.elements()) out.push_back(oracle::to_elem(v));
  return out;
}

}  // namespace

TEST_CASE("enumeration order and budget") {
  const auto all = oracle::enumerate_elements(3, 2);
  REQUIRE(all.size() == 9u);
  CHECK(all.front() == oracle::Elem{0, 0});
  CHECK(all[1] == oracle::Elem{0, 1});
  CHECK(all.back() == oracle::Elem{2, 2});
  CHECK_THROWS_AS(oracle::enumerate_elements(3, 20), Error);
  CHECK(oracle::enumerate_elements(2, 0).size() == 1u);
}

TEST_CASE("raw table products") {
  const auto a = triangular_gma(F3, 3, 1).algebra();
  const oracle::Table t(a);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    oracle::Elem x(a.dim()), y(a.dim());
    for (auto& v : x) v = static_cast<std::int64_t>(rng() % 3);
    for (auto& v : y) v = static_cast<std::int64_t>(rng() % 3);
    CHECK(t.mul(x, y) == oracle::to_elem(a.mul(oracle::to_vector(F3, x), oracle::to_vector(F3, y))));
  }
}

TEST_CASE("Engel sets agree with elimination") {
  const Ring<Zn> f5(5);
  for (const auto& g : {full_matrix_gma(F3, 2, 1), triangular_gma(F3, 2, 1), triangular_gma(F3, 3, 1),
                        triangular_gma(f5, 2, 1), full_matrix_gma(f5, 2, 1)}) {
    for (int k = 1; k <= 3; ++k) CHECK(listed(zk_set(g.algebra(), k)) == oracle::brute_zk(g.algebra(), k));
  }
  CHECK_THROWS_AS(oracle::brute_zk(matrix_algebra(F3, 2), 0), Error);
}

TEST_CASE("Engel sets of a ring with zero divisors") {
  const auto g = full_matrix_gma(Ring<Zn>(9), 2, 1);
  for (int k = 1; k <= 2; ++k) CHECK(listed(zk_set(g.algebra(), k)) == oracle::brute_zk(g.algebra(), k));
}

TEST_CASE("commuting spaces agree with brute force") {
  const auto g = triangular_gma(F3, 2, 1);
  const auto& a = g.algebra();
  for (int k = 1; k <= 2; ++k) {
    const auto space = commuting_space(g, k);
    // every map on T_2(Z/3): 3^9 candidates
    std::size_t count = 0;
    for (const auto& v : oracle::enumerate_elements(3, 9)) {
      const auto theta = unvec(oracle::to_vector(F3, v), 3);
      const bool brute = !oracle::brute_k_commuting(a, theta, k);
      CHECK(brute == space.contains(vec(theta)));
      count += brute;
    }
    CHECK(count == space.size());
  }
}

TEST_CASE("properness agrees with brute force") {
  const auto g = triangular_gma(F3, 2, 1);
  const auto& a = g.algebra();
  std::size_t proper = 0;
  for (const auto& v : oracle::enumerate_elements(3, 9)) {
    const auto theta = unvec(oracle::to_vector(F3, v), 3);
    const auto c = properness_certificate(a, theta);
    const auto b = oracle::brute_properness(a, theta);
    CHECK(c.has_value() == b.has_value());
    proper += c.has_value();
  }
  CHECK(proper == proper_span(a).size());
}
