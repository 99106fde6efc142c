#include "doctest.h"

#include <numeric>
#include <random>
#include <stdexcept>

#include "invw/involution_decomposition.hpp"
#include "invw/small_group.hpp"

using invw::Permutation;

namespace {

bool even_involution(const Permutation& p) { return p.order() == 2 && invw::is_even(p); }

invw::Cycle cycle_of_length(std::size_t n, std::size_t offset = 0) {
  invw::Cycle c(n);
  std::iota(c.begin(), c.end(), 1 + offset);
  return c;
}

Permutation cycle_permutation(const invw::Cycle& c, std::size_t degree) {
  return Permutation::from_cycles(degree, {c});
}

bool has_two_fixed_points(const Permutation& g) { return invw::cycle_decomposition(g).fixed_points.size() >= 2; }

void check_element(const Permutation& g) {
  const auto f = invw::decompose(g);
  REQUIRE(f.verified());
  CHECK(f.factors.size() <= 3);
  for (const auto& x : f.factors) CHECK(even_involution(x));
  CHECK(invw::compose_all(f.factors, g.degree()) == g);
  const auto d = invw::cycle_decomposition(g);
  if (d.counts[3] % 2 == 0 || d.fixed_points.size() >= 2) CHECK(f.factors.size() <= 2);
}

}  // namespace

TEST_CASE("odd cycle pair: c = x1 x2 with the reflection templates") {
  for (std::size_t n = 3; n <= 15; n += 2) {
    const auto c = cycle_of_length(n, 2);
    const auto [x1, x2] = invw::pair_for_odd_cycle(c, n + 4);
    CHECK(x1 * x2 == cycle_permutation(c, n + 4));
    CHECK(x1.order() == 2);
    CHECK(x2.order() == 2);
    // x1 reverses the cycle, x2 reverses it about its first point
    for (std::size_t i = 1; i <= n; ++i) CHECK(x1(c[i - 1]) == c[n - i]);
    CHECK(x2(c[0]) == c[0]);
  }
}

TEST_CASE("two even cycles give two even involutions") {
  for (std::size_t a = 2; a <= 10; a += 2)
    for (std::size_t b = 2; b <= 10; b += 2) {
      const std::size_t m = a + b + 1;
      const auto c1 = cycle_of_length(a);
      const auto c2 = cycle_of_length(b, a);
      const auto [t1, t2] = invw::pair_for_even_pair(c1, c2, m);
      CHECK(t1 * t2 == cycle_permutation(c1, m) * cycle_permutation(c2, m));
      CHECK(even_involution(t1));
      CHECK(even_involution(t2));
    }
}

TEST_CASE("cycle of length 3 mod 4 takes three even involutions") {
  for (std::size_t n = 7; n <= 23; n += 4) {
    const auto c = cycle_of_length(n);
    const auto s = invw::triple_for_3mod4(c, n);
    CHECK(s[0] * s[1] * s[2] == cycle_permutation(c, n));
    for (const auto& x : s) CHECK(even_involution(x));
  }
  CHECK_THROWS_AS(invw::triple_for_3mod4(cycle_of_length(5), 5), std::invalid_argument);
  CHECK_THROWS_AS(invw::triple_for_3mod4(cycle_of_length(3), 5), std::invalid_argument);
}

TEST_CASE("two fixed points absorb the parity defect") {
  for (std::size_t n = 3; n <= 19; n += 4) {
    const auto c = cycle_of_length(n);
    const auto [t1, t2] = invw::pair_with_fixed_points(c, n + 1, n + 2, n + 2);
    CHECK(t1 * t2 == cycle_permutation(c, n + 2));
    CHECK(even_involution(t1));
    CHECK(even_involution(t2));
  }
}

TEST_CASE("worked examples") {
  const auto seven = invw::decompose(invw::parse_cycles("(1 2 3 4 5 6 7)", 7));
  CHECK(seven.factors.size() == 3);
  CHECK(seven.verified());
  CHECK(invw::decompose(Permutation(5)).factors.empty());
  CHECK(invw::decompose(Permutation(5)).verified());
  const auto three = invw::decompose(invw::parse_cycles("(1 2 3)", 5));
  CHECK(three.factors.size() == 2);
  CHECK(three.verified());
  CHECK(invw::decompose(invw::parse_cycles("(1 2)(3 4)", 5)).factors.size() == 1);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(invw::decompose(invw::parse_cycles("(1 2)", 5)), std::invalid_argument);
  CHECK_THROWS_AS(invw::decompose(invw::parse_cycles("(1 2 3)", 4)), std::invalid_argument);
}

TEST_CASE("exhaustive over A5, A6, A7") {
  for (const char* name : {"A5", "A6", "A7"}) {
    const auto g = invw::standard_group(name);
    const auto& rule = static_cast<const invw::PermutationRule&>(g.rule());
    for (invw::SmallGroup::Index i = 0; i < g.order(); ++i) check_element(rule.decode(g.element(i)));
  }
}

TEST_CASE("random even permutations of larger degree") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 10 + trial % 31;
    std::vector<Permutation::Point> images(m);
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    Permutation g = Permutation::from_images(images);
    if (!invw::is_even(g)) g = g * Permutation::transposition(m, 1, 2);
    check_element(g);
    if (has_two_fixed_points(g)) CHECK(invw::decompose(g).factors.size() <= 2);
  }
}
