#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "invw/permutation.hpp"

namespace invw {

/// A cycle written as its point sequence; template point i maps to cycle[i-1].
using Cycle = std::vector<Permutation::Point>;

/// An element of A_m written as a product (left factor first) of at most
/// three even involutions.
struct InvolutionFactorization {
  std::size_t degree = 0;
  std::vector<Permutation> factors;
  Permutation target;

  /// Recomposes the factors and checks each one is an even involution.
  bool verified() const;
};

/// c = x1 * x2 for an odd cycle of length n >= 3, where
/// x1 = (1 n)(2 n-1)... and x2 = (2 n)(3 n-1)... on the cycle's points.
std::pair<Permutation, Permutation> pair_for_odd_cycle(const Cycle& cycle, std::size_t degree);

/// c * c' = t1 * t2 for two disjoint even cycles, both t_i even involutions.
std::pair<Permutation, Permutation> pair_for_even_pair(const Cycle& c, const Cycle& c_prime,
                                                       std::size_t degree);

/// c = s1 * s2 * s3 for a cycle of length n = 3 mod 4, n >= 7.
std::array<Permutation, 3> triple_for_3mod4(const Cycle& cycle, std::size_t degree);

/// c = t1 * t2 for a cycle of length 3 mod 4, using the transposition
/// (f1 f2) of two points outside the cycle to fix parity.
std::pair<Permutation, Permutation> pair_with_fixed_points(const Cycle& cycle,
                                                           Permutation::Point f1,
                                                           Permutation::Point f2,
                                                           std::size_t degree);

/// Writes an even permutation of degree m >= 5 as a product of at most three
/// even involutions. At most two factors are used whenever the number of
/// cycles of length 3 mod 4 is even or g has at least two fixed points.
/// Identity factors are dropped, so the identity yields an empty list.
InvolutionFactorization decompose(const Permutation& g);

}  // namespace invw
