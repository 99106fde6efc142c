#pragma once

#include <cstdint>
#include <string>

#include "invw/character_table.hpp"
#include "invw/small_group.hpp"

namespace invw {

struct DixonInfo {
  std::uint64_t prime = 0;     // modulus that produced the table
  std::uint64_t exponent = 0;  // lcm of element orders
  unsigned attempts = 0;       // primes tried
};

/// Irreducible characters of an enumerated group: class matrices are
/// diagonalised simultaneously over GF(p), p = 1 mod exponent and
/// p > 2 sqrt|G| max|C|, and each eigenvector is lifted to exact cyclotomic
/// values through eigenvalue multiplicities. A failed lift or verification
/// moves on to the next admissible prime. Columns follow `cd`; rows are in
/// canonical order. The result satisfies both orthogonality relations.
CharacterTable dixon_character_table(const SmallGroup& g, const ClassData& cd, const std::string& name,
                                     DixonInfo* info = nullptr);

}  // namespace invw
