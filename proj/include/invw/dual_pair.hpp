#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "invw/character_table.hpp"
#include "invw/cyclotomic.hpp"
#include "invw/finite_field.hpp"
#include "invw/small_group.hpp"

namespace invw {

/// GU_k(q) with its computed character table, acting on the Weil character
/// of GU_(kn)(q) through z (x) g.
class DualPairEvaluator {
 public:
  /// Enumerates GU_k(q) and computes its table; k in {2, 3}, q in {2, 3}.
  DualPairEvaluator(unsigned k, std::uint32_t q);

  unsigned k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  const SmallGroup& group() const noexcept { return group_; }
  const ClassData& classes() const noexcept { return classes_; }
  const CharacterTable& table() const noexcept { return table_; }
  const FieldPtr& field() const noexcept { return field_; }

  /// Rows of the table whose degree is d.
  std::vector<std::size_t> rows_of_degree(const mpz_class& d) const;

  /// Per class of GU_k(q): sum over its members z of zeta(z (x) g).
  std::vector<mpz_class> class_sums(const FFMatrix& g) const;

  /// (1/|GU_k|) sum_z conj(alpha(z)) zeta(z (x) g) for alpha = table row `row`.
  Cyclotomic d_alpha(std::size_t row, const FFMatrix& g) const;
  /// Same average for every row at once.
  std::vector<Cyclotomic> d_alpha_all(const FFMatrix& g) const;

 private:
  Cyclotomic average(std::size_t row, const std::vector<mpz_class>& sums) const;

  unsigned k_;
  std::uint32_t q_;
  FieldPtr field_;
  SmallGroup group_;
  ClassData classes_;
  CharacterTable table_;
  std::vector<FFMatrix> matrices_;  // by element index
};

/// I + c v v^* with v = (1, b, 0, ..., 0), b^(q+1) = -1 and c^q = -c: a unitary
/// transvection of determinant 1 with Jordan type (2, 1^(n-2)). Needs n >= 2.
FFMatrix unitary_transvection(unsigned n, std::uint32_t q);

struct ReconciliationEntry {
  unsigned k = 0;
  std::size_t row = 0;
  mpz_class alpha_degree;
  std::string point;  // "identity" or "transvection"
  unsigned r = 0;
  unsigned r1 = 0;
  Cyclotomic direct;
  mpq_class closed;
  bool match = false;
};

/// Closed forms for the (n-3,2,1) and (n-2,1)-type values against the direct
/// dual-pair average, for every row of degree q^2 - q of GU_3(q) and every
/// row of degree q - 1 of GU_2(q), at the identity and at a transvection.
std::vector<ReconciliationEntry> reconcile(unsigned n, std::uint32_t q);

struct Table1Comparison {
  std::string row;
  mpq_class printed;
  /// Whether the row's parameter range is nonempty at this q.
  bool occurs = true;
  /// Whether the printed value occurs among D_alpha(1) over all rows of GU_3(q).
  bool found = false;
};

/// Each degree-table row at (n, q) looked up among the direct D_alpha(1)
/// values of every irreducible alpha of GU_3(q).
std::vector<Table1Comparison> compare_table1(const DualPairEvaluator& gu3, unsigned n);

}  // namespace invw
