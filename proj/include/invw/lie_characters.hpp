#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "invw/cyclotomic.hpp"
#include "invw/finite_field.hpp"

namespace invw {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<unsigned> parts;

  unsigned size() const noexcept;
  std::string to_string() const;  // "4,2,1"
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Sorts the parts into decreasing order; throws std::invalid_argument on a
/// zero part or an empty list.
Partition make_partition(std::vector<unsigned> parts);
/// Comma-separated parts, e.g. "4,2,1".
Partition parse_partition(const std::string& text);
/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

Partition conjugate_partition(const Partition& lambda);
/// Hook lengths of every box, sorted increasingly.
std::vector<unsigned> hook_lengths(const Partition& lambda);
/// a(lambda) = sum_{i<j} min(lambda_i, lambda_j) = sum_i (i - 1) lambda_i.
unsigned a_statistic(const Partition& lambda);

/// Integer polynomial, constant term first, no trailing zeros.
using IntPoly = std::vector<mpz_class>;

/// x^a(lambda) (x^n - 1)...(x - 1) / prod_hooks (x^h - 1); the division is exact.
IntPoly rho_polynomial(const Partition& lambda);
mpz_class evaluate(const IntPoly& f, const mpz_class& x);

enum class GroupVariant { linear, unitary };

/// rho(q) for GL_n(q), |rho(-q)| for GU_n(q).
mpz_class unipotent_degree(const Partition& lambda, std::uint64_t q, GroupVariant variant);

/// Primes r dividing q^n - 1 but no q^k - 1 with k < n, increasing.
/// Throws std::overflow_error when q^n does not fit in 64 bits.
std::vector<std::uint64_t> ppd(std::uint64_t q, unsigned n);

/// prod_i (q^a_i - (-1)^a_i) / (q + 1).
mpz_class torus_order_unitary(const std::vector<unsigned>& shape, std::uint64_t q);

/// |SU_n(q)| = |GU_n(q)| / (q + 1).
mpz_class special_unitary_order(unsigned n, std::uint64_t q);

/// Row identifiers of the degree table of the D_alpha constituents of SU_n(q),
/// written "<degree of alpha>:<parameters>".
const std::vector<std::string>& table1_row_ids();
/// The row's rational function at (n, q); n odd and at least 7.
mpq_class table1_value(const std::string& row, unsigned n, std::uint64_t q);
/// table1_value, required to be a positive integer (std::domain_error otherwise).
mpz_class table1_degree(const std::string& row, unsigned n, std::uint64_t q);
/// Whether the row's parameter range names at least one character of GU_3(q);
/// e.g. (t,u,v) with t < u < v <= q needs q >= 3.
bool table1_row_occurs(const std::string& row, std::uint64_t q);

/// n, q, GF(q^2) and delta = norm_one_generator, of order q + 1.
struct WeilContext {
  unsigned n = 0;
  std::uint32_t q = 0;
  FieldPtr field;
  Field::Element delta = 1;

  static WeilContext make(unsigned n, std::uint32_t q);
};

/// (-1)^n (-q)^dim Ker(g - 1).
mpz_class weil_zeta(const FFMatrix& g, std::uint32_t q);

/// (-1)^n / (q + 1) sum_{l=0..q} eps^(-t l) (-q)^dim Ker(g - delta^(-l)), with
/// eps = E(q+1). t = 0 gives the unipotent constituent.
Cyclotomic weil_chi(unsigned t, const FFMatrix& g, const WeilContext& ctx);

/// The six-term expression for |GU_3(q)| chi_(n-3,2,1)(u), divided by |GU_3(q)|,
/// with r Jordan blocks of which r1 have size one.
mpq_class d3_unipotent_closed(std::uint64_t q, unsigned r, unsigned r1);
/// The three-term expression for |GU_2(q)| chi_(s^t,(n-2,1))(u), divided by |GU_2(q)|.
mpq_class d2_unipotent_closed(std::uint64_t q, unsigned r, unsigned r1);

}  // namespace invw
