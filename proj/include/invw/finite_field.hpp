#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <string>
#include <vector>

namespace invw {

/// GF(p^k). Elements are codes sum c_i p^i of their coefficient vectors on
/// 1, x, ..., x^(k-1) modulo the field's modulus; code order is the
/// canonical element order.
class Field {
 public:
  using Element = std::uint32_t;

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return size_; }
  /// Monic modulus, constant term first (length degree + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  /// Image of an integer under Z -> GF(p).
  Element from_int(std::int64_t value) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::int64_t e) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Element a) const;
  /// Smallest element (in code order) generating the multiplicative group.
  Element generator() const noexcept { return generator_; }
  /// Discrete logarithm base generator().
  std::uint32_t log(Element a) const;

  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(const std::vector<std::uint32_t>& coeffs) const;
  /// "c0,c1,...,c_(k-1)"
  std::string format(Element a) const;
  Element parse(const std::string& text) const;
  /// "GF(p^k)"
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_ && a.k_ == b.k_; }

 private:
  friend std::shared_ptr<const Field> field_make(std::uint32_t p, unsigned k);
  Field(std::uint32_t p, unsigned k);

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;
  Element generator_ = 1;
  std::vector<Element> exp_;         // exp_[i] = generator^i, length 2(size-1)
  std::vector<std::uint32_t> log_;   // log_[a] for a != 0
  std::vector<Element> add_table_;   // size^2 entries when small
  std::vector<Element> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^k) with the lexicographically smallest monic irreducible modulus.
/// Throws std::invalid_argument unless p is prime and p^k fits in 2^24.
FieldPtr field_make(std::uint32_t p, unsigned k);

/// GF(q^2) for a prime power q.
FieldPtr unitary_field(std::uint32_t q);

/// a^q.
Field::Element frobenius(const Field& f, Field::Element a, std::uint32_t q);

/// gamma^(q-1) for the smallest generator gamma of GF(q^2)*; order q + 1.
Field::Element norm_one_generator(const Field& f, std::uint32_t q);

/// Square matrix over a finite field, row-major.
class FFMatrix {
 public:
  FFMatrix(FieldPtr field, std::size_t n);
  FFMatrix(FieldPtr field, std::size_t n, std::vector<Field::Element> entries);

  static FFMatrix identity(FieldPtr field, std::size_t n);
  static FFMatrix diagonal(FieldPtr field, const std::vector<Field::Element>& diag);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  Field::Element operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  Field::Element& at(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const std::vector<Field::Element>& entries() const noexcept { return entries_; }

  FFMatrix operator*(const FFMatrix& other) const;
  /// Entrywise x -> x^q, transposed.
  FFMatrix conjugate_transpose(std::uint32_t q) const;
  std::size_t rank() const;
  bool is_identity() const;

  friend bool operator==(const FFMatrix& a, const FFMatrix& b) {
    return a.n_ == b.n_ && *a.field_ == *b.field_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const FFMatrix& a, const FFMatrix& b) { return a.entries_ < b.entries_; }

  /// "GF(p^k) n" followed by n rows of space-separated entries.
  std::string to_text() const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Field::Element> entries_;
};

/// dim Ker(M - lambda I).
std::size_t kernel_dim(const FFMatrix& m, Field::Element lambda);

/// M^(q)T M = I.
bool is_unitary(const FFMatrix& m, std::uint32_t q);

/// A (x) B, rows of A outermost.
FFMatrix kronecker(const FFMatrix& a, const FFMatrix& b);

/// Reads one matrix in the text format of FFMatrix::to_text.
FFMatrix parse_matrix(std::istream& in);
FFMatrix parse_matrix(const std::string& text);

/// Parses the "GF(p^k) n" header; returns the field and n.
std::pair<FieldPtr, std::size_t> parse_matrix_header(const std::string& line);

/// |GU_k(q)| = q^(k(k-1)/2) prod_{i=1..k} (q^i - (-1)^i).
std::uint64_t unitary_group_order(unsigned k, std::uint32_t q);

/// All elements of GU_k(q) in lexicographic order of entry codes, built row by
/// row from orthonormal vectors. Rejects groups with more than 10^6 elements.
std::vector<FFMatrix> enumerate_unitary_group(unsigned k, std::uint32_t q);

/// Same set, obtained by testing every k x k matrix over GF(q^2). Only for
/// (q^2)^(k^2) <= 2^24 candidates.
std::vector<FFMatrix> filter_unitary_group(unsigned k, std::uint32_t q);

}  // namespace invw
