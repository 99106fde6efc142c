#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "invw/finite_field.hpp"
#include "invw/permutation.hpp"

namespace invw {

/// Encoded group element: image table of a permutation (0-based) or the
/// row-major entry codes of a matrix.
using Word = std::vector<std::uint16_t>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// How encoded elements multiply (left factor first) and print.
class ElementRule {
 public:
  virtual ~ElementRule() = default;
  virtual Word multiply(const Word& a, const Word& b) const = 0;
  virtual Word identity() const = 0;
  virtual std::string format(const Word& w) const = 0;
};

class PermutationRule final : public ElementRule {
 public:
  explicit PermutationRule(std::size_t degree) : degree_(degree) {}
  Word multiply(const Word& a, const Word& b) const override;
  Word identity() const override;
  std::string format(const Word& w) const override;
  std::size_t degree() const noexcept { return degree_; }

  static Word encode(const Permutation& p);
  Permutation decode(const Word& w) const;

 private:
  std::size_t degree_;
};

/// Products are ordinary matrix products.
class MatrixRule final : public ElementRule {
 public:
  MatrixRule(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n) {}
  Word multiply(const Word& a, const Word& b) const override;
  Word identity() const override;
  std::string format(const Word& w) const override;
  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }

  static Word encode(const FFMatrix& m);
  FFMatrix decode(const Word& w) const;

 private:
  FieldPtr field_;
  std::size_t n_;
};

/// A finite group held as an explicit indexed element list. Index 0 is the
/// identity.
class SmallGroup {
 public:
  using Index = std::uint32_t;

  /// Breadth-first closure: starting from the identity, each element in
  /// list order is multiplied on the right by each generator in turn and new
  /// products are appended. Throws std::runtime_error past `cap` elements.
  static SmallGroup enumerate(std::shared_ptr<const ElementRule> rule, const std::vector<Word>& generators,
                              std::size_t cap);
  static SmallGroup from_permutations(const std::vector<Permutation>& generators, std::size_t cap);
  static SmallGroup from_matrices(const std::vector<FFMatrix>& generators, std::size_t cap);
  /// A group given by its full element list (closure is assumed; the
  /// identity is moved to the front, other elements keep their order).
  static SmallGroup from_elements(std::shared_ptr<const ElementRule> rule, std::vector<Word> elements);

  std::size_t order() const noexcept { return elements_.size(); }
  const Word& element(Index i) const { return elements_.at(i); }
  std::optional<Index> index_of(const Word& w) const;
  Index identity_index() const noexcept { return 0; }
  const std::vector<Index>& generator_indices() const noexcept { return generators_; }
  const ElementRule& rule() const noexcept { return *rule_; }
  const std::shared_ptr<const ElementRule>& rule_ptr() const noexcept { return rule_; }

  Index multiply(Index a, Index b) const;
  Index inverse(Index a) const { return inverses_[a]; }
  Index power(Index a, std::int64_t e) const;
  std::uint64_t element_order(Index a) const;
  /// Least common multiple of element orders.
  std::uint64_t exponent() const;
  /// Elements of order exactly 2, increasing.
  const std::vector<Index>& involutions() const noexcept { return involutions_; }
  std::string format(Index i) const { return rule_->format(elements_[i]); }

 private:
  SmallGroup(std::shared_ptr<const ElementRule> rule, std::vector<Word> elements);
  void finish();

  std::shared_ptr<const ElementRule> rule_;
  std::vector<Word> elements_;
  std::unordered_map<Word, Index, WordHash> lookup_;
  std::vector<Index> inverses_;
  std::vector<Index> generators_;
  std::vector<Index> involutions_;
  std::vector<Index> table_;  // full multiplication table for small groups
};

struct ConjugacyClass {
  std::string name;
  std::vector<SmallGroup::Index> members;  // increasing
  SmallGroup::Index representative = 0;    // smallest member
  std::uint64_t centralizer_order = 0;
  std::uint64_t element_order = 0;
  std::size_t inverse_class = 0;

  std::size_t size() const noexcept { return members.size(); }
};

/// Classes ordered by (element order, descending size, smallest member); the
/// identity class comes first. Names are the element order followed by a
/// letter in that order: 1A, 2A, 2B, 3A, ...
struct ClassData {
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;  // element index -> class index

  std::size_t find(const std::string& name) const;
};

ClassData conjugacy_classes(const SmallGroup& g);

/// "A", ..., "Z", "AA", "AB", ...
std::string class_letter(std::size_t index);

struct WidthReport {
  /// Least number of involutions with product in the class; 0 for the identity.
  std::vector<unsigned> class_width;
  unsigned group_width = 0;
  std::size_t involution_count = 0;
};

/// Exact involution width of every class, from W_0 = {1} and
/// W_(k+1) = W_k u W_k * I. Throws std::invalid_argument when the group has
/// no involutions or is not generated by them.
WidthReport involution_width_oracle(const SmallGroup& g, const ClassData& cd);

/// Whether some involution t has t x t = x^-1 (or x is the identity).
bool is_strongly_real(const SmallGroup& g, SmallGroup::Index x);

/// #{(g_1..g_m) : g_i in C_i, g_1 ... g_m = target}.
mpz_class count_tuples(const SmallGroup& g, const ClassData& cd, const std::vector<std::size_t>& classes,
                       SmallGroup::Index target);

/// Built-in groups: "A<m>" for 3 <= m <= 9, "PSL(2,7)", "M11", "GU<k>(<q>)"
/// (matrices, up to 10^6 elements) and "C<n>" (cyclic, as an n-cycle).
SmallGroup standard_group(const std::string& name);
std::vector<std::string> standard_group_names();

/// Generator file: a header line "perm m" or "GF(p^k) n", then one generator
/// per line in cycle notation or as n^2 row-major entries. Lines starting
/// with '#' are ignored.
SmallGroup read_generator_file(std::istream& in, std::size_t cap);

}  // namespace invw
