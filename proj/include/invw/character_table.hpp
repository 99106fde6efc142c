#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "invw/cyclotomic.hpp"

namespace invw {

struct ClassInfo {
  std::string name;
  mpz_class size;
  std::uint64_t element_order = 1;
  std::size_t inverse = 0;  // index of the class of inverses
};

/// Irreducible characters (rows) on conjugacy classes (columns).
struct CharacterTable {
  std::string group_name;
  mpz_class order;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<Cyclotomic>> values;

  std::size_t class_count() const noexcept { return classes.size(); }
  std::size_t row_count() const noexcept { return values.size(); }
  /// |G| / |C|; throws if the class size does not divide the order.
  mpz_class centralizer_order(std::size_t c) const;
  /// Values at the identity class; throws if some degree is irrational.
  std::vector<mpq_class> degrees() const;
  /// Class index by name; the error message lists valid names.
  std::size_t find_class(const std::string& name) const;
  std::optional<std::size_t> identity_class() const;
  std::vector<std::size_t> involution_classes() const;
};

/// Classes sorted by (element order, descending size, name) and rows with the
/// trivial character first, then by (degree, values in column order).
CharacterTable canonical_form(const CharacterTable& t);

/// JSON text of the canonical form:
/// {"group_name", "order", "classes": [{"name","size","element_order","inverse"}],
///  "irreducibles": [[value, ...], ...]} with values serialized as Cyclotomic.
std::string serialize_table(const CharacterTable& t);
/// Parses without reordering or validating. Throws std::invalid_argument on
/// schema violations, non-square data or duplicate class names.
CharacterTable parse_table(const std::string& text);
CharacterTable read_table_file(const std::string& path);
void write_table_file(const CharacterTable& t, const std::string& path);

struct ValidationFailure {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Both orthogonality relations, the degree sum, integral degrees, class
/// sizes and inverse-class consistency; every failure is reported.
ValidationReport validate_table(const CharacterTable& t);

/// sum_chi chi(g_1)...chi(g_m) conj(chi(g)) / chi(1)^(m-1).
Cyclotomic kappa(const CharacterTable& t, const std::vector<std::size_t>& sources, std::size_t target);

/// Number of tuples in C_1 x ... x C_m with product a fixed element of the
/// target class: kappa * |G|^(m-1) / prod |C_G(g_i)|. Throws
/// std::runtime_error when that is not a nonnegative integer.
mpz_class eta(const CharacterTable& t, const std::vector<std::size_t>& sources, std::size_t target);

/// Identity, involution classes, and classes meeting a product of two
/// involutions.
std::vector<std::size_t> strongly_real_classes(const CharacterTable& t);

struct CoverReport {
  /// layers[j-1]: classes met by a product of exactly j involutions.
  std::vector<std::vector<std::size_t>> layers;
  /// Least j with the class in layers[j-1]; unset if not reached by k.
  std::vector<std::optional<unsigned>> minimal_j;
  std::optional<std::size_t> identity_class;
  /// The identity is a product of two involutions whenever one exists.
  unsigned identity_cover = 2;
  /// Every non-identity class reached within k.
  bool complete = false;
  /// Largest minimal_j over non-identity classes, when complete.
  std::optional<unsigned> width;
};

/// Iterated class products P_1 = involution classes,
/// P_(j+1) = {C : eta(D, I, C) > 0 for some D in P_j, I an involution class}.
/// Throws std::invalid_argument when the table has no involution class.
CoverReport involution_cover(const CharacterTable& t, unsigned k);

}  // namespace invw
