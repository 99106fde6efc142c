#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace invw {

/// Exact element of Q(zeta_n), stored on the power basis 1, z, ..., z^(phi(n)-1)
/// modulo the n-th cyclotomic polynomial. Conductors = 2 mod 4 are folded
/// into n/2, and rational values always live at conductor 1.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(mpq_class(0)) {}
  Cyclotomic(const mpq_class& value);  // NOLINT: rationals embed implicitly
  Cyclotomic(long value) : Cyclotomic(mpq_class(value)) {}  // NOLINT

  /// Sum of coefficient * zeta_n^exponent; exponents are taken mod n.
  static Cyclotomic make(std::uint64_t n, const std::vector<std::pair<std::int64_t, mpq_class>>& terms);
  static Cyclotomic zeta(std::uint64_t n, std::int64_t k = 1);

  std::uint64_t conductor() const noexcept { return conductor_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const noexcept { return conductor_ == 1; }
  std::optional<mpq_class> to_rational() const;

  /// Image under zeta -> zeta^-1 (complex conjugation).
  Cyclotomic conjugate() const;
  /// Image under zeta -> zeta^k for k coprime to the conductor.
  Cyclotomic galois(std::int64_t k) const;
  /// Same value at the smallest conductor whose field contains it.
  Cyclotomic minimized() const;
  /// Same value written at conductor m, a multiple of the current conductor.
  Cyclotomic lifted(std::uint64_t m) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const mpq_class& divisor);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const mpq_class& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order on values: minimal conductor first, then coefficients.
  friend int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::complex<double> approximate() const;
  /// Human-readable form such as "-1/2", "E(5)+E(5)^4".
  std::string to_string() const;

  /// {"conductor": n, "terms": [[exponent, numerator, denominator], ...]} of
  /// the minimized value; big integers are written as decimal strings.
  nlohmann::json to_json() const;
  static Cyclotomic from_json(const nlohmann::json& j);

 private:
  Cyclotomic(std::uint64_t n, std::vector<mpq_class> coeffs);
  void detect_rational();

  std::uint64_t conductor_;
  std::vector<mpq_class> coeffs_;
};

int compare(const Cyclotomic& a, const Cyclotomic& b);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n);

/// Conductor with the 2 mod 4 case folded: Q(zeta_n) = Q(zeta_(n/2)) then.
std::uint64_t normalized_conductor(std::uint64_t n);

}  // namespace invw
