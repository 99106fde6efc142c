#include "invw/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "invw/number_theory.hpp"

namespace invw {

namespace {

using IntPoly = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic reduction overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic reduction overflow");
  return r;
}

// Exact quotient of monic integer polynomials.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] = checked_sub(num[i - dn + j], checked_mul(c, den[j]));
  }
  return quot;
}

// Per-conductor tables: phi(n) and x^k mod Phi_n for 0 <= k < n.
struct ConductorData {
  std::uint64_t n = 1;
  std::size_t phi = 1;
  std::vector<IntPoly> power_residues;
};

// Embedding of Q(zeta_m) in Q(zeta_n) with a left inverse on pivot rows.
struct DescentData {
  std::vector<IntPoly> embedding;  // column j: zeta_m^j written at conductor n
  std::vector<std::size_t> pivot_rows;
  std::vector<std::vector<mpq_class>> inverse;  // inverse of embedding restricted to pivots
};

std::mutex cache_mutex;
std::map<std::uint64_t, IntPoly> polynomial_cache;
std::map<std::uint64_t, std::unique_ptr<ConductorData>> conductor_cache;
std::map<std::pair<std::uint64_t, std::uint64_t>, std::unique_ptr<DescentData>> descent_cache;

const IntPoly& phi_poly_locked(std::uint64_t n) {
  if (auto it = polynomial_cache.find(n); it != polynomial_cache.end()) return it->second;
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) num = divide_exact(num, phi_poly_locked(d));
  return polynomial_cache.emplace(n, std::move(num)).first->second;
}

const ConductorData& conductor_data(std::uint64_t n) {
  std::lock_guard lock(cache_mutex);
  if (auto it = conductor_cache.find(n); it != conductor_cache.end()) return *it->second;
  if (n > 100000) throw std::invalid_argument("conductor " + std::to_string(n) + " too large");
  const IntPoly& phi_n = phi_poly_locked(n);
  auto data = std::make_unique<ConductorData>();
  data->n = n;
  data->phi = phi_n.size() - 1;
  const std::size_t phi = data->phi;
  data->power_residues.reserve(n);
  IntPoly current(phi, 0);
  current[0] = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    data->power_residues.push_back(current);
    // multiply by x and reduce the overflow coefficient
    const std::int64_t top = current[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i) current[i] = checked_sub(current[i], checked_mul(top, phi_n[i]));
  }
  return *conductor_cache.emplace(n, std::move(data)).first->second;
}

// Coefficients at conductor n of sum dense[k] zeta_n^k.
std::vector<mpq_class> reduce_dense(const ConductorData& data, const std::vector<mpq_class>& dense) {
  std::vector<mpq_class> out(data.phi);
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (sgn(dense[k]) == 0) continue;
    const IntPoly& row = data.power_residues[k];
    for (std::size_t j = 0; j < data.phi; ++j)
      if (row[j] != 0) out[j] += dense[k] * mpq_class(row[j]);
  }
  return out;
}

const DescentData& descent_data(std::uint64_t n, std::uint64_t m) {
  const ConductorData& big = conductor_data(n);
  const ConductorData& small = conductor_data(m);
  std::lock_guard lock(cache_mutex);
  const auto key = std::make_pair(n, m);
  if (auto it = descent_cache.find(key); it != descent_cache.end()) return *it->second;
  auto data = std::make_unique<DescentData>();
  const std::uint64_t step = n / m;
  for (std::size_t j = 0; j < small.phi; ++j) data->embedding.push_back(big.power_residues[j * step]);

  // Pick linearly independent rows of the embedding matrix incrementally.
  std::vector<std::vector<mpq_class>> basis;   // echelon rows
  std::vector<std::size_t> basis_pivot_cols;
  for (std::size_t r = 0; r < big.phi && data->pivot_rows.size() < small.phi; ++r) {
    std::vector<mpq_class> row(small.phi);
    for (std::size_t j = 0; j < small.phi; ++j) row[j] = data->embedding[j][r];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t c = basis_pivot_cols[b];
      if (sgn(row[c]) == 0) continue;
      const mpq_class factor = row[c] / basis[b][c];
      for (std::size_t j = 0; j < small.phi; ++j) row[j] -= factor * basis[b][j];
    }
    std::size_t c = 0;
    while (c < small.phi && sgn(row[c]) == 0) ++c;
    if (c == small.phi) continue;
    basis.push_back(std::move(row));
    basis_pivot_cols.push_back(c);
    data->pivot_rows.push_back(r);
  }
  if (data->pivot_rows.size() != small.phi) throw std::logic_error("degenerate subfield embedding");

  // Gauss-Jordan inverse of the square submatrix.
  const std::size_t d = small.phi;
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = data->embedding[j][data->pivot_rows[i]];
    a[i][d + i] = 1;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (sgn(a[piv][col]) == 0) ++piv;
    std::swap(a[piv], a[col]);
    const mpq_class inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      const mpq_class f = a[i][col];
      for (std::size_t j = 0; j < 2 * d; ++j) a[i][j] -= f * a[col][j];
    }
  }
  data->inverse.assign(d, std::vector<mpq_class>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) data->inverse[i][j] = a[i][d + j];
  return *descent_cache.emplace(key, std::move(data)).first->second;
}

std::uint64_t positive_mod(std::int64_t k, std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(((k % sn) + sn) % sn);
}

}  // namespace

std::uint64_t normalized_conductor(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  return n % 4 == 2 ? n / 2 : n;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial index must be positive");
  std::lock_guard lock(cache_mutex);
  return phi_poly_locked(n);
}

Cyclotomic::Cyclotomic(const mpq_class& value) : conductor_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(std::uint64_t n, std::vector<mpq_class> coeffs)
    : conductor_(n), coeffs_(std::move(coeffs)) {
  detect_rational();
}

void Cyclotomic::detect_rational() {
  if (conductor_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return;
  coeffs_.resize(1);
  conductor_ = 1;
}

Cyclotomic Cyclotomic::make(std::uint64_t n, const std::vector<std::pair<std::int64_t, mpq_class>>& terms) {
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  const std::uint64_t m = normalized_conductor(n);
  std::vector<mpq_class> dense(m);
  for (const auto& [exponent, coefficient] : terms) {
    if (sgn(coefficient.get_den()) == 0) throw std::invalid_argument("zero denominator");
    mpq_class c = coefficient;
    c.canonicalize();
    std::uint64_t e = positive_mod(exponent, n);
    if (m != n) {
      // zeta_{2m}^e = (-1)^e zeta_m^{e (m+1)/2}
      if (e % 2 == 1) c = -c;
      e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(e) * ((m + 1) / 2)) % m);
    }
    dense[e] += c;
  }
  return Cyclotomic(m, reduce_dense(conductor_data(m), dense));
}

Cyclotomic Cyclotomic::zeta(std::uint64_t n, std::int64_t k) { return make(n, {{k, mpq_class(1)}}); }

bool Cyclotomic::is_zero() const { return conductor_ == 1 && sgn(coeffs_[0]) == 0; }

std::optional<mpq_class> Cyclotomic::to_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (conductor_ == 1) return *this;
  if (std::gcd(positive_mod(k, conductor_), conductor_) != 1)
    throw std::invalid_argument("Galois exponent must be coprime to the conductor");
  std::vector<mpq_class> dense(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0)
      dense[positive_mod(static_cast<std::int64_t>(i) * (k % static_cast<std::int64_t>(conductor_)), conductor_)] +=
          coeffs_[i];
  return Cyclotomic(conductor_, reduce_dense(conductor_data(conductor_), dense));
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

Cyclotomic Cyclotomic::lifted(std::uint64_t m) const {
  m = normalized_conductor(m);
  if (m % conductor_ != 0)
    throw std::invalid_argument("cannot lift conductor " + std::to_string(conductor_) + " to " +
                                std::to_string(m));
  if (m == conductor_) return *this;
  const std::uint64_t step = m / conductor_;
  std::vector<mpq_class> dense(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) dense[i * step] = coeffs_[i];
  Cyclotomic out;
  out.conductor_ = m;
  out.coeffs_ = reduce_dense(conductor_data(m), dense);
  return out;
}

Cyclotomic Cyclotomic::minimized() const {
  Cyclotomic x = *this;
  for (bool changed = true; changed && x.conductor_ > 1;) {
    changed = false;
    for (auto [p, e] : factorize(x.conductor_)) {
      std::uint64_t m = x.conductor_ / p;
      if (p == 2 && m % 4 == 2) m /= 2;
      const DescentData& d = descent_data(x.conductor_, m);
      const std::size_t dim = d.pivot_rows.size();
      std::vector<mpq_class> y(dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          if (sgn(d.inverse[i][j]) != 0) y[i] += d.inverse[i][j] * x.coeffs_[d.pivot_rows[j]];
      bool ok = true;
      for (std::size_t r = 0; r < x.coeffs_.size() && ok; ++r) {
        mpq_class v = 0;
        for (std::size_t j = 0; j < dim; ++j)
          if (d.embedding[j][r] != 0) v += y[j] * mpq_class(d.embedding[j][r]);
        ok = v == x.coeffs_[r];
      }
      if (ok) {
        x = Cyclotomic(m, std::move(y));
        changed = true;
        break;
      }
    }
  }
  return x;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (conductor_ != other.conductor_) {
    const std::uint64_t m = std::lcm(conductor_, other.conductor_);
    if (m != conductor_) *this = lifted(m);
    const Cyclotomic rhs = other.lifted(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  }
  detect_rational();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.conductor_ == 1) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    detect_rational();
    return *this;
  }
  if (conductor_ == 1) {
    const mpq_class r = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= r;
    detect_rational();
    return *this;
  }
  const std::uint64_t m = std::lcm(conductor_, other.conductor_);
  const std::uint64_t sa = m / conductor_;
  const std::uint64_t sb = m / other.conductor_;
  std::vector<mpq_class> dense(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (sgn(other.coeffs_[j]) == 0) continue;
      dense[(i * sa + j * sb) % m] += coeffs_[i] * other.coeffs_[j];
    }
  }
  *this = Cyclotomic(m, reduce_dense(conductor_data(m), dense));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const mpq_class& divisor) {
  if (sgn(divisor) == 0) throw std::domain_error("division by zero");
  for (auto& c : coeffs_) c /= divisor;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint64_t m = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

int compare(const Cyclotomic& a, const Cyclotomic& b) {
  const Cyclotomic x = a.minimized();
  const Cyclotomic y = b.minimized();
  if (x.conductor_ != y.conductor_) return x.conductor_ < y.conductor_ ? -1 : 1;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    const int c = cmp(x.coeffs_[i], y.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::complex<double> Cyclotomic::approximate() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(conductor_);
    sum += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  const Cyclotomic x = minimized();
  if (x.conductor_ == 1) return x.coeffs_[0].get_str();
  std::string out;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    const mpq_class& c = x.coeffs_[i];
    if (sgn(c) == 0) continue;
    std::string term;
    const std::string root = "E(" + std::to_string(x.conductor_) + ")" + (i > 1 ? "^" + std::to_string(i) : "");
    if (i == 0)
      term = c.get_str();
    else if (c == 1)
      term = root;
    else if (c == -1)
      term = "-" + root;
    else
      term = c.get_str() + "*" + root;
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

namespace {

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer or decimal string, got " + j.dump());
}

}  // namespace

nlohmann::json Cyclotomic::to_json() const {
  const Cyclotomic x = minimized();
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    const mpq_class& c = x.coeffs_[i];
    if (sgn(c) == 0) continue;
    terms.push_back({i, integer_json(c.get_num()), integer_json(c.get_den())});
  }
  return {{"conductor", x.conductor_}, {"terms", terms}};
}

Cyclotomic Cyclotomic::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("terms"))
    throw std::invalid_argument("cyclotomic value needs 'conductor' and 'terms'");
  const auto& n_json = j.at("conductor");
  if (!n_json.is_number_unsigned() || n_json.get<std::uint64_t>() == 0)
    throw std::invalid_argument("conductor must be a positive integer");
  const std::uint64_t n = n_json.get<std::uint64_t>();
  if (!j.at("terms").is_array()) throw std::invalid_argument("'terms' must be an array");
  std::vector<std::pair<std::int64_t, mpq_class>> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
      throw std::invalid_argument("term must be [exponent, numerator, denominator]");
    const mpz_class den = integer_from_json(t[2]);
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
    mpq_class c(integer_from_json(t[1]), den);
    c.canonicalize();
    terms.emplace_back(t[0].get<std::int64_t>(), c);
  }
  return make(n, terms).minimized();
}

}  // namespace invw
