#include "invw/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "invw/number_theory.hpp"

namespace invw {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  trim(f);
  while (f.size() > dg) {
    const std::uint64_t c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - c) * g[i]) % p);
    trim(f);
  }
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint32_t checked_power(std::uint32_t p, unsigned k) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) {
    size *= p;
    if (size > (1u << 20)) throw std::invalid_argument("field too large");
  }
  return static_cast<std::uint32_t>(size);
}

}  // namespace

Field::Field(std::uint32_t p, unsigned k) : p_(p), k_(k), size_(checked_power(p, k)) {
  // Lexicographically smallest monic irreducible: lower coefficients by code.
  for (std::uint32_t code = 0;; ++code) {
    Poly f(k + 1);
    std::uint32_t c = code;
    for (unsigned i = 0; i < k; ++i, c /= p) f[i] = c % p;
    f[k] = 1;
    if (k == 1 || is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  // Slow multiplication by polynomial arithmetic, used only to build tables.
  const auto slow_mul = [&](Element a, Element b) {
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    Poly prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
    Poly r = poly_mod(prod, modulus_, p_);
    r.resize(k_, 0);
    return from_coefficients(r);
  };
  const auto slow_pow = [&](Element a, std::uint64_t e) {
    Element result = 1;
    while (e) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  };

  const std::uint64_t group_order = size_ - 1;
  const auto factors = factorize(std::max<std::uint64_t>(group_order, 1));
  for (Element g = 1; g < size_; ++g) {
    bool generates = true;
    for (auto [r, e] : factors)
      if (group_order > 1 && slow_pow(g, group_order / r) == 1) generates = false;
    if (generates) {
      generator_ = g;
      break;
    }
  }

  exp_.resize(2 * group_order + 1);
  log_.assign(size_, 0);
  Element x = 1;
  for (std::uint64_t i = 0; i < group_order; ++i) {
    exp_[i] = x;
    exp_[i + group_order] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, generator_);
  }
  exp_[2 * group_order] = 1;

  neg_.resize(size_);
  for (Element a = 0; a < size_; ++a) {
    auto c = coefficients(a);
    for (auto& v : c) v = (p_ - v) % p_;
    neg_[a] = from_coefficients(c);
  }
  if (p_ != 2 && size_ <= 256) {
    add_table_.resize(std::size_t{size_} * size_);
    for (Element a = 0; a < size_; ++a) {
      const auto ca = coefficients(a);
      for (Element b = 0; b < size_; ++b) {
        auto cb = coefficients(b);
        for (unsigned i = 0; i < k_; ++i) cb[i] = (cb[i] + ca[i]) % p_;
        add_table_[std::size_t{a} * size_ + b] = from_coefficients(cb);
      }
    }
  }
}

Field::Element Field::from_int(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Element>(((value % p) + p) % p);
}

Field::Element Field::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[std::size_t{a} * size_ + b];
  Element result = 0;
  Element place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    result += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return result;
}

Field::Element Field::neg(Element a) const { return neg_[a]; }

Field::Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Field::Element Field::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Field::Element Field::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

Field::Element Field::pow(Element a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const auto m = static_cast<std::int64_t>(size_ - 1);
  const std::int64_t l = static_cast<std::int64_t>(log_[a]);
  const std::int64_t r = ((static_cast<std::int64_t>((static_cast<__int128>(l) * (e % m)) % m)) + m) % m;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint64_t Field::order(Element a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  const std::uint64_t m = size_ - 1;
  return m / std::gcd<std::uint64_t>(m, log_[a]);
}

std::uint32_t Field::log(Element a) const {
  if (a == 0) throw std::domain_error("logarithm of zero");
  return log_[a];
}

std::vector<std::uint32_t> Field::coefficients(Element a) const {
  std::vector<std::uint32_t> c(k_);
  for (unsigned i = 0; i < k_; ++i, a /= p_) c[i] = a % p_;
  return c;
}

Field::Element Field::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > k_) throw std::invalid_argument("too many coefficients for " + name());
  Element code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range for " + name());
    code = code * p_ + coeffs[i];
  }
  return code;
}

std::string Field::format(Element a) const {
  std::string out;
  const auto c = coefficients(a);
  for (unsigned i = 0; i < k_; ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

Field::Element Field::parse(const std::string& text) const {
  std::vector<std::uint32_t> coeffs;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed field element '" + text + "'");
    coeffs.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  if (coeffs.empty()) throw std::invalid_argument("empty field element");
  return from_coefficients(coeffs);
}

std::string Field::name() const {
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

FieldPtr field_make(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("extension degree must be positive");
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, k}];
  if (!slot) slot = FieldPtr(new Field(p, k));
  return slot;
}

FieldPtr unitary_field(std::uint32_t q) {
  const auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return field_make(static_cast<std::uint32_t>(pk->first), 2 * pk->second);
}

Field::Element frobenius(const Field& f, Field::Element a, std::uint32_t q) { return f.pow(a, q); }

Field::Element norm_one_generator(const Field& f, std::uint32_t q) {
  if (std::uint64_t{q} * q != f.size())
    throw std::invalid_argument(f.name() + " is not GF(" + std::to_string(q) + "^2)");
  return f.pow(f.generator(), q - 1);
}

FFMatrix::FFMatrix(FieldPtr field, std::size_t n)
    : field_(std::move(field)), n_(n), entries_(n * n, 0) {}

FFMatrix::FFMatrix(FieldPtr field, std::size_t n, std::vector<Field::Element> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) throw std::invalid_argument("matrix needs n^2 entries");
  for (auto e : entries_)
    if (e >= field_->size()) throw std::invalid_argument("entry outside " + field_->name());
}

FFMatrix FFMatrix::identity(FieldPtr field, std::size_t n) {
  FFMatrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FFMatrix FFMatrix::diagonal(FieldPtr field, const std::vector<Field::Element>& diag) {
  FFMatrix m(std::move(field), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

FFMatrix FFMatrix::operator*(const FFMatrix& other) const {
  if (n_ != other.n_ || !(*field_ == *other.field_))
    throw std::invalid_argument("matrix product needs equal dimensions and fields");
  const Field& f = *field_;
  FFMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t l = 0; l < n_; ++l) {
      const auto a = entries_[i * n_ + l];
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        out.entries_[i * n_ + j] = f.add(out.entries_[i * n_ + j], f.mul(a, other.entries_[l * n_ + j]));
    }
  return out;
}

FFMatrix FFMatrix::conjugate_transpose(std::uint32_t q) const {
  FFMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.entries_[j * n_ + i] = field_->pow(entries_[i * n_ + j], q);
  return out;
}

std::size_t FFMatrix::rank() const {
  const Field& f = *field_;
  std::vector<Field::Element> a = entries_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
    std::size_t piv = rank;
    while (piv < n_ && a[piv * n_ + col] == 0) ++piv;
    if (piv == n_) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv * n_ + j], a[rank * n_ + j]);
    const auto inv = f.inv(a[rank * n_ + col]);
    for (std::size_t i = rank + 1; i < n_; ++i) {
      const auto factor = f.mul(a[i * n_ + col], inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n_; ++j)
        a[i * n_ + j] = f.sub(a[i * n_ + j], f.mul(factor, a[rank * n_ + j]));
    }
    ++rank;
  }
  return rank;
}

bool FFMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (entries_[i * n_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

std::string FFMatrix::to_text() const {
  std::string out = field_->name() + " " + std::to_string(n_) + "\n";
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ' ';
      out += field_->format(entries_[i * n_ + j]);
    }
    out += '\n';
  }
  return out;
}

std::size_t kernel_dim(const FFMatrix& m, Field::Element lambda) {
  FFMatrix shifted = m;
  const Field& f = m.field();
  for (std::size_t i = 0; i < m.dim(); ++i) shifted.at(i, i) = f.sub(shifted(i, i), lambda);
  return m.dim() - shifted.rank();
}

bool is_unitary(const FFMatrix& m, std::uint32_t q) {
  return (m.conjugate_transpose(q) * m).is_identity();
}

FFMatrix kronecker(const FFMatrix& a, const FFMatrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("Kronecker product needs a common field");
  const Field& f = a.field();
  const std::size_t n = a.dim() * b.dim();
  FFMatrix out(a.field_ptr(), n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) out.at(i * b.dim() + k, j * b.dim() + l) = f.mul(x, b(k, l));
    }
  return out;
}

std::pair<FieldPtr, std::size_t> parse_matrix_header(const std::string& line) {
  static const std::regex header(R"(\s*GF\((\d+)\^(\d+)\)\s+(\d+)\s*)");
  std::smatch match;
  if (!std::regex_match(line, match, header))
    throw std::invalid_argument("expected header 'GF(p^k) n', got '" + line + "'");
  const auto p = static_cast<std::uint32_t>(std::stoul(match[1]));
  const auto k = static_cast<unsigned>(std::stoul(match[2]));
  const auto n = static_cast<std::size_t>(std::stoul(match[3]));
  if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  return {field_make(p, k), n};
}

FFMatrix parse_matrix(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    break;
  }
  if (!in && line.empty()) throw std::invalid_argument("missing matrix header");
  auto [field, n] = parse_matrix_header(line);
  std::vector<Field::Element> entries;
  entries.reserve(n * n);
  std::string token;
  while (entries.size() < n * n && in >> token) entries.push_back(field->parse(token));
  if (entries.size() != n * n)
    throw std::invalid_argument("matrix needs " + std::to_string(n * n) + " entries, got " +
                                std::to_string(entries.size()));
  return FFMatrix(field, n, std::move(entries));
}

FFMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

std::uint64_t unitary_group_order(unsigned k, std::uint32_t q) {
  unsigned __int128 order = 1;
  for (unsigned i = 0; i < k * (k - 1) / 2; ++i) order *= q;
  __int128 power = 1;
  for (unsigned i = 1; i <= k; ++i) {
    power *= q;
    order *= static_cast<unsigned __int128>(power - (i % 2 ? -1 : 1));
  }
  if (order >> 64) throw std::overflow_error("unitary group order overflows 64 bits");
  return static_cast<std::uint64_t>(order);
}

std::vector<FFMatrix> enumerate_unitary_group(unsigned k, std::uint32_t q) {
  if (k == 0) throw std::invalid_argument("dimension must be positive");
  const std::uint64_t expected = unitary_group_order(k, q);
  if (expected > 1000000)
    throw std::invalid_argument("GU_" + std::to_string(k) + "(" + std::to_string(q) +
                                ") is too large to enumerate");
  const FieldPtr field = unitary_field(q);
  const Field& f = *field;

  const auto hermitian = [&](const std::vector<Field::Element>& u, const std::vector<Field::Element>& v) {
    Field::Element s = 0;
    for (unsigned i = 0; i < k; ++i) s = f.add(s, f.mul(u[i], f.pow(v[i], q)));
    return s;
  };

  // Unit vectors in lexicographic order (first coordinate most significant).
  std::vector<std::vector<Field::Element>> units;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) total *= f.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Field::Element> v(k);
    std::uint64_t c = code;
    for (unsigned i = k; i-- > 0; c /= f.size()) v[i] = static_cast<Field::Element>(c % f.size());
    if (hermitian(v, v) == 1) units.push_back(std::move(v));
  }

  std::vector<FFMatrix> result;
  result.reserve(expected);
  std::vector<std::size_t> chosen;
  const auto recurse = [&](const auto& self) -> void {
    if (chosen.size() == k) {
      std::vector<Field::Element> entries;
      for (auto idx : chosen) entries.insert(entries.end(), units[idx].begin(), units[idx].end());
      result.emplace_back(field, k, std::move(entries));
      return;
    }
    for (std::size_t idx = 0; idx < units.size(); ++idx) {
      bool orthogonal = true;
      for (auto prev : chosen)
        if (hermitian(units[idx], units[prev]) != 0) {
          orthogonal = false;
          break;
        }
      if (!orthogonal) continue;
      chosen.push_back(idx);
      self(self);
      chosen.pop_back();
    }
  };
  recurse(recurse);
  if (result.size() != expected)
    throw std::logic_error("unitary enumeration found " + std::to_string(result.size()) +
                           " elements, expected " + std::to_string(expected));
  return result;
}

std::vector<FFMatrix> filter_unitary_group(unsigned k, std::uint32_t q) {
  const FieldPtr field = unitary_field(q);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k * k; ++i) {
    total *= field->size();
    if (total > (1u << 24)) throw std::invalid_argument("too many candidate matrices to filter");
  }
  std::vector<FFMatrix> result;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Field::Element> entries(k * k);
    std::uint64_t c = code;
    for (std::size_t i = k * k; i-- > 0; c /= field->size())
      entries[i] = static_cast<Field::Element>(c % field->size());
    FFMatrix m(field, k, std::move(entries));
    if (is_unitary(m, q)) result.push_back(std::move(m));
  }
  return result;
}

}  // namespace invw
