#include "invw/lie_characters.hpp"

#include <algorithm>
#include <functional>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "invw/number_theory.hpp"

namespace invw {

unsigned Partition::size() const noexcept {
  unsigned n = 0;
  for (unsigned p : parts) n += p;
  return n;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

Partition make_partition(std::vector<unsigned> parts) {
  if (parts.empty()) throw std::invalid_argument("partition: no parts");
  for (unsigned p : parts)
    if (p == 0) throw std::invalid_argument("partition: parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition{std::move(parts)};
}

Partition parse_partition(const std::string& text) {
  std::vector<unsigned> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("partition: cannot read part '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || item.find('-') != std::string::npos)
      throw std::invalid_argument("partition: cannot read part '" + item + "'");
    parts.push_back(static_cast<unsigned>(v));
  }
  return make_partition(std::move(parts));
}

namespace {

void partitions_rec(unsigned remaining, unsigned largest, std::vector<unsigned>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (unsigned p = std::min(remaining, largest); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  if (n == 0) return out;
  std::vector<unsigned> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

Partition conjugate_partition(const Partition& lambda) {
  std::vector<unsigned> parts;
  if (lambda.parts.empty()) return Partition{};
  for (unsigned j = 1; j <= lambda.parts.front(); ++j) {
    unsigned count = 0;
    for (unsigned p : lambda.parts)
      if (p >= j) ++count;
    parts.push_back(count);
  }
  return Partition{parts};
}

std::vector<unsigned> hook_lengths(const Partition& lambda) {
  Partition conj = conjugate_partition(lambda);
  std::vector<unsigned> hooks;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    for (unsigned j = 0; j < lambda.parts[i]; ++j)
      hooks.push_back((lambda.parts[i] - j - 1) + (conj.parts[j] - static_cast<unsigned>(i) - 1) + 1);
  std::sort(hooks.begin(), hooks.end());
  return hooks;
}

unsigned a_statistic(const Partition& lambda) {
  unsigned a = 0;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) a += static_cast<unsigned>(i) * lambda.parts[i];
  return a;
}

namespace {

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

/// f / (x^d - 1), which must divide f exactly.
IntPoly divide_by_binomial(IntPoly f, unsigned d) {
  if (f.size() <= d) throw std::logic_error("rho_polynomial: inexact division");
  IntPoly q(f.size() - d, mpz_class(0));
  for (std::size_t i = f.size(); i-- > d;) {
    q[i - d] = f[i];
    f[i - d] += f[i];
    f[i] = 0;
  }
  for (const auto& c : f)
    if (c != 0) throw std::logic_error("rho_polynomial: inexact division");
  trim(q);
  return q;
}

IntPoly binomial(unsigned d) {
  IntPoly f(d + 1, mpz_class(0));
  f[0] = -1;
  f[d] = 1;
  return f;
}

mpz_class power(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

mpz_class signed_power(std::int64_t base, unsigned long e) { return power(mpz_class(static_cast<long>(base)), e); }

}  // namespace

IntPoly rho_polynomial(const Partition& lambda) {
  if (lambda.parts.empty()) throw std::invalid_argument("rho_polynomial: empty partition");
  IntPoly f{mpz_class(1)};
  for (unsigned i = 1; i <= lambda.size(); ++i) f = multiply(f, binomial(i));
  for (unsigned h : hook_lengths(lambda)) f = divide_by_binomial(std::move(f), h);
  IntPoly shifted(a_statistic(lambda), mpz_class(0));
  shifted.insert(shifted.end(), f.begin(), f.end());
  return shifted;
}

mpz_class evaluate(const IntPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

mpz_class unipotent_degree(const Partition& lambda, std::uint64_t q, GroupVariant variant) {
  if (q < 2) throw std::invalid_argument("unipotent_degree: q must be at least 2");
  mpz_class x(static_cast<unsigned long>(q));
  if (variant == GroupVariant::unitary) x = -x;
  mpz_class value = evaluate(rho_polynomial(lambda), x);
  return abs(value);
}

std::vector<std::uint64_t> ppd(std::uint64_t q, unsigned n) {
  if (q < 2) throw std::invalid_argument("ppd: q must be at least 2");
  if (n < 1) throw std::invalid_argument("ppd: n must be positive");
  mpz_class big = power(mpz_class(static_cast<unsigned long>(q)), n) - 1;
  if (!big.fits_ulong_p()) throw std::overflow_error("ppd: q^n exceeds 64 bits");
  std::uint64_t value = big.get_ui();
  std::vector<std::uint64_t> out;
  for (const auto& [r, e] : factorize(value)) {
    (void)e;
    if (multiplicative_order(q % r, r) == n) out.push_back(r);
  }
  return out;
}

mpz_class torus_order_unitary(const std::vector<unsigned>& shape, std::uint64_t q) {
  if (shape.empty()) throw std::invalid_argument("torus: empty shape");
  mpz_class product = 1;
  for (unsigned a : shape) {
    if (a == 0) throw std::invalid_argument("torus: parts must be positive");
    product *= power(mpz_class(static_cast<unsigned long>(q)), a) - (a % 2 ? -1 : 1);
  }
  mpz_class qp1(static_cast<unsigned long>(q + 1));
  if (product % qp1 != 0) throw std::logic_error("torus: order not divisible by q + 1");
  return product / qp1;
}

mpz_class special_unitary_order(unsigned n, std::uint64_t q) {
  mpz_class qq(static_cast<unsigned long>(q));
  mpz_class order = power(qq, static_cast<unsigned long>(n) * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) order *= power(qq, i) - (i % 2 ? -1 : 1);
  return order / (qq + 1);
}

namespace {

using RowFormula = std::function<mpq_class(unsigned, const mpq_class&)>;

mpq_class qp(const mpq_class& q, long e) {
  mpz_class num = power(q.get_num(), static_cast<unsigned long>(e));
  return mpq_class(num);
}

const std::vector<std::pair<std::string, RowFormula>>& table1_rows() {
  static const std::vector<std::pair<std::string, RowFormula>> rows = [] {
    std::vector<std::pair<std::string, RowFormula>> r;
    auto P = [](const mpq_class& q, long e) -> mpq_class { return qp(q, e); };
    auto A = [P](unsigned n, const mpq_class& q) -> mpq_class { return P(q, n) + 1; };       // q^n + 1
    auto B = [P](unsigned n, const mpq_class& q) -> mpq_class { return P(q, n - 1) - 1; };   // q^(n-1) - 1
    auto C = [P](unsigned n, const mpq_class& q) -> mpq_class { return P(q, n - 2) + 1; };   // q^(n-2) + 1
    auto D = [P](unsigned n, const mpq_class& q) -> mpq_class { return P(q, n - 3) - 1; };   // q^(n-3) - 1
    auto E = [P](unsigned n, const mpq_class& q) -> mpq_class { return P(q, n - 4) + 1; };   // q^(n-4) + 1
    auto F = [P](unsigned n, const mpq_class& q) -> mpq_class { return P(q, n - 5) - 1; };   // q^(n-5) - 1
    auto q3p1 = [P](const mpq_class& q) -> mpq_class { return P(q, 3) + 1; };
    auto q2m1 = [P](const mpq_class& q) -> mpq_class { return P(q, 2) - 1; };
    auto qp1 = [](const mpq_class& q) -> mpq_class { return mpq_class(q + 1); };

    r.emplace_back("1:(q+1)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return P(q, 3) * A(n, q) * B(n, q) * F(n, q) / (q3p1(q) * q2m1(q) * qp1(q)) + q * B(n, q) / qp1(q);
    });
    r.emplace_back("1:(t)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return A(n, q) * B(n, q) * C(n, q) / (q3p1(q) * q2m1(q) * qp1(q));
    });
    r.emplace_back("q^3:(q+1)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return P(q, 6) * B(n, q) * C(n, q) * E(n, q) / (q3p1(q) * q2m1(q) * qp1(q)) + q * B(n, q) / qp1(q);
    });
    r.emplace_back("q^3:(t)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return P(q, 3) * A(n, q) * B(n, q) * C(n, q) / (q3p1(q) * q2m1(q) * qp1(q));
    });
    r.emplace_back("q^2-q:(q+1)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return P(q, 4) * A(n, q) * C(n, q) * E(n, q) / (q3p1(q) * qp1(q) * qp1(q));
    });
    r.emplace_back("q^2-q:(t)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return q * A(n, q) * B(n, q) * C(n, q) / (q3p1(q) * qp1(q) * qp1(q));
    });
    r.emplace_back("q^2-q+1:(t,q+1)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return P(q, 2) * A(n, q) * B(n, q) * E(n, q) / (q2m1(q) * qp1(q) * qp1(q)) + A(n, q) / qp1(q);
    });
    r.emplace_back("q^2-q+1:(q+1,u)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return q * A(n, q) * B(n, q) * D(n, q) / (q2m1(q) * qp1(q) * qp1(q));
    });
    r.emplace_back("q^2-q+1:(t,u)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return A(n, q) * B(n, q) * C(n, q) / (q2m1(q) * qp1(q) * qp1(q));
    });
    r.emplace_back("q(q^2-q+1):(t,q+1)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return P(q, 3) * A(n, q) * B(n, q) * D(n, q) / (q2m1(q) * qp1(q) * qp1(q)) + A(n, q) / qp1(q);
    });
    r.emplace_back("q(q^2-q+1):(q+1,u)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return P(q, 2) * A(n, q) * B(n, q) * D(n, q) / (q2m1(q) * qp1(q) * qp1(q));
    });
    r.emplace_back("q(q^2-q+1):(t,u)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return q * A(n, q) * B(n, q) * C(n, q) / (q2m1(q) * qp1(q) * qp1(q));
    });
    r.emplace_back("(q-1)(q^2-q+1):(t,u,q+1)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return q * A(n, q) * B(n, q) * D(n, q) / (qp1(q) * qp1(q) * qp1(q));
    });
    r.emplace_back("(q-1)(q^2-q+1):(t,u,v)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return A(n, q) * B(n, q) * C(n, q) / (qp1(q) * qp1(q) * qp1(q));
    });
    r.emplace_back("q^3+1:(q+1,u)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return q * A(n, q) * B(n, q) * D(n, q) / (q2m1(q) * qp1(q));
    });
    r.emplace_back("q^3+1:(t,u)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return A(n, q) * B(n, q) * C(n, q) / (q2m1(q) * qp1(q));
    });
    r.emplace_back("(q+1)(q^2-1):(t)", [=](unsigned n, const mpq_class& q) -> mpq_class {
      return A(n, q) * B(n, q) * C(n, q) / q3p1(q);
    });
    return r;
  }();
  return rows;
}

}  // namespace

const std::vector<std::string>& table1_row_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& row : table1_rows()) out.push_back(row.first);
    return out;
  }();
  return ids;
}

mpq_class table1_value(const std::string& row, unsigned n, std::uint64_t q) {
  if (n < 7 || n % 2 == 0) throw std::invalid_argument("table1: n must be odd and at least 7");
  if (q < 2) throw std::invalid_argument("table1: q must be at least 2");
  for (const auto& [id, formula] : table1_rows())
    if (id == row) return formula(n, mpq_class(static_cast<unsigned long>(q)));
  std::string valid;
  for (const auto& id : table1_row_ids()) valid += (valid.empty() ? "" : ", ") + id;
  throw std::invalid_argument("table1: unknown row '" + row + "'; valid rows: " + valid);
}

mpz_class table1_degree(const std::string& row, unsigned n, std::uint64_t q) {
  mpq_class v = table1_value(row, n, q);
  if (v.get_den() != 1 || v <= 0)
    throw std::domain_error("table1: row " + row + " at (n,q)=(" + std::to_string(n) + "," +
                            std::to_string(q) + ") evaluates to " + v.get_str() + ", not a positive integer");
  return v.get_num();
}

bool table1_row_occurs(const std::string& row, std::uint64_t q) {
  table1_value(row, 7, q);  // validates the identifier
  if (row.starts_with("q^3+1:")) {
    for (std::uint64_t u = 1; u + 2 <= q * q; ++u)
      if (u % (q - 1) != 0) return true;
    return false;
  }
  if (row.ends_with("(t,u,v)")) return q >= 3;
  return true;
}

WeilContext WeilContext::make(unsigned n, std::uint32_t q) {
  WeilContext ctx;
  ctx.n = n;
  ctx.q = q;
  ctx.field = unitary_field(q);
  ctx.delta = norm_one_generator(*ctx.field, q);
  return ctx;
}

mpz_class weil_zeta(const FFMatrix& g, std::uint32_t q) {
  std::size_t fixed = kernel_dim(g, g.field().one());
  mpz_class value = signed_power(-static_cast<std::int64_t>(q), fixed);
  return g.dim() % 2 ? mpz_class(-value) : value;
}

Cyclotomic weil_chi(unsigned t, const FFMatrix& g, const WeilContext& ctx) {
  if (t > ctx.q) throw std::invalid_argument("weil_chi: t must lie in 0..q");
  if (g.dim() != ctx.n || !(g.field() == *ctx.field))
    throw std::invalid_argument("weil_chi: matrix does not match the context");
  const Field& f = *ctx.field;
  const std::uint64_t m = ctx.q + 1;
  std::vector<std::pair<std::int64_t, mpq_class>> terms;
  for (std::uint64_t l = 0; l <= ctx.q; ++l) {
    Field::Element eigen = f.pow(ctx.delta, -static_cast<std::int64_t>(l));
    std::size_t dim = kernel_dim(g, eigen);
    mpz_class weight = signed_power(-static_cast<std::int64_t>(ctx.q), dim);
    std::int64_t exponent = -static_cast<std::int64_t>((t * l) % m);
    terms.emplace_back(exponent, mpq_class(weight));
  }
  Cyclotomic sum = Cyclotomic::make(m, terms);
  mpq_class scale(ctx.n % 2 ? -1 : 1, static_cast<unsigned long>(m));
  return (sum * Cyclotomic(scale)).minimized();
}

mpq_class d3_unipotent_closed(std::uint64_t q_in, unsigned r, unsigned r1) {
  if (r1 > r) throw std::invalid_argument("d3: r1 exceeds r");
  mpz_class q(static_cast<unsigned long>(q_in));
  mpz_class mq = -q;
  auto pw = [](const mpz_class& b, long e) -> mpq_class {
    if (e >= 0) return mpq_class(power(b, static_cast<unsigned long>(e)));
    return mpq_class(1) / mpq_class(power(b, static_cast<unsigned long>(-e)));
  };
  long R = r, R1 = r1;
  mpq_class q2 = q * q, q3 = q2 * q, q4 = q3 * q;
  mpq_class t1 = (q2 - q) * (-pw(mq, 3 * R) - q);
  mpq_class t2 = q * (-pw(mq, 3 * R - R1) - q) * (q - 1) * (q3 + 1);
  mpq_class t3 = q2 * (q - 1) * (q2 - q + 1) * (-pw(q, 2 * R + 1) - pw(mq, R + 1) - q * (q - 1));
  mpq_class t4 = q2 * (q - 1) * (q3 + 1) * (-pw(mq, 2 * R - R1 + 1) - pw(mq, R + 1) - q * (q - 1));
  mpq_class t5 = 2 * q3 * (q - 1) * (q - 1) * (q2 - q + 1) * ((-3 * pw(mq, R + 1) - q * (q - 2)) / 6);
  mpq_class t6 = q4 / 3 * (q + 1) * (q + 1) * (q + 1) * (q - 1) * (q - 1);
  mpq_class total = t1 - t2 - t3 + t4 + t5 + t6;
  total.canonicalize();
  return total / mpq_class(unitary_group_order(3, static_cast<std::uint32_t>(q_in)));
}

mpq_class d2_unipotent_closed(std::uint64_t q_in, unsigned r, unsigned r1) {
  if (r1 > r) throw std::invalid_argument("d2: r1 exceeds r");
  mpz_class q(static_cast<unsigned long>(q_in));
  mpz_class mq = -q;
  mpq_class t1 = (q - 1) * (power(q, 2ul * r) - 1);
  mpq_class t2 = (q * q - 1) * (power(mq, 2ul * r - r1) - 1);
  mpq_class t3 = q * (q - 1) * (power(mq, r) * (-q + 1) + (q - 1));
  mpq_class total = t1 - t2 + t3;
  return total / mpq_class(unitary_group_order(2, static_cast<std::uint32_t>(q_in)));
}

}  // namespace invw
