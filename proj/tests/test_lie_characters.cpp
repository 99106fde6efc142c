#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "invw/dual_pair.hpp"
#include "invw/lie_characters.hpp"
#include "invw/number_theory.hpp"

using invw::Cyclotomic;
using invw::FFMatrix;
using invw::GroupVariant;
using invw::Partition;

namespace {

mpz_class pw(long base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), mpz_class(base).get_mpz_t(), e);
  return out;
}

// Degree by the hook formula evaluated numerically at x = v:
// v^a * prod_{i=1..n}(v^i - 1) / prod_h (v^h - 1).
mpq_class hook_formula(const Partition& lambda, long v) {
  mpq_class num = pw(v, invw::a_statistic(lambda));
  for (unsigned i = 1; i <= lambda.size(); ++i) num *= pw(v, i) - 1;
  for (unsigned h : invw::hook_lengths(lambda)) num /= mpq_class(pw(v, h) - 1);
  return num;
}

FFMatrix random_matrix(const invw::FieldPtr& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f->size() - 1);
  std::vector<invw::Field::Element> e(n * n);
  for (auto& x : e) x = pick(rng);
  // sprinkle in matrices with large fixed spaces
  if (rng() % 3 == 0)
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] = (i == j) ? 1 : 0;
  return FFMatrix(f, n, e);
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(invw::parse_partition("4,2,1").parts == std::vector<unsigned>{4, 2, 1});
  CHECK(invw::parse_partition("1,3,2").parts == std::vector<unsigned>{3, 2, 1});
  CHECK_THROWS_AS(invw::parse_partition("4,0"), std::invalid_argument);
  CHECK_THROWS_AS(invw::parse_partition("4,x"), std::invalid_argument);
  CHECK_THROWS_AS(invw::parse_partition("4,-1"), std::invalid_argument);
  CHECK(invw::conjugate_partition(invw::parse_partition("4,2,1")).parts == std::vector<unsigned>{3, 2, 1, 1});
  CHECK(invw::conjugate_partition(invw::parse_partition("5")).parts == std::vector<unsigned>(5, 1));
  const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (unsigned n = 1; n <= 10; ++n) CHECK(invw::partitions_of(n).size() == counts[n - 1]);
  CHECK(invw::a_statistic(invw::parse_partition("4,2,1")) == 4);
}

TEST_CASE("hook multisets are transpose invariant") {
  for (unsigned n = 1; n <= 12; ++n)
    for (const auto& lambda : invw::partitions_of(n)) {
      const Partition conj = invw::conjugate_partition(lambda);
      CHECK(invw::conjugate_partition(conj) == lambda);
      CHECK(invw::hook_lengths(lambda) == invw::hook_lengths(conj));
    }
}

TEST_CASE("rho polynomial: examples and hook-formula oracle") {
  CHECK(invw::rho_polynomial(invw::parse_partition("5")) == invw::IntPoly{1});
  const auto st = invw::rho_polynomial(Partition{std::vector<unsigned>(4, 1)});
  CHECK(st.size() == 7);
  CHECK(st.back() == 1);
  for (unsigned n = 1; n <= 9; ++n)
    for (const auto& lambda : invw::partitions_of(n)) {
      const auto rho = invw::rho_polynomial(lambda);
      for (long v : {2L, 3L, -2L, -3L, 5L}) CHECK(mpq_class(invw::evaluate(rho, v)) == hook_formula(lambda, v));
    }
}

TEST_CASE("transposition scales rho by a power of x") {
  for (unsigned n = 1; n <= 10; ++n)
    for (const auto& lambda : invw::partitions_of(n)) {
      const Partition conj = invw::conjugate_partition(lambda);
      const auto a = invw::rho_polynomial(lambda);
      const auto b = invw::rho_polynomial(conj);
      const int shift = static_cast<int>(invw::a_statistic(conj)) - static_cast<int>(invw::a_statistic(lambda));
      CHECK(static_cast<int>(b.size()) - static_cast<int>(a.size()) == shift);
      const auto& lo = shift >= 0 ? a : b;
      const auto& hi = shift >= 0 ? b : a;
      const std::size_t s = static_cast<std::size_t>(std::abs(shift));
      for (std::size_t i = 0; i < hi.size(); ++i) CHECK(hi[i] == (i < s ? mpz_class(0) : lo[i - s]));
    }
}

TEST_CASE("unipotent degrees") {
  CHECK(invw::unipotent_degree(invw::parse_partition("6,1"), 2, GroupVariant::unitary) == 42);
  CHECK(invw::unipotent_degree(invw::parse_partition("4,2,1"), 2, GroupVariant::unitary) == 7568);
  CHECK(invw::unipotent_degree(invw::parse_partition("1,1,1,1"), 2, GroupVariant::unitary) == 64);
  CHECK(invw::unipotent_degree(invw::parse_partition("2,1"), 2, GroupVariant::linear) == 6);
  CHECK(invw::unipotent_degree(invw::parse_partition("2,1"), 2, GroupVariant::unitary) == 2);
  for (unsigned n = 3; n <= 9; n += 2)
    for (std::uint64_t q : {2u, 3u, 4u}) {
      const mpz_class expected = mpz_class(static_cast<unsigned long>(q)) *
                                 (pw(static_cast<long>(q), n - 1) - 1) / (q + 1);
      std::vector<unsigned> parts{n - 1, 1};
      CHECK(invw::unipotent_degree(Partition{parts}, q, GroupVariant::unitary) == expected);
    }
}

TEST_CASE("unipotent degrees divide |SU_n(q)|") {
  for (unsigned n = 2; n <= 6; ++n)
    for (std::uint64_t q : {2u, 3u}) {
      const mpz_class su = invw::special_unitary_order(n, q);
      for (const auto& lambda : invw::partitions_of(n)) {
        const mpz_class d = invw::unipotent_degree(lambda, q, GroupVariant::unitary);
        CHECK(d > 0);
        CHECK(su % d == 0);
      }
    }
}

TEST_CASE("primitive prime divisors") {
  CHECK(invw::ppd(2, 4) == std::vector<std::uint64_t>{5});
  CHECK(invw::ppd(2, 6).empty());
  CHECK(invw::ppd(3, 6) == std::vector<std::uint64_t>{7});
  CHECK(invw::ppd(3, 2).empty());  // 3 + 1 is a power of two
  CHECK(invw::ppd(7, 2).empty());
  CHECK(invw::ppd(5, 2) == std::vector<std::uint64_t>{3});
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u})
    for (unsigned n = 2; n <= 14; ++n) {
      const auto primes = invw::ppd(q, n);
      for (auto r : primes) {
        CHECK(invw::is_prime(r));
        CHECK(invw::multiplicative_order(q % r, r) == n);
      }
      // oracle: every prime factor of q^n - 1 not dividing q^k - 1 for k < n
      const mpz_class value = pw(static_cast<long>(q), n) - 1;
      for (const auto& [r, e] : invw::factorize(value.get_ui())) {
        (void)e;
        bool old = false;
        for (unsigned k = 1; k < n; ++k)
          if ((pw(static_cast<long>(q), k) - 1) % r == 0) old = true;
        CHECK(old == !std::binary_search(primes.begin(), primes.end(), r));
      }
    }
}

TEST_CASE("torus orders") {
  CHECK(invw::torus_order_unitary({7}, 2) == 43);
  CHECK(invw::torus_order_unitary({1, 1, 4}, 2) == 45);
  CHECK(invw::torus_order_unitary(std::vector<unsigned>(5, 1), 3) == 256);
  for (unsigned n = 2; n <= 8; ++n)
    for (std::uint64_t q : {2u, 3u}) {
      const mpz_class su = invw::special_unitary_order(n, q);
      for (const auto& shape : invw::partitions_of(n)) CHECK(su % invw::torus_order_unitary(shape.parts, q) == 0);
    }
}

TEST_CASE("degree table rows") {
  CHECK(invw::table1_row_ids().size() == 17);
  CHECK(invw::table1_degree("q^2-q:(q+1)", 7, 2) == 7568);
  CHECK(invw::table1_degree("1:(t)", 7, 2) == 3311);
  CHECK(invw::table1_value("1:(t)", 7, 2) == mpq_class(129 * 63 * 33) / 81);
  CHECK_THROWS_AS(invw::table1_value("nope", 7, 2), std::invalid_argument);
  CHECK_THROWS_AS(invw::table1_value("1:(t)", 8, 2), std::invalid_argument);
  CHECK_THROWS_AS(invw::table1_degree("q^3:(q+1)", 9, 2), std::domain_error);
  for (unsigned n : {7u, 9u, 11u})
    for (std::uint64_t q : {2u, 3u}) {
      std::vector<unsigned> parts{n - 3, 2, 1};
      CHECK(invw::table1_degree("q^2-q:(q+1)", n, q) == invw::unipotent_degree(Partition{parts}, q, GroupVariant::unitary));
    }
}

TEST_CASE("Weil character values") {
  const auto f = invw::unitary_field(2);
  CHECK(invw::weil_zeta(FFMatrix::identity(f, 3), 2) == 8);
  const auto ctx3 = invw::WeilContext::make(3, 2);
  const auto d = ctx3.delta;
  CHECK(invw::weil_zeta(FFMatrix::diagonal(f, {d, d, d}), 2) == -1);
  CHECK(invw::weil_zeta(FFMatrix::diagonal(f, {d, d, d, d}), 2) == 1);
  CHECK(invw::weil_zeta(FFMatrix::diagonal(f, {1, d, d}), 2) == 2);
  const auto ctx = invw::WeilContext::make(7, 2);
  const FFMatrix one = FFMatrix::identity(f, 7);
  CHECK(invw::weil_chi(0, one, ctx) == Cyclotomic(42));
  CHECK(invw::weil_chi(1, one, ctx) == Cyclotomic(43));
  CHECK(invw::weil_chi(2, one, ctx) == Cyclotomic(43));
  const FFMatrix s = FFMatrix::diagonal(f, {d, f->inv(d), 1});
  CHECK(invw::weil_chi(1, s, ctx3) == Cyclotomic(0));
  CHECK_THROWS_AS(invw::weil_chi(3, one, ctx), std::invalid_argument);
}

TEST_CASE("Weil constituents sum to the Weil character") {
  std::mt19937 rng(41);
  for (auto [n, q] : std::vector<std::pair<unsigned, std::uint32_t>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {5, 4}}) {
    const auto ctx = invw::WeilContext::make(n, q);
    for (int trial = 0; trial < 40; ++trial) {
      const FFMatrix g = random_matrix(ctx.field, n, rng);
      Cyclotomic sum;
      for (unsigned t = 0; t <= q; ++t) sum += invw::weil_chi(t, g, ctx);
      CHECK(sum == Cyclotomic(mpq_class(invw::weil_zeta(g, q))));
    }
  }
}

TEST_CASE("degree identity at the identity matrix") {
  for (unsigned n = 3; n <= 8; ++n)
    for (std::uint32_t q : {2u, 3u}) {
      const auto ctx = invw::WeilContext::make(n, q);
      const Cyclotomic chi0 = invw::weil_chi(0, FFMatrix::identity(ctx.field, n), ctx);
      const mpz_class qn = pw(q, n);
      const mpq_class rest = mpq_class(q * (qn - (n % 2 ? -1 : 1))) / (q + 1);
      CHECK(chi0 + Cyclotomic(rest) == Cyclotomic(mpq_class(qn)));
    }
}

TEST_CASE("closed forms against independent integer evaluation") {
  // six-term expression times 6, in exact integers
  auto d3_times_six = [](long q, unsigned r, unsigned r1) {
    const mpz_class Q = q;
    auto m = [q](unsigned long e) { return pw(-q, e); };
    mpz_class s = 6 * (Q * Q - Q) * (-m(3 * r) - Q);
    s -= 6 * Q * (-m(3 * r - r1) - Q) * (Q - 1) * (Q * Q * Q + 1);
    s -= 6 * Q * Q * (Q - 1) * (Q * Q - Q + 1) * (-pw(q, 2 * r + 1) - m(r + 1) - Q * (Q - 1));
    s += 6 * Q * Q * (Q - 1) * (Q * Q * Q + 1) * (-m(2 * r - r1 + 1) - m(r + 1) - Q * (Q - 1));
    s += 2 * Q * Q * Q * (Q - 1) * (Q - 1) * (Q * Q - Q + 1) * (-3 * m(r + 1) - Q * (Q - 2));
    s += 2 * Q * Q * Q * Q * (Q + 1) * (Q + 1) * (Q + 1) * (Q - 1) * (Q - 1);
    return s;
  };
  for (long q : {2L, 3L})
    for (unsigned r = 1; r <= 9; ++r)
      for (unsigned r1 = 0; r1 <= r; ++r1) {
        const mpq_class gu3 = invw::unitary_group_order(3, static_cast<std::uint32_t>(q));
        CHECK(invw::d3_unipotent_closed(q, r, r1) == mpq_class(d3_times_six(q, r, r1)) / (6 * gu3));
        const mpz_class Q = q;
        const mpz_class d2 = (Q - 1) * (pw(q, 2 * r) - 1) - (Q * Q - 1) * (pw(-q, 2 * r - r1) - 1) +
                             Q * (Q - 1) * (pw(-q, r) * (1 - Q) + (Q - 1));
        const mpq_class gu2 = invw::unitary_group_order(2, static_cast<std::uint32_t>(q));
        CHECK(invw::d2_unipotent_closed(q, r, r1) == mpq_class(d2) / gu2);
      }
  CHECK(invw::d3_unipotent_closed(2, 7, 7) == mpq_class(4861056) / 648);
  CHECK(invw::d2_unipotent_closed(2, 7, 7) == 946);
  CHECK_THROWS_AS(invw::d2_unipotent_closed(2, 3, 4), std::invalid_argument);
}

TEST_CASE("transvection is unitary of determinant one with one Jordan block of size two") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u})
    for (unsigned n : {2u, 3u, 7u}) {
      const FFMatrix t = invw::unitary_transvection(n, q);
      CHECK(invw::is_unitary(t, q));
      CHECK(invw::kernel_dim(t, 1) == n - 1);
      CHECK(!t.is_identity());
      FFMatrix sq = t;
      for (std::uint32_t i = 1; i < t.field().characteristic(); ++i) sq = sq * t;
      CHECK(sq.is_identity());
    }
}

TEST_CASE("dual pair averages") {
  const invw::DualPairEvaluator gu2(2, 2);
  CHECK(gu2.group().order() == 18);
  CHECK(invw::validate_table(gu2.table()).ok());
  const auto f = gu2.field();
  const FFMatrix one = FFMatrix::identity(f, 7);
  const auto values = gu2.d_alpha_all(one);
  Cyclotomic weighted;
  const auto degrees = gu2.table().degrees();
  for (std::size_t row = 0; row < values.size(); ++row) {
    CHECK(values[row].is_rational());
    CHECK(values[row].to_rational()->get_den() == 1);
    weighted += Cyclotomic(degrees[row]) * values[row];
  }
  // the Weil character of GU_14(2) splits over GU_2 x GU_7
  CHECK(weighted == Cyclotomic(mpq_class(invw::weil_zeta(FFMatrix::identity(f, 14), 2))));
  const auto rows = gu2.rows_of_degree(1);
  bool found = false;
  for (auto r : rows) found = found || values[r] == Cyclotomic(946);
  CHECK(found);

  const invw::DualPairEvaluator gu3(3, 2);
  CHECK(gu3.group().order() == 648);
  const auto d = gu3.rows_of_degree(2);
  bool hit = false;
  for (auto r : d) hit = hit || gu3.d_alpha(r, one) == Cyclotomic(7568);
  CHECK(hit);
}

TEST_CASE("rows with an empty parameter range") {
  std::vector<std::string> empty;
  for (const auto& id : invw::table1_row_ids())
    if (!invw::table1_row_occurs(id, 2)) empty.push_back(id);
  CHECK(empty == std::vector<std::string>{"(q-1)(q^2-q+1):(t,u,v)", "q^3+1:(q+1,u)", "q^3+1:(t,u)"});
  for (const auto& id : invw::table1_row_ids()) {
    CHECK(invw::table1_row_occurs(id, 3));
    CHECK(invw::table1_row_occurs(id, 4));
  }
  CHECK_THROWS_AS(invw::table1_row_occurs("nope", 2), std::invalid_argument);
}

TEST_CASE("direct dual-pair degrees confirm the printed rows except two") {
  const invw::DualPairEvaluator gu3(3, 2);
  for (unsigned n : {7u, 9u}) {
    std::vector<std::string> absent;
    for (const auto& c : invw::compare_table1(gu3, n))
      if (c.occurs && !c.found) absent.push_back(c.row);
    CHECK(absent == std::vector<std::string>{"q^3:(q+1)", "q(q^2-q+1):(t,q+1)"});
  }
}

TEST_CASE("reconciliation report covers both points and both k") {
  const auto entries = invw::reconcile(7, 2);
  std::size_t k2 = 0, k3 = 0, ident = 0, trans = 0;
  for (const auto& e : entries) {
    (e.k == 2 ? k2 : k3)++;
    (e.point == "identity" ? ident : trans)++;
    if (e.k == 3) CHECK(!e.match);
  }
  CHECK(k2 > 0);
  CHECK(k3 > 0);
  CHECK(ident == trans);
}
