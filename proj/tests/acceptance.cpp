#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "invw/character_table.hpp"
#include "invw/dixon.hpp"
#include "invw/dual_pair.hpp"
#include "invw/involution_decomposition.hpp"
#include "invw/lie_characters.hpp"
#include "invw/number_theory.hpp"
#include "invw/small_group.hpp"

namespace {

using Clock = std::chrono::steady_clock;

/// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> notes;
  std::ostringstream log;
  void expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

mpz_class pw(long base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), mpz_class(base).get_mpz_t(), e);
  return out;
}

invw::CharacterTable table_of(const std::string& name) {
  const auto g = invw::standard_group(name);
  return invw::dixon_character_table(g, invw::conjugacy_classes(g), name);
}

void alternating_widths(Check& c) {
  const std::vector<std::pair<std::string, unsigned>> expected{{"A5", 2}, {"A6", 2}, {"A7", 3}, {"A8", 3}, {"A9", 3}};
  for (const auto& [name, width] : expected) {
    const auto g = invw::standard_group(name);
    const auto w = invw::involution_width_oracle(g, invw::conjugacy_classes(g)).group_width;
    c.log << "    " << name << " width " << w << "\n";
    c.expect(w == width, name + ": width " + std::to_string(w) + ", expected " + std::to_string(width));
  }
}

void constructive_soundness(Check& c) {
  for (unsigned m = 5; m <= 9; ++m) {
    const auto g = invw::standard_group("A" + std::to_string(m));
    const auto& rule = static_cast<const invw::PermutationRule&>(g.rule());
    std::size_t bad = 0, over_two = 0;
    for (invw::SmallGroup::Index i = 0; i < g.order(); ++i) {
      const auto x = rule.decode(g.element(i));
      const auto f = invw::decompose(x);
      if (!f.verified() || f.factors.size() > 3) ++bad;
      const auto d = invw::cycle_decomposition(x);
      if ((d.counts[3] % 2 == 0 || d.fixed_points.size() >= 2) && f.factors.size() > 2) ++over_two;
    }
    c.log << "    A" << m << ": " << g.order() << " elements checked\n";
    c.expect(bad == 0, "A" + std::to_string(m) + ": " + std::to_string(bad) + " unsound factorizations");
    c.expect(over_two == 0, "A" + std::to_string(m) + ": " + std::to_string(over_two) + " used 3 factors where 2 suffice");
  }
}

void structure_constants(Check& c) {
  for (const std::string name : {"A5", "PSL(2,7)"}) {
    const auto g = invw::standard_group(name);
    const auto cd = invw::conjugacy_classes(g);
    const auto t = invw::dixon_character_table(g, cd, name);
    const std::size_t r = cd.classes.size();
    std::size_t compared = 0, mismatched = 0;
    for (std::size_t z = 0; z < r; ++z) {
      const auto target = cd.classes[z].representative;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
          ++compared;
          if (invw::eta(t, {a, b}, z) != invw::count_tuples(g, cd, {a, b}, target)) ++mismatched;
          for (std::size_t e = 0; e < r; ++e) {
            ++compared;
            if (invw::eta(t, {a, b, e}, z) != invw::count_tuples(g, cd, {a, b, e}, target)) ++mismatched;
          }
        }
    }
    c.log << "    " << name << ": " << compared << " structure constants compared\n";
    c.expect(mismatched == 0, name + ": " + std::to_string(mismatched) + " mismatches");
  }
}

void table_integrity(Check& c) {
  for (const std::string name : {"A5", "A6", "PSL(2,7)", "M11"}) {
    const auto t = table_of(name);
    const auto report = invw::validate_table(t);
    mpz_class sum = 0;
    for (const auto& d : t.degrees()) sum += d.get_num() * d.get_num();
    c.log << "    " << name << ": " << t.row_count() << " characters, sum of squared degrees " << sum << "\n";
    for (const auto& f : report.failures) c.expect(false, name + ": " + f.check + ": " + f.detail);
    c.expect(sum == t.order, name + ": sum of squared degrees differs from the order");
  }
}

void sporadic_cover(Check& c) {
  const auto t = table_of("M11");
  const auto start = Clock::now();
  const auto report = invw::involution_cover(t, 4);
  const double cover_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const std::string w = report.width ? std::to_string(*report.width) : "none";
  c.log << "    M11 class-level width " << w << " (cover " << cover_seconds << " s after the table)\n";
  c.expect(cover_seconds <= 60, "cover took " + std::to_string(cover_seconds) + " s beyond the table");
  c.expect(report.complete && report.width && *report.width == 3, "M11 width " + w + ", expected 3");
}

void hook_degrees(Check& c) {
  using invw::GroupVariant;
  const auto d61 = invw::unipotent_degree(invw::parse_partition("6,1"), 2, GroupVariant::unitary);
  const mpz_class formula = mpz_class(2) * (pw(2, 6) - 1) / 3;
  c.log << "    (6,1) at q=2: " << d61 << "\n";
  c.expect(d61 == 42 && formula == 42, "(6,1) degree " + d61.get_str());
  const auto d421 = invw::unipotent_degree(invw::parse_partition("4,2,1"), 2, GroupVariant::unitary);
  c.log << "    (4,2,1) at q=2: " << d421 << "\n";
  c.expect(d421 == 7568, "(4,2,1) degree " + d421.get_str());
  for (unsigned n = 2; n <= 9; ++n)
    for (long q : {2L, 3L, 4L, 5L}) {
      const invw::Partition st{std::vector<unsigned>(n, 1)};
      const auto d = invw::unipotent_degree(st, static_cast<std::uint64_t>(q), GroupVariant::unitary);
      c.expect(d == pw(q, n * (n - 1) / 2), "Steinberg degree at n=" + std::to_string(n) + ", q=" + std::to_string(q));
    }
}

void table1_sweep(Check& c) {
  using invw::GroupVariant;
  for (unsigned n : {7u, 9u, 11u})
    for (std::uint64_t q : {2u, 3u}) {
      for (const auto& row : invw::table1_row_ids()) {
        const mpq_class v = invw::table1_value(row, n, q);
        const bool ok = v.get_den() == 1 && v > 0;
        if (!ok) c.log << "    (" << n << "," << q << ") " << row << " = " << v << "\n";
        c.expect(ok, "row " + row + " at (" + std::to_string(n) + "," + std::to_string(q) + ") = " + v.get_str());
      }
      const invw::Partition lambda{{n - 3, 2, 1}};
      const mpz_class unip = invw::unipotent_degree(lambda, q, GroupVariant::unitary);
      const mpq_class row = invw::table1_value("q^2-q:(q+1)", n, q);
      c.expect(row == mpq_class(unip), "q^2-q:(q+1) differs from the (n-3,2,1) degree at (" + std::to_string(n) +
                                           "," + std::to_string(q) + ")");
    }
}

invw::FFMatrix random_matrix(const invw::FieldPtr& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f->size() - 1);
  std::vector<invw::Field::Element> e(n * n);
  for (auto& x : e) x = pick(rng);
  if (rng() % 4 == 0)
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] = i == j ? 1 : 0;
  return invw::FFMatrix(f, n, e);
}

void weil_identities(Check& c) {
  std::mt19937 rng(2718);
  for (auto [n, q] : std::vector<std::pair<unsigned, std::uint32_t>>{{3, 2}, {3, 3}, {4, 2}, {7, 2}}) {
    const auto ctx = invw::WeilContext::make(n, q);
    std::size_t failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = random_matrix(ctx.field, n, rng);
      invw::Cyclotomic sum;
      for (unsigned t = 0; t <= q; ++t) sum += invw::weil_chi(t, g, ctx);
      if (!(sum == invw::Cyclotomic(mpq_class(invw::weil_zeta(g, q))))) ++failures;
    }
    c.log << "    (" << n << "," << q << "): 100 matrices, " << failures << " failures\n";
    c.expect(failures == 0, "partition of unity fails at (" + std::to_string(n) + "," + std::to_string(q) + ")");
  }
  for (unsigned n = 3; n <= 8; ++n)
    for (std::uint32_t q : {2u, 3u}) {
      const auto ctx = invw::WeilContext::make(n, q);
      const auto chi0 = invw::weil_chi(0, invw::FFMatrix::identity(ctx.field, n), ctx);
      const mpz_class qn = pw(q, n);
      const mpq_class rest = mpq_class(mpz_class(q) * (qn - (n % 2 ? -1 : 1))) / (q + 1);
      c.expect(chi0 + invw::Cyclotomic(rest) == invw::Cyclotomic(mpq_class(qn)),
               "degree identity at (" + std::to_string(n) + "," + std::to_string(q) + ")");
    }
}

void dual_pair_degree(Check& c) {
  const auto elements = invw::enumerate_unitary_group(3, 2);
  c.log << "    GU3(2) enumeration: " << elements.size() << " elements\n";
  c.expect(elements.size() == 648, "GU3(2) has " + std::to_string(elements.size()) + " elements");
  const invw::DualPairEvaluator gu3(3, 2);
  const auto one = invw::FFMatrix::identity(gu3.field(), 7);
  bool found = false;
  for (auto row : gu3.rows_of_degree(2)) {
    const auto v = gu3.d_alpha(row, one);
    c.log << "    row " << row << " (degree 2): D_alpha(1) = " << v.to_string() << "\n";
    if (v == invw::Cyclotomic(7568)) found = true;
  }
  c.expect(found, "no degree-2 row of GU3(2) gives D_alpha(1) = 7568");
}

void ppd_correctness(Check& c) {
  c.expect(invw::ppd(2, 6).empty(), "ppd(2,6) is not empty");
  std::size_t returned = 0;
  for (std::uint64_t q : {2u, 3u, 4u, 5u})
    for (unsigned n = 2; n <= 14; ++n) {
      const auto primes = invw::ppd(q, n);
      for (auto r : primes) {
        ++returned;
        c.expect(invw::multiplicative_order(q % r, r) == n,
                 "ppd(" + std::to_string(q) + "," + std::to_string(n) + ") returned " + std::to_string(r));
      }
      // nothing missed: every prime factor of q^n - 1 with order n is listed
      for (const auto& [r, e] : invw::factorize(mpz_class(pw(static_cast<long>(q), n) - 1).get_ui())) {
        (void)e;
        const bool primitive = invw::multiplicative_order(q % r, r) == n;
        const bool listed = std::find(primes.begin(), primes.end(), r) != primes.end();
        c.expect(primitive == listed, "ppd(" + std::to_string(q) + "," + std::to_string(n) + ") misses or adds " +
                                          std::to_string(r));
      }
    }
  c.log << "    " << returned << " primes checked over q in {2,3,4,5}, n in 2..14\n";
}

void reconciliation(Check& c) {
  const auto entries = invw::reconcile(7, 2);
  std::size_t matches = 0;
  bool identity = false, transvection = false, k2 = false, k3 = false;
  for (const auto& e : entries) {
    c.log << "    k=" << e.k << " row=" << e.row << " alpha_degree=" << e.alpha_degree << " u=" << e.point
              << " (r=" << e.r << ", r1=" << e.r1 << ") direct=" << e.direct.to_string()
              << " closed=" << e.closed.get_str() << (e.match ? " match" : " mismatch") << "\n";
    if (e.match) ++matches;
    identity |= e.point == "identity";
    transvection |= e.point == "transvection";
    k2 |= e.k == 2;
    k3 |= e.k == 3;
  }
  c.log << "    " << matches << " matches, " << entries.size() - matches << " mismatches\n";
  c.expect(identity && transvection, "report lacks one of the two points");
  c.expect(k2 && k3, "report lacks one of the two closed forms");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "alternating widths A5..A9", 300, alternating_widths},
      {2, "constructive soundness over A5..A9", 600, constructive_soundness},
      {3, "eta equals tuple counts on A5 and PSL(2,7)", 120, structure_constants},
      {4, "Dixon table integrity for A5, A6, PSL(2,7), M11", 600, table_integrity},
      {5, "M11 class-level involution width 3", 60 + 600, sporadic_cover},
      {6, "hook-degree spot checks", 10, hook_degrees},
      {7, "degree table integrality sweep", 10, table1_sweep},
      {8, "Weil identities", 60, weil_identities},
      {9, "dual-pair degree 7568 from GU3(2)", 900, dual_pair_degree},
      {10, "ppd correctness sweep", 10, ppd_correctness},
      {11, "closed-form reconciliation report at (7,2)", 900, reconciliation},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    check.expect(seconds <= cr.budget_seconds, "took " + std::to_string(seconds) + " s, budget " +
                                                   std::to_string(cr.budget_seconds) + " s");
    const bool pass = check.notes.empty();
    if (!pass) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << cr.id << ": " << cr.title << " (" << timing
              << ")\n";
    std::cout << check.log.str();
    for (const auto& note : check.notes) std::cout << "       " << note << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
