#include "invw/dual_pair.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "invw/dixon.hpp"
#include "invw/lie_characters.hpp"

namespace invw {

namespace {

SmallGroup unitary_group(unsigned k, std::uint32_t q) {
  if (k < 2 || k > 3) throw std::invalid_argument("dual pair: k must be 2 or 3");
  if (q < 2 || q > 3) throw std::invalid_argument("dual pair: q must be 2 or 3");
  std::vector<Word> words;
  for (const auto& m : enumerate_unitary_group(k, q)) words.push_back(MatrixRule::encode(m));
  return SmallGroup::from_elements(std::make_shared<MatrixRule>(unitary_field(q), k), std::move(words));
}

}  // namespace

DualPairEvaluator::DualPairEvaluator(unsigned k, std::uint32_t q)
    : k_(k), q_(q), field_(unitary_field(q)), group_(unitary_group(k, q)) {
  classes_ = conjugacy_classes(group_);
  table_ = dixon_character_table(group_, classes_, "GU" + std::to_string(k) + "(" + std::to_string(q) + ")");
  const auto& rule = static_cast<const MatrixRule&>(group_.rule());
  matrices_.reserve(group_.order());
  for (SmallGroup::Index i = 0; i < group_.order(); ++i) matrices_.push_back(rule.decode(group_.element(i)));
}

std::vector<std::size_t> DualPairEvaluator::rows_of_degree(const mpz_class& d) const {
  std::vector<std::size_t> rows;
  const auto degrees = table_.degrees();
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == mpq_class(d)) rows.push_back(i);
  return rows;
}

std::vector<mpz_class> DualPairEvaluator::class_sums(const FFMatrix& g) const {
  if (!(g.field() == *field_)) throw std::invalid_argument("dual pair: matrix must be over " + field_->name());
  std::vector<mpz_class> sums(table_.class_count(), mpz_class(0));
  for (const auto& cls : classes_.classes) {
    const std::size_t column = table_.find_class(cls.name);
    for (auto idx : cls.members) sums[column] += weil_zeta(kronecker(matrices_[idx], g), q_);
  }
  return sums;
}

Cyclotomic DualPairEvaluator::average(std::size_t row, const std::vector<mpz_class>& sums) const {
  if (row >= table_.row_count()) throw std::out_of_range("dual pair: row index out of range");
  Cyclotomic total;
  for (std::size_t c = 0; c < sums.size(); ++c)
    if (sums[c] != 0) total += table_.values[row][c].conjugate() * Cyclotomic(mpq_class(sums[c]));
  return (total / mpq_class(table_.order)).minimized();
}

Cyclotomic DualPairEvaluator::d_alpha(std::size_t row, const FFMatrix& g) const {
  return average(row, class_sums(g));
}

std::vector<Cyclotomic> DualPairEvaluator::d_alpha_all(const FFMatrix& g) const {
  const auto sums = class_sums(g);
  std::vector<Cyclotomic> out;
  for (std::size_t row = 0; row < table_.row_count(); ++row) out.push_back(average(row, sums));
  return out;
}

FFMatrix unitary_transvection(unsigned n, std::uint32_t q) {
  if (n < 2) throw std::invalid_argument("transvection: n must be at least 2");
  FieldPtr f = unitary_field(q);
  const Field& F = *f;
  Field::Element b = F.one();
  Field::Element c = F.one();
  if (F.characteristic() != 2) {
    b = F.pow(F.generator(), (q - 1) / 2);
    c = F.pow(F.generator(), (q + 1) / 2);
  }
  std::vector<Field::Element> v(n, F.zero());
  v[0] = F.one();
  v[1] = b;
  FFMatrix t = FFMatrix::identity(f, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      t.at(i, j) = F.add(t(i, j), F.mul(c, F.mul(v[i], frobenius(F, v[j], q))));
  return t;
}

std::vector<ReconciliationEntry> reconcile(unsigned n, std::uint32_t q) {
  struct Point {
    std::string name;
    FFMatrix matrix;
    unsigned r;
    unsigned r1;
  };
  const std::vector<Point> points = {
      {"identity", FFMatrix::identity(unitary_field(q), n), n, n},
      {"transvection", unitary_transvection(n, q), n - 1, n - 2},
  };
  std::vector<ReconciliationEntry> out;
  for (unsigned k : {3u, 2u}) {
    DualPairEvaluator eval(k, q);
    const mpz_class qq(static_cast<unsigned long>(q));
    const mpz_class degree = k == 3 ? mpz_class(qq * qq - qq) : mpz_class(qq - 1);
    const auto rows = eval.rows_of_degree(degree);
    for (const auto& pt : points) {
      const auto values = eval.d_alpha_all(pt.matrix);
      const mpq_class closed = k == 3 ? d3_unipotent_closed(q, pt.r, pt.r1) : d2_unipotent_closed(q, pt.r, pt.r1);
      for (std::size_t row : rows) {
        ReconciliationEntry e;
        e.k = k;
        e.row = row;
        e.alpha_degree = degree;
        e.point = pt.name;
        e.r = pt.r;
        e.r1 = pt.r1;
        e.direct = values[row];
        e.closed = closed;
        e.match = e.direct == Cyclotomic(closed);
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

std::vector<Table1Comparison> compare_table1(const DualPairEvaluator& gu3, unsigned n) {
  if (gu3.k() != 3) throw std::invalid_argument("table comparison needs GU_3(q)");
  const auto direct = gu3.d_alpha_all(FFMatrix::identity(gu3.field(), n));
  std::vector<Table1Comparison> out;
  for (const auto& id : table1_row_ids()) {
    Table1Comparison c;
    c.row = id;
    c.printed = table1_value(id, n, gu3.q());
    c.occurs = table1_row_occurs(id, gu3.q());
    c.found = std::find(direct.begin(), direct.end(), Cyclotomic(c.printed)) != direct.end();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace invw
