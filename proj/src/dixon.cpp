#include "invw/dixon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "invw/number_theory.hpp"

namespace invw {

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;
using Poly = std::vector<std::uint64_t>;  // constant term first, no trailing zeros

// Arithmetic modulo a prime below 2^32.
struct ModP {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t inv(std::uint64_t a) const { return inv_mod(a, p); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return pow_mod(a, e, p); }
};

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const ModP& m, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = m.add(out[i + j], m.mul(a[i], b[j]));
  trim(out);
  return out;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(const ModP& m, Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  const std::uint64_t lead_inv = m.inv(b.back());
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- > b.size() - 1;) {
    const std::size_t shift = i - (b.size() - 1);
    const std::uint64_t c = m.mul(a[i], lead_inv);
    q[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = m.sub(a[shift + j], m.mul(c, b[j]));
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_gcd(const ModP& m, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(m, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = m.inv(a.back());
    for (auto& c : a) c = m.mul(c, inv);
  }
  return a;
}

// base^e mod f.
Poly poly_powmod(const ModP& m, Poly base, std::uint64_t e, const Poly& f) {
  Poly result{1};
  base = poly_divmod(m, base, f).second;
  while (e) {
    if (e & 1) result = poly_divmod(m, poly_mul(m, result, base), f).second;
    base = poly_divmod(m, poly_mul(m, base, base), f).second;
    e >>= 1;
  }
  return result;
}

// Roots of a squarefree product of distinct linear factors (equal-degree
// splitting with shifts x + a, a = 1, 2, ...).
void split_linear(const ModP& m, const Poly& f, std::vector<std::uint64_t>& roots) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    roots.push_back(m.mul(m.sub(0, f[0]), m.inv(f[1])));
    return;
  }
  for (std::uint64_t a = 1; a < m.p; ++a) {
    Poly h = poly_powmod(m, Poly{a, 1}, (m.p - 1) / 2, f);
    if (h.empty()) h = {0};
    h[0] = m.sub(h[0], 1);
    trim(h);
    const Poly g = poly_gcd(m, f, h);
    if (g.size() > 1 && g.size() < f.size()) {
      split_linear(m, g, roots);
      split_linear(m, poly_divmod(m, f, g).first, roots);
      return;
    }
  }
  throw std::runtime_error("polynomial splitting failed");
}

// Distinct roots in GF(p) of f.
std::vector<std::uint64_t> distinct_roots(const ModP& m, Poly f) {
  trim(f);
  std::vector<std::uint64_t> roots;
  if (f.size() <= 1) return roots;
  if (m.p == 2) {
    for (std::uint64_t x = 0; x < 2; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = m.add(m.mul(v, x), f[i]);
      if (v == 0) roots.push_back(x);
    }
    return roots;
  }
  Poly xp = poly_powmod(m, Poly{0, 1}, m.p, f);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = m.sub(xp[1], 1);
  trim(xp);
  const Poly g = poly_gcd(m, f, xp);
  if (!g.empty() && g[0] == 0) {
    roots.push_back(0);
    split_linear(m, poly_divmod(m, g, Poly{0, 1}).first, roots);
  } else {
    split_linear(m, g, roots);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier (needs p > d).
Poly charpoly(const ModP& m, const Mat& a) {
  const std::size_t d = a.size();
  Poly c(d + 1, 0);
  c[d] = 1;
  Mat mk(d, Vec(d, 0));
  for (std::size_t k = 1; k <= d; ++k) {
    // M_k = A M_(k-1) + c_(d-k+1) I
    Mat next(d, Vec(d, 0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) next[i][j] = m.add(next[i][j], m.mul(a[i][l], mk[l][j]));
      }
    for (std::size_t i = 0; i < d; ++i) next[i][i] = m.add(next[i][i], c[d - k + 1]);
    mk = std::move(next);
    std::uint64_t trace = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l) trace = m.add(trace, m.mul(a[i][l], mk[l][i]));
    c[d - k] = m.mul(m.sub(0, trace), m.inv(k % m.p));
  }
  return c;
}

// Row-reduced basis (rows) with pivot columns.
struct Subspace {
  Mat basis;
  std::vector<std::size_t> pivots;
};

Subspace row_reduce(const ModP& m, Mat rows) {
  Subspace s;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const std::uint64_t inv = m.inv(rows[r][col]);
    for (auto& x : rows[r]) x = m.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const std::uint64_t f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.sub(rows[i][j], m.mul(f, rows[r][j]));
    }
    s.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  s.basis = std::move(rows);
  return s;
}

// Null space basis of a square matrix.
Mat null_space(const ModP& m, Mat a) {
  const std::size_t d = a.size();
  Subspace s = row_reduce(m, std::move(a));
  std::vector<bool> is_pivot(d, false);
  for (auto c : s.pivots) is_pivot[c] = true;
  Mat out;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Vec v(d, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < s.pivots.size(); ++i) v[s.pivots[i]] = m.sub(0, s.basis[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Splits an invariant subspace into eigenspaces of `mat`; returns the pieces
// (a single piece when `mat` acts as a scalar on it).
std::vector<Subspace> split(const ModP& m, const Mat& mat, const Subspace& s) {
  const std::size_t d = s.basis.size();
  const std::size_t n = mat.size();
  // restricted action in pivot coordinates: A[t][i] = (mat b_i)[pivot_t]
  Mat images(d, Vec(n, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t v = 0;
      for (std::size_t l = 0; l < n; ++l)
        if (mat[k][l] && s.basis[i][l]) v = m.add(v, m.mul(mat[k][l], s.basis[i][l]));
      images[i][k] = v;
    }
  Mat a(d, Vec(d, 0));
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t i = 0; i < d; ++i) a[t][i] = images[i][s.pivots[t]];
  const auto roots = distinct_roots(m, charpoly(m, a));
  if (roots.size() <= 1) return {s};
  std::vector<Subspace> pieces;
  std::size_t total = 0;
  for (auto lambda : roots) {
    Mat shifted = a;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = m.sub(shifted[i][i], lambda);
    Mat rows;
    for (const auto& c : null_space(m, shifted)) {
      Vec v(n, 0);
      for (std::size_t i = 0; i < d; ++i)
        if (c[i])
          for (std::size_t l = 0; l < n; ++l) v[l] = m.add(v[l], m.mul(c[i], s.basis[i][l]));
      rows.push_back(std::move(v));
    }
    total += rows.size();
    pieces.push_back(row_reduce(m, std::move(rows)));
  }
  if (total != d) throw std::runtime_error("class matrix is not diagonalisable modulo p");
  return pieces;
}

struct Attempt {
  bool ok = false;
  CharacterTable table;
};

Attempt try_prime(const SmallGroup& g, const ClassData& cd, const std::vector<Mat>& class_matrices,
                  const std::vector<std::vector<std::size_t>>& power_classes, std::uint64_t exponent,
                  std::uint64_t p, const std::string& name) {
  const ModP m{p};
  const std::size_t r = cd.classes.size();
  const std::uint64_t order = g.order();

  std::vector<Subspace> done;
  std::vector<Subspace> pending{row_reduce(m, [&] {
    Mat id(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    return id;
  }())};
  for (std::size_t j = 1; j < r && !pending.empty(); ++j) {
    std::vector<Subspace> next;
    for (const auto& s : pending) {
      for (auto& piece : split(m, class_matrices[j], s)) {
        if (piece.basis.size() == 1)
          done.push_back(std::move(piece));
        else
          next.push_back(std::move(piece));
      }
    }
    pending = std::move(next);
  }
  if (r == 1) done = std::move(pending);
  if (!pending.empty() || done.size() != r) return {};

  const std::uint64_t root = pow_mod(primitive_root(p), (p - 1) / exponent, p);
  CharacterTable t;
  t.group_name = name;
  t.order = mpz_class(std::to_string(order));
  for (const auto& c : cd.classes)
    t.classes.push_back({c.name, mpz_class(std::to_string(c.size())), c.element_order, c.inverse_class});

  for (const auto& s : done) {
    Vec w = s.basis[0];
    if (w[0] == 0) return {};
    const std::uint64_t scale = m.inv(w[0]);
    for (auto& x : w) x = m.mul(x, scale);
    // chi(1)^2 = |G| / sum_l w_l w_l* / h_l
    std::uint64_t sum = 0;
    for (std::size_t l = 0; l < r; ++l)
      sum = m.add(sum, m.mul(m.mul(w[l], w[cd.classes[l].inverse_class]), m.inv(cd.classes[l].size() % p)));
    if (sum == 0) return {};
    const std::uint64_t square = m.mul(order % p, m.inv(sum));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= order; ++d)
      if (order % d == 0 && d * d % p == square) {
        degree = d;
        break;
      }
    if (degree == 0) return {};
    Vec theta(r);
    for (std::size_t l = 0; l < r; ++l)
      theta[l] = m.mul(m.mul(w[l], degree % p), m.inv(cd.classes[l].size() % p));

    std::vector<Cyclotomic> row;
    for (std::size_t l = 0; l < r; ++l) {
      const std::uint64_t o = cd.classes[l].element_order;
      const std::uint64_t z = pow_mod(root, exponent / o, p);
      const std::uint64_t inv_o = m.inv(o % p);
      std::vector<std::pair<std::int64_t, mpq_class>> terms;
      std::uint64_t multiplicity_sum = 0;
      for (std::uint64_t k = 0; k < o; ++k) {
        std::uint64_t acc = 0;
        const std::uint64_t zk_inv = m.inv(pow_mod(z, k, p));
        std::uint64_t factor = 1;
        for (std::uint64_t i = 0; i < o; ++i) {
          acc = m.add(acc, m.mul(theta[power_classes[l][i]], factor));
          factor = m.mul(factor, zk_inv);
        }
        const std::uint64_t mk = m.mul(acc, inv_o);
        if (mk > degree) return {};
        multiplicity_sum += mk;
        if (mk) terms.emplace_back(static_cast<std::int64_t>(k), mpq_class(static_cast<long>(mk)));
      }
      if (multiplicity_sum != degree) return {};
      row.push_back(Cyclotomic::make(o, terms).minimized());
    }
    t.values.push_back(std::move(row));
  }
  t = canonical_form(t);
  if (!validate_table(t).ok()) return {};
  return {true, std::move(t)};
}

}  // namespace

CharacterTable dixon_character_table(const SmallGroup& g, const ClassData& cd, const std::string& name,
                                     DixonInfo* info) {
  const std::size_t r = cd.classes.size();
  std::uint64_t exponent = 1;
  std::uint64_t max_class = 1;
  for (const auto& c : cd.classes) {
    exponent = std::lcm(exponent, c.element_order);
    max_class = std::max<std::uint64_t>(max_class, c.size());
  }

  // class matrices: (M_j)[k][l] = #{x in C_j : x^-1 z_l in C_k}
  std::vector<Mat> counts(r, Mat(r, Vec(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (auto x : cd.classes[j].members) {
      const auto xi = g.inverse(x);
      for (std::size_t l = 0; l < r; ++l) ++counts[j][cd.class_of[g.multiply(xi, cd.classes[l].representative)]][l];
    }

  // power_classes[l][i] = class of z_l^i
  std::vector<std::vector<std::size_t>> power_classes(r);
  for (std::size_t l = 0; l < r; ++l) {
    const auto z = cd.classes[l].representative;
    SmallGroup::Index x = g.identity_index();
    for (std::uint64_t i = 0; i < cd.classes[l].element_order; ++i) {
      power_classes[l].push_back(cd.class_of[x]);
      x = g.multiply(x, z);
    }
  }

  // p > 2 sqrt(|G|) max|C|  <=>  p^2 > 4 |G| max|C|^2
  const mpz_class bound_sq = mpz_class(4) * mpz_class(std::to_string(g.order())) * max_class * max_class;
  const mpz_class bound = sqrt(bound_sq);
  std::uint64_t p = next_prime_congruent_one(exponent, bound.get_ui());
  for (unsigned attempt = 1; attempt <= 20; ++attempt) {
    if (p >= (1ull << 32)) throw std::runtime_error("Dixon prime exceeds 32 bits");
    std::vector<Mat> reduced = counts;
    for (auto& mat : reduced)
      for (auto& row : mat)
        for (auto& x : row) x %= p;
    Attempt a = try_prime(g, cd, reduced, power_classes, exponent, p, name);
    if (a.ok) {
      if (info) *info = {p, exponent, attempt};
      return std::move(a.table);
    }
    p = next_prime_congruent_one(exponent, p);
  }
  throw std::runtime_error("Dixon lifting failed for 20 consecutive primes");
}

}  // namespace invw
