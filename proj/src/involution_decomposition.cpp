#include "invw/involution_decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace invw {

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

// Builds the product of transpositions given in template coordinates
// (1-based positions along `cycle`).
Permutation involution_on(const Cycle& cycle, const Pairs& pairs, std::size_t degree) {
  std::vector<std::vector<Permutation::Point>> cycles;
  cycles.reserve(pairs.size());
  for (auto [a, b] : pairs) cycles.push_back({cycle.at(a - 1), cycle.at(b - 1)});
  return Permutation::from_cycles(degree, cycles);
}

// (i, n+1-i) for i = 1 .. while i < n+1-i
Pairs reversal_pairs(std::size_t n) {
  Pairs pairs;
  for (std::size_t i = 1; 2 * i < n + 1; ++i) pairs.emplace_back(i, n + 1 - i);
  return pairs;
}

// (i, n+2-i) for i = 2 .. while i < n+2-i
Pairs shifted_reversal_pairs(std::size_t n) {
  Pairs pairs;
  for (std::size_t i = 2; 2 * i < n + 2; ++i) pairs.emplace_back(i, n + 2 - i);
  return pairs;
}

// (i, n-i) for i = 1 .. (n-2)/2
Pairs short_reversal_pairs(std::size_t n) {
  Pairs pairs;
  for (std::size_t i = 1; 2 * i < n; ++i) pairs.emplace_back(i, n - i);
  return pairs;
}

void check_cycle(const Cycle& cycle, std::size_t degree) {
  std::vector<bool> seen(degree + 1, false);
  for (auto p : cycle) {
    if (p < 1 || p > degree) throw std::invalid_argument("cycle point out of range");
    if (seen[p]) throw std::invalid_argument("cycle repeats point " + std::to_string(p));
    seen[p] = true;
  }
}

// First and second factor of c as a product of two involutions of order <= 2,
// arranged so the first is odd and the second even (y-pair for 0 mod 4,
// z-pair for 2 mod 4; the length-2 case gives ((1 2), 1)).
std::pair<Permutation, Permutation> even_cycle_factors(const Cycle& c, std::size_t degree) {
  const std::size_t n = c.size();
  if (n % 4 == 0) {
    return {involution_on(c, short_reversal_pairs(n), degree),
            involution_on(c, reversal_pairs(n), degree)};
  }
  if (n == 2) return {involution_on(c, {{1, 2}}, degree), Permutation(degree)};
  return {involution_on(c, reversal_pairs(n), degree),
          involution_on(c, shifted_reversal_pairs(n), degree)};
}

struct StronglyRealPart {
  Permutation first;
  Permutation second;
};

// Products of the first and second factors over a set of cycles whose
// 3 mod 4 members come in pairs; all pieces have disjoint supports.
StronglyRealPart strongly_real_part(const std::vector<Cycle>& ones, const std::vector<Cycle>& evens,
                                    const std::vector<Cycle>& threes, std::size_t degree) {
  StronglyRealPart part{Permutation(degree), Permutation(degree)};
  const auto absorb = [&](const std::pair<Permutation, Permutation>& f) {
    part.first = compose(part.first, f.first);
    part.second = compose(part.second, f.second);
  };
  for (const auto& c : ones) absorb(pair_for_odd_cycle(c, degree));
  for (std::size_t i = 0; i + 1 < evens.size(); i += 2)
    absorb(pair_for_even_pair(evens[i], evens[i + 1], degree));
  for (std::size_t i = 0; i + 1 < threes.size(); i += 2) {
    const auto a = pair_for_odd_cycle(threes[i], degree);
    const auto b = pair_for_odd_cycle(threes[i + 1], degree);
    absorb({compose(a.first, b.first), compose(a.second, b.second)});
  }
  return part;
}

// First transposition of the canonical cycle form of an involution.
std::pair<Permutation::Point, Permutation::Point> first_transposition(const Permutation& t) {
  const auto cd = cycle_decomposition(t);
  if (cd.cycles.empty()) throw std::logic_error("identity has no transpositions");
  return {cd.cycles.front()[0], cd.cycles.front()[1]};
}

bool is_even_involution(const Permutation& p) {
  return !p.is_identity() && compose(p, p).is_identity() && is_even(p);
}

}  // namespace

bool InvolutionFactorization::verified() const {
  if (factors.size() > 3) return false;
  for (const auto& f : factors)
    if (f.degree() != degree || !is_even_involution(f)) return false;
  return compose_all(factors, degree) == target;
}

std::pair<Permutation, Permutation> pair_for_odd_cycle(const Cycle& cycle, std::size_t degree) {
  const std::size_t n = cycle.size();
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("pair_for_odd_cycle needs an odd cycle of length >= 3, got " +
                                std::to_string(n));
  check_cycle(cycle, degree);
  return {involution_on(cycle, reversal_pairs(n), degree),
          involution_on(cycle, shifted_reversal_pairs(n), degree)};
}

std::pair<Permutation, Permutation> pair_for_even_pair(const Cycle& c, const Cycle& c_prime,
                                                       std::size_t degree) {
  if (c.size() % 2 != 0 || c_prime.size() % 2 != 0 || c.size() < 2 || c_prime.size() < 2)
    throw std::invalid_argument("pair_for_even_pair needs two cycles of even length");
  Cycle joined = c;
  joined.insert(joined.end(), c_prime.begin(), c_prime.end());
  check_cycle(joined, degree);  // rejects overlapping supports
  if (c.size() == 2 && c_prime.size() == 2)
    return {Permutation::from_cycles(degree, {{c[0], c_prime[0]}, {c[1], c_prime[1]}}),
            Permutation::from_cycles(degree, {{c[0], c_prime[1]}, {c[1], c_prime[0]}})};
  const auto a = even_cycle_factors(c, degree);
  const auto b = even_cycle_factors(c_prime, degree);
  return {compose(a.first, b.first), compose(a.second, b.second)};
}

std::array<Permutation, 3> triple_for_3mod4(const Cycle& cycle, std::size_t degree) {
  const std::size_t n = cycle.size();
  if (n % 4 != 3 || n < 7)
    throw std::invalid_argument("triple_for_3mod4 needs a cycle of length 3 mod 4 and >= 7, got " +
                                std::to_string(n));
  check_cycle(cycle, degree);
  const auto [x1, x2] = pair_for_odd_cycle(cycle, degree);
  const auto mid = involution_on(cycle, {{(n - 1) / 2, (n + 3) / 2}}, degree);
  const auto end = involution_on(cycle, {{2, n}}, degree);
  return {compose(x1, mid), compose(mid, end), compose(end, x2)};
}

std::pair<Permutation, Permutation> pair_with_fixed_points(const Cycle& cycle,
                                                           Permutation::Point f1,
                                                           Permutation::Point f2,
                                                           std::size_t degree) {
  if (cycle.size() % 4 != 3)
    throw std::invalid_argument("pair_with_fixed_points needs a cycle of length 3 mod 4");
  if (f1 == f2) throw std::invalid_argument("fixed points must be distinct");
  Cycle joined = cycle;
  joined.push_back(f1);
  joined.push_back(f2);
  check_cycle(joined, degree);  // fixed points outside the cycle
  const auto [x1, x2] = pair_for_odd_cycle(cycle, degree);
  const auto fixer = Permutation::transposition(degree, f1, f2);
  return {compose(x1, fixer), compose(fixer, x2)};
}

InvolutionFactorization decompose(const Permutation& g) {
  const std::size_t m = g.degree();
  if (m < 5) throw std::invalid_argument("decompose needs degree m >= 5, got " + std::to_string(m));
  if (!is_even(g)) throw std::invalid_argument("odd permutation: " + g.to_string());

  InvolutionFactorization result{m, {}, g};
  if (g.is_identity()) return result;
  if (is_even_involution(g)) {
    result.factors.push_back(g);
    return result;
  }

  const auto cd = cycle_decomposition(g);
  std::vector<Cycle> ones, evens, threes;
  for (const auto& c : cd.cycles) {
    if (c.size() % 2 == 0)
      evens.push_back(c);
    else if (c.size() % 4 == 1)
      ones.push_back(c);
    else
      threes.push_back(c);
  }
  std::stable_sort(threes.begin(), threes.end(),
                   [](const Cycle& a, const Cycle& b) { return a.size() < b.size(); });

  const auto emit = [&](std::vector<Permutation> factors) {
    for (auto& f : factors)
      if (!f.is_identity()) result.factors.push_back(std::move(f));
    return result;
  };

  if (threes.size() % 2 == 0) {
    auto part = strongly_real_part(ones, evens, threes, m);
    return emit({std::move(part.first), std::move(part.second)});
  }

  const Cycle last = threes.back();
  threes.pop_back();
  const auto rest = strongly_real_part(ones, evens, threes, m);
  const bool rest_trivial = rest.first.is_identity() && rest.second.is_identity();
  const auto& fixed = cd.fixed_points;

  if (last.size() == 3 && rest_trivial) {
    // g is a single 3-cycle: ((1 2)(f1 f2)) * ((f1 f2)(1 3))
    const auto fixer = Permutation::transposition(m, fixed[0], fixed[1]);
    return emit({compose(involution_on(last, {{1, 2}}, m), fixer),
                 compose(fixer, involution_on(last, {{1, 3}}, m))});
  }
  if (fixed.size() >= 2) {
    const auto [t1, t2] = pair_with_fixed_points(last, fixed[0], fixed[1], m);
    return emit({compose(rest.first, t1), compose(rest.second, t2)});
  }
  if (last.size() > 3) {
    const auto s = triple_for_3mod4(last, m);
    return emit({compose(rest.first, s[0]), compose(rest.second, s[1]), s[2]});
  }

  // |c_k| = 3 and g c_k^{-1} != 1: borrow a transposition (i j) from a
  // nontrivial factor of the strongly real part; it commutes with c_k.
  const auto ab = involution_on(last, {{1, 2}}, m);
  const auto ac = involution_on(last, {{1, 3}}, m);
  if (!rest.second.is_identity()) {
    const auto [i, j] = first_transposition(rest.second);
    const auto ij = Permutation::transposition(m, i, j);
    return emit({rest.first, compose(compose(rest.second, ij), ab), compose(ij, ac)});
  }
  const auto [i, j] = first_transposition(rest.first);
  const auto ij = Permutation::transposition(m, i, j);
  return emit({compose(compose(rest.first, ij), ab), compose(ij, ac)});
}

}  // namespace invw
