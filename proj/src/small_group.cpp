#include "invw/small_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace invw {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : w) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Word PermutationRule::multiply(const Word& a, const Word& b) const {
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Word PermutationRule::identity() const {
  Word w(degree_);
  std::iota(w.begin(), w.end(), std::uint16_t{0});
  return w;
}

std::string PermutationRule::format(const Word& w) const { return decode(w).to_string(); }

Word PermutationRule::encode(const Permutation& p) { return p.raw_images(); }

Permutation PermutationRule::decode(const Word& w) const {
  std::vector<Permutation::Point> images(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) images[i] = std::size_t{w[i]} + 1;
  return Permutation::from_images(images);
}

Word MatrixRule::multiply(const Word& a, const Word& b) const {
  const Field& f = *field_;
  Word out(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t l = 0; l < n_; ++l) {
      const Field::Element x = a[i * n_ + l];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        out[i * n_ + j] = static_cast<std::uint16_t>(f.add(out[i * n_ + j], f.mul(x, b[l * n_ + j])));
    }
  return out;
}

Word MatrixRule::identity() const {
  Word w(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) w[i * n_ + i] = 1;
  return w;
}

std::string MatrixRule::format(const Word& w) const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ' ';
      out += field_->format(w[i * n_ + j]);
    }
  }
  return out + "]";
}

Word MatrixRule::encode(const FFMatrix& m) {
  if (m.field().size() > 0xFFFF) throw std::invalid_argument("field too large for word encoding");
  return Word(m.entries().begin(), m.entries().end());
}

FFMatrix MatrixRule::decode(const Word& w) const {
  return FFMatrix(field_, n_, std::vector<Field::Element>(w.begin(), w.end()));
}

SmallGroup::SmallGroup(std::shared_ptr<const ElementRule> rule, std::vector<Word> elements)
    : rule_(std::move(rule)), elements_(std::move(elements)) {}

SmallGroup SmallGroup::enumerate(std::shared_ptr<const ElementRule> rule, const std::vector<Word>& generators,
                                 std::size_t cap) {
  SmallGroup g(rule, {rule->identity()});
  g.lookup_.emplace(g.elements_[0], 0);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const Word& s : generators) {
      Word product = rule->multiply(g.elements_[i], s);
      if (g.lookup_.count(product)) continue;
      if (g.elements_.size() >= cap)
        throw std::runtime_error("group order exceeds cap " + std::to_string(cap));
      g.lookup_.emplace(product, static_cast<Index>(g.elements_.size()));
      g.elements_.push_back(std::move(product));
    }
  }
  for (const Word& s : generators) g.generators_.push_back(g.lookup_.at(s));
  g.finish();
  return g;
}

SmallGroup SmallGroup::from_permutations(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  const std::size_t degree = generators.front().degree();
  std::vector<Word> words;
  for (const auto& p : generators) {
    if (p.degree() != degree) throw std::invalid_argument("generators have different degrees");
    words.push_back(PermutationRule::encode(p));
  }
  return enumerate(std::make_shared<PermutationRule>(degree), words, cap);
}

SmallGroup SmallGroup::from_matrices(const std::vector<FFMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  const auto& first = generators.front();
  std::vector<Word> words;
  for (const auto& m : generators) {
    if (m.dim() != first.dim() || !(m.field() == first.field()))
      throw std::invalid_argument("generators have different shapes or fields");
    if (m.rank() != m.dim()) throw std::invalid_argument("generator is singular");
    words.push_back(MatrixRule::encode(m));
  }
  return enumerate(std::make_shared<MatrixRule>(first.field_ptr(), first.dim()), words, cap);
}

SmallGroup SmallGroup::from_elements(std::shared_ptr<const ElementRule> rule, std::vector<Word> elements) {
  const Word id = rule->identity();
  auto it = std::find(elements.begin(), elements.end(), id);
  if (it == elements.end()) throw std::invalid_argument("element list lacks the identity");
  std::rotate(elements.begin(), it, it + 1);
  SmallGroup g(std::move(rule), std::move(elements));
  for (std::size_t i = 0; i < g.elements_.size(); ++i)
    if (!g.lookup_.emplace(g.elements_[i], static_cast<Index>(i)).second)
      throw std::invalid_argument("element list has duplicates");
  g.finish();
  return g;
}

void SmallGroup::finish() {
  const std::size_t n = elements_.size();
  if (n <= 1500) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto it = lookup_.find(rule_->multiply(elements_[a], elements_[b]));
        if (it == lookup_.end()) throw std::invalid_argument("element list is not closed");
        table_[a * n + b] = it->second;
      }
  }
  // Inverses along cyclic subgroups.
  constexpr Index unset = ~Index{0};
  inverses_.assign(n, unset);
  for (Index a = 0; a < n; ++a) {
    if (inverses_[a] != unset) continue;
    std::vector<Index> powers{0};
    for (Index x = a; x != 0; x = multiply(x, a)) powers.push_back(x);
    const std::size_t order = powers.size();
    for (std::size_t j = 0; j < order; ++j) inverses_[powers[j]] = powers[(order - j) % order];
  }
  for (Index a = 1; a < n; ++a)
    if (inverses_[a] == a) involutions_.push_back(a);
}

std::optional<SmallGroup::Index> SmallGroup::index_of(const Word& w) const {
  auto it = lookup_.find(w);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

SmallGroup::Index SmallGroup::multiply(Index a, Index b) const {
  if (!table_.empty()) return table_[std::size_t{a} * elements_.size() + b];
  auto it = lookup_.find(rule_->multiply(elements_[a], elements_[b]));
  if (it == lookup_.end()) throw std::logic_error("product left the group");
  return it->second;
}

SmallGroup::Index SmallGroup::power(Index a, std::int64_t e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  Index result = 0;
  while (e) {
    if (e & 1) result = multiply(result, a);
    a = multiply(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t SmallGroup::element_order(Index a) const {
  std::uint64_t order = 1;
  for (Index x = a; x != 0; x = multiply(x, a)) ++order;
  return a == 0 ? 1 : order;
}

std::uint64_t SmallGroup::exponent() const {
  std::uint64_t e = 1;
  std::vector<bool> seen(order(), false);
  for (Index a = 0; a < order(); ++a) {
    if (seen[a]) continue;
    std::uint64_t k = 1;
    for (Index x = a; x != 0; x = multiply(x, a)) {
      seen[x] = true;
      ++k;
    }
    if (a != 0) e = std::lcm(e, k);
  }
  return e;
}

std::string class_letter(std::size_t index) {
  std::string s;
  ++index;
  while (index > 0) {
    --index;
    s.insert(s.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return s;
}

std::size_t ClassData::find(const std::string& name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == name) return i;
  std::string valid;
  for (const auto& c : classes) valid += (valid.empty() ? "" : " ") + c.name;
  throw std::invalid_argument("unknown class '" + name + "'; valid names: " + valid);
}

ClassData conjugacy_classes(const SmallGroup& g) {
  constexpr std::size_t unset = ~std::size_t{0};
  const std::size_t n = g.order();
  std::vector<std::size_t> orbit_of(n, unset);
  std::vector<std::vector<SmallGroup::Index>> orbits;
  std::vector<SmallGroup::Index> conjugators = g.generator_indices();
  if (conjugators.empty()) {
    conjugators.resize(n);
    std::iota(conjugators.begin(), conjugators.end(), SmallGroup::Index{0});
  }
  for (SmallGroup::Index start = 0; start < n; ++start) {
    if (orbit_of[start] != unset) continue;
    const std::size_t id = orbits.size();
    std::vector<SmallGroup::Index> orbit{start};
    orbit_of[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const auto x = orbit[head];
      for (auto s : conjugators) {
        const auto y = g.multiply(g.multiply(g.inverse(s), x), s);
        if (orbit_of[y] == unset) {
          orbit_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<std::uint64_t> orders(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) orders[i] = g.element_order(orbits[i].front());
  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    if (orbits[a].size() != orbits[b].size()) return orbits[a].size() > orbits[b].size();
    return orbits[a].front() < orbits[b].front();
  });
  std::vector<std::size_t> rank(orbits.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  ClassData cd;
  cd.class_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) cd.class_of[x] = rank[orbit_of[x]];
  std::size_t letter = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const std::size_t o = perm[i];
    if (i > 0 && orders[perm[i - 1]] != orders[o]) letter = 0;
    ConjugacyClass c;
    c.members = std::move(orbits[o]);
    c.representative = c.members.front();
    c.element_order = orders[o];
    c.centralizer_order = n / c.members.size();
    c.name = std::to_string(c.element_order) + class_letter(letter++);
    cd.classes.push_back(std::move(c));
  }
  for (auto& c : cd.classes) c.inverse_class = cd.class_of[g.inverse(c.representative)];
  return cd;
}

WidthReport involution_width_oracle(const SmallGroup& g, const ClassData& cd) {
  const auto& involutions = g.involutions();
  if (involutions.empty()) throw std::invalid_argument("group has no involutions");
  constexpr unsigned unset = ~0u;
  WidthReport report;
  report.involution_count = involutions.size();
  report.class_width.assign(cd.classes.size(), unset);
  report.class_width[cd.class_of[0]] = 0;
  for (unsigned k = 1;; ++k) {
    std::vector<std::size_t> newly;
    for (std::size_t c = 0; c < cd.classes.size(); ++c) {
      if (report.class_width[c] != unset) continue;
      const auto x = cd.classes[c].representative;
      for (auto t : involutions) {
        const unsigned w = report.class_width[cd.class_of[g.multiply(x, t)]];
        if (w != unset && w < k) {
          newly.push_back(c);
          break;
        }
      }
    }
    if (newly.empty()) break;
    for (auto c : newly) report.class_width[c] = k;
    report.group_width = k;
  }
  if (std::find(report.class_width.begin(), report.class_width.end(), unset) != report.class_width.end())
    throw std::invalid_argument("group is not generated by its involutions");
  return report;
}

bool is_strongly_real(const SmallGroup& g, SmallGroup::Index x) {
  if (x == g.identity_index()) return true;
  const auto target = g.inverse(x);
  for (auto t : g.involutions())
    if (g.multiply(g.multiply(t, x), t) == target) return true;
  return false;
}

mpz_class count_tuples(const SmallGroup& g, const ClassData& cd, const std::vector<std::size_t>& classes,
                       SmallGroup::Index target) {
  if (classes.empty()) throw std::invalid_argument("count_tuples needs at least one class");
  for (auto c : classes)
    if (c >= cd.classes.size()) throw std::out_of_range("class index out of range");
  const std::size_t m = classes.size();
  std::uint64_t count = 0;
  const auto last = classes.back();
  // prefix product over the first m-1 classes; the last factor is forced
  const auto recurse = [&](const auto& self, std::size_t depth, SmallGroup::Index prefix) -> void {
    if (depth + 1 == m) {
      const auto needed = g.multiply(g.inverse(prefix), target);
      if (cd.class_of[needed] == last) ++count;
      return;
    }
    for (auto x : cd.classes[classes[depth]].members) self(self, depth + 1, g.multiply(prefix, x));
  };
  recurse(recurse, 0, g.identity_index());
  return mpz_class(std::to_string(count));
}

namespace {

SmallGroup alternating_group(std::size_t m) {
  if (m < 3 || m > 9) throw std::invalid_argument("alternating groups available for 3 <= m <= 9");
  std::vector<Permutation> gens{Permutation::from_cycles(m, {{1, 2, 3}})};
  if (m > 3) {
    std::vector<Permutation::Point> long_cycle;
    for (std::size_t i = (m % 2 == 1 ? 1 : 2); i <= m; ++i) long_cycle.push_back(i);
    gens.push_back(Permutation::from_cycles(m, {long_cycle}));
  }
  SmallGroup g = SmallGroup::from_permutations(gens, 200000);
  std::uint64_t expected = 1;
  for (std::size_t i = 3; i <= m; ++i) expected *= i;
  if (g.order() != expected) throw std::logic_error("alternating generators produced the wrong order");
  return g;
}

SmallGroup checked_permutation_group(std::size_t degree, const std::vector<std::string>& cycles,
                                     std::size_t expected) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));
  SmallGroup g = SmallGroup::from_permutations(gens, expected);
  if (g.order() != expected) throw std::logic_error("standard generators produced the wrong order");
  return g;
}

}  // namespace

SmallGroup standard_group(const std::string& name) {
  std::smatch match;
  static const std::regex alternating(R"(A(\d+))");
  static const std::regex cyclic(R"(C(\d+))");
  static const std::regex unitary(R"(GU(\d+)\((\d+)\))");
  if (std::regex_match(name, match, alternating)) return alternating_group(std::stoul(match[1]));
  if (std::regex_match(name, match, cyclic)) {
    const std::size_t n = std::stoul(match[1]);
    if (n < 1 || n > 100000) throw std::invalid_argument("cyclic group order out of range");
    if (n == 1) return SmallGroup::from_permutations({Permutation(1)}, 1);
    std::vector<Permutation::Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Permutation::Point{1});
    return SmallGroup::from_permutations({Permutation::from_cycles(n, {cycle})}, n);
  }
  if (name == "PSL(2,7)") return checked_permutation_group(7, {"(1 2 3 4 5 6 7)", "(2 3)(4 7)"}, 168);
  if (name == "M11")
    return checked_permutation_group(11, {"(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"}, 7920);
  if (std::regex_match(name, match, unitary)) {
    const auto k = static_cast<unsigned>(std::stoul(match[1]));
    const auto q = static_cast<std::uint32_t>(std::stoul(match[2]));
    const auto elements = enumerate_unitary_group(k, q);
    std::vector<Word> words;
    words.reserve(elements.size());
    for (const auto& m : elements) words.push_back(MatrixRule::encode(m));
    return SmallGroup::from_elements(std::make_shared<MatrixRule>(elements.front().field_ptr(), k),
                                     std::move(words));
  }
  std::string valid;
  for (const auto& n : standard_group_names()) valid += " " + n;
  throw std::invalid_argument("unknown group '" + name + "'; built-in groups:" + valid);
}

std::vector<std::string> standard_group_names() {
  return {"A3", "A4", "A5", "A6", "A7", "A8", "A9", "PSL(2,7)", "M11", "GU2(2)", "GU3(2)", "GU2(3)", "C<n>"};
}

SmallGroup read_generator_file(std::istream& in, std::size_t cap) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line.substr(first));
  }
  if (lines.empty()) throw std::invalid_argument("generator file is empty");
  static const std::regex perm_header(R"(perm\s+(\d+)\s*)");
  std::smatch match;
  if (std::regex_match(lines.front(), match, perm_header)) {
    const std::size_t degree = std::stoul(match[1]);
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_cycles(lines[i], degree));
    if (gens.empty()) gens.push_back(Permutation(degree));
    return SmallGroup::from_permutations(gens, cap);
  }
  auto [field, n] = parse_matrix_header(lines.front());
  std::vector<FFMatrix> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::vector<Field::Element> entries;
    for (std::string token; row >> token;) entries.push_back(field->parse(token));
    if (entries.size() != n * n)
      throw std::invalid_argument("generator line " + std::to_string(i) + " needs " + std::to_string(n * n) +
                                  " entries");
    gens.emplace_back(field, n, std::move(entries));
  }
  if (gens.empty()) gens.push_back(FFMatrix::identity(field, n));
  return SmallGroup::from_matrices(gens, cap);
}

}  // namespace invw
