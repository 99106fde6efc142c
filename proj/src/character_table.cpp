#include "invw/character_table.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace invw {

namespace {

using nlohmann::json;

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw std::invalid_argument("field '" + what + "' must be an integer");
}

// Class names compare by length first so "2Z" precedes "2AA".
bool name_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_trivial_row(const std::vector<Cyclotomic>& row) {
  return std::all_of(row.begin(), row.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

}  // namespace

mpz_class CharacterTable::centralizer_order(std::size_t c) const {
  const mpz_class& size = classes.at(c).size;
  if (sgn(size) <= 0 || order % size != 0)
    throw std::runtime_error("class " + classes[c].name + " size does not divide the group order");
  return order / size;
}

std::vector<mpq_class> CharacterTable::degrees() const {
  const auto id = identity_class();
  if (!id) throw std::runtime_error("table has no identity class");
  std::vector<mpq_class> out;
  for (const auto& row : values) {
    const auto d = row.at(*id).to_rational();
    if (!d) throw std::runtime_error("character degree is not rational");
    out.push_back(*d);
  }
  return out;
}

std::size_t CharacterTable::find_class(const std::string& name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == name) return i;
  std::string valid;
  for (const auto& c : classes) valid += (valid.empty() ? "" : " ") + c.name;
  throw std::invalid_argument("unknown class '" + name + "'; valid names: " + valid);
}

std::optional<std::size_t> CharacterTable::identity_class() const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].element_order == 1) return i;
  return std::nullopt;
}

std::vector<std::size_t> CharacterTable::involution_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].element_order == 2) out.push_back(i);
  return out;
}

CharacterTable canonical_form(const CharacterTable& t) {
  const std::size_t n = t.class_count();
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  std::sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = t.classes[a];
    const auto& y = t.classes[b];
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    if (x.size != y.size) return x.size > y.size;
    return name_less(x.name, y.name);
  });
  std::vector<std::size_t> new_index(n);
  for (std::size_t i = 0; i < n; ++i) new_index[cols[i]] = i;

  CharacterTable out;
  out.group_name = t.group_name;
  out.order = t.order;
  for (auto c : cols) {
    ClassInfo info = t.classes[c];
    info.inverse = info.inverse < n ? new_index[info.inverse] : info.inverse;
    out.classes.push_back(std::move(info));
  }
  for (const auto& row : t.values) {
    std::vector<Cyclotomic> permuted;
    permuted.reserve(n);
    for (auto c : cols) permuted.push_back(row.at(c).minimized());
    out.values.push_back(std::move(permuted));
  }
  std::stable_sort(out.values.begin(), out.values.end(), [](const auto& a, const auto& b) {
    const bool ta = is_trivial_row(a);
    const bool tb = is_trivial_row(b);
    if (ta != tb) return ta;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const int c = compare(a[j], b[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

std::string serialize_table(const CharacterTable& t) {
  const CharacterTable c = canonical_form(t);
  json j;
  j["group_name"] = c.group_name;
  j["order"] = integer_json(c.order);
  j["classes"] = json::array();
  for (const auto& info : c.classes)
    j["classes"].push_back({{"name", info.name},
                            {"size", integer_json(info.size)},
                            {"element_order", info.element_order},
                            {"inverse", info.inverse}});
  j["irreducibles"] = json::array();
  for (const auto& row : c.values) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.to_json());
    j["irreducibles"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

CharacterTable parse_table(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("table file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("table file must hold a JSON object");
  for (const char* key : {"group_name", "order", "classes", "irreducibles"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("table file lacks '") + key + "'");
  if (!j["group_name"].is_string()) throw std::invalid_argument("'group_name' must be a string");
  if (!j["classes"].is_array() || !j["irreducibles"].is_array())
    throw std::invalid_argument("'classes' and 'irreducibles' must be arrays");

  CharacterTable t;
  t.group_name = j["group_name"].get<std::string>();
  t.order = integer_from_json(j["order"], "order");
  std::set<std::string> names;
  for (const auto& c : j["classes"]) {
    if (!c.is_object()) throw std::invalid_argument("class entries must be objects");
    for (const char* key : {"name", "size", "element_order", "inverse"})
      if (!c.contains(key)) throw std::invalid_argument(std::string("class entry lacks '") + key + "'");
    ClassInfo info;
    if (!c["name"].is_string()) throw std::invalid_argument("class name must be a string");
    info.name = c["name"].get<std::string>();
    if (!names.insert(info.name).second) throw std::invalid_argument("duplicate class name '" + info.name + "'");
    info.size = integer_from_json(c["size"], "size");
    if (!c["element_order"].is_number_unsigned() || !c["inverse"].is_number_unsigned())
      throw std::invalid_argument("'element_order' and 'inverse' must be nonnegative integers");
    info.element_order = c["element_order"].get<std::uint64_t>();
    info.inverse = c["inverse"].get<std::size_t>();
    t.classes.push_back(std::move(info));
  }
  for (const auto& info : t.classes)
    if (info.inverse >= t.classes.size())
      throw std::invalid_argument("class " + info.name + " has an out-of-range inverse index");
  for (const auto& row : j["irreducibles"]) {
    if (!row.is_array() || row.size() != t.classes.size())
      throw std::invalid_argument("each character needs one value per class (" +
                                  std::to_string(t.classes.size()) + ")");
    std::vector<Cyclotomic> values;
    for (const auto& v : row) values.push_back(Cyclotomic::from_json(v));
    t.values.push_back(std::move(values));
  }
  if (t.values.size() != t.classes.size())
    throw std::invalid_argument("table has " + std::to_string(t.classes.size()) + " classes but " +
                                std::to_string(t.values.size()) + " characters");
  return t;
}

CharacterTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str());
}

void write_table_file(const CharacterTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write table file '" + path + "'");
  out << serialize_table(t);
}

ValidationReport validate_table(const CharacterTable& t) {
  ValidationReport report;
  const auto fail = [&](std::string check, std::string detail) {
    report.failures.push_back({std::move(check), std::move(detail)});
  };
  const std::size_t n = t.class_count();
  if (t.row_count() != n) {
    fail("shape", std::to_string(t.row_count()) + " characters for " + std::to_string(n) + " classes");
    return report;
  }

  mpz_class size_sum = 0;
  std::vector<std::optional<mpz_class>> centralizers(n);
  for (std::size_t c = 0; c < n; ++c) {
    size_sum += t.classes[c].size;
    if (sgn(t.classes[c].size) > 0 && t.order % t.classes[c].size == 0)
      centralizers[c] = t.order / t.classes[c].size;
    else
      fail("class_size", "class " + std::to_string(c) + " size does not divide the order");
  }
  if (size_sum != t.order) fail("class_sizes", "class sizes sum to " + size_sum.get_str());

  const auto id = t.identity_class();
  if (!id) {
    fail("identity_class", "no class of element order 1");
    return report;
  }
  mpq_class degree_sum = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const auto d = t.values[r][*id].to_rational();
    if (!d || d->get_den() != 1 || sgn(*d) <= 0) {
      fail("degree", "character " + std::to_string(r) + " degree is not a positive integer");
      continue;
    }
    degree_sum += *d * *d;
  }
  if (degree_sum != t.order) fail("degree_sum", "sum of squared degrees is " + degree_sum.get_str());

  std::vector<std::vector<Cyclotomic>> conj(n, std::vector<Cyclotomic>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) conj[r][c] = t.values[r][c].conjugate();

  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r; s < n; ++s) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < n; ++c) sum += Cyclotomic(mpq_class(t.classes[c].size)) * t.values[r][c] * conj[s][c];
      const Cyclotomic expected = r == s ? Cyclotomic(mpq_class(t.order)) : Cyclotomic();
      if (!(sum == expected))
        fail("row_orthogonality", "rows " + std::to_string(r) + "," + std::to_string(s) + " give " + sum.to_string());
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Cyclotomic sum;
      for (std::size_t r = 0; r < n; ++r) sum += t.values[r][a] * conj[r][b];
      Cyclotomic expected;
      if (a == b) {
        if (!centralizers[a]) continue;
        expected = Cyclotomic(mpq_class(*centralizers[a]));
      }
      if (!(sum == expected))
        fail("column_orthogonality",
             "columns " + std::to_string(a) + "," + std::to_string(b) + " give " + sum.to_string());
    }

  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t inv = t.classes[c].inverse;
    if (inv >= n) {
      fail("inverse_class", "class " + std::to_string(c) + " inverse index out of range");
      continue;
    }
    if (t.classes[inv].inverse != c)
      fail("inverse_class", "inverse map is not an involution at class " + std::to_string(c));
    if (t.classes[inv].element_order != t.classes[c].element_order ||
        t.classes[inv].size != t.classes[c].size)
      fail("inverse_class", "class " + std::to_string(c) + " and its inverse class differ in order or size");
    for (std::size_t r = 0; r < n; ++r)
      if (!(t.values[r][inv] == conj[r][c]))
        fail("inverse_class", "character " + std::to_string(r) + " at class " + std::to_string(c) +
                                  " is not conjugate to its value at the inverse class");
  }
  return report;
}

Cyclotomic kappa(const CharacterTable& t, const std::vector<std::size_t>& sources, std::size_t target) {
  if (sources.empty()) throw std::invalid_argument("structure constants need at least one source class");
  for (auto c : sources)
    if (c >= t.class_count()) throw std::out_of_range("source class index out of range");
  if (target >= t.class_count()) throw std::out_of_range("target class index out of range");
  const auto degrees = t.degrees();
  Cyclotomic sum;
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    Cyclotomic term = t.values[r][target].conjugate();
    for (auto c : sources) {
      term *= t.values[r][c];
      if (term.is_zero()) break;
    }
    if (term.is_zero()) continue;
    mpq_class denom = 1;
    for (std::size_t i = 1; i < sources.size(); ++i) denom *= degrees[r];
    sum += term / denom;
  }
  return sum;
}

mpz_class eta(const CharacterTable& t, const std::vector<std::size_t>& sources, std::size_t target) {
  const Cyclotomic k = kappa(t, sources, target);
  const auto rational = k.to_rational();
  if (!rational) throw std::runtime_error("structure constant is irrational: " + k.to_string() + "; table is corrupt");
  mpq_class value = *rational;
  for (std::size_t i = 1; i < sources.size(); ++i) value *= t.order;
  for (auto c : sources) value /= mpq_class(t.centralizer_order(c));
  if (value.get_den() != 1 || sgn(value) < 0)
    throw std::runtime_error("structure constant " + value.get_str() + " is not a nonnegative integer; table is corrupt");
  return value.get_num();
}

std::vector<std::size_t> strongly_real_classes(const CharacterTable& t) {
  const auto involutions = t.involution_classes();
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    const auto order = t.classes[c].element_order;
    bool real = order <= 2;
    for (std::size_t a = 0; a < involutions.size() && !real; ++a)
      for (std::size_t b = a; b < involutions.size() && !real; ++b)
        real = sgn(eta(t, {involutions[a], involutions[b]}, c)) > 0;
    if (real) out.push_back(c);
  }
  return out;
}

CoverReport involution_cover(const CharacterTable& t, unsigned k) {
  const auto involutions = t.involution_classes();
  if (involutions.empty()) throw std::invalid_argument("table has no involution class");
  CoverReport report;
  report.identity_class = t.identity_class();
  report.minimal_j.assign(t.class_count(), std::nullopt);
  if (report.identity_class) report.minimal_j[*report.identity_class] = 0;

  std::vector<std::size_t> layer = involutions;
  for (unsigned j = 1; j <= k; ++j) {
    if (j > 1) {
      std::vector<std::size_t> next;
      for (std::size_t c = 0; c < t.class_count(); ++c) {
        bool hit = false;
        for (auto d : layer) {
          for (auto i : involutions)
            if (!kappa(t, {d, i}, c).is_zero()) {
              hit = true;
              break;
            }
          if (hit) break;
        }
        if (hit) next.push_back(c);
      }
      layer = std::move(next);
    }
    for (auto c : layer)
      if (!report.minimal_j[c]) report.minimal_j[c] = j;
    report.layers.push_back(layer);
  }

  report.complete = true;
  unsigned width = 0;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    if (report.identity_class && c == *report.identity_class) continue;
    if (!report.minimal_j[c]) {
      report.complete = false;
      continue;
    }
    width = std::max(width, *report.minimal_j[c]);
  }
  if (report.complete) report.width = width;
  return report;
}

}  // namespace invw
