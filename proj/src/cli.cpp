#include "invw/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "invw/character_table.hpp"
#include "invw/dixon.hpp"
#include "invw/dual_pair.hpp"
#include "invw/involution_decomposition.hpp"
#include "invw/lie_characters.hpp"
#include "invw/permutation.hpp"
#include "invw/small_group.hpp"

namespace invw {

namespace {

/// Ordered key/value lines; a key given more than once becomes a JSON array.
class Report {
 public:
  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  template <typename T>
  void add(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    add(key, s.str());
  }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }

  void write(std::ostream& out, bool json) const {
    if (!json) {
      for (const auto& [k, v] : lines_) out << k << ": " << v << '\n';
      return;
    }
    std::map<std::string, std::size_t> counts;
    for (const auto& line : lines_) ++counts[line.first];
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : lines_) {
      if (counts[k] > 1) {
        if (!j.contains(k)) j[k] = nlohmann::ordered_json::array();
        j[k].push_back(v);
      } else {
        j[k] = v;
      }
    }
    out << j.dump(2) << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::vector<std::string> split_words(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::istringstream s(a);
    std::string w;
    while (s >> w) out.push_back(w);
  }
  return out;
}

std::vector<unsigned> parse_parts(const std::string& text) { return parse_partition(text).parts; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct GroupSource {
  std::string name;
  std::string generators;
  std::size_t cap = 1000000;

  void attach(CLI::App* sub) {
    sub->add_option("-g,--group", name, "built-in group: A5..A9, PSL(2,7), M11, GU3(2), C<n>");
    sub->add_option("--generators", generators, "generator file");
    sub->add_option("--cap", cap, "maximum group order")->capture_default_str();
  }

  SmallGroup load() const {
    if (name.empty() == generators.empty()) throw std::invalid_argument("give exactly one of --group or --generators");
    if (!name.empty()) return standard_group(name);
    std::ifstream in(generators);
    if (!in) throw std::runtime_error("cannot open '" + generators + "'");
    return read_generator_file(in, cap);
  }

  std::string label() const { return name.empty() ? generators : name; }
};

struct MatrixSource {
  std::string path;
  std::string point = "identity";

  void attach(CLI::App* sub) {
    sub->add_option("--matrix", path, "matrix file");
    sub->add_option("--point", point, "identity or transvection when no matrix is given")
        ->check(CLI::IsMember({"identity", "transvection"}))
        ->capture_default_str();
  }

  FFMatrix load(unsigned n, std::uint32_t q) const {
    if (!path.empty()) {
      FFMatrix m = parse_matrix(read_file(path));
      if (m.dim() != n) throw std::invalid_argument("matrix dimension differs from -n");
      if (!(m.field() == *unitary_field(q))) throw std::invalid_argument("matrix must be over " + unitary_field(q)->name());
      return m;
    }
    if (point == "transvection") return unitary_transvection(n, q);
    return FFMatrix::identity(unitary_field(q), n);
  }

  std::string label() const { return path.empty() ? point : path; }
};

void report_table(Report& r, const CharacterTable& t) {
  r.add("group", t.group_name);
  r.add("order", t.order.get_str());
  r.add("classes", t.class_count());
  std::vector<std::string> names;
  for (const auto& c : t.classes) names.push_back(c.name);
  r.add("class_names", join(names, " "));
  std::vector<std::string> degrees;
  for (const auto& d : t.degrees()) degrees.push_back(d.get_str());
  r.add("degrees", join(degrees, " "));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Involution width toolkit: factorizations, character tables, unitary-group characters", "invw"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit one JSON object instead of key: value lines");

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "write an even permutation as a product of involutions");
  std::size_t degree = 0;
  std::string perm_text;
  decompose_cmd->add_option("-m,--degree", degree, "degree m >= 5")->required();
  decompose_cmd->add_option("permutation", perm_text, "cycle notation, e.g. \"(1 2 3)\"")->required();

  // width
  auto* width_cmd = app.add_subcommand("width", "exact involution width by breadth-first search");
  GroupSource width_src;
  width_src.attach(width_cmd);

  // table-compute
  auto* compute_cmd = app.add_subcommand("table-compute", "character table by the Dixon method");
  GroupSource compute_src;
  compute_src.attach(compute_cmd);
  std::string compute_out;
  std::string compute_name;
  compute_cmd->add_option("-o,--output", compute_out, "write the table to this file");
  compute_cmd->add_option("--name", compute_name, "group name stored in the table");

  // table-validate
  auto* validate_cmd = app.add_subcommand("table-validate", "check orthogonality and consistency of a table file");
  std::string validate_path;
  validate_cmd->add_option("table", validate_path, "table file")->required();

  // eta
  auto* eta_cmd = app.add_subcommand("eta", "class structure constant");
  std::string eta_path;
  std::vector<std::string> eta_classes;
  std::string eta_target;
  eta_cmd->add_option("table", eta_path, "table file")->required();
  eta_cmd->add_option("classes", eta_classes, "source class names")->required();
  eta_cmd->add_option("-t,--target", eta_target, "target class name")->required();

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "classes reached by products of involution classes");
  std::string cover_path;
  unsigned cover_k = 4;
  cover_cmd->add_option("table", cover_path, "table file")->required();
  cover_cmd->add_option("-k", cover_k, "largest number of involutions")->capture_default_str();

  // degree
  auto* degree_cmd = app.add_subcommand("degree", "unipotent character degree");
  std::string partition_text;
  std::uint64_t degree_q = 0;
  std::string variant = "unitary";
  degree_cmd->add_option("-p,--partition", partition_text, "parts, e.g. 4,2,1")->required();
  degree_cmd->add_option("-q", degree_q, "prime power")->required();
  degree_cmd->add_option("--variant", variant, "linear or unitary")
      ->check(CLI::IsMember({"linear", "unitary"}))
      ->capture_default_str();

  // ppd
  auto* ppd_cmd = app.add_subcommand("ppd", "primitive prime divisors of q^n - 1");
  std::uint64_t ppd_q = 0;
  unsigned ppd_n = 0;
  ppd_cmd->add_option("-q", ppd_q, "base")->required();
  ppd_cmd->add_option("-n", ppd_n, "exponent")->required();

  // torus
  auto* torus_cmd = app.add_subcommand("torus", "order of a maximal torus of SU_n(q)");
  std::string shape_text;
  std::uint64_t torus_q = 0;
  torus_cmd->add_option("-s,--shape", shape_text, "parts a_1,...,a_k")->required();
  torus_cmd->add_option("-q", torus_q, "prime power")->required();

  // weil
  auto* weil_cmd = app.add_subcommand("weil", "Weil character values of GU_n(q)");
  unsigned weil_n = 0;
  std::uint32_t weil_q = 0;
  int weil_t = -1;
  MatrixSource weil_matrix;
  weil_cmd->add_option("-n", weil_n, "dimension")->required();
  weil_cmd->add_option("-q", weil_q, "prime power")->required();
  weil_cmd->add_option("-t", weil_t, "constituent index 0..q (default: all)");
  weil_matrix.attach(weil_cmd);

  // dalpha
  auto* dalpha_cmd = app.add_subcommand("dalpha", "dual-pair constituent D_alpha by direct averaging");
  unsigned dalpha_k = 3;
  unsigned dalpha_n = 0;
  std::uint32_t dalpha_q = 0;
  std::string dalpha_alpha_degree;
  int dalpha_row = -1;
  MatrixSource dalpha_matrix;
  dalpha_cmd->add_option("-k", dalpha_k, "2 or 3")->capture_default_str();
  dalpha_cmd->add_option("-n", dalpha_n, "dimension of the SU_n(q) side")->required();
  dalpha_cmd->add_option("-q", dalpha_q, "2 or 3")->required();
  dalpha_cmd->add_option("--alpha-degree", dalpha_alpha_degree, "use every row of this degree");
  dalpha_cmd->add_option("--row", dalpha_row, "use one row of the GU_k(q) table");
  dalpha_matrix.attach(dalpha_cmd);

  // d2closed / d3closed
  std::uint64_t closed_q = 0;
  unsigned closed_r = 0;
  unsigned closed_r1 = 0;
  auto* d2_cmd = app.add_subcommand("d2closed", "three-term closed form over |GU_2(q)|");
  auto* d3_cmd = app.add_subcommand("d3closed", "six-term closed form over |GU_3(q)|");
  for (auto* sub : {d2_cmd, d3_cmd}) {
    sub->add_option("-q", closed_q, "prime power")->required();
    sub->add_option("-r", closed_r, "number of Jordan blocks")->required();
    sub->add_option("--r1", closed_r1, "number of blocks of size one")->required();
  }

  // table1
  auto* table1_cmd = app.add_subcommand("table1", "degrees of the D_alpha constituents of SU_n(q)");
  unsigned table1_n = 0;
  std::uint64_t table1_q = 0;
  std::string table1_row;
  table1_cmd->add_option("-n", table1_n, "odd n >= 7")->required();
  table1_cmd->add_option("-q", table1_q, "prime power")->required();
  table1_cmd->add_option("--row", table1_row, "one row identifier (default: all)");

  // reconcile
  auto* reconcile_cmd = app.add_subcommand("reconcile", "closed forms against the direct dual-pair average");
  unsigned reconcile_n = 7;
  std::uint32_t reconcile_q = 2;
  reconcile_cmd->add_option("-n", reconcile_n, "dimension")->capture_default_str();
  reconcile_cmd->add_option("-q", reconcile_q, "2 or 3")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Report r;
  try {
    if (*decompose_cmd) {
      const Permutation g = parse_cycles(perm_text, degree);
      const auto result = decompose(g);
      r.add("degree", degree);
      r.add("element", g.to_string());
      r.add("factors", result.factors.size());
      for (const auto& f : result.factors)
        r.add("factor", f.to_string() + " order=" + std::to_string(f.order()) +
                            " parity=" + (is_even(f) ? "even" : "odd"));
      r.add("verified", result.verified());
    } else if (*width_cmd) {
      const SmallGroup g = width_src.load();
      const ClassData cd = conjugacy_classes(g);
      const WidthReport w = involution_width_oracle(g, cd);
      r.add("group", width_src.label());
      r.add("order", g.order());
      r.add("involutions", w.involution_count);
      r.add("width", w.group_width);
      for (std::size_t c = 0; c < cd.classes.size(); ++c)
        r.add("class", cd.classes[c].name + " size=" + std::to_string(cd.classes[c].size()) +
                           " width=" + std::to_string(w.class_width[c]));
    } else if (*compute_cmd) {
      const SmallGroup g = compute_src.load();
      const ClassData cd = conjugacy_classes(g);
      DixonInfo info;
      const CharacterTable t =
          dixon_character_table(g, cd, compute_name.empty() ? compute_src.label() : compute_name, &info);
      report_table(r, t);
      r.add("prime", info.prime);
      r.add("exponent", info.exponent);
      r.add("attempts", info.attempts);
      r.add("valid", validate_table(t).ok());
      if (!compute_out.empty()) {
        write_table_file(t, compute_out);
        r.add("written", compute_out);
      } else {
        r.add("table", nlohmann::json::parse(serialize_table(t)).dump());
      }
    } else if (*validate_cmd) {
      const CharacterTable t = read_table_file(validate_path);
      const ValidationReport v = validate_table(t);
      r.add("table", validate_path);
      r.add("valid", v.ok());
      for (const auto& f : v.failures) r.add("failure", f.check + ": " + f.detail);
      r.write(out, json);
      return v.ok() ? 0 : 1;
    } else if (*eta_cmd) {
      const CharacterTable t = read_table_file(eta_path);
      const ValidationReport v = validate_table(t);
      if (!v.ok()) throw std::invalid_argument("invalid table: " + v.failures.front().check + ": " + v.failures.front().detail);
      std::vector<std::size_t> sources;
      const auto names = split_words(eta_classes);
      for (const auto& n : names) sources.push_back(t.find_class(n));
      const std::size_t target = t.find_class(eta_target);
      r.add("classes", join(names, " "));
      r.add("target", eta_target);
      r.add("kappa", kappa(t, sources, target).to_string());
      r.add("eta", eta(t, sources, target).get_str());
      for (std::size_t i = 0; i < sources.size(); ++i)
        r.add("centralizer", names[i] + " " + t.centralizer_order(sources[i]).get_str());
      r.add("centralizer_target", t.centralizer_order(target).get_str());
    } else if (*cover_cmd) {
      const CharacterTable t = read_table_file(cover_path);
      const ValidationReport v = validate_table(t);
      if (!v.ok()) throw std::invalid_argument("invalid table: " + v.failures.front().check + ": " + v.failures.front().detail);
      const CoverReport c = involution_cover(t, cover_k);
      r.add("group", t.group_name);
      r.add("k", cover_k);
      for (std::size_t j = 0; j < c.layers.size(); ++j) {
        std::vector<std::string> names;
        for (auto idx : c.layers[j]) names.push_back(t.classes[idx].name);
        r.add("layer", std::to_string(j + 1) + ": " + join(names, " "));
      }
      for (std::size_t i = 0; i < t.class_count(); ++i) {
        std::string value = "unreached";
        if (c.identity_class && *c.identity_class == i) value = std::to_string(c.identity_cover);
        else if (c.minimal_j[i]) value = std::to_string(*c.minimal_j[i]);
        r.add("class", t.classes[i].name + " " + value);
      }
      r.add("complete", c.complete);
      r.add("width", c.width ? std::to_string(*c.width) : std::string("unknown"));
    } else if (*degree_cmd) {
      const Partition lambda = parse_partition(partition_text);
      const GroupVariant v = variant == "linear" ? GroupVariant::linear : GroupVariant::unitary;
      r.add("partition", lambda.to_string());
      r.add("q", degree_q);
      r.add("variant", variant);
      r.add("a", a_statistic(lambda));
      r.add("degree", unipotent_degree(lambda, degree_q, v).get_str());
    } else if (*ppd_cmd) {
      const auto primes = ppd(ppd_q, ppd_n);
      std::vector<std::string> items;
      for (auto p : primes) items.push_back(std::to_string(p));
      r.add("q", ppd_q);
      r.add("n", ppd_n);
      r.add("count", primes.size());
      r.add("primes", join(items, " "));
    } else if (*torus_cmd) {
      const auto shape = parse_parts(shape_text);
      std::vector<std::string> items;
      for (auto a : shape) items.push_back(std::to_string(a));
      r.add("shape", join(items, ","));
      r.add("q", torus_q);
      r.add("order", torus_order_unitary(shape, torus_q).get_str());
    } else if (*weil_cmd) {
      const WeilContext ctx = WeilContext::make(weil_n, weil_q);
      const FFMatrix g = weil_matrix.load(weil_n, weil_q);
      r.add("n", weil_n);
      r.add("q", weil_q);
      r.add("element", weil_matrix.label());
      r.add("zeta", weil_zeta(g, weil_q).get_str());
      if (weil_t >= 0) {
        r.add("chi", "t=" + std::to_string(weil_t) + " " + weil_chi(static_cast<unsigned>(weil_t), g, ctx).to_string());
      } else {
        for (unsigned t = 0; t <= weil_q; ++t)
          r.add("chi", "t=" + std::to_string(t) + " " + weil_chi(t, g, ctx).to_string());
      }
    } else if (*dalpha_cmd) {
      const DualPairEvaluator eval(dalpha_k, dalpha_q);
      const FFMatrix g = dalpha_matrix.load(dalpha_n, dalpha_q);
      std::vector<std::size_t> rows;
      if (dalpha_row >= 0) {
        rows.push_back(static_cast<std::size_t>(dalpha_row));
      } else if (!dalpha_alpha_degree.empty()) {
        rows = eval.rows_of_degree(mpz_class(dalpha_alpha_degree));
      } else {
        for (std::size_t i = 0; i < eval.table().row_count(); ++i) rows.push_back(i);
      }
      const auto values = eval.d_alpha_all(g);
      const auto degrees = eval.table().degrees();
      r.add("k", dalpha_k);
      r.add("n", dalpha_n);
      r.add("q", dalpha_q);
      r.add("group_order", eval.group().order());
      r.add("element", dalpha_matrix.label());
      for (auto row : rows) {
        if (row >= values.size()) throw std::out_of_range("row index out of range");
        r.add("row", std::to_string(row) + " alpha_degree=" + degrees[row].get_str() +
                         " value=" + values[row].to_string());
      }
    } else if (*d2_cmd || *d3_cmd) {
      const mpq_class v = *d2_cmd ? d2_unipotent_closed(closed_q, closed_r, closed_r1)
                                  : d3_unipotent_closed(closed_q, closed_r, closed_r1);
      r.add("q", closed_q);
      r.add("r", closed_r);
      r.add("r1", closed_r1);
      r.add("value", v.get_str());
      r.add("integral", v.get_den() == 1);
    } else if (*table1_cmd) {
      std::vector<std::string> rows = table1_row_ids();
      if (!table1_row.empty()) rows = {table1_row};
      r.add("n", table1_n);
      r.add("q", table1_q);
      for (const auto& id : rows) {
        const mpq_class v = table1_value(id, table1_n, table1_q);
        r.add("row", id + " " + v.get_str() + (v.get_den() == 1 ? "" : " non-integral"));
      }
    } else if (*reconcile_cmd) {
      const auto entries = reconcile(reconcile_n, reconcile_q);
      std::size_t matches = 0;
      r.add("n", reconcile_n);
      r.add("q", reconcile_q);
      for (const auto& e : entries) {
        if (e.match) ++matches;
        r.add("entry", "k=" + std::to_string(e.k) + " row=" + std::to_string(e.row) +
                           " alpha_degree=" + e.alpha_degree.get_str() + " point=" + e.point +
                           " r=" + std::to_string(e.r) + " r1=" + std::to_string(e.r1) +
                           " direct=" + e.direct.to_string() + " closed=" + e.closed.get_str() +
                           (e.match ? " match" : " mismatch"));
      }
      r.add("matches", matches);
      r.add("mismatches", entries.size() - matches);
      if (reconcile_n >= 7 && reconcile_n % 2 == 1) {
        std::size_t found = 0, absent = 0, empty = 0;
        for (const auto& c : compare_table1(DualPairEvaluator(3, reconcile_q), reconcile_n)) {
          const char* status = !c.occurs ? " empty" : c.found ? " found" : " absent";
          if (!c.occurs) ++empty;
          else if (c.found) ++found;
          else ++absent;
          r.add("table1", c.row + " printed=" + c.printed.get_str() + status);
        }
        r.add("table1_found", found);
        r.add("table1_absent", absent);
        r.add("table1_empty", empty);
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  r.write(out, json);
  return 0;
}

}  // namespace invw
