// liechar: command-line front end for the character-ratio and class-walk
// library. Every subcommand prints one report; --out picks the format.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "liechar/acceptance.hpp"
#include "liechar/alphabeta.hpp"
#include "liechar/classgeom.hpp"
#include "liechar/exceptdata.hpp"
#include "liechar/ffgroup.hpp"
#include "liechar/json_io.hpp"
#include "liechar/spectra.hpp"
#include "liechar/walks.hpp"

using namespace liechar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("expected a comma separated integer list, got '" + text + "'");
    }
    if (used != item.size()) throw PreconditionError("expected a comma separated integer list, got '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("num") && v.contains("den") && v.size() == 2) {
    const std::string num = scalar_text(v["num"]), den = scalar_text(v["den"]);
    return den == "1" ? num : num + "/" + den;
  }
  return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  const bool rational = v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den");
  if (v.is_object() && !rational) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
  } else if (v.is_array() && !v.empty() && v[0].is_object()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// csv: the array named table_key becomes rows; otherwise key,value pairs.
void emit(const Json& doc, const std::string& format, const std::string& table_key = "") {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv" && !table_key.empty() && doc.contains(table_key) && doc[table_key].is_array() &&
      !doc[table_key].empty() && doc[table_key][0].is_object()) {
    std::vector<std::string> header;
    for (const auto& [k, v] : doc[table_key][0].items()) header.push_back(k);
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << csv_cell(header[i]);
    std::cout << "\n";
    for (const auto& row : doc[table_key]) {
      for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << (i ? "," : "") << csv_cell(row.contains(header[i]) ? scalar_text(row[header[i]]) : "");
      std::cout << "\n";
    }
    return;
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(doc, "", flat);
  if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : flat) std::cout << csv_cell(k) << "," << csv_cell(v) << "\n";
    return;
  }
  for (const auto& [k, v] : flat) std::cout << k << ": " << v << "\n";
}

struct GroupOpts {
  std::string kind = "GL";
  int n = 2;
  int q = 3;

  void add(CLI::App* app) {
    app->add_option("--kind", kind, "GL or SL")->capture_default_str();
    app->add_option("--n", n, "matrix size, 2..4")->capture_default_str();
    app->add_option("--q", q, "field order, prime power <= 32")->capture_default_str();
  }
  std::shared_ptr<const ClassTable> build() const { return ClassTable::build(GroupSpec::make(parse_group_kind(kind), n, q)); }
};

GroupFamily family_from(const std::string& name, std::optional<int> n, std::optional<int> r) {
  if (n) return GroupFamily::make(parse_family(name, *n), *n);
  if (!r) throw PreconditionError("give --n (natural dimension) or --r (rank)");
  std::string u;
  for (char c : name) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "SO" || u == "SPIN") throw PreconditionError("with --r, name the type: SO_odd/B or SO_even/D");
  const Family f = parse_family(name);
  switch (f) {
    case Family::GL:
    case Family::SL: return GroupFamily::make(f, *r + 1);
    case Family::Sp:
    case Family::SOEven: return GroupFamily::make(f, 2 * *r);
    case Family::SOOdd: return GroupFamily::make(f, 2 * *r + 1);
  }
  throw PreconditionError("unknown family");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liechar: character ratios, Levi subgroups and class walks"};
  app.require_subcommand(1);
  std::string format = "json";
  std::uint32_t seed = kDefaultSeed;
  app.add_option("--out", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--seed", seed, "seed for character-table degeneracy splitting")->capture_default_str();

  // alpha
  auto* alpha = app.add_subcommand("alpha", "alpha of a Levi subgroup (classical shape or exceptional table)");
  std::string a_family = "GL", a_levi, a_exceptional;
  std::optional<int> a_n;
  int a_classical = 0;
  alpha->add_option("--family", a_family, "GL, SL, Sp, SO_odd/B, SO_even/D, SO")->capture_default_str();
  alpha->add_option("--n", a_n, "natural dimension of the ambient group");
  alpha->add_option("--levi", a_levi, "GL factor sizes, e.g. 3,2,1 (or an exceptional Levi label)");
  alpha->add_option("--classical", a_classical, "natural dimension of the classical factor")->capture_default_str();
  alpha->add_option("--exceptional", a_exceptional, "G2, F4, E6, E7 or E8: table lookup");

  // beta
  auto* beta = app.add_subcommand("beta", "beta(n_1, ..., n_m) by exhaustive search");
  std::string b_sizes;
  beta->add_option("sizes", b_sizes, "block sizes, e.g. 3,2")->required();

  // fbound
  auto* fbound = app.add_subcommand("fbound", "explicit constant f(r) for a rank and field size");
  int f_r = 1;
  std::string f_q0 = "2";
  fbound->add_option("--r", f_r, "rank")->required();
  fbound->add_option("--q0", f_q0, "field size q0 >= 2")->capture_default_str();

  // table
  auto* table = app.add_subcommand("table", "exceptional alpha table or the E7/D6 rows");
  std::string t_group;
  bool t_rows = false;
  table->add_option("--group", t_group, "G2, F4, E6, E7 or E8")->required();
  table->add_flag("--d6-rows", t_rows, "list the D6-in-E7 class data (E7 only)");

  // group
  auto* group = app.add_subcommand("group", "conjugacy classes of GL_n(q) or SL_n(q)");
  GroupOpts g_opts;
  g_opts.add(group);
  std::string g_action = "classes", g_matrix;
  group->add_option("action", g_action, "classes or supp")->check(CLI::IsMember({"classes", "supp"}))->capture_default_str();
  group->add_option("--g", g_matrix, "matrix for supp, rows separated by ';'");

  // chartable
  auto* chartable = app.add_subcommand("chartable", "numerical character table");
  GroupOpts c_opts;
  c_opts.add(chartable);
  std::optional<double> c_zeta;
  chartable->add_option("--zeta", c_zeta, "also report zeta(s) at this s");

  // walk
  auto* walk = app.add_subcommand("walk", "exact conjugacy-class random walk");
  GroupOpts w_opts;
  w_opts.add(walk);
  std::string w_rep;
  int w_tmax = 40;
  walk->add_option("--class-rep", w_rep, "class representative, rows separated by ';'")->required();
  walk->add_option("--tmax", w_tmax, "maximum number of steps")->capture_default_str();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "mixing and covering bound catalog");
  std::string bd_family = "SL", bd_levi;
  std::optional<int> bd_n, bd_r;
  int bd_classical = 0, bd_supp = 0, bd_q = 0;
  bounds->add_option("--family", bd_family, "GL, SL, Sp, SO_odd/B, SO_even/D")->capture_default_str();
  bounds->add_option("--n", bd_n, "natural dimension");
  bounds->add_option("--r", bd_r, "rank (alternative to --n)");
  bounds->add_option("--levi", bd_levi, "GL factor sizes of the Levi");
  bounds->add_option("--classical", bd_classical, "natural dimension of the classical factor")->capture_default_str();
  bounds->add_option("--supp", bd_supp, "supp(y) for the support bound")->capture_default_str();
  bounds->add_option("--q", bd_q, "field order (for the characteristic proviso)")->capture_default_str();

  // audit
  auto* audit = app.add_subcommand("audit", "character-level checks on a built group");
  GroupOpts au_opts;
  au_opts.add(audit);
  std::string au_kind, au_g, au_levi;
  audit->add_option("check", au_kind, "main1, steinberg, coset or unipotent")
      ->required()
      ->check(CLI::IsMember({"main1", "steinberg", "coset", "unipotent"}));
  audit->add_option("--g", au_g, "element, rows separated by ';' (main1, coset)");
  audit->add_option("--levi", au_levi, "standard Levi block sizes in order (main1, coset)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  std::string v_suite = "all", v_golden;
  verify->add_option("--suite", v_suite, "all, or a comma separated list of criterion ids")->capture_default_str();
  verify->add_option("--golden", v_golden, "mixing-time golden file (written when missing)");

  // Global options are also accepted after the subcommand name.
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->add_option("--out", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", seed, "seed for character-table degeneracy splitting");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*alpha) {
      if (!a_exceptional.empty()) {
        const auto g = parse_exceptional(a_exceptional);
        if (a_levi.empty()) throw PreconditionError("--levi names the exceptional Levi, e.g. D6");
        emit(envelope("alpha", to_json(alpha_exceptional(g, a_levi))), format);
      } else {
        if (!a_n) throw PreconditionError("--n is required for a classical ambient group");
        const auto ambient = GroupFamily::make(parse_family(a_family, *a_n), *a_n);
        const auto shape = LeviShape::make(ambient, parse_ints(a_levi), a_classical);
        Json out = to_json(alpha_classical(shape));
        out["ratio_bound"] = to_json(check_ratio_bound(shape));
        emit(envelope("alpha", out), format);
      }
    } else if (*beta) {
      const auto sizes = parse_ints(b_sizes);
      Json out = to_json(beta_bruteforce(sizes));
      out["sizes"] = sizes;
      out["sandwich"] = to_json(check_sandwich(sizes));
      emit(envelope("beta", out), format);
    } else if (*fbound) {
      Json out = to_json(f_bound(f_r, BigInt(f_q0)));
      emit(envelope("fbound", out), format);
    } else if (*table) {
      const auto g = parse_exceptional(t_group);
      Json out{{"group", to_string(g)}};
      if (t_rows) {
        if (g != ExceptionalGroup::E7) throw PreconditionError("--d6-rows applies to E7 only");
        Json rows = Json::array();
        for (const auto& r : e7_d6_rows()) rows.push_back(to_json(r));
        out["rows"] = rows;
        out["check"] = to_json(verify_e7_d6());
      } else {
        Json rows = Json::array();
        for (const auto& e : exceptional_alpha_table(g)) rows.push_back(to_json(e));
        out["rows"] = rows;
      }
      emit(envelope("table", out), format, "rows");
    } else if (*group) {
      const auto t = g_opts.build();
      if (g_action == "supp") {
        if (g_matrix.empty()) throw PreconditionError("supp needs --g");
        const Mat g = t->ops().parse(g_matrix);
        if (!t->contains(g)) throw PreconditionError("matrix is not in " + t->spec().label());
        emit(envelope("group", Json{{"group", t->spec().label()}, {"g", matrix_json(t->ops(), g)}, {"supp", supp(t->ops(), g)},
                                    {"class", t->class_of(g)}}),
             format);
      } else {
        emit(envelope("group", to_json(*t)), format, "classes");
      }
    } else if (*chartable) {
      const auto t = c_opts.build();
      const auto ct = character_table(t, seed);
      Json out = to_json(ct);
      out["seed"] = seed;
      if (c_zeta) out["zeta"] = to_json(zeta(ct.degrees, *c_zeta));
      emit(envelope("chartable", out), format, "characters");
    } else if (*walk) {
      const auto t = w_opts.build();
      const int c = t->class_of(t->ops().parse(w_rep));
      const auto rep = mixing_time(t, c, w_tmax);
      Json out = to_json(rep);
      const auto cn = covering_number(*t, c);
      out["covering_number"] = cn ? Json(*cn) : Json(nullptr);
      emit(envelope("walk", out), format, "rows");
    } else if (*bounds) {
      const auto ambient = family_from(bd_family, bd_n, bd_r);
      std::optional<LeviShape> shape;
      if (!bd_levi.empty() || bd_classical) shape = LeviShape::make(ambient, parse_ints(bd_levi), bd_classical);
      emit(envelope("bounds", to_json(bound_catalog(ambient, shape, bd_supp, bd_q))), format, "entries");
    } else if (*audit) {
      const auto t = au_opts.build();
      const auto ct = character_table(t, seed);
      Json out{{"group", t->spec().label()}, {"check", au_kind}};
      bool ok = true;
      if (au_kind == "steinberg") {
        const auto rep = steinberg_check(ct);
        out["report"] = to_json(rep);
        ok = rep.ok;
      } else if (au_kind == "unipotent") {
        const auto rep = unipotent_degree_check(ct);
        out["report"] = to_json(rep);
        ok = rep.found;
      } else {
        if (au_g.empty() || au_levi.empty()) throw PreconditionError(au_kind + " needs --g and --levi");
        const Mat g = t->ops().parse(au_g);
        const auto blocks = parse_ints(au_levi);
        if (au_kind == "coset") {
          const auto rep = hc_coset_check(ct, g, blocks);
          out["report"] = to_json(rep);
          ok = rep.ok;
        } else {
          const auto rep = main1_bound_audit(ct, g, blocks);
          out["report"] = to_json(rep);
        }
      }
      out["ok"] = ok;
      emit(envelope("audit", out), format);
      return ok ? kExitOk : kExitCheck;
    } else if (*verify) {
      AcceptanceOptions opts;
      opts.seed = seed;
      opts.golden_path = v_golden;
      if (v_suite != "all") opts.only = parse_ints(v_suite);
      const auto results = run_acceptance(opts);
      Json rows = Json::array();
      bool all = true;
      for (const auto& r : results) {
        rows.push_back(to_json(r));
        all = all && r.pass;
      }
      emit(envelope("verify", Json{{"suite", v_suite}, {"criteria", rows}, {"all_pass", all}}), format, "criteria");
      return all ? kExitOk : kExitCheck;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kExitCheck;
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  }
  return kExitOk;
}
