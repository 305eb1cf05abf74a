#include "liechar/exceptdata.hpp"

#include <algorithm>
#include <cctype>

#include "liechar/classgeom.hpp"

namespace liechar {

std::string to_string(ExceptionalGroup g) {
  switch (g) {
    case ExceptionalGroup::G2: return "G2";
    case ExceptionalGroup::F4: return "F4";
    case ExceptionalGroup::E6: return "E6";
    case ExceptionalGroup::E7: return "E7";
    case ExceptionalGroup::E8: return "E8";
  }
  return "?";
}

ExceptionalGroup parse_exceptional(std::string_view name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s == "G2") return ExceptionalGroup::G2;
  if (s == "F4") return ExceptionalGroup::F4;
  if (s == "E6") return ExceptionalGroup::E6;
  if (s == "E7") return ExceptionalGroup::E7;
  if (s == "E8") return ExceptionalGroup::E8;
  throw PreconditionError("unknown exceptional group '" + std::string(name) + "'");
}

namespace {

using G = ExceptionalGroup;

ExceptionalAlphaEntry exact(G g, const char* label, int num, int den) {
  return {g, label, Rational(num, den), false};
}
ExceptionalAlphaEntry upper(G g, const char* label, int num, int den) {
  return {g, label, Rational(num, den), true};
}

const std::vector<ExceptionalAlphaEntry>& table(G g) {
  static const std::vector<ExceptionalAlphaEntry> e8 = {
      exact(G::E8, "E7", 17, 29), exact(G::E8, "D7", 9, 23),  exact(G::E8, ">E6", 11, 29),
      exact(G::E8, "D6", 9, 29),  exact(G::E8, "A7", 15, 56), exact(G::E8, ">D5", 7, 29),
      exact(G::E8, ">A6", 5, 23), exact(G::E8, ">A5", 4, 23), exact(G::E8, ">D4", 5, 29),
      upper(G::E8, "rest", 1, 6),
  };
  static const std::vector<ExceptionalAlphaEntry> e7 = {
      exact(G::E7, "E6", 11, 17), exact(G::E7, "D6", 5, 9),   exact(G::E7, ">D5", 7, 17),
      exact(G::E7, "A6", 5, 13),  exact(G::E7, "A5", 4, 13),  exact(G::E7, ">A5'", 1, 3),
      exact(G::E7, ">D4", 5, 17), upper(G::E7, ">A4", 1, 4),  upper(G::E7, ">A3", 1, 5),
      upper(G::E7, "rest", 1, 6),
  };
  static const std::vector<ExceptionalAlphaEntry> e6 = {
      exact(G::E6, "D5", 7, 11), exact(G::E6, "A5", 1, 2),   exact(G::E6, "D4", 5, 11),
      exact(G::E6, ">A4", 3, 8), exact(G::E6, ">A3", 3, 11), upper(G::E6, ">A2", 7, 27),
      upper(G::E6, "A1^k", 3, 20),
  };
  static const std::vector<ExceptionalAlphaEntry> f4 = {
      exact(G::F4, "B3", 1, 2),    exact(G::F4, "C3", 7, 15),    exact(G::F4, "A2~A1,A2", 1, 4),
      exact(G::F4, "~A2A1", 2, 9), exact(G::F4, "~A2", 1, 5),    exact(G::F4, "A1~A1", 1, 7),
      exact(G::F4, "A1", 1, 8),    exact(G::F4, "~A1", 1, 11),
  };
  static const std::vector<ExceptionalAlphaEntry> g2 = {
      exact(G::G2, "A1", 1, 3),
      exact(G::G2, "~A1", 1, 4),
  };
  switch (g) {
    case G::G2: return g2;
    case G::F4: return f4;
    case G::E6: return e6;
    case G::E7: return e7;
    case G::E8: return e8;
  }
  return g2;
}

std::string normalize_label(std::string_view in) {
  std::string s(in);
  auto replace_all = [&s](const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
      s.replace(pos, from.size(), to);
  };
  replace_all("′", "'");   // prime
  replace_all("▷", ">");   // triangle
  replace_all("⊳", ">");
  replace_all("Ã", "~A");  // A with tilde
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  if (out.rfind("L'", 0) == 0) out.erase(0, 2);
  if (!out.empty() && out.front() == '>') out.erase(0, 1);
  std::string lower;
  for (char c : out) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return lower == "rest" ? std::string("rest") : out;
}

}  // namespace

const std::vector<ExceptionalAlphaEntry>& exceptional_alpha_table(ExceptionalGroup g) { return table(g); }

const ExceptionalAlphaEntry& alpha_exceptional(ExceptionalGroup g, std::string_view label) {
  const std::string want = normalize_label(label);
  for (const auto& e : table(g))
    if (normalize_label(e.levi_label) == want) return e;
  if (g == G::F4 && (want == "A2~A1" || want == "A2"))
    for (const auto& e : table(g))
      if (e.levi_label == "A2~A1,A2") return e;
  throw PreconditionError("no entry '" + std::string(label) + "' for " + to_string(g));
}

bool exceptional_table_bounds_consistent(ExceptionalGroup g) {
  const auto& t = table(g);
  Rational prev_bound(2);
  for (const auto& e : t) {
    if (!e.is_upper_bound) continue;
    if (e.alpha > prev_bound) return false;
    prev_bound = e.alpha;
    for (const auto& x : t)
      if (!x.is_upper_bound && x.alpha < e.alpha) return false;
  }
  for (const auto& e : t)
    if (e.alpha <= 0 || e.alpha >= 1) return false;
  return true;
}

const std::vector<E7D6Row>& e7_d6_rows() {
  auto p = [](std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); };
  // (3^2,1^6): the source lists this class as (3,2,1^6), which is not a
  // valid SO_12 form; (3^2,1^6) is the A2 class and has the listed dimension.
  static const std::vector<E7D6Row> rows = {
      {p({2, 2, 1, 1, 1, 1, 1, 1, 1, 1}), 0, "A1", 18, 34},
      {p({3, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 0, "A1^2", 20, 52},
      {p({2, 2, 2, 2, 1, 1, 1, 1}), 0, "A1^2", 28, 52},
      {p({2, 2, 2, 2, 2, 2}), 0, "(A1^3)^(1)", 30, 54},
      {p({2, 2, 2, 2, 2, 2}), 1, "(A1^3)^(2)", 30, 64},
      {p({3, 2, 2, 1, 1, 1, 1, 1}), 0, "(A1^3)^(2)", 32, 64},
      {p({3, 2, 2, 2, 2, 1}), 0, "A1^4", 36, 70},
      {p({3, 3, 1, 1, 1, 1, 1, 1}), 0, "A2", 34, 66},
      {p({3, 3, 2, 2, 1, 1}), 0, "A2A1", 40, 76},
      {p({3, 3, 3, 1, 1, 1}), 0, "A2A1^2", 42, 82},
      {p({3, 3, 3, 3}), 0, "A2^2", 44, 84},
      {p({4, 4, 1, 1, 1, 1}), 0, "A3", 44, 84},
      {p({5, 1, 1, 1, 1, 1, 1, 1}), 0, "A3", 36, 84},
      {p({4, 4, 2, 2}), 0, "(A3A1)^(1)", 46, 86},
      {p({4, 4, 2, 2}), 1, "(A3A1)^(2)", 46, 92},
      {p({5, 2, 2, 1, 1, 1}), 0, "(A3A1)^(1)", 44, 86},
      {p({4, 4, 3, 1}), 0, "A3A1^2", 48, 94},
      {p({5, 3, 3, 1}), 0, "A3A2", 50, 98},
      {p({5, 5, 1, 1}), 0, "A4", 52, 100},
      {p({6, 6}), 0, "(A5)^(1)", 54, 102},
      {p({6, 6}), 1, "(A5)^(2)", 54, 108},
      {p({7, 1, 1, 1, 1, 1}), 0, "D4", 48, 96},
      {p({5, 3, 1, 1, 1, 1}), 0, "D4(a1)", 46, 94},
      {p({7, 2, 2, 1}), 0, "D4A1", 52, 102},
      {p({5, 3, 2, 2}), 0, "D4(a1)A1", 48, 96},
      {p({9, 1, 1, 1}), 0, "D5", 56, 112},
      {p({7, 3, 1, 1}), 0, "D5(a1)", 54, 106},
      {p({11, 1}), 0, "D6", 60, 118},
      {p({9, 3}), 0, "D6(a1)", 58, 114},
      {p({7, 5}), 0, "D6(a2)", 56, 110},
  };
  return rows;
}

E7D6Report verify_e7_d6() {
  E7D6Report rep;
  const auto& rows = e7_d6_rows();
  rep.rows = rows.size();
  bool have = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const int recomputed = dim_class(Family::SOEven, r.jordan);
    if (recomputed != r.dim_uL)
      rep.mismatches.push_back(r.jordan.to_string() + " " + r.e7_label + ": stored " + std::to_string(r.dim_uL) +
                               ", recomputed " + std::to_string(recomputed));
    if (r.dim_uL >= r.dim_uG || r.dim_uL % 2 || r.dim_uG % 2)
      rep.mismatches.push_back(r.jordan.to_string() + " " + r.e7_label + ": dimension invariants violated");
    const Rational ratio(r.dim_uL, r.dim_uG);
    if (!have || ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.argmax = i;
      have = true;
    }
  }
  rep.table_value = alpha_exceptional(ExceptionalGroup::E7, "D6").alpha;
  rep.ok = rep.mismatches.empty() && rep.max_ratio == rep.table_value;
  return rep;
}

}  // namespace liechar
