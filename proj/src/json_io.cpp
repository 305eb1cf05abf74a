#include "liechar/json_io.hpp"

#include <cmath>
#include <limits>

namespace liechar {

namespace {

Json big_int_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json complex_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

Json to_json(const BigRational& r) {
  return Json{{"num", big_int_json(boost::multiprecision::numerator(r))},
              {"den", big_int_json(boost::multiprecision::denominator(r))}};
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const LeviShape& s) {
  return Json{{"ambient", s.ambient.label()},
              {"gl_factors", s.gl_factors},
              {"classical_factor", s.classical_factor},
              {"dim", s.dim()},
              {"label", s.label()}};
}

Json to_json(const JordanType& j) {
  Json gl = Json::array();
  for (const auto& p : j.gl_parts) gl.push_back(to_json(p));
  return Json{{"gl_parts", gl}, {"classical_part", to_json(j.classical_part)}, {"label", j.to_string()}};
}

Json to_json(const AlphaResult& a) {
  return Json{{"levi", to_json(a.levi)}, {"value", to_json(a.value)}, {"torus", a.torus}, {"witness", to_json(a.witness)}};
}

Json to_json(const BetaResult& b) { return Json{{"value", to_json(b.value)}, {"witness", b.witness}}; }

Json to_json(const Sandwich& s) {
  return Json{{"lower", to_json(s.lower)}, {"value", to_json(s.value)}, {"upper", to_json(s.upper)}, {"holds", s.holds}};
}

Json to_json(const RatioBound& b) {
  return Json{{"alpha", to_json(b.alpha)}, {"bound", to_json(b.bound)}, {"slack", to_json(b.slack)}, {"holds", b.holds}};
}

Json to_json(const FBound& f) {
  Json out{{"r", f.r},
           {"q0", big_int_json(f.q0)},
           {"weyl_order", big_int_json(f.weyl_order)},
           {"a_order", f.a_order},
           {"dim", f.dim},
           {"general", to_json(f.general)},
           {"general_value", static_cast<double>(f.general)}};
  out["closed"] = f.closed ? big_int_json(*f.closed) : Json(nullptr);
  return out;
}

Json to_json(const SuppConstants& c) { return Json{{"c", to_json(c.c)}, {"r_prime", to_json(c.r_prime)}}; }

Json to_json(const ExceptionalAlphaEntry& e) {
  return Json{{"group", to_string(e.group)},
              {"levi", e.levi_label},
              {"alpha", to_json(e.alpha)},
              {"upper_bound", e.is_upper_bound}};
}

Json to_json(const E7D6Row& row) {
  return Json{{"jordan", to_json(row.jordan)},
              {"variant", row.variant},
              {"e7_class", row.e7_label},
              {"dim_uL", row.dim_uL},
              {"dim_uG", row.dim_uG}};
}

Json to_json(const E7D6Report& rep) {
  return Json{{"rows", rep.rows},
              {"mismatches", rep.mismatches},
              {"max_ratio", to_json(rep.max_ratio)},
              {"argmax", rep.argmax},
              {"table_value", to_json(rep.table_value)},
              {"ok", rep.ok}};
}

Json matrix_json(const MatOps& ops, const Mat& m) { return Json(ops.entries(m)); }

Json to_json(const ClassTable& t) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& c = t[i];
    classes.push_back(Json{{"index", i},
                           {"rep", matrix_json(t.ops(), c.rep)},
                           {"rep_text", t.ops().to_string(c.rep)},
                           {"size", c.size},
                           {"centralizer_order", c.centralizer_order},
                           {"element_order", c.element_order},
                           {"supp", c.supp},
                           {"p_regular", c.p_regular},
                           {"inverse_class", t.inverse_class(static_cast<int>(i))}});
  }
  return Json{{"group", t.spec().label()}, {"order", t.order()}, {"class_count", t.size()}, {"classes", classes}};
}

Json to_json(const CharTable& ct) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < ct.size(); ++i) {
    Json values = Json::array();
    for (const auto& v : ct.values[i]) values.push_back(complex_json(v));
    rows.push_back(Json{{"degree", ct.degrees[i]}, {"values", values}});
  }
  return Json{{"group", ct.classes->spec().label()},
              {"order", ct.classes->order()},
              {"class_count", ct.classes->size()},
              {"degrees", ct.degrees},
              {"characters", rows},
              {"row_residual", ct.row_residual},
              {"column_residual", ct.column_residual},
              {"degree_residual", ct.degree_residual},
              {"attempts", ct.attempts}};
}

Json to_json(const ZetaValue& z) { return Json{{"s", z.s}, {"value", z.value}, {"minus_one", z.minus_one}}; }

Json to_json(const CosetReport& r) {
  return Json{{"characters", r.characters}, {"max_residual", r.max_residual}, {"ok", r.ok}};
}

Json to_json(const SteinbergReport& r) {
  return Json{{"index", r.index}, {"classes_checked", r.classes_checked}, {"max_residual", r.max_residual}, {"ok", r.ok}};
}

Json to_json(const UnipotentDegreeReport& r) { return Json{{"expected", r.expected}, {"found", r.found}}; }

Json to_json(const Main1Audit& a) {
  return Json{{"alpha", a.alpha},
              {"effective_f", a.effective_f},
              {"argmax", a.argmax},
              {"f_bound", a.f_bound},
              {"f_bound_value", a.f_bound_value},
              {"within_f_bound", a.within_f_bound}};
}

Json to_json(const MixingReport& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows)
    rows.push_back(Json{{"t", r.t}, {"l1", r.l1}, {"linf", r.linf}, {"support_size", r.support_size}});
  return Json{{"group", m.group},
              {"class", m.cls},
              {"class_size", m.class_size},
              {"T_l1", optional_json(m.t_l1)},
              {"T_linf", optional_json(m.t_linf)},
              {"cover", optional_json(m.cover)},
              {"lower_bound", m.lower_bound},
              {"subset_bound", m.subset_bound},
              {"cover_lower_bound", m.cover_lower},
              {"rows", rows}};
}

Json to_json(const BoundCatalog& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries)
    entries.push_back(Json{{"name", e.name},
                           {"statement", e.statement},
                           {"value", to_json(e.value)},
                           {"applicable", e.applicable},
                           {"proviso", e.proviso}});
  return Json{{"ambient", c.ambient.label()}, {"coxeter_number", c.coxeter}, {"entries", entries}};
}

Json to_json(const CriterionResult& r) {
  return Json{{"id", r.id},
              {"name", r.name},
              {"pass", r.pass},
              {"flagged", r.flagged},
              {"detail", r.detail},
              {"seconds", std::round(r.seconds * 1000) / 1000}};
}

Json envelope(const std::string& command, const Json& payload) {
  Json out{{"schema", kSchema}, {"command", command}};
  if (payload.is_object())
    for (const auto& [k, v] : payload.items()) out[k] = v;
  else
    out["result"] = payload;
  return out;
}

}  // namespace liechar
