// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include "waring/json_io.hpp"

#include <algorithm>

#include "waring/text_format.hpp"

namespace waring::json {

namespace {

Json coeff_list(const std::vector<OrderElement>& coeffs) {
  Json out = Json::array();
  for (const auto& c : coeffs) out.push_back(element(c));
  return out;
}

Json coeff_list(const std::vector<ResidueElement>& coeffs) {
  Json out = Json::array();
  for (const auto& c : coeffs) out.push_back(element(c));
  return out;
}

}  // namespace

Json integer(const Integer& v) {
  if (fits_int64(v)) return Json(to_int64(v));
  return Json(v.get_str());
}

Json element(const OrderElement& a) {
  Json out = Json::array();
  for (const auto& c : a.coords()) out.push_back(integer(c));
  return out;
}

Json element(const ResidueElement& a) {
  Json out = Json::array();
  for (auto c : a.coords) out.push_back(c);
  return out;
}

Json order(const OrderDescriptor& order) {
  if (const auto* mono = std::get_if<MonogenicOrder>(&order)) {
    Json poly = Json::array();
    for (const auto& c : mono->lower_coeffs()) poly.push_back(integer(c));
    poly.push_back(1);
    Json out{{"kind", "monogenic"},
             {"degree", mono->degree()},
             {"min_poly", poly},
             {"disc", integer(mono->disc())},
             {"label", mono->label()}};
    if (const auto& q = mono->quadratic_spec()) out["quadratic"] = {{"d", integer(q->d)}, {"f", integer(q->f)}};
    return out;
  }
  const auto& ext = std::get<ExternalDiscOrder>(order);
  return Json{{"kind", "external"}, {"degree", ext.degree}, {"disc", integer(ext.disc)}, {"label", ext.label}};
}

Json bound(const PowerCountBound& b) {
  switch (b.kind) {
    case PowerCountBound::Kind::kExactSmall:
      return Json{{"kind", "exact"}, {"value", b.value}};
    case PowerCountBound::Kind::kSymbolic:
      return Json{{"kind", "symbolic"}, {"expression", b.expression}, {"q", b.q}};
    case PowerCountBound::Kind::kUnknown:
      break;
  }
  return Json{{"kind", "unknown"}};
}

Json witness(const Witness& w) {
  Json out{{"kind", w.kind}};
  for (const auto& [key, value] : w.text) out[key] = value;
  for (const auto& [key, value] : w.numbers) out[key] = integer(value);
  if (!w.elements.empty()) {
    Json elems = Json::array();
    for (const auto& e : w.elements) {
      Json v = Json::array();
      for (const auto& c : e) v.push_back(integer(c));
      elems.push_back(v);
    }
    out["elements"] = elems;
  }
  return out;
}

Json verdict(const Verdict& v) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(witness(w));
  Json timings = Json::object();
  for (const auto& [key, value] : v.counters) timings[key] = value;
  if (v.wall_clock_ms) timings["wall_clock_ms"] = *v.wall_clock_ms;
  return Json{{"answer", answer_name(v.answer)},
              {"rule", v.rule},
              {"witnesses", witnesses},
              {"bound", bound(v.bound)},
              {"timings", timings}};
}

Json trace_group(const TraceGroup& tg, bool include_members) {
  Json gens = Json::array();
  for (const auto& g : tg.generators)
    gens.push_back(Json{{"value", element(g.value)}, {"char_coeffs", coeff_list(g.coeffs)}});
  Json out{{"modulus", tg.modulus()},
           {"n", tg.n},
           {"k", tg.k},
           {"is_full", tg.is_full},
           {"size", tg.group.size()},
           {"ring_size", tg.ring().size()},
           {"generators", gens},
           {"spanning_set", coeff_list(tg.group.generators())},
           {"tuples_enumerated", tg.tuples_enumerated}};
  if (include_members && tg.group.size() <= kMaxMembersListed) out["members"] = subgroup(tg.group.members());
  return out;
}

Json certificate(const Certificate& c) {
  Json summands = Json::array();
  for (const auto& s : c.summands) summands.push_back(Json{{"char_coeffs", coeff_list(s)}});
  return Json{{"k", c.k}, {"summands", summands}, {"remainder", element(c.remainder)}};
}

Json decomposition(const Decomposition& d) {
  Json mats = Json::array();
  for (const auto& m : d.matrices) mats.push_back(format_matrix(m));
  return Json{{"k", d.k}, {"terms", d.matrices.size()}, {"matrices", mats}};
}

Json bs_triple(const BSTriple& t) {
  return Json{{"p", t.p}, {"r", t.r}, {"d", t.d}, {"q", integer(t.q)}};
}

Json element_waring(const ElementWaringResult& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness(w));
  return Json{{"full", r.full}, {"witnesses", witnesses}};
}

Json counterexample(const CounterexampleReport& r) {
  return Json{{"order", order(OrderDescriptor(r.order))},
              {"formula_cases_checked", r.formula_cases_checked},
              {"cube_image_mod2", subgroup(r.cube_image_mod2)},
              {"cube_closure_mod2", subgroup(r.cube_closure_mod2)},
              {"alpha_in_cube_closure", r.alpha_in_cube_closure},
              {"element_waring", element_waring(r.element_waring)},
              {"matrix_verdict", verdict(r.matrix_verdict)}};
}

Json subgroup(std::vector<ResidueElement> elements) {
  std::sort(elements.begin(), elements.end());
  return coeff_list(elements);
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace waring::json
