#include "symquot/report.hpp"

#include <sstream>

namespace symquot {

namespace {

Json flag_json(Flag f) {
  switch (f) {
    case Flag::pass: return true;
    case Flag::fail: return false;
    case Flag::not_applicable: return nullptr;
  }
  return nullptr;
}

Json series_json(const PowerSeries& s, std::size_t degree) {
  Json out = Json::array();
  for (std::size_t k = 0; k <= degree; ++k) out.push_back(to_string(s[k]));
  return out;
}

Json poly_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Json log_json(const NormalizationLog& log) {
  Json j;
  j["trivial"] = log.trivial;
  j["removed_zero_positions"] = Json::array();
  for (auto p : log.removed_zero_positions) j["removed_zero_positions"].push_back(p + 1);
  j["divided_by"] = log.divided_by;
  j["sign_flipped"] = log.sign_flipped;
  j["reordered"] = log.reordered;
  j["entries"] = log.entries();
  return j;
}

Json node_json(const OrbitTypeNode& n) {
  Json j;
  j["support"] = Json::array();
  for (auto i : n.support) j["support"].push_back(i + 1);
  j["isotropy_order"] = n.isotropy_order;
  j["complex_dimension"] = n.complex_dimension;
  j["meets_shell"] = n.meets_shell;
  if (n.support.size() == 2) j["cyclic_order"] = n.cyclic_order;
  return j;
}

Json spec_json(const DuValSpec& s) {
  Json j;
  j["spec"] = s.to_string();
  j["type"] = to_string(s.type);
  j["m"] = s.m;
  if (s.type == DuValType::I) {
    j["n"] = s.n;
    j["f"] = s.f;
    j["g"] = s.g;
    j["d"] = s.d;
  } else if (s.type <= DuValType::IV) {
    j["ell"] = s.ell;
  }
  return j;
}

Json chain_json(const ReductionChain& c) {
  Json j;
  j["steps"] = Json::array();
  for (const auto& s : c.steps) {
    Json step;
    step["parent"] = s.parent.to_string();
    step["node"] = node_json(s.node);
    step["child"] = s.child.to_string();
    j["steps"].push_back(step);
  }
  j["terminal"] = c.terminal ? Json(c.terminal->to_string()) : Json(nullptr);
  j["failure"] = c.failure;
  return j;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << " = {}\n";
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << " = []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << path << " = " << j.get<std::string>() << "\n";
  } else {
    out << path << " = " << j.dump() << "\n";
  }
}

}  // namespace

Json envelope(const std::string& command, Json input, Json result) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  return j;
}

Json predicates_json(const PredicateRecord& p) {
  Json j;
  const std::pair<const char*, const Predicate*> all[] = {
      {"diophantine", &p.diophantine},     {"rhm", &p.rhm},           {"codim1_chain", &p.codim1_chain},
      {"nondegenerate", &p.nondegenerate}, {"ratio_ok", &p.ratio_ok}, {"quadratic_count_ok", &p.quadratic_count_ok}};
  for (auto [name, q] : all) j[name] = flag_json(q->flag);
  Json reasons;
  for (auto [name, q] : all)
    if (!q->reason.empty()) reasons[name] = q->reason;
  j["reasons"] = reasons.is_null() ? Json::object() : reasons;
  auto f = p.first_failure();
  j["first_failure"] = f ? Json(*f) : Json(nullptr);
  return j;
}

Json gamma_json(const GammaData& g) {
  Json j;
  j["gamma0"] = to_string(g.gamma0);
  j["gamma1"] = to_string(g.gamma1);
  j["gamma2"] = to_string(g.gamma2);
  j["gamma3"] = to_string(g.gamma3);
  return j;
}

Json certificate_json(const ExclusionCertificate& c) {
  Json j = spec_json(c.candidate);
  j["obstruction"] = to_string(c.obstruction);
  Json w = Json::object();
  for (const auto& [k, v] : c.witness) w[k] = v;
  j["witness"] = w;
  return j;
}

Json analyze_json(const WeightVector& input, std::size_t series_degree) {
  Json j;
  Normalized nz = normalize(input);
  j["normalized"] = nz.vector.to_string();
  j["normalization"] = log_json(nz.log);
  if (nz.log.trivial) {
    j["verdict"] = to_string(Verdict::not_applicable);
    return j;
  }
  // A single-sign vector is read through its alphas with the first weight negative.
  WeightVector v = nz.vector;
  if (!v.both_signs()) {
    std::vector<std::int64_t> w = v.alphas();
    w[0] = -w[0];
    v = WeightVector(w);
  }
  j["analysis_weights"] = v.to_string();

  std::optional<Rational> gamma0;
  Json closed = nullptr, extracted = nullptr;
  if (v.size() == 3 && v.count_negative() == 1) {
    GammaData g = gamma_closed_form_n3(v);
    gamma0 = g.gamma0;
    closed = gamma_json(g);
  }
  if (v.size() >= 2) {
    GammaData g = gamma_from_laurent(v);
    if (!gamma0) gamma0 = g.gamma0;
    extracted = gamma_json(g);
  }
  PredicateRecord p = predicates(v, gamma0);

  if (!nz.vector.both_signs())
    j["verdict"] = to_string(Verdict::point);
  else if (v.size() == 2)
    j["verdict"] = to_string(Verdict::dimension_two_orbifold);
  else if (p.first_failure())
    j["verdict"] = to_string(Verdict::excluded_by_predicate);
  else
    j["verdict"] = nullptr;
  if (nz.vector.both_signs() && v.size() == 2) j["cyclic_order"] = v.alpha(0) + v.alpha(1);

  j["gamma0"] = gamma0 ? Json(to_string(*gamma0)) : Json(nullptr);
  j["degenerate"] = p.nondegenerate.flag == Flag::not_applicable ? Json(nullptr) : Json(p.nondegenerate.failed());
  j["predicates"] = predicates_json(p);
  j["gamma"] = {{"closed_form", closed}, {"extracted", extracted}};
  OrbitTypeLattice lattice = orbit_type_lattice(v);
  j["orbit_types"] = Json::array();
  for (const auto& n : lattice.nodes) j["orbit_types"].push_back(node_json(n));
  j["codim1_nodes"] = lattice.codim1_nodes(v.size()).size();
  j["series_head"] = series_json(hilb_on_series(v, series_degree), series_degree);
  return j;
}

Json group_json(const DuValSpec& spec, bool with_molien, std::size_t series_degree) {
  FiniteU2Group g = duval_group(spec);
  Json j = spec_json(spec);
  j["order"] = g.order();
  j["conductor"] = spec.conductor();
  j["pseudoreflections"] = g.pseudoreflections.size();
  Json orders = Json::array();
  for (auto i : g.pseudoreflections) orders.push_back(g.element_order(i));
  j["pseudoreflection_orders"] = orders;
  j["primitive_set"] = Json::array();
  for (const auto& p : g.primitive_set)
    j["primitive_set"].push_back({{"order", p.order}, {"class_size", p.class_size}, {"element", p.element.to_string()}});
  FiniteGamma fg = gamma_finite_closed_form(g);
  j["gamma0"] = to_string(fg.gamma0);
  j["gamma2"] = to_string(fg.gamma2);
  if (with_molien) {
    MolienData md = molien_real(g);
    Json m;
    m["series"] = md.series.to_string();
    m["numerator"] = poly_json(md.series.numerator());
    m["denominator"] = poly_json(md.series.denominator());
    m["gamma0"] = to_string(md.gamma0);
    m["gamma2"] = to_string(md.gamma2);
    m["quadratic_dimension"] = to_string(md.quadratic_dimension);
    m["taylor"] = series_json(md.series.taylor(series_degree), series_degree);
    j["molien"] = m;
  }
  return j;
}

Json catalog_json(std::int64_t order) {
  Json j;
  auto specs = enumerate_groups_of_order(order);
  j["order"] = order;
  j["count"] = specs.size();
  j["groups"] = Json::array();
  for (const auto& s : specs) {
    Json g = spec_json(s);
    g["trivial"] = order == 1;
    j["groups"].push_back(g);
  }
  return j;
}

Json audit_json(const AuditReport& r, bool certificates) {
  Json j;
  j["normalized"] = r.normalized.to_string();
  j["normalization"] = log_json(r.log);
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::dimension_two_orbifold) j["cyclic_order"] = r.cyclic_order;
  j["gamma0"] = r.gamma0 ? Json(to_string(*r.gamma0)) : Json(nullptr);
  if (r.log.trivial || !r.normalized.both_signs()) {
    j["notes"] = r.notes;
    return j;
  }
  j["predicates"] = predicates_json(r.predicates);
  j["chains"] = Json::array();
  for (const auto& c : r.chains) j["chains"].push_back(chain_json(c));
  j["terminals"] = Json::array();
  for (const auto& t : r.terminals) {
    Json tj;
    tj["weights"] = t.vector.to_string();
    tj["verdict"] = to_string(t.verdict);
    if (t.gamma) {
      tj["gamma0"] = to_string(t.gamma->gamma0);
      tj["gamma2"] = to_string(t.gamma->gamma2);
    }
    tj["predicates"] = predicates_json(t.predicates);
    tj["candidate_count"] = t.candidates.size();
    tj["obstructions"] = obstruction_summary(t.candidates);
    Json survivors = Json::array();
    for (const auto& c : t.candidates)
      if (!c.certificate) survivors.push_back(spec_json(c.candidate));
    tj["survivors"] = survivors;
    if (certificates) {
      tj["certificates"] = Json::array();
      for (const auto& c : t.candidates)
        if (c.certificate) tj["certificates"].push_back(certificate_json(*c.certificate));
    }
    j["terminals"].push_back(tj);
  }
  j["notes"] = r.notes;
  return j;
}

Json scan_summary_json(const std::vector<ScanRow>& rows, std::size_t n, std::int64_t alpha_max) {
  Json j;
  j["n"] = n;
  j["alpha_max"] = alpha_max;
  j["vectors"] = rows.size();
  std::map<std::string, std::size_t> verdicts, firsts;
  std::size_t diophantine = 0;
  Json survivors = Json::array();
  for (const auto& r : rows) {
    ++verdicts[to_string(r.verdict)];
    if (r.predicates.first_failure()) ++firsts[*r.predicates.first_failure()];
    if (!r.predicates.diophantine.failed()) ++diophantine;
    if (r.verdict == Verdict::counterexample_candidate) survivors.push_back(audit_json(r.report, true));
  }
  Json v = Json::object(), f = Json::object();
  for (const auto& [k, c] : verdicts) v[k] = c;
  for (const auto& [k, c] : firsts) f[k] = c;
  j["verdicts"] = v;
  j["first_failing_predicate"] = f;
  j["diophantine_passing"] = diophantine;
  j["counterexample_candidates"] = survivors;
  return j;
}

Json checks_json(const std::vector<ArgumentCheck>& checks) {
  Json j;
  std::size_t failed = 0;
  j["checks"] = Json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    failed += !c.passed;
  }
  j["passed"] = failed == 0;
  j["failed"] = failed;
  return j;
}

std::string flatten_text(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "weights;gamma0;diophantine;rhm;codim1_chain;nondegenerate;ratio_ok;verdict;first_obstruction\n";
  for (const auto& r : rows) {
    const auto& p = r.predicates;
    out << r.weights.to_string() << ';' << to_string(r.gamma0) << ';' << to_string(p.diophantine.flag) << ';'
        << to_string(p.rhm.flag) << ';' << to_string(p.codim1_chain.flag) << ';' << to_string(p.nondegenerate.flag)
        << ';' << to_string(p.ratio_ok.flag) << ';' << to_string(r.verdict) << ';' << r.first_obstruction << '\n';
  }
  return out.str();
}

std::string checks_table(const std::vector<ArgumentCheck>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) out << c.name << " : " << (c.passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace symquot
