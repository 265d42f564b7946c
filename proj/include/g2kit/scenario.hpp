#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "g2kit/compat.hpp"

namespace g2kit {

using Json = nlohmann::ordered_json;

inline constexpr int kScenarioSchema = 1;

/// One check invocation from a scenario file: a type plus named arguments
/// referencing the scenario's forms / fields / scalars.
struct ScenarioCheck {
  std::string type;
  std::map<std::string, std::string> refs;
  std::optional<int> trials;
};

/// A parsed scenario: coordinate chart, metric and orientation, named data,
/// and an ordered check list.
struct Scenario {
  std::string name;
  std::string description;
  std::array<std::string, kDim> coordinates = canonical_names();
  int orientation = 1;
  ConstantMetric metric = ConstantMetric::identity();
  std::map<std::string, Polynomial> scalars;
  std::map<std::string, KForm> forms;
  std::map<std::string, VectorField> fields;
  std::vector<ScenarioCheck> checks;
};

namespace detail {

inline const Json& require_member(const Json& j, const std::string& key,
                                  const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing required member '" + key + "'", path);
  return *it;
}

inline std::string require_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError("expected a string", path);
  return j.get<std::string>();
}

inline Polynomial parse_poly(const Json& j, const Scenario& sc,
                             const std::string& path) {
  if (!j.is_string()) throw ParseError("expected a polynomial string", path);
  try {
    return Polynomial::parse(j.get<std::string>(), sc.coordinates);
  } catch (const Error& e) {
    throw ParseError(std::string("malformed polynomial: ") + e.what(), path);
  }
}

inline KForm parse_form(const Json& j, const Scenario& sc,
                        const std::string& path) {
  if (!j.is_object()) throw ParseError("expected a form object", path);
  const Json& jdeg = require_member(j, "degree", path);
  if (!jdeg.is_number_integer()) throw ParseError("degree must be an integer", path);
  const int degree = jdeg.get<int>();
  if (degree < 0 || degree > kDim)
    throw ParseError("degree out of range 0..7", path + "/degree");
  KForm form(degree);
  const Json& jterms = require_member(j, "terms", path);
  if (!jterms.is_array()) throw ParseError("terms must be an array", path + "/terms");
  for (std::size_t t = 0; t < jterms.size(); ++t) {
    const std::string tpath = path + "/terms/" + std::to_string(t);
    const Json& jt = jterms[t];
    if (!jt.is_object()) throw ParseError("expected a term object", tpath);
    const Json& jidx = require_member(jt, "indices", tpath);
    if (!jidx.is_array()) throw ParseError("indices must be an array", tpath);
    std::vector<int> axes;
    for (const auto& ji : jidx) {
      if (!ji.is_number_integer())
        throw ParseError("indices must be integers", tpath + "/indices");
      axes.push_back(ji.get<int>());
    }
    auto mi = MultiIndex::make(axes);
    if (!mi)
      throw ParseError("non-increasing multi-index", tpath + "/indices");
    if (mi->degree() != degree)
      throw ParseError("multi-index length does not match declared degree",
                       tpath + "/indices");
    form.add_term(*mi, parse_poly(require_member(jt, "coeff", tpath), sc,
                                  tpath + "/coeff"));
  }
  return form;
}

inline VectorField parse_field(const Json& j, const Scenario& sc,
                               const std::string& path) {
  if (!j.is_array() || j.size() != kDim)
    throw ParseError("a field needs exactly 7 component strings", path);
  VectorField v;
  for (int i = 0; i < kDim; ++i)
    v.comp[static_cast<std::size_t>(i)] =
        parse_poly(j[static_cast<std::size_t>(i)], sc,
                   path + "/" + std::to_string(i));
  return v;
}

inline Json form_to_json(const KForm& f,
                         const std::array<std::string, kDim>& names) {
  Json out;
  out["degree"] = f.degree();
  Json terms = Json::array();
  for (const auto& [m, p] : f.terms()) {
    Json t;
    Json idx = Json::array();
    for (int i = 0; i < m.degree(); ++i) idx.push_back(m.axis(i));
    t["indices"] = std::move(idx);
    t["coeff"] = p.to_string(names);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

inline Json field_to_json(const VectorField& v,
                          const std::array<std::string, kDim>& names) {
  Json out = Json::array();
  for (int i = 0; i < kDim; ++i)
    out.push_back(v.comp[static_cast<std::size_t>(i)].to_string(names));
  return out;
}

}  // namespace detail

/// Known check types and their required named arguments.
inline const std::map<std::string, std::vector<std::pair<std::string, char>>>&
check_signatures() {
  // Second element: 'f' = form, 'v' = vector field, 's' = scalar.
  static const std::map<std::string, std::vector<std::pair<std::string, char>>>
      sigs = {
          {"torsion", {{"phi", 'f'}}},
          {"metric_compat", {{"phi", 'f'}}},
          {"contact_certificate", {{"alpha", 'f'}}},
          {"reeb", {{"alpha", 'f'}, {"R", 'v'}}},
          {"acms", {{"phi", 'f'}, {"R", 'v'}}},
          {"associated", {{"phi", 'f'}, {"R", 'v'}, {"alpha", 'f'}}},
          {"a_compatible", {{"phi", 'f'}, {"alpha", 'f'}, {"R", 'v'}}},
          {"b_compatible",
           {{"phi", 'f'}, {"alpha", 'f'}, {"X", 'v'}, {"Y", 'v'}}},
          {"contact_g2",
           {{"phi", 'f'}, {"R", 'v'}, {"alpha", 'f'}, {"f", 's'}, {"g", 's'}}},
          {"vector_triple",
           {{"phi", 'f'}, {"X", 'v'}, {"Y", 'v'}, {"Z", 'v'}}},
          {"identity_suite", {{"phi", 'f'}}},
          {"lambda2", {{"phi", 'f'}, {"beta", 'f'}}},
      };
  return sigs;
}

inline Scenario parse_scenario(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "/");
  }
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object", "/");

  Scenario sc;
  const Json& jschema = detail::require_member(doc, "schema", "/schema");
  if (!jschema.is_number_integer() || jschema.get<int>() != kScenarioSchema)
    throw ParseError("unsupported schema version", "/schema");
  sc.name = detail::require_string(detail::require_member(doc, "name", "/name"),
                                   "/name");
  if (doc.contains("description"))
    sc.description = detail::require_string(doc["description"], "/description");

  if (doc.contains("coordinates")) {
    const Json& jc = doc["coordinates"];
    if (!jc.is_array() || jc.size() != kDim)
      throw ParseError("coordinates must list 7 names", "/coordinates");
    for (int i = 0; i < kDim; ++i)
      sc.coordinates[static_cast<std::size_t>(i)] = detail::require_string(
          jc[static_cast<std::size_t>(i)], "/coordinates/" + std::to_string(i));
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        if (sc.coordinates[static_cast<std::size_t>(i)] ==
            sc.coordinates[static_cast<std::size_t>(j)])
          throw ParseError("duplicate coordinate name", "/coordinates");
  }

  if (doc.contains("orientation")) {
    const Json& jo = doc["orientation"];
    if (!jo.is_number_integer() ||
        (jo.get<int>() != 1 && jo.get<int>() != -1))
      throw ParseError("orientation must be 1 or -1", "/orientation");
    sc.orientation = jo.get<int>();
  }

  if (doc.contains("metric")) {
    const Json& jm = doc["metric"];
    if (!jm.is_array() || jm.size() != kDim)
      throw ParseError("metric must be a 7x7 array", "/metric");
    ConstantMetric::Entries entries{};
    for (int i = 0; i < kDim; ++i) {
      const Json& row = jm[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != kDim)
        throw ParseError("metric must be a 7x7 array",
                         "/metric/" + std::to_string(i));
      for (int j = 0; j < kDim; ++j) {
        const std::string path =
            "/metric/" + std::to_string(i) + "/" + std::to_string(j);
        try {
          entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              Rational::from_string(detail::require_string(
                  row[static_cast<std::size_t>(j)], path));
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(e.what(), path);
        }
      }
    }
    try {
      sc.metric = ConstantMetric(entries);
    } catch (const Error& e) {
      throw ParseError(e.what(), "/metric");
    }
  }

  if (doc.contains("scalars")) {
    if (!doc["scalars"].is_object())
      throw ParseError("scalars must be an object", "/scalars");
    for (const auto& [key, value] : doc["scalars"].items())
      sc.scalars.emplace(key,
                         detail::parse_poly(value, sc, "/scalars/" + key));
  }

  if (doc.contains("forms")) {
    if (!doc["forms"].is_object())
      throw ParseError("forms must be an object", "/forms");
    for (const auto& [key, value] : doc["forms"].items())
      sc.forms.emplace(key, detail::parse_form(value, sc, "/forms/" + key));
  }

  if (doc.contains("fields")) {
    if (!doc["fields"].is_object())
      throw ParseError("fields must be an object", "/fields");
    for (const auto& [key, value] : doc["fields"].items())
      sc.fields.emplace(key, detail::parse_field(value, sc, "/fields/" + key));
  }

  const Json& jchecks = detail::require_member(doc, "checks", "/checks");
  if (!jchecks.is_array()) throw ParseError("checks must be an array", "/checks");
  for (std::size_t i = 0; i < jchecks.size(); ++i) {
    const std::string path = "/checks/" + std::to_string(i);
    const Json& jc = jchecks[i];
    if (!jc.is_object()) throw ParseError("expected a check object", path);
    ScenarioCheck check;
    check.type = detail::require_string(
        detail::require_member(jc, "type", path + "/type"), path + "/type");
    auto sig = check_signatures().find(check.type);
    if (sig == check_signatures().end())
      throw ParseError("unknown check type '" + check.type + "'",
                       path + "/type");
    for (const auto& [arg, kind] : sig->second) {
      const std::string apath = path + "/" + arg;
      const std::string ref = detail::require_string(
          detail::require_member(jc, arg, apath), apath);
      const bool resolves = kind == 'f'   ? sc.forms.count(ref) > 0
                            : kind == 'v' ? sc.fields.count(ref) > 0
                                          : sc.scalars.count(ref) > 0;
      if (!resolves)
        throw ParseError("unresolved name '" + ref + "'", apath);
      check.refs.emplace(arg, ref);
    }
    if (jc.contains("trials")) {
      if (!jc["trials"].is_number_integer() || jc["trials"].get<int>() < 1)
        throw ParseError("trials must be a positive integer", path + "/trials");
      check.trials = jc["trials"].get<int>();
    }
    sc.checks.push_back(std::move(check));
  }
  return sc;
}

/// Canonical JSON rendering of a scenario (round-trips through
/// parse_scenario).
inline std::string render_scenario(const Scenario& sc) {
  Json doc;
  doc["schema"] = kScenarioSchema;
  doc["name"] = sc.name;
  if (!sc.description.empty()) doc["description"] = sc.description;
  Json coords = Json::array();
  for (const auto& c : sc.coordinates) coords.push_back(c);
  doc["coordinates"] = std::move(coords);
  doc["orientation"] = sc.orientation;
  Json metric = Json::array();
  for (int i = 1; i <= kDim; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= kDim; ++j) row.push_back(sc.metric(i, j).to_string());
    metric.push_back(std::move(row));
  }
  doc["metric"] = std::move(metric);
  if (!sc.scalars.empty()) {
    Json scalars;
    for (const auto& [k, v] : sc.scalars) scalars[k] = v.to_string(sc.coordinates);
    doc["scalars"] = std::move(scalars);
  }
  if (!sc.forms.empty()) {
    Json forms;
    for (const auto& [k, v] : sc.forms)
      forms[k] = detail::form_to_json(v, sc.coordinates);
    doc["forms"] = std::move(forms);
  }
  if (!sc.fields.empty()) {
    Json fields;
    for (const auto& [k, v] : sc.fields)
      fields[k] = detail::field_to_json(v, sc.coordinates);
    doc["fields"] = std::move(fields);
  }
  Json checks = Json::array();
  for (const auto& c : sc.checks) {
    Json jc;
    jc["type"] = c.type;
    for (const auto& [arg, kind] : check_signatures().at(c.type)) {
      (void)kind;
      jc[arg] = c.refs.at(arg);
    }
    if (c.trials) jc["trials"] = *c.trials;
    checks.push_back(std::move(jc));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

/// The aggregated result of running a scenario's check list.
struct RunReport {
  std::string scenario;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::pair<std::string, CheckReport>> checks;

  /// "pass", "sampled" (passed, but some clause rests on sampling),
  /// "fail", or "no checks".
  std::string overall() const {
    if (checks.empty()) return "no checks";
    bool sampled = false;
    for (const auto& [type, report] : checks) {
      if (!report.passed()) return "fail";
      if (report.has_sampled()) sampled = true;
    }
    return sampled ? "sampled" : "pass";
  }
};

// Executes the scenario's checks in order. Per-check errors become failed
// clauses; the remaining checks still run.
inline RunReport run_checks(const Scenario& sc, const SamplingSpec& spec = {}) {
  RunReport run;
  run.scenario = sc.name;
  run.seed = spec.seed;

  std::map<std::string, G2Structure> structures;
  auto structure_for = [&](const std::string& phi_name) -> const G2Structure& {
    auto it = structures.find(phi_name);
    if (it == structures.end())
      it = structures
               .emplace(phi_name, G2Structure(sc.forms.at(phi_name), sc.metric,
                                              sc.orientation))
               .first;
    return it->second;
  };

  for (const auto& check : sc.checks) {
    CheckReport report(check.type);
    try {
      if (check.type == "torsion") {
        const auto& s = structure_for(check.refs.at("phi"));
        const auto [dphi_zero, dstarphi_zero] = torsion_flags(s);
        report = CheckReport("torsion");
        if (dphi_zero)
          report.pass("dφ = 0");
        else
          report.fail("dφ = 0", exterior_derivative(s.phi()).to_string());
        if (dstarphi_zero)
          report.pass("d(*φ) = 0");
        else
          report.fail("d(*φ) = 0",
                      exterior_derivative(s.star_phi()).to_string());
      } else if (check.type == "metric_compat") {
        const auto& s = structure_for(check.refs.at("phi"));
        report = verify_metric_compat(s.phi(), s.metric(), s.vol());
        // Numeric cross-check of the extracted metric at the origin.
        const NumericMetric nm = metric_from_phi(s.phi(), Point::origin());
        double max_err = 0.0;
        for (int i = 1; i <= kDim; ++i)
          for (int j = 1; j <= kDim; ++j) {
            const double want = s.metric()(i, j).to_double();
            const double got =
                nm.g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            max_err = std::max(max_err, std::abs(want - got));
          }
        char buf[64];
        std::snprintf(buf, sizeof buf, "max entry error %.3e", max_err);
        if (max_err <= spec.numeric_tol)
          report.pass("numeric metric extraction matches declaration", buf);
        else
          report.fail("numeric metric extraction matches declaration", buf);
      } else if (check.type == "contact_certificate") {
        const ContactCertificate cert =
            contact_certificate(sc.forms.at(check.refs.at("alpha")), spec);
        report = CheckReport("contact_certificate");
        report.add(certificate_clause("α ∧ (dα)³ nowhere-zero", cert));
        report.add_derived("contact_volume", cert.top.to_string());
      } else if (check.type == "reeb") {
        report = reeb_verify(sc.forms.at(check.refs.at("alpha")),
                             sc.fields.at(check.refs.at("R")));
      } else if (check.type == "acms") {
        const auto& s = structure_for(check.refs.at("phi"));
        const AlmostContactMetricStructure acms =
            build_acms(s, sc.fields.at(check.refs.at("R")));
        report = verify_acs(acms.acs.J, acms.acs.R, acms.acs.alpha);
        report.absorb(verify_compatible_metric(acms), "");
      } else if (check.type == "associated") {
        const auto& s = structure_for(check.refs.at("phi"));
        AlmostContactMetricStructure acms =
            build_acms(s, sc.fields.at(check.refs.at("R")));
        acms.acs.alpha = sc.forms.at(check.refs.at("alpha"));
        report = verify_associated(acms, &s, spec);
      } else if (check.type == "a_compatible") {
        const auto& s = structure_for(check.refs.at("phi"));
        report = check_a_compatible(s, sc.forms.at(check.refs.at("alpha")),
                                    sc.fields.at(check.refs.at("R")), spec);
      } else if (check.type == "b_compatible") {
        const auto& s = structure_for(check.refs.at("phi"));
        report = check_b_compatible(s, sc.forms.at(check.refs.at("alpha")),
                                    sc.fields.at(check.refs.at("X")),
                                    sc.fields.at(check.refs.at("Y")), spec);
      } else if (check.type == "contact_g2") {
        const auto& s = structure_for(check.refs.at("phi"));
        const ContactG2Structure c{s, sc.fields.at(check.refs.at("R")),
                                   sc.forms.at(check.refs.at("alpha")),
                                   sc.scalars.at(check.refs.at("f")),
                                   sc.scalars.at(check.refs.at("g"))};
        report = check_contact_g2(c, spec);
      } else if (check.type == "vector_triple") {
        const auto& s = structure_for(check.refs.at("phi"));
        report = check_vector_triple(s, sc.fields.at(check.refs.at("X")),
                                     sc.fields.at(check.refs.at("Y")),
                                     sc.fields.at(check.refs.at("Z")), spec);
      } else if (check.type == "identity_suite") {
        const auto& s = structure_for(check.refs.at("phi"));
        report = identity_suite(s, check.trials.value_or(100), spec.seed);
      } else if (check.type == "lambda2") {
        const auto& s = structure_for(check.refs.at("phi"));
        const KForm& beta = sc.forms.at(check.refs.at("beta"));
        const Lambda2Split split = project_lambda2(beta, s);
        report = CheckReport("lambda2");
        if (split.part7 + split.part14 == beta)
          report.pass("part7 + part14 = β");
        else
          report.fail("part7 + part14 = β",
                      (split.part7 + split.part14 - beta).to_string());
        const KForm r7 =
            s.star(wedge(s.phi(), split.part7)) - split.part7.scaled(Rational(2));
        if (r7.is_zero())
          report.pass("*(φ ∧ part7) = 2 part7");
        else
          report.fail("*(φ ∧ part7) = 2 part7", r7.to_string());
        const KForm r14 = wedge(s.star_phi(), split.part14);
        if (r14.is_zero())
          report.pass("*φ ∧ part14 = 0");
        else
          report.fail("*φ ∧ part14 = 0", r14.to_string());
        report.add_derived("part7", split.part7.to_string());
        report.add_derived("part14", split.part14.to_string());
      } else {
        report.fail("dispatch", "unknown check type");
      }
    } catch (const Error& e) {
      report = CheckReport(check.type);
      report.fail("error", e.what());
    }
    run.checks.emplace_back(check.type, std::move(report));
  }
  return run;
}

inline Json report_to_json(const RunReport& run) {
  Json doc;
  doc["schema"] = 1;
  doc["scenario"] = run.scenario;
  doc["seed"] = run.seed;
  doc["overall"] = run.overall();
  Json checks = Json::array();
  for (const auto& [type, report] : run.checks) {
    Json jc;
    jc["type"] = type;
    std::string verdict = "pass";
    if (!report.passed())
      verdict = "fail";
    else if (report.has_sampled())
      verdict = "sampled";
    jc["verdict"] = verdict;
    Json clauses = Json::array();
    for (const auto& clause : report.clauses()) {
      Json jcl;
      jcl["name"] = clause.name;
      jcl["verdict"] = std::string(to_string(clause.verdict));
      jcl["detail"] = clause.detail;
      jcl["residual"] = clause.residual ? Json(*clause.residual) : Json(nullptr);
      jcl["witness"] = clause.witness ? Json(*clause.witness) : Json(nullptr);
      clauses.push_back(std::move(jcl));
    }
    jc["clauses"] = std::move(clauses);
    Json derived;
    for (const auto& [k, v] : report.derived()) derived[k] = v;
    jc["derived"] = std::move(derived);
    checks.push_back(std::move(jc));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

enum class ReportFormat { Text, JsonFormat };

inline std::string render_report(const RunReport& run, ReportFormat format) {
  if (format == ReportFormat::JsonFormat) return report_to_json(run).dump(2) + "\n";
  std::string out;
  out += "scenario " + run.scenario + " (seed " + std::to_string(run.seed) + ")\n";
  for (const auto& [type, report] : run.checks) {
    out += "== check " + type + " ==\n";
    for (const auto& clause : report.clauses()) {
      std::string tag(to_string(clause.verdict));
      if (clause.verdict == Verdict::Pass) tag = "PASS";
      if (clause.verdict == Verdict::Proven) tag = "PROVEN";
      if (clause.verdict == Verdict::Sampled) tag = "SAMPLED";
      if (clause.verdict == Verdict::Failed) tag = "FAIL";
      if (clause.verdict == Verdict::Skipped) tag = "SKIP";
      out += tag + "  " + clause.name;
      if (clause.verdict == Verdict::Pass) out += " (exact)";
      if (!clause.detail.empty()) out += " — " + clause.detail;
      out += "\n";
      if (clause.residual) out += "      residual: " + *clause.residual + "\n";
      if (clause.witness) out += "      witness: " + *clause.witness + "\n";
    }
    for (const auto& [k, v] : report.derived())
      out += "      " + k + " = " + v + "\n";
  }
  out += "overall: " + run.overall() + "\n";
  return out;
}

}  // namespace g2kit
