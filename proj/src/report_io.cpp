#include "weylfilt/report_io.hpp"

#include <sstream>

namespace weylfilt {

Json weight_json(const Weight& w) { return Json(w.coords); }

// the stable "coords:multiplicity" entries, sorted by weight
Json character_json(const FormalCharacter& c) {
  Json terms = Json::array();
  for (const auto& [w, m] : c.terms()) terms.push_back(w.to_string() + ":" + std::to_string(m));
  return terms;
}

Json chi_json(const ChiCombination& chi) {
  Json out = Json::array();
  for (const ChiTerm& t : chi) {
    Json e;
    e["weight"] = weight_json(t.weight);
    e["coeff"] = t.coeff;
    out.push_back(std::move(e));
  }
  return out;
}

Json report_json(const FiltrationReport& r) {
  Json j;
  j["schema_version"] = 1;
  j["lambda"] = weight_json(r.lambda);
  j["p"] = r.p;
  j["cartan_type"] = r.cartan_type.name();
  Json sections = Json::array();
  for (const auto& s : r.sections) {
    Json e;
    e["mu"] = weight_json(s.mu);
    e["multiplicity"] = s.multiplicity;
    sections.push_back(std::move(e));
  }
  j["sections"] = std::move(sections);
  j["nonnegative"] = r.nonnegative;
  j["residual_zero"] = r.residual_zero;
  j["dimension_identity"] = r.dimension_identity;
  j["regular"] = r.regular;
  j["in_jantzen_region"] = r.in_jantzen_region;
  j["p_ge_2h_minus_2"] = r.p_ge_2h_minus_2;
  Json used = Json::array();
  for (const Weight& w : r.lcf_weights_used) used.push_back(weight_json(w));
  j["lcf_weights_used"] = std::move(used);
  Json sing = Json::array();
  for (const Weight& w : r.singular_lcf_weights) sing.push_back(weight_json(w));
  j["singular_lcf_weights"] = std::move(sing);
  return j;
}

namespace {

std::string weight_field(const Weight& w) {
  std::string s = w.to_string();
  for (char& c : s)
    if (c == ',') c = ' ';
  return s;
}

}  // namespace

std::string report_csv(const FiltrationReport& r, bool header) {
  std::ostringstream out;
  if (header) out << "cartan_type,p,lambda,mu,multiplicity\n";
  for (const auto& s : r.sections)
    out << r.cartan_type.name() << ',' << r.p << ',' << weight_field(r.lambda) << ',' << weight_field(s.mu) << ','
        << s.multiplicity << '\n';
  return out.str();
}

Json batch_json(const BatchSummary& s) {
  Json j;
  j["schema_version"] = 1;
  j["bound"] = s.bound;
  j["total"] = s.total;
  j["nonnegative_count"] = s.nonnegative_count;
  j["residual_zero_count"] = s.residual_zero_count;
  j["dimension_identity_count"] = s.dimension_identity_count;
  j["regular_count"] = s.regular_count;
  j["jantzen_count"] = s.jantzen_count;
  j["singular_lcf_count"] = s.singular_lcf_count;
  j["error_count"] = s.error_count;
  Json entries = Json::array();
  for (const BatchEntry& e : s.entries) {
    Json je;
    je["lambda"] = weight_json(e.lambda);
    if (e.report) {
      je["report"] = report_json(*e.report);
    } else {
      Json err;
      err["kind"] = static_cast<int>(e.error_kind);
      err["message"] = e.error_message;
      je["error"] = std::move(err);
    }
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string batch_csv(const BatchSummary& s) {
  std::ostringstream out;
  out << "cartan_type,p,lambda,mu,multiplicity\n";
  for (const BatchEntry& e : s.entries)
    if (e.report) out << report_csv(*e.report, false);
  return out.str();
}

Json error_json(const Error& e) {
  Json j;
  Json inner;
  switch (e.kind()) {
    case ErrorKind::domain: inner["kind"] = "domain"; break;
    case ErrorKind::resource: inner["kind"] = "resource"; break;
    case ErrorKind::consistency: inner["kind"] = "consistency"; break;
  }
  inner["exit_code"] = exit_code(e);
  inner["message"] = e.what();
  j["error"] = std::move(inner);
  return j;
}

}  // namespace weylfilt
