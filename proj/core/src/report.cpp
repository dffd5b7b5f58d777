#include "coxlab/report.hpp"

#include <algorithm>

namespace coxlab {

using nlohmann::json;

json poset_json(const Poset& p) {
  json doc;
  doc["elements"] = p.labels();
  std::vector<std::pair<std::string, std::string>> covers;
  covers.reserve(p.covers().size());
  for (const auto& [a, b] : p.covers()) covers.emplace_back(p.label(a), p.label(b));
  std::sort(covers.begin(), covers.end());
  auto arr = json::array();
  for (const auto& [a, b] : covers) arr.push_back({a, b});
  doc["covers"] = arr;
  return doc;
}

json matrix_json(const Matrix& m) {
  auto rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& v = m(i, j);
      if (v.is_integer() && v.num().fits_slong_p()) {
        row.push_back(v.to_long());
      } else {
        row.push_back(v.str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json permutation_json(const Permutation& p) {
  auto arr = json::array();
  for (std::size_t v : p.one_line_1based()) arr.push_back(v);
  return arr;
}

json optional_permutation_json(const std::optional<Permutation>& p) {
  return p ? permutation_json(*p) : json(nullptr);
}

json optional_bool_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

json profile_json(const Poset& p, const HomologicalProfile& profile) {
  json per_element = json::object();
  for (std::size_t x = 0; x < p.size(); ++x) {
    json one;
    one["grade"] = profile.grade[x];
    one["cograde"] = profile.cograde[x];
    one["pdim_injective"] = profile.pdim_injective[x];
    one["idim_projective"] = profile.idim_projective[x];
    one["pdim_simple"] = profile.pdim_simple[x];
    one["perfect"] = static_cast<bool>(profile.perfect[x]);
    per_element[p.label(x)] = std::move(one);
  }
  json doc;
  doc["elements"] = std::move(per_element);
  doc["gldim"] = profile.gldim;
  doc["gorenstein_level"] = profile.gorenstein_level;
  doc["dominant_numbers"] = profile.dominant_numbers;
  return doc;
}

json bijection_report_json(const BijectionReport& report) {
  json doc;
  doc["poset"] = poset_json(report.poset);
  auto ordering = json::array();
  for (std::size_t x : report.ordering) ordering.push_back(report.poset.label(x));
  doc["ordering"] = std::move(ordering);
  doc["cartan"] = matrix_json(report.cartan);
  doc["coxeter"] = matrix_json(report.coxeter);
  json bruhat_doc;
  bruhat_doc["p"] = permutation_json(report.bruhat_data.p);
  auto diag = json::array();
  for (const Rational& d : report.bruhat_data.u2.diagonal()) diag.push_back(d.str());
  bruhat_doc["u2_diag"] = std::move(diag);
  bruhat_doc["u1_is_identity"] = report.bruhat_data.u1.is_identity();
  doc["bruhat"] = std::move(bruhat_doc);
  doc["permanent"] = report.permanent_value ? json(report.permanent_value->str()) : json(nullptr);
  doc["profile"] = profile_json(report.poset, report.profile);
  json verdicts;
  verdicts["lattice"] = report.is_lattice;
  verdicts["distributive"] = report.distributive;
  verdicts["auslander_gorenstein"] = report.profile.is_auslander_gorenstein;
  verdicts["diagonal"] =
      report.profile.is_auslander_gorenstein ? json(report.profile.is_diagonal) : json(nullptr);
  doc["verdicts"] = std::move(verdicts);
  json perms;
  perms["grade_ar"] = optional_permutation_json(report.grade_ar);
  perms["grade_corollary"] = optional_permutation_json(report.grade_corollary);
  perms["coxeter"] = permutation_json(report.coxeter_perm);
  perms["rowmotion"] = optional_permutation_json(report.rowmotion_perm);
  doc["permutations"] = std::move(perms);
  json flags;
  flags["ar_eq_corollary"] = optional_bool_json(report.ar_eq_corollary);
  flags["grade_eq_rowmotion"] = optional_bool_json(report.grade_eq_rowmotion);
  flags["coxeter_matches_grade"] = optional_bool_json(report.coxeter_matches_grade);
  flags["pu_form"] = report.pu_form;
  doc["coincidences"] = std::move(flags);
  return doc;
}

json theorem_report_json(const TheoremReport& report) {
  json doc;
  doc["elements"] = report.elements;
  doc["auslander_gorenstein"] = report.auslander_gorenstein;
  doc["lattice"] = report.is_lattice;
  doc["distributive"] = report.distributive;
  doc["pu_form"] = report.pu_form;
  doc["u2_diag_pm1"] = report.u2_diag_pm1;
  doc["permanent"] = report.permanent_value ? json(report.permanent_value->str()) : json(nullptr);
  doc["permanent_pm1"] = optional_bool_json(report.permanent_pm1);
  doc["lambda_grade_identity"] = optional_bool_json(report.lambda_grade_identity);
  doc["rowmotion_identity"] = optional_bool_json(report.rowmotion_identity);
  doc["failed"] = report.failed;
  doc["ok"] = report.ok();
  return doc;
}

json probe_report_json(const ProbeReport& report) {
  json rows = json::array();
  for (const ProbeRow& row : report.rows) {
    json one;
    one["name"] = row.name;
    one["elements"] = row.elements;
    one["auslander_gorenstein"] = row.auslander_gorenstein;
    one["pu_form"] = row.pu_form;
    one["agree"] = row.agree;
    one["permanent"] = row.permanent_value ? json(row.permanent_value->str()) : json(nullptr);
    rows.push_back(std::move(one));
  }
  json doc;
  doc["rows"] = std::move(rows);
  doc["agreements"] = report.agreements;
  doc["counterexamples"] = report.counterexamples;
  doc["all_agree"] = report.all_agree();
  return doc;
}

}  // namespace coxlab
