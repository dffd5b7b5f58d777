#include "coxlab/analysis.hpp"

#include <algorithm>

#include "coxlab/error.hpp"

namespace coxlab {

std::vector<std::size_t> resolve_ordering(const OrderingChoice& choice, HomologyEngine& engine) {
  const Poset& p = engine.poset();
  switch (choice.kind) {
    case OrderingChoice::Kind::linext:
      return p.linext();
    case OrderingChoice::Kind::admissible:
      return admissible_ordering(engine).sequence;
    case OrderingChoice::Kind::explicit_order: {
      if (choice.sequence.size() != p.size()) {
        fail(errc::invalid_parameter, "explicit ordering has wrong length");
      }
      std::vector<bool> seen(p.size(), false);
      for (std::size_t x : choice.sequence) {
        if (x >= p.size() || seen[x]) {
          fail(errc::invalid_parameter, "explicit ordering is not a permutation of the elements");
        }
        seen[x] = true;
      }
      return choice.sequence;
    }
  }
  fail(errc::invalid_parameter, "unknown ordering kind");
}

OrderingChoice admissible_ordering(HomologyEngine& engine) {
  std::vector<std::size_t> order = engine.poset().linext();
  std::stable_sort(order.begin(), order.end(), [&engine](std::size_t a, std::size_t b) {
    return engine.grade(a) > engine.grade(b);
  });
  return OrderingChoice::explicit_order(std::move(order));
}

OrderingChoice admissible_ordering(const Poset& p) {
  HomologyEngine engine(std::make_shared<Poset>(p));
  return admissible_ordering(engine);
}

Matrix cartan_matrix(const Poset& p, const std::vector<std::size_t>& order) {
  const std::size_t n = p.size();
  if (order.size() != n) fail(errc::invalid_parameter, "ordering length");
  Matrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.le(order[j], order[i])) w(i, j) = Rational(1);
  return w;
}

Matrix cartan_matrix(const Poset& p) { return cartan_matrix(p, p.linext()); }

Matrix coxeter_matrix(const Poset& p, const std::vector<std::size_t>& order) {
  Matrix w = cartan_matrix(p, order);
  return -(w.transpose() * invert(w));
}

Matrix coxeter_matrix(const Poset& p) { return coxeter_matrix(p, p.linext()); }

Permutation coxeter_permutation(const Poset& p, const std::vector<std::size_t>& order) {
  Matrix c = coxeter_matrix(p, order);
  if (has_pu_form(c)) {
    auto profile = leftmost_profile(c);
    std::vector<std::size_t> images(profile.size());
    for (std::size_t i = 0; i < profile.size(); ++i) images[i] = *profile[i];
    return Permutation(std::move(images));
  }
  return bruhat(c).p;
}

bool distributive_via_coxeter(const LatticeStructure& l) {
  return has_pu_form(coxeter_matrix(l.base));
}

namespace {

// Converts an element-to-element map into a permutation of ordering positions.
Permutation to_positions(const std::vector<std::size_t>& order, const Permutation& on_elements) {
  std::vector<std::size_t> pos_of(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos_of[order[i]] = i;
  std::vector<std::size_t> images(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) images[i] = pos_of[on_elements(order[i])];
  return Permutation(std::move(images));
}

bool diag_is_pm1(const Matrix& m) {
  for (const Rational& d : m.diagonal())
    if (d != Rational(1) && d != Rational(-1)) return false;
  return true;
}

bool lambda_fixes(const Matrix& c, const Permutation& perm) {
  auto profile = leftmost_profile(c);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto& col = profile[perm(i)];
    if (!col || *col != i) return false;
  }
  return true;
}

}  // namespace

TheoremReport verify_main_theorems(const Poset& p, std::size_t max_permanent_n) {
  TheoremReport report;
  report.elements = p.size();
  HomologyEngine engine(std::make_shared<Poset>(p));
  report.auslander_gorenstein = engine.is_auslander_gorenstein();

  auto lattice_result = lattice_structure(p);
  std::optional<LatticeStructure> lattice;
  if (auto* l = std::get_if<LatticeStructure>(&lattice_result)) {
    report.is_lattice = true;
    report.distributive = is_distributive(*l).distributive;
    lattice = std::move(*l);
  }

  const auto adm = resolve_ordering(OrderingChoice::admissible(), engine);
  const Matrix c_adm = coxeter_matrix(p, adm);
  report.pu_form = has_pu_form(c_adm);
  auto factorisation = bruhat(c_adm);
  report.u2_diag_pm1 = diag_is_pm1(factorisation.u2);
  if (p.size() <= max_permanent_n) {
    report.permanent_value = permanent(c_adm, max_permanent_n);
    report.permanent_pm1 =
        *report.permanent_value == Rational(1) || *report.permanent_value == Rational(-1);
  }
  if (report.auslander_gorenstein) {
    report.lambda_grade_identity =
        lambda_fixes(c_adm, to_positions(adm, engine.grade_permutation_ar()));
  }
  if (report.distributive) {
    const Matrix c_lin = coxeter_matrix(p);
    Permutation row(rowmotion_map(*lattice));
    report.rowmotion_identity = lambda_fixes(c_lin, to_positions(p.linext(), row));
  }

  auto record = [&report](bool holds, const char* name) {
    if (!holds) report.failed.emplace_back(name);
  };
  record(report.pu_form, "pu_form");
  record(report.u2_diag_pm1, "u2_diag_pm1");
  if (report.permanent_pm1) record(*report.permanent_pm1, "permanent_pm1");
  if (report.lambda_grade_identity) record(*report.lambda_grade_identity, "lambda_grade_identity");
  if (report.rowmotion_identity) record(*report.rowmotion_identity, "rowmotion_identity");
  return report;
}

ProbeReport question_probe(const std::vector<std::pair<std::string, Poset>>& corpus,
                           std::optional<std::size_t> permanent_guard) {
  ProbeReport report;
  for (const auto& [name, p] : corpus) {
    if (!p.is_bounded()) {
      fail(errc::invalid_parameter, "probe corpus member '" + name + "' is not bounded");
    }
    ProbeRow row;
    row.name = name;
    row.elements = p.size();
    HomologyEngine engine(std::make_shared<Poset>(p));
    row.auslander_gorenstein = engine.is_auslander_gorenstein();
    const Matrix c = coxeter_matrix(p);
    row.pu_form = has_pu_form(c);
    row.agree = row.auslander_gorenstein == row.pu_form;
    if (permanent_guard && p.size() <= *permanent_guard) {
      row.permanent_value = permanent(c, *permanent_guard);
    }
    if (row.agree) {
      ++report.agreements;
    } else {
      report.counterexamples.push_back(name);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

BijectionReport bijection_report(const Poset& p, const OrderingChoice& choice,
                                 std::size_t max_permanent_n) {
  BijectionReport report;
  report.poset = p;
  HomologyEngine engine(std::make_shared<Poset>(p));
  report.ordering = resolve_ordering(choice, engine);
  report.cartan = cartan_matrix(p, report.ordering);
  report.coxeter = coxeter_matrix(p, report.ordering);
  report.bruhat_data = bruhat(report.coxeter);
  report.pu_form = has_pu_form(report.coxeter);
  if (p.size() <= max_permanent_n) {
    report.permanent_value = permanent(report.coxeter, max_permanent_n);
  }
  report.profile = engine.profile();

  auto lattice_result = lattice_structure(p);
  std::optional<LatticeStructure> lattice;
  if (auto* l = std::get_if<LatticeStructure>(&lattice_result)) {
    report.is_lattice = true;
    report.distributive = is_distributive(*l).distributive;
    lattice = std::move(*l);
  }

  report.coxeter_perm = report.bruhat_data.p;
  if (report.profile.is_auslander_gorenstein) {
    report.grade_ar = to_positions(report.ordering, engine.grade_permutation_ar());
    report.grade_corollary = to_positions(report.ordering, engine.grade_permutation_corollary());
    report.ar_eq_corollary = *report.grade_ar == *report.grade_corollary;
    report.coxeter_matches_grade = lambda_fixes(report.coxeter, *report.grade_ar);
  }
  if (report.distributive) {
    report.rowmotion_perm = to_positions(report.ordering, Permutation(rowmotion_map(*lattice)));
    if (report.grade_ar) {
      report.grade_eq_rowmotion = *report.grade_ar == *report.rowmotion_perm;
    }
  }
  return report;
}

}  // namespace coxlab
