#include "coxlab/homology.hpp"

#include <algorithm>

#include "coxlab/error.hpp"

namespace coxlab {

HomologyEngine::HomologyEngine(PosetPtr p) : p_(std::move(p)) {
  const std::size_t n = p_->size();
  inj_res_.resize(n);
  proj_cores_.resize(n);
  simple_res_.resize(n);
}

const Resolution& HomologyEngine::regular_coresolution() {
  if (!regular_) {
    regular_ = min_injective_coresolution(regular_module(p_), std::nullopt,
                                          /*keep_morphisms=*/false);
  }
  return *regular_;
}

const Resolution& HomologyEngine::cogenerator_resolution() {
  if (!cogen_) {
    cogen_ = min_projective_resolution(cogenerator(p_), std::nullopt, /*keep_morphisms=*/false);
  }
  return *cogen_;
}

const Resolution& HomologyEngine::injective_resolution(std::size_t x) {
  if (!inj_res_[x]) {
    inj_res_[x] = min_projective_resolution(injective(p_, x), std::nullopt,
                                            /*keep_morphisms=*/false);
  }
  return *inj_res_[x];
}

const Resolution& HomologyEngine::projective_coresolution(std::size_t x) {
  if (!proj_cores_[x]) {
    proj_cores_[x] = min_injective_coresolution(projective(p_, x), std::nullopt,
                                                /*keep_morphisms=*/false);
  }
  return *proj_cores_[x];
}

const Resolution& HomologyEngine::simple_resolution(std::size_t x) {
  if (!simple_res_[x]) {
    simple_res_[x] = min_projective_resolution(simple(p_, x), std::nullopt,
                                               /*keep_morphisms=*/false);
  }
  return *simple_res_[x];
}

std::size_t HomologyEngine::grade(std::size_t x) {
  const Resolution& res = regular_coresolution();
  for (std::size_t l = 0; l < res.terms.size(); ++l)
    if (res.terms[l][x] > 0) return l;
  fail(errc::internal_inconsistency,
       "I(" + p_->label(x) + ") missing from the coresolution of the regular module");
}

std::size_t HomologyEngine::cograde(std::size_t x) {
  const Resolution& res = cogenerator_resolution();
  for (std::size_t l = 0; l < res.terms.size(); ++l)
    if (res.terms[l][x] > 0) return l;
  fail(errc::internal_inconsistency,
       "P(" + p_->label(x) + ") missing from the resolution of the cogenerator");
}

std::size_t HomologyEngine::pdim_injective(std::size_t x) { return injective_resolution(x).length(); }

std::size_t HomologyEngine::idim_projective(std::size_t x) {
  return projective_coresolution(x).length();
}

std::size_t HomologyEngine::pdim_simple(std::size_t x) { return simple_resolution(x).length(); }

std::size_t HomologyEngine::gldim() {
  std::size_t best = 0;
  for (std::size_t x = 0; x < p_->size(); ++x) best = std::max(best, pdim_simple(x));
  return best;
}

std::size_t HomologyEngine::term_pdim(std::size_t i) {
  const Resolution& res = regular_coresolution();
  if (i >= res.terms.size()) return 0;
  std::size_t best = 0;
  bool any = false;
  for (std::size_t x = 0; x < p_->size(); ++x) {
    if (res.terms[i][x] == 0) continue;
    best = std::max(best, pdim_injective(x));
    any = true;
  }
  if (!any) fail(errc::internal_inconsistency, "empty coresolution term");
  return best;
}

bool HomologyEngine::is_n_gorenstein(std::size_t n) {
  const Resolution& res = regular_coresolution();
  const std::size_t upto = std::min(n, res.terms.size());
  for (std::size_t i = 0; i < upto; ++i)
    if (term_pdim(i) > i) return false;
  return true;
}

std::size_t HomologyEngine::gorenstein_level() {
  const Resolution& res = regular_coresolution();
  for (std::size_t i = 0; i < res.terms.size(); ++i)
    if (term_pdim(i) > i) return i;
  return res.terms.size();  // idim(A) + 1: n-Gorenstein for every n
}

bool HomologyEngine::is_auslander_gorenstein() {
  bool by_grade = true;
  for (std::size_t x = 0; x < p_->size(); ++x) {
    if (grade(x) != pdim_injective(x)) {
      by_grade = false;
      break;
    }
  }
  const Resolution& res = regular_coresolution();
  const bool by_definition = is_n_gorenstein(res.terms.size());
  if (by_grade != by_definition) {
    fail(errc::internal_inconsistency, "grade route and coresolution route disagree");
  }
  return by_definition;
}

std::set<std::size_t> HomologyEngine::dominant_numbers() {
  const Resolution& res = regular_coresolution();
  std::set<std::size_t> out;
  for (std::size_t l = 0; l < res.terms.size(); ++l) {
    bool dominant = true;
    for (std::size_t i = 0; i < l && dominant; ++i)
      if (term_pdim(i) >= term_pdim(l)) dominant = false;
    if (dominant) out.insert(l);
  }
  return out;
}

std::vector<std::size_t> HomologyEngine::perfect_simples() {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p_->size(); ++x)
    if (grade(x) == pdim_simple(x)) out.push_back(x);
  return out;
}

bool HomologyEngine::is_diagonal() {
  if (!is_auslander_gorenstein()) {
    fail(errc::not_auslander_gorenstein, "diagonality needs an Auslander-Gorenstein algebra");
  }
  return perfect_simples().size() == p_->size();
}

Permutation HomologyEngine::grade_permutation_ar() {
  std::vector<std::size_t> images(p_->size());
  for (std::size_t x = 0; x < p_->size(); ++x) {
    const Resolution& res = injective_resolution(x);
    const auto& last = res.terms.back();
    std::size_t count = 0, hit = 0;
    for (std::size_t y = 0; y < last.size(); ++y) {
      count += last[y];
      if (last[y] > 0) hit = y;
    }
    if (count != 1) {
      fail(errc::last_term_decomposable,
           "final syzygy of I(" + p_->label(x) + ") splits into " + std::to_string(count) +
               " indecomposables");
    }
    images[x] = hit;
  }
  return Permutation(std::move(images));
}

Permutation HomologyEngine::grade_permutation_corollary() {
  std::vector<std::size_t> images(p_->size());
  for (std::size_t x = 0; x < p_->size(); ++x) {
    const std::size_t r = grade(x);
    std::vector<std::size_t> candidates;
    for (std::size_t y = 0; y < p_->size(); ++y) {
      if (idim_projective(y) != r) continue;
      const Resolution& cores = projective_coresolution(y);
      for (const auto& term : cores.terms) {
        if (term[x] > 0) {
          candidates.push_back(y);
          break;
        }
      }
    }
    if (candidates.size() != 1) {
      fail(errc::not_unique, "grade bijection candidate count " +
                                 std::to_string(candidates.size()) + " at " + p_->label(x));
    }
    images[x] = candidates.front();
  }
  return Permutation(std::move(images));
}

HomologicalProfile HomologyEngine::profile() {
  const std::size_t n = p_->size();
  HomologicalProfile prof;
  prof.grade.resize(n);
  prof.cograde.resize(n);
  prof.pdim_injective.resize(n);
  prof.idim_projective.resize(n);
  prof.pdim_simple.resize(n);
  prof.perfect.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    prof.grade[x] = grade(x);
    prof.cograde[x] = cograde(x);
    prof.pdim_injective[x] = pdim_injective(x);
    prof.idim_projective[x] = idim_projective(x);
    prof.pdim_simple[x] = pdim_simple(x);
    prof.perfect[x] = prof.grade[x] == prof.pdim_simple[x];
  }
  prof.gldim = gldim();
  prof.gorenstein_level = gorenstein_level();
  prof.is_auslander_gorenstein = is_auslander_gorenstein();
  prof.is_diagonal =
      prof.is_auslander_gorenstein &&
      std::all_of(prof.perfect.begin(), prof.perfect.end(), [](bool b) { return b; });
  prof.dominant_numbers = dominant_numbers();
  return prof;
}

namespace {

HomologyEngine engine_for(const Poset& p) { return HomologyEngine(std::make_shared<Poset>(p)); }

}  // namespace

std::size_t grade(const Poset& p, std::size_t x) { return engine_for(p).grade(x); }
std::size_t cograde(const Poset& p, std::size_t x) { return engine_for(p).cograde(x); }
std::size_t gldim(const Poset& p) { return engine_for(p).gldim(); }
bool is_n_gorenstein(const Poset& p, std::size_t n) { return engine_for(p).is_n_gorenstein(n); }
bool is_auslander_gorenstein(const Poset& p) { return engine_for(p).is_auslander_gorenstein(); }
std::set<std::size_t> dominant_numbers(const Poset& p) { return engine_for(p).dominant_numbers(); }
std::vector<std::size_t> perfect_simples(const Poset& p) { return engine_for(p).perfect_simples(); }
bool is_diagonal(const Poset& p) { return engine_for(p).is_diagonal(); }
Permutation grade_permutation_ar(const Poset& p) { return engine_for(p).grade_permutation_ar(); }
Permutation grade_permutation_corollary(const Poset& p) {
  return engine_for(p).grade_permutation_corollary();
}
HomologicalProfile homological_profile(const Poset& p) { return engine_for(p).profile(); }

}  // namespace coxlab
