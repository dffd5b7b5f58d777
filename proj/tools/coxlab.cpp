// coxlab: exact Cartan/Coxeter/Bruhat/permanent computations and homological
// verdicts for incidence algebras of finite posets.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "coxlab/analysis.hpp"
#include "coxlab/error.hpp"
#include "coxlab/generators.hpp"
#include "coxlab/report.hpp"

namespace {

using namespace coxlab;

struct Options {
  std::string gen_spec;
  std::string file_path;
  std::string matrix_path;
  std::string order = "linext";
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t max_elements = 0;  // 0: per-verb default
  std::size_t max_permanent_n = 12;
  // survey corpus
  std::size_t all_j = 0;
  std::vector<std::string> corpus_gens;
};

std::size_t default_max_elements(const std::string& verb) {
  if (verb == "homology" || verb == "bijections" || verb == "verify" || verb == "survey") return 20;
  return kPosetSizeGuard;
}

Poset load_poset(const Options& opt, const std::string& verb) {
  if (opt.gen_spec.empty() == opt.file_path.empty()) {
    throw CLI::ValidationError("exactly one of --gen and --file is required");
  }
  Poset p = opt.gen_spec.empty() ? Poset::parse_file(opt.file_path)
                                 : generate(opt.gen_spec, opt.seed);
  const std::size_t cap = opt.max_elements ? opt.max_elements : default_max_elements(verb);
  if (p.size() > cap) {
    fail(errc::cap_exceeded, std::to_string(p.size()) + " elements exceed --max-elements " +
                                 std::to_string(cap));
  }
  return p;
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return Matrix::parse(in);
}

OrderingChoice ordering_choice(const Options& opt, const Poset& p) {
  if (opt.order == "linext") return OrderingChoice::linext();
  if (opt.order == "admissible") return OrderingChoice::admissible();
  // Anything else is a path to a file listing all labels in the wanted order.
  std::ifstream in(opt.order);
  if (!in) fail(errc::parse_error, "cannot open ordering file '" + opt.order + "'");
  std::vector<std::size_t> seq;
  std::string label;
  while (in >> label) seq.push_back(p.index(label));
  return OrderingChoice::explicit_order(std::move(seq));
}

std::vector<std::size_t> resolved_ordering(const Options& opt, const Poset& p) {
  HomologyEngine engine(std::make_shared<Poset>(p));
  return resolve_ordering(ordering_choice(opt, p), engine);
}

void emit_json(const nlohmann::json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string ordering_line(const Poset& p, const std::vector<std::size_t>& order) {
  std::string out = "ordering:";
  for (std::size_t x : order) out += " " + p.label(x);
  return out;
}

std::string permutation_lines(const std::string& name, const Permutation& perm) {
  return name + ": " + perm.one_line_str() + "  cycles " + perm.cycle_str();
}

int run_info(const Options& opt) {
  Poset p = load_poset(opt, "info");
  auto lattice_result = lattice_structure(p);
  const auto* lattice = std::get_if<LatticeStructure>(&lattice_result);
  std::optional<DistributivityResult> dist;
  if (lattice) dist = is_distributive(*lattice);
  if (opt.format == "json") {
    nlohmann::json doc;
    doc["poset"] = poset_json(p);
    doc["elements"] = p.size();
    doc["covers"] = p.covers().size();
    nlohmann::json lin = nlohmann::json::array();
    for (std::size_t x : p.linext()) lin.push_back(p.label(x));
    doc["linext"] = std::move(lin);
    doc["bounded"] = p.is_bounded();
    doc["lattice"] = lattice != nullptr;
    doc["distributive"] = lattice ? nlohmann::json(dist->distributive) : nlohmann::json(nullptr);
    emit_json(doc);
    return 0;
  }
  std::cout << "elements: " << p.size() << "\n" << ordering_line(p, p.linext()) << "\ncovers:";
  for (const auto& [a, b] : p.covers()) std::cout << ' ' << p.label(a) << '<' << p.label(b);
  std::cout << "\nbounded: " << (p.is_bounded() ? "yes" : "no") << '\n';
  if (lattice) {
    std::cout << "lattice: yes (bottom " << p.label(lattice->bottom) << ", top "
              << p.label(lattice->top) << ")\n";
    if (dist->distributive) {
      std::cout << "distributive: yes\n";
    } else {
      const auto& w = *dist->witness;
      std::cout << "distributive: no (witness " << p.label(w[0]) << ", " << p.label(w[1]) << ", "
                << p.label(w[2]) << ")\n";
    }
  } else {
    const auto& failure = std::get<LatticeFailure>(lattice_result);
    std::cout << "lattice: no (pair " << p.label(failure.x) << ", " << p.label(failure.y)
              << " has no " << (failure.meet_failed ? "meet" : "join") << ")\n";
  }
  return 0;
}

int run_matrix_verb(const Options& opt, const std::string& verb) {
  Poset p = load_poset(opt, verb);
  auto order = resolved_ordering(opt, p);
  Matrix m = verb == "cartan" ? cartan_matrix(p, order) : coxeter_matrix(p, order);
  if (opt.format == "json") {
    nlohmann::json doc;
    doc["poset"] = poset_json(p);
    nlohmann::json ord = nlohmann::json::array();
    for (std::size_t x : order) ord.push_back(p.label(x));
    doc["ordering"] = std::move(ord);
    doc[verb] = matrix_json(m);
    emit_json(doc);
  } else if (opt.format == "matrix") {
    std::cout << m.format();
  } else {
    std::cout << ordering_line(p, order) << '\n' << m.pretty();
  }
  return 0;
}

int run_bruhat(const Options& opt) {
  Matrix m;
  if (!opt.matrix_path.empty()) {
    if (!opt.gen_spec.empty() || !opt.file_path.empty()) {
      throw CLI::ValidationError("--matrix excludes --gen/--file");
    }
    m = load_matrix(opt.matrix_path);
  } else {
    Poset p = load_poset(opt, "bruhat");
    m = coxeter_matrix(p, resolved_ordering(opt, p));
  }
  auto b = bruhat(m);
  if (b.u1 * b.p.matrix() * b.u2 != m) fail(errc::internal_inconsistency, "reconstruction failed");
  if (opt.format == "json") {
    nlohmann::json doc;
    doc["input"] = matrix_json(m);
    nlohmann::json parr = nlohmann::json::array();
    for (std::size_t v : b.p.one_line_1based()) parr.push_back(v);
    doc["p"] = std::move(parr);
    doc["u1"] = matrix_json(b.u1);
    doc["u2"] = matrix_json(b.u2);
    doc["u1_is_identity"] = b.u1.is_identity();
    doc["pu_form"] = has_pu_form(m);
    emit_json(doc);
  } else {
    std::cout << permutation_lines("p", b.p) << '\n'
              << "u1_is_identity: " << (b.u1.is_identity() ? "yes" : "no") << '\n'
              << "u1:\n" << b.u1.pretty() << "p:\n" << b.p.matrix().pretty() << "u2:\n"
              << b.u2.pretty();
  }
  return 0;
}

int run_permanent(const Options& opt) {
  Matrix m;
  if (!opt.matrix_path.empty()) {
    if (!opt.gen_spec.empty() || !opt.file_path.empty()) {
      throw CLI::ValidationError("--matrix excludes --gen/--file");
    }
    m = load_matrix(opt.matrix_path);
  } else {
    Poset p = load_poset(opt, "permanent");
    m = coxeter_matrix(p, resolved_ordering(opt, p));
  }
  Rational value = permanent(m, opt.max_permanent_n);
  if (opt.format == "json") {
    nlohmann::json doc;
    doc["permanent"] = value.str();
    emit_json(doc);
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

int run_homology(const Options& opt) {
  Poset p = load_poset(opt, "homology");
  HomologicalProfile prof = homological_profile(p);
  if (opt.format == "json") {
    nlohmann::json doc;
    doc["poset"] = poset_json(p);
    doc["profile"] = profile_json(p, prof);
    doc["auslander_gorenstein"] = prof.is_auslander_gorenstein;
    doc["diagonal"] =
        prof.is_auslander_gorenstein ? nlohmann::json(prof.is_diagonal) : nlohmann::json(nullptr);
    emit_json(doc);
    return 0;
  }
  std::cout << "element grade cograde pdim(I) idim(P) pdim(S) perfect\n";
  for (std::size_t pos = 0; pos < p.size(); ++pos) {
    const std::size_t x = p.linext()[pos];
    std::cout << p.label(x) << ' ' << prof.grade[x] << ' ' << prof.cograde[x] << ' '
              << prof.pdim_injective[x] << ' ' << prof.idim_projective[x] << ' '
              << prof.pdim_simple[x] << ' ' << (prof.perfect[x] ? "yes" : "no") << '\n';
  }
  std::cout << "gldim: " << prof.gldim << "\ngorenstein_level: " << prof.gorenstein_level
            << "\nauslander_gorenstein: " << (prof.is_auslander_gorenstein ? "yes" : "no") << '\n';
  if (prof.is_auslander_gorenstein) {
    std::cout << "diagonal: " << (prof.is_diagonal ? "yes" : "no") << '\n';
  }
  std::cout << "dominant_numbers:";
  for (std::size_t l : prof.dominant_numbers) std::cout << ' ' << l;
  std::cout << '\n';
  return 0;
}

int run_bijections(const Options& opt) {
  Poset p = load_poset(opt, "bijections");
  BijectionReport report = bijection_report(p, ordering_choice(opt, p), opt.max_permanent_n);
  if (opt.format == "json") {
    emit_json(bijection_report_json(report));
    return 0;
  }
  std::cout << ordering_line(report.poset, report.ordering) << '\n';
  std::cout << permutation_lines("coxeter", report.coxeter_perm) << '\n';
  if (report.grade_ar) std::cout << permutation_lines("grade_ar", *report.grade_ar) << '\n';
  if (report.grade_corollary) {
    std::cout << permutation_lines("grade_corollary", *report.grade_corollary) << '\n';
  }
  if (report.rowmotion_perm) {
    std::cout << permutation_lines("rowmotion", *report.rowmotion_perm) << '\n';
  }
  auto flag = [](const std::optional<bool>& b) { return !b ? "n/a" : (*b ? "yes" : "no"); };
  std::cout << "pu_form: " << (report.pu_form ? "yes" : "no") << '\n'
            << "ar_eq_corollary: " << flag(report.ar_eq_corollary) << '\n'
            << "grade_eq_rowmotion: " << flag(report.grade_eq_rowmotion) << '\n'
            << "coxeter_matches_grade: " << flag(report.coxeter_matches_grade) << '\n'
            << "permanent: " << (report.permanent_value ? report.permanent_value->str() : "skipped")
            << '\n';
  return 0;
}

int run_verify(const Options& opt) {
  Poset p = load_poset(opt, "verify");
  TheoremReport report = verify_main_theorems(p, opt.max_permanent_n);
  if (opt.format == "json") {
    emit_json(theorem_report_json(report));
    return 0;
  }
  auto line = [](const std::string& name, const std::optional<bool>& value) {
    std::cout << name << ": " << (!value ? "skipped" : (*value ? "PASS" : "FAIL")) << '\n';
  };
  std::cout << "auslander_gorenstein: " << (report.auslander_gorenstein ? "yes" : "no") << '\n'
            << "lattice: " << (report.is_lattice ? "yes" : "no") << '\n'
            << "distributive: " << (report.distributive ? "yes" : "no") << '\n';
  line("pu_form", report.pu_form);
  line("u2_diag_pm1", report.u2_diag_pm1);
  line("permanent_pm1", report.permanent_pm1);
  if (report.permanent_value) std::cout << "permanent: " << *report.permanent_value << '\n';
  line("lambda_grade_identity", report.lambda_grade_identity);
  line("rowmotion_identity", report.rowmotion_identity);
  std::cout << (report.ok() ? "all assertions hold" : "failed assertions present") << '\n';
  return 0;
}

int run_gen(const Options& opt) {
  if (opt.gen_spec.empty()) throw CLI::ValidationError("gen requires --gen SPEC");
  Poset p = generate(opt.gen_spec, opt.seed);
  const std::size_t cap = opt.max_elements ? opt.max_elements : default_max_elements("gen");
  if (p.size() > cap) {
    fail(errc::cap_exceeded, std::to_string(p.size()) + " elements exceed --max-elements " +
                                 std::to_string(cap));
  }
  if (opt.format == "text") {
    std::cout << p.to_text();
  } else {
    std::cout << nlohmann::json::parse(p.to_json()).dump(2) << '\n';
  }
  return 0;
}

int run_survey(const Options& opt) {
  std::vector<std::pair<std::string, Poset>> corpus;
  const std::size_t cap = opt.max_elements ? opt.max_elements : default_max_elements("survey");
  auto add = [&corpus, cap](std::string name, Poset p) {
    if (p.size() > cap) {
      fail(errc::cap_exceeded,
           "corpus member '" + name + "' has " + std::to_string(p.size()) + " elements");
    }
    corpus.emplace_back(std::move(name), std::move(p));
  };
  if (opt.all_j > 0) {
    std::size_t k = 0;
    for (const Poset& q : all_posets_up_to_iso(opt.all_j)) {
      add("J(q" + std::to_string(k++) + "/" + std::to_string(q.size()) + ")", birkhoff(q).base);
    }
  }
  for (const std::string& spec : opt.corpus_gens) add(spec, generate(spec, opt.seed));
  ProbeReport report = question_probe(corpus, opt.max_permanent_n);
  if (opt.format == "json") {
    emit_json(probe_report_json(report));
    return 0;
  }
  std::cout << "name elements AG pu_form permanent agree\n";
  for (const ProbeRow& row : report.rows) {
    std::cout << row.name << ' ' << row.elements << ' ' << (row.auslander_gorenstein ? "yes" : "no")
              << ' ' << (row.pu_form ? "yes" : "no") << ' '
              << (row.permanent_value ? row.permanent_value->str() : "-") << ' '
              << (row.agree ? "yes" : "NO") << '\n';
  }
  std::cout << "agree " << report.agreements << "/" << report.rows.size() << '\n';
  if (!report.all_agree()) {
    std::cout << "counterexamples:";
    for (const auto& name : report.counterexamples) std::cout << ' ' << name;
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Coxeter-matrix and grade-bijection toolkit for finite posets"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env_seed = std::getenv("COXLAB_SEED")) {
    opt.seed = std::strtoull(env_seed, nullptr, 10);
  }

  const std::vector<std::string> verbs = {"info",      "cartan",   "coxeter",    "bruhat",
                                          "permanent", "homology", "bijections", "verify",
                                          "gen",       "survey"};
  const std::map<std::string, std::string> descriptions = {
      {"info", "poset facts: size, covers, boundedness, lattice and distributivity verdicts"},
      {"cartan", "Cartan matrix under the chosen ordering"},
      {"coxeter", "Coxeter matrix under the chosen ordering"},
      {"bruhat", "Bruhat factorisation of the Coxeter matrix (or of --matrix)"},
      {"permanent", "exact permanent of the Coxeter matrix (or of --matrix)"},
      {"homology", "per-simple grades, dimensions and Gorenstein verdicts"},
      {"bijections", "grade/AR/Coxeter/rowmotion permutations with coincidence flags"},
      {"verify", "check the Bruhat-form and permanent consequences on this input"},
      {"gen", "emit the generated poset (canonical JSON, or text format)"},
      {"survey", "AG vs PU-form agreement table over a corpus"}};

  for (const std::string& verb : verbs) {
    CLI::App* sub = app.add_subcommand(verb, descriptions.at(verb));
    if (verb != "survey") {
      sub->add_option("--gen", opt.gen_spec,
                      "generator spec: boolean:N, chain:N, antichain:N, m3, n5, product:a:b, "
                      "random:n, jrandom:n, paper-poset10, paper-lattice8");
    }
    if (verb != "gen" && verb != "survey") {
      sub->add_option("--file", opt.file_path, "poset file (text or JSON format)");
    }
    if (verb == "bruhat" || verb == "permanent") {
      sub->add_option("--matrix", opt.matrix_path, "matrix file in the matrix text format");
    }
    if (verb == "cartan" || verb == "coxeter" || verb == "bruhat" || verb == "permanent" ||
        verb == "bijections") {
      sub->add_option("--order", opt.order, "linext, admissible, or a file listing the labels");
    }
    if (verb == "cartan" || verb == "coxeter") {
      sub->add_option("--format", opt.format, "text, json, or matrix")
          ->check(CLI::IsMember({"text", "json", "matrix"}));
    } else {
      sub->add_option("--format", opt.format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
    }
    sub->add_option("--seed", opt.seed, "seed for random generators (env COXLAB_SEED)");
    sub->add_option("--max-elements", opt.max_elements,
                    "element cap (default 20 for homology verbs, 64 otherwise)");
    if (verb == "permanent" || verb == "bijections" || verb == "verify" || verb == "survey") {
      sub->add_option("--max-permanent-n", opt.max_permanent_n,
                      "largest size whose permanent is computed (default 12, library guard 24)");
    }
    if (verb == "survey") {
      sub->add_option("--all-j", opt.all_j,
                      "add J(q) for every poset q with at most N elements, up to isomorphism");
      sub->add_option("--add", opt.corpus_gens, "add one generator spec to the corpus");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "info") return run_info(opt);
    if (verb == "cartan" || verb == "coxeter") return run_matrix_verb(opt, verb);
    if (verb == "bruhat") return run_bruhat(opt);
    if (verb == "permanent") return run_permanent(opt);
    if (verb == "homology") return run_homology(opt);
    if (verb == "bijections") return run_bijections(opt);
    if (verb == "verify") return run_verify(opt);
    if (verb == "gen") return run_gen(opt);
    if (verb == "survey") return run_survey(opt);
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const coxlab::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
