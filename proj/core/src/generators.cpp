#include "coxlab/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {

Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) pairs.emplace_back(std::to_string(i), std::to_string(i + 1));
  return Poset::from_relations(std::move(labels), pairs);
}

Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Poset::from_relations(std::move(labels), {});
}

namespace {

std::string subset_label(std::size_t mask, std::size_t n) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t b = 0; b < n; ++b) {
    if (!(mask & (std::size_t{1} << b))) continue;
    if (!first) out << ',';
    out << b + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

Poset boolean_lattice(std::size_t n) {
  if (n > 6) fail(errc::invalid_parameter, "boolean:" + std::to_string(n) + " exceeds 64 elements");
  const std::size_t count = std::size_t{1} << n;
  // Subsets ordered by (cardinality, numeric mask): a linear extension.
  std::vector<std::size_t> masks(count);
  for (std::size_t m = 0; m < count; ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), [](std::size_t a, std::size_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  std::vector<std::string> labels;
  for (std::size_t m : masks) labels.push_back(subset_label(m, n));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t a : masks)
    for (std::size_t b : masks)
      if (a != b && (a & b) == a) pairs.emplace_back(subset_label(a, n), subset_label(b, n));
  return Poset::from_relations(std::move(labels), pairs);
}

Poset m3() {
  return Poset::from_relations({"0", "a", "b", "c", "1"},
                               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

Poset n5() {
  return Poset::from_relations({"0", "a", "b", "c", "1"},
                               {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

Poset product(const Poset& a, const Poset& b) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l)
          if (a.le(i, k) && b.le(j, l) && !(i == k && j == l)) {
            pairs.emplace_back("(" + a.label(i) + "," + b.label(j) + ")",
                               "(" + a.label(k) + "," + b.label(l) + ")");
          }
  return Poset::from_relations(std::move(labels), pairs);
}

Poset random_poset(std::size_t n, std::uint64_t seed) {
  if (n == 0 || n > kPosetSizeGuard) {
    fail(errc::invalid_parameter, "random poset size " + std::to_string(n));
  }
  // Random strict upper-triangular relation, then transitive closure inside
  // from_relations. Raw engine draws keep the result compiler-independent.
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() & 1) pairs.emplace_back(labels[i], labels[j]);
  return Poset::from_relations(std::move(labels), pairs);
}

Poset paper_poset10() {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"0", "1"}, {"0", "2"}, {"0", "3"}, {"0", "5"}, {"1", "4"}, {"1", "7"}, {"1", "8"},
      {"2", "4"}, {"2", "6"}, {"2", "8"}, {"3", "4"}, {"3", "6"}, {"3", "7"}, {"4", "9"},
      {"5", "6"}, {"5", "7"}, {"5", "8"}, {"6", "9"}, {"7", "9"}, {"8", "9"}};
  std::vector<std::string> labels;
  for (int i = 0; i <= 9; ++i) labels.push_back(std::to_string(i));
  return Poset::from_relations(std::move(labels), pairs);
}

Poset paper_lattice8() {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "5"}, {"2", "6"}, {"3", "6"},
      {"4", "6"}, {"4", "7"}, {"5", "8"}, {"6", "8"}, {"7", "8"}};
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back(std::to_string(i));
  return Poset::from_relations(std::move(labels), pairs);
}

bool is_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      for (std::size_t j = 0; j < n && match; ++j)
        if (a.le(i, j) != b.le(perm[i], perm[j])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Poset> all_posets_up_to_iso(std::size_t max_n) {
  if (max_n == 0 || max_n > 6) {
    fail(errc::invalid_parameter, "poset enumeration supports 1..6 elements");
  }
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    // Every poset admits a labelling making its relation upper triangular, so
    // scanning strict upper-triangular closed relations finds every class.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<bool> rel(n * n, false);
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask & (std::uint64_t{1} << b)) rel[slots[b].first * n + slots[b].second] = true;
      bool closed = true;
      for (std::size_t i = 0; i < n && closed; ++i)
        for (std::size_t j = i + 1; j < n && closed; ++j)
          for (std::size_t k = j + 1; k < n && closed; ++k)
            if (rel[i * n + j] && rel[j * n + k] && !rel[i * n + k]) closed = false;
      if (!closed) continue;
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const auto& [i, j] : slots)
        if (rel[i * n + j]) pairs.emplace_back(labels[i], labels[j]);
      Poset candidate = Poset::from_relations(labels, pairs);
      bool fresh = true;
      for (const Poset& seen : out) {
        if (seen.size() == n && is_isomorphic(seen, candidate)) {
          fresh = false;
          break;
        }
      }
      if (fresh) out.push_back(std::move(candidate));
    }
  }
  return out;
}

Poset generate(const std::string& spec, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  auto arity = [&](std::size_t want) {
    if (parts.size() != want + 1) {
      fail(errc::invalid_parameter,
           "'" + spec + "' wants " + std::to_string(want) + " parameter(s)");
    }
  };
  auto num = [&](std::size_t k) -> std::size_t {
    try {
      const long long v = std::stoll(parts[k]);
      if (v < 0) throw std::out_of_range("negative");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      fail(errc::invalid_parameter, "bad numeric parameter '" + parts[k] + "' in '" + spec + "'");
    }
  };
  const std::string& family = parts[0];
  if (family == "boolean") { arity(1); return boolean_lattice(num(1)); }
  if (family == "chain") { arity(1); return chain(num(1)); }
  if (family == "antichain") { arity(1); return antichain(num(1)); }
  if (family == "m3") { arity(0); return m3(); }
  if (family == "n5") { arity(0); return n5(); }
  if (family == "product") { arity(2); return product(chain(num(1)), chain(num(2))); }
  if (family == "random") { arity(1); return random_poset(num(1), seed); }
  if (family == "jrandom") { arity(1); return birkhoff(random_poset(num(1), seed)).base; }
  if (family == "paper-poset10") { arity(0); return paper_poset10(); }
  if (family == "paper-lattice8") { arity(0); return paper_lattice8(); }
  fail(errc::invalid_parameter, "unknown generator family '" + family + "'");
}

}  // namespace coxlab
