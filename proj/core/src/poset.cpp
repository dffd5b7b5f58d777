#include "coxlab/poset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "coxlab/error.hpp"
#include "coxlab/linalg.hpp"

namespace coxlab {

Poset Poset::from_relations(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& pairs,
                            std::size_t max_elements) {
  const std::size_t n = labels.size();
  if (n > max_elements) {
    fail(errc::size_guard_exceeded,
         std::to_string(n) + " elements exceed guard " + std::to_string(max_elements));
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], i).second) fail(errc::duplicate_label, labels[i]);
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = true;
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) fail(errc::unknown_element, a);
    if (ib == index.end()) fail(errc::unknown_element, b);
    p.leq_[ia->second * n + ib->second] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq_[k * n + j]) p.leq_[i * n + j] = true;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i]) {
        fail(errc::cycle_detected, p.labels_[i] + " <= " + p.labels_[j] + " <= " + p.labels_[i]);
      }
  // Covers: x < y with nothing strictly between.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !p.leq_[x * n + y]) continue;
      bool direct = true;
      for (std::size_t z = 0; z < n && direct; ++z) {
        if (z != x && z != y && p.leq_[x * n + z] && p.leq_[z * n + y]) direct = false;
      }
      if (direct) p.covers_.emplace_back(x, y);
    }
  std::sort(p.covers_.begin(), p.covers_.end());
  // Linear extension: greedy minimal, ties by input label order.
  std::vector<bool> placed(n, false);
  p.linext_.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j) {
        if (!placed[j] && j != i && p.leq_[j * n + i]) minimal = false;
      }
      if (minimal) {
        p.linext_.push_back(i);
        placed[i] = true;
        break;
      }
    }
  }
  p.pos_.resize(n);
  for (std::size_t k = 0; k < n; ++k) p.pos_[p.linext_[k]] = k;
  return p;
}

std::size_t Poset::index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  fail(errc::unknown_element, label);
}

std::vector<std::size_t> Poset::upper_covers(std::size_t x) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : covers_)
    if (a == x) out.push_back(b);
  return out;
}

std::vector<std::size_t> Poset::lower_covers(std::size_t x) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : covers_)
    if (b == x) out.push_back(a);
  return out;
}

std::vector<std::size_t> Poset::up_set(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y)
    if (le(x, y)) out.push_back(y);
  return out;
}

std::vector<std::size_t> Poset::down_set(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y)
    if (le(y, x)) out.push_back(y);
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    bool min = true;
    for (std::size_t y = 0; y < size() && min; ++y)
      if (lt(y, x)) min = false;
    if (min) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    bool max = true;
    for (std::size_t y = 0; y < size() && max; ++y)
      if (lt(x, y)) max = false;
    if (max) out.push_back(x);
  }
  return out;
}

std::optional<std::size_t> Poset::bottom() const {
  auto mins = minimal_elements();
  if (mins.size() == 1) return mins.front();
  return std::nullopt;
}

std::optional<std::size_t> Poset::top() const {
  auto maxs = maximal_elements();
  if (maxs.size() == 1) return maxs.front();
  return std::nullopt;
}

Poset Poset::parse_text(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  bool saw_elements = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string verb;
    if (!(ls >> verb)) continue;
    if (verb == "elements") {
      std::string l;
      while (ls >> l) labels.push_back(l);
      saw_elements = true;
    } else if (verb == "cover") {
      std::string a, b, extra;
      if (!(ls >> a >> b) || (ls >> extra)) {
        fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected 'cover x y'");
      }
      pairs.emplace_back(a, b);
    } else {
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": unknown directive '" + verb + "'");
    }
  }
  if (!saw_elements) fail(errc::parse_error, "missing 'elements' line");
  return from_relations(std::move(labels), pairs);
}

Poset Poset::parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers")) {
    fail(errc::parse_error, "poset JSON needs 'elements' and 'covers'");
  }
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) fail(errc::parse_error, "element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& c : doc["covers"]) {
    if (!c.is_array() || c.size() != 2) fail(errc::parse_error, "covers must be [x,y] pairs");
    pairs.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return from_relations(std::move(labels), pairs);
}

Poset Poset::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  std::istringstream ts(text);
  return parse_text(ts);
}

std::string Poset::to_text() const {
  std::ostringstream out;
  out << "elements";
  for (const auto& l : labels_) out << ' ' << l;
  out << '\n';
  for (const auto& [a, b] : covers_) out << "cover " << labels_[a] << ' ' << labels_[b] << '\n';
  return out.str();
}

std::string Poset::to_json() const {
  nlohmann::json doc;
  doc["elements"] = labels_;
  std::vector<std::pair<std::string, std::string>> cov;
  cov.reserve(covers_.size());
  for (const auto& [a, b] : covers_) cov.emplace_back(labels_[a], labels_[b]);
  std::sort(cov.begin(), cov.end());
  auto arr = nlohmann::json::array();
  for (const auto& [a, b] : cov) arr.push_back({a, b});
  doc["covers"] = arr;
  return doc.dump();
}

Matrix zeta_matrix(const Poset& p) {
  const std::size_t n = p.size();
  Matrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.le(p.linext()[i], p.linext()[j])) z(i, j) = Rational(1);
  return z;
}

Matrix mobius_matrix(const Poset& p) { return invert(zeta_matrix(p)); }

}  // namespace coxlab
