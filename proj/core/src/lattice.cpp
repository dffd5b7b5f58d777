#include "coxlab/lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

// Greatest lower bound of {x, y} in p, or nullopt.
std::optional<std::size_t> glb(const Poset& p, std::size_t x, std::size_t y) {
  std::optional<std::size_t> best;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (!p.le(z, x) || !p.le(z, y)) continue;
    if (!best || p.le(*best, z)) best = z;
  }
  if (!best) return std::nullopt;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.le(z, x) && p.le(z, y) && !p.le(z, *best)) return std::nullopt;
  }
  return best;
}

std::optional<std::size_t> lub(const Poset& p, std::size_t x, std::size_t y) {
  std::optional<std::size_t> best;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (!p.le(x, z) || !p.le(y, z)) continue;
    if (!best || p.le(z, *best)) best = z;
  }
  if (!best) return std::nullopt;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.le(x, z) && p.le(y, z) && !p.le(*best, z)) return std::nullopt;
  }
  return best;
}

}  // namespace

std::variant<LatticeStructure, LatticeFailure> lattice_structure(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return LatticeFailure{0, 0, true};
  LatticeStructure l;
  l.base = p;
  l.meet.assign(n * n, 0);
  l.join.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      auto m = glb(p, x, y);
      if (!m) return LatticeFailure{x, y, true};
      auto j = lub(p, x, y);
      if (!j) return LatticeFailure{x, y, false};
      l.meet[x * n + y] = l.meet[y * n + x] = *m;
      l.join[x * n + y] = l.join[y * n + x] = *j;
    }
  l.bottom = *p.bottom();  // total meets force a unique minimum
  l.top = *p.top();
  return l;
}

LatticeStructure require_lattice(const Poset& p) {
  auto result = lattice_structure(p);
  if (auto* fail_info = std::get_if<LatticeFailure>(&result)) {
    std::string what = p.size() == 0
                           ? "empty poset"
                           : "pair (" + p.label(fail_info->x) + ", " + p.label(fail_info->y) +
                                 ") has no " + (fail_info->meet_failed ? "meet" : "join");
    fail(errc::not_a_lattice, what);
  }
  return std::get<LatticeStructure>(std::move(result));
}

DistributivityResult is_distributive(const LatticeStructure& l) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t lhs = l.meet_of(x, l.join_of(y, z));
        const std::size_t rhs = l.join_of(l.meet_of(x, y), l.meet_of(x, z));
        if (lhs != rhs) return {false, std::array<std::size_t, 3>{x, y, z}};
      }
  return {true, std::nullopt};
}

std::vector<std::size_t> join_irreducibles(const LatticeStructure& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.base.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::vector<std::size_t> meet_irreducibles(const LatticeStructure& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.base.upper_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::size_t OrderIdeal::count() const {
  return static_cast<std::size_t>(std::count(members.begin(), members.end(), true));
}

bool is_order_ideal(const Poset& p, const std::vector<bool>& members) {
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (!members[y]) continue;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.le(x, y) && !members[x]) return false;
  }
  return true;
}

OrderIdeal generated_ideal(const Poset& p, const std::vector<std::size_t>& gens) {
  OrderIdeal ideal{std::vector<bool>(p.size(), false)};
  for (std::size_t g : gens)
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.le(x, g)) ideal.members[x] = true;
  return ideal;
}

std::vector<OrderIdeal> all_order_ideals(const Poset& p, std::size_t max_count) {
  // Grow ideals along the linear extension: each element may be added once
  // all elements below it are in.
  std::vector<std::vector<bool>> frontier{std::vector<bool>(p.size(), false)};
  for (std::size_t pos = 0; pos < p.size(); ++pos) {
    const std::size_t x = p.linext()[pos];
    const std::size_t have = frontier.size();
    for (std::size_t k = 0; k < have; ++k) {
      const auto& ideal = frontier[k];
      bool closed = true;
      for (std::size_t y = 0; y < p.size() && closed; ++y)
        if (p.lt(y, x) && !ideal[y]) closed = false;
      if (!closed) continue;
      auto grown = ideal;
      grown[x] = true;
      frontier.push_back(std::move(grown));
      if (frontier.size() > max_count) {
        fail(errc::size_guard_exceeded,
             "more than " + std::to_string(max_count) + " order ideals");
      }
    }
  }
  std::vector<OrderIdeal> out;
  out.reserve(frontier.size());
  for (auto& m : frontier) out.push_back(OrderIdeal{std::move(m)});
  return out;
}

namespace {

std::string ideal_label(const Poset& q, const OrderIdeal& ideal) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (!ideal.contains(x)) continue;
    if (!first) out << ',';
    out << q.label(x);
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

LatticeStructure birkhoff(const Poset& q, std::size_t max_ideals) {
  auto ideals = all_order_ideals(q, max_ideals);
  std::sort(ideals.begin(), ideals.end(), [](const OrderIdeal& a, const OrderIdeal& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.members > b.members;  // earlier elements first
  });
  const std::size_t n = ideals.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& ideal : ideals) labels.push_back(ideal_label(q, ideal));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      bool subset = true;
      for (std::size_t x = 0; x < q.size() && subset; ++x)
        if (ideals[a].contains(x) && !ideals[b].contains(x)) subset = false;
      if (subset) pairs.emplace_back(labels[a], labels[b]);
    }
  Poset base = Poset::from_relations(std::move(labels), pairs, std::max(n, kPosetSizeGuard));
  return require_lattice(base);
}

namespace {

// Ideal of join-irreducibles below each element; the key for rowmotion.
struct JiEncoding {
  std::vector<std::size_t> ji;                    // join-irreducible element indices
  std::vector<std::vector<bool>> ideal_of;        // element -> mask over ji positions
  std::map<std::vector<bool>, std::size_t> find;  // mask -> element
};

JiEncoding ji_encoding(const LatticeStructure& l) {
  JiEncoding enc;
  enc.ji = join_irreducibles(l);
  enc.ideal_of.resize(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::vector<bool> mask(enc.ji.size(), false);
    for (std::size_t k = 0; k < enc.ji.size(); ++k)
      if (l.base.le(enc.ji[k], x)) mask[k] = true;
    enc.find.emplace(mask, x);
    enc.ideal_of[x] = std::move(mask);
  }
  if (enc.find.size() != l.size()) {
    fail(errc::internal_inconsistency, "join-irreducible ideals do not separate elements");
  }
  return enc;
}

}  // namespace

std::vector<std::size_t> rowmotion_map(const LatticeStructure& l) {
  auto dist = is_distributive(l);
  if (!dist.distributive) {
    const auto& w = *dist.witness;
    fail(errc::not_distributive, "witness triple (" + l.base.label(w[0]) + ", " +
                                     l.base.label(w[1]) + ", " + l.base.label(w[2]) + ")");
  }
  auto enc = ji_encoding(l);
  const std::size_t m = enc.ji.size();
  std::vector<std::size_t> out(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    const auto& ideal = enc.ideal_of[x];
    // Minimal elements of the complement, in the induced order on ji.
    std::vector<bool> image(m, false);
    for (std::size_t k = 0; k < m; ++k) {
      if (ideal[k]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < m && minimal; ++j)
        if (!ideal[j] && j != k && l.base.lt(enc.ji[j], enc.ji[k])) minimal = false;
      if (!minimal) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (l.base.le(enc.ji[j], enc.ji[k])) image[j] = true;
    }
    auto it = enc.find.find(image);
    if (it == enc.find.end()) fail(errc::internal_inconsistency, "rowmotion left the lattice");
    out[x] = it->second;
  }
  return out;
}

std::size_t rowmotion(const LatticeStructure& l, std::size_t x) {
  if (x >= l.size()) fail(errc::unknown_element, "index " + std::to_string(x));
  return rowmotion_map(l)[x];
}

UpperInterval upper_interval(const LatticeStructure& l, std::size_t z) {
  if (z >= l.size()) fail(errc::unknown_element, "index " + std::to_string(z));
  UpperInterval out;
  for (std::size_t pos = 0; pos < l.size(); ++pos) {
    const std::size_t x = l.base.linext()[pos];
    if (l.base.le(z, x)) out.original.push_back(x);
  }
  std::vector<std::string> labels;
  for (std::size_t x : out.original) labels.push_back(l.base.label(x));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t a : out.original)
    for (std::size_t b : out.original)
      if (a != b && l.base.le(a, b)) pairs.emplace_back(l.base.label(a), l.base.label(b));
  Poset base = Poset::from_relations(std::move(labels), pairs);
  out.lattice = require_lattice(base);
  return out;
}

MeetIrreducibleEncoding meet_irreducible_encoding(const LatticeStructure& l) {
  // Precondition: every proper upper interval is distributive.
  for (std::size_t z = 0; z < l.size(); ++z) {
    if (z == l.bottom) continue;
    auto interval = upper_interval(l, z);
    if (!is_distributive(interval.lattice).distributive) {
      fail(errc::precondition_violated,
           "upper interval at " + l.base.label(z) + " is not distributive");
    }
  }
  MeetIrreducibleEncoding enc;
  enc.m_elements = meet_irreducibles(l);
  std::erase(enc.m_elements, l.bottom);
  // Dualised order: a <=_M b iff b <= a in the lattice.
  std::vector<std::string> labels;
  for (std::size_t x : enc.m_elements) labels.push_back(l.base.label(x));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t a : enc.m_elements)
    for (std::size_t b : enc.m_elements)
      if (a != b && l.base.le(b, a)) pairs.emplace_back(l.base.label(a), l.base.label(b));
  enc.m_poset = Poset::from_relations(std::move(labels), pairs);

  const std::size_t m = enc.m_elements.size();
  enc.zeta.resize(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.bottom) continue;
    OrderIdeal ideal{std::vector<bool>(m, false)};
    for (std::size_t k = 0; k < m; ++k)
      if (l.base.le(x, enc.m_elements[k])) ideal.members[k] = true;
    if (!is_order_ideal(enc.m_poset, ideal.members)) {
      fail(errc::internal_inconsistency, "zeta image is not an order ideal");
    }
    enc.zeta[x] = std::move(ideal);
  }
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (!enc.zeta[x]) continue;
    enc.family.push_back(*enc.zeta[x]);
  }
  std::sort(enc.family.begin(), enc.family.end(),
            [](const OrderIdeal& a, const OrderIdeal& b) { return a.members < b.members; });
  if (std::adjacent_find(enc.family.begin(), enc.family.end()) != enc.family.end()) {
    fail(errc::internal_inconsistency, "zeta is not injective");
  }
  // Every element of M appears in some member of the family.
  for (std::size_t k = 0; k < m; ++k) {
    bool seen = false;
    for (const auto& ideal : enc.family) seen = seen || ideal.contains(k);
    if (!seen) fail(errc::internal_inconsistency, "meet-irreducible missing from the family");
  }
  auto in_family = [&enc](const OrderIdeal& ideal) {
    return std::binary_search(
        enc.family.begin(), enc.family.end(), ideal,
        [](const OrderIdeal& a, const OrderIdeal& b) { return a.members < b.members; });
  };
  // Family is closed under passing to smaller ideals.
  for (const auto& ideal : all_order_ideals(enc.m_poset, kBirkhoffIdealGuard)) {
    if (in_family(ideal)) continue;
    for (const auto& big : enc.family) {
      bool subset = true;
      for (std::size_t k = 0; k < m && subset; ++k)
        if (ideal.contains(k) && !big.contains(k)) subset = false;
      if (subset) {
        fail(errc::internal_inconsistency, "family is not downward closed under inclusion");
      }
    }
  }
  // Zeta is an order isomorphism onto the family ordered by reverse inclusion,
  // turning joins into intersections and meets into unions (or the bottom when
  // the union escapes the family).
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.bottom) continue;
    for (std::size_t y = 0; y < l.size(); ++y) {
      if (y == l.bottom) continue;
      const auto& zx = enc.zeta[x]->members;
      const auto& zy = enc.zeta[y]->members;
      bool zy_in_zx = true;
      OrderIdeal inter{std::vector<bool>(m, false)}, uni{std::vector<bool>(m, false)};
      for (std::size_t k = 0; k < m; ++k) {
        if (zy[k] && !zx[k]) zy_in_zx = false;
        inter.members[k] = zx[k] && zy[k];
        uni.members[k] = zx[k] || zy[k];
      }
      if (l.base.le(x, y) != zy_in_zx) {
        fail(errc::internal_inconsistency, "zeta does not reverse the order");
      }
      if (*enc.zeta[l.join_of(x, y)] != inter) {
        fail(errc::internal_inconsistency, "join does not map to intersection");
      }
      const std::size_t mt = l.meet_of(x, y);
      if (in_family(uni)) {
        if (mt == l.bottom || *enc.zeta[mt] != uni) {
          fail(errc::internal_inconsistency, "meet does not map to union");
        }
      } else if (mt != l.bottom) {
        fail(errc::internal_inconsistency, "meet escapes the family but is not the bottom");
      }
    }
  }
  return enc;
}

namespace {

bool family_contains(const MeetIrreducibleEncoding& enc, const OrderIdeal& ideal) {
  return std::binary_search(
      enc.family.begin(), enc.family.end(), ideal,
      [](const OrderIdeal& a, const OrderIdeal& b) { return a.members < b.members; });
}

std::size_t zeta_inverse(const LatticeStructure& l, const MeetIrreducibleEncoding& enc,
                         const OrderIdeal& ideal) {
  for (std::size_t x = 0; x < l.size(); ++x)
    if (enc.zeta[x] && *enc.zeta[x] == ideal) return x;
  fail(errc::internal_inconsistency, "ideal not in the zeta image");
}

}  // namespace

Matrix euler_row(const LatticeStructure& l, const MeetIrreducibleEncoding& enc, std::size_t y) {
  if (y >= l.size()) fail(errc::unknown_element, "index " + std::to_string(y));
  const std::size_t n = l.size();
  Matrix row(1, n);
  if (y == l.bottom) {
    row(0, l.base.position(l.top)) = Rational(-1);
    return row;
  }
  const OrderIdeal& ideal = *enc.zeta[y];
  const std::size_t m = enc.m_elements.size();
  // Minimal elements of the complement of the ideal, in m_poset order.
  std::vector<std::size_t> min_complement;
  for (std::size_t k = 0; k < m; ++k) {
    if (ideal.contains(k)) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < m && minimal; ++j)
      if (j != k && !ideal.contains(j) && enc.m_poset.lt(j, k)) minimal = false;
    if (minimal) min_complement.push_back(k);
  }
  // Faces F of the complex: subsets with generated ideal in the family.
  // (-1)^{|F|+1} lands in the column of zeta^{-1}(<F>); the reduced Euler
  // characteristic of the complex lands in the bottom's column.
  long long chi = 0;
  const std::size_t f = min_complement.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << f); ++mask) {
    std::vector<std::size_t> gens;
    for (std::size_t b = 0; b < f; ++b)
      if (mask & (std::size_t{1} << b)) gens.push_back(min_complement[b]);
    OrderIdeal span = generated_ideal(enc.m_poset, gens);
    if (!family_contains(enc, span)) continue;
    const int bits = static_cast<int>(gens.size());
    chi += (bits % 2 == 0) ? 1 : -1;
    const std::size_t col = l.base.position(zeta_inverse(l, enc, span));
    row(0, col) += Rational(bits % 2 == 0 ? -1 : 1);
  }
  row(0, l.base.position(l.bottom)) += Rational(static_cast<long>(chi));
  return row;
}

}  // namespace coxlab
