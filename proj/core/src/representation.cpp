#include "coxlab/representation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

// Reduced column echelon form of the column space: basis columns have a 1 in
// their pivot row and 0 there in every other column; pivot rows increase.
struct Echelon {
  Matrix basis;                        // d x r
  std::vector<std::size_t> pivot_rows;
};

Echelon column_echelon(const Matrix& a) {
  Matrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    std::size_t j = lead;
    while (j < cols && m(r, j).is_zero()) ++j;
    if (j == cols) continue;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, j), m(i, lead));
    const Rational d = m(r, lead);
    for (std::size_t i = 0; i < rows; ++i) m(i, lead) /= d;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == lead || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t i = 0; i < rows; ++i) m(i, c) -= f * m(i, lead);
    }
    pivots.push_back(r);
    ++lead;
  }
  Echelon e;
  e.basis = Matrix(rows, pivots.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < pivots.size(); ++c) e.basis(i, c) = m(i, c);
  e.pivot_rows = std::move(pivots);
  return e;
}

struct Nullspace {
  Matrix basis;                       // cols(a) x k
  std::vector<std::size_t> free_cols;
};

Nullspace nullspace(const Matrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Matrix m = a;
  std::vector<std::size_t> pivot_row_of_col(cols, rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);
    const Rational d = m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_row_of_col[c] = r;
    ++r;
  }
  Nullspace out;
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_row_of_col[c] == rows) out.free_cols.push_back(c);
  out.basis = Matrix(cols, out.free_cols.size());
  for (std::size_t k = 0; k < out.free_cols.size(); ++k) {
    const std::size_t fc = out.free_cols[k];
    out.basis(fc, k) = Rational(1);
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_row_of_col[c] != rows) out.basis(c, k) = -m(pivot_row_of_col[c], fc);
  }
  return out;
}

// Solves a * x = b for a with full column rank; throws when inconsistent.
Matrix solve_exact(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.rows(), cols = a.cols(), width = b.cols();
  if (b.rows() != rows) fail(errc::dimension_mismatch, "solve_exact shapes");
  Matrix m(rows, cols + width);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < width; ++j) m(i, cols + j) = b(i, j);
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivot_row_of_col(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) fail(errc::internal_inconsistency, "solve_exact: rank deficient");
    m.swap_rows(r, piv);
    const Rational d = m(r, c);
    for (std::size_t j = 0; j < cols + width; ++j) m(r, j) /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < cols + width; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_row_of_col[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (!m(i, cols + j).is_zero()) fail(errc::internal_inconsistency, "solve_exact: inconsistent");
  Matrix x(cols, width);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t j = 0; j < width; ++j) x(c, j) = m(pivot_row_of_col[c], cols + j);
  return x;
}

std::size_t matrix_rank(const Matrix& a) { return column_echelon(a).pivot_rows.size(); }

// Fills a representation whose dims are fixed: identity on (x, x), the given
// maps on covers, everything else by composition along covers. Functoriality
// of the source data makes the result independent of the chosen path.
template <typename CoverFn>
void complete_functorially(Representation& rep, CoverFn&& cover_map) {
  const Poset& p = rep.base();
  const std::size_t n = p.size();
  std::vector<bool> is_cover(n * n, false);
  for (const auto& [x, y] : p.covers()) {
    rep.set_map(x, y, cover_map(x, y));
    is_cover[x * n + y] = true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.lt(x, y) && !is_cover[x * n + y]) pending.emplace_back(x, y);
  std::sort(pending.begin(), pending.end(), [&p](const auto& a, const auto& b) {
    return p.position(a.second) - p.position(a.first) <
           p.position(b.second) - p.position(b.first);
  });
  for (const auto& [x, y] : pending) {
    std::size_t via = n;
    for (std::size_t w : p.upper_covers(x)) {
      if (p.le(w, y)) {
        via = w;
        break;
      }
    }
    if (via == n) fail(errc::internal_inconsistency, "no cover path");
    rep.set_map(x, y, rep.map(via, y) * rep.map(x, via));
  }
}

}  // namespace

Representation::Representation(PosetPtr base, std::vector<std::size_t> dims)
    : base_(std::move(base)), dims_(std::move(dims)) {
  const std::size_t n = base_->size();
  if (dims_.size() != n) fail(errc::dimension_mismatch, "dims per element");
  maps_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    maps_[x * n + x] = Matrix::identity(dims_[x]);
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && base_->le(x, y)) maps_[x * n + y] = Matrix(dims_[y], dims_[x]);
  }
}

std::size_t Representation::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

const Matrix& Representation::map(std::size_t x, std::size_t y) const {
  if (!base_->le(x, y)) fail(errc::invalid_parameter, "map requested for incomparable pair");
  return maps_[x * base_->size() + y];
}

void Representation::set_map(std::size_t x, std::size_t y, Matrix m) {
  if (!base_->le(x, y)) fail(errc::invalid_parameter, "map set for incomparable pair");
  if (m.rows() != dims_[y] || m.cols() != dims_[x]) {
    fail(errc::dimension_mismatch, "map shape at (" + base_->label(x) + ", " + base_->label(y) + ")");
  }
  maps_[x * base_->size() + y] = std::move(m);
}

void Representation::validate() const {
  const std::size_t n = base_->size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!map(x, x).is_identity()) fail(errc::internal_inconsistency, "map at (x, x) not identity");
    for (std::size_t y = 0; y < n; ++y) {
      if (!base_->le(x, y)) continue;
      const Matrix& m = map(x, y);
      if (m.rows() != dims_[y] || m.cols() != dims_[x]) {
        fail(errc::internal_inconsistency, "map shape mismatch");
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (!base_->le(y, z)) continue;
        if (map(y, z) * m != map(x, z)) {
          fail(errc::internal_inconsistency,
               "functoriality fails through (" + base_->label(x) + ", " + base_->label(y) + ", " +
                   base_->label(z) + ")");
        }
      }
    }
  }
}

std::string Representation::dump() const {
  std::ostringstream out;
  const std::size_t n = base_->size();
  for (std::size_t x = 0; x < n; ++x)
    out << base_->label(x) << ": " << dims_[x] << '\n';
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !base_->le(x, y)) continue;
      out << base_->label(x) << "<=" << base_->label(y) << ":\n" << map(x, y).format();
    }
  return out.str();
}

Morphism::Morphism(RepPtr source, RepPtr target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const std::size_t n = source_->base().size();
  if (target_->base_ptr() != source_->base_ptr()) {
    fail(errc::invalid_parameter, "morphism across different posets");
  }
  if (components_.size() != n) fail(errc::dimension_mismatch, "component count");
  for (std::size_t x = 0; x < n; ++x) {
    if (components_[x].rows() != target_->dim(x) || components_[x].cols() != source_->dim(x)) {
      fail(errc::dimension_mismatch, "component shape at " + source_->base().label(x));
    }
  }
}

bool Morphism::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Matrix& m) { return m.is_zero(); });
}

std::size_t Morphism::rank_at(std::size_t x) const { return matrix_rank(components_[x]); }

void Morphism::validate() const {
  const Poset& p = source_->base();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.le(x, y)) continue;
      if (components_[y] * source_->map(x, y) != target_->map(x, y) * components_[x]) {
        fail(errc::internal_inconsistency,
             "square at (" + p.label(x) + ", " + p.label(y) + ") does not commute");
      }
    }
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (outer.source_->base_ptr() != inner.target_->base_ptr() ||
      outer.source_->dims() != inner.target_->dims()) {
    fail(errc::dimension_mismatch, "compose endpoints");
  }
  std::vector<Matrix> comps;
  comps.reserve(inner.components_.size());
  for (std::size_t x = 0; x < inner.components_.size(); ++x) {
    comps.push_back(outer.components_[x] * inner.components_[x]);
  }
  return Morphism(inner.source_, outer.target_, std::move(comps));
}

namespace {

RepPtr interval_module(PosetPtr p, std::vector<bool> support) {
  const std::size_t n = p->size();
  std::vector<std::size_t> dims(n, 0);
  for (std::size_t x = 0; x < n; ++x) dims[x] = support[x] ? 1 : 0;
  auto rep = std::make_shared<Representation>(std::move(p), std::move(dims));
  const Poset& base = rep->base();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && base.le(x, y) && support[x] && support[y]) {
        rep->set_map(x, y, Matrix::identity(1));
      }
  return rep;
}

}  // namespace

RepPtr simple(PosetPtr p, std::size_t x) {
  if (x >= p->size()) fail(errc::unknown_element, "index " + std::to_string(x));
  std::vector<bool> support(p->size(), false);
  support[x] = true;
  return interval_module(std::move(p), std::move(support));
}

RepPtr projective(PosetPtr p, std::size_t x) {
  if (x >= p->size()) fail(errc::unknown_element, "index " + std::to_string(x));
  std::vector<bool> support(p->size(), false);
  for (std::size_t y = 0; y < p->size(); ++y) support[y] = p->le(x, y);
  return interval_module(std::move(p), std::move(support));
}

RepPtr injective(PosetPtr p, std::size_t x) {
  if (x >= p->size()) fail(errc::unknown_element, "index " + std::to_string(x));
  std::vector<bool> support(p->size(), false);
  for (std::size_t y = 0; y < p->size(); ++y) support[y] = p->le(y, x);
  return interval_module(std::move(p), std::move(support));
}

RepPtr regular_module(PosetPtr p) {
  std::vector<RepPtr> parts;
  for (std::size_t x = 0; x < p->size(); ++x) parts.push_back(projective(p, x));
  return direct_sum(p, parts).rep;
}

RepPtr cogenerator(PosetPtr p) {
  std::vector<RepPtr> parts;
  for (std::size_t x = 0; x < p->size(); ++x) parts.push_back(injective(p, x));
  return direct_sum(p, parts).rep;
}

SumResult direct_sum(PosetPtr p, const std::vector<RepPtr>& parts) {
  const std::size_t n = p->size();
  SumResult out;
  out.offsets.resize(parts.size(), std::vector<std::size_t>(n, 0));
  std::vector<std::size_t> dims(n, 0);
  for (std::size_t s = 0; s < parts.size(); ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      out.offsets[s][x] = dims[x];
      dims[x] += parts[s]->dim(x);
    }
  }
  auto rep = std::make_shared<Representation>(p, dims);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !p->le(x, y)) continue;
      Matrix m(dims[y], dims[x]);
      for (std::size_t s = 0; s < parts.size(); ++s) {
        const Matrix& block = parts[s]->map(x, y);
        for (std::size_t i = 0; i < block.rows(); ++i)
          for (std::size_t j = 0; j < block.cols(); ++j)
            m(out.offsets[s][y] + i, out.offsets[s][x] + j) = block(i, j);
      }
      rep->set_map(x, y, std::move(m));
    }
  out.rep = std::move(rep);
  return out;
}

namespace {

std::vector<Echelon> radical_echelon(const Representation& m) {
  const Poset& p = m.base();
  const std::size_t n = p.size();
  std::vector<Echelon> out(n);
  for (std::size_t y = 0; y < n; ++y) {
    // Images of the cover maps already generate the radical.
    std::size_t total = 0;
    for (std::size_t x : p.lower_covers(y)) total += m.dim(x);
    Matrix gen(m.dim(y), total);
    std::size_t at = 0;
    for (std::size_t x : p.lower_covers(y)) {
      const Matrix& f = m.map(x, y);
      for (std::size_t j = 0; j < f.cols(); ++j, ++at)
        for (std::size_t i = 0; i < f.rows(); ++i) gen(i, at) = f(i, j);
    }
    out[y] = column_echelon(gen);
  }
  return out;
}

}  // namespace

SubspaceData radical(const Representation& m) {
  auto ech = radical_echelon(m);
  SubspaceData out;
  for (auto& e : ech) {
    out.dims.push_back(e.pivot_rows.size());
    out.basis.push_back(std::move(e.basis));
  }
  return out;
}

SubspaceData top(const Representation& m) {
  auto ech = radical_echelon(m);
  SubspaceData out;
  for (std::size_t x = 0; x < ech.size(); ++x) {
    std::vector<std::size_t> rest;
    for (std::size_t r = 0; r < m.dim(x); ++r)
      if (!std::binary_search(ech[x].pivot_rows.begin(), ech[x].pivot_rows.end(), r))
        rest.push_back(r);
    Matrix basis(m.dim(x), rest.size());
    for (std::size_t k = 0; k < rest.size(); ++k) basis(rest[k], k) = Rational(1);
    out.dims.push_back(rest.size());
    out.basis.push_back(std::move(basis));
  }
  return out;
}

SubspaceData socle(const Representation& m) {
  const Poset& p = m.base();
  const std::size_t n = p.size();
  SubspaceData out;
  for (std::size_t x = 0; x < n; ++x) {
    // Kernels of the cover maps cut out the socle.
    std::size_t total = 0;
    for (std::size_t y : p.upper_covers(x)) total += m.dim(y);
    Matrix stack(total, m.dim(x));
    std::size_t at = 0;
    for (std::size_t y : p.upper_covers(x)) {
      const Matrix& f = m.map(x, y);
      for (std::size_t i = 0; i < f.rows(); ++i, ++at)
        for (std::size_t j = 0; j < f.cols(); ++j) stack(at, j) = f(i, j);
    }
    auto ns = nullspace(stack);
    out.dims.push_back(ns.basis.cols());
    out.basis.push_back(std::move(ns.basis));
  }
  return out;
}

std::vector<std::size_t> dim_vector(const Representation& m) { return m.dims(); }

CoverResult projective_cover(const RepPtr& m) {
  const Poset& p = m->base();
  const std::size_t n = p.size();
  auto ech = radical_echelon(*m);
  std::vector<std::size_t> multiplicities(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> gens;  // (element, coordinate row)
  std::vector<RepPtr> parts;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t r = 0; r < m->dim(x); ++r) {
      if (std::binary_search(ech[x].pivot_rows.begin(), ech[x].pivot_rows.end(), r)) continue;
      gens.emplace_back(x, r);
      parts.push_back(projective(m->base_ptr(), x));
      ++multiplicities[x];
    }
  }
  auto sum = direct_sum(m->base_ptr(), parts);
  std::vector<Matrix> comps;
  comps.reserve(n);
  for (std::size_t y = 0; y < n; ++y) {
    Matrix c(m->dim(y), sum.rep->dim(y));
    std::size_t col = 0;
    for (const auto& [x, r] : gens) {
      if (!p.le(x, y)) continue;
      const Matrix& f = m->map(x, y);
      for (std::size_t i = 0; i < m->dim(y); ++i) c(i, col) = f(i, r);
      ++col;
    }
    comps.push_back(std::move(c));
  }
  Morphism epi(sum.rep, m, std::move(comps));
  for (std::size_t y = 0; y < n; ++y) {
    if (epi.rank_at(y) != m->dim(y)) {
      fail(errc::internal_inconsistency, "projective cover is not onto");
    }
  }
  return CoverResult{std::move(multiplicities), std::move(epi)};
}

EnvelopeResult injective_envelope(const RepPtr& m) {
  const Poset& p = m->base();
  const std::size_t n = p.size();
  auto soc = socle(*m);
  std::vector<std::size_t> multiplicities(n, 0);
  // One functional per socle basis vector: selecting the basis vector's free
  // coordinate restricts to the dual basis on the socle.
  std::vector<std::pair<std::size_t, std::size_t>> funcs;  // (element, coordinate row)
  std::vector<RepPtr> parts;
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix& w = soc.basis[x];
    for (std::size_t k = 0; k < w.cols(); ++k) {
      std::size_t free_row = m->dim(x);
      for (std::size_t r = 0; r < m->dim(x); ++r) {
        if (!w(r, k).is_one()) continue;
        bool unit_row = true;
        for (std::size_t k2 = 0; k2 < w.cols() && unit_row; ++k2)
          if (k2 != k && !w(r, k2).is_zero()) unit_row = false;
        if (unit_row) {
          free_row = r;
          break;
        }
      }
      if (free_row == m->dim(x)) fail(errc::internal_inconsistency, "socle basis not in standard form");
      funcs.emplace_back(x, free_row);
      parts.push_back(injective(m->base_ptr(), x));
      ++multiplicities[x];
    }
  }
  auto sum = direct_sum(m->base_ptr(), parts);
  std::vector<Matrix> comps;
  comps.reserve(n);
  for (std::size_t y = 0; y < n; ++y) {
    Matrix c(sum.rep->dim(y), m->dim(y));
    std::size_t row = 0;
    for (const auto& [x, r] : funcs) {
      if (!p.le(y, x)) continue;
      const Matrix& f = m->map(y, x);
      for (std::size_t j = 0; j < m->dim(y); ++j) c(row, j) = f(r, j);
      ++row;
    }
    comps.push_back(std::move(c));
  }
  Morphism mono(m, sum.rep, std::move(comps));
  for (std::size_t y = 0; y < n; ++y) {
    if (mono.rank_at(y) != m->dim(y)) {
      fail(errc::internal_inconsistency, "injective envelope is not injective");
    }
  }
  return EnvelopeResult{std::move(multiplicities), std::move(mono)};
}

KernelResult kernel(const Morphism& f) {
  const RepPtr& src = f.source();
  const Poset& p = src->base();
  const std::size_t n = p.size();
  std::vector<Matrix> bases(n);
  std::vector<std::size_t> dims(n);
  for (std::size_t x = 0; x < n; ++x) {
    bases[x] = nullspace(f.component(x)).basis;
    dims[x] = bases[x].cols();
  }
  auto ker = std::make_shared<Representation>(src->base_ptr(), dims);
  complete_functorially(*ker, [&](std::size_t x, std::size_t y) {
    if (dims[x] == 0 || dims[y] == 0) return Matrix(dims[y], dims[x]);
    return solve_exact(bases[y], src->map(x, y) * bases[x]);
  });
  Morphism incl(ker, src, std::move(bases));
  return KernelResult{std::move(ker), std::move(incl)};
}

CokernelResult cokernel(const Morphism& f) {
  const RepPtr& dst = f.target();
  const Poset& p = dst->base();
  const std::size_t n = p.size();
  std::vector<Matrix> projections(n), sections(n);
  std::vector<std::size_t> dims(n);
  for (std::size_t y = 0; y < n; ++y) {
    auto ech = column_echelon(f.component(y));
    const std::size_t d = dst->dim(y);
    std::vector<std::size_t> rest;
    for (std::size_t r = 0; r < d; ++r)
      if (!std::binary_search(ech.pivot_rows.begin(), ech.pivot_rows.end(), r)) rest.push_back(r);
    dims[y] = rest.size();
    Matrix q(rest.size(), d), s(d, rest.size());
    for (std::size_t k = 0; k < rest.size(); ++k) {
      q(k, rest[k]) = Rational(1);
      for (std::size_t t = 0; t < ech.pivot_rows.size(); ++t)
        q(k, ech.pivot_rows[t]) = -ech.basis(rest[k], t);
      s(rest[k], k) = Rational(1);
    }
    projections[y] = std::move(q);
    sections[y] = std::move(s);
  }
  auto coker = std::make_shared<Representation>(dst->base_ptr(), dims);
  complete_functorially(*coker, [&](std::size_t x, std::size_t y) {
    if (dims[x] == 0 || dims[y] == 0) return Matrix(dims[y], dims[x]);
    return projections[y] * (dst->map(x, y) * sections[x]);
  });
  Morphism proj(dst, coker, std::move(projections));
  return CokernelResult{std::move(coker), std::move(proj)};
}

}  // namespace coxlab
