#include "lieboson/lie_algebra.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "lieboson/errors.hpp"

namespace lieboson {

namespace {

Vec scaled_add(Vec a, const Vec& b, const RadicalScalar& factor) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) a[i] += factor * b[i];
  return a;
}

Matrix<RadicalScalar> as_rows(const SubBasis& vectors, std::size_t dim) {
  Matrix<RadicalScalar> m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  return m;
}

}  // namespace

// --- PolySpan -------------------------------------------------------------

PolySpan::PolySpan(const std::vector<OperatorPoly>& vectors) {
  for (const auto& v : vectors) add(v);
}

bool PolySpan::add(const OperatorPoly& v) {
  const std::size_t index = inputs_++;
  for (auto& row : rows_) row.transform.resize(inputs_);

  OperatorPoly w = v;
  Vec t(inputs_);
  t[index] = RadicalScalar(1);
  for (const auto& row : rows_) {
    const RadicalScalar alpha = w.coefficient(row.pivot);
    if (alpha.is_zero()) continue;
    w -= row.vector * alpha;
    t = scaled_add(std::move(t), row.transform, -alpha);
  }
  if (w.is_zero()) {
    dependent_.push_back(index);
    return false;
  }
  // Pivot: the monomial whose coefficient has the fewest radicand terms.
  const Monomial* pivot = nullptr;
  std::size_t best = 0;
  for (const auto& [m, c] : w.terms())
    if (!pivot || c.term_count() < best) {
      pivot = &m;
      best = c.term_count();
    }
  const Monomial p = *pivot;
  const RadicalScalar inv = w.coefficient(p).inverse();
  w *= inv;
  for (auto& x : t) x *= inv;
  for (auto& row : rows_) {
    const RadicalScalar beta = row.vector.coefficient(p);
    if (beta.is_zero()) continue;
    row.vector -= w * beta;
    row.transform = scaled_add(std::move(row.transform), t, -beta);
  }
  rows_.push_back({std::move(w), p, std::move(t)});
  return true;
}

std::optional<Vec> PolySpan::coordinates(const OperatorPoly& x) const {
  OperatorPoly w = x;
  Vec c(inputs_);
  for (const auto& row : rows_) {
    const RadicalScalar alpha = w.coefficient(row.pivot);
    if (alpha.is_zero()) continue;
    w -= row.vector * alpha;
    c = scaled_add(std::move(c), row.transform, alpha);
  }
  if (!w.is_zero()) return std::nullopt;
  return c;
}

OperatorPoly PolySpan::residual(const OperatorPoly& x) const {
  OperatorPoly w = x;
  for (const auto& row : rows_) {
    const RadicalScalar alpha = w.coefficient(row.pivot);
    if (!alpha.is_zero()) w -= row.vector * alpha;
  }
  return w;
}

// --- bracket tables ---------------------------------------------------------

namespace {

Vec bracket_coords(const std::vector<NamedElement>& basis, const PolySpan& span, std::size_t i, std::size_t j) {
  const OperatorPoly b = commutator(basis[i].op, basis[j].op);
  auto coords = span.coordinates(b);
  if (!coords)
    throw NotClosed("[" + basis[i].name + ", " + basis[j].name + "] leaves the span; residual " +
                    span.residual(b).to_string());
  return *coords;
}

}  // namespace

std::vector<Vec> bracket_table_serial(const std::vector<NamedElement>& basis, const PolySpan& span) {
  const std::size_t d = basis.size();
  std::vector<Vec> table(d * d, Vec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      table[i * d + j] = bracket_coords(basis, span, i, j);
      for (std::size_t k = 0; k < d; ++k) table[j * d + i][k] = -table[i * d + j][k];
    }
  return table;
}

std::vector<Vec> bracket_table_parallel(const std::vector<NamedElement>& basis, const PolySpan& span) {
  const std::size_t d = basis.size();
  std::vector<Vec> table(d * d, Vec(d));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);

  std::vector<std::exception_ptr> errors(pairs.size());
  const long n = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (long p = 0; p < n; ++p) {
    const auto [i, j] = pairs[static_cast<std::size_t>(p)];
    try {
      Vec c = bracket_coords(basis, span, i, j);
      Vec neg(d);
      for (std::size_t k = 0; k < d; ++k) neg[k] = -c[k];
      table[i * d + j] = std::move(c);
      table[j * d + i] = std::move(neg);
    } catch (...) {
      errors[static_cast<std::size_t>(p)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return table;
}

// --- LieAlgebra -------------------------------------------------------------

LieAlgebra LieAlgebra::from_generators(std::vector<NamedElement> basis, Exec exec) {
  LieAlgebra l;
  l.basis_ = std::move(basis);
  for (const auto& e : l.basis_) l.span_.add(e.op);
  if (!l.span_.dependent_inputs().empty()) {
    const auto& bad = l.basis_[l.span_.dependent_inputs().front()];
    throw LinearlyDependent(bad.name + " lies in the span of the preceding elements");
  }
  l.brackets_ = exec == Exec::serial ? bracket_table_serial(l.basis_, l.span_)
                                     : bracket_table_parallel(l.basis_, l.span_);

  const std::size_t d = l.dimension();
  std::vector<Matrix<RadicalScalar>> ads;
  ads.reserve(d);
  for (std::size_t i = 0; i < d; ++i) ads.push_back(l.ad(l.unit(i)));
  l.killing_ = Matrix<RadicalScalar>(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      RadicalScalar tr;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          if (ads[i](a, b).is_zero() || ads[j](b, a).is_zero()) continue;
          tr += ads[i](a, b) * ads[j](b, a);
        }
      l.killing_(i, j) = tr;
      l.killing_(j, i) = tr;
    }
  return l;
}

OperatorPoly LieAlgebra::to_operator(const Vec& coords) const {
  OperatorPoly out;
  for (std::size_t i = 0; i < dimension(); ++i)
    if (!coords[i].is_zero()) out += basis_[i].op * coords[i];
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t d = dimension();
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const RadicalScalar f = x[i] * y[j];
      const Vec& c = brackets_[i * d + j];
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero()) out[k] += f * c[k];
    }
  }
  return out;
}

Matrix<RadicalScalar> LieAlgebra::ad(const Vec& x) const {
  const std::size_t d = dimension();
  Matrix<RadicalScalar> m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vec col = bracket(x, unit(j));
    for (std::size_t k = 0; k < d; ++k) m(k, j) = col[k];
  }
  return m;
}

RadicalScalar LieAlgebra::killing_form(const Vec& x, const Vec& y) const {
  RadicalScalar out;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dimension(); ++j)
      if (!y[j].is_zero() && !killing_(i, j).is_zero()) out += x[i] * killing_(i, j) * y[j];
  }
  return out;
}

Vec LieAlgebra::unit(std::size_t i) const {
  Vec v(dimension());
  v[i] = RadicalScalar(1);
  return v;
}

std::string LieAlgebra::describe(const Vec& coords) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dimension(); ++i) {
    const RadicalScalar& c = coords[i];
    if (c.is_zero()) continue;
    std::string term;
    if (c == RadicalScalar(1))
      term = basis_[i].name;
    else if (c == RadicalScalar(-1))
      term = "-" + basis_[i].name;
    else
      term = c.to_factor_string() + "*" + basis_[i].name;
    if (!first && term.front() != '-') os << '+';
    os << term;
    first = false;
  }
  return first ? "0" : os.str();
}

// --- structure ------------------------------------------------------------

SubBasis span_basis(const SubBasis& vectors, std::size_t dim) { return row_space(vectors, dim); }

bool span_contains(const SubBasis& outer, const SubBasis& inner, std::size_t dim) {
  const std::size_t r = span_basis(outer, dim).size();
  SubBasis both = outer;
  both.insert(both.end(), inner.begin(), inner.end());
  return span_basis(both, dim).size() == r;
}

bool same_span(const SubBasis& a, const SubBasis& b, std::size_t dim) {
  return span_contains(a, b, dim) && span_contains(b, a, dim);
}

SubBasis normalize_last_one(SubBasis vectors) {
  for (auto& v : vectors) {
    auto it = std::find_if(v.rbegin(), v.rend(), [](const RadicalScalar& x) { return !x.is_zero(); });
    if (it == v.rend()) continue;
    const RadicalScalar inv = it->inverse();
    for (auto& x : v) x *= inv;
  }
  return vectors;
}

SubBasis center(const LieAlgebra& l) {
  const std::size_t d = l.dimension();
  // x is central iff sum_i x_i c^k_{ij} = 0 for all j, k.
  Matrix<RadicalScalar> m(d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) m(j * d + k, i) = l.structure_constant(i, j, k);
  return span_basis(nullspace(m), d);
}

SubBasis derived_algebra(const LieAlgebra& l, const SubBasis& sub) {
  SubBasis brackets;
  for (std::size_t a = 0; a < sub.size(); ++a)
    for (std::size_t b = a + 1; b < sub.size(); ++b) brackets.push_back(l.bracket(sub[a], sub[b]));
  return span_basis(brackets, l.dimension());
}

SubBasis derived_algebra(const LieAlgebra& l) {
  SubBasis all;
  for (std::size_t i = 0; i < l.dimension(); ++i) all.push_back(l.unit(i));
  return derived_algebra(l, all);
}

bool is_solvable(const LieAlgebra& l, const SubBasis& sub) {
  SubBasis current = span_basis(sub, l.dimension());
  while (!current.empty()) {
    SubBasis next = derived_algebra(l, current);
    if (next.size() == current.size()) return false;
    current = std::move(next);
  }
  return true;
}

SubBasis radical(const LieAlgebra& l) {
  const std::size_t d = l.dimension();
  const SubBasis derived = derived_algebra(l);
  Matrix<RadicalScalar> m(derived.size(), d);
  for (std::size_t r = 0; r < derived.size(); ++r)
    for (std::size_t i = 0; i < d; ++i) {
      RadicalScalar s;
      for (std::size_t j = 0; j < d; ++j)
        if (!derived[r][j].is_zero()) s += l.killing()(i, j) * derived[r][j];
      m(r, i) = s;
    }
  SubBasis rad = derived.empty() ? SubBasis{} : span_basis(nullspace(m), d);
  if (derived.empty())
    for (std::size_t i = 0; i < d; ++i) rad.push_back(l.unit(i));
  if (!is_solvable(l, rad)) throw VerificationFailure("Cartan-criterion radical is not solvable");
  return rad;
}

Matrix<RadicalScalar> restricted_killing(const LieAlgebra& l, const SubBasis& sub) {
  Matrix<RadicalScalar> g(sub.size(), sub.size());
  for (std::size_t a = 0; a < sub.size(); ++a)
    for (std::size_t b = a; b < sub.size(); ++b) {
      g(a, b) = l.killing_form(sub[a], sub[b]);
      g(b, a) = g(a, b);
    }
  return g;
}

LeviDecomposition levi_decomposition(const LieAlgebra& l) {
  const std::size_t d = l.dimension();
  const SubBasis rad = radical(l);
  const SubBasis cen = center(l);
  if (!same_span(rad, cen, d))
    throw NotReductive("radical (dim " + std::to_string(rad.size()) + ") differs from center (dim " +
                       std::to_string(cen.size()) + ")");
  LeviDecomposition out;
  out.radical = normalize_last_one(rad);
  out.levi = derived_algebra(l);
  if (out.radical.size() + out.levi.size() != d)
    throw VerificationFailure("radical and Levi dimensions do not add up");
  if (!out.levi.empty() && rank(restricted_killing(l, out.levi)) != out.levi.size())
    throw VerificationFailure("Killing form degenerate on the derived algebra");
  SubBasis rows = out.radical;
  rows.insert(rows.end(), out.levi.begin(), out.levi.end());
  out.witness = as_rows(rows, d);
  if (rank(out.witness) != d) throw VerificationFailure("radical and Levi part overlap");
  return out;
}

SubalgebraCheck is_subalgebra(const std::vector<OperatorPoly>& candidate, const LieAlgebra& l) {
  for (const auto& c : candidate)
    if (!l.contains(c)) return {false, "element outside the algebra: " + c.to_string()};
  const PolySpan span(candidate);
  for (std::size_t a = 0; a < candidate.size(); ++a)
    for (std::size_t b = a + 1; b < candidate.size(); ++b) {
      const OperatorPoly br = commutator(candidate[a], candidate[b]);
      if (!span.contains(br))
        return {false, "bracket of elements " + std::to_string(a) + " and " + std::to_string(b) +
                           " leaves the span: " + span.residual(br).to_string()};
    }
  return {true, "closed, dimension " + std::to_string(span.rank())};
}

SubBasis generate_subalgebra(const LieAlgebra& l, const SubBasis& generators) {
  const std::size_t d = l.dimension();
  SubBasis current = span_basis(generators, d);
  while (true) {
    SubBasis extended = current;
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) extended.push_back(l.bracket(current[a], current[b]));
    SubBasis next = span_basis(extended, d);
    if (next.size() == current.size()) return next;
    current = std::move(next);
  }
}

std::vector<NamedElement> named_elements(const LieAlgebra& l, const SubBasis& sub) {
  std::vector<NamedElement> out;
  for (const auto& v : sub) out.push_back({l.describe(v), l.to_operator(v)});
  return out;
}

}  // namespace lieboson
