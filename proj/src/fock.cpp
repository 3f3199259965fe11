#include "lieboson/fock.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include "lieboson/errors.hpp"

namespace lieboson {

FockBasis::FockBasis(std::vector<Mode> modes, int total) : modes_(std::move(modes)), total_(total) {
  if (total < 0) throw DomainError("boson number must be non-negative");
  if (modes_.empty()) throw DomainError("Fock basis needs at least one mode");
  std::vector<int> occ(modes_.size(), 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
    if (i + 1 == occ.size()) {
      occ[i] = left;
      lookup_[occ] = states_.size();
      states_.push_back(occ);
      return;
    }
    for (int k = left; k >= 0; --k) {
      occ[i] = k;
      fill(i + 1, left - k);
    }
  };
  fill(0, total);
}

std::size_t FockBasis::index(const std::vector<int>& occupations) const {
  const auto it = lookup_.find(occupations);
  return it == lookup_.end() ? states_.size() : it->second;
}

namespace {

struct Factor {
  std::size_t mode;
  int creations;
  int annihilations;
};

struct Term {
  std::complex<double> coefficient;
  std::vector<Factor> factors;
};

std::vector<Term> compile(const OperatorPoly& op, const FockBasis& basis) {
  if (!op.conserves_number()) throw NotNumberConserving(op.to_string());
  std::vector<Term> out;
  for (const auto& [mono, c] : op.terms()) {
    Term t{c.to_complex(), {}};
    for (const auto& p : mono.powers()) {
      std::size_t idx = basis.modes().size();
      for (std::size_t i = 0; i < basis.modes().size(); ++i)
        if (basis.modes()[i] == p.mode) idx = i;
      if (idx == basis.modes().size()) throw DomainError("mode " + p.mode.to_string() + " is not in the Fock basis");
      t.factors.push_back({idx, p.creations, p.annihilations});
    }
    out.push_back(std::move(t));
  }
  return out;
}

void fill_column(const std::vector<Term>& terms, const FockBasis& basis, std::size_t col, ComplexMatrix& m) {
  for (const auto& t : terms) {
    std::vector<int> occ = basis.state(col);
    double amp = 1.0;
    for (const auto& f : t.factors) {
      int& n = occ[f.mode];
      for (int k = 0; k < f.annihilations && amp != 0.0; ++k) {
        amp *= std::sqrt(static_cast<double>(n));
        --n;
      }
      if (amp == 0.0) break;
      for (int k = 0; k < f.creations; ++k) {
        ++n;
        amp *= std::sqrt(static_cast<double>(n));
      }
    }
    if (amp == 0.0) continue;
    m(basis.index(occ), col) += t.coefficient * amp;
  }
}

}  // namespace

ComplexMatrix fock_matrix_serial(const OperatorPoly& op, const FockBasis& basis) {
  const auto terms = compile(op, basis);
  ComplexMatrix m(basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) fill_column(terms, basis, col, m);
  return m;
}

ComplexMatrix fock_matrix_parallel(const OperatorPoly& op, const FockBasis& basis) {
  const auto terms = compile(op, basis);
  ComplexMatrix m(basis.size());
  const auto n = static_cast<long>(basis.size());
  // Each column is written by exactly one thread.
#pragma omp parallel for schedule(dynamic, 8)
  for (long col = 0; col < n; ++col) fill_column(terms, basis, static_cast<std::size_t>(col), m);
  return m;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = i; j < m.n; ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  os << m.n << ' ' << m.n << '\n';
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j)
      os << (j ? "  " : "") << m(i, j).real() << ' ' << m(i, j).imag();
    os << '\n';
  }
}

}  // namespace lieboson
