#include "lieboson/sl2_wdd.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lieboson/errors.hpp"

namespace lieboson {

Sl2Triple verify_triple(const OperatorPoly& x, const OperatorPoly& y, const OperatorPoly& h, std::string name) {
  const OperatorPoly r1 = commutator(h, x) - x * RadicalScalar(2);
  if (!r1.is_zero()) throw NotSl2("[h,x] != 2x; residual " + r1.to_string());
  const OperatorPoly r2 = commutator(h, y) + y * RadicalScalar(2);
  if (!r2.is_zero()) throw NotSl2("[h,y] != -2y; residual " + r2.to_string());
  const OperatorPoly r3 = commutator(x, y) - h;
  if (!r3.is_zero()) throw NotSl2("[x,y] != h; residual " + r3.to_string());
  return {std::move(name), x, y, h};
}

std::string WeightedDynkinDiagram::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? " " : "") << labels[i];
  os << ']';
  return os.str();
}

std::string WeightedDynkinDiagram::compact() const {
  std::string s;
  for (int l : labels) s += std::to_string(l);
  return s;
}

Matrix<RadicalScalar> defining_matrix(const OperatorPoly& e, const std::vector<Mode>& modes) {
  if (!e.is_bilinear()) throw NotBilinear(e.to_string());
  std::map<Mode, std::size_t> index;
  for (std::size_t i = 0; i < modes.size(); ++i) index[modes[i]] = i;
  Matrix<RadicalScalar> m(modes.size(), modes.size());
  for (const auto& [mono, c] : e.terms()) {
    const Mode* creator = nullptr;
    const Mode* annihilator = nullptr;
    for (const auto& p : mono.powers()) {
      if (p.creations == 1) creator = &p.mode;
      if (p.annihilations == 1) annihilator = &p.mode;
    }
    const auto ic = index.find(*creator);
    const auto ia = index.find(*annihilator);
    if (ic == index.end() || ia == index.end())
      throw DomainError("operator uses a mode outside the defining space: " + mono.to_string());
    m(ic->second, ia->second) += c;
  }
  return m;
}

std::vector<RadicalScalar> characteristic_polynomial(const Matrix<RadicalScalar>& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = a.rows();
  std::vector<RadicalScalar> c(n + 1);
  c[n] = RadicalScalar(1);
  Matrix<RadicalScalar> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const Matrix<RadicalScalar> am = a * m;
    RadicalScalar tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr * RadicalScalar::rational(1, static_cast<long>(k));
  }
  return c;
}

std::vector<long> integer_spectrum(const Matrix<RadicalScalar>& m) {
  const auto coeffs = characteristic_polynomial(m);
  std::vector<mpz_class> poly;  // poly[i] multiplies x^i
  for (const auto& c : coeffs) {
    if (!c.is_rational()) throw NonIntegerSpectrum("characteristic polynomial has irrational coefficient " + c.to_string());
    const mpq_class q = c.rational_value();
    if (q.get_den() != 1) throw NonIntegerSpectrum("characteristic polynomial has fractional coefficient " + q.get_str());
    poly.push_back(q.get_num());
  }
  auto deflate = [&](const mpz_class& root) -> bool {
    // Synthetic division by (x - root); succeeds when the remainder is zero.
    const std::size_t deg = poly.size() - 1;
    std::vector<mpz_class> quotient(deg);
    mpz_class carry = 0;
    for (std::size_t i = deg + 1; i-- > 0;) {
      const mpz_class v = poly[i] + carry * root;
      if (i == 0) {
        if (v != 0) return false;
      } else {
        quotient[i - 1] = v;
      }
      carry = v;
    }
    poly = std::move(quotient);
    return true;
  };

  std::vector<long> roots;
  while (poly.size() > 1) {
    if (poly[0] == 0) {
      poly.erase(poly.begin());
      roots.push_back(0);
      continue;
    }
    const mpz_class c0 = abs(poly[0]);
    bool found = false;
    for (mpz_class d = 1; d * d <= c0 && !found; ++d) {
      if (c0 % d != 0) continue;
      for (const mpz_class& cand : {d, mpz_class(-d), mpz_class(c0 / d), mpz_class(-(c0 / d))}) {
        if (deflate(cand)) {
          roots.push_back(cand.get_si());
          found = true;
          break;
        }
      }
    }
    if (!found) throw NonIntegerSpectrum("characteristic polynomial has a non-integer root");
  }
  std::sort(roots.rbegin(), roots.rend());
  return roots;
}

WeightedDynkinDiagram wdd_from_spectrum(std::vector<long> spectrum) {
  std::sort(spectrum.rbegin(), spectrum.rend());
  WeightedDynkinDiagram w;
  for (std::size_t i = 0; i + 1 < spectrum.size(); ++i) {
    const long diff = spectrum[i] - spectrum[i + 1];
    if (diff < 0 || diff > 2)
      throw NonIntegerSpectrum("h-spectrum gap " + std::to_string(diff) + " outside {0,1,2}");
    w.labels.push_back(static_cast<int>(diff));
  }
  return w;
}

WeightedDynkinDiagram wdd(const Sl2Triple& t, const std::vector<Mode>& modes) {
  return wdd_from_spectrum(integer_spectrum(defining_matrix(t.h, modes)));
}

WeightedDynkinDiagram partition_to_wdd(const std::vector<int>& partition) {
  std::vector<long> spectrum;
  for (int part : partition)
    for (int v = part - 1; v >= 1 - part; v -= 2) spectrum.push_back(v);
  return wdd_from_spectrum(std::move(spectrum));
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Whether a multiset of integers is a disjoint union of strings m, m-2, ..., -m.
bool splits_into_strings(std::multiset<long> values) {
  while (!values.empty()) {
    const long top = *values.rbegin();
    if (top < 0) return false;
    for (long v = top; v >= -top; v -= 2) {
      auto it = values.find(v);
      if (it == values.end()) return false;
      values.erase(it);
    }
  }
  return true;
}

}  // namespace

std::vector<WeightedDynkinDiagram> enumerate_classes(int n) {
  if (n < 2) throw DomainError("enumerate_classes needs n >= 2");
  std::vector<WeightedDynkinDiagram> out;
  std::vector<int> labels(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    if (std::any_of(labels.begin(), labels.end(), [](int l) { return l != 0; })) {
      // Relative heights b_n = 0, b_i = b_{i+1} + l_i; eigenvalues are b_i - mean.
      std::vector<long> b(static_cast<std::size_t>(n), 0);
      for (int i = n - 2; i >= 0; --i) b[i] = b[i + 1] + labels[i];
      long sum = 0;
      for (long v : b) sum += v;
      bool integral = true;
      std::multiset<long> spectrum;
      for (long v : b) {
        if ((n * v - sum) % n != 0) {
          integral = false;
          break;
        }
        spectrum.insert((n * v - sum) / n);
      }
      if (integral && splits_into_strings(spectrum)) out.push_back({labels});
    }
    std::size_t i = 0;
    for (; i < labels.size(); ++i) {
      if (++labels[i] <= 2) break;
      labels[i] = 0;
    }
    if (i == labels.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const WeightedDynkinDiagram& a, const WeightedDynkinDiagram& b) {
    int sa = 0, sb = 0;
    for (int l : a.labels) sa += l;
    for (int l : b.labels) sb += l;
    if (sa != sb) return sa < sb;
    return a.labels < b.labels;
  });
  return out;
}

}  // namespace lieboson
