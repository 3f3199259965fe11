#include "lieboson/exact_scalar.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "lieboson/errors.hpp"
#include "lieboson/linalg.hpp"

namespace lieboson {

namespace {

constexpr unsigned long kTrialLimit = 1000000;
constexpr std::size_t kMaxRadicands = 64;

std::uint64_t to_u64(const mpz_class& z) {
  if (z > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max())))
    throw Unsupported("radicand exceeds 64 bits");
  return std::stoull(z.get_str());
}

/// sqrt(m) * sqrt(n) = factor * sqrt(core) for squarefree m, n.
std::pair<std::uint64_t, std::uint64_t> radicand_product(std::uint64_t m, std::uint64_t n) {
  const std::uint64_t g = std::gcd(m, n);
  const unsigned __int128 core =
      static_cast<unsigned __int128>(m / g) * static_cast<unsigned __int128>(n / g);
  if (core > std::numeric_limits<std::uint64_t>::max())
    throw Unsupported("radicand product exceeds 64 bits");
  return {g, static_cast<std::uint64_t>(core)};
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string coefficient_str(const GaussRational& c, bool bare_unit) {
  const bool has_re = sgn(c.re) != 0;
  const bool has_im = sgn(c.im) != 0;
  if (has_re && !has_im) {
    if (bare_unit && c.re == 1) return "";
    if (bare_unit && c.re == -1) return "-";
    return "(" + rational_str(c.re) + ")";
  }
  if (!has_re && has_im) {
    if (c.im == 1) return "i";
    if (c.im == -1) return "-i";
    return "(" + rational_str(c.im) + ")i";
  }
  std::string im = sgn(c.im) < 0 ? " - " + rational_str(-c.im) : " + " + rational_str(c.im);
  return "(" + rational_str(c.re) + im + "i)";
}

}  // namespace

GaussRational GaussRational::inverse() const {
  const mpq_class norm = re * re + im * im;
  if (sgn(norm) == 0) throw ZeroDivision("inverse of zero Gaussian rational");
  return {re / norm, -im / norm};
}

SquarefreeSplit squarefree_split(const mpz_class& n) {
  if (sgn(n) <= 0) throw DomainError("squarefree_split needs a positive integer");
  mpz_class rest = n;
  mpz_class root = 1;
  mpz_class core = 1;
  for (unsigned long d = 2; d <= kTrialLimit && mpz_class(d) * d <= rest; ++d) {
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
      rest /= d;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) root *= d;
    if (e % 2 == 1) core *= d;
  }
  if (rest > 1) {
    const mpz_class limit = mpz_class(kTrialLimit) * kTrialLimit;
    if (rest >= limit) throw Unsupported("radicand factorization beyond trial-division limit");
    core *= rest;  // remaining cofactor is prime
  }
  return {root, to_u64(core)};
}

RadicalScalar::RadicalScalar(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (sgn(c) != 0) terms_.emplace(1, GaussRational(c));
}

RadicalScalar::RadicalScalar(const GaussRational& g) {
  if (!g.is_zero()) terms_.emplace(1, g);
}

RadicalScalar RadicalScalar::rational(long num, long den) {
  if (den == 0) throw ZeroDivision("rational with zero denominator");
  return RadicalScalar(mpq_class(num, den));
}

RadicalScalar RadicalScalar::gaussian(const mpq_class& re, const mpq_class& im) {
  return RadicalScalar(GaussRational(re, im));
}

RadicalScalar RadicalScalar::imaginary_unit() { return gaussian(0, 1); }

RadicalScalar RadicalScalar::sqrt(const mpq_class& q_in) {
  mpq_class q = q_in;
  q.canonicalize();
  if (sgn(q) < 0) throw DomainError("sqrt of a negative rational");
  if (sgn(q) == 0) return {};
  // sqrt(a/b) = sqrt(a*b)/b
  const mpz_class num = q.get_num();
  const mpz_class den = q.get_den();
  const auto split = squarefree_split(num * den);
  RadicalScalar out;
  out.terms_.emplace(split.core, GaussRational(mpq_class(split.root, den)));
  return out;
}

RadicalScalar RadicalScalar::from_terms(const std::map<std::uint64_t, GaussRational>& raw) {
  RadicalScalar out;
  for (const auto& [radicand, coeff] : raw) {
    if (radicand == 0 || coeff.is_zero()) continue;
    const auto split = squarefree_split(mpz_class(std::to_string(radicand)));
    const GaussRational scaled = coeff * GaussRational(mpq_class(split.root));
    auto [it, inserted] = out.terms_.emplace(split.core, scaled);
    if (!inserted) {
      it->second = it->second + scaled;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

bool RadicalScalar::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 1 && sgn(terms_.begin()->second.im) == 0;
}

bool RadicalScalar::is_gaussian_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

mpq_class RadicalScalar::rational_value() const {
  if (!is_rational()) throw DomainError("value is not rational: " + to_string());
  return terms_.empty() ? mpq_class(0) : terms_.begin()->second.re;
}

RadicalScalar RadicalScalar::conj() const {
  RadicalScalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
  return out;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) { return *this += -o; }

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& o) {
  RadicalScalar out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      const auto [factor, core] = radicand_product(ka, kb);
      const GaussRational c = ca * cb * GaussRational(mpq_class(std::to_string(factor)));
      auto [it, inserted] = out.terms_.emplace(core, c);
      if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  *this = std::move(out);
  return *this;
}

RadicalScalar RadicalScalar::inverse() const {
  if (is_zero()) throw ZeroDivision("inverse of zero");
  if (is_gaussian_rational()) return RadicalScalar(terms_.begin()->second.inverse());

  // Radicand set closed under multiplication by the operand's radicands.
  std::set<std::uint64_t> closure{1};
  for (const auto& [k, c] : terms_) closure.insert(k);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint64_t> current(closure.begin(), closure.end());
    for (const auto& [k, c] : terms_)
      for (auto s : current)
        if (closure.insert(radicand_product(k, s).second).second) grew = true;
    if (closure.size() > kMaxRadicands)
      throw Unsupported("radicand closure exceeds 64 elements");
  }
  const std::vector<std::uint64_t> basis(closure.begin(), closure.end());
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  // Column j holds the coordinates of (*this) * sqrt(basis[j]).
  Matrix<GaussRational> mult(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [k, c] : terms_) {
      const auto [factor, core] = radicand_product(k, basis[j]);
      auto& cell = mult(index.at(core), j);
      cell = cell + c * GaussRational(mpq_class(std::to_string(factor)));
    }
  std::vector<GaussRational> rhs(basis.size());
  rhs[index.at(1)] = GaussRational(1);
  const auto x = solve(mult, rhs);
  if (!x) throw ZeroDivision("multiplication map is singular");
  RadicalScalar out;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!(*x)[j].is_zero()) out.terms_.emplace(basis[j], (*x)[j]);
  return out;
}

std::complex<double> RadicalScalar::to_complex() const {
  std::complex<double> sum = 0.0;
  for (const auto& [k, c] : terms_) {
    const double root = std::sqrt(static_cast<double>(k));
    sum += std::complex<double>(c.re.get_d(), c.im.get_d()) * root;
  }
  return sum;
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (k == 1) {
      const std::string s = coefficient_str(c, false);
      // Plain rationals print without parentheses.
      if (sgn(c.im) == 0)
        os << rational_str(c.re);
      else
        os << s;
    } else {
      const std::string s = coefficient_str(c, true);
      os << s << (s.empty() || s == "-" ? "" : "*") << "sqrt(" << k << ")";
    }
  }
  return os.str();
}

std::string RadicalScalar::to_factor_string() const {
  const std::string s = to_string();
  return term_count() > 1 ? "(" + s + ")" : s;
}

nlohmann::json RadicalScalar::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    out.push_back({{"radicand", k},
                   {"re", {c.re.get_num().get_str(), c.re.get_den().get_str()}},
                   {"im", {c.im.get_num().get_str(), c.im.get_den().get_str()}}});
  }
  return out;
}

RadicalScalar RadicalScalar::from_json(const nlohmann::json& j) {
  std::map<std::uint64_t, GaussRational> raw;
  auto parse = [](const nlohmann::json& pair) {
    mpq_class q(mpz_class(pair.at(0).get<std::string>()), mpz_class(pair.at(1).get<std::string>()));
    q.canonicalize();
    return q;
  };
  for (const auto& term : j) {
    const auto k = term.at("radicand").get<std::uint64_t>();
    raw[k] = raw[k] + GaussRational(parse(term.at("re")), parse(term.at("im")));
  }
  return from_terms(raw);
}

}  // namespace lieboson
