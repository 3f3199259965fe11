#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace lieboson {

/// Exact Gaussian rational re + i*im.
struct GaussRational {
  mpq_class re{0};
  mpq_class im{0};

  GaussRational() = default;
  GaussRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  GaussRational inverse() const;

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRational operator-() const { return {-re, -im}; }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Pivot cost used by exact elimination; every Gaussian rational is one term.
inline std::size_t pivot_cost(const GaussRational&) { return 1; }
inline bool is_zero(const GaussRational& x) { return x.is_zero(); }

/// Largest square divisor split: n = root^2 * core with core squarefree.
/// Trial division up to 10^6; throws Unsupported beyond that.
struct SquarefreeSplit {
  mpz_class root;
  std::uint64_t core;
};
SquarefreeSplit squarefree_split(const mpz_class& n);

/// Finite sum  sum_n q_n * sqrt(n)  with n squarefree and q_n in Q(i).
///
/// The stored form is canonical: keys are squarefree, coefficients are
/// nonzero, so equality is structural.
class RadicalScalar {
 public:
  using Terms = std::map<std::uint64_t, GaussRational>;

  RadicalScalar() = default;
  RadicalScalar(long value) : RadicalScalar(mpq_class(value)) {}  // NOLINT
  RadicalScalar(int value) : RadicalScalar(mpq_class(value)) {}   // NOLINT
  RadicalScalar(const mpq_class& q);                               // NOLINT
  RadicalScalar(const GaussRational& g);                           // NOLINT

  static RadicalScalar rational(long num, long den = 1);
  static RadicalScalar gaussian(const mpq_class& re, const mpq_class& im);
  static RadicalScalar imaginary_unit();
  /// sqrt(q) for a non-negative rational q.
  static RadicalScalar sqrt(const mpq_class& q);
  /// Builds a canonical value from arbitrary (possibly non-squarefree) keys.
  static RadicalScalar from_terms(const std::map<std::uint64_t, GaussRational>& raw);

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_gaussian_rational() const;
  /// Rational value; only valid when is_rational().
  mpq_class rational_value() const;

  RadicalScalar conj() const;
  RadicalScalar inverse() const;
  std::complex<double> to_complex() const;

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& o);
  RadicalScalar& operator-=(const RadicalScalar& o);
  RadicalScalar& operator*=(const RadicalScalar& o);
  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(RadicalScalar a, const RadicalScalar& b) { return a *= b; }
  friend RadicalScalar operator/(const RadicalScalar& a, const RadicalScalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
    return a.terms_ == b.terms_;
  }

  /// "(-1/2)*sqrt(3) + (1/3)i*sqrt(2)"
  std::string to_string() const;
  /// Same as to_string but parenthesized when it has more than one term.
  std::string to_factor_string() const;
  nlohmann::json to_json() const;
  static RadicalScalar from_json(const nlohmann::json& j);

 private:
  Terms terms_;
};

inline std::size_t pivot_cost(const RadicalScalar& x) { return x.term_count(); }
inline bool is_zero(const RadicalScalar& x) { return x.is_zero(); }

/// sqrt(n) for an integer n >= 0.
inline RadicalScalar sqrt_int(long n) { return RadicalScalar::sqrt(mpq_class(n)); }

}  // namespace lieboson
