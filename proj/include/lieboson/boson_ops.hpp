#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieboson/exact_scalar.hpp"
#include "lieboson/half_int.hpp"

namespace lieboson {

/// A boson species of rank l with 2l+1 components mu = -l..l.
struct BosonSpecies {
  std::string name;
  HalfInt rank;

  bool has_component(HalfInt mu) const {
    return same_parity(mu, rank) && -rank <= mu && mu <= rank;
  }
  std::vector<HalfInt> components() const;
};

/// One single-particle mode (species, mu). Modes are totally ordered by
/// (species name, mu ascending); that order fixes the canonical monomial layout.
struct Mode {
  std::string species;
  HalfInt mu;

  auto operator<=>(const Mode&) const = default;
  std::string to_string() const;
};

enum class FactorKind { creation, annihilation };

struct BosonFactor {
  Mode mode;
  FactorKind kind;
};

struct SignedFactor {
  int sign;
  BosonFactor factor;
};

/// Covariant annihilator: p~_mu = (-1)^(l-mu) p_{-mu}. For l=0, s~ = s.
SignedFactor tilde(const BosonSpecies& species, HalfInt mu);

/// Power of one mode inside a normal-ordered monomial: (a^dag)^creations a^annihilations.
struct ModePower {
  Mode mode;
  int creations = 0;
  int annihilations = 0;

  auto operator<=>(const ModePower&) const = default;
};

/// Normal-ordered product of creation and annihilation factors. Different
/// modes commute, so the monomial is stored per mode, sorted by mode.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<ModePower> powers);

  const std::vector<ModePower>& powers() const { return powers_; }
  int creation_count() const;
  int annihilation_count() const;
  int degree() const { return creation_count() + annihilation_count(); }
  bool is_identity() const { return powers_.empty(); }

  /// Factor list: creations then annihilations, each sorted by mode.
  std::vector<BosonFactor> factors() const;
  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<ModePower> powers_;
};

/// Polynomial in boson operators, always stored normal-ordered and canonical.
class OperatorPoly {
 public:
  using Terms = std::map<Monomial, RadicalScalar>;

  OperatorPoly() = default;

  static OperatorPoly identity();
  static OperatorPoly constant(const RadicalScalar& c);
  static OperatorPoly creation(const Mode& m);
  static OperatorPoly annihilation(const Mode& m);
  static OperatorPoly from_factor(const BosonFactor& f);
  static OperatorPoly from_factor(const SignedFactor& f);
  static OperatorPoly monomial(const Monomial& m, const RadicalScalar& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial (zero when absent).
  RadicalScalar coefficient(const Monomial& m) const;

  OperatorPoly operator-() const;
  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o);
  OperatorPoly& operator*=(const RadicalScalar& c);
  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator*(OperatorPoly a, const RadicalScalar& c) { return a *= c; }
  friend OperatorPoly operator*(const RadicalScalar& c, OperatorPoly a) { return a *= c; }
  /// Operator product, re-expressed in normal order.
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// True when every monomial has one creation and one annihilation factor.
  bool is_bilinear() const;
  /// True when every monomial has as many creations as annihilations.
  bool conserves_number() const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void add_term(const Monomial& m, const RadicalScalar& c);
  Terms terms_;
};

OperatorPoly multiply(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b);
OperatorPoly adjoint(const OperatorPoly& a);

/// Convenience: a^dag_i a_j.
OperatorPoly bilinear(const Mode& creator, const Mode& annihilator);

}  // namespace lieboson
