#include "lieboson/boson_ops.hpp"

#include <algorithm>
#include <sstream>

#include "lieboson/errors.hpp"

namespace lieboson {

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string mu_label(HalfInt mu) {
  if (mu.twice() > 0) return "+" + mu.to_string();
  return mu.to_string();
}

/// One contraction choice per mode: which power results and its weight.
struct ModeOutcome {
  ModePower power;
  long weight;
};

/// Product of two normal-ordered monomials. Per mode,
///   (a^+)^c1 a^a1 (a^+)^c2 a^a2 = sum_j C(a1,j) C(c2,j) j! (a^+)^(c1+c2-j) a^(a1+a2-j).
void multiply_monomials(const Monomial& x, const Monomial& y, const RadicalScalar& coeff,
                        std::map<Monomial, RadicalScalar>& out) {
  std::map<Mode, std::pair<ModePower, ModePower>> by_mode;
  for (const auto& p : x.powers()) by_mode[p.mode].first = p;
  for (const auto& p : y.powers()) by_mode[p.mode].second = p;

  std::vector<std::vector<ModeOutcome>> options;
  options.reserve(by_mode.size());
  for (const auto& [mode, pair] : by_mode) {
    const auto& [px, py] = pair;
    const int contractions = std::min(px.annihilations, py.creations);
    std::vector<ModeOutcome> opts;
    for (int j = 0; j <= contractions; ++j) {
      ModePower p{mode, px.creations + py.creations - j, px.annihilations + py.annihilations - j};
      opts.push_back({p, binomial(px.annihilations, j) * binomial(py.creations, j) * factorial(j)});
    }
    options.push_back(std::move(opts));
  }

  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<ModePower> powers;
    long weight = 1;
    for (std::size_t i = 0; i < options.size(); ++i) {
      const auto& o = options[i][pick[i]];
      weight *= o.weight;
      if (o.power.creations > 0 || o.power.annihilations > 0) powers.push_back(o.power);
    }
    const Monomial m(std::move(powers));
    const RadicalScalar c = coeff * RadicalScalar(weight);
    auto [it, inserted] = out.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
}

}  // namespace

std::vector<HalfInt> BosonSpecies::components() const {
  std::vector<HalfInt> out;
  for (HalfInt mu = -rank; mu <= rank; mu += HalfInt(1)) out.push_back(mu);
  return out;
}

std::string Mode::to_string() const {
  return species + "[" + mu_label(mu) + "]";
}

SignedFactor tilde(const BosonSpecies& species, HalfInt mu) {
  if (!species.has_component(mu))
    throw DomainError("component " + mu.to_string() + " outside species " + species.name);
  const HalfInt exponent = species.rank - mu;
  const int sign = (exponent.as_int() % 2 == 0) ? 1 : -1;
  return {sign, {{species.name, -mu}, FactorKind::annihilation}};
}

Monomial::Monomial(std::vector<ModePower> powers) : powers_(std::move(powers)) {
  std::erase_if(powers_, [](const ModePower& p) { return p.creations == 0 && p.annihilations == 0; });
  std::sort(powers_.begin(), powers_.end(),
            [](const ModePower& a, const ModePower& b) { return a.mode < b.mode; });
  for (std::size_t i = 1; i < powers_.size(); ++i)
    if (powers_[i].mode == powers_[i - 1].mode)
      throw DomainError("duplicate mode in monomial");
}

int Monomial::creation_count() const {
  int n = 0;
  for (const auto& p : powers_) n += p.creations;
  return n;
}

int Monomial::annihilation_count() const {
  int n = 0;
  for (const auto& p : powers_) n += p.annihilations;
  return n;
}

std::vector<BosonFactor> Monomial::factors() const {
  std::vector<BosonFactor> out;
  for (const auto& p : powers_)
    for (int k = 0; k < p.creations; ++k) out.push_back({p.mode, FactorKind::creation});
  for (const auto& p : powers_)
    for (int k = 0; k < p.annihilations; ++k) out.push_back({p.mode, FactorKind::annihilation});
  return out;
}

std::string Monomial::to_string() const {
  if (powers_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Mode& m, int count, bool creation) {
    if (count == 0) return;
    if (!first) os << ' ';
    first = false;
    os << m.species << (creation ? "'" : "") << '[' << mu_label(m.mu) << ']';
    if (count > 1) os << '^' << count;
  };
  for (const auto& p : powers_) emit(p.mode, p.creations, true);
  for (const auto& p : powers_) emit(p.mode, p.annihilations, false);
  return os.str();
}

OperatorPoly OperatorPoly::identity() { return constant(RadicalScalar(1)); }

OperatorPoly OperatorPoly::constant(const RadicalScalar& c) { return monomial(Monomial{}, c); }

OperatorPoly OperatorPoly::creation(const Mode& m) {
  return monomial(Monomial({ModePower{m, 1, 0}}), RadicalScalar(1));
}

OperatorPoly OperatorPoly::annihilation(const Mode& m) {
  return monomial(Monomial({ModePower{m, 0, 1}}), RadicalScalar(1));
}

OperatorPoly OperatorPoly::from_factor(const BosonFactor& f) {
  return f.kind == FactorKind::creation ? creation(f.mode) : annihilation(f.mode);
}

OperatorPoly OperatorPoly::from_factor(const SignedFactor& f) {
  return from_factor(f.factor) * RadicalScalar(f.sign);
}

OperatorPoly OperatorPoly::monomial(const Monomial& m, const RadicalScalar& c) {
  OperatorPoly p;
  p.add_term(m, c);
  return p;
}

RadicalScalar OperatorPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RadicalScalar{} : it->second;
}

void OperatorPoly::add_term(const Monomial& m, const RadicalScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

OperatorPoly& OperatorPoly::operator*=(const RadicalScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) multiply_monomials(ma, mb, ca * cb, out.terms_);
  return out;
}

bool OperatorPoly::is_bilinear() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.first.creation_count() == 1 && t.first.annihilation_count() == 1;
  });
}

bool OperatorPoly::conserves_number() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.first.creation_count() == t.first.annihilation_count();
  });
}

std::string OperatorPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m.is_identity()) {
      os << c.to_factor_string();
    } else if (c == RadicalScalar(1)) {
      os << m.to_string();
    } else if (c == RadicalScalar(-1)) {
      os << "-" << m.to_string();
    } else {
      os << c.to_factor_string() << " " << m.to_string();
    }
  }
  return os.str();
}

nlohmann::json OperatorPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : m.factors())
      factors.push_back({{"species", f.mode.species},
                         {"mu2", f.mode.mu.twice()},
                         {"kind", f.kind == FactorKind::creation ? "creation" : "annihilation"}});
    out.push_back({{"factors", factors}, {"coefficient", c.to_json()}});
  }
  return out;
}

OperatorPoly multiply(const OperatorPoly& a, const OperatorPoly& b) { return a * b; }

OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b) { return a * b - b * a; }

OperatorPoly adjoint(const OperatorPoly& a) {
  // Modes commute, so swapping the per-mode powers is already normal-ordered.
  OperatorPoly out;
  for (const auto& [m, c] : a.terms()) {
    std::vector<ModePower> powers;
    for (const auto& p : m.powers()) powers.push_back({p.mode, p.annihilations, p.creations});
    out += OperatorPoly::monomial(Monomial(std::move(powers)), c.conj());
  }
  return out;
}

OperatorPoly bilinear(const Mode& creator, const Mode& annihilator) {
  return OperatorPoly::creation(creator) * OperatorPoly::annihilation(annihilator);
}

}  // namespace lieboson
