#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lieboson/angular.hpp"
#include "lieboson/casimir_spectrum.hpp"
#include "lieboson/eigensolver.hpp"
#include "lieboson/fock.hpp"
#include "lieboson/model_catalog.hpp"
#include "lieboson/reference_tables.hpp"
#include "lieboson/report.hpp"
#include "lieboson/tensor_decomp.hpp"

using namespace lieboson;

namespace {

constexpr double kFockTolerance = 1e-8;
constexpr double kBuildSeconds = 5.0;
constexpr double kTensorSeconds = 10.0;
constexpr double kFockSeconds = 30.0;
constexpr int kFockMaxN = 6;
constexpr long kSpectrumMaxN = 12;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::map<std::string, Model>& models() {
  static std::map<std::string, Model> cache;
  return cache;
}

const Model& model(const std::string& name) {
  auto& c = models();
  auto it = c.find(name);
  if (it == c.end()) it = c.emplace(name, build(name)).first;
  return it->second;
}

LieAlgebra levi_of(const Model& m) {
  return LieAlgebra::from_generators(named_elements(m.algebra, levi_decomposition(m.algebra).levi), Exec::serial);
}

std::string signature(const std::vector<TensorMultiplet>& ts) {
  std::vector<HalfInt> r;
  for (const auto& t : ts) r.push_back(t.rank);
  std::sort(r.begin(), r.end());
  return signature_string(r);
}

Outcome closure() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& name : model_names()) {
    const auto& l = model(name).algebra;
    const std::size_t d = l.dimension();
    bool jacobi = true;
    for (std::size_t i = 0; i < d && jacobi; ++i)
      for (std::size_t j = i + 1; j < d && jacobi; ++j)
        for (std::size_t k = j + 1; k < d && jacobi; ++k) {
          const auto x = l.unit(i), y = l.unit(j), z = l.unit(k);
          const auto a = l.bracket(x, l.bracket(y, z)), b = l.bracket(y, l.bracket(z, x)), c = l.bracket(z, l.bracket(x, y));
          for (std::size_t t = 0; t < d; ++t) jacobi = jacobi && (a[t] + b[t] + c[t]).is_zero();
        }
    o.require(jacobi, name + " Jacobi residual nonzero");
  }
  const double s = seconds_since(t0);
  o.require(s < kBuildSeconds, "took " + fmt_seconds(s));
  o.detail = o.pass ? "4 models closed, Jacobi residual 0, " + fmt_seconds(s) : o.detail;
  return o;
}

Outcome levi() {
  Outcome o;
  struct Case {
    const char* model;
    std::vector<std::vector<std::pair<RadicalScalar, int>>> radical;
    std::size_t levi_dim;
  };
  const std::vector<Case> cases = {
      {"u2", {{{1, 1}, {1, 4}}}, 3},
      {"u2u2", {{{1, 1}, {1, 4}}, {{1, 5}, {1, 8}}}, 6},
      {"u3", {{{1, 1}}}, 8},
      {"u4", {{{sqrt_int(3), 1}, {1, 16}}}, 15},
  };
  std::string dims;
  for (const auto& c : cases) {
    const auto& m = model(c.model);
    const auto lv = levi_decomposition(m.algebra);
    SubBasis expected;
    for (const auto& r : c.radical) expected.push_back(*m.algebra.coordinates(m.combination(r)));
    o.require(same_span(lv.radical, expected, m.algebra.dimension()), std::string(c.model) + " radical");
    o.require(lv.levi.size() == c.levi_dim, std::string(c.model) + " Levi dim " + std::to_string(lv.levi.size()));
    dims += (dims.empty() ? "" : ",") + std::to_string(lv.levi.size());
  }
  if (o.pass) o.detail = "radicals match, Levi dims " + dims;
  return o;
}

Outcome wdd_classes() {
  Outcome o;
  auto compact = [](int n) {
    std::set<std::string> s;
    for (const auto& w : enumerate_classes(n)) s.insert(w.compact());
    return s;
  };
  o.require(compact(2) == std::set<std::string>{"2"}, "n=2");
  o.require(compact(3) == std::set<std::string>{"11", "22"}, "n=3");
  o.require(compact(4) == std::set<std::string>{"101", "202", "020", "222"}, "n=4");
  for (int n = 2; n <= 6; ++n) {
    std::set<WeightedDynkinDiagram> oracle;
    for (const auto& p : partitions(n))
      if (p.front() > 1) oracle.insert(partition_to_wdd(p));
    const auto e = enumerate_classes(n);
    o.require(std::set<WeightedDynkinDiagram>(e.begin(), e.end()) == oracle, "oracle n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "[2]; [11],[22]; [101],[202],[020],[222]; partition oracle agrees n<=6";
  return o;
}

Outcome triples() {
  Outcome o;
  const auto& u4 = model("u4");
  const auto& u3 = model("u3");
  o.require(wdd(u4.jset("L").triple(), u4.spec.defining_modes).compact() == "202", "u4 L");
  o.require(wdd(u4.jset("W").triple(), u4.spec.defining_modes).compact() == "101", "u4 W");
  o.require(wdd(u3.jset("L").triple(), u3.spec.defining_modes).compact() == "22", "u3 L");
  o.require(wdd(u3.jset("W").triple(), u3.spec.defining_modes).compact() == "11", "u3 W");
  if (o.pass) o.detail = "L -> [202]/[2 2], W -> [101]/[1 1]";
  return o;
}

Outcome signatures() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto& u4 = model("u4");
  const auto su4 = levi_of(u4);
  const std::vector<std::pair<std::string, std::string>> want = {
      {"L", "0,1,1,1,2"}, {"W", "0,0,0,0,1/2,1/2,1/2,1/2,1"}, {"T", "1,2,3"}};
  for (const auto& [j, sig] : want) {
    const auto d = decompose_adjoint(su4, u4.jset(j));
    o.require(signature(d) == sig, j + " gives {" + signature(d) + "}");
    o.require(total_components(d) == 15, j + " completeness");
    for (const auto& t : d) o.require(verify_tensor(t, u4.jset(j)).ok, j + " " + t.label + " fails relations");
  }
  const auto& u3 = model("u3");
  const auto w3 = decompose_adjoint(u3.algebra, u3.jset("W"));
  o.require(signature(w3) == "0,0,1/2,1/2,1", "u3 W gives {" + signature(w3) + "}");
  const double s = seconds_since(t0);
  o.require(s < kTensorSeconds, "took " + fmt_seconds(s));
  if (o.pass) o.detail = "{0,1,1,1,2} {0,0,0,0,1/2,1/2,1/2,1/2,1} {1,2,3}, 15 each; u3 W {0,0,1/2,1/2,1}; " + fmt_seconds(s);
  return o;
}

Outcome signature_020() {
  Outcome o;
  const auto& u4 = model("u4");
  const auto d = decompose_adjoint(levi_of(u4), u4.jset("Y"));
  o.require(signature(d) == "1,1,1,1,1", "computed {" + signature(d) + "}, expected {1,1,1,1,1}");
  o.require(total_components(d) == 15, "completeness");
  if (o.pass) o.detail = "{1,1,1,1,1}";
  return o;
}

Outcome spinors() {
  Outcome o;
  const auto& u3 = model("u3");
  const JSet& w = u3.jset("W");
  const auto& minus = u3.generator("g6");
  const auto& plus = u3.generator("g4");
  const auto half_r = RadicalScalar::rational(1, 2);
  o.require(commutator(w.j0, minus) == minus * -half_r, "[W0, sp-]");
  o.require(commutator(w.j0, plus) == plus * half_r, "[W0, sp+]");
  o.require(commutator(w.jplus, minus) == plus, "[W+, sp-] = sp+");
  o.require(commutator(w.jplus, commutator(w.jplus, minus)).is_zero(), "two-step W+ ladder");
  o.require(commutator(w.jminus, commutator(w.jminus, plus)).is_zero(), "two-step W- ladder");
  const SphericalTensorOp sp(half(1), {minus, plus});
  const auto c = couple(sp, sp, HalfInt(0)).component(HalfInt(0));
  o.require(c == u3.generator("g7") * (-sqrt_int(3) * half_r), "[sp1 x sp1]^0 = " + c.to_string());
  if (o.pass) o.detail = "[W0,sp] = +-sp/2, ladders terminate, [sp1 x sp1]^0_0 = -(sqrt3/2) g7";
  return o;
}

Outcome non_inclusion() {
  Outcome o;
  const auto& m = model("u2u2");
  const auto nt = m.combination({{1, 1}, {1, 4}, {1, 5}, {1, 8}});
  std::vector<OperatorPoly> su12;
  for (const auto& v : m.spec.lattice.node("su12(2)").basis) su12.push_back(m.algebra.to_operator(v));
  o.require(!PolySpan(su12).contains(nt), "n_t inside su12(2)");

  const auto& u2 = model("u2");
  const auto plus = u2.combination({{1, 1}, {1, 4}}), minus = u2.combination({{1, 1}, {-1, 4}});
  bool central = true;
  for (const auto& e : u2.algebra.basis()) central = central && commutator(plus, e.op).is_zero();
  o.require(central, "g1+g4 not central");
  o.require(!commutator(minus, u2.generator("g2")).is_zero(), "g1-g4 central");
  o.require(center(u2.algebra).size() == 1, "center dim");
  if (o.pass) o.detail = "n_t not in su12(2); g1+g4 central, [g1-g4,g2] != 0";
  return o;
}

Outcome chain_counts() {
  Outcome o;
  const std::size_t a = chains(model("u2").spec).size(), b = chains(model("u2u2").spec).size(),
                    c = chains(model("u3").spec).size(), d = semisimple_sheet_chains(model("u4").spec).size();
  o.require(a == 2 && b == 5 && c == 6 && d == 7, "");
  o.detail = std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ", " + std::to_string(d);
  return o;
}

Outcome spectrum_formula() {
  Outcome o;
  const HamiltonianSpec h{mpq_class(3, 7), mpq_class(-5, 2), mpq_class(1, 3), 2};
  std::size_t levels = 0;
  for (long n = 0; n <= kSpectrumMaxN; ++n) {
    std::size_t brute = 0;
    for (long t = 0; t <= n; ++t)
      for (long u = 0; u <= t; ++u)
        for (long w = 0; w <= u; ++w) ++brute;
    const auto s = spectrum(h, n);
    o.require(s.size() == brute && static_cast<long>(brute) == (n + 1) * (n + 2) * (n + 3) / 6,
              "label count at N=" + std::to_string(n));
    for (const auto& l : s) {
      const auto [N, t, u, w] = l.labels;
      const mpq_class e = h.alpha * N * (N + 4) + h.beta * t * (t + 3) + h.gamma * u * (u + 2) + h.delta * w * (w + 1);
      o.require(l.energy == e, "energy mismatch");
      ++levels;
    }
  }
  if (o.pass) o.detail = std::to_string(levels) + " exact energies, N<=12, counts (N+1)(N+2)(N+3)/6";
  return o;
}

Outcome fock_checks() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto& u3 = model("u3");
  const auto& u4 = model("u4");
  const auto l2 = casimir(u3.jset("L"));
  const auto w2 = casimir(u4.jset("W"));
  OperatorPoly number;
  for (const auto& mode : u4.spec.fock_modes) number += bilinear(mode, mode);
  for (int n = 0; n <= kFockMaxN; ++n) {
    const auto ev = diagonalize(fock_matrix_parallel(l2, FockBasis(u3.spec.fock_modes, n)));
    std::vector<double> expected;
    for (int l = n; l >= 0; l -= 2)
      for (int k = 0; k < 2 * l + 1; ++k) expected.push_back(l * (l + 1.0));
    std::sort(expected.begin(), expected.end());
    bool ok = ev.size() == expected.size();
    for (std::size_t i = 0; ok && i < ev.size(); ++i) ok = std::abs(ev[i] - expected[i]) < kFockTolerance;
    o.require(ok, "L2 at N=" + std::to_string(n));

    const FockBasis b4(u4.spec.fock_modes, n);
    for (double v : diagonalize(fock_matrix_parallel(w2, b4))) {
      const double w = (std::sqrt(1 + 4 * std::max(0.0, v)) - 1) / 2;
      const double tw = std::round(2 * w);
      o.require(v > -kFockTolerance && std::abs(tw / 2 * (tw / 2 + 1) - v) < kFockTolerance,
                "W2 eigenvalue " + std::to_string(v) + " at N=" + std::to_string(n));
    }
    const auto nm = fock_matrix_parallel(number, b4);
    for (std::size_t i = 0; i < b4.size(); ++i)
      for (std::size_t j = 0; j < b4.size(); ++j)
        o.require(std::abs(nm(i, j) - std::complex<double>(i == j ? n : 0)) < kFockTolerance, "N-hat");
  }
  const auto one = diagonalize(fock_matrix_parallel(w2, FockBasis(u4.spec.fock_modes, 1)));
  const std::vector<double> want = {0, 0, 0.75, 0.75};
  for (std::size_t i = 0; i < 4; ++i) o.require(std::abs(one[i] - want[i]) < kFockTolerance, "W2 at N=1");
  const double s = seconds_since(t0);
  o.require(s < kFockSeconds, "took " + fmt_seconds(s));
  if (o.pass) o.detail = "L2 vibron branching, W2 = w(w+1) with {0,0,3/4,3/4} at N=1, N-hat = N, N<=6, " + fmt_seconds(s);
  return o;
}

Outcome printed_rows() {
  Outcome o;
  const auto& u4 = model("u4");
  std::ostringstream detail;
  for (const char* id : {"020", "222"}) {
    const auto& set = reference_set(id);
    const auto c = check_reference(u4, set);
    const Report r = cmd_tensor("u4", set.jset);
    std::size_t failed = 0;
    for (const auto& row : c.rows) failed += row.status != RowStatus::verified;
    const auto cls = *u4.jset(set.jset).wdd;
    if (c.all_ok()) {
      o.require(r.exit_code == exit_ok, std::string(id) + " passes but exit " + std::to_string(r.exit_code));
    } else {
      o.require(r.exit_code == exit_verification, std::string(id) + " fails without exit 3");
      std::size_t total = 0;
      for (const auto& t : c.replacements) {
        o.require(verify_tensor(t, u4.jset(set.jset)).ok, std::string(id) + " replacement fails");
        total += t.components.size();
      }
      o.require(total == 15, std::string(id) + " replacements incomplete");
      o.require(wdd(u4.jset(set.jset).triple(), u4.spec.defining_modes) == cls, "class");
    }
    detail << (detail.tellp() ? "; " : "") << "[" << id << "] " << failed << "/" << c.rows.size()
           << " rows flagged, exit " << r.exit_code << ", " << c.replacements.size() << " verified replacements";
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> all = {
      {"closure", closure},
      {"levi", levi},
      {"wdd", wdd_classes},
      {"triples", triples},
      {"signatures", signatures},
      {"signature_020", signature_020},
      {"spinors", spinors},
      {"non_inclusion", non_inclusion},
      {"chains", chain_counts},
      {"spectrum", spectrum_formula},
      {"fock", fock_checks},
      {"printed_rows", printed_rows},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> wanted(argv + 1, argv + argc);
  bool all_pass = true, any = false;
  for (const auto& [name, run] : criteria()) {
    if (!wanted.empty() && !wanted.count(name)) continue;
    any = true;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %-14s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    all_pass = all_pass && o.pass;
  }
  if (!any) {
    std::fprintf(stderr, "unknown criterion\n");
    return 2;
  }
  return all_pass ? 0 : 1;
}
