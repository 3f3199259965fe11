#include "lieboson/model_catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lieboson/angular.hpp"
#include "lieboson/errors.hpp"

namespace lieboson {

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::reductive: return "reductive";
    case NodeKind::semisimple: return "semisimple";
    case NodeKind::toral: return "toral";
    case NodeKind::named_only: return "named-only";
  }
  return "?";
}

std::string to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::inclusion: return "inclusion";
    case EdgeStatus::conjugate: return "conjugate";
    case EdgeStatus::unverified: return "unverified";
  }
  return "?";
}

const LatticeNode& Lattice::node(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return n;
  throw DomainError("no lattice node " + id);
}

const JSet& Model::jset(const std::string& name) const {
  for (const auto& j : jsets)
    if (j.name == name) return j;
  throw DomainError("model " + spec.name + " has no J-set " + name);
}

const OperatorPoly& Model::generator(const std::string& name) const {
  for (const auto& e : algebra.basis())
    if (e.name == name) return e.op;
  throw DomainError("model " + spec.name + " has no generator " + name);
}

OperatorPoly Model::combination(const std::vector<std::pair<RadicalScalar, int>>& terms) const {
  OperatorPoly out;
  for (const auto& [c, i] : terms) out += algebra.element(static_cast<std::size_t>(i - 1)).op * c;
  return out;
}

std::vector<std::string> model_names() { return {"u2", "u2u2", "u3", "u4"}; }

std::string Chain::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? " > " : "") + nodes[i];
  return s;
}

namespace {

using Terms = std::vector<std::pair<RadicalScalar, int>>;

RadicalScalar r(long n, long d = 1) { return RadicalScalar::rational(n, d); }

OperatorPoly coupled(const BosonSpecies& a, const BosonSpecies& b, int k, int q) {
  const auto t = couple(SphericalTensorOp::creators(a), SphericalTensorOp::tilde_annihilators(b), HalfInt(k));
  return t.component(HalfInt(q));
}

std::vector<Mode> modes_of(const BosonSpecies& s, bool descending) {
  std::vector<Mode> out;
  for (HalfInt mu : s.components()) out.push_back({s.name, mu});
  if (descending) std::reverse(out.begin(), out.end());
  return out;
}

struct NodeDraft {
  std::string id;
  std::string label;
  NodeKind kind;
  std::size_t dim;
  std::vector<Terms> elements;
  std::string jset;
  std::string partner;
  std::string note;
  std::optional<WeightedDynkinDiagram> wdd;
  /// Replaces `elements` when set (computed bases such as the Levi part).
  std::function<SubBasis(const Model&)> compute;
};

struct EdgeDraft {
  std::string from;
  std::string to;
  bool excluded = false;
};

struct Recipe {
  ModelSpec spec;
  std::vector<OperatorPoly> generators;
  std::function<std::vector<JSet>(const Model&)> jsets;
  std::vector<NodeDraft> nodes;
  std::vector<EdgeDraft> edges;
  /// Extra membership proofs for edges drawn without a common basis.
  std::function<std::optional<std::string>(const Model&, const EdgeDraft&)> conjugate_witness;
};

JSet jset_j(const Model& m, std::string name, int a, int b, int c, int d) {
  // J0 = (g_a - g_b)/2, J+ = g_c, J- = g_d.
  return make_jset(std::move(name), m.combination({{r(1, 2), a}, {r(-1, 2), b}}), m.combination({{1, c}}),
                   m.combination({{1, d}}));
}

JSet jset_l(const Model& m) {
  return make_jset("L", m.combination({{sqrt_int(2), 3}}), m.combination({{-2, 4}}), m.combination({{2, 2}}));
}

JSet jset_w(const Model& m) {
  return make_jset("W", m.combination({{sqrt_int(2).inverse(), 3}}), m.combination({{1, 9}}),
                   m.combination({{1, 5}}));
}

Recipe recipe_u2() {
  Recipe rc;
  const BosonSpecies s{"s", HalfInt(0)}, t{"t", HalfInt(0)};
  rc.spec.name = "u2";
  rc.spec.species = {s, t};
  rc.spec.defining_modes = {{"s", HalfInt(0)}, {"t", HalfInt(0)}};
  rc.spec.fock_modes = rc.spec.defining_modes;
  rc.spec.semisimple_root = "su2";
  rc.generators = {coupled(s, s, 0, 0), coupled(s, t, 0, 0), coupled(t, s, 0, 0), coupled(t, t, 0, 0)};
  rc.jsets = [](const Model& m) { return std::vector<JSet>{jset_j(m, "J", 1, 4, 2, 3)}; };
  rc.nodes = {
      {"u2", "[N]", NodeKind::reductive, 4, {{{1, 1}}, {{1, 2}}, {{1, 3}}, {{1, 4}}}, "", "su2", "", {}, {}},
      {"u1", "n_t", NodeKind::reductive, 1, {{{1, 1}, {1, 4}}}, "", "", "", {}, {}},
      {"su2", "j", NodeKind::semisimple, 3, {{{1, 1}, {-1, 4}}, {{1, 2}}, {{1, 3}}}, "J", "", "", WeightedDynkinDiagram{{2}}, {}},
      {"so2", "mu", NodeKind::toral, 1, {{{1, 1}, {-1, 4}}}, "", "", "", {}, {}},
  };
  rc.edges = {{"u2", "u1"}, {"u2", "su2"}, {"su2", "so2"}};
  return rc;
}

Recipe recipe_u2u2() {
  Recipe rc;
  const BosonSpecies s1{"s1", HalfInt(0)}, t1{"t1", HalfInt(0)}, s2{"s2", HalfInt(0)}, t2{"t2", HalfInt(0)};
  rc.spec.name = "u2u2";
  rc.spec.species = {s1, t1, s2, t2};
  for (const auto& sp : rc.spec.species) rc.spec.defining_modes.push_back({sp.name, HalfInt(0)});
  rc.spec.fock_modes = rc.spec.defining_modes;
  rc.spec.semisimple_root = "su1(2)+su2(2)";
  for (const auto& [a, b] : {std::pair{s1, t1}, std::pair{s2, t2}}) {
    rc.generators.push_back(coupled(a, a, 0, 0));
    rc.generators.push_back(coupled(a, b, 0, 0));
    rc.generators.push_back(coupled(b, a, 0, 0));
    rc.generators.push_back(coupled(b, b, 0, 0));
  }
  rc.jsets = [](const Model& m) {
    const JSet j1 = jset_j(m, "J1", 1, 4, 2, 3);
    const JSet j2 = jset_j(m, "J2", 5, 8, 6, 7);
    JSet j12 = make_jset("J12", j1.j0 + j2.j0, j1.jplus + j2.jplus, j1.jminus + j2.jminus);
    return std::vector<JSet>{j1, j2, j12};
  };
  const Terms n1{{1, 1}, {1, 4}}, n2{{1, 5}, {1, 8}};
  rc.nodes = {
      {"u1(2)+u2(2)", "[N1],[N2]", NodeKind::reductive, 8,
       {{{1, 1}}, {{1, 2}}, {{1, 3}}, {{1, 4}}, {{1, 5}}, {{1, 6}}, {{1, 7}}, {{1, 8}}}, "", "su1(2)+su2(2)", "", {}, {}},
      {"u1(1)+u2(1)", "n_t1,n_t2", NodeKind::reductive, 2, {n1, n2}, "", "", "", {}, {}},
      {"u12(2)", "[N]", NodeKind::reductive, 4,
       {{{1, 1}, {1, 4}, {1, 5}, {1, 8}}, {{1, 1}, {-1, 4}, {1, 5}, {-1, 8}}, {{1, 2}, {1, 6}}, {{1, 3}, {1, 7}}},
       "", "su12(2)", "", {}, {}},
      {"su1(2)+su2(2)", "j1,j2", NodeKind::semisimple, 6,
       {{{1, 1}, {-1, 4}}, {{1, 2}}, {{1, 3}}, {{1, 5}, {-1, 8}}, {{1, 6}}, {{1, 7}}}, "", "", "", {}, {}},
      {"su12(2)", "j", NodeKind::semisimple, 3, {{{1, 1}, {-1, 4}, {1, 5}, {-1, 8}}, {{1, 2}, {1, 6}}, {{1, 3}, {1, 7}}},
       "J12", "", "", {}, {}},
      {"so1(2)+so2(2)", "mu1,mu2", NodeKind::toral, 2, {{{1, 1}, {-1, 4}}, {{1, 5}, {-1, 8}}}, "", "", "", {}, {}},
      {"so12(2)", "mu", NodeKind::toral, 1, {{{1, 1}, {-1, 4}, {1, 5}, {-1, 8}}}, "", "", "", {}, {}},
      {"u12(1)", "n_t", NodeKind::reductive, 1, {{{1, 1}, {1, 4}, {1, 5}, {1, 8}}}, "", "", "", {}, {}},
  };
  rc.edges = {{"u1(2)+u2(2)", "u1(1)+u2(1)"}, {"u1(2)+u2(2)", "u12(2)"},   {"u1(2)+u2(2)", "su1(2)+su2(2)"},
              {"su1(2)+su2(2)", "so1(2)+so2(2)"}, {"su1(2)+su2(2)", "su12(2)"}, {"u12(2)", "su12(2)"},
              {"u12(2)", "u12(1)"},              {"u1(1)+u2(1)", "u12(1)"},     {"so1(2)+so2(2)", "so12(2)"},
              {"su12(2)", "so12(2)"}};
  return rc;
}

void add_p_generators(std::vector<OperatorPoly>& gens, const BosonSpecies& p) {
  for (int k = 0; k <= 2; ++k)
    for (int q = -k; q <= k; ++q) gens.push_back(coupled(p, p, k, q));
}

Recipe recipe_u3() {
  Recipe rc;
  const BosonSpecies p{"p", HalfInt(1)};
  rc.spec.name = "u3";
  rc.spec.species = {p};
  rc.spec.defining_modes = modes_of(p, true);
  rc.spec.fock_modes = modes_of(p, false);
  rc.spec.semisimple_root = "su3";
  add_p_generators(rc.generators, p);
  rc.jsets = [](const Model& m) { return std::vector<JSet>{jset_l(m), jset_w(m)}; };
  std::vector<Terms> su3;
  for (int i = 2; i <= 9; ++i) su3.push_back({{1, i}});
  std::vector<Terms> all{{{1, 1}}};
  all.insert(all.end(), su3.begin(), su3.end());
  rc.nodes = {
      {"u3", "[N]", NodeKind::reductive, 9, all, "", "su3", "", {}, {}},
      {"u2[1,1]", "(N,w)", NodeKind::reductive, 4, {{{1, 1}}, {{1, 5}}, {{1, 3}}, {{1, 9}}}, "", "su2[1,1]", "", {}, {}},
      {"u2[2,2]", "(N,l)", NodeKind::reductive, 4, {{{1, 1}}, {{1, 2}}, {{1, 3}}, {{1, 4}}}, "", "su2[2,2]", "", {}, {}},
      {"su3", "(lambda,mu)", NodeKind::semisimple, 8, su3, "", "", "", {}, {}},
      {"u1", "N", NodeKind::reductive, 1, {{{1, 1}}}, "", "", "", {}, {}},
      {"su2[1,1]", "w", NodeKind::semisimple, 3, {{{1, 5}}, {{1, 3}}, {{1, 9}}}, "W", "", "", WeightedDynkinDiagram{{1, 1}}, {}},
      {"su2[2,2]", "l", NodeKind::semisimple, 3, {{{1, 2}}, {{1, 3}}, {{1, 4}}}, "L", "", "", WeightedDynkinDiagram{{2, 2}}, {}},
      {"so2", "m", NodeKind::toral, 1, {{{1, 3}}}, "", "", "", {}, {}},
  };
  rc.edges = {{"u3", "u2[1,1]"},      {"u3", "u2[2,2]"},      {"u3", "su3"},          {"u2[1,1]", "u1"},
              {"u2[1,1]", "su2[1,1]"}, {"u2[2,2]", "u1"},      {"u2[2,2]", "su2[2,2]"}, {"su3", "su2[1,1]"},
              {"su3", "su2[2,2]"},    {"su2[1,1]", "so2"},    {"su2[2,2]", "so2"}};
  return rc;
}

/// Triple of the A-factor of so(4) = L (+) D': x = (L+ + sqrt2 D'+)/2.
JSet jset_y(const Model& m) {
  const RadicalScalar s2 = sqrt_int(2);
  const OperatorPoly lplus = m.combination({{-2, 4}}), lminus = m.combination({{2, 2}});
  const OperatorPoly dplus = m.combination({{1, 15}, {-1, 12}}), dminus = m.combination({{1, 13}, {-1, 10}});
  const OperatorPoly d0 = m.combination({{1, 14}, {-1, 11}});
  const OperatorPoly x = (lplus + dplus * s2) * r(1, 2);
  const OperatorPoly y = (lminus - dminus * s2) * r(1, 2);
  const OperatorPoly h = m.combination({{s2, 3}}) - d0;
  return jset_from_triple("Y", verify_triple(x, y, h, "Y"));
}

/// Principal triple: x climbs the chain s -> p-1 -> p0 -> p1.
JSet jset_t(const Model&) {
  const Mode s{"s", HalfInt(0)}, pm{"p", HalfInt(-1)}, p0{"p", HalfInt(0)}, pp{"p", HalfInt(1)};
  const RadicalScalar s3 = sqrt_int(3);
  const OperatorPoly x = bilinear(pp, p0) * s3 + bilinear(p0, pm) * RadicalScalar(2) + bilinear(pm, s) * s3;
  const OperatorPoly y = adjoint(x);
  return jset_from_triple("T", verify_triple(x, y, commutator(x, y), "T"));
}

Recipe recipe_u4() {
  Recipe rc;
  const BosonSpecies s{"s", HalfInt(0)}, p{"p", HalfInt(1)};
  rc.spec.name = "u4";
  rc.spec.species = {s, p};
  rc.spec.defining_modes = {{"s", HalfInt(0)}};
  for (const auto& mode : modes_of(p, true)) rc.spec.defining_modes.push_back(mode);
  rc.spec.fock_modes = {{"s", HalfInt(0)}};
  for (const auto& mode : modes_of(p, false)) rc.spec.fock_modes.push_back(mode);
  rc.spec.semisimple_root = "A3";
  add_p_generators(rc.generators, p);
  for (int q = -1; q <= 1; ++q) rc.generators.push_back(coupled(s, p, 1, q));
  for (int q = -1; q <= 1; ++q) rc.generators.push_back(coupled(p, s, 1, q));
  rc.generators.push_back(coupled(s, s, 0, 0));
  rc.jsets = [](const Model& m) { return std::vector<JSet>{jset_l(m), jset_w(m), jset_y(m), jset_t(m)}; };

  std::vector<Terms> all, su3;
  for (int i = 1; i <= 16; ++i) all.push_back({{1, i}});
  for (int i = 2; i <= 9; ++i) su3.push_back({{1, i}});
  auto jset_span = [](std::string name) {
    return [name](const Model& m) {
      const JSet& j = m.jset(name);
      return SubBasis{*m.algebra.coordinates(j.jminus), *m.algebra.coordinates(j.j0), *m.algebra.coordinates(j.jplus)};
    };
  };

  NodeDraft a3{"A3", "su(4)", NodeKind::semisimple, 15, {}, "", "", "", {}, {}};
  a3.compute = [](const Model& m) { return levi_decomposition(m.algebra).levi; };
  NodeDraft so4{"8A1A1", "so(4)", NodeKind::semisimple, 6, {}, "", "", "L plus D' closed under brackets", {}, {}};
  so4.compute = [](const Model& m) {
    SubBasis gens;
    for (int i : {2, 3, 4}) gens.push_back(m.algebra.unit(static_cast<std::size_t>(i - 1)));
    gens.push_back(*m.algebra.coordinates(m.combination({{1, 14}, {-1, 11}})));
    return generate_subalgebra(m.algebra, gens);
  };
  // h' = n_s - n_0 completes {g11, g14} to a second A1 commuting with W.
  const RadicalScalar inv_s3 = sqrt_int(3).inverse();
  const RadicalScalar s23 = RadicalScalar::sqrt(mpq_class(2, 3));
  NodeDraft ww{"7A1A1", "(w,w')", NodeKind::semisimple, 6,
               {{{1, 5}}, {{1, 3}}, {{1, 9}}, {{1, 11}}, {{1, 14}}, {{1, 16}, {-inv_s3, 1}, {s23, 7}}},
               "", "", "W plus the s-p0 triple", {}, {}};
  NodeDraft t{"4A1", "t", NodeKind::semisimple, 3, {}, "T", "", "principal", WeightedDynkinDiagram{{2, 2, 2}}, {}};
  t.compute = jset_span("T");
  NodeDraft y{"3A1", "y", NodeKind::semisimple, 3, {}, "Y", "", "", WeightedDynkinDiagram{{0, 2, 0}}, {}};
  y.compute = jset_span("Y");
  NodeDraft w{"1A1", "w", NodeKind::semisimple, 3, {}, "W", "", "", WeightedDynkinDiagram{{1, 0, 1}}, {}};
  w.compute = jset_span("W");
  NodeDraft l{"2A1", "l", NodeKind::semisimple, 3, {}, "L", "", "", WeightedDynkinDiagram{{2, 0, 2}}, {}};
  l.compute = jset_span("L");

  rc.nodes = {
      {"u4", "[N]", NodeKind::reductive, 16, all, "", "A3", "", {}, {}},
      a3,
      {"6B2", "(tau1,tau2)", NodeKind::named_only, 10, {}, "", "", "no basis catalogued", {}, {}},
      {"5A2", "(lambda,mu)", NodeKind::semisimple, 8, su3, "", "", "", {}, {}},
      so4,
      ww,
      t,
      y,
      w,
      l,
  };
  rc.edges = {{"u4", "A3"},       {"A3", "8A1A1"},    {"A3", "6B2"},      {"A3", "5A2"},
              {"8A1A1", "3A1"},   {"8A1A1", "2A1"},   {"6B2", "7A1A1"},   {"6B2", "4A1"},
              {"6B2", "3A1"},     {"7A1A1", "3A1", true}, {"7A1A1", "1A1"}, {"5A2", "1A1"},
              {"5A2", "2A1"}};
  rc.conjugate_witness = [](const Model& m, const EdgeDraft& e) -> std::optional<std::string> {
    if (e.from != "7A1A1" || e.to != "3A1") return std::nullopt;
    // diag(W (+) W'): a [020] triple inside 7A1A1, but not the one of 8A1A1.
    const OperatorPoly x = m.combination({{1, 9}, {-1, 11}});
    const OperatorPoly yy = m.combination({{1, 5}, {1, 14}});
    const Sl2Triple tr = verify_triple(x, yy, commutator(x, yy), "W+W'");
    if (wdd(tr, m.spec.defining_modes) != WeightedDynkinDiagram{{0, 2, 0}}) return std::nullopt;
    return "x=g9-g11, y=g5+g14";
  };
  return rc;
}

Recipe recipe(const std::string& name) {
  if (name == "u2") return recipe_u2();
  if (name == "u2u2") return recipe_u2u2();
  if (name == "u3") return recipe_u3();
  if (name == "u4") return recipe_u4();
  throw UnknownModel(name + " (known: u2, u2u2, u3, u4)");
}

void fail(const std::string& model, const std::string& what) { throw VerificationFailure(model + ": " + what); }

LieAlgebra own_algebra(const Model& m, const SubBasis& basis) {
  return LieAlgebra::from_generators(named_elements(m.algebra, basis), Exec::serial);
}

void verify_node(const Model& m, const LatticeNode& n, const SubBasis& levi) {
  const std::string& model = m.spec.name;
  const std::size_t d = m.algebra.dimension();
  if (n.kind == NodeKind::named_only) return;
  if (n.basis.size() != n.declared_dimension || span_basis(n.basis, d).size() != n.declared_dimension)
    fail(model, "node " + n.id + " spans " + std::to_string(span_basis(n.basis, d).size()) + " dimensions, expected " +
                    std::to_string(n.declared_dimension));
  std::vector<OperatorPoly> ops;
  for (const auto& v : n.basis) ops.push_back(m.algebra.to_operator(v));
  const SubalgebraCheck closed = is_subalgebra(ops, m.algebra);
  if (!closed.ok) fail(model, "node " + n.id + " does not close: " + closed.witness);

  const LieAlgebra own = own_algebra(m, n.basis);
  switch (n.kind) {
    case NodeKind::semisimple:
      if (rank(own.killing()) != own.dimension()) fail(model, "node " + n.id + " has a degenerate Killing form");
      break;
    case NodeKind::reductive:
      if (radical(own).empty()) fail(model, "node " + n.id + " has zero radical");
      break;
    case NodeKind::toral:
      if (!derived_algebra(own).empty()) fail(model, "node " + n.id + " is not abelian");
      if (!span_contains(levi, n.basis, d)) fail(model, "node " + n.id + " leaves the Levi part");
      break;
    case NodeKind::named_only:
      break;
  }

  if (!n.partner.empty()) {
    // Two sheets: node = (its own center) (+) partner.
    SubBasis sum;
    for (const auto& c : center(own)) sum.push_back(*m.algebra.coordinates(own.to_operator(c)));
    const SubBasis& partner = m.spec.lattice.node(n.partner).basis;
    sum.insert(sum.end(), partner.begin(), partner.end());
    if (!same_span(sum, n.basis, d)) fail(model, "node " + n.id + " is not its center plus " + n.partner);
  }

  if (!n.jset.empty()) {
    const JSet& j = m.jset(n.jset);
    const SubBasis js{*m.algebra.coordinates(j.j0), *m.algebra.coordinates(j.jplus), *m.algebra.coordinates(j.jminus)};
    if (!same_span(js, n.basis, d)) fail(model, "node " + n.id + " differs from J-set " + n.jset);
    if (n.wdd && j.wdd && *n.wdd != *j.wdd)
      fail(model, "node " + n.id + " tagged " + n.wdd->to_string() + " but J-set gives " + j.wdd->to_string());
  }
}

void collect_chains(const ModelSpec& spec, const std::string& at, std::vector<std::string>& path,
                    std::vector<Chain>& out) {
  path.push_back(at);
  bool leaf = true;
  for (const auto& e : spec.lattice.edges) {
    if (e.from != at || e.excluded) continue;
    leaf = false;
    collect_chains(spec, e.to, path, out);
  }
  if (leaf) {
    Chain c;
    c.nodes = path;
    for (const auto& id : path) c.labels.push_back(spec.lattice.node(id).label);
    out.push_back(std::move(c));
  }
  path.pop_back();
}

}  // namespace

Model build(const std::string& name, Exec exec) {
  Recipe rc = recipe(name);
  Model m;
  m.spec = rc.spec;
  std::vector<NamedElement> gens;
  for (std::size_t i = 0; i < rc.generators.size(); ++i)
    gens.push_back({"g" + std::to_string(i + 1), rc.generators[i]});
  m.algebra = LieAlgebra::from_generators(std::move(gens), exec);
  m.jsets = rc.jsets(m);
  for (auto& j : m.jsets) {
    for (const auto* op : {&j.j0, &j.jplus, &j.jminus})
      if (!m.algebra.contains(*op)) fail(name, "J-set " + j.name + " leaves the algebra");
    j.wdd = wdd(j.triple(), m.spec.defining_modes);
  }

  const SubBasis levi = levi_decomposition(m.algebra).levi;
  m.spec.lattice.root = rc.nodes.front().id;
  for (const auto& nd : rc.nodes) {
    LatticeNode n;
    n.id = nd.id;
    n.label = nd.label;
    n.kind = nd.kind;
    n.declared_dimension = nd.dim;
    n.wdd = nd.wdd;
    n.jset = nd.jset;
    n.partner = nd.partner;
    n.note = nd.note;
    if (nd.compute) {
      n.basis = nd.compute(m);
    } else {
      for (const auto& terms : nd.elements) {
        const auto c = m.algebra.coordinates(m.combination(terms));
        if (!c) fail(name, "node " + nd.id + " has an element outside the algebra");
        n.basis.push_back(*c);
      }
    }
    m.spec.lattice.nodes.push_back(std::move(n));
  }
  for (const auto& n : m.spec.lattice.nodes) verify_node(m, n, levi);

  const std::size_t d = m.algebra.dimension();
  for (const auto& ed : rc.edges) {
    LatticeEdge e{ed.from, ed.to, ed.excluded, EdgeStatus::unverified, ""};
    const LatticeNode& from = m.spec.lattice.node(ed.from);
    const LatticeNode& to = m.spec.lattice.node(ed.to);
    if (from.kind != NodeKind::named_only && to.kind != NodeKind::named_only) {
      if (span_contains(from.basis, to.basis, d)) {
        e.status = EdgeStatus::inclusion;
      } else if (rc.conjugate_witness) {
        if (auto w = rc.conjugate_witness(m, ed)) {
          e.status = EdgeStatus::conjugate;
          e.witness = *w;
        }
      }
      if (e.status == EdgeStatus::unverified) fail(name, "edge " + ed.from + " -> " + ed.to + " is not an inclusion");
    }
    m.spec.lattice.edges.push_back(std::move(e));
  }
  return m;
}

std::vector<Chain> chains(const ModelSpec& spec) {
  std::vector<Chain> out;
  std::vector<std::string> path;
  collect_chains(spec, spec.lattice.root, path, out);
  return out;
}

std::vector<Chain> semisimple_sheet_chains(const ModelSpec& spec) {
  std::vector<Chain> out;
  std::vector<std::string> path;
  collect_chains(spec, spec.semisimple_root, path, out);
  return out;
}

std::pair<TensorMultiplet, TensorMultiplet> find_w_vectors(const Model& m) {
  const BosonSpecies* p = nullptr;
  for (const auto& sp : m.spec.species)
    if (sp.name == "p") p = &sp;
  if (!p) throw DomainError("model " + m.spec.name + " has no p boson");
  const Mode pm{"p", HalfInt(-1)}, pp{"p", HalfInt(1)};
  const OperatorPoly cm = OperatorPoly::creation(pm), cp = OperatorPoly::creation(pp);
  const OperatorPoly am = OperatorPoly::from_factor(tilde(*p, HalfInt(-1)));
  const OperatorPoly ap = OperatorPoly::from_factor(tilde(*p, HalfInt(1)));
  const RadicalScalar s2 = sqrt_int(2);

  TensorMultiplet v{HalfInt(1), {cm * cm * s2, cm * cp * RadicalScalar(2), cp * cp * s2}, "V"};
  // The two-annihilator products are adjoint(V_{-q}); the middle component
  // takes the spherical phase (-1)^q so that U is a tensor for the same J-set.
  TensorMultiplet u{HalfInt(1), {am * am * s2, am * ap * RadicalScalar(-2), ap * ap * s2}, "U"};
  return {std::move(v), std::move(u)};
}

std::vector<ClassRepresentative> classify(const Model& m) {
  std::map<WeightedDynkinDiagram, ClassRepresentative> by_class;
  for (const auto& j : m.jsets)
    if (j.wdd && !by_class.count(*j.wdd)) by_class.emplace(*j.wdd, ClassRepresentative{*j.wdd, j.name, j.triple()});

  std::vector<ClassRepresentative> out;
  if (m.spec.name == "u2u2") {
    for (auto& [w, rep] : by_class) out.push_back(rep);
    return out;
  }
  const auto classes = enumerate_classes(static_cast<int>(m.spec.defining_modes.size()));
  for (const auto& c : classes) {
    auto it = by_class.find(c);
    if (it == by_class.end()) fail(m.spec.name, "no representative for class " + c.to_string());
    out.push_back(it->second);
  }
  if (out.size() != by_class.size()) fail(m.spec.name, "J-set outside the enumerated classes");
  return out;
}

nlohmann::json lattice_json(const Model& m) {
  nlohmann::json nodes = nlohmann::json::array(), edges = nlohmann::json::array();
  for (const auto& n : m.spec.lattice.nodes) {
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& v : n.basis) elements.push_back(m.algebra.describe(v));
    nlohmann::json j{{"id", n.id},
                     {"kind", to_string(n.kind)},
                     {"dimension", n.declared_dimension},
                     {"label", n.label},
                     {"elements", elements}};
    if (n.wdd) j["wdd"] = n.wdd->to_json();
    if (!n.jset.empty()) j["jset"] = n.jset;
    if (!n.note.empty()) j["note"] = n.note;
    nodes.push_back(j);
  }
  for (const auto& e : m.spec.lattice.edges) {
    nlohmann::json j{{"from", e.from}, {"to", e.to}, {"excluded", e.excluded}, {"status", to_string(e.status)}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    edges.push_back(j);
  }
  return {{"root", m.spec.lattice.root}, {"semisimple_root", m.spec.semisimple_root}, {"nodes", nodes},
          {"edges", edges}};
}

}  // namespace lieboson
