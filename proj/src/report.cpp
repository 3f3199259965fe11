#include "lieboson/report.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <iomanip>
#include <set>
#include <sstream>

#include "lieboson/eigensolver.hpp"
#include "lieboson/errors.hpp"
#include "lieboson/fock.hpp"
#include "lieboson/model_catalog.hpp"
#include "lieboson/reference_tables.hpp"

namespace lieboson {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  throw DomainError("unknown format '" + s + "' (text or json)");
}

Part parse_part(const std::string& s) {
  if (s == "auto") return Part::automatic;
  if (s == "full") return Part::full;
  if (s == "levi") return Part::levi;
  throw DomainError("unknown part '" + s + "' (auto, full or levi)");
}

json Report::to_json() const {
  return {{"command", command}, {"model", model}, {"results", results}, {"exit_code", exit_code}};
}

std::string Report::render(Format f) const {
  if (f == Format::json) return to_json().dump(2) + "\n";
  return text;
}

namespace {

std::string describe(const Model& m, const OperatorPoly& op) {
  const auto c = m.algebra.coordinates(op);
  return c ? m.algebra.describe(*c) : op.to_string();
}

std::vector<std::string> describe_all(const Model& m, const SubBasis& sub) {
  std::vector<std::string> out;
  for (const auto& v : sub) out.push_back(m.algebra.describe(v));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

double tidy(double x) {
  const double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

const JSet& resolve_jset(const Model& m, const std::string& spec) {
  for (const auto& j : m.jsets)
    if (j.name == spec) return j;
  std::string digits;
  for (char c : spec)
    if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
  if (!digits.empty())
    for (const auto& j : m.jsets)
      if (j.wdd && j.wdd->compact() == digits) return j;
  std::vector<std::string> names;
  for (const auto& j : m.jsets) names.push_back(j.name + (j.wdd ? " " + j.wdd->to_string() : ""));
  throw DomainError("model " + m.spec.name + " has no J-set '" + spec + "' (available: " + join(names, ", ") + ")");
}

}  // namespace

Report cmd_build(const std::string& model, Exec exec) {
  const Model m = build(model, exec);
  const LeviDecomposition lv = levi_decomposition(m.algebra);
  Report r{"build", model, json::object(), "", exit_ok};

  json gens = json::array();
  for (const auto& e : m.algebra.basis()) gens.push_back({{"name", e.name}, {"operator", e.op.to_string()}});
  const auto radical = describe_all(m, lv.radical);
  const auto levi = describe_all(m, lv.levi);
  const auto cen = describe_all(m, normalize_last_one(center(m.algebra)));
  r.results = {{"dimension", m.algebra.dimension()},
               {"generators", gens},
               {"center", cen},
               {"radical", {{"dimension", radical.size()}, {"basis", radical}}},
               {"levi", {{"dimension", levi.size()}, {"basis", levi}}},
               {"lattice", lattice_json(m)}};

  std::ostringstream os;
  os << "model " << model << "\n";
  os << "dimension " << m.algebra.dimension() << "\n\n";
  os << "generators\n";
  for (const auto& e : m.algebra.basis()) os << "  " << e.name << " = " << e.op.to_string() << "\n";
  os << "\nradical (dim " << radical.size() << ")\n";
  for (const auto& s : radical) os << "  " << s << "\n";
  os << "\nLevi part (dim " << levi.size() << ")\n";
  for (const auto& s : levi) os << "  " << s << "\n";
  std::size_t verified = 0;
  for (const auto& e : m.spec.lattice.edges) verified += e.status != EdgeStatus::unverified;
  os << "\nlattice: " << m.spec.lattice.nodes.size() << " nodes, " << m.spec.lattice.edges.size() << " edges ("
     << verified << " checked)\n";
  r.text = os.str();
  return r;
}

Report cmd_classify(const std::string& model) {
  const Model m = build(model);
  Report r{"classify", model, json::object(), "", exit_ok};
  const auto reps = classify(m);
  json classes = json::array();
  std::ostringstream os;
  os << "model " << model << ": " << reps.size() << " A1 classes\n";
  for (const auto& c : reps) {
    const std::string x = describe(m, c.triple.x), y = describe(m, c.triple.y), h = describe(m, c.triple.h);
    classes.push_back({{"wdd", c.wdd.to_json()}, {"diagram", c.wdd.to_string()}, {"jset", c.jset},
                       {"x", x}, {"y", y}, {"h", h}});
    os << "\n" << c.wdd.to_string() << "  J-set " << c.jset << "\n";
    os << "  x = " << x << "\n  y = " << y << "\n  h = " << h << "\n";
  }
  r.results["classes"] = classes;

  if (model != "u2u2") {
    const int n = static_cast<int>(m.spec.defining_modes.size());
    json oracle = json::array();
    std::set<WeightedDynkinDiagram> from_partitions;
    for (const auto& p : partitions(n)) {
      if (p.front() == 1) continue;
      const auto w = partition_to_wdd(p);
      from_partitions.insert(w);
      oracle.push_back({{"partition", p}, {"wdd", w.to_json()}});
    }
    const auto enumerated = enumerate_classes(n);
    const bool agree = std::set<WeightedDynkinDiagram>(enumerated.begin(), enumerated.end()) == from_partitions;
    r.results["partition_oracle"] = {{"n", n}, {"classes", oracle}, {"agrees", agree}};
    os << "\npartition oracle for sl(" << n << "): " << (agree ? "agrees" : "DISAGREES") << "\n";
    if (!agree) r.exit_code = exit_verification;
  } else {
    os << "\ndiagrams are read on the 4-dim defining space of u(2)+u(2)\n";
  }
  r.text = os.str();
  return r;
}

Report cmd_tensor(const std::string& model, const std::string& jset_spec, Part part) {
  const Model m = build(model);
  const JSet& j = resolve_jset(m, jset_spec);
  const bool levi = part == Part::levi || (part == Part::automatic && model == "u4");
  const LieAlgebra host =
      levi ? LieAlgebra::from_generators(named_elements(m.algebra, levi_decomposition(m.algebra).levi), Exec::serial)
           : m.algebra;
  const auto multiplets = decompose_adjoint(host, j);
  Report r{"tensor", model, json::object(), "", exit_ok};

  std::vector<HalfInt> ranks;
  json rows = json::array();
  std::ostringstream body;
  for (const auto& t : multiplets) {
    ranks.push_back(t.rank);
    const bool ok = verify_tensor(t, j).ok;
    if (!ok) r.exit_code = exit_verification;
    std::vector<std::string> comps;
    for (const auto& c : t.components) comps.push_back(describe(m, c));
    rows.push_back({{"label", t.label},
                    {"rank", t.rank.to_string()},
                    {"components", comps.size()},
                    {"spinor", t.is_spinor()},
                    {"verified", ok},
                    {"definition", comps}});
    body << "  " << std::left << std::setw(4) << t.label << " rank " << std::setw(4) << t.rank.to_string()
         << (t.is_spinor() ? " spinor " : "        ") << comps.size() << " comp.  " << join(comps, " | ")
         << (ok ? "" : "  [FAILS]") << "\n";
  }
  std::sort(ranks.begin(), ranks.end());
  r.results = {{"jset", j.name},
               {"wdd", j.wdd ? j.wdd->to_json() : json()},
               {"algebra", levi ? "levi" : "full"},
               {"dimension", host.dimension()},
               {"signature", signature_string(ranks)},
               {"total_components", total_components(multiplets)},
               {"multiplets", rows}};

  std::ostringstream os;
  os << "model " << model << ", J-set " << j.name << (j.wdd ? " " + j.wdd->to_string() : "") << ", "
     << (levi ? "Levi part" : "whole algebra") << " (dim " << host.dimension() << ")\n";
  os << "J0 = " << describe(m, j.j0) << "\nJ+ = " << describe(m, j.jplus) << "\nJ- = " << describe(m, j.jminus)
     << "\n\n";
  os << "signature {" << signature_string(ranks) << "}, " << total_components(multiplets) << " components\n";
  os << body.str();

  json refs = json::array();
  for (const auto& set : reference_sets()) {
    if (set.model != model || set.jset != j.name) continue;
    const ReferenceCheck c = check_reference(m, set);
    json rowsj = json::array();
    os << "\nprinted rows (" << set.id << (set.binding ? ", binding" : ", informational") << ")\n";
    if (c.literal)
      os << "  J-set read from the defining row is valid\n";
    else if (!c.literal_error.empty())
      os << "  no J-set from the defining row: " << c.literal_error << "\n";
    for (const auto& row : c.rows) {
      rowsj.push_back({{"name", row.name}, {"status", to_string(row.status)}, {"against", row.against},
                       {"residuals", row.residuals}});
      os << "  " << std::left << std::setw(9) << row.name << to_string(row.status)
         << (row.against.empty() ? "" : " (" + row.against + " J-set)") << "\n";
      if (!row.residuals.empty()) os << "      " << row.residuals.front() << "\n";
    }
    const bool failed = set.binding && !c.all_ok();
    if (failed) {
      r.exit_code = exit_verification;
      os << "  printed rows fail; the verified multiplets above replace them\n";
    }
    refs.push_back({{"id", set.id}, {"binding", set.binding}, {"literal_jset", c.literal.has_value()},
                    {"rows", rowsj}, {"replaced", failed}});
  }
  r.results["printed"] = refs;
  r.text = os.str();
  return r;
}

Report cmd_chains(const std::string& model) {
  const Model m = build(model);
  Report r{"chains", model, json::object(), "", exit_ok};
  auto as_json = [](const std::vector<Chain>& cs) {
    json out = json::array();
    for (const auto& c : cs) out.push_back({{"nodes", c.nodes}, {"labels", c.labels}});
    return out;
  };
  const auto all = chains(m.spec);
  const auto sheet = semisimple_sheet_chains(m.spec);
  json excluded = json::array();
  for (const auto& e : m.spec.lattice.edges)
    if (e.excluded) excluded.push_back({{"from", e.from}, {"to", e.to}});
  r.results = {{"count", all.size()}, {"chains", as_json(all)}, {"semisimple_sheet", as_json(sheet)},
               {"excluded_edges", excluded}, {"lattice", lattice_json(m)}};

  std::ostringstream os;
  os << "model " << model << ": " << all.size() << " chains\n";
  for (std::size_t i = 0; i < all.size(); ++i)
    os << "  " << std::setw(2) << std::right << i + 1 << ". " << all[i].to_string() << "    [" << join(all[i].labels, " ")
       << "]\n";
  os << "\nsemisimple sheet from " << m.spec.semisimple_root << ": " << sheet.size() << " chains\n";
  for (std::size_t i = 0; i < sheet.size(); ++i) os << "  " << std::setw(2) << i + 1 << ". " << sheet[i].to_string() << "\n";
  for (const auto& e : m.spec.lattice.edges)
    if (e.excluded) os << "\nexcluded edge " << e.from << " -> " << e.to << " (" << to_string(e.status) << ")\n";
  r.text = os.str();
  return r;
}

Report cmd_spectrum(const HamiltonianSpec& h, long n) {
  Report r{"spectrum", "u4", json::object(), "", exit_ok};
  const auto levels = spectrum(h, n);
  const StateCount c = count_states(n);
  json lv = json::array();
  std::ostringstream os;
  os << "E = " << h.alpha.get_str() << " N(N+4) + " << h.beta.get_str() << " t(t+3) + " << h.gamma.get_str()
     << " u(u+2) + " << h.delta.get_str() << " w(w+1),  N = " << n << "\n";
  os << "   N   t   u   w   E\n";
  for (const auto& l : levels) {
    lv.push_back({{"N", l.labels.N}, {"t", l.labels.t}, {"u", l.labels.u}, {"w", l.labels.w}, {"E", l.energy.get_str()}});
    os << std::right << std::setw(4) << l.labels.N << std::setw(4) << l.labels.t << std::setw(4) << l.labels.u
       << std::setw(4) << l.labels.w << "   " << l.energy.get_str() << "\n";
  }
  r.results = {{"coefficients",
                {{"alpha", h.alpha.get_str()}, {"beta", h.beta.get_str()}, {"gamma", h.gamma.get_str()},
                 {"delta", h.delta.get_str()}}},
               {"N", n},
               {"levels", lv},
               {"counts", {{"labels", c.labels}, {"sum_2w_plus_1", c.weighted}, {"fock_dimension", c.fock_dimension}}}};
  os << "\nlabels " << c.labels << ", sum of (2w+1) " << c.weighted << ", symmetric u(4) states " << c.fock_dimension
     << "\n";
  r.text = os.str();
  return r;
}

Report cmd_fock(const std::string& model, const std::string& op_name, int n, const FockOptions& options) {
  const Model m = build(model);
  OperatorPoly op;
  bool angular = false;
  if (op_name == "N") {
    for (const auto& mode : m.spec.fock_modes) op += bilinear(mode, mode);
  } else if (op_name.size() >= 2 && op_name.back() == '2') {
    op = casimir(m.jset(op_name.substr(0, op_name.size() - 1)));
    angular = true;
  } else {
    throw DomainError("unknown operator '" + op_name + "' (N or <J-set>2, e.g. L2, W2)");
  }
  const FockBasis basis(m.spec.fock_modes, n);
  const ComplexMatrix mat =
      options.exec == Exec::serial ? fock_matrix_serial(op, basis) : fock_matrix_parallel(op, basis);
  const auto values = diagonalize(mat);
  Report r{"fock", model, json::object(), "", exit_ok};

  json groups = json::array(), eig = json::array();
  std::ostringstream os;
  os << "model " << model << ", operator " << op_name << ", N = " << n << ", dimension " << basis.size() << "\n";
  os << "  eigenvalue   mult." << (angular ? "   j" : "") << "\n";
  for (std::size_t i = 0; i < values.size();) {
    const double v = tidy(values[i]);
    std::size_t k = i;
    while (k < values.size() && std::abs(values[k] - values[i]) < 1e-8) ++k;
    json g{{"value", v}, {"multiplicity", k - i}};
    std::string label;
    if (angular && v > -1e-8) {
      const double w = (-1.0 + std::sqrt(1.0 + 4.0 * std::max(0.0, v))) / 2.0;
      const int twice = static_cast<int>(std::lround(2.0 * w));
      const double back = twice / 2.0 * (twice / 2.0 + 1.0);
      if (std::abs(back - v) < 1e-8) {
        label = HalfInt::from_twice(twice).to_string();
        g["j"] = label;
      }
    }
    groups.push_back(g);
    os << "  " << std::left << std::setw(12) << fmt(v) << std::setw(6) << k - i << (label.empty() ? "" : "  " + label)
       << "\n";
    for (std::size_t t = i; t < k; ++t) eig.push_back(tidy(values[t]));
    i = k;
  }
  r.results = {{"operator", op_name}, {"N", n}, {"dimension", basis.size()}, {"hermiticity_defect", hermiticity_defect(mat)},
               {"eigenvalues", eig}, {"groups", groups}};
  if (options.include_matrix) {
    std::ostringstream ms;
    write_matrix(ms, mat);
    r.results["matrix"] = ms.str();
    os << "\n" << ms.str();
  }
  r.text = os.str();
  return r;
}

}  // namespace lieboson
