#include "lieboson/reference_tables.hpp"

#include <algorithm>

#include "lieboson/errors.hpp"

namespace lieboson {

namespace {

RadicalScalar q(long n, long d = 1) { return RadicalScalar::rational(n, d); }
RadicalScalar rt(long n, long d = 1) { return RadicalScalar::sqrt(mpq_class(n, d)); }
const RadicalScalar I = RadicalScalar::imaginary_unit();

GTerms g(int i) { return {{1, i}}; }
GTerms neg(int i) { return {{-1, i}}; }

GTerms scaled(const RadicalScalar& c, const GTerms& t) {
  GTerms out;
  for (const auto& [x, i] : t) out.push_back({c * x, i});
  return out;
}

GTerms plus(GTerms a, const GTerms& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ReferenceRow row(std::string name, int twice_rank, std::vector<std::optional<GTerms>> comps, bool defines = false,
                 std::string note = "") {
  return {std::move(name), HalfInt::from_twice(twice_rank), std::move(comps), defines, std::move(note)};
}

ReferenceSet standard_set() {
  ReferenceSet s{"202", "u4", "L", false, {}};
  s.rows = {
      row("n' (alt)", 0, {g(1)}, false, "generator g1 taken literally"),
      row("n'", 0, {GTerms{{1, 16}, {-rt(1, 3), 1}}}),
      row("L/sqrt2", 2, {g(2), g(3), g(4)}, true),
      row("Q", 4, {g(5), g(6), g(7), g(8), g(9)}),
      row("D (alt)", 2, {g(10), g(11), g(12)}),
      row("D", 2,
          {GTerms{{I, 13}, {I, 10}}, GTerms{{I, 14}, {I, 11}}, GTerms{{I, 15}, {I, 12}}}),
      row("D' (alt)", 2, {g(13), g(14), g(15)}),
      row("D'", 2, {GTerms{{1, 13}, {-1, 10}}, GTerms{{1, 14}, {-1, 11}}, GTerms{{1, 15}, {-1, 12}}}),
  };
  return s;
}

ReferenceSet w_table_set() {
  ReferenceSet s{"101", "u4", "W", false, {}};
  const RadicalScalar h = rt(1, 2);
  s.rows = {
      row("s1", 0, {g(1)}),
      row("s2", 0, {g(7)}),
      row("s3", 0, {g(11)}),
      row("s4", 0, {g(14)}),
      row("W", 2, {GTerms{{-h, 5}}, GTerms{{h, 3}}, GTerms{{h, 9}}}, true),
      row("sp1", 1, {g(2), g(8)}),
      row("sp2", 1, {g(6), g(4)}),
      row("sp3", 1, {g(10), g(12)}),
      row("sp4", 1, {g(13), g(15)}),
  };
  return s;
}

/// Spinors as defined in running text, component order (-1/2, +1/2).
ReferenceSet w_text_set(const std::string& model) {
  ReferenceSet s{"101-text-" + model, model, "W", false, {}};
  s.rows = {
      row("sp1", 1, {g(6), g(4)}),
      row("sp2", 1, {neg(8), neg(2)}),
  };
  if (model == "u4") {
    s.rows.push_back(row("sp3", 1, {g(10), g(12)}));
    s.rows.push_back(row("sp4", 1, {neg(15), neg(13)}));
    s.rows.push_back(row("sp3'", 1, {GTerms{{-1, 2}, {-1, 10}, {-1, 13}}, GTerms{{1, 8}, {-1, 12}, {1, 15}}}));
    s.rows.push_back(row("sp4'", 1, {GTerms{{1, 6}, {1, 10}, {-1, 13}}, GTerms{{1, 4}, {1, 12}, {1, 15}}}));
  }
  return s;
}

ReferenceSet y_set() {
  ReferenceSet s{"020", "u4", "Y", true, {}};
  const RadicalScalar s2 = rt(2), is2 = rt(1, 2);
  s.rows = {
      row("Y", 2,
          {plus(scaled(I * is2, {{1, 2}, {1, 6}}), g(10)),
           scaled(q(1, 2), {{1, 1}, {s2, 3}, {rt(2, 3), 7}, {q(2) * I, 11}}),
           GTerms{{I * s2, 4}, {1, 12}, {1, 15}}},
          true),
      row("B", 2,
          {GTerms{{q(2) * s2, 9}}, plus(scaled(s2 * I, {{1, 4}, {-1, 8}}), GTerms{{-2, 12}}),
           GTerms{{q(2) * I * s2, 11}}}),
      row("M", 2,
          {GTerms{{-1, 1}, {-rt(2, 3), 7}, {I, 14}, {-I, 11}}, plus(GTerms{{I, 6}}, scaled(is2, {{1, 13}, {-1, 10}})),
           g(5)}),
      row("R", 2,
          {plus(scaled(-I * is2, {{1, 4}, {1, 8}}), g(12)), GTerms{{q(-1, 2), 3}, {-rt(3, 8), 7}, {-I, 11}},
           scaled(I * is2, {{1, 2}, {1, 6}})}),
      row("S", 2,
          {std::nullopt, GTerms{{-is2, 1}, {q(-1, 2), 3}, {rt(1, 12), 7}, {-I, 11}}, neg(10)}, false,
          "first component prints a quotient of two generators"),
  };
  return s;
}

ReferenceSet t_set() {
  ReferenceSet s{"222", "u4", "T", true, {}};
  const RadicalScalar s2 = rt(2), s3 = rt(3), s6 = rt(6);
  s.rows = {
      row("T1", 2,
          {scaled(q(1, 2), {{1, 2}, {-7, 4}, {-7, 6}, {-1, 8}, {3, 13}}), GTerms{{q(-3, 2), 1}, {-s2, 3}, {-2, 5}},
           GTerms{{1, 2}, {1, 10}, {1, 12}}},
          true),
      row("T2", 4,
          {scaled(q(-6) * s2, {{2, 3}, {s2, 5}, {-s2, 9}, {1, 14}}), scaled(q(-3), {{1, 2}, {1, 4}, {1, 6}, {-1, 8}, {1, 13}}),
           GTerms{{rt(3, 2), 1}, {-s3, 3}, {-s6, 5}, {1, 7}}, GTerms{{q(-1, 2), 2}, {q(1, 2), 6}, {1, 10}, {1, 12}},
           scaled(q(1, 4), {{1, 5}, {s2, 11}})}),
      row("T3", 6,
          {scaled(q(-72) * rt(1, 30), {{1, 13}, {-1, 15}}), scaled(q(-12) * rt(1, 10), {{2, 2}, {s2, 5}, {-s2, 9}, {-1, 14}}),
           scaled(q(-6, 5) * rt(1, 2), {{3, 2}, {-1, 4}, {-1, 6}, {-3, 8}, {-1, 13}}),
           scaled(q(1, 10), {{-s6, 1}, {q(2) * s3, 3}, {q(2) * s6, 5}, {10, 7}}),
           scaled(q(1, 10) * rt(1, 2), {{1, 2}, {5, 6}, {-4, 10}, {-4, 12}}),
           scaled(rt(1, 40), {{rt(1, 2), 5}, {-1, 11}}), GTerms{{-rt(1, 120), 10}}}),
  };
  return s;
}

TensorMultiplet as_multiplet(const Model& m, const ReferenceRow& r, bool reversed) {
  TensorMultiplet t;
  t.rank = r.rank;
  t.label = r.name;
  t.components = row_operators(m, r);
  if (reversed) std::reverse(t.components.begin(), t.components.end());
  return t;
}

std::optional<JSet> literal_jset(const Model& m, const ReferenceSet& set, std::string& error) {
  const auto it = std::find_if(set.rows.begin(), set.rows.end(), [](const ReferenceRow& r) { return r.defines_jset; });
  if (it == set.rows.end() || it->rank != HalfInt(1)) {
    error = "no vector row to read a J-set from";
    return std::nullopt;
  }
  try {
    const auto v = row_operators(m, *it);
    // [V0, V+1] = c V+1 fixes the scale of the vector.
    const OperatorPoly br = commutator(v[1], v[2]);
    PolySpan line({v[2]});
    const auto coords = line.coordinates(br);
    if (!coords || (*coords)[0].is_zero()) {
      error = "[V0, V+1] is not a nonzero multiple of V+1; residual " + line.residual(br).to_string();
      return std::nullopt;
    }
    const RadicalScalar inv = (*coords)[0].inverse();
    const RadicalScalar s2 = sqrt_int(2);
    return make_jset(set.id + "-literal", v[1] * inv, v[2] * (-s2 * inv), v[0] * (s2 * inv));
  } catch (const Error& e) {
    error = e.what();
    return std::nullopt;
  }
}

}  // namespace

std::vector<ReferenceSet> reference_sets() {
  return {standard_set(), w_table_set(), w_text_set("u4"), w_text_set("u3"), y_set(), t_set()};
}

const ReferenceSet& reference_set(const std::string& id) {
  static const std::vector<ReferenceSet> sets = reference_sets();
  for (const auto& s : sets)
    if (s.id == id) return s;
  throw DomainError("no reference set " + id);
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::verified: return "verified";
    case RowStatus::reversed: return "verified (reversed order)";
    case RowStatus::failed: return "failed";
    case RowStatus::unreadable: return "unreadable";
  }
  return "?";
}

bool ReferenceCheck::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowResult& r) {
    return r.status == RowStatus::verified || r.status == RowStatus::reversed;
  });
}

std::vector<OperatorPoly> row_operators(const Model& m, const ReferenceRow& row) {
  std::vector<OperatorPoly> out;
  for (const auto& c : row.components) {
    if (!c) throw DomainError(row.name + " has an unreadable component");
    out.push_back(m.combination(*c));
  }
  return out;
}

ReferenceCheck check_reference(const Model& m, const ReferenceSet& set) {
  if (m.spec.name != set.model) throw DomainError("reference set " + set.id + " belongs to model " + set.model);
  ReferenceCheck out;
  out.id = set.id;
  out.binding = set.binding;
  out.literal = literal_jset(m, set, out.literal_error);
  const JSet& catalogue = m.jset(set.jset);

  for (const auto& r : set.rows) {
    RowResult res;
    res.name = r.name;
    if (std::any_of(r.components.begin(), r.components.end(), [](const auto& c) { return !c; })) {
      res.status = RowStatus::unreadable;
      res.residuals.push_back(r.note);
      out.rows.push_back(std::move(res));
      continue;
    }
    std::vector<std::pair<std::string, const JSet*>> against;
    if (out.literal) against.push_back({"literal", &*out.literal});
    against.push_back({"catalogue", &catalogue});
    for (const auto& [tag, j] : against) {
      for (bool reversed : {false, true}) {
        const TensorCheck c = verify_tensor(as_multiplet(m, r, reversed), *j);
        if (c.ok) {
          res.status = reversed ? RowStatus::reversed : RowStatus::verified;
          res.against = tag;
          break;
        }
        if (!reversed && res.residuals.empty()) res.residuals = c.residuals;
      }
      if (res.status != RowStatus::failed) break;
    }
    if (res.status != RowStatus::failed) res.residuals.clear();
    out.rows.push_back(std::move(res));
  }

  if (set.binding && !out.all_ok()) {
    const LieAlgebra levi =
        LieAlgebra::from_generators(named_elements(m.algebra, levi_decomposition(m.algebra).levi), Exec::serial);
    out.replacements = decompose_adjoint(levi, catalogue);
  }
  return out;
}

}  // namespace lieboson
