#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieboson/model_catalog.hpp"
#include "lieboson/tensor_decomp.hpp"

namespace lieboson {

/// Linear combination of generators by 1-based g-index.
using GTerms = std::vector<std::pair<RadicalScalar, int>>;

/// A multiplet as printed in the literature, component order q = -k..k.
/// A component that cannot be read as a linear combination is nullopt.
struct ReferenceRow {
  std::string name;
  HalfInt rank;
  std::vector<std::optional<GTerms>> components;
  /// The row the J-set is read from.
  bool defines_jset = false;
  std::string note;
};

/// Printed decomposition of an algebra relative to one A1 class.
struct ReferenceSet {
  std::string id;
  std::string model;
  /// Catalogue J-set of the same class.
  std::string jset;
  /// When true, a failing row is a verification failure (exit code 3).
  bool binding = false;
  std::vector<ReferenceRow> rows;
};

std::vector<ReferenceSet> reference_sets();
const ReferenceSet& reference_set(const std::string& id);

enum class RowStatus {
  verified,   // passes the tensor relations as printed
  reversed,   // passes with the component order reversed
  failed,
  unreadable,
};

std::string to_string(RowStatus s);

struct RowResult {
  std::string name;
  RowStatus status = RowStatus::failed;
  /// "literal" (J-set read from the defining row) or "catalogue".
  std::string against;
  std::vector<std::string> residuals;
};

struct ReferenceCheck {
  std::string id;
  bool binding = false;
  /// J-set read from the defining row: J0 = V0/c, J+ = -sqrt2 V+1/c, J- = sqrt2 V-1/c.
  std::optional<JSet> literal;
  std::string literal_error;
  std::vector<RowResult> rows;
  /// Verified multiplets of the semisimple part for the class, filled when a
  /// binding set has failing rows.
  std::vector<TensorMultiplet> replacements;

  bool all_ok() const;
};

/// Components of a row as operators; throws DomainError on unreadable entries.
std::vector<OperatorPoly> row_operators(const Model& m, const ReferenceRow& row);

ReferenceCheck check_reference(const Model& m, const ReferenceSet& set);

}  // namespace lieboson
