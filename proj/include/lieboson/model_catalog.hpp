#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lieboson/boson_ops.hpp"
#include "lieboson/lie_algebra.hpp"
#include "lieboson/sl2_wdd.hpp"
#include "lieboson/tensor_decomp.hpp"

namespace lieboson {

enum class NodeKind {
  reductive,   // non-semisimple: carries a nonzero radical
  semisimple,  // nondegenerate Killing form
  toral,       // abelian subalgebra of the Levi part (so(2)-type boxes)
  named_only,  // catalogued by name, no basis
};

std::string to_string(NodeKind k);

struct LatticeNode {
  std::string id;
  /// Quantum-number label used in chain listings.
  std::string label;
  NodeKind kind = NodeKind::reductive;
  std::size_t declared_dimension = 0;
  /// Coordinates in the model algebra; empty for named_only nodes.
  SubBasis basis;
  std::optional<WeightedDynkinDiagram> wdd;
  /// J-set whose span is this node (A1 nodes).
  std::string jset;
  /// Semisimple partner on the other sheet (node = radical (+) partner).
  std::string partner;
  std::string note;
};

enum class EdgeStatus {
  inclusion,   // span(to) inside span(from), checked exactly
  conjugate,   // from contains a triple of the same class, checked exactly
  unverified,  // an endpoint has no basis
};

std::string to_string(EdgeStatus s);

struct LatticeEdge {
  std::string from;
  std::string to;
  /// Drawn dotted: not realizable together with the other inclusions; skipped by chains().
  bool excluded = false;
  EdgeStatus status = EdgeStatus::unverified;
  std::string witness;
};

struct Lattice {
  std::string root;
  std::vector<LatticeNode> nodes;
  std::vector<LatticeEdge> edges;

  const LatticeNode& node(const std::string& id) const;
};

struct ModelSpec {
  std::string name;
  std::vector<BosonSpecies> species;
  /// One-boson states in the order used for defining matrices and WDDs.
  std::vector<Mode> defining_modes;
  /// Occupation-number layout of Fock states.
  std::vector<Mode> fock_modes;
  Lattice lattice;
  /// Top of the semisimple sheet ("su2", "su3", "A3", ...).
  std::string semisimple_root;
};

struct Model {
  ModelSpec spec;
  LieAlgebra algebra;
  std::vector<JSet> jsets;

  const JSet& jset(const std::string& name) const;
  /// g-index lookup: generator("g7").
  const OperatorPoly& generator(const std::string& name) const;
  /// Linear combination of generators, coordinates by 1-based g-index.
  OperatorPoly combination(const std::vector<std::pair<RadicalScalar, int>>& terms) const;
};

/// Names accepted by build().
std::vector<std::string> model_names();

/// Constructs generators by tensor coupling, verifies closure, every lattice
/// node and every drawn edge. Throws UnknownModel, or VerificationFailure
/// when a catalogued fact does not hold.
Model build(const std::string& name, Exec exec = Exec::parallel);

struct Chain {
  std::vector<std::string> nodes;
  std::vector<std::string> labels;

  std::string to_string() const;
};

/// Maximal paths from the lattice root, excluding dotted edges, in
/// depth-first order following the edge list.
std::vector<Chain> chains(const ModelSpec& spec);
/// Same, starting at the semisimple root.
std::vector<Chain> semisimple_sheet_chains(const ModelSpec& spec);

/// The two-boson W-vectors of u(3)/u(4), components q = -1, 0, 1:
/// V = {sqrt2 p'-1 p'-1, 2 p'-1 p'+1, sqrt2 p'+1 p'+1};
/// U = {sqrt2 p~-1 p~-1, -2 p~-1 p~+1, sqrt2 p~+1 p~+1}. The sign of U_0 is the
/// spherical phase that makes U a tensor for the same J-set as V.
std::pair<TensorMultiplet, TensorMultiplet> find_w_vectors(const Model& m);

struct ClassRepresentative {
  WeightedDynkinDiagram wdd;
  std::string jset;
  Sl2Triple triple;
};

/// One representative triple per A1 class of the semisimple part. For the
/// sl(n) models the classes are checked against enumerate_classes(n).
std::vector<ClassRepresentative> classify(const Model& m);

nlohmann::json lattice_json(const Model& m);

}  // namespace lieboson
