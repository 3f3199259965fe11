#pragma once

#include <string>

#include <json.hpp>

#include "lieboson/casimir_spectrum.hpp"
#include "lieboson/lie_algebra.hpp"

namespace lieboson {

enum class Format { text, json };

/// "text" or "json"; throws DomainError otherwise.
Format parse_format(const std::string& s);

/// Exit codes shared by every command.
enum ExitCode { exit_ok = 0, exit_internal = 1, exit_usage = 2, exit_verification = 3 };

struct Report {
  std::string command;
  std::string model;
  nlohmann::json results;
  std::string text;
  int exit_code = exit_ok;

  nlohmann::json to_json() const;
  std::string render(Format f) const;
};

Report cmd_build(const std::string& model, Exec exec = Exec::parallel);
Report cmd_classify(const std::string& model);

/// Which algebra to decompose: the whole u(n), its Levi part, or the default
/// (whole algebra for u2, u2u2, u3; Levi part for u4).
enum class Part { automatic, full, levi };
Part parse_part(const std::string& s);

/// J-set by name (L, W, Y, T, J, ...) or by diagram ("202", "[2 0 2]").
Report cmd_tensor(const std::string& model, const std::string& jset, Part part = Part::automatic);
Report cmd_chains(const std::string& model);
Report cmd_spectrum(const HamiltonianSpec& h, long n);

struct FockOptions {
  Exec exec = Exec::parallel;
  bool include_matrix = false;
};

/// Operator by name: N (total number) or "<jset>2" for a J-set Casimir.
Report cmd_fock(const std::string& model, const std::string& op, int n, const FockOptions& options = {});

}  // namespace lieboson
