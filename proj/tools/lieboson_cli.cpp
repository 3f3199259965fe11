#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lieboson/errors.hpp"
#include "lieboson/model_catalog.hpp"
#include "lieboson/report.hpp"

using namespace lieboson;

namespace {

mpq_class rational(const std::string& name, const std::string& s) {
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("--" + name + " expects an integer or p/q, got '" + s + "'");
  }
}

Exec parse_exec(const std::string& s) {
  if (s == "serial") return Exec::serial;
  if (s == "parallel") return Exec::parallel;
  throw DomainError("unknown --exec '" + s + "' (serial or parallel)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebras of boson bilinears: subalgebra lattices, tensor operators and spectra"};
  app.require_subcommand(1);

  std::string format = "text";
  if (const char* env = std::getenv("LIEBOSON_FORMAT")) format = env;
  app.add_option("--format", format, "text or json (default from LIEBOSON_FORMAT)");

  std::string model, jset, part = "auto", exec = "parallel", op = "N";
  std::string alpha = "0", beta = "0", gamma = "0", delta = "0";
  long n = 0;
  bool matrix = false;

  auto* models = app.add_subcommand("models", "list the built-in models");

  auto* build_cmd = app.add_subcommand("build", "generators, radical, Levi part and verified lattice");
  build_cmd->add_option("model", model, "u2, u2u2, u3 or u4")->required();
  build_cmd->add_option("--exec", exec, "serial or parallel structure constants");

  auto* classify_cmd = app.add_subcommand("classify", "A1 classes with weighted Dynkin diagrams");
  classify_cmd->add_option("model", model)->required();

  auto* tensor_cmd = app.add_subcommand("tensor", "decompose the adjoint action into irreducible tensors");
  tensor_cmd->add_option("model", model)->required();
  tensor_cmd->add_option("--jset", jset, "J-set name (L, W, Y, T, J, J12, ...) or diagram (202)")->required();
  tensor_cmd->add_option("--part", part, "auto, full or levi");

  auto* chains_cmd = app.add_subcommand("chains", "maximal subalgebra chains of the lattice");
  chains_cmd->add_option("model", model)->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "closed-form u4 > A3 > 6B2 > 7A1A1 > 1A1 energies");
  spectrum_cmd->add_option("--N", n, "boson number")->required()->check(CLI::NonNegativeNumber);
  spectrum_cmd->add_option("--alpha", alpha, "coefficient of N(N+4)");
  spectrum_cmd->add_option("--beta", beta, "coefficient of t(t+3)");
  spectrum_cmd->add_option("--gamma", gamma, "coefficient of u(u+2)");
  spectrum_cmd->add_option("--delta", delta, "coefficient of w(w+1)");

  auto* fock_cmd = app.add_subcommand("fock", "diagonalize an operator on N-boson states");
  fock_cmd->add_option("model", model)->required();
  fock_cmd->add_option("--N", n, "boson number")->required()->check(CLI::Range(0, 12));
  fock_cmd->add_option("--op", op, "N or <J-set>2 (L2, W2, ...)");
  fock_cmd->add_option("--exec", exec, "serial or parallel matrix build");
  fock_cmd->add_flag("--matrix", matrix, "include the matrix in the output");

  for (auto* sub : app.get_subcommands({})) sub->add_option("--format", format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    const Format f = parse_format(format);
    if (models->parsed()) {
      for (const auto& name : model_names()) std::cout << name << "\n";
      return exit_ok;
    }
    Report r;
    if (build_cmd->parsed()) r = cmd_build(model, parse_exec(exec));
    else if (classify_cmd->parsed()) r = cmd_classify(model);
    else if (tensor_cmd->parsed()) r = cmd_tensor(model, jset, parse_part(part));
    else if (chains_cmd->parsed()) r = cmd_chains(model);
    else if (spectrum_cmd->parsed())
      r = cmd_spectrum({rational("alpha", alpha), rational("beta", beta), rational("gamma", gamma),
                        rational("delta", delta)},
                       n);
    else r = cmd_fock(model, op, static_cast<int>(n), {parse_exec(exec), matrix});
    std::cout << r.render(f);
    return r.exit_code;
  } catch (const UnknownModel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return exit_verification;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}
