#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "lieboson/fock.hpp"
#include "lieboson/lie_algebra.hpp"
#include "lieboson/model_catalog.hpp"
#include "lieboson/tensor_decomp.hpp"
#include "lieboson/casimir_spectrum.hpp"

using namespace lieboson;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 8;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("threads %d\n", omp_get_max_threads());
  bool agree = true;

  const Model u4 = build("u4");
  const auto& basis = u4.algebra.basis();
  std::vector<OperatorPoly> ops;
  for (const auto& e : basis) ops.push_back(e.op);
  const PolySpan span(ops);
  std::vector<Vec> serial_table, parallel_table;
  const double ts = best_of(reps, [&] { serial_table = bracket_table_serial(basis, span); });
  const double tp = best_of(reps, [&] { parallel_table = bracket_table_parallel(basis, span); });
  agree = agree && serial_table == parallel_table;
  std::printf("%-28s serial %9.2f ms  parallel %9.2f ms  %s\n", "u4 structure constants", ts, tp,
              serial_table == parallel_table ? "identical" : "DIFFER");

  const FockBasis fb(u4.spec.fock_modes, n);
  const OperatorPoly l2 = casimir(u4.jset("L"));
  ComplexMatrix ms(0), mp(0);
  const double fs = best_of(reps, [&] { ms = fock_matrix_serial(l2, fb); });
  const double fp = best_of(reps, [&] { mp = fock_matrix_parallel(l2, fb); });
  double diff = 0.0;
  for (std::size_t i = 0; i < ms.data.size(); ++i) diff = std::max(diff, std::abs(ms.data[i] - mp.data[i]));
  agree = agree && diff == 0.0;
  char label[64];
  std::snprintf(label, sizeof label, "u4 L2 matrix, N=%d (dim %zu)", n, fb.size());
  std::printf("%-28s serial %9.2f ms  parallel %9.2f ms  max diff %g\n", label, fs, fp, diff);
  return agree ? 0 : 1;
}
