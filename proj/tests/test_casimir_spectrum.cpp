#include <random>

#include "support.hpp"

#include "lieboson/casimir_spectrum.hpp"
#include "lieboson/errors.hpp"

using namespace lieboson;
using lieboson::test::model;

TEST_CASE("J-set Casimirs commute with their subalgebra") {
  for (const char* name : {"u3", "u4"}) {
    const auto& m = model(name);
    for (const auto& j : m.jsets) {
      const auto c = casimir(j);
      CHECK(commutes_with_all(c, {j.j0, j.jplus, j.jminus}));
    }
  }
}

TEST_CASE("Killing Casimir scale") {
  const auto& u3 = model("u3");
  const auto& node = u3.spec.lattice.node("su2[2,2]");
  const JSet& l = u3.jset("L");
  const auto k = killing_casimir(u3.algebra, node.basis, &l);
  REQUIRE(k.scale_to_jset.has_value());
  CHECK(*k.scale_to_jset == RadicalScalar::rational(1, 2));
  CHECK(commutes_with_all(k.op, {l.j0, l.jplus, l.jminus}));
  const auto su3 = levi_decomposition(u3.algebra).levi;
  const auto c3 = killing_casimir(u3.algebra, su3);
  std::vector<OperatorPoly> gens;
  for (const auto& e : u3.algebra.basis()) gens.push_back(e.op);
  CHECK(commutes_with_all(c3.op, gens));
  CHECK_THROWS_AS(killing_casimir(u3.algebra, {u3.algebra.unit(2)}), DegenerateForm);
}

TEST_CASE("labels and their count") {
  CHECK(enumerate_labels(1).size() == 4u);
  CHECK(enumerate_labels(2).size() == 10u);
  for (long n = 0; n <= 12; ++n) {
    std::size_t brute = 0;
    for (long t = 0; t <= n; ++t)
      for (long u = 0; u <= t; ++u)
        for (long w = 0; w <= u; ++w) ++brute;
    CHECK(enumerate_labels(n).size() == brute);
    CHECK(static_cast<long>(brute) == (n + 1) * (n + 2) * (n + 3) / 6);
  }
}

TEST_CASE("energies") {
  std::vector<long> e;
  for (const auto& l : spectrum({0, 0, 0, 1}, 1)) e.push_back(l.energy.get_num().get_si());
  std::sort(e.begin(), e.end());
  CHECK(e == std::vector<long>{0, 0, 0, 2});
  CHECK(energy({mpq_class(1, 3), 0, 0, 0}, {3, 0, 0, 0}) == 7);
  CHECK_THROWS_AS(energy({1, 0, 0, 0}, {1, 2, 0, 0}), DomainError);
  CHECK(spectrum({5, 1, 1, 1}, 0).size() == 1u);
  CHECK(spectrum({5, 1, 1, 1}, 0)[0].energy == 0);
}

TEST_CASE("energy is additive in the coefficients") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int i = 0; i < 10; ++i) {
    const HamiltonianSpec a{mpq_class(c(rng), 7), c(rng), mpq_class(c(rng), 2), c(rng)};
    const HamiltonianSpec b{c(rng), mpq_class(c(rng), 5), c(rng), mpq_class(c(rng), 3)};
    for (const auto& l : enumerate_labels(4)) CHECK(energy(a + b, l) == energy(a, l) + energy(b, l));
  }
}

TEST_CASE("state counts differ from the Fock dimension") {
  const auto c = count_states(1);
  CHECK(c.labels == 4);
  CHECK(c.weighted == 6);
  CHECK(c.fock_dimension == 4);
}
