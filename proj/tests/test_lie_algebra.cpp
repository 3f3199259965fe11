#include <random>

#include "support.hpp"

#include "lieboson/errors.hpp"
#include "lieboson/lie_algebra.hpp"

using namespace lieboson;
using lieboson::test::model;
using lieboson::test::q;
using lieboson::test::s;

TEST_CASE("Jacobi identity on structure constants") {
  for (const auto& name : model_names()) {
    const auto& l = model(name).algebra;
    const std::size_t d = l.dimension();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
          const auto x = l.unit(i), y = l.unit(j), z = l.unit(k);
          const auto a = l.bracket(x, l.bracket(y, z)), b = l.bracket(y, l.bracket(z, x)),
                     c = l.bracket(z, l.bracket(x, y));
          for (std::size_t t = 0; t < d; ++t) REQUIRE((a[t] + b[t] + c[t]).is_zero());
        }
  }
}

TEST_CASE("structure constants agree with operator brackets") {
  const auto& l = model("u3").algebra;
  for (std::size_t i = 0; i < l.dimension(); ++i)
    for (std::size_t j = 0; j < l.dimension(); ++j)
      CHECK(l.to_operator(l.bracket_coordinates(i, j)) == commutator(l.element(i).op, l.element(j).op));
}

TEST_CASE("Killing form is invariant") {
  const auto& l = model("u4").algebra;
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, l.dimension() - 1);
  for (int n = 0; n < 60; ++n) {
    const auto x = l.unit(pick(rng)), y = l.unit(pick(rng)), z = l.unit(pick(rng));
    CHECK(l.killing_form(l.bracket(x, y), z) == l.killing_form(x, l.bracket(y, z)));
  }
}

TEST_CASE("serial and parallel structure constants agree") {
  const auto& basis = model("u4").algebra.basis();
  std::vector<OperatorPoly> ops;
  for (const auto& e : basis) ops.push_back(e.op);
  const PolySpan span(ops);
  CHECK(bracket_table_serial(basis, span) == bracket_table_parallel(basis, span));
}

TEST_CASE("radicals and Levi parts") {
  const auto& u2 = model("u2");
  const auto lv = levi_decomposition(u2.algebra);
  CHECK(same_span(lv.radical, {*u2.algebra.coordinates(u2.combination({{1, 1}, {1, 4}}))}, 4));
  CHECK(lv.levi.size() == 3u);
  CHECK(same_span(lv.levi,
                  {*u2.algebra.coordinates(u2.combination({{1, 1}, {-1, 4}})), u2.algebra.unit(1), u2.algebra.unit(2)},
                  4));

  const auto& u4 = model("u4");
  const auto l4 = levi_decomposition(u4.algebra);
  CHECK(same_span(l4.radical, {*u4.algebra.coordinates(u4.combination({{s(3), 1}, {1, 16}}))}, 16));
  CHECK(l4.levi.size() == 15u);
  CHECK(rank(restricted_killing(u4.algebra, l4.levi)) == 15u);
  CHECK(same_span(center(u4.algebra), l4.radical, 16));
}

TEST_CASE("is_subalgebra") {
  const auto& u3 = model("u3");
  const auto& g = [&](int i) { return u3.generator("g" + std::to_string(i)); };
  CHECK(is_subalgebra({g(5), g(3) * RadicalScalar::sqrt(mpq_class(1, 2)), g(9)}, u3.algebra).ok);
  CHECK(is_subalgebra({g(2)}, u3.algebra).ok);
  CHECK(!is_subalgebra({g(2), g(4)}, u3.algebra).ok);
}

TEST_CASE("closure failures are reported") {
  const Mode a{"p", HalfInt(1)}, b{"p", HalfInt(0)};
  CHECK_THROWS_AS(LieAlgebra::from_generators({{"x", bilinear(a, b)}, {"y", bilinear(b, a)}}), NotClosed);
  CHECK_THROWS_AS(LieAlgebra::from_generators({{"x", bilinear(a, b)}, {"y", bilinear(a, b) * q(2)}}),
                  LinearlyDependent);
}
