#include "support.hpp"

#include "lieboson/angular.hpp"
#include "lieboson/errors.hpp"
#include "lieboson/tensor_decomp.hpp"

using namespace lieboson;
using lieboson::test::model;
using lieboson::test::ranks;
using lieboson::test::ranks_of;

namespace {

LieAlgebra levi_of(const Model& m) {
  return LieAlgebra::from_generators(named_elements(m.algebra, levi_decomposition(m.algebra).levi), Exec::serial);
}

}  // namespace

TEST_CASE("su(4) signatures") {
  const auto& u4 = model("u4");
  const auto su4 = levi_of(u4);
  const auto l = decompose_adjoint(su4, u4.jset("L"));
  const auto w = decompose_adjoint(su4, u4.jset("W"));
  const auto y = decompose_adjoint(su4, u4.jset("Y"));
  const auto t = decompose_adjoint(su4, u4.jset("T"));
  CHECK(ranks_of(l) == ranks({0, 2, 2, 2, 4}));
  CHECK(ranks_of(w) == ranks({0, 0, 0, 0, 1, 1, 1, 1, 2}));
  CHECK(ranks_of(y) == ranks({0, 0, 0, 2, 2, 2, 2}));
  CHECK(ranks_of(t) == ranks({2, 4, 6}));
  for (const auto* d : {&l, &w, &y, &t}) {
    CHECK(total_components(*d) == 15u);
    for (const auto& m : *d) CHECK(verify_tensor(m, u4.jset(d == &l ? "L" : d == &w ? "W" : d == &y ? "Y" : "T")).ok);
  }
}

TEST_CASE("u(3) and su(3) signatures") {
  const auto& u3 = model("u3");
  CHECK(ranks_of(decompose_adjoint(u3.algebra, u3.jset("L"))) == ranks({0, 2, 4}));
  CHECK(ranks_of(decompose_adjoint(u3.algebra, u3.jset("W"))) == ranks({0, 0, 1, 1, 2}));
  const auto su3 = levi_of(u3);
  CHECK(ranks_of(decompose_adjoint(su3, u3.jset("L"))) == ranks({2, 4}));
  CHECK(ranks_of(decompose_adjoint(su3, u3.jset("W"))) == ranks({0, 1, 1, 2}));
}

TEST_CASE("g2, g3, g4 form the L vector") {
  const auto& u3 = model("u3");
  CHECK(verify_tensor({HalfInt(1), {u3.generator("g2"), u3.generator("g3"), u3.generator("g4")}, "v"}, u3.jset("L")).ok);
}

TEST_CASE("coupled boson pairs are spherical tensors") {
  const auto& u3 = model("u3");
  const BosonSpecies p{"p", HalfInt(1)};
  const auto cr = SphericalTensorOp::creators(p), an = SphericalTensorOp::tilde_annihilators(p);
  const JSet& j = u3.jset("L");
  for (int k = 0; k <= 2; ++k) {
    const auto c = couple(cr, an, HalfInt(k));
    CHECK(verify_tensor({HalfInt(k), c.components(), "c"}, j).ok);
  }
}

TEST_CASE("a broken multiplet reports residuals") {
  const auto& u3 = model("u3");
  TensorMultiplet bad{HalfInt(1), {u3.generator("g2"), u3.generator("g3"), -u3.generator("g4")}, "bad"};
  const auto r = verify_tensor(bad, u3.jset("L"));
  CHECK(!r.ok);
  CHECK(!r.residuals.empty());
}

TEST_CASE("jset relations are enforced") {
  const auto& u3 = model("u3");
  CHECK_THROWS_AS(make_jset("x", u3.generator("g3"), u3.generator("g9"), u3.generator("g5")), NotSl2);
}
