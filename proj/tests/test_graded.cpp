#include <algorithm>
#include <random>

#include "doctest.h"
#include "qhopf/graded.hpp"

using namespace qhopf;

namespace {

Field Q = Field::rationals();
Scalar n(long a, long b = 1) { return Q.from_rational(Rational(a, b)); }

AlgebraPtr z2_group() {
  GradedBasis basis({"1", "g"}, {0, 0}, 0);
  return GradedAlgebra::create(Q, basis, {{0, 0, 0, n(1)}, {0, 1, 1, n(1)}, {1, 0, 1, n(1)},
                                          {1, 1, 0, n(1)}});
}

AlgebraPtr grassmann() {
  GradedBasis basis({"1", "theta"}, {0, 1}, 0);
  return GradedAlgebra::create(Q, basis, {{0, 0, 0, n(1)}, {0, 1, 1, n(1)}, {1, 0, 1, n(1)}});
}

// Sweedler's four-dimensional algebra: g^2 = 1, x^2 = 0, xg = -gx.
AlgebraPtr sweedler() {
  GradedBasis basis({"1", "g", "x", "gx"}, {0, 0, 0, 0}, 0);
  std::vector<StructureConstant> c;
  for (Index i = 0; i < 4; ++i) {
    c.push_back({0, i, i, n(1)});
    if (i) c.push_back({i, 0, i, n(1)});
  }
  c.push_back({1, 1, 0, n(1)});
  c.push_back({1, 2, 3, n(1)});
  c.push_back({1, 3, 2, n(1)});
  c.push_back({2, 1, 3, n(-1)});
  c.push_back({3, 1, 2, n(-1)});
  return GradedAlgebra::create(Q, basis, c);
}

Tensor pure(std::vector<AlgebraElement> f) { return Tensor::pure(f); }

Tensor random_tensor(const AlgebraPtr& a, std::size_t rank, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), idx(0, static_cast<int>(a->dim()) - 1);
  Tensor t = Tensor::zero(a, rank);
  for (int k = 0; k < 5; ++k) {
    MultiIndex m;
    for (std::size_t l = 0; l < rank; ++l) m[l] = static_cast<std::uint16_t>(idx(rng));
    t.add_term(m, n(coef(rng)));
  }
  return t;
}

}  // namespace

TEST_CASE("structure constant validation") {
  GradedBasis basis({"1", "g"}, {0, 0}, 0);
  // a a = b, a b = a, b a = 0: (a a) b = 0 but a (a b) = b
  GradedBasis three({"1", "a", "b"}, {0, 0, 0}, 0);
  CHECK_THROWS_AS(GradedAlgebra::create(Q, three, {{0, 0, 0, n(1)}, {0, 1, 1, n(1)},
                                                   {0, 2, 2, n(1)}, {1, 0, 1, n(1)},
                                                   {2, 0, 2, n(1)}, {1, 1, 2, n(1)},
                                                   {1, 2, 1, n(1)}}),
                  InvalidStructure);
  GradedBasis odd({"1", "t"}, {0, 1}, 0);
  CHECK_THROWS_AS(GradedAlgebra::create(Q, odd, {{0, 0, 0, n(1)}, {0, 1, 1, n(1)},
                                                 {1, 0, 1, n(1)}, {1, 1, 1, n(1)}}),
                  InvalidStructure);
  CHECK_THROWS_AS(GradedAlgebra::create(Q, basis, {{0, 0, 0, n(1)}, {0, 1, 1, n(1)}}),
                  InvalidStructure);
  CHECK_THROWS_AS(GradedBasis({"1", "1"}, {0, 0}, 0), InvalidStructure);
  CHECK_THROWS_AS(GradedBasis({"1", "t"}, {1, 0}, 0), InvalidStructure);
}

TEST_CASE("multiply") {
  auto e1 = z2_group();
  CHECK(e1->element("g") * e1->element("g") == e1->unit());
  auto h4 = sweedler();
  CHECK(h4->element("x") * h4->element("g") == -h4->element("gx"));
  CHECK(h4->element("g") * h4->element("x") == h4->element("gx"));
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    AlgebraElement y = random_tensor(h4, 1, rng).to_element();
    CHECK(h4->unit() * y == y);
    CHECK(y * h4->unit() == y);
  }
}

TEST_CASE("Koszul signs in tensor products") {
  auto e1 = z2_group();
  auto one = e1->unit(), g = e1->element("g");
  CHECK(pure({one, g}) * pure({g, one}) == pure({g, g}));
  auto e4 = grassmann();
  auto u = e4->unit(), th = e4->element("theta");
  CHECK(pure({u, th}) * pure({th, u}) == -pure({th, th}));
  CHECK(pure({th, u}) * pure({u, th}) == pure({th, th}));
  CHECK((pure({th, u}) * pure({th, u})).is_zero());
  // rank 3: (1 (x) 1 (x) t)(t (x) t (x) 1) picks up [t][t] twice -> +, then [t]...[t]
  Tensor a = pure({u, th, th}), b = pure({th, u, u});
  CHECK(a * b == pure({th, th, th}));
  CHECK(pure({u, u, th}) * pure({u, th, u}) == -pure({u, th, th}));
}

TEST_CASE("tensor product is associative") {
  std::mt19937 rng(11);
  for (auto alg : {grassmann(), sweedler()}) {
    for (std::size_t r = 1; r <= 3; ++r) {
      for (int t = 0; t < 10; ++t) {
        Tensor x = random_tensor(alg, r, rng), y = random_tensor(alg, r, rng),
               z = random_tensor(alg, r, rng);
        CHECK((x * y) * z == x * (y * z));
      }
    }
  }
}

TEST_CASE("graded permutations") {
  auto e1 = z2_group();
  auto one = e1->unit(), g = e1->element("g");
  CHECK(pure({one, g}).permuted({1, 0}) == pure({g, one}));
  auto e4 = grassmann();
  auto th = e4->element("theta"), u = e4->unit();
  CHECK(pure({th, th}).permuted({1, 0}) == -pure({th, th}));
  CHECK(pure({th, u, th}).permuted({2, 0, 1}) == -pure({th, th, u}));

  // group action including signs, and inverse round trip
  std::mt19937 rng(3);
  std::vector<std::size_t> p{0, 1, 2}, q{0, 1, 2};
  for (int t = 0; t < 10; ++t) {
    Tensor x = random_tensor(e4, 3, rng);
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    std::vector<std::size_t> pq(3), pinv(3);
    for (std::size_t i = 0; i < 3; ++i) pq[i] = p[q[i]];
    for (std::size_t i = 0; i < 3; ++i) pinv[p[i]] = i;
    CHECK(x.permuted(p).permuted(q) == x.permuted(pq));
    CHECK(x.permuted(p).permuted(pinv) == x);
  }
}

TEST_CASE("multiplication map and embedding") {
  auto e1 = z2_group();
  auto g = e1->element("g");
  CHECK(pure({g, g}).merged(0).to_element() == e1->unit());
  auto e4 = grassmann();
  auto th = e4->element("theta");
  CHECK(pure({th, th}).merged(0).is_zero());
  std::mt19937 rng(5);
  auto h4 = sweedler();
  for (int t = 0; t < 10; ++t) {
    AlgebraElement x = random_tensor(h4, 1, rng).to_element();
    AlgebraElement y = random_tensor(h4, 1, rng).to_element();
    CHECK(Tensor::pure({x, y}).multiply_out() == x * y);
  }
  CHECK(pure({g}).embedded({1}, 3) == pure({e1->unit(), g, e1->unit()}));
}

TEST_CASE("maps on legs") {
  auto e4 = grassmann();
  auto u = e4->unit(), th = e4->element("theta");
  // coproduct of the exterior algebra: theta primitive
  LinearMap delta(e4, {e4, e4}, {pure({u, u}), pure({th, u}) + pure({u, th})});
  LinearMap eps = LinearMap::functional(e4, {n(1), n(0)});
  CHECK(apply_on_legs(pure({u, u}), {{0, delta}}) == Tensor::one(e4, 3));
  CHECK(apply_on_legs(pure({th, u}), {{1, eps}}) == pure({th}));
  LinearMap odd = LinearMap::endomorphism(e4, {th, u});
  CHECK_FALSE(odd.parity_preserving());
  CHECK_THROWS(apply_on_legs(pure({th, u}), {{0, odd}}));
  CHECK_THROWS(apply_on_legs(pure({th, u}), {{2, eps}}));

  // even maps on distinct legs commute
  LinearMap s = LinearMap::endomorphism(e4, {u, -th});
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    Tensor x = random_tensor(e4, 2, rng);
    CHECK(apply_on_legs(apply_on_legs(x, {{0, s}}), {{1, delta}}) ==
          apply_on_legs(apply_on_legs(x, {{1, delta}}), {{0, s}}));
    CHECK(apply_on_legs(x, {{0, s}, {1, delta}}) ==
          apply_on_legs(apply_on_legs(x, {{1, delta}}), {{0, s}}));
  }
}

TEST_CASE("antipode applied to one leg of the Z2 R-matrix") {
  auto e1 = z2_group();
  auto one = e1->unit(), g = e1->element("g");
  Tensor r = (pure({one, one}) + pure({one, g}) + pure({g, one}) - pure({g, g})).scaled(n(1, 2));
  LinearMap s = LinearMap::identity(e1);
  // S is the identity on the group algebra of Z2, so the hand expansion is R itself.
  CHECK(apply_on_legs(r, {{1, s}}) == r);
  LinearMap flip = LinearMap::endomorphism(e1, {one, -g});
  Tensor expected =
      (pure({one, one}) - pure({one, g}) + pure({g, one}) + pure({g, g})).scaled(n(1, 2));
  CHECK(apply_on_legs(r, {{1, flip}}) == expected);
}

TEST_CASE("anti-homomorphism check") {
  auto e1 = z2_group();
  CHECK_FALSE(find_antihomomorphism_failure(LinearMap::identity(e1)));
  auto e4 = grassmann();
  auto th = e4->element("theta");
  CHECK_FALSE(find_antihomomorphism_failure(LinearMap::endomorphism(e4, {e4->unit(), -th})));
  auto h4 = sweedler();
  LinearMap s = LinearMap::endomorphism(
      h4, {h4->unit(), h4->element("g"), -h4->element("gx"), h4->element("x")});
  CHECK_FALSE(find_antihomomorphism_failure(s));
  LinearMap bad = LinearMap::identity(h4);
  auto f = find_antihomomorphism_failure(bad);
  REQUIRE(f);
  CHECK_FALSE(f->difference.is_zero());
}

TEST_CASE("matrix algebras") {
  auto m = GradedAlgebra::matrix_algebra(Q, {0, 1});
  CHECK(m->dim() == 4);
  CHECK(m->parity(m->basis().index_of("E(1,2)")) == 1);
  auto e12 = m->element("E(1,2)"), e21 = m->element("E(2,1)");
  CHECK(e12 * e21 == m->element("E(1,1)"));
  CHECK(m->unit() * e12 == e12);
}

TEST_CASE("linear map inverse") {
  auto h4 = sweedler();
  LinearMap s = LinearMap::endomorphism(
      h4, {h4->unit(), h4->element("g"), -h4->element("gx"), h4->element("x")});
  auto inv = s.inverse();
  REQUIRE(inv);
  CHECK(s.then(*inv) == LinearMap::identity(h4));
}

TEST_CASE("rendering") {
  auto e1 = z2_group();
  auto g = e1->element("g");
  CHECK((e1->unit() - g.scaled(n(1, 2))).to_string() == "1 - 1/2*g");
  CHECK(pure({g, g}).to_string() == "(g ⊗ g)");
  CHECK(e1->zero().to_string() == "0");
}
