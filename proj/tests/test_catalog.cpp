#include <algorithm>

#include "doctest.h"
#include "qhopf/catalog.hpp"

using namespace qhopf;

namespace {

Scalar q(long a, long b = 1) { return Field::rationals().from_rational(Rational(a, b)); }

}  // namespace

TEST_CASE("built-in names") {
  const auto names = builtin_names();
  CHECK(names == std::vector<std::string>{"z2-group", "z2-cocycle", "sweedler-h4",
                                          "grassmann-theta", "sweedler-twisted", "small-uqsl2"});
  CHECK(is_stretch_builtin("small-uqsl2"));
  CHECK_FALSE(is_stretch_builtin("z2-group"));
  CHECK_THROWS_AS(load_builtin("no-such-algebra"), Error);
}

TEST_CASE("core built-ins load with verification") {
  for (const auto& name : builtin_names()) {
    if (is_stretch_builtin(name)) continue;
    CAPTURE(name);
    const CatalogEntry e = load_builtin(name);
    CHECK(e.structure.name == name);
    CHECK_FALSE(e.representations.empty());
    CHECK_FALSE(e.twistors.empty());
    CHECK_FALSE(e.notes.empty());
  }
}

TEST_CASE("z2-group data") {
  const CatalogEntry e = load_builtin("z2-group", false);
  const QuasiHopf& h = e.structure;
  const auto g = h.algebra->element("g");
  CHECK(g * g == h.algebra->unit());
  CHECK(h.delta(g) == Tensor::pure({g, g}));
  CHECK(h.s(g) == g);
  CHECK(h.phi == h.one(3));
  // R₂ is an involution with coefficient −½ on g ⊗ g.
  CHECK(*h.r * *h.r == h.one(2));
  MultiIndex gg;
  gg[0] = gg[1] = 1;
  CHECK(h.r->coeff(gg) == q(-1, 2));
  CHECK(e.with_r("trivial").r == h.one(2));
  CHECK_THROWS_AS(e.with_r("missing"), Error);
  CHECK_THROWS_AS(e.twistor("missing"), Error);
}

TEST_CASE("Sweedler data") {
  const QuasiHopf h = load_builtin("sweedler-h4", false).structure;
  const auto& a = h.algebra;
  const auto g = a->element("g"), x = a->element("x"), one = a->unit();
  CHECK(x * x == a->zero());
  CHECK(x * g == -(g * x));
  CHECK(h.delta(x) == Tensor::pure({x, one}) + Tensor::pure({g, x}));
  CHECK(h.s(x) == -(g * x));
  for (Index i = 0; i < a->dim(); ++i) CHECK(a->parity(i) == 0);
}

TEST_CASE("Grassmann pair is super") {
  const QuasiHopf h = load_builtin("grassmann-theta", false).structure;
  const auto th = h.algebra->element("theta");
  CHECK(th.parity() == Parity{1});
  CHECK(th * th == h.algebra->zero());
  CHECK(h.s(th) == -th);
}

TEST_CASE("twisted Sweedler entry has a non-trivial co-associator") {
  const QuasiHopf h = load_builtin("sweedler-twisted", false).structure;
  const auto& terms = h.phi.terms();
  CHECK(std::any_of(terms.begin(), terms.end(),
                    [](const auto& t) { return t.first != MultiIndex{}; }));
}

TEST_CASE("small quantum group data") {
  const CatalogEntry e = load_builtin("small-uqsl2", false);
  const QuasiHopf& h = e.structure;
  CHECK(h.algebra->dim() == 27);
  CHECK(h.field() == Field::cyclotomic(3));
  CHECK(h.has_r());
  CHECK(*h.r * *h.r_inv == h.one(2));
}
