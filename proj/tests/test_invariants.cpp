#include "doctest.h"
#include "qhopf/casimir.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/invariants.hpp"

using namespace qhopf;

namespace {

Scalar q(long a, long b = 1) { return Field::rationals().from_rational(Rational(a, b)); }

const std::vector<std::string> kCore{"z2-group", "z2-cocycle", "sweedler-h4", "grassmann-theta",
                                     "sweedler-twisted"};

// Dimension of {c of parity p : Ad b·c = ε(b) c for all basis b}, from the
// explicit Sweedler sums rather than adjoint_action.
std::size_t invariant_dim_oracle(const QuasiHopf& h, Parity p, bool pseudo) {
  const AlgebraPtr& A = h.algebra;
  std::vector<Index> support;
  for (Index i = 0; i < A->dim(); ++i) {
    if (A->parity(i) == p) support.push_back(i);
  }
  LinearSystem sys(A->field(), support.size());
  for (Index a = 0; a < A->dim(); ++a) {
    const Scalar eps = h.eps(A->basis_element(a));
    // column k holds the image of the k-th candidate basis vector
    std::vector<AlgebraElement> images;
    for (Index c : support) {
      AlgebraElement img = A->basis_element(c).scaled(-eps);
      for (const auto& [m, coef] : h.coproduct.image(a).terms()) {
        const AlgebraElement a1 = A->basis_element(m[0]), a2 = A->basis_element(m[1]);
        const Parity sp = pseudo ? A->parity(m[0]) : A->parity(m[1]);
        const Scalar sign = (sp & p) ? q(-1) : q(1);
        const AlgebraElement t = pseudo ? h.s(a1) * A->basis_element(c) * a2
                                        : a1 * A->basis_element(c) * h.s(a2);
        img += t.scaled(coef * sign);
      }
      images.push_back(img);
    }
    for (Index row = 0; row < A->dim(); ++row) {
      SparseVector eq;
      for (std::size_t k = 0; k < images.size(); ++k) {
        const Scalar v = images[k].coeff(row);
        if (!v.is_zero()) eq.emplace(k, v);
      }
      if (!eq.empty()) sys.add_homogeneous(eq);
    }
  }
  return support.size() - sys.rank();
}

}  // namespace

TEST_CASE("adjoint actions on small examples") {
  const QuasiHopf z = load_builtin("z2-group", false).structure;
  const auto g = z.algebra->element("g");
  CHECK(adjoint_action(z, g, g) == g);
  CHECK(anti_adjoint_action(z, g, g) == g);
  const QuasiHopf s = load_builtin("sweedler-h4", false).structure;
  const auto sg = s.algebra->element("g"), x = s.algebra->element("x");
  CHECK(adjoint_action(s, sg, x) == -x);
  CHECK(anti_adjoint_action(s, sg, x) == -x);
  for (Index i = 0; i < s.algebra->dim(); ++i) {
    const auto b = s.algebra->basis_element(i);
    CHECK(adjoint_action(s, s.algebra->unit(), b) == b);
    CHECK(anti_adjoint_action(s, s.algebra->unit(), b) == b);
  }
}

TEST_CASE("adjoint actions compose as module actions") {
  for (const char* name : {"sweedler-h4", "grassmann-theta"}) {
    CAPTURE(name);
    const QuasiHopf h = load_builtin(name, false).structure;
    const auto& A = h.algebra;
    for (Index i = 0; i < A->dim(); ++i) {
      for (Index j = 0; j < A->dim(); ++j) {
        for (Index k = 0; k < A->dim(); ++k) {
          const auto a = A->basis_element(i), b = A->basis_element(j), c = A->basis_element(k);
          CHECK(adjoint_action(h, a, adjoint_action(h, b, c)) == adjoint_action(h, a * b, c));
          CHECK(anti_adjoint_action(h, a, anti_adjoint_action(h, b, c)) ==
                anti_adjoint_action(h, b * a, c));
        }
      }
    }
  }
}

TEST_CASE("invariant subspaces match the explicit kernel computation") {
  for (const auto& name : kCore) {
    CAPTURE(name);
    const QuasiHopf h = load_builtin(name, false).structure;
    const GradedSubspace inv = invariant_subspace(h), pinv = pseudo_invariant_subspace(h);
    CHECK(inv.even.size() == invariant_dim_oracle(h, 0, false));
    CHECK(inv.odd.size() == invariant_dim_oracle(h, 1, false));
    CHECK(pinv.even.size() == invariant_dim_oracle(h, 0, true));
    CHECK(pinv.odd.size() == invariant_dim_oracle(h, 1, true));
    CHECK(inv.contains(h.beta));
    CHECK(pinv.contains(h.alpha));
    for (const auto& c : inv.even) CHECK(is_invariant(h, c));
    for (const auto& c : inv.odd) CHECK(is_invariant(h, c));
    for (const auto& c : pinv.even) CHECK(is_pseudo_invariant(h, c));
  }
  CHECK(invariant_subspace(load_builtin("z2-group", false).structure).dim() == 2);
  CHECK(pseudo_invariant_subspace(load_builtin("z2-group", false).structure).dim() == 2);
}

TEST_CASE("twisted invariants lie in the twisted invariant spaces") {
  const CatalogEntry e = load_builtin("sweedler-h4", false);
  const Twistor& f = e.twistor("Ft");
  const QuasiHopf t = twist_structure(e.structure, f, false);
  for (const auto& c : invariant_subspace(e.structure).even) {
    CHECK(invariant_subspace(t).contains(twisted_invariant(e.structure, f, c)));
  }
  for (const auto& c : pseudo_invariant_subspace(e.structure).even) {
    CHECK(pseudo_invariant_subspace(t).contains(twisted_pseudo_invariant(e.structure, f, c)));
  }
}

TEST_CASE("centrality with witnesses") {
  const QuasiHopf z = load_builtin("z2-group", false).structure;
  CHECK(is_central(z.algebra->unit()));
  CHECK(is_central(z.algebra->element("g")));
  CHECK(center(z.algebra).dim() == 2);

  const QuasiHopf s = load_builtin("sweedler-h4", false).structure;
  const auto fail = centrality_failure(s.algebra->element("x"));
  REQUIRE(fail);
  CHECK_FALSE(fail->commutator.is_zero());
  const GradedSubspace zs = center(s.algebra);
  CHECK(zs.dim() == 1);
  CHECK(zs.contains(s.algebra->unit()));

  const GradedSubspace zg = center(load_builtin("grassmann-theta", false).structure.algebra);
  CHECK(zg.even.size() == 1);
  CHECK(zg.odd.size() == 1);
}

TEST_CASE("invariant linear forms") {
  const QuasiHopf z = load_builtin("z2-group", false).structure;
  LinearForm eps{z.algebra, {q(1), q(1)}};
  CHECK(is_invariant_form(z, eps));
  CHECK(is_pseudo_invariant_form(z, eps));
  CHECK(invariant_linear_forms(z).size() == 2);

  const CatalogEntry s = load_builtin("sweedler-h4", false);
  const TraceForms tf = trace_forms(s.structure, s.representation("regular"));
  CHECK(is_invariant_form(s.structure, tf.xi));
  std::vector<DenseVector> span;
  for (const auto& f : invariant_linear_forms(s.structure)) span.push_back(f.values);
  const auto before = reduced_basis(Field::rationals(), 4, span).size();
  span.push_back(tf.xi.values);
  CHECK(reduced_basis(Field::rationals(), 4, span).size() == before);

  const CatalogEntry g = load_builtin("grassmann-theta", false);
  const TraceForms gf = trace_forms(g.structure, g.representation("regular"));
  CHECK(is_pseudo_invariant_form(g.structure, gf.xi_bar));
  CHECK(gf.xi_bar.even());
  // ξ(x) ≠ 0 breaks invariance since Ad g·x = −x.
  LinearForm bad{s.structure.algebra, {q(0), q(0), q(1), q(0)}};
  CHECK_FALSE(is_invariant_form(s.structure, bad));
}

TEST_CASE("invariant bilinear forms") {
  const CatalogEntry z = load_builtin("z2-group", false);
  const Representation& triv = z.representation("trivial");
  CHECK(invariant_bilinear_forms(z.structure, triv, triv).size() == 1);
  const Representation& reg = z.representation("regular");
  const auto forms = invariant_bilinear_forms(z.structure, reg, reg);
  CHECK_FALSE(forms.empty());
  // (g v, g w) = (v, w) for every form.
  for (const Matrix& b : forms) {
    const Matrix& g = reg.matrices[1];
    CHECK(b == [&] {
      Matrix gt(b.field(), 2, 2);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) gt.at(r, c) = g.at(c, r);
      return gt * b * g;
    }());
  }
  const CatalogEntry s = load_builtin("sweedler-h4", false);
  CHECK_FALSE(invariant_bilinear_forms(s.structure, s.representation("regular"),
                                       s.representation("regular"))
                  .empty());
}

TEST_CASE("module morphisms from invariant maps") {
  const CatalogEntry c = load_builtin("z2-cocycle", false);
  const Representation& reg = c.representation("regular");
  const auto maps = invariant_maps(c.structure, reg, reg, 0);
  REQUIRE_FALSE(maps.empty());
  for (const Matrix& f : maps) {
    CHECK(is_invariant_map(c.structure, reg, reg, f, 0));
    const ModuleMorphism m = module_morphism_from_invariant(c.structure, f, reg, reg);
    CHECK_MESSAGE(m.report.passed(), m.report.to_text());
    for (const Matrix& b : reg.matrices) CHECK(m.map * b == b * m.map);
  }
  const Matrix zero(Field::rationals(), 2, 2);
  CHECK(module_morphism_from_invariant(c.structure, zero, reg, reg).map.is_zero());

  // Hopf case: the construction returns f itself.
  const CatalogEntry z = load_builtin("z2-group", false);
  for (const Matrix& f : invariant_maps(z.structure, z.representation("regular"),
                                        z.representation("regular"), 0)) {
    CHECK(module_morphism_from_invariant(z.structure, f, z.representation("regular"),
                                         z.representation("regular"))
              .map == f);
  }
}

TEST_CASE("module morphism preconditions") {
  const CatalogEntry g = load_builtin("grassmann-theta", false);
  const Representation& reg = g.representation("regular");
  Matrix odd(Field::rationals(), 2, 2);
  odd.at(1, 0) = q(1);
  CHECK(map_parity(odd, reg.carrier, reg.carrier) == Parity{1});
  CHECK_THROWS_AS(module_morphism_from_invariant(g.structure, odd, reg, reg), Error);
  const CatalogEntry s = load_builtin("sweedler-h4", false);
  Matrix e00(Field::rationals(), 4, 4);
  e00.at(0, 0) = q(1);
  const Representation& sreg = s.representation("regular");
  CHECK_FALSE(is_invariant_map(s.structure, sreg, sreg, e00, 0));
  CHECK_THROWS_AS(module_morphism_from_invariant(s.structure, e00, sreg, sreg), Error);
}
