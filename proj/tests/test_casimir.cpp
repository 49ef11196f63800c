#include "doctest.h"
#include "qhopf/casimir.hpp"
#include "qhopf/catalog.hpp"

using namespace qhopf;

namespace {

Scalar q(long a, long b = 1) { return Field::rationals().from_rational(Rational(a, b)); }

const std::vector<std::string> kCore{"z2-group", "z2-cocycle", "sweedler-h4", "grassmann-theta",
                                     "sweedler-twisted"};
const std::vector<std::string> kWithR{"z2-group", "sweedler-h4", "grassmann-theta",
                                      "sweedler-twisted"};

// Group algebra of Z3 over Q(z) with R = ⅓ Σ z^{ab} gᵃ ⊗ gᵇ, which is not
// triangular, the twistor 1⊗1 + p₁⊗p₂ built from character projections, the
// regular module and the three characters.
CatalogEntry z3_cyclic() {
  const Field f = Field::cyclotomic(3);
  const Scalar z = f.generator(), third = f.from_rational(Rational(1, 3));
  GradedBasis basis({"1", "g", "g^2"}, {0, 0, 0}, 0);
  std::vector<StructureConstant> mul;
  for (Index a = 0; a < 3; ++a) {
    for (Index b = 0; b < 3; ++b) mul.push_back({a, b, (a + b) % 3, f.one()});
  }
  const AlgebraPtr A = GradedAlgebra::create(f, basis, mul);
  auto g = [&](long a) { return A->basis_element(static_cast<Index>(((a % 3) + 3) % 3)); };
  std::vector<Tensor> cop;
  std::vector<AlgebraElement> anti;
  for (long a = 0; a < 3; ++a) {
    cop.push_back(Tensor::pure({g(a), g(a)}));
    anti.push_back(g(-a));
  }
  Tensor r = Tensor::zero(A, 2), r_inv = Tensor::zero(A, 2);
  for (long a = 0; a < 3; ++a) {
    for (long b = 0; b < 3; ++b) {
      r += Tensor::pure({g(a), g(b)}).scaled(third * z.pow(a * b));
      r_inv += Tensor::pure({g(a), g(b)}).scaled(third * z.pow(-a * b));
    }
  }
  QuasiHopf h = QuasiHopf::assemble("z3-cyclic", A, LinearMap(A, {A, A}, cop),
                                    LinearMap::functional(A, {f.one(), f.one(), f.one()}),
                                    LinearMap::endomorphism(A, anti), Tensor::one(A, 3),
                                    Tensor::one(A, 3), A->unit(), A->unit(), r, r_inv);
  // p_k = ⅓ Σ z^{−ka} gᵃ, so g p_k = zᵏ p_k and ε(p_k) = 0 for k ≠ 0
  auto p = [&](long k) {
    AlgebraElement out = A->zero();
    for (long a = 0; a < 3; ++a) out += g(a).scaled(third * z.pow(-k * a));
    return out;
  };
  CatalogEntry e{h, {}, {}, {}, "cyclic group of order three"};
  e.twistors.push_back(
      validate_twistor("p1p2", h.one(2) + Tensor::pure({p(1), p(2)}), std::nullopt, h));
  e.representations.push_back(regular_representation(A));
  for (long k = 0; k < 3; ++k) {
    std::vector<Matrix> ms;
    for (long a = 0; a < 3; ++a) ms.push_back(Matrix::identity(f, 1).scaled(z.pow(k * a)));
    e.representations.push_back(
        validate_representation("chi" + std::to_string(k), A, {0}, std::move(ms)));
  }
  return e;
}

}  // namespace

TEST_CASE("C1 and C2 for every even invariant") {
  for (const auto& name : kCore) {
    CAPTURE(name);
    const QuasiHopf h = load_builtin(name, false).structure;
    for (const auto& c : invariant_subspace(h).even) {
      const CasimirResult r = build_C1(h, c);
      CHECK_MESSAGE(r.report.passed(), r.report.to_text());
      CHECK(is_central(r.element));
      CHECK(r.element * h.beta == c);
    }
    for (const auto& c : pseudo_invariant_subspace(h).even) {
      const CasimirResult r = build_C2(h, c);
      CHECK_MESSAGE(r.report.passed(), r.report.to_text());
      CHECK(h.alpha * r.element == c);
    }
    CHECK(build_C1(h, h.beta).element == h.algebra->unit());
    CHECK(build_C2(h, h.alpha).element == h.algebra->unit());
  }
}

TEST_CASE("C1 and C2 collapse in the Hopf case") {
  const QuasiHopf h = load_builtin("z2-group", false).structure;
  const auto g = h.algebra->element("g");
  CHECK(build_C1(h, g).element == g);
  CHECK(build_C2(h, g).element == g);
}

TEST_CASE("C1 rejects odd and non-invariant inputs") {
  const QuasiHopf g = load_builtin("grassmann-theta", false).structure;
  CHECK_THROWS_WITH_AS(build_C1(g, g.algebra->element("theta")), "odd element", Error);
  const QuasiHopf s = load_builtin("sweedler-h4", false).structure;
  CHECK_THROWS_WITH_AS(build_C1(s, s.algebra->element("g")), "not invariant", Error);
  CHECK_THROWS_WITH_AS(build_C2(s, s.algebra->element("g")), "not invariant", Error);
}

TEST_CASE("quadratic invariants") {
  for (const auto& name : kWithR) {
    CAPTURE(name);
    const QuasiHopf h = load_builtin(name, false).structure;
    const QuadraticInvariants trivial = quadratic_invariants(h, h.one(2));
    CHECK(trivial.c1 == h.beta);
    CHECK(trivial.c2 == h.alpha);
    for (int m : {1, 2, -1}) {
      const QuadraticInvariants qi = quadratic_invariants(h, rtr_power(h, m));
      CHECK(is_invariant(h, qi.c1));
      CHECK(is_pseudo_invariant(h, qi.c2));
      CHECK(build_C1(h, qi.c1).report.passed());
      CHECK(build_C2(h, qi.c2).report.passed());
    }
  }
  const QuasiHopf z = load_builtin("z2-group", false).structure;
  CHECK(rtr_power(z, 1) == z.one(2));
  // Every R-matrix of Sweedler's algebra is triangular; the twisted one too.
  const QuasiHopf s = load_builtin("sweedler-h4", false).structure;
  CHECK(rtr_power(s, 1) == s.one(2));
  CHECK(rtr_power(s, -1) == s.one(2));
  const QuasiHopf t = load_builtin("sweedler-twisted", false).structure;
  CHECK(rtr_power(t, 1) == t.one(2));
  // Rᵀ = 1⊗1 − θ⊗θ for the Grassmann R, again inverse to R.
  const QuasiHopf g = load_builtin("grassmann-theta", false).structure;
  CHECK(rtr_power(g, 2) == rtr_power(g, 1) * rtr_power(g, 1));
  CHECK(rtr_power(g, 1) * rtr_power(g, -1) == g.one(2));
  const auto x = s.algebra->element("x");
  CHECK_THROWS_WITH_AS(quadratic_invariants(s, Tensor::pure({x, s.algebra->unit()})),
                       "ω does not commute with Δ", Error);
}

TEST_CASE("u-operator values") {
  const QuasiHopf z = load_builtin("z2-group", false).structure;
  const auto g = z.algebra->element("g");
  CHECK(u_operator(z) == g);
  CHECK(u_inverse(z) == g);
  // S(α)u = Σ S(eⁱ) α eᵢ = ½(1 + g + g − 1)
  CHECK(z.s(z.alpha) * u_operator(z) == g);
  CHECK(u_operator(load_builtin("z2-group", false).with_r("trivial")) == z.algebra->unit());

  const QuasiHopf s = load_builtin("sweedler-h4", false).structure;
  const QuasiHopf t = load_builtin("sweedler-twisted", false).structure;
  CHECK(u_operator(t) == u_operator(s));
  CHECK(u_inverse(t) == u_inverse(s));

  const QuasiHopf gr = load_builtin("grassmann-theta", false).structure;
  const auto u = u_operator(gr);
  CHECK(is_central(u));
  CHECK(u * u_inverse(gr) == gr.algebra->unit());

  CHECK_THROWS_WITH_AS(u_operator(load_builtin("z2-cocycle", false).structure), "no R-matrix",
                       Error);
}

TEST_CASE("identity suite") {
  for (const auto& name : kCore) {
    CAPTURE(name);
    const QuasiHopf h = load_builtin(name, false).structure;
    const AxiomReport r = identity_suite(h);
    CHECK_MESSAGE(r.passed(), r.to_text());
    CHECK(r.find("phi-beta-coproduct-identity"));
    CHECK(r.find("phi-inverse-beta-coproduct-identity"));
    if (h.has_r()) {
      CHECK(r.find("u-conjugates-to-antipode-square"));
      CHECK(r.find("u-antipode-u-central"));
      CHECK(r.find("antipode-u-antipode-beta"));
    }
  }
  const CatalogEntry s = load_builtin("sweedler-h4", false);
  const AxiomReport r = identity_suite(s.structure, &s.twistor("Ft"));
  CHECK(r.passed());
  CHECK(r.find("twist-recovers-beta"));
}

TEST_CASE("identity suite detects a wrong beta") {
  QuasiHopf h = load_builtin("sweedler-h4", false).structure;
  h.beta = h.algebra->element("g");
  const AxiomReport r = identity_suite(h);
  const AxiomCheck* c = r.find("phi-beta-coproduct-identity");
  REQUIRE(c);
  CHECK_FALSE(c->passed);
  CHECK(c->witness_basis == "x");
}

TEST_CASE("trace forms") {
  const CatalogEntry z = load_builtin("z2-group", false);
  const auto& A = z.structure.algebra;
  const TraceForms reg = trace_forms(z.structure, z.representation("regular"));
  CHECK(reg.xi(A->unit()) == q(0));
  CHECK(reg.xi(A->element("g")) == q(2));
  const TraceForms triv =
      trace_forms(z.with_r("trivial"), z.representation("trivial"));
  CHECK(triv.xi == LinearForm{A, {q(1), q(1)}});

  const CatalogEntry g = load_builtin("grassmann-theta", false);
  const Representation& gr = g.representation("regular");
  // graded cyclicity on all basis pairs
  const auto& B = g.structure.algebra;
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      const Scalar sign = (B->parity(i) & B->parity(j)) ? q(-1) : q(1);
      CHECK(supertrace(gr.matrices[i] * gr.matrices[j], gr.carrier) ==
            sign * supertrace(gr.matrices[j] * gr.matrices[i], gr.carrier));
    }
  }
  const TraceForms gf = trace_forms(g.structure, gr);
  CHECK(gf.xi.even());
  CHECK(is_invariant_form(g.structure, gf.xi));
  CHECK(is_pseudo_invariant_form(g.structure, gf.xi_bar));
}

TEST_CASE("central elements from theta") {
  const CatalogEntry c = load_builtin("z2-cocycle", false);
  const QuasiHopf& h = c.structure;
  const LinearForm eps{h.algebra, {q(1), q(1)}};
  const CasimirResult r = central_from_theta(h, h.one(3), eps);
  CHECK(r.report.passed());
  CHECK(r.element == h.algebra->unit().scaled(h.eps(h.beta)));
  const CasimirResult rb = central_from_theta_bar(h, h.one(3), eps);
  CHECK(rb.element == h.algebra->unit().scaled(h.eps(h.alpha)));
  const CasimirResult via_phi = central_from_theta(h, h.phi_inv * h.phi, eps);
  CHECK(via_phi.element == r.element);

  const QuasiHopf s = load_builtin("sweedler-h4", false).structure;
  const auto x = s.algebra->element("x"), one = s.algebra->unit();
  const LinearForm seps{s.algebra, {q(1), q(1), q(0), q(0)}};
  CHECK_THROWS_AS(central_from_theta(s, Tensor::pure({x, one, one}), seps), Error);
}

TEST_CASE("trace-type Casimir families") {
  const CatalogEntry z = load_builtin("z2-group", false);
  for (int m : {-1, 0, 1, 2}) {
    const CasimirPair p = casimir_Cm(z.structure, z.representation("regular"), m);
    CHECK(p.c.element.is_zero());
    CHECK(p.c_bar.element.is_zero());
    CHECK(p.c.report.passed());
  }
  for (const auto& name : kWithR) {
    CAPTURE(name);
    const CatalogEntry e = load_builtin(name, false);
    const QuasiHopf& h = e.structure;
    for (const Representation& pi : e.representations) {
      CAPTURE(pi.name);
      // m = 0 collapses to Str π(u S⁻¹(α) β)
      const Scalar c0 = supertrace(pi(u_operator(h) * h.s_inv(h.alpha) * h.beta), pi.carrier);
      const CasimirPair p0 = casimir_Cm(h, pi, 0);
      CHECK(p0.c.element == h.algebra->unit().scaled(c0));
      for (int m : {-1, 1, 2}) {
        const CasimirPair p = casimir_Cm(h, pi, m);
        CHECK(p.c.report.passed());
        CHECK(p.c_bar.report.passed());
        CHECK(casimir_from_omega_rep(h, pi, apply_rep_on_leg(rtr_power(h, m), 1, pi)).element ==
              p.c.element);
      }
    }
  }
}

TEST_CASE("twisted Casimir families equal the untwisted ones") {
  const CatalogEntry s = load_builtin("sweedler-h4", false);
  const CatalogEntry t = load_builtin("sweedler-twisted", false);
  for (const Representation& pi : s.representations) {
    for (int m : {-1, 0, 1, 2}) {
      CHECK(casimir_Cm(s.structure, pi, m).c.element == casimir_Cm(t.structure, pi, m).c.element);
    }
  }
}

TEST_CASE("represented-leg construction checks its precondition") {
  const CatalogEntry s = load_builtin("sweedler-h4", false);
  const Representation& pi = s.representation("regular");
  const auto x = s.structure.algebra->element("x");
  const Tensor bad = apply_rep_on_leg(Tensor::pure({x, s.structure.algebra->unit()}), 1, pi);
  CHECK_THROWS_WITH_AS(casimir_from_omega_rep(s.structure, pi, bad),
                       "intertwining condition fails", Error);
}

TEST_CASE("Hopf-algebra formula agrees") {
  for (const char* name : {"z2-group", "sweedler-h4"}) {
    const CatalogEntry e = load_builtin(name, false);
    for (const Representation& pi : e.representations) {
      for (int m : {0, 1, 2}) {
        CAPTURE(name);
        CAPTURE(m);
        CHECK(casimir_Cm(e.structure, pi, m).c.element == classical_casimir(e.structure, pi, m));
      }
    }
  }
  const CatalogEntry c = load_builtin("z2-cocycle", false);
  CHECK_THROWS_AS(classical_casimir(c.structure, c.representation("regular"), 1), Error);
}

TEST_CASE("twist invariance") {
  struct Case {
    const char* name;
    const char* twistor;
  };
  for (const Case& k : {Case{"z2-group", "pminus"}, Case{"z2-cocycle", "pminus"},
                        Case{"sweedler-h4", "Ft"}, Case{"grassmann-theta", "identity"},
                        Case{"grassmann-theta", "theta"}, Case{"sweedler-twisted", "untwist"}}) {
    CAPTURE(k.name);
    CAPTURE(k.twistor);
    const CatalogEntry e = load_builtin(k.name, false);
    TwistInvarianceOptions options;
    options.representations = e.representations;
    const AxiomReport r = verify_twist_invariance(e.structure, e.twistor(k.twistor), options);
    CHECK_MESSAGE(r.passed(), r.to_text());
    CHECK(r.find("c1-twist-invariance"));
    CHECK(static_cast<bool>(r.find("u-twist-invariance")) == e.structure.has_r());
  }
}

TEST_CASE("non-triangular example: the families depend on m and survive twisting") {
  const CatalogEntry e = z3_cyclic();
  const QuasiHopf& h = e.structure;
  REQUIRE(verify_all(h).passed());
  CHECK_FALSE(rtr_power(h, 1) == h.one(2));
  CHECK(identity_suite(h).passed());
  const Representation& chi1 = e.representation("chi1");
  const CasimirPair c0 = casimir_Cm(h, chi1, 0), c1 = casimir_Cm(h, chi1, 1);
  CHECK(c0.c.report.passed());
  CHECK(c1.c.report.passed());
  CHECK_FALSE(c0.c.element == c1.c.element);
  for (const Representation& pi : e.representations) {
    for (int m : {0, 1, 2}) {
      CAPTURE(pi.name);
      CAPTURE(m);
      CHECK(casimir_Cm(h, pi, m).c.element == classical_casimir(h, pi, m));
      CHECK(casimir_from_omega_rep(h, pi, apply_rep_on_leg(rtr_power(h, m), 1, pi)).element ==
            casimir_Cm(h, pi, m).c.element);
    }
  }
  const Twistor& f = e.twistor("p1p2");
  const QuasiHopf t = twist_structure(h, f, true);
  CHECK_FALSE(t.phi == t.one(3));
  TwistInvarianceOptions options;
  options.representations = e.representations;
  const AxiomReport r = verify_twist_invariance(h, f, options);
  CHECK_MESSAGE(r.passed(), r.to_text());
}
