#include "qhopf/casimir.hpp"

#include <string>
#include <tuple>

namespace qhopf {

namespace {

void record(AxiomReport& rep, std::string id, const Tensor& lhs, const Tensor& rhs,
            std::string where = {}) {
  AxiomCheck check;
  check.id = std::move(id);
  Tensor d = lhs - rhs;
  if (!d.is_zero()) {
    check.passed = false;
    check.witness = std::move(d);
    check.witness_basis = std::move(where);
  }
  rep.checks.push_back(std::move(check));
}

void record(AxiomReport& rep, std::string id, const AlgebraElement& lhs, const AlgebraElement& rhs,
            std::string where = {}) {
  record(rep, std::move(id), Tensor::from_element(lhs), Tensor::from_element(rhs),
         std::move(where));
}

// Records the first failing basis element of a family of equalities.
template <class F>
void record_over_basis(AxiomReport& rep, std::string id, const QuasiHopf& h, F&& sides) {
  const AlgebraPtr& A = h.algebra;
  for (Index i = 0; i < A->dim(); ++i) {
    auto [lhs, rhs] = sides(A->basis_element(i));
    if (!(lhs == rhs) || i + 1 == A->dim()) {
      record(rep, std::move(id), lhs, rhs, lhs == rhs ? std::string() : A->basis().label(i));
      return;
    }
  }
}

void record_central(AxiomReport& rep, const AlgebraElement& x) {
  AxiomCheck check;
  check.id = "central";
  if (auto f = centrality_failure(x)) {
    check.passed = false;
    check.witness = Tensor::from_element(f->commutator);
    check.witness_basis = x.algebra()->basis().label(f->basis);
  }
  rep.checks.push_back(std::move(check));
}

void require_even(const AlgebraElement& c) {
  auto p = c.parity();
  if (!p || *p) throw Error("odd element");
}

// (Δ⊗1)Δ(a) and (1⊗Δ)Δ(a)
Tensor delta_left(const QuasiHopf& h, const AlgebraElement& a) {
  return apply_on_legs(h.delta(a), {{0, h.coproduct}});
}
Tensor delta_right(const QuasiHopf& h, const AlgebraElement& a) {
  return apply_on_legs(h.delta(a), {{1, h.coproduct}});
}

// Σ S(eⁱ) α eᵢ (−1)^{[eᵢ]} = m(S ⊗ α)Rᵀ
AlgebraElement s_alpha_rt(const QuasiHopf& h) {
  const AlgebraElement one = h.algebra->unit();
  Tensor rt = h.r_matrix().permuted({1, 0});
  return (Tensor::pure({one, h.alpha}) * apply_on_legs(rt, {{0, h.antipode}})).multiply_out();
}

// Σ S⁻¹(α ēⁱ) ēᵢ (−1)^{[ēᵢ]}
AlgebraElement s_inv_alpha_rinv_t(const QuasiHopf& h) {
  const AlgebraElement one = h.algebra->unit();
  Tensor rt = Tensor::pure({h.alpha, one}) * h.r_matrix_inv().permuted({1, 0});
  return apply_on_legs(rt, {{0, h.require_antipode_inv()}}).multiply_out();
}

LinearForm supertrace_form(const AlgebraPtr& A, const Representation& pi, const Matrix& pre) {
  LinearForm xi{A, {}};
  for (Index i = 0; i < A->dim(); ++i) xi.values.push_back(supertrace(pre * pi.matrices[i], pi.carrier));
  return xi;
}

void require_same(const QuasiHopf& h, const Representation& pi) {
  if (!same_algebra(h.algebra, pi.algebra)) {
    throw Error("representation '" + pi.name + "' belongs to another algebra");
  }
}

}  // namespace

// ----------------------------------------------------------- C₁ and C₂

CasimirResult build_C1(const QuasiHopf& h, const AlgebraElement& c1) {
  require_even(c1);
  if (!is_invariant(h, c1)) throw Error("not invariant");
  const AlgebraElement one = h.algebra->unit();
  const LinearMap& S = h.antipode;
  AlgebraElement c = (Tensor::pure({one, one, h.alpha}) * apply_on_legs(h.phi_inv, {{1, S}}) *
                      Tensor::pure({c1, one, one}))
                         .multiply_out();
  AlgebraElement alt = (Tensor::pure({one, h.alpha, one}) *
                        apply_on_legs(h.phi, {{0, S}, {2, S}}) * Tensor::pure({one, c1, one}))
                           .multiply_out();
  CasimirResult out{c, {}};
  record_central(out.report, c);
  record(out.report, "times-beta-recovers-invariant", c * h.beta, c1);
  record(out.report, "beta-times-recovers-invariant", h.beta * c, c1);
  record(out.report, "phi-and-phi-inverse-forms-agree", alt, c);
  return out;
}

CasimirResult build_C2(const QuasiHopf& h, const AlgebraElement& c2) {
  require_even(c2);
  if (!is_pseudo_invariant(h, c2)) throw Error("not invariant");
  const AlgebraElement one = h.algebra->unit();
  const LinearMap& S = h.antipode;
  AlgebraElement c = (Tensor::pure({one, c2, one}) * apply_on_legs(h.phi, {{0, S}, {2, S}}) *
                      Tensor::pure({one, h.beta, one}))
                         .multiply_out();
  AlgebraElement alt = (Tensor::pure({one, one, c2}) * apply_on_legs(h.phi_inv, {{1, S}}) *
                        Tensor::pure({h.beta, one, one}))
                           .multiply_out();
  CasimirResult out{c, {}};
  record_central(out.report, c);
  record(out.report, "times-alpha-recovers-invariant", c * h.alpha, c2);
  record(out.report, "alpha-times-recovers-invariant", h.alpha * c, c2);
  record(out.report, "phi-and-phi-inverse-forms-agree", alt, c);
  return out;
}

QuadraticInvariants quadratic_invariants(const QuasiHopf& h, const Tensor& omega) {
  for (Index i = 0; i < h.algebra->dim(); ++i) {
    Tensor d = h.delta(h.algebra->basis_element(i));
    if (!(d * omega == omega * d)) throw Error("ω does not commute with Δ");
  }
  const AlgebraElement one = h.algebra->unit();
  const LinearMap& S = h.antipode;
  return {(apply_on_legs(omega, {{1, S}}) * Tensor::pure({h.beta, one})).multiply_out(),
          (Tensor::pure({one, h.alpha}) * apply_on_legs(omega, {{0, S}})).multiply_out()};
}

Tensor rtr_power(const QuasiHopf& h, int m) {
  Tensor base = m >= 0 ? h.r_matrix().permuted({1, 0}) * h.r_matrix()
                       : h.r_matrix_inv() * h.r_matrix_inv().permuted({1, 0});
  Tensor out = h.one(2);
  for (int k = 0; k < (m >= 0 ? m : -m); ++k) out = out * base;
  return out;
}

AlgebraElement twisted_invariant(const QuasiHopf& h, const Twistor& f, const AlgebraElement& c1) {
  const AlgebraElement one = h.algebra->unit();
  return (apply_on_legs(f.f, {{1, h.antipode}}) * Tensor::pure({c1, one})).multiply_out();
}

AlgebraElement twisted_pseudo_invariant(const QuasiHopf& h, const Twistor& f,
                                        const AlgebraElement& c2) {
  const AlgebraElement one = h.algebra->unit();
  return (Tensor::pure({one, c2}) * apply_on_legs(f.f_inv, {{0, h.antipode}})).multiply_out();
}

// ------------------------------------------------------------- u-operator

AlgebraElement u_operator(const QuasiHopf& h) {
  const LinearMap& S = h.antipode;
  const AlgebraElement one = h.algebra->unit();
  const AlgebraElement p = s_alpha_rt(h);
  // Y β S(Z) ⊗ X, the flip supplying (−1)^{[X]}
  Tensor w = (apply_on_legs(h.phi, {{2, S}}) * Tensor::pure({one, h.beta, one}))
                 .merged(1)
                 .permuted({1, 0});
  return (Tensor::pure({one, p}) * apply_on_legs(w, {{0, S}})).multiply_out();
}

AlgebraElement u_inverse(const QuasiHopf& h) {
  if (!h.antipode_inv) throw Error("S not invertible");
  const AlgebraElement one = h.algebra->unit();
  const AlgebraElement q = s_inv_alpha_rinv_t(h);
  return (Tensor::pure({one, q, one}) *
          apply_on_legs(h.phi, {{0, *h.antipode_inv}, {2, h.antipode}}) *
          Tensor::pure({one, h.beta, one}))
      .multiply_out();
}

// --------------------------------------------------------- identity suite

AxiomReport identity_suite(const QuasiHopf& h, const Twistor* f) {
  AxiomReport rep;
  const AlgebraPtr& A = h.algebra;
  const LinearMap& S = h.antipode;
  const AlgebraElement one = A->unit();
  const Tensor phi_s2 = apply_on_legs(h.phi, {{2, S}});
  const Tensor phi_s0 = apply_on_legs(h.phi, {{0, S}});
  const Tensor phi_inv_s1 = apply_on_legs(h.phi_inv, {{1, S}});
  const Tensor b1 = Tensor::pure({one, h.beta, one}), b0 = Tensor::pure({h.beta, one, one});
  const Tensor a1 = Tensor::pure({one, h.alpha, one}), a2 = Tensor::pure({one, one, h.alpha});

  // Σ X a ⊗ Y β S(Z) (−1)^{[a][X]} = Σ a₁X ⊗ a₂ Y β S(Z) S(a₃) (−1)^{[a₂][X]}
  record_over_basis(rep, "phi-beta-coproduct-identity", h, [&](const AlgebraElement& a) {
    Tensor lhs = (phi_s2 * b1).merged(1) * Tensor::pure({a, one});
    Tensor rhs = (apply_on_legs(delta_left(h, a) * h.phi, {{2, S}}) * b1).merged(1);
    return std::make_pair(lhs, rhs);
  });
  // Σ S(X) α Y ⊗ a Z (−1)^{[a][Z]} = Σ S(a₁) S(X) α Y a₂ ⊗ Z a₃ (−1)^{[a₂][Z]}
  record_over_basis(rep, "phi-alpha-coproduct-identity", h, [&](const AlgebraElement& a) {
    Tensor lhs = Tensor::pure({one, a}) * (a1 * phi_s0).merged(0);
    Tensor rhs = (a1 * apply_on_legs(h.phi * delta_right(h, a), {{0, S}})).merged(0);
    return std::make_pair(lhs, rhs);
  });
  // Σ a X̄ ⊗ S(Ȳ) α Z̄ = Σ X̄ a₁ ⊗ S(a₂) S(Ȳ) α Z̄ a₃ (sign)
  record_over_basis(rep, "phi-inverse-alpha-coproduct-identity", h, [&](const AlgebraElement& a) {
    Tensor lhs = Tensor::pure({a, one}) * (a2 * phi_inv_s1).merged(1);
    Tensor rhs = (a2 * apply_on_legs(h.phi_inv * delta_left(h, a), {{1, S}})).merged(1);
    return std::make_pair(lhs, rhs);
  });
  // Σ X̄ β S(Ȳ) ⊗ Z̄ a = Σ a₁ X̄ β S(Ȳ) S(a₂) ⊗ a₃ Z̄ (sign)
  record_over_basis(rep, "phi-inverse-beta-coproduct-identity", h, [&](const AlgebraElement& a) {
    Tensor lhs = (phi_inv_s1 * b0).merged(0) * Tensor::pure({one, a});
    Tensor rhs = (apply_on_legs(delta_right(h, a) * h.phi_inv, {{1, S}}) * b0).merged(0);
    return std::make_pair(lhs, rhs);
  });

  if (h.has_r()) {
    const AlgebraElement u = u_operator(h);
    record_over_basis(rep, "u-intertwines-antipode-square", h, [&](const AlgebraElement& a) {
      return std::make_pair(u * a, h.s(h.s(a)) * u);
    });
    record(rep, "u-fixed-by-antipode-square", h.s(h.s(u)), u);
    record(rep, "antipode-alpha-times-u", h.s(h.alpha) * u, s_alpha_rt(h));
    const AlgebraElement su = h.s(u);
    record(rep, "u-commutes-with-antipode-u", u * su, su * u);
    {
      AxiomReport sub;
      record_central(sub, u * su);
      sub.checks.back().id = "u-antipode-u-central";
      rep.append(sub);
    }
    AlgebraElement rhs =
        (apply_on_legs(h.r_matrix(), {{1, S}}) * Tensor::pure({h.beta, one})).multiply_out();
    record(rep, "antipode-u-antipode-beta", su * h.s(h.beta), rhs);
    if (h.antipode_inv) {
      const AlgebraElement ui = u_inverse(h);
      record(rep, "u-times-alpha-factor", u * s_inv_alpha_rinv_t(h), h.alpha);
      record(rep, "u-inverse-right", u * ui, one);
      record(rep, "u-inverse-left", ui * u, one);
      record_over_basis(rep, "u-conjugates-to-antipode-square", h, [&](const AlgebraElement& a) {
        return std::make_pair(u * a * ui, h.s(h.s(a)));
      });
    }
  }
  if (f) {
    QuasiHopf twisted = twist_structure(h, *f, false);
    rep.append(check_twisted_canonical_identities(h, *f, twisted));
  }
  return rep;
}

// ------------------------------------------------------------ trace forms

TraceForms trace_forms(const QuasiHopf& h, const Representation& pi) {
  require_same(h, pi);
  if (!h.has_r()) throw Error("not trace type");
  if (!h.antipode_inv) throw Error("S not invertible");
  const AlgebraPtr& A = h.algebra;
  Matrix pre = pi(u_operator(h) * h.s_inv(h.alpha));
  Matrix pre_bar = pi(u_inverse(h) * h.s(h.beta));
  return {supertrace_form(A, pi, pre), supertrace_form(A, pi, pre_bar)};
}

CasimirResult central_from_theta(const QuasiHopf& h, const Tensor& theta, const LinearForm& xi) {
  for (Index i = 0; i < h.algebra->dim(); ++i) {
    Tensor d = delta_right(h, h.algebra->basis_element(i));
    if (!(d * theta == theta * d)) throw Error("θ does not centralize (1⊗Δ)Δ");
  }
  if (!xi.even() || !is_invariant_form(h, xi)) throw Error("form not invariant");
  const AlgebraElement one = h.algebra->unit();
  Tensor t = (apply_on_legs(theta, {{2, h.antipode}}) * Tensor::pure({one, h.beta, one})).merged(1);
  LinearMap form = LinearMap::functional(h.algebra, xi.values);
  AlgebraElement c = apply_on_legs(t, {{1, form}}).to_element();
  CasimirResult out{c, {}};
  record_central(out.report, c);
  return out;
}

CasimirResult central_from_theta_bar(const QuasiHopf& h, const Tensor& theta_bar,
                                     const LinearForm& xi_bar) {
  for (Index i = 0; i < h.algebra->dim(); ++i) {
    Tensor d = delta_left(h, h.algebra->basis_element(i));
    if (!(d * theta_bar == theta_bar * d)) throw Error("θ̄ does not centralize (Δ⊗1)Δ");
  }
  if (!xi_bar.even() || !is_pseudo_invariant_form(h, xi_bar)) throw Error("form not invariant");
  const AlgebraElement one = h.algebra->unit();
  Tensor t =
      (Tensor::pure({one, h.alpha, one}) * apply_on_legs(theta_bar, {{0, h.antipode}})).merged(0);
  LinearMap form = LinearMap::functional(h.algebra, xi_bar.values);
  AlgebraElement c = apply_on_legs(t, {{0, form}}).to_element();
  CasimirResult out{c, {}};
  record_central(out.report, c);
  return out;
}

CasimirPair casimir_Cm(const QuasiHopf& h, const Representation& pi, int m) {
  const Tensor omega = rtr_power(h, m);
  const Tensor one1 = h.one(1);
  const TraceForms forms = trace_forms(h, pi);
  Tensor theta = h.phi_inv * outer(omega, one1) * h.phi;
  Tensor theta_bar = h.phi * outer(one1, omega) * h.phi_inv;
  return {central_from_theta(h, theta, forms.xi), central_from_theta_bar(h, theta_bar, forms.xi_bar)};
}

CasimirResult casimir_from_omega_rep(const QuasiHopf& h, const Representation& pi,
                                     const Tensor& omega_hat) {
  require_same(h, pi);
  const AlgebraPtr& A = h.algebra;
  for (Index i = 0; i < A->dim(); ++i) {
    Tensor d = apply_rep_on_leg(h.delta(A->basis_element(i)), 1, pi);
    if (!(d * omega_hat == omega_hat * d)) throw Error("intertwining condition fails");
  }
  if (!h.antipode_inv) throw Error("S not invertible");
  const Tensor phi = apply_rep_on_leg(h.phi, 1, pi);
  const Tensor phi_inv = apply_rep_on_leg(h.phi_inv, 1, pi);
  Tensor theta = phi_inv * outer(omega_hat, h.one(1)) * phi;
  Tensor t = apply_rep_on_leg(apply_on_legs(theta, {{2, h.antipode}}), 2, pi);
  const AlgebraElement pre = from_matrix(pi.end, pi(u_operator(h) * h.s_inv(h.alpha)));
  const AlgebraElement beta = from_matrix(pi.end, pi(h.beta));
  t = (Tensor::pure({A->unit(), pre, beta}) * t).merged(1);
  DenseVector str;
  for (std::size_t p = 0; p < pi.dim(); ++p) {
    for (std::size_t q = 0; q < pi.dim(); ++q) {
      const Field f = A->field();
      str.push_back(p != q ? f.zero() : pi.carrier[p] ? -f.one() : f.one());
    }
  }
  AlgebraElement c = apply_on_legs(t, {{1, LinearMap::functional(pi.end, str)}}).to_element();
  CasimirResult out{c, {}};
  record_central(out.report, c);
  return out;
}

AlgebraElement classical_casimir(const QuasiHopf& h, const Representation& pi, int m) {
  require_same(h, pi);
  const AlgebraPtr& A = h.algebra;
  const AlgebraElement one = A->unit();
  if (!(h.phi == h.one(3)) || !(h.alpha == one) || !(h.beta == one)) {
    throw Error("classical formula needs trivial Φ and α = β = 1");
  }
  // u = Σ S(eⁱ) eᵢ (−1)^{[eᵢ]}
  AlgebraElement u = A->zero();
  for (const auto& [mi, c] : h.r_matrix().terms()) {
    AlgebraElement term = h.s(A->basis_element(mi[1])) * A->basis_element(mi[0]);
    u += term.scaled(A->parity(mi[0]) ? -c : c);
  }
  const Matrix pu = pi(u);
  AlgebraElement out = A->zero();
  const Tensor omega = rtr_power(h, m);
  for (const auto& [mi, c] : omega.terms()) {
    out += A->basis_element(mi[0]).scaled(c * supertrace(pu * pi.matrices[mi[1]], pi.carrier));
  }
  return out;
}

// ------------------------------------------------------- twist invariance

AxiomReport verify_twist_invariance(const QuasiHopf& h, const Twistor& f,
                                    const TwistInvarianceOptions& options) {
  const QuasiHopf hf = twist_structure(h, f, true);
  AxiomReport rep;
  AxiomReport built;

  auto first_difference = [&](std::string id, auto&& pairs) {
    AxiomCheck check;
    check.id = std::move(id);
    for (auto& [lhs, rhs, where] : pairs) {
      AlgebraElement d = lhs - rhs;
      if (!d.is_zero()) {
        check.passed = false;
        check.witness = Tensor::from_element(d);
        check.witness_basis = where;
        break;
      }
    }
    rep.checks.push_back(std::move(check));
  };
  using Triple = std::tuple<AlgebraElement, AlgebraElement, std::string>;

  {
    std::vector<Triple> pairs;
    const auto inv = invariant_subspace(h);
    for (std::size_t k = 0; k < inv.even.size(); ++k) {
      CasimirResult c = build_C1(h, inv.even[k]);
      CasimirResult cf = build_C1(hf, twisted_invariant(h, f, inv.even[k]));
      built.append(c.report).append(cf.report);
      pairs.emplace_back(cf.element, c.element, "c1 = " + inv.even[k].to_string());
    }
    first_difference("c1-twist-invariance", pairs);
  }
  {
    std::vector<Triple> pairs;
    const auto inv = pseudo_invariant_subspace(h);
    for (std::size_t k = 0; k < inv.even.size(); ++k) {
      CasimirResult c = build_C2(h, inv.even[k]);
      CasimirResult cf = build_C2(hf, twisted_pseudo_invariant(h, f, inv.even[k]));
      built.append(c.report).append(cf.report);
      pairs.emplace_back(cf.element, c.element, "c2 = " + inv.even[k].to_string());
    }
    first_difference("c2-twist-invariance", pairs);
  }
  if (h.has_r()) {
    std::vector<Triple> pairs{{u_operator(hf), u_operator(h), ""}};
    first_difference("u-twist-invariance", pairs);
    std::vector<Triple> cm, cmbar;
    for (const Representation& pi : options.representations) {
      for (int m : options.powers) {
        CasimirPair c = casimir_Cm(h, pi, m);
        CasimirPair cf = casimir_Cm(hf, pi, m);
        built.append(c.c.report).append(c.c_bar.report);
        built.append(cf.c.report).append(cf.c_bar.report);
        std::string where = "m=" + std::to_string(m) + " rep=" + pi.name;
        cm.emplace_back(cf.c.element, c.c.element, where);
        cmbar.emplace_back(cf.c_bar.element, c.c_bar.element, where);
      }
    }
    first_difference("cm-twist-invariance", cm);
    first_difference("cm-bar-twist-invariance", cmbar);
  }
  AxiomCheck all;
  all.id = "constructed-elements-checks";
  if (const AxiomCheck* bad = built.first_failure()) {
    all.passed = false;
    all.witness = bad->witness;
    all.witness_basis = bad->id;
  }
  rep.checks.push_back(std::move(all));
  return rep;
}

}  // namespace qhopf
