#pragma once

// Central elements built from invariants, the u-operator, supertrace forms
// and the R-matrix families, together with the identities they satisfy and
// their invariance under twisting. Every check is an exact equality.

#include <optional>
#include <vector>

#include "qhopf/invariants.hpp"
#include "qhopf/quasihopf.hpp"
#include "qhopf/representation.hpp"
#include "qhopf/twisting.hpp"

namespace qhopf {

struct CasimirResult {
  AlgebraElement element;
  AxiomReport report;
};

// C₁ = Σ X̄ c₁ S(Ȳ) α Z̄ for an even invariant c₁. Checks centrality,
// C₁β = βC₁ = c₁ and agreement with Σ S(X) α Y c₁ S(Z).
// Throws Error("odd element") or Error("not invariant").
CasimirResult build_C1(const QuasiHopf& h, const AlgebraElement& c1);
// C₂ = Σ S(X) c₂ Y β S(Z) for an even pseudo-invariant c₂. Checks
// centrality, C₂α = αC₂ = c₂ and agreement with Σ X̄ β S(Ȳ) c₂ Z̄.
CasimirResult build_C2(const QuasiHopf& h, const AlgebraElement& c2);

// c₁ = Σ ωᵢ β S(ωⁱ), c₂ = Σ S(ωᵢ) α ωⁱ for ω commuting with Δ.
// Throws Error("ω does not commute with Δ").
struct QuadraticInvariants {
  AlgebraElement c1, c2;
};
QuadraticInvariants quadratic_invariants(const QuasiHopf& h, const Tensor& omega);

// (RᵀR)^m; negative powers use R⁻¹(R⁻¹)ᵀ.
Tensor rtr_power(const QuasiHopf& h, int m);

// c₁^F = Σ fᵢ c₁ S(fⁱ) and c₂^F = Σ S(f̄ᵢ) c₂ f̄ⁱ.
AlgebraElement twisted_invariant(const QuasiHopf& h, const Twistor& f, const AlgebraElement& c1);
AlgebraElement twisted_pseudo_invariant(const QuasiHopf& h, const Twistor& f,
                                        const AlgebraElement& c2);

// u = Σ S(Y β S(Z)) S(eⁱ) α eᵢ X (−1)^{[eᵢ] + [X]}. Throws Error("no R-matrix").
AlgebraElement u_operator(const QuasiHopf& h);
// u⁻¹ = Σ S⁻¹(X) S⁻¹(α ēⁱ) ēᵢ Y β S(Z) (−1)^{[ēᵢ]}. Throws Error("no R-matrix")
// or Error("S not invertible").
AlgebraElement u_inverse(const QuasiHopf& h);

// Identities relating Φ, α, β to the coproduct for every basis element,
// and with an R-matrix the u-operator identities: S²(a) = u a u⁻¹,
// S²(u) = u, u u⁻¹ = 1, S(α)u and uS⁻¹(αR⁻¹ᵀ) closed forms, uS(u) central,
// S(u)S(β) = Σ eᵢ β S(eⁱ). With a twistor, also the canonical elements
// recovered from the twisted ones.
AxiomReport identity_suite(const QuasiHopf& h, const Twistor* f = nullptr);

// ξ(a) = Str π(u S⁻¹(α) a) and ξ̄(a) = Str π(u⁻¹ S(β) a).
struct TraceForms {
  LinearForm xi, xi_bar;
};
TraceForms trace_forms(const QuasiHopf& h, const Representation& pi);

// C = Σ aᵢ ξ(bᵢ β S(cᵢ)) for θ commuting with (1⊗Δ)Δ and ξ even invariant.
// Throws Error("θ does not centralize (1⊗Δ)Δ") or Error("form not invariant").
CasimirResult central_from_theta(const QuasiHopf& h, const Tensor& theta, const LinearForm& xi);
// C̄ = Σ ξ̄(S(āᵢ) α b̄ᵢ) c̄ᵢ for θ̄ commuting with (Δ⊗1)Δ and ξ̄ even
// pseudo-invariant.
CasimirResult central_from_theta_bar(const QuasiHopf& h, const Tensor& theta_bar,
                                     const LinearForm& xi_bar);

// C_m from θ = Φ⁻¹(ω⊗1)Φ and C̄_m from θ̄ = Φ(1⊗ω)Φ⁻¹ with ω = (RᵀR)^m and
// the trace forms of π.
struct CasimirPair {
  CasimirResult c, c_bar;
};
CasimirPair casimir_Cm(const QuasiHopf& h, const Representation& pi, int m);

// C = Σ Str(π(u S⁻¹(α)) Bᵢ π(β S(cᵢ))) aᵢ for θ̂ = Φ⁻¹(ω̂⊗1)Φ with the middle
// leg represented, ω̂ ∈ A ⊗ End V commuting with (1⊗π)Δ.
// Throws Error("intertwining condition fails").
CasimirResult casimir_from_omega_rep(const QuasiHopf& h, const Representation& pi,
                                     const Tensor& omega_hat);

// Σ ωᵢ Str π(u ωⁱ) with ω = (RᵀR)^m: the Hopf-algebra formula, valid when
// Φ is trivial and α = β = 1. Throws Error otherwise.
AlgebraElement classical_casimir(const QuasiHopf& h, const Representation& pi, int m);

struct TwistInvarianceOptions {
  std::vector<int> powers{-1, 0, 1, 2};
  // Representations for the C_m families; none means those are skipped.
  std::vector<Representation> representations;
};

// Twists h by f and compares, in the twisted structure, C₁ and C₂ built from
// the twisted (pseudo-)invariants against the originals for every basis
// element of the invariant spaces; with an R-matrix also u_F = u and
// C_m^F = C_m, C̄_m^F = C̄_m for every power and representation.
AxiomReport verify_twist_invariance(const QuasiHopf& h, const Twistor& f,
                                    const TwistInvarianceOptions& options);

}  // namespace qhopf
