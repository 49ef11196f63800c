#pragma once

// Adjoint and anti-adjoint actions, their invariants, the center, invariant
// linear and bilinear forms, and module homomorphisms built from invariant
// maps between representations.

#include <optional>
#include <vector>

#include "qhopf/quasihopf.hpp"
#include "qhopf/representation.hpp"

namespace qhopf {

// Values ξ(bᵢ) on the algebra basis.
struct LinearForm {
  AlgebraPtr algebra;
  DenseVector values;

  Scalar operator()(const AlgebraElement& a) const;
  // Vanishes on every odd basis element.
  bool even() const;
  friend bool operator==(const LinearForm& x, const LinearForm& y) { return x.values == y.values; }
};

// Span of homogeneous elements, even and odd parts listed separately, each in
// reduced echelon form.
struct GradedSubspace {
  AlgebraPtr algebra;
  std::vector<AlgebraElement> even;
  std::vector<AlgebraElement> odd;

  std::size_t dim() const { return even.size() + odd.size(); }
  bool contains(const AlgebraElement& x) const;
};

// Ad a·b = Σ a₁ b S(a₂) (−1)^{[b][a₂]}
AlgebraElement adjoint_action(const QuasiHopf& h, const AlgebraElement& a, const AlgebraElement& b);
// Σ S(a₁) b a₂ (−1)^{[b][a₁]}
AlgebraElement anti_adjoint_action(const QuasiHopf& h, const AlgebraElement& a,
                                   const AlgebraElement& b);

// Ad a·c = ε(a) c for all basis a.
bool is_invariant(const QuasiHopf& h, const AlgebraElement& c);
bool is_pseudo_invariant(const QuasiHopf& h, const AlgebraElement& c);

GradedSubspace invariant_subspace(const QuasiHopf& h);
GradedSubspace pseudo_invariant_subspace(const QuasiHopf& h);

struct CentralityFailure {
  Index basis;
  // x bᵢ − bᵢ x
  AlgebraElement commutator;
};
std::optional<CentralityFailure> centrality_failure(const AlgebraElement& x);
bool is_central(const AlgebraElement& x);
GradedSubspace center(const AlgebraPtr& algebra);

// ξ(Ad a·b) = ε(a) ξ(b) for all basis a, b.
bool is_invariant_form(const QuasiHopf& h, const LinearForm& xi);
// ξ(Ad̄ a·b) = ε(a) ξ(b) for all basis a, b.
bool is_pseudo_invariant_form(const QuasiHopf& h, const LinearForm& xi);
std::vector<LinearForm> invariant_linear_forms(const QuasiHopf& h);
std::vector<LinearForm> pseudo_invariant_linear_forms(const QuasiHopf& h);

// Forms (v, w) = vᵀ B w with Σ (a₁v, a₂w)(−1)^{[v][a₂]} = ε(a)(v, w).
std::vector<Matrix> invariant_bilinear_forms(const QuasiHopf& h, const Representation& v,
                                             const Representation& w);

// Matrix of a map V → W, rows indexed by W. Parity of a homogeneous map,
// nullopt for inhomogeneous ones (zero is even).
std::optional<Parity> map_parity(const Matrix& f, const std::vector<Parity>& v,
                                 const std::vector<Parity>& w);

// f with Σ a₁ f(S(a₂)v)(−1)^{[f][a₂]} = ε(a) f(v), for f of the given parity.
bool is_invariant_map(const QuasiHopf& h, const Representation& v, const Representation& w,
                      const Matrix& f, Parity parity);
std::vector<Matrix> invariant_maps(const QuasiHopf& h, const Representation& v,
                                   const Representation& w, Parity parity);

struct ModuleMorphism {
  // f̃(v) = Σ S(X) α Y f(S(Z) v)
  Matrix map;
  // intertwining, β f̃ = f, agreement with Σ X̄ f(S(Ȳ) α Z̄ v)
  AxiomReport report;
};

// Throws Error("odd map") or Error("not invariant") when f fails the
// preconditions.
ModuleMorphism module_morphism_from_invariant(const QuasiHopf& h, const Matrix& f,
                                              const Representation& v, const Representation& w);

}  // namespace qhopf
