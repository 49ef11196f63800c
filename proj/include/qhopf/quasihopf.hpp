#pragma once

// Quasi-Hopf superalgebra record (A, Δ, ε, Φ, S, α, β) with optional
// universal R-matrix, and the exhaustive axiom verifier. Every check is an
// exact equality; a failing check carries the nonzero difference.

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhopf/graded.hpp"

namespace qhopf {

struct AxiomCheck {
  std::string id;
  bool passed = true;
  // Difference of the two sides of the first failing instance.
  std::optional<Tensor> witness;
  // Basis element (or pair "a*b") of the first failing instance; empty for
  // identities that are not quantified over the algebra.
  std::string witness_basis;
  std::chrono::duration<double> elapsed{};
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool passed() const;
  const AxiomCheck* first_failure() const;
  const AxiomCheck* find(std::string_view id) const;
  AxiomReport& append(const AxiomReport& other);
  // One line per check: "PASS id" or "FAIL id [basis]: difference".
  std::string to_text() const;
};

struct QuasiHopf {
  std::string name;
  AlgebraPtr algebra;
  LinearMap coproduct;
  LinearMap counit;
  LinearMap antipode;
  // Computed by inverting S; absent when S is singular.
  std::optional<LinearMap> antipode_inv;
  Tensor phi;
  Tensor phi_inv;
  AlgebraElement alpha;
  AlgebraElement beta;
  std::optional<Tensor> r;
  std::optional<Tensor> r_inv;

  // Builds the record, inverting S when possible, and checks well-formedness
  // (ranks, leg algebras, fields, even structure maps). Axioms are not checked.
  static QuasiHopf assemble(std::string name, AlgebraPtr algebra, LinearMap coproduct,
                            LinearMap counit, LinearMap antipode, Tensor phi, Tensor phi_inv,
                            AlgebraElement alpha, AlgebraElement beta,
                            std::optional<Tensor> r = std::nullopt,
                            std::optional<Tensor> r_inv = std::nullopt);
  void check_well_formed() const;

  Field field() const { return algebra->field(); }
  bool has_r() const { return r.has_value(); }

  Tensor delta(const AlgebraElement& a) const { return coproduct.apply(a); }
  // Δ^T = T Δ
  Tensor delta_op(const AlgebraElement& a) const { return delta(a).permuted({1, 0}); }
  Scalar eps(const AlgebraElement& a) const { return counit.evaluate(a); }
  AlgebraElement s(const AlgebraElement& a) const { return antipode(a); }
  AlgebraElement s_inv(const AlgebraElement& a) const;
  const LinearMap& require_antipode_inv() const;

  const Tensor& r_matrix() const;
  const Tensor& r_matrix_inv() const;

  // Tensor units of the algebra.
  Tensor one(std::size_t rank) const { return Tensor::one(algebra, rank); }
};

// Leg relabelling in the subscript notation: t_{abc} has leg a of t in first
// position, so relabel(Φ, "312") = Z ⊗ X ⊗ Y (with signs).
Tensor relabel(const Tensor& t, std::string_view legs);

// R_{ij} inside A^{⊗rank} (1-based legs, i ≠ j), units elsewhere.
Tensor leg_embed(const Tensor& r, std::size_t i, std::size_t j, std::size_t rank);

AxiomReport verify_quasi_bialgebra(const QuasiHopf& h);
AxiomReport verify_antipode_axioms(const QuasiHopf& h);
AxiomReport verify_antipode_axioms(const QuasiHopf& h, const AlgebraElement& alpha,
                                   const AlgebraElement& beta);
// Throws Error("no R-matrix") when R is absent.
AxiomReport verify_quasitriangular(const QuasiHopf& h);
AxiomReport verify_quasi_ybe(const QuasiHopf& h);
// All of the above in fixed order; the R-matrix parts only when R is present.
AxiomReport verify_all(const QuasiHopf& h);

// Solutions of the four antipode axioms for α, β with Δ, ε, S, Φ fixed.
// α and β are sought among even elements. Each family is a particular pair
// together with directions along which one of the two elements may move
// while the other stays fixed.
struct CanonicalFamily {
  AlgebraElement alpha;
  AlgebraElement beta;
  std::vector<AlgebraElement> alpha_directions;
  std::vector<AlgebraElement> beta_directions;
};

// Throws Error("no solution") when no pair exists.
std::vector<CanonicalFamily> solve_canonical_elements(const QuasiHopf& h);

}  // namespace qhopf
