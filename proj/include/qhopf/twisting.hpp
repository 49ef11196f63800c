#pragma once

// Twisting by an invertible element F of A ⊗ A with the counit property:
// Δ_F = F Δ F⁻¹, the twisted co-associator, canonical elements and R-matrix.

#include <optional>
#include <string>

#include "qhopf/quasihopf.hpp"

namespace qhopf {

struct Twistor {
  std::string name;
  Tensor f;
  Tensor f_inv;
};

// Thrown when a structure fails verification after a transformation that
// should have preserved the axioms.
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(AxiomReport report)
      : Error("verification failed: " + report.first_failure()->id), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

// Checks F F⁻¹ = F⁻¹ F = 1 ⊗ 1 and (ε ⊗ 1)F = 1 = (1 ⊗ ε)F. F⁻¹ is solved for
// when not supplied. Throws NotInvertible or Error("counit property fails").
Twistor validate_twistor(std::string name, Tensor f, std::optional<Tensor> f_inv,
                         const QuasiHopf& h);

Twistor identity_twistor(const QuasiHopf& h);

// The twisted structure. With verify set, the result is run through the full
// verifier and VerificationFailure is thrown if anything fails.
QuasiHopf twist_structure(const QuasiHopf& h, const Twistor& f, bool verify = true,
                          std::string name = {});

// β = Σ f̄ᵢ β_F S(f̄ⁱ) and α = Σ S(fᵢ) α_F fⁱ, with F⁻¹ = Σ f̄ᵢ ⊗ f̄ⁱ.
AxiomReport check_twisted_canonical_identities(const QuasiHopf& h, const Twistor& f,
                                               const QuasiHopf& twisted);

// Twisting by F and then by G agrees on the coproduct with twisting once by G F.
AxiomReport check_composite_twist(const QuasiHopf& h, const Twistor& f, const Twistor& g);

}  // namespace qhopf
