#pragma once

// Finite-dimensional even representations π: A → End V on a graded carrier V,
// the supertrace, and representations applied to one leg of a tensor.

#include <string>
#include <vector>

#include "qhopf/graded.hpp"
#include "qhopf/linalg.hpp"

namespace qhopf {

struct QuasiHopf;

class InvalidRepresentation : public Error {
 public:
  using Error::Error;
};

struct Representation {
  std::string name;
  AlgebraPtr algebra;
  std::vector<Parity> carrier;
  // π(bᵢ) for every basis element bᵢ of the algebra.
  std::vector<Matrix> matrices;
  // End V with its matrix-unit basis, for represented tensor legs.
  AlgebraPtr end;

  std::size_t dim() const { return carrier.size(); }
  Matrix operator()(const AlgebraElement& a) const;
};

// Checks the homomorphism property on all basis pairs, π(1) = identity, and
// that every π(bᵢ) shifts parity by [bᵢ].
Representation validate_representation(std::string name, const AlgebraPtr& algebra,
                                       std::vector<Parity> carrier, std::vector<Matrix> matrices);

// π(bᵢ)_{kj} = c^k_{ij}, on the algebra itself.
Representation regular_representation(const AlgebraPtr& algebra);
// One-dimensional even representation given by the counit.
Representation trivial_representation(const QuasiHopf& h);

// Σᵢ (−1)^{[vᵢ]} Mᵢᵢ
Scalar supertrace(const Matrix& m, const std::vector<Parity>& carrier);

// π as an even map A → End V.
LinearMap representation_map(const Representation& pi);

// Matrix of an element of End V, and back.
Matrix to_matrix(const AlgebraElement& e);
AlgebraElement from_matrix(const AlgebraPtr& end, const Matrix& m);

// The given leg of x mapped through π into End V; other legs untouched.
Tensor apply_rep_on_leg(const Tensor& x, std::size_t leg, const Representation& pi);

}  // namespace qhopf
