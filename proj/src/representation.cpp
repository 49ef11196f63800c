#include "qhopf/representation.hpp"

#include "qhopf/quasihopf.hpp"

namespace qhopf {

Matrix Representation::operator()(const AlgebraElement& a) const {
  if (!same_algebra(a.algebra(), algebra)) throw Error("representation applied outside its algebra");
  Matrix m(algebra->field(), dim(), dim());
  for (const auto& [i, c] : a.terms()) m += matrices[i].scaled(c);
  return m;
}

Representation validate_representation(std::string name, const AlgebraPtr& algebra,
                                       std::vector<Parity> carrier, std::vector<Matrix> matrices) {
  const Field f = algebra->field();
  const std::size_t d = carrier.size();
  auto fail = [&](const std::string& what) -> InvalidRepresentation {
    return InvalidRepresentation("representation '" + name + "': " + what);
  };
  if (d == 0) throw fail("empty carrier");
  if (matrices.size() != algebra->dim()) throw fail("one matrix per basis element required");
  for (Parity p : carrier) {
    if (p > 1) throw fail("carrier parity must be 0 or 1");
  }
  const auto& basis = algebra->basis();
  for (Index i = 0; i < matrices.size(); ++i) {
    const Matrix& m = matrices[i];
    if (m.rows() != d || m.cols() != d || m.field() != f) {
      throw fail("matrix of " + basis.label(i) + " has the wrong shape or field");
    }
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        if (!m.at(r, c).is_zero() && carrier[r] != (carrier[c] ^ algebra->parity(i))) {
          throw fail("grading violation in the matrix of " + basis.label(i));
        }
      }
    }
  }
  Representation pi{std::move(name), algebra, std::move(carrier), std::move(matrices), nullptr};
  pi.end = GradedAlgebra::matrix_algebra(f, pi.carrier);
  if (!(pi(algebra->unit()) == Matrix::identity(f, d))) throw fail("unit is not represented by 1");
  for (Index i = 0; i < algebra->dim(); ++i) {
    for (Index j = 0; j < algebra->dim(); ++j) {
      AlgebraElement prod = algebra->basis_element(i) * algebra->basis_element(j);
      if (!(pi.matrices[i] * pi.matrices[j] == pi(prod))) {
        throw fail("not a homomorphism at (" + basis.label(i) + ", " + basis.label(j) + ")");
      }
    }
  }
  return pi;
}

Representation regular_representation(const AlgebraPtr& algebra) {
  const std::size_t d = algebra->dim();
  std::vector<Matrix> ms;
  for (Index i = 0; i < d; ++i) {
    Matrix m(algebra->field(), d, d);
    for (Index j = 0; j < d; ++j) {
      for (const auto& [k, c] : algebra->product(i, j)) m.at(k, j) = c;
    }
    ms.push_back(std::move(m));
  }
  return validate_representation("regular", algebra, algebra->basis().parities(), std::move(ms));
}

Representation trivial_representation(const QuasiHopf& h) {
  std::vector<Matrix> ms;
  for (Index i = 0; i < h.algebra->dim(); ++i) {
    Matrix m(h.field(), 1, 1);
    m.at(0, 0) = h.eps(h.algebra->basis_element(i));
    ms.push_back(std::move(m));
  }
  return validate_representation("trivial", h.algebra, {0}, std::move(ms));
}

Scalar supertrace(const Matrix& m, const std::vector<Parity>& carrier) {
  if (m.rows() != carrier.size() || m.cols() != carrier.size()) {
    throw Error("supertrace: dimension mismatch");
  }
  Scalar s = m.field().zero();
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (carrier[i]) {
      s -= m.at(i, i);
    } else {
      s += m.at(i, i);
    }
  }
  return s;
}

AlgebraElement from_matrix(const AlgebraPtr& end, const Matrix& m) {
  const std::size_t d = m.rows();
  AlgebraElement e = end->zero();
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      if (!m.at(p, q).is_zero()) e.add_term(static_cast<Index>(p * d + q), m.at(p, q));
    }
  }
  return e;
}

Matrix to_matrix(const AlgebraElement& e) {
  const auto* carrier = e.algebra()->carrier();
  if (!carrier) throw Error("element is not in a matrix algebra");
  const std::size_t d = carrier->size();
  Matrix m(e.field(), d, d);
  for (const auto& [i, c] : e.terms()) m.at(i / d, i % d) = c;
  return m;
}

LinearMap representation_map(const Representation& pi) {
  std::vector<Tensor> images;
  for (const auto& m : pi.matrices) images.push_back(Tensor::from_element(from_matrix(pi.end, m)));
  return LinearMap(pi.algebra, {pi.end}, std::move(images));
}

Tensor apply_rep_on_leg(const Tensor& x, std::size_t leg, const Representation& pi) {
  if (leg >= x.rank()) throw Error("apply_rep_on_leg: leg out of range");
  LinearMap m = representation_map(pi);
  return apply_on_legs(x, {{leg, m}});
}

}  // namespace qhopf
