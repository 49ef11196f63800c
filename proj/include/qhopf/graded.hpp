#pragma once

// Z2-graded finite-dimensional algebras given by structure constants, their
// elements, and the graded tensor calculus on A (x) ... (x) A: products with
// Koszul signs, signed leg permutations, even maps applied to legs and the
// multiplication map on adjacent legs.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhopf/linalg.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf {

using Index = std::uint32_t;
using Parity = std::uint8_t;

// Pentagon identities live in A^{(x)4}; nothing in the engine needs more legs.
inline constexpr std::size_t kMaxRank = 4;

class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class GradedBasis {
 public:
  // unit may be absent only for matrix algebras, whose unit is not a basis vector.
  GradedBasis(std::vector<std::string> labels, std::vector<Parity> parities,
              std::optional<Index> unit);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  Parity parity(Index i) const { return parities_[i]; }
  std::optional<Index> unit_index() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Parity>& parities() const { return parities_; }

  std::optional<Index> find(std::string_view label) const;
  Index index_of(std::string_view label) const;

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) {
    return a.labels_ == b.labels_ && a.parities_ == b.parities_ && a.unit_ == b.unit_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Parity> parities_;
  std::optional<Index> unit_;
  std::map<std::string, Index, std::less<>> lookup_;
};

// b_i b_j = sum_k value * b_k
struct StructureConstant {
  Index i, j, k;
  Scalar value;
};

class GradedAlgebra;
class AlgebraElement;
class Tensor;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
 public:
  using Row = std::vector<std::pair<Index, Scalar>>;

  // Validates associativity, the unit law and parity compatibility; throws
  // InvalidStructure naming the first offending basis triple.
  static AlgebraPtr create(Field field, GradedBasis basis,
                           const std::vector<StructureConstant>& constants);

  // End(V) for a graded carrier V, with the matrix units E(p,q) as basis.
  static AlgebraPtr matrix_algebra(Field field, std::vector<Parity> carrier);

  Field field() const { return field_; }
  const GradedBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  Parity parity(Index i) const { return basis_.parity(i); }
  const Row& product(Index i, Index j) const { return table_[i * dim() + j]; }

  AlgebraElement zero() const;
  AlgebraElement unit() const;
  AlgebraElement basis_element(Index i) const;
  AlgebraElement element(std::string_view label) const;

  std::vector<StructureConstant> structure_constants() const;

  // Carrier parities for matrix algebras, nullptr otherwise.
  const std::vector<Parity>* carrier() const { return carrier_ ? &*carrier_ : nullptr; }

  // Same field, basis and multiplication table.
  bool same_as(const GradedAlgebra& other) const;

  struct Key {};
  GradedAlgebra(Key, Field field, GradedBasis basis);

 private:
  void validate() const;

  Field field_;
  GradedBasis basis_;
  std::vector<Row> table_;
  std::map<Index, Scalar> unit_terms_;
  std::optional<std::vector<Parity>> carrier_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraPtr algebra) : alg_(std::move(algebra)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  Field field() const;
  const std::map<Index, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(Index i) const;

  void add_term(Index i, const Scalar& c);

  // Common parity of the support; nullopt when inhomogeneous. Zero is even.
  std::optional<Parity> parity() const;
  AlgebraElement part(Parity p) const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& y);
  AlgebraElement& operator-=(const AlgebraElement& y);
  AlgebraElement scaled(const Scalar& s) const;

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) { return x.scaled(s); }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

  DenseVector to_vector() const;
  static AlgebraElement from_vector(AlgebraPtr algebra, const DenseVector& v);

  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  std::map<Index, Scalar> terms_;
};

struct MultiIndex {
  std::array<std::uint16_t, kMaxRank> idx{};

  std::uint16_t operator[](std::size_t k) const { return idx[k]; }
  std::uint16_t& operator[](std::size_t k) { return idx[k]; }
  auto operator<=>(const MultiIndex&) const = default;
};

// Sparse element of L_1 (x) ... (x) L_r where each leg L_k is a graded algebra
// (usually all equal to A; one leg may be End V for represented tensors).
class Tensor {
 public:
  Tensor(Field field, std::vector<AlgebraPtr> legs);
  static Tensor zero(const AlgebraPtr& algebra, std::size_t rank);
  static Tensor one(std::vector<AlgebraPtr> legs);
  static Tensor one(const AlgebraPtr& algebra, std::size_t rank);
  static Tensor scalar(const Scalar& s);
  // a_1 (x) a_2 (x) ... (x) a_r
  static Tensor pure(const std::vector<AlgebraElement>& factors);
  static Tensor from_element(const AlgebraElement& a);

  std::size_t rank() const { return legs_.size(); }
  Field field() const { return field_; }
  const std::vector<AlgebraPtr>& legs() const { return legs_; }
  const AlgebraPtr& leg(std::size_t k) const { return legs_[k]; }
  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const MultiIndex& m) const;
  void add_term(const MultiIndex& m, const Scalar& c);

  Parity parity(const MultiIndex& m) const;
  std::optional<Parity> parity() const;

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& y);
  Tensor& operator-=(const Tensor& y);
  Tensor scaled(const Scalar& s) const;
  friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
  friend Tensor operator-(Tensor x, const Tensor& y) { return x -= y; }
  // (x_1 (x) ... )(y_1 (x) ...) = (-1)^{sum_{i<j} [y_i][x_j]} x_1 y_1 (x) ...
  friend Tensor operator*(const Tensor& x, const Tensor& y);
  friend bool operator==(const Tensor& x, const Tensor& y);

  // Output leg p carries input leg perm[p]; each pair of legs whose order is
  // swapped contributes (-1)^{[a][b]}.
  Tensor permuted(std::span<const std::size_t> perm) const;
  Tensor permuted(std::initializer_list<std::size_t> perm) const {
    return permuted(std::span<const std::size_t>(perm.begin(), perm.size()));
  }
  // Multiplication map on legs (leg, leg + 1).
  Tensor merged(std::size_t leg) const;
  // Collapse all legs by repeated multiplication, m (m (x) 1) ...
  AlgebraElement multiply_out() const;

  // Place the legs of this tensor at the given increasing positions of a
  // rank-`rank` tensor, filling the remaining legs with the unit of `fill`.
  Tensor embedded(std::span<const std::size_t> positions, std::size_t rank,
                  const AlgebraPtr& fill) const;
  Tensor embedded(std::initializer_list<std::size_t> positions, std::size_t rank) const {
    return embedded(std::span<const std::size_t>(positions.begin(), positions.size()), rank,
                    legs_.at(0));
  }

  AlgebraElement to_element() const;
  Scalar to_scalar() const;

  std::string to_string() const;

 private:
  Field field_;
  std::vector<AlgebraPtr> legs_;
  std::map<MultiIndex, Scalar> terms_;
};

// x (x) y, concatenating legs.
Tensor outer(const Tensor& x, const Tensor& y);

// Two-sided inverse in the tensor algebra, found by solving t * y = 1 over all
// basis tensors; nullopt when t is not invertible.
std::optional<Tensor> inverse(const Tensor& t);

// Linear map from a graded algebra into a tensor space (rank 0 = the ground
// field). Holds the image of every source basis vector.
class LinearMap {
 public:
  LinearMap(AlgebraPtr source, std::vector<AlgebraPtr> target_legs, std::vector<Tensor> images);

  static LinearMap identity(const AlgebraPtr& algebra);
  static LinearMap left_multiplication(const AlgebraElement& a);
  static LinearMap right_multiplication(const AlgebraElement& a);
  static LinearMap functional(const AlgebraPtr& algebra, const DenseVector& values);
  // Rank 1 -> 1 map from images given as elements.
  static LinearMap endomorphism(const AlgebraPtr& algebra, std::vector<AlgebraElement> images);

  const AlgebraPtr& source() const { return source_; }
  const std::vector<AlgebraPtr>& target_legs() const { return target_legs_; }
  std::size_t target_rank() const { return target_legs_.size(); }
  Field field() const;

  const Tensor& image(Index i) const { return images_.at(i); }
  Tensor apply(const AlgebraElement& a) const;
  // Target rank 1.
  AlgebraElement operator()(const AlgebraElement& a) const;
  // Target rank 0.
  Scalar evaluate(const AlgebraElement& a) const;

  bool parity_preserving() const;

  // `next` applied after this map; this map must have target rank 1.
  LinearMap then(const LinearMap& next) const;
  // Matrix of an endomorphism, columns indexed by the source basis.
  Matrix matrix() const;
  std::optional<LinearMap> inverse() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.images_ == b.images_; }

 private:
  AlgebraPtr source_;
  std::vector<AlgebraPtr> target_legs_;
  std::vector<Tensor> images_;
};

struct LegMap {
  std::size_t leg;
  const LinearMap& map;
};

// Apply the given even maps to the given legs (identity elsewhere). Legs are
// numbered in the input tensor. Maps that do not preserve parity are refused.
Tensor apply_on_legs(const Tensor& x, std::initializer_list<LegMap> assignments);
Tensor apply_on_legs(const Tensor& x, const std::vector<LegMap>& assignments);

// Graded anti-homomorphism check S(ab) = (-1)^{[a][b]} S(b) S(a) on basis
// pairs; returns the first failing pair and its nonzero difference.
struct AntiHomomorphismFailure {
  Index a, b;
  AlgebraElement difference;
};
std::optional<AntiHomomorphismFailure> find_antihomomorphism_failure(const LinearMap& s);

}  // namespace qhopf
