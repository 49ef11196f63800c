#include "qhopf/linalg.hpp"

namespace qhopf {

namespace {

// row -= factor * other
void axpy(SparseVector& row, const Scalar& factor, const SparseVector& other) {
  for (const auto& [col, v] : other) {
    auto [it, inserted] = row.try_emplace(col, -(factor * v));
    if (!inserted) {
      it->second -= factor * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

}  // namespace

LinearSystem::LinearSystem(Field field, std::size_t unknowns) : field_(field), n_(unknowns) {}

void LinearSystem::add_equation(const SparseVector& coeffs, const Scalar& rhs) {
  Row row{{}, rhs};
  for (const auto& [c, v] : coeffs) {
    if (c >= n_) throw Error("linear system: unknown index out of range");
    if (!v.is_zero()) row.coeffs.emplace(c, v);
  }
  // Reduce against the existing pivots. Pivot rows are fully reduced, so
  // subtracting one never reintroduces another pivot column.
  for (auto& [p, prow] : pivots_) {
    auto it = row.coeffs.find(p);
    if (it == row.coeffs.end()) continue;
    Scalar f = it->second;
    axpy(row.coeffs, f, prow.coeffs);
    row.rhs -= f * prow.rhs;
  }
  if (row.coeffs.empty()) {
    if (!row.rhs.is_zero()) consistent_ = false;
    return;
  }
  auto lead = row.coeffs.begin();
  const std::size_t p = lead->first;
  Scalar inv = lead->second.inv();
  for (auto& [c, v] : row.coeffs) v *= inv;
  row.rhs *= inv;
  for (auto& [q, qrow] : pivots_) {
    auto it = qrow.coeffs.find(p);
    if (it == qrow.coeffs.end()) continue;
    Scalar f = it->second;
    axpy(qrow.coeffs, f, row.coeffs);
    qrow.rhs -= f * row.rhs;
  }
  pivots_.emplace(p, std::move(row));
}

std::optional<DenseVector> LinearSystem::particular_solution() const {
  if (!consistent_) return std::nullopt;
  DenseVector x(n_, field_.zero());
  for (const auto& [p, row] : pivots_) x[p] = row.rhs;
  return x;
}

std::vector<DenseVector> LinearSystem::kernel_basis() const {
  std::vector<DenseVector> out;
  for (std::size_t f = 0; f < n_; ++f) {
    if (pivots_.count(f)) continue;
    DenseVector v(n_, field_.zero());
    v[f] = field_.one();
    for (const auto& [p, row] : pivots_) {
      auto it = row.coeffs.find(f);
      if (it != row.coeffs.end()) v[p] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return reduced_basis(field_, n_, out);
}

std::vector<DenseVector> LinearSystem::row_basis() const {
  std::vector<DenseVector> out;
  for (const auto& [p, row] : pivots_) {
    DenseVector d(n_, field_.zero());
    for (const auto& [c, x] : row.coeffs) d[c] = x;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<DenseVector> reduced_basis(Field field, std::size_t dim,
                                       const std::vector<DenseVector>& spanning) {
  LinearSystem sys(field, dim);
  for (const auto& v : spanning) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) s.emplace(i, v[i]);
    }
    sys.add_homogeneous(s);
  }
  return sys.row_basis();
}

bool is_zero_vector(const DenseVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Scalar Matrix::trace() const {
  Scalar t = field_.zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error("matrix dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error("matrix dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b.at(k, j);
        if (!y.is_zero()) c.at(i, j) += x * y;
      }
    }
  }
  return c;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  // Row-reduce [A | I]; A is invertible iff the pivots are the first n columns.
  LinearSystem sys(field_, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseVector row;
    for (std::size_t c = 0; c < n; ++c) {
      if (!at(r, c).is_zero()) row.emplace(c, at(r, c));
    }
    row.emplace(n + r, field_.one());
    sys.add_homogeneous(row);
  }
  auto rows = sys.row_basis();
  Matrix inv(field_, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r][r].is_one()) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rows[r][n + c];
  }
  return inv;
}

}  // namespace qhopf
