#include "qhopf/graded.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qhopf {

namespace {

std::string with_coefficient(const Scalar& c, const std::string& body) {
  if (c.is_one()) return body;
  if ((-c).is_one()) return "-" + body;
  std::string s = c.to_string();
  bool compound = s.find(' ') != std::string::npos;
  return (compound ? "(" + s + ")" : s) + "*" + body;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const std::string& t = terms[i];
    if (t.starts_with("-")) {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

template <class Key>
void accumulate(std::map<Key, Scalar>& terms, const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void require_same_legs(const std::vector<AlgebraPtr>& a, const std::vector<AlgebraPtr>& b) {
  if (a.size() != b.size()) throw Error("tensor rank mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!same_algebra(a[k], b[k])) throw Error("tensor leg algebra mismatch");
  }
}

void require_rank(std::size_t rank) {
  if (rank > kMaxRank) throw Error("tensor rank exceeds " + std::to_string(kMaxRank));
}

}  // namespace

// ------------------------------------------------------------ GradedBasis

GradedBasis::GradedBasis(std::vector<std::string> labels, std::vector<Parity> parities,
                         std::optional<Index> unit)
    : labels_(std::move(labels)), parities_(std::move(parities)), unit_(unit) {
  if (labels_.size() != parities_.size()) {
    throw InvalidStructure("basis: label and parity counts differ");
  }
  if (labels_.empty()) throw InvalidStructure("basis: empty");
  if (labels_.size() > 0xffff) throw InvalidStructure("basis: dimension too large");
  for (Index i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidStructure("basis: empty label");
    if (parities_[i] > 1) throw InvalidStructure("basis: parity of '" + labels_[i] + "' is not 0 or 1");
    if (!lookup_.emplace(labels_[i], i).second) {
      throw InvalidStructure("basis: duplicate label '" + labels_[i] + "'");
    }
  }
  if (unit_) {
    if (*unit_ >= labels_.size()) throw InvalidStructure("basis: unit index out of range");
    if (parities_[*unit_] != 0) throw InvalidStructure("basis: unit must be even");
  }
}

std::optional<Index> GradedBasis::find(std::string_view label) const {
  auto it = lookup_.find(label);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Index GradedBasis::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw Error("unknown basis label '" + std::string(label) + "'");
  return *i;
}

// ---------------------------------------------------------- GradedAlgebra

GradedAlgebra::GradedAlgebra(Key, Field field, GradedBasis basis)
    : field_(field), basis_(std::move(basis)), table_(basis_.size() * basis_.size()) {}

AlgebraPtr GradedAlgebra::create(Field field, GradedBasis basis,
                                 const std::vector<StructureConstant>& constants) {
  if (!basis.unit_index()) throw InvalidStructure("algebra: no unit basis element");
  auto alg = std::make_shared<GradedAlgebra>(Key{}, field, std::move(basis));
  const std::size_t n = alg->dim();
  const GradedBasis& b = alg->basis_;
  std::set<std::tuple<Index, Index, Index>> seen;
  for (const auto& sc : constants) {
    if (sc.i >= n || sc.j >= n || sc.k >= n) {
      throw InvalidStructure("algebra: structure constant index out of range");
    }
    if (sc.value.field() != field) {
      throw FieldMismatch(sc.value.field().to_string(), field.to_string());
    }
    if (!seen.emplace(sc.i, sc.j, sc.k).second) {
      throw InvalidStructure("algebra: duplicate structure constant for " + b.label(sc.i) + "*" +
                             b.label(sc.j) + " -> " + b.label(sc.k));
    }
    if (sc.value.is_zero()) continue;
    if ((b.parity(sc.i) ^ b.parity(sc.j)) != b.parity(sc.k)) {
      throw InvalidStructure("algebra: product " + b.label(sc.i) + "*" + b.label(sc.j) +
                             " has component along " + b.label(sc.k) + " of the wrong parity");
    }
    alg->table_[sc.i * n + sc.j].emplace_back(sc.k, sc.value);
  }
  for (auto& row : alg->table_) {
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  alg->unit_terms_.emplace(*b.unit_index(), field.one());
  alg->validate();
  return alg;
}

AlgebraPtr GradedAlgebra::matrix_algebra(Field field, std::vector<Parity> carrier) {
  const std::size_t d = carrier.size();
  if (d == 0) throw InvalidStructure("matrix algebra: empty carrier");
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      labels.push_back("E(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
      parities.push_back(static_cast<Parity>((carrier[p] ^ carrier[q]) & 1));
    }
  }
  auto alg = std::make_shared<GradedAlgebra>(Key{}, field,
                                             GradedBasis(labels, parities, std::nullopt));
  const std::size_t n = d * d;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      for (std::size_t s = 0; s < d; ++s) {
        alg->table_[(p * d + q) * n + (q * d + s)].emplace_back(static_cast<Index>(p * d + s),
                                                                 field.one());
      }
    }
    alg->unit_terms_.emplace(static_cast<Index>(p * d + p), field.one());
  }
  alg->carrier_ = std::move(carrier);
  return alg;
}

void GradedAlgebra::validate() const {
  const Index n = static_cast<Index>(dim());
  const Index u = *basis_.unit_index();
  for (Index i = 0; i < n; ++i) {
    Row expect{{i, field_.one()}};
    if (product(u, i) != expect || product(i, u) != expect) {
      throw InvalidStructure("algebra: unit law fails for " + basis_.label(i));
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index l = 0; l < n; ++l) {
        std::map<Index, Scalar> left, right;
        for (const auto& [k, c] : product(i, j)) {
          for (const auto& [m, d] : product(k, l)) accumulate(left, m, c * d);
        }
        for (const auto& [k, c] : product(j, l)) {
          for (const auto& [m, d] : product(i, k)) accumulate(right, m, c * d);
        }
        if (left != right) {
          throw InvalidStructure("algebra: associativity fails for (" + basis_.label(i) + ", " +
                                 basis_.label(j) + ", " + basis_.label(l) + ")");
        }
      }
    }
  }
}

AlgebraElement GradedAlgebra::zero() const { return AlgebraElement(shared_from_this()); }

AlgebraElement GradedAlgebra::unit() const {
  AlgebraElement e(shared_from_this());
  for (const auto& [i, c] : unit_terms_) e.add_term(i, c);
  return e;
}

AlgebraElement GradedAlgebra::basis_element(Index i) const {
  if (i >= dim()) throw Error("basis index out of range");
  AlgebraElement e(shared_from_this());
  e.add_term(i, field_.one());
  return e;
}

AlgebraElement GradedAlgebra::element(std::string_view label) const {
  return basis_element(basis_.index_of(label));
}

std::vector<StructureConstant> GradedAlgebra::structure_constants() const {
  std::vector<StructureConstant> out;
  const Index n = static_cast<Index>(dim());
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (const auto& [k, c] : product(i, j)) out.push_back({i, j, k, c});
    }
  }
  return out;
}

bool GradedAlgebra::same_as(const GradedAlgebra& other) const {
  return this == &other || (field_ == other.field_ && basis_ == other.basis_ &&
                            table_ == other.table_ && carrier_ == other.carrier_);
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

// --------------------------------------------------------- AlgebraElement

Field AlgebraElement::field() const { return alg_->field(); }

Scalar AlgebraElement::coeff(Index i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? field().zero() : it->second;
}

void AlgebraElement::add_term(Index i, const Scalar& c) {
  if (i >= alg_->dim()) throw Error("basis index out of range");
  if (c.field() != field()) throw FieldMismatch(c.field().to_string(), field().to_string());
  accumulate(terms_, i, c);
}

std::optional<Parity> AlgebraElement::parity() const {
  std::optional<Parity> p;
  for (const auto& [i, c] : terms_) {
    Parity q = alg_->parity(i);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

AlgebraElement AlgebraElement::part(Parity p) const {
  AlgebraElement out(alg_);
  for (const auto& [i, c] : terms_) {
    if (alg_->parity(i) == p) out.terms_.emplace(i, c);
  }
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& [i, c] : out.terms_) c = -c;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& y) {
  if (!same_algebra(alg_, y.alg_)) throw Error("algebra mismatch");
  for (const auto& [i, c] : y.terms_) accumulate(terms_, i, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& y) {
  if (!same_algebra(alg_, y.alg_)) throw Error("algebra mismatch");
  for (const auto& [i, c] : y.terms_) accumulate(terms_, i, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
  AlgebraElement out(alg_);
  if (s.is_zero()) return out;
  for (const auto& [i, c] : terms_) out.terms_.emplace(i, c * s);
  return out;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  if (!same_algebra(x.alg_, y.alg_)) throw Error("algebra mismatch");
  AlgebraElement out(x.alg_);
  for (const auto& [i, a] : x.terms_) {
    for (const auto& [j, b] : y.terms_) {
      Scalar ab = a * b;
      for (const auto& [k, c] : x.alg_->product(i, j)) accumulate(out.terms_, k, ab * c);
    }
  }
  return out;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return same_algebra(x.alg_, y.alg_) && x.terms_ == y.terms_;
}

DenseVector AlgebraElement::to_vector() const {
  DenseVector v(alg_->dim(), field().zero());
  for (const auto& [i, c] : terms_) v[i] = c;
  return v;
}

AlgebraElement AlgebraElement::from_vector(AlgebraPtr algebra, const DenseVector& v) {
  AlgebraElement out(std::move(algebra));
  for (Index i = 0; i < v.size(); ++i) out.add_term(i, v[i]);
  return out;
}

std::string AlgebraElement::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [i, c] : terms_) parts.push_back(with_coefficient(c, alg_->basis().label(i)));
  return join_terms(parts);
}

// ----------------------------------------------------------------- Tensor

Tensor::Tensor(Field field, std::vector<AlgebraPtr> legs) : field_(field), legs_(std::move(legs)) {
  require_rank(legs_.size());
  for (const auto& l : legs_) {
    if (l->field() != field_) throw FieldMismatch(l->field().to_string(), field_.to_string());
  }
}

Tensor Tensor::zero(const AlgebraPtr& algebra, std::size_t rank) {
  return Tensor(algebra->field(), std::vector<AlgebraPtr>(rank, algebra));
}

Tensor Tensor::one(std::vector<AlgebraPtr> legs) {
  std::vector<AlgebraElement> units;
  for (const auto& l : legs) units.push_back(l->unit());
  if (units.empty()) throw Error("Tensor::one needs at least one leg");
  return pure(units);
}

Tensor Tensor::one(const AlgebraPtr& algebra, std::size_t rank) {
  return one(std::vector<AlgebraPtr>(rank, algebra));
}

Tensor Tensor::scalar(const Scalar& s) {
  Tensor t(s.field(), {});
  t.add_term(MultiIndex{}, s);
  return t;
}

Tensor Tensor::pure(const std::vector<AlgebraElement>& factors) {
  if (factors.empty()) throw Error("Tensor::pure needs at least one factor");
  std::vector<AlgebraPtr> legs;
  for (const auto& f : factors) legs.push_back(f.algebra());
  Tensor out(factors.front().field(), legs);
  std::function<void(std::size_t, MultiIndex, Scalar)> rec = [&](std::size_t k, MultiIndex m,
                                                                 Scalar c) {
    if (k == factors.size()) {
      out.add_term(m, c);
      return;
    }
    for (const auto& [i, a] : factors[k].terms()) {
      m[k] = static_cast<std::uint16_t>(i);
      rec(k + 1, m, c * a);
    }
  };
  rec(0, MultiIndex{}, out.field_.one());
  return out;
}

Tensor Tensor::from_element(const AlgebraElement& a) { return pure({a}); }

Scalar Tensor::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Tensor::add_term(const MultiIndex& m, const Scalar& c) {
  if (c.field() != field_) throw FieldMismatch(c.field().to_string(), field_.to_string());
  accumulate(terms_, m, c);
}

Parity Tensor::parity(const MultiIndex& m) const {
  Parity p = 0;
  for (std::size_t k = 0; k < legs_.size(); ++k) p ^= legs_[k]->parity(m[k]);
  return p;
}

std::optional<Parity> Tensor::parity() const {
  std::optional<Parity> p;
  for (const auto& [m, c] : terms_) {
    Parity q = parity(m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

Tensor Tensor::operator-() const {
  Tensor out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Tensor& Tensor::operator+=(const Tensor& y) {
  require_same_legs(legs_, y.legs_);
  for (const auto& [m, c] : y.terms_) accumulate(terms_, m, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& y) {
  require_same_legs(legs_, y.legs_);
  for (const auto& [m, c] : y.terms_) accumulate(terms_, m, -c);
  return *this;
}

Tensor Tensor::scaled(const Scalar& s) const {
  Tensor out(field_, legs_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
  return out;
}

Tensor operator*(const Tensor& x, const Tensor& y) {
  require_same_legs(x.legs_, y.legs_);
  const std::size_t r = x.rank();
  Tensor out(x.field_, x.legs_);
  std::array<const GradedAlgebra::Row*, kMaxRank> rows{};
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      Parity e = 0, ysum = 0;
      bool vanishes = false;
      for (std::size_t k = 0; k < r; ++k) {
        e ^= ysum & x.legs_[k]->parity(mx[k]);
        ysum ^= y.legs_[k]->parity(my[k]);
        rows[k] = &x.legs_[k]->product(mx[k], my[k]);
        if (rows[k]->empty()) vanishes = true;
      }
      if (vanishes) continue;
      Scalar c = cx * cy;
      if (e) c = -c;
      // Expand the product of the per-leg rows.
      std::array<std::size_t, kMaxRank> pos{};
      while (true) {
        MultiIndex m;
        Scalar t = c;
        for (std::size_t k = 0; k < r; ++k) {
          const auto& [idx, v] = (*rows[k])[pos[k]];
          m[k] = static_cast<std::uint16_t>(idx);
          t *= v;
        }
        accumulate(out.terms_, m, t);
        std::size_t k = r;
        while (k > 0 && ++pos[k - 1] == rows[k - 1]->size()) pos[--k] = 0;
        if (k == 0) break;
      }
    }
  }
  return out;
}

bool operator==(const Tensor& x, const Tensor& y) {
  if (x.legs_.size() != y.legs_.size() || x.field_ != y.field_) return false;
  for (std::size_t k = 0; k < x.legs_.size(); ++k) {
    if (!same_algebra(x.legs_[k], y.legs_[k])) return false;
  }
  return x.terms_ == y.terms_;
}

Tensor Tensor::permuted(std::span<const std::size_t> perm) const {
  const std::size_t r = rank();
  if (perm.size() != r) throw Error("permutation length differs from tensor rank");
  std::array<std::size_t, kMaxRank> where{};
  std::array<bool, kMaxRank> used{};
  for (std::size_t p = 0; p < r; ++p) {
    if (perm[p] >= r || used[perm[p]]) throw Error("not a permutation");
    used[perm[p]] = true;
    where[perm[p]] = p;
  }
  std::vector<AlgebraPtr> legs;
  for (std::size_t p = 0; p < r; ++p) legs.push_back(legs_[perm[p]]);
  Tensor out(field_, legs);
  for (const auto& [m, c] : terms_) {
    Parity e = 0;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        if (where[i] > where[j]) e ^= legs_[i]->parity(m[i]) & legs_[j]->parity(m[j]);
      }
    }
    MultiIndex n;
    for (std::size_t p = 0; p < r; ++p) n[p] = m[perm[p]];
    out.terms_.emplace(n, e ? -c : c);
  }
  return out;
}

Tensor Tensor::merged(std::size_t leg) const {
  if (leg + 1 >= rank()) throw Error("merged: leg out of range");
  if (!same_algebra(legs_[leg], legs_[leg + 1])) throw Error("merged: legs in different algebras");
  std::vector<AlgebraPtr> legs = legs_;
  legs.erase(legs.begin() + static_cast<long>(leg) + 1);
  Tensor out(field_, legs);
  for (const auto& [m, c] : terms_) {
    for (const auto& [k, v] : legs_[leg]->product(m[leg], m[leg + 1])) {
      MultiIndex n;
      for (std::size_t p = 0, q = 0; p < rank(); ++p) {
        if (p == leg + 1) continue;
        n[q++] = p == leg ? static_cast<std::uint16_t>(k) : m[p];
      }
      accumulate(out.terms_, n, c * v);
    }
  }
  return out;
}

AlgebraElement Tensor::multiply_out() const {
  if (rank() == 0) throw Error("multiply_out on a scalar");
  Tensor t = *this;
  while (t.rank() > 1) t = t.merged(0);
  return t.to_element();
}

Tensor Tensor::embedded(std::span<const std::size_t> positions, std::size_t rank,
                        const AlgebraPtr& fill) const {
  if (positions.size() != this->rank()) throw Error("embedded: wrong number of positions");
  require_rank(rank);
  std::array<std::ptrdiff_t, kMaxRank> source{};
  source.fill(-1);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] >= rank || (k > 0 && positions[k] <= positions[k - 1])) {
      throw Error("embedded: positions must be increasing and within rank");
    }
    source[positions[k]] = static_cast<std::ptrdiff_t>(k);
  }
  std::vector<AlgebraPtr> legs;
  for (std::size_t p = 0; p < rank; ++p) legs.push_back(source[p] < 0 ? fill : legs_[source[p]]);
  Tensor out(field_, legs);
  const AlgebraElement u = fill->unit();
  for (const auto& [m, c] : terms_) {
    std::function<void(std::size_t, MultiIndex, Scalar)> rec = [&](std::size_t p, MultiIndex n,
                                                                   Scalar v) {
      if (p == rank) {
        out.terms_.emplace(n, v);
        return;
      }
      if (source[p] >= 0) {
        n[p] = m[static_cast<std::size_t>(source[p])];
        rec(p + 1, n, v);
        return;
      }
      for (const auto& [i, a] : u.terms()) {
        n[p] = static_cast<std::uint16_t>(i);
        rec(p + 1, n, v * a);
      }
    };
    rec(0, MultiIndex{}, c);
  }
  return out;
}

AlgebraElement Tensor::to_element() const {
  if (rank() != 1) throw Error("to_element on a tensor of rank " + std::to_string(rank()));
  AlgebraElement out(legs_[0]);
  for (const auto& [m, c] : terms_) out.add_term(m[0], c);
  return out;
}

Scalar Tensor::to_scalar() const {
  if (rank() != 0) throw Error("to_scalar on a tensor of rank " + std::to_string(rank()));
  return terms_.empty() ? field_.zero() : terms_.begin()->second;
}

std::string Tensor::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [m, c] : terms_) {
    if (rank() == 0) {
      parts.push_back(c.to_string());
      continue;
    }
    std::string body;
    for (std::size_t k = 0; k < rank(); ++k) {
      if (k) body += " ⊗ ";
      body += legs_[k]->basis().label(m[k]);
    }
    parts.push_back(with_coefficient(c, rank() > 1 ? "(" + body + ")" : body));
  }
  return join_terms(parts);
}

Tensor outer(const Tensor& x, const Tensor& y) {
  if (x.field() != y.field()) throw FieldMismatch(x.field().to_string(), y.field().to_string());
  std::vector<AlgebraPtr> legs = x.legs();
  legs.insert(legs.end(), y.legs().begin(), y.legs().end());
  Tensor out(x.field(), legs);
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      MultiIndex m = mx;
      for (std::size_t k = 0; k < y.rank(); ++k) m[x.rank() + k] = my[k];
      out.add_term(m, cx * cy);
    }
  }
  return out;
}

std::optional<Tensor> inverse(const Tensor& t) {
  const std::size_t r = t.rank();
  if (r == 0) {
    if (t.to_scalar().is_zero()) return std::nullopt;
    return Tensor::scalar(t.to_scalar().inv());
  }
  // Enumerate basis multi-indices in lexicographic order.
  std::vector<MultiIndex> basis{MultiIndex{}};
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<MultiIndex> next;
    for (const auto& m : basis) {
      for (Index i = 0; i < t.leg(k)->dim(); ++i) {
        MultiIndex n = m;
        n[k] = static_cast<std::uint16_t>(i);
        next.push_back(n);
      }
    }
    basis = std::move(next);
  }
  std::map<MultiIndex, std::size_t> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position.emplace(basis[i], i);

  // Column j of the left-multiplication matrix is t * e_j.
  std::vector<SparseVector> rows(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Tensor e(t.field(), t.legs());
    e.add_term(basis[j], t.field().one());
    const Tensor column = t * e;
    for (const auto& [m, c] : column.terms()) rows[position.at(m)].emplace(j, c);
  }
  const Tensor one = Tensor::one(t.legs());
  LinearSystem sys(t.field(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) sys.add_equation(rows[i], one.coeff(basis[i]));
  if (sys.rank() != basis.size()) return std::nullopt;
  auto x = sys.particular_solution();
  if (!x) return std::nullopt;
  Tensor y(t.field(), t.legs());
  for (std::size_t j = 0; j < basis.size(); ++j) y.add_term(basis[j], (*x)[j]);
  if (!(y * t == one)) return std::nullopt;
  return y;
}

// -------------------------------------------------------------- LinearMap

LinearMap::LinearMap(AlgebraPtr source, std::vector<AlgebraPtr> target_legs,
                     std::vector<Tensor> images)
    : source_(std::move(source)), target_legs_(std::move(target_legs)), images_(std::move(images)) {
  if (images_.size() != source_->dim()) throw Error("linear map: wrong number of images");
  for (const auto& t : images_) {
    if (t.field() != source_->field()) {
      throw FieldMismatch(t.field().to_string(), source_->field().to_string());
    }
    require_same_legs(t.legs(), target_legs_);
  }
}

LinearMap LinearMap::identity(const AlgebraPtr& algebra) {
  std::vector<Tensor> images;
  for (Index i = 0; i < algebra->dim(); ++i) {
    images.push_back(Tensor::from_element(algebra->basis_element(i)));
  }
  return LinearMap(algebra, {algebra}, std::move(images));
}

LinearMap LinearMap::left_multiplication(const AlgebraElement& a) {
  const AlgebraPtr& alg = a.algebra();
  std::vector<Tensor> images;
  for (Index i = 0; i < alg->dim(); ++i) {
    images.push_back(Tensor::from_element(a * alg->basis_element(i)));
  }
  return LinearMap(alg, {alg}, std::move(images));
}

LinearMap LinearMap::right_multiplication(const AlgebraElement& a) {
  const AlgebraPtr& alg = a.algebra();
  std::vector<Tensor> images;
  for (Index i = 0; i < alg->dim(); ++i) {
    images.push_back(Tensor::from_element(alg->basis_element(i) * a));
  }
  return LinearMap(alg, {alg}, std::move(images));
}

LinearMap LinearMap::functional(const AlgebraPtr& algebra, const DenseVector& values) {
  if (values.size() != algebra->dim()) throw Error("functional: wrong number of values");
  std::vector<Tensor> images;
  for (const auto& v : values) images.push_back(Tensor::scalar(v));
  return LinearMap(algebra, {}, std::move(images));
}

LinearMap LinearMap::endomorphism(const AlgebraPtr& algebra, std::vector<AlgebraElement> images) {
  std::vector<Tensor> t;
  for (const auto& a : images) t.push_back(Tensor::from_element(a));
  return LinearMap(algebra, {algebra}, std::move(t));
}

Field LinearMap::field() const { return source_->field(); }

Tensor LinearMap::apply(const AlgebraElement& a) const {
  if (!same_algebra(a.algebra(), source_)) throw Error("linear map applied outside its source");
  Tensor out(field(), target_legs_);
  for (const auto& [i, c] : a.terms()) out += images_[i].scaled(c);
  return out;
}

AlgebraElement LinearMap::operator()(const AlgebraElement& a) const {
  return apply(a).to_element();
}

Scalar LinearMap::evaluate(const AlgebraElement& a) const { return apply(a).to_scalar(); }

bool LinearMap::parity_preserving() const {
  for (Index i = 0; i < images_.size(); ++i) {
    auto p = images_[i].parity();
    if (!p) return false;
    if (!images_[i].is_zero() && *p != source_->parity(i)) return false;
  }
  return true;
}

LinearMap LinearMap::then(const LinearMap& next) const {
  if (target_rank() != 1) throw Error("composition needs a rank-1 target");
  std::vector<Tensor> images;
  for (const auto& t : images_) images.push_back(next.apply(t.to_element()));
  return LinearMap(source_, next.target_legs_, std::move(images));
}

Matrix LinearMap::matrix() const {
  if (target_rank() != 1) throw Error("matrix of a map with target rank != 1");
  Matrix m(field(), target_legs_[0]->dim(), source_->dim());
  for (Index j = 0; j < images_.size(); ++j) {
    for (const auto& [idx, c] : images_[j].terms()) m.at(idx[0], j) = c;
  }
  return m;
}

std::optional<LinearMap> LinearMap::inverse() const {
  if (target_rank() != 1 || !same_algebra(target_legs_[0], source_)) return std::nullopt;
  auto inv = matrix().inverse();
  if (!inv) return std::nullopt;
  std::vector<Tensor> images;
  for (Index j = 0; j < source_->dim(); ++j) {
    Tensor t(field(), target_legs_);
    for (Index i = 0; i < source_->dim(); ++i) {
      MultiIndex m;
      m[0] = static_cast<std::uint16_t>(i);
      t.add_term(m, inv->at(i, j));
    }
    images.push_back(std::move(t));
  }
  return LinearMap(source_, target_legs_, std::move(images));
}

Tensor apply_on_legs(const Tensor& x, std::initializer_list<LegMap> assignments) {
  return apply_on_legs(x, std::vector<LegMap>(assignments));
}

Tensor apply_on_legs(const Tensor& x, const std::vector<LegMap>& assignments) {
  const std::size_t r = x.rank();
  std::vector<const LinearMap*> maps(r, nullptr);
  for (const auto& a : assignments) {
    if (a.leg >= r) throw Error("apply_on_legs: leg out of range");
    if (maps[a.leg]) throw Error("apply_on_legs: leg assigned twice");
    if (!same_algebra(a.map.source(), x.leg(a.leg))) {
      throw Error("apply_on_legs: map source differs from leg algebra");
    }
    if (!a.map.parity_preserving()) {
      throw Error("apply_on_legs: map does not preserve parity");
    }
    maps[a.leg] = &a.map;
  }
  std::vector<AlgebraPtr> legs;
  for (std::size_t k = 0; k < r; ++k) {
    if (maps[k]) {
      legs.insert(legs.end(), maps[k]->target_legs().begin(), maps[k]->target_legs().end());
    } else {
      legs.push_back(x.leg(k));
    }
  }
  Tensor out(x.field(), legs);
  for (const auto& [m, c] : x.terms()) {
    std::function<void(std::size_t, std::size_t, MultiIndex, Scalar)> rec =
        [&](std::size_t k, std::size_t pos, MultiIndex n, Scalar v) {
          if (k == r) {
            out.add_term(n, v);
            return;
          }
          if (!maps[k]) {
            n[pos] = m[k];
            rec(k + 1, pos + 1, n, v);
            return;
          }
          const Tensor& img = maps[k]->image(m[k]);
          for (const auto& [mi, ci] : img.terms()) {
            for (std::size_t t = 0; t < img.rank(); ++t) n[pos + t] = mi[t];
            rec(k + 1, pos + img.rank(), n, v * ci);
          }
        };
    rec(0, 0, MultiIndex{}, c);
  }
  return out;
}

std::optional<AntiHomomorphismFailure> find_antihomomorphism_failure(const LinearMap& s) {
  const AlgebraPtr& alg = s.source();
  for (Index i = 0; i < alg->dim(); ++i) {
    for (Index j = 0; j < alg->dim(); ++j) {
      AlgebraElement a = alg->basis_element(i), b = alg->basis_element(j);
      AlgebraElement rhs = s(b) * s(a);
      if (alg->parity(i) & alg->parity(j)) rhs = -rhs;
      AlgebraElement diff = s(a * b) - rhs;
      if (!diff.is_zero()) return AntiHomomorphismFailure{i, j, diff};
    }
  }
  return std::nullopt;
}

}  // namespace qhopf
