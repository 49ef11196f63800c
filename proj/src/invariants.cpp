#include "qhopf/invariants.hpp"

namespace qhopf {

namespace {

Scalar sign(const Field& f, unsigned parity) { return parity & 1 ? -f.one() : f.one(); }

std::vector<Index> basis_of_parity(const GradedAlgebra& a, Parity p) {
  std::vector<Index> out;
  for (Index i = 0; i < a.dim(); ++i) {
    if (a.parity(i) == p) out.push_back(i);
  }
  return out;
}

// Kernel of the map x ↦ Σ_k x_k columns[k], lifted back to elements supported
// on the given basis indices.
std::vector<AlgebraElement> kernel_elements(const AlgebraPtr& a, const std::vector<Index>& support,
                                            const std::vector<std::vector<AlgebraElement>>& blocks) {
  LinearSystem sys(a->field(), support.size());
  for (const auto& columns : blocks) {
    for (Index m = 0; m < a->dim(); ++m) {
      SparseVector row;
      for (std::size_t k = 0; k < columns.size(); ++k) {
        Scalar c = columns[k].coeff(m);
        if (!c.is_zero()) row.emplace(k, c);
      }
      if (!row.empty()) sys.add_homogeneous(row);
    }
  }
  std::vector<AlgebraElement> out;
  for (const DenseVector& v : sys.kernel_basis()) {
    AlgebraElement e(a);
    for (std::size_t k = 0; k < v.size(); ++k) e.add_term(support[k], v[k]);
    out.push_back(std::move(e));
  }
  return out;
}

template <class Action>
GradedSubspace fixed_subspace(const QuasiHopf& h, Action&& act) {
  const AlgebraPtr& A = h.algebra;
  GradedSubspace out{A, {}, {}};
  for (Parity p : {Parity{0}, Parity{1}}) {
    std::vector<Index> support = basis_of_parity(*A, p);
    if (support.empty()) continue;
    std::vector<std::vector<AlgebraElement>> blocks;
    for (Index i = 0; i < A->dim(); ++i) {
      AlgebraElement a = A->basis_element(i);
      std::vector<AlgebraElement> columns;
      for (Index k : support) {
        AlgebraElement b = A->basis_element(k);
        columns.push_back(act(a, b) - b.scaled(h.eps(a)));
      }
      blocks.push_back(std::move(columns));
    }
    (p ? out.odd : out.even) = kernel_elements(A, support, blocks);
  }
  return out;
}

template <class Action>
bool fixed(const QuasiHopf& h, const AlgebraElement& c, Action&& act) {
  for (Index i = 0; i < h.algebra->dim(); ++i) {
    AlgebraElement a = h.algebra->basis_element(i);
    if (!(act(a, c) == c.scaled(h.eps(a)))) return false;
  }
  return true;
}

template <class Action>
bool form_fixed(const QuasiHopf& h, const LinearForm& xi, Action&& act) {
  const AlgebraPtr& A = h.algebra;
  for (Index i = 0; i < A->dim(); ++i) {
    AlgebraElement a = A->basis_element(i);
    for (Index j = 0; j < A->dim(); ++j) {
      AlgebraElement b = A->basis_element(j);
      if (xi(act(a, b)) != h.eps(a) * xi.values[j]) return false;
    }
  }
  return true;
}

template <class Action>
std::vector<LinearForm> fixed_forms(const QuasiHopf& h, Action&& act) {
  const AlgebraPtr& A = h.algebra;
  const std::size_t n = A->dim();
  std::vector<LinearForm> out;
  // The conditions never mix the even and odd values of ξ, so each parity is
  // solved on its own and the basis comes out homogeneous.
  for (Parity p : {Parity{0}, Parity{1}}) {
    std::vector<Index> support = basis_of_parity(*A, p);
    if (support.empty()) continue;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t k = 0; k < support.size(); ++k) slot[support[k]] = k;
    LinearSystem sys(A->field(), support.size());
    for (Index i = 0; i < n; ++i) {
      AlgebraElement a = A->basis_element(i);
      const Scalar e = h.eps(a);
      for (Index j = 0; j < n; ++j) {
        AlgebraElement d = act(a, A->basis_element(j)) - A->basis_element(j).scaled(e);
        SparseVector row;
        for (const auto& [m, c] : d.terms()) {
          if (slot[m] < n) row.emplace(slot[m], c);
        }
        if (!row.empty()) sys.add_homogeneous(row);
      }
    }
    for (const DenseVector& v : sys.kernel_basis()) {
      LinearForm xi{A, DenseVector(n, A->field().zero())};
      for (std::size_t k = 0; k < v.size(); ++k) xi.values[support[k]] = v[k];
      out.push_back(std::move(xi));
    }
  }
  return out;
}

void require_same(const QuasiHopf& h, const Representation& v) {
  if (!same_algebra(h.algebra, v.algebra)) {
    throw Error("representation '" + v.name + "' belongs to another algebra");
  }
}

// Δ(a) as (coefficient, a₁, a₂) basis triples.
struct Split {
  Scalar c;
  Index first, second;
};

std::vector<Split> splits(const QuasiHopf& h, Index i) {
  std::vector<Split> out;
  for (const auto& [m, c] : h.coproduct.image(i).terms()) out.push_back({c, m[0], m[1]});
  return out;
}

bool same_parity_entries(const Matrix& f, const std::vector<Parity>& v,
                         const std::vector<Parity>& w, Parity p) {
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
      if (!f.at(r, c).is_zero() && (w[r] ^ v[c]) != p) return false;
    }
  }
  return true;
}

// a·f = Σ π_W(a₁) f π_V(S(a₂)) (−1)^{[f][a₂]}
Matrix act_on_map(const QuasiHopf& h, const Representation& v, const Representation& w,
                  const Matrix& f, Parity parity, Index i) {
  const AlgebraPtr& A = h.algebra;
  Matrix out(A->field(), w.dim(), v.dim());
  for (const Split& s : splits(h, i)) {
    Scalar c = s.c * sign(A->field(), parity & A->parity(s.second));
    out += (w.matrices[s.first] * f * v(h.s(A->basis_element(s.second)))).scaled(c);
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------- LinearForm

Scalar LinearForm::operator()(const AlgebraElement& a) const {
  if (!same_algebra(a.algebra(), algebra)) throw Error("linear form applied outside its algebra");
  Scalar s = algebra->field().zero();
  for (const auto& [i, c] : a.terms()) s += c * values[i];
  return s;
}

bool LinearForm::even() const {
  for (Index i = 0; i < values.size(); ++i) {
    if (algebra->parity(i) && !values[i].is_zero()) return false;
  }
  return true;
}

bool GradedSubspace::contains(const AlgebraElement& x) const {
  if (!same_algebra(x.algebra(), algebra)) return false;
  const Field f = algebra->field();
  for (Parity p : {Parity{0}, Parity{1}}) {
    AlgebraElement part = x.part(p);
    if (part.is_zero()) continue;
    std::vector<DenseVector> span;
    for (const auto& e : p ? odd : even) span.push_back(e.to_vector());
    const std::size_t before = reduced_basis(f, algebra->dim(), span).size();
    span.push_back(part.to_vector());
    if (reduced_basis(f, algebra->dim(), span).size() != before) return false;
  }
  return true;
}

// ---------------------------------------------------------------- actions

AlgebraElement adjoint_action(const QuasiHopf& h, const AlgebraElement& a,
                              const AlgebraElement& b) {
  if (!same_algebra(a.algebra(), h.algebra) || !same_algebra(b.algebra(), h.algebra)) {
    throw Error("adjoint action: basis mismatch");
  }
  const AlgebraElement one = h.algebra->unit();
  return (apply_on_legs(h.delta(a), {{1, h.antipode}}) * Tensor::pure({b, one})).multiply_out();
}

AlgebraElement anti_adjoint_action(const QuasiHopf& h, const AlgebraElement& a,
                                   const AlgebraElement& b) {
  if (!same_algebra(a.algebra(), h.algebra) || !same_algebra(b.algebra(), h.algebra)) {
    throw Error("anti-adjoint action: basis mismatch");
  }
  const AlgebraElement one = h.algebra->unit();
  return (Tensor::pure({one, b}) * apply_on_legs(h.delta(a), {{0, h.antipode}})).multiply_out();
}

bool is_invariant(const QuasiHopf& h, const AlgebraElement& c) {
  return fixed(h, c, [&](const auto& a, const auto& b) { return adjoint_action(h, a, b); });
}

bool is_pseudo_invariant(const QuasiHopf& h, const AlgebraElement& c) {
  return fixed(h, c, [&](const auto& a, const auto& b) { return anti_adjoint_action(h, a, b); });
}

GradedSubspace invariant_subspace(const QuasiHopf& h) {
  return fixed_subspace(h, [&](const auto& a, const auto& b) { return adjoint_action(h, a, b); });
}

GradedSubspace pseudo_invariant_subspace(const QuasiHopf& h) {
  return fixed_subspace(h,
                        [&](const auto& a, const auto& b) { return anti_adjoint_action(h, a, b); });
}

// ----------------------------------------------------------------- center

std::optional<CentralityFailure> centrality_failure(const AlgebraElement& x) {
  const AlgebraPtr& A = x.algebra();
  for (Index i = 0; i < A->dim(); ++i) {
    AlgebraElement b = A->basis_element(i);
    AlgebraElement d = x * b - b * x;
    if (!d.is_zero()) return CentralityFailure{i, std::move(d)};
  }
  return std::nullopt;
}

bool is_central(const AlgebraElement& x) { return !centrality_failure(x); }

GradedSubspace center(const AlgebraPtr& A) {
  GradedSubspace out{A, {}, {}};
  for (Parity p : {Parity{0}, Parity{1}}) {
    std::vector<Index> support = basis_of_parity(*A, p);
    if (support.empty()) continue;
    std::vector<std::vector<AlgebraElement>> blocks;
    for (Index i = 0; i < A->dim(); ++i) {
      AlgebraElement b = A->basis_element(i);
      std::vector<AlgebraElement> columns;
      for (Index k : support) {
        AlgebraElement x = A->basis_element(k);
        columns.push_back(x * b - b * x);
      }
      blocks.push_back(std::move(columns));
    }
    (p ? out.odd : out.even) = kernel_elements(A, support, blocks);
  }
  return out;
}

// ----------------------------------------------------------- linear forms

bool is_invariant_form(const QuasiHopf& h, const LinearForm& xi) {
  return form_fixed(h, xi, [&](const auto& a, const auto& b) { return adjoint_action(h, a, b); });
}

bool is_pseudo_invariant_form(const QuasiHopf& h, const LinearForm& xi) {
  return form_fixed(h, xi,
                    [&](const auto& a, const auto& b) { return anti_adjoint_action(h, a, b); });
}

std::vector<LinearForm> invariant_linear_forms(const QuasiHopf& h) {
  return fixed_forms(h, [&](const auto& a, const auto& b) { return adjoint_action(h, a, b); });
}

std::vector<LinearForm> pseudo_invariant_linear_forms(const QuasiHopf& h) {
  return fixed_forms(h,
                     [&](const auto& a, const auto& b) { return anti_adjoint_action(h, a, b); });
}

// --------------------------------------------------------- bilinear forms

std::vector<Matrix> invariant_bilinear_forms(const QuasiHopf& h, const Representation& v,
                                             const Representation& w) {
  require_same(h, v);
  require_same(h, w);
  const AlgebraPtr& A = h.algebra;
  const Field f = A->field();
  const std::size_t dv = v.dim(), dw = w.dim();
  auto slot = [&](std::size_t k, std::size_t l) { return k * dw + l; };
  LinearSystem sys(f, dv * dw);
  for (Index a = 0; a < A->dim(); ++a) {
    const Scalar e = h.eps(A->basis_element(a));
    const auto parts = splits(h, a);
    for (std::size_t i = 0; i < dv; ++i) {
      for (std::size_t j = 0; j < dw; ++j) {
        SparseVector row;
        auto add = [&](std::size_t k, const Scalar& c) {
          if (c.is_zero()) return;
          auto [it, inserted] = row.try_emplace(k, c);
          if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) row.erase(it);
          }
        };
        for (const Split& s : parts) {
          Scalar c = s.c * sign(f, v.carrier[i] & A->parity(s.second));
          const Matrix& pv = v.matrices[s.first];
          const Matrix& pw = w.matrices[s.second];
          for (std::size_t k = 0; k < dv; ++k) {
            if (pv.at(k, i).is_zero()) continue;
            for (std::size_t l = 0; l < dw; ++l) {
              if (!pw.at(l, j).is_zero()) add(slot(k, l), c * pv.at(k, i) * pw.at(l, j));
            }
          }
        }
        add(slot(i, j), -e);
        if (!row.empty()) sys.add_homogeneous(row);
      }
    }
  }
  std::vector<Matrix> out;
  for (const DenseVector& x : sys.kernel_basis()) {
    Matrix b(f, dv, dw);
    for (std::size_t k = 0; k < dv; ++k) {
      for (std::size_t l = 0; l < dw; ++l) b.at(k, l) = x[slot(k, l)];
    }
    out.push_back(std::move(b));
  }
  return out;
}

// ------------------------------------------------------- maps between reps

std::optional<Parity> map_parity(const Matrix& f, const std::vector<Parity>& v,
                                 const std::vector<Parity>& w) {
  if (same_parity_entries(f, v, w, 0)) return Parity{0};
  if (same_parity_entries(f, v, w, 1)) return Parity{1};
  return std::nullopt;
}

bool is_invariant_map(const QuasiHopf& h, const Representation& v, const Representation& w,
                      const Matrix& f, Parity parity) {
  require_same(h, v);
  require_same(h, w);
  for (Index i = 0; i < h.algebra->dim(); ++i) {
    Scalar e = h.eps(h.algebra->basis_element(i));
    if (!(act_on_map(h, v, w, f, parity, i) == f.scaled(e))) return false;
  }
  return true;
}

std::vector<Matrix> invariant_maps(const QuasiHopf& h, const Representation& v,
                                   const Representation& w, Parity parity) {
  require_same(h, v);
  require_same(h, w);
  const AlgebraPtr& A = h.algebra;
  const Field f = A->field();
  const std::size_t dv = v.dim(), dw = w.dim();
  // Unknowns: entries f_{kl} (row k of W, column l of V) of the given parity.
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t k = 0; k < dw; ++k) {
    for (std::size_t l = 0; l < dv; ++l) {
      if ((w.carrier[k] ^ v.carrier[l]) == parity) entries.emplace_back(k, l);
    }
  }
  LinearSystem sys(f, entries.size());
  for (Index i = 0; i < A->dim(); ++i) {
    const Scalar e = h.eps(A->basis_element(i));
    std::vector<Matrix> images;
    for (const auto& [k, l] : entries) {
      Matrix unit(f, dw, dv);
      unit.at(k, l) = f.one();
      images.push_back(act_on_map(h, v, w, unit, parity, i) - unit.scaled(e));
    }
    for (std::size_t r = 0; r < dw; ++r) {
      for (std::size_t c = 0; c < dv; ++c) {
        SparseVector row;
        for (std::size_t u = 0; u < images.size(); ++u) {
          if (!images[u].at(r, c).is_zero()) row.emplace(u, images[u].at(r, c));
        }
        if (!row.empty()) sys.add_homogeneous(row);
      }
    }
  }
  std::vector<Matrix> out;
  for (const DenseVector& x : sys.kernel_basis()) {
    Matrix m(f, dw, dv);
    for (std::size_t u = 0; u < entries.size(); ++u) m.at(entries[u].first, entries[u].second) = x[u];
    out.push_back(std::move(m));
  }
  return out;
}

ModuleMorphism module_morphism_from_invariant(const QuasiHopf& h, const Matrix& f,
                                              const Representation& v, const Representation& w) {
  require_same(h, v);
  require_same(h, w);
  if (f.rows() != w.dim() || f.cols() != v.dim()) throw Error("map has the wrong shape");
  if (!same_parity_entries(f, v.carrier, w.carrier, 0)) throw Error("odd map");
  if (!is_invariant_map(h, v, w, f, 0)) throw Error("not invariant");

  const AlgebraPtr& A = h.algebra;
  const Field fld = A->field();
  const AlgebraElement one = A->unit();

  // Σ π_W(S(X) α Y) f π_V(S(Z))
  Matrix ft(fld, w.dim(), v.dim());
  const Tensor t =
      (Tensor::pure({one, h.alpha, one}) * apply_on_legs(h.phi, {{0, h.antipode}, {2, h.antipode}}))
          .merged(0);
  for (const auto& [m, c] : t.terms()) {
    ft += (w(A->basis_element(m[0])) * f * v.matrices[m[1]]).scaled(c);
  }
  // Σ π_W(X̄) f π_V(S(Ȳ) α Z̄)
  Matrix alt(fld, w.dim(), v.dim());
  const Tensor tb =
      (Tensor::pure({one, one, h.alpha}) * apply_on_legs(h.phi_inv, {{1, h.antipode}})).merged(1);
  for (const auto& [m, c] : tb.terms()) {
    alt += (w.matrices[m[0]] * f * v(A->basis_element(m[1]))).scaled(c);
  }

  ModuleMorphism out{ft, {}};
  auto record = [&](std::string id, bool ok, std::string where = {}) {
    AxiomCheck check;
    check.id = std::move(id);
    check.passed = ok;
    check.witness_basis = std::move(where);
    out.report.checks.push_back(std::move(check));
  };
  std::string bad;
  for (Index i = 0; i < A->dim() && bad.empty(); ++i) {
    if (!(ft * v.matrices[i] == w.matrices[i] * ft)) bad = A->basis().label(i);
  }
  record("morphism-intertwines", bad.empty(), bad);
  record("morphism-beta-recovers-map", w(h.beta) * ft == f);
  record("morphism-phi-inverse-form", alt == ft);
  return out;
}

}  // namespace qhopf
