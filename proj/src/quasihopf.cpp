#include "qhopf/quasihopf.hpp"

#include <algorithm>
#include <set>

namespace qhopf {

namespace {

using Clock = std::chrono::steady_clock;
using Failure = std::optional<std::pair<Tensor, std::string>>;

template <class Body>
void run_check(AxiomReport& report, std::string id, Body&& body) {
  AxiomCheck check;
  check.id = std::move(id);
  auto start = Clock::now();
  Failure f = body();
  check.elapsed = Clock::now() - start;
  if (f) {
    check.passed = false;
    check.witness = std::move(f->first);
    check.witness_basis = std::move(f->second);
  }
  report.checks.push_back(std::move(check));
}

Failure compare(const Tensor& lhs, const Tensor& rhs, std::string where = {}) {
  Tensor d = lhs - rhs;
  if (d.is_zero()) return std::nullopt;
  return std::make_pair(std::move(d), std::move(where));
}

Failure compare(const AlgebraElement& lhs, const AlgebraElement& rhs, std::string where = {}) {
  return compare(Tensor::from_element(lhs), Tensor::from_element(rhs), std::move(where));
}

Failure compare(const Scalar& lhs, const Scalar& rhs, std::string where = {}) {
  return compare(Tensor::scalar(lhs), Tensor::scalar(rhs), std::move(where));
}

template <class F>
Failure over_basis(const QuasiHopf& h, F&& f) {
  for (Index i = 0; i < h.algebra->dim(); ++i) {
    if (Failure r = f(h.algebra->basis_element(i), h.algebra->basis().label(i))) return r;
  }
  return std::nullopt;
}

template <class F>
Failure over_basis_pairs(const QuasiHopf& h, F&& f) {
  const auto& b = h.algebra->basis();
  for (Index i = 0; i < h.algebra->dim(); ++i) {
    for (Index j = 0; j < h.algebra->dim(); ++j) {
      if (Failure r = f(h.algebra->basis_element(i), h.algebra->basis_element(j),
                        b.label(i) + "*" + b.label(j))) {
        return r;
      }
    }
  }
  return std::nullopt;
}

// Odd component of a tensor, used as the witness for evenness checks.
Failure odd_part(const Tensor& t) {
  Tensor odd(t.field(), t.legs());
  for (const auto& [m, c] : t.terms()) {
    if (t.parity(m)) odd.add_term(m, c);
  }
  if (odd.is_zero()) return std::nullopt;
  return std::make_pair(std::move(odd), std::string());
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidStructure(what);
}

}  // namespace

// ------------------------------------------------------------ AxiomReport

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

const AxiomCheck* AxiomReport::find(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

AxiomReport& AxiomReport::append(const AxiomReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  return *this;
}

std::string AxiomReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.id;
    if (!c.passed) {
      if (!c.witness_basis.empty()) out += " [" + c.witness_basis + "]";
      if (c.witness) out += ": " + c.witness->to_string();
    }
    out += "\n";
  }
  return out;
}

// -------------------------------------------------------------- QuasiHopf

QuasiHopf QuasiHopf::assemble(std::string name, AlgebraPtr algebra, LinearMap coproduct,
                              LinearMap counit, LinearMap antipode, Tensor phi, Tensor phi_inv,
                              AlgebraElement alpha, AlgebraElement beta, std::optional<Tensor> r,
                              std::optional<Tensor> r_inv) {
  std::optional<LinearMap> s_inv = antipode.inverse();
  QuasiHopf h{std::move(name), std::move(algebra), std::move(coproduct), std::move(counit),
              std::move(antipode), std::move(s_inv), std::move(phi), std::move(phi_inv),
              std::move(alpha), std::move(beta), std::move(r), std::move(r_inv)};
  h.check_well_formed();
  return h;
}

void QuasiHopf::check_well_formed() const {
  require(algebra != nullptr, "structure has no algebra");
  auto on_algebra = [&](const std::vector<AlgebraPtr>& legs, std::size_t rank) {
    return legs.size() == rank && std::all_of(legs.begin(), legs.end(), [&](const AlgebraPtr& l) {
             return same_algebra(l, algebra);
           });
  };
  require(same_algebra(coproduct.source(), algebra) && on_algebra(coproduct.target_legs(), 2),
          "coproduct must map A to A ⊗ A");
  require(same_algebra(counit.source(), algebra) && counit.target_rank() == 0,
          "counit must map A to the ground field");
  require(same_algebra(antipode.source(), algebra) && on_algebra(antipode.target_legs(), 1),
          "antipode must map A to A");
  require(coproduct.parity_preserving(), "coproduct does not preserve parity");
  require(counit.parity_preserving(), "counit is nonzero on odd elements");
  require(antipode.parity_preserving(), "antipode does not preserve parity");
  require(on_algebra(phi.legs(), 3), "co-associator must lie in A ⊗ A ⊗ A");
  require(on_algebra(phi_inv.legs(), 3), "inverse co-associator must lie in A ⊗ A ⊗ A");
  require(same_algebra(alpha.algebra(), algebra) && same_algebra(beta.algebra(), algebra),
          "canonical elements must lie in A");
  require(r.has_value() == r_inv.has_value(), "R-matrix and its inverse must be given together");
  if (r) {
    require(on_algebra(r->legs(), 2), "R-matrix must lie in A ⊗ A");
    require(on_algebra(r_inv->legs(), 2), "inverse R-matrix must lie in A ⊗ A");
  }
}

AlgebraElement QuasiHopf::s_inv(const AlgebraElement& a) const {
  return require_antipode_inv()(a);
}

const LinearMap& QuasiHopf::require_antipode_inv() const {
  if (!antipode_inv) throw Error("antipode is not invertible");
  return *antipode_inv;
}

const Tensor& QuasiHopf::r_matrix() const {
  if (!r) throw Error("no R-matrix");
  return *r;
}

const Tensor& QuasiHopf::r_matrix_inv() const {
  if (!r_inv) throw Error("no R-matrix");
  return *r_inv;
}

Tensor relabel(const Tensor& t, std::string_view legs) {
  std::vector<std::size_t> perm;
  for (char c : legs) {
    if (c < '1' || c > '9') throw Error("bad leg label");
    perm.push_back(static_cast<std::size_t>(c - '1'));
  }
  return t.permuted(perm);
}

Tensor leg_embed(const Tensor& r, std::size_t i, std::size_t j, std::size_t rank) {
  if (r.rank() != 2 || i == j || i == 0 || j == 0) throw Error("leg_embed: bad legs");
  std::array<std::size_t, 2> pos{std::min(i, j) - 1, std::max(i, j) - 1};
  const Tensor ordered = i < j ? r : r.permuted({1, 0});
  return ordered.embedded(pos, rank, r.leg(0));
}

// --------------------------------------------------------------- verifiers

AxiomReport verify_quasi_bialgebra(const QuasiHopf& h) {
  h.check_well_formed();
  AxiomReport rep;
  const auto& A = h.algebra;
  const LinearMap& D = h.coproduct;
  const LinearMap& E = h.counit;

  run_check(rep, "coproduct-multiplicative", [&] {
    return over_basis_pairs(h, [&](const AlgebraElement& a, const AlgebraElement& b,
                                   const std::string& w) {
      return compare(h.delta(a * b), h.delta(a) * h.delta(b), w);
    });
  });
  run_check(rep, "coproduct-unital", [&] { return compare(h.delta(A->unit()), h.one(2)); });
  run_check(rep, "counit-multiplicative", [&] {
    return over_basis_pairs(h, [&](const AlgebraElement& a, const AlgebraElement& b,
                                   const std::string& w) {
      return compare(h.eps(a * b), h.eps(a) * h.eps(b), w);
    });
  });
  run_check(rep, "counit-unital", [&] { return compare(h.eps(A->unit()), h.field().one()); });
  run_check(rep, "phi-invertible", [&] {
    if (Failure f = compare(h.phi * h.phi_inv, h.one(3))) return f;
    return compare(h.phi_inv * h.phi, h.one(3));
  });
  run_check(rep, "phi-even", [&] {
    if (Failure f = odd_part(h.phi)) return f;
    return odd_part(h.phi_inv);
  });
  run_check(rep, "quasi-coassociativity", [&] {
    return over_basis(h, [&](const AlgebraElement& a, const std::string& w) {
      Tensor d = h.delta(a);
      Tensor lhs = apply_on_legs(d, {{1, D}});
      Tensor rhs = h.phi_inv * apply_on_legs(d, {{0, D}}) * h.phi;
      return compare(lhs, rhs, w);
    });
  });
  run_check(rep, "pentagon", [&] {
    Tensor lhs = apply_on_legs(h.phi, {{0, D}}) * apply_on_legs(h.phi, {{2, D}});
    Tensor rhs = outer(h.phi, h.one(1)) * apply_on_legs(h.phi, {{1, D}}) *
                 outer(h.one(1), h.phi);
    return compare(lhs, rhs);
  });
  run_check(rep, "counit-coproduct", [&] {
    return over_basis(h, [&](const AlgebraElement& a, const std::string& w) {
      Tensor d = h.delta(a);
      if (Failure f = compare(apply_on_legs(d, {{0, E}}), Tensor::from_element(a), w)) return f;
      return compare(apply_on_legs(d, {{1, E}}), Tensor::from_element(a), w);
    });
  });
  run_check(rep, "phi-counit-middle",
            [&] { return compare(apply_on_legs(h.phi, {{1, E}}), h.one(2)); });
  run_check(rep, "phi-counit-outer", [&] {
    if (Failure f = compare(apply_on_legs(h.phi, {{0, E}}), h.one(2))) return f;
    return compare(apply_on_legs(h.phi, {{2, E}}), h.one(2));
  });
  return rep;
}

AxiomReport verify_antipode_axioms(const QuasiHopf& h) {
  return verify_antipode_axioms(h, h.alpha, h.beta);
}

AxiomReport verify_antipode_axioms(const QuasiHopf& h, const AlgebraElement& alpha,
                                   const AlgebraElement& beta) {
  h.check_well_formed();
  AxiomReport rep;
  const auto& A = h.algebra;
  const LinearMap& S = h.antipode;
  const AlgebraElement one = A->unit();

  run_check(rep, "antipode-antihomomorphism", [&]() -> Failure {
    auto f = find_antihomomorphism_failure(S);
    if (!f) return std::nullopt;
    return std::make_pair(Tensor::from_element(f->difference),
                          A->basis().label(f->a) + "*" + A->basis().label(f->b));
  });
  run_check(rep, "canonical-elements-even", [&] {
    if (Failure f = odd_part(Tensor::from_element(alpha))) return f;
    return odd_part(Tensor::from_element(beta));
  });
  // Σ S(a₁) α a₂ = ε(a) α
  run_check(rep, "antipode-alpha", [&] {
    return over_basis(h, [&](const AlgebraElement& a, const std::string& w) {
      Tensor t = Tensor::pure({one, alpha}) * apply_on_legs(h.delta(a), {{0, S}});
      return compare(t.multiply_out(), alpha.scaled(h.eps(a)), w);
    });
  });
  // Σ a₁ β S(a₂) = ε(a) β
  run_check(rep, "antipode-beta", [&] {
    return over_basis(h, [&](const AlgebraElement& a, const std::string& w) {
      Tensor t = Tensor::pure({one, beta}) * apply_on_legs(h.delta(a), {{1, S}});
      return compare(t.multiply_out(), beta.scaled(h.eps(a)), w);
    });
  });
  // Σ X̄ β S(Ȳ) α Z̄ = 1
  run_check(rep, "antipode-phi-inverse", [&] {
    Tensor t = Tensor::pure({one, beta, alpha}) * apply_on_legs(h.phi_inv, {{1, S}});
    return compare(t.multiply_out(), one);
  });
  // Σ S(X) α Y β S(Z) = 1
  run_check(rep, "antipode-phi", [&] {
    Tensor t = Tensor::pure({one, alpha, beta}) * apply_on_legs(h.phi, {{0, S}, {2, S}});
    return compare(t.multiply_out(), one);
  });
  run_check(rep, "canonical-elements-counit",
            [&] { return compare(h.eps(alpha) * h.eps(beta), h.field().one()); });
  run_check(rep, "antipode-counit", [&] {
    return over_basis(h, [&](const AlgebraElement& a, const std::string& w) {
      return compare(h.eps(h.s(a)), h.eps(a), w);
    });
  });
  return rep;
}

AxiomReport verify_quasitriangular(const QuasiHopf& h) {
  h.check_well_formed();
  const Tensor& R = h.r_matrix();
  const Tensor& Rinv = h.r_matrix_inv();
  const LinearMap& D = h.coproduct;
  const LinearMap& E = h.counit;
  AxiomReport rep;

  run_check(rep, "r-invertible", [&] {
    if (Failure f = compare(R * Rinv, h.one(2))) return f;
    return compare(Rinv * R, h.one(2));
  });
  run_check(rep, "r-even", [&] {
    if (Failure f = odd_part(R)) return f;
    return odd_part(Rinv);
  });
  run_check(rep, "r-intertwines-coproduct", [&] {
    return over_basis(h, [&](const AlgebraElement& a, const std::string& w) {
      return compare(h.delta_op(a) * R, R * h.delta(a), w);
    });
  });
  const Tensor R12 = leg_embed(R, 1, 2, 3), R13 = leg_embed(R, 1, 3, 3),
               R23 = leg_embed(R, 2, 3, 3);
  run_check(rep, "r-coproduct-first-leg", [&] {
    Tensor rhs = relabel(h.phi_inv, "231") * R13 * relabel(h.phi, "132") * R23 * h.phi_inv;
    return compare(apply_on_legs(R, {{0, D}}), rhs);
  });
  run_check(rep, "r-coproduct-second-leg", [&] {
    Tensor rhs = relabel(h.phi, "312") * R13 * relabel(h.phi_inv, "213") * R12 * h.phi;
    return compare(apply_on_legs(R, {{1, D}}), rhs);
  });
  run_check(rep, "r-counit", [&] {
    if (Failure f = compare(apply_on_legs(R, {{0, E}}), h.one(1))) return f;
    return compare(apply_on_legs(R, {{1, E}}), h.one(1));
  });
  return rep;
}

AxiomReport verify_quasi_ybe(const QuasiHopf& h) {
  h.check_well_formed();
  const Tensor& R = h.r_matrix();
  AxiomReport rep;
  run_check(rep, "quasi-yang-baxter", [&] {
    const Tensor R12 = leg_embed(R, 1, 2, 3), R13 = leg_embed(R, 1, 3, 3),
                 R23 = leg_embed(R, 2, 3, 3);
    Tensor lhs = R12 * relabel(h.phi_inv, "231") * R13 * relabel(h.phi, "132") * R23 * h.phi_inv;
    Tensor rhs = relabel(h.phi_inv, "321") * R23 * relabel(h.phi, "312") * R13 *
                 relabel(h.phi_inv, "213") * R12;
    return compare(lhs, rhs);
  });
  return rep;
}

AxiomReport verify_all(const QuasiHopf& h) {
  AxiomReport rep = verify_quasi_bialgebra(h);
  rep.append(verify_antipode_axioms(h));
  if (h.has_r()) {
    rep.append(verify_quasitriangular(h));
    rep.append(verify_quasi_ybe(h));
  }
  return rep;
}

// ------------------------------------------------------ canonical elements

namespace {

// Linear constraints "Σ_k x_k columns[k] = rhs" over the basis of A.
void add_constraints(LinearSystem& sys, const std::vector<AlgebraElement>& columns,
                     const AlgebraElement& rhs) {
  const std::size_t dim = rhs.algebra()->dim();
  for (Index m = 0; m < dim; ++m) {
    SparseVector row;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      Scalar c = columns[k].coeff(m);
      if (!c.is_zero()) row.emplace(k, c);
    }
    sys.add_equation(row, rhs.coeff(m));
  }
}

struct Term3 {
  AlgebraElement a, b, c;
  Scalar coeff;
};

std::vector<Term3> terms3(const Tensor& t) {
  std::vector<Term3> out;
  const auto& A = t.leg(0);
  for (const auto& [m, c] : t.terms()) {
    out.push_back({A->basis_element(m[0]), A->basis_element(m[1]), A->basis_element(m[2]), c});
  }
  return out;
}

}  // namespace

std::vector<CanonicalFamily> solve_canonical_elements(const QuasiHopf& h) {
  h.check_well_formed();
  const auto& A = h.algebra;
  const LinearMap& S = h.antipode;
  const AlgebraElement one = A->unit(), zero = A->zero();

  std::vector<AlgebraElement> even;
  for (Index i = 0; i < A->dim(); ++i) {
    if (A->parity(i) == 0) even.push_back(A->basis_element(i));
  }
  const std::size_t n = even.size();
  auto combine = [&](const DenseVector& x) {
    AlgebraElement out = zero;
    for (std::size_t k = 0; k < n; ++k) out += even[k].scaled(x[k]);
    return out;
  };

  // Σ S(a₁) x a₂ − ε(a) x and Σ a₁ x S(a₂) − ε(a) x, for x running over the even basis.
  std::vector<std::vector<AlgebraElement>> alpha_eqs, beta_eqs;
  for (Index i = 0; i < A->dim(); ++i) {
    AlgebraElement a = A->basis_element(i);
    Tensor d = h.delta(a);
    Tensor left = apply_on_legs(d, {{0, S}}), right = apply_on_legs(d, {{1, S}});
    std::vector<AlgebraElement> ca, cb;
    for (const auto& x : even) {
      Tensor tx = Tensor::pure({one, x});
      ca.push_back((tx * left).multiply_out() - x.scaled(h.eps(a)));
      cb.push_back((tx * right).multiply_out() - x.scaled(h.eps(a)));
    }
    alpha_eqs.push_back(std::move(ca));
    beta_eqs.push_back(std::move(cb));
  }
  // (X̄, S(Ȳ), Z̄) and (S(X), Y, S(Z)) term lists.
  const auto phi_inv_terms = terms3(apply_on_legs(h.phi_inv, {{1, S}}));
  const auto phi_terms = terms3(apply_on_legs(h.phi, {{0, S}, {2, S}}));

  auto kernel = [&](const std::vector<std::vector<AlgebraElement>>& eqs) {
    LinearSystem sys(A->field(), n);
    for (const auto& cols : eqs) add_constraints(sys, cols, zero);
    return sys.kernel_basis();
  };

  std::vector<CanonicalFamily> families;
  auto record = [&](CanonicalFamily f) {
    for (const auto& g : families) {
      if (g.alpha == f.alpha && g.beta == f.beta) return;
    }
    families.push_back(std::move(f));
  };

  // β fixed: solve for α.
  for (const auto& bv : kernel(beta_eqs)) {
    AlgebraElement beta = combine(bv);
    LinearSystem sys(A->field(), n);
    for (const auto& cols : alpha_eqs) add_constraints(sys, cols, zero);
    std::vector<AlgebraElement> c3, c4;
    for (const auto& x : even) {
      AlgebraElement s3 = zero, s4 = zero;
      for (const auto& t : phi_inv_terms) s3 += (t.a * beta * t.b * x * t.c).scaled(t.coeff);
      for (const auto& t : phi_terms) s4 += (t.a * x * t.b * beta * t.c).scaled(t.coeff);
      c3.push_back(std::move(s3));
      c4.push_back(std::move(s4));
    }
    add_constraints(sys, c3, one);
    add_constraints(sys, c4, one);
    auto x = sys.particular_solution();
    if (!x) continue;
    CanonicalFamily f{combine(*x), beta, {}, {}};
    for (const auto& k : sys.kernel_basis()) f.alpha_directions.push_back(combine(k));
    record(std::move(f));
  }
  // α fixed: solve for β.
  for (const auto& av : kernel(alpha_eqs)) {
    AlgebraElement alpha = combine(av);
    LinearSystem sys(A->field(), n);
    for (const auto& cols : beta_eqs) add_constraints(sys, cols, zero);
    std::vector<AlgebraElement> c3, c4;
    for (const auto& x : even) {
      AlgebraElement s3 = zero, s4 = zero;
      for (const auto& t : phi_inv_terms) s3 += (t.a * x * t.b * alpha * t.c).scaled(t.coeff);
      for (const auto& t : phi_terms) s4 += (t.a * alpha * t.b * x * t.c).scaled(t.coeff);
      c3.push_back(std::move(s3));
      c4.push_back(std::move(s4));
    }
    add_constraints(sys, c3, one);
    add_constraints(sys, c4, one);
    auto x = sys.particular_solution();
    if (!x) continue;
    CanonicalFamily f{alpha, combine(*x), {}, {}};
    for (const auto& k : sys.kernel_basis()) f.beta_directions.push_back(combine(k));
    record(std::move(f));
  }

  // Re-verify every pair of every family against the four antipode axioms.
  static const std::set<std::string> kAxioms{"antipode-alpha", "antipode-beta",
                                             "antipode-phi-inverse", "antipode-phi"};
  auto holds = [&](const AlgebraElement& a, const AlgebraElement& b) {
    AxiomReport rep = verify_antipode_axioms(h, a, b);
    return std::all_of(rep.checks.begin(), rep.checks.end(), [](const AxiomCheck& c) {
      return !kAxioms.count(c.id) || c.passed;
    });
  };
  std::erase_if(families, [&](const CanonicalFamily& f) {
    if (!holds(f.alpha, f.beta)) return true;
    for (const auto& d : f.alpha_directions) {
      if (!holds(f.alpha + d, f.beta)) return true;
    }
    for (const auto& d : f.beta_directions) {
      if (!holds(f.alpha, f.beta + d)) return true;
    }
    return false;
  });
  if (families.empty()) throw Error("no solution");
  return families;
}

}  // namespace qhopf
