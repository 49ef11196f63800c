#include "qhopf/twisting.hpp"

namespace qhopf {

namespace {

bool counit_property(const Tensor& f, const QuasiHopf& h) {
  Tensor one = h.one(1);
  return apply_on_legs(f, {{0, h.counit}}) == one && apply_on_legs(f, {{1, h.counit}}) == one;
}

}  // namespace

Twistor validate_twistor(std::string name, Tensor f, std::optional<Tensor> f_inv,
                         const QuasiHopf& h) {
  if (f.rank() != 2 || !same_algebra(f.leg(0), h.algebra) || !same_algebra(f.leg(1), h.algebra)) {
    throw InvalidStructure("twistor '" + name + "' must lie in A ⊗ A");
  }
  if (!f_inv) {
    f_inv = inverse(f);
    if (!f_inv) throw NotInvertible("twistor '" + name + "' is not invertible");
  }
  const Tensor one = h.one(2);
  if (!(f * *f_inv == one) || !(*f_inv * f == one)) {
    throw NotInvertible("twistor '" + name + "': supplied inverse is not an inverse");
  }
  if (!counit_property(f, h)) throw Error("twistor '" + name + "': counit property fails");
  return Twistor{std::move(name), std::move(f), std::move(*f_inv)};
}

Twistor identity_twistor(const QuasiHopf& h) {
  return Twistor{"identity", h.one(2), h.one(2)};
}

QuasiHopf twist_structure(const QuasiHopf& h, const Twistor& tw, bool verify, std::string name) {
  h.check_well_formed();
  const auto& A = h.algebra;
  const Tensor& F = tw.f;
  const Tensor& Fi = tw.f_inv;
  const LinearMap& D = h.coproduct;
  const LinearMap& S = h.antipode;
  const Tensor one1 = h.one(1);

  std::vector<Tensor> images;
  for (Index i = 0; i < A->dim(); ++i) images.push_back(F * h.delta(A->basis_element(i)) * Fi);
  LinearMap coproduct(A, {A, A}, std::move(images));

  Tensor phi = outer(F, one1) * apply_on_legs(F, {{0, D}}) * h.phi *
               apply_on_legs(Fi, {{1, D}}) * outer(one1, Fi);
  Tensor phi_inv = outer(one1, F) * apply_on_legs(F, {{1, D}}) * h.phi_inv *
                   apply_on_legs(Fi, {{0, D}}) * outer(Fi, one1);

  const AlgebraElement u = A->unit();
  AlgebraElement alpha = (Tensor::pure({u, h.alpha}) * apply_on_legs(Fi, {{0, S}})).multiply_out();
  AlgebraElement beta = (Tensor::pure({u, h.beta}) * apply_on_legs(F, {{1, S}})).multiply_out();

  std::optional<Tensor> r, r_inv;
  if (h.r) {
    r = F.permuted({1, 0}) * *h.r * Fi;
    r_inv = F * *h.r_inv * Fi.permuted({1, 0});
  }

  if (name.empty()) name = h.name + "/" + tw.name;
  QuasiHopf out{std::move(name), A,       std::move(coproduct), h.counit,
                S,               h.antipode_inv, std::move(phi),  std::move(phi_inv),
                std::move(alpha), std::move(beta), std::move(r), std::move(r_inv)};
  out.check_well_formed();
  if (verify) {
    AxiomReport rep = verify_all(out);
    if (!rep.passed()) throw VerificationFailure(std::move(rep));
  }
  return out;
}

AxiomReport check_twisted_canonical_identities(const QuasiHopf& h, const Twistor& tw,
                                               const QuasiHopf& twisted) {
  AxiomReport rep;
  const AlgebraElement u = h.algebra->unit();
  const LinearMap& S = h.antipode;
  auto record = [&](std::string id, const AlgebraElement& lhs, const AlgebraElement& rhs) {
    AxiomCheck c;
    c.id = std::move(id);
    AlgebraElement d = lhs - rhs;
    if (!d.is_zero()) {
      c.passed = false;
      c.witness = Tensor::from_element(d);
    }
    rep.checks.push_back(std::move(c));
  };
  AlgebraElement beta =
      (Tensor::pure({u, twisted.beta}) * apply_on_legs(tw.f_inv, {{1, S}})).multiply_out();
  record("twist-recovers-beta", beta, h.beta);
  AlgebraElement alpha =
      (Tensor::pure({u, twisted.alpha}) * apply_on_legs(tw.f, {{0, S}})).multiply_out();
  record("twist-recovers-alpha", alpha, h.alpha);
  return rep;
}

AxiomReport check_composite_twist(const QuasiHopf& h, const Twistor& f, const Twistor& g) {
  QuasiHopf hf = twist_structure(h, f, false);
  QuasiHopf hfg = twist_structure(hf, g, false);
  Twistor gf{g.name + "*" + f.name, g.f * f.f, f.f_inv * g.f_inv};
  QuasiHopf once = twist_structure(h, gf, false);
  AxiomReport rep;
  AxiomCheck c;
  c.id = "composite-twist-coproduct";
  for (Index i = 0; i < h.algebra->dim() && c.passed; ++i) {
    AlgebraElement a = h.algebra->basis_element(i);
    Tensor d = hfg.delta(a) - once.delta(a);
    if (!d.is_zero()) {
      c.passed = false;
      c.witness = d;
      c.witness_basis = h.algebra->basis().label(i);
    }
  }
  rep.checks.push_back(std::move(c));
  return rep;
}

}  // namespace qhopf
