#include "qhopf/catalog.hpp"

#include <array>

namespace qhopf {

namespace {

Field Q = Field::rationals();

Scalar rat(long a, long b = 1) { return Q.from_rational(Rational(a, b)); }

Tensor pure(std::vector<AlgebraElement> f) { return Tensor::pure(f); }

LinearMap coproduct_from(const AlgebraPtr& a, std::vector<Tensor> images) {
  return LinearMap(a, {a, a}, std::move(images));
}

LinearMap counit_from(const AlgebraPtr& a, const std::vector<long>& values) {
  DenseVector v;
  for (long x : values) v.push_back(a->field().from_int(x));
  return LinearMap::functional(a, v);
}

Twistor twistor(const QuasiHopf& h, std::string name, const Tensor& f, const Tensor& f_inv) {
  return validate_twistor(std::move(name), f, f_inv, h);
}

// ---------------------------------------------------------------- Z2 group

AlgebraPtr z2_algebra() {
  GradedBasis basis({"1", "g"}, {0, 0}, 0);
  return GradedAlgebra::create(
      Q, basis, {{0, 0, 0, rat(1)}, {0, 1, 1, rat(1)}, {1, 0, 1, rat(1)}, {1, 1, 0, rat(1)}});
}

struct Z2 {
  AlgebraPtr a = z2_algebra();
  AlgebraElement one = a->unit(), g = a->element("g");
  // p₋ = (1 − g)/2
  AlgebraElement pm = (one - g).scaled(rat(1, 2));
};

Representation sign_representation(const AlgebraPtr& a) {
  Matrix one = Matrix::identity(Q, 1), minus = one.scaled(rat(-1));
  return validate_representation("sign", a, {0}, {one, minus});
}

QuasiHopf z2_structure(const Z2& z, std::string name, const Tensor& phi, const Tensor& phi_inv,
                       const AlgebraElement& alpha, const AlgebraElement& beta) {
  return QuasiHopf::assemble(std::move(name), z.a,
                             coproduct_from(z.a, {pure({z.one, z.one}), pure({z.g, z.g})}),
                             counit_from(z.a, {1, 1}), LinearMap::identity(z.a), phi, phi_inv,
                             alpha, beta);
}

void add_z2_extras(CatalogEntry& e, const Z2& z) {
  const QuasiHopf& h = e.structure;
  e.twistors.push_back(identity_twistor(h));
  // F = 1⊗1 + p₋⊗p₋; p₋ is idempotent so F⁻¹ = 1⊗1 − ½ p₋⊗p₋.
  Tensor pp = pure({z.pm, z.pm});
  e.twistors.push_back(twistor(h, "pminus", h.one(2) + pp, h.one(2) - pp.scaled(rat(1, 2))));
  e.representations.push_back(regular_representation(z.a));
  e.representations.push_back(trivial_representation(h));
  e.representations.push_back(sign_representation(z.a));
}

CatalogEntry z2_group() {
  Z2 z;
  QuasiHopf h = z2_structure(z, "z2-group", Tensor::one(z.a, 3), Tensor::one(z.a, 3), z.one, z.one);
  // R₂ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g), an involution.
  Tensor r2 = (pure({z.one, z.one}) + pure({z.one, z.g}) + pure({z.g, z.one}) - pure({z.g, z.g}))
                  .scaled(rat(1, 2));
  h.r = r2;
  h.r_inv = r2;
  CatalogEntry e{std::move(h), {}, {}, {}, "group algebra of Z2 with the non-trivial R-matrix"};
  e.other_r.push_back({"trivial", Tensor::one(z.a, 2), Tensor::one(z.a, 2)});
  add_z2_extras(e, z);
  return e;
}

CatalogEntry z2_cocycle() {
  Z2 z;
  // Φ = 1⊗1⊗1 − 2 p₋⊗p₋⊗p₋ squares to one.
  Tensor phi = Tensor::one(z.a, 3) - pure({z.pm, z.pm, z.pm}).scaled(rat(2));
  // Canonical elements are solved for, starting from a placeholder pair.
  QuasiHopf h = z2_structure(z, "z2-cocycle", phi, phi, z.one, z.one);
  auto families = solve_canonical_elements(h);
  h.alpha = families.front().alpha;
  h.beta = families.front().beta;
  CatalogEntry e{std::move(h), {}, {}, {}, "Z2 group algebra with the non-trivial 3-cocycle"};
  add_z2_extras(e, z);
  return e;
}

// ------------------------------------------------------------- Sweedler H4

AlgebraPtr sweedler_algebra() {
  // basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx
  GradedBasis basis({"1", "g", "x", "gx"}, {0, 0, 0, 0}, 0);
  std::vector<StructureConstant> c;
  for (Index i = 0; i < 4; ++i) {
    c.push_back({0, i, i, rat(1)});
    if (i) c.push_back({i, 0, i, rat(1)});
  }
  c.push_back({1, 1, 0, rat(1)});
  c.push_back({1, 2, 3, rat(1)});
  c.push_back({1, 3, 2, rat(1)});
  c.push_back({2, 1, 3, rat(-1)});
  c.push_back({3, 1, 2, rat(-1)});
  return GradedAlgebra::create(Q, basis, c);
}

struct H4 {
  AlgebraPtr a = sweedler_algebra();
  AlgebraElement one = a->unit(), g = a->element("g"), x = a->element("x"),
                 gx = a->element("gx");

  // ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + (λ/2)(x⊗x − x⊗gx + gx⊗x + gx⊗gx)
  Tensor r(long lambda) const {
    Tensor cartan = pure({one, one}) + pure({one, g}) + pure({g, one}) - pure({g, g});
    Tensor nil = pure({x, x}) - pure({x, gx}) + pure({gx, x}) + pure({gx, gx});
    return (cartan + nil.scaled(rat(lambda))).scaled(rat(1, 2));
  }
};

CatalogEntry sweedler_h4() {
  H4 s;
  auto delta = coproduct_from(s.a, {pure({s.one, s.one}), pure({s.g, s.g}),
                                    pure({s.x, s.one}) + pure({s.g, s.x}),
                                    pure({s.gx, s.g}) + pure({s.one, s.gx})});
  auto antipode = LinearMap::endomorphism(s.a, {s.one, s.g, -s.gx, s.x});
  QuasiHopf h = QuasiHopf::assemble("sweedler-h4", s.a, delta, counit_from(s.a, {1, 1, 0, 0}),
                                    antipode, Tensor::one(s.a, 3), Tensor::one(s.a, 3), s.one,
                                    s.one);
  Tensor r = s.r(1);
  auto r_inv = inverse(r);
  h.r = r;
  h.r_inv = *r_inv;
  CatalogEntry e{std::move(h), {}, {}, {}, "Sweedler's four-dimensional Hopf algebra"};
  Tensor r0 = s.r(0);
  e.other_r.push_back({"lambda-0", r0, *inverse(r0)});
  e.twistors.push_back(identity_twistor(e.structure));
  // (x⊗gx)² = 0
  Tensor n = pure({s.x, s.gx});
  e.twistors.push_back(twistor(e.structure, "Ft", e.structure.one(2) + n, e.structure.one(2) - n));
  e.representations.push_back(regular_representation(s.a));
  e.representations.push_back(trivial_representation(e.structure));
  return e;
}

CatalogEntry sweedler_twisted() {
  CatalogEntry base = sweedler_h4();
  return twist_entry(base, base.twistor("Ft"), "sweedler-twisted",
                     "Sweedler's algebra twisted by 1⊗1 + x⊗gx", false);
}

// ---------------------------------------------------------- Grassmann pair

CatalogEntry grassmann_theta() {
  GradedBasis basis({"1", "theta"}, {0, 1}, 0);
  AlgebraPtr a = GradedAlgebra::create(Q, basis, {{0, 0, 0, rat(1)}, {0, 1, 1, rat(1)},
                                                  {1, 0, 1, rat(1)}});
  AlgebraElement one = a->unit(), th = a->element("theta");
  auto delta = coproduct_from(a, {pure({one, one}), pure({th, one}) + pure({one, th})});
  QuasiHopf h = QuasiHopf::assemble("grassmann-theta", a, delta, counit_from(a, {1, 0}),
                                    LinearMap::endomorphism(a, {one, -th}), Tensor::one(a, 3),
                                    Tensor::one(a, 3), one, one);
  // R = 1⊗1 + c θ⊗θ satisfies every R-matrix axiom for all c; c = 1 is used.
  Tensor tt = pure({th, th});
  h.r = h.one(2) + tt;
  h.r_inv = h.one(2) - tt;
  CatalogEntry e{std::move(h), {}, {}, {}, "exterior algebra on one odd generator"};
  e.other_r.push_back({"trivial", e.structure.one(2), e.structure.one(2)});
  e.twistors.push_back(identity_twistor(e.structure));
  e.twistors.push_back(twistor(e.structure, "theta", e.structure.one(2) + tt, e.structure.one(2) - tt));
  e.representations.push_back(regular_representation(a));
  e.representations.push_back(trivial_representation(e.structure));
  return e;
}

// ------------------------------------------------------- small quantum sl2

// u_q(sl2) at a primitive cube root of unity q: E³ = F³ = 0, K³ = 1,
// KE = q²EK, KF = q⁻²FK, EF − FE = (K − K⁻¹)/(q − q⁻¹). PBW basis E^a F^b K^c.
constexpr int kL = 3;

Index pbw(int a, int b, int c) { return static_cast<Index>((a * kL + b) * kL + c); }

CatalogEntry small_uqsl2() {
  const Field f = Field::cyclotomic(kL);
  const Scalar q = f.generator();
  const Scalar qi = q.inv();
  const Scalar dq = (q - qi).inv();
  auto qint = [&](int n) { return (q.pow(n) - q.pow(-n)) * dq; };

  using Vec = std::map<Index, Scalar>;
  auto add = [](Vec& v, Index i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) v.erase(it);
    }
  };
  auto mod = [](int c) { return ((c % kL) + kL) % kL; };
  // Right multiplication of E^a F^b K^c by one generator.
  auto times_k = [&](const Vec& v) {
    Vec out;
    for (const auto& [i, c] : v) add(out, pbw(i / 9, i / 3 % 3, mod(i % 3 + 1)), c);
    return out;
  };
  auto times_f = [&](const Vec& v) {
    Vec out;
    for (const auto& [i, c] : v) {
      int a = i / 9, b = i / 3 % 3, k = i % 3;
      if (b + 1 < kL) add(out, pbw(a, b + 1, k), c * q.pow(-2 * k));
    }
    return out;
  };
  auto times_e = [&](const Vec& v) {
    Vec out;
    for (const auto& [i, c] : v) {
      int a = i / 9, b = i / 3 % 3, k = i % 3;
      // K^k E = q^{2k} E K^k, and F^b E = E F^b − [b] F^{b−1}(q^{1−b}K − q^{b−1}K⁻¹)/(q − q⁻¹)
      Scalar s = c * q.pow(2 * k);
      if (a + 1 < kL) add(out, pbw(a + 1, b, k), s);
      if (b > 0) {
        Scalar t = s * qint(b) * dq;
        add(out, pbw(a, b - 1, mod(k + 1)), -t * q.pow(1 - b));
        add(out, pbw(a, b - 1, mod(k - 1)), t * q.pow(b - 1));
      }
    }
    return out;
  };

  std::vector<std::string> labels;
  for (int a = 0; a < kL; ++a) {
    for (int b = 0; b < kL; ++b) {
      for (int c = 0; c < kL; ++c) {
        std::string l;
        if (a) l += a == 1 ? "E" : "E^" + std::to_string(a);
        if (b) l += b == 1 ? "F" : "F^" + std::to_string(b);
        if (c) l += c == 1 ? "K" : "K^" + std::to_string(c);
        labels.push_back(l.empty() ? "1" : l);
      }
    }
  }
  std::vector<StructureConstant> consts;
  for (Index i = 0; i < 27; ++i) {
    for (Index j = 0; j < 27; ++j) {
      Vec v{{i, f.one()}};
      for (Index n = 0; n < j / 9; ++n) v = times_e(v);
      for (Index n = 0; n < j / 3 % 3; ++n) v = times_f(v);
      for (Index n = 0; n < j % 3; ++n) v = times_k(v);
      for (const auto& [k, c] : v) consts.push_back({i, j, k, c});
    }
  }
  AlgebraPtr A = GradedAlgebra::create(f, GradedBasis(labels, std::vector<Parity>(27, 0), 0), consts);
  const AlgebraElement one = A->unit(), E = A->element("E"), F = A->element("F"),
                       K = A->element("K"), Ki = A->element("K^2");
  auto power = [&](const AlgebraElement& x, int n) {
    AlgebraElement p = one;
    for (int k = 0; k < n; ++k) p = p * x;
    return p;
  };
  auto tpower = [&](const Tensor& x, int n) {
    Tensor p = Tensor::one(A, x.rank());
    for (int k = 0; k < n; ++k) p = p * x;
    return p;
  };

  const Tensor dE = pure({E, K}) + pure({one, E}), dF = pure({F, one}) + pure({Ki, F}),
               dK = pure({K, K});
  std::vector<Tensor> delta;
  std::vector<AlgebraElement> anti;
  DenseVector eps;
  const AlgebraElement sE = -(E * Ki), sF = -(K * F), sK = Ki;
  for (int a = 0; a < kL; ++a) {
    for (int b = 0; b < kL; ++b) {
      for (int c = 0; c < kL; ++c) {
        delta.push_back(tpower(dE, a) * tpower(dF, b) * tpower(dK, c));
        anti.push_back(power(sK, c) * power(sF, b) * power(sE, a));
        eps.push_back(a == 0 && b == 0 ? f.one() : f.zero());
      }
    }
  }
  QuasiHopf h = QuasiHopf::assemble("small-uqsl2", A, LinearMap(A, {A, A}, delta),
                                    LinearMap::functional(A, eps),
                                    LinearMap::endomorphism(A, anti), Tensor::one(A, 3),
                                    Tensor::one(A, 3), one, one);

  // R = (1/3) Σ_{i,j} q^{ij} K^i ⊗ K^j · Σ_n (q − q⁻¹)^n / [n]! q^{n(n−1)/2} E^n ⊗ F^n
  Tensor cartan(f, {A, A});
  for (int i = 0; i < kL; ++i) {
    for (int j = 0; j < kL; ++j) {
      cartan += pure({power(K, i), power(K, j)}).scaled(q.pow(i * j) * f.from_rational(Rational(1, kL)));
    }
  }
  Tensor nil(f, {A, A});
  Scalar fact = f.one();
  for (int n = 0; n < kL; ++n) {
    if (n) fact *= qint(n);
    Scalar c = (q - qi).pow(n) * fact.inv() * q.pow(n * (n - 1) / 2);
    nil += pure({power(E, n), power(F, n)}).scaled(c);
  }
  h.r = cartan * nil;
  h.r_inv = inverse(*h.r);
  if (!h.r_inv) throw Error("small-uqsl2: R-matrix is not invertible");
  CatalogEntry e{std::move(h), {}, {}, {}, "small quantum group of sl2 at a primitive cube root of unity"};
  e.twistors.push_back(identity_twistor(e.structure));
  e.representations.push_back(trivial_representation(e.structure));
  return e;
}

}  // namespace

CatalogEntry twist_entry(const CatalogEntry& base, const Twistor& f, std::string name,
                         std::string notes, bool verify) {
  QuasiHopf h = twist_structure(base.structure, f, verify, std::move(name));
  CatalogEntry e{std::move(h), {}, base.representations, {}, std::move(notes)};
  for (const auto& r : base.other_r) {
    e.other_r.push_back({r.name, f.f.permuted({1, 0}) * r.r * f.f_inv,
                         f.f * r.r_inv * f.f_inv.permuted({1, 0})});
  }
  if (f.f == base.structure.one(2)) {
    e.twistors = base.twistors;
  } else {
    e.twistors.push_back(identity_twistor(e.structure));
    e.twistors.push_back(validate_twistor("untwist", f.f_inv, f.f, e.structure));
  }
  return e;
}

const Twistor& CatalogEntry::twistor(std::string_view name) const {
  for (const auto& t : twistors) {
    if (t.name == name) return t;
  }
  throw Error("unknown twistor '" + std::string(name) + "'");
}

const Representation& CatalogEntry::representation(std::string_view name) const {
  for (const auto& r : representations) {
    if (r.name == name) return r;
  }
  throw Error("unknown representation '" + std::string(name) + "'");
}

QuasiHopf CatalogEntry::with_r(std::string_view name) const {
  for (const auto& r : other_r) {
    if (r.name == name) {
      QuasiHopf h = structure;
      h.r = r.r;
      h.r_inv = r.r_inv;
      return h;
    }
  }
  throw Error("unknown R-matrix '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"z2-group", "z2-cocycle", "sweedler-h4", "grassmann-theta", "sweedler-twisted",
          "small-uqsl2"};
}

bool is_stretch_builtin(std::string_view name) { return name == "small-uqsl2"; }

CatalogEntry load_builtin(std::string_view name, bool verify) {
  CatalogEntry e = [&] {
    if (name == "z2-group") return z2_group();
    if (name == "z2-cocycle") return z2_cocycle();
    if (name == "sweedler-h4") return sweedler_h4();
    if (name == "grassmann-theta") return grassmann_theta();
    if (name == "sweedler-twisted") return sweedler_twisted();
    if (name == "small-uqsl2") return small_uqsl2();
    throw Error("unknown built-in '" + std::string(name) + "'");
  }();
  if (verify) {
    AxiomReport rep = verify_all(e.structure);
    if (!rep.passed()) throw VerificationFailure(std::move(rep));
  }
  return e;
}

}  // namespace qhopf
