#include "entwine/galois.hpp"

#include "entwine/errors.hpp"

namespace entwine {

namespace {

void require(const CheckReport& r, const std::string& what) {
  if (!r.passed()) throw DomainError(what + ":\n" + r.str());
}

}  // namespace

Algebra subalgebra(const Algebra& a, const Subspace& b) {
  if (!b.contains(a.unit)) throw InputError("subspace does not contain the unit");
  const LinMap inc = b.inclusion();
  const LinMap prod = a.mult * kron(inc, inc);
  for (std::size_t c = 0; c < prod.domain().total(); ++c)
    if (!b.contains(prod.matrix().column_vector(c)))
      throw InputError("subspace is not closed under multiplication");
  const std::size_t n = b.dim();
  return make_algebra((b.retraction() * prod).reshaped(TensorShape{n, n}, TensorShape{n}),
                      b.coordinates(a.unit));
}

std::pair<Subspace, Algebra> fixed_subalgebra(const Algebra& a, const Coalgebra& c,
                                              const LinMap& rhoA) {
  if (rhoA.domain().total() != a.dim() || rhoA.codomain().total() != a.dim() * c.dim())
    throw InputError("coaction must be a map [" + std::to_string(a.dim()) + "] -> [" +
                     std::to_string(a.dim()) + "," + std::to_string(c.dim()) + "]");
  require(verify_right_comodule(c, rhoA), "not a coaction");
  const LinMap rho = rhoA.reshaped(a.shape(), a.shape() * c.shape());
  const LinMap t = rho * a.mult - kron(a.mult, c.id()) * kron(a.id(), rho);
  Subspace b = kernel_image(curry_domain_tail(t, 1)).first;
  Algebra balg;
  try {
    balg = subalgebra(a, b);
  } catch (const InputError& e) {
    throw InconsistencyError(std::string("fixed part is not a subalgebra: ") + e.what());
  }
  return {std::move(b), std::move(balg)};
}

LinMap GaloisExtension::mu_AB() const {
  return descend(alg.mult, AtensBA, 1, 1, "mu_AB");
}

GaloisExtension build_galois(const Algebra& a, const Coalgebra& c, const LinMap& rhoA) {
  if (!(a.field() == c.field()) || !(rhoA.field() == a.field()))
    throw InputError("algebra, coalgebra and coaction use different fields");
  require(verify_algebra(a), "not an algebra");
  require(verify_coalgebra(c), "not a coalgebra");
  const std::size_t da = a.dim(), dc = c.dim();
  auto [b, balg] = fixed_subalgebra(a, c, rhoA);
  const LinMap rho = rhoA.reshaped(a.shape(), a.shape() * c.shape());

  const LinMap ib = b.inclusion();
  QuotientModule q = tensor_over_A(a.mult * kron(a.id(), ib), a.mult * kron(ib, a.id()));
  if (q.dim() != da * dc)
    throw GaloisError("can is not bijective: dim(A⊗_BA) = " + std::to_string(q.dim()) +
                      " but dim(A⊗C) = " + std::to_string(da * dc));
  const LinMap can = descend(kron(a.mult, c.id()) * kron(a.id(), rho), q, 1, 1, "can")
                         .reshaped(TensorShape{q.dim()}, a.shape() * c.shape());
  LinMap canInv;
  try {
    canInv = inverse(can);
  } catch (const DomainError&) {
    throw GaloisError("can is not bijective: rank " + std::to_string(rank(can.matrix())) +
                      " < " + std::to_string(da * dc));
  }

  const LinMap right_q = descend(q.projection() * kron(a.id(), a.mult), q, 1, da, "right A-action");
  const LinMap first = canInv * kron(a.unit_map(), c.id());
  const LinMap psi = (can * right_q * kron(first, a.id())).reshaped(c.shape() * a.shape(),
                                                                     a.shape() * c.shape());
  Entwining e = trusted_entwining(a, c, psi);
  CheckReport r = verify_entwining(e);
  r.merge(verify_entwined_module(regular_module(e, rho)), "A as entwined module: ");
  if (!r.passed()) throw InconsistencyError("canonical entwining fails:\n" + r.str());
  return GaloisExtension{a, c, rho, std::move(b), std::move(balg), std::move(q), can,
                         std::move(canInv), std::move(e)};
}

std::optional<Vector> copointed_grouplike(const GaloisExtension& g) {
  const FieldSpec k = g.field();
  const std::size_t da = g.alg.dim(), dc = g.coalg.dim();
  const Vector r1 = g.rho_one();
  std::size_t pivot = da;
  for (std::size_t i = 0; i < da; ++i)
    if (!g.alg.unit[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == da) return std::nullopt;
  const Scalar inv = g.alg.unit[pivot].inverse();
  Vector e(dc, k.zero());
  for (std::size_t j = 0; j < dc; ++j) e[j] = r1[pivot * dc + j] * inv;
  if (!(kron(g.alg.unit, e) == r1)) return std::nullopt;
  if (!(g.coalg.comult.apply(e) == kron(e, e))) return std::nullopt;
  if (!g.coalg.counit_map().apply(e)[0].is_one()) return std::nullopt;
  return e;
}

LinMap left_mult_AC(const GaloisExtension& g) {
  return kron(g.alg.mult, g.coalg.id());
}

LinMap right_mult_AC(const GaloisExtension& g) {
  return kron(g.alg.mult, g.coalg.id()) * kron(g.alg.id(), g.psi.psi);
}

LinMap left_mult_ABA(const GaloisExtension& g) {
  const Quotient& q = g.AtensBA;
  const LinMap f = q.projection() * kron(g.alg.mult, g.alg.id());
  return descend(f, q, g.alg.dim(), 1, "left multiplication on A⊗_BA");
}

LinMap right_mult_ABA(const GaloisExtension& g) {
  const Quotient& q = g.AtensBA;
  const LinMap f = q.projection() * kron(g.alg.id(), g.alg.mult);
  return descend(f, q, 1, g.alg.dim(), "right multiplication on A⊗_BA");
}

CheckReport verify_galois_identities(const GaloisExtension& g) {
  CheckReport r;
  const LinMap ia = g.alg.id();
  r.expect_equal("canInv left A-linear", g.canInv * left_mult_AC(g),
                 left_mult_ABA(g) * kron(ia, g.canInv));
  r.expect_equal("canInv right A-linear", g.canInv * right_mult_AC(g),
                 right_mult_ABA(g) * kron(g.canInv, ia));
  r.expect_equal("counit of can", kron(ia, g.coalg.counit_map()) * g.can, g.mu_AB());
  r.expect_equal("can inverse left", g.can * g.canInv, LinMap::identity(g.field(), g.can.codomain()));
  r.expect_equal("can inverse right", g.canInv * g.can, LinMap::identity(g.field(), g.can.domain()));
  return r;
}

Coextension build_coextension(const Coalgebra& c, const Algebra& a, const LinMap& rhoC) {
  if (!(a.field() == c.field()) || !(rhoC.field() == a.field()))
    throw InputError("algebra, coalgebra and action use different fields");
  require(verify_algebra(a), "not an algebra");
  require(verify_coalgebra(c), "not a coalgebra");
  if (rhoC.domain().total() != c.dim() * a.dim() || rhoC.codomain().total() != c.dim())
    throw InputError("action must be a map [" + std::to_string(c.dim()) + "," +
                     std::to_string(a.dim()) + "] -> [" + std::to_string(c.dim()) + "]");
  require(verify_right_module(a, rhoC), "not an action");
  const std::size_t dc = c.dim();
  const LinMap act = rhoC.reshaped(c.shape() * a.shape(), c.shape());
  const LinMap ic = c.id();

  const LinMap d = c.comult * act - kron(ic, act) * kron(c.comult, a.id());
  Subspace i = kernel_image(uncurry_codomain_tail(d, 1)).second;
  QuotientCoalgebra b = quotient_coalgebra(c, Subspace::row_space(c.shape(), i.basis()));
  const LinMap& pi = b.projection();

  Subspace cot = cotensor(kron(ic, pi) * c.comult, kron(pi, ic) * c.comult);
  cot = Subspace::row_space(c.shape() * c.shape(), cot.basis());
  if (cot.dim() != dc * a.dim())
    throw GaloisError("cocan is not bijective: dim(C□_BC) = " + std::to_string(cot.dim()) +
                      " but dim(C⊗A) = " + std::to_string(dc * a.dim()));
  const LinMap cocan = corestrict(kron(ic, act) * kron(c.comult, a.id()), cot, "cocan");
  LinMap cocanInv;
  try {
    cocanInv = inverse(cocan);
  } catch (const DomainError&) {
    throw GaloisError("cocan is not bijective: rank " + std::to_string(rank(cocan.matrix())) +
                      " < " + std::to_string(dc * a.dim()));
  }
  cocanInv = cocanInv.reshaped(cot.coordinate_shape(), c.shape() * a.shape());

  const LinMap split = corestrict(kron(ic, c.comult) * cot.inclusion(), cot, 1, dc, "C⊗Δ on C□_BC");
  const LinMap psi = kron({c.counit_map(), a.id(), ic}) * kron(cocanInv, ic) * split * cocan;
  Entwining e = trusted_entwining(a, c, psi.reshaped(c.shape() * a.shape(), a.shape() * c.shape()));
  CheckReport r = verify_entwining(e);
  r.merge(verify_entwined_module(coregular_module(e, act)), "C as entwined module: ");
  if (!r.passed()) throw InconsistencyError("canonical entwining fails:\n" + r.str());
  return Coextension{c, a, act, std::move(i), std::move(b), std::move(cot), cocan,
                     std::move(cocanInv), std::move(e)};
}

std::optional<Vector> pointed_kappa(const Coextension& x) {
  const FieldSpec k = x.field();
  const std::size_t dc = x.coalg.dim(), da = x.alg.dim();
  std::size_t pivot = dc;
  for (std::size_t i = 0; i < dc; ++i)
    if (!x.coalg.counit[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == dc) throw InconsistencyError("counit vanishes identically");
  const LinMap eps_act = x.coalg.counit_map() * x.rhoC;
  const Scalar inv = x.coalg.counit[pivot].inverse();
  Vector kappa(da, k.zero());
  for (std::size_t j = 0; j < da; ++j) kappa[j] = eps_act.matrix()(0, pivot * da + j) * inv;
  const LinMap kap = LinMap::from_covector(x.alg.shape(), kappa);
  if (!(eps_act == kron(x.coalg.counit_map(), kap))) return std::nullopt;
  if (!(kap * x.alg.mult == kron(kap, kap))) return std::nullopt;
  if (!(kap * x.alg.unit_map() == LinMap::identity(k, TensorShape{}))) return std::nullopt;
  return kappa;
}

CheckReport verify_cotranslation(const Coextension& x, const LinMap& gamma) {
  const LinMap ic = x.coalg.id(), ia = x.alg.id();
  const LinMap gm = gamma.reshaped(x.coalg.shape() * x.coalg.shape(), x.alg.shape());
  CheckReport r;
  r.expect_equal("cot.2", x.alg.mult * kron(gm, ia), gm * kron(ic, x.rhoC));
  r.expect_equal("cot.3", x.alg.mult * kron(gm, gm) * kron({ic, x.coalg.comult, ic}),
                 gm * kron({ic, x.coalg.counit_map(), ic}));
  r.expect_equal("normalisation", gm * x.coalg.comult, x.alg.unit_map() * x.coalg.counit_map());
  return r;
}

LinMap cotranslation_map(const Coextension& x) {
  if (x.B.coalgebra.dim() != 1)
    throw PreconditionError("cotranslation map needs B = k, but dim B = " +
                            std::to_string(x.B.coalgebra.dim()));
  // C□_kC is all of C⊗C, so the retraction onto it is the identity.
  const LinMap gamma = (kron(x.coalg.counit_map(), x.alg.id()) * x.cocanInv * x.CcotBC.retraction())
                           .reshaped(x.coalg.shape() * x.coalg.shape(), x.alg.shape());
  const CheckReport r = verify_cotranslation(x, gamma);
  if (!r.passed()) throw InconsistencyError("cotranslation map fails:\n" + r.str());
  return gamma;
}

}  // namespace entwine
