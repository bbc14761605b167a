#include "entwine/separability.hpp"

#include <algorithm>

#include "entwine/errors.hpp"

namespace entwine {

namespace {

LinMap one(FieldSpec k) { return LinMap::identity(k, TensorShape{}); }

TensorShape q_shape(const GaloisExtension& g) { return TensorShape{g.AtensBA.dim()}; }

Vector column(const LinMap& m) { return m.matrix().column_vector(0); }

// Adds (i)-(iii) for the unknown φ at position `idx`.
void add_split_constraints(LinearSystem& sys, const GaloisExtension& g, std::size_t idx) {
  const std::size_t da = g.alg.dim(), dc = g.coalg.dim(), db = g.B.dim();
  const LinMap ia = g.alg.id(), ic = g.coalg.id();
  const LinMap& mu = g.alg.mult;
  const LinMap r1 = LinMap::from_vector(g.alg.shape() * g.coalg.shape(), g.rho_one());
  const LinMap ib = g.B.inclusion();
  sys.add("(i)", {term(idx, g.psi.psi, dc, 1, g.coalg.comult),
                  term(idx, kron(mu, ic) * kron(ia, r1), 1, 1, ic, -1)});
  sys.add("(ii)", {term(idx, mu, da, 1, r1)}, g.alg.unit_map());
  sys.add("(iii)", {term(idx, mu, da, 1, g.psi.psi * kron(ic, ib)),
                    term(idx, mu * kron(ia, ib), 1, db, kron(ic, LinMap::identity(g.field(), TensorShape{db})), -1)});
}

// Value order 0, 1, -1, 2, -2, ... used by the grid search.
std::vector<Scalar> grid_values(FieldSpec k, int radius) {
  std::vector<Scalar> out{k.zero()};
  for (int r = 1; r <= radius; ++r) {
    out.push_back(k.from_int(r));
    out.push_back(k.from_int(-r));
  }
  // Over small prime fields several values coincide.
  std::vector<Scalar> unique;
  for (const auto& v : out)
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(v);
  return unique;
}

Vector combine(const AffineSolutionSet& s, const std::vector<Scalar>& coeffs) { return s.member(coeffs); }

}  // namespace

CheckReport verify_separability_idempotent(const GaloisExtension& g, const Vector& u) {
  const LinMap ul = LinMap::from_vector(q_shape(g), u);
  CheckReport r;
  r.expect_equal("a·u = u·a", left_mult_ABA(g) * kron(g.alg.id(), ul),
                 right_mult_ABA(g) * kron(ul, g.alg.id()));
  r.expect_equal("μ(u) = 1", g.mu_AB() * ul, g.alg.unit_map());
  return r;
}

SeparabilityCertificate separability_from_integral(const GaloisExtension& g, const Witness& z) {
  if (z.kind != WitnessKind::Integral || !z.normalized)
    throw InputError("a separability idempotent needs a normalised integral");
  const CheckReport zr = verify_witness(z, g.psi);
  if (!zr.passed()) throw InputError("not a normalised integral:\n" + zr.str());
  const Vector u = g.canInv.apply(column(z.value));
  const CheckReport r = verify_separability_idempotent(g, u);
  if (!r.passed()) throw InconsistencyError("can⁻¹(𝔷) is not a separability idempotent:\n" + r.str());
  return SeparabilityCertificate{u, g.AtensBA.section().apply(u), z};
}

std::optional<SeparabilityCertificate> check_separable(const GaloisExtension& g) {
  const AffineSolutionSet s = solve_witness(WitnessKind::Integral, g.psi, true);
  if (!s.feasible()) return std::nullopt;
  return separability_from_integral(
      g, Witness{WitnessKind::Integral, witness_value(WitnessKind::Integral, g.psi, *s.particular), true});
}

LinearSystem split_system(const GaloisExtension& g) {
  LinearSystem sys(g.field(), {{"phi", g.coalg.shape(), g.alg.shape()}});
  add_split_constraints(sys, g, 0);
  return sys;
}

LinMap expectation_from_phi(const GaloisExtension& g, const LinMap& phi) {
  return g.alg.mult * kron(g.alg.id(), phi.reshaped(g.coalg.shape(), g.alg.shape())) * g.rhoA;
}

LinMap phi_from_expectation(const GaloisExtension& g, const LinMap& E) {
  const LinMap ae = g.alg.mult * kron(g.alg.id(), E.reshaped(g.alg.shape(), g.alg.shape()));
  const LinMap onq = descend(ae, g.AtensBA, 1, 1, "A⊗_BE");
  return onq * g.canInv * kron(g.alg.unit_map(), g.coalg.id());
}

CheckReport verify_split(const GaloisExtension& g, const SplitCertificate& s) {
  CheckReport r = split_system(g).check({s.phi.reshaped(g.coalg.shape(), g.alg.shape())});
  const LinMap E = s.E.reshaped(g.alg.shape(), g.alg.shape());
  r.expect_equal("E unital", E * g.alg.unit_map(), g.alg.unit_map());
  for (std::size_t c = 0; c < g.alg.dim(); ++c) {
    const Vector v = E.matrix().column_vector(c);
    if (!g.B.contains(v)) {
      r.fail("E into B", {c}, "E(a) = " + to_string(v) + " is not in B");
      break;
    }
  }
  const LinMap ib = g.B.inclusion();
  const LinMap& mu = g.alg.mult;
  const LinMap ia = g.alg.id();
  r.expect_equal("E B-bilinear", E * mu * kron(mu, ia) * kron({ib, ia, ib}),
                 mu * kron(mu, ia) * kron({ib, E, ib}));
  return r;
}

SplitResult check_split(const GaloisExtension& g) {
  const LinearSystem sys = split_system(g);
  SplitResult out{sys.solve(), std::nullopt, false};
  if (!out.family.feasible()) return out;
  const LinMap phi = sys.unpack(*out.family.particular).front();
  SplitCertificate cert{phi, expectation_from_phi(g, phi)};
  const CheckReport r = verify_split(g, cert);
  if (!r.passed()) throw InconsistencyError("conditional expectation fails:\n" + r.str());
  out.cert = std::move(cert);
  out.faithfully_flat_flag = true;
  return out;
}

SplitCertificate split_from_integral_map(const GaloisExtension& g, const Witness& gamma) {
  if (gamma.kind != WitnessKind::IntegralMap || !gamma.normalized)
    throw InputError("a splitting needs a normalised integral map");
  const CheckReport gr = verify_witness(gamma, g.psi);
  if (!gr.passed()) throw InputError("not a normalised integral map:\n" + gr.str());
  const LinMap ic = g.coalg.id();
  const LinMap r1 = LinMap::from_vector(g.alg.shape() * g.coalg.shape(), g.rho_one());
  const LinMap gm = gamma.value.reshaped(g.coalg.shape() * g.coalg.shape(), g.alg.shape());
  const LinMap phi = g.alg.mult * kron(g.alg.id(), gm) * kron(g.psi.psi, ic) * kron(ic, r1);
  SplitCertificate cert{phi, expectation_from_phi(g, phi)};
  const CheckReport r = verify_split(g, cert);
  if (!r.passed()) throw InconsistencyError("φ built from γ fails:\n" + r.str());
  return cert;
}

std::optional<Scalar> strong_tau(const GaloisExtension& g, const Vector& u, const LinMap& E,
                                 CheckReport* report) {
  CheckReport local;
  CheckReport& r = report ? *report : local;
  const LinMap ia = g.alg.id();
  const LinMap& mu = g.alg.mult;
  const LinMap e = E.reshaped(g.alg.shape(), g.alg.shape());
  const LinMap rep = LinMap::from_vector(g.alg.shape() * g.alg.shape(), g.AtensBA.section().apply(u));
  const LinMap left = mu * kron(e, ia) * kron(mu, ia) * kron(ia, rep);
  const LinMap right = mu * kron(ia, e) * kron(ia, mu) * kron(rep, ia);

  const Vector at_one = left.apply(g.alg.unit);
  std::size_t pivot = g.alg.dim();
  for (std::size_t i = 0; i < g.alg.dim(); ++i)
    if (!g.alg.unit[i].is_zero()) {
      pivot = i;
      break;
    }
  const Scalar tau = at_one[pivot] / g.alg.unit[pivot];
  if (!(at_one == tau * g.alg.unit)) {
    r.fail("τ at a = 1", {}, "Σ E(u_i)u^i = " + to_string(at_one) + " is not a multiple of 1");
    return std::nullopt;
  }
  const LinMap scaled = ia * tau;
  r.expect_equal("Σ E(au_i)u^i = aτ", left, scaled);
  r.expect_equal("Σ u_iE(u^ia) = aτ", right, scaled);
  if (tau.is_zero()) r.fail("τ invertible", {}, "τ = 0");
  if (!r.passed()) return std::nullopt;
  return tau;
}

bool heuristic_free_over_B(const GaloisExtension& g) {
  const std::size_t da = g.alg.dim(), db = g.B.dim();
  if (db == 0 || da % db != 0) return false;
  const FieldSpec k = g.field();
  Subspace span = Subspace::zero(k, g.alg.shape());
  std::size_t count = 0;
  for (std::size_t i = 0; i < da && span.dim() < da; ++i) {
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < db; ++j)
      gens.push_back(g.alg.multiply(g.alg.basis(i), g.B.basis_vector(j)));
    const Subspace block = Subspace::span(k, g.alg.shape(), gens);
    const Subspace next = span + block;
    if (block.dim() == db && next.dim() == span.dim() + db) {
      span = next;
      ++count;
    }
  }
  return span.dim() == da && count * db == da;
}

namespace {

StrongResult finish(const GaloisExtension& g, const Vector& u, const Witness& z, const LinMap& phi,
                    StrongResult out) {
  SplitCertificate split{phi, expectation_from_phi(g, phi)};
  CheckReport r = verify_split(g, split);
  CheckReport sr = verify_separability_idempotent(g, u);
  r.merge(sr);
  if (!r.passed()) {
    out.diagnostic = r.str();
    return out;
  }
  CheckReport tr;
  const auto tau = strong_tau(g, u, split.E, &tr);
  if (!tau) {
    out.diagnostic = tr.str();
    return out;
  }
  out.cert = StrongCertificate{SeparabilityCertificate{u, g.AtensBA.section().apply(u), z}, split, *tau};
  out.inconclusive = false;
  out.diagnostic.clear();
  return out;
}

}  // namespace

StrongResult check_strongly_separable(const GaloisExtension& g, const StrongOptions& opts) {
  const FieldSpec k = g.field();
  StrongResult out;
  out.free_over_B = heuristic_free_over_B(g);

  if (opts.strategy == StrongStrategy::GivenWitnesses) {
    if (!opts.u || !opts.E) throw InputError("given witnesses need u and E");
    const Witness z{WitnessKind::Integral,
                    LinMap::from_vector(g.alg.shape() * g.coalg.shape(), g.can.apply(*opts.u)), true};
    out = finish(g, *opts.u, z, phi_from_expectation(g, *opts.E), std::move(out));
    if (out.cert && opts.tau && !(out.cert->tau == *opts.tau)) {
      out.diagnostic = "τ = " + out.cert->tau.str() + " differs from the given " + opts.tau->str();
      out.cert.reset();
    }
    return out;
  }

  const AffineSolutionSet zs = solve_witness(WitnessKind::Integral, g.psi, true);
  if (!zs.feasible()) {
    out.diagnostic = "no normalised integral: the extension is not separable";
    return out;
  }
  const LinearSystem split = split_system(g);
  const AffineSolutionSet fs = split.solve();
  if (!fs.feasible()) {
    out.diagnostic = "no φ satisfies (i)-(iii): the extension is not split";
    return out;
  }

  if (opts.strategy == StrongStrategy::FixedIntegralLinearPhi) {
    const LinMap z = witness_value(WitnessKind::Integral, g.psi, *zs.particular);
    LinearSystem sys(k, {{"phi", g.coalg.shape(), g.alg.shape()}, {"tau", TensorShape{}, TensorShape{}}});
    add_split_constraints(sys, g, 0);
    sys.add("Σ a_iφ(c_i) = τ", {term(0, g.alg.mult, g.alg.dim(), 1, z),
                                term(1, g.alg.unit_map(), 1, 1, one(k), -1)});
    const AffineSolutionSet s = sys.solve();
    out.inconclusive = true;
    if (!s.feasible()) {
      out.diagnostic = "no φ with Σ a_iφ(c_i) ∈ k·1 for the fixed integral";
      return out;
    }
    Vector x = *s.particular;
    const std::size_t ti = x.size() - 1;
    if (x[ti].is_zero())
      for (std::size_t b = 0; b < s.homogeneous.dim(); ++b) {
        const Vector v = s.homogeneous.basis_vector(b);
        if (!v[ti].is_zero()) {
          x = x + v;
          break;
        }
      }
    if (x[ti].is_zero()) {
      out.diagnostic = "Σ a_iφ(c_i) = τ forces τ = 0";
      return out;
    }
    const Witness zw{WitnessKind::Integral, z, true};
    const Vector u = g.canInv.apply(column(z));
    out = finish(g, u, zw, sys.unpack(x).front(), std::move(out));
    if (out.cert && !(out.cert->tau == x[ti]))
      throw InconsistencyError("τ from the identities (" + out.cert->tau.str() +
                               ") differs from Σ a_iφ(c_i) = " + x[ti].str());
    if (!out.cert && !out.free_over_B)
      out.diagnostic += "\nA is not known to be free over B, so the linearisation may miss solutions";
    return out;
  }

  // SearchParticulars.
  const std::vector<Scalar> values = grid_values(k, opts.radius);
  const std::size_t hz = zs.homogeneous.dim(), hf = fs.homogeneous.dim();
  const std::size_t params = hz + hf;
  std::vector<std::size_t> idx(params, 0);
  std::size_t visited = 0;
  bool exhausted = false;
  while (true) {
    ++visited;
    std::vector<Scalar> cz, cf;
    for (std::size_t i = 0; i < hz; ++i) cz.push_back(values[idx[i]]);
    for (std::size_t i = 0; i < hf; ++i) cf.push_back(values[idx[hz + i]]);
    const LinMap z = witness_value(WitnessKind::Integral, g.psi, combine(zs, cz));
    const Vector u = g.canInv.apply(column(z));
    StrongResult r = finish(g, u, Witness{WitnessKind::Integral, z, true},
                            split.unpack(combine(fs, cf)).front(), out);
    if (r.cert) return r;
    std::size_t p = params;
    bool carry = true;
    while (carry && p > 0) {
      --p;
      if (++idx[p] < values.size()) carry = false;
      else idx[p] = 0;
    }
    if (carry) {
      exhausted = true;
      break;
    }
    if (visited == opts.max_points) break;
  }
  out.inconclusive = true;
  out.diagnostic = exhausted ? "no grid point yields a strong certificate"
                             : "grid truncated after " + std::to_string(visited) + " points";
  return out;
}

CheckReport verify_coseparability(const Coextension& x, const LinMap& upsilon) {
  const Subspace& cot = x.CcotBC;
  const std::size_t dc = x.coalg.dim();
  const LinMap ic = x.coalg.id();
  const LinMap inc = cot.inclusion();
  const LinMap u = upsilon.reshaped(cot.coordinate_shape(), TensorShape{});
  CheckReport r;
  const LinMap left = kron(ic, u) * corestrict(kron(x.coalg.comult, ic) * inc, cot, dc, 1, "Δ⊗C on C□_BC");
  const LinMap right = kron(u, ic) * corestrict(kron(ic, x.coalg.comult) * inc, cot, 1, dc, "C⊗Δ on C□_BC");
  r.expect_equal("υ colinear", left, right);
  r.expect_equal("υΔ = ε", u * corestrict(x.coalg.comult, cot, "Δ(C)"), x.coalg.counit_map());
  return r;
}

std::optional<CoseparabilityCertificate> check_coseparable(const Coextension& x) {
  const AffineSolutionSet s = solve_witness(WitnessKind::Cointegral, x.psi, true);
  if (!s.feasible()) return std::nullopt;
  const LinMap y = witness_value(WitnessKind::Cointegral, x.psi, *s.particular);
  const LinMap upsilon = y * x.cocanInv;
  const CheckReport r = verify_coseparability(x, upsilon);
  if (!r.passed()) throw InconsistencyError("υ = 𝔶∘cocan⁻¹ fails:\n" + r.str());
  return CoseparabilityCertificate{upsilon, Witness{WitnessKind::Cointegral, y, true}};
}

}  // namespace entwine
