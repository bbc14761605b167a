#include "entwine/equation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "entwine/errors.hpp"

namespace entwine {

LinearSystem::Term term(std::size_t unknown, LinMap outer, std::size_t left, std::size_t right,
                        LinMap inner, int sign) {
  return LinearSystem::Term{unknown, std::move(outer), left, right, std::move(inner), sign};
}

LinearSystem::LinearSystem(FieldSpec field, std::vector<Unknown> unknowns)
    : field_(field), unknowns_(std::move(unknowns)) {
  offsets_.push_back(0);
  for (const auto& u : unknowns_)
    offsets_.push_back(offsets_.back() + u.domain.total() * u.codomain.total());
}

void LinearSystem::add(std::string name, std::vector<Term> terms, std::optional<LinMap> rhs) {
  if (terms.empty()) throw InputError("equation " + name + " has no terms");
  Equation eq{std::move(name), std::move(terms), {}, {}, std::move(rhs)};
  eq.domain = eq.terms.front().inner.domain();
  eq.codomain = eq.terms.front().outer.codomain();
  for (const auto& t : eq.terms) {
    if (t.unknown >= unknowns_.size()) throw InputError("equation " + eq.name + ": bad unknown");
    const auto& u = unknowns_[t.unknown];
    if (t.inner.domain().total() != eq.domain.total() ||
        t.outer.codomain().total() != eq.codomain.total())
      throw InputError("equation " + eq.name + ": terms disagree on source or target");
    if (t.inner.codomain().total() != t.left * u.domain.total() * t.right ||
        t.outer.domain().total() != t.left * u.codomain.total() * t.right)
      throw InputError("equation " + eq.name + ": term does not fit unknown " + u.name);
  }
  if (eq.rhs && (eq.rhs->domain().total() != eq.domain.total() ||
                 eq.rhs->codomain().total() != eq.codomain.total()))
    throw InputError("equation " + eq.name + ": right-hand side has the wrong shape");
  equations_.push_back(std::move(eq));
}

namespace {

using SparseRow = std::map<std::size_t, Scalar>;

std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns_nonzero(const Matrix& m) {
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out[c].emplace_back(r, m(r, c));
  return out;
}

std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows_nonzero(const Matrix& m) {
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out[r].emplace_back(c, m(r, c));
  return out;
}

}  // namespace

std::vector<std::vector<std::pair<std::size_t, Scalar>>> LinearSystem::assemble_block(
    const Equation& eq) const {
  const std::size_t d = eq.domain.total();
  const std::size_t e = eq.codomain.total();
  std::vector<SparseRow> block(e * d);
  for (const auto& t : eq.terms) {
    const auto& u = unknowns_[t.unknown];
    const std::size_t xr = u.codomain.total(), xc = u.domain.total();
    const auto outer_cols = columns_nonzero(t.outer.matrix());
    const auto inner_rows = rows_nonzero(t.inner.matrix());
    const Scalar sign = field_.from_int(t.sign);
    for (std::size_t s = 0; s < t.left; ++s)
      for (std::size_t tt = 0; tt < t.right; ++tt)
        for (std::size_t i = 0; i < xr; ++i) {
          const auto& ucol = outer_cols[(s * xr + i) * t.right + tt];
          if (ucol.empty()) continue;
          for (std::size_t j = 0; j < xc; ++j) {
            const auto& wrow = inner_rows[(s * xc + j) * t.right + tt];
            if (wrow.empty()) continue;
            const std::size_t var = offsets_[t.unknown] + i * xc + j;
            for (const auto& [er, ev] : ucol)
              for (const auto& [dc, dv] : wrow) {
                auto [it, inserted] = block[er * d + dc].try_emplace(var, field_.zero());
                it->second.add_product(ev * dv, sign);
              }
          }
        }
  }
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> out(block.size());
  for (std::size_t r = 0; r < block.size(); ++r)
    for (auto& [k, v] : block[r])
      if (!v.is_zero()) out[r].emplace_back(k, std::move(v));
  return out;
}

AffineSolutionSet LinearSystem::solve() const {
  const std::size_t n = variables();
  // Rows keyed by their entries (constant last) so duplicates collapse.
  std::set<std::vector<std::string>> seen;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  std::vector<Scalar> constants;

  for (const auto& eq : equations_) {
    const std::size_t d = eq.domain.total();
    auto block = assemble_block(eq);
    const Matrix* rhs = eq.rhs ? &eq.rhs->matrix() : nullptr;
    for (std::size_t r = 0; r < block.size(); ++r) {
      auto& row = block[r];
      Scalar c = rhs ? (*rhs)(r / d, r % d) : field_.zero();
      if (row.empty()) {
        if (!c.is_zero()) {
          // 0 = c with c != 0: the system is infeasible; keep one witness row.
          rows.push_back({});
          constants.push_back(c);
        }
        continue;
      }
      std::vector<std::string> key;
      key.reserve(2 * row.size() + 1);
      for (const auto& [k, v] : row) {
        key.push_back(std::to_string(k));
        key.push_back(v.str());
      }
      key.push_back(c.str());
      if (!seen.insert(std::move(key)).second) continue;
      rows.push_back(std::move(row));
      constants.push_back(std::move(c));
    }
  }

  Matrix m(field_, rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [k, v] : rows[r]) m(r, k) = v;
  return solve_affine(m, constants);
}

Matrix LinearSystem::coefficients() const {
  std::size_t total = 0;
  for (const auto& eq : equations_) total += eq.domain.total() * eq.codomain.total();
  Matrix m(field_, total, variables());
  std::size_t base = 0;
  for (const auto& eq : equations_) {
    const auto block = assemble_block(eq);
    for (std::size_t r = 0; r < block.size(); ++r)
      for (const auto& [k, v] : block[r]) m(base + r, k) = v;
    base += block.size();
  }
  return m;
}

Vector LinearSystem::pack(const std::vector<LinMap>& values) const {
  if (values.size() != unknowns_.size()) throw InputError("wrong number of unknown values");
  Vector x;
  x.reserve(variables());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto& u = unknowns_[k];
    if (values[k].domain().total() != u.domain.total() ||
        values[k].codomain().total() != u.codomain.total())
      throw InputError("value for " + u.name + " has the wrong shape");
    const Vector v = vec(values[k]);
    x.insert(x.end(), v.begin(), v.end());
  }
  return x;
}

std::vector<LinMap> LinearSystem::unpack(const Vector& x) const {
  if (x.size() != variables()) throw InputError("solution vector has the wrong length");
  std::vector<LinMap> out;
  for (std::size_t k = 0; k < unknowns_.size(); ++k) {
    Vector part(x.begin() + static_cast<std::ptrdiff_t>(offsets_[k]),
                x.begin() + static_cast<std::ptrdiff_t>(offsets_[k + 1]));
    out.push_back(unvec(field_, unknowns_[k].domain, unknowns_[k].codomain, part));
  }
  return out;
}

LinMap LinearSystem::evaluate(const Equation& eq, const std::vector<LinMap>& values) const {
  LinMap sum = LinMap::zero(field_, eq.domain, eq.codomain);
  for (const auto& t : eq.terms) {
    const LinMap mid = kron({LinMap::identity(field_, TensorShape{t.left}), values[t.unknown],
                             LinMap::identity(field_, TensorShape{t.right})});
    LinMap v = t.outer * (mid * t.inner);
    sum = t.sign > 0 ? sum + v : sum - v;
  }
  return sum.reshaped(eq.domain, eq.codomain);
}

CheckReport LinearSystem::check(const std::vector<LinMap>& values, bool homogeneous) const {
  if (values.size() != unknowns_.size()) throw InputError("wrong number of unknown values");
  CheckReport report;
  for (const auto& eq : equations_) {
    const LinMap lhs = evaluate(eq, values);
    const LinMap rhs = (eq.rhs && !homogeneous) ? eq.rhs->reshaped(eq.domain, eq.codomain)
                                                 : LinMap::zero(field_, eq.domain, eq.codomain);
    report.expect_equal(eq.name, lhs, rhs);
  }
  return report;
}

}  // namespace entwine
