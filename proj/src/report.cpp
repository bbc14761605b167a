#include "entwine/report.hpp"

#include <sstream>

#include "entwine/errors.hpp"

namespace entwine {

bool CheckReport::failed(const std::string& axiom) const {
  for (const auto& f : failures_)
    if (f.axiom == axiom) return true;
  return false;
}

void CheckReport::fail(std::string axiom, std::vector<std::size_t> witness, std::string detail) {
  if (failed(axiom)) return;
  failures_.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

bool CheckReport::expect_equal(const std::string& axiom, const LinMap& lhs, const LinMap& rhs) {
  if (lhs.domain().total() != rhs.domain().total() ||
      lhs.codomain().total() != rhs.codomain().total())
    throw InputError("axiom " + axiom + ": sides have different shapes " + lhs.domain().str() +
                     "->" + lhs.codomain().str() + " vs " + rhs.domain().str() + "->" +
                     rhs.codomain().str());
  const Matrix& a = lhs.matrix();
  const Matrix& b = rhs.matrix();
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!(a(r, c) == b(r, c))) {
        fail(axiom, lhs.domain().unflatten(c),
             "lhs " + to_string(a.column_vector(c)) + " != rhs " + to_string(b.column_vector(c)));
        return false;
      }
  return true;
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& f : other.failures_) fail(prefix + f.axiom, f.witness, f.detail);
}

std::string CheckReport::str() const {
  if (passed()) return "pass";
  std::ostringstream os;
  for (const auto& f : failures_) {
    os << "FAIL " << f.axiom << " at (";
    for (std::size_t i = 0; i < f.witness.size(); ++i) os << (i ? "," : "") << f.witness[i];
    os << "): " << f.detail << '\n';
  }
  return os.str();
}

}  // namespace entwine
