#pragma once

#include <string>
#include <vector>

#include "entwine/tensor.hpp"

namespace entwine {

struct Failure {
  std::string axiom;
  std::vector<std::size_t> witness;  // domain basis multi-index
  std::string detail;
};

/// Outcome of an axiom check. At most one failure is kept per axiom: the
/// first offending basis element in lexicographic domain order.
class CheckReport {
 public:
  bool passed() const { return failures_.empty(); }
  const std::vector<Failure>& failures() const { return failures_; }
  bool failed(const std::string& axiom) const;

  void fail(std::string axiom, std::vector<std::size_t> witness, std::string detail);
  /// Records a failure unless lhs == rhs. Both maps must share totals.
  bool expect_equal(const std::string& axiom, const LinMap& lhs, const LinMap& rhs);
  void merge(const CheckReport& other, const std::string& prefix = {});

  std::string str() const;

 private:
  std::vector<Failure> failures_;
};

}  // namespace entwine
