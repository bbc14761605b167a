#pragma once

#include <random>
#include <string>
#include <vector>

#include "entwine/tensor.hpp"
#include "oracle/oracle.hpp"

namespace testing {

inline oracle::Field oracle_field(entwine::FieldSpec k) { return oracle::Field{k.characteristic()}; }

inline oracle::Num to_oracle(const entwine::Scalar& s) {
  if (s.field().is_rational())
    return oracle::Num::make(s.rational().get_num().get_si(), s.rational().get_den().get_si(), 0);
  return oracle::Num::make(s.residue(), 1, s.field().p());
}

inline oracle::Row to_oracle(const entwine::Vector& v) {
  oracle::Row out;
  for (const auto& s : v) out.push_back(to_oracle(s));
  return out;
}

inline oracle::Mat to_oracle(const entwine::Matrix& m) {
  oracle::Mat out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_oracle(m.row_vector(r)));
  return out;
}

inline entwine::Vector from_oracle(entwine::FieldSpec k, const oracle::Row& r) {
  entwine::Vector out;
  for (const auto& x : r) out.push_back(k.from_fraction(x.num, x.den));
  return out;
}

inline entwine::Matrix random_matrix(entwine::FieldSpec k, std::size_t rows, std::size_t cols,
                                     std::mt19937& rng, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  entwine::Matrix m(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = k.from_int(d(rng));
  return m;
}

}  // namespace testing
