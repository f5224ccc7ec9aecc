#pragma once

// Exact weighted l1 minimization under linear equality constraints:
//
//   minimize  sum_j w_j |b_j|   subject to   sum_j b_j M_j = target
//
// solved by the split b = p - n (p, n >= 0) and a dense rational simplex
// with Bland's rule.

#include "fsn/matrix.hpp"
#include "fsn/rational.hpp"

#include <cstddef>
#include <stdexcept>

namespace fsn::simplex {

using exactq::Matrix;
using exactq::Rational;
using exactq::Vector;

struct L1Problem {
  Matrix columns;  // one column M_j per candidate term
  Vector target;
  Vector weights;  // nonnegative, one per column

  // Throws std::invalid_argument on shape mismatch or a negative weight.
  void validate() const;
};

enum class Status { optimal, infeasible };

struct L1Solution {
  Status status = Status::infeasible;
  Rational value;       // meaningful only when optimal
  Vector coefficients;  // one per column; columns·coefficients = target

  bool optimal() const noexcept { return status == Status::optimal; }
};

L1Solution min_weighted_l1(const L1Problem& p);

class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive oracle: enumerates every basic feasible solution of the split
// system and keeps the cheapest.  Refuses problems with more than max_cols
// columns.
L1Solution enumerate_basic_optima(const L1Problem& p, std::size_t max_cols);

}  // namespace fsn::simplex
