#pragma once

// The category with objects N ⊔ M, arrows f_{m,w}: m -> w acting on Q by
// ⌈w(m)⌉, which has no universal finite functorial semi-norm.
//
// Sequences are eventually affine: prefix values, then slope·m + intercept
// for m >= prefix.size().  This covers the constructed w(m) = m·v(m) + 1 for
// eventually constant v.

#include "fsn/fincat.hpp"
#include "fsn/rational.hpp"
#include "fsn/seminorm.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fsn::counterexample {

using exactq::Integer;
using exactq::Rational;

struct Sequence {
  std::vector<Rational> prefix;
  Rational slope = 0;
  Rational intercept = 0;

  static Sequence constant(Rational c, std::vector<Rational> prefix = {});
  Rational at(std::size_t m) const;
  std::size_t tail_start() const noexcept { return prefix.size(); }
  bool operator==(const Sequence& o) const = default;
};

// Throw std::invalid_argument unless every value is >= 1 (objects) or >= 0
// (weights).  Slopes must be nonnegative.
void validate_object(const Sequence& w);
void validate_weight(const Sequence& v);

// d_{m,w} = ⌈w(m)⌉.
Integer degree(std::size_t m, const Sequence& w);

struct ClosedForm {
  Rational upper_bound;      // min over m <= m_max of v(m) / d_{m,w}
  std::size_t argmin = 0;
  Rational infimum;          // inf over all m
  bool attained = true;      // the infimum is a minimum
  bool exact = false;        // upper_bound == infimum
};

ClosedForm closed_form_value(const Sequence& v, const Sequence& w, std::size_t m_max);

class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Objects "0", ..., "M" and one object per sequence in `objects` ("w0", ...),
// all of dimension 1, with generators f_m_wi: m -> wi given by [[d_{m,wi}]].
fincat::PresentedCategory truncated_category(std::size_t M,
                                             const std::vector<Sequence>& objects);

// |target · 1_w|_v on the truncated category, by enumerating every basic
// S-representation.  Throws InstanceTooLarge beyond 64 objects.
seminorm::Extended brute_force_value(std::size_t M, const Sequence& v,
                                     const std::vector<Sequence>& objects,
                                     std::size_t target_object, const Rational& target = 1);
seminorm::Extended brute_force_value(std::size_t M, const Sequence& v, const Sequence& w,
                                     const Rational& target = 1);

struct GapRow {
  std::size_t m = 0;
  Rational v;
  Rational w;
  Integer d;
  Rational upper_bound;  // v(m) / d_{m,w}
  Rational bound;        // 1/m
  bool holds = false;    // upper_bound <= 1/m
};

struct GapReport {
  Sequence v;
  Sequence w;
  Rational lower_bound_w;    // inf_m w(m) / ⌈w(m)⌉ = |1_w|_w
  bool lower_bound_attained = true;
  bool lower_bound_certified = false;  // >= 1/2
  std::vector<GapRow> rows;  // m = 1..m_max
  bool all_rows_hold = false;
};

// w(m) = m·v(m) + 1.  v must have a constant tail.
Sequence derived_object(const Sequence& v);
GapReport gap_demo(const Sequence& v, std::size_t m_max);

}  // namespace fsn::counterexample
