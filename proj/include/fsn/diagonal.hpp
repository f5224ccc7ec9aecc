#pragma once

// Diagonal weights carrying a sequence of generated semi-norms, the constant
// Q of the carry estimate, and the lift to families of semi-norms.

#include "fsn/fincat.hpp"
#include "fsn/seminorm.hpp"

#include <cstddef>
#include <vector>

namespace fsn::diagonal {

using exactq::Rational;
using exactq::Vector;
using fincat::PresentedCategory;
using seminorm::Element;
using seminorm::Extended;
using seminorm::SeminormHandle;

// (X_0, α_0), (X_1, α_1), ... without repetitions.
struct Enumeration {
  std::vector<Element> entries;

  static Enumeration from_family(const seminorm::GeneratingFamily& fam);
  void validate(const PresentedCategory& cat) const;
  std::size_t size() const noexcept { return entries.size(); }
  seminorm::GeneratingFamily with_weights(const std::vector<Rational>& w) const;
};

using Weights = std::vector<Rational>;

// v(α_n) = max(1, v_0(α_n), ..., v_n(α_n)) for n < n_max.  families[j] is v_j;
// indices j beyond families.size() contribute nothing.
Weights diagonal_weights(const Enumeration& en, const std::vector<Weights>& families,
                         std::size_t n_max);

struct CarrySample {
  Vector alpha;
  std::string object;
  Extended lhs;  // |α|_v
  Extended rhs;  // Q · |α|_{v_m}
  bool holds = false;
};

struct DiagonalReport {
  Weights v;
  std::size_t m = 0;
  std::size_t prefix_length = 0;
  std::size_t depth = 0;
  std::vector<Extended> vm_values;  // |α_k|_{v_m}, k <= m
  std::vector<Rational> q_values;   // q_k, k <= m
  Rational Q = 1;
  // All |α_k|_{v_m} are exact.  Otherwise they are upper bounds and the q_k
  // and Q are lower bounds for the true constants.
  bool exact = false;
  std::vector<CarrySample> samples;
};

// q_k = v(α_k) / |α_k|_{v_m} (1 when the value is 0) and Q = min(1, q_0..q_m).
DiagonalReport q_constant(const fincat::MorphismCache& cache, const Enumeration& en,
                          const Weights& v, const Weights& v_m, std::size_t m,
                          std::size_t depth);

// Checks |α|_v >= Q · |α|_{v_m} for each sample.  On a stabilized category
// both sides are exact.  Otherwise the left side and Q come from depth
// `depth` and the right side from depth 2·depth, which is the truncation at
// which the estimate is guaranteed.
DiagonalReport verify_carry_bound(const fincat::MorphismCache& cache, const Enumeration& en,
                                  const Weights& v, const Weights& v_m, std::size_t m,
                                  const std::vector<Element>& samples, std::size_t depth);

struct CarryFamily {
  SeminormHandle handle;
  Weights weights;
  std::vector<Weights> member_weights;
  bool exact = true;  // every member value used was exact
};

// Generated semi-norm with weights diagonal_weights over v_τ(α) := |α|_τ.
CarryFamily carry_family(std::shared_ptr<const fincat::MorphismCache> cache,
                         const Enumeration& en, const std::vector<SeminormHandle>& handles,
                         std::size_t n_max, std::size_t depth);

}  // namespace fsn::diagonal
