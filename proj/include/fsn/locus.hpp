#pragma once

// Vanishing loci of functorial semi-norms, the universal locus N(X), and
// the carrying relation between semi-norms.

#include "fsn/fincat.hpp"
#include "fsn/linalg.hpp"
#include "fsn/seminorm.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsn::locus {

using exactq::Matrix;
using exactq::Rational;
using exactq::Subspace;
using exactq::Vector;
using fincat::PresentedCategory;

enum class LocusStatus { exact, inner_bound, outer_bound };
std::string to_string(LocusStatus s);

struct Locus {
  std::string object;
  Subspace space;
  LocusStatus status = LocusStatus::inner_bound;
};

// F(word)·eigenvector = eigenvalue·eigenvector with |eigenvalue| > 1.  Every
// finite functorial semi-norm then vanishes on the eigenvector.
struct VanishingCertificate {
  std::string object;
  std::vector<std::string> witness_word;
  Rational eigenvalue;
  Vector eigenvector;

  bool verify(const PresentedCategory& cat) const;
};

struct InnerBounds {
  std::vector<Locus> loci;  // one per object, status inner_bound
  std::vector<VanishingCertificate> certificates;
};

// Spans eigenvectors of enumerated endomorphisms with rational |λ| > 1 and
// closes them under all generators.
InnerBounds eigen_vanishing_inner(const PresentedCategory& cat, std::size_t depth,
                                  const fincat::Limits& limits = {});

class NotStabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactLocus {
  Locus locus;
  // Complement basis vectors and their (positive) semi-norm values.
  std::vector<Vector> complement;
  std::vector<seminorm::Extended> complement_values;
};

// The zero set of a generated semi-norm on a category whose enumeration
// stabilizes within limits.max_depth.  Throws NotStabilized otherwise.
ExactLocus exact_locus_on_stabilized(const PresentedCategory& cat,
                                     const seminorm::GeneratingFamily& fam,
                                     const std::string& object,
                                     const fincat::Limits& limits = {});

// F/V for a subspace family V closed under F: quotient dims are
// dim F(X) - dim V(X) and projection[X] maps F(X) onto the quotient.
struct Quotient {
  PresentedCategory category;
  std::vector<Matrix> projection;
};
Quotient quotient_functor(const PresentedCategory& cat, const std::vector<Subspace>& v);

// max over morphisms w out of X in a finite morphism set of |F(w) x|_1.
Rational orbit_norm(const PresentedCategory& cat, const fincat::MorphismSet& morphisms,
                    std::size_t object, const Vector& x);

struct UniversalLocus {
  std::vector<Locus> loci;
  std::vector<VanishingCertificate> certificates;
  bool quotient_stabilized = false;
  std::optional<std::size_t> quotient_stabilized_at;
  std::size_t quotient_morphisms = 0;
};

UniversalLocus universal_locus(const PresentedCategory& cat, std::size_t depth,
                               std::size_t quotient_check_depth = 64,
                               const fincat::Limits& limits = {});

// Two-sided bounds inner ⊆ N_σ(X) ⊆ outer.
struct LocusBounds {
  std::string object;
  Subspace inner;
  Subspace outer;

  bool exact() const { return inner == outer; }
  Locus as_locus() const;
};

// Bounds for every object of handle.domain(), computed from the structure of
// the handle at the given depth.
std::vector<LocusBounds> loci_of(const seminorm::SeminormHandle& handle, std::size_t depth);

std::vector<LocusBounds> bounds_from(const std::vector<Locus>& loci);

struct CarryVerdict {
  enum class Kind { carries, violated, undetermined };
  Kind kind = Kind::undetermined;
  std::string reason;
  // Set when violated: |witness|_σ = 0 and |witness|_τ > 0 are both certified.
  std::string object;
  Vector witness;
  std::vector<std::string> undetermined_objects;
};

std::string to_string(CarryVerdict::Kind k);

// Does σ carry τ, i.e. N_σ(X) ⊆ N_τ(X) for every X?
CarryVerdict carries(const std::vector<LocusBounds>& sigma, const std::vector<LocusBounds>& tau);
CarryVerdict carries(const seminorm::SeminormHandle& sigma, const seminorm::SeminormHandle& tau,
                     std::size_t depth);

}  // namespace fsn::locus
