#pragma once

// Functorial semi-norms: generated semi-norms evaluated by exact weighted l1
// programs over truncated morphism sets, plus the trivial, sum, pull-back,
// re-indexed and tabulated constructions.

#include "fsn/fincat.hpp"
#include "fsn/rational.hpp"
#include "fsn/simplex.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fsn::seminorm {

using exactq::Matrix;
using exactq::Rational;
using exactq::Vector;
using fincat::PresentedCategory;

// A value in [0, ∞].
class Extended {
 public:
  Extended() = default;
  Extended(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit by intent
  static Extended infinity() {
    Extended e;
    e.value_.reset();
    return e;
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  const Rational& value() const { return value_.value(); }
  std::string to_string() const;

  friend Extended operator+(const Extended& a, const Extended& b);
  // Scaling by a nonnegative rational; 0 · ∞ is taken as 0.
  friend Extended operator*(const Rational& a, const Extended& b);
  friend bool operator==(const Extended& a, const Extended& b);
  friend bool operator<(const Extended& a, const Extended& b);
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }

 private:
  std::optional<Rational> value_ = Rational(0);
};

// An F-element (X, α).
struct Element {
  std::string object;
  Vector vector;
};

struct FamilyEntry {
  std::string object;
  Vector vector;
  Rational weight;  // >= 0
};

struct GeneratingFamily {
  std::vector<FamilyEntry> entries;

  // Throws std::invalid_argument on unknown objects, wrong vector lengths or
  // negative weights.
  void validate(const PresentedCategory& cat) const;
};

struct TruncatedValue {
  std::size_t depth = 0;
  Extended upper_bound;
  // The upper bound equals the true value: either the enumeration stabilized
  // or the bound is 0.
  bool exact = false;
};

// One term b · F(w)(α_s) of an S-representation.
struct RepresentationTerm {
  Rational coefficient;
  std::vector<std::string> word;
  std::size_t entry = 0;  // index into the family
};

struct GeneratedEvaluation {
  TruncatedValue value;
  std::vector<RepresentationTerm> witness;  // empty when the value is ∞ or 0 via α = 0
  std::size_t columns = 0;
};

class ObjectMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TabulatedMiss : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The weighted l1 program whose value is the depth-truncated generated
// semi-norm at elem, with one column F(w)(α_s) per enumerated w: X_s -> X and
// family entry s.  Identical (column, weight) pairs are merged.
struct GeneratedProgram {
  simplex::L1Problem problem;
  std::vector<std::pair<const fincat::Morphism*, std::size_t>> provenance;
  std::shared_ptr<const fincat::MorphismSet> morphisms;
};

GeneratedProgram build_program(const fincat::MorphismCache& cache, const GeneratingFamily& fam,
                               const Element& elem, std::size_t depth);

GeneratedEvaluation eval_generated(const fincat::MorphismCache& cache,
                                   const GeneratingFamily& fam, const Element& elem,
                                   std::size_t depth);
GeneratedEvaluation eval_generated(const PresentedCategory& cat, const GeneratingFamily& fam,
                                   const Element& elem, std::size_t depth,
                                   const fincat::Limits& limits = {});

// η: F => F' over the same shape of category.  components[X] : F(X) -> F'(X).
struct NatTransform {
  std::shared_ptr<const PresentedCategory> source;
  std::shared_ptr<const PresentedCategory> target;
  std::vector<Matrix> components;

  // Names of generators whose naturality square fails; throws
  // std::invalid_argument when the shapes or component sizes disagree.
  std::vector<std::string> naturality_failures() const;
  bool is_natural() const { return naturality_failures().empty(); }
  bool is_isomorphism() const;
};

class SeminormHandle;

namespace detail {
struct Node;
}

// An immutable, cheaply copyable description of a functorial semi-norm.
class SeminormHandle {
 public:
  enum class Kind { generated, trivial, sum, pullback, reindexed, tabulated };

  struct TableEntry {
    Element element;
    Extended value;
  };

  static SeminormHandle generated(std::shared_ptr<const PresentedCategory> cat,
                                  GeneratingFamily fam, fincat::Limits limits = {});
  static SeminormHandle generated(std::shared_ptr<const fincat::MorphismCache> cache,
                                  GeneratingFamily fam);
  static SeminormHandle trivial(std::shared_ptr<const PresentedCategory> cat = nullptr);
  static SeminormHandle sum(std::vector<SeminormHandle> members);
  // η*σ: evaluates σ at η_X(α).
  static SeminormHandle pullback(NatTransform eta, SeminormHandle inner);
  // σ ∘ B for a functor B: D -> C; `domain` is the category F ∘ B over D.
  static SeminormHandle reindexed(fincat::FunctorSpec b, SeminormHandle inner);
  static SeminormHandle tabulated(std::shared_ptr<const PresentedCategory> cat,
                                  std::vector<TableEntry> table);

  Kind kind() const;
  // The category whose functor this semi-norm lives on; null for a trivial
  // handle built without one.
  std::shared_ptr<const PresentedCategory> domain() const;

  // Accessors for the individual kinds; throw std::logic_error on mismatch.
  const GeneratingFamily& family() const;
  std::shared_ptr<const fincat::MorphismCache> cache() const;
  const std::vector<SeminormHandle>& members() const;
  const NatTransform& transform() const;
  const SeminormHandle& inner() const;
  const fincat::FunctorSpec& functor() const;
  const std::vector<TableEntry>& table() const;

  // Same underlying description (identity, not equivalence).
  bool same_as(const SeminormHandle& other) const noexcept { return node_ == other.node_; }

 private:
  explicit SeminormHandle(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::Node> node_;
};

TruncatedValue eval(const SeminormHandle& handle, const Element& elem, std::size_t depth);

struct FunctorialityCheck {
  std::string generator;
  Element sample;
  TruncatedValue image;   // |F(f)(α)|
  TruncatedValue source;  // |α|
};

struct FunctorialityReport {
  std::vector<FunctorialityCheck> violations;
  // Pairs where at least one side is only an upper bound: no verdict.
  std::vector<FunctorialityCheck> unverified;
  std::size_t checked = 0;

  bool ok() const noexcept { return violations.empty(); }
};

// For every generator f: X -> Y and sample α at X, compares |F(f)α| with |α|
// at the same depth.  samples[X] lists vectors for object index X.
FunctorialityReport check_functorial(const PresentedCategory& cat, const SeminormHandle& handle,
                                     std::size_t depth,
                                     const std::vector<std::vector<Vector>>& samples);

class TransferError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Given A: C -> D, B: D -> C, matrices G(λ_Z): G(Z) -> G(A B Z) for
// λ: Id_D => A ∘ B, and ψ_X: F(X) -> G(A X) for ψ: F => G ∘ A, returns
// φ*(σ ∘ B) with φ = ψ_B⁻¹ ∘ G(λ).  σ must live on F = A.source.
SeminormHandle transfer_along_retraction(const fincat::FunctorSpec& a,
                                         const fincat::FunctorSpec& b,
                                         const std::vector<Matrix>& lambda,
                                         const std::vector<Matrix>& psi,
                                         const SeminormHandle& sigma);

}  // namespace fsn::seminorm
