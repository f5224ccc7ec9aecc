#pragma once

// Finitely presented categories with a functor to finite-dimensional
// rational vector spaces, and morphism enumeration by word length.
//
// Words are written in application order: the word [g1, g2, ..., gk] is the
// composite gk ∘ ... ∘ g1, with functor image M(gk) ··· M(g1).

#include "fsn/matrix.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fsn::fincat {

using exactq::Matrix;
using exactq::Vector;

struct ObjectSpec {
  std::string name;
  std::size_t dim = 0;
};

struct GeneratorArrow {
  std::string name;
  std::string src;
  std::string dst;
  Matrix matrix;  // dim(dst) x dim(src)
};

struct Relation {
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
};

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PresentedCategory {
  std::vector<ObjectSpec> objects;
  std::vector<GeneratorArrow> generators;
  std::vector<Relation> relations;

  std::optional<std::size_t> find_object(std::string_view name) const;
  std::optional<std::size_t> find_generator(std::string_view name) const;
  // Throw UnknownName.
  std::size_t object_index(std::string_view name) const;
  std::size_t generator_index(std::string_view name) const;
  std::size_t dim(std::string_view object) const;
};

enum class IssueKind {
  duplicate_object,
  duplicate_generator,
  unknown_object,
  dimension_mismatch,
  unknown_generator,
  not_composable,
  relation_endpoints,
  relation_mismatch,
};

std::string to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string location;  // e.g. "generators[2] (f)" or "relations[0]"
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
};

ValidationReport validate(const PresentedCategory& cat);

// Throws std::invalid_argument with the first issue when cat is invalid.
void require_valid(const PresentedCategory& cat);

struct Morphism {
  std::size_t src = 0;
  std::size_t dst = 0;
  Matrix matrix;
  std::vector<std::size_t> word;  // generator indices, shortest found

  std::vector<std::string> word_names(const PresentedCategory& cat) const;
};

struct MorphismSet {
  std::size_t depth = 0;
  std::vector<Morphism> morphisms;  // breadth-first: by word length, then discovery
  // True when no word of length depth + 1 produces a new (src, dst, matrix)
  // triple, i.e. the list is the full functor image of the category.
  bool stabilized = false;
  // Smallest k >= 1 with set(k) == set(k - 1), when observed.
  std::optional<std::size_t> stabilized_at;

  std::vector<const Morphism*> into(std::size_t dst) const;
  std::vector<const Morphism*> out_of(std::size_t src) const;
  std::vector<const Morphism*> endomorphisms(std::size_t obj) const;
};

struct Limits {
  std::size_t max_depth = 256;
  std::size_t max_morphisms = 200000;
};

// Raised when a depth or size guard trips; signals resource exhaustion, not a
// mathematical result.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All morphisms realizable by words of length <= depth, identities included,
// deduplicated by (src, dst, matrix).
MorphismSet enumerate_morphisms(const PresentedCategory& cat, std::size_t depth,
                                const Limits& limits = {});

// Functor image of a word starting at `src`; throws std::invalid_argument if
// the word is not composable.  An empty word is the identity on src.
Matrix word_matrix(const PresentedCategory& cat, std::size_t src,
                   const std::vector<std::size_t>& word, std::size_t* dst = nullptr);

// Memoized enumeration for one category.  Readers share the lock; a miss
// computes outside the lock and inserts under the exclusive lock.
class MorphismCache {
 public:
  explicit MorphismCache(std::shared_ptr<const PresentedCategory> cat, Limits limits = {});

  const PresentedCategory& category() const noexcept { return *cat_; }
  std::shared_ptr<const PresentedCategory> category_ptr() const noexcept { return cat_; }
  const Limits& limits() const noexcept { return limits_; }
  std::shared_ptr<const MorphismSet> get(std::size_t depth) const;

 private:
  std::shared_ptr<const PresentedCategory> cat_;
  Limits limits_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::size_t, std::shared_ptr<const MorphismSet>> by_depth_;
};

// A functor between presented categories, given on objects and generators.
// Generators map to words in the target category.
struct FunctorSpec {
  std::shared_ptr<const PresentedCategory> source;
  std::shared_ptr<const PresentedCategory> target;
  std::vector<std::size_t> object_map;
  std::vector<std::vector<std::size_t>> generator_map;

  // Checks that every generator f: X -> Y maps to a composable word from
  // object_map[X] to object_map[Y].
  void check() const;
  static FunctorSpec identity(std::shared_ptr<const PresentedCategory> cat);
};

// The category (G ∘ A): objects and generators of A.source, with functor
// values taken from A.target.
PresentedCategory compose(const FunctorSpec& a);

// Composite functor b ∘ a.
FunctorSpec compose(const FunctorSpec& b, const FunctorSpec& a);

}  // namespace fsn::fincat
