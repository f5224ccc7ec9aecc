#include "fsn/fincat.hpp"

#include <set>
#include <tuple>
#include <utility>

namespace fsn::fincat {

std::optional<std::size_t> PresentedCategory::find_object(std::string_view name) const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> PresentedCategory::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t PresentedCategory::object_index(std::string_view name) const {
  if (auto i = find_object(name)) {
    return *i;
  }
  throw UnknownName("unknown object \"" + std::string(name) + "\"");
}

std::size_t PresentedCategory::generator_index(std::string_view name) const {
  if (auto i = find_generator(name)) {
    return *i;
  }
  throw UnknownName("unknown generator \"" + std::string(name) + "\"");
}

std::size_t PresentedCategory::dim(std::string_view object) const {
  return objects[object_index(object)].dim;
}

std::string to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::duplicate_object: return "duplicate-object";
    case IssueKind::duplicate_generator: return "duplicate-generator";
    case IssueKind::unknown_object: return "unknown-object";
    case IssueKind::dimension_mismatch: return "dimension-mismatch";
    case IssueKind::unknown_generator: return "unknown-generator";
    case IssueKind::not_composable: return "not-composable";
    case IssueKind::relation_endpoints: return "relation-endpoints";
    case IssueKind::relation_mismatch: return "relation-mismatch";
  }
  return "unknown";
}

namespace {

struct WordInfo {
  bool ok = false;
  bool empty = false;
  std::size_t src = 0;
  std::size_t dst = 0;
  Matrix matrix;
};

WordInfo resolve_word(const PresentedCategory& cat, const std::vector<std::string>& names,
                      const std::vector<bool>& generator_ok, const std::string& location,
                      std::vector<ValidationIssue>& issues) {
  WordInfo info;
  if (names.empty()) {
    info.ok = true;
    info.empty = true;
    return info;
  }
  std::vector<std::size_t> idx;
  for (const auto& n : names) {
    auto g = cat.find_generator(n);
    if (!g) {
      issues.push_back({IssueKind::unknown_generator, location,
                        "word uses unknown generator \"" + n + "\""});
      return info;
    }
    if (!generator_ok[*g]) {
      // Already reported on the generator itself.
      return info;
    }
    idx.push_back(*g);
  }
  info.src = cat.object_index(cat.generators[idx.front()].src);
  std::size_t at = info.src;
  info.matrix = Matrix::identity(cat.objects[at].dim);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto& g = cat.generators[idx[k]];
    if (cat.object_index(g.src) != at) {
      issues.push_back({IssueKind::not_composable, location,
                        "generator \"" + g.name + "\" at position " + std::to_string(k) +
                            " starts at " + g.src + ", previous arrow ends at " +
                            cat.objects[at].name});
      return info;
    }
    info.matrix = g.matrix * info.matrix;
    at = cat.object_index(g.dst);
  }
  info.dst = at;
  info.ok = true;
  return info;
}

}  // namespace

ValidationReport validate(const PresentedCategory& cat) {
  ValidationReport report;
  auto& issues = report.issues;

  std::set<std::string> names;
  for (std::size_t i = 0; i < cat.objects.size(); ++i) {
    if (!names.insert(cat.objects[i].name).second) {
      issues.push_back({IssueKind::duplicate_object, "objects[" + std::to_string(i) + "]",
                        "object name \"" + cat.objects[i].name + "\" declared twice"});
    }
  }

  std::vector<bool> generator_ok(cat.generators.size(), false);
  std::set<std::string> gen_names;
  for (std::size_t i = 0; i < cat.generators.size(); ++i) {
    const auto& g = cat.generators[i];
    const std::string loc = "generators[" + std::to_string(i) + "] (" + g.name + ")";
    bool ok = true;
    if (!gen_names.insert(g.name).second) {
      issues.push_back({IssueKind::duplicate_generator, loc,
                        "generator name \"" + g.name + "\" declared twice"});
      ok = false;
    }
    auto src = cat.find_object(g.src);
    auto dst = cat.find_object(g.dst);
    if (!src) {
      issues.push_back({IssueKind::unknown_object, loc, "unknown source object \"" + g.src + "\""});
      ok = false;
    }
    if (!dst) {
      issues.push_back({IssueKind::unknown_object, loc, "unknown target object \"" + g.dst + "\""});
      ok = false;
    }
    if (src && dst) {
      const std::size_t want_rows = cat.objects[*dst].dim;
      const std::size_t want_cols = cat.objects[*src].dim;
      if (g.matrix.rows() != want_rows || g.matrix.cols() != want_cols) {
        issues.push_back({IssueKind::dimension_mismatch, loc,
                          "matrix is " + std::to_string(g.matrix.rows()) + "x" +
                              std::to_string(g.matrix.cols()) + ", expected " +
                              std::to_string(want_rows) + "x" + std::to_string(want_cols)});
        ok = false;
      }
    }
    generator_ok[i] = ok;
  }

  for (std::size_t i = 0; i < cat.relations.size(); ++i) {
    const auto& rel = cat.relations[i];
    const std::string loc = "relations[" + std::to_string(i) + "]";
    const std::size_t before = issues.size();
    WordInfo lhs = resolve_word(cat, rel.lhs, generator_ok, loc + ".lhs", issues);
    WordInfo rhs = resolve_word(cat, rel.rhs, generator_ok, loc + ".rhs", issues);
    if (!lhs.ok || !rhs.ok || issues.size() != before) {
      continue;
    }
    if (lhs.empty && rhs.empty) {
      issues.push_back({IssueKind::relation_endpoints, loc, "both sides are empty words"});
      continue;
    }
    // An empty word is the identity at the other side's endpoints, which
    // therefore must be an endomorphism.
    for (auto* side : {&lhs, &rhs}) {
      const WordInfo& other = side == &lhs ? rhs : lhs;
      if (side->empty) {
        side->src = other.src;
        side->dst = other.src;
        side->matrix = Matrix::identity(cat.objects[other.src].dim);
      }
    }
    if (lhs.src != rhs.src || lhs.dst != rhs.dst) {
      issues.push_back({IssueKind::relation_endpoints, loc,
                        "sides run " + cat.objects[lhs.src].name + " -> " +
                            cat.objects[lhs.dst].name + " and " + cat.objects[rhs.src].name +
                            " -> " + cat.objects[rhs.dst].name});
      continue;
    }
    if (lhs.matrix != rhs.matrix) {
      issues.push_back({IssueKind::relation_mismatch, loc,
                        "functor images differ: " + lhs.matrix.to_string() + " vs " +
                            rhs.matrix.to_string()});
    }
  }
  return report;
}

void require_valid(const PresentedCategory& cat) {
  const auto report = validate(cat);
  if (!report.ok()) {
    const auto& first = report.issues.front();
    throw std::invalid_argument("invalid category: " + first.location + ": " + first.message);
  }
}

std::vector<std::string> Morphism::word_names(const PresentedCategory& cat) const {
  std::vector<std::string> out;
  out.reserve(word.size());
  for (auto g : word) {
    out.push_back(cat.generators[g].name);
  }
  return out;
}

std::vector<const Morphism*> MorphismSet::into(std::size_t dst) const {
  std::vector<const Morphism*> out;
  for (const auto& m : morphisms) {
    if (m.dst == dst) {
      out.push_back(&m);
    }
  }
  return out;
}

std::vector<const Morphism*> MorphismSet::out_of(std::size_t src) const {
  std::vector<const Morphism*> out;
  for (const auto& m : morphisms) {
    if (m.src == src) {
      out.push_back(&m);
    }
  }
  return out;
}

std::vector<const Morphism*> MorphismSet::endomorphisms(std::size_t obj) const {
  std::vector<const Morphism*> out;
  for (const auto& m : morphisms) {
    if (m.src == obj && m.dst == obj) {
      out.push_back(&m);
    }
  }
  return out;
}

MorphismSet enumerate_morphisms(const PresentedCategory& cat, std::size_t depth,
                                const Limits& limits) {
  if (depth > limits.max_depth) {
    throw ResourceLimit("enumeration depth " + std::to_string(depth) + " exceeds cap " +
                        std::to_string(limits.max_depth));
  }
  require_valid(cat);

  std::vector<std::size_t> src_of(cat.generators.size());
  std::vector<std::size_t> dst_of(cat.generators.size());
  for (std::size_t g = 0; g < cat.generators.size(); ++g) {
    src_of[g] = cat.object_index(cat.generators[g].src);
    dst_of[g] = cat.object_index(cat.generators[g].dst);
  }

  using Key = std::tuple<std::size_t, std::size_t, Matrix>;
  std::set<Key> seen;
  MorphismSet out;
  out.depth = depth;

  std::vector<std::size_t> frontier;
  for (std::size_t x = 0; x < cat.objects.size(); ++x) {
    Morphism id{x, x, Matrix::identity(cat.objects[x].dim), {}};
    seen.emplace(x, x, id.matrix);
    frontier.push_back(out.morphisms.size());
    out.morphisms.push_back(std::move(id));
  }

  // One breadth-first level: extend every frontier morphism by one generator.
  // With `record` false the level is only probed for new triples.
  auto extend = [&](const std::vector<std::size_t>& from, bool record) {
    std::vector<std::size_t> next;
    for (auto idx : from) {
      for (std::size_t g = 0; g < cat.generators.size(); ++g) {
        const Morphism& m = out.morphisms[idx];
        if (src_of[g] != m.dst) {
          continue;
        }
        Matrix prod = cat.generators[g].matrix * m.matrix;
        Key key{m.src, dst_of[g], prod};
        if (seen.count(key) != 0) {
          continue;
        }
        if (!record) {
          next.push_back(0);
          return next;
        }
        seen.insert(std::move(key));
        Morphism nm{m.src, dst_of[g], std::move(prod), m.word};
        nm.word.push_back(g);
        next.push_back(out.morphisms.size());
        out.morphisms.push_back(std::move(nm));
        if (out.morphisms.size() > limits.max_morphisms) {
          throw ResourceLimit("morphism enumeration exceeded " +
                              std::to_string(limits.max_morphisms) + " distinct morphisms");
        }
      }
    }
    return next;
  };

  for (std::size_t level = 1; level <= depth; ++level) {
    frontier = extend(frontier, true);
    if (frontier.empty()) {
      out.stabilized = true;
      out.stabilized_at = level;
      return out;
    }
  }
  if (extend(frontier, false).empty()) {
    out.stabilized = true;
    out.stabilized_at = depth + 1;
  }
  return out;
}

Matrix word_matrix(const PresentedCategory& cat, std::size_t src,
                   const std::vector<std::size_t>& word, std::size_t* dst) {
  std::size_t at = src;
  Matrix m = Matrix::identity(cat.objects.at(src).dim);
  for (auto g : word) {
    const auto& gen = cat.generators.at(g);
    if (cat.object_index(gen.src) != at) {
      throw std::invalid_argument("word is not composable at generator \"" + gen.name + "\"");
    }
    m = gen.matrix * m;
    at = cat.object_index(gen.dst);
  }
  if (dst != nullptr) {
    *dst = at;
  }
  return m;
}

MorphismCache::MorphismCache(std::shared_ptr<const PresentedCategory> cat, Limits limits)
    : cat_(std::move(cat)), limits_(limits) {}

std::shared_ptr<const MorphismSet> MorphismCache::get(std::size_t depth) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = by_depth_.find(depth); it != by_depth_.end()) {
      return it->second;
    }
    // A stabilized enumeration at a smaller depth already holds everything.
    for (const auto& [d, set] : by_depth_) {
      if (d <= depth && set->stabilized) {
        return set;
      }
    }
  }
  auto computed = std::make_shared<const MorphismSet>(enumerate_morphisms(*cat_, depth, limits_));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = by_depth_.emplace(depth, std::move(computed));
  return it->second;
}

void FunctorSpec::check() const {
  if (!source || !target) {
    throw std::invalid_argument("functor: missing source or target category");
  }
  if (object_map.size() != source->objects.size() ||
      generator_map.size() != source->generators.size()) {
    throw std::invalid_argument("functor: object or generator map has the wrong length");
  }
  for (auto y : object_map) {
    if (y >= target->objects.size()) {
      throw std::invalid_argument("functor: object maps outside the target category");
    }
  }
  for (std::size_t g = 0; g < source->generators.size(); ++g) {
    const auto& gen = source->generators[g];
    const std::size_t from = object_map[source->object_index(gen.src)];
    const std::size_t to = object_map[source->object_index(gen.dst)];
    std::size_t end = 0;
    word_matrix(*target, from, generator_map[g], &end);
    if (end != to) {
      throw std::invalid_argument("functor: image of generator \"" + gen.name +
                                  "\" does not end at the image of its target");
    }
  }
}

FunctorSpec FunctorSpec::identity(std::shared_ptr<const PresentedCategory> cat) {
  FunctorSpec f;
  f.source = cat;
  f.target = cat;
  for (std::size_t x = 0; x < cat->objects.size(); ++x) {
    f.object_map.push_back(x);
  }
  for (std::size_t g = 0; g < cat->generators.size(); ++g) {
    f.generator_map.push_back({g});
  }
  return f;
}

PresentedCategory compose(const FunctorSpec& a) {
  a.check();
  PresentedCategory out;
  for (std::size_t x = 0; x < a.source->objects.size(); ++x) {
    out.objects.push_back({a.source->objects[x].name, a.target->objects[a.object_map[x]].dim});
  }
  for (std::size_t g = 0; g < a.source->generators.size(); ++g) {
    const auto& gen = a.source->generators[g];
    const std::size_t from = a.object_map[a.source->object_index(gen.src)];
    out.generators.push_back(
        {gen.name, gen.src, gen.dst, word_matrix(*a.target, from, a.generator_map[g])});
  }
  return out;
}

FunctorSpec compose(const FunctorSpec& b, const FunctorSpec& a) {
  a.check();
  b.check();
  if (a.target.get() != b.source.get()) {
    throw std::invalid_argument("functor composition: categories do not match");
  }
  FunctorSpec ba;
  ba.source = a.source;
  ba.target = b.target;
  for (auto y : a.object_map) {
    ba.object_map.push_back(b.object_map[y]);
  }
  for (const auto& word : a.generator_map) {
    std::vector<std::size_t> image;
    for (auto h : word) {
      image.insert(image.end(), b.generator_map[h].begin(), b.generator_map[h].end());
    }
    ba.generator_map.push_back(std::move(image));
  }
  return ba;
}

}  // namespace fsn::fincat
