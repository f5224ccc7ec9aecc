#include "fsn/seminorm.hpp"

#include "fsn/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace fsn::seminorm {

// ---------------------------------------------------------------------------
// Extended

std::string Extended::to_string() const {
  return is_infinite() ? std::string("infinity") : exactq::to_string(*value_);
}

Extended operator+(const Extended& a, const Extended& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return Extended::infinity();
  }
  return Extended(a.value() + b.value());
}

Extended operator*(const Rational& a, const Extended& b) {
  if (a == 0) {
    return Extended(Rational(0));
  }
  if (b.is_infinite()) {
    return Extended::infinity();
  }
  return Extended(a * b.value());
}

bool operator==(const Extended& a, const Extended& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() && b.is_infinite();
  }
  return a.value() == b.value();
}

bool operator<(const Extended& a, const Extended& b) {
  if (a.is_infinite()) {
    return false;
  }
  if (b.is_infinite()) {
    return true;
  }
  return a.value() < b.value();
}

// ---------------------------------------------------------------------------
// Families and elements

void GeneratingFamily::validate(const PresentedCategory& cat) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    auto x = cat.find_object(e.object);
    if (!x) {
      throw ObjectMismatch("family entry " + std::to_string(i) + ": unknown object \"" +
                           e.object + "\"");
    }
    if (e.vector.size() != cat.objects[*x].dim) {
      throw ObjectMismatch("family entry " + std::to_string(i) + ": vector has length " +
                           std::to_string(e.vector.size()) + ", object " + e.object +
                           " has dimension " + std::to_string(cat.objects[*x].dim));
    }
    if (e.weight < 0) {
      throw std::invalid_argument("family entry " + std::to_string(i) + ": negative weight");
    }
  }
}

namespace {

std::size_t check_element(const PresentedCategory& cat, const Element& elem) {
  auto x = cat.find_object(elem.object);
  if (!x) {
    throw ObjectMismatch("unknown object \"" + elem.object + "\"");
  }
  if (elem.vector.size() != cat.objects[*x].dim) {
    throw ObjectMismatch("element of " + elem.object + " has length " +
                         std::to_string(elem.vector.size()) + ", expected " +
                         std::to_string(cat.objects[*x].dim));
  }
  return *x;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generated semi-norms

GeneratedProgram build_program(const fincat::MorphismCache& cache, const GeneratingFamily& fam,
                               const Element& elem, std::size_t depth) {
  const PresentedCategory& cat = cache.category();
  fam.validate(cat);
  const std::size_t target = check_element(cat, elem);
  if (depth > cache.limits().max_depth) {
    throw fincat::ResourceLimit("evaluation depth " + std::to_string(depth) + " exceeds cap " +
                                std::to_string(cache.limits().max_depth));
  }

  GeneratedProgram prog;
  prog.morphisms = cache.get(depth);
  std::vector<std::size_t> entry_object;
  for (const auto& e : fam.entries) {
    entry_object.push_back(cat.object_index(e.object));
  }

  std::map<Vector, std::size_t> column_index;
  std::vector<Vector> columns;
  Vector weights;
  for (const auto* m : prog.morphisms->into(target)) {
    for (std::size_t s = 0; s < fam.entries.size(); ++s) {
      if (entry_object[s] != m->src) {
        continue;
      }
      Vector col = m->matrix.apply(fam.entries[s].vector);
      if (exactq::is_zero(col)) {
        continue;
      }
      const Rational& w = fam.entries[s].weight;
      auto it = column_index.find(col);
      if (it == column_index.end()) {
        column_index.emplace(col, columns.size());
        columns.push_back(std::move(col));
        weights.push_back(w);
        prog.provenance.emplace_back(m, s);
      } else if (w < weights[it->second]) {
        weights[it->second] = w;
        prog.provenance[it->second] = {m, s};
      }
    }
  }
  prog.problem.columns = Matrix::from_columns(columns, elem.vector.size());
  prog.problem.target = elem.vector;
  prog.problem.weights = std::move(weights);
  return prog;
}

GeneratedEvaluation eval_generated(const fincat::MorphismCache& cache,
                                   const GeneratingFamily& fam, const Element& elem,
                                   std::size_t depth) {
  GeneratedProgram prog = build_program(cache, fam, elem, depth);
  GeneratedEvaluation out;
  out.columns = prog.problem.columns.cols();
  out.value.depth = depth;
  const auto sol = simplex::min_weighted_l1(prog.problem);
  if (!sol.optimal()) {
    out.value.upper_bound = Extended::infinity();
    out.value.exact = prog.morphisms->stabilized;
    return out;
  }
  out.value.upper_bound = sol.value;
  out.value.exact = prog.morphisms->stabilized || sol.value == 0;
  const PresentedCategory& cat = cache.category();
  for (std::size_t j = 0; j < sol.coefficients.size(); ++j) {
    if (sol.coefficients[j] == 0) {
      continue;
    }
    const auto& [m, s] = prog.provenance[j];
    out.witness.push_back({sol.coefficients[j], m->word_names(cat), s});
  }
  return out;
}

GeneratedEvaluation eval_generated(const PresentedCategory& cat, const GeneratingFamily& fam,
                                   const Element& elem, std::size_t depth,
                                   const fincat::Limits& limits) {
  fincat::MorphismCache cache(std::make_shared<const PresentedCategory>(cat), limits);
  return eval_generated(cache, fam, elem, depth);
}

// ---------------------------------------------------------------------------
// Natural transformations

namespace {

void require_same_shape(const PresentedCategory& a, const PresentedCategory& b) {
  if (a.objects.size() != b.objects.size() || a.generators.size() != b.generators.size()) {
    throw std::invalid_argument("categories have different shapes");
  }
  for (std::size_t x = 0; x < a.objects.size(); ++x) {
    if (a.objects[x].name != b.objects[x].name) {
      throw std::invalid_argument("categories disagree on object " + std::to_string(x));
    }
  }
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    const auto& ga = a.generators[g];
    const auto& gb = b.generators[g];
    if (ga.name != gb.name || ga.src != gb.src || ga.dst != gb.dst) {
      throw std::invalid_argument("categories disagree on generator " + ga.name);
    }
  }
}

}  // namespace

std::vector<std::string> NatTransform::naturality_failures() const {
  if (!source || !target) {
    throw std::invalid_argument("natural transformation without categories");
  }
  require_same_shape(*source, *target);
  if (components.size() != source->objects.size()) {
    throw std::invalid_argument("natural transformation needs one component per object");
  }
  for (std::size_t x = 0; x < components.size(); ++x) {
    if (components[x].rows() != target->objects[x].dim ||
        components[x].cols() != source->objects[x].dim) {
      throw std::invalid_argument("component at " + source->objects[x].name +
                                  " has the wrong size");
    }
  }
  std::vector<std::string> failures;
  for (std::size_t g = 0; g < source->generators.size(); ++g) {
    const auto& f = source->generators[g];
    const std::size_t x = source->object_index(f.src);
    const std::size_t y = source->object_index(f.dst);
    if (components[y] * f.matrix != target->generators[g].matrix * components[x]) {
      failures.push_back(f.name);
    }
  }
  return failures;
}

bool NatTransform::is_isomorphism() const {
  for (const auto& c : components) {
    if (!exactq::inverse(c)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Handles

namespace detail {

struct Generated {
  std::shared_ptr<const fincat::MorphismCache> cache;
  GeneratingFamily family;
};
struct Trivial {
  std::shared_ptr<const PresentedCategory> cat;
};
struct Sum {
  std::vector<SeminormHandle> members;
};
struct Pullback {
  NatTransform eta;
  SeminormHandle inner;
};
struct Reindexed {
  fincat::FunctorSpec b;
  std::shared_ptr<const PresentedCategory> domain;
  SeminormHandle inner;
};
struct Tabulated {
  std::shared_ptr<const PresentedCategory> cat;
  std::vector<SeminormHandle::TableEntry> table;
};

struct Node {
  std::variant<Generated, Trivial, Sum, Pullback, Reindexed, Tabulated> body;
};

}  // namespace detail

SeminormHandle SeminormHandle::generated(std::shared_ptr<const PresentedCategory> cat,
                                         GeneratingFamily fam, fincat::Limits limits) {
  return generated(std::make_shared<const fincat::MorphismCache>(std::move(cat), limits),
                   std::move(fam));
}

SeminormHandle SeminormHandle::generated(std::shared_ptr<const fincat::MorphismCache> cache,
                                         GeneratingFamily fam) {
  fincat::require_valid(cache->category());
  fam.validate(cache->category());
  return SeminormHandle(std::make_shared<const detail::Node>(
      detail::Node{detail::Generated{std::move(cache), std::move(fam)}}));
}

SeminormHandle SeminormHandle::trivial(std::shared_ptr<const PresentedCategory> cat) {
  return SeminormHandle(
      std::make_shared<const detail::Node>(detail::Node{detail::Trivial{std::move(cat)}}));
}

SeminormHandle SeminormHandle::sum(std::vector<SeminormHandle> members) {
  if (members.empty()) {
    throw std::invalid_argument("sum of no semi-norms");
  }
  return SeminormHandle(
      std::make_shared<const detail::Node>(detail::Node{detail::Sum{std::move(members)}}));
}

SeminormHandle SeminormHandle::pullback(NatTransform eta, SeminormHandle inner) {
  if (!eta.is_natural()) {
    throw std::invalid_argument("pull-back along a transformation that is not natural");
  }
  return SeminormHandle(std::make_shared<const detail::Node>(
      detail::Node{detail::Pullback{std::move(eta), std::move(inner)}}));
}

SeminormHandle SeminormHandle::reindexed(fincat::FunctorSpec b, SeminormHandle inner) {
  auto domain = std::make_shared<const PresentedCategory>(fincat::compose(b));
  return SeminormHandle(std::make_shared<const detail::Node>(
      detail::Node{detail::Reindexed{std::move(b), std::move(domain), std::move(inner)}}));
}

SeminormHandle SeminormHandle::tabulated(std::shared_ptr<const PresentedCategory> cat,
                                         std::vector<TableEntry> table) {
  for (const auto& e : table) {
    check_element(*cat, e.element);
  }
  return SeminormHandle(std::make_shared<const detail::Node>(
      detail::Node{detail::Tabulated{std::move(cat), std::move(table)}}));
}

SeminormHandle::Kind SeminormHandle::kind() const {
  return static_cast<Kind>(node_->body.index());
}

std::shared_ptr<const PresentedCategory> SeminormHandle::domain() const {
  return std::visit(
      [](const auto& n) -> std::shared_ptr<const PresentedCategory> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, detail::Generated>) {
          return n.cache->category_ptr();
        } else if constexpr (std::is_same_v<T, detail::Trivial>) {
          return n.cat;
        } else if constexpr (std::is_same_v<T, detail::Sum>) {
          for (const auto& m : n.members) {
            if (auto d = m.domain()) {
              return d;
            }
          }
          return nullptr;
        } else if constexpr (std::is_same_v<T, detail::Pullback>) {
          return n.eta.source;
        } else if constexpr (std::is_same_v<T, detail::Reindexed>) {
          return n.domain;
        } else {
          return n.cat;
        }
      },
      node_->body);
}

namespace {

template <typename T>
const T& as(const std::shared_ptr<const detail::Node>& node, const char* what) {
  if (const auto* p = std::get_if<T>(&node->body)) {
    return *p;
  }
  throw std::logic_error(std::string("semi-norm handle is not ") + what);
}

}  // namespace

const GeneratingFamily& SeminormHandle::family() const {
  return as<detail::Generated>(node_, "generated").family;
}
std::shared_ptr<const fincat::MorphismCache> SeminormHandle::cache() const {
  return as<detail::Generated>(node_, "generated").cache;
}
const std::vector<SeminormHandle>& SeminormHandle::members() const {
  return as<detail::Sum>(node_, "a sum").members;
}
const NatTransform& SeminormHandle::transform() const {
  return as<detail::Pullback>(node_, "a pull-back").eta;
}
const SeminormHandle& SeminormHandle::inner() const {
  if (const auto* p = std::get_if<detail::Pullback>(&node_->body)) {
    return p->inner;
  }
  return as<detail::Reindexed>(node_, "a pull-back or re-indexing").inner;
}
const fincat::FunctorSpec& SeminormHandle::functor() const {
  return as<detail::Reindexed>(node_, "re-indexed").b;
}
const std::vector<SeminormHandle::TableEntry>& SeminormHandle::table() const {
  return as<detail::Tabulated>(node_, "tabulated").table;
}

TruncatedValue eval(const SeminormHandle& handle, const Element& elem, std::size_t depth) {
  switch (handle.kind()) {
    case SeminormHandle::Kind::generated:
      return eval_generated(*handle.cache(), handle.family(), elem, depth).value;

    case SeminormHandle::Kind::trivial: {
      if (auto cat = handle.domain()) {
        check_element(*cat, elem);
      }
      return {depth, Extended(Rational(0)), true};
    }

    case SeminormHandle::Kind::sum: {
      TruncatedValue total{depth, Extended(Rational(0)), true};
      for (const auto& m : handle.members()) {
        const TruncatedValue v = eval(m, elem, depth);
        total.upper_bound = total.upper_bound + v.upper_bound;
        total.exact = total.exact && v.exact;
      }
      if (total.upper_bound == Extended(Rational(0))) {
        total.exact = true;
      }
      return total;
    }

    case SeminormHandle::Kind::pullback: {
      const NatTransform& eta = handle.transform();
      const std::size_t x = check_element(*eta.source, elem);
      Element image{eta.target->objects[x].name, eta.components[x].apply(elem.vector)};
      return eval(handle.inner(), image, depth);
    }

    case SeminormHandle::Kind::reindexed: {
      const auto& b = handle.functor();
      const std::size_t y = check_element(*handle.domain(), elem);
      Element image{b.target->objects[b.object_map[y]].name, elem.vector};
      return eval(handle.inner(), image, depth);
    }

    case SeminormHandle::Kind::tabulated: {
      check_element(*handle.domain(), elem);
      for (const auto& e : handle.table()) {
        if (e.element.object == elem.object && e.element.vector == elem.vector) {
          return {depth, e.value, true};
        }
      }
      throw TabulatedMiss("tabulated semi-norm has no value at " + elem.object + " " +
                          exactq::to_string(elem.vector));
    }
  }
  throw std::logic_error("unhandled semi-norm kind");
}

FunctorialityReport check_functorial(const PresentedCategory& cat, const SeminormHandle& handle,
                                     std::size_t depth,
                                     const std::vector<std::vector<Vector>>& samples) {
  fincat::require_valid(cat);
  if (samples.size() != cat.objects.size()) {
    throw std::invalid_argument("check_functorial: one sample list per object required");
  }
  FunctorialityReport report;
  for (const auto& f : cat.generators) {
    const std::size_t x = cat.object_index(f.src);
    for (const auto& alpha : samples[x]) {
      FunctorialityCheck c;
      c.generator = f.name;
      c.sample = {f.src, alpha};
      c.source = eval(handle, c.sample, depth);
      c.image = eval(handle, {f.dst, f.matrix.apply(alpha)}, depth);
      ++report.checked;
      if (c.image.exact && c.source.exact) {
        if (c.source.upper_bound < c.image.upper_bound) {
          report.violations.push_back(std::move(c));
        }
      } else if (c.source.exact && c.image.upper_bound <= c.source.upper_bound) {
        // An upper bound on the left below an exact right side settles it.
      } else {
        report.unverified.push_back(std::move(c));
      }
    }
  }
  return report;
}

SeminormHandle transfer_along_retraction(const fincat::FunctorSpec& a,
                                         const fincat::FunctorSpec& b,
                                         const std::vector<Matrix>& lambda,
                                         const std::vector<Matrix>& psi,
                                         const SeminormHandle& sigma) {
  a.check();
  b.check();
  if (a.source.get() != b.target.get() || a.target.get() != b.source.get()) {
    throw TransferError("A: C -> D and B: D -> C must run between the same two categories");
  }
  const auto& c_cat = a.source;  // carries F
  const auto& d_cat = a.target;  // carries G
  if (auto dom = sigma.domain()) {
    require_same_shape(*dom, *c_cat);
  }

  NatTransform lam{d_cat,
                   std::make_shared<const PresentedCategory>(fincat::compose(fincat::compose(a, b))),
                   lambda};
  if (!lam.is_natural()) {
    throw TransferError("λ: Id => A∘B fails naturality");
  }
  if (!lam.is_isomorphism()) {
    throw TransferError("λ has a non-invertible component");
  }
  NatTransform ps{c_cat, std::make_shared<const PresentedCategory>(fincat::compose(a)), psi};
  if (!ps.is_natural()) {
    throw TransferError("ψ: F => G∘A fails naturality");
  }
  std::vector<Matrix> phi;
  for (std::size_t y = 0; y < d_cat->objects.size(); ++y) {
    auto inv = exactq::inverse(psi[b.object_map[y]]);
    if (!inv) {
      throw TransferError("ψ is not invertible at " + c_cat->objects[b.object_map[y]].name);
    }
    phi.push_back(*inv * lambda[y]);
  }
  NatTransform ph{d_cat, std::make_shared<const PresentedCategory>(fincat::compose(b)),
                  std::move(phi)};
  assert(ph.is_natural());
  return SeminormHandle::pullback(std::move(ph), SeminormHandle::reindexed(b, sigma));
}

}  // namespace fsn::seminorm
