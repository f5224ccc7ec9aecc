#include "fsn/locus.hpp"

#include <algorithm>
#include <functional>

namespace fsn::locus {

using seminorm::Extended;
using seminorm::SeminormHandle;

std::string to_string(LocusStatus s) {
  switch (s) {
    case LocusStatus::exact:
      return "exact";
    case LocusStatus::inner_bound:
      return "inner-bound";
    case LocusStatus::outer_bound:
      return "outer-bound";
  }
  return "?";
}

std::string to_string(CarryVerdict::Kind k) {
  switch (k) {
    case CarryVerdict::Kind::carries:
      return "carries";
    case CarryVerdict::Kind::violated:
      return "violated";
    case CarryVerdict::Kind::undetermined:
      return "undetermined";
  }
  return "?";
}

bool VanishingCertificate::verify(const PresentedCategory& cat) const {
  if (exactq::abs(eigenvalue) <= 1 || exactq::is_zero(eigenvector)) {
    return false;
  }
  const std::size_t x = cat.object_index(object);
  std::vector<std::size_t> word;
  for (const auto& g : witness_word) {
    word.push_back(cat.generator_index(g));
  }
  std::size_t end = 0;
  const Matrix m = fincat::word_matrix(cat, x, word, &end);
  return end == x && m.apply(eigenvector) == exactq::scale(eigenvalue, eigenvector);
}

namespace {

// Smallest family containing v and closed under every generator.
void close_under_generators(const PresentedCategory& cat, std::vector<Subspace>& v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : cat.generators) {
      const std::size_t x = cat.object_index(g.src);
      const std::size_t y = cat.object_index(g.dst);
      const Subspace img = v[x].image(g.matrix);
      if (!v[y].contains(img)) {
        v[y] = v[y].sum(img);
        changed = true;
      }
    }
  }
}

std::vector<Subspace> zero_family(const PresentedCategory& cat) {
  std::vector<Subspace> v;
  for (const auto& o : cat.objects) {
    v.push_back(Subspace::zero(o.dim));
  }
  return v;
}

std::vector<Subspace> full_family(const PresentedCategory& cat) {
  std::vector<Subspace> v;
  for (const auto& o : cat.objects) {
    v.push_back(Subspace::full(o.dim));
  }
  return v;
}

}  // namespace

InnerBounds eigen_vanishing_inner(const PresentedCategory& cat, std::size_t depth,
                                  const fincat::Limits& limits) {
  if (depth < 1) {
    throw std::invalid_argument("eigen_vanishing_inner needs depth >= 1");
  }
  const auto ms = fincat::enumerate_morphisms(cat, depth, limits);
  InnerBounds out;
  std::vector<Subspace> v = zero_family(cat);
  for (const auto& m : ms.morphisms) {
    if (m.src != m.dst || m.word.empty()) {
      continue;
    }
    for (const auto& ep : exactq::rational_eigenpairs(m.matrix)) {
      if (exactq::abs(ep.eigenvalue) <= 1) {
        continue;
      }
      for (const auto& b : ep.eigenspace.basis_vectors()) {
        if (v[m.src].contains(b)) {
          continue;
        }
        v[m.src] = v[m.src].sum(Subspace::span(b.size(), {b}));
        out.certificates.push_back(
            {cat.objects[m.src].name, m.word_names(cat), ep.eigenvalue, b});
      }
    }
  }
  close_under_generators(cat, v);
  for (std::size_t x = 0; x < cat.objects.size(); ++x) {
    out.loci.push_back({cat.objects[x].name, v[x], LocusStatus::inner_bound});
  }
  return out;
}

namespace {

// Span of the zero-weight columns F(w)(α_s) landing in each object.
std::vector<Subspace> zero_weight_span(const PresentedCategory& cat,
                                       const fincat::MorphismSet& ms,
                                       const seminorm::GeneratingFamily& fam) {
  std::vector<std::vector<Vector>> cols(cat.objects.size());
  for (const auto& e : fam.entries) {
    if (e.weight != 0) {
      continue;
    }
    const std::size_t s = cat.object_index(e.object);
    for (const auto* m : ms.out_of(s)) {
      cols[m->dst].push_back(m->matrix.apply(e.vector));
    }
  }
  std::vector<Subspace> out;
  for (std::size_t x = 0; x < cat.objects.size(); ++x) {
    out.push_back(Subspace::span(cat.objects[x].dim, cols[x]));
  }
  return out;
}

// Whether every element of every object has some representation.
bool family_spans(const PresentedCategory& cat, const fincat::MorphismSet& ms,
                  const seminorm::GeneratingFamily& fam) {
  std::vector<std::vector<Vector>> cols(cat.objects.size());
  for (const auto& e : fam.entries) {
    const std::size_t s = cat.object_index(e.object);
    for (const auto* m : ms.out_of(s)) {
      cols[m->dst].push_back(m->matrix.apply(e.vector));
    }
  }
  for (std::size_t x = 0; x < cat.objects.size(); ++x) {
    if (!Subspace::span(cat.objects[x].dim, cols[x]).is_full()) {
      return false;
    }
  }
  return true;
}

}  // namespace

ExactLocus exact_locus_on_stabilized(const PresentedCategory& cat,
                                     const seminorm::GeneratingFamily& fam,
                                     const std::string& object, const fincat::Limits& limits) {
  fam.validate(cat);
  const std::size_t x = cat.object_index(object);
  auto cache = std::make_shared<fincat::MorphismCache>(
      std::make_shared<const PresentedCategory>(cat), limits);
  std::shared_ptr<const fincat::MorphismSet> ms;
  try {
    ms = cache->get(limits.max_depth);
  } catch (const fincat::ResourceLimit& e) {
    throw NotStabilized(std::string("enumeration did not stabilize: ") + e.what());
  }
  if (!ms->stabilized) {
    throw NotStabilized("enumeration did not stabilize within depth " +
                        std::to_string(limits.max_depth));
  }
  ExactLocus out;
  out.locus = {object, zero_weight_span(cat, *ms, fam)[x], LocusStatus::exact};
  // Every complement direction must evaluate to a positive value.
  for (const auto& c : out.locus.space.complement_basis()) {
    auto val = seminorm::eval_generated(*cache, fam, {object, c}, ms->depth).value;
    if (!val.exact || val.upper_bound == Extended(Rational(0))) {
      throw std::logic_error("exact locus: complement vector " + exactq::to_string(c) +
                             " has value " + val.upper_bound.to_string());
    }
    out.complement.push_back(c);
    out.complement_values.push_back(val.upper_bound);
  }
  return out;
}

Quotient quotient_functor(const PresentedCategory& cat, const std::vector<Subspace>& v) {
  if (v.size() != cat.objects.size()) {
    throw std::invalid_argument("quotient_functor: one subspace per object required");
  }
  Quotient q;
  std::vector<Matrix> lift;  // complement basis as columns
  for (std::size_t x = 0; x < cat.objects.size(); ++x) {
    const auto comp = v[x].complement_basis();
    const std::size_t n = cat.objects[x].dim;
    Matrix c = Matrix::from_columns(comp, n);
    auto inv = exactq::inverse(v[x].basis().hconcat(c));
    if (!inv) {
      throw std::logic_error("quotient_functor: basis extension is singular");
    }
    std::vector<std::size_t> rows;
    for (std::size_t i = v[x].dim(); i < n; ++i) {
      rows.push_back(i);
    }
    q.projection.push_back(inv->select_rows(rows));
    lift.push_back(std::move(c));
    q.category.objects.push_back({cat.objects[x].name, comp.size()});
  }
  for (const auto& g : cat.generators) {
    const std::size_t x = cat.object_index(g.src);
    const std::size_t y = cat.object_index(g.dst);
    if (!v[y].contains(v[x].image(g.matrix))) {
      throw std::invalid_argument("quotient_functor: subspaces are not closed under " + g.name);
    }
    q.category.generators.push_back({g.name, g.src, g.dst, q.projection[y] * g.matrix * lift[x]});
  }
  q.category.relations = cat.relations;
  return q;
}

Rational orbit_norm(const PresentedCategory& cat, const fincat::MorphismSet& morphisms,
                    std::size_t object, const Vector& x) {
  if (x.size() != cat.objects.at(object).dim) {
    throw std::invalid_argument("orbit_norm: dimension mismatch");
  }
  Rational best = 0;
  for (const auto* m : morphisms.out_of(object)) {
    best = std::max(best, exactq::l1_norm(m->matrix.apply(x)));
  }
  return best;
}

UniversalLocus universal_locus(const PresentedCategory& cat, std::size_t depth,
                               std::size_t quotient_check_depth, const fincat::Limits& limits) {
  InnerBounds inner = eigen_vanishing_inner(cat, std::max<std::size_t>(depth, 1), limits);
  std::vector<Subspace> v;
  for (const auto& l : inner.loci) {
    v.push_back(l.space);
  }
  UniversalLocus out;
  out.certificates = std::move(inner.certificates);
  const Quotient q = quotient_functor(cat, v);
  fincat::Limits qlimits = limits;
  qlimits.max_depth = std::max(qlimits.max_depth, quotient_check_depth);
  try {
    const auto qs = fincat::enumerate_morphisms(q.category, quotient_check_depth, qlimits);
    out.quotient_stabilized = qs.stabilized;
    out.quotient_stabilized_at = qs.stabilized_at;
    out.quotient_morphisms = qs.morphisms.size();
  } catch (const fincat::ResourceLimit&) {
    out.quotient_stabilized = false;
  }
  const auto status = out.quotient_stabilized ? LocusStatus::exact : LocusStatus::inner_bound;
  for (std::size_t x = 0; x < cat.objects.size(); ++x) {
    out.loci.push_back({cat.objects[x].name, v[x], status});
  }
  return out;
}

Locus LocusBounds::as_locus() const {
  if (exact()) {
    return {object, inner, LocusStatus::exact};
  }
  return {object, inner, LocusStatus::inner_bound};
}

namespace {

struct Bounds {
  std::vector<Subspace> inner;
  std::vector<Subspace> outer;
};

Bounds bounds_rec(const SeminormHandle& h, const PresentedCategory& dom, std::size_t depth) {
  using Kind = SeminormHandle::Kind;
  switch (h.kind()) {
    case Kind::trivial:
      return {full_family(dom), full_family(dom)};

    case Kind::generated: {
      const auto cache = h.cache();
      const auto& cat = cache->category();
      const auto ms = cache->get(depth);
      Bounds b;
      b.inner = zero_weight_span(cat, *ms, h.family());
      if (ms->stabilized) {
        b.outer = b.inner;
        return b;
      }
      if (family_spans(cat, *ms, h.family())) {
        // A finite functorial semi-norm vanishes on the certified part of N.
        const auto v = eigen_vanishing_inner(cat, std::max<std::size_t>(depth, 1),
                                             cache->limits());
        for (std::size_t x = 0; x < cat.objects.size(); ++x) {
          b.inner[x] = b.inner[x].sum(v.loci[x].space);
        }
      }
      close_under_generators(cat, b.inner);
      b.outer = full_family(cat);
      return b;
    }

    case Kind::sum: {
      Bounds b{full_family(dom), full_family(dom)};
      for (const auto& m : h.members()) {
        const Bounds mb = bounds_rec(m, dom, depth);
        for (std::size_t x = 0; x < dom.objects.size(); ++x) {
          b.inner[x] = b.inner[x].intersect(mb.inner[x]);
          b.outer[x] = b.outer[x].intersect(mb.outer[x]);
        }
      }
      return b;
    }

    case Kind::pullback: {
      const auto& eta = h.transform();
      const Bounds ib = bounds_rec(h.inner(), *eta.target, depth);
      Bounds b;
      for (std::size_t x = 0; x < dom.objects.size(); ++x) {
        b.inner.push_back(ib.inner[x].preimage(eta.components[x]));
        b.outer.push_back(ib.outer[x].preimage(eta.components[x]));
      }
      return b;
    }

    case Kind::reindexed: {
      const auto& f = h.functor();
      const Bounds ib = bounds_rec(h.inner(), *f.target, depth);
      Bounds b;
      for (std::size_t y = 0; y < dom.objects.size(); ++y) {
        b.inner.push_back(ib.inner[f.object_map[y]]);
        b.outer.push_back(ib.outer[f.object_map[y]]);
      }
      return b;
    }

    case Kind::tabulated: {
      std::vector<std::vector<Vector>> zeros(dom.objects.size());
      for (const auto& e : h.table()) {
        if (e.value == Extended(Rational(0))) {
          zeros[dom.object_index(e.element.object)].push_back(e.element.vector);
        }
      }
      Bounds b;
      for (std::size_t x = 0; x < dom.objects.size(); ++x) {
        b.inner.push_back(Subspace::span(dom.objects[x].dim, zeros[x]));
      }
      close_under_generators(dom, b.inner);
      b.outer = full_family(dom);
      return b;
    }
  }
  throw std::logic_error("unhandled semi-norm kind");
}

}  // namespace

std::vector<LocusBounds> loci_of(const SeminormHandle& handle, std::size_t depth) {
  const auto dom = handle.domain();
  if (!dom) {
    throw std::invalid_argument("loci_of: semi-norm has no category attached");
  }
  const Bounds b = bounds_rec(handle, *dom, depth);
  std::vector<LocusBounds> out;
  for (std::size_t x = 0; x < dom->objects.size(); ++x) {
    out.push_back({dom->objects[x].name, b.inner[x], b.outer[x]});
  }
  return out;
}

std::vector<LocusBounds> bounds_from(const std::vector<Locus>& loci) {
  std::vector<LocusBounds> out;
  for (const auto& l : loci) {
    const std::size_t n = l.space.ambient_dim();
    switch (l.status) {
      case LocusStatus::exact:
        out.push_back({l.object, l.space, l.space});
        break;
      case LocusStatus::inner_bound:
        out.push_back({l.object, l.space, Subspace::full(n)});
        break;
      case LocusStatus::outer_bound:
        out.push_back({l.object, Subspace::zero(n), l.space});
        break;
    }
  }
  return out;
}

CarryVerdict carries(const std::vector<LocusBounds>& sigma, const std::vector<LocusBounds>& tau) {
  if (sigma.size() != tau.size()) {
    throw std::invalid_argument("carries: semi-norms live on different categories");
  }
  CarryVerdict v;
  for (std::size_t x = 0; x < sigma.size(); ++x) {
    if (sigma[x].object != tau[x].object ||
        sigma[x].inner.ambient_dim() != tau[x].inner.ambient_dim()) {
      throw std::invalid_argument("carries: object " + sigma[x].object + " does not match");
    }
    for (const auto& b : sigma[x].inner.basis_vectors()) {
      if (!tau[x].outer.contains(b)) {
        v.kind = CarryVerdict::Kind::violated;
        v.object = sigma[x].object;
        v.witness = b;
        v.reason = "certified vanishing for the first semi-norm, positive for the second";
        return v;
      }
    }
    if (!tau[x].inner.contains(sigma[x].outer)) {
      v.undetermined_objects.push_back(sigma[x].object);
    }
  }
  if (v.undetermined_objects.empty()) {
    v.kind = CarryVerdict::Kind::carries;
    v.reason = "locus containment holds at every object";
  } else {
    v.kind = CarryVerdict::Kind::undetermined;
    v.reason = "bounds do not separate the loci";
  }
  return v;
}

CarryVerdict carries(const SeminormHandle& sigma, const SeminormHandle& tau, std::size_t depth) {
  if (sigma.same_as(tau)) {
    CarryVerdict v;
    v.kind = CarryVerdict::Kind::carries;
    v.reason = "reflexive";
    return v;
  }
  return carries(loci_of(sigma, depth), loci_of(tau, depth));
}

}  // namespace fsn::locus
