// Acceptance suite: one PASS/FAIL line per criterion, fixed seeds.

#include "fsn/counterexample.hpp"
#include "fsn/diagonal.hpp"
#include "fsn/homology.hpp"
#include "fsn/linalg.hpp"
#include "fsn/locus.hpp"
#include "fsn/seminorm.hpp"
#include "fsn/simplex.hpp"
#include "random_instances.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

using namespace fsn;
using exactq::Matrix;
using exactq::Rational;
using exactq::Vector;
using seminorm::Element;
using seminorm::Extended;
using seminorm::SeminormHandle;

namespace {

constexpr std::size_t kDepth = 32;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) {
      detail = why;
    }
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome guarded(const std::function<Outcome()>& run) {
  try {
    return run();
  } catch (const std::exception& e) {
    Outcome o;
    o.fail(std::string("exception: ") + e.what());
    return o;
  }
}

void report(int n, const char* name, const Outcome& o, double secs, double budget = 0) {
  bool ok = o.ok;
  std::string detail = o.detail;
  if (budget > 0 && secs >= budget) {
    ok = false;
    detail += " runtime over " + std::to_string(budget) + " s";
  }
  std::printf("%s %d %s: %s [%.3f s]\n", ok ? "PASS" : "FAIL", n, name, detail.c_str(), secs);
  std::fflush(stdout);
}

bool geq(const Extended& a, const Extended& b) { return b <= a; }

// ---- shared random suite -------------------------------------------------

struct Instance {
  std::shared_ptr<const fincat::PresentedCategory> cat;
  std::shared_ptr<const fincat::MorphismCache> cache;
  diagonal::Enumeration en;
  std::vector<diagonal::Weights> families;  // v_0 .. v_4
  diagonal::Weights v;
  std::vector<Element> samples;
};

std::vector<Instance> build_suite(std::size_t count, std::uint64_t seed) {
  testing::Rng rng(seed);
  std::vector<Instance> suite;
  fincat::Limits lim;
  lim.max_depth = kDepth;
  lim.max_morphisms = 300;
  while (suite.size() < count) {
    Instance in;
    in.cat = std::make_shared<const fincat::PresentedCategory>(
        testing::random_stabilized_category(rng, 3, 3, kDepth, 300));
    in.cache = std::make_shared<const fincat::MorphismCache>(in.cat, lim);
    const std::size_t n = testing::pick(rng, 5, 7);
    for (std::size_t tries = 0; in.en.size() < n && tries < 100; ++tries) {
      Element e = testing::random_element(rng, *in.cat);
      if (exactq::is_zero(e.vector)) {
        continue;
      }
      bool dup = false;
      for (const auto& x : in.en.entries) {
        dup = dup || (x.object == e.object && x.vector == e.vector);
      }
      if (!dup) {
        in.en.entries.push_back(e);
      }
    }
    if (in.en.size() < 5) {
      continue;  // too few distinct nonzero vectors for m <= 4
    }
    for (std::size_t m = 0; m <= 4; ++m) {
      diagonal::Weights w;
      for (std::size_t k = 0; k < in.en.size(); ++k) {
        w.push_back(testing::coin(rng, 0.25) ? Rational(0) : testing::nonnegative_rational(rng, 8, 3));
      }
      in.families.push_back(w);
    }
    in.v = diagonal::diagonal_weights(in.en, in.families, in.en.size());
    for (int s = 0; s < 20; ++s) {
      in.samples.push_back(testing::random_element(rng, *in.cat));
    }
    suite.push_back(std::move(in));
  }
  return suite;
}

counterexample::Sequence random_object_sequence(testing::Rng& rng) {
  counterexample::Sequence w;
  const std::size_t len = testing::pick(rng, 0, 8);
  for (std::size_t i = 0; i < len; ++i) {
    w.prefix.push_back(1 + testing::nonnegative_rational(rng, 12, 5));
  }
  w.slope = testing::nonnegative_rational(rng, 4, 3);
  w.intercept = 1 + testing::nonnegative_rational(rng, 9, 4);
  return w;
}

counterexample::Sequence random_weight_sequence(testing::Rng& rng) {
  counterexample::Sequence v;
  const std::size_t len = testing::pick(rng, 0, 6);
  for (std::size_t i = 0; i < len; ++i) {
    v.prefix.push_back(testing::nonnegative_rational(rng, 9, 4));
  }
  v.slope = testing::coin(rng, 0.5) ? Rational(0) : testing::nonnegative_rational(rng, 3, 3);
  v.intercept = testing::nonnegative_rational(rng, 9, 4);
  return v;
}

// ---- criteria -------------------------------------------------------------

Outcome c1_lower_bound() {
  Outcome o;
  testing::Rng rng(101);
  Rational worst = 1;
  for (int t = 0; t < 100; ++t) {
    const auto w = random_object_sequence(rng);
    const auto cf = counterexample::closed_form_value(w, w, 0);
    if (cf.infimum < Rational(1, 2)) {
      o.fail("instance " + std::to_string(t) + " has |1_w|_w = " + cf.infimum.get_str());
    }
    worst = std::min(worst, cf.infimum);
  }
  if (o.ok) {
    o.detail = "100 instances, smallest |1_w|_w = " + worst.get_str();
  }
  return o;
}

Outcome c2_gap() {
  Outcome o;
  const auto one = counterexample::Sequence::constant(1);
  const auto g = counterexample::gap_demo(one, 64);
  const auto w = counterexample::derived_object(one);
  if (counterexample::closed_form_value(one, w, 0).upper_bound != 1) {
    o.fail("m = 0 bound differs from 1");
  }
  if (g.rows.size() != 64) {
    o.fail("expected 64 rows");
  }
  for (const auto& row : g.rows) {
    const Rational expect(1, static_cast<unsigned long>(row.m + 1));
    const Rational over_m(1, static_cast<unsigned long>(row.m));
    if (row.upper_bound != expect) {
      o.fail("m = " + std::to_string(row.m) + ": " + row.upper_bound.get_str());
    }
    if (!(row.upper_bound <= over_m) || !row.holds) {
      o.fail("m = " + std::to_string(row.m) + ": bound above 1/m");
    }
  }
  if (!g.lower_bound_certified) {
    o.fail("|1_w|_w not certified");
  }
  if (o.ok) {
    o.detail = "bounds 1/(m+1) for m = 0..64, |1_w|_w = " + g.lower_bound_w.get_str();
  }
  return o;
}

Outcome c3_closed_form() {
  Outcome o;
  testing::Rng rng(303);
  std::size_t checks = 0;
  for (int t = 0; t < 50; ++t) {
    const auto v = random_weight_sequence(rng);
    const auto w = random_object_sequence(rng);
    for (std::size_t M = 0; M <= 5; ++M) {
      const auto cf = counterexample::closed_form_value(v, w, M);
      const auto bf = counterexample::brute_force_value(M, v, w);
      ++checks;
      if (!(bf == Extended(cf.upper_bound))) {
        o.fail("pair " + std::to_string(t) + " M = " + std::to_string(M) + ": closed form " +
               cf.upper_bound.get_str() + " vs brute force " + bf.to_string());
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(checks) + " truncations agree";
  }
  return o;
}

Outcome c4_circle() {
  Outcome o;
  const auto cat = homology::circle_model_bridge();
  const Rational v(3, 2);
  seminorm::GeneratingFamily fam{{{"S1", {Rational(1)}, v}}};
  Rational scale = 1;
  for (std::size_t k = 0; k <= 10; ++k) {
    const auto ev = seminorm::eval_generated(cat, fam, {"S1", {Rational(1)}}, k);
    if (!(ev.value.upper_bound == Extended(scale * v))) {
      o.fail("depth " + std::to_string(k) + ": " + ev.value.upper_bound.to_string());
    }
    scale /= 2;
  }
  const auto u = locus::universal_locus(cat, 4);
  if (u.loci.size() != 1 || !u.loci[0].space.is_full() ||
      u.loci[0].status != locus::LocusStatus::exact) {
    o.fail("N(S1) is not certified full");
  }
  bool have_two = false;
  for (const auto& c : u.certificates) {
    have_two = have_two || (c.eigenvalue == 2 && c.verify(cat));
  }
  if (!have_two) {
    o.fail("no verified eigen certificate with eigenvalue 2");
  }
  if (o.ok) {
    o.detail = "2^-k * 3/2 at k = 0..10, N(S1) = F(S1) exact, lambda = 2";
  }
  return o;
}

Outcome c5_diagonal(const std::vector<Instance>& suite) {
  Outcome o;
  std::size_t checks = 0;
  std::size_t max_morphisms = 0;
  std::size_t total_morphisms = 0;
  Rational smallest_q = 1;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& in = suite[i];
    const std::size_t count = in.cache->get(kDepth)->morphisms.size();
    max_morphisms = std::max(max_morphisms, count);
    total_morphisms += count;
    for (std::size_t m = 0; m <= 4; ++m) {
      const auto r = diagonal::verify_carry_bound(*in.cache, in.en, in.v, in.families[m], m,
                                                  in.samples, kDepth);
      if (!r.exact) {
        o.fail("instance " + std::to_string(i) + ": values not exact");
      }
      if (!(r.Q > 0) || r.Q > 1) {
        o.fail("instance " + std::to_string(i) + ": Q = " + r.Q.get_str());
      }
      smallest_q = std::min(smallest_q, r.Q);
      for (const auto& s : r.samples) {
        ++checks;
        if (!s.holds) {
          o.fail("instance " + std::to_string(i) + " m = " + std::to_string(m) + ": " +
                 s.lhs.to_string() + " < " + s.rhs.to_string());
        }
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(suite.size()) + " categories, " + std::to_string(checks) +
               " exact checks, smallest Q = " + smallest_q.get_str() + ", morphisms per category " +
               std::to_string(total_morphisms / suite.size()) + " average, " +
               std::to_string(max_morphisms) + " max";
  }
  return o;
}

Outcome c6_generation(const std::vector<Instance>& suite) {
  Outcome o;
  testing::Rng rng(606);
  std::size_t checks = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& in = suite[i];
    const std::string tag = "instance " + std::to_string(i) + ": ";
    const auto fam_v = in.en.with_weights(in.v);
    const auto h_v = SeminormHandle::generated(in.cache, fam_v);

    for (std::size_t n = 0; n < in.en.size(); ++n) {
      const auto val = seminorm::eval(h_v, in.en.entries[n], kDepth);
      ++checks;
      if (!val.exact || !(val.upper_bound <= Extended(in.v[n]))) {
        o.fail(tag + "|alpha|_v > v(alpha)");
      }
    }

    diagonal::Weights bigger = in.v;
    for (auto& x : bigger) {
      x += testing::nonnegative_rational(rng, 3, 2);
    }
    const auto h_big = SeminormHandle::generated(in.cache, in.en.with_weights(bigger));
    for (const auto& s : in.samples) {
      ++checks;
      if (!(seminorm::eval(h_v, s, kDepth).upper_bound <=
            seminorm::eval(h_big, s, kDepth).upper_bound)) {
        o.fail(tag + "not monotone in v");
      }
    }
    ++checks;
    if (locus::carries(h_big, h_v, kDepth).kind != locus::CarryVerdict::Kind::carries) {
      o.fail(tag + "larger weights do not carry");
    }

    // Roundtrip through a random generated semi-norm σ whose family contains
    // the enumeration, so every |α_n|_σ is finite.
    auto sigma_fam = testing::random_family(rng, *in.cat, 3);
    for (const auto& e : in.en.entries) {
      sigma_fam.entries.push_back({e.object, e.vector, testing::nonnegative_rational(rng, 6, 3)});
    }
    const auto sigma = SeminormHandle::generated(in.cache, sigma_fam);
    diagonal::Weights from_sigma;
    for (const auto& e : in.en.entries) {
      const auto val = seminorm::eval(sigma, e, kDepth);
      from_sigma.push_back(val.upper_bound.value());
    }
    const auto h_rt = SeminormHandle::generated(in.cache, in.en.with_weights(from_sigma));
    for (const auto& s : in.samples) {
      ++checks;
      if (!geq(seminorm::eval(h_rt, s, kDepth).upper_bound,
               seminorm::eval(sigma, s, kDepth).upper_bound)) {
        o.fail(tag + "roundtrip below sigma");
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(checks) + " checks, zero violations";
  }
  return o;
}

Outcome c7_lp() {
  Outcome o;
  testing::Rng rng(707);
  std::size_t infeasible = 0;
  for (int t = 0; t < 500; ++t) {
    const auto p = testing::random_l1_problem(rng, 6, 4);
    const auto a = simplex::min_weighted_l1(p);
    const auto b = simplex::enumerate_basic_optima(p, 6);
    if (a.optimal() != b.optimal() || (a.optimal() && a.value != b.value)) {
      o.fail("instance " + std::to_string(t) + " disagrees");
    }
    if (a.optimal() && p.columns.apply(a.coefficients) != p.target) {
      o.fail("instance " + std::to_string(t) + ": solution misses the target");
    }
    infeasible += a.optimal() ? 0 : 1;
  }
  if (o.ok) {
    o.detail = "500 instances agree (" + std::to_string(infeasible) + " infeasible)";
  }
  return o;
}

Outcome c8_homology() {
  Outcome o;
  using homology::SimplicialComplex;
  const auto tri = SimplicialComplex::make(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto hb = homology::homology_basis(tri, 1);
  if (hb.dim() != 1) {
    o.fail("hollow triangle H_1 has dimension " + std::to_string(hb.dim()));
  } else {
    const Rational val = homology::l1_simplicial(tri, {1, hb.cycles.column(0)});
    if (val != 3) {
      o.fail("hollow triangle generator has value " + val.get_str());
    }
  }

  testing::Rng rng(808);
  std::size_t classes = 0;
  for (int t = 0; t < 100; ++t) {
    const auto k = testing::random_complex(rng, 8);
    for (long d = 1; d < k.dimension(); ++d) {
      const auto dd = homology::boundary_matrix(k, static_cast<std::size_t>(d)) *
                      homology::boundary_matrix(k, static_cast<std::size_t>(d + 1));
      if (!dd.is_zero()) {
        o.fail("complex " + std::to_string(t) + ": boundary of boundary nonzero in degree " +
               std::to_string(d + 1));
      }
    }
    // Degree 0: the class of a chain is its vector of component sums a_i.
    std::vector<std::size_t> parent(k.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    if (k.dimension() >= 1) {
      for (const auto& e : k.simplices(1)) {
        parent[root(e[0])] = root(e[1]);
      }
    }
    const Vector chain = testing::small_vector(rng, k.vertex_count(), 3);
    std::map<std::size_t, Rational> sums;
    for (std::size_t x = 0; x < chain.size(); ++x) {
      sums[root(x)] += chain[x];
    }
    Rational expected = 0;
    for (const auto& [r, a] : sums) {
      expected += exactq::abs(a);
    }
    const Rational got = homology::l1_simplicial(k, {0, chain});
    if (got != expected) {
      o.fail("complex " + std::to_string(t) + ": degree-0 value " + got.get_str() +
             " expected " + expected.get_str());
    }
    if (expected != 0) {
      ++classes;
      if (!(got > 0)) {
        o.fail("nonzero degree-0 class with value 0");
      }
    }
  }
  if (o.ok) {
    o.detail = "triangle value 3, " + std::to_string(classes) +
               " nonzero degree-0 classes, dd = 0 on 100 complexes";
  }
  return o;
}

// F ⊕ F on the same shape, with block-diagonal generator matrices.
fincat::PresentedCategory doubled(const fincat::PresentedCategory& cat) {
  fincat::PresentedCategory d = cat;
  for (auto& ob : d.objects) {
    ob.dim *= 2;
  }
  for (auto& g : d.generators) {
    const Matrix& a = g.matrix;
    Matrix b = Matrix::zero(2 * a.rows(), 2 * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        b(i, j) = a(i, j);
        b(a.rows() + i, a.cols() + j) = a(i, j);
      }
    }
    g.matrix = b;
  }
  return d;
}

Outcome c9_pullback(const std::vector<Instance>& suite) {
  Outcome o;
  testing::Rng rng(909);
  std::size_t checked = 0;
  std::size_t transfers = 0;
  for (std::size_t i = 0; i < 20 && i < suite.size(); ++i) {
    const auto& in = suite[i];
    const std::string tag = "instance " + std::to_string(i) + ": ";
    const auto sigma = SeminormHandle::generated(in.cache, testing::random_family(rng, *in.cat, 4));

    // η = [I | c·I]: F ⊕ F => F.
    Rational c = 0;
    while (c == 0) {
      c = testing::small_rational(rng, 3, 2);
    }
    auto source = std::make_shared<const fincat::PresentedCategory>(doubled(*in.cat));
    seminorm::NatTransform eta{source, in.cat, {}};
    std::vector<std::vector<Vector>> samples;
    for (const auto& ob : in.cat->objects) {
      Matrix m = Matrix::zero(ob.dim, 2 * ob.dim);
      for (std::size_t j = 0; j < ob.dim; ++j) {
        m(j, j) = 1;
        m(j, ob.dim + j) = c;
      }
      eta.components.push_back(m);
      std::vector<Vector> s;
      for (int k = 0; k < 3; ++k) {
        s.push_back(testing::small_vector(rng, 2 * ob.dim));
      }
      samples.push_back(s);
    }
    if (!eta.is_natural()) {
      o.fail(tag + "eta not natural");
      continue;
    }
    const auto pulled = SeminormHandle::pullback(eta, sigma);
    const auto rep = seminorm::check_functorial(*source, pulled, kDepth, samples);
    checked += rep.checked;
    if (!rep.ok() || !rep.unverified.empty()) {
      o.fail(tag + std::to_string(rep.violations.size()) + " violations, " +
             std::to_string(rep.unverified.size()) + " unverified");
    }

    const auto id = fincat::FunctorSpec::identity(in.cat);
    std::vector<Matrix> ids;
    for (const auto& ob : in.cat->objects) {
      ids.push_back(Matrix::identity(ob.dim));
    }
    const auto tilde = seminorm::transfer_along_retraction(id, id, ids, ids, sigma);
    for (const auto& s : in.samples) {
      ++transfers;
      const auto a = seminorm::eval(tilde, s, kDepth);
      const auto b = seminorm::eval(sigma, s, kDepth);
      if (!(a.upper_bound == b.upper_bound) || a.exact != b.exact) {
        o.fail(tag + "identity transfer changes a value");
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(checked) + " functoriality checks, " + std::to_string(transfers) +
               " transfer samples, zero violations";
  }
  return o;
}

bool invariant(const fincat::PresentedCategory& cat, const std::vector<Vector>& basis_of_src,
               const exactq::Subspace& dst, const Matrix& f) {
  for (const auto& b : basis_of_src) {
    if (!dst.contains(f.apply(b))) {
      return false;
    }
  }
  (void)cat;
  return true;
}

bool pushforward_invariant(const fincat::PresentedCategory& cat,
                           const std::vector<exactq::Subspace>& spaces) {
  for (const auto& g : cat.generators) {
    const auto s = cat.object_index(g.src);
    const auto t = cat.object_index(g.dst);
    if (!invariant(cat, spaces[s].basis_vectors(), spaces[t], g.matrix)) {
      return false;
    }
  }
  return true;
}

Outcome c10_locus(const std::vector<Instance>& suite) {
  Outcome o;
  testing::Rng rng(1010);
  std::size_t exact_handles = 0;
  std::size_t triples = 0;
  using K = locus::CarryVerdict::Kind;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& in = suite[i];
    const std::string tag = "instance " + std::to_string(i) + ": ";
    const auto fam1 = testing::random_family(rng, *in.cat, 3);
    const auto fam2 = testing::random_family(rng, *in.cat, 3);
    const auto g1 = SeminormHandle::generated(in.cache, fam1);
    const auto g2 = SeminormHandle::generated(in.cache, fam2);
    std::vector<SeminormHandle> handles{
        g1, g2, SeminormHandle::sum({g1, g2}), SeminormHandle::trivial(in.cat),
        SeminormHandle::generated(in.cache, in.en.with_weights(in.v)),
        SeminormHandle::generated(in.cache, in.en.with_weights(in.families[0]))};

    std::vector<std::vector<locus::LocusBounds>> bounds;
    std::vector<bool> exact;
    for (const auto& h : handles) {
      auto b = locus::loci_of(h, kDepth);
      bool all_exact = true;
      std::vector<exactq::Subspace> reported;
      for (const auto& lb : b) {
        if (!lb.outer.contains(lb.inner)) {
          o.fail(tag + "inner not inside outer at " + lb.object);
        }
        all_exact = all_exact && lb.exact();
        reported.push_back(lb.as_locus().space);
      }
      if (!pushforward_invariant(*in.cat, reported)) {
        o.fail(tag + "reported locus not invariant");
      }
      exact.push_back(all_exact);
      exact_handles += all_exact ? 1 : 0;
      bounds.push_back(std::move(b));
    }

    const auto u = locus::universal_locus(*in.cat, 6);
    std::vector<exactq::Subspace> uspaces;
    for (const auto& l : u.loci) {
      uspaces.push_back(l.space);
    }
    if (!pushforward_invariant(*in.cat, uspaces)) {
      o.fail(tag + "universal locus not invariant");
    }

    // Reflexivity on a rebuilt handle with the same description.
    const auto g1_again = SeminormHandle::generated(in.cache, fam1);
    if (exact[0] && locus::carries(g1, g1_again, kDepth).kind != K::carries) {
      o.fail(tag + "carries not reflexive");
    }
    const std::size_t n = handles.size();
    std::vector<std::vector<K>> verdict(n, std::vector<K>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        verdict[a][b] = locus::carries(bounds[a], bounds[b]).kind;
      }
      if (exact[a] && verdict[a][a] != K::carries) {
        o.fail(tag + "carries not reflexive on bounds");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!(exact[a] && exact[b] && exact[c])) {
            continue;
          }
          if (verdict[a][b] == K::carries && verdict[b][c] == K::carries) {
            ++triples;
            if (verdict[a][c] != K::carries) {
              o.fail(tag + "carries not transitive");
            }
          }
        }
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(exact_handles) + " exact handles, " + std::to_string(triples) +
               " transitive triples, zero violations";
  }
  return o;
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  {
    const Outcome o = guarded([&] { return c1_lower_bound(); });
    report(1, "counterexample lower bound", o, seconds_since(t0), 1.0);
  }

  t0 = Clock::now();
  {
    const Outcome o = guarded([&] { return c2_gap(); });
    report(2, "counterexample gap", o, seconds_since(t0));
  }

  t0 = Clock::now();
  {
    const Outcome o = guarded([&] { return c3_closed_form(); });
    report(3, "closed form vs brute force", o, seconds_since(t0));
  }

  t0 = Clock::now();
  {
    const Outcome o = guarded([&] { return c4_circle(); });
    report(4, "circle model", o, seconds_since(t0));
  }

  t0 = Clock::now();
  const auto suite = build_suite(50, 505);
  const double build_secs = seconds_since(t0);
  {
    const Outcome o = guarded([&] { return c5_diagonal(suite); });
    report(5, "diagonal Q bound", o, seconds_since(t0), 60.0);
  }

  t0 = Clock::now();
  {
    const Outcome o = guarded([&] { return c6_generation(suite); });
    report(6, "generation laws", o, seconds_since(t0));
  }

  t0 = Clock::now();
  {
    const Outcome o = guarded([&] { return c7_lp(); });
    report(7, "LP oracle equivalence", o, seconds_since(t0), 30.0);
  }

  t0 = Clock::now();
  {
    const Outcome o = guarded([&] { return c8_homology(); });
    report(8, "homology", o, seconds_since(t0));
  }

  t0 = Clock::now();
  {
    const Outcome o = guarded([&] { return c9_pullback(suite); });
    report(9, "pullback and transfer", o, seconds_since(t0));
  }

  t0 = Clock::now();
  {
    const Outcome o = guarded([&] { return c10_locus(suite); });
    report(10, "locus laws", o, seconds_since(t0));
  }

  std::printf("suite construction: %.3f s\n", build_secs);
  return 0;
}
