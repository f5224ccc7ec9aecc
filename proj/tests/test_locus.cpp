#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fsn/homology.hpp"
#include "fsn/locus.hpp"
#include "random_instances.hpp"

using namespace fsn;
using exactq::Matrix;
using exactq::Rational;
using exactq::Vector;
using namespace fsn::locus;
using seminorm::GeneratingFamily;
using seminorm::SeminormHandle;

namespace {
Rational q(long n, long d = 1) { return exactq::make_rational(n, d); }

PresentedCategory idempotent() {
  PresentedCategory c;
  c.objects = {{"X", 2}};
  c.generators = {{"p", "X", "X", Matrix{{q(1), q(0)}, {q(0), q(0)}}}};
  return c;
}

PresentedCategory unipotent() {
  PresentedCategory c;
  c.objects = {{"X", 2}};
  c.generators = {{"u", "X", "X", Matrix{{q(1), q(1)}, {q(0), q(1)}}}};
  return c;
}
}  // namespace

TEST_CASE("eigen inner bounds") {
  auto circ = eigen_vanishing_inner(homology::circle_model_bridge(), 3);
  CHECK(circ.loci[0].space.is_full());
  REQUIRE(circ.certificates.size() == 1);
  CHECK(circ.certificates[0].eigenvalue == 2);
  CHECK(circ.certificates[0].verify(homology::circle_model_bridge()));

  CHECK(eigen_vanishing_inner(idempotent(), 4).loci[0].space.is_zero());

  PresentedCategory bare;
  bare.objects = {{"A", 3}};
  CHECK(eigen_vanishing_inner(bare, 2).loci[0].space.is_zero());
  CHECK_THROWS(eigen_vanishing_inner(bare, 0));
}

TEST_CASE("inner bounds propagate along generators") {
  // Expanding endomorphism on A, pushed to B by f; nothing comes back.
  PresentedCategory c;
  c.objects = {{"A", 2}, {"B", 1}};
  c.generators = {{"e", "A", "A", Matrix{{q(3), q(0)}, {q(0), q(1)}}},
                  {"f", "A", "B", Matrix{{q(1), q(1)}}}};
  auto in = eigen_vanishing_inner(c, 2);
  CHECK(in.loci[0].space == exactq::Subspace::span(2, {{q(1), q(0)}}));
  CHECK(in.loci[1].space.is_full());
  for (const auto& cert : in.certificates) {
    CHECK(cert.verify(c));
  }
  auto u = universal_locus(c, 2);
  CHECK(u.quotient_stabilized);
  CHECK(u.loci[0].status == LocusStatus::exact);
}

TEST_CASE("certificates are checked") {
  VanishingCertificate bogus{"S1", {"deg2"}, q(3), {q(1)}};
  CHECK_FALSE(bogus.verify(homology::circle_model_bridge()));
  VanishingCertificate small{"S1", {}, q(1), {q(1)}};
  CHECK_FALSE(small.verify(homology::circle_model_bridge()));
}

TEST_CASE("universal locus examples") {
  auto circ = universal_locus(homology::circle_model_bridge(), 4);
  CHECK(circ.loci[0].status == LocusStatus::exact);
  CHECK(circ.loci[0].space.is_full());
  CHECK(circ.quotient_stabilized);

  auto idem = universal_locus(idempotent(), 4);
  CHECK(idem.loci[0].status == LocusStatus::exact);
  CHECK(idem.loci[0].space.is_zero());

  auto uni = universal_locus(unipotent(), 4, 20);
  CHECK(uni.loci[0].status == LocusStatus::inner_bound);
  CHECK(uni.loci[0].space.is_zero());
  CHECK_FALSE(uni.quotient_stabilized);
}

TEST_CASE("quotient functor and orbit norm") {
  PresentedCategory c;
  c.objects = {{"X", 2}};
  c.generators = {{"g", "X", "X", Matrix{{q(2), q(5)}, {q(0), q(-1)}}}};
  auto in = eigen_vanishing_inner(c, 2);
  REQUIRE(in.loci[0].space.dim() == 1);
  std::vector<exactq::Subspace> v{in.loci[0].space};
  auto quo = quotient_functor(c, v);
  CHECK(quo.category.objects[0].dim == 1);
  CHECK(quo.category.generators[0].matrix == Matrix{{q(-1)}});
  CHECK((quo.projection[0] * v[0].basis()).is_zero());
  auto ms = fincat::enumerate_morphisms(quo.category, 8);
  CHECK(ms.stabilized);
  // The orbit norm is functorial and positive on the quotient.
  for (const auto& x : {Vector{q(1)}, Vector{q(-3, 2)}}) {
    const Rational n = orbit_norm(quo.category, ms, 0, x);
    CHECK(n > 0);
    CHECK(orbit_norm(quo.category, ms, 0, quo.category.generators[0].matrix.apply(x)) <= n);
  }
  CHECK_THROWS(quotient_functor(c, {exactq::Subspace::span(2, {{q(0), q(1)}})}));
}

TEST_CASE("exact locus on stabilized categories") {
  auto c = idempotent();
  GeneratingFamily pos{{{"X", {q(1), q(0)}, q(1)}, {"X", {q(0), q(1)}, q(2)}}};
  auto ex = exact_locus_on_stabilized(c, pos, "X");
  CHECK(ex.locus.space.is_zero());
  CHECK(ex.complement.size() == 2);

  GeneratingFamily zero_w{{{"X", {q(1), q(1)}, q(0)}, {"X", {q(0), q(1)}, q(2)}}};
  ex = exact_locus_on_stabilized(c, zero_w, "X");
  // (1,1) and its image p(1,1) = (1,0) are free
  CHECK(ex.locus.space.is_full());

  GeneratingFamily circ_f{{{"S1", {q(1)}, q(1)}}};
  fincat::Limits lim;
  lim.max_depth = 30;
  CHECK_THROWS_AS(exact_locus_on_stabilized(homology::circle_model_bridge(), circ_f, "S1", lim),
                  NotStabilized);
}

TEST_CASE("loci of handles and carries") {
  auto cat = std::make_shared<const PresentedCategory>(idempotent());
  GeneratingFamily pos{{{"X", {q(1), q(0)}, q(1)}, {"X", {q(0), q(1)}, q(2)}}};
  auto g = SeminormHandle::generated(cat, pos);
  auto t = SeminormHandle::trivial(cat);

  auto lg = loci_of(g, 4);
  CHECK(lg[0].exact());
  CHECK(lg[0].inner.is_zero());
  auto lt = loci_of(t, 4);
  CHECK(lt[0].inner.is_full());

  CHECK(carries(g, g, 4).kind == CarryVerdict::Kind::carries);
  CHECK(carries(g, g, 4).reason == "reflexive");
  auto v = carries(t, g, 4);
  REQUIRE(v.kind == CarryVerdict::Kind::violated);
  CHECK_FALSE(exactq::is_zero(v.witness));
  CHECK(carries(g, t, 4).kind == CarryVerdict::Kind::carries);

  // weights v' >= v: v' carries v
  GeneratingFamily heavier{{{"X", {q(1), q(0)}, q(3)}, {"X", {q(0), q(1)}, q(2)}}};
  GeneratingFamily lighter{{{"X", {q(1), q(0)}, q(0)}, {"X", {q(0), q(1)}, q(2)}}};
  auto h = SeminormHandle::generated(cat, heavier);
  auto l = SeminormHandle::generated(cat, lighter);
  CHECK(carries(h, l, 4).kind == CarryVerdict::Kind::carries);
  CHECK(carries(l, h, 4).kind == CarryVerdict::Kind::violated);

  // sums intersect loci, pullbacks take preimages
  auto s = SeminormHandle::sum({l, t});
  CHECK(loci_of(s, 4)[0].inner == loci_of(l, 4)[0].inner);
  seminorm::NatTransform swap{cat, cat, {Matrix::identity(2)}};
  auto pb = SeminormHandle::pullback(swap, l);
  CHECK(loci_of(pb, 4)[0].inner == loci_of(l, 4)[0].inner);
}

TEST_CASE("circle: the generated semi-norm vanishes identically") {
  auto cat = std::make_shared<const PresentedCategory>(homology::circle_model_bridge());
  auto g = SeminormHandle::generated(cat, GeneratingFamily{{{"S1", {q(1)}, q(1)}}});
  auto l = loci_of(g, 3);
  CHECK(l[0].exact());
  CHECK(l[0].inner.is_full());
}

TEST_CASE("unipotent: generated loci stay undetermined") {
  auto cat = std::make_shared<const PresentedCategory>(unipotent());
  auto g = SeminormHandle::generated(
      cat, GeneratingFamily{{{"X", {q(1), q(0)}, q(1)}, {"X", {q(0), q(1)}, q(1)}}});
  auto l = loci_of(g, 3);
  CHECK_FALSE(l[0].exact());
  CHECK(carries(loci_of(SeminormHandle::trivial(cat), 3), l).kind ==
        CarryVerdict::Kind::undetermined);
}

TEST_CASE("bounds from loci") {
  Locus in{"X", exactq::Subspace::span(2, {{q(1), q(0)}}), LocusStatus::inner_bound};
  Locus out{"X", exactq::Subspace::span(2, {{q(1), q(0)}}), LocusStatus::outer_bound};
  auto bi = bounds_from({in});
  auto bo = bounds_from({out});
  CHECK(bi[0].outer.is_full());
  CHECK(bo[0].inner.is_zero());
  // σ has locus ⊇ x-axis, τ has locus ⊆ x-axis: nothing is decided
  CHECK(carries(bi, bo).kind == CarryVerdict::Kind::undetermined);
  Locus exact_y{"X", exactq::Subspace::span(2, {{q(0), q(1)}}), LocusStatus::exact};
  CHECK(carries(bi, bounds_from({exact_y})).kind == CarryVerdict::Kind::violated);
}
