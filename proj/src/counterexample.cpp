#include "fsn/counterexample.hpp"

#include "fsn/simplex.hpp"

#include <algorithm>

namespace fsn::counterexample {

Sequence Sequence::constant(Rational c, std::vector<Rational> prefix) {
  return {std::move(prefix), 0, std::move(c)};
}

Rational Sequence::at(std::size_t m) const {
  if (m < prefix.size()) {
    return prefix[m];
  }
  return slope * Rational(static_cast<unsigned long>(m)) + intercept;
}

namespace {

void check_bounds(const Sequence& s, const Rational& floor, const char* what) {
  if (s.slope < 0) {
    throw std::invalid_argument(std::string(what) + ": negative slope");
  }
  for (std::size_t m = 0; m <= s.prefix.size(); ++m) {
    if (s.at(m) < floor) {
      throw std::invalid_argument(std::string(what) + ": value at " + std::to_string(m) +
                                  " is below " + exactq::to_string(floor));
    }
  }
}

}  // namespace

void validate_object(const Sequence& w) { check_bounds(w, 1, "object sequence"); }
void validate_weight(const Sequence& v) { check_bounds(v, 0, "weight sequence"); }

Integer degree(std::size_t m, const Sequence& w) { return exactq::ceil(w.at(m)); }

ClosedForm closed_form_value(const Sequence& v, const Sequence& w, std::size_t m_max) {
  validate_weight(v);
  validate_object(w);
  ClosedForm out;
  for (std::size_t m = 0; m <= m_max; ++m) {
    Rational r = v.at(m) / Rational(degree(m, w));
    if (m == 0 || r < out.upper_bound) {
      out.upper_bound = r;
      out.argmin = m;
    }
  }

  // Split the tail by residue mod q, with slope(w) = p/q.  Along
  // m = r + k·q the ceiling grows by exactly k·p, so the ratio is
  // (A + B k) / (C + D k), monotone in k with limit B / D.  Each class thus
  // attains its infimum at k = 0 or approaches B / D from above.
  const std::size_t t = std::max(v.tail_start(), w.tail_start());
  const Integer p = w.slope.get_num();
  const Integer q = w.slope.get_den();
  const std::size_t period = q.get_ui();
  Rational listed = out.upper_bound;
  for (std::size_t m = 0; m < t + period; ++m) {
    listed = std::min(listed, Rational(v.at(m) / Rational(degree(m, w))));
  }
  out.infimum = listed;
  if (p > 0) {
    const Rational limit = v.slope * Rational(q) / Rational(p);
    if (limit < listed) {
      out.infimum = limit;
      out.attained = false;
    }
  }
  out.exact = out.upper_bound == out.infimum;
  return out;
}

fincat::PresentedCategory truncated_category(std::size_t M,
                                             const std::vector<Sequence>& objects) {
  fincat::PresentedCategory cat;
  for (std::size_t m = 0; m <= M; ++m) {
    cat.objects.push_back({std::to_string(m), 1});
  }
  for (std::size_t i = 0; i < objects.size(); ++i) {
    validate_object(objects[i]);
    cat.objects.push_back({"w" + std::to_string(i), 1});
  }
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t m = 0; m <= M; ++m) {
      const Rational d(degree(m, objects[i]));
      cat.generators.push_back({"f_" + std::to_string(m) + "_w" + std::to_string(i),
                                std::to_string(m), "w" + std::to_string(i),
                                exactq::Matrix{{d}}});
    }
  }
  return cat;
}

seminorm::Extended brute_force_value(std::size_t M, const Sequence& v,
                                     const std::vector<Sequence>& objects,
                                     std::size_t target_object, const Rational& target) {
  constexpr std::size_t kMaxObjects = 64;
  if (M + 1 + objects.size() > kMaxObjects) {
    throw InstanceTooLarge("truncation with " + std::to_string(M + 1 + objects.size()) +
                           " objects is too large for the brute-force oracle");
  }
  if (target_object >= objects.size()) {
    throw std::invalid_argument("brute_force_value: no such object sequence");
  }
  validate_weight(v);
  auto cat = std::make_shared<const fincat::PresentedCategory>(truncated_category(M, objects));
  seminorm::GeneratingFamily fam;
  for (std::size_t m = 0; m <= M; ++m) {
    fam.entries.push_back({std::to_string(m), {Rational(1)}, v.at(m)});
  }
  fincat::MorphismCache cache(cat);
  const auto prog = seminorm::build_program(
      cache, fam, {"w" + std::to_string(target_object), {target}}, 1);
  const auto sol = simplex::enumerate_basic_optima(prog.problem, kMaxObjects);
  if (!sol.optimal()) {
    return seminorm::Extended::infinity();
  }
  return sol.value;
}

seminorm::Extended brute_force_value(std::size_t M, const Sequence& v, const Sequence& w,
                                     const Rational& target) {
  return brute_force_value(M, v, std::vector<Sequence>{w}, 0, target);
}

Sequence derived_object(const Sequence& v) {
  validate_weight(v);
  if (v.slope != 0) {
    throw std::invalid_argument("derived_object: v must be eventually constant");
  }
  Sequence w;
  for (std::size_t m = 0; m < v.prefix.size(); ++m) {
    w.prefix.push_back(Rational(static_cast<unsigned long>(m)) * v.prefix[m] + 1);
  }
  w.slope = v.intercept;
  w.intercept = 1;
  return w;
}

GapReport gap_demo(const Sequence& v, std::size_t m_max) {
  GapReport r;
  r.v = v;
  r.w = derived_object(v);
  const ClosedForm self = closed_form_value(r.w, r.w, 0);
  r.lower_bound_w = self.infimum;
  r.lower_bound_attained = self.attained;
  r.lower_bound_certified = self.infimum >= Rational(1, 2);
  r.all_rows_hold = true;
  for (std::size_t m = 1; m <= m_max; ++m) {
    GapRow row;
    row.m = m;
    row.v = v.at(m);
    row.w = r.w.at(m);
    row.d = degree(m, r.w);
    row.upper_bound = row.v / Rational(row.d);
    row.bound = Rational(1, static_cast<unsigned long>(m));
    row.holds = row.upper_bound <= row.bound;
    r.all_rows_hold = r.all_rows_hold && row.holds;
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace fsn::counterexample
