#include "fsn/diagonal.hpp"

#include <algorithm>
#include <set>

namespace fsn::diagonal {

Enumeration Enumeration::from_family(const seminorm::GeneratingFamily& fam) {
  Enumeration en;
  for (const auto& e : fam.entries) {
    en.entries.push_back({e.object, e.vector});
  }
  return en;
}

void Enumeration::validate(const PresentedCategory& cat) const {
  std::set<std::pair<std::string, Vector>> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (cat.dim(e.object) != e.vector.size()) {
      throw seminorm::ObjectMismatch("enumeration entry " + std::to_string(i) +
                                     " has the wrong length");
    }
    if (!seen.emplace(e.object, e.vector).second) {
      throw std::invalid_argument("enumeration entry " + std::to_string(i) + " is repeated");
    }
  }
}

seminorm::GeneratingFamily Enumeration::with_weights(const std::vector<Rational>& w) const {
  if (w.size() > entries.size()) {
    throw std::invalid_argument("more weights than enumeration entries");
  }
  seminorm::GeneratingFamily fam;
  for (std::size_t i = 0; i < w.size(); ++i) {
    fam.entries.push_back({entries[i].object, entries[i].vector, w[i]});
  }
  return fam;
}

Weights diagonal_weights(const Enumeration& en, const std::vector<Weights>& families,
                         std::size_t n_max) {
  if (n_max > en.size()) {
    throw std::invalid_argument("n_max exceeds the enumeration length");
  }
  Weights v(n_max, Rational(1));
  for (std::size_t n = 0; n < n_max; ++n) {
    for (std::size_t j = 0; j <= n && j < families.size(); ++j) {
      if (families[j].size() < n_max) {
        throw std::invalid_argument("weight list " + std::to_string(j) + " is too short");
      }
      v[n] = std::max(v[n], families[j][n]);
    }
  }
  return v;
}

DiagonalReport q_constant(const fincat::MorphismCache& cache, const Enumeration& en,
                          const Weights& v, const Weights& v_m, std::size_t m,
                          std::size_t depth) {
  if (v.size() != v_m.size() || v.size() > en.size()) {
    throw std::invalid_argument("q_constant: weight lists disagree in length");
  }
  if (m >= v.size()) {
    throw std::invalid_argument("q_constant: m lies beyond the prefix");
  }
  en.validate(cache.category());
  const auto fam_m = en.with_weights(v_m);

  DiagonalReport r;
  r.v = v;
  r.m = m;
  r.prefix_length = v.size();
  r.depth = depth;
  r.exact = true;
  for (std::size_t k = 0; k <= m; ++k) {
    const auto val = seminorm::eval_generated(cache, fam_m, en.entries[k], depth).value;
    r.exact = r.exact && val.exact;
    r.vm_values.push_back(val.upper_bound);
    // α_k represents itself, so the value is finite.
    const Rational& u = val.upper_bound.value();
    r.q_values.push_back(u == 0 ? Rational(1) : Rational(v[k] / u));
    r.Q = std::min(r.Q, r.q_values.back());
  }
  return r;
}

DiagonalReport verify_carry_bound(const fincat::MorphismCache& cache, const Enumeration& en,
                                  const Weights& v, const Weights& v_m, std::size_t m,
                                  const std::vector<Element>& samples, std::size_t depth) {
  DiagonalReport r = q_constant(cache, en, v, v_m, m, depth);
  const auto fam = en.with_weights(v);
  const auto fam_m = en.with_weights(v_m);
  const std::size_t rhs_depth = r.exact ? depth : 2 * depth;
  for (const auto& s : samples) {
    CarrySample cs;
    cs.alpha = s.vector;
    cs.object = s.object;
    cs.lhs = seminorm::eval_generated(cache, fam, s, depth).value.upper_bound;
    cs.rhs = r.Q * seminorm::eval_generated(cache, fam_m, s, rhs_depth).value.upper_bound;
    cs.holds = cs.rhs <= cs.lhs;
    r.samples.push_back(std::move(cs));
  }
  return r;
}

CarryFamily carry_family(std::shared_ptr<const fincat::MorphismCache> cache,
                         const Enumeration& en, const std::vector<SeminormHandle>& handles,
                         std::size_t n_max, std::size_t depth) {
  if (n_max > en.size()) {
    throw std::invalid_argument("n_max exceeds the enumeration length");
  }
  en.validate(cache->category());
  std::vector<Weights> members;
  bool exact = true;
  for (const auto& h : handles) {
    Weights w;
    for (std::size_t n = 0; n < n_max; ++n) {
      const auto val = seminorm::eval(h, en.entries[n], depth);
      if (val.upper_bound.is_infinite()) {
        throw std::invalid_argument("carry_family: a member semi-norm is infinite at entry " +
                                    std::to_string(n));
      }
      exact = exact && val.exact;
      w.push_back(val.upper_bound.value());
    }
    members.push_back(std::move(w));
  }
  Weights v = diagonal_weights(en, members, n_max);
  auto handle = SeminormHandle::generated(std::move(cache), en.with_weights(v));
  return {std::move(handle), std::move(v), std::move(members), exact};
}

}  // namespace fsn::diagonal
