#include "fsn/homology.hpp"

#include "fsn/linalg.hpp"
#include "fsn/simplex.hpp"

#include <algorithm>
#include <set>

namespace fsn::homology {

SimplicialComplex SimplicialComplex::make(std::size_t vertex_count,
                                          std::vector<Simplex> simplices) {
  std::set<Simplex> all;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    all.insert({v});
  }
  for (auto& s : simplices) {
    if (s.empty()) {
      throw std::invalid_argument("empty simplex");
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument("simplex repeats a vertex");
    }
    if (s.back() >= vertex_count) {
      throw std::invalid_argument("simplex vertex " + std::to_string(s.back()) +
                                  " out of range");
    }
    if (s.size() > 1 && !all.insert(s).second) {
      throw std::invalid_argument("duplicate simplex");
    }
  }
  for (const auto& s : all) {
    if (s.size() < 2) {
      continue;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      if (all.count(face) == 0) {
        throw std::invalid_argument("complex is not closed under faces: missing a face of a " +
                                    std::to_string(s.size() - 1) + "-simplex");
      }
    }
  }
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  for (const auto& s : all) {
    const std::size_t d = s.size() - 1;
    if (k.by_dim_.size() <= d) {
      k.by_dim_.resize(d + 1);
    }
    k.by_dim_[d].push_back(s);
  }
  // std::set order is lexicographic, so each list is already sorted.
  for (auto& list : k.by_dim_) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      k.index_.emplace(list[i], i);
    }
  }
  return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t d) const {
  static const std::vector<Simplex> none;
  return d < by_dim_.size() ? by_dim_[d] : none;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Matrix boundary_matrix(const SimplicialComplex& k, std::size_t d) {
  const std::size_t rows = d == 0 ? 0 : k.count(d - 1);
  Matrix m = Matrix::zero(rows, k.count(d));
  if (d == 0) {
    return m;
  }
  const auto& cells = k.simplices(d);
  for (std::size_t j = 0; j < cells.size(); ++j) {
    for (std::size_t i = 0; i < cells[j].size(); ++i) {
      Simplex face = cells[j];
      face.erase(face.begin() + static_cast<long>(i));
      m(*k.index_of(face), j) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

HomologyBasis homology_basis(const SimplicialComplex& k, std::size_t d) {
  const std::size_t n = k.count(d);
  const exactq::Subspace cycles = exactq::kernel_basis(boundary_matrix(k, d));
  const exactq::Subspace boundaries = exactq::Subspace::column_space(boundary_matrix(k, d + 1));

  exactq::Subspace acc = boundaries;
  std::vector<Vector> reps;
  for (const auto& z : cycles.basis_vectors()) {
    if (!acc.contains(z)) {
      reps.push_back(z);
      acc = acc.sum(exactq::Subspace::span(n, {z}));
    }
  }
  HomologyBasis out;
  out.degree = d;
  out.cycles = Matrix::from_columns(reps, n);
  // Coordinates in the basis [boundaries | reps] of the cycle space; keep the
  // rows belonging to reps.  A left inverse comes from the normal equations.
  const Matrix full = boundaries.basis().hconcat(out.cycles);
  const Matrix gram = full.transpose() * full;
  const auto inv = exactq::inverse(gram);
  if (!inv) {
    throw std::logic_error("homology_basis: cycle basis is degenerate");
  }
  const Matrix left = *inv * full.transpose();
  std::vector<std::size_t> rows;
  for (std::size_t i = boundaries.dim(); i < full.cols(); ++i) {
    rows.push_back(i);
  }
  out.projection = left.select_rows(rows);
  if (n == 0) {
    out.projection = Matrix::zero(0, 0);
  }
  return out;
}

void validate_class(const SimplicialComplex& k, const HomologyClass& c) {
  if (c.cycle.size() != k.count(c.degree)) {
    throw std::invalid_argument("chain has " + std::to_string(c.cycle.size()) +
                                " coefficients, complex has " +
                                std::to_string(k.count(c.degree)) + " simplices of dimension " +
                                std::to_string(c.degree));
  }
  if (!exactq::is_zero(boundary_matrix(k, c.degree).apply(c.cycle))) {
    throw std::invalid_argument("chain is not a cycle");
  }
}

Rational l1_simplicial(const SimplicialComplex& k, const HomologyClass& c) {
  validate_class(k, c);
  const std::size_t n = c.cycle.size();
  // c' represents the same class iff L c' = L z for L spanning the
  // annihilator of the boundaries.
  const Matrix l =
      exactq::Subspace::column_space(boundary_matrix(k, c.degree + 1)).annihilator();
  simplex::L1Problem p;
  p.columns = l.rows() == 0 ? Matrix::zero(0, n) : l;
  p.target = l.rows() == 0 ? Vector{} : l.apply(c.cycle);
  p.weights.assign(n, Rational(1));
  const auto sol = simplex::min_weighted_l1(p);
  if (!sol.optimal()) {
    throw std::logic_error("l1_simplicial: the cycle does not represent itself");
  }
  return sol.value;
}

Matrix chain_map(const SimplicialComplex& k, const SimplicialComplex& l,
                 const std::vector<std::size_t>& vertex_map, std::size_t d) {
  if (vertex_map.size() != k.vertex_count()) {
    throw std::invalid_argument("chain_map: vertex map has the wrong length");
  }
  Matrix m = Matrix::zero(l.count(d), k.count(d));
  const auto& cells = k.simplices(d);
  for (std::size_t j = 0; j < cells.size(); ++j) {
    std::vector<std::size_t> img;
    for (auto v : cells[j]) {
      if (vertex_map[v] >= l.vertex_count()) {
        throw std::invalid_argument("chain_map: vertex image out of range");
      }
      img.push_back(vertex_map[v]);
    }
    // Sort while tracking the permutation sign.
    int sign = 1;
    for (std::size_t a = 0; a < img.size(); ++a) {
      for (std::size_t b = 0; b + 1 < img.size() - a; ++b) {
        if (img[b] > img[b + 1]) {
          std::swap(img[b], img[b + 1]);
          sign = -sign;
        }
      }
    }
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
      continue;
    }
    auto idx = l.index_of(img);
    if (!idx) {
      throw std::invalid_argument("chain_map: image of a simplex is not a simplex");
    }
    m(*idx, j) = sign;
  }
  return m;
}

fincat::PresentedCategory circle_model_bridge() {
  fincat::PresentedCategory cat;
  cat.objects.push_back({"S1", 1});
  cat.generators.push_back({"deg2", "S1", "S1", Matrix{{Rational(2)}}});
  return cat;
}

}  // namespace fsn::homology
