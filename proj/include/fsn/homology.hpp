#pragma once

// Finite simplicial complexes, rational simplicial homology and the
// simplicial l1 value of a homology class.  The simplicial value is an upper
// bound for the singular l1-semi-norm, not the same quantity.

#include "fsn/fincat.hpp"
#include "fsn/matrix.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace fsn::homology {

using exactq::Matrix;
using exactq::Rational;
using exactq::Vector;

using Simplex = std::vector<std::size_t>;  // strictly increasing vertex indices

// Every vertex 0..vertex_count-1 is a 0-simplex; all other simplices must have
// their faces listed.  Simplices of each dimension are kept in lexicographic
// order, which fixes the chain bases.
class SimplicialComplex {
 public:
  static SimplicialComplex make(std::size_t vertex_count, std::vector<Simplex> simplices);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  // -1 for the empty complex.
  long dimension() const noexcept { return static_cast<long>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(std::size_t d) const;
  std::size_t count(std::size_t d) const { return simplices(d).size(); }
  std::optional<std::size_t> index_of(const Simplex& s) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
};

// ∂_d : C_d -> C_{d-1}; removing the vertex in position i carries sign (-1)^i.
Matrix boundary_matrix(const SimplicialComplex& k, std::size_t d);

struct HomologyBasis {
  std::size_t degree = 0;
  Matrix cycles;      // columns are representative cycles
  Matrix projection;  // cycles -> homology coordinates
  std::size_t dim() const noexcept { return cycles.cols(); }
};

HomologyBasis homology_basis(const SimplicialComplex& k, std::size_t d);

struct HomologyClass {
  std::size_t degree = 0;
  Vector cycle;
};

// Throws std::invalid_argument unless the chain has the right length and is a
// cycle.
void validate_class(const SimplicialComplex& k, const HomologyClass& c);

// min |z + ∂y|_1 over rational (d+1)-chains y.
Rational l1_simplicial(const SimplicialComplex& k, const HomologyClass& c);

// Chain map C_d(K) -> C_d(L) of a vertex map; degenerate images map to 0.
Matrix chain_map(const SimplicialComplex& k, const SimplicialComplex& l,
                 const std::vector<std::size_t>& vertex_map, std::size_t d);

// One object of dimension 1 with a degree-2 self-map.
fincat::PresentedCategory circle_model_bridge();

}  // namespace fsn::homology
