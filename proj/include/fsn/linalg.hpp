#pragma once

// Exact linear algebra kernel: reduced row echelon form, kernels, linear
// solves, subspaces and rational eigenpairs.

#include "fsn/matrix.hpp"
#include "fsn/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fsn::exactq {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Some x with m·x = b, or nullopt when the system is inconsistent.  Free
// variables are set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

// A linear subspace of Q^n held by a basis (the columns of `basis`).
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  // Span of arbitrary vectors; keeps an independent subset of the input, in
  // input order.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace column_space(const Matrix& m);
  // Throws std::invalid_argument when the columns are dependent.
  static Subspace from_basis(const Matrix& basis);

  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.columns(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // m·V, a subspace of Q^{m.rows()}.
  Subspace image(const Matrix& m) const;
  // {x : m·x ∈ V}, a subspace of Q^{m.cols()}.
  Subspace preimage(const Matrix& m) const;
  // Rows span the annihilator: a·v = 0 for every v in V iff a is a row combination.
  Matrix annihilator() const;
  // Standard basis vectors that extend the basis of V to a basis of Q^n,
  // chosen greedily by index.
  std::vector<Vector> complement_basis() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

Subspace kernel_basis(const Matrix& m);

// Coefficients low to high: p(x) = c[0] + c[1] x + ... + c[n] x^n.
using Polynomial = std::vector<Rational>;

// det(x·I - m), monic of degree m.rows().
Polynomial characteristic_polynomial(const Matrix& m);
// Distinct rational roots in ascending order.
std::vector<Rational> rational_roots(const Polynomial& p);

struct EigenPair {
  Rational eigenvalue;
  Subspace eigenspace;
};

// Exactly the rational eigenvalues of m (ascending), each with its full
// eigenspace.  Irrational and complex eigenvalues are omitted.
std::vector<EigenPair> rational_eigenpairs(const Matrix& m);

}  // namespace fsn::exactq
