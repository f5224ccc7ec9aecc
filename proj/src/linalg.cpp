#include "fsn/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace fsn::exactq {

RrefResult rref(const Matrix& m) {
  RrefResult r{m, {}, 0};
  Matrix& a = r.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t p = lead_row;
    while (p < rows && a(p, c) == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    if (p != lead_row) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(a(p, j), a(lead_row, j));
      }
    }
    const Rational inv = 1 / Rational(a(lead_row, c));
    for (std::size_t j = c; j < cols; ++j) {
      a(lead_row, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead_row || a(i, c) == 0) {
        continue;
      }
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        a(i, j) -= f * a(lead_row, j);
      }
    }
    r.pivots.push_back(c);
    ++lead_row;
  }
  r.rank = r.pivots.size();
  return r;
}

std::size_t rank(const Matrix& m) {
  return rref(m).rank;
}

Subspace kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) {
    is_pivot[p] = true;
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    Vector x = zero_vector(n);
    x[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      x[r.pivots[i]] = -r.reduced(i, f);
    }
    basis.push_back(std::move(x));
  }
  return Subspace::from_basis(Matrix::from_columns(basis, n));
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("solve: right-hand side length mismatch");
  }
  Matrix aug = m.hconcat(Matrix::from_columns({b}, m.rows()));
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) {
    return std::nullopt;
  }
  Vector x = zero_vector(m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    x[r.pivots[i]] = r.reduced(i, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) {
    return std::nullopt;
  }
  const std::size_t n = m.rows();
  if (n == 0) {
    return Matrix(0, 0);
  }
  const RrefResult r = rref(m.hconcat(Matrix::identity(n)));
  if (r.rank < n || r.pivots[n - 1] != n - 1) {
    return std::nullopt;
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inv(i, j) = r.reduced(i, n + j);
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(Matrix(ambient_dim, 0));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(Matrix::identity(ambient_dim));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) {
    return zero(ambient_dim);
  }
  return column_space(Matrix::from_columns(vectors, ambient_dim));
}

Subspace Subspace::column_space(const Matrix& m) {
  const RrefResult r = rref(m);
  return Subspace(m.select_columns(r.pivots));
}

Subspace Subspace::from_basis(const Matrix& basis) {
  if (rank(basis) != basis.cols()) {
    throw std::invalid_argument("subspace basis columns are linearly dependent");
  }
  return Subspace(basis);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) {
    throw std::invalid_argument("subspace membership: dimension mismatch");
  }
  if (exactq::is_zero(v)) {
    return true;
  }
  if (dim() == 0) {
    return false;
  }
  return solve(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) {
    throw std::invalid_argument("subspace containment: ambient mismatch");
  }
  if (other.dim() > dim()) {
    return false;
  }
  return rank(basis_.hconcat(other.basis_)) == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) {
    throw std::invalid_argument("subspace sum: ambient mismatch");
  }
  return column_space(basis_.hconcat(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) {
    throw std::invalid_argument("subspace intersection: ambient mismatch");
  }
  // x in U with x = B_U a = B_W b  <=>  [B_U | -B_W] (a; b) = 0.
  const Matrix stacked = basis_.hconcat(other.basis_.scaled(-1));
  const Subspace k = kernel_basis(stacked);
  std::vector<Vector> vs;
  for (const auto& ab : k.basis_vectors()) {
    Vector a(ab.begin(), ab.begin() + static_cast<std::ptrdiff_t>(dim()));
    vs.push_back(basis_.apply(a));
  }
  return span(ambient_dim(), vs);
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != ambient_dim()) {
    throw std::invalid_argument("subspace image: dimension mismatch");
  }
  return column_space(m * basis_);
}

Matrix Subspace::annihilator() const {
  return kernel_basis(basis_.transpose()).basis().transpose();
}

Subspace Subspace::preimage(const Matrix& m) const {
  if (m.rows() != ambient_dim()) {
    throw std::invalid_argument("subspace preimage: dimension mismatch");
  }
  return kernel_basis(annihilator() * m);
}

std::vector<Vector> Subspace::complement_basis() const {
  const std::size_t n = ambient_dim();
  const RrefResult r = rref(basis_.hconcat(Matrix::identity(n)));
  std::vector<Vector> out;
  for (auto p : r.pivots) {
    if (p >= dim()) {
      out.push_back(unit_vector(n, p - dim()));
    }
  }
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && a.contains(b);
}

// ---------------------------------------------------------------------------
// Polynomials and eigenvalues

namespace {

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * static_cast<long>(i));
  }
  trim(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
  assert(!b.empty());
  trim(a);
  if (a.size() < b.size()) {
    return {Polynomial{}, a};
  }
  Polynomial q(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= f * b[i];
    }
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Polynomial monic(Polynomial p) {
  trim(p);
  if (p.empty()) {
    return p;
  }
  const Rational lead = p.back();
  for (auto& c : p) {
    c /= lead;
  }
  return p;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

int sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(evaluate(p, x));
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++changes;
    }
    last = s;
  }
  return changes;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    for (auto& c : r) {
      c = -c;
    }
    if (r.empty()) {
      break;
    }
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) {
    seq.pop_back();
  }
  return seq;
}

// Integer roots of a square-free polynomial with integer coefficients, found
// by Sturm bisection on half-integer endpoints (never roots: any rational
// root of a monic integer polynomial is an integer).
void integer_roots_in(const Polynomial& q, const std::vector<Polynomial>& sturm,
                      const Integer& lo, const Integer& hi, int v_lo, int v_hi,
                      std::vector<Integer>& out) {
  // Interval (lo + 1/2, hi + 1/2) holds the integers lo+1 .. hi.
  if (v_lo - v_hi <= 0) {
    return;
  }
  if (hi - lo == 1) {
    if (evaluate(q, Rational(hi)) == 0) {
      out.push_back(hi);
    }
    return;
  }
  Integer mid = lo + (hi - lo) / 2;
  const int v_mid = sign_changes(sturm, Rational(mid) + Rational(1, 2));
  integer_roots_in(q, sturm, lo, mid, v_lo, v_mid, out);
  integer_roots_in(q, sturm, mid, hi, v_mid, v_hi, out);
}

}  // namespace

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("characteristic polynomial of non-square matrix");
  }
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = m.rows();
  Polynomial c(n + 1, Rational(0));
  c[n] = 1;
  Matrix mk = Matrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + Matrix::identity(n).scaled(c[n - k + 1]);
    c[n - k] = -(m * mk).trace() / static_cast<long>(k);
  }
  return c;
}

std::vector<Rational> rational_roots(const Polynomial& input) {
  Polynomial p = monic(input);
  std::vector<Rational> roots;
  if (p.size() <= 1) {
    return roots;
  }
  if (p[0] == 0) {
    roots.emplace_back(0);
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) {
      ++k;
    }
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (p.size() <= 1) {
    return roots;
  }
  // Square-free part, still monic.
  p = monic(divmod(p, gcd(p, derivative(p))).first);
  const std::size_t n = p.size() - 1;
  if (n == 0) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Scale y = L x so that q(y) = L^n p(y / L) is monic with integer
  // coefficients; rational roots of p are then exactly r / L for integer
  // roots r of q, and each such r divides q(0).
  Integer L = 1;
  for (const auto& c : p) {
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  }
  Polynomial q(n + 1);
  Integer power = 1;
  for (std::size_t i = n + 1; i-- > 0;) {
    q[i] = p[i] * Rational(power);
    power *= L;
  }
  Integer bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer a = abs(q[i]).get_num();
    if (a + 1 > bound) {
      bound = a + 1;
    }
  }
  const auto sturm = sturm_sequence(q);
  const Integer lo = -bound - 1;
  const Integer hi = bound;
  std::vector<Integer> ints;
  integer_roots_in(q, sturm, lo, hi, sign_changes(sturm, Rational(lo) + Rational(1, 2)),
                   sign_changes(sturm, Rational(hi) + Rational(1, 2)), ints);
  const Integer trailing = q[0].get_num();
  for (const auto& r : ints) {
    assert(r != 0 && mpz_divisible_p(trailing.get_mpz_t(), r.get_mpz_t()));
    (void)trailing;
    roots.push_back(make_rational(r, L));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<EigenPair> rational_eigenpairs(const Matrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("eigenpairs of non-square matrix");
  }
  std::vector<EigenPair> out;
  for (const auto& lambda : rational_roots(characteristic_polynomial(m))) {
    const Matrix shifted = m - Matrix::identity(m.rows()).scaled(lambda);
    out.push_back({lambda, kernel_basis(shifted)});
  }
  return out;
}

}  // namespace fsn::exactq
