#include "fsn/simplex.hpp"

#include "fsn/linalg.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>

namespace fsn::simplex {

using exactq::RrefResult;
using exactq::rref;

void L1Problem::validate() const {
  if (target.size() != columns.rows()) {
    throw std::invalid_argument("L1Problem: target length differs from column height");
  }
  if (weights.size() != columns.cols()) {
    throw std::invalid_argument("L1Problem: one weight per column required");
  }
  for (const auto& w : weights) {
    if (w < 0) {
      throw std::invalid_argument("L1Problem: negative weight");
    }
  }
}

namespace {

// Dense tableau over the split variables.  Variable j < k is p_j (column
// A_j), variable k + j is n_j (column -A_j).  Rows are kept in canonical form
// with respect to `basis`.
class Tableau {
 public:
  Tableau(const Matrix& reduced, std::size_t rank, const Vector& costs)
      : rows_(rank), k_(costs.size()), costs_(costs), t_(rank, 2 * costs.size() + 1),
        basis_(rank) {
    const std::size_t rhs = 2 * k_;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        t_(i, j) = reduced(i, j);
        t_(i, k_ + j) = -reduced(i, j);
      }
      t_(i, rhs) = reduced(i, k_);
    }
  }

  // Starting basis from the reduced row echelon form: the pivot variable of
  // each row, taking n_j instead of p_j where the right-hand side is negative.
  void seed(const std::vector<std::size_t>& pivots) {
    const std::size_t rhs = 2 * k_;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (t_(i, rhs) < 0) {
        for (std::size_t j = 0; j <= rhs; ++j) {
          t_(i, j) = -t_(i, j);
        }
        basis_[i] = k_ + pivots[i];
      } else {
        basis_[i] = pivots[i];
      }
    }
  }

  void run() {
    const std::size_t vars = 2 * k_;
    const std::size_t rhs = vars;
    for (;;) {
      // Bland: lowest-index variable with negative reduced cost enters.
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < vars && !entering; ++j) {
        if (reduced_cost(j) < 0) {
          entering = j;
        }
      }
      if (!entering) {
        return;
      }
      const std::size_t e = *entering;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_(i, e) <= 0) {
          continue;
        }
        Rational ratio = t_(i, rhs) / t_(i, e);
        if (!leave || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      // Costs are nonnegative, so the objective is bounded below by zero and
      // an improving direction always meets a blocking row.
      assert(leave.has_value());
      pivot(*leave, e);
    }
  }

  Vector solution() const {
    Vector x = exactq::zero_vector(2 * k_);
    for (std::size_t i = 0; i < rows_; ++i) {
      x[basis_[i]] = t_(i, 2 * k_);
    }
    return x;
  }

 private:
  Rational cost(std::size_t var) const { return costs_[var % k_]; }

  Rational reduced_cost(std::size_t j) const {
    Rational d = cost(j);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (t_(i, j) != 0) {
        d -= cost(basis_[i]) * t_(i, j);
      }
    }
    return d;
  }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t width = 2 * k_ + 1;
    const Rational inv = 1 / Rational(t_(r, c));
    for (std::size_t j = 0; j < width; ++j) {
      t_(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_(i, c) == 0) {
        continue;
      }
      const Rational f = t_(i, c);
      for (std::size_t j = 0; j < width; ++j) {
        if (t_(r, j) != 0) {
          t_(i, j) -= f * t_(r, j);
        }
      }
    }
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t k_;
  Vector costs_;
  Matrix t_;
  std::vector<std::size_t> basis_;
};

// Solves the problem restricted to strictly positive weights, with the
// target already reduced modulo the span of the zero-weight columns.
std::optional<Vector> solve_positive(const Matrix& a, const Vector& rhs, const Vector& weights) {
  const std::size_t k = a.cols();
  const RrefResult r = rref(a.hconcat(Matrix::from_columns({rhs}, a.rows())));
  if (!r.pivots.empty() && r.pivots.back() == k) {
    return std::nullopt;
  }
  if (k == 0) {
    return Vector{};
  }
  Tableau tab(r.reduced, r.rank, weights);
  tab.seed(r.pivots);
  tab.run();
  const Vector x = tab.solution();
  Vector b(k);
  for (std::size_t j = 0; j < k; ++j) {
    b[j] = x[j] - x[k + j];
  }
  return b;
}

Rational cost_of(const Vector& weights, const Vector& coefficients) {
  Rational v(0);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    v += weights[j] * exactq::abs(coefficients[j]);
  }
  return v;
}

}  // namespace

L1Solution min_weighted_l1(const L1Problem& p) {
  p.validate();
  const std::size_t n = p.columns.rows();
  const std::size_t k = p.columns.cols();
  L1Solution out;
  if (exactq::is_zero(p.target)) {
    out.status = Status::optimal;
    out.value = 0;
    out.coefficients = exactq::zero_vector(k);
    return out;
  }

  std::vector<std::size_t> zero_cols;
  std::vector<std::size_t> pos_cols;
  for (std::size_t j = 0; j < k; ++j) {
    (p.weights[j] == 0 ? zero_cols : pos_cols).push_back(j);
  }
  const Matrix zero_part = p.columns.select_columns(zero_cols);
  const Matrix pos_part = p.columns.select_columns(pos_cols);
  Vector pos_weights;
  for (auto j : pos_cols) {
    pos_weights.push_back(p.weights[j]);
  }

  // Quotient by span(zero-weight columns): rows of `proj` annihilate it.
  Matrix proj = zero_cols.empty()
                    ? Matrix::identity(n)
                    : exactq::Subspace::column_space(zero_part).annihilator();
  auto b_pos = solve_positive(proj * pos_part, proj.apply(p.target), pos_weights);
  if (!b_pos) {
    return out;
  }

  Vector coefficients = exactq::zero_vector(k);
  for (std::size_t i = 0; i < pos_cols.size(); ++i) {
    coefficients[pos_cols[i]] = (*b_pos)[i];
  }
  if (!zero_cols.empty()) {
    const Vector residual = exactq::sub(p.target, pos_part.apply(*b_pos));
    auto b_zero = exactq::solve(zero_part, residual);
    assert(b_zero.has_value());
    for (std::size_t i = 0; i < zero_cols.size(); ++i) {
      coefficients[zero_cols[i]] = (*b_zero)[i];
    }
  }
  out.status = Status::optimal;
  out.value = cost_of(p.weights, coefficients);
  out.coefficients = std::move(coefficients);
  return out;
}

L1Solution enumerate_basic_optima(const L1Problem& p, std::size_t max_cols) {
  p.validate();
  const std::size_t k = p.columns.cols();
  if (k > max_cols) {
    throw InstanceTooLarge("enumerate_basic_optima: " + std::to_string(k) +
                           " columns exceeds limit " + std::to_string(max_cols));
  }
  const std::size_t n = p.columns.rows();
  const Matrix split = p.columns.hconcat(p.columns.scaled(-1));
  const std::size_t vars = 2 * k;
  const std::size_t max_support = std::min(n, vars);

  L1Solution best;
  std::vector<std::size_t> subset;
  // Depth-first over increasing index subsets of the split columns.
  // Returns false when the current subset is dependent (so are its supersets).
  auto consider = [&]() -> bool {
    const Matrix sub = split.select_columns(subset);
    if (exactq::rank(sub) != subset.size()) {
      return false;
    }
    std::optional<Vector> x;
    if (subset.empty()) {
      if (exactq::is_zero(p.target)) {
        x = Vector{};
      }
    } else {
      x = exactq::solve(sub, p.target);
    }
    if (!x) {
      return true;
    }
    for (const auto& xi : *x) {
      if (xi < 0) {
        return true;
      }
    }
    Vector b = exactq::zero_vector(k);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const std::size_t var = subset[i];
      if (var < k) {
        b[var] += (*x)[i];
      } else {
        b[var - k] -= (*x)[i];
      }
    }
    const Rational value = cost_of(p.weights, b);
    if (!best.optimal() || value < best.value) {
      best.status = Status::optimal;
      best.value = value;
      best.coefficients = std::move(b);
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!consider() || subset.size() == max_support) {
      return;
    }
    for (std::size_t j = start; j < vars; ++j) {
      subset.push_back(j);
      self(self, j + 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace fsn::simplex
