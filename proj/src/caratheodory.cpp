#include "blotto/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blotto {

namespace {

double scalar_abs(double x) { return std::fabs(x); }
Rational scalar_abs(const Rational& x) { return x < 0 ? -x : x; }

template <typename Scalar>
bool is_negligible(const Scalar& x, const Scalar& scale);

template <>
bool is_negligible<Rational>(const Rational& x, const Rational&) {
  return x == 0;
}
template <>
bool is_negligible<double>(const double& x, const double& scale) {
  return std::fabs(x) <= 1e-12 * std::max(1.0, scale);
}

// Nonzero kernel vector of the (d+1) x k system [coordinates; all-ones],
// i.e. coefficients summing to zero whose weighted point sum vanishes.
// Gaussian elimination with partial pivoting; k > d+1 guarantees a free
// column.
template <typename Scalar>
std::vector<Scalar> affine_dependency(const std::vector<const std::vector<Scalar>*>& pts) {
  const std::size_t k = pts.size();
  const std::size_t d = pts.front()->size();
  const std::size_t rows = d + 1;
  std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(k, Scalar(0)));
  Scalar scale(1);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      m[r][c] = (*pts[c])[r];
      if (scalar_abs(m[r][c]) > scale) scale = scalar_abs(m[r][c]);
    }
  for (std::size_t c = 0; c < k; ++c) m[d][c] = Scalar(1);

  std::vector<std::size_t> pivot_row_of_col(k, SIZE_MAX);
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < rows; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < rows; ++r)
      if (scalar_abs(m[r][col]) > scalar_abs(m[best][col])) best = r;
    if (is_negligible(m[best][col], scale)) continue;  // free column
    std::swap(m[row], m[best]);
    pivot_row_of_col[col] = row;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == Scalar(0)) continue;
      Scalar factor = m[r][col] / m[row][col];
      for (std::size_t c2 = col; c2 < k; ++c2) m[r][c2] -= factor * m[row][c2];
      m[r][col] = Scalar(0);
    }
    ++row;
  }

  std::size_t free_col = SIZE_MAX;
  for (std::size_t col = 0; col < k; ++col)
    if (pivot_row_of_col[col] == SIZE_MAX) {
      free_col = col;
      break;
    }
  if (free_col == SIZE_MAX) throw std::runtime_error("no affine dependency found");

  std::vector<Scalar> dep(k, Scalar(0));
  dep[free_col] = Scalar(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pr = pivot_row_of_col[col];
    if (pr == SIZE_MAX) continue;
    dep[col] = -m[pr][free_col] / m[pr][col];
  }
  return dep;
}

template <typename Scalar>
CaratheodoryResult<Scalar> reduce_impl(const std::vector<std::vector<Scalar>>& points,
                                       const std::vector<Scalar>& weights) {
  if (points.empty()) throw std::invalid_argument("no points given");
  if (points.size() != weights.size())
    throw std::invalid_argument("points/weights length mismatch");
  const std::size_t d = points.front().size();
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("points have mixed dimensions");

  Scalar total(0);
  for (const auto& w : weights) {
    if (w < Scalar(0)) throw std::invalid_argument("negative weight");
    total += w;
  }
  if (!is_negligible(Scalar(total - Scalar(1)), Scalar(1)))
    throw std::invalid_argument("weights must sum to 1");

  std::vector<std::size_t> active;
  std::vector<Scalar> w;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (weights[i] > Scalar(0)) {
      active.push_back(i);
      w.push_back(weights[i]);
    }
  if (active.empty()) throw std::invalid_argument("weights must sum to 1");

  while (active.size() > d + 1) {
    std::vector<const std::vector<Scalar>*> pts(active.size());
    for (std::size_t s = 0; s < active.size(); ++s) pts[s] = &points[active[s]];
    std::vector<Scalar> dep = affine_dependency(pts);

    bool has_negative = false;
    for (const auto& ds : dep)
      if (ds < Scalar(0)) has_negative = true;
    if (!has_negative)
      for (auto& ds : dep) ds = -ds;  // coefficients sum to 0, so both signs exist

    // largest step b keeping every weight nonnegative; first index to hit 0 leaves
    std::size_t leave = SIZE_MAX;
    Scalar b(0);
    for (std::size_t s = 0; s < active.size(); ++s) {
      if (!(dep[s] < Scalar(0))) continue;
      Scalar ratio = -w[s] / dep[s];
      if (leave == SIZE_MAX || ratio < b) {
        leave = s;
        b = ratio;
      }
    }
    if (leave == SIZE_MAX) throw std::runtime_error("degenerate affine dependency");

    for (std::size_t s = 0; s < active.size(); ++s) w[s] += b * dep[s];
    w[leave] = Scalar(0);

    std::vector<std::size_t> next_active;
    std::vector<Scalar> next_w;
    for (std::size_t s = 0; s < active.size(); ++s) {
      if (s == leave || is_negligible(w[s], Scalar(1)) || w[s] < Scalar(0)) continue;
      next_active.push_back(active[s]);
      next_w.push_back(w[s]);
    }
    active = std::move(next_active);
    w = std::move(next_w);
  }

  return CaratheodoryResult<Scalar>{std::move(active), std::move(w)};
}

}  // namespace

CaratheodoryResult<Rational> caratheodory_reduce(const std::vector<std::vector<Rational>>& points,
                                                 const std::vector<Rational>& weights) {
  return reduce_impl<Rational>(points, weights);
}

CaratheodoryResult<double> caratheodory_reduce(const std::vector<std::vector<double>>& points,
                                               const std::vector<double>& weights) {
  return reduce_impl<double>(points, weights);
}

}  // namespace blotto
