#pragma once

#include "extweyl/types.hpp"

#include <optional>
#include <utility>

namespace extweyl {

// P * A * Q == D, with P, Q unimodular and D diagonal, d_1 | d_2 | ... >= 0.
// Qinv is carried along so that preimages of the new generators are cheap.
template <class Scalar>
struct SmithResult {
  Mat<Scalar> D, P, Q, Qinv;
};

namespace detail {

template <class Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <class Scalar>
struct SmithWork {
  Mat<Scalar> D, P, Q, Qinv;

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    P.row(a).swap(P.row(b));
  }
  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    Q.col(a).swap(Q.col(b));
    Qinv.row(a).swap(Qinv.row(b));
  }
  // row_dst += c * row_src
  void add_row(Eigen::Index dst, Eigen::Index src, const Scalar& c) {
    for (Eigen::Index j = 0; j < D.cols(); ++j) D(dst, j) += c * D(src, j);
    for (Eigen::Index j = 0; j < P.cols(); ++j) P(dst, j) += c * P(src, j);
  }
  // col_dst += c * col_src
  void add_col(Eigen::Index dst, Eigen::Index src, const Scalar& c) {
    for (Eigen::Index i = 0; i < D.rows(); ++i) D(i, dst) += c * D(i, src);
    for (Eigen::Index i = 0; i < Q.rows(); ++i) Q(i, dst) += c * Q(i, src);
    for (Eigen::Index j = 0; j < Qinv.cols(); ++j) Qinv(src, j) -= c * Qinv(dst, j);
  }
  void negate_row(Eigen::Index r) {
    for (Eigen::Index j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
    for (Eigen::Index j = 0; j < P.cols(); ++j) P(r, j) = -P(r, j);
  }
};

}  // namespace detail

template <class Scalar>
SmithResult<Scalar> smith_normal_form(const Mat<Scalar>& A) {
  using detail::abs_value;
  const Eigen::Index m = A.rows(), n = A.cols();
  detail::SmithWork<Scalar> w{A, Mat<Scalar>::Identity(m, m), Mat<Scalar>::Identity(n, n),
                              Mat<Scalar>::Identity(n, n)};
  const Scalar zero(0);
  const Eigen::Index steps = std::min(m, n);
  for (Eigen::Index t = 0; t < steps; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j)
        if (w.D(i, j) != zero && (pi < 0 || abs_value(w.D(i, j)) < abs_value(w.D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (w.D(i, t) == zero) continue;
        Scalar q = w.D(i, t) / w.D(t, t);
        w.add_row(i, t, Scalar(-q));
        if (w.D(i, t) != zero) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (w.D(t, j) == zero) continue;
        Scalar q = w.D(t, j) / w.D(t, t);
        w.add_col(j, t, Scalar(-q));
        if (w.D(t, j) != zero) clean = false;
      }
      if (!clean) {
        Eigen::Index bi = t, bj = t;
        for (Eigen::Index i = t + 1; i < m; ++i)
          if (w.D(i, t) != zero && abs_value(w.D(i, t)) < abs_value(w.D(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (w.D(t, j) != zero && abs_value(w.D(t, j)) < abs_value(w.D(bi, bj))) {
            bi = t;
            bj = j;
          }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (w.D(i, j) % w.D(t, t) != zero) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      w.add_row(t, bad, Scalar(1));
    }
    if (w.D(t, t) < zero) w.negate_row(t);
  }
  return {std::move(w.D), std::move(w.P), std::move(w.Q), std::move(w.Qinv)};
}

// Row-echelon basis of the row lattice of G (rows are generators).
// Pivots are positive, entries above each pivot reduced into [0, pivot).
template <class Scalar>
Mat<Scalar> hermite_rows(const Mat<Scalar>& G) {
  using detail::abs_value;
  Mat<Scalar> M = G;
  const Scalar zero(0);
  Eigen::Index r = 0;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;
  for (Eigen::Index c = 0; c < M.cols() && r < M.rows(); ++c) {
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < M.rows(); ++i)
        if (M(i, c) != zero && (best < 0 || abs_value(M(i, c)) < abs_value(M(best, c)))) best = i;
      if (best < 0) break;
      if (best != r) M.row(best).swap(M.row(r));
      bool done = true;
      for (Eigen::Index i = r + 1; i < M.rows(); ++i) {
        if (M(i, c) == zero) continue;
        Scalar q = M(i, c) / M(r, c);
        for (Eigen::Index j = 0; j < M.cols(); ++j) M(i, j) -= q * M(r, j);
        if (M(i, c) != zero) done = false;
      }
      if (done) break;
    }
    if (r < M.rows() && M(r, c) != zero) {
      if (M(r, c) < zero)
        for (Eigen::Index j = 0; j < M.cols(); ++j) M(r, j) = -M(r, j);
      pivots.emplace_back(r, c);
      ++r;
    }
  }
  for (auto [pr, pc] : pivots) {
    for (Eigen::Index i = 0; i < pr; ++i) {
      Scalar q = M(i, pc) / M(pr, pc);
      if (M(i, pc) % M(pr, pc) != zero && M(i, pc) < zero) q -= Scalar(1);
      if (q != zero)
        for (Eigen::Index j = 0; j < M.cols(); ++j) M(i, j) -= q * M(pr, j);
    }
  }
  return M.topRows(r).eval();
}

// Integer coordinates of v in an echelon basis produced by hermite_rows, if v lies in the lattice.
template <class Scalar>
std::optional<Vec<Scalar>> solve_in_rows(const Mat<Scalar>& basis, const Vec<Scalar>& v) {
  const Scalar zero(0);
  Vec<Scalar> rest = v;
  Vec<Scalar> coords = Vec<Scalar>::Constant(basis.rows(), zero);
  for (Eigen::Index i = 0; i < basis.rows(); ++i) {
    Eigen::Index c = 0;
    while (basis(i, c) == zero) ++c;
    for (Eigen::Index j = 0; j < c; ++j)
      if (rest(j) != zero) return std::nullopt;
    if (rest(c) % basis(i, c) != zero) return std::nullopt;
    Scalar q = rest(c) / basis(i, c);
    coords(i) = q;
    for (Eigen::Index j = 0; j < rest.size(); ++j) rest(j) -= q * basis(i, j);
  }
  for (Eigen::Index j = 0; j < rest.size(); ++j)
    if (rest(j) != zero) return std::nullopt;
  return coords;
}

}  // namespace extweyl
