#include <cstdlib>

#include "smatrix/abelian_group.hpp"

namespace smatrix {

SmithForm smith_normal_form(const IntMatrix& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::Identity(m, m);
  IntMatrix right = IntMatrix::Identity(n, n);

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      Eigen::Index pr = -1;
      Eigen::Index pc = -1;
      for (Eigen::Index i = t; i < m; ++i) {
        for (Eigen::Index j = t; j < n; ++j) {
          if (d(i, j) != 0 && (pr < 0 || std::llabs(d(i, j)) < std::llabs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) return {left, right, d};
      d.row(t).swap(d.row(pr));
      left.row(t).swap(left.row(pr));
      d.col(t).swap(d.col(pc));
      right.col(t).swap(right.col(pc));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        const std::int64_t q = d(i, t) / d(t, t);
        if (q != 0) {
          d.row(i) -= q * d.row(t);
          left.row(i) -= q * left.row(t);
        }
        clean = clean && d(i, t) == 0;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        const std::int64_t q = d(t, j) / d(t, t);
        if (q != 0) {
          d.col(j) -= q * d.col(t);
          right.col(j) -= q * right.col(t);
        }
        clean = clean && d(t, j) == 0;
      }
      if (!clean) continue;

      // enforce d_t | every later entry
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i) {
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      d.row(t) += d.row(bad);
      left.row(t) += left.row(bad);
    }
    if (d(t, t) < 0) {
      d.row(t) *= -1;
      left.row(t) *= -1;
    }
  }
  return {left, right, d};
}

Element FinitePresentation::project(const std::vector<std::int64_t>& x) const {
  if (kept_columns.empty()) return group.identity();
  Element out = group.identity();
  for (std::size_t j = 0; j < kept_columns.size(); ++j) {
    const Eigen::Index col = kept_columns[j];
    const std::int64_t n = group.factors()[j];
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      acc = (acc + (x[i] % n) * (transform(static_cast<Eigen::Index>(i), col) % n)) % n;
    }
    out.coords[j] = acc < 0 ? acc + n : acc;
  }
  return out;
}

FinitePresentation present(const IntMatrix& relations) {
  const Eigen::Index k = relations.cols();
  const SmithForm snf = smith_normal_form(relations);
  std::vector<std::int64_t> factors;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index j = 0; j < k; ++j) {
    const std::int64_t dj = j < snf.diagonal.rows() ? snf.diagonal(j, j) : 0;
    if (dj == 0) throw Error(Errc::InternalInconsistency, "relation lattice has infinite index");
    if (dj > 1) {
      factors.push_back(dj);
      kept.push_back(j);
    }
  }
  AbelianGroup group = factors.empty() ? AbelianGroup() : AbelianGroup(std::move(factors));
  return FinitePresentation{std::move(group), snf.right, std::move(kept)};
}

}  // namespace smatrix
