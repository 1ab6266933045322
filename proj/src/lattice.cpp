#include "superroot/lattice.hpp"

#include <utility>

namespace superroot {

Integer pair(const Weight& lambda, const Coweight& cov) {
  if (lambda.rank() != cov.rank()) {
    throw DimensionError("pair: weight has rank " + std::to_string(lambda.rank()) +
                         " but coweight has rank " + std::to_string(cov.rank()));
  }
  Integer sum = 0;
  for (std::size_t i = 0; i < lambda.rank(); ++i) sum += lambda[i] * cov[i];
  return sum;
}

namespace {

void check_widths(const IntMatrix& rows, std::size_t dim) {
  for (const auto& r : rows) {
    if (r.size() != dim) {
      throw DimensionError("row of length " + std::to_string(r.size()) + " in a " +
                           std::to_string(dim) + "-column matrix");
    }
  }
}

void axpy(std::vector<Integer>& target, const Integer& q, const std::vector<Integer>& src) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] -= q * src[i];
}

// Unimodular row reduction on the columns [0, ncols): afterwards rows
// [0, rank) are in echelon form over those columns and the remaining rows
// vanish there. Returns rank.
std::size_t echelonize(IntMatrix& rows, std::size_t ncols, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    while (true) {
      // Euclid on column `col` among rows r..end.
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool others_zero = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q = rows[i][col] / rows[r][col];
        axpy(rows[i], q, rows[r]);
        if (rows[i][col] != 0) others_zero = false;
      }
      if (others_zero) {
        if (pivots) pivots->push_back(col);
        ++r;
        break;
      }
    }
  }
  return r;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t dim) {
  check_widths(rows, dim);
  std::vector<std::size_t> pivots;
  std::size_t rank = echelonize(rows, dim, &pivots);
  rows.resize(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    std::size_t col = pivots[k];
    if (rows[k][col] < 0) {
      for (auto& x : rows[k]) x = -x;
    }
    for (std::size_t i = 0; i < k; ++i) {
      Integer q = floor_div(rows[i][col], rows[k][col]);
      if (q != 0) axpy(rows[i], q, rows[k]);
    }
  }
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& equations, std::size_t dim) {
  check_widths(equations, dim);
  const std::size_t k = equations.size();
  // Row i is (e_1[i], ..., e_k[i] | unit_i); reducing the left block with
  // unimodular moves leaves kernel vectors in the right block.
  IntMatrix work(dim, std::vector<Integer>(k + dim, Integer(0)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < k; ++j) work[i][j] = equations[j][i];
    work[i][k + i] = 1;
  }
  std::size_t rank = echelonize(work, k, nullptr);
  IntMatrix kernel;
  for (std::size_t i = rank; i < dim; ++i) {
    kernel.emplace_back(work[i].begin() + static_cast<std::ptrdiff_t>(k), work[i].end());
  }
  return hermite_normal_form(std::move(kernel), dim);
}

std::vector<Weight> pairing_kernel(std::span<const Coweight> covs, std::size_t rank) {
  IntMatrix eqs;
  eqs.reserve(covs.size());
  for (const auto& c : covs) {
    if (c.rank() != rank) {
      throw DimensionError("pairing_kernel: coweight " + c.str() + " is not of rank " +
                           std::to_string(rank));
    }
    eqs.push_back(c.coords());
  }
  std::vector<Weight> out;
  for (auto& row : integer_kernel(eqs, rank)) out.emplace_back(std::move(row));
  return out;
}

}  // namespace superroot
