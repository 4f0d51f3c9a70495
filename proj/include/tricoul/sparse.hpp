// Copyright (c) 2026 the tricoul authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

// Sparse symmetric matrix in CSR form with both triangles materialized for
// fast row access. Entries are added once for i <= j and mirrored by the
// builder, so (i,j) and (j,i) hold the same bits by construction.

namespace tricoul {

class SparseSymmetric {
 public:
  SparseSymmetric() = default;

  std::size_t size() const { return n_; }
  std::size_t nnz() const { return values_.size(); }

  std::span<const std::uint32_t> row_cols(std::size_t i) const {
    return {cols_.data() + row_ptr_[i], cols_.data() + row_ptr_[i + 1]};
  }
  std::span<const double> row_values(std::size_t i) const {
    return {values_.data() + row_ptr_[i], values_.data() + row_ptr_[i + 1]};
  }

  double value_at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("SparseSymmetric::value_at");
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
      if (cols_[p] == j) return values_[p];
    return 0.0;
  }

  // y = A x. Rows are independent and each row sums in storage order, so the
  // result is bit-identical for any thread count.
  void apply(std::span<const double> x, std::span<double> y, int n_threads = 1) const {
    if (x.size() != n_ || y.size() != n_)
      throw std::invalid_argument("SparseSymmetric::apply: dimension mismatch");
    auto run = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        double acc = 0.0;
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
          acc += values_[p] * x[cols_[p]];
        y[i] = acc;
      }
    };
    if (n_threads <= 1 || n_ < 4096) {
      run(0, n_);
      return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n_ + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      const std::size_t lo = std::min(n_, t * chunk);
      const std::size_t hi = std::min(n_, lo + chunk);
      if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  // Column-major dense copy (LAPACK layout).
  std::vector<double> to_dense() const {
    std::vector<double> a(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
        a[static_cast<std::size_t>(cols_[p]) * n_ + i] = values_[p];
    return a;
  }

  class Builder {
   public:
    explicit Builder(std::size_t n) : n_(n) {}

    // Add entry (i, j) with i <= j; the mirror is implied.
    void add(std::size_t i, std::size_t j, double v) {
      if (i > j) throw std::invalid_argument("SparseSymmetric::Builder: need i <= j");
      if (j >= n_) throw std::out_of_range("SparseSymmetric::Builder: index out of range");
      entries_.push_back({i, j, v});
      if (i != j) entries_.push_back({j, i, v});
    }

    SparseSymmetric build() {
      SparseSymmetric m;
      m.n_ = n_;
      m.row_ptr_.assign(n_ + 1, 0);
      for (const auto& e : entries_) ++m.row_ptr_[e.i + 1];
      std::partial_sum(m.row_ptr_.begin(), m.row_ptr_.end(), m.row_ptr_.begin());
      m.cols_.resize(entries_.size());
      m.values_.resize(entries_.size());
      std::vector<std::size_t> cursor(m.row_ptr_.begin(), m.row_ptr_.end() - 1);
      // Stable fill keeps per-row storage in insertion order, then sort
      // each row by column for reproducible traversal.
      for (const auto& e : entries_) {
        const std::size_t p = cursor[e.i]++;
        m.cols_[p] = static_cast<std::uint32_t>(e.j);
        m.values_[p] = e.v;
      }
      std::vector<std::pair<std::uint32_t, double>> row;
      for (std::size_t i = 0; i < n_; ++i) {
        row.clear();
        for (std::size_t p = m.row_ptr_[i]; p < m.row_ptr_[i + 1]; ++p)
          row.emplace_back(m.cols_[p], m.values_[p]);
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t k = 0; k < row.size(); ++k) {
          m.cols_[m.row_ptr_[i] + k] = row[k].first;
          m.values_[m.row_ptr_[i] + k] = row[k].second;
        }
      }
      return m;
    }

   private:
    struct Entry {
      std::size_t i, j;
      double v;
    };
    std::size_t n_;
    std::vector<Entry> entries_;
  };

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::uint32_t> cols_;
  std::vector<double> values_;
};

}  // namespace tricoul
