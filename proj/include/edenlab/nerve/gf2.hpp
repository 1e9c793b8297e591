#pragma once
// Rank computation over GF(2).
//
// Boundary matrices are held column-sparse (each column lists the rows where
// it has a 1). Small matrices are eliminated dense with bit-packed rows;
// large ones go through column-ordered sparse elimination, which exploits the
// few-entries-per-column shape of simplicial boundary operators. Both paths
// compute the same rank; tests pin the agreement.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "edenlab/core/error.hpp"

namespace edenlab {

/// Column-sparse 0/1 matrix: cols[j] lists the rows with a 1, strictly
/// increasing.
struct gf2_matrix {
  std::size_t n_rows = 0;
  std::vector<std::vector<std::uint32_t>> cols;

  std::size_t n_cols() const { return cols.size(); }
};

namespace detail {

inline std::size_t gf2_rank_dense(const gf2_matrix& m) {
  const std::size_t words = (m.n_cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.n_rows,
                                               std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < m.n_cols(); ++j) {
    for (const std::uint32_t i : m.cols[j]) rows[i][j >> 6] |= 1ull << (j & 63);
  }

  std::size_t rank = 0;
  for (std::size_t j = 0; j < m.n_cols() && rank < m.n_rows; ++j) {
    const std::size_t w = j >> 6;
    const std::uint64_t bit = 1ull << (j & 63);
    std::size_t pivot = rank;
    while (pivot < m.n_rows && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == m.n_rows) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < m.n_rows; ++i) {
      if (i != rank && (rows[i][w] & bit)) {
        for (std::size_t k = w; k < words; ++k) rows[i][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

/// Symmetric difference of two strictly increasing row lists.
inline std::vector<std::uint32_t> gf2_xor(const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) out.push_back(a[i++]);
    else if (b[j] < a[i]) out.push_back(b[j++]);
    else { ++i; ++j; }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

inline std::size_t gf2_rank_sparse(const gf2_matrix& m) {
  // Column-ordered elimination: reduce each column against the stored pivot
  // columns (keyed by their largest row) until it empties or claims a new
  // pivot. Boundary matrices reduce with little fill-in in practice.
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> pivot_col;
  std::size_t rank = 0;
  for (const auto& col0 : m.cols) {
    std::vector<std::uint32_t> col = col0;
    while (!col.empty()) {
      const auto it = pivot_col.find(col.back());
      if (it == pivot_col.end()) {
        pivot_col.emplace(col.back(), std::move(col));
        ++rank;
        break;
      }
      col = gf2_xor(col, it->second);
    }
  }
  return rank;
}

} // namespace detail

/// Rank over GF(2). Dense bit-packed elimination up to 20000 rows/columns,
/// column-ordered sparse elimination beyond.
inline std::size_t gf2_rank(const gf2_matrix& m) {
  for (const auto& col : m.cols) {
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] >= m.n_rows)
        throw invariant_error("gf2_rank: row index out of range");
      if (i && col[i] <= col[i - 1])
        throw invariant_error("gf2_rank: column rows must be strictly increasing");
    }
  }
  if (m.n_rows == 0 || m.n_cols() == 0) return 0;
  constexpr std::size_t dense_limit = 20000;
  if (m.n_rows <= dense_limit && m.n_cols() <= dense_limit)
    return detail::gf2_rank_dense(m);
  return detail::gf2_rank_sparse(m);
}

/// Product over GF(2); used by tests to pin boundary-of-boundary == 0.
inline gf2_matrix gf2_multiply(const gf2_matrix& a, const gf2_matrix& b) {
  if (a.n_cols() != b.n_rows)
    throw usage_error("gf2_multiply: inner dimensions disagree");
  gf2_matrix out;
  out.n_rows = a.n_rows;
  out.cols.reserve(b.n_cols());
  for (const auto& bcol : b.cols) {
    std::vector<std::uint32_t> acc;
    for (const std::uint32_t k : bcol) acc = detail::gf2_xor(acc, a.cols[k]);
    out.cols.push_back(std::move(acc));
  }
  return out;
}

} // namespace edenlab
