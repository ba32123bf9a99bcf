#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "direach/graph.hpp"

namespace direach {

/// Row-major bit-packed Boolean matrix.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(Vertex rows, Vertex cols);

  static BoolMatrix identity(Vertex n);

  Vertex rows() const { return rows_; }
  Vertex cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool get(Vertex i, Vertex j) const {
    const std::size_t bit = static_cast<std::size_t>(j);
    return (row(i)[bit >> 6] >> (bit & 63)) & 1u;
  }
  void set(Vertex i, Vertex j, bool value = true);

  const std::uint64_t* row(Vertex i) const { return bits_.data() + static_cast<std::size_t>(i) * words_per_row_; }
  std::uint64_t* row(Vertex i) { return bits_.data() + static_cast<std::size_t>(i) * words_per_row_; }

  std::int64_t count_ones() const;

  friend bool operator==(const BoolMatrix& a, const BoolMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

 private:
  Vertex rows_ = 0;
  Vertex cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Dense min-plus matrix over non-negative 64-bit integers with a saturating
/// infinity sentinel.
class DistMatrix {
 public:
  static constexpr std::int64_t kInfEntry = std::numeric_limits<std::int64_t>::max();

  DistMatrix() = default;
  DistMatrix(Vertex rows, Vertex cols, std::int64_t fill = kInfEntry);

  static DistMatrix minplus_identity(Vertex n);

  Vertex rows() const { return rows_; }
  Vertex cols() const { return cols_; }

  std::int64_t at(Vertex i, Vertex j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  std::int64_t& at(Vertex i, Vertex j) {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const std::int64_t* row(Vertex i) const { return entries_.data() + static_cast<std::size_t>(i) * cols_; }
  std::int64_t* row(Vertex i) { return entries_.data() + static_cast<std::size_t>(i) * cols_; }

  /// Largest finite entry, or 0 if none.
  std::int64_t max_finite() const;

  friend bool operator==(const DistMatrix& a, const DistMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Vertex rows_ = 0;
  Vertex cols_ = 0;
  std::vector<std::int64_t> entries_;
};

inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a == DistMatrix::kInfEntry || b == DistMatrix::kInfEntry) return DistMatrix::kInfEntry;
  return a + b;
}

/// C[i,j] = OR_k (B[i,k] AND A[k,j]); B is r x n, A is n x n.
BoolMatrix bool_matmul(const BoolMatrix& b, const BoolMatrix& a, int threads = 1);

/// C[i,j] = min_k (B[i,k] + A[k,j]) with saturating infinity.
DistMatrix minplus_product(const DistMatrix& b, const DistMatrix& a, int threads = 1);

/// Entry e maps to infinity if e > R * 2^k, else ceil(e / 2^k). R must be a
/// power of two; all finite outputs land in {0, ..., R}.
DistMatrix scale_clamp(const DistMatrix& m, int k, std::int64_t r);

/// Scaled approximate distance product: entrywise exact <= result <=
/// (1 + 4*xi) * exact, finite entries stay integral. Falls back to the exact
/// product when xi >= 1 or when the entries are already small.
DistMatrix approx_distance_product(const DistMatrix& b, const DistMatrix& a, double xi,
                                   int threads = 1);

BoolMatrix rows_restrict(const BoolMatrix& a, const VertexSubset& s);
DistMatrix rows_restrict(const DistMatrix& a, const VertexSubset& s);

}  // namespace direach
