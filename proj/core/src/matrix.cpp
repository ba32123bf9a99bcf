#include "direach/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace direach {

namespace {

void check_inner(Vertex b_cols, Vertex a_rows, Vertex a_cols) {
  if (b_cols != a_rows || a_rows != a_cols) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
}

/// Runs fn(row) over [0, rows), partitioned by contiguous blocks. Each worker
/// writes disjoint rows, so results do not depend on the thread count.
void parallel_rows(Vertex rows, int threads, const std::function<void(Vertex)>& fn) {
  threads = std::clamp(threads, 1, 64);
  if (threads == 1 || rows < 2 * threads) {
    for (Vertex i = 0; i < rows; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const Vertex chunk = (rows + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const Vertex lo = static_cast<Vertex>(t) * chunk;
    const Vertex hi = std::min<Vertex>(rows, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (Vertex i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::int64_t next_pow2(std::int64_t v) {
  std::int64_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

}  // namespace

BoolMatrix::BoolMatrix(Vertex rows, Vertex cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  words_per_row_ = (static_cast<std::size_t>(cols) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(rows) * words_per_row_, 0);
}

BoolMatrix BoolMatrix::identity(Vertex n) {
  BoolMatrix m(n, n);
  for (Vertex i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void BoolMatrix::set(Vertex i, Vertex j, bool value) {
  const std::size_t bit = static_cast<std::size_t>(j);
  std::uint64_t& word = row(i)[bit >> 6];
  if (value) {
    word |= (std::uint64_t{1} << (bit & 63));
  } else {
    word &= ~(std::uint64_t{1} << (bit & 63));
  }
}

std::int64_t BoolMatrix::count_ones() const {
  std::int64_t total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total;
}

DistMatrix::DistMatrix(Vertex rows, Vertex cols, std::int64_t fill) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

DistMatrix DistMatrix::minplus_identity(Vertex n) {
  DistMatrix m(n, n);
  for (Vertex i = 0; i < n; ++i) m.at(i, i) = 0;
  return m;
}

std::int64_t DistMatrix::max_finite() const {
  std::int64_t best = 0;
  for (std::int64_t e : entries_) {
    if (e != kInfEntry) best = std::max(best, e);
  }
  return best;
}

BoolMatrix bool_matmul(const BoolMatrix& b, const BoolMatrix& a, int threads) {
  check_inner(b.cols(), a.rows(), a.cols());
  BoolMatrix c(b.rows(), a.cols());
  const std::size_t words = a.words_per_row();
  parallel_rows(b.rows(), threads, [&](Vertex i) {
    std::uint64_t* out = c.row(i);
    const std::uint64_t* brow = b.row(i);
    for (Vertex k = 0; k < b.cols(); ++k) {
      if ((brow[static_cast<std::size_t>(k) >> 6] >> (k & 63)) & 1u) {
        const std::uint64_t* arow = a.row(k);
        for (std::size_t w = 0; w < words; ++w) out[w] |= arow[w];
      }
    }
  });
  return c;
}

DistMatrix minplus_product(const DistMatrix& b, const DistMatrix& a, int threads) {
  check_inner(b.cols(), a.rows(), a.cols());
  DistMatrix c(b.rows(), a.cols(), DistMatrix::kInfEntry);
  const Vertex n = a.rows();
  const Vertex cols = a.cols();
  parallel_rows(b.rows(), threads, [&](Vertex i) {
    std::int64_t* out = c.row(i);
    const std::int64_t* brow = b.row(i);
    for (Vertex k = 0; k < n; ++k) {
      const std::int64_t bik = brow[k];
      if (bik == DistMatrix::kInfEntry) continue;
      const std::int64_t* arow = a.row(k);
      for (Vertex j = 0; j < cols; ++j) {
        if (arow[j] == DistMatrix::kInfEntry) continue;
        const std::int64_t cand = bik + arow[j];
        if (cand < out[j]) out[j] = cand;
      }
    }
  });
  return c;
}

DistMatrix scale_clamp(const DistMatrix& m, int k, std::int64_t r) {
  if (k < 0) throw std::invalid_argument("scale level must be non-negative");
  if (r <= 0 || (r & (r - 1)) != 0) throw std::invalid_argument("R must be a power of two");
  const std::int64_t threshold = r << k;
  DistMatrix out(m.rows(), m.cols(), DistMatrix::kInfEntry);
  for (Vertex i = 0; i < m.rows(); ++i) {
    const std::int64_t* src = m.row(i);
    std::int64_t* dst = out.row(i);
    for (Vertex j = 0; j < m.cols(); ++j) {
      const std::int64_t e = src[j];
      if (e == DistMatrix::kInfEntry || e > threshold) continue;
      if (e < 0) throw std::invalid_argument("negative entry in distance matrix");
      dst[j] = (e + (std::int64_t{1} << k) - 1) >> k;  // ceil(e / 2^k)
    }
  }
  return out;
}

DistMatrix approx_distance_product(const DistMatrix& b, const DistMatrix& a, double xi,
                                   int threads) {
  check_inner(b.cols(), a.rows(), a.cols());
  if (!(xi > 0.0)) throw std::invalid_argument("xi must be positive");
  const std::int64_t m_prime = std::max(b.max_finite(), a.max_finite());
  if (xi >= 1.0) return minplus_product(b, a, threads);

  const std::int64_t r = next_pow2(static_cast<std::int64_t>(std::ceil(1.0 / xi)));
  const std::int64_t m2 = next_pow2(std::max<std::int64_t>(m_prime, 1));
  if (m2 <= r) return minplus_product(b, a, threads);

  int levels = 0;  // m - r
  for (std::int64_t v = r; v < m2; v <<= 1) ++levels;

  DistMatrix result(b.rows(), a.cols(), DistMatrix::kInfEntry);
  for (int k = 0; k <= levels; ++k) {
    const DistMatrix bk = scale_clamp(b, k, r);
    const DistMatrix ak = scale_clamp(a, k, r);
    const DistMatrix ck = minplus_product(bk, ak, threads);
    for (Vertex i = 0; i < result.rows(); ++i) {
      const std::int64_t* src = ck.row(i);
      std::int64_t* dst = result.row(i);
      for (Vertex j = 0; j < result.cols(); ++j) {
        if (src[j] == DistMatrix::kInfEntry) continue;
        const std::int64_t rescaled = src[j] << k;
        if (rescaled < dst[j]) dst[j] = rescaled;
      }
    }
  }
  return result;
}

BoolMatrix rows_restrict(const BoolMatrix& a, const VertexSubset& s) {
  if (s.origin_n != a.rows()) throw std::invalid_argument("row subset does not match matrix");
  BoolMatrix out(s.size(), a.cols());
  for (Vertex i = 0; i < s.size(); ++i) {
    const std::uint64_t* src = a.row(s.members[static_cast<std::size_t>(i)]);
    std::copy(src, src + a.words_per_row(), out.row(i));
  }
  return out;
}

DistMatrix rows_restrict(const DistMatrix& a, const VertexSubset& s) {
  if (s.origin_n != a.rows()) throw std::invalid_argument("row subset does not match matrix");
  DistMatrix out(s.size(), a.cols());
  for (Vertex i = 0; i < s.size(); ++i) {
    const std::int64_t* src = a.row(s.members[static_cast<std::size_t>(i)]);
    std::copy(src, src + a.cols(), out.row(i));
  }
  return out;
}

}  // namespace direach
