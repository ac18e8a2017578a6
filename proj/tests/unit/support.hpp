#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "lrb/algebra.hpp"
#include "lrb/cochain.hpp"
#include "lrb/linalg.hpp"

namespace lrb {

inline void PrintTo(const Matrix& m, std::ostream* os) {
  *os << m.rows() << "x" << m.cols() << " [";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    *os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) *os << (c ? " " : "") << m(r, c);
  }
  *os << "]";
}

}  // namespace lrb

namespace lrb::testing {

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 4);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = Scalar(num(rng), den(rng));
      m(r, c).canonicalize();
    }
  return m;
}

inline Cochain random_cochain(std::mt19937_64& rng, std::size_t arity, std::size_t domain, std::size_t target) {
  std::uniform_int_distribution<int> dist(-2, 2);
  Cochain f = Cochain::zero(arity, domain, target);
  for (std::size_t r = 0; r < f.tensor.rows(); ++r)
    for (std::size_t c = 0; c < f.tensor.cols(); ++c) f.tensor(r, c) = dist(rng);
  return f;
}

// Textbook Gauss-Jordan over Q: first nonzero pivot, divide, clear column.
inline std::pair<Matrix, std::vector<std::size_t>> textbook_rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    const Scalar inv = 1 / m(row, c);
    for (std::size_t k = 0; k < m.cols(); ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      const Scalar f = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(row, k);
    }
    pivots.push_back(c);
    ++row;
  }
  return {m, pivots};
}

inline std::size_t textbook_rank(const Matrix& m) { return textbook_rref(m).second.size(); }

inline Vector column_of(const Matrix& m, std::size_t c) { return m.column(c); }

}  // namespace lrb::testing
