#pragma once

#include "ngr/field.hpp"

#include <cstdint>
#include <vector>

namespace ngr {

// Dense exact matrix. Maps use the column convention (rows index the
// codomain): w = M v. Spanning sets store one vector per row.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Q& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Q& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  Mat transpose() const;
  static Mat mul(const Mat& a, const Mat& b, const Field& f);
  static Mat add(const Mat& a, const Mat& b, const Field& f);
  static Mat scale(const Q& c, const Mat& a, const Field& f);
  static Mat kron(const Mat& a, const Mat& b, const Field& f);
  // Block-diagonal stack.
  static Mat dsum(const Mat& a, const Mat& b);
  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  // In-place reduced row echelon form; returns pivot columns in order.
  std::vector<int> rref_inplace(const Field& f);
  int rank(const Field& f) const;
  // Basis of {v : Mv = 0}, one vector per row, in RREF.
  Mat kernel(const Field& f) const;
  // Solve M X = T; returns X (cols(M) x cols(T)). Throws if inconsistent.
  Mat solve(const Mat& T, const Field& f) const;
  // Drop all-zero rows (after rref) -- convenience for spanning sets.
  Mat nonzero_rows() const;

private:
  int rows_, cols_;
  std::vector<Q> a_;
};

// Word-sized copy mod p for fast rank certification. Row denominators are
// cleared first (rank-preserving); a denominator divisible by p throws
// unlucky_prime and the caller retries with a different prime.
struct unlucky_prime : std::runtime_error {
  unlucky_prime() : std::runtime_error("unlucky prime") {}
};

class ModMat {
public:
  ModMat(const Mat& m, uint32_t p);
  int rank() &&;  // destructive elimination
  int rows() const { return rows_; }
  int cols() const { return cols_; }

private:
  uint32_t p_;
  int rows_, cols_;
  std::vector<uint32_t> a_;
};

// rank certified over Q via mod-p reduction with exact fallback:
// rank_p <= rank_Q always; callers combine with dimension counts to certify
// equalities (see exactness helpers). `exact_fallback` recomputes over Q when
// the mod-p answer cannot be certified by the caller's sandwich.
int rank_modp(const Mat& m, uint32_t p);

// Deterministic prime sequence for certification retries.
uint32_t certification_prime(int attempt);

} // namespace ngr
