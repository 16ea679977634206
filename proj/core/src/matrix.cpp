#include "ngr/matrix.hpp"

namespace ngr {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::mul(const Mat& a, const Mat& b, const Field& f) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Mat::mul: shape mismatch");
  Mat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Q& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Q& bkj = b.at(k, j);
        if (bkj == 0) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  if (!f.is_rationals())
    for (auto& x : c.a_) x = f.reduce(x);
  return c;
}

Mat Mat::add(const Mat& a, const Mat& b, const Field& f) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat::add: shape mismatch");
  Mat c(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = f.add(a.a_[i], b.a_[i]);
  return c;
}

Mat Mat::scale(const Q& s, const Mat& a, const Field& f) {
  Mat c(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = f.mul(s, a.a_[i]);
  return c;
}

Mat Mat::kron(const Mat& a, const Mat& b, const Field& f) {
  Mat c(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      const Q& aij = a.at(i, j);
      if (aij == 0) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l) {
          const Q& bkl = b.at(k, l);
          if (bkl == 0) continue;
          c.at(i * b.rows_ + k, j * b.cols_ + l) = f.mul(aij, bkl);
        }
    }
  return c;
}

Mat Mat::dsum(const Mat& a, const Mat& b) {
  Mat c(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) c.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
  return c;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  Mat c(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) c.at(i, a.cols_ + j) = b.at(i, j);
  }
  return c;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.cols_ != b.cols_ && a.rows_ != 0 && b.rows_ != 0)
    throw std::invalid_argument("vstack: col mismatch");
  if (a.rows_ == 0) return b;
  if (b.rows_ == 0) return a;
  Mat c(a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) c.at(a.rows_ + i, j) = b.at(i, j);
  return c;
}

std::vector<int> Mat::rref_inplace(const Field& f) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    // choose the cheapest nonzero pivot in this column (result is unique anyway)
    int pr = -1;
    size_t best = SIZE_MAX;
    for (int i = r; i < rows_; ++i) {
      const Q& x = at(i, c);
      if (x == 0) continue;
      size_t w = mpz_size(x.get_num().get_mpz_t()) + mpz_size(x.get_den().get_mpz_t());
      if (x.get_den() == 1 && (x.get_num() == 1 || x.get_num() == -1)) {
        pr = i;
        break;
      }
      if (w < best) {
        best = w;
        pr = i;
      }
    }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
    Q pv = at(r, c);
    if (pv != 1) {
      Q inv = f.inv(pv);
      for (int j = c; j < cols_; ++j)
        if (at(r, j) != 0) at(r, j) = f.mul(at(r, j), inv);
    }
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Q fac = at(i, c);
      if (fac == 0) continue;
      at(i, c) = 0;
      for (int j = c + 1; j < cols_; ++j) {
        const Q& rj = at(r, j);
        if (rj == 0) continue;
        at(i, j) = f.sub(at(i, j), f.mul(fac, rj));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int Mat::rank(const Field& f) const {
  Mat c = *this;
  return static_cast<int>(c.rref_inplace(f).size());
}

Mat Mat::kernel(const Field& f) const {
  Mat c = *this;
  auto piv = c.rref_inplace(f);
  std::vector<bool> ispiv(cols_, false);
  for (int p : piv) ispiv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < cols_; ++j)
    if (!ispiv[j]) free.push_back(j);
  Mat k(static_cast<int>(free.size()), cols_);
  for (size_t fi = 0; fi < free.size(); ++fi) {
    k.at(static_cast<int>(fi), free[fi]) = 1;
    for (size_t r = 0; r < piv.size(); ++r)
      k.at(static_cast<int>(fi), piv[r]) = f.neg(c.at(static_cast<int>(r), free[fi]));
  }
  // rows are already in echelon form up to ordering; normalize to canonical RREF
  k.rref_inplace(f);
  return k;
}

Mat Mat::solve(const Mat& T, const Field& f) const {
  if (T.rows_ != rows_) throw std::invalid_argument("solve: shape mismatch");
  Mat aug = hstack(*this, T);
  auto piv = aug.rref_inplace(f);
  Mat X(cols_, T.cols_);
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= cols_) throw std::domain_error("Mat::solve: inconsistent system");
    for (int j = 0; j < T.cols_; ++j) X.at(piv[r], j) = aug.at(static_cast<int>(r), cols_ + j);
  }
  return X;
}

Mat Mat::nonzero_rows() const {
  std::vector<int> keep;
  for (int i = 0; i < rows_; ++i) {
    bool z = true;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) {
        z = false;
        break;
      }
    if (!z) keep.push_back(i);
  }
  Mat out(static_cast<int>(keep.size()), cols_);
  for (size_t i = 0; i < keep.size(); ++i)
    for (int j = 0; j < cols_; ++j) out.at(static_cast<int>(i), j) = at(keep[i], j);
  return out;
}

ModMat::ModMat(const Mat& m, uint32_t p) : p_(p), rows_(m.rows()), cols_(m.cols()) {
  a_.resize(static_cast<size_t>(rows_) * cols_);
  mpz_class den_lcm, g;
  for (int i = 0; i < rows_; ++i) {
    den_lcm = 1;
    for (int j = 0; j < cols_; ++j)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    if (mpz_fdiv_ui(den_lcm.get_mpz_t(), p) == 0) throw unlucky_prime();
    for (int j = 0; j < cols_; ++j) {
      const Q& x = m.at(i, j);
      if (x == 0) continue;
      g = den_lcm / x.get_den() * x.get_num();
      uint64_t r = mpz_fdiv_ui(g.get_mpz_t(), p);
      a_[static_cast<size_t>(i) * cols_ + j] = static_cast<uint32_t>(r);
    }
  }
}

static uint32_t inv_modp(uint32_t a, uint32_t p) {
  // extended Euclid
  int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

int ModMat::rank() && {
  const uint64_t p = p_;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pr = -1;
    for (int i = r; i < rows_; ++i)
      if (a_[static_cast<size_t>(i) * cols_ + c]) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = c; j < cols_; ++j)
        std::swap(a_[static_cast<size_t>(pr) * cols_ + j], a_[static_cast<size_t>(r) * cols_ + j]);
    uint32_t* rowr = &a_[static_cast<size_t>(r) * cols_];
    uint64_t inv = inv_modp(rowr[c], p_);
    for (int j = c; j < cols_; ++j) rowr[j] = static_cast<uint32_t>(rowr[j] * inv % p);
    for (int i = r + 1; i < rows_; ++i) {
      uint32_t* rowi = &a_[static_cast<size_t>(i) * cols_];
      uint64_t f = rowi[c];
      if (!f) continue;
      rowi[c] = 0;
      for (int j = c + 1; j < cols_; ++j) {
        if (!rowr[j]) continue;
        uint64_t v = rowi[j] + p * p - f * rowr[j] % p;
        rowi[j] = static_cast<uint32_t>(v % p);
      }
    }
    ++r;
  }
  return r;
}

int rank_modp(const Mat& m, uint32_t p) { return ModMat(m, p).rank(); }

uint32_t certification_prime(int attempt) {
  static const uint32_t primes[] = {2013265921u, 1811939329u, 2113929217u, 2130706433u};
  return primes[attempt % 4];
}

} // namespace ngr
