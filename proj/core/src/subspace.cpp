#include "ngr/subspace.hpp"

namespace ngr {

Subspace Subspace::span(const BasedSpace& ambient, Mat spanning_rows) {
  if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient.dim())
    throw std::invalid_argument("Subspace::span: row length != ambient dim");
  Mat m = std::move(spanning_rows);
  if (m.rows() == 0) m = Mat(0, ambient.dim());
  m.rref_inplace(ambient.field());
  m = m.nonzero_rows();
  Subspace s;
  s.amb_ = ambient;
  s.rows_ = std::move(m);
  return s;
}

Subspace Subspace::zero(const BasedSpace& ambient) { return span(ambient, Mat(0, ambient.dim())); }

Subspace Subspace::full(const BasedSpace& ambient) {
  return span(ambient, Mat::identity(ambient.dim()));
}

Subspace Subspace::image(const LinMap& f) { return span(f.codomain(), f.matrix().transpose()); }

Subspace Subspace::kernel(const LinMap& f) {
  return span(f.domain(), f.matrix().kernel(f.field()));
}

bool Subspace::contains(const Subspace& o) const {
  if (!amb_.same_as(o.amb_)) throw std::invalid_argument("Subspace::contains: ambient mismatch");
  return sum(o) == *this;
}

bool Subspace::operator==(const Subspace& o) const {
  return amb_.same_as(o.amb_) && rows_ == o.rows_;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (!amb_.same_as(o.amb_)) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  return span(amb_, Mat::vstack(rows_, o.rows_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (!amb_.same_as(o.amb_)) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  // Zassenhaus: rref of [A|A; B|0]; rows with zero left half span the
  // intersection in the right half.
  int n = amb_.dim();
  Mat top = Mat::hstack(rows_, rows_);
  Mat bot = Mat::hstack(o.rows_, Mat(o.rows_.rows(), n));
  Mat big = Mat::vstack(top, bot);
  big.rref_inplace(amb_.field());
  Mat out(0, n);
  for (int i = 0; i < big.rows(); ++i) {
    bool leftzero = true;
    for (int j = 0; j < n; ++j)
      if (big.at(i, j) != 0) {
        leftzero = false;
        break;
      }
    if (!leftzero) continue;
    Mat row(1, n);
    bool nz = false;
    for (int j = 0; j < n; ++j) {
      row.at(0, j) = big.at(i, n + j);
      if (row.at(0, j) != 0) nz = true;
    }
    if (nz) out = Mat::vstack(out, row);
  }
  return span(amb_, out);
}

Subspace Subspace::annihilator() const {
  // Functionals vanishing on this subspace = null space of the spanning rows.
  Mat k = rows_.rows() == 0 ? Mat::identity(amb_.dim()) : rows_.kernel(amb_.field());
  return span(amb_.dual(), k);
}

LinMap Subspace::inclusion() const {
  BasedSpace dom = BasedSpace::synthetic(amb_.field(), "s", dim());
  return LinMap(dom, amb_, rows_.transpose());
}

KernelImage kernel_image(const LinMap& f) {
  KernelImage ki;
  ki.kernel = Subspace::kernel(f);
  ki.image = Subspace::image(f);
  ki.rank = ki.image.dim();
  return ki;
}

Quotient quotient_space(const BasedSpace& ambient, const Subspace& sub) {
  if (!sub.ambient().same_as(ambient))
    throw std::invalid_argument("quotient_space: subspace has different ambient");
  const Field& f = ambient.field();
  const Mat& rows = sub.rows();
  int n = ambient.dim();
  // pivot columns of the canonical rows
  std::vector<int> piv;
  {
    int c = 0;
    for (int r = 0; r < rows.rows(); ++r) {
      while (c < n && rows.at(r, c) == 0) ++c;
      piv.push_back(c);
    }
  }
  std::vector<bool> ispiv(n, false);
  for (int p : piv) ispiv[p] = true;
  std::vector<Label> qlabels;
  std::vector<int> nonpiv;
  for (int j = 0; j < n; ++j)
    if (!ispiv[j]) {
      nonpiv.push_back(j);
      qlabels.push_back(ambient.label(j));
    }
  BasedSpace qs(f, std::move(qlabels));
  Mat proj(qs.dim(), n);
  for (size_t q = 0; q < nonpiv.size(); ++q) proj.at(static_cast<int>(q), nonpiv[q]) = 1;
  for (size_t r = 0; r < piv.size(); ++r)
    for (size_t q = 0; q < nonpiv.size(); ++q)
      proj.at(static_cast<int>(q), piv[r]) = f.neg(rows.at(static_cast<int>(r), nonpiv[q]));
  Mat sect(n, qs.dim());
  for (size_t q = 0; q < nonpiv.size(); ++q) sect.at(nonpiv[q], static_cast<int>(q)) = 1;
  Quotient out;
  out.space = qs;
  out.projection = LinMap(ambient, qs, std::move(proj));
  out.section = LinMap(qs, ambient, std::move(sect));
  return out;
}

} // namespace ngr
