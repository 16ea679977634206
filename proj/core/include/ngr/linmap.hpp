#pragma once

#include "ngr/matrix.hpp"
#include "ngr/space.hpp"

namespace ngr {

// Linear map between based spaces; matrix is dim(codomain) x dim(domain).
class LinMap {
public:
  LinMap() = default;
  LinMap(BasedSpace dom, BasedSpace cod, Mat m);

  static LinMap zero(const BasedSpace& dom, const BasedSpace& cod);
  static LinMap identity(const BasedSpace& v);

  const BasedSpace& domain() const { return dom_; }
  const BasedSpace& codomain() const { return cod_; }
  const Mat& matrix() const { return m_; }
  const Field& field() const { return dom_.field(); }

  Q entry(int i, int j) const { return m_.at(i, j); }

  // g.compose(f) = g o f.
  LinMap compose(const LinMap& f) const;
  LinMap add(const LinMap& o) const;
  LinMap scale(const Q& c) const;
  LinMap negate() const { return scale(Q(-1)); }
  // Tensor product of maps (domains/codomains tensor accordingly).
  static LinMap tensor(const LinMap& a, const LinMap& b);
  // Transpose: codomain dual -> domain dual.
  LinMap dual_transpose() const;

  int rank() const { return m_.rank(field()); }
  bool is_zero() const { return m_.is_zero(); }

private:
  BasedSpace dom_, cod_;
  Mat m_;
};

} // namespace ngr
