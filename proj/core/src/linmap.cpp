#include "ngr/linmap.hpp"

namespace ngr {

LinMap::LinMap(BasedSpace dom, BasedSpace cod, Mat m)
    : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(m)) {
  if (dom_.field() != cod_.field())
    throw std::invalid_argument("LinMap: field mismatch between domain and codomain");
  if (m_.rows() != cod_.dim() || m_.cols() != dom_.dim())
    throw std::invalid_argument("LinMap: matrix shape does not match spaces");
}

LinMap LinMap::zero(const BasedSpace& dom, const BasedSpace& cod) {
  return LinMap(dom, cod, Mat(cod.dim(), dom.dim()));
}

LinMap LinMap::identity(const BasedSpace& v) { return LinMap(v, v, Mat::identity(v.dim())); }

LinMap LinMap::compose(const LinMap& f) const {
  if (!dom_.same_as(f.cod_)) throw std::invalid_argument("LinMap::compose: domain/codomain mismatch");
  return LinMap(f.dom_, cod_, Mat::mul(m_, f.m_, field()));
}

LinMap LinMap::add(const LinMap& o) const {
  if (!dom_.same_as(o.dom_) || !cod_.same_as(o.cod_))
    throw std::invalid_argument("LinMap::add: space mismatch");
  return LinMap(dom_, cod_, Mat::add(m_, o.m_, field()));
}

LinMap LinMap::scale(const Q& c) const { return LinMap(dom_, cod_, Mat::scale(c, m_, field())); }

LinMap LinMap::tensor(const LinMap& a, const LinMap& b) {
  return LinMap(BasedSpace::tensor(a.dom_, b.dom_), BasedSpace::tensor(a.cod_, b.cod_),
                Mat::kron(a.m_, b.m_, a.field()));
}

LinMap LinMap::dual_transpose() const {
  return LinMap(cod_.dual(), dom_.dual(), m_.transpose());
}

} // namespace ngr
