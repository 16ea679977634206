#include "ngr/space.hpp"

#include <algorithm>
#include <set>

namespace ngr {

BasedSpace::BasedSpace(Field f, std::vector<Label> basis) {
  auto impl = std::make_shared<Impl>();
  impl->field = f;
  impl->basis = std::move(basis);
  // labels must be pairwise distinct
  std::set<Label> seen;
  for (const auto& l : impl->basis)
    if (!seen.insert(l).second)
      throw std::invalid_argument("BasedSpace: duplicate basis label " + l.str());
  impl_ = std::move(impl);
}

BasedSpace BasedSpace::unit(Field f) { return BasedSpace(f, {Label::unit()}); }

BasedSpace BasedSpace::synthetic(Field f, const std::string& stem, int dim) {
  std::vector<Label> b;
  b.reserve(dim);
  for (int i = 0; i < dim; ++i) b.push_back(Label::atom(stem, i + 1));
  return BasedSpace(f, std::move(b));
}

int BasedSpace::find(const Label& l) const {
  for (int i = 0; i < dim(); ++i)
    if (impl_->basis[i] == l) return i;
  return -1;
}

BasedSpace BasedSpace::dual() const {
  std::vector<Label> b;
  b.reserve(dim());
  for (const auto& l : impl_->basis) b.push_back(Label::dual(l));
  return BasedSpace(field(), std::move(b));
}

BasedSpace BasedSpace::tensor(const BasedSpace& a, const BasedSpace& b) {
  if (a.field() != b.field()) throw std::invalid_argument("tensor: field mismatch");
  std::vector<Label> out;
  out.reserve(static_cast<size_t>(a.dim()) * b.dim());
  for (const auto& la : a.basis())
    for (const auto& lb : b.basis())
      out.push_back(Label::tensor_concat(la, lb));
  return BasedSpace(a.field(), std::move(out));
}

bool BasedSpace::same_as(const BasedSpace& o) const {
  if (impl_ == o.impl_) return true;
  return field() == o.field() && basis() == o.basis();
}

} // namespace ngr
