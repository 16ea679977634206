#pragma once

#include "ngr/field.hpp"
#include "ngr/label.hpp"

#include <memory>
#include <vector>

namespace ngr {

// Finite-dimensional vector space with an ordered basis of structured labels.
// Immutable; copies share the label list.
class BasedSpace {
public:
  BasedSpace() : BasedSpace(Field::rationals(), {}) {}
  BasedSpace(Field f, std::vector<Label> basis);

  // 1-dimensional space spanned by the unit label.
  static BasedSpace unit(Field f = Field::rationals());
  // dim-many synthetic atoms "<stem>0".."<stem>dim-1"; for computed quotients
  // and abstract coefficient spaces.
  static BasedSpace synthetic(Field f, const std::string& stem, int dim);

  const Field& field() const { return impl_->field; }
  int dim() const { return static_cast<int>(impl_->basis.size()); }
  const std::vector<Label>& basis() const { return impl_->basis; }
  const Label& label(int i) const { return impl_->basis.at(i); }

  // Position of a label, or -1.
  int find(const Label& l) const;

  BasedSpace dual() const;
  // Tensor product: basis = tensor words, left factor slowest (row-major).
  static BasedSpace tensor(const BasedSpace& a, const BasedSpace& b);

  bool same_as(const BasedSpace& o) const;  // field + identical label lists
  bool ptr_eq(const BasedSpace& o) const { return impl_ == o.impl_; }

private:
  struct Impl {
    Field field;
    std::vector<Label> basis;
  };
  std::shared_ptr<const Impl> impl_;
};

} // namespace ngr
