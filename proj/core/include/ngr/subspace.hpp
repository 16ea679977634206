#pragma once

#include "ngr/linmap.hpp"

namespace ngr {

// Subspace of a based space, held as the unique RREF spanning matrix
// (one vector per row). Equality of subspaces is matrix equality.
class Subspace {
public:
  Subspace() = default;
  // Canonicalizes the given spanning rows.
  static Subspace span(const BasedSpace& ambient, Mat spanning_rows);
  static Subspace zero(const BasedSpace& ambient);
  static Subspace full(const BasedSpace& ambient);
  // Image of a map, as a subspace of its codomain.
  static Subspace image(const LinMap& f);
  // Kernel of a map, as a subspace of its domain.
  static Subspace kernel(const LinMap& f);

  const BasedSpace& ambient() const { return amb_; }
  const Mat& rows() const { return rows_; }
  int dim() const { return rows_.rows(); }

  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // Annihilator in the dual space.
  Subspace annihilator() const;

  // Inclusion map from a synthetic space indexing the RREF rows.
  LinMap inclusion() const;

private:
  BasedSpace amb_;
  Mat rows_;
};

// kernel_image of a map plus its rank, the module's workhorse query.
struct KernelImage {
  Subspace kernel;
  Subspace image;
  int rank = 0;
};
KernelImage kernel_image(const LinMap& f);

// Quotient of ambient by a subspace. The quotient basis consists of the
// ambient labels at non-pivot columns of the subspace's RREF rows.
struct Quotient {
  BasedSpace space;
  LinMap projection;  // ambient -> quotient
  LinMap section;     // quotient -> ambient, right inverse of projection
};
Quotient quotient_space(const BasedSpace& ambient, const Subspace& sub);

} // namespace ngr
