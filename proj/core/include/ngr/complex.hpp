#pragma once

#include "ngr/subspace.hpp"

#include <map>
#include <optional>

namespace ngr {

// Cochain complex of based spaces, differentials raising degree by one.
// d o d = 0 is checked at construction and is a hard invariant.
class ComplexOfSpaces {
public:
  ComplexOfSpaces() = default;
  ComplexOfSpaces(std::map<int, BasedSpace> terms, std::map<int, LinMap> differentials);

  const std::map<int, BasedSpace>& terms() const { return terms_; }
  const std::map<int, LinMap>& differentials() const { return diffs_; }
  int dim_at(int k) const;
  std::pair<int, int> degree_range() const;

  // Exact homology dimension at one degree.
  int homology_dim(int k) const;
  std::map<int, int> homology_dims() const;
  long euler_characteristic() const;

  // Certified acyclicity at all degrees (or all degrees except `except_deg`):
  // ranks are computed mod p and closed by the dimension sandwich
  // rank_p(d_k) <= rank_Q(d_k),  rank_Q(d_k) + rank_Q(d_{k-1}) <= dim T_k.
  // When the sandwich fails to close the questionable degrees are recomputed
  // exactly, so the verdict is always exact.
  struct AcyclicityReport {
    bool acyclic = true;
    std::map<int, int> nonzero_homology;  // degree -> dim (exact)
  };
  AcyclicityReport certify_acyclic(std::optional<int> except_deg = std::nullopt) const;

private:
  std::map<int, BasedSpace> terms_;
  std::map<int, LinMap> diffs_;
};

} // namespace ngr
