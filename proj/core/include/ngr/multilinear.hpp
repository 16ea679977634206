#pragma once

#include "ngr/subspace.hpp"

namespace ngr {

// Named atom family: the space V (or its dual) with basis e1..en / e1*..en*.
struct AtomSpace {
  std::string name;
  int dim = 0;
  bool is_dual = false;

  BasedSpace space(Field f = Field::rationals()) const;
};

// Symmetric or exterior power of a based "family" space. Basis tuples are
// index tuples into the base: strictly increasing for ext, weakly increasing
// for sym; enumerated in lexicographic order.
struct PowerSpace {
  enum class Kind { sym, ext };
  BasedSpace base;
  Kind kind = Kind::ext;
  int degree = 0;
  BasedSpace space;
  std::vector<std::vector<int>> tuples;

  int find_tuple(const std::vector<int>& t) const;
};

PowerSpace build_power(const BasedSpace& base, PowerSpace::Kind kind, int d);

// Sign of the permutation sorting `seq`; 0 if a repeat occurs.
int sort_sign(std::vector<int>& seq);

// L^a U (x) L^b U -> L^{a+b} U with the shuffle sign.
LinMap wedge_mul(const PowerSpace& a, const PowerSpace& b);
// S^a U (x) S^b U -> S^{a+b} U.
LinMap sym_mul(const PowerSpace& a, const PowerSpace& b);
// L^{a+b} U -> L^a U (x) L^b U, dual to wedge_mul: wedge_mul o ext_comul =
// C(a+b, a) id.
LinMap ext_comul(const PowerSpace& ab, int a);
// L^2 U -> U (x) U, antisymmetrization e_i^e_j -> e_i(x)e_j - e_j(x)e_i.
LinMap ext_embed(const PowerSpace& l2);
// hook_right: L^c U -> L^{c+1} U (x) U*, w -> sum_a (e_a ^ w) (x) e_a*;
// hook_left:  L^c U -> U* (x) L^{c+1} U. Both are partial transposes of
// wedge multiplication by U and are injective for c+1 <= dim U.
LinMap hook_right(const BasedSpace& base, int c);
LinMap hook_left(const BasedSpace& base, int c);
// Interior product L^a U (x) L^b U* -> L^{b-a} U*, <i_w xi, eta> = xi(w ^ eta).
LinMap ext_contract(const PowerSpace& forms, const PowerSpace& coforms);
// Full pairings (determinant convention for ext, permanent for sym).
LinMap ext_pairing(const PowerSpace& forms, const PowerSpace& coforms);
LinMap sym_pairing(const PowerSpace& vecs, const PowerSpace& covecs);

// Ext^k(O(i), O(j)) on P(V), dim V = n: S^{j-i}V* for k = 0, the dual of
// S^{i-j-n}V* for k = n-1, zero otherwise.
BasedSpace line_bundle_hom(const AtomSpace& v, int i, int j, int k);
// Multiplication S^{j-i}V* (x) S^{l-j}V* -> S^{l-i}V* underlying composition
// of line-bundle maps; twists must chain i <= j <= l.
LinMap compose_line_bundle(const AtomSpace& v, int i, int j, int l);

} // namespace ngr
