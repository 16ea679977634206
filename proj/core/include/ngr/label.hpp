#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ngr {

// Structured basis label. Five shapes cover everything the library builds:
//   atom         named generator, e.g. "e1"
//   dual         e* for a label e; dual(dual(e)) collapses to e
//   tensor       ordered word a|b|c
//   wedge        strictly increasing subset a^b^c of some atom family
//   mono         sorted multiset a.b.b (symmetric-power monomial)
// Ordering is structural-lexicographic and total, which makes every basis
// deterministic.
class Label {
public:
  enum class Kind { atom, dual, tensor, wedge, mono };

  static Label atom(std::string name, int index);
  static Label dual(const Label& l);
  static Label tensor(std::vector<Label> parts);
  static Label wedge(std::vector<Label> parts);
  static Label mono(std::vector<Label> parts);
  static Label unit();  // the canonical label of a 1-dimensional space

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int index() const { return index_; }
  const std::vector<Label>& parts() const { return parts_; }

  // Flattening concatenation: tensor words of tensor words join.
  static Label tensor_concat(const Label& a, const Label& b);

  std::string str() const;

  std::strong_ordering operator<=>(const Label& o) const;
  bool operator==(const Label& o) const { return (*this <=> o) == 0; }

private:
  Kind kind_ = Kind::atom;
  std::string name_;
  int index_ = 0;  // per-family index for atoms; unused otherwise
  std::vector<Label> parts_;
};

} // namespace ngr
