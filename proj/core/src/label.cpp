#include "ngr/label.hpp"

#include <sstream>

namespace ngr {

Label Label::atom(std::string name, int index) {
  Label l;
  l.kind_ = Kind::atom;
  l.name_ = std::move(name);
  l.index_ = index;
  return l;
}

Label Label::dual(const Label& x) {
  if (x.kind_ == Kind::dual) return x.parts_[0];  // canonical double-dual collapse
  Label l;
  l.kind_ = Kind::dual;
  l.parts_ = {x};
  return l;
}

Label Label::tensor(std::vector<Label> parts) {
  Label l;
  l.kind_ = Kind::tensor;
  l.parts_ = std::move(parts);
  return l;
}

Label Label::wedge(std::vector<Label> parts) {
  Label l;
  l.kind_ = Kind::wedge;
  l.parts_ = std::move(parts);
  return l;
}

Label Label::mono(std::vector<Label> parts) {
  Label l;
  l.kind_ = Kind::mono;
  l.parts_ = std::move(parts);
  return l;
}

Label Label::unit() { return atom("1", 0); }

Label Label::tensor_concat(const Label& a, const Label& b) {
  std::vector<Label> parts;
  if (a.kind_ == Kind::tensor) parts = a.parts_;
  else parts.push_back(a);
  if (b.kind_ == Kind::tensor) parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
  else parts.push_back(b);
  return tensor(std::move(parts));
}

std::strong_ordering Label::operator<=>(const Label& o) const {
  if (auto c = kind_ <=> o.kind_; c != 0) return c;
  if (kind_ == Kind::atom) {
    if (auto c = name_ <=> o.name_; c != 0) return c;
    return index_ <=> o.index_;
  }
  if (auto c = parts_.size() <=> o.parts_.size(); c != 0) return c;
  for (size_t i = 0; i < parts_.size(); ++i)
    if (auto c = parts_[i] <=> o.parts_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Label::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::atom:
      os << name_;
      if (index_ > 0) os << index_;
      break;
    case Kind::dual: {
      std::string inner = parts_[0].str();
      bool simple = parts_[0].kind_ == Kind::atom;
      os << (simple ? inner : "(" + inner + ")") << "*";
      break;
    }
    case Kind::tensor:
    case Kind::wedge:
    case Kind::mono: {
      const char* sep = kind_ == Kind::tensor ? "|" : (kind_ == Kind::wedge ? "^" : ".");
      if (parts_.empty()) os << "1";
      for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << sep;
        std::string inner = parts_[i].str();
        bool wrap = parts_[i].kind_ == Kind::tensor || (kind_ != Kind::tensor && parts_[i].kind() != Kind::atom && parts_[i].kind() != Kind::dual);
        os << (wrap ? "(" + inner + ")" : inner);
      }
      break;
    }
  }
  return os.str();
}

} // namespace ngr
