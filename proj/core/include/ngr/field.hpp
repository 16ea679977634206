#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ngr {

using Q = mpq_class;

// Exact coefficient field: the rationals, or a prime field F_p.
// Prime-field elements are stored as integer rationals in [0, p).
class Field {
public:
  enum class Kind { rationals, prime };

  Field() : kind_(Kind::rationals), p_(0) {}
  static Field rationals() { return Field(); }
  static Field prime(unsigned long p);

  Kind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }

  // Canonical representative of x in this field.
  Q reduce(const Q& x) const;
  Q add(const Q& a, const Q& b) const { return reduce(a + b); }
  Q sub(const Q& a, const Q& b) const { return reduce(a - b); }
  Q mul(const Q& a, const Q& b) const { return reduce(a * b); }
  Q neg(const Q& a) const { return reduce(-a); }
  Q inv(const Q& a) const;
  Q div(const Q& a, const Q& b) const { return mul(a, inv(b)); }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string str() const;

private:
  Kind kind_;
  unsigned long p_;
};

bool is_prime_ul(unsigned long p);

// Rational rendering "p/q" in lowest terms ("p" when q = 1); parse accepts both forms.
std::string q_to_string(const Q& x);
Q q_from_string(const std::string& s);

} // namespace ngr
