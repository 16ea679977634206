#include "ngr/field.hpp"

namespace ngr {

bool is_prime_ul(unsigned long p) {
  if (p < 2) return false;
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

Field Field::prime(unsigned long p) {
  if (!is_prime_ul(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
  Field f;
  f.kind_ = Kind::prime;
  f.p_ = p;
  return f;
}

Q Field::reduce(const Q& x) const {
  if (kind_ == Kind::rationals) {
    Q y = x;
    y.canonicalize();
    return y;
  }
  mpz_class p(p_);
  mpz_class num = x.get_num() % p;
  mpz_class den = x.get_den() % p;
  if (den == 0) throw std::domain_error("Field::reduce: denominator divisible by p");
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("Field::reduce: no inverse mod p");
    num = (num * dinv) % p;
  }
  if (num < 0) num += p;
  return Q(num);
}

Q Field::inv(const Q& a) const {
  Q r = reduce(a);
  if (r == 0) throw std::domain_error("Field::inv: division by zero");
  if (kind_ == Kind::rationals) return Q(1) / r;
  mpz_class p(p_), v = r.get_num(), vinv;
  mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Q(vinv);
}

std::string Field::str() const {
  return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_);
}

std::string q_to_string(const Q& x) {
  Q y = x;
  y.canonicalize();
  if (y.get_den() == 1) return y.get_num().get_str();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

Q q_from_string(const std::string& s) {
  Q x;
  if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  x.canonicalize();
  return x;
}

} // namespace ngr
