#include "parahn/rational.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

#include "parahn/errors.hpp"

namespace parahn {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("rational out of machine range");
  return z.get_si();
}

}  // namespace

Rat::Rat(long n, long d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(q);
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_long(q);
}

long Rat::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_long(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace parahn
