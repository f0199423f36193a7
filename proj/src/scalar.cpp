#include "tensorforge/scalar.hpp"

#include <cctype>
#include <ostream>

namespace tensorforge {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw InputError("malformed rational '" + std::string(text) + "': zero denominator");
  if (negative) n = -n;
  return Scalar(mpq_class(n, d));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tensorforge
