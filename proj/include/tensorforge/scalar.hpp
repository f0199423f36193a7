#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tensorforge {

/// Malformed user input: bad syntax, unknown fields, out-of-range indices,
/// dimension mismatches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I value) : q_(static_cast<long>(value)) {}
  Scalar(long num, long den);
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p" or "p/q" with an optional leading sign. Throws InputError on
  /// anything else, including a zero denominator.
  static Scalar parse(std::string_view text);

  std::string str() const { return q_.get_str(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  /// this += a * b without a temporary Scalar.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tensorforge
