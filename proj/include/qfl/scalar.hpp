#ifndef QFL_SCALAR_HPP
#define QFL_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace qfl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Arbitrary-precision rational. Values are kept in a reduced int64
/// numerator/denominator pair while they fit and promoted to a
/// multiprecision rational when they do not; the representation is
/// immutable after construction, so copies are cheap and thread-safe.
/// Invariant: denominator > 0 and gcd(num, den) = 1.
class Rational {
public:
  Rational() : n_(0), d_(1) {}
  Rational(long long n) : n_(n), d_(1) {}
  Rational(long long n, long long d) { init_small(n, d); }
  explicit Rational(const BigRat& q) { init_big(q); }

  static Rational parse(const std::string& text);

  bool is_zero() const { return big_ ? big_->is_zero() : n_ == 0; }
  bool is_one() const { return big_ ? *big_ == BigRat(1) : (n_ == 1 && d_ == 1); }
  bool is_integer() const;
  int sign() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inv() const;

  bool operator==(const Rational& o) const;
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  /// Reduced "p/q" form, q > 0 (e.g. "3/1", "-5/2").
  std::string str() const;

  BigRat to_big() const;

  /// Numerator/denominator as int64, valid only while small().
  bool small() const { return !big_; }
  long long small_num() const { return n_; }
  long long small_den() const { return d_; }

  /// k-th root if the value is a perfect k-th power of a rational;
  /// returns false otherwise. k >= 1.
  bool kth_root(int k, Rational& out) const;

private:
  struct Big {
    BigRat v;
    bool is_zero() const { return v == 0; }
    bool operator==(const BigRat& o) const { return v == o; }
  };

  long long n_ = 0, d_ = 1;
  std::shared_ptr<const Big> big_;

  void init_small(long long n, long long d);
  void init_big(const BigRat& q);
  static Rational from_i128(__int128 n, __int128 d);
  friend struct RationalOps;
};

/// Element of Q or Q(i): a Gaussian rational with exact arithmetic.
/// Plain rationals keep im = 0 and take fast paths everywhere.
class Scalar {
public:
  Scalar() = default;
  Scalar(long long n) : re_(n) {}
  Scalar(long long n, long long d) : re_(n, d) {}
  Scalar(Rational re) : re_(std::move(re)) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  /// Accepts "p", "p/q", "p/q+r/s i", "p/q-r/s i" (spaces around i optional).
  static Scalar parse(const std::string& text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
  Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inv() const;
  Scalar conj() const { return Scalar(re_, -im_); }

  bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Lexicographic (re, im); gives maps a deterministic order, not a field order.
  bool operator<(const Scalar& o) const {
    if (re_ != o.re_) return re_ < o.re_;
    return im_ < o.im_;
  }

  /// "p/q" when real, "p/q+r/s i" / "p/q-r/s i" otherwise.
  std::string str() const;

private:
  Rational re_, im_;
};

inline Scalar operator*(long long k, const Scalar& s) { return Scalar(k) * s; }

}  // namespace qfl

#endif
