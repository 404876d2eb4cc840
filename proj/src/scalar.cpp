#include "qfl/scalar.hpp"

#include <charconv>
#include <limits>

namespace qfl {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 abs128(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= i128(std::numeric_limits<long long>::min()) &&
         v <= i128(std::numeric_limits<long long>::max());
}

BigInt big_of_i128(i128 v) {
  bool neg = v < 0;
  u128 a = abs128(v);
  BigInt r = (unsigned long long)(a >> 64);
  r <<= 64;
  r += (unsigned long long)(a & ~0ULL);
  return neg ? -r : r;
}

}  // namespace

void Rational::init_small(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) { nn = -nn; dd = -dd; }
  u128 g = gcd128(abs128(nn), u128(dd));
  if (g > 1) { nn /= i128(g); dd /= i128(g); }
  n_ = (long long)nn;
  d_ = (long long)dd;
}

void Rational::init_big(const BigRat& q) {
  BigInt num = numerator(q), den = denominator(q);
  if (num >= std::numeric_limits<long long>::min() &&
      num <= std::numeric_limits<long long>::max() &&
      den <= std::numeric_limits<long long>::max()) {
    n_ = (long long)num;
    d_ = (long long)den;
    big_.reset();
  } else {
    n_ = 0;
    d_ = 1;
    big_ = std::make_shared<const Big>(Big{q});
  }
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  u128 g = gcd128(abs128(n), u128(d));
  if (g > 1) { n /= i128(g); d /= i128(g); }
  Rational r;
  if (fits64(n) && fits64(d)) {
    r.n_ = (long long)n;
    r.d_ = (long long)d;
  } else {
    r.big_ = std::make_shared<const Big>(Big{BigRat(big_of_i128(n), big_of_i128(d))});
  }
  return r;
}

BigRat Rational::to_big() const {
  if (big_) return big_->v;
  return BigRat(n_, d_);
}

bool Rational::is_integer() const {
  if (big_) return denominator(big_->v) == 1;
  return d_ == 1;
}

int Rational::sign() const {
  if (big_) return big_->v.sign();
  return n_ < 0 ? -1 : (n_ > 0 ? 1 : 0);
}

Rational Rational::operator-() const {
  if (!big_) {
    if (n_ == std::numeric_limits<long long>::min())
      return Rational(BigRat(-BigInt(n_), BigInt(d_)));
    Rational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }
  return Rational(BigRat(-big_->v));
}

Rational Rational::operator+(const Rational& o) const {
  if (!big_ && !o.big_)
    return from_i128(i128(n_) * o.d_ + i128(o.n_) * d_, i128(d_) * o.d_);
  return Rational(BigRat(to_big() + o.to_big()));
}

Rational Rational::operator-(const Rational& o) const {
  if (!big_ && !o.big_)
    return from_i128(i128(n_) * o.d_ - i128(o.n_) * d_, i128(d_) * o.d_);
  return Rational(BigRat(to_big() - o.to_big()));
}

Rational Rational::operator*(const Rational& o) const {
  if (!big_ && !o.big_) {
    if (n_ == 0 || o.n_ == 0) return Rational();
    return from_i128(i128(n_) * o.n_, i128(d_) * o.d_);
  }
  return Rational(BigRat(to_big() * o.to_big()));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !o.big_) return from_i128(i128(n_) * o.d_, i128(d_) * o.n_);
  return Rational(BigRat(to_big() / o.to_big()));
}

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!big_) return from_i128(d_, n_);
  return Rational(BigRat(1) / big_->v);
}

bool Rational::operator==(const Rational& o) const {
  if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;
  return to_big() == o.to_big();
}

bool Rational::operator<(const Rational& o) const {
  if (!big_ && !o.big_) return i128(n_) * o.d_ < i128(o.n_) * d_;
  return to_big() < o.to_big();
}

std::string Rational::str() const {
  if (big_) {
    return numerator(big_->v).str() + "/" + denominator(big_->v).str();
  }
  return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigRat(BigInt(s), BigInt(1)));
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(BigRat(num, den));
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

bool Rational::kth_root(int k, Rational& out) const {
  if (k < 1) return false;
  if (k == 1) { out = *this; return true; }
  if (is_zero()) { out = Rational(); return true; }
  if (sign() < 0 && k % 2 == 0) return false;
  BigRat q = to_big();
  bool neg = q < 0;
  BigInt num = neg ? BigInt(-numerator(q)) : numerator(q), den = denominator(q);
  auto iroot = [&](const BigInt& v, BigInt& root) {
    if (v == 0 || v == 1) { root = v; return true; }
    BigInt lo = 1, hi = v;
    while (lo < hi) {
      BigInt mid = (lo + hi) / 2;
      BigInt p = 1;
      bool over = false;
      for (int t = 0; t < k; t++) {
        p *= mid;
        if (p > v) { over = true; break; }
      }
      if (over) hi = mid;
      else if (p == v) { root = mid; return true; }
      else lo = mid + 1;
    }
    BigInt p = 1;
    for (int t = 0; t < k; t++) p *= lo;
    root = lo;
    return p == v;
  };
  BigInt rn, rd;
  if (!iroot(num, rn) || !iroot(den, rd)) return false;
  out = Rational(BigRat(neg ? -rn : rn, rd));
  return true;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (im_.is_zero() && o.im_.is_zero()) return Scalar(re_ * o.re_);
  return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (im_.is_zero()) return Scalar(re_.inv());
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -(im_ / norm));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.im_.is_zero()) {
    if (o.re_.is_zero()) throw std::domain_error("division by zero");
    return Scalar(re_ / o.re_, im_ / o.re_);
  }
  return *this * o.inv();
}

std::string Scalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im = im_.str();
  if (!im.empty() && im[0] == '-') return re_.str() + "-" + im.substr(1) + " i";
  return re_.str() + "+" + im + " i";
}

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (s.back() == 'i') {
    s.pop_back();
    // split at the sign separating the real and imaginary parts
    for (size_t p = 1; p < s.size(); p++) {
      if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/' && s[p - 1] != '+' && s[p - 1] != '-') {
        Rational re = Rational::parse(s.substr(0, p));
        std::string imtxt = s.substr(p);
        if (imtxt == "+" || imtxt == "-") imtxt += "1";
        return Scalar(re, Rational::parse(imtxt));
      }
    }
    if (s.empty() || s == "+") return Scalar(Rational(0), Rational(1));
    if (s == "-") return Scalar(Rational(0), Rational(-1));
    return Scalar(Rational(0), Rational::parse(s));
  }
  return Scalar(Rational::parse(s));
}

}  // namespace qfl
