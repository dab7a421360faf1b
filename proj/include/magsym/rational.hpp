#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace magsym {

/// Exact rational scalar used for all coefficient arithmetic.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parse "n", "-n", or "n/d" with nonzero d.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rational r(s);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) {
  return r.str();
}

/// Complex number with exact rational real and imaginary parts.
struct CRational {
  Rational re{0};
  Rational im{0};

  CRational() = default;
  CRational(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  CRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  CRational(long real) : re(real) {}  // NOLINT(google-explicit-constructor)

  static CRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  CRational conj() const { return {re, -im}; }

  CRational& operator+=(const CRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRational& operator-=(const CRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend CRational operator+(CRational a, const CRational& b) { return a += b; }
  friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
  friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
  friend CRational operator*(const CRational& a, const CRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  CRational& operator*=(const CRational& o) { return *this = *this * o; }
  friend bool operator==(const CRational& a, const CRational& b) = default;

  std::string str() const {
    if (im == 0) return re.str();
    if (re == 0) return im.str() + "*i";
    std::string s = re.str();
    s += (im > 0) ? "+" : "-";
    s += Rational(abs(im)).str() + "*i";
    return s;
  }
};

}  // namespace magsym
