#pragma once

// Complex arithmetic over an arbitrary real type. std::complex is only
// specified for float/double/long double, so the multiprecision scalar gets
// its own small complex template; the same template instantiated at double
// backs the fast scan paths.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <ostream>
#include <string>
#include <utility>

namespace xideform {

// 50 decimal digits of working mantissa. Public precision contracts cap out
// at 45 requested digits so truncation-level bookkeeping always has headroom.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<50>,
    boost::multiprecision::et_off>;

template <class T>
struct Cx {
  T re{};
  T im{};

  Cx() = default;
  Cx(T r) : re(std::move(r)), im(T(0)) {}
  Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  Cx& operator*=(const Cx& o) {
    T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Cx& operator*=(const T& a) { re *= a; im *= a; return *this; }
};

using CxR = Cx<Real>;
using CxD = Cx<double>;

template <class T> Cx<T> operator+(Cx<T> a, const Cx<T>& b) { return a += b; }
template <class T> Cx<T> operator-(Cx<T> a, const Cx<T>& b) { return a -= b; }
template <class T> Cx<T> operator-(const Cx<T>& a) { return {-a.re, -a.im}; }
template <class T> Cx<T> operator*(Cx<T> a, const Cx<T>& b) { return a *= b; }
template <class T> Cx<T> operator*(Cx<T> a, const T& b) { return a *= b; }
template <class T> Cx<T> operator*(const T& b, Cx<T> a) { return a *= b; }
template <class T> Cx<T> operator+(Cx<T> a, const T& b) { a.re += b; return a; }
template <class T> Cx<T> operator+(const T& b, Cx<T> a) { a.re += b; return a; }
template <class T> Cx<T> operator-(Cx<T> a, const T& b) { a.re -= b; return a; }
template <class T> Cx<T> operator-(const T& b, const Cx<T>& a) { return {b - a.re, -a.im}; }

// Smith's algorithm; avoids overflow of re*re+im*im at double scale.
template <class T>
Cx<T> operator/(const Cx<T>& a, const Cx<T>& b) {
  using std::fabs;
  if (fabs(b.re) >= fabs(b.im)) {
    T r = b.im / b.re;
    T d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  T r = b.re / b.im;
  T d = b.re * r + b.im;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}
template <class T> Cx<T> operator/(const Cx<T>& a, const T& b) { return {a.re / b, a.im / b}; }
template <class T> Cx<T> operator/(const T& a, const Cx<T>& b) { return Cx<T>(a) / b; }

template <class T> bool operator==(const Cx<T>& a, const Cx<T>& b) { return a.re == b.re && a.im == b.im; }

template <class T> const T& real(const Cx<T>& z) { return z.re; }
template <class T> const T& imag(const Cx<T>& z) { return z.im; }
template <class T> Cx<T> conj(const Cx<T>& z) { return {z.re, -z.im}; }
template <class T> T norm(const Cx<T>& z) { return z.re * z.re + z.im * z.im; }

template <class T> T abs(const Cx<T>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <class T> T arg(const Cx<T>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <class T> Cx<T> polar_cx(const T& r, const T& theta) {
  using std::cos;
  using std::sin;
  return {r * cos(theta), r * sin(theta)};
}

template <class T> Cx<T> exp(const Cx<T>& z) {
  using std::exp;
  using std::cos;
  using std::sin;
  T e = exp(z.re);
  return {e * cos(z.im), e * sin(z.im)};
}

// Principal branch, Im in (-pi, pi].
template <class T> Cx<T> log(const Cx<T>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

template <class T> Cx<T> sqrt(const Cx<T>& z) {
  using std::sqrt;
  using std::fabs;
  T r = abs(z);
  if (r == T(0)) return {T(0), T(0)};
  Cx<T> w{sqrt((r + fabs(z.re)) / T(2)), T(0)};
  if (z.re >= T(0)) {
    w.im = z.im / (T(2) * w.re);
    return w;
  }
  T t = w.re;
  w.re = fabs(z.im) / (T(2) * t);
  w.im = (z.im >= T(0)) ? t : -t;
  return w;
}

template <class T> Cx<T> pow(const Cx<T>& z, const T& p) {
  return exp(log(z) * p);
}
template <class T> Cx<T> pow(const Cx<T>& z, const Cx<T>& p) {
  return exp(log(z) * p);
}

template <class T> Cx<T> sin_cx(const Cx<T>& z) {
  using std::sin; using std::cos; using std::sinh; using std::cosh;
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class U, class T> Cx<U> cx_cast(const Cx<T>& z) {
  return {static_cast<U>(z.re), static_cast<U>(z.im)};
}

inline CxD to_cxd(const CxR& z) {
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}
inline CxR to_cxr(const CxD& z) { return {Real(z.re), Real(z.im)}; }

template <class T> T const_pi() {
  using std::atan;
  static const T v = T(4) * atan(T(1));
  return v;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Cx<T>& z) {
  return os << "(" << z.re << (z.im < T(0) ? "" : "+") << z.im << "i)";
}

}  // namespace xideform
