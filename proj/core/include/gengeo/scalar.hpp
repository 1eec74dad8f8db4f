#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gengeo {

/// Exact rational scalar. Always kept in canonical form (lowest terms,
/// positive denominator) by GMP.
using Rational = mpq_class;

/// Thrown when an input document or argument violates a structural
/// requirement (malformed rational, wrong matrix shape, bad index, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation's mathematical precondition fails
/// (non-invertible matrix where inversion is required, non-unimodular
/// frame passed to an adjoint, J^2 != -1, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p", "p/q" with integer p, q and q != 0. Anything else
/// (floats, whitespace, empty) is rejected with InputError. The result is
/// canonicalized.
Rational parse_rational(const std::string& text);

/// Lowest-terms rendering, "p" or "p/q" with q > 1.
std::string to_string(const Rational& r);

/// Element of Q(i): exact complex number with rational real and imaginary
/// parts. This is the scalar ring of the exact arithmetic route.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(int v) : re(v), im(0) {}  // NOLINT: implicit by design
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// "0", "3/2", "i", "-i", "1/2+i", "2-3/4i", ... Deterministic, compact.
std::string to_string(const GaussianRational& z);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace gengeo
