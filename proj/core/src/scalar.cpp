#include "gengeo/scalar.hpp"

#include <cctype>
#include <ostream>

namespace gengeo {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("malformed rational: empty string");
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t p = from;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    return p;
  };
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  std::size_t num_end = digits(pos);
  if (num_end == pos) throw InputError("malformed rational: '" + text + "'");
  pos = num_end;
  if (pos < text.size()) {
    if (text[pos] != '/') throw InputError("malformed rational: '" + text + "'");
    ++pos;
    std::size_t den_end = digits(pos);
    if (den_end == pos || den_end != text.size())
      throw InputError("malformed rational: '" + text + "'");
  }
  Rational r;
  if (r.set_str(text, 10) != 0) throw InputError("malformed rational: '" + text + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in rational: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw MathError("division by zero Gaussian rational");
  Rational n = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (z.re != 0) out += to_string(z.re);
  if (z.im != 0) {
    if (z.im > 0 && !out.empty()) out += "+";
    if (z.im == -1)
      out += "-";
    else if (z.im != 1)
      out += to_string(z.im);
    out += "i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << to_string(z);
}

}  // namespace gengeo
