#include "genuslab/rational.hpp"

#include <algorithm>

namespace genuslab {

std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& r) {
  std::int64_t q = floor(r);
  return Rational(q) == r ? q : q + 1;
}

std::string to_fraction_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_display_string(const Rational& r) {
  std::int64_t den = r.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1) return to_fraction_string(r);
  if (r.denominator() == 1) return std::to_string(r.numerator());

  const int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t scaled = r.numerator() * (scale / r.denominator());
  std::string sign = scaled < 0 ? "-" : "";
  if (scaled < 0) scaled = -scaled;
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return sign + std::to_string(scaled / scale) + "." + frac;
}

}  // namespace genuslab
