#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace genuslab {

using Rational = boost::rational<std::int64_t>;

/// Smallest integer >= r.
std::int64_t ceil(const Rational& r);
/// Largest integer <= r.
std::int64_t floor(const Rational& r);

/// "5/2" style; integers print without a denominator.
std::string to_fraction_string(const Rational& r);
/// Exact decimal when the expansion terminates ("2.5"), else the fraction.
std::string to_display_string(const Rational& r);

}  // namespace genuslab
