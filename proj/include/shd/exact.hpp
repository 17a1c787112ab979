#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace shd {

// All lattice / LP arithmetic in this library is exact. Floating point is
// not used anywhere below the report-rendering layer. Expression templates
// stay off so arithmetic yields values, never references into dead
// temporaries.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = int_gcd(a, b);
  Int r = (a / g) * b;
  return r < 0 ? -r : r;
}

// Smallest positive multiple of a rational vector that is integral.
// For a vector with positive entries the result has entries >= 1.
inline std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
  Int den_lcm = 1;
  for (const Rat& r : v) den_lcm = int_lcm(den_lcm, rat_den(r));
  if (den_lcm == 0) den_lcm = 1;
  std::vector<Int> w;
  w.reserve(v.size());
  Int g = 0;
  for (const Rat& r : v) {
    Int x = rat_num(r) * (den_lcm / rat_den(r));
    g = int_gcd(g, x);
    w.push_back(std::move(x));
  }
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

// Divide an integer vector by the gcd of its entries (no-op on zero vectors).
inline void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = int_gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

inline std::string rat_to_string(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace shd
