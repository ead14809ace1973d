#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wlab {

namespace mp = boost::multiprecision;

// Arbitrary-precision integers and rationals. Expression templates are off so
// both behave as ordinary value types. cpp_rational keeps the fraction
// reduced with a positive denominator, which is exactly the invariant the
// coefficient field needs.
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rat = mp::number<mp::backends::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

// "5", "-3/4"
std::string rat_to_string(const Rat& q);

} // namespace wlab
