#ifndef PVC_RATIONAL_HPP
#define PVC_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace pvc {

/// Exact rational arithmetic for ratios, thresholds and tie comparisons.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// ⌈r⌉ for nonnegative r.
inline std::int64_t ceil_of(const Rational& r) {
    return (r.numerator() + r.denominator() - 1) / r.denominator();
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace pvc

#endif
