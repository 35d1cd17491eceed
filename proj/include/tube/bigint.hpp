#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tube {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Exact binomial coefficient; zero outside 0 <= b <= a.
BigInt binomial(long long a, long long b);

/// Multinomial (sum parts; parts...). Zero if any part is negative.
BigInt multinomial(const std::vector<long long>& parts);

}  // namespace tube
