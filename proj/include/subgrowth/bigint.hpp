#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace subgrowth {

using BigInt = boost::multiprecision::cpp_int;

/// Natural logarithm of a positive BigInt, accurate to double precision
/// even when the value does not fit in a double.
inline double log_big(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log_big: argument must be positive");
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(v)) + 1;
    if (bits <= 900) return std::log(v.convert_to<double>());
    const unsigned shift = bits - 900;
    const double mant = BigInt(v >> shift).convert_to<double>();
    return std::log(mant) + static_cast<double>(shift) * 0.693147180559945309417232121458; // ln 2
}

inline BigInt ipow(BigInt base, std::uint64_t exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        exp >>= 1;
        if (exp) base *= base;
    }
    return r;
}

/// Balanced product of a list of factors. Keeps operand sizes comparable so
/// large products stay in the sub-quadratic multiplication regime.
inline BigInt product_tree(std::vector<BigInt> factors) {
    if (factors.empty()) return 1;
    while (factors.size() > 1) {
        std::vector<BigInt> next;
        next.reserve(factors.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2)
            next.push_back(factors[i] * factors[i + 1]);
        if (factors.size() & 1) next.push_back(factors.back());
        factors.swap(next);
    }
    return factors.front();
}

} // namespace subgrowth
