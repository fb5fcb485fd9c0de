#include "subgrowth/numth.hpp"

#include "subgrowth/errors.hpp"

#include <limits>
#include <numeric>

namespace subgrowth::numth {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    if (n == 0) throw domain_error("factorize: argument must be positive");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    auto strip = [&](std::uint64_t p) {
        if (n % p) return;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (const auto& [p, e] : factorize(n)) r -= r / p;
    return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n < 2) return 2;
    std::uint64_t c = n + 1;
    if (c % 2 == 0) {
        if (c == 2) return 2;
        ++c;
    }
    for (;; c += 2) {
        if (c < n) throw domain_error("next_prime: 64-bit overflow");
        if (is_prime(c)) return c;
    }
}

} // namespace subgrowth::numth
