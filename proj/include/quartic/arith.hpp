#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace quartic {

namespace mp = boost::multiprecision;
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rat = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;
using i64 = std::int64_t;
using i128 = __int128;

struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int to_int(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    Int r = Int(std::uint64_t(u >> 64));
    r <<= 64;
    r += Int(std::uint64_t(u));
    return neg ? Int(-r) : r;
}

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mod(const Int& a, i64 m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r.convert_to<i64>();
}

// v_p(n); n = 0 returns `cap`
template <class T>
int val(T n, i64 p, int cap = 1 << 20) {
    if (n == 0) return cap;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
        if (v >= cap) return cap;
    }
    return v;
}

inline int val_rat(const Rat& r, i64 p) {
    if (r == 0) throw ComputationError("valuation of zero");
    return val(Int(numerator(r)), p) - val(Int(denominator(r)), p);
}

inline i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline Rat rpow(const Rat& b, int e) {
    Rat r = 1;
    if (e < 0) return 1 / rpow(b, -e);
    while (e-- > 0) r *= b;
    return r;
}

inline i64 powmod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b = mod(b, m);
    while (e > 0) {
        if (e & 1) r = (i128)r * b % m;
        b = (i128)b * b % m;
        e >>= 1;
    }
    return r;
}

// Legendre symbol, p odd prime
inline int legendre(i64 a, i64 p) {
    a = mod(a, p);
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<i64> primes_up_to(i64 n) {
    std::vector<char> sieve(n + 1, 1);
    std::vector<i64> out;
    for (i64 i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (i64 j = i * i; j <= n; j += i) sieve[j] = 0;
    }
    return out;
}

inline i64 nonresidue(i64 p) {
    for (i64 e = 2; e < p; ++e)
        if (legendre(e, p) == -1) return e;
    throw ComputationError("no nonresidue");
}

inline i64 inverse_mod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1) {
        i64 q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw ComputationError("not invertible");
    return mod(x, m);
}

inline std::string to_string(const Rat& r) {
    return r.str();
}

}  // namespace quartic
