#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coxtile {

// Thrown when an explicit resource guard (max elements, max cells,
// round budget) is exceeded. W is infinite; every enumeration is capped.
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational with normalized sign and gcd-reduced terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    Rational operator+(const Rational& o) const {
        return Rational(num * o.den + o.num * den, den * o.den);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num * o.den - o.num * den, den * o.den);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num * o.num, den * o.den);
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    bool is_integer() const { return den == 1; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// FNV-1a, used to stamp reports with a hash of their input.
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline constexpr const char* kVersion = "0.1.0";

}  // namespace coxtile
