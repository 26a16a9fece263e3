#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace viro {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Accepts "p" or "p/q" with optional leading '-'. Rejects q == 0 and junk.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto to_int = [](const std::string& t) { return Int(t[0] == '+' ? t.substr(1) : t); };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw std::invalid_argument("bad rational literal: " + s);
        return Rat(to_int(s));
    }
    const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) throw std::invalid_argument("bad rational literal: " + s);
    Int qq = to_int(q);
    if (qq == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(to_int(p), qq);
}

inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

// Natural log of a positive big integer via bit length plus the leading 64 bits.
inline double log_int(const Int& n) {
    if (n <= 0) throw std::domain_error("log_int needs a positive integer");
    const auto bits = boost::multiprecision::msb(n);  // floor(log2 n)
    if (bits <= 62) return std::log(static_cast<double>(n.convert_to<std::int64_t>()));
    const unsigned shift = static_cast<unsigned>(bits - 62);
    const Int top = n >> shift;
    return std::log(static_cast<double>(top.convert_to<std::int64_t>())) +
           static_cast<double>(shift) * std::log(2.0);
}

inline double log10_int(const Int& n) { return log_int(n) / std::log(10.0); }

inline double log_rat(const Rat& r) {
    if (r <= 0) throw std::domain_error("log_rat needs a positive rational");
    return log_int(num(r)) - log_int(den(r));
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

inline Int int_pow(Int base, unsigned long e) {
    Int acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Mantissa/exponent view of a huge positive value given by its natural log,
// e.g. 4.0728e62 -> {4.0728, 62}.
struct Sci {
    double mantissa;
    long exp10;
};

inline Sci sci_from_log(double ln_value) {
    const double l10 = ln_value / std::log(10.0);
    long e = static_cast<long>(std::floor(l10));
    double m = std::pow(10.0, l10 - static_cast<double>(e));
    // a fractional part within double noise of 1 means the true mantissa is 1
    if (m > 10.0 * (1.0 - 1e-12)) {
        m = 1.0;
        ++e;
    }
    return {m, e};
}

inline Sci sci_of(const Int& n) { return sci_from_log(log_int(n)); }

}  // namespace viro
