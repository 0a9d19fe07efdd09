#ifndef MTC_RATIONAL_HPP
#define MTC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mtc {

// Exact scalar for all rational arithmetic. GMP keeps values canonical
// (reduced, positive denominator), which the serializers rely on.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational '" + text + "'");
    r.canonicalize();
    return r;
}

// "p" for integers, "p/q" otherwise; canonical form.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational out(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline long gcd_long(long a, long b) { return std::gcd(a, b); }
inline long lcm_long(long a, long b) { return std::lcm(a, b); }

// a mod m in [0, m)
inline long mod_long(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace mtc

#endif
