#ifndef POLYSUM_NUMERIC_HPP
#define POLYSUM_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace polysum {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
// Arbitrary-precision binary float with runtime-selectable precision.
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

// Error categories, mapped to CLI exit codes 2/3/4.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct method_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    return a - b * floor_div(a, b);
}

inline Int floor_rat(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

inline Int ceil_rat(const Rational& r) {
    return -floor_rat(-r);
}

// r - floor(r), always in [0, 1)
inline Rational frac_mod1(const Rational& r) {
    return r - Rational(floor_rat(r));
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Int to_int(const Rational& r) {
    if (!is_integer(r)) throw consistency_error("expected integer, got " + r.str());
    return numerator(r);
}

inline Rational rational_power(Rational base, long e) {
    Rational out(1);
    if (e < 0) { base = 1 / base; e = -e; }
    while (e-- > 0) out *= base;
    return out;
}

inline Int factorial(unsigned k) {
    Int out(1);
    for (unsigned i = 2; i <= k; ++i) out *= i;
    return out;
}

// Serialization "p/q" with "/q" omitted for integers.
inline std::string rat_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator in rational '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("malformed rational '" + s + "'");
    }
}

}  // namespace polysum

#endif
