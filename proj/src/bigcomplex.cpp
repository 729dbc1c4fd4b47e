#include "polysum/bigcomplex.hpp"

#include <cmath>

namespace polysum {

namespace {
unsigned g_bits = 256;
}

void set_precision_bits(unsigned bits) {
    if (bits < 64) throw input_error("precision must be at least 64 bits");
    g_bits = bits;
    // mpfr backend precision is configured in decimal digits
    unsigned digits = static_cast<unsigned>(std::ceil(bits * 0.3010299957)) + 4;
    BigFloat::default_precision(digits);
}

unsigned precision_bits() { return g_bits; }

BigFloat pow2(long e) {
    return ldexp(BigFloat(1), e);
}

BigFloat pi_value() {
    return 4 * atan(BigFloat(1));
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigFloat BigComplex::abs() const {
    return sqrt(re * re + im * im);
}

BigComplex cexp(const BigComplex& z) {
    BigFloat m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex unit_phase(const Rational& a) {
    BigFloat t = 2 * pi_value() * BigFloat(a);
    return {cos(t), sin(t)};
}

BigComplex cyclo_to_complex(const Cyclotomic& z) {
    BigComplex out;
    unsigned n = z.conductor();
    const std::vector<Rational>& c = z.coords();
    for (unsigned k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        BigComplex w = unit_phase(Rational(k, n));
        w.re *= BigFloat(c[k]);
        w.im *= BigFloat(c[k]);
        out += w;
    }
    return out;
}

std::string bigfloat_to_string(const BigFloat& x) {
    unsigned digits = static_cast<unsigned>(std::floor(g_bits * 0.3010299957));
    return x.str(digits);
}

}  // namespace polysum
