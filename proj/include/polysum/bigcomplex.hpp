#ifndef POLYSUM_BIGCOMPLEX_HPP
#define POLYSUM_BIGCOMPLEX_HPP

#include "polysum/cyclotomic.hpp"
#include "polysum/numeric.hpp"

#include <string>
#include <vector>

namespace polysum {

// Sets the working precision of BigFloat in bits (minimum 64).
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// 2^e at the current working precision.
BigFloat pow2(long e);
BigFloat pi_value();

struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const Rational& r) : re(r), im(0) {}

    BigComplex operator-() const { return {-re, -im}; }
    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& o) {
        BigFloat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    BigFloat abs() const;
};

BigComplex cexp(const BigComplex& z);

// e^{2 pi i a} for rational a.
BigComplex unit_phase(const Rational& a);

// Numerical value of a cyclotomic number at zeta_N = e^{2 pi i / N}.
BigComplex cyclo_to_complex(const Cyclotomic& z);

std::string bigfloat_to_string(const BigFloat& x);

}  // namespace polysum

#endif
