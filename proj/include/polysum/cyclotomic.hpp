#ifndef POLYSUM_CYCLOTOMIC_HPP
#define POLYSUM_CYCLOTOMIC_HPP

#include "polysum/numeric.hpp"

#include <optional>
#include <vector>

namespace polysum {

unsigned euler_phi(unsigned n);

// Coefficients of the N-th cyclotomic polynomial (monic, degree phi(N)),
// computed by exact division of x^N - 1 by the Phi_d for proper divisors d.
const std::vector<Int>& cyclotomic_polynomial(unsigned n);

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}
// of Q[x]/Phi_N(x).  All arithmetic requires matching conductors; use
// change_conductor to lift along Q(zeta_M) -> Q(zeta_N) for M | N.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}
    explicit Cyclotomic(unsigned n) : n_(n), c_(euler_phi(n), Rational(0)) {}
    Cyclotomic(unsigned n, const Rational& r) : Cyclotomic(n) { c_[0] = r; }

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& r);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
    friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

    // Multiplicative inverse; throws consistency_error on zero.
    Cyclotomic inverse() const;

    static Cyclotomic from_coords(unsigned n, std::vector<Rational> coords);

private:
    unsigned n_;
    std::vector<Rational> c_;
};

// zeta_N^{a*N} for a rational a mod 1 whose denominator divides N.
Cyclotomic cyclotomic_embed(const Rational& a, unsigned n);

// The rational value iff all non-constant coordinates vanish.
std::optional<Rational> cyclo_rational(const Cyclotomic& z);

// Lift into Q(zeta_m); requires conductor | m.
Cyclotomic change_conductor(const Cyclotomic& z, unsigned m);

}  // namespace polysum

#endif
