#ifndef POLYSUM_POLYNOMIAL_HPP
#define POLYSUM_POLYNOMIAL_HPP

#include "polysum/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace polysum {

// Multivariate polynomial with exact rational coefficients.  Terms are keyed
// by exponent vectors; zero coefficients are never stored.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial monomial(int nvars, Exponents e, const Rational& c);
    // x_j as a polynomial
    static Polynomial variable(int nvars, int j);

    int nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator*=(const Rational& r);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
    friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }
    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Rational evaluate(const RatVector& x) const;
    Polynomial partial(int j) const;
    // Directional derivative along w.
    Polynomial directional(const RatVector& w) const;
    // Substitute x = b + D t; result is a polynomial in the D.cols() variables t.
    Polynomial compose_affine(const RatVector& b, const RatMatrix& d) const;
    // Substitute x_j -> x_j / q for a positive integer q.
    Polynomial scale_vars(const Rational& q) const;

    // Canonical text form, usable as a cache key.
    std::string key() const;

private:
    int nvars_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace polysum

#endif
