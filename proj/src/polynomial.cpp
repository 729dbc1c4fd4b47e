#include "polysum/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace polysum {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::monomial(int nvars, Exponents e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw input_error("monomial exponent length mismatch");
    Polynomial p(nvars);
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int j) {
    Exponents e(nvars, 0);
    e[j] = 1;
    return monomial(nvars, e, Rational(1));
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (int j = 0; j < nvars_; ++j) e[j] = e1[j] + e2[j];
            out.add_term(e, c1 * c2);
        }
    return out;
}

Polynomial& Polynomial::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= r;
    return *this;
}

Rational Polynomial::evaluate(const RatVector& x) const {
    Rational out(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int j = 0; j < nvars_; ++j)
            for (unsigned k = 0; k < e[j]; ++k) t *= x(j);
        out += t;
    }
    return out;
}

Polynomial Polynomial::partial(int j) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[j] == 0) continue;
        Exponents d = e;
        d[j] -= 1;
        out.add_term(d, c * Rational(e[j]));
    }
    return out;
}

Polynomial Polynomial::directional(const RatVector& w) const {
    Polynomial out(nvars_);
    for (int j = 0; j < nvars_; ++j) {
        if (w(j) == 0) continue;
        out += partial(j) * w(j);
    }
    return out;
}

Polynomial Polynomial::compose_affine(const RatVector& b, const RatMatrix& d) const {
    const int m = static_cast<int>(d.cols());
    Polynomial out(m);
    // Linear polynomials for each original coordinate.
    std::vector<Polynomial> coord;
    for (int i = 0; i < nvars_; ++i) {
        Polynomial li = Polynomial::constant(m, b(i));
        for (int j = 0; j < m; ++j)
            if (d(i, j) != 0) li += Polynomial::variable(m, j) * d(i, j);
        coord.push_back(li);
    }
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(m, c);
        for (int i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * coord[i];
        out += t;
    }
    return out;
}

Polynomial Polynomial::scale_vars(const Rational& q) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        unsigned total = std::accumulate(e.begin(), e.end(), 0u);
        out.add_term(e, c / rational_power(q, total));
    }
    return out;
}

std::string Polynomial::key() const {
    std::ostringstream os;
    os << nvars_ << ':';
    for (const auto& [e, c] : terms_) {
        for (unsigned x : e) os << x << ',';
        os << '=' << rat_to_string(c) << ';';
    }
    return os.str();
}

}  // namespace polysum
