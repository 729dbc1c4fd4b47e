#include "polysum/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace polysum {

unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of polynomials with Int coefficients (divisor monic-ish:
// leading coefficient must divide exactly at every step, which holds for
// cyclotomic factors of x^n - 1).
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw consistency_error("poly_div_exact: degree underflow");
    std::vector<Int> q(num.size() - dn, Int(0));
    for (size_t qi = q.size(); qi-- > 0;) {
        size_t k = qi + dn;
        if (num[k] == 0) continue;
        if (num[k] % den[dn] != 0) throw consistency_error("poly_div_exact: not divisible");
        Int c = num[k] / den[dn];
        q[qi] = c;
        for (size_t j = 0; j <= dn; ++j) num[qi + j] -= c * den[j];
    }
    for (const Int& r : num)
        if (r != 0) throw consistency_error("poly_div_exact: nonzero remainder");
    return q;
}

std::mutex cache_mutex;

std::map<unsigned, std::vector<Int>>& phi_cache() {
    static std::map<unsigned, std::vector<Int>> cache;
    return cache;
}

// Powers zeta^k for k >= phi(n), reduced into the power basis.
struct ReductionTable {
    std::vector<std::vector<Rational>> pow;  // pow[k] = coords of zeta^{phi(n)+k}
};
std::map<unsigned, ReductionTable>& red_cache() {
    static std::map<unsigned, ReductionTable> cache;
    return cache;
}

std::vector<Rational> reduced_power(unsigned n, unsigned k) {
    unsigned deg = euler_phi(n);
    if (k < deg) throw consistency_error("reduced_power: k below basis degree");
    const std::vector<Int>& phi = cyclotomic_polynomial(n);  // before taking the lock
    std::lock_guard<std::mutex> lock(cache_mutex);
    ReductionTable& tab = red_cache()[n];
    while (tab.pow.size() <= k - deg) {
        std::vector<Rational> next(deg, Rational(0));
        if (tab.pow.empty()) {
            // zeta^deg = -(phi_0 + phi_1 zeta + ...), phi monic
            for (unsigned j = 0; j < deg; ++j) next[j] = Rational(-phi[j]);
        } else {
            // multiply the previous reduced power by zeta
            const std::vector<Rational>& prev = tab.pow.back();
            for (unsigned j = 0; j + 1 < deg; ++j) next[j + 1] = prev[j];
            if (prev[deg - 1] != 0) {
                for (unsigned j = 0; j < deg; ++j) next[j] += prev[deg - 1] * Rational(-phi[j]);
            }
        }
        tab.pow.push_back(std::move(next));
    }
    return tab.pow[k - deg];
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw input_error("cyclotomic polynomial needs n >= 1");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = phi_cache().find(n);
        if (it != phi_cache().end()) return it->second;
    }
    // x^n - 1, then strip off Phi_d for the proper divisors (recursing
    // without holding the cache lock).
    std::vector<Int> poly(n + 1, Int(0));
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) poly = poly_div_exact(poly, cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return phi_cache().emplace(n, std::move(poly)).first->second;
}

bool Cyclotomic::is_zero() const {
    for (const Rational& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (n_ != o.n_) throw consistency_error("cyclotomic conductor mismatch");
    return c_ == o.c_;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(*this);
    for (Rational& x : out.c_) x = -x;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (n_ != o.n_) throw consistency_error("cyclotomic conductor mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (n_ != o.n_) throw consistency_error("cyclotomic conductor mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (Rational& x : c_) x *= r;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (n_ != o.n_) throw consistency_error("cyclotomic conductor mismatch");
    const unsigned deg = static_cast<unsigned>(c_.size());
    std::vector<Rational> conv(2 * deg - 1, Rational(0));
    for (unsigned i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < deg; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> out(deg, Rational(0));
    for (unsigned k = 0; k < deg; ++k) out[k] = conv[k];
    for (unsigned k = deg; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        const std::vector<Rational>& red = reduced_power(n_, k);
        for (unsigned j = 0; j < deg; ++j) out[j] += conv[k] * red[j];
    }
    c_ = std::move(out);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw consistency_error("inverse of zero cyclotomic");
    // Extended Euclid in Q[x] against Phi_n: a*f + b*Phi = gcd = const.
    const std::vector<Int>& phi_int = cyclotomic_polynomial(n_);
    std::vector<Rational> r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
    std::vector<Rational> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coeffs on f

    auto deg_of = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };

    while (deg_of(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<Rational> q(std::max<int>(deg_of(r0) - deg_of(r1) + 1, 0), Rational(0));
        std::vector<Rational> r2 = r0;
        for (int k = deg_of(r2); k >= deg_of(r1); --k) {
            if (r2[k] == 0) continue;
            Rational c = r2[k] / r1.back();
            q[k - deg_of(r1)] = c;
            for (int j = 0; j <= deg_of(r1); ++j) r2[k - deg_of(r1) + j] -= c * r1[j];
        }
        trim(r2);
        // s2 = s0 - q*s1
        std::vector<Rational> s2 = s0;
        s2.resize(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw consistency_error("cyclotomic inverse: common factor with Phi_n");
    // r1 is a nonzero constant: inverse = s1 / r1 reduced mod Phi.
    Cyclotomic out(n_);
    const unsigned deg = static_cast<unsigned>(c_.size());
    for (size_t k = 0; k < s1.size(); ++k) {
        Rational v = s1[k] / r1[0];
        if (v == 0) continue;
        if (k < deg) {
            out.c_[k] += v;
        } else {
            const std::vector<Rational>& red = reduced_power(n_, static_cast<unsigned>(k));
            for (unsigned j = 0; j < deg; ++j) out.c_[j] += v * red[j];
        }
    }
    return out;
}

Cyclotomic Cyclotomic::from_coords(unsigned n, std::vector<Rational> coords) {
    if (coords.size() != euler_phi(n))
        throw input_error("cyclotomic coords length must equal phi(conductor)");
    Cyclotomic out(n);
    out.c_ = std::move(coords);
    return out;
}

Cyclotomic cyclotomic_embed(const Rational& a, unsigned n) {
    Rational f = frac_mod1(a);
    Int num = numerator(f), den = denominator(f);
    if (n % den.convert_to<unsigned long>() != 0)
        throw input_error("root-of-unity exponent denominator does not divide conductor");
    Int k = num * Int(n) / den;  // zeta_n^k
    unsigned ku = k.convert_to<unsigned>() % n;
    unsigned deg = euler_phi(n);
    Cyclotomic out(n);
    std::vector<Rational> coords(deg, Rational(0));
    if (ku < deg) {
        coords[ku] = 1;
    } else {
        coords = reduced_power(n, ku);
    }
    return Cyclotomic::from_coords(n, std::move(coords));
}

std::optional<Rational> cyclo_rational(const Cyclotomic& z) {
    const std::vector<Rational>& c = z.coords();
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return c[0];
}

Cyclotomic change_conductor(const Cyclotomic& z, unsigned m) {
    if (m == z.conductor()) return z;
    if (m % z.conductor() != 0)
        throw consistency_error("change_conductor: old conductor must divide new");
    unsigned step = m / z.conductor();
    unsigned deg = euler_phi(m);
    Cyclotomic out(m);
    std::vector<Rational> coords(deg, Rational(0));
    const std::vector<Rational>& c = z.coords();
    for (unsigned k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        unsigned p = k * step;  // zeta_old^k = zeta_m^p
        if (p < deg) {
            coords[p] += c[k];
        } else {
            const std::vector<Rational>& red = reduced_power(m, p);
            for (unsigned j = 0; j < deg; ++j) coords[j] += c[k] * red[j];
        }
    }
    return Cyclotomic::from_coords(m, std::move(coords));
}

}  // namespace polysum
