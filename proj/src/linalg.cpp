#include "polysum/linalg.hpp"

namespace polysum {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
    return out;
}

IntVector primitive(const IntVector& v) {
    Int g(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
    if (g == 0) throw input_error("zero vector has no primitive form");
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
    return out;
}

bool is_primitive(const IntVector& v) {
    Int g(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
    return g == 1;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s(0);
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

std::vector<Int> SmithForm::divisors() const {
    std::vector<Int> out;
    Eigen::Index k = std::min(D.rows(), D.cols());
    for (Eigen::Index i = 0; i < k; ++i) out.push_back(D(i, i));
    return out;
}

int SmithForm::rank() const {
    int r = 0;
    for (const Int& d : divisors())
        if (d != 0) ++r;
    return r;
}

namespace {

struct SnfState {
    IntMatrix a, u, w, winv;

    void row_swap(Eigen::Index i, Eigen::Index j) {
        a.row(i).swap(a.row(j));
        u.row(i).swap(u.row(j));
    }
    void col_swap(Eigen::Index i, Eigen::Index j) {
        a.col(i).swap(a.col(j));
        w.col(i).swap(w.col(j));
        winv.row(i).swap(winv.row(j));
    }
    // row i += c * row j
    void row_add(Eigen::Index i, Eigen::Index j, const Int& c) {
        a.row(i) += c * a.row(j);
        u.row(i) += c * u.row(j);
    }
    // col i += c * col j
    void col_add(Eigen::Index i, Eigen::Index j, const Int& c) {
        a.col(i) += c * a.col(j);
        w.col(i) += c * w.col(j);
        winv.row(j) -= c * winv.row(i);
    }
    void row_negate(Eigen::Index i) {
        a.row(i) = -a.row(i);
        u.row(i) = -u.row(i);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    SnfState s;
    s.a = m;
    s.u = IntMatrix::Identity(rows, rows);
    s.w = IntMatrix::Identity(cols, cols);
    s.winv = IntMatrix::Identity(cols, cols);

    const Eigen::Index k = std::min(rows, cols);
    for (Eigen::Index t = 0; t < k; ++t) {
        for (;;) {
            // Locate the nonzero entry of smallest magnitude in the trailing block.
            Eigen::Index pi = -1, pj = -1;
            for (Eigen::Index i = t; i < rows; ++i)
                for (Eigen::Index j = t; j < cols; ++j)
                    if (s.a(i, j) != 0 &&
                        (pi < 0 || abs(s.a(i, j)) < abs(s.a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;  // trailing block is zero
            if (pi != t) s.row_swap(t, pi);
            if (pj != t) s.col_swap(t, pj);

            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i)
                if (s.a(i, t) != 0) {
                    s.row_add(i, t, -floor_div(s.a(i, t), s.a(t, t)));
                    if (s.a(i, t) != 0) clean = false;
                }
            for (Eigen::Index j = t + 1; j < cols; ++j)
                if (s.a(t, j) != 0) {
                    s.col_add(j, t, -floor_div(s.a(t, j), s.a(t, t)));
                    if (s.a(t, j) != 0) clean = false;
                }
            if (!clean) continue;  // smaller remainders exist, pick a new pivot

            // Enforce that the pivot divides the rest of the block.
            bool divides = true;
            for (Eigen::Index i = t + 1; i < rows && divides; ++i)
                for (Eigen::Index j = t + 1; j < cols && divides; ++j)
                    if (s.a(i, j) % s.a(t, t) != 0) {
                        s.row_add(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (s.a(t, t) < 0) s.row_negate(t);
    }

    SmithForm out;
    out.U = s.u;
    out.D = s.a;
    out.W = s.w;
    out.Winv = s.winv;
    return out;
}

IntMatrix saturate(const IntMatrix& rows) {
    if (rows.rows() == 0) return IntMatrix(0, rows.cols());
    SmithForm snf = smith_normal_form(rows);
    int r = snf.rank();
    // rows = U^{-1} D W^{-1}; the first r rows of W^{-1} span the same
    // Q-space and extend to a Z-basis of Z^n, hence are saturated.
    IntMatrix out(r, rows.cols());
    for (int i = 0; i < r; ++i) out.row(i) = snf.Winv.row(i);
    return out;
}

IntMatrix kernel_lattice_basis(const IntMatrix& m) {
    if (m.rows() == 0) return IntMatrix::Identity(m.cols(), m.cols());
    SmithForm snf = smith_normal_form(m);
    int r = snf.rank();
    IntMatrix out(m.cols(), m.cols() - r);
    for (Eigen::Index j = r; j < m.cols(); ++j) out.col(j - r) = snf.W.col(j);
    return out;
}

Rational det_exact(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw consistency_error("determinant of non-square matrix");
    if (m.rows() == 0) return Rational(1);
    Eigen::FullPivLU<RatMatrix> lu(m);
    return lu.determinant();
}

Int det_exact(const IntMatrix& m) {
    Rational d = det_exact(to_rational(m));
    return to_int(d);
}

RatVector solve_exact(const RatMatrix& a, const RatVector& b) {
    Eigen::FullPivLU<RatMatrix> lu(a);
    if (lu.rank() != a.cols() || a.rows() != a.cols())
        throw consistency_error("solve_exact: singular system");
    RatVector x = lu.solve(b);
    return x;
}

RatMatrix inverse_exact(const RatMatrix& a) {
    Eigen::FullPivLU<RatMatrix> lu(a);
    if (a.rows() != a.cols() || lu.rank() != a.cols())
        throw consistency_error("inverse_exact: singular matrix");
    RatMatrix inv = lu.inverse();
    return inv;
}

namespace {

// Drop all-zero rows (they read 0 >= 0).
RatMatrix normalize_rows(const RatMatrix& m) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (!m.row(i).isZero()) keep.push_back(i);
    RatMatrix out(static_cast<Eigen::Index>(keep.size()), m.cols());
    for (size_t i = 0; i < keep.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(keep[i]);
    return out;
}

}  // namespace

bool cone_is_nontrivial(const RatMatrix& m_in) {
    RatMatrix m = normalize_rows(m_in);
    const Eigen::Index n = m.cols();
    if (n == 0) return false;
    if (m.rows() == 0) return true;  // whole space, n >= 1

    // Direction +/- e_n works when the last coefficients all share a sign.
    bool all_nonneg = true, all_nonpos = true;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, n - 1) < 0) all_nonneg = false;
        if (m(i, n - 1) > 0) all_nonpos = false;
    }
    if (all_nonneg || all_nonpos) return true;
    if (n == 1) return false;

    // Fourier-Motzkin elimination of the last variable.
    std::vector<RatVector> proj;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, n - 1) == 0) {
            RatVector r = m.row(i).head(n - 1).transpose();
            proj.push_back(r);
        }
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, n - 1) <= 0) continue;
        for (Eigen::Index j = 0; j < m.rows(); ++j) {
            if (m(j, n - 1) >= 0) continue;
            RatVector r = (m(i, n - 1) * m.row(j).head(n - 1) -
                           m(j, n - 1) * m.row(i).head(n - 1))
                              .transpose();
            proj.push_back(r);
        }
    }
    RatMatrix pm(static_cast<Eigen::Index>(proj.size()), n - 1);
    for (size_t i = 0; i < proj.size(); ++i) pm.row(static_cast<Eigen::Index>(i)) = proj[i].transpose();
    return cone_is_nontrivial(pm);
}

}  // namespace polysum
