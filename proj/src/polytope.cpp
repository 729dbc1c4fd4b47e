#include "polysum/polytope.hpp"

#include <algorithm>
#include <set>

namespace polysum {

RatVector VertexData::alpha_for(int facet) const {
    for (size_t k = 0; k < tight.size(); ++k)
        if (tight[k] == facet) {
            RatVector col = alpha.col(static_cast<Eigen::Index>(k));
            return col;
        }
    throw consistency_error("alpha_for: facet not tight at vertex");
}

std::vector<Int> FiniteAbelianGroup::canonical_key(const IntVector& y) const {
    const Eigen::Index k = sat_basis.rows();
    if (k == 0) return {};
    // coordinates c with y = c * sat_basis
    RatMatrix bt(sat_basis.cols(), k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < sat_basis.cols(); ++j) bt(j, i) = Rational(sat_basis(i, j));
    RatVector c = solve_least(bt, y);
    std::vector<Int> key(static_cast<size_t>(k));
    // key = (c * W) mod divisors
    for (Eigen::Index b = 0; b < k; ++b) {
        Rational s(0);
        for (Eigen::Index i = 0; i < k; ++i) s += c(i) * Rational(coord_to_key(i, b));
        Int v = to_int(s);
        const Int& d = divisors_all[static_cast<size_t>(b)];
        key[static_cast<size_t>(b)] = d == 0 ? v : mod_floor_local(v, d);
    }
    return key;
}

const GroupElement& FiniteAbelianGroup::element_by_key(const std::vector<Int>& key) const {
    for (const GroupElement& e : elements)
        if (e.key == key) return e;
    throw consistency_error("group element key not found");
}

RatVector SimplePolytope::normal_row(int i) const {
    RatVector out(n);
    for (int j = 0; j < n; ++j) out(j) = Rational(normals(i, j));
    return out;
}

Rational SimplePolytope::slack(int i, const RatVector& x) const {
    Rational s(offsets[static_cast<size_t>(i)]);
    for (int j = 0; j < n; ++j) s += Rational(normals(i, j)) * x(j);
    return s;
}

int SimplePolytope::face_of(const std::vector<int>& sorted_I) const {
    auto it = face_index_.find(sorted_I);
    return it == face_index_.end() ? -1 : it->second;
}

int SimplePolytope::face_id_of_facet(int facet) const {
    int id = face_of({facet});
    if (id < 0) throw consistency_error("facet has no face entry");
    return id;
}

RatVector SimplePolytope::face_alpha(int face_id, int facet, RepVertex rep) const {
    const FaceDescriptor& f = faces[static_cast<size_t>(face_id)];
    int vid = rep == RepVertex::Lowest ? f.rep_vertex : f.rep_vertex_high;
    return vertices[static_cast<size_t>(vid)].alpha_for(facet);
}

bool SimplePolytope::is_delzant() const {
    for (const VertexData& v : vertices)
        if (v.group_order != 1) return false;
    return true;
}

std::vector<std::vector<int>> SimplePolytope::combinatorics() const {
    std::vector<std::vector<int>> out;
    for (const VertexData& v : vertices) out.push_back(v.tight);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void enumerate_subsets(int d, int n, std::vector<int>& cur, int start,
                       const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == n) {
        fn(cur);
        return;
    }
    for (int i = start; i < d; ++i) {
        cur.push_back(i);
        enumerate_subsets(d, n, cur, i + 1, fn);
        cur.pop_back();
    }
}

}  // namespace

FiniteAbelianGroup face_group(const IntMatrix& normal_rows, const RatMatrix& alpha_cols,
                              const RatVector& rep_vertex) {
    FiniteAbelianGroup g;
    const Eigen::Index k = normal_rows.rows();
    g.sat_basis = saturate(normal_rows);
    if (g.sat_basis.rows() != k) throw consistency_error("face normals not independent");

    if (k == 0) {
        g.order = 1;
        GroupElement id;
        id.face_phase = 0;
        id.is_flat = true;  // vacuously: no pairings required to be non-integral
        id.rep = IntVector::Zero(normal_rows.cols());
        g.elements.push_back(std::move(id));
        g.coord_to_key = IntMatrix(0, 0);
        return g;
    }

    // Coordinates of each u_i in the saturated basis: C * sat_basis = normal_rows.
    RatMatrix bt(g.sat_basis.cols(), k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < g.sat_basis.cols(); ++j)
            bt(j, i) = Rational(g.sat_basis(i, j));
    IntMatrix c(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        RatVector rhs(normal_rows.cols());
        for (Eigen::Index j = 0; j < normal_rows.cols(); ++j) rhs(j) = Rational(normal_rows(i, j));
        RatVector ci = solve_least(bt, rhs);
        for (Eigen::Index b = 0; b < k; ++b) c(i, b) = to_int(ci(b));
    }

    SmithForm snf = smith_normal_form(c);
    g.coord_to_key = snf.W;
    g.divisors_all = snf.divisors();
    g.order = 1;
    for (const Int& d : g.divisors_all) {
        g.order *= d;
        if (d > 1) g.divisors.push_back(d);
    }

    // Representatives: coordinate tuple t maps to t * (W^{-1} * sat_basis).
    IntMatrix rep_rows = snf.Winv * g.sat_basis;

    std::vector<Int> tuple(static_cast<size_t>(k), Int(0));
    for (;;) {
        GroupElement el;
        el.key = tuple;
        IntVector y = IntVector::Zero(g.sat_basis.cols());
        for (Eigen::Index b = 0; b < k; ++b)
            y += tuple[static_cast<size_t>(b)] * rep_rows.row(b).transpose();
        el.rep = y;
        el.is_flat = true;
        for (Eigen::Index j = 0; j < k; ++j) {
            Rational pr(0);
            for (Eigen::Index t = 0; t < y.size(); ++t) pr += Rational(y(t)) * alpha_cols(t, j);
            Rational frac = frac_mod1(pr);
            el.pairings.push_back(frac);
            if (frac == 0) el.is_flat = false;
        }
        Rational ph(0);
        for (Eigen::Index t = 0; t < y.size(); ++t) ph += Rational(y(t)) * rep_vertex(t);
        el.face_phase = frac_mod1(ph);
        g.elements.push_back(std::move(el));

        // next tuple
        Eigen::Index pos = k - 1;
        while (pos >= 0) {
            tuple[static_cast<size_t>(pos)] += 1;
            if (tuple[static_cast<size_t>(pos)] < g.divisors_all[static_cast<size_t>(pos)]) break;
            tuple[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    if (Int(static_cast<long>(g.elements.size())) != g.order)
        throw consistency_error("group enumeration size mismatch");
    return g;
}

std::vector<const GroupElement*> flat_elements(const FiniteAbelianGroup& g) {
    std::vector<const GroupElement*> out;
    for (const GroupElement& e : g.elements)
        if (e.is_flat) out.push_back(&e);
    return out;
}

SimplePolytope build_polytope(const IntMatrix& normals, const std::vector<Int>& offsets) {
    SimplePolytope p;
    const int d = static_cast<int>(normals.rows());
    const int n = static_cast<int>(normals.cols());
    if (static_cast<int>(offsets.size()) != d)
        throw input_error("facet count mismatch between normals and offsets");
    if (n < 1) throw input_error("dimension must be positive");
    if (d < n + 1) throw input_error("unbounded: fewer than n+1 facets");
    for (int i = 0; i < d; ++i) {
        IntVector row = normals.row(i).transpose();
        bool zero = true;
        for (int j = 0; j < n; ++j)
            if (row(j) != 0) zero = false;
        if (zero) throw input_error("zero vector has no primitive form");
        if (!is_primitive(row)) throw input_error("normal not primitive");
    }
    p.n = n;
    p.normals = normals;
    p.offsets = offsets;

    if (cone_is_nontrivial(to_rational(normals))) throw input_error("unbounded");

    // Vertex enumeration over n-subsets of facets.
    std::vector<int> cur;
    enumerate_subsets(d, n, cur, 0, [&](const std::vector<int>& s) {
        RatMatrix us(n, n);
        RatVector rhs(n);
        for (int r = 0; r < n; ++r) {
            for (int j = 0; j < n; ++j) us(r, j) = Rational(normals(s[static_cast<size_t>(r)], j));
            rhs(r) = -Rational(offsets[static_cast<size_t>(s[static_cast<size_t>(r)])]);
        }
        Eigen::FullPivLU<RatMatrix> lu(us);
        if (lu.rank() != n) return;
        RatVector x = lu.solve(rhs);
        for (int i = 0; i < d; ++i) {
            if (std::find(s.begin(), s.end(), i) != s.end()) continue;
            Rational sl = p.slack(i, x);
            if (sl < 0) return;  // infeasible
            if (sl == 0) throw input_error("not simple");
        }
        VertexData v;
        v.v = x;
        v.tight = s;
        v.alpha = lu.inverse();
        v.group_order = abs(to_int(lu.determinant()));
        p.vertices.push_back(std::move(v));
    });
    if (p.vertices.empty()) throw input_error("empty polytope");

    for (int i = 0; i < d; ++i) {
        bool used = false;
        for (const VertexData& v : p.vertices)
            if (std::find(v.tight.begin(), v.tight.end(), i) != v.tight.end()) used = true;
        if (!used) throw input_error("redundant facet");
    }

    // Faces: subsets of vertex tight-sets, deduplicated by the index set.
    std::set<std::vector<int>> face_sets;
    for (const VertexData& v : p.vertices) {
        const int m = static_cast<int>(v.tight.size());
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> s;
            for (int b = 0; b < m; ++b)
                if (mask & (1u << b)) s.push_back(v.tight[static_cast<size_t>(b)]);
            face_sets.insert(s);
        }
    }
    std::vector<std::vector<int>> ordered(face_sets.begin(), face_sets.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    for (const std::vector<int>& s : ordered) {
        FaceDescriptor f;
        f.I = s;
        f.dim = n - static_cast<int>(s.size());
        for (size_t vid = 0; vid < p.vertices.size(); ++vid) {
            const std::vector<int>& tight = p.vertices[vid].tight;
            if (std::includes(tight.begin(), tight.end(), s.begin(), s.end()))
                f.vertex_ids.push_back(static_cast<int>(vid));
        }
        if (f.vertex_ids.empty()) throw consistency_error("face without vertices");
        // Exactness of I_F: no facet outside s contains every vertex of F.
        for (int l = 0; l < d; ++l) {
            if (std::find(s.begin(), s.end(), l) != s.end()) continue;
            bool contains_all = true;
            for (int vid : f.vertex_ids) {
                const std::vector<int>& tight = p.vertices[static_cast<size_t>(vid)].tight;
                if (std::find(tight.begin(), tight.end(), l) == tight.end()) contains_all = false;
            }
            if (contains_all) throw input_error("not simple");
        }
        f.rep_vertex = f.vertex_ids.front();
        f.rep_vertex_high = f.vertex_ids.back();
        p.face_index_.emplace(f.I, static_cast<int>(p.faces.size()));
        p.faces.push_back(std::move(f));
    }

    // Sigma_F and groups.
    for (FaceDescriptor& f : p.faces) {
        for (int l = 0; l < d; ++l) {
            if (std::find(f.I.begin(), f.I.end(), l) != f.I.end()) continue;
            std::vector<int> bigger = f.I;
            bigger.push_back(l);
            std::sort(bigger.begin(), bigger.end());
            if (p.face_of(bigger) >= 0) f.sigma.push_back(l);
        }
        const int k = static_cast<int>(f.I.size());
        IntMatrix rows(k, n);
        RatMatrix alpha_cols(n, k);
        const VertexData& rep = p.vertices[static_cast<size_t>(f.rep_vertex)];
        for (int r = 0; r < k; ++r) {
            for (int j = 0; j < n; ++j) rows(r, j) = normals(f.I[static_cast<size_t>(r)], j);
            alpha_cols.col(r) = rep.alpha_for(f.I[static_cast<size_t>(r)]);
        }
        f.group = face_group(rows, alpha_cols, rep.v);
    }

    // Cross-check: |Gamma_v| recorded per vertex matches the face group.
    for (const VertexData& v : p.vertices) {
        int fid = p.face_of(v.tight);
        if (fid < 0 || p.faces[static_cast<size_t>(fid)].group.order != v.group_order)
            throw consistency_error("vertex group order mismatch");
    }
    return p;
}

bool vertex_partition_check(const SimplePolytope& p, int vertex_id) {
    const VertexData& v = p.vertices[static_cast<size_t>(vertex_id)];
    int vface = p.face_of(v.tight);
    const FiniteAbelianGroup& gv = p.faces[static_cast<size_t>(vface)].group;

    std::set<std::vector<Int>> seen;
    Int total(0);
    for (const FaceDescriptor& f : p.faces) {
        if (std::find(f.vertex_ids.begin(), f.vertex_ids.end(), vertex_id) == f.vertex_ids.end())
            continue;
        for (const GroupElement& e : f.group.elements) {
            if (!e.is_flat) continue;
            std::vector<Int> key = gv.canonical_key(e.rep);
            if (!seen.insert(key).second) return false;  // duplicate
            total += 1;
        }
    }
    return total == gv.order;
}

}  // namespace polysum
