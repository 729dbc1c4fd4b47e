#ifndef POLYSUM_POLYTOPE_HPP
#define POLYSUM_POLYTOPE_HPP

#include "polysum/linalg.hpp"

#include <map>
#include <vector>

namespace polysum {

struct VertexData {
    RatVector v;
    std::vector<int> tight;  // I_v, sorted facet indices, size n
    RatMatrix alpha;         // column k = edge vector dual to normals[tight[k]]
    Int group_order;         // |Gamma_v| = |det of the normal matrix at v|

    // Edge vector alpha_{i,v} for a facet index i in I_v.
    RatVector alpha_for(int facet) const;
};

struct GroupElement {
    std::vector<Int> key;            // SNF coordinates, one per divisor
    std::vector<Rational> pairings;  // <gamma, alpha_{j,F}> mod 1, aligned with I_F
    Rational face_phase;             // <gamma, x> mod 1 for x in F
    bool is_flat;                    // gamma in Gamma_F^flat
    IntVector rep;                   // representative in the dual lattice
};

struct FiniteAbelianGroup {
    std::vector<Int> divisors_all;  // all SNF divisors, aligned with keys
    std::vector<Int> divisors;      // the elementary divisors > 1
    Int order;
    std::vector<GroupElement> elements;
    IntMatrix sat_basis;   // rows: basis of V_F* ∩ Z^n
    IntMatrix coord_to_key;  // W of the SNF relating span{u_i} to sat_basis

    // Canonical key of a dual-lattice vector lying in V_F^*.
    std::vector<Int> canonical_key(const IntVector& y) const;
    const GroupElement& element_by_key(const std::vector<Int>& key) const;
};

struct FaceDescriptor {
    std::vector<int> I;           // facet indices, sorted; codim = |I|
    int dim;
    std::vector<int> vertex_ids;  // sorted, nonempty
    std::vector<int> sigma;       // Sigma_F: l not in I_F with F ∩ sigma_l a facet of F
    int rep_vertex;               // lowest vertex id in F
    int rep_vertex_high;          // highest vertex id in F
    FiniteAbelianGroup group;
};

enum class RepVertex { Lowest, Highest };

class SimplePolytope {
public:
    int n = 0;
    IntMatrix normals;         // d x n, rows are primitive inward normals
    std::vector<Int> offsets;  // size d

    std::vector<VertexData> vertices;
    std::vector<FaceDescriptor> faces;  // ordered by (codim, I lexicographic); faces[0] is the whole polytope

    int facet_count() const { return static_cast<int>(offsets.size()); }
    RatVector normal_row(int i) const;
    // <u_i, x> + lambda_i
    Rational slack(int i, const RatVector& x) const;

    // Face id for a facet index set, or -1 when the facets do not meet.
    int face_of(const std::vector<int>& sorted_I) const;
    const FaceDescriptor& face(int id) const { return faces[id]; }
    int face_id_of_facet(int facet) const;

    // alpha~_{j,F} taken at the face's representative vertex.
    RatVector face_alpha(int face_id, int facet, RepVertex rep = RepVertex::Lowest) const;

    bool is_delzant() const;
    // Multiset of vertex tight-sets; equal multisets mean equal combinatorics.
    std::vector<std::vector<int>> combinatorics() const;

private:
    std::map<std::vector<int>, int> face_index_;
    friend SimplePolytope build_polytope(const IntMatrix&, const std::vector<Int>&);
};

SimplePolytope build_polytope(const IntMatrix& normals, const std::vector<Int>& offsets);

// Gamma_F together with pairings and phases, from the rows {u_i : i in I}.
// rep_vertex_coords is the vertex used for alpha~ and the face phase.
FiniteAbelianGroup face_group(const IntMatrix& normal_rows, const RatMatrix& alpha_cols,
                              const RatVector& rep_vertex);

std::vector<const GroupElement*> flat_elements(const FiniteAbelianGroup& g);

// True iff the Gamma_F^flat over faces F containing v partition Gamma_v.
bool vertex_partition_check(const SimplePolytope& p, int vertex_id);

}  // namespace polysum

#endif
