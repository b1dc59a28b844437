#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "haarcalc/rational.hpp"

namespace haarcalc {

// A finite abelian p-group given by its partition: sum_i Z/p^{lambda_i},
// lambda weakly decreasing. The skeletal model has one object per partition.
struct FinitePGroup {
    Int p{2};
    std::vector<Int> lambda;  // weakly decreasing, entries >= 1

    Int parts() const { return (Int)lambda.size(); }
    Int length() const;  // composition length = sum of lambda
    Int order() const;   // p^length
    bool operator==(const FinitePGroup&) const = default;
};

// Homomorphism sum Z/p^{lambda_i} -> sum Z/p^{mu_j} as the matrix
// mat[j][i] in Z/p^{mu_j}, subject to p^{lambda_i} mat[j][i] = 0.
using GGMatrix = std::vector<std::vector<Int>>;

// A short exact sequence sub >-(mono)-> total -(epi)->> coker between
// objects of the complex, with explicit matrices.
struct GGSequence {
    int sub{0}, total{0}, coker{0};
    GGMatrix mono, epi;
};

// The 1-skeleton of the Gillet-Grayson simplicial set on the skeletal
// category of finite p-groups of composition length <= cap. Vertices are
// object pairs (P, P'); a 1-simplex is a pair of exact sequences with the
// same cokernel object, joining (P0, P0') to (P1, P1').
struct GGComplex {
    Int p{2};
    int cap{1};
    std::vector<FinitePGroup> objects;
    std::vector<GGSequence> sequences;              // grouped by cokernel object
    std::vector<std::pair<size_t, size_t>> coker_ranges;  // [begin, end) per object

    int vertex_count() const { return (int)(objects.size() * objects.size()); }
    int vertex_id(int left, int right) const { return left * (int)objects.size() + right; }
    std::size_t edge_count() const;
};

bool is_valid_hom(const FinitePGroup& a, const FinitePGroup& b, const GGMatrix& m);
std::vector<std::vector<Int>> enumerate_elements(const FinitePGroup& g);
std::vector<Int> apply_hom(const FinitePGroup& a, const FinitePGroup& b, const GGMatrix& m,
                           const std::vector<Int>& x);

// Exactness: mono injective, epi surjective, image(mono) = kernel(epi),
// and |total| = |sub| . |coker|. Verified elementwise.
bool validate_ggsequence(const GGComplex& c, const GGSequence& s, std::string* why = nullptr);

// Full enumeration. cap is guarded to 1..3. The parallel build uses OpenMP
// over (sub, total) object pairs with a deterministic ordered merge and
// produces the identical complex.
GGComplex gg_build(Int p, int cap);
GGComplex gg_build_serial(Int p, int cap);

struct GGPi0Report {
    int vertex_count{0};
    std::size_t edge_count{0};
    int component_count{0};
    // Component count per value of length(P') - length(P) over its vertices.
    std::map<Int, int> components_per_difference;
    bool edges_respect_difference{true};
    bool basepoint_diagonal_connected{true};
    std::vector<int> component_of;  // vertex -> component root id
};

GGPi0Report gg_pi0(const GGComplex& c);

// The two 1-simplices of the loop attached to an automorphism f of object
// P: nu(P) from the identity sequence pair, xi_f with f as one epimorphism.
// Both join (0, 0) to (P, P).
struct LoopCertificate {
    int object{0};
    GGSequence nu_first, nu_second;
    GGSequence xi_first, xi_second;
    bool degenerate{false};  // f = identity collapses nu and xi
};

LoopCertificate gg_loop(const GGComplex& c, int object_index, const GGMatrix& f);

std::string fpgroup_str(const FinitePGroup& g);

}  // namespace haarcalc
