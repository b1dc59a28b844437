#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "haarcalc/group.hpp"
#include "haarcalc/rational.hpp"

namespace haarcalc {

// Block payloads. Symbolic factors are only admitted on R-blocks: a scalar
// may carry a symbol monomial, and a matrix a global symbol premultiplier,
// so the determinant stays an exactly representable monomial.
struct IdentityPayload {
    bool operator==(const IdentityPayload&) const = default;
};

struct ScalarMul {
    Fraction value{1, 1};
    std::map<std::string, Int> symbols;
    bool operator==(const ScalarMul&) const = default;
};

// Scalar with specified valuation, for local fields with non-prime residue
// cardinality where only the valuation of an element is representable.
struct ScalarMulValuation {
    Int v{0};
    bool operator==(const ScalarMulValuation&) const = default;
};

struct MatrixPayload {
    std::vector<std::vector<Fraction>> entries;  // square, size = occurrence count
    std::map<std::string, Int> symbol_scale;     // R-blocks only: premultiplies the matrix
    bool operator==(const MatrixPayload&) const = default;
};

struct PermutationPayload {
    std::vector<int> perm;  // perm[i] = image of occurrence i
    bool operator==(const PermutationPayload&) const = default;
};

using Payload = std::variant<IdentityPayload, ScalarMul, ScalarMulValuation, MatrixPayload, PermutationPayload>;

struct Block {
    Atom atom;
    int count{1};
    Payload payload;
    bool operator==(const Block&) const = default;
};

// A block-structured morphism. Blocks are parallel to the normalized atom
// list of the source; like-kind atoms map to like-kind atoms, so source and
// target share the same atom multiset.
struct Morphism {
    GroupExpr source;
    GroupExpr target;
    std::vector<Block> blocks;
    bool operator==(const Morphism&) const = default;
};

Morphism identity_morphism(const GroupExpr& expr);

// One block per atom entry, all carrying the same scalar payload.
Morphism blockwise(const GroupExpr& expr, const Payload& payload);
Morphism blockwise_scalar(const GroupExpr& expr, const Fraction& alpha,
                          const std::map<std::string, Int>& symbols = {});

// Structural validity: block list parallel to the atom list, square matrices,
// permutations well-formed, payload kinds admissible for the atom kind.
void validate_structure(const Morphism& f);

struct ValidationResult {
    bool ok{true};
    int block_index{-1};
    std::string message;
};

// Invertibility of f as an automorphism of its (vector-free or not) group,
// checked per block against the unit conditions of the atom kind.
ValidationResult validate_automorphism(const Morphism& f);

// g after f. Blockwise; matrix blocks multiply, scalars multiply.
Morphism compose(const Morphism& g, const Morphism& f);

Morphism inverse(const Morphism& f);

// The module of an automorphism: the forward volume ratio mu(f(S))/mu(S),
// i.e. the factor by which f acts on the Haar torsor. R-blocks contribute
// |det|, local-field blocks q^{-v(det)}, compact and discrete blocks 1.
PositiveReal mod_of(const Morphism& f);

Fraction matrix_determinant(std::vector<std::vector<Fraction>> m);

std::string morphism_str(const Morphism& f);

}  // namespace haarcalc
