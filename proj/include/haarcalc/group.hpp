#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "haarcalc/rational.hpp"

namespace haarcalc {

// The atom catalog. LocalField(q) covers Q_p (q = p prime) and F_q((t));
// IntegerRing(q) is its ring of integers, Prufer(q) the discrete quotient
// K/O. Only the valuation data of these fields enters any computation.
enum class AtomKind {
    RealLine,
    LocalField,
    IntegerRing,
    Prufer,
    ZDiscrete,
    Circle,
    Cyclic,
    DiscreteBlackbox,
};

struct Atom {
    AtomKind kind{AtomKind::ZDiscrete};
    Int param{0};        // residue cardinality q for the local-field family, n for Cyclic
    std::string label;   // DiscreteBlackbox only

    static Atom real_line() { return {AtomKind::RealLine, 0, {}}; }
    static Atom local_field(Int q);
    static Atom integer_ring(Int q);
    static Atom prufer(Int q);
    static Atom z() { return {AtomKind::ZDiscrete, 0, {}}; }
    static Atom circle() { return {AtomKind::Circle, 0, {}}; }
    static Atom cyclic(Int n);
    static Atom blackbox(std::string label) { return {AtomKind::DiscreteBlackbox, 0, std::move(label)}; }

    // Residue characteristic for the local-field family; param itself when prime.
    Int residue_prime() const;

    auto operator<=>(const Atom&) const = default;
};

// A formal finite direct sum of atoms, kept sorted with multiplicities merged.
// The empty list is the zero group.
struct GroupExpr {
    std::vector<std::pair<Atom, int>> atoms;

    bool is_zero() const { return atoms.empty(); }
    int total_occurrences() const;
    bool operator==(const GroupExpr&) const = default;
};

GroupExpr normalize(GroupExpr expr);
GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b);

struct ClassifyFlags {
    bool vector_free{false};
    bool compact{false};
    bool discrete{false};
    bool operator==(const ClassifyFlags&) const = default;
};

ClassifyFlags classify(const GroupExpr& expr);

// One compact-open subgroup parameter per atom occurrence:
//   LocalField(q): a in Z, the fractional ideal m^a
//   IntegerRing(q): a >= 0, the ideal m^a
//   Prufer(q): a >= 0, the finite subgroup of order q^a
//   Cyclic(n): a divisor d of n, the subgroup of order d
//   ZDiscrete / DiscreteBlackbox: fixed {0} (stored as 0)
//   Circle: fixed whole group (stored as 0)
// RealLine has no compact open subgroup; choices on expressions containing
// it are rejected.
struct CompactOpenChoice {
    GroupExpr group;
    std::vector<std::vector<Int>> params;  // params[i][j]: occurrence j of atoms[i]
};

CompactOpenChoice canonical_choice(const GroupExpr& expr);
CompactOpenChoice make_choice(const GroupExpr& expr, std::vector<std::vector<Int>> params);
void validate_choice(const CompactOpenChoice& c);

// [C : C n C'] / [C' : C n C'] as an exact positive rational.
PrimeExponentVector generalized_index(const CompactOpenChoice& c, const CompactOpenChoice& cprime);

// The discrete quotient expr / C, per the atom quotient table. Requires a
// vector-free expression.
GroupExpr quotient_by(const GroupExpr& expr, const CompactOpenChoice& c);

// The chosen compact open subgroup itself, as a GroupExpr.
GroupExpr subgroup_expr(const CompactOpenChoice& c);

struct StructureDecomposition {
    int real_rank{0};
    CompactOpenChoice compact_part;  // canonical choice on the non-real part
    GroupExpr discrete_part;
};

// expr = R^n + (extension of D by C) with C the canonical compact open of
// the non-real part and D its discrete quotient.
StructureDecomposition structure_decompose(const GroupExpr& expr);

std::string atom_str(const Atom& a);
std::string expr_str(const GroupExpr& expr);

}  // namespace haarcalc
