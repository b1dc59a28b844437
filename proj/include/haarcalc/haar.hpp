#pragma once

#include "haarcalc/sequence.hpp"

namespace haarcalc {

// scale . mu_can, where mu_can is the canonical root measure of the group:
// volume 1 on the canonical compact open, Lebesgue-[0,1) on R atoms,
// counting on discrete atoms.
struct HaarElement {
    GroupExpr group;
    PositiveReal scale;
    bool operator==(const HaarElement&) const = default;
};

HaarElement canonical_measure(const GroupExpr& x);

// The Haar measure assigning volume 1 to the chosen compact open C.
HaarElement root_measure(const GroupExpr& x, const CompactOpenChoice& c);

HaarElement pushforward(const Morphism& f, const HaarElement& mu);

struct SplitResult {
    HaarElement sub;
    HaarElement quot;
    PositiveReal r;  // the full scale; sub carries r, quot carries 1
};

// Ha(Sigma) in trivialized coordinates: mu = r . (mu_can' (x) mu_can'').
SplitResult split(const ExactSequence& seq, const HaarElement& mu);

// Inverse glue along Eq.-style Fubini bookkeeping; glue(split(mu)) == mu.
HaarElement glue(const ExactSequence& seq, const HaarElement& sub, const HaarElement& quot);

// mu in Q_{>0} . mu_root. Only defined on vector-free groups.
bool haq_membership(const HaarElement& mu);

struct AxiomReport {
    bool pass{true};
    std::string detail;
    PositiveReal lhs, rhs;
};

// Axiom (3): the composite through the iso-left / iso-right splittings
// agrees with the pushforward along f (resp. its inverse).
AxiomReport check_axiom3(const Morphism& f);

// Axiom (4) on the filtration C1-subgroup <= C2-subgroup <= X given by two
// nested compact-open choices: the two routes through the defect diagram
// agree.
AxiomReport check_axiom4(const GroupExpr& x, const CompactOpenChoice& c1, const CompactOpenChoice& c2);

// Axiom (5): the sum-split scale is invariant under swapping the factors.
AxiomReport check_axiom5(const GroupExpr& left, const GroupExpr& right);

// The compact-open choice of C1 viewed inside the subgroup cut out by C2
// (requires C1 <= C2 occurrencewise), and the image of C2 in X/C1.
CompactOpenChoice relative_choice(const CompactOpenChoice& c1, const CompactOpenChoice& c2);
CompactOpenChoice image_choice(const CompactOpenChoice& c1, const CompactOpenChoice& c2);

struct DiagramEdge {
    int from{0};
    int to{0};
    Morphism morphism;
};

struct Diagram {
    std::vector<GroupExpr> vertices;
    std::vector<DiagramEdge> edges;
};

void validate_diagram(const Diagram& d);

struct WalkStep {
    int edge{0};
    bool forward{true};
};

// Product of mod(edge)^{+-1} along a closed walk: the ratio between a Haar
// measure and its transport around the cycle.
PositiveReal holonomy(const Diagram& d, const std::vector<WalkStep>& cycle);

}  // namespace haarcalc
