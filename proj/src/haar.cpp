#include "haarcalc/haar.hpp"

#include <algorithm>
#include <sstream>

namespace haarcalc {

namespace {

// Assemble a choice from per-occurrence (atom, parameter) pairs into the
// normalized-expression layout. Occurrence order within one atom entry is
// immaterial for every index computation.
CompactOpenChoice assemble_choice(std::vector<std::pair<Atom, Int>> occ) {
    std::stable_sort(occ.begin(), occ.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    CompactOpenChoice c;
    for (auto& [atom, v] : occ) {
        if (atom.kind == AtomKind::Cyclic && atom.param == 1) continue;  // zero summand
        if (!c.group.atoms.empty() && c.group.atoms.back().first == atom) {
            c.group.atoms.back().second += 1;
            c.params.back().push_back(v);
        } else {
            c.group.atoms.emplace_back(atom, 1);
            c.params.push_back({v});
        }
    }
    validate_choice(c);
    return c;
}

void require_nested(const CompactOpenChoice& c1, const CompactOpenChoice& c2) {
    if (!(c1.group == c2.group)) throw std::domain_error("choices on different groups");
    for (size_t i = 0; i < c1.group.atoms.size(); ++i) {
        const Atom& atom = c1.group.atoms[i].first;
        for (size_t j = 0; j < c1.params[i].size(); ++j) {
            Int a1 = c1.params[i][j], a2 = c2.params[i][j];
            bool ok = true;
            switch (atom.kind) {
                case AtomKind::LocalField:
                case AtomKind::IntegerRing: ok = a1 >= a2; break;
                case AtomKind::Prufer: ok = a1 <= a2; break;
                case AtomKind::Cyclic: ok = a2 % a1 == 0; break;
                default: break;
            }
            if (!ok) throw std::domain_error("choices are not nested (C1 <= C2 required)");
        }
    }
}

Int int_pow(Int base, Int e) {
    Int r = 1;
    for (Int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

HaarElement canonical_measure(const GroupExpr& x) { return {normalize(x), PositiveReal::one()}; }

HaarElement root_measure(const GroupExpr& x, const CompactOpenChoice& c) {
    if (!classify(x).vector_free)
        throw std::domain_error("root_measure: group is not vector-free");
    if (!(c.group == x)) throw std::domain_error("root_measure: choice is for a different group");
    // vol(C) = 1 forces scale [C_can : C] relative to the canonical root.
    return {x, PositiveReal(generalized_index(canonical_choice(x), c))};
}

HaarElement pushforward(const Morphism& f, const HaarElement& mu) {
    if (!(normalize(f.source) == mu.group))
        throw std::invalid_argument("pushforward: measure lives on a different group");
    return {normalize(f.target), mu.scale.times(mod_of(f))};
}

SplitResult split(const ExactSequence& seq, const HaarElement& mu) {
    if (!(mu.group == normalize(seq.total)))
        throw std::invalid_argument("split: measure lives on a different group");
    PositiveReal r = mu.scale.times(defect(seq));
    return {{seq.sub, r}, {seq.quot, PositiveReal::one()}, r};
}

HaarElement glue(const ExactSequence& seq, const HaarElement& sub, const HaarElement& quot) {
    if (!(sub.group == normalize(seq.sub)) || !(quot.group == normalize(seq.quot)))
        throw std::invalid_argument("glue: factor measures live on the wrong groups");
    return {normalize(seq.total), sub.scale.times(quot.scale).divided_by(defect(seq))};
}

bool haq_membership(const HaarElement& mu) {
    if (!classify(mu.group).vector_free)
        throw std::domain_error("Ha^Q is undefined: group has no compact open subgroup");
    return mu.scale.is_rational();
}

AxiomReport check_axiom3(const Morphism& f) {
    AxiomReport rep;
    HaarElement mu = canonical_measure(f.source);
    // Route through Sigma_l: split against 0 >-> G ->> G', land on G'.
    PositiveReal via_left = split(make_iso_left(f), mu).r;
    PositiveReal direct = pushforward(f, mu).scale;
    if (via_left != direct) {
        rep.pass = false;
        rep.lhs = via_left;
        rep.rhs = direct;
        rep.detail = "Sigma_l composite disagrees with pushforward";
        return rep;
    }
    // Route through Sigma_r: splitting on G' must realize the inverse.
    HaarElement nu = canonical_measure(f.target);
    PositiveReal via_right = split(make_iso_right(f), nu).r;
    PositiveReal direct_inv = pushforward(inverse(f), nu).scale;
    rep.lhs = via_right;
    rep.rhs = direct_inv;
    if (via_right != direct_inv) {
        rep.pass = false;
        rep.detail = "Sigma_r composite disagrees with inverse pushforward";
    }
    return rep;
}

CompactOpenChoice relative_choice(const CompactOpenChoice& c1, const CompactOpenChoice& c2) {
    require_nested(c1, c2);
    std::vector<std::pair<Atom, Int>> occ;
    for (size_t i = 0; i < c1.group.atoms.size(); ++i) {
        const Atom& atom = c1.group.atoms[i].first;
        for (size_t j = 0; j < c1.params[i].size(); ++j) {
            Int a1 = c1.params[i][j], a2 = c2.params[i][j];
            switch (atom.kind) {
                case AtomKind::LocalField:
                case AtomKind::IntegerRing:
                    occ.emplace_back(Atom::integer_ring(atom.param), a1 - a2);
                    break;
                case AtomKind::Prufer: {
                    // C2 is (Z/p^{a2})^f; C1 sits as the order-p^{a1} part of each copy.
                    if (a2 == 0) break;
                    Int p = atom.residue_prime();
                    Int f = 0;
                    for (Int m = atom.param; m > 1; m /= p) ++f;
                    for (Int k = 0; k < f; ++k)
                        occ.emplace_back(Atom::cyclic(int_pow(p, a2)), int_pow(p, a1));
                    break;
                }
                case AtomKind::Cyclic:
                    if (a2 > 1) occ.emplace_back(Atom::cyclic(a2), a1);
                    break;
                case AtomKind::Circle:
                    occ.emplace_back(Atom::circle(), 0);
                    break;
                default:
                    break;  // trivial subgroup: nothing survives
            }
        }
    }
    return assemble_choice(std::move(occ));
}

CompactOpenChoice image_choice(const CompactOpenChoice& c1, const CompactOpenChoice& c2) {
    require_nested(c1, c2);
    std::vector<std::pair<Atom, Int>> occ;
    for (size_t i = 0; i < c1.group.atoms.size(); ++i) {
        const Atom& atom = c1.group.atoms[i].first;
        for (size_t j = 0; j < c1.params[i].size(); ++j) {
            Int a1 = c1.params[i][j], a2 = c2.params[i][j];
            switch (atom.kind) {
                case AtomKind::LocalField:
                    occ.emplace_back(Atom::prufer(atom.param), a1 - a2);
                    break;
                case AtomKind::IntegerRing: {
                    // X/C1 is (Z/p^{a1})^f; the image of m^{a2} has order q^{a1-a2}.
                    if (a1 == 0) break;
                    Int p = atom.residue_prime();
                    Int f = 0;
                    for (Int m = atom.param; m > 1; m /= p) ++f;
                    for (Int k = 0; k < f; ++k)
                        occ.emplace_back(Atom::cyclic(int_pow(p, a1)), int_pow(p, a1 - a2));
                    break;
                }
                case AtomKind::Prufer:
                    occ.emplace_back(Atom::prufer(atom.param), a2 - a1);
                    break;
                case AtomKind::Cyclic:
                    if (atom.param / a1 > 1) occ.emplace_back(Atom::cyclic(atom.param / a1), a2 / a1);
                    break;
                case AtomKind::ZDiscrete:
                    occ.emplace_back(Atom::z(), 0);
                    break;
                case AtomKind::DiscreteBlackbox:
                    occ.emplace_back(atom, 0);
                    break;
                default:
                    break;  // Circle: quotient vanishes
            }
        }
    }
    return assemble_choice(std::move(occ));
}

AxiomReport check_axiom4(const GroupExpr& x, const CompactOpenChoice& c1, const CompactOpenChoice& c2) {
    require_nested(c1, c2);
    ExactSequence s13 = make_compact_open(x, c1);
    ExactSequence s23 = make_compact_open(x, c2);
    ExactSequence s12 = make_compact_open(subgroup_expr(c2), relative_choice(c1, c2));
    ExactSequence sq = make_compact_open(quotient_by(x, c1), image_choice(c1, c2));
    AxiomReport rep;
    rep.lhs = defect(s13).times(defect(sq));
    rep.rhs = defect(s23).times(defect(s12));
    if (rep.lhs != rep.rhs) {
        rep.pass = false;
        rep.detail = "filtration defect diagram does not commute on " + expr_str(x);
    }
    return rep;
}

AxiomReport check_axiom5(const GroupExpr& left, const GroupExpr& right) {
    GroupExpr total = direct_sum(left, right);
    HaarElement mu = canonical_measure(total);
    AxiomReport rep;
    rep.lhs = split(make_sum_split(left, right), mu).r;
    rep.rhs = split(make_sum_split(right, left), mu).r;
    if (rep.lhs != rep.rhs) {
        rep.pass = false;
        rep.detail = "sum-split scale depends on factor order";
    }
    return rep;
}

void validate_diagram(const Diagram& d) {
    for (const DiagramEdge& e : d.edges) {
        if (e.from < 0 || e.from >= (int)d.vertices.size() || e.to < 0 || e.to >= (int)d.vertices.size())
            throw std::invalid_argument("diagram edge endpoint out of range");
        if (!(normalize(e.morphism.source) == d.vertices[e.from]) ||
            !(normalize(e.morphism.target) == d.vertices[e.to]))
            throw std::invalid_argument("diagram edge morphism does not match its endpoints");
        auto check = validate_automorphism(e.morphism);
        if (!check.ok) throw std::invalid_argument("diagram edge is not invertible: " + check.message);
    }
}

PositiveReal holonomy(const Diagram& d, const std::vector<WalkStep>& cycle) {
    validate_diagram(d);
    if (cycle.empty()) throw std::domain_error("holonomy: empty walk");
    int start = -1, at = -1;
    PositiveReal acc = PositiveReal::one();
    for (const WalkStep& step : cycle) {
        if (step.edge < 0 || step.edge >= (int)d.edges.size())
            throw std::invalid_argument("holonomy: edge index out of range");
        const DiagramEdge& e = d.edges[step.edge];
        int from = step.forward ? e.from : e.to;
        int to = step.forward ? e.to : e.from;
        if (start < 0) {
            start = from;
            at = from;
        }
        if (at != from) throw std::domain_error("holonomy: walk is not connected");
        at = to;
        PositiveReal m = mod_of(e.morphism);
        acc = acc.times(step.forward ? m : m.inverse());
    }
    if (at != start) throw std::domain_error("holonomy: walk is not closed");
    return acc;
}

}  // namespace haarcalc
