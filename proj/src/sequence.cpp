#include "haarcalc/sequence.hpp"

#include <sstream>

namespace haarcalc {

namespace {

GroupExpr single(const Atom& a, int mult = 1) {
    GroupExpr e;
    e.atoms.emplace_back(a, mult);
    return normalize(e);
}

GroupExpr cyclic_p_power(Int q, Int a) {
    // Order q^a, decomposed along the residue prime p of q = p^f as (Z/p^a)^f.
    if (a == 0) return {};
    Int p = *prime_power_base(q);
    Int f = 0;
    for (Int m = q; m > 1; m /= p) ++f;
    Int pa = 1;
    for (Int k = 0; k < a; ++k) pa *= p;
    return single(Atom::cyclic(pa), (int)f);
}

CompactOpenChoice trivial_subgroup_choice(const GroupExpr& discrete) {
    CompactOpenChoice c;
    c.group = discrete;
    for (auto& [a, m] : discrete.atoms) {
        Int v = (a.kind == AtomKind::Cyclic) ? 1 : 0;
        c.params.emplace_back(m, v);
    }
    validate_choice(c);
    return c;
}

}  // namespace

ExactSequence make_compact_open(const GroupExpr& total, const CompactOpenChoice& c) {
    if (!classify(total).vector_free)
        throw std::domain_error("compact-open sequence requires a vector-free total group");
    if (!(c.group == total)) throw std::domain_error("choice is for a different group");
    ExactSequence s;
    s.kind = SequenceKind::CompactOpen;
    s.total = total;
    s.sub = subgroup_expr(c);
    s.quot = quotient_by(total, c);
    s.choice = c;
    return s;
}

ExactSequence make_int_in_real() {
    ExactSequence s;
    s.kind = SequenceKind::CompactOpen;
    s.sub = single(Atom::z());
    s.total = single(Atom::real_line());
    s.quot = single(Atom::circle());
    return s;
}

ExactSequence make_uniformizer(Int q) {
    ExactSequence s;
    s.kind = SequenceKind::Uniformizer;
    s.q = q;
    s.sub = single(Atom::integer_ring(q));
    s.total = single(Atom::local_field(q));
    s.quot = single(Atom::prufer(q));
    return s;
}

ExactSequence make_ideal_filtration(Int q, Int a, Int b) {
    if (!(a >= b && b >= 0)) throw std::domain_error("ideal filtration requires a >= b >= 0");
    ExactSequence s;
    s.kind = SequenceKind::IdealFiltration;
    s.q = q;
    s.a = a;
    s.b = b;
    s.sub = single(Atom::integer_ring(q));
    s.total = single(Atom::integer_ring(q));
    s.quot = cyclic_p_power(q, a - b);
    return s;
}

ExactSequence make_mult_n_z(Int n) {
    if (n < 1) throw std::domain_error("multiplication by n on Z requires n >= 1");
    ExactSequence s;
    s.kind = SequenceKind::MultNZ;
    s.n = n;
    s.sub = single(Atom::z());
    s.total = single(Atom::z());
    s.quot = n > 1 ? single(Atom::cyclic(n)) : GroupExpr{};
    return s;
}

ExactSequence make_mult_n_t(Int n) {
    if (n < 1) throw std::domain_error("multiplication by n on T requires n >= 1");
    ExactSequence s;
    s.kind = SequenceKind::MultNT;
    s.n = n;
    s.sub = n > 1 ? single(Atom::cyclic(n)) : GroupExpr{};
    s.total = single(Atom::circle());
    s.quot = single(Atom::circle());
    return s;
}

ExactSequence make_mult_unif_prufer(Int q) {
    ExactSequence s;
    s.kind = SequenceKind::MultUnifPrufer;
    s.q = q;
    s.sub = cyclic_p_power(q, 1);
    s.total = single(Atom::prufer(q));
    s.quot = single(Atom::prufer(q));
    return s;
}

ExactSequence make_sum_split(const GroupExpr& left, const GroupExpr& right) {
    ExactSequence s;
    s.kind = SequenceKind::SumSplit;
    s.sub = normalize(left);
    s.quot = normalize(right);
    s.total = direct_sum(left, right);
    return s;
}

ExactSequence make_iso_left(const Morphism& f) {
    validate_structure(f);
    ExactSequence s;
    s.kind = SequenceKind::IsoLeft;
    s.sub = {};
    s.total = normalize(f.source);
    s.quot = normalize(f.target);
    s.iso = f;
    return s;
}

ExactSequence make_iso_right(const Morphism& f) {
    validate_structure(f);
    ExactSequence s;
    s.kind = SequenceKind::IsoRight;
    s.sub = normalize(f.source);
    s.total = normalize(f.target);
    s.quot = {};
    s.iso = f;
    return s;
}

PositiveReal defect(const ExactSequence& seq) {
    switch (seq.kind) {
        case SequenceKind::CompactOpen: {
            if (!seq.choice) return PositiveReal::one();  // the Z >-> R ->> T instance
            // Adapted compact open = C itself. C meets the sub in all of it
            // (canonical), and maps to the trivial subgroup of the quotient.
            PrimeExponentVector num = generalized_index(*seq.choice, canonical_choice(seq.total));
            PrimeExponentVector den =
                generalized_index(trivial_subgroup_choice(seq.quot), canonical_choice(seq.quot));
            return PositiveReal(num.divided_by(den));
        }
        case SequenceKind::Uniformizer:
        case SequenceKind::IdealFiltration:
        case SequenceKind::MultNT:
        case SequenceKind::SumSplit:
            return PositiveReal::one();
        case SequenceKind::MultNZ:
            return PositiveReal(PrimeExponentVector::factorize(seq.n));
        case SequenceKind::MultUnifPrufer:
            return PositiveReal(PrimeExponentVector::factorize(seq.q));
        case SequenceKind::IsoLeft:
            return mod_of(*seq.iso);
        case SequenceKind::IsoRight:
            return mod_of(*seq.iso).inverse();
    }
    throw std::logic_error("unreachable");
}

std::string sequence_str(const ExactSequence& seq) {
    std::ostringstream os;
    os << expr_str(seq.sub) << " >-> " << expr_str(seq.total) << " ->> " << expr_str(seq.quot);
    return os.str();
}

}  // namespace haarcalc
