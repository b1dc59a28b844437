#pragma once

#include <optional>

#include "haarcalc/group.hpp"
#include "haarcalc/morphism.hpp"

namespace haarcalc {

// The catalog of short exact sequences sub >-> total ->> quot. Only these
// constructions are representable; each kind carries the data needed to
// reconstruct the maps and its Fubini defect.
enum class SequenceKind {
    CompactOpen,      // C >-> X ->> X/C; also the one non-vector-free instance Z >-> R ->> T
    Uniformizer,      // O(q) >-> K(q) ->> Prufer(q)
    IdealFiltration,  // m^a >-> m^b ->> m^b/m^a inside O(q), a >= b >= 0
    MultNZ,           // Z >-(n)-> Z ->> Z/n
    MultNT,           // Z/n >-> T -(n)->> T
    MultUnifPrufer,   // ker >-> Prufer(q) -(unif)->> Prufer(q)
    SumSplit,         // X' >-> X'+X'' ->> X''
    IsoLeft,          // 0 >-> G -(f)->> G'
    IsoRight,         // G >-(f)-> G' ->> 0
};

struct ExactSequence {
    SequenceKind kind{SequenceKind::SumSplit};
    GroupExpr sub, total, quot;
    std::optional<CompactOpenChoice> choice;  // CompactOpen
    Int q{0}, a{0}, b{0}, n{0};
    std::optional<Morphism> iso;  // IsoLeft / IsoRight
};

ExactSequence make_compact_open(const GroupExpr& total, const CompactOpenChoice& c);
// The Z >-> R ->> T instance; the single catalog sequence whose total is not
// vector-free. Defect 1 under the Lebesgue-[0,1) convention.
ExactSequence make_int_in_real();
ExactSequence make_uniformizer(Int q);
ExactSequence make_ideal_filtration(Int q, Int a, Int b);
ExactSequence make_mult_n_z(Int n);
ExactSequence make_mult_n_t(Int n);
ExactSequence make_mult_unif_prufer(Int q);
ExactSequence make_sum_split(const GroupExpr& left, const GroupExpr& right);
ExactSequence make_iso_left(const Morphism& f);
ExactSequence make_iso_right(const Morphism& f);

// The unique d with Ha(Sigma)(mu_root_total) = d . (mu_root_sub (x) mu_root_quot),
// computed through an adapted compact open of the total group. Rational for
// every catalog kind except iso sequences with symbolic module.
PositiveReal defect(const ExactSequence& seq);

std::string sequence_str(const ExactSequence& seq);

}  // namespace haarcalc
