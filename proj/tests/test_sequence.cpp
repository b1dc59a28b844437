#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarcalc/rng.hpp"
#include "haarcalc/sequence.hpp"

using namespace haarcalc;

namespace {

GroupExpr expr_of(std::initializer_list<std::pair<Atom, int>> entries) {
    GroupExpr e;
    for (auto& [a, m] : entries) e.atoms.emplace_back(a, m);
    return normalize(e);
}

// Independent Fubini oracle for a finite total group: with every canonical
// measure normalized to total mass 1, the per-point mass of the total group
// must equal defect x (sub mass per point) x (quot mass per point) on each
// fiber, which forces defect = 1 whatever the choice of compact open.
Fraction finite_compact_open_oracle(Int total_order, Int sub_order) {
    Fraction per_point_total(1, total_order);
    Fraction per_point_sub(1, sub_order);
    Fraction per_point_quot(1, total_order / sub_order);
    // mass(total point) = d . mass(sub point) . mass(quot point)
    return per_point_total * (per_point_sub * per_point_quot).inverse();
}

}  // namespace

TEST_CASE("catalog constructors fill sub/total/quot") {
    ExactSequence u = make_uniformizer(5);
    CHECK(u.sub == expr_of({{Atom::integer_ring(5), 1}}));
    CHECK(u.total == expr_of({{Atom::local_field(5), 1}}));
    CHECK(u.quot == expr_of({{Atom::prufer(5), 1}}));

    ExactSequence z3 = make_mult_n_z(3);
    CHECK(z3.sub == expr_of({{Atom::z(), 1}}));
    CHECK(z3.quot == expr_of({{Atom::cyclic(3), 1}}));

    ExactSequence ir = make_int_in_real();
    CHECK(ir.sub == expr_of({{Atom::z(), 1}}));
    CHECK(ir.total == expr_of({{Atom::real_line(), 1}}));
    CHECK(ir.quot == expr_of({{Atom::circle(), 1}}));

    CHECK_THROWS_AS(make_ideal_filtration(5, 1, 2), std::domain_error);  // needs a >= b
    GroupExpr r = expr_of({{Atom::real_line(), 1}});
    CHECK_THROWS_AS(make_compact_open(r, CompactOpenChoice{r, {}}), std::domain_error);
}

TEST_CASE("defect table") {
    CHECK(defect(make_uniformizer(2)).is_one());
    CHECK(defect(make_uniformizer(9)).is_one());
    CHECK(defect(make_ideal_filtration(5, 3, 1)).is_one());
    CHECK(defect(make_mult_n_z(3)) == PositiveReal::from_fraction(3));
    CHECK(defect(make_mult_n_z(1)).is_one());
    CHECK(defect(make_mult_unif_prufer(3)) == PositiveReal::from_fraction(3));
    CHECK(defect(make_mult_unif_prufer(4)) == PositiveReal::from_fraction(4));
    CHECK(defect(make_int_in_real()).is_one());
    CHECK(defect(make_sum_split(expr_of({{Atom::local_field(2), 1}}),
                                expr_of({{Atom::cyclic(9), 1}})))
              .is_one());
}

TEST_CASE("mult-n-t defect under mass-1 finite conventions") {
    // With the canonical measure of Z/n normalized to total mass 1 (its
    // canonical compact open is the whole group), the unit total mass of T
    // splits as n fibers of sub-mass 1/n over a unit-mass quotient: defect 1.
    for (Int n : {1, 2, 5, 12}) CHECK(defect(make_mult_n_t(n)).is_one());
}

TEST_CASE("compact-open defect on Qp") {
    GroupExpr qp = expr_of({{Atom::local_field(5), 1}});
    CHECK(defect(make_compact_open(qp, make_choice(qp, {{1}}))) ==
          PositiveReal::from_fraction(1, 5));
    CHECK(defect(make_compact_open(qp, make_choice(qp, {{0}}))).is_one());
    CHECK(defect(make_compact_open(qp, make_choice(qp, {{-2}}))) ==
          PositiveReal::from_fraction(25));
}

TEST_CASE("compact-open defect on finite groups matches the Fubini oracle") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        GroupExpr fin;
        Int total_order = 1;
        int entries = (int)rng.range(1, 3);
        for (int i = 0; i < entries; ++i) {
            Int n = rng.range(2, 12);
            fin.atoms.emplace_back(Atom::cyclic(n), 1);
            total_order *= n;
        }
        fin = normalize(fin);
        CompactOpenChoice c;
        c.group = fin;
        Int sub_order = 1;
        for (auto& [atom, count] : fin.atoms) {
            c.params.emplace_back();
            for (int j = 0; j < count; ++j) {
                std::vector<Int> divisors;
                for (Int d = 1; d <= atom.param; ++d)
                    if (atom.param % d == 0) divisors.push_back(d);
                Int d = divisors[rng.below(divisors.size())];
                c.params.back().push_back(d);
                sub_order *= d;
            }
        }
        PositiveReal d = defect(make_compact_open(fin, c));
        CHECK(d == PositiveReal::from_fraction(finite_compact_open_oracle(total_order, sub_order)));
        CHECK(d.is_one());
    }
}

TEST_CASE("iso sequences carry the module of the isomorphism") {
    GroupExpr q5 = expr_of({{Atom::local_field(5), 1}});
    Morphism f = blockwise_scalar(q5, Fraction::integer(5));
    CHECK(defect(make_iso_left(f)) == PositiveReal::from_fraction(1, 5));
    CHECK(defect(make_iso_right(f)) == PositiveReal::from_fraction(5));
    CHECK(defect(make_iso_left(identity_morphism(q5))).is_one());
}

TEST_CASE("sequence printing mentions the kind") {
    CHECK(sequence_str(make_uniformizer(3)).find("Zp(3)") != std::string::npos);
    CHECK(sequence_str(make_mult_n_z(4)).find("Z/4") != std::string::npos);
}
