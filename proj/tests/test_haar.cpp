#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarcalc/haar.hpp"
#include "haarcalc/rng.hpp"

using namespace haarcalc;

namespace {

GroupExpr expr_of(std::initializer_list<std::pair<Atom, int>> entries) {
    GroupExpr e;
    for (auto& [a, m] : entries) e.atoms.emplace_back(a, m);
    return normalize(e);
}

}  // namespace

TEST_CASE("root measures") {
    GroupExpr qp = expr_of({{Atom::local_field(7), 1}});
    CHECK(root_measure(qp, make_choice(qp, {{0}})).scale.is_one());
    // vol(pZp) = 1 forces vol(Zp) = p.
    CHECK(root_measure(qp, make_choice(qp, {{1}})).scale == PositiveReal::from_fraction(7));
    GroupExpr zp = expr_of({{Atom::integer_ring(7), 1}});
    CHECK(root_measure(zp, make_choice(zp, {{0}})).scale.is_one());
    CHECK(root_measure(zp, make_choice(zp, {{2}})).scale == PositiveReal::from_fraction(49));
    GroupExpr r = expr_of({{Atom::real_line(), 1}});
    CHECK_THROWS_AS(root_measure(r, CompactOpenChoice{r, {}}), std::domain_error);
}

TEST_CASE("pushforward") {
    GroupExpr qp = expr_of({{Atom::local_field(3), 1}});
    HaarElement mu = canonical_measure(qp);
    CHECK(pushforward(blockwise_scalar(qp, Fraction::integer(3)), mu).scale ==
          PositiveReal::from_fraction(1, 3));
    CHECK(pushforward(identity_morphism(qp), mu) == mu);
    GroupExpr q53 = expr_of({{Atom::local_field(5), 1}, {Atom::local_field(3), 1}});
    CHECK(pushforward(blockwise_scalar(q53, Fraction::integer(5)), canonical_measure(q53)).scale ==
          PositiveReal::from_fraction(1, 5));
}

TEST_CASE("split and glue") {
    GroupExpr qp = expr_of({{Atom::local_field(5), 1}});
    CHECK(split(make_uniformizer(5), canonical_measure(qp)).r.is_one());
    CHECK(split(make_mult_n_z(3), canonical_measure(expr_of({{Atom::z(), 1}}))).r ==
          PositiveReal::from_fraction(3));
    CHECK(split(make_compact_open(qp, make_choice(qp, {{1}})), canonical_measure(qp)).r ==
          PositiveReal::from_fraction(1, 5));

    Rng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        ExactSequence seq = rng.coin() ? make_uniformizer(rng.coin() ? 2 : 9)
                                       : make_ideal_filtration(3, rng.range(1, 3), rng.range(0, 1));
        HaarElement mu{normalize(seq.total),
                       PositiveReal::from_fraction(rng.range(1, 9), rng.range(1, 9))};
        SplitResult sr = split(seq, mu);
        CHECK(glue(seq, sr.sub, sr.quot) == mu);
        CHECK(sr.quot.scale.is_one());
        CHECK(sr.sub.scale == sr.r);
    }
}

TEST_CASE("split is torsor equivariant") {
    GroupExpr qp = expr_of({{Atom::local_field(2), 1}});
    ExactSequence seq = make_compact_open(qp, make_choice(qp, {{2}}));
    PositiveReal a = PositiveReal::from_fraction(7, 3);
    HaarElement mu = canonical_measure(qp);
    HaarElement amu{qp, mu.scale.times(a)};
    CHECK(split(seq, amu).r == a.times(split(seq, mu).r));
}

TEST_CASE("axiom 3") {
    GroupExpr qp = expr_of({{Atom::local_field(5), 1}});
    AxiomReport rep = check_axiom3(blockwise_scalar(qp, Fraction::integer(5)));
    CHECK(rep.pass);
    CHECK(split(make_iso_left(blockwise_scalar(qp, Fraction::integer(5))), canonical_measure(qp)).r ==
          PositiveReal::from_fraction(1, 5));
}

TEST_CASE("axiom 4 towers") {
    GroupExpr zp = expr_of({{Atom::integer_ring(3), 1}});
    CHECK(check_axiom4(zp, make_choice(zp, {{2}}), make_choice(zp, {{1}})).pass);
    GroupExpr qp = expr_of({{Atom::local_field(3), 1}});
    CHECK(check_axiom4(qp, make_choice(qp, {{1}}), make_choice(qp, {{-1}})).pass);
    GroupExpr z12 = expr_of({{Atom::cyclic(12), 1}});
    CHECK(check_axiom4(z12, make_choice(z12, {{2}}), make_choice(z12, {{6}})).pass);
    // Not nested: C1 must sit inside C2.
    CHECK_THROWS_AS(check_axiom4(zp, make_choice(zp, {{1}}), make_choice(zp, {{2}})),
                    std::domain_error);
}

TEST_CASE("axiom 5 symmetry") {
    CHECK(check_axiom5(expr_of({{Atom::cyclic(4), 1}}), expr_of({{Atom::cyclic(9), 1}})).pass);
    CHECK(check_axiom5(expr_of({{Atom::local_field(2), 1}}), expr_of({{Atom::prufer(3), 1}})).pass);
}

TEST_CASE("haq membership") {
    GroupExpr q5 = expr_of({{Atom::local_field(5), 1}});
    CHECK(haq_membership(HaarElement{q5, PositiveReal::from_fraction(3, 2)}));
    CHECK(!haq_membership(HaarElement{q5, PositiveReal::symbol("c")}));
    GroupExpr k4 = expr_of({{Atom::local_field(4), 1}});
    CHECK(haq_membership(HaarElement{k4, PositiveReal::from_fraction(7, 3)}));
    GroupExpr r = expr_of({{Atom::real_line(), 1}});
    CHECK_THROWS_AS(haq_membership(HaarElement{r, PositiveReal::one()}), std::domain_error);
}

TEST_CASE("holonomy") {
    GroupExpr qp = expr_of({{Atom::local_field(3), 1}});
    Diagram d;
    d.vertices = {qp, qp};
    d.edges.push_back({0, 1, blockwise_scalar(qp, Fraction::integer(3))});
    d.edges.push_back({0, 1, blockwise_scalar(qp, Fraction::integer(1))});
    CHECK(holonomy(d, {{0, true}, {1, false}}) == PositiveReal::from_fraction(1, 3));

    Diagram loop;
    loop.vertices = {qp};
    loop.edges.push_back({0, 0, identity_morphism(qp)});
    CHECK(holonomy(loop, {{0, true}}).is_one());

    GroupExpr r = expr_of({{Atom::real_line(), 1}});
    Diagram w;
    w.vertices = {r, r};
    w.edges.push_back({0, 1, blockwise_scalar(r, Fraction::integer(1), {{"c", 1}})});
    w.edges.push_back({0, 1, blockwise_scalar(r, Fraction::integer(1))});
    CHECK(holonomy(w, {{0, true}, {1, false}}) == PositiveReal::symbol("c"));

    CHECK_THROWS_AS(holonomy(d, {{0, true}}), std::domain_error);   // not closed
    CHECK_THROWS_AS(holonomy(d, std::vector<WalkStep>{}), std::domain_error);
}

TEST_CASE("diagram validation") {
    GroupExpr z = expr_of({{Atom::z(), 1}});
    Diagram d;
    d.vertices = {z};
    d.edges.push_back({0, 0, blockwise_scalar(z, Fraction::integer(2))});
    CHECK_THROWS_AS(validate_diagram(d), std::invalid_argument);  // mul 2 not invertible on Z
}
