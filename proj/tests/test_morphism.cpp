#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarcalc/morphism.hpp"
#include "haarcalc/rng.hpp"

using namespace haarcalc;

namespace {

GroupExpr expr_of(std::initializer_list<std::pair<Atom, int>> entries) {
    GroupExpr e;
    for (auto& [a, m] : entries) e.atoms.emplace_back(a, m);
    return normalize(e);
}

Morphism matrix_on(const GroupExpr& e, std::vector<std::vector<Fraction>> m) {
    Morphism f{e, e, {}};
    f.blocks.push_back(Block{e.atoms[0].first, e.atoms[0].second, MatrixPayload{std::move(m), {}}});
    validate_structure(f);
    return f;
}

}  // namespace

TEST_CASE("scalar composition") {
    GroupExpr q7 = expr_of({{Atom::local_field(7), 1}});
    Morphism f = blockwise_scalar(q7, Fraction::integer(3));
    Morphism g = blockwise_scalar(q7, Fraction::integer(5));
    CHECK(compose(g, f) == blockwise_scalar(q7, Fraction::integer(15)));
    CHECK(compose(f, identity_morphism(q7)) == f);
}

TEST_CASE("matrix composition on R^2") {
    GroupExpr r2 = expr_of({{Atom::real_line(), 2}});
    Morphism a = matrix_on(r2, {{Fraction::integer(1), Fraction::integer(1)},
                                {Fraction::integer(0), Fraction::integer(1)}});
    Morphism b = matrix_on(r2, {{Fraction::integer(1), Fraction::integer(0)},
                                {Fraction::integer(1), Fraction::integer(1)}});
    Morphism ab = compose(a, b);
    auto& m = std::get<MatrixPayload>(ab.blocks[0].payload).entries;
    CHECK(m[0][0] == Fraction::integer(2));
    CHECK(m[0][1] == Fraction::integer(1));
    CHECK(m[1][0] == Fraction::integer(1));
    CHECK(m[1][1] == Fraction::integer(1));
}

TEST_CASE("automorphism validation per atom kind") {
    CHECK(validate_automorphism(blockwise_scalar(expr_of({{Atom::local_field(5), 1}}),
                                                 Fraction::integer(5)))
              .ok);
    auto bad_z = validate_automorphism(
        blockwise_scalar(expr_of({{Atom::z(), 1}}), Fraction::integer(2)));
    CHECK(!bad_z.ok);
    CHECK(bad_z.block_index == 0);
    CHECK(validate_automorphism(blockwise_scalar(expr_of({{Atom::cyclic(12), 1}}),
                                                 Fraction::integer(5)))
              .ok);
    CHECK(!validate_automorphism(blockwise_scalar(expr_of({{Atom::cyclic(12), 1}}),
                                                  Fraction::integer(4)))
               .ok);
    // Integer ring: the scalar must be a p-adic unit.
    CHECK(!validate_automorphism(blockwise_scalar(expr_of({{Atom::integer_ring(3), 1}}),
                                                  Fraction::integer(3)))
               .ok);
    CHECK(validate_automorphism(blockwise_scalar(expr_of({{Atom::integer_ring(3), 1}}),
                                                 Fraction::integer(2)))
              .ok);
    // Non-prime residue cardinality admits only valuation scalars.
    GroupExpr k4 = expr_of({{Atom::local_field(4), 1}});
    CHECK(validate_automorphism(blockwise(k4, ScalarMulValuation{2})).ok);
    CHECK(!validate_automorphism(blockwise_scalar(k4, Fraction::integer(2))).ok);
}

TEST_CASE("mod_of forward-volume values") {
    // 5^{B-A} shape with A = 2, B = 1, C = 1.
    GroupExpr e = expr_of(
        {{Atom::local_field(5), 2}, {Atom::real_line(), 1}, {Atom::local_field(3), 1}});
    CHECK(mod_of(blockwise_scalar(e, Fraction::integer(5))) ==
          PositiveReal::from_fraction(5).pow(-1));

    GroupExpr r2 = expr_of({{Atom::real_line(), 2}});
    CHECK(mod_of(matrix_on(r2, {{Fraction::integer(1), Fraction::integer(1)},
                                {Fraction::integer(0), Fraction::integer(1)}}))
              .is_one());

    CHECK(mod_of(blockwise_scalar(expr_of({{Atom::cyclic(9), 1}}), Fraction::integer(2)))
              .is_one());
    // |det| on R includes the sign and the symbol premultiplier.
    GroupExpr r = expr_of({{Atom::real_line(), 1}});
    CHECK(mod_of(blockwise_scalar(r, Fraction(-3, 2))) == PositiveReal::from_fraction(3, 2));
    CHECK(mod_of(blockwise_scalar(r, Fraction::integer(1), {{"c", 1}})) ==
          PositiveReal::symbol("c"));
    // Valuation scalar on K(4)^2: module 4^{-v*2}.
    GroupExpr k4 = expr_of({{Atom::local_field(4), 2}});
    CHECK(mod_of(blockwise(k4, ScalarMulValuation{1})) ==
          PositiveReal(PrimeExponentVector::prime_power(2, -4)));
}

TEST_CASE("inverse and the mod homomorphism law") {
    GroupExpr q3 = expr_of({{Atom::local_field(3), 2}});
    Morphism f = matrix_on(q3, {{Fraction::integer(1), Fraction::integer(2)},
                                {Fraction::integer(1), Fraction::integer(3)}});
    Morphism finv = inverse(f);
    Morphism round = compose(f, finv);
    auto& id_entries = std::get<MatrixPayload>(round.blocks[0].payload).entries;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(id_entries[i][j] == Fraction::integer(i == j ? 1 : 0));
    CHECK(mod_of(finv) == mod_of(f).inverse());

    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Fraction a(rng.range(1, 9), rng.range(1, 9));
        Fraction b(rng.range(1, 9), rng.range(1, 9));
        GroupExpr e = expr_of({{Atom::local_field(2), 1}, {Atom::local_field(3), 1}});
        Morphism f = blockwise_scalar(e, a), g = blockwise_scalar(e, b);
        CHECK(mod_of(compose(g, f)) == mod_of(g).times(mod_of(f)));
    }
}

TEST_CASE("compact and discrete automorphisms preserve volume") {
    GroupExpr e = expr_of({{Atom::integer_ring(5), 1},
                           {Atom::circle(), 1},
                           {Atom::cyclic(8), 1},
                           {Atom::prufer(2), 1},
                           {Atom::z(), 1}});
    Morphism f{e, e, {}};
    for (auto& [atom, count] : e.atoms) {
        Int u = 1;
        switch (atom.kind) {
            case AtomKind::IntegerRing: u = 2; break;
            case AtomKind::Circle: u = -1; break;
            case AtomKind::Cyclic: u = 3; break;
            case AtomKind::Prufer: u = 3; break;
            default: u = -1; break;
        }
        f.blocks.push_back(Block{atom, count, ScalarMul{Fraction::integer(u), {}}});
    }
    REQUIRE(validate_automorphism(f).ok);
    CHECK(mod_of(f).is_one());
}
