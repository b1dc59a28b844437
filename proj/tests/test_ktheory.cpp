#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarcalc/ktheory.hpp"

using namespace haarcalc;

namespace {

GroupExpr expr_of(std::initializer_list<std::pair<Atom, int>> entries) {
    GroupExpr e;
    for (auto& [a, m] : entries) e.atoms.emplace_back(a, m);
    return normalize(e);
}

}  // namespace

TEST_CASE("k1 of multiplication by p") {
    for (Int p : {2, 3, 5, 7, 11}) {
        GroupExpr qp = expr_of({{Atom::local_field(p), 1}});
        CHECK(k1_class(blockwise_scalar(qp, Fraction::integer(p))).vector ==
              PrimeExponentVector::prime_power(p, -1));
    }
}

TEST_CASE("k1 sees only the stretched factor") {
    GroupExpr e = expr_of({{Atom::local_field(5), 1}, {Atom::local_field(3), 1}});
    // mul(5) is volume-preserving on Q3.
    CHECK(k1_class(blockwise_scalar(e, Fraction::integer(5))).vector ==
          PrimeExponentVector::prime_power(5, -1));
    CHECK(k1_class(identity_morphism(e)).vector.is_one());
}

TEST_CASE("k1 preconditions") {
    GroupExpr r = expr_of({{Atom::real_line(), 1}});
    CHECK_THROWS_AS(k1_class(blockwise_scalar(r, Fraction::integer(2))), std::domain_error);
    GroupExpr z = expr_of({{Atom::z(), 1}});
    CHECK_THROWS_AS(k1_class(blockwise_scalar(z, Fraction::integer(2))), std::domain_error);
}

TEST_CASE("k0 by devissage") {
    CHECK(k0_class(expr_of({{Atom::cyclic(12), 1}})).vector ==
          PrimeExponentVector::factorize(12));
    CHECK(k0_class(expr_of({{Atom::cyclic(5), 1}})).vector ==
          PrimeExponentVector::prime_power(5, 1));
    CHECK(k0_class(GroupExpr{}).vector.is_one());
    // Multiplicities accumulate composition length.
    CHECK(k0_class(expr_of({{Atom::cyclic(4), 2}, {Atom::cyclic(3), 1}})).vector ==
          PrimeExponentVector::factorize(48));
    CHECK_THROWS_AS(k0_class(expr_of({{Atom::z(), 1}})), std::domain_error);
    CHECK_THROWS_AS(k0_class(expr_of({{Atom::prufer(2), 1}})), std::domain_error);
}

TEST_CASE("k0 additive on direct sums") {
    GroupExpr a = expr_of({{Atom::cyclic(8), 1}});
    GroupExpr b = expr_of({{Atom::cyclic(18), 1}});
    CHECK(k0_class(direct_sum(a, b)).vector ==
          k0_class(a).vector.times(k0_class(b).vector));
}
