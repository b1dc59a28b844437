#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarcalc/rng.hpp"
#include "haarcalc/torsor.hpp"

using namespace haarcalc;

TEST_CASE("rational base rejects symbolic coordinates") {
    CHECK_THROWS_AS(TorsorElement(TorsorBase::Rational, PositiveReal::symbol("c")),
                    std::domain_error);
    CHECK_NOTHROW(TorsorElement(TorsorBase::Real, PositiveReal::symbol("c")));
}

TEST_CASE("tensor is the coordinate product") {
    TorsorElement two{TorsorBase::Rational, PositiveReal::from_fraction(2)};
    TorsorElement three{TorsorBase::Rational, PositiveReal::from_fraction(3)};
    CHECK(torsor_tensor(two, three).scale == PositiveReal::from_fraction(6));
    CHECK(torsor_tensor(two, torsor_unit(TorsorBase::Rational)) == two);

    TorsorElement c{TorsorBase::Real, PositiveReal::symbol("c")};
    CHECK(torsor_tensor(c, c).scale == PositiveReal::symbol("c", 2));

    TorsorElement real_two{TorsorBase::Real, PositiveReal::from_fraction(2)};
    CHECK_THROWS_AS(torsor_tensor(two, real_two), std::invalid_argument);
}

TEST_CASE("contract recovers the acting scalar") {
    TorsorElement six{TorsorBase::Rational, PositiveReal::from_fraction(6)};
    TorsorElement two{TorsorBase::Rational, PositiveReal::from_fraction(2)};
    CHECK(torsor_contract(six, two) == PositiveReal::from_fraction(3));
    CHECK(torsor_contract(two, two).is_one());

    TorsorElement c5{TorsorBase::Real,
                     PositiveReal::symbol("c").times(PositiveReal::from_fraction(5))};
    TorsorElement five{TorsorBase::Real, PositiveReal::from_fraction(5)};
    CHECK(torsor_contract(c5, five) == PositiveReal::symbol("c"));
}

TEST_CASE("basechange retags and commutes with tensor") {
    TorsorElement x{TorsorBase::Rational, PositiveReal::from_fraction(3, 2)};
    TorsorElement bx = basechange(x);
    CHECK(bx.base == TorsorBase::Real);
    CHECK(bx.scale == x.scale);
    CHECK_THROWS_AS(basechange(bx), std::domain_error);

    TorsorElement two{TorsorBase::Rational, PositiveReal::from_fraction(2)};
    TorsorElement five{TorsorBase::Rational, PositiveReal::from_fraction(5)};
    CHECK(basechange(torsor_tensor(two, five)) ==
          torsor_tensor(basechange(two), basechange(five)));
}

TEST_CASE("signature is identically 1") {
    CHECK(signature_check(TorsorElement{TorsorBase::Rational, PositiveReal::from_fraction(7)})
              .is_one());
    CHECK(signature_check(torsor_unit(TorsorBase::Rational)).is_one());
    CHECK(signature_check(TorsorElement{TorsorBase::Real, PositiveReal::symbol("c")}).is_one());

    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        PositiveReal s = PositiveReal::from_fraction(rng.range(1, 40), rng.range(1, 40));
        TorsorBase base = rng.coin() ? TorsorBase::Rational : TorsorBase::Real;
        if (base == TorsorBase::Real && rng.coin())
            s = s.times(PositiveReal::symbol("w", rng.range(1, 3)));
        CHECK(signature_check(TorsorElement{base, s}).is_one());
    }
}
