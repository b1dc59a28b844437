#pragma once

#include "haarcalc/rational.hpp"

namespace haarcalc {

// Base group of the torsor: the positive rationals or the positive reals.
enum class TorsorBase { Rational, Real };

// An element of a trivialized A-torsor, stored as its coordinate relative
// to the designated trivialization. For the Rational base the coordinate
// must not carry symbolic factors.
struct TorsorElement {
    TorsorBase base{TorsorBase::Rational};
    PositiveReal scale;

    TorsorElement() = default;
    TorsorElement(TorsorBase b, PositiveReal s);

    bool operator==(const TorsorElement& o) const { return base == o.base && scale == o.scale; }
};

TorsorElement torsor_unit(TorsorBase base);

// (X x Y)/~ in coordinates: the product of the two coordinates.
TorsorElement torsor_tensor(const TorsorElement& x, const TorsorElement& y);

// The unique a with a . x = x', i.e. xprime.scale / x.scale.
PositiveReal torsor_contract(const TorsorElement& xprime, const TorsorElement& x);

// Tors(Q_{>0}) -> Tors(R_{>0}) along the inclusion; coordinates unchanged.
TorsorElement basechange(const TorsorElement& x);

// The signature of x: apply the self-symmetry of x (x) x (the coordinate
// swap of a representative pair) and contract against x (x) x itself.
// The symmetry constraint of Tors(A) is trivial, so this is always 1.
PositiveReal signature_check(const TorsorElement& x);

}  // namespace haarcalc
