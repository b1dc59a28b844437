#include "haarcalc/torsor.hpp"

namespace haarcalc {

TorsorElement::TorsorElement(TorsorBase b, PositiveReal s) : base(b), scale(std::move(s)) {
    if (base == TorsorBase::Rational && !scale.is_rational())
        throw std::domain_error("rational-base torsor element with symbolic coordinate");
}

TorsorElement torsor_unit(TorsorBase base) { return TorsorElement(base, PositiveReal::one()); }

TorsorElement torsor_tensor(const TorsorElement& x, const TorsorElement& y) {
    if (x.base != y.base) throw std::invalid_argument("torsor_tensor: base mismatch");
    return TorsorElement(x.base, x.scale.times(y.scale));
}

PositiveReal torsor_contract(const TorsorElement& xprime, const TorsorElement& x) {
    if (xprime.base != x.base) throw std::invalid_argument("torsor_contract: base mismatch");
    return xprime.scale.divided_by(x.scale);
}

TorsorElement basechange(const TorsorElement& x) {
    if (x.base != TorsorBase::Rational)
        throw std::domain_error("basechange: element is already over the real base");
    return TorsorElement(TorsorBase::Real, x.scale);
}

PositiveReal signature_check(const TorsorElement& x) {
    // Representative pair (x, x) of x (x) x; its class has coordinate x^2.
    // The symmetry swaps the pair, which has the same class coordinate.
    PositiveReal original = x.scale.times(x.scale);
    PositiveReal swapped = x.scale.times(x.scale);
    TorsorElement t(x.base, original);
    TorsorElement ts(x.base, swapped);
    return torsor_contract(ts, t);
}

}  // namespace haarcalc
