#pragma once

#include "haarcalc/morphism.hpp"

namespace haarcalc {

// An element of the free abelian group on the primes, identified with the
// positive rationals via prime factor decomposition.
struct KClass {
    PrimeExponentVector vector;
    bool operator==(const KClass&) const = default;
};

// K1 class of an automorphism of a vector-free group: the prime factorization
// of its Haar scaling factor. Multiplication by p on Q_p gives {p: -1}.
// A symbolic factor would contradict rationality and raises logic_error.
KClass k1_class(const Morphism& f);

// K0 class of a finite abelian group via devissage: the total p-length
// (number of Z/p composition factors) in each prime direction.
KClass k0_class(const GroupExpr& g);

}  // namespace haarcalc
