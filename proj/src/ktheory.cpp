#include "haarcalc/ktheory.hpp"

namespace haarcalc {

KClass k1_class(const Morphism& f) {
    GroupExpr g = normalize(f.source);
    if (!classify(g).vector_free)
        throw std::domain_error("k1_class: group is not vector-free");
    auto check = validate_automorphism(f);
    if (!check.ok) throw std::domain_error("k1_class: not an automorphism: " + check.message);
    PositiveReal m = mod_of(f);
    if (!m.is_rational())
        throw std::logic_error(
            "k1_class: symbolic Haar factor on a vector-free group; "
            "this contradicts the rationality theorem");
    return {m.rational_part()};
}

KClass k0_class(const GroupExpr& g) {
    GroupExpr e = normalize(g);
    KClass out;
    for (auto& [atom, mult] : e.atoms) {
        if (atom.kind != AtomKind::Cyclic)
            throw std::domain_error("k0_class: group must be finite (CYCLIC atoms only)");
        Int n = atom.param;
        for (Int d = 2; n > 1; ++d) {
            while (n % d == 0) {
                out.vector.add_factor(d, mult);
                n /= d;
            }
        }
    }
    return out;
}

}  // namespace haarcalc
