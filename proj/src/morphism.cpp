#include "haarcalc/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace haarcalc {

namespace {

bool local_family(AtomKind k) {
    return k == AtomKind::LocalField || k == AtomKind::IntegerRing || k == AtomKind::Prufer;
}

bool is_perm(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= (int)p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<std::vector<Fraction>> to_matrix(const Block& b) {
    int k = b.count;
    std::vector<std::vector<Fraction>> m(k, std::vector<Fraction>(k, Fraction(0, 1)));
    if (auto* id = std::get_if<IdentityPayload>(&b.payload)) {
        (void)id;
        for (int i = 0; i < k; ++i) m[i][i] = Fraction(1, 1);
    } else if (auto* s = std::get_if<ScalarMul>(&b.payload)) {
        for (int i = 0; i < k; ++i) m[i][i] = s->value;
    } else if (auto* mat = std::get_if<MatrixPayload>(&b.payload)) {
        m = mat->entries;
    } else if (auto* p = std::get_if<PermutationPayload>(&b.payload)) {
        for (int i = 0; i < k; ++i) m[p->perm[i]][i] = Fraction(1, 1);
    } else {
        throw std::invalid_argument("valuation payload has no matrix form");
    }
    return m;
}

std::map<std::string, Int> payload_symbols(const Block& b) {
    if (auto* s = std::get_if<ScalarMul>(&b.payload)) return s->symbols;
    if (auto* m = std::get_if<MatrixPayload>(&b.payload)) return m->symbol_scale;
    return {};
}

std::map<std::string, Int> merge_symbols(std::map<std::string, Int> a, const std::map<std::string, Int>& b) {
    for (auto& [s, e] : b) {
        Int& slot = a[s];
        slot += e;
        if (slot == 0) a.erase(s);
    }
    return a;
}

}  // namespace

Morphism identity_morphism(const GroupExpr& expr) {
    return blockwise(expr, IdentityPayload{});
}

Morphism blockwise(const GroupExpr& expr, const Payload& payload) {
    Morphism f;
    f.source = expr;
    f.target = expr;
    for (auto& [a, m] : expr.atoms) f.blocks.push_back(Block{a, m, payload});
    validate_structure(f);
    return f;
}

Morphism blockwise_scalar(const GroupExpr& expr, const Fraction& alpha,
                          const std::map<std::string, Int>& symbols) {
    return blockwise(expr, ScalarMul{alpha, symbols});
}

void validate_structure(const Morphism& f) {
    if (!(normalize(f.source) == normalize(f.target)))
        throw std::invalid_argument("morphism: source and target atom structure differ");
    if (f.blocks.size() != f.source.atoms.size())
        throw std::invalid_argument("morphism: block list does not match atom list");
    for (size_t i = 0; i < f.blocks.size(); ++i) {
        const Block& b = f.blocks[i];
        auto& [atom, mult] = f.source.atoms[i];
        if (!(b.atom == atom) || b.count != mult)
            throw std::invalid_argument("morphism: block " + std::to_string(i) + " does not match atom entry");
        if (auto* m = std::get_if<MatrixPayload>(&b.payload)) {
            if ((int)m->entries.size() != b.count)
                throw std::invalid_argument("matrix block: wrong dimension");
            for (auto& row : m->entries)
                if ((int)row.size() != b.count) throw std::invalid_argument("matrix block: not square");
            if (!m->symbol_scale.empty() && atom.kind != AtomKind::RealLine)
                throw std::invalid_argument("symbolic matrix scale only allowed on R blocks");
        }
        if (auto* p = std::get_if<PermutationPayload>(&b.payload)) {
            if ((int)p->perm.size() != b.count || !is_perm(p->perm))
                throw std::invalid_argument("permutation block: not a permutation");
        }
        if (auto* s = std::get_if<ScalarMul>(&b.payload)) {
            if (s->value.is_zero()) throw std::invalid_argument("scalar block: zero scalar");
            if (!s->symbols.empty() && atom.kind != AtomKind::RealLine)
                throw std::invalid_argument("symbolic scalar only allowed on R blocks");
        }
        if (std::get_if<ScalarMulValuation>(&b.payload) && !local_family(atom.kind))
            throw std::invalid_argument("valuation scalar only allowed on local-field atoms");
    }
}

ValidationResult validate_automorphism(const Morphism& f) {
    validate_structure(f);
    for (size_t i = 0; i < f.blocks.size(); ++i) {
        const Block& b = f.blocks[i];
        auto fail = [&](const std::string& msg) {
            return ValidationResult{false, (int)i, atom_str(b.atom) + " block: " + msg};
        };
        AtomKind k = b.atom.kind;
        bool prime_param = local_family(k) && is_prime(b.atom.param);

        if (std::get_if<IdentityPayload>(&b.payload) || std::get_if<PermutationPayload>(&b.payload))
            continue;

        if (auto* v = std::get_if<ScalarMulValuation>(&b.payload)) {
            if (k == AtomKind::LocalField) continue;  // any valuation is invertible on K
            if (v->v != 0) return fail("valuation scalar is not invertible here unless v = 0");
            continue;
        }

        if (auto* s = std::get_if<ScalarMul>(&b.payload)) {
            const Fraction& a = s->value;
            switch (k) {
                case AtomKind::RealLine:
                    break;  // any nonzero scalar
                case AtomKind::LocalField:
                    if (!prime_param) return fail("rational scalar on non-prime residue field; use val(k)");
                    break;
                case AtomKind::IntegerRing:
                case AtomKind::Prufer:
                    if (!prime_param) return fail("rational scalar on non-prime residue field; use val(0)");
                    if (valuation(a, b.atom.param) != 0) return fail("scalar is not a p-adic unit");
                    break;
                case AtomKind::ZDiscrete:
                case AtomKind::Circle:
                case AtomKind::DiscreteBlackbox:
                    if (!(a.den == 1 && (a.num == 1 || a.num == -1)))
                        return fail("scalar must be +-1 (not a unit of Z)");
                    break;
                case AtomKind::Cyclic: {
                    Int n = b.atom.param;
                    if (std::gcd(a.den % n, n) != 1) return fail("scalar is not integral mod n");
                    Int r = ((a.num % n) + n) % n;
                    if (std::gcd(r, n) != 1) return fail("scalar is not a unit mod n");
                    break;
                }
                default:
                    break;
            }
            continue;
        }

        auto* m = std::get_if<MatrixPayload>(&b.payload);
        Fraction det = matrix_determinant(m->entries);
        auto integral = [&]() {
            for (auto& row : m->entries)
                for (auto& e : row)
                    if (e.den != 1) return false;
            return true;
        };
        switch (k) {
            case AtomKind::RealLine:
                if (det.is_zero()) return fail("singular matrix");
                break;
            case AtomKind::LocalField:
                if (!prime_param) return fail("matrix block on non-prime residue field unsupported");
                if (det.is_zero()) return fail("singular matrix");
                break;
            case AtomKind::IntegerRing:
            case AtomKind::Prufer:
                if (!prime_param) return fail("matrix block on non-prime residue field unsupported");
                if (!integral()) return fail("matrix entries must be integral");
                if (det.is_zero() || valuation(det, b.atom.param) != 0)
                    return fail("determinant is not a p-adic unit");
                break;
            case AtomKind::ZDiscrete:
            case AtomKind::Circle:
                if (!integral()) return fail("matrix entries must be integral");
                if (!(det.den == 1 && (det.num == 1 || det.num == -1)))
                    return fail("determinant must be +-1");
                break;
            case AtomKind::Cyclic: {
                if (!integral()) return fail("matrix entries must be integral mod n");
                Int n = b.atom.param;
                Int r = ((det.num % n) + n) % n;
                if (std::gcd(r, n) != 1) return fail("determinant is not a unit mod n");
                break;
            }
            case AtomKind::DiscreteBlackbox:
                return fail("matrix block on blackbox atom unsupported");
        }
    }
    return {};
}

Morphism compose(const Morphism& g, const Morphism& f) {
    validate_structure(f);
    validate_structure(g);
    if (!(normalize(f.target) == normalize(g.source)))
        throw std::invalid_argument("compose: target/source mismatch");
    Morphism out;
    out.source = f.source;
    out.target = g.target;
    for (size_t i = 0; i < f.blocks.size(); ++i) {
        const Block& bf = f.blocks[i];
        const Block& bg = g.blocks[i];
        Block b{bf.atom, bf.count, IdentityPayload{}};
        const bool f_id = std::holds_alternative<IdentityPayload>(bf.payload);
        const bool g_id = std::holds_alternative<IdentityPayload>(bg.payload);
        auto* fv = std::get_if<ScalarMulValuation>(&bf.payload);
        auto* gv = std::get_if<ScalarMulValuation>(&bg.payload);
        auto* fs = std::get_if<ScalarMul>(&bf.payload);
        auto* gs = std::get_if<ScalarMul>(&bg.payload);
        if (f_id) {
            b.payload = bg.payload;
        } else if (g_id) {
            b.payload = bf.payload;
        } else if (fv || gv) {
            if (!(fv && gv)) throw std::invalid_argument("compose: valuation scalar mixed with non-scalar");
            b.payload = ScalarMulValuation{fv->v + gv->v};
        } else if (fs && gs) {
            b.payload = ScalarMul{fs->value * gs->value, merge_symbols(fs->symbols, gs->symbols)};
        } else {
            auto mf = to_matrix(bf);
            auto mg = to_matrix(bg);
            int k = bf.count;
            MatrixPayload mp;
            mp.entries.assign(k, std::vector<Fraction>(k, Fraction(0, 1)));
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) {
                    Fraction acc(0, 1);
                    for (int t = 0; t < k; ++t) acc = acc + mg[r][t] * mf[t][c];
                    mp.entries[r][c] = acc;
                }
            mp.symbol_scale = merge_symbols(payload_symbols(bf), payload_symbols(bg));
            b.payload = mp;
        }
        out.blocks.push_back(std::move(b));
    }
    validate_structure(out);
    return out;
}

Morphism inverse(const Morphism& f) {
    validate_structure(f);
    Morphism out;
    out.source = f.target;
    out.target = f.source;
    for (const Block& b : f.blocks) {
        Block nb{b.atom, b.count, IdentityPayload{}};
        if (std::holds_alternative<IdentityPayload>(b.payload)) {
            nb.payload = IdentityPayload{};
        } else if (auto* s = std::get_if<ScalarMul>(&b.payload)) {
            std::map<std::string, Int> syms;
            for (auto& [name, e] : s->symbols) syms[name] = -e;
            nb.payload = ScalarMul{s->value.inverse(), syms};
        } else if (auto* v = std::get_if<ScalarMulValuation>(&b.payload)) {
            nb.payload = ScalarMulValuation{-v->v};
        } else if (auto* p = std::get_if<PermutationPayload>(&b.payload)) {
            std::vector<int> inv(p->perm.size());
            for (size_t i = 0; i < p->perm.size(); ++i) inv[p->perm[i]] = (int)i;
            nb.payload = PermutationPayload{inv};
        } else {
            auto* m = std::get_if<MatrixPayload>(&b.payload);
            // Gauss-Jordan over Q.
            int k = b.count;
            auto a = m->entries;
            std::vector<std::vector<Fraction>> inv(k, std::vector<Fraction>(k, Fraction(0, 1)));
            for (int i = 0; i < k; ++i) inv[i][i] = Fraction(1, 1);
            for (int col = 0; col < k; ++col) {
                int piv = -1;
                for (int r = col; r < k; ++r)
                    if (!a[r][col].is_zero()) {
                        piv = r;
                        break;
                    }
                if (piv < 0) throw std::domain_error("inverse: singular matrix block");
                std::swap(a[piv], a[col]);
                std::swap(inv[piv], inv[col]);
                Fraction p = a[col][col].inverse();
                for (int c = 0; c < k; ++c) {
                    a[col][c] = a[col][c] * p;
                    inv[col][c] = inv[col][c] * p;
                }
                for (int r = 0; r < k; ++r) {
                    if (r == col || a[r][col].is_zero()) continue;
                    Fraction factor = a[r][col];
                    for (int c = 0; c < k; ++c) {
                        a[r][c] = a[r][c] - factor * a[col][c];
                        inv[r][c] = inv[r][c] - factor * inv[col][c];
                    }
                }
            }
            MatrixPayload mp;
            mp.entries = std::move(inv);
            for (auto& [name, e] : m->symbol_scale) mp.symbol_scale[name] = -e;
            nb.payload = mp;
        }
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

PositiveReal mod_of(const Morphism& f) {
    auto check = validate_automorphism(f);
    if (!check.ok) throw std::domain_error("mod_of: not an automorphism: " + check.message);
    PositiveReal result = PositiveReal::one();
    for (const Block& b : f.blocks) {
        AtomKind k = b.atom.kind;
        if (k == AtomKind::RealLine) {
            PositiveReal factor;
            if (auto* s = std::get_if<ScalarMul>(&b.payload)) {
                factor = PositiveReal::from_fraction(s->value.abs()).pow(b.count);
                for (auto& [name, e] : s->symbols)
                    factor = factor.times(PositiveReal::symbol(name, e * b.count));
            } else if (auto* m = std::get_if<MatrixPayload>(&b.payload)) {
                factor = PositiveReal::from_fraction(matrix_determinant(m->entries).abs());
                for (auto& [name, e] : m->symbol_scale)
                    factor = factor.times(PositiveReal::symbol(name, e * b.count));
            } else {
                factor = PositiveReal::one();  // identity / permutation
            }
            result = result.times(factor);
        } else if (k == AtomKind::LocalField) {
            Int v = 0;  // valuation of det at the residue prime, in units of q
            if (auto* s = std::get_if<ScalarMul>(&b.payload)) {
                v = valuation(s->value, b.atom.param) * b.count;
            } else if (auto* m = std::get_if<MatrixPayload>(&b.payload)) {
                v = valuation(matrix_determinant(m->entries), b.atom.param);
            } else if (auto* vp = std::get_if<ScalarMulValuation>(&b.payload)) {
                v = vp->v * b.count;
            }
            if (v != 0) {
                Int p = b.atom.residue_prime();
                Int fexp = 0;
                for (Int q = b.atom.param; q > 1; q /= p) ++fexp;
                result = result.times(PositiveReal(PrimeExponentVector::prime_power(p, -v * fexp)));
            }
        }
        // compact and discrete blocks preserve Haar volume
    }
    return result;
}

Fraction matrix_determinant(std::vector<std::vector<Fraction>> m) {
    int k = (int)m.size();
    Fraction det(1, 1);
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Fraction(0, 1);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        Fraction p = m[col][col].inverse();
        for (int r = col + 1; r < k; ++r) {
            if (m[r][col].is_zero()) continue;
            Fraction factor = m[r][col] * p;
            for (int c = col; c < k; ++c) m[r][c] = m[r][c] - factor * m[col][c];
        }
    }
    return det;
}

std::string morphism_str(const Morphism& f) {
    std::ostringstream os;
    os << expr_str(f.source) << " -> " << expr_str(f.target) << " [";
    bool first = true;
    for (const Block& b : f.blocks) {
        if (!first) os << "; ";
        first = false;
        os << atom_str(b.atom);
        if (b.count != 1) os << "^" << b.count;
        os << ": ";
        if (std::holds_alternative<IdentityPayload>(b.payload))
            os << "id";
        else if (auto* s = std::get_if<ScalarMul>(&b.payload)) {
            os << "mul(" << s->value.str();
            for (auto& [name, e] : s->symbols) {
                os << "*" << name;
                if (e != 1) os << "^" << e;
            }
            os << ")";
        } else if (auto* v = std::get_if<ScalarMulValuation>(&b.payload))
            os << "val(" << v->v << ")";
        else if (std::holds_alternative<MatrixPayload>(b.payload))
            os << "matrix";
        else
            os << "perm";
    }
    os << "]";
    return os.str();
}

}  // namespace haarcalc
