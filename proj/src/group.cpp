#include "haarcalc/group.hpp"

#include <algorithm>
#include <sstream>

namespace haarcalc {

namespace {

Int require_prime_power(Int q, const char* what) {
    auto p = prime_power_base(q);
    if (!p) throw std::domain_error(std::string(what) + ": parameter must be a prime power, got " + std::to_string(q));
    return *p;
}

Int prime_power_exponent(Int q, Int p) {
    Int f = 0;
    while (q > 1) {
        q /= p;
        ++f;
    }
    return f;
}

}  // namespace

Atom Atom::local_field(Int q) {
    require_prime_power(q, "LocalField");
    return {AtomKind::LocalField, q, {}};
}

Atom Atom::integer_ring(Int q) {
    require_prime_power(q, "IntegerRing");
    return {AtomKind::IntegerRing, q, {}};
}

Atom Atom::prufer(Int q) {
    require_prime_power(q, "Prufer");
    return {AtomKind::Prufer, q, {}};
}

Atom Atom::cyclic(Int n) {
    if (n < 1) throw std::domain_error("Cyclic: n must be >= 1");
    return {AtomKind::Cyclic, n, {}};
}

Int Atom::residue_prime() const {
    switch (kind) {
        case AtomKind::LocalField:
        case AtomKind::IntegerRing:
        case AtomKind::Prufer:
            return *prime_power_base(param);
        default:
            throw std::domain_error("residue_prime: not a local-field atom");
    }
}

int GroupExpr::total_occurrences() const {
    int n = 0;
    for (auto& [a, m] : atoms) n += m;
    return n;
}

GroupExpr normalize(GroupExpr expr) {
    // Drop trivial atoms: Cyclic(1) is the zero group.
    std::erase_if(expr.atoms, [](const auto& e) {
        return e.second == 0 || (e.first.kind == AtomKind::Cyclic && e.first.param == 1);
    });
    for (auto& [a, m] : expr.atoms)
        if (m < 0) throw std::domain_error("negative multiplicity");
    std::sort(expr.atoms.begin(), expr.atoms.end());
    GroupExpr out;
    for (auto& [a, m] : expr.atoms) {
        if (!out.atoms.empty() && out.atoms.back().first == a)
            out.atoms.back().second += m;
        else
            out.atoms.emplace_back(a, m);
    }
    return out;
}

GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b) {
    GroupExpr out = a;
    out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
    return normalize(out);
}

ClassifyFlags classify(const GroupExpr& expr) {
    ClassifyFlags f{true, true, true};
    for (auto& [a, m] : expr.atoms) {
        switch (a.kind) {
            case AtomKind::RealLine:
                f.vector_free = false;
                f.compact = false;
                f.discrete = false;
                break;
            case AtomKind::LocalField:
                f.compact = false;
                f.discrete = false;
                break;
            case AtomKind::IntegerRing:
            case AtomKind::Circle:
                f.discrete = false;
                break;
            case AtomKind::Prufer:
            case AtomKind::ZDiscrete:
            case AtomKind::DiscreteBlackbox:
                f.compact = false;
                break;
            case AtomKind::Cyclic:
                break;  // finite: both compact and discrete
        }
    }
    return f;
}

CompactOpenChoice canonical_choice(const GroupExpr& expr) {
    CompactOpenChoice c;
    c.group = expr;
    for (auto& [a, m] : expr.atoms) {
        Int def = (a.kind == AtomKind::Cyclic) ? a.param : 0;
        c.params.emplace_back(m, def);
    }
    validate_choice(c);
    return c;
}

CompactOpenChoice make_choice(const GroupExpr& expr, std::vector<std::vector<Int>> params) {
    CompactOpenChoice c{expr, std::move(params)};
    validate_choice(c);
    return c;
}

void validate_choice(const CompactOpenChoice& c) {
    if (c.params.size() != c.group.atoms.size())
        throw std::domain_error("compact-open choice: parameter row count mismatch");
    for (size_t i = 0; i < c.group.atoms.size(); ++i) {
        auto& [a, m] = c.group.atoms[i];
        if ((int)c.params[i].size() != m)
            throw std::domain_error("compact-open choice: occurrence count mismatch");
        for (Int v : c.params[i]) {
            switch (a.kind) {
                case AtomKind::RealLine:
                    throw std::domain_error("R has no compact open subgroup");
                case AtomKind::LocalField:
                    break;  // any a in Z
                case AtomKind::IntegerRing:
                case AtomKind::Prufer:
                    if (v < 0) throw std::domain_error("compact-open parameter must be >= 0");
                    break;
                case AtomKind::Cyclic:
                    if (v < 1 || a.param % v != 0)
                        throw std::domain_error("compact-open parameter must divide " + std::to_string(a.param));
                    break;
                case AtomKind::ZDiscrete:
                case AtomKind::DiscreteBlackbox:
                case AtomKind::Circle:
                    if (v != 0) throw std::domain_error("atom admits only its fixed compact open");
                    break;
            }
        }
    }
}

PrimeExponentVector generalized_index(const CompactOpenChoice& c, const CompactOpenChoice& cprime) {
    validate_choice(c);
    validate_choice(cprime);
    if (!(c.group == cprime.group))
        throw std::domain_error("generalized_index: choices on different groups");
    PrimeExponentVector idx;
    for (size_t i = 0; i < c.group.atoms.size(); ++i) {
        auto& [atom, m] = c.group.atoms[i];
        for (int j = 0; j < m; ++j) {
            Int a = c.params[i][j];
            Int ap = cprime.params[i][j];
            switch (atom.kind) {
                case AtomKind::LocalField:
                case AtomKind::IntegerRing: {
                    // m^a lattice: larger exponent = smaller subgroup.
                    Int p = atom.residue_prime();
                    Int f = prime_power_exponent(atom.param, p);
                    idx.add_factor(p, f * (ap - a));
                    break;
                }
                case AtomKind::Prufer: {
                    // Finite subgroups of order q^a: larger exponent = larger subgroup.
                    Int p = atom.residue_prime();
                    Int f = prime_power_exponent(atom.param, p);
                    idx.add_factor(p, f * (a - ap));
                    break;
                }
                case AtomKind::Cyclic:
                    idx = idx.times(PrimeExponentVector::factorize(a, ap));
                    break;
                default:
                    break;  // fixed choices contribute 1
            }
        }
    }
    return idx;
}

GroupExpr subgroup_expr(const CompactOpenChoice& c) {
    validate_choice(c);
    GroupExpr out;
    for (size_t i = 0; i < c.group.atoms.size(); ++i) {
        auto& [atom, m] = c.group.atoms[i];
        for (int j = 0; j < m; ++j) {
            Int a = c.params[i][j];
            switch (atom.kind) {
                case AtomKind::LocalField:
                case AtomKind::IntegerRing:
                    // m^a is isomorphic to O as a topological group.
                    out.atoms.emplace_back(Atom::integer_ring(atom.param), 1);
                    break;
                case AtomKind::Prufer:
                    if (a > 0) {
                        Int p = atom.residue_prime();
                        Int f = prime_power_exponent(atom.param, p);
                        Int pa = 1;
                        for (Int k = 0; k < a; ++k) pa *= p;
                        out.atoms.emplace_back(Atom::cyclic(pa), (int)f);
                    }
                    break;
                case AtomKind::Cyclic:
                    if (a > 1) out.atoms.emplace_back(Atom::cyclic(a), 1);
                    break;
                case AtomKind::Circle:
                    out.atoms.emplace_back(Atom::circle(), 1);
                    break;
                default:
                    break;  // {0}
            }
        }
    }
    return normalize(out);
}

GroupExpr quotient_by(const GroupExpr& expr, const CompactOpenChoice& c) {
    if (!classify(expr).vector_free)
        throw std::domain_error("quotient_by: R has no compact open subgroup");
    validate_choice(c);
    if (!(c.group == expr)) throw std::domain_error("quotient_by: choice is for a different group");
    GroupExpr out;
    for (size_t i = 0; i < expr.atoms.size(); ++i) {
        auto& [atom, m] = expr.atoms[i];
        for (int j = 0; j < m; ++j) {
            Int a = c.params[i][j];
            switch (atom.kind) {
                case AtomKind::LocalField:
                case AtomKind::Prufer:
                    out.atoms.emplace_back(Atom::prufer(atom.param), 1);
                    break;
                case AtomKind::IntegerRing:
                    if (a > 0) {
                        // O/m^a has order q^a; decomposed along the residue prime.
                        Int p = atom.residue_prime();
                        Int f = prime_power_exponent(atom.param, p);
                        Int pa = 1;
                        for (Int k = 0; k < a; ++k) pa *= p;
                        out.atoms.emplace_back(Atom::cyclic(pa), (int)f);
                    }
                    break;
                case AtomKind::Cyclic:
                    if (atom.param / a > 1) out.atoms.emplace_back(Atom::cyclic(atom.param / a), 1);
                    break;
                case AtomKind::ZDiscrete:
                    out.atoms.emplace_back(Atom::z(), 1);
                    break;
                case AtomKind::DiscreteBlackbox:
                    out.atoms.emplace_back(atom, 1);
                    break;
                case AtomKind::Circle:
                    break;  // T / T = 0
                default:
                    break;
            }
        }
    }
    return normalize(out);
}

StructureDecomposition structure_decompose(const GroupExpr& expr) {
    StructureDecomposition d;
    GroupExpr rest;
    for (auto& [a, m] : expr.atoms) {
        if (a.kind == AtomKind::RealLine)
            d.real_rank += m;
        else
            rest.atoms.emplace_back(a, m);
    }
    rest = normalize(rest);
    d.compact_part = canonical_choice(rest);
    d.discrete_part = quotient_by(rest, d.compact_part);
    return d;
}

std::string atom_str(const Atom& a) {
    switch (a.kind) {
        case AtomKind::RealLine: return "R";
        case AtomKind::LocalField:
            return is_prime(a.param) ? "Qp(" + std::to_string(a.param) + ")"
                                     : "K(" + std::to_string(a.param) + ")";
        case AtomKind::IntegerRing:
            return is_prime(a.param) ? "Zp(" + std::to_string(a.param) + ")"
                                     : "O(" + std::to_string(a.param) + ")";
        case AtomKind::Prufer: return "Prufer(" + std::to_string(a.param) + ")";
        case AtomKind::ZDiscrete: return "Z";
        case AtomKind::Circle: return "T";
        case AtomKind::Cyclic: return "Z/" + std::to_string(a.param);
        case AtomKind::DiscreteBlackbox: return "D(" + a.label + ")";
    }
    return "?";
}

std::string expr_str(const GroupExpr& expr) {
    if (expr.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [a, m] : expr.atoms) {
        if (!first) os << " + ";
        first = false;
        os << atom_str(a);
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

}  // namespace haarcalc
