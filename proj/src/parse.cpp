#include "haarcalc/parse.hpp"

#include <cctype>
#include <json.hpp>

namespace haarcalc {

namespace {

using nlohmann::json;

struct Cursor {
    const std::string& text;
    size_t pos{0};

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    Int nat() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoll(text.substr(start, pos - start));
    }
    Int integer() {
        skip_ws();
        bool neg = eat('-');
        Int n = nat();
        return neg ? -n : n;
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum((unsigned char)text[pos]) || text[pos] == '_')) ++pos;
        return text.substr(start, pos - start);
    }
};

Atom parse_atom(Cursor& c) {
    size_t at = c.pos;
    std::string name = c.word();
    auto prime_arg = [&](const std::string& alt) {
        c.expect('(');
        size_t argpos = c.pos;
        Int p = c.nat();
        c.expect(')');
        if (!is_prime(p)) {
            c.pos = argpos;
            std::string msg = std::to_string(p) + " is not prime";
            if (!alt.empty() && prime_power_base(p))
                msg += "; for residue cardinality " + std::to_string(p) + " use " + alt + "(" +
                       std::to_string(p) + ")";
            c.fail(msg);
        }
        return p;
    };
    auto prime_power_arg = [&]() {
        c.expect('(');
        size_t argpos = c.pos;
        Int q = c.nat();
        c.expect(')');
        if (!prime_power_base(q)) {
            c.pos = argpos;
            c.fail(std::to_string(q) + " is not a prime power");
        }
        return q;
    };
    if (name == "R") return Atom::real_line();
    if (name == "Qp") return Atom::local_field(prime_arg("K"));
    if (name == "Zp") return Atom::integer_ring(prime_arg("O"));
    if (name == "Prufer") return Atom::prufer(prime_arg(""));
    if (name == "K") return Atom::local_field(prime_power_arg());
    if (name == "O") return Atom::integer_ring(prime_power_arg());
    if (name == "T") return Atom::circle();
    if (name == "Z") {
        if (c.eat('/')) {
            Int n = c.nat();
            if (n < 1) c.fail("Z/n needs n >= 1");
            return Atom::cyclic(n);
        }
        return Atom::z();
    }
    if (name == "D") {
        c.expect('(');
        std::string label = c.word();
        if (label.empty()) c.fail("D(label) needs a nonempty label");
        c.expect(')');
        return Atom::blackbox(label);
    }
    c.pos = at;
    c.fail(name.empty() ? "expected an atom" : "unknown atom '" + name + "'");
}

std::map<std::string, Int> parse_symbol_monomial(Cursor& c, Fraction& rational) {
    // factor ("*" factor)*; factor := rational | symbol ("^" int)?
    std::map<std::string, Int> symbols;
    do {
        if (std::isdigit((unsigned char)c.peek())) {
            Int num = c.nat();
            Int den = 1;
            if (c.eat('/')) den = c.nat();
            rational = rational * Fraction(num, den);
        } else {
            std::string name = c.word();
            if (name.empty()) c.fail("expected a rational or a symbol name");
            Int e = 1;
            if (c.eat('^')) e = c.integer();
            symbols[name] += e;
            if (symbols[name] == 0) symbols.erase(name);
        }
    } while (c.eat('*'));
    return symbols;
}

Fraction fraction_from_json(const json& v, Cursor& c) {
    if (v.is_number_integer()) return Fraction::integer(v.get<Int>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        Cursor fc{s, 0};
        Int num = fc.integer();
        Int den = 1;
        if (fc.eat('/')) den = fc.nat();
        if (!fc.done()) c.fail("bad rational literal '" + s + "'");
        return Fraction(num, den);
    }
    c.fail("matrix entries must be integers or rational strings");
}

Payload payload_from_json(const json& spec, const Atom& atom, int count, Cursor& c) {
    if (spec.contains("matrix")) {
        MatrixPayload m;
        for (auto& row : spec["matrix"]) {
            m.entries.emplace_back();
            for (auto& v : row) m.entries.back().push_back(fraction_from_json(v, c));
        }
        if ((int)m.entries.size() != count) c.fail("matrix size does not match block multiplicity");
        if (spec.contains("symbol_scale"))
            for (auto& [name, e] : spec["symbol_scale"].items())
                m.symbol_scale[name] = e.get<Int>();
        return m;
    }
    if (spec.contains("mul")) {
        const json& v = spec["mul"];
        if (v.is_string()) {
            std::string s = v.get<std::string>();
            Cursor mc{s, 0};
            Fraction rat(1, 1);
            auto symbols = parse_symbol_monomial(mc, rat);
            if (!mc.done()) mc.fail("trailing input in scalar");
            return ScalarMul{rat, symbols};
        }
        return ScalarMul{fraction_from_json(v, c), {}};
    }
    if (spec.contains("val")) return ScalarMulValuation{spec["val"].get<Int>()};
    if (spec.contains("perm")) {
        PermutationPayload p;
        for (auto& v : spec["perm"]) p.perm.push_back(v.get<int>());
        return p;
    }
    if (spec.contains("id")) return IdentityPayload{};
    c.fail("block for " + atom_str(atom) + " has no payload key (matrix/mul/val/perm/id)");
}

Morphism morphism_from_json(const json& j, const GroupExpr& source, Cursor& c) {
    const json& blocks = j.is_array() ? j : j.at("blocks");
    GroupExpr src = normalize(source);
    if (blocks.size() != src.atoms.size())
        c.fail("morphism needs exactly one block per atom entry of " + expr_str(src));
    Morphism f{src, src, {}};
    for (size_t i = 0; i < src.atoms.size(); ++i) {
        auto& [atom, count] = src.atoms[i];
        const json& spec = blocks[i];
        if (spec.contains("block")) {
            GroupExpr declared = parse_expr(spec["block"].get<std::string>());
            GroupExpr expected;
            expected.atoms.emplace_back(atom, count);
            if (!(normalize(declared) == expected))
                c.fail("block " + std::to_string(i) + " declares '" + expr_str(declared) +
                       "' but the group has " + expr_str(expected));
        }
        f.blocks.push_back(Block{atom, count, payload_from_json(spec, atom, count, c)});
    }
    validate_structure(f);
    return f;
}

}  // namespace

GroupExpr parse_expr(const std::string& text) {
    Cursor c{text, 0};
    GroupExpr expr;
    if (c.done()) return expr;
    if (c.peek() == '0') {
        c.expect('0');
        if (!c.done()) c.fail("trailing input after zero group");
        return expr;
    }
    do {
        Atom atom = parse_atom(c);
        Int mult = 1;
        if (c.eat('^')) {
            mult = c.nat();
            if (mult < 1) c.fail("multiplicity must be >= 1");
        }
        expr.atoms.emplace_back(atom, (int)mult);
    } while (c.eat('+'));
    if (!c.done()) c.fail("trailing input");
    return normalize(expr);
}

Morphism parse_morphism(const std::string& text, const GroupExpr& source) {
    Cursor c{text, 0};
    char first = c.peek();
    if (first == '{' || first == '[') {
        json j = json::parse(text, nullptr, true, true);
        return morphism_from_json(j, source, c);
    }
    std::string verb = c.word();
    if (verb == "id") {
        if (!c.done()) c.fail("trailing input");
        return identity_morphism(normalize(source));
    }
    if (verb == "mul") {
        c.expect('(');
        Fraction rat(1, 1);
        auto symbols = parse_symbol_monomial(c, rat);
        c.expect(')');
        if (!c.done()) c.fail("trailing input");
        return blockwise_scalar(normalize(source), rat, symbols);
    }
    if (verb == "val") {
        c.expect('(');
        Int v = c.integer();
        c.expect(')');
        if (!c.done()) c.fail("trailing input");
        return blockwise(normalize(source), ScalarMulValuation{v});
    }
    c.fail("unknown morphism form '" + verb + "' (expected id, mul(...), val(...), or JSON)");
}

PositiveReal parse_scalar(const std::string& text) {
    Cursor c{text, 0};
    Fraction rat(1, 1);
    auto symbols = parse_symbol_monomial(c, rat);
    if (!c.done()) c.fail("trailing input in scalar");
    if (rat.num <= 0) c.fail("scalar must be positive");
    PositiveReal out = PositiveReal::from_fraction(rat);
    for (auto& [name, e] : symbols) out = out.times(PositiveReal::symbol(name, e));
    return out;
}

Diagram parse_diagram(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, true, true);
    Diagram d;
    for (auto& v : j.at("vertices")) d.vertices.push_back(parse_expr(v.get<std::string>()));
    for (auto& e : j.at("edges")) {
        DiagramEdge edge;
        edge.from = e.at("from").get<int>();
        edge.to = e.at("to").get<int>();
        if (edge.from < 0 || edge.from >= (int)d.vertices.size() || edge.to < 0 ||
            edge.to >= (int)d.vertices.size())
            throw std::invalid_argument("diagram edge endpoint out of range");
        const json& m = e.at("morphism");
        edge.morphism = m.is_string() ? parse_morphism(m.get<std::string>(), d.vertices[edge.from])
                                      : parse_morphism(m.dump(), d.vertices[edge.from]);
        d.edges.push_back(std::move(edge));
    }
    validate_diagram(d);
    return d;
}

}  // namespace haarcalc
