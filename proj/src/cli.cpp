#include "haarcalc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "haarcalc/gg.hpp"
#include "haarcalc/haar.hpp"
#include "haarcalc/ktheory.hpp"
#include "haarcalc/parse.hpp"
#include "haarcalc/selftest.hpp"

namespace haarcalc {

namespace {

constexpr const char* kVersion = "1.0.0";

struct SequenceFlags {
    std::string kind, expr, params, left, right, morphism;
    Int q{2}, a{1}, b{0}, n{2};
};

void add_sequence_flags(CLI::App* sub, SequenceFlags& f) {
    sub->add_option("--kind", f.kind,
                    "compact-open | int-in-real | uniformizer | ideal-filtration | mult-n-z | "
                    "mult-n-t | mult-unif-prufer | sum-split | iso-left | iso-right")
        ->required();
    sub->add_option("--expr", f.expr, "total group (compact-open, iso-left, iso-right)");
    sub->add_option("--params", f.params,
                    "compact-open parameters, one integer per atom occurrence, comma separated");
    sub->add_option("--left", f.left, "left summand (sum-split)");
    sub->add_option("--right", f.right, "right summand (sum-split)");
    sub->add_option("--morphism", f.morphism, "isomorphism (iso-left, iso-right)");
    sub->add_option("--q", f.q, "residue cardinality (prime power)");
    sub->add_option("--a", f.a, "filtration exponent a >= b");
    sub->add_option("--b", f.b, "filtration exponent b");
    sub->add_option("--n", f.n, "multiplication parameter n");
}

CompactOpenChoice choice_from_csv(const GroupExpr& expr, const std::string& csv) {
    std::vector<Int> values;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(std::stoll(tok));
    CompactOpenChoice c;
    c.group = expr;
    size_t at = 0;
    for (auto& [atom, count] : expr.atoms) {
        c.params.emplace_back();
        for (int j = 0; j < count; ++j) {
            if (at >= values.size())
                throw std::invalid_argument("--params needs " +
                                            std::to_string(expr.total_occurrences()) + " values");
            c.params.back().push_back(values[at++]);
        }
    }
    if (at != values.size()) throw std::invalid_argument("--params has extra values");
    validate_choice(c);
    return c;
}

ExactSequence sequence_from_flags(const SequenceFlags& f) {
    if (f.kind == "compact-open") {
        GroupExpr x = parse_expr(f.expr);
        return make_compact_open(x, choice_from_csv(x, f.params));
    }
    if (f.kind == "int-in-real") return make_int_in_real();
    if (f.kind == "uniformizer") return make_uniformizer(f.q);
    if (f.kind == "ideal-filtration") return make_ideal_filtration(f.q, f.a, f.b);
    if (f.kind == "mult-n-z") return make_mult_n_z(f.n);
    if (f.kind == "mult-n-t") return make_mult_n_t(f.n);
    if (f.kind == "mult-unif-prufer") return make_mult_unif_prufer(f.q);
    if (f.kind == "sum-split") return make_sum_split(parse_expr(f.left), parse_expr(f.right));
    if (f.kind == "iso-left" || f.kind == "iso-right") {
        GroupExpr x = parse_expr(f.expr);
        Morphism m = parse_morphism(f.morphism, x);
        return f.kind == "iso-left" ? make_iso_left(m) : make_iso_right(m);
    }
    throw std::invalid_argument("unknown sequence kind '" + f.kind + "'");
}

OJson flags_json(const ClassifyFlags& f) {
    return OJson{{"vector_free", f.vector_free}, {"compact", f.compact}, {"discrete", f.discrete}};
}

OJson kclass_json(const KClass& k) {
    OJson out = OJson::object();
    for (auto& [p, e] : k.vector.exponents()) out[std::to_string(p)] = e;
    return out;
}

std::vector<WalkStep> cycle_from_csv(const std::string& csv) {
    std::vector<WalkStep> walk;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        bool forward = true;
        size_t at = 0;
        if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
            forward = tok[0] == '+';
            at = 1;
        }
        walk.push_back({std::stoi(tok.substr(at)), forward});
    }
    return walk;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool has_real_atom(const GroupExpr& e) { return !classify(e).vector_free; }

void flag_real_convention(OJson& report, bool real_present) {
    if (real_present)
        report["note"] = "REAL_LINE atoms present: volumes use the Lebesgue-[0,1) convention";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"haarcalc - exact Haar-measure scaling on vector-free LCA groups"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;
    std::string report_file;
    app.add_option("--seed", seed, "seed for randomized suites")->configurable(false);
    app.add_option("--report", report_file, "also write the JSON report to this file");

    std::string expr_text, morphism_text, scale_text = "1", cycle_text, file_path, json_text;
    std::string left_text, right_text, params1, params2;
    int axiom = 3;
    Int gg_prime = 2, gg_cap = 2;
    SequenceFlags seq_flags;

    CLI::App* parse_cmd = app.add_subcommand("parse", "parse and normalize a group expression");
    parse_cmd->add_option("--expr", expr_text)->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "vector-free / compact / discrete flags");
    classify_cmd->add_option("--expr", expr_text)->required();

    CLI::App* module_cmd = app.add_subcommand("module", "Haar scaling factor of an automorphism");
    module_cmd->add_option("--expr", expr_text)->required();
    module_cmd->add_option("--morphism", morphism_text)->required();

    CLI::App* k1_cmd = app.add_subcommand("k1", "K1 class of a vector-free automorphism");
    k1_cmd->add_option("--expr", expr_text)->required();
    k1_cmd->add_option("--morphism", morphism_text)->required();

    CLI::App* k0_cmd = app.add_subcommand("k0", "K0 class of a finite abelian group");
    k0_cmd->add_option("--expr", expr_text)->required();

    CLI::App* defect_cmd = app.add_subcommand("defect", "Fubini defect of a catalog sequence");
    add_sequence_flags(defect_cmd, seq_flags);

    CLI::App* split_cmd = app.add_subcommand("split", "split a Haar element along a sequence");
    add_sequence_flags(split_cmd, seq_flags);
    split_cmd->add_option("--scale", scale_text, "scale of the measure on the total group");

    CLI::App* axioms_cmd = app.add_subcommand("check-axioms", "determinant-functor axiom checks");
    axioms_cmd->add_option("--axiom", axiom, "3, 4, or 5")->required();
    axioms_cmd->add_option("--expr", expr_text, "group (axioms 3 and 4)");
    axioms_cmd->add_option("--morphism", morphism_text, "automorphism (axiom 3)");
    axioms_cmd->add_option("--params1", params1, "inner compact-open parameters (axiom 4)");
    axioms_cmd->add_option("--params2", params2, "outer compact-open parameters (axiom 4)");
    axioms_cmd->add_option("--left", left_text, "left summand (axiom 5)");
    axioms_cmd->add_option("--right", right_text, "right summand (axiom 5)");

    CLI::App* holonomy_cmd = app.add_subcommand("holonomy", "cycle holonomy of a diagram");
    holonomy_cmd->add_option("--file", file_path, "diagram JSON file");
    holonomy_cmd->add_option("--json", json_text, "inline diagram JSON");
    holonomy_cmd->add_option("--cycle", cycle_text, "closed walk, e.g. 0,-1 (minus = backward)")
        ->required();

    CLI::App* haq_cmd = app.add_subcommand("haq", "Ha^Q membership of a Haar element");
    haq_cmd->add_option("--expr", expr_text)->required();
    haq_cmd->add_option("--scale", scale_text);

    CLI::App* gg_cmd = app.add_subcommand("gg-pi0", "pi0 of the Gillet-Grayson 1-skeleton");
    gg_cmd->add_option("--prime", gg_prime)->required();
    gg_cmd->add_option("--max-length", gg_cap)->required();

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the acceptance property suite");
    selftest_cmd->add_option("--seed", seed, "seed for randomized suites");

    std::vector<const char*> argv;
    argv.push_back("haarcalc");
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    OJson report;
    report["version"] = kVersion;
    std::vector<Verdict> verdicts;

    try {
        if (parse_cmd->parsed()) {
            report["verb"] = "parse";
            report["inputs"] = OJson{{"expr", expr_text}};
            GroupExpr e = parse_expr(expr_text);
            report["results"] = OJson{{"normalized", expr_str(e)},
                                      {"occurrences", e.total_occurrences()},
                                      {"classify", flags_json(classify(e))}};
        } else if (classify_cmd->parsed()) {
            report["verb"] = "classify";
            report["inputs"] = OJson{{"expr", expr_text}};
            report["results"] = flags_json(classify(parse_expr(expr_text)));
        } else if (module_cmd->parsed()) {
            report["verb"] = "module";
            report["inputs"] = OJson{{"expr", expr_text}, {"morphism", morphism_text}};
            GroupExpr e = parse_expr(expr_text);
            Morphism f = parse_morphism(morphism_text, e);
            auto check = validate_automorphism(f);
            if (!check.ok) throw std::invalid_argument("not an automorphism: " + check.message);
            PositiveReal m = mod_of(f);
            report["results"] = OJson{{"module", scalar_json(m)},
                                      {"value", m.str()},
                                      {"rational", m.is_rational()}};
            flag_real_convention(report, has_real_atom(e));
            if (classify(e).vector_free)
                verdicts.push_back({"rational_module", m.is_rational(),
                                    "vector-free modules must be rational"});
        } else if (k1_cmd->parsed()) {
            report["verb"] = "k1";
            report["inputs"] = OJson{{"expr", expr_text}, {"morphism", morphism_text}};
            GroupExpr e = parse_expr(expr_text);
            report["results"] = kclass_json(k1_class(parse_morphism(morphism_text, e)));
        } else if (k0_cmd->parsed()) {
            report["verb"] = "k0";
            report["inputs"] = OJson{{"expr", expr_text}};
            report["results"] = kclass_json(k0_class(parse_expr(expr_text)));
        } else if (defect_cmd->parsed()) {
            report["verb"] = "defect";
            ExactSequence seq = sequence_from_flags(seq_flags);
            report["inputs"] = OJson{{"sequence", sequence_str(seq)}};
            PositiveReal d = defect(seq);
            report["results"] =
                OJson{{"defect", scalar_json(d)}, {"value", d.str()}, {"rational", d.is_rational()}};
            flag_real_convention(report, has_real_atom(seq.total));
        } else if (split_cmd->parsed()) {
            report["verb"] = "split";
            ExactSequence seq = sequence_from_flags(seq_flags);
            report["inputs"] = OJson{{"sequence", sequence_str(seq)}, {"scale", scale_text}};
            HaarElement mu{normalize(seq.total), parse_scalar(scale_text)};
            SplitResult sr = split(seq, mu);
            report["results"] = OJson{{"r", scalar_json(sr.r)},
                                      {"value", sr.r.str()},
                                      {"sub", expr_str(sr.sub.group)},
                                      {"quot", expr_str(sr.quot.group)},
                                      {"rational", sr.r.is_rational()}};
            flag_real_convention(report, has_real_atom(seq.total));
            bool roundtrip = glue(seq, sr.sub, sr.quot) == mu;
            verdicts.push_back({"glue_inverts_split", roundtrip, "glue(split(mu)) = mu"});
        } else if (axioms_cmd->parsed()) {
            report["verb"] = "check-axioms";
            AxiomReport rep;
            if (axiom == 3) {
                GroupExpr e = parse_expr(expr_text);
                rep = check_axiom3(parse_morphism(morphism_text, e));
            } else if (axiom == 4) {
                GroupExpr e = parse_expr(expr_text);
                rep = check_axiom4(e, choice_from_csv(e, params1), choice_from_csv(e, params2));
            } else if (axiom == 5) {
                rep = check_axiom5(parse_expr(left_text), parse_expr(right_text));
            } else {
                throw std::invalid_argument("--axiom must be 3, 4, or 5");
            }
            report["inputs"] = OJson{{"axiom", axiom}};
            report["results"] = OJson{{"lhs", scalar_json(rep.lhs)},
                                      {"rhs", scalar_json(rep.rhs)},
                                      {"detail", rep.detail}};
            verdicts.push_back({"axiom" + std::to_string(axiom), rep.pass,
                                rep.pass ? "both sides agree" : rep.detail});
        } else if (holonomy_cmd->parsed()) {
            report["verb"] = "holonomy";
            if (json_text.empty() && file_path.empty())
                throw std::invalid_argument("holonomy needs --file or --json");
            Diagram d = parse_diagram(json_text.empty() ? read_file(file_path) : json_text);
            report["inputs"] = OJson{{"vertices", d.vertices.size()},
                                     {"edges", d.edges.size()},
                                     {"cycle", cycle_text}};
            PositiveReal h = holonomy(d, cycle_from_csv(cycle_text));
            report["results"] = OJson{{"holonomy", scalar_json(h)},
                                      {"value", h.str()},
                                      {"rational", h.is_rational()}};
            bool all_vf = true;
            for (auto& v : d.vertices) all_vf = all_vf && classify(v).vector_free;
            flag_real_convention(report, !all_vf);
            if (all_vf)
                verdicts.push_back({"rational_holonomy", h.is_rational(),
                                    "vector-free cycle holonomies must be rational"});
        } else if (haq_cmd->parsed()) {
            report["verb"] = "haq";
            report["inputs"] = OJson{{"expr", expr_text}, {"scale", scale_text}};
            HaarElement mu{parse_expr(expr_text), parse_scalar(scale_text)};
            report["results"] = OJson{{"member", haq_membership(mu)}};
        } else if (gg_cmd->parsed()) {
            report["verb"] = "gg-pi0";
            report["inputs"] = OJson{{"prime", gg_prime}, {"max-length", gg_cap}};
            GGComplex c = gg_build(gg_prime, (int)gg_cap);
            GGPi0Report rep = gg_pi0(c);
            OJson per_diff = OJson::object();
            for (auto& [diff, count] : rep.components_per_difference)
                per_diff[std::to_string(diff)] = count;
            report["results"] = OJson{{"objects", c.objects.size()},
                                      {"vertices", rep.vertex_count},
                                      {"edges", rep.edge_count},
                                      {"components", rep.component_count},
                                      {"components_per_difference", per_diff}};
            verdicts.push_back({"edges_respect_difference", rep.edges_respect_difference,
                                "every edge preserves length(P')-length(P)"});
            verdicts.push_back({"basepoint_diagonal_connected", rep.basepoint_diagonal_connected,
                                "(P,P) ~ (0,0) for every object P"});
        } else if (selftest_cmd->parsed()) {
            report["verb"] = "selftest";
            SelftestResult st = run_selftest(seed);
            report["inputs"] = OJson{{"seed", seed}};
            report["results"] = st.report;
            for (auto& v : st.verdicts) verdicts.push_back(v);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    OJson vj = OJson::array();
    bool all_pass = true;
    for (auto& v : verdicts) {
        all_pass = all_pass && v.pass;
        vj.push_back(OJson{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    }
    report["verdicts"] = vj;
    std::string serialized = report.dump(2);
    out << serialized << "\n";
    if (!report_file.empty()) {
        std::ofstream f(report_file);
        f << serialized << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace haarcalc
