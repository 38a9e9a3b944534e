#include "bpoly/bcore.hpp"
#include "bpoly/embedding.hpp"
#include "bpoly/error.hpp"
#include "bpoly/family.hpp"
#include "bpoly/format.hpp"
#include "bpoly/identities.hpp"
#include "bpoly/qsym.hpp"
#include "bpoly/survey.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace bpoly;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kPrecondition = 3, kArithmetic = 4 };

struct Options {
    std::string format = "json";
    bool pretty = false;
    std::string input;
    std::string rotation;
    bool planar = false;
    std::vector<long> q_list;
    std::string word;
    int family_index = 0;
    std::uint64_t work_bound = default_work_bound;

    bool is_pretty() const { return pretty || format == "pretty"; }
};

// A path if such a file exists, else the literal text.
std::string read_source(const std::string& arg) {
    std::error_code ec;
    if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream f(arg);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    return arg;
}

Input load_input(const Options& o) { return parse_input(read_source(o.input)); }

Digraph as_digraph(const Input& in) {
    if (auto* d = std::get_if<Digraph>(&in)) return *d;
    if (auto* m = std::get_if<MixedGraph>(&in)) return m->digraph();
    return std::get<Graph>(in).oriented();
}

Graph as_graph(const Input& in) {
    if (auto* g = std::get_if<Graph>(&in)) return *g;
    return as_digraph(in).underlying();
}

MixedGraph as_mixed(const Input& in) {
    if (auto* m = std::get_if<MixedGraph>(&in)) return *m;
    if (auto* d = std::get_if<Digraph>(&in)) return MixedGraph::oriented(*d);
    return MixedGraph::from_graph(std::get<Graph>(in));
}

std::optional<RotationSystem> load_rotation(const Options& o, const Digraph& d) {
    if (!o.rotation.empty()) {
        json j;
        try {
            j = json::parse(read_source(o.rotation));
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid rotation JSON: ") + e.what());
        }
        RotationSystem r = rotation_from_json(j);
        r.validate(d);
        return r;
    }
    if (o.planar) {
        auto all = planar_rotation_systems(d);
        if (all.empty()) throw PreconditionError("digraph has no planar rotation system");
        return all.front();
    }
    return std::nullopt;
}

CheckInput check_input(const Options& o) {
    Input in = load_input(o);
    if (!o.rotation.empty() || o.planar) {
        Digraph d = as_digraph(in);
        return EmbeddedDigraph{d, *load_rotation(o, d)};
    }
    return std::visit([](const auto& x) -> CheckInput { return x; }, in);
}

json structure_json(const StructureReport& s) {
    json out{{"components", s.components},
             {"scc_count", s.scc_count},
             {"is_acyclic", s.is_acyclic},
             {"is_totally_cyclic", s.is_totally_cyclic},
             {"acyclic_quotient", to_json(s.acyclic_quotient)}};
    out["longest_path_arcs"] = s.longest_path_arcs ? json(*s.longest_path_arcs) : json("infinite");
    out["profile"] = s.profile ? json(*s.profile) : json(nullptr);
    return out;
}

std::string structure_pretty(const StructureReport& s) {
    std::ostringstream out;
    out << "components: " << s.components << "\n"
        << "strongly connected components: " << s.scc_count << "\n"
        << "acyclic: " << (s.is_acyclic ? "yes" : "no") << "\n"
        << "totally cyclic: " << (s.is_totally_cyclic ? "yes" : "no") << "\n"
        << "longest path: " << (s.longest_path_arcs ? std::to_string(*s.longest_path_arcs) : "infinite") << "\n"
        << "acyclic quotient: " << render_inline(s.acyclic_quotient) << "\n";
    if (s.profile) {
        out << "profile:";
        for (int h : *s.profile) out << " " << h;
        out << "\n";
    }
    return out.str();
}

// Emits named polynomials: a single JSON poly (or pretty line) when there is
// one unnamed value, an object otherwise.
void emit_polys(const Options& o, const std::vector<std::pair<std::string, MultiPoly>>& values) {
    if (o.is_pretty()) {
        for (const auto& [name, p] : values) std::cout << (name.empty() ? "" : name + ": ") << to_pretty(p) << "\n";
        return;
    }
    if (values.size() == 1 && values[0].first.empty()) {
        std::cout << to_json(values[0].second).dump() << "\n";
        return;
    }
    json out = json::object();
    for (const auto& [name, p] : values) out[name] = to_json(p);
    std::cout << out.dump() << "\n";
}

std::optional<SignWord> word_of(const Options& o) {
    if (o.word.empty()) return std::nullopt;
    return SignWord::parse(o.word);
}

int cmd_compute(const std::string& target, const Options& o) {
    Input in = load_input(o);
    if (target == "b") {
        Digraph d = as_digraph(in);
        if (o.q_list.empty()) {
            emit_polys(o, {{"", b_poly(d)}});
        } else {
            std::vector<std::pair<std::string, MultiPoly>> values;
            for (long q : o.q_list) {
                if (q < 1) throw PreconditionError("q values must be positive");
                values.emplace_back("q=" + std::to_string(q), b_eval_direct(d, q, o.work_bound));
            }
            emit_polys(o, values);
        }
    } else if (target == "qsym") {
        QSymFunction f = qsym_b(as_digraph(in));
        std::cout << (o.is_pretty() ? to_pretty(f) : to_json(f).dump()) << "\n";
    } else if (target == "potts") {
        emit_polys(o, {{"", potts(as_graph(in))}});
    } else if (target == "tutte") {
        emit_polys(o, {{"", tutte(as_graph(in))}});
    } else if (target == "t1" || target == "t2") {
        emit_polys(o, {{"", t_mixed(as_mixed(in), target == "t1" ? 1 : 2)}});
    } else if (target == "chromatic") {
        if (std::holds_alternative<Digraph>(in)) {
            const Digraph& d = std::get<Digraph>(in);
            emit_polys(o, {{"strict", chromatic(d, ChromaticKind::Strict)}, {"weak", chromatic(d, ChromaticKind::Weak)}});
        } else {
            emit_polys(o, {{"mixed_strict", chromatic(as_mixed(in))}});
        }
    } else if (target == "bfamily") {
        Digraph d = as_digraph(in);
        if (auto w = word_of(o)) {
            emit_polys(o, {{"", b_w(d, *w, o.work_bound)}});
        } else if (o.family_index > 0) {
            emit_polys(o, {{"", b_m(d, o.family_index, o.work_bound).poly}});
        } else {
            throw ParseError("bfamily needs --word or --index");
        }
    } else if (target == "dual") {
        Digraph d = as_digraph(in);
        auto rot = load_rotation(o, d);
        if (!rot) throw ParseError("dual needs --rotation or --planar");
        Digraph dual = planar_dual(d, *rot);
        std::cout << (o.is_pretty() ? render(dual) : to_json(dual).dump() + "\n");
    } else if (target == "structure") {
        StructureReport s = structure(as_digraph(in));
        std::cout << (o.is_pretty() ? structure_pretty(s) : structure_json(s).dump() + "\n");
    } else {
        throw ParseError("unknown compute target '" + target + "'");
    }
    return kOk;
}

std::vector<std::string> split_ids(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string id; std::getline(ss, id, ',');)
        if (!id.empty()) out.push_back(id);
    return out;
}

int cmd_check(const std::string& checks, const Options& o) {
    CheckInput in = check_input(o);
    std::vector<std::string> ids;
    bool all = checks.empty() || checks == "all";
    if (all) {
        for (const auto& info : check_registry()) ids.push_back(info.id);
    } else {
        ids = split_ids(checks);
        for (const auto& id : ids) find_check(id);
    }
    auto word = word_of(o);
    long passed = 0, failed = 0;
    auto emit = [&](const CheckReport& r) {
        (r.passed ? passed : failed)++;
        if (o.is_pretty())
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.check_id << " on " << r.input << "\n";
        else
            std::cout << to_json(r).dump() << "\n";
    };
    for (const auto& id : ids) {
        auto params = applicable_params(id, in);
        if (word)
            for (auto& p : params)
                if (p.word) p.word = *word;
        if (params.empty()) {
            if (all) continue;
            CheckParams p;
            p.word = word;
            emit(run_check(id, in, p));  // reports the unmet precondition
            continue;
        }
        for (const auto& p : params) emit(run_check(id, in, p));
    }
    if (o.is_pretty())
        std::cout << passed << " passed, " << failed << " failed\n";
    else
        std::cout << json{{"summary", {{"passed", passed}, {"failed", failed}}}}.dump() << "\n";
    return failed == 0 ? kOk : kFailed;
}

int cmd_survey(SurveyOptions s, const std::string& checks, bool progress, const Options& o) {
    s.checks = split_ids(checks);
    for (const auto& id : s.checks) find_check(id);
    std::function<void(long, long)> report;
    if (progress)
        report = [](long done, long total) { std::cerr << "\r" << done << "/" << total << std::flush; };
    SurveySummary sum = run_survey(s, report);
    if (progress) std::cerr << "\n";
    if (o.is_pretty()) {
        for (const auto& t : sum.tallies)
            if (t.passed + t.failed > 0) std::cout << t.check_id << ": " << t.passed << " passed, " << t.failed << " failed\n";
        for (const auto& r : sum.failed) std::cout << "FAIL " << r.check_id << " on " << r.input << "\n";
        for (const auto& e : sum.errors) std::cout << "ERROR " << e << "\n";
        std::cout << sum.inputs << " inputs, " << sum.reports << " reports, " << sum.failures << " failures\n";
    } else {
        std::cout << to_json(sum).dump() << "\n";
    }
    return sum.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computes B-polynomials of digraphs and verifies identities between them"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
        sub->add_flag("--pretty", o.pretty, "Same as --format pretty");
    };
    auto embedding = [&](CLI::App* sub) {
        sub->add_option("--rotation", o.rotation, "Rotation system as JSON text or a file");
        sub->add_flag("--planar", o.planar, "Use the first planar rotation system");
    };

    std::string target;
    auto* compute = app.add_subcommand("compute", "Compute a polynomial or report for one input");
    compute->add_option("target", target, "b, qsym, potts, tutte, t1, t2, chromatic, bfamily, dual or structure")
        ->required();
    compute->add_option("input", o.input, "Input file or inline text")->required();
    compute->add_option("--q-list", o.q_list, "Evaluate b by direct enumeration at these q")->delimiter(',');
    compute->add_option("--word", o.word, "Sign word over {+,-} for bfamily");
    compute->add_option("--index", o.family_index, "Family index m for bfamily")->check(CLI::PositiveNumber);
    compute->add_option("--work-bound", o.work_bound, "Maximum enumeration work");
    common(compute);
    embedding(compute);

    std::vector<std::string> check_args;
    std::string check_ids;
    auto* check = app.add_subcommand("check", "Run identity checks on one input");
    check->add_option("args", check_args, "[check ids] input")->required()->expected(1, 2);
    check->add_option("--checks", check_ids, "Comma-separated check ids (default: all)");
    check->add_option("--word", o.word, "Sign word for the w-checks");
    common(check);
    embedding(check);

    SurveyOptions so;
    std::string survey_ids;
    bool progress = false;
    auto* survey = app.add_subcommand("survey", "Run the check registry over all small inputs");
    survey->add_option("--n", so.max_vertices, "Maximum number of vertices")->check(CLI::Range(1, 6));
    survey->add_option("--m", so.max_arcs, "Maximum number of arcs")->check(CLI::Range(0, 12));
    survey->add_option("--graph-edges", so.max_graph_edges, "Maximum number of graph edges");
    survey->add_option("--tree-vertices", so.max_tree_vertices, "Maximum number of tree vertices");
    survey->add_option("--jobs", so.jobs, "Worker threads")->check(CLI::PositiveNumber);
    survey->add_option("--checks", survey_ids, "Comma-separated check ids (default: all)");
    survey->add_option("--word-length", so.limits.max_word_length, "Maximum sign word length");
    survey->add_flag("--progress", progress, "Show progress on standard error");
    common(survey);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (compute->parsed()) return cmd_compute(target, o);
        if (check->parsed()) {
            if (check_args.size() == 2) {
                check_ids = check_args[0];
                o.input = check_args[1];
            } else {
                o.input = check_args[0];
            }
            return cmd_check(check_ids, o);
        }
        return cmd_survey(so, survey_ids, progress, o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const ArithmeticError& e) {
        std::cerr << "arithmetic: " << e.what() << "\n";
        return kArithmetic;
    }
}
