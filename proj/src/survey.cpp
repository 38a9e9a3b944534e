#include "bpoly/survey.hpp"

#include "bpoly/error.hpp"
#include "bpoly/format.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace bpoly {

namespace {

std::vector<Digraph> orientations_of(const Graph& g) {
    return enumerate_orientations(MixedGraph::from_graph(g));
}

bool is_tree(const Graph& g) {
    if (g.num_edges() != g.num_vertices() - 1) return false;
    for (auto [u, v] : g.edges())
        if (u == v) return false;
    return count_components(g.oriented()) == 1;
}

struct InputResult {
    std::vector<long> passed, failed;
    std::vector<CheckReport> failures;
    std::vector<std::string> errors;
    long reports = 0;
};

InputResult run_input(const CheckInput& in, const std::vector<std::string>& ids, const SurveyLimits& limits) {
    InputResult r;
    r.passed.assign(ids.size(), 0);
    r.failed.assign(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        std::vector<CheckParams> params;
        try {
            params = applicable_params(ids[i], in, limits);
        } catch (const std::exception& e) {
            r.errors.push_back(ids[i] + " on " + render_inline(in) + ": " + e.what());
            continue;
        }
        for (const auto& p : params) {
            try {
                CheckReport rep = run_check(ids[i], in, p);
                ++r.reports;
                if (rep.passed) {
                    ++r.passed[i];
                } else {
                    ++r.failed[i];
                    r.failures.push_back(std::move(rep));
                }
            } catch (const std::exception& e) {
                ++r.failed[i];
                r.errors.push_back(ids[i] + " on " + render_inline(in) + render_params(p) + ": " + e.what());
            }
        }
    }
    return r;
}

}  // namespace

std::vector<CheckInput> survey_inputs(const SurveyOptions& opts) {
    std::vector<CheckInput> out;
    if (opts.digraphs || opts.mixed) {
        for (int n = 1; n <= opts.max_vertices; ++n)
            for (auto& d : enumerate_digraphs(n, opts.max_arcs)) {
                if (opts.mixed)
                    for (auto& m : enumerate_pairings(d)) out.emplace_back(std::move(m));
                if (opts.digraphs) out.emplace_back(std::move(d));
            }
    }
    if (opts.embedded) {
        std::vector<Graph> shapes{
            Graph(3, {{1, 2}, {2, 3}, {3, 1}}),  // triangle
            Graph(2, {{1, 2}}),                  // paths
            Graph(3, {{1, 2}, {2, 3}}),
            Graph(1, {{1, 1}}),                  // loop
        };
        std::set<std::string> seen;  // both orientations of a loop give the same digraph
        for (const auto& g : shapes)
            for (const auto& d : orientations_of(g))
                for (auto& rot : planar_rotation_systems(d)) {
                    CheckInput in = EmbeddedDigraph{d, std::move(rot)};
                    if (seen.insert(render_inline(in)).second) out.push_back(std::move(in));
                }
    }
    if (opts.graphs) {
        for (int n = 1; n <= opts.max_vertices; ++n)
            for (auto& g : enumerate_graphs(n, opts.max_graph_edges)) out.emplace_back(std::move(g));
        for (int n = opts.max_vertices + 1; n <= opts.max_tree_vertices; ++n)
            for (auto& g : enumerate_graphs(n, n - 1))
                if (is_tree(g)) out.emplace_back(std::move(g));
    }
    return out;
}

SurveySummary run_survey(const SurveyOptions& opts, const std::function<void(long, long)>& progress) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> ids = opts.checks;
    if (ids.empty())
        for (const auto& info : check_registry()) ids.push_back(info.id);
    for (const auto& id : ids) find_check(id);

    std::vector<CheckInput> inputs = survey_inputs(opts);
    std::vector<InputResult> results(inputs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<long> done{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= inputs.size()) return;
            results[i] = run_input(inputs[i], ids, opts.limits);
            ++done;
        }
    };
    int jobs = std::max(1, opts.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    if (progress) {
        // the calling thread reports progress while helping out
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= inputs.size()) break;
            results[i] = run_input(inputs[i], ids, opts.limits);
            progress(++done, static_cast<long>(inputs.size()));
        }
    } else {
        worker();
    }
    for (auto& t : pool) t.join();

    SurveySummary s;
    s.inputs = static_cast<long>(inputs.size());
    for (const auto& id : ids) s.tallies.push_back({id, 0, 0});
    for (auto& r : results) {
        s.reports += r.reports;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            s.tallies[i].passed += r.passed[i];
            s.tallies[i].failed += r.failed[i];
            s.failures += r.failed[i];
        }
        for (auto& f : r.failures) s.failed.push_back(std::move(f));
        for (auto& e : r.errors) s.errors.push_back(std::move(e));
    }
    std::stable_sort(s.failed.begin(), s.failed.end(), [](const CheckReport& a, const CheckReport& b) {
        return std::tie(a.check_id, a.input) < std::tie(b.check_id, b.input);
    });
    std::sort(s.errors.begin(), s.errors.end());
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

nlohmann::json to_json(const SurveySummary& s) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& t : s.tallies) checks.push_back({{"check", t.check_id}, {"passed", t.passed}, {"failed", t.failed}});
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& r : s.failed) failed.push_back(to_json(r));
    return {{"inputs", s.inputs}, {"reports", s.reports}, {"failures", s.failures}, {"checks", checks},
            {"failed", failed}, {"errors", s.errors}};
}

}  // namespace bpoly
