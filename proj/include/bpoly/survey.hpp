#pragma once

#include "bpoly/identities.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bpoly {

struct SurveyOptions {
    int max_vertices = 4;       // digraphs and graphs
    int max_arcs = 5;           // digraphs
    int max_graph_edges = 4;    // graphs (their doubled digraphs have twice as many arcs)
    int max_tree_vertices = 5;  // trees for orientation-invariance
    int jobs = 1;
    std::vector<std::string> checks;  // empty: the whole registry
    SurveyLimits limits;
    bool digraphs = true, mixed = true, embedded = true, graphs = true;
};

struct CheckTally {
    std::string check_id;
    long passed = 0;
    long failed = 0;
};

struct SurveySummary {
    long inputs = 0;
    long reports = 0;
    long failures = 0;
    std::vector<CheckTally> tallies;        // registry order
    std::vector<CheckReport> failed;        // sorted by (check id, input)
    std::vector<std::string> errors;        // "id on input: message", sorted
    double seconds = 0;
    bool ok() const { return failures == 0 && errors.empty(); }
};

// Survey inputs in a fixed order: digraphs, their pairings, planar
// embeddings of small triangles, paths and loops, graphs, and trees.
std::vector<CheckInput> survey_inputs(const SurveyOptions& opts);

// Runs every selected check on every input; the result does not depend on
// the number of jobs. progress (if given) is called from the calling thread.
SurveySummary run_survey(const SurveyOptions& opts,
                         const std::function<void(long done, long total)>& progress = nullptr);

nlohmann::json to_json(const SurveySummary& s);

}  // namespace bpoly
