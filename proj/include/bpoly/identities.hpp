#pragma once

#include "bpoly/digraph.hpp"
#include "bpoly/embedding.hpp"
#include "bpoly/family.hpp"
#include "bpoly/poly.hpp"
#include "bpoly/qsym.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bpoly {

struct EmbeddedDigraph {
    Digraph digraph;
    RotationSystem rotation;
};

enum class InputKind { Digraph, Mixed, Embedded, Graph };

using CheckInput = std::variant<Digraph, MixedGraph, EmbeddedDigraph, Graph>;

InputKind kind_of(const CheckInput& in);
std::string render_inline(const CheckInput& in);

struct CheckParams {
    std::optional<int> arc;    // arc index; for a pair of opposite arcs, the smaller one
    std::optional<int> block;  // unoriented edge, as an index into blocks()
    int which = 1;             // T^(1) or T^(2)
    bool reversed = false;     // forest expansion with the reversed edge order
    std::optional<SignWord> word;
    std::optional<PartialOrder> order;
    long p = 1;                // band width for coflow evaluation
    std::optional<int> orientation;  // index into the orientations of a graph
};

// Suffix appended to the rendered input, e.g. " [arc 2]"; empty when no
// parameter is set.
std::string render_params(const CheckParams& params);

using CheckValue = std::variant<MultiPoly, QSymFunction>;

struct CheckReport {
    std::string check_id;
    std::string input;
    CheckValue lhs;
    CheckValue rhs;
    bool passed = false;
};

CheckReport make_report(std::string id, std::string input, CheckValue lhs, CheckValue rhs);

struct CheckInfo {
    std::string id;
    InputKind kind;
    std::string summary;
};

struct SurveyLimits {
    int max_arcs_three_way = 8;   // 3^|A| sums
    int max_arcs_two_way = 12;    // 2^|A| sums
    int max_word_length = 2;
};

// Every registered check, in a fixed order.
const std::vector<CheckInfo>& check_registry();
const CheckInfo& find_check(const std::string& id);

// Throws ParseError for an unknown id and PreconditionError when the input
// does not satisfy the check's hypotheses or cost bounds.
CheckReport run_check(const std::string& id, const CheckInput& in, const CheckParams& params = {});

// Parameter sets for which the check applies to the input (empty if none).
std::vector<CheckParams> applicable_params(const std::string& id, const CheckInput& in,
                                           const SurveyLimits& limits = {});
std::vector<CheckReport> run_applicable(const std::string& id, const CheckInput& in,
                                        const SurveyLimits& limits = {});

nlohmann::json to_json(const CheckReport& r);

}  // namespace bpoly
