#include "fixtures.hpp"

#include "bpoly/survey.hpp"

#include <doctest.h>

using namespace bpoly;

namespace {

SurveyOptions small(int n, int m) {
    SurveyOptions o;
    o.max_vertices = n;
    o.max_arcs = m;
    o.max_graph_edges = m;
    o.max_tree_vertices = n;
    return o;
}

long tally(const SurveySummary& s, const std::string& id) {
    for (const auto& t : s.tallies)
        if (t.check_id == id) return t.passed + t.failed;
    return -1;
}

}  // namespace

TEST_CASE("two-vertex survey passes") {
    SurveyOptions o = small(2, 2);
    long digraphs = 0;
    for (const auto& in : survey_inputs(o))
        if (const auto* d = std::get_if<Digraph>(&in)) digraphs += d->num_vertices() == 2;
    // multisets of at most two arcs over the four arc slots of two vertices
    CHECK(digraphs == 15);
    SurveySummary s = run_survey(o);
    CHECK(s.ok());
    CHECK(s.reports > 0);
}

TEST_CASE("survey output does not depend on the number of jobs") {
    SurveyOptions o = small(2, 2);
    std::string one = to_json(run_survey(o)).dump();
    o.jobs = 3;
    CHECK(to_json(run_survey(o)).dump() == one);
}

TEST_CASE("restricted surveys") {
    SurveyOptions o = small(3, 3);
    o.checks = {"rec-arc"};
    SurveySummary s = run_survey(o);
    CHECK(s.ok());
    CHECK(tally(s, "rec-arc") > 0);
    CHECK(s.tallies.size() == 1);

    SurveyOptions loops = small(1, 1);
    loops.checks = {"loop-deletion"};
    SurveySummary l = run_survey(loops);
    CHECK(l.ok());
    // the bare loop and the embedded loop
    CHECK(tally(l, "loop-deletion") == 2);
}

TEST_CASE("a wrong identity is reported as a failure") {
    // arc recurrence with the sign of z flipped in the contraction term
    Digraph d = fx::A1();
    MultiPoly y = fx::y(), z = fx::z();
    MultiPoly lhs = b_poly(d) + b_poly(modify(d, {}, {}, {0}));
    MultiPoly wrong = (y + z) * b_poly(modify(d, {0}, {}, {})) + (fx::c(2) - y + z) * b_poly(modify(d, {}, {0}, {}));
    CHECK_FALSE(make_report("rec-arc", "A1", lhs, wrong).passed);
    CheckParams p;
    p.arc = 0;
    CHECK(run_check("rec-arc", d, p).passed);
}
