#include "fixtures.hpp"

#include "bpoly/error.hpp"
#include "bpoly/identities.hpp"

#include <doctest.h>

#include <map>

using namespace bpoly;
using fx::c;
using fx::y;

namespace {

MultiPoly poly(const CheckReport& r, bool left) { return std::get<MultiPoly>(left ? r.lhs : r.rhs); }

void expect_both(const CheckReport& r, const MultiPoly& value) {
    CHECK(r.passed);
    CHECK(poly(r, true) == value);
    CHECK(poly(r, false) == value);
}

// Runs every applicable registry check of the input's kind and returns the failures.
std::vector<std::string> failures(const CheckInput& in, const SurveyLimits& limits = {}) {
    std::vector<std::string> out;
    for (const auto& info : check_registry()) {
        if (info.kind != kind_of(in)) continue;
        for (const auto& r : run_applicable(info.id, in, limits))
            if (!r.passed) out.push_back(r.check_id + " on " + r.input);
    }
    return out;
}

}  // namespace

TEST_CASE("generating functions on the triangles") {
    expect_both(run_check("gf-acyclic-reorient", fx::T_ac()), c(1) + c(2) * y() + c(2) * pow(y(), 2) + pow(y(), 3));
    expect_both(run_check("gf-cyclic-reorient", fx::T_ac()), y() + pow(y(), 2));
    expect_both(run_check("gf-acyclic-subgraph", fx::T_cyc()), c(1) + c(3) * y() + c(3) * pow(y(), 2));
    expect_both(run_check("gf-cyclic-contract", fx::T_cyc()), pow(c(1) + y(), 3));
}

TEST_CASE("orientation counts and acyclic subgraphs of the mixed example") {
    CheckParams t1;
    CheckParams t2;
    t2.which = 2;
    expect_both(run_check("t20", fx::M1(), t1), c(1));
    expect_both(run_check("t20", fx::M1(), t2), c(1));
    expect_both(run_check("t02", fx::M1(), t2), c(1));
    expect_both(run_check("t1-acyclic", fx::M1()), pow(y(), 3) + c(4) * pow(y(), 2) + c(5) * y() + c(1));
}

TEST_CASE("edge recurrence on the unoriented edge of the mixed example") {
    CheckParams p;
    p.arc = 0;
    CheckReport r = run_check("rec-edge", fx::M1_digraph(), p);
    CHECK(r.passed);
    CHECK(poly(r, true) == fx::B_M1());
    CHECK(r.input.find("[arc 0]") != std::string::npos);
}

TEST_CASE("planar checks on the triangle embedding") {
    RotationSystem tri({{{0, End::Tail}, {2, End::Head}}, {{1, End::Tail}, {0, End::Head}}, {{2, End::Tail}, {1, End::Head}}});
    EmbeddedDigraph e{fx::T_cyc(), tri};
    CHECK(run_check("planar-duality", e).passed);
    CHECK(run_check("classical-duality", e).passed);
}

TEST_CASE("quasisymmetric and family examples") {
    CheckParams p3;
    p3.order = PartialOrder(3, {{1, 3}});
    CHECK(run_check("shareshian-wachs", fx::P3(), p3).passed);
    CheckParams pj;
    pj.order = PartialOrder(3, {{1, 2}});
    CHECK(run_check("shareshian-wachs", fx::Join(), pj).passed);
    CHECK(run_check("symmetry-forest-quasi", fx::A1()).passed);

    CheckParams w;
    w.word = SignWord::parse("+-");
    CHECK(run_check("potts-one-w", Graph(2, {{1, 2}}), w).passed);
    CHECK(run_check("expansions-w-3", fx::A1(), w).passed);
    for (const char* s : {"+", "-", "++", "+-", "-+", "--"}) {
        w.word = SignWord::parse(s);
        CHECK(run_check("potts-three-w", fx::M1_digraph(), w).passed);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(run_check("no-such-check", fx::A1()), ParseError);
    CHECK_THROWS_AS(find_check("no-such-check"), ParseError);
    CHECK_THROWS_AS(run_check("symmetry-acyclic", fx::T_cyc()), PreconditionError);
    CHECK_THROWS_AS(run_check("planar-duality", fx::A1()), PreconditionError);
    CHECK_THROWS_AS(run_check("myster-4", fx::A1()), PreconditionError);
    Digraph big = build_digraph(2, std::vector<std::pair<int, int>>(9, {1, 2}));
    CHECK_THROWS_AS(run_check("expansions-1", big), PreconditionError);
    CHECK(applicable_params("expansions-1", big).empty());
}

TEST_CASE("report json") {
    CheckReport r = run_check("bm-one", fx::A1());
    auto j = to_json(r);
    CHECK(j["check"] == "bm-one");
    CHECK(j["passed"] == true);
    CHECK(j.contains("lhs"));
    CHECK(j.contains("rhs"));
    CHECK(j["input"] == r.input);
}

TEST_CASE("registry ids are unique") {
    std::map<std::string, int> seen;
    for (const auto& info : check_registry()) CHECK(++seen[info.id] == 1);
    CHECK(seen.size() >= 50);
}

TEST_CASE("every applicable check passes on small digraphs") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& d : enumerate_digraphs(n, 3)) {
            auto f = failures(d);
            CHECK_MESSAGE(f.empty(), (f.empty() ? "" : f.front()));
            for (const auto& m : enumerate_pairings(d)) {
                auto fm = failures(m);
                CHECK_MESSAGE(fm.empty(), (fm.empty() ? "" : fm.front()));
            }
        }
}

TEST_CASE("every applicable check passes on small graphs") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& g : enumerate_graphs(n, 2)) {
            auto f = failures(g);
            CHECK_MESSAGE(f.empty(), (f.empty() ? "" : f.front()));
        }
}

TEST_CASE("every applicable check passes on the triangle digraphs") {
    for (const auto& d : {fx::T_ac(), fx::T_cyc(), fx::P3(), fx::Join(), fx::M1_digraph()}) {
        auto f = failures(d);
        CHECK_MESSAGE(f.empty(), (f.empty() ? "" : f.front()));
        for (const auto& rot : planar_rotation_systems(d)) {
            auto fe = failures(EmbeddedDigraph{d, rot});
            CHECK_MESSAGE(fe.empty(), (fe.empty() ? "" : fe.front()));
        }
    }
    auto f = failures(fx::M1());
    CHECK_MESSAGE(f.empty(), (f.empty() ? "" : f.front()));
}
