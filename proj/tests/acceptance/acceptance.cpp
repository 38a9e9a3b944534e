#include "fixtures.hpp"

#include "bpoly/bcore.hpp"
#include "bpoly/error.hpp"
#include "bpoly/qsym.hpp"
#include "bpoly/survey.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

using namespace bpoly;
using fx::c;
using fx::q;
using fx::x;
using fx::y;
using fx::z;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

bool same(const MultiPoly& a, const MultiPoly& b) { return a.trimmed() == b.trimmed(); }

std::vector<Digraph> survey_digraphs(int n_max, int m_max) {
    std::vector<Digraph> out;
    for (int n = 1; n <= n_max; ++n) {
        auto ds = enumerate_digraphs(n, m_max);
        out.insert(out.end(), ds.begin(), ds.end());
    }
    return out;
}

QSymFunction M(const Composition& comp, const MultiPoly& k = c(1)) { return QSymFunction::monomial(comp, k); }
QSymFunction F(int n, const Subset& s, const MultiPoly& k = c(1)) { return QSymFunction::fundamental(n, s, k); }

Outcome golden_fixtures() {
    Outcome o;
    o.expect(b_poly(fx::A1()) == fx::B_A1(), "B of the single arc");
    o.expect(b_poly(fx::T_ac()) == fx::B_Tac(), "B of the transitive triangle");
    o.expect(b_poly(fx::M1_digraph()) == fx::B_M1(), "B of the mixed example's digraph");
    o.expect(b_poly(fx::T_cyc()) == fx::B_Tcyc(), "B of the directed triangle");
    MixedGraph a1 = MixedGraph::oriented(fx::A1());
    o.expect(t_mixed(a1, 1) == (x() * y() + x() - y()) * make_rational(1, 2), "T1 of the single arc");
    o.expect(t_mixed(a1, 2) == x() * make_rational(1, 2), "T2 of the single arc");
    auto X = x(), Y = y();
    MultiPoly t1 = (pow(X, 2) * pow(Y, 2) + c(4) * pow(X, 2) * Y + pow(X, 2) - c(2) * X * pow(Y, 2) + X * Y + X +
                    pow(Y, 2) + Y) *
                   make_rational(1, 6);
    MultiPoly t2 = (c(-1) * pow(X, 2) * pow(Y, 2) + c(2) * pow(X, 2) * Y - X * pow(Y, 2) + c(2) * pow(X, 2) +
                    c(2) * X * Y + c(2) * pow(Y, 2) + c(2) * X + c(2) * Y) *
                   make_rational(1, 12);
    o.expect(t_mixed(fx::M1(), 1) == t1, "T1 of the mixed example");
    o.expect(t_mixed(fx::M1(), 2) == t2, "T2 of the mixed example");
    // The printed T1 of the mixed example is T1 of the transitive triangle.
    MultiPoly printed = (pow(X, 2) * pow(Y, 3) + c(2) * pow(X, 2) * pow(Y, 2) - c(2) * X * pow(Y, 3) +
                         c(2) * pow(X, 2) * Y - X * pow(Y, 2) + pow(Y, 3) + pow(X, 2) - X * Y - pow(Y, 2) + X + Y) *
                        make_rational(1, 6);
    o.expect(t_mixed(MixedGraph::oriented(fx::T_ac()), 1) == printed, "T1 of the transitive triangle");
    return o;
}

CheckReport one(const std::string& id, const CheckInput& in, const CheckParams& p = {}) { return run_check(id, in, p); }

Outcome generating_functions() {
    Outcome o;
    auto both = [&](const CheckReport& r, const MultiPoly& want, const std::string& what) {
        o.expect(r.passed && std::get<MultiPoly>(r.lhs).trimmed() == want.trimmed() &&
                     std::get<MultiPoly>(r.rhs).trimmed() == want.trimmed(),
                 what);
    };
    both(one("gf-acyclic-reorient", fx::T_ac()), c(1) + c(2) * y() + c(2) * pow(y(), 2) + pow(y(), 3),
         "acyclic reorientations of the transitive triangle");
    both(one("gf-cyclic-reorient", fx::T_ac()), y() + pow(y(), 2), "totally cyclic reorientations");
    both(one("gf-acyclic-subgraph", fx::T_cyc()), c(1) + c(3) * y() + c(3) * pow(y(), 2),
         "acyclic subgraphs of the directed triangle");
    both(one("t1-acyclic", fx::M1()), pow(y(), 3) + c(4) * pow(y(), 2) + c(5) * y() + c(1),
         "acyclic subgraphs of the mixed example");
    both(one("gf-cyclic-contract", fx::T_cyc()), pow(c(1) + y(), 3), "totally cyclic contractions");
    return o;
}

Outcome survey_outcome(const SurveySummary& s) {
    Outcome o;
    std::ostringstream d;
    d << s.inputs << " inputs, " << s.reports << " reports, " << s.failures << " failures, " << s.errors.size()
      << " errors, " << static_cast<long>(s.seconds) << " s";
    o.detail = d.str();
    for (const auto& t : s.tallies)
        if (t.passed + t.failed == 0) o.fail("check " + t.check_id + " never applied");
    if (!s.failed.empty()) o.fail(s.failed.front().check_id + " failed on " + s.failed.front().input);
    if (!s.errors.empty()) o.fail(s.errors.front());
    if (o.ok) o.detail = d.str();
    return o;
}

Outcome oracle_equivalence(const std::vector<Digraph>& ds) {
    Outcome o;
    for (const auto& d : ds) {
        MultiPoly b = b_poly(d);
        for (long qv = 1; qv <= 4; ++qv)
            if (!same(b.eval({{"q", Rational(qv)}}), b_eval_direct(d, qv))) {
                o.fail("direct evaluation at q=" + std::to_string(qv) + " on " + render_inline(d));
                return o;
            }
        if (!same(principal_specialization(qsym_b(d)), b)) {
            o.fail("principal specialization on " + render_inline(d));
            return o;
        }
    }
    o.detail = std::to_string(ds.size()) + " digraphs";
    return o;
}

Outcome quasisymmetric_fixtures() {
    Outcome o;
    o.expect(qsym_b(fx::A1()) == M({1, 1}, y() + z()) + M({2}), "monomial expansion of the single arc");
    o.expect(qsym_b(fx::P3()) == M({1, 1, 1}, y() * y() + z() * z() + c(4) * y() * z()) +
                                     M({1, 2}, y() * z() + y() + z()) + M({2, 1}, y() * z() + y() + z()) + M({3}),
             "monomial expansion of the path");
    o.expect(qsym_b(fx::Join()) == M({1, 1, 1}, c(2) * (y() * y() + z() * z() + y() * z())) +
                                       M({1, 2}, z() * z() + c(2) * y()) + M({2, 1}, y() * y() + c(2) * z()) + M({3}),
             "monomial expansion of the join");
    MultiPoly top = y() * y() + z() * z() + c(2) * y() * z() - c(2) * y() - c(2) * z() + c(1);
    o.expect(basis_change(qsym_b(fx::P3()), QBasis::F) ==
                 F(3, {1, 2}, top) + F(3, {1}, y() * z() + y() + z() - c(1)) +
                     F(3, {2}, y() * z() + y() + z() - c(1)) + F(3, {}),
             "fundamental expansion of the path");
    o.expect(basis_change(qsym_b(fx::Join()), QBasis::F) ==
                 F(3, {1, 2}, top) + F(3, {1}, z() * z() + c(2) * y() - c(1)) +
                     F(3, {2}, y() * y() + c(2) * z() - c(1)) + F(3, {}),
             "fundamental expansion of the join");

    // permutation rows: sigma^{-1}, ascents, Asc(sigma^{-1}), Asc_prec(sigma^{-1})
    std::vector<std::vector<int>> inv{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {3, 1, 2}, {2, 3, 1}, {3, 2, 1}};
    std::vector<Subset> asc_sets{{1, 2}, {1}, {2}, {2}, {1}, {}};
    struct Table {
        Digraph d;
        PartialOrder order;
        std::vector<int> ascents;
        std::vector<Subset> prec;
        QSymFunction sw;
    };
    std::vector<Table> tables{
        {fx::P3(), PartialOrder(3, {{1, 3}}), {2, 1, 1, 1, 1, 0}, {{}, {1}, {2}, {}, {}, {}},
         F(3, {}, pow(y() + c(1), 2)) + F(3, {1}, y()) + F(3, {2}, y())},
        {fx::Join(), PartialOrder(3, {{1, 2}}), {2, 1, 2, 0, 1, 0}, {{1}, {}, {}, {2}, {}, {}},
         F(3, {1}, y() * y()) + F(3, {}, c(2) * y() + y() * y() + c(1)) + F(3, {2})}};
    for (const auto& t : tables) {
        std::vector<PermutationRow> rows;
        QSymFunction sw = shareshian_wachs_sum(t.d, t.order, &rows);
        if (rows.size() != 6) {
            o.fail("six permutation rows");
            continue;
        }
        QSymFunction from_rows(3, QBasis::F);
        for (int i = 0; i < 6; ++i) {
            o.expect(rows[i].sigma_inv == inv[i], "inverse permutation row");
            o.expect(rows[i].ascents == t.ascents[i], "ascent row of " + render_inline(t.d));
            o.expect(rows[i].asc_inv == asc_sets[i], "ascent set row");
            o.expect(rows[i].asc_prec_inv == t.prec[i], "order ascent set row of " + render_inline(t.d));
            from_rows = from_rows + F(3, rows[i].asc_inv, pow(y(), rows[i].ascents));
        }
        QSymFunction slice = basis_change(qsym_b(t.d), QBasis::F).map_coeffs([](const MultiPoly& k) {
            return k.eval({{"z", 1}});
        });
        o.expect(from_rows == slice, "row contributions sum to the z = 1 slice");
        o.expect(fundamental_b_acyclic(t.d) == slice, "fundamental formula on " + render_inline(t.d));
        o.expect(sw == t.sw, "order-ascent sum of " + render_inline(t.d));
        o.expect(omega(chromatic_quasisym(t.d)) == sw, "Shareshian-Wachs identity on " + render_inline(t.d));
    }
    return o;
}

// Sum over permutations s of [n] of y^(total - stat(s)) z^stat(s).
MultiPoly permutation_polynomial(int n, const std::function<int(const std::vector<int>&)>& stat, int total) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    MultiPoly out({"y", "z"});
    do {
        int k = stat(s);
        out += pow(y(), total - k) * pow(z(), k);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

Outcome permutation_statistics() {
    Outcome o;
    auto descents = [](const std::vector<int>& s) {
        int k = 0;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) k += s[i] > s[i + 1];
        return k;
    };
    auto major = [](const std::vector<int>& s) {
        int k = 0;
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] > s[i + 1]) k += static_cast<int>(i) + 1;
        return k;
    };
    auto inversions = [](const std::vector<int>& s) {
        int k = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) k += s[i] > s[j];
        return k;
    };
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::pair<int, int>> path, thick, tour;
        for (int i = 1; i < n; ++i) {
            path.emplace_back(i, i + 1);
            for (int k = 0; k < i; ++k) thick.emplace_back(i, i + 1);
        }
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) tour.emplace_back(u, v);
        int total = n * (n - 1) / 2;
        Rational nf(factorial(n));
        auto top = [&](const std::vector<std::pair<int, int>>& arcs) {
            return b_poly(build_digraph(n, arcs)).coeff("q", n) * nf;
        };
        MultiPoly product = c(1);
        for (int k = 1; k <= n; ++k) {
            MultiPoly s;
            for (int i = 1; i <= k; ++i) s += pow(y(), i - 1) * pow(z(), k - i);
            product = product * s;
        }
        std::string at = " at n=" + std::to_string(n);
        o.expect(same(top(path), permutation_polynomial(n, descents, n - 1)), "descent polynomial" + at);
        MultiPoly maj = permutation_polynomial(n, major, total);
        MultiPoly inv = permutation_polynomial(n, inversions, total);
        o.expect(same(top(thick), maj), "major index polynomial" + at);
        o.expect(same(top(tour), inv), "inversion polynomial" + at);
        o.expect(same(maj, product) && same(inv, product), "product formula" + at);
    }
    return o;
}

Outcome readoffs(const std::vector<Digraph>& ds) {
    Outcome o;
    for (const auto& d : ds) {
        std::string on = " on " + render_inline(d);
        StructureReport s = structure(d);
        MultiPoly b = b_poly(d);
        ReadoffReport r = readoff(b, d);
        auto cyc = cyclic_arcs(d);
        o.expect(r.acyclic_arc_count == std::count(cyc.begin(), cyc.end(), false), "acyclic arc count" + on);
        o.expect(r.scc_count == s.scc_count, "strong component count" + on);
        o.expect(r.max_path_condensation == *structure(s.acyclic_quotient).longest_path_arcs + 1,
                 "condensation path length" + on);
        o.expect(r.directed_cut_count == count_directed_cuts(d), "directed cut count" + on);
        QSymReadoff qr = qsym_readoff(qsym_b(d), d);
        o.expect(same(qr.degree_pairs, degree_pair_polynomial(d)), "degree pair polynomial" + on);
        o.expect(qr.directed_cuts_by_size == directed_cuts_by_size(d), "directed cuts by size" + on);
        Integer total = std::accumulate(qr.directed_cuts_by_size.begin(), qr.directed_cuts_by_size.end(), Integer(0));
        o.expect(total == r.directed_cut_count, "directed cuts by size sum" + on);
        o.expect(same(qr.bijection_sum, bijection_sum(d)), "bijection sum" + on);
        if (s.is_acyclic)
            o.expect(qr.profile.has_value() && s.profile.has_value() && *qr.profile == *s.profile, "profile" + on);
        if (!o.ok) return o;
    }
    o.detail = std::to_string(ds.size()) + " digraphs";
    return o;
}

Outcome b_family(const SurveySummary& s) {
    Outcome o;
    const std::set<std::string> ids{"bm-one",      "bw-trivial-words", "bw-divisibility", "coflow",
                                    "bw-eval",     "bw-negation",      "bw-unit",         "tree-invariance",
                                    "potts-one-w", "potts-two-w",      "potts-three-w"};
    long reports = 0;
    for (const auto& t : s.tallies) {
        if (!ids.count(t.check_id)) continue;
        reports += t.passed + t.failed;
        o.expect(t.passed > 0, t.check_id + " never applied");
        o.expect(t.failed == 0, t.check_id + " failed");
    }
    for (const auto& e : s.errors)
        for (const auto& id : ids)
            if (e.rfind(id + " ", 0) == 0) o.fail(e);
    // the first family member and the trivial words, directly
    for (int n = 1; n <= 3; ++n)
        for (const auto& d : enumerate_digraphs(n, 3)) {
            MultiPoly b = b_poly(d);
            o.expect(same(b_m(d, 1).poly.rename("y1", "y").rename("z1", "z"), b), "first family member");
            o.expect(same(b_w(d, SignWord::parse("++")), b), "word ++");
            o.expect(same(b_w(d, SignWord::parse("-")), b), "word -");
        }
    if (o.ok) o.detail = std::to_string(reports) + " family reports";
    return o;
}

Outcome polynomiality(const std::vector<Digraph>& ds) {
    Outcome o;
    long count = 0;
    for (const auto& d : ds) {
        std::vector<MixedGraph> ms = enumerate_pairings(d);
        ms.push_back(MixedGraph::oriented(d));
        for (const auto& m : ms) {
            MultiPoly b = b_poly(m.digraph());
            for (int which : {1, 2}) {
                try {
                    which == 1 ? t_mixed(m, 1, b) : t_mixed(m, 2);
                    ++count;
                } catch (const ArithmeticError& e) {
                    o.fail(std::string(e.what()) + " on " + render_inline(m));
                    return o;
                }
            }
        }
    }
    o.detail = std::to_string(count) + " divisions";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> only;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    SurveyOptions survey_opts;
    app.add_option("--only", only, "Criteria to run")->delimiter(',');
    app.add_option("--jobs", jobs, "Survey worker threads");
    app.add_option("--n", survey_opts.max_vertices, "Survey vertex bound");
    app.add_option("--m", survey_opts.max_arcs, "Survey arc bound");
    CLI11_PARSE(app, argc, argv);
    survey_opts.jobs = jobs;

    auto wanted = [&](int k) { return only.empty() || std::find(only.begin(), only.end(), k) != only.end(); };
    std::vector<Digraph> ds;
    if (wanted(4) || wanted(7) || wanted(9)) ds = survey_digraphs(survey_opts.max_vertices, survey_opts.max_arcs);
    std::optional<SurveySummary> survey;
    auto get_survey = [&]() -> const SurveySummary& {
        if (!survey) survey = run_survey(survey_opts);
        return *survey;
    };

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"golden fixtures", golden_fixtures},
        {"generating functions", generating_functions},
        {"identity survey", [&] { return survey_outcome(get_survey()); }},
        {"oracle equivalence", [&] { return oracle_equivalence(ds); }},
        {"quasisymmetric fixtures", quasisymmetric_fixtures},
        {"permutation statistics", permutation_statistics},
        {"readoffs", [&] { return readoffs(ds); }},
        {"b-family", [&] { return b_family(get_survey()); }},
        {"polynomiality guard", [&] { return polynomiality(ds); }},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int k = static_cast<int>(i) + 1;
        if (!wanted(k)) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all &= o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << k << " " << criteria[i].first;
        if (!o.detail.empty()) std::cout << ": " << o.detail;
        std::cout << " (" << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
    }
    return all ? 0 : 1;
}
