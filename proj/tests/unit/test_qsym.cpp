#include "fixtures.hpp"

#include "bpoly/error.hpp"
#include "bpoly/qsym.hpp"

#include <doctest.h>

#include <random>

using namespace bpoly;
using fx::c;
using fx::q;
using fx::y;
using fx::z;

namespace {

QSymFunction M(const Composition& comp, const MultiPoly& k = c(1)) { return QSymFunction::monomial(comp, k); }
QSymFunction F(int n, const Subset& s, const MultiPoly& k = c(1)) { return QSymFunction::fundamental(n, s, k); }

QSymFunction random_qsym(std::mt19937& rng, int n, QBasis basis) {
    std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2);
    QSymFunction f(n, basis);
    for (const auto& comp : compositions(n)) {
        MultiPoly k = c(coef(rng)) * pow(y(), ex(rng)) + c(coef(rng)) * pow(z(), ex(rng));
        f.add(basis == QBasis::M ? comp : composition_to_subset(comp), k);
    }
    return f;
}

}  // namespace

TEST_CASE("monomial expansions of the three small digraphs") {
    CHECK(qsym_b(fx::A1()) == M({1, 1}, y() + z()) + M({2}));
    CHECK(qsym_b(fx::P3()) == M({1, 1, 1}, y() * y() + z() * z() + c(4) * y() * z()) +
                                  M({1, 2}, y() * z() + y() + z()) + M({2, 1}, y() * z() + y() + z()) + M({3}));
    CHECK(qsym_b(fx::Join()) == M({1, 1, 1}, c(2) * (y() * y() + z() * z() + y() * z())) +
                                    M({1, 2}, z() * z() + c(2) * y()) + M({2, 1}, y() * y() + c(2) * z()) + M({3}));
}

TEST_CASE("fundamental expansions of the small digraphs") {
    MultiPoly top = y() * y() + z() * z() + c(2) * y() * z() - c(2) * y() - c(2) * z() + c(1);
    QSymFunction bp = F(3, {1, 2}, top) + F(3, {1}, y() * z() + y() + z() - c(1)) +
                      F(3, {2}, y() * z() + y() + z() - c(1)) + F(3, {});
    QSymFunction got = basis_change(qsym_b(fx::P3()), QBasis::F);
    CHECK(got.basis() == QBasis::F);
    CHECK(got == bp);
    QSymFunction bj = F(3, {1, 2}, top) + F(3, {1}, z() * z() + c(2) * y() - c(1)) +
                      F(3, {2}, y() * y() + c(2) * z() - c(1)) + F(3, {});
    CHECK(basis_change(qsym_b(fx::Join()), QBasis::F) == bj);
    CHECK(basis_change(M({2}), QBasis::F) == F(2, {}) - F(2, {1}));
}

TEST_CASE("basis change round trip") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 5; ++t) {
            QSymFunction f = random_qsym(rng, n, QBasis::M);
            QSymFunction g = basis_change(basis_change(f, QBasis::F), QBasis::M);
            CHECK(g.basis() == QBasis::M);
            CHECK(g.coeffs() == f.coeffs());
        }
}

TEST_CASE("involutions") {
    CHECK(omega(F(3, {1})) == F(3, {2}));
    CHECK(rho(M({1, 2})) == M({2, 1}));
    std::mt19937 rng(5);
    for (int n = 1; n <= 4; ++n) {
        QSymFunction f = random_qsym(rng, n, QBasis::F);
        CHECK(omega(omega(f)) == f);
        CHECK(rho(rho(f)) == f);
        for (int n2 = 1; n2 <= 2; ++n2) {
            QSymFunction g = random_qsym(rng, n2, QBasis::M);
            CHECK(omega(qsym_product(f, g)) == qsym_product(omega(f), omega(g)));
        }
    }
    for (int n = 1; n <= 3; ++n)
        for (const auto& d : enumerate_digraphs(n, 3)) {
            QSymFunction b = qsym_b(d);
            CHECK(rho(b) == b.map_coeffs([](const MultiPoly& k) { return k.rename("y", "t").rename("z", "y").rename("t", "z"); }));
        }
}

TEST_CASE("principal specialization") {
    CHECK(principal_specialization(M({1, 1})) == fx::ff(2) * make_rational(1, 2));
    CHECK(principal_specialization(qsym_b(fx::A1())) == fx::B_A1());
    CHECK(principal_specialization(F(3, {1})) == (q() - c(1)) * q() * (q() + c(1)) * make_rational(1, 6));
    for (int n = 1; n <= 3; ++n)
        for (const auto& d : enumerate_digraphs(n, 3)) {
            QSymFunction b = qsym_b(d);
            MultiPoly bp = b_poly(d);
            CHECK(principal_specialization(b) == bp);
            CHECK(principal_specialization_fundamental(b) == bp);
        }
}

TEST_CASE("fundamental specialization counts weakly increasing words") {
    // F_{3,{1}} at q colors: f1 < f2 <= f3
    for (int qv = 1; qv <= 5; ++qv) {
        long count = 0;
        for (int a = 1; a <= qv; ++a)
            for (int b = a + 1; b <= qv; ++b)
                for (int c3 = b; c3 <= qv; ++c3) ++count;
        CHECK(principal_specialization_fundamental(F(3, {1})).value({{"q", qv}}) == count);
    }
}

TEST_CASE("quasi-shuffle product") {
    CHECK(qsym_product(M({1}), M({1})) == M({1, 1}, c(2)) + M({2}));
    CHECK(qsym_product(M({2}), M({1})) == M({2, 1}) + M({1, 2}) + M({3}));
    CHECK(qsym_b(fx::A1().disjoint_union(Digraph(1, {}))) == qsym_product(qsym_b(fx::A1()), M({1})));
    for (int n = 1; n <= 2; ++n)
        for (const auto& d : enumerate_digraphs(n, 2))
            CHECK(qsym_b(d.disjoint_union(fx::A1())) == qsym_product(qsym_b(d), qsym_b(fx::A1())));
}

TEST_CASE("per-permutation rows of the fundamental expansion") {
    auto rows = permutation_rows(fx::P3());
    REQUIRE(rows.size() == 6);
    std::vector<int> asc{2, 1, 1, 1, 1, 0};
    std::vector<Subset> sets{{1, 2}, {1}, {2}, {2}, {1}, {}};
    std::vector<std::vector<int>> inv{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {3, 1, 2}, {2, 3, 1}, {3, 2, 1}};
    for (int i = 0; i < 6; ++i) {
        CHECK(rows[i].ascents == asc[i]);
        CHECK(rows[i].asc_inv == sets[i]);
        CHECK(rows[i].sigma_inv == inv[i]);
    }
    auto jrows = permutation_rows(fx::Join());
    std::vector<int> jasc{2, 1, 2, 0, 1, 0};
    for (int i = 0; i < 6; ++i) CHECK(jrows[i].ascents == jasc[i]);

    CHECK(fundamental_b_acyclic(Digraph(1, {})) == F(1, {}));
    CHECK_THROWS_AS(fundamental_b_acyclic(build_digraph(2, {{2, 1}})), PreconditionError);
}

TEST_CASE("fundamental expansion matches the z = 1 slice") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& d : enumerate_digraphs(n, n <= 3 ? 4 : 3)) {
            if (!is_compatibly_labeled(d)) continue;
            QSymFunction slice = qsym_b(d).map_coeffs([](const MultiPoly& k) { return k.eval({{"z", 1}}); });
            CHECK(fundamental_b_acyclic(d) == slice);
        }
}

TEST_CASE("Shareshian-Wachs sums on the small digraphs") {
    std::vector<PermutationRow> rows;
    PartialOrder p3(3, {{1, 3}});
    QSymFunction s = shareshian_wachs_sum(fx::P3(), p3, &rows);
    std::vector<Subset> prec{{}, {1}, {2}, {}, {}, {}};
    for (int i = 0; i < 6; ++i) CHECK(rows[i].asc_prec_inv == prec[i]);
    CHECK(s == F(3, {}, pow(y() + c(1), 2)) + F(3, {1}, y()) + F(3, {2}, y()));
    CHECK(omega(chromatic_quasisym(fx::P3())) == s);

    PartialOrder pj(3, {{1, 2}});
    QSymFunction sj = shareshian_wachs_sum(fx::Join(), pj, &rows);
    std::vector<Subset> precj{{1}, {}, {}, {2}, {}, {}};
    for (int i = 0; i < 6; ++i) CHECK(rows[i].asc_prec_inv == precj[i]);
    CHECK(sj == F(3, {1}, y() * y()) + F(3, {}, y() + y() * y() + y() + c(1)) + F(3, {2}));
    CHECK(omega(chromatic_quasisym(fx::Join())) == sj);

    CHECK_THROWS_AS(shareshian_wachs_sum(fx::P3(), PartialOrder(3, {{1, 2}}), nullptr), PreconditionError);
    CHECK_THROWS_AS(PartialOrder(2, {{1, 2}, {2, 1}}), PreconditionError);
}

TEST_CASE("derived quasisymmetric functions") {
    CHECK(chromatic_quasisym(fx::P3()) == chromatic_quasisym_direct(fx::P3()));
    CHECK(chromatic_quasisym(fx::P3()) ==
          M({1, 1, 1}, y() * y() + c(4) * y() + c(1)) + M({1, 2}, y()) + M({2, 1}, y()));
    Graph k2(2, {{1, 2}});
    QSymFunction s = tutte_symmetric(k2);
    CHECK(s == tutte_symmetric_direct(k2));
    CHECK(s.map_coeffs([](const MultiPoly& k) { return k.eval({{"y", -1}}); }) == M({1, 1}, c(2)));
    MultiPoly yz = y() * z();
    QSymFunction rhs = s.map_coeffs([&](const MultiPoly& k) {
        return substitute_rational(k.rename("y", "t"), "t", c(1) - yz, yz, 1);
    });
    CHECK(qsym_b(k2.doubled()) == rhs);
    for (int n = 1; n <= 3; ++n) {
        for (const auto& g : enumerate_graphs(n, 3)) CHECK(tutte_symmetric(g) == tutte_symmetric_direct(g));
        for (const auto& d : enumerate_digraphs(n, 3)) CHECK(chromatic_quasisym(d) == chromatic_quasisym_direct(d));
    }
}

TEST_CASE("quasisymmetric readoffs") {
    auto j = qsym_readoff(qsym_b(fx::Join()), fx::Join());
    CHECK(j.degree_pairs == c(2) * y() + z() * z());
    CHECK(qsym_readoff(qsym_b(fx::P3()), fx::P3()).profile == Composition{1, 1, 1});
    auto a = qsym_readoff(qsym_b(fx::A1()), fx::A1());
    CHECK(a.directed_cuts_by_size[1] == 1);
    for (int n = 1; n <= 3; ++n)
        for (const auto& d : enumerate_digraphs(n, 4)) {
            auto r = qsym_readoff(qsym_b(d), d);
            auto s = structure(d);
            CHECK(r.degree_pairs == degree_pair_polynomial(d));
            CHECK(r.directed_cuts_by_size == directed_cuts_by_size(d));
            CHECK(r.bijection_sum == bijection_sum(d));
            if (s.is_acyclic) {
                REQUIRE(r.profile.has_value());
                CHECK(*r.profile == *s.profile);
            } else {
                CHECK_FALSE(r.profile.has_value());
            }
        }
}

TEST_CASE("quasisymmetric JSON") {
    QSymFunction b = qsym_b(fx::P3());
    auto j = to_json(b);
    CHECK(j["basis"] == "M");
    CHECK(j["coeffs"][0]["key"] == nlohmann::json({1, 1, 1}));
    CHECK(qsym_from_json(j) == b);
    CHECK(qsym_from_json(to_json(basis_change(b, QBasis::F))) == b);
    CHECK_THROWS_AS(qsym_from_json(nlohmann::json::parse(R"({"n":2,"basis":"M","coeffs":[{"key":[3],"poly":{"vars":[],"terms":[]}}]})")),
                    ParseError);
    CHECK(to_pretty(qsym_b(fx::A1())) == "(y + z)*M(1,1) + M(2)");
}
