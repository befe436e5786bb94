#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "semid/parametrize.hpp"

using namespace semid;
using namespace semid::testing;

namespace {

std::vector<MixedGraph> all_graphs_for_test(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) pairs.emplace_back(i, j);
    int p = static_cast<int>(pairs.size());
    std::vector<MixedGraph> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * p)); ++bits) {
        MixedGraph g;
        g.m = m;
        for (int k = 0; k < p; ++k) {
            if (bits & (std::uint64_t{1} << k)) g.directed.push_back(pairs[k]);
            if (bits & (std::uint64_t{1} << (p + k))) g.bidirected.push_back(pairs[k]);
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

TEST_CASE("ring layout: lambda block, omega block, q, sigma block") {
    ParamRing pr = ParamRing::for_graph(parse_graph("3; 1->2 2->3; 2<->3"));
    CHECK(pr.ring.names ==
          std::vector<std::string>{"l12", "l23", "w11", "w22", "w33", "w23", "q", "s11", "s12",
                                   "s13", "s22", "s23", "s33"});
    CHECK(pr.nvars() == 2 + 3 + 1 + 1 + 6);
    CHECK(pr.lambda_var(2, 3) == 1);
    CHECK(pr.omega_var(2, 3) == 5);
    CHECK(pr.q_var() == 6);
    CHECK(pr.sigma_var(1, 3) == 9);
    CHECK(pr.sigma_var(3, 3) == 12);
    CHECK_THROWS_AS(pr.lambda_var(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(pr.omega_var(1, 2), std::invalid_argument);
}

TEST_CASE("instrument graph covariance parametrization") {
    ParamRing pr = ParamRing::for_graph(parse_graph("3; 1->2 2->3; 2<->3"));
    SigmaMap sig = sigma_polys(pr);
    const Ring& r = pr.ring;
    CHECK(sig.at(1, 1) == P(r, "w11"));
    CHECK(sig.at(1, 2) == P(r, "w11*l12"));
    CHECK(sig.at(1, 3) == P(r, "w11*l12*l23"));
    CHECK(sig.at(2, 2) == P(r, "w22 + w11*l12^2"));
    CHECK(sig.at(2, 3) == P(r, "w22*l23 + w11*l12^2*l23 + w23"));
    // Var(X3) = l23^2 Var(X2) + 2 l23 Cov(X2, e3) + Var(e3); the cross term
    // carries the factor 2 because w23 sits at both (2,3) and (3,2) of Omega
    CHECK(sig.at(3, 3) == P(r, "w33 + w22*l23^2 + 2*w23*l23 + w11*l12^2*l23^2"));
}

TEST_CASE("empty and single-edge graphs") {
    ParamRing e = ParamRing::for_graph(parse_graph("2; ;"));
    SigmaMap se = sigma_polys(e);
    CHECK(se.at(1, 1) == P(e.ring, "w11"));
    CHECK(se.at(2, 2) == P(e.ring, "w22"));
    CHECK(se.at(1, 2).is_zero());

    // 2x2 expansion oracle: T = I + Lambda, Sigma = T^T diag(w11,w22) T
    //   = [[w11, w11*l12], [w11*l12, w22 + w11*l12^2]]
    ParamRing s = ParamRing::for_graph(parse_graph("2; 1->2;"));
    SigmaMap ss = sigma_polys(s);
    CHECK(ss.at(1, 1) == P(s.ring, "w11"));
    CHECK(ss.at(1, 2) == P(s.ring, "w11*l12"));
    CHECK(ss.at(2, 2) == P(s.ring, "w22 + w11*l12^2"));
}

TEST_CASE("omega round trip: (I-L)^T Sigma (I-L) restores the omega pattern") {
    auto check_graph = [](const MixedGraph& g) {
        ParamRing pr = ParamRing::for_graph(g);
        SigmaMap sig = sigma_polys(pr);
        const int m = g.m, n = pr.nvars();

        std::vector<std::vector<Polynomial>> smat(
            static_cast<std::size_t>(m), std::vector<Polynomial>(static_cast<std::size_t>(m)));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                smat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    sig.at(i, j);
        std::vector<std::vector<Polynomial>> c(
            static_cast<std::size_t>(m), std::vector<Polynomial>(static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
                Polynomial::constant(n, rat(1));
        for (auto [i, j] : g.directed)
            c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                -Polynomial::variable(n, pr.lambda_var(i, j));

        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                Polynomial acc;
                for (int a = 1; a <= m; ++a)
                    for (int b = 1; b <= m; ++b)
                        acc = acc + c[static_cast<std::size_t>(a - 1)]
                                     [static_cast<std::size_t>(i - 1)] *
                                        smat[static_cast<std::size_t>(a - 1)]
                                            [static_cast<std::size_t>(b - 1)] *
                                        c[static_cast<std::size_t>(b - 1)]
                                         [static_cast<std::size_t>(j - 1)];
                Polynomial expect;
                if (i == j)
                    expect = Polynomial::variable(n, pr.omega_var(i, i));
                else if (g.has_bidirected(std::min(i, j), std::max(i, j)))
                    expect = Polynomial::variable(n, pr.omega_var(i, j));
                CHECK(acc == expect);
            }
    };

    for (int m = 1; m <= 3; ++m)
        for (const auto& g : all_graphs_for_test(m)) check_graph(g);

    std::mt19937_64 rng(8080);
    auto m4 = all_graphs_for_test(4);
    for (int it = 0; it < 300; ++it) check_graph(m4[rng() % m4.size()]);
}

TEST_CASE("total effects and path effects") {
    ParamRing fig3 = ParamRing::for_graph(parse_graph("4; 2->3 2->4 3->4;"));
    CHECK(total_effect_poly(fig3, 2, 4) == P(fig3.ring, "l23*l34 + l24"));
    CHECK(total_effect_poly(fig3, 3, 3) == Polynomial::constant(fig3.nvars(), rat(1)));
    CHECK(total_effect_poly(fig3, 1, 4).is_zero());

    auto pe = path_effect_polys(fig3, 2, 4);
    REQUIRE(pe.size() == 2);
    CHECK(pe[0].first.verts == std::vector<int>{2, 4});
    CHECK(pe[0].second == P(fig3.ring, "l24"));
    CHECK(pe[1].first.verts == std::vector<int>{2, 3, 4});
    CHECK(pe[1].second == P(fig3.ring, "l23*l34"));

    ParamRing single = ParamRing::for_graph(parse_graph("2; 1->2;"));
    CHECK(total_effect_poly(single, 1, 2) == P(single.ring, "l12"));
    CHECK_THROWS_AS(path_effect_polys(single, 2, 2), std::invalid_argument);

    ParamRing chain = ParamRing::for_graph(parse_graph("3; 1->2 2->3;"));
    auto pc = path_effect_polys(chain, 1, 3);
    REQUIRE(pc.size() == 1);
    CHECK(pc[0].second == P(chain.ring, "l12*l23"));
}

TEST_CASE("total effect equals the sum of its path effects") {
    std::mt19937_64 rng(6174);
    auto graphs = all_graphs_for_test(4);
    for (int it = 0; it < 200; ++it) {
        const MixedGraph& g = graphs[rng() % graphs.size()];
        ParamRing pr = ParamRing::for_graph(g);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                Polynomial sum;
                for (auto& [path, poly] : path_effect_polys(pr, i, j)) sum = sum + poly;
                CHECK(sum == total_effect_poly(pr, i, j));
            }
    }
}

TEST_CASE("Sigma(0, I) is the identity") {
    for (const auto& g : all_graphs_for_test(3)) {
        ParamRing pr = ParamRing::for_graph(g);
        SigmaMap sig = sigma_polys(pr);
        std::vector<Rat> point(static_cast<std::size_t>(pr.nvars()), rat(0));
        for (int i = 1; i <= 3; ++i) point[static_cast<std::size_t>(pr.omega_var(i, i))] = rat(1);
        for (int i = 1; i <= 3; ++i)
            for (int j = i; j <= 3; ++j)
                CHECK(sig.at(i, j).eval(point) == (i == j ? rat(1) : rat(0)));
    }
}

TEST_CASE("target enumeration for the instrument graph") {
    ParamRing pr = ParamRing::for_graph(parse_graph("3; 1->2 2->3; 2<->3"));
    auto targets = all_targets(pr);
    std::vector<std::string> names;
    for (const auto& t : targets) names.push_back(t.name());
    CHECK(names == std::vector<std::string>{"l12", "l23", "w11", "w22", "w33", "w23", "TE(1,2)",
                                            "TE(1,3)", "TE(2,3)", "PE(1->2)", "PE(1->2->3)",
                                            "PE(2->3)"});
    // every target polynomial lives in the t-block
    for (const auto& t : targets) {
        CHECK(!t.poly.is_zero());
        for (VarId v = pr.q_var(); v < pr.nvars(); ++v) CHECK_FALSE(t.poly.uses_var(v));
    }
}

TEST_CASE("target enumeration for degenerate and larger graphs") {
    auto empty2 = all_targets(ParamRing::for_graph(parse_graph("2; ;")));
    std::vector<std::string> names;
    for (const auto& t : empty2) names.push_back(t.name());
    CHECK(names == std::vector<std::string>{"w11", "w22"});

    // Brito graph: 3 lambdas, 4 diagonal + 3 off-diagonal omegas, 6 total
    // effects along the chain, 6 path effects
    ParamRing brito =
        ParamRing::for_graph(parse_graph("4; 1->2 2->3 3->4; 1<->2 1<->3 1<->4"));
    auto targets = all_targets(brito);
    int nd = 0, nw = 0, nt = 0, np = 0;
    for (const auto& t : targets) {
        nd += t.kind == TargetKind::direct_effect;
        nw += t.kind == TargetKind::omega_entry;
        nt += t.kind == TargetKind::total_effect;
        np += t.kind == TargetKind::path_effect;
    }
    CHECK(nd == 3);
    CHECK(nw == 7);
    CHECK(nt == 6);
    CHECK(np == 6);
}

TEST_CASE("omega back-solve") {
    MixedGraph g = parse_graph("3; 1->2 2->3; 2<->3");
    ParamRing pr = ParamRing::for_graph(g);
    SigmaMap sig = sigma_polys(pr);

    // theta: w11=1, w22=1, w23=0, w33=1, l12=2, l23=3
    std::vector<Rat> theta(static_cast<std::size_t>(pr.nvars()), rat(0));
    theta[static_cast<std::size_t>(pr.omega_var(1, 1))] = rat(1);
    theta[static_cast<std::size_t>(pr.omega_var(2, 2))] = rat(1);
    theta[static_cast<std::size_t>(pr.omega_var(3, 3))] = rat(1);
    theta[static_cast<std::size_t>(pr.omega_var(2, 3))] = rat(0);
    theta[static_cast<std::size_t>(pr.lambda_var(1, 2))] = rat(2);
    theta[static_cast<std::size_t>(pr.lambda_var(2, 3))] = rat(3);

    std::vector<std::vector<Rat>> smat(3, std::vector<Rat>(3));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            smat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                sig.at(i, j).eval(theta);

    auto omega = omega_backsolve_numeric(
        g, smat, {{{1, 2}, rat(2)}, {{2, 3}, rat(3)}});
    CHECK(omega[0][0] == rat(1));
    CHECK(omega[1][1] == rat(1));
    CHECK(omega[2][2] == rat(1));
    CHECK(omega[1][2] == rat(0));
    CHECK(omega[0][1] == rat(0));
    CHECK(omega[0][2] == rat(0));

    // Lambda = 0 leaves Sigma unchanged
    std::vector<std::vector<Rat>> id3(3, std::vector<Rat>(3, rat(0)));
    for (int i = 0; i < 3; ++i) id3[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = rat(1);
    CHECK(omega_backsolve_numeric(parse_graph("3; ;"), id3, {}) == id3);

    auto bad = id3;
    bad[0][1] = rat(1);
    CHECK_THROWS_AS(omega_backsolve_numeric(g, bad, {}), std::invalid_argument);
    auto notpd = id3;
    notpd[0][0] = rat(-1);
    CHECK_THROWS_AS(omega_backsolve_numeric(g, notpd, {}), std::invalid_argument);
    CHECK_THROWS_AS(omega_backsolve_numeric(g, id3, {{{1, 3}, rat(1)}}),
                    std::invalid_argument);
}
