#include <doctest.h>

#include <cmath>

#include "ggt/packing/packing.hpp"
#include "ggt/packing/sol.hpp"

using namespace ggt;

TEST_CASE("clique solvers agree with brute force") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        int n = static_cast<int>(rng.next_int(4, 14));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_unit() < 0.4) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges);

        // Brute-force oracle over all subsets.
        int best = 0;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> verts;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) verts.push_back(i);
            bool clique = true;
            for (std::size_t a = 0; a < verts.size() && clique; ++a)
                for (std::size_t b = a + 1; b < verts.size() && clique; ++b) {
                    const auto& lst = g.adj[verts[a]];
                    if (!std::binary_search(lst.begin(), lst.end(), verts[b])) clique = false;
                }
            if (clique) best = std::max(best, static_cast<int>(verts.size()));
        }
        CliqueResult exact = max_clique_exact(g);
        CHECK(static_cast<int>(exact.vertices.size()) == best);
        CliqueResult greedy = max_clique_greedy(g);
        CHECK(static_cast<int>(greedy.vertices.size()) <= best);
        CliqueResult dispatch = max_clique(g);
        CHECK(static_cast<int>(dispatch.vertices.size()) == best);
    }
}

TEST_CASE("packing profile basics") {
    // Finite index: H = 2Z inside Z, index 2; N_hat(r) <= 2 for every r.
    Group z1 = parse_group("Zn:1");
    DistanceBall b = word_metric_ball(z1, 8);
    CosetIndex idx(b, resolve_subgroup(z1, {parse_elem(z1, "2")}));
    CHECK(idx.rep_ids().size() == 2);
    PackingEntry e = packing_profile(idx, 3.0);
    CHECK(e.n_hat <= 2);
    CHECK(e.exact);

    // Normal with abelian quotient at r = 1: distinct cosets are >= 1 apart,
    // so no edges and N_hat = 1.
    Group z2 = parse_group("Zn:2");
    DistanceBall b2 = word_metric_ball(z2, 6);
    CosetIndex idx2(b2, resolve_subgroup(z2, {parse_elem(z2, "1,0")}));
    PackingEntry e2 = packing_profile(idx2, 1.0);
    CHECK(e2.n_hat == 1);
    CHECK(e2.truncated_pairs == 0);
}

TEST_CASE("packing stabilization for the cat map") {
    Group p = parse_group("poly:2:2,1;1,1");
    Subgroup h = resolve_subgroup(p, {parse_elem(p, "t")});
    DistanceBall b6 = word_metric_ball(p, 6);
    DistanceBall b8 = word_metric_ball(p, 8);
    CosetIndex i6(b6, h);
    CosetIndex i8(b8, h);
    PackingEntry p6 = packing_profile(i6, 3.0);
    PackingEntry p8 = packing_profile(i8, 3.0);
    CHECK(p6.n_hat >= 1);
    CHECK(p6.n_hat == p8.n_hat);  // stabilization at small r
    CHECK(p6.unconfirmed_reps == 0);
    CHECK(p8.unconfirmed_reps == 0);
}

TEST_CASE("growth series") {
    // H = G: constant 1.
    Group z1 = parse_group("Zn:1");
    DistanceBall b = word_metric_ball(z1, 6);
    CosetIndex idx(b, resolve_subgroup(z1, {parse_elem(z1, "1")}));
    GrowthSeries s = coset_growth(idx, 6);
    for (long long c : s.counts) CHECK(c == 1);
    CHECK(s.fit.degenerate);
    CHECK(s.fit.alpha == doctest::Approx(1.0));

    // G = Z^2, H = Z x {0}: counts grow linearly, matching the quotient Z.
    Group z2 = parse_group("Zn:2");
    DistanceBall b2 = word_metric_ball(z2, 8);
    CosetIndex idx2(b2, resolve_subgroup(z2, {parse_elem(z2, "1,0")}));
    GrowthSeries s2 = coset_growth(idx2, 8);
    // d(H, (0,y)H) = |y|; count(r) = #{|y| < r} = 2r - 1.
    Group zq = parse_group("Zn:1");
    for (std::size_t i = 0; i < s2.counts.size(); ++i) {
        int r = s2.radii[i];
        DistanceBall qb = word_metric_ball(zq, r - 1);
        CHECK(s2.counts[i] == static_cast<long long>(qb.size()));
    }
}

TEST_CASE("growth rate fit") {
    // Exact geometric: counts 1,2,4,...
    std::vector<int> r{1, 2, 3, 4, 5, 6, 7};
    std::vector<long long> c{1, 2, 4, 8, 16, 32, 64};
    GrowthFit f = growth_rate_fit(r, c, 3);
    CHECK(f.alpha == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(f.residual < 1e-12);
    CHECK(f.r_squared > 1.0 - 1e-12);
    CHECK(f.equivalence_c == 1);

    // Constant series: alpha = 1 with the degenerate flag.
    std::vector<long long> cc{5, 5, 5, 5, 5, 5, 5};
    GrowthFit fc = growth_rate_fit(r, cc, 3);
    CHECK(fc.degenerate);
    CHECK(fc.alpha == 1.0);
}

TEST_CASE("cat map growth is at most exponential with alpha > 1") {
    Group p = parse_group("poly:2:2,1;1,1");
    DistanceBall b = word_metric_ball(p, 8);
    CosetIndex idx(b, resolve_subgroup(p, {parse_elem(p, "t")}));
    GrowthSeries s = coset_growth(idx, 8);
    for (std::size_t i = 1; i < s.counts.size(); ++i) CHECK(s.counts[i] >= s.counts[i - 1]);
    CHECK(s.counts[0] == 1);  // count(1): only the base coset at distance 0
    CHECK(s.fit.alpha > 1.0);
}

TEST_CASE("sol lower bound") {
    SolPoint o{0, 0, 0};
    CHECK(sol_lower_bound(o, SolPoint{1, 1, 0}) == 0.0);
    CHECK(sol_lower_bound(o, SolPoint{8, 0, 0}) ==
          doctest::Approx(2.0 * std::log(8.0)).epsilon(1e-14));
    // Symmetry.
    SolPoint a{3, -2, 0}, bpt{-1, 5, 0};
    CHECK(sol_lower_bound(a, bpt) == sol_lower_bound(bpt, a));
    CHECK_THROWS_AS(sol_lower_bound(SolPoint{0, 0, 1}, o), validation_error);
}

TEST_CASE("sol upper bound") {
    // Identical points.
    SolPathResult same = sol_distance_upper(SolPoint{1, 2, 3}, SolPoint{1, 2, 3}, 8);
    CHECK(same.length == doctest::Approx(0.0));

    // Pure vertical translation is exactly |h|.
    SolPathResult vert = sol_distance_upper(SolPoint{0, 0, 0}, SolPoint{0, 0, 5}, 16);
    CHECK(vert.length == doctest::Approx(5.0).epsilon(1e-9));

    // Horizontal (8,0): upper must dominate the lower bound 2 log 8.
    SolPathResult horiz = sol_distance_upper(SolPoint{0, 0, 0}, SolPoint{8, 0, 0}, 24);
    CHECK(horiz.length >= 2.0 * std::log(8.0));
    CHECK(horiz.length < 12.0);  // and the optimizer should do far better than the flat path

    // Consistency on random pairs.
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        SolPoint p1{static_cast<double>(rng.next_int(-30, 30)),
                    static_cast<double>(rng.next_int(-30, 30)), 0};
        SolPoint p2{static_cast<double>(rng.next_int(-30, 30)),
                    static_cast<double>(rng.next_int(-30, 30)), 0};
        SolPathResult up = sol_distance_upper(p1, p2, 16, 25);
        CHECK(up.length >= sol_lower_bound(p1, p2) - 1e-12);
    }
}

TEST_CASE("sol embedding") {
    IntAutomorphism cat = IntAutomorphism::from_string("2,1;1,1");
    SolEmbedding emb = sol_embedding(cat);
    const double lambda = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(emb.lambda == doctest::Approx(lambda).epsilon(1e-12));

    // Identity element maps to the origin.
    SolPoint o = sol_embed(0, 0, 0, emb);
    CHECK(o.x == 0.0);
    CHECK(o.y == 0.0);
    CHECK(o.z == 0.0);

    // t maps to (0, 0, log lambda).
    SolPoint t = sol_embed(0, 0, 1, emb);
    CHECK(t.z == doctest::Approx(std::log(lambda)).epsilon(1e-12));

    // f sends v_- to e1 and v_+ to e2 (within 1e-9).
    double fx = emb.f[0] * emb.v_minus[0] + emb.f[1] * emb.v_minus[1];
    double fy = emb.f[2] * emb.v_minus[0] + emb.f[3] * emb.v_minus[1];
    CHECK(fx == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(fy) < 1e-9);
    fx = emb.f[0] * emb.v_plus[0] + emb.f[1] * emb.v_plus[1];
    fy = emb.f[2] * emb.v_plus[0] + emb.f[3] * emb.v_plus[1];
    CHECK(std::abs(fx) < 1e-9);
    CHECK(fy == doctest::Approx(1.0).epsilon(1e-9));

    // e1^k embeds with zero third coordinate; solve the 2x2 system oracle.
    SolPoint e1k = sol_embed(7, 0, 0, emb);
    CHECK(e1k.z == 0.0);
    double ox = 7.0 * emb.f[0];
    double oy = 7.0 * emb.f[2];
    CHECK(e1k.x == doctest::Approx(ox));
    CHECK(e1k.y == doctest::Approx(oy));

    // Hypothesis violations.
    CHECK_THROWS_AS(sol_embedding(IntAutomorphism::from_string("1,1;1,0")), hypothesis_error);
    CHECK_THROWS_AS(sol_embedding(IntAutomorphism::from_string("0,-1;1,0")), hypothesis_error);
}

TEST_CASE("distortion report") {
    IntAutomorphism cat = IntAutomorphism::from_string("2,1;1,1");
    Group p = parse_group("poly:2:2,1;1,1");
    DistanceBall b = word_metric_ball(p, 7);
    DistortionReport rep = distortion_check(cat, 120, 4242, &b);
    CHECK(rep.eq_sqrt2_violations == 0);
    CHECK(rep.eq_log_violations == 0);
    CHECK(rep.sol_chain_violations == 0);
    CHECK(rep.fit_pairs >= 8);
    CHECK(rep.fitted_c > 0);

    // Eq 3.4 on (0,0), (3,4): 5 <= sqrt(2) * 4.
    CHECK(5.0 <= std::sqrt(2.0) * 4.0);
}

TEST_CASE("packing profile monotone in r") {
    Group p = parse_group("poly:2:2,1;1,1");
    DistanceBall b = word_metric_ball(p, 8);
    CosetIndex idx(b, resolve_subgroup(p, {parse_elem(p, "t")}));
    int prev = 0;
    for (double r : {1.0, 2.0, 3.0, 4.0}) {
        PackingEntry e = packing_profile(idx, r, 64);
        CHECK(e.n_hat >= prev);
        CHECK(e.n_hat >= 1);
        prev = e.n_hat;
    }
}
