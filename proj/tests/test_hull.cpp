#include <doctest.h>

#include <cmath>

#include "ggt/hull/metric_checks.hpp"
#include "ggt/hull/subgroup_lab.hpp"

using namespace ggt;

namespace {

ProductPoint pp(const std::string& word, std::vector<Rat> v) {
    ProductPoint p;
    p.tree = TreePoint::vertex(FreeWord::parse(word));
    p.vec = std::move(v);
    return p;
}

// Exact barycentric point-in-triangle oracle for R^2.
bool in_triangle(const VecQ& x, const VecQ& a, const VecQ& b, const VecQ& c) {
    auto cross = [](const VecQ& o, const VecQ& p, const VecQ& q) -> Rat {
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
    };
    Rat d1 = cross(a, b, x), d2 = cross(b, c, x), d3 = cross(c, a, x);
    bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(has_neg && has_pos);
}

}  // namespace

TEST_CASE("tree distances") {
    TreePoint ab = TreePoint::vertex(FreeWord::parse("ab"));
    TreePoint ac = TreePoint::vertex(FreeWord::parse("ac"));
    CHECK(tree_distance(ab, ac) == 2);
    TreePoint e = TreePoint::vertex(FreeWord{});
    CHECK(tree_distance(e, TreePoint::vertex(FreeWord::parse("abAB"))) == 4);
    // Midpoint of [e, aa] is the vertex a.
    TreePoint aa = TreePoint::vertex(FreeWord::parse("aa"));
    TreePoint mid = tree_point_at(e, aa, Rat(1));
    CHECK(mid == TreePoint::vertex(FreeWord::parse("a")));
    // Edge points.
    TreePoint half = tree_point_at(e, aa, Rat(1, 2));
    CHECK(!half.is_vertex());
    CHECK(half.base() == FreeWord{});
    CHECK(half.offset() == Rat(1, 2));
    CHECK(tree_distance(half, aa) == Rat(3, 2));
    // Same-edge distance.
    TreePoint q1 = tree_point_at(e, aa, Rat(1, 4));
    CHECK(tree_distance(half, q1) == Rat(1, 4));
    // Canonical reorientation: walking from aa backwards half a step lands on
    // the edge a -> aa with offset 1/2.
    TreePoint back = tree_point_at(aa, e, Rat(1, 2));
    CHECK(back.base() == FreeWord::parse("a"));
    CHECK(back.offset() == Rat(1, 2));
}

TEST_CASE("tree point_at walks the whole geodesic") {
    TreePoint p = tree_point_at(TreePoint::vertex(FreeWord::parse("ab")),
                                TreePoint::vertex(FreeWord::parse("acB")), Rat(3, 2));
    // Path ab -> a -> ac -> acB has length 4; at 3/2 we are mid-edge a -> ac.
    CHECK(p.base() == FreeWord::parse("a"));
    CHECK(p.offset() == Rat(1, 2));

    // Distances split correctly at every sampled parameter.
    TreePoint from = TreePoint::vertex(FreeWord::parse("ba"));
    TreePoint to = tree_point_at(TreePoint::vertex(FreeWord::parse("bbA")),
                                 TreePoint::vertex(FreeWord::parse("bbAc")), Rat(1, 3));
    Rat total = tree_distance(from, to);
    for (int k = 0; k <= 6; ++k) {
        Rat s = total * frac(k, 6);
        TreePoint midp = tree_point_at(from, to, s);
        CHECK(tree_distance(from, midp) == s);
        CHECK(tree_distance(midp, to) == total - s);
    }
}

TEST_CASE("product geodesics") {
    ProductPoint e0 = pp("e", {Rat(0)});
    ProductPoint a34 = pp("a", {Rat(0)});
    a34.vec = {Rat(3), Rat(4)};
    e0.vec = {Rat(0), Rat(0)};
    GeodesicPath g = product_geodesic(e0, a34);
    CHECK(g.length() == doctest::Approx(std::sqrt(26.0)).epsilon(1e-12));

    // Parameter 1/2 of [(e,0), (aa,(2,0))] = (vertex a, (1,0)).
    ProductPoint from = pp("e", {Rat(0), Rat(0)});
    ProductPoint to = pp("aa", {Rat(2), Rat(0)});
    GeodesicPath g2 = product_geodesic(from, to);
    ProductPoint mid = g2.at(Rat(1, 2));
    CHECK(mid.tree == TreePoint::vertex(FreeWord::parse("a")));
    CHECK(mid.vec[0] == 1);
    CHECK(mid.vec[1] == 0);

    // Same tree point: pure Euclidean segment.
    ProductPoint u = pp("ab", {Rat(0), Rat(0)});
    ProductPoint v = pp("ab", {Rat(4), Rat(0)});
    GeodesicPath g3 = product_geodesic(u, v);
    CHECK(g3.tree_length == 0);
    CHECK(g3.at(Rat(1, 4)).vec[0] == 1);
}

TEST_CASE("conv_step basics") {
    ProductPoint single = pp("e", {Rat(0)});
    ConvStepResult r1 = conv_step({single}, 4);
    CHECK(r1.points.size() == 1);

    ProductPoint other = pp("a", {Rat(1)});
    ConvStepResult r2 = conv_step({single, other}, 5);
    CHECK(r2.points.size() >= 2);
    bool has_from = false, has_to = false;
    for (const auto& p : r2.points) {
        if (p == single) has_from = true;
        if (p == other) has_to = true;
    }
    CHECK(has_from);
    CHECK(has_to);

    // Iterated twice on 3 generic Euclidean points: all samples stay in the
    // triangle (exact membership oracle).
    VecQ a{Rat(0), Rat(0)}, b{Rat(4), Rat(0)}, c{Rat(0), Rat(4)};
    auto mk = [](const VecQ& v) {
        ProductPoint p;
        p.tree = TreePoint::vertex(FreeWord{});
        p.vec = v;
        return p;
    };
    ConvStepResult c1 = conv_step({mk(a), mk(b), mk(c)}, 5);
    ConvStepResult c2 = conv_step(c1.points, 3);
    CHECK(!c2.budget_exceeded);
    std::size_t interior = 0;
    for (const auto& p : c2.points) {
        CHECK(in_triangle(p.vec, a, b, c));
        if (p.vec[0] > 0 && p.vec[1] > 0 && p.vec[0] + p.vec[1] < 4) ++interior;
    }
    CHECK(interior > 0);  // coverage reaches the interior
}

TEST_CASE("caratheodory decomposition") {
    // x in S: weight 1.
    std::vector<VecQ> s{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    ConvexCombination c = caratheodory_decompose({Rat(1), Rat(0)}, s);
    REQUIRE(c.support.size() == 1);
    CHECK(c.support[0] == 1);
    CHECK(c.weights[0] == 1);

    // Center of the unit square: the lexicographic-first answer uses the
    // first diagonal pair among the subsets.
    std::vector<VecQ> square{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    ConvexCombination mid = caratheodory_decompose({Rat(1, 2), Rat(1, 2)}, square);
    CHECK(mid.support.size() == 2);
    CHECK(mid.weights[0] == Rat(1, 2));
    CHECK(mid.weights[1] == Rat(1, 2));

    // Random x in conv of 20 random points in R^3: support <= 4, exact
    // reconstruction, via the exact-LP path.
    Rng rng(31);
    std::vector<VecQ> pts;
    for (int i = 0; i < 20; ++i)
        pts.push_back({Rat(rng.next_int(-8, 8)), Rat(rng.next_int(-8, 8)), Rat(rng.next_int(-8, 8))});
    for (int t = 0; t < 25; ++t) {
        // Convex combination of 4 random points with random rational weights.
        VecQ x{Rat(0), Rat(0), Rat(0)};
        Rat total(0);
        std::vector<Rat> w(4);
        for (auto& wi : w) wi = Rat(rng.next_int(1, 9));
        for (const auto& wi : w) total += wi;
        for (int j = 0; j < 4; ++j) {
            const VecQ& p = pts[static_cast<std::size_t>(rng.next_int(0, 19))];
            for (int cdx = 0; cdx < 3; ++cdx) x[cdx] += w[j] / total * p[cdx];
        }
        ConvexCombination comb = caratheodory_decompose(x, pts);
        CHECK(comb.support.size() <= 4);
        VecQ back{Rat(0), Rat(0), Rat(0)};
        Rat wsum(0);
        for (std::size_t j = 0; j < comb.support.size(); ++j) {
            wsum += comb.weights[j];
            for (int cdx = 0; cdx < 3; ++cdx)
                back[cdx] += comb.weights[j] * pts[comb.support[j]][cdx];
        }
        CHECK(wsum == 1);
        CHECK(back == x);
    }

    // Outside point: separating certificate, verified exactly.
    try {
        caratheodory_decompose({Rat(10), Rat(10)}, s);
        CHECK(false);
    } catch (const not_in_hull_error& e) {
        REQUIRE(e.certificate_c.size() == 2);
        for (const auto& p : s) {
            Rat v = e.certificate_c[0] * p[0] + e.certificate_c[1] * p[1] + e.certificate_c0;
            CHECK(v <= 0);
        }
        Rat vx = e.certificate_c[0] * 10 + e.certificate_c[1] * 10 + e.certificate_c0;
        CHECK(vx > 0);
    }
}

TEST_CASE("brunn witness") {
    // Collinear: depth 1.
    std::vector<VecQ> col{{Rat(0), Rat(0)}, {Rat(2), Rat(2)}, {Rat(4), Rat(4)}};
    BrunnWitness w1 = brunn_witness({Rat(1), Rat(1)}, col);
    CHECK(w1.depth == 1);
    CHECK(w1.evaluate() == VecQ{Rat(1), Rat(1)});

    // The explicit (1/4, 1/4) peeling: depth 2 with midpoints.
    std::vector<VecQ> tri{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    BrunnWitness w2 = brunn_witness({Rat(1, 4), Rat(1, 4)}, tri);
    CHECK(w2.depth == 2);
    CHECK(w2.evaluate() == VecQ{Rat(1, 4), Rat(1, 4)});
    // Root mixes (0,0) with the midpoint (1/2, 1/2) of the other two.
    const auto& root = w2.nodes[w2.root];
    CHECK(root.t == Rat(1, 2));
    CHECK(w2.nodes[root.left].point == VecQ{Rat(0), Rat(0)});
    const auto& inner = w2.nodes[root.right];
    CHECK(inner.t == Rat(1, 2));

    // Barycenter of a 3-simplex in R^3: depth <= 3.
    std::vector<VecQ> simplex{{Rat(0), Rat(0), Rat(0)},
                              {Rat(1), Rat(0), Rat(0)},
                              {Rat(0), Rat(1), Rat(0)},
                              {Rat(0), Rat(0), Rat(1)}};
    BrunnWitness w3 = brunn_witness({Rat(1, 4), Rat(1, 4), Rat(1, 4)}, simplex);
    CHECK(w3.depth <= 3);
    CHECK(w3.evaluate() == VecQ{Rat(1, 4), Rat(1, 4), Rat(1, 4)});

    // Random instances in R^2 and R^3: depth <= n, exact evaluation.
    Rng rng(77);
    for (int n : {2, 3}) {
        for (int t = 0; t < 60; ++t) {
            std::vector<VecQ> pts;
            int count = 4 + static_cast<int>(rng.next_int(0, 4));
            for (int i = 0; i < count; ++i) {
                VecQ p(n);
                for (int c = 0; c < n; ++c) p[c] = Rat(rng.next_int(-6, 6));
                pts.push_back(std::move(p));
            }
            // Random interior-ish point: average of three of them.
            VecQ x(n, Rat(0));
            for (int j = 0; j < 3; ++j) {
                const VecQ& p = pts[static_cast<std::size_t>(rng.next_int(0, count - 1))];
                for (int c = 0; c < n; ++c) x[c] += p[c] / 3;
            }
            BrunnWitness w = brunn_witness(x, pts);
            CHECK(w.depth <= n);
            CHECK(w.evaluate() == x);
        }
    }
}

TEST_CASE("quasiconvexity estimates") {
    ProdGroup f2z{2, 1};

    // H = <a, b>: nu = 1/2 exactly (mid-edge points of the tree at level 0).
    std::vector<Elem> hgens{ProdElem{FreeWord::parse("a"), {0}}, ProdElem{FreeWord::parse("b"), {0}}};
    OrbitSample orbH(f2z, symmetrized_generators(Group{f2z}, hgens), 4);
    QuasiconvexityEstimate qH = quasiconvexity_estimate(orbH);
    CHECK(qH.nu_hat == doctest::Approx(0.5).epsilon(1e-12));

    // Serial reference agrees exactly.
    QuasiconvexityEstimate qHs = quasiconvexity_estimate_serial(orbH);
    CHECK(qH.nu_hat == qHs.nu_hat);

    // K = <a, bt>: nu grows with R.
    std::vector<Elem> kgens{ProdElem{FreeWord::parse("a"), {0}}, ProdElem{FreeWord::parse("b"), {1}}};
    OrbitSample k4(f2z, symmetrized_generators(Group{f2z}, kgens), 4);
    OrbitSample k6(f2z, symmetrized_generators(Group{f2z}, kgens), 6);
    QuasiconvexityEstimate q4 = quasiconvexity_estimate(k4);
    QuasiconvexityEstimate q6 = quasiconvexity_estimate(k6);
    CHECK(q4.nu_hat > 0.5);
    CHECK(q6.nu_hat > q4.nu_hat);

    // H = {e} x Z^n: the orbit is a convex flat, nu = 0.
    std::vector<Elem> zgens{ProdElem{FreeWord{}, {1}}};
    OrbitSample orbZ(f2z, symmetrized_generators(Group{f2z}, zgens), 5);
    QuasiconvexityEstimate qZ = quasiconvexity_estimate(orbZ);
    CHECK(qZ.nu_hat <= 0.5);  // covering radius of the lattice inside its flat
}

TEST_CASE("euclidean powers in subgroups") {
    ProdGroup g{2, 2};

    // Pure translation among generators: k = 1 immediately.
    std::vector<Elem> gens1{ProdElem{FreeWord::parse("a"), {0, 0}}, ProdElem{FreeWord{}, {1, 0}}};
    EuclideanPowers p1 = euclidean_powers_in_subgroup(g, gens1, 4);
    REQUIRE(p1.exponents.size() == 2);
    CHECK(p1.exponents[0].has_value());  // zero translation part
    CHECK(p1.exponents[1] == 1);

    // Graph-like H = <(a, e1), (b, e2)>: no pure translations in any ball.
    std::vector<Elem> gens2{ProdElem{FreeWord::parse("a"), {1, 0}},
                            ProdElem{FreeWord::parse("b"), {0, 1}}};
    EuclideanPowers p2 = euclidean_powers_in_subgroup(g, gens2, 4);
    CHECK(!p2.all_found);
    CHECK(p2.translation_lattice.empty());

    // Single-axis hypothesis violation.
    std::vector<Elem> gens3{ProdElem{FreeWord::parse("a"), {1, 0}},
                            ProdElem{FreeWord::parse("aa"), {0, 1}}};
    CHECK_THROWS_AS(euclidean_powers_in_subgroup(g, gens3, 3), hypothesis_error);

    // Mixed shape with discoverable powers: <(a, e1), (b, 0), (e, 2e1)>.
    std::vector<Elem> gens4{ProdElem{FreeWord::parse("a"), {1, 0}},
                            ProdElem{FreeWord::parse("b"), {0, 0}},
                            ProdElem{FreeWord{}, {2, 0}}};
    EuclideanPowers p4 = euclidean_powers_in_subgroup(g, gens4, 4);
    CHECK(p4.all_found);
    CHECK(p4.exponents[0] == 2);  // (e, 2 e1) in H, so k = 2 for z = e1
    CHECK(p4.exponents[1] == 1);
    CHECK(p4.exponents[2] == 1);
}

TEST_CASE("orbit hull and membership") {
    ProdGroup g{2, 2};
    std::vector<Elem> gens{ProdElem{FreeWord::parse("a"), {0, 0}},
                           ProdElem{FreeWord::parse("b"), {0, 0}},
                           ProdElem{FreeWord{}, {1, 0}}};
    OrbitHull hull = orbit_hull(g, gens, 3);
    CHECK(hull.region.v_basis.size() == 1);

    // Orbit points are members.
    OrbitSample orb(g, symmetrized_generators(Group{g}, gens), 3);
    for (std::size_t i = 0; i < orb.size(); ++i) CHECK(hull_membership(orb.point(i), hull.region));

    // Points off the subtree or off V fail.
    ProductPoint off1 = pp("abab", {Rat(0), Rat(0)});
    CHECK(!hull_membership(off1, hull.region));
    ProductPoint off2 = pp("a", {Rat(0), Rat(1)});  // e2 not in V
    CHECK(!hull_membership(off2, hull.region));
    ProductPoint in1 = pp("a", {Rat(5, 2), Rat(0)});  // V direction, rational point
    CHECK(hull_membership(in1, hull.region));

    // conv^2 samples all pass membership (100%).
    SampleOptions opt;
    opt.hull_base_cap = 12;
    opt.conv1_cap = 60;
    opt.point_cap = 800;
    for (const auto& p : hull_sample_cloud(orb, opt)) CHECK(hull_membership(p, hull.region));
}

TEST_CASE("stallings membership") {
    // F = <a^2, b>: membership decided exactly.
    StallingsGraph g({FreeWord::parse("aa"), FreeWord::parse("b")});
    CHECK(g.contains(FreeWord::parse("aa")));
    CHECK(g.contains(FreeWord::parse("b")));
    CHECK(g.contains(FreeWord::parse("aab")));
    CHECK(g.contains(FreeWord::parse("aaaa")));
    CHECK(g.contains(FreeWord::parse("Baa")));
    CHECK(!g.contains(FreeWord::parse("a")));
    CHECK(!g.contains(FreeWord::parse("ab")));
    CHECK(!g.contains(FreeWord::parse("aba")));

    // Commutator subgroup witness: [a,b] in <ab, ba>? abAB = (ab)(ba)^-1 *...
    StallingsGraph h({FreeWord::parse("ab"), FreeWord::parse("ba")});
    CHECK(h.contains(FreeWord::parse("ab")));
    CHECK(h.contains(FreeWord::parse("abba")));
    CHECK(!h.contains(FreeWord::parse("a")));
}

TEST_CASE("virtual product decomposition") {
    ProdGroup g{2, 2};

    // Already split: H = <a, b> x <e1>: index 1.
    std::vector<Elem> split{ProdElem{FreeWord::parse("a"), {0, 0}},
                            ProdElem{FreeWord::parse("b"), {0, 0}},
                            ProdElem{FreeWord{}, {1, 0}}};
    VirtualProduct vp = virtual_product_decomposition(g, split, 4);
    CHECK(vp.index_bound == 1);
    CHECK(vp.a_basis.size() == 1);

    // Index-2 example: <(a, e1), (b, 0), (e, 2e1)>.
    std::vector<Elem> twisted{ProdElem{FreeWord::parse("a"), {1, 0}},
                              ProdElem{FreeWord::parse("b"), {0, 0}},
                              ProdElem{FreeWord{}, {2, 0}}};
    VirtualProduct vp2 = virtual_product_decomposition(g, twisted, 4);
    VirtualProduct vp2b = virtual_product_decomposition(g, twisted, 6);
    CHECK(vp2.index_bound == 2);
    CHECK(vp2b.index_bound == 2);  // stable in R

    // Cyclic mixed generator: A and F trivial, index grows with the ball.
    std::vector<Elem> cyc{ProdElem{FreeWord::parse("a"), {1, 0}}};
    VirtualProduct vp3 = virtual_product_decomposition(g, cyc, 3);
    VirtualProduct vp4 = virtual_product_decomposition(g, cyc, 5);
    CHECK(vp3.a_basis.empty());
    CHECK(vp3.f_words.empty());
    CHECK(vp4.index_bound > vp3.index_bound);
}

TEST_CASE("cat0 comparison and convexity checks") {
    // Flat triangle: violation is exactly 0 up to roundoff.
    ProductPoint a = pp("e", {Rat(0), Rat(0)});
    ProductPoint b = pp("e", {Rat(3), Rat(0)});
    ProductPoint c = pp("e", {Rat(0), Rat(4)});
    ComparisonCheck flat = cat0_comparison_check(a, b, c, 6);
    CHECK(std::abs(flat.max_violation) < 1e-9);

    // Tripod triangle: strictly thinner. Oracle: the tripod distance between
    // points on different legs is the sum of their distances to the center.
    ProductPoint ta = pp("a", {Rat(0)});
    ProductPoint tb = pp("b", {Rat(0)});
    ProductPoint tc = pp("c", {Rat(0)});
    CHECK(product_distance(ta, tb) == doctest::Approx(2.0));
    ComparisonCheck tri = cat0_comparison_check(ta, tb, tc, 8);
    CHECK(tri.max_violation <= 1e-9);

    // Random product triangles stay within tolerance.
    Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        auto rand_pt = [&]() {
            std::vector<int> letters;
            int len = static_cast<int>(rng.next_int(0, 3));
            for (int i = 0; i < len; ++i) {
                int l = static_cast<int>(rng.next_int(1, 2));
                letters.push_back(rng.next_int(0, 1) ? l : -l);
            }
            ProductPoint p;
            p.tree = TreePoint::vertex(FreeWord::from_letters(letters));
            p.vec = {Rat(rng.next_int(-3, 3)), Rat(rng.next_int(-3, 3))};
            return p;
        };
        ComparisonCheck chk = cat0_comparison_check(rand_pt(), rand_pt(), rand_pt(), 5);
        CHECK(chk.max_violation <= 1e-9);
    }

    // Convexity along geodesics with common start.
    ProductPoint base = pp("e", {Rat(0), Rat(0)});
    GeodesicPath g1 = product_geodesic(base, pp("ab", {Rat(2), Rat(0)}));
    GeodesicPath g2 = product_geodesic(base, pp("aB", {Rat(0), Rat(3)}));
    CHECK(metric_convexity_check(g1, g2, 16) <= 1e-9);
    CHECK(metric_convexity_check(g1, g1, 8) == doctest::Approx(0.0));
}

TEST_CASE("comparison angle") {
    CHECK(comparison_angle(1, 1, 1) == doctest::Approx(M_PI / 3));
    CHECK(comparison_angle(2, 3, 5) == doctest::Approx(M_PI));
    CHECK(comparison_angle(3, 5, 4) == doctest::Approx(std::acos(0.6)));
    CHECK_THROWS_AS(comparison_angle(1, 1, 5), validation_error);
}

TEST_CASE("hilbert distance") {
    // Regular 64-gon with a vertex at angle 0: the x-axis chord hits (+-1, 0)
    // exactly, so h((0,0), (1/2,0)) = ln 3.
    std::vector<VecQ> poly;
    for (int k = 0; k < 64; ++k) {
        double th = 2.0 * M_PI * k / 64;
        poly.push_back({rat_from_double(std::cos(th)), rat_from_double(std::sin(th))});
    }
    VecQ center{Rat(0), Rat(0)};
    VecQ half{Rat(1, 2), Rat(0)};
    CHECK(hilbert_distance(poly, center, center) == 0.0);
    CHECK(hilbert_distance(poly, center, half) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-9));
    CHECK(hilbert_distance(poly, center, half) == hilbert_distance(poly, half, center));

    // Triangle inequality on sampled interior triples.
    Rng rng(59);
    for (int t = 0; t < 60; ++t) {
        auto rand_in = [&]() {
            return VecQ{frac(rng.next_int(-60, 60), 100), frac(rng.next_int(-60, 60), 100)};
        };
        VecQ p = rand_in(), q = rand_in(), r = rand_in();
        double pq = hilbert_distance(poly, p, q);
        double qr = hilbert_distance(poly, q, r);
        double pr = hilbert_distance(poly, p, r);
        CHECK(pr <= pq + qr + 1e-9);
    }

    // Boundary and convexity validation.
    CHECK_THROWS_AS(hilbert_distance(poly, center, VecQ{Rat(2), Rat(0)}), validation_error);
    std::vector<VecQ> notconvex{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(1)},
                                {Rat(2), Rat(2)}, {Rat(0), Rat(2)}};
    CHECK_THROWS_AS(hilbert_distance(notconvex, VecQ{Rat(1), Rat(1, 2)}, VecQ{Rat(1), Rat(3, 4)}),
                    validation_error);
}

TEST_CASE("conv_step budget flag") {
    std::vector<ProductPoint> pts;
    for (int i = 0; i < 12; ++i) pts.push_back(pp("e", {Rat(i), Rat(0)}));
    ConvStepResult r = conv_step(pts, 9, 20);
    CHECK(r.budget_exceeded);
    CHECK(r.points.size() <= 20);
}

TEST_CASE("neighborhood growth of conv iterates") {
    // For the 1/2-quasiconvex orbit of <a, b>, conv^i samples stay within
    // i * nu of the orbit.
    ProdGroup f2z{2, 1};
    std::vector<Elem> hgens{ProdElem{FreeWord::parse("a"), {0}},
                            ProdElem{FreeWord::parse("b"), {0}}};
    OrbitSample orb(f2z, symmetrized_generators(Group{f2z}, hgens), 4);
    const double nu = 0.5;
    std::vector<ProductPoint> base;
    for (std::size_t i = 0; i < orb.size(); i += 7) base.push_back(orb.point(i));
    ConvStepResult c1 = conv_step(base, 5, 100000);
    for (const auto& pt : c1.points) CHECK(orb.nearest_distance(pt) <= 1 * nu + 1e-12);
    std::vector<ProductPoint> c1sub;
    for (std::size_t i = 0; i < c1.points.size(); i += 9) c1sub.push_back(c1.points[i]);
    ConvStepResult c2 = conv_step(c1sub, 3, 100000);
    for (const auto& pt : c2.points) CHECK(orb.nearest_distance(pt) <= 2 * nu + 1e-12);
}

TEST_CASE("orbit hull of a pure translation subgroup") {
    ProdGroup g{2, 2};
    std::vector<Elem> gens{ProdElem{FreeWord{}, {1, 0}}, ProdElem{FreeWord{}, {0, 1}}};
    OrbitHull hull = orbit_hull(g, gens, 3);
    // Subtree is the basepoint alone; V is the full Euclidean span.
    CHECK(hull.region.vertices == std::vector<std::string>{"e"});
    CHECK(hull.region.edges.empty());
    CHECK(hull.region.v_basis.size() == 2);
    CHECK(hull_membership(pp("e", {Rat(7, 3), Rat(-2)}), hull.region));
    CHECK(!hull_membership(pp("a", {Rat(0), Rat(0)}), hull.region));
}
