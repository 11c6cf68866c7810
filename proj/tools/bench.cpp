// Benchmark comparing the OpenMP kernels against their serial reference
// implementations, asserting identical results along the way.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ggt/groups/cosets.hpp"
#include "ggt/hull/subgroup_lab.hpp"
#include "ggt/packing/packing.hpp"

using namespace ggt;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  equal %s\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0, equal ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled; parallel calls fall back to serial\n");
#endif

    {
        Group p = parse_group("poly:2:2,1;1,1");
        auto gens = default_generators(p);
        auto t0 = clock_type::now();
        DistanceBall serial = word_metric_ball_serial(p, gens, 9);
        double ts = seconds_since(t0);
        t0 = clock_type::now();
        DistanceBall parallel = word_metric_ball(p, gens, 9);
        double tp = seconds_since(t0);
        report("ball_bfs poly R=9", ts, tp, serial.digest() == parallel.digest());
    }

    {
        Group p = parse_group("poly:2:2,1;1,1");
        DistanceBall ball = word_metric_ball(p, 9);
        Subgroup h = resolve_subgroup(p, {parse_elem(p, "t")});
        CosetIndex idx(ball, h);
        auto t0 = clock_type::now();
        GrowthSeries s1 = coset_growth(idx, 9, false);
        double ts = seconds_since(t0);
        t0 = clock_type::now();
        GrowthSeries s2 = coset_growth(idx, 9, true);
        double tp = seconds_since(t0);
        report("coset_growth poly R=9", ts, tp, s1.counts == s2.counts);
    }

    {
        ProdGroup g{2, 1};
        std::vector<Elem> kgens{ProdElem{FreeWord::parse("a"), {0}},
                                ProdElem{FreeWord::parse("b"), {1}}};
        OrbitSample orb(g, symmetrized_generators(Group{g}, kgens), 7);
        SampleOptions opt;
        auto t0 = clock_type::now();
        QuasiconvexityEstimate qs = quasiconvexity_estimate_serial(orb, opt);
        double ts = seconds_since(t0);
        t0 = clock_type::now();
        QuasiconvexityEstimate qp = quasiconvexity_estimate(orb, opt);
        double tp = seconds_since(t0);
        report("nearest-orbit scan K R=7", ts, tp, qs.nu_hat == qp.nu_hat);
    }

    {
        ProdGroup g{2, 2};
        std::vector<Elem> hgens{ProdElem{FreeWord::parse("a"), {1, 0}},
                                ProdElem{FreeWord::parse("b"), {0, 1}},
                                ProdElem{FreeWord{}, {2, 0}},
                                ProdElem{FreeWord{}, {0, 2}}};
        OrbitSample orb(g, symmetrized_generators(Group{g}, hgens), 4);
        SampleOptions opt;
        auto t0 = clock_type::now();
        CocompactnessEstimate cs = cocompactness_radius_serial(orb, opt);
        double ts = seconds_since(t0);
        t0 = clock_type::now();
        CocompactnessEstimate cp = cocompactness_radius(orb, opt);
        double tp = seconds_since(t0);
        report("hull-gap scan S3 R=4", ts, tp, cs.c_hat == cp.c_hat);
    }

    return 0;
}
