#include "oracle.hpp"

#include "qk/certificate.hpp"
#include "qk/error.hpp"
#include "qk/instances.hpp"
#include "qk/split_digraph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

using namespace qk;

namespace {

Digraph single_arc() { return Digraph(2, {{0, 1}}); }
Digraph three_cycle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph transitive_triangle() { return Digraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

std::vector<VertexId> random_perm(oracle::Rng& rng, std::size_t n) {
    std::vector<VertexId> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(static_cast<int>(i))]);
    return p;
}

} // namespace

TEST_CASE("digraph construction rejects loops, duplicates and bad endpoints", "[digraph]") {
    CHECK_THROWS_AS(Digraph(2, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), InvalidInput);
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), InvalidInput);
    Digraph digon(2, {{1, 0}, {0, 1}});
    CHECK(digon.arc_count() == 2);
    CHECK(digon.arcs()[0] == Arc{0, 1});
    CHECK_FALSE(is_orientation(digon));
}

TEST_CASE("vertex sets", "[digraph]") {
    CHECK_THROWS_AS(VertexSet(std::vector<VertexId>{1, 1}), InvalidInput);
    VertexSet s{4, 0, 2};
    CHECK(s.to_string() == "0,2,4");
    CHECK(VertexSet::parse("4,0,2") == s);
    CHECK(VertexSet::parse("") == VertexSet{});
    CHECK_THROWS_AS(VertexSet::parse("1,,2"), InvalidInput);
    CHECK_THROWS_AS(VertexSet::parse("x"), InvalidInput);
    CHECK(set_union(s, VertexSet{1}) == VertexSet{0, 1, 2, 4});
    CHECK(set_difference(s, VertexSet{2}) == VertexSet{0, 4});
    CHECK(set_intersection(s, VertexSet{2, 3, 4}) == VertexSet{2, 4});
    CHECK(is_subset(VertexSet{0, 4}, s));
    CHECK_FALSE(intersects(s, VertexSet{1, 3}));
}

TEST_CASE("sinks", "[digraph]") {
    CHECK(sinks(single_arc()) == VertexSet{1});
    CHECK(sinks(three_cycle()).empty());
    CHECK(sinks(gen_dn(1).graph()).empty());
}

TEST_CASE("neighbourhood sets on D_1", "[digraph]") {
    const Digraph d = gen_dn(1).graph();
    const VertexSet k0{0};
    CHECK(in_set(d, k0) == VertexSet{2, 3});
    CHECK(second_in_set(d, k0) == VertexSet{1, 5});
    CHECK(out_set(d, k0) == VertexSet{1});
    const VertexSet all = VertexSet::range(d.vertex_count());
    CHECK(in_set(d, all).empty());
    CHECK(out_set(d, all).empty());
    CHECK(second_in_set(d, all).empty());
    CHECK_THROWS_AS(in_set(d, VertexSet{6}), InvalidInput);
}

TEST_CASE("independence", "[digraph]") {
    CHECK_FALSE(is_independent(single_arc(), VertexSet{0, 1}));
    CHECK(is_independent(three_cycle(), VertexSet{}));
    CHECK(is_independent(gen_dn(1).graph(), VertexSet{0, 4}));
}

TEST_CASE("quasi-kernel and kernel predicates", "[digraph]") {
    const Digraph d = gen_dn(1).graph();
    CHECK(is_quasi_kernel(d, VertexSet{0, 4}));
    CHECK_FALSE(is_quasi_kernel(d, VertexSet{0}));
    CHECK(is_quasi_kernel(Digraph(0, {}), VertexSet{}));

    CHECK(is_kernel(single_arc(), VertexSet{1}));
    for (VertexId v = 0; v < 3; ++v) CHECK_FALSE(is_kernel(three_cycle(), VertexSet{v}));
    CHECK(is_kernel(transitive_triangle(), VertexSet{2}));

    CHECK(is_two_serf(d, 0) == is_quasi_kernel(d, VertexSet{0}));
    CHECK(is_two_serf(three_cycle(), 0));
}

TEST_CASE("certify reports the first offender", "[digraph]") {
    const Digraph d = gen_dn(1).graph();
    try {
        certify(d, VertexSet{0}, "t");
        FAIL("expected NotQuasiKernel");
    } catch (const NotQuasiKernel& e) {
        CHECK(e.offender() == 4);
    }
    try {
        certify(single_arc(), VertexSet{0, 1}, "t");
        FAIL("expected NotQuasiKernel");
    } catch (const NotQuasiKernel& e) {
        CHECK(e.offender() == 0);
    }
    const QkCertificate cert = certify(d, VertexSet{0, 4}, "t");
    CHECK(verify_certificate(d, cert));
    CHECK(cert.witnesses[0].empty());
    CHECK(cert.witnesses[1] == std::vector<VertexId>{1, 2, 0});

    QkCertificate forged = cert;
    forged.witnesses[1] = {1, 0};
    CHECK_FALSE(verify_certificate(d, forged));
    QkCertificate bounded = cert;
    bounded.bound = Rational(1);
    CHECK_FALSE(verify_certificate(d, bounded));
}

TEST_CASE("check_split validation", "[digraph][split]") {
    const SplitDigraph dn = gen_dn(1);
    CHECK_NOTHROW(check_split(dn.graph(), dn.clique_part(), dn.independent_part()));
    CHECK_THROWS_WITH(check_split(Digraph(2, {}), VertexSet{0, 1}, VertexSet{}),
                      Catch::Matchers::ContainsSubstring("missing clique adjacency (0,1)"));
    CHECK_THROWS_WITH(check_split(single_arc(), VertexSet{}, VertexSet{0, 1}),
                      Catch::Matchers::ContainsSubstring("arc inside independent part"));
    CHECK_THROWS_AS(check_split(single_arc(), VertexSet{0}, VertexSet{0, 1}), InvalidInput);
    CHECK_THROWS_AS(check_split(single_arc(), VertexSet{0}, VertexSet{}), InvalidInput);
}

TEST_CASE("classify", "[digraph][split]") {
    CHECK(classify(gen_dn(1)) == SplitFlags{true, false, true, true});
    CHECK_FALSE(classify(gen_dpn(1)).one_way);
    const SplitDigraph fan = check_split(Digraph(3, {{0, 1}, {0, 2}}), VertexSet{0});
    const SplitFlags f = classify(fan);
    CHECK_FALSE(f.sink_free);
    CHECK(f.complete_split);
}

TEST_CASE("induced subdigraphs", "[digraph]") {
    const Digraph c = three_cycle();
    auto whole = induced(c, VertexSet::range(3));
    CHECK(whole.graph == c);
    auto pair = induced(c, VertexSet{0, 1});
    CHECK(pair.graph == single_arc());
    auto k = induced(gen_dn(1).graph(), gen_dn(1).clique_part());
    CHECK(k.graph == c);
    auto tail = induced(c, VertexSet{1, 2});
    CHECK(tail.map.to_parent(0) == 1);
    CHECK(tail.map.to_local(2) == VertexId{1});
    CHECK_FALSE(tail.map.to_local(0).has_value());
    CHECK(tail.map.lift(VertexSet{0, 1}) == VertexSet{1, 2});
}

TEST_CASE("predicates agree with the mask oracle", "[digraph][property]") {
    oracle::Rng rng(0x5eed);
    for (int round = 0; round < 300; ++round) {
        const int n = 1 + rng.below(12);
        const Digraph d = oracle::random_digraph(rng, n, 0.05 + 0.4 * (round % 7) / 6.0);
        const oracle::Graph g = oracle::from(d);
        for (int t = 0; t < 20; ++t) {
            oracle::Mask m = rng.next() & ((oracle::Mask{1} << n) - 1);
            if (t % 2) m &= rng.next();
            const VertexSet s = oracle::to_set(m);
            CHECK(is_independent(d, s) == oracle::independent(g, m));
            CHECK(is_quasi_kernel(d, s) == oracle::is_qk(g, m));
            CHECK(is_kernel(d, s) == oracle::is_kernel(g, m));
            CHECK(is_dominating_set(d, s) == oracle::is_domset(g, m));
            CHECK(oracle::to_mask(in_set(d, s)) == oracle::in_nbrs(g, m));
            const VertexSet second = second_in_set(d, s);
            CHECK(oracle::to_mask(second) == oracle::second_in(g, m));
            CHECK_FALSE(intersects(second, set_union(s, in_set(d, s))));
            if (is_kernel(d, s)) CHECK(is_quasi_kernel(d, s));
            const bool qk = is_quasi_kernel(d, s);
            CHECK(qk == (is_independent(d, s) &&
                         set_union(set_union(s, in_set(d, s)), second) == VertexSet::range(n)));
            if (qk) {
                CHECK(verify_certificate(d, certify(d, s, "t")));
            } else {
                CHECK_THROWS_AS(certify(d, s, "t"), NotQuasiKernel);
            }
        }
        CHECK(is_semicomplete(d) == oracle::semicomplete(g));
        CHECK(is_strongly_connected(d) == oracle::strongly_connected(g));
    }
}

TEST_CASE("classify is stable under relabeling", "[split][property]") {
    oracle::Rng rng(77);
    for (int round = 0; round < 200; ++round) {
        const int nk = 1 + rng.below(5);
        const int ni = rng.below(7);
        const SplitDigraph sd = oracle::random_split(rng, nk, ni, 0.3, 0.5, 0.3);
        const auto perm = random_perm(rng, sd.vertex_count());
        std::vector<VertexId> k;
        for (VertexId v : sd.clique_part()) k.push_back(perm[v]);
        const SplitDigraph moved = check_split(relabeled(sd.graph(), perm), VertexSet(k));
        CHECK(classify(moved) == classify(sd));
    }
}
