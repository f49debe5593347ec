#include "oracle.hpp"

#include "qk/construct.hpp"
#include "qk/error.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qk;

namespace {

Digraph three_cycle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph transitive_triangle() { return Digraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

// 0 beats everyone, 1 -> 2 -> 3 -> 1, and 1, 2, 3 all beat 4.
Digraph source_and_sink_tournament() {
    return Digraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 1}, {1, 4}, {2, 4}, {3, 4}});
}

bool rooted(const Digraph& d, VertexId r, const VertexSet& q) {
    if (q.contains(r)) return true;
    for (VertexId w : d.out_neighbors(r)) {
        if (q.contains(w)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("rooted quasi-kernels on small digraphs", "[construct]") {
    CHECK(quasi_kernel_rooted(Digraph(1, {}), 0) == VertexSet{0});
    CHECK(quasi_kernel_rooted(Digraph(2, {{0, 1}}), 0) == VertexSet{1});
    CHECK(quasi_kernel_rooted(three_cycle(), 0) == VertexSet{1});
    CHECK(quasi_kernel_cl(three_cycle()) == VertexSet{1});
    CHECK(quasi_kernel_cl(Digraph(0, {})).empty());
    CHECK_THROWS_AS(quasi_kernel_rooted(three_cycle(), 3), InvalidInput);
}

TEST_CASE("two-serfs of semicomplete digraphs", "[construct]") {
    CHECK(two_serf_semicomplete(transitive_triangle()) == 2);
    CHECK(two_serf_semicomplete(three_cycle()) == 0);
    CHECK(two_serf_semicomplete(source_and_sink_tournament()) == 4);
    CHECK_THROWS_AS(two_serf_semicomplete(Digraph(2, {})), PreconditionError);
    CHECK_THROWS_AS(two_serf_semicomplete(Digraph(0, {})), PreconditionError);
}

TEST_CASE("dominating 2-serfs", "[construct]") {
    CHECK(dominate_two_serf(transitive_triangle(), 0) == 2);
    CHECK(dominate_two_serf(source_and_sink_tournament(), 0) == 4);
    CHECK_THROWS_AS(dominate_two_serf(three_cycle(), 0), PreconditionError);
}

TEST_CASE("rooted property on random digraphs", "[construct][property]") {
    oracle::Rng rng(2024);
    for (int round = 0; round < 500; ++round) {
        const int n = 1 + rng.below(50);
        const Digraph d = oracle::random_digraph(rng, n, 0.5 * rng.below(100) / 100.0 + 0.01);
        const VertexId r = static_cast<VertexId>(rng.below(n));
        const VertexSet q = quasi_kernel_rooted(d, r);
        REQUIRE(is_quasi_kernel(d, q));
        if (n <= 64) REQUIRE(oracle::is_qk(oracle::from(d), oracle::to_mask(q)));
        REQUIRE(rooted(d, r, q));
    }
}

TEST_CASE("2-serf constructions on random semicomplete digraphs", "[construct][property]") {
    oracle::Rng rng(31337);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + rng.below(40);
        const Digraph t = oracle::random_semicomplete(rng, n, rng.below(4) / 4.0);
        const oracle::Graph g = oracle::from(t);
        const VertexId s = two_serf_semicomplete(t);
        REQUIRE(oracle::is_qk(g, oracle::Mask{1} << s));
        // any quasi-kernel of a semicomplete digraph is a singleton
        REQUIRE(quasi_kernel_cl(t).size() == 1);
        for (VertexId v = 0; v < t.vertex_count(); ++v) {
            if (oracle::is_qk(g, oracle::Mask{1} << v)) {
                CHECK_THROWS_AS(dominate_two_serf(t, v), PreconditionError);
                continue;
            }
            const VertexId u = dominate_two_serf(t, v);
            REQUIRE(oracle::is_qk(g, oracle::Mask{1} << u));
            const oracle::Mask closed_in_v = g.in[v] | (oracle::Mask{1} << v);
            REQUIRE((closed_in_v & ~g.in[u]) == 0);
        }
    }
}
