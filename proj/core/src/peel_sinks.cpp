#include "qk/error.hpp"
#include "qk/split.hpp"

namespace qk {

Rational sink_peeling_bound(const Digraph& d, const Rational& alpha) {
    const VertexSet s = sinks(d);
    const auto value = static_cast<std::int64_t>(d.vertex_count() + s.size()) -
                       static_cast<std::int64_t>(in_set(d, s).size());
    return alpha * Rational(value);
}

namespace {

class Peeler {
public:
    Peeler(const Digraph& d, const SinkFreeOracle& oracle, const Rational& alpha, const std::string& name)
        : d_(d), oracle_(oracle), alpha_(alpha), name_(name) {}

    // Quasi-kernel of D[alive], in parent indices.
    VertexSet run(const VertexSet& alive) {
        if (alive.empty()) return {};
        auto sub = induced(d_, alive);
        const VertexSet s_local = sinks(sub.graph);
        VertexSet result;
        if (s_local.empty()) {
            result = solve_sink_free(sub);
        } else {
            const VertexSet s = sub.map.lift(s_local);
            const VertexSet ns = sub.map.lift(in_set(sub.graph, s_local));
            const VertexSet d1 = set_difference(set_difference(alive, s), ns);
            result = set_union(s, reduce(d1));
        }
        if (!is_quasi_kernel(sub.graph, sub.map.restrict(result))) {
            throw VerificationFailure("peel_sinks: intermediate result is not a quasi-kernel");
        }
        return result;
    }

private:
    // Handles D1 = D - S(D) - N^-(S(D)).
    VertexSet reduce(const VertexSet& d1) {
        if (d1.empty()) return {};
        auto sub1 = induced(d_, d1);
        const VertexSet s1 = sinks(sub1.graph);
        if (s1.empty()) {
            return solve_sink_free(sub1);
        }
        if (s1.size() <= in_set(sub1.graph, s1).size()) {
            return run(d1);
        }
        return run(set_difference(d1, sub1.map.lift(s1)));
    }

    VertexSet solve_sink_free(const InducedSubgraph& sub) {
        const VertexSet local = oracle_(sub);
        const std::size_t m = sub.graph.vertex_count();
        if (!is_quasi_kernel(sub.graph, local)) {
            throw PreconditionError("peel_sinks: " + name_ + " returned a non-quasi-kernel on a sink-free subdigraph of " +
                                    std::to_string(m) + " vertices");
        }
        if (!at_most(static_cast<std::int64_t>(local.size()), alpha_ * Rational(static_cast<std::int64_t>(m)))) {
            throw PreconditionError("peel_sinks: " + name_ + " returned " + std::to_string(local.size()) +
                                    " vertices on a sink-free subdigraph of " + std::to_string(m) +
                                    " vertices, above alpha = " + alpha_.to_string());
        }
        return sub.map.lift(local);
    }

    const Digraph& d_;
    const SinkFreeOracle& oracle_;
    Rational alpha_;
    std::string name_;
};

} // namespace

QkCertificate peel_sinks(const Digraph& d, const SinkFreeOracle& oracle, const Rational& alpha,
                         const std::string& oracle_name) {
    if (alpha < Rational(1, 2)) {
        throw PreconditionError("peel_sinks requires alpha >= 1/2");
    }
    Peeler peeler(d, oracle, alpha, oracle_name);
    const VertexSet q = peeler.run(VertexSet::range(d.vertex_count()));
    return certify(d, q, "peel-sinks(" + oracle_name + ")", sink_peeling_bound(d, alpha));
}

QkCertificate peel_sinks_two_thirds(const SplitDigraph& sd) {
    SinkFreeOracle oracle = [&sd](const InducedSubgraph& sub) {
        VertexSet clique = sub.map.restrict(sd.clique_part());
        return two_thirds_qk(check_split(sub.graph, std::move(clique))).set;
    };
    return peel_sinks(sd.graph(), oracle, Rational(2, 3), "two-thirds");
}

} // namespace qk
