#include "qk/error.hpp"
#include "qk/instances.hpp"

#include <algorithm>
#include <random>

namespace qk {

namespace {

// mt19937_64 is bit-exact across standard libraries; the distributions are
// not, so draws are derived from raw output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

class ArcMatrix {
public:
    explicit ArcMatrix(std::size_t n) : n_(n), bits_(n * n, false) {}

    void set(VertexId u, VertexId v, bool on = true) { bits_[u * n_ + v] = on; }
    bool get(VertexId u, VertexId v) const { return bits_[u * n_ + v]; }

    bool has_out(VertexId u) const {
        for (VertexId v = 0; v < n_; ++v) {
            if (get(u, v)) return true;
        }
        return false;
    }

    Digraph build(std::vector<std::string> labels = {}) const {
        std::vector<Arc> arcs;
        for (VertexId u = 0; u < n_; ++u) {
            for (VertexId v = 0; v < n_; ++v) {
                if (get(u, v)) arcs.push_back({u, v});
            }
        }
        return Digraph(n_, std::move(arcs), std::move(labels));
    }

private:
    std::size_t n_;
    std::vector<bool> bits_;
};

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidInput(std::string(name) + " must lie in [0, 1]");
    }
}

// Orient the edge uv: digon with probability p_digon, else a fair coin.
void draw_edge(Rng& rng, ArcMatrix& arcs, VertexId u, VertexId v, double p_digon) {
    if (rng.bernoulli(p_digon)) {
        arcs.set(u, v);
        arcs.set(v, u);
        return;
    }
    const bool forward = rng.bernoulli(0.5);
    arcs.set(u, v, forward);
    arcs.set(v, u, !forward);
}

SplitDigraph circulant_family(std::size_t n, bool strongly_connected) {
    if (n == 0) {
        throw InvalidInput("family parameter n must be at least 1");
    }
    const std::size_t m = 2 * n + 1;
    const std::size_t total = m + m * n;
    auto s_index = [&](std::size_t i, std::size_t j) { return static_cast<VertexId>(m + i * n + (j - 1)); };

    std::vector<Arc> arcs;
    std::vector<std::string> labels(total);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = "k" + std::to_string(i);
        for (std::size_t j = 1; j <= n; ++j) {
            labels[s_index(i, j)] = "s" + std::to_string(i) + "_" + std::to_string(j);
            arcs.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + j) % m)});
            arcs.push_back({s_index(i, j), static_cast<VertexId>(i)});
            if (strongly_connected && i >= 1) {
                arcs.push_back({0, s_index(i, j)});
            }
        }
    }
    return check_split(Digraph(total, std::move(arcs), std::move(labels)), VertexSet::range(m));
}

} // namespace

SplitDigraph gen_dn(std::size_t n) { return circulant_family(n, false); }

SplitDigraph gen_dpn(std::size_t n) { return circulant_family(n, true); }

SplitDigraph gen_random_split(const RandomSplitOptions& o) {
    check_probability(o.p_clique_to_independent, "p_clique_to_independent");
    check_probability(o.p_independent_to_clique, "p_independent_to_clique");
    check_probability(o.p_clique_digon, "p_clique_digon");
    const std::size_t nk = o.clique_size;
    const std::size_t ni = o.independent_size;
    if (o.sink_free) {
        if (nk == 0 && ni > 0) {
            throw InvalidInput("sink_free needs a clique vertex when the independent part is non-empty");
        }
        if (nk == 1 && (o.one_way || ni == 0)) {
            throw InvalidInput("sink_free with a single clique vertex needs a K->I arc");
        }
    }

    Rng rng(o.seed);
    ArcMatrix arcs(nk + ni);

    std::vector<VertexId> cycle(nk);
    for (VertexId v = 0; v < nk; ++v) cycle[v] = v;
    rng.shuffle(cycle);
    std::vector<bool> fixed(nk * nk, false);
    if (o.sink_free && nk >= 2) {
        for (std::size_t t = 0; t < nk; ++t) {
            const VertexId u = cycle[t];
            const VertexId v = cycle[(t + 1) % nk];
            arcs.set(u, v);
            if (nk == 2 || rng.bernoulli(o.p_clique_digon)) arcs.set(v, u);
            fixed[u * nk + v] = fixed[v * nk + u] = true;
        }
    }
    for (VertexId u = 0; u < nk; ++u) {
        for (VertexId v = u + 1; v < nk; ++v) {
            if (!fixed[u * nk + v]) draw_edge(rng, arcs, u, v, o.p_clique_digon);
        }
    }

    for (std::size_t idx = 0; idx < ni; ++idx) {
        const auto s = static_cast<VertexId>(nk + idx);
        for (VertexId k = 0; k < nk; ++k) {
            if (rng.bernoulli(o.p_independent_to_clique)) arcs.set(s, k);
            if (!o.one_way && rng.bernoulli(o.p_clique_to_independent)) arcs.set(k, s);
        }
        if (o.sink_free && !arcs.has_out(s)) {
            arcs.set(s, static_cast<VertexId>(rng.below(nk)));
        }
    }
    if (o.sink_free && nk == 1 && !arcs.has_out(0)) {
        arcs.set(0, static_cast<VertexId>(nk + rng.below(ni)));
    }

    return check_split(arcs.build(), VertexSet::range(nk));
}

SplitDigraph gen_random_complete_split(std::uint64_t seed, std::size_t nk, std::size_t ni, double p_digon,
                                       bool sink_free) {
    check_probability(p_digon, "p_digon");
    const std::size_t n = nk + ni;
    if (sink_free && (n == 1 || (nk == 0 && ni > 0))) {
        throw InvalidInput("no sink-free biorientation exists for these part sizes");
    }
    Rng rng(seed);
    ArcMatrix arcs(n);
    auto is_edge = [&](VertexId u, VertexId v) { return u != v && (u < nk || v < nk); };
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (is_edge(u, v)) draw_edge(rng, arcs, u, v, p_digon);
        }
    }
    if (sink_free) {
        int round = 0;
        while (true) {
            std::vector<VertexId> offenders;
            for (VertexId v = 0; v < n; ++v) {
                if (!arcs.has_out(v)) offenders.push_back(v);
            }
            if (offenders.empty()) break;
            if (++round > 100) {
                throw Error("gen_random_complete_split: sink resampling cap exceeded");
            }
            for (VertexId v : offenders) {
                for (VertexId u = 0; u < n; ++u) {
                    if (is_edge(u, v)) draw_edge(rng, arcs, v, u, p_digon);
                }
            }
        }
    }
    return check_split(arcs.build(), VertexSet::range(nk));
}

Digraph gen_random_digraph(std::uint64_t seed, std::size_t n, double p) {
    check_probability(p, "p");
    Rng rng(seed);
    ArcMatrix arcs(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (u != v && rng.bernoulli(p)) arcs.set(u, v);
        }
    }
    return arcs.build();
}

} // namespace qk
