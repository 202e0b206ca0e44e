#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pvm/parabolic.hpp"
#include "pvm/rootsys.hpp"
#include "pvm/weights.hpp"

namespace pvm {

struct MultipletEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    Root beta;
    Integer m;
};

// Embedding graph V^{Lambda - m beta} -> V^Lambda generated from a seed.
// Vertices are in breadth-first discovery order; within one BFS layer new
// vertices are sorted by their label vectors.
struct MultipletGraph {
    Weight seed;
    ParabolicSubset subset;
    std::vector<Weight> vertices;
    // seed - vertex in the simple-root basis; its coefficient sum grows along edges.
    std::vector<std::vector<Integer>> offsets;
    // Targets that left P_S; only present when requested, never expanded.
    std::vector<bool> dropped;
    std::vector<MultipletEdge> edges;

    std::size_t out_degree(std::size_t v) const {
        return static_cast<std::size_t>(
            std::count_if(edges.begin(), edges.end(), [&](const MultipletEdge& e) { return e.from == v; }));
    }
};

struct MultipletOptions {
    std::optional<std::uint64_t> cap;
    bool include_dropped = false;
};

inline std::uint64_t default_multiplet_cap(const RootSystem& rs) {
    std::uint64_t w = weyl_group_order(rs.lie_type());
    std::uint64_t n = rs.positive_roots().size();
    return w > UINT64_MAX / n ? UINT64_MAX : w * n;
}

inline MultipletGraph build_multiplet(const RootSystem& rs, const ParabolicSubset& subset, const Weight& seed,
                                      const MultipletOptions& opts = {}) {
    check_weight(rs, seed);
    subset.check(rs.rank());
    if (auto bad = dominance_violation(seed, subset))
        throw PreconditionError("seed " + to_string(seed) + " is not P_S-dominant at index " +
                                std::to_string(*bad));
    const std::uint64_t cap = opts.cap.value_or(default_multiplet_cap(rs));
    if (cap == 0)
        throw PreconditionError("multiplet cap must be positive");

    MultipletGraph g;
    g.seed = seed;
    g.subset = subset;
    std::map<Weight, std::size_t> index;

    auto add_vertex = [&](Weight w, std::vector<Integer> offset, bool dropped) {
        if (g.vertices.size() >= cap)
            throw InternalError("multiplet exceeded cap of " + std::to_string(cap) + " vertices");
        index.emplace(w, g.vertices.size());
        g.vertices.push_back(std::move(w));
        g.offsets.push_back(std::move(offset));
        g.dropped.push_back(dropped);
    };

    add_vertex(seed, std::vector<Integer>(static_cast<std::size_t>(rs.rank()), 0), false);
    std::vector<std::size_t> layer{0};

    struct Pending {
        std::size_t from;
        Weight target;
        Root beta;
        Integer m;
    };

    while (!layer.empty()) {
        std::vector<Pending> pending;
        std::map<Weight, std::pair<std::vector<Integer>, bool>> fresh;
        for (std::size_t v : layer) {
            const Weight source = g.vertices[v];
            const auto source_offset = g.offsets[v];
            for (auto& h : pvm_reducibility_set(rs, subset, source)) {
                if (!h.target_dominant && !opts.include_dropped)
                    continue;
                if (!index.contains(h.target) && !fresh.contains(h.target)) {
                    auto off = source_offset;
                    for (std::size_t i = 0; i < off.size(); ++i)
                        off[i] += h.hit.m * h.hit.beta[i];
                    fresh.emplace(h.target, std::make_pair(std::move(off), !h.target_dominant));
                }
                pending.push_back({v, std::move(h.target), std::move(h.hit.beta), std::move(h.hit.m)});
            }
        }
        std::vector<std::size_t> next;
        for (auto& [w, data] : fresh) {
            next.push_back(g.vertices.size());
            add_vertex(w, std::move(data.first), data.second);
        }
        for (auto& p : pending)
            g.edges.push_back({p.from, index.at(p.target), std::move(p.beta), std::move(p.m)});
        layer.clear();
        for (std::size_t v : next)
            if (!g.dropped[v])
                layer.push_back(v);
    }
    return g;
}

inline std::string edge_label(const MultipletEdge& e) {
    std::string name = root_name(e.beta);
    bool simple = e.beta.height() == 1;
    return e.m.str() + (simple ? " " + name : " (" + name + ")");
}

// Graphviz description; byte-identical for identical graphs.
inline std::string to_dot(const MultipletGraph& g) {
    std::ostringstream os;
    os << "digraph multiplet {\n";
    os << "  // seed " << to_string(g.seed) << ", S = " << to_string(g.subset) << "\n";
    os << "  node [shape=box];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        os << "  n" << v << " [label=\"" << to_string(g.vertices[v]) << "\"";
        if (g.dropped[v])
            os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& e : g.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << edge_label(e) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace pvm
