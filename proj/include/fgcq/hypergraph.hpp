#ifndef FGCQ_HYPERGRAPH_HPP
#define FGCQ_HYPERGRAPH_HPP

#include <algorithm>
#include <set>
#include <vector>

#include <fgcq/query.hpp>

namespace fgcq {

// Hypergraph of a query: vertices are variables, edges are atom variable sets.
// Edges are stored as sorted vectors, deduplicated and ordered lexicographically,
// so equal hypergraphs compare equal regardless of construction order.
struct Hypergraph {
    std::vector<Variable> vertices;              // sorted
    std::vector<std::vector<Variable>> edges;    // each sorted; whole list sorted, unique

    auto operator<=>(const Hypergraph&) const = default;

    bool has_edge(const std::vector<Variable>& e) const {
        return std::binary_search(edges.begin(), edges.end(), e);
    }
};

inline Hypergraph make_hypergraph(std::vector<std::vector<Variable>> raw_edges) {
    Hypergraph h;
    std::set<Variable> verts;
    std::set<std::vector<Variable>> edges;
    for (auto& e : raw_edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.empty()) continue;
        verts.insert(e.begin(), e.end());
        edges.insert(std::move(e));
    }
    h.vertices.assign(verts.begin(), verts.end());
    h.edges.assign(edges.begin(), edges.end());
    return h;
}

// Edges are the variable *sets* of the atoms: repeated arguments collapse and
// atoms with identical variable sets yield one hyperedge.
inline Hypergraph build_hypergraph(const ConjunctiveQuery& q) {
    std::vector<std::vector<Variable>> raw;
    raw.reserve(q.body.size());
    for (const Atom& a : q.body) raw.push_back(a.args);
    return make_hypergraph(std::move(raw));
}

// Hypergraph plus one extra edge (used for the free-connex test).
inline Hypergraph with_extra_edge(const Hypergraph& h, std::vector<Variable> extra) {
    std::vector<std::vector<Variable>> raw = h.edges;
    raw.push_back(std::move(extra));
    return make_hypergraph(std::move(raw));
}

} // namespace fgcq

#endif // FGCQ_HYPERGRAPH_HPP
