#ifndef FGCQ_TEST_SUPPORT_HPP
#define FGCQ_TEST_SUPPORT_HPP

// Test-only oracles and generators, kept independent of the library's fast
// paths so they can serve as ground truth.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fgcq/database.hpp>
#include <fgcq/hypergraph.hpp>
#include <fgcq/query.hpp>

namespace fgcq::testsupport {

// --- acyclicity oracle: try every elimination order -------------------------

using EdgeSet = std::vector<std::set<Variable>>;

struct OracleState {
    std::set<Variable> vertices;
    EdgeSet edges;

    std::vector<std::string> canonical() const {
        std::vector<std::string> key;
        for (const Variable& v : vertices) key.push_back("v:" + v.name);
        std::vector<std::string> es;
        for (const auto& e : edges) {
            std::string s = "e:";
            for (const Variable& v : e) s += v.name + ",";
            es.push_back(s);
        }
        std::sort(es.begin(), es.end());
        key.insert(key.end(), es.begin(), es.end());
        return key;
    }
};

inline bool brute_acyclic_rec(OracleState st, std::map<std::vector<std::string>, bool>& memo) {
    if (st.vertices.empty() && st.edges.empty()) return true;
    auto key = st.canonical();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo[key] = false; // avoid revisits while exploring
    bool ok = false;
    for (const Variable& v : st.vertices) {
        int occ = 0;
        for (const auto& e : st.edges)
            if (e.count(v)) ++occ;
        if (occ <= 1) {
            OracleState next = st;
            next.vertices.erase(v);
            for (auto& e : next.edges) e.erase(v);
            if (brute_acyclic_rec(std::move(next), memo)) {
                ok = true;
                break;
            }
        }
    }
    if (!ok) {
        for (std::size_t i = 0; i < st.edges.size() && !ok; ++i) {
            bool removable = st.edges[i].empty();
            for (std::size_t j = 0; j < st.edges.size() && !removable; ++j)
                if (i != j && std::includes(st.edges[j].begin(), st.edges[j].end(),
                                            st.edges[i].begin(), st.edges[i].end()))
                    removable = true;
            if (!removable) continue;
            OracleState next = st;
            next.edges.erase(next.edges.begin() + static_cast<std::ptrdiff_t>(i));
            if (brute_acyclic_rec(std::move(next), memo)) ok = true;
        }
    }
    memo[key] = ok;
    return ok;
}

// Acyclicity by exhaustive search over elimination orders.
inline bool brute_acyclic(const Hypergraph& h) {
    OracleState st;
    st.vertices.insert(h.vertices.begin(), h.vertices.end());
    for (const auto& e : h.edges) st.edges.emplace_back(e.begin(), e.end());
    std::map<std::vector<std::string>, bool> memo;
    return brute_acyclic_rec(std::move(st), memo);
}

// --- random hypergraphs ------------------------------------------------------

inline Hypergraph random_hypergraph(std::mt19937_64& rng, int max_vertices, int max_edges) {
    int n = 1 + static_cast<int>(rng() % max_vertices);
    int m = 1 + static_cast<int>(rng() % max_edges);
    std::vector<std::vector<Variable>> edges;
    for (int e = 0; e < m; ++e) {
        std::vector<Variable> edge;
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0) edge.push_back(Variable{"v" + std::to_string(v)});
        if (edge.empty()) edge.push_back(Variable{"v" + std::to_string(rng() % n)});
        edges.push_back(std::move(edge));
    }
    return make_hypergraph(std::move(edges));
}

// Acyclic by construction: each new edge keeps a subset of an existing edge
// and adds fresh vertices (a grown join tree).
inline Hypergraph random_grown_acyclic(std::mt19937_64& rng, int max_edges, int max_arity) {
    int fresh = 0;
    auto new_var = [&]() { return Variable{"v" + std::to_string(fresh++)}; };
    std::vector<std::vector<Variable>> edges;
    int m = 1 + static_cast<int>(rng() % max_edges);
    {
        std::vector<Variable> first;
        int a = 1 + static_cast<int>(rng() % max_arity);
        for (int i = 0; i < a; ++i) first.push_back(new_var());
        edges.push_back(std::move(first));
    }
    for (int e = 1; e < m; ++e) {
        const auto& base = edges[rng() % edges.size()];
        std::vector<Variable> edge;
        for (const Variable& v : base)
            if (rng() % 2) edge.push_back(v);
        int target = 1 + static_cast<int>(rng() % max_arity);
        while (static_cast<int>(edge.size()) < target) edge.push_back(new_var());
        edges.push_back(std::move(edge));
    }
    return make_hypergraph(std::move(edges));
}

} // namespace fgcq::testsupport

#endif // FGCQ_TEST_SUPPORT_HPP
