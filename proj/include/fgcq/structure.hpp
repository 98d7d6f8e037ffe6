#ifndef FGCQ_STRUCTURE_HPP
#define FGCQ_STRUCTURE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <fgcq/hypergraph.hpp>
#include <fgcq/query.hpp>

namespace fgcq {

// One step of the GYO elimination process.
struct GyoStep {
    enum class Kind { remove_vertex, remove_edge };
    Kind kind;

    // remove_vertex
    Variable vertex{};
    std::optional<std::size_t> into_edge; // the unique edge still containing the vertex, if any

    // remove_edge
    std::size_t edge = 0;                    // id of the removed edge (index into Hypergraph::edges)
    std::optional<std::size_t> absorbed_by;  // id of the absorbing edge; empty for the final empty edge
};

using GyoTrace = std::vector<GyoStep>;

struct GyoResult {
    bool acyclic = false;
    GyoTrace trace;
};

struct GyoOptions {
    // When set, applicable steps are chosen pseudo-randomly instead of by the
    // deterministic tie-break. The acyclicity verdict must not depend on this.
    std::optional<std::uint64_t> shuffle_seed;
};

namespace detail {

struct GyoState {
    std::vector<std::optional<std::set<Variable>>> edges; // live edge contents by original id
    std::set<Variable> vertices;

    explicit GyoState(const Hypergraph& h) {
        edges.reserve(h.edges.size());
        for (const auto& e : h.edges)
            edges.emplace_back(std::set<Variable>(e.begin(), e.end()));
        vertices.insert(h.vertices.begin(), h.vertices.end());
    }

    bool empty() const {
        if (!vertices.empty()) return false;
        for (const auto& e : edges)
            if (e) return false;
        return true;
    }

    std::size_t live_count() const {
        std::size_t c = 0;
        for (const auto& e : edges)
            if (e) ++c;
        return c;
    }

    // Edges currently containing v.
    std::vector<std::size_t> edges_of(const Variable& v) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] && edges[i]->count(v)) out.push_back(i);
        return out;
    }

    void apply_remove_vertex(const Variable& v) {
        vertices.erase(v);
        for (auto& e : edges)
            if (e) e->erase(v);
    }

    void apply_remove_edge(std::size_t id) { edges[id].reset(); }
};

// All steps applicable in the current state, in deterministic tie-break order:
// removable vertices by name, then absorbable edges by (content, id).
inline std::vector<GyoStep> applicable_gyo_steps(const GyoState& st) {
    std::vector<GyoStep> steps;
    for (const Variable& v : st.vertices) {
        auto occ = st.edges_of(v);
        if (occ.size() <= 1) {
            GyoStep s;
            s.kind = GyoStep::Kind::remove_vertex;
            s.vertex = v;
            if (!occ.empty()) s.into_edge = occ[0];
            steps.push_back(std::move(s));
        }
    }
    struct EdgeCand { std::set<Variable> content; std::size_t id; std::optional<std::size_t> into; };
    std::vector<EdgeCand> cands;
    std::size_t live = st.live_count();
    for (std::size_t i = 0; i < st.edges.size(); ++i) {
        if (!st.edges[i]) continue;
        std::optional<std::size_t> best;
        for (std::size_t j = 0; j < st.edges.size(); ++j) {
            if (i == j || !st.edges[j]) continue;
            if (std::includes(st.edges[j]->begin(), st.edges[j]->end(),
                              st.edges[i]->begin(), st.edges[i]->end())) {
                if (!best || *st.edges[j] < *st.edges[*best] ||
                    (*st.edges[j] == *st.edges[*best] && j < *best))
                    best = j;
            }
        }
        if (best) {
            cands.push_back({*st.edges[i], i, best});
        } else if (st.edges[i]->empty() && live == 1) {
            cands.push_back({*st.edges[i], i, std::nullopt});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const EdgeCand& a, const EdgeCand& b) {
        return a.content < b.content || (a.content == b.content && a.id < b.id);
    });
    for (const auto& c : cands) {
        GyoStep s;
        s.kind = GyoStep::Kind::remove_edge;
        s.edge = c.id;
        s.absorbed_by = c.into;
        steps.push_back(std::move(s));
    }
    return steps;
}

} // namespace detail

// GYO elimination: repeatedly delete a vertex contained in at most one edge or
// an edge contained in another edge, until nothing applies. The hypergraph is
// acyclic iff the process ends with no vertices and no edges.
inline GyoResult gyo_acyclicity(const Hypergraph& h, const GyoOptions& opts = {}) {
    detail::GyoState st(h);
    GyoResult res;
    std::optional<std::mt19937_64> rng;
    if (opts.shuffle_seed) rng.emplace(*opts.shuffle_seed);
    while (true) {
        auto steps = detail::applicable_gyo_steps(st);
        if (steps.empty()) break;
        const GyoStep& s = rng ? steps[(*rng)() % steps.size()] : steps.front();
        if (s.kind == GyoStep::Kind::remove_vertex)
            st.apply_remove_vertex(s.vertex);
        else
            st.apply_remove_edge(s.edge);
        res.trace.push_back(s);
    }
    res.acyclic = st.empty();
    return res;
}

// Replays a trace, validating each step; true iff all steps apply and the
// hypergraph ends empty.
inline bool replay_gyo(const Hypergraph& h, const GyoTrace& trace) {
    detail::GyoState st(h);
    for (const GyoStep& s : trace) {
        if (s.kind == GyoStep::Kind::remove_vertex) {
            if (!st.vertices.count(s.vertex)) return false;
            auto occ = st.edges_of(s.vertex);
            if (occ.size() > 1) return false;
            if (occ.empty() != !s.into_edge) return false;
            if (!occ.empty() && occ[0] != *s.into_edge) return false;
            st.apply_remove_vertex(s.vertex);
        } else {
            if (s.edge >= st.edges.size() || !st.edges[s.edge]) return false;
            if (s.absorbed_by) {
                std::size_t f = *s.absorbed_by;
                if (f == s.edge || f >= st.edges.size() || !st.edges[f]) return false;
                if (!std::includes(st.edges[f]->begin(), st.edges[f]->end(),
                                   st.edges[s.edge]->begin(), st.edges[s.edge]->end()))
                    return false;
            } else {
                if (!st.edges[s.edge]->empty()) return false;
            }
            st.apply_remove_edge(s.edge);
        }
    }
    return st.empty();
}

// Rooted tree over the hyperedges with the running-intersection property.
// Node i carries the i-th edge of the hypergraph it was built from.
struct JoinTree {
    std::vector<std::vector<Variable>> nodes;        // edge contents, index-aligned with parent
    std::vector<std::optional<std::size_t>> parent;  // empty for the root
    std::size_t root = 0;

    std::vector<std::vector<std::size_t>> children() const {
        std::vector<std::vector<std::size_t>> ch(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (parent[i]) ch[*parent[i]].push_back(i);
        return ch;
    }
};

// Running-intersection marker test: for every variable, the nodes containing it
// must form a connected subtree.
inline bool running_intersection_holds(const JoinTree& t) {
    std::set<Variable> vars;
    for (const auto& n : t.nodes) vars.insert(n.begin(), n.end());
    for (const Variable& v : vars) {
        std::vector<std::size_t> holders;
        for (std::size_t i = 0; i < t.nodes.size(); ++i)
            if (std::binary_search(t.nodes[i].begin(), t.nodes[i].end(), v)) holders.push_back(i);
        if (holders.empty()) continue;
        // BFS within holders, over tree adjacency.
        std::set<std::size_t> holder_set(holders.begin(), holders.end());
        std::set<std::size_t> seen{holders[0]};
        std::vector<std::size_t> queue{holders[0]};
        auto ch = t.children();
        while (!queue.empty()) {
            std::size_t u = queue.back();
            queue.pop_back();
            std::vector<std::size_t> nbrs = ch[u];
            if (t.parent[u]) nbrs.push_back(*t.parent[u]);
            for (std::size_t w : nbrs)
                if (holder_set.count(w) && seen.insert(w).second) queue.push_back(w);
        }
        if (seen.size() != holders.size()) return false;
    }
    return true;
}

inline bool validate_join_tree(const Hypergraph& h, const JoinTree& t) {
    if (t.nodes.size() != h.edges.size()) return false;
    std::multiset<std::vector<Variable>> a(t.nodes.begin(), t.nodes.end());
    std::multiset<std::vector<Variable>> b(h.edges.begin(), h.edges.end());
    if (a != b) return false;
    if (t.parent.size() != t.nodes.size()) return false;
    if (t.root >= t.nodes.size() || t.parent[t.root]) return false;
    // Every node must reach the root.
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        std::size_t u = i, hops = 0;
        while (t.parent[u]) {
            u = *t.parent[u];
            if (++hops > t.nodes.size()) return false;
        }
        if (u != t.root) return false;
    }
    return running_intersection_holds(t);
}

// Builds a join tree from the GYO elimination trace: an absorbed edge becomes a
// child of its absorber, the last edge standing is the root.
inline JoinTree build_join_tree(const Hypergraph& h) {
    GyoResult res = gyo_acyclicity(h);
    if (!res.acyclic) throw NotAcyclic();
    JoinTree t;
    t.nodes = h.edges;
    t.parent.assign(h.edges.size(), std::nullopt);
    for (const GyoStep& s : res.trace) {
        if (s.kind != GyoStep::Kind::remove_edge) continue;
        if (s.absorbed_by)
            t.parent[s.edge] = *s.absorbed_by;
        else
            t.root = s.edge;
    }
    if (h.edges.empty()) {
        t.root = 0;
    }
    return t;
}

// A query is free-connex if it is acyclic and stays acyclic when the head
// variable set is added as an extra hyperedge.
inline bool is_free_connex(const ConjunctiveQuery& q) {
    Hypergraph h = build_hypergraph(q);
    if (!gyo_acyclicity(h).acyclic) return false;
    std::vector<Variable> head(q.head.begin(), q.head.end());
    return gyo_acyclicity(with_extra_edge(h, std::move(head))).acyclic;
}

struct DisruptiveTrio {
    Variable y1, y2, y3;
    auto operator<=>(const DisruptiveTrio&) const = default;
};

// All trios (y1, y2, y3) with y1, y2 before y3 in the order, where both
// (y1,y3) and (y2,y3) share an atom but (y1,y2) never do. Output is sorted by
// (position of y3, position of y1, position of y2) with y1 before y2.
inline std::vector<DisruptiveTrio> find_disruptive_trios(const ConjunctiveQuery& q,
                                                         const std::vector<Variable>& order) {
    std::vector<Variable> body_vars = q.body_variables();
    {
        std::set<Variable> a(order.begin(), order.end());
        std::set<Variable> b(body_vars.begin(), body_vars.end());
        if (order.size() != b.size() || a != b)
            throw OrderMismatch();
    }
    auto co_occur = [&](const Variable& u, const Variable& v) {
        for (const Atom& at : q.body) {
            bool has_u = false, has_v = false;
            for (const Variable& w : at.args) {
                if (w == u) has_u = true;
                if (w == v) has_v = true;
            }
            if (has_u && has_v) return true;
        }
        return false;
    };
    std::vector<DisruptiveTrio> out;
    for (std::size_t p3 = 0; p3 < order.size(); ++p3)
        for (std::size_t p1 = 0; p1 < p3; ++p1)
            for (std::size_t p2 = p1 + 1; p2 < p3; ++p2) {
                const Variable &y1 = order[p1], &y2 = order[p2], &y3 = order[p3];
                if (co_occur(y1, y3) && co_occur(y2, y3) && !co_occur(y1, y2))
                    out.push_back({y1, y2, y3});
            }
    return out;
}

struct HardWitness {
    enum class Kind { chordless_cycle, clique_core };
    Kind kind;
    // chordless_cycle: vertices in cycle order; clique_core: the set S, sorted.
    std::vector<Variable> vertices;
};

namespace detail {

// Maximal edges of the induced hypergraph H[S].
inline std::vector<std::set<Variable>> induced_maximal_edges(const Hypergraph& h,
                                                             const std::set<Variable>& s) {
    std::set<std::set<Variable>> induced;
    for (const auto& e : h.edges) {
        std::set<Variable> cut;
        for (const Variable& v : e)
            if (s.count(v)) cut.insert(v);
        if (!cut.empty()) induced.insert(std::move(cut));
    }
    std::vector<std::set<Variable>> out;
    for (const auto& e : induced) {
        bool maximal = true;
        for (const auto& f : induced)
            if (e != f && std::includes(f.begin(), f.end(), e.begin(), e.end())) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(e);
    }
    return out;
}

// If H[S] is a cycle, returns its vertices in cycle order.
inline std::optional<std::vector<Variable>> chordless_cycle_on(const Hypergraph& h,
                                                               const std::set<Variable>& s) {
    if (s.size() < 3) return std::nullopt;
    auto maximal = induced_maximal_edges(h, s);
    if (maximal.size() != s.size()) return std::nullopt;
    std::map<Variable, std::vector<Variable>> adj;
    for (const auto& e : maximal) {
        if (e.size() != 2) return std::nullopt;
        auto it = e.begin();
        Variable a = *it++;
        Variable b = *it;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (const Variable& v : s) {
        auto it = adj.find(v);
        if (it == adj.end() || it->second.size() != 2) return std::nullopt;
    }
    // Walk the cycle starting from the smallest vertex toward its smaller neighbor.
    Variable start = *s.begin();
    std::vector<Variable> cycle{start};
    std::set<Variable> seen{start};
    Variable prev = start;
    Variable cur = std::min(adj[start][0], adj[start][1]);
    while (cur != start) {
        if (!seen.insert(cur).second) return std::nullopt; // two components
        cycle.push_back(cur);
        const auto& nb = adj[cur];
        Variable next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    if (cycle.size() != s.size()) return std::nullopt;
    return cycle;
}

inline bool clique_core_on(const Hypergraph& h, const std::set<Variable>& s) {
    if (s.size() < 3) return false;
    auto maximal = induced_maximal_edges(h, s);
    std::set<std::set<Variable>> got(maximal.begin(), maximal.end());
    std::set<std::set<Variable>> want;
    for (const Variable& skip : s) {
        std::set<Variable> sub = s;
        sub.erase(skip);
        want.insert(std::move(sub));
    }
    return got == want;
}

template <typename Fn>
void for_each_subset_of_size(const std::vector<Variable>& verts, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > verts.size()) return;
    while (true) {
        std::set<Variable> s;
        for (std::size_t i : idx) s.insert(verts[i]);
        if (fn(s)) return;
        // next combination
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + verts.size() - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

} // namespace detail

inline bool verify_hard_witness(const Hypergraph& h, const HardWitness& w) {
    std::set<Variable> s(w.vertices.begin(), w.vertices.end());
    if (w.kind == HardWitness::Kind::chordless_cycle) {
        if (s.size() != w.vertices.size() || s.size() < 3) return false;
        auto maximal = detail::induced_maximal_edges(h, s);
        std::set<std::set<Variable>> got(maximal.begin(), maximal.end());
        std::set<std::set<Variable>> want;
        for (std::size_t i = 0; i < w.vertices.size(); ++i)
            want.insert({w.vertices[i], w.vertices[(i + 1) % w.vertices.size()]});
        return got == want;
    }
    return detail::clique_core_on(h, s);
}

// Exhaustive search for a hard substructure of a cyclic hypergraph: subsets in
// increasing size, chordless cycles before clique cores within each size.
inline HardWitness find_hard_witness(const Hypergraph& h) {
    if (gyo_acyclicity(h).acyclic) throw IsAcyclic();
    std::optional<HardWitness> found;
    for (std::size_t k = 3; k <= h.vertices.size() && !found; ++k) {
        detail::for_each_subset_of_size(h.vertices, k, [&](const std::set<Variable>& s) {
            if (auto cyc = detail::chordless_cycle_on(h, s)) {
                found = HardWitness{HardWitness::Kind::chordless_cycle, *cyc};
                return true;
            }
            return false;
        });
        if (found) break;
        detail::for_each_subset_of_size(h.vertices, k, [&](const std::set<Variable>& s) {
            if (detail::clique_core_on(h, s)) {
                found = HardWitness{HardWitness::Kind::clique_core,
                                    std::vector<Variable>(s.begin(), s.end())};
                return true;
            }
            return false;
        });
    }
    if (!found) throw Error("cyclic hypergraph without a hard witness; this should be impossible");
    return *found;
}

} // namespace fgcq

#endif // FGCQ_STRUCTURE_HPP
