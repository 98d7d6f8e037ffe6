#ifndef FGCQ_RELOPS_HPP
#define FGCQ_RELOPS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <fgcq/database.hpp>
#include <fgcq/hypergraph.hpp>
#include <fgcq/query.hpp>
#include <fgcq/structure.hpp>

// Internal relational machinery shared by the engine and the direct-access
// index: dense variable ids, per-atom assignment sets, projections and
// semijoins over schema-tagged relations.

namespace fgcq::relops {

using Count = unsigned __int128;

inline std::string count_to_string(Count c) {
    if (c == 0) return "0";
    std::string s;
    while (c > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(c % 10)));
        c /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

struct TupleHash {
    std::size_t operator()(const Tuple& t) const {
        std::size_t h = 1469598103934665603ull;
        for (ValueId v : t) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using TupleSet = std::unordered_set<Tuple, TupleHash>;
template <typename T>
using TupleMap = std::unordered_map<Tuple, T, TupleHash>;

using VarId = std::uint32_t;
using Schema = std::vector<VarId>; // sorted, distinct

// Dense variable numbering for one query, in first-appearance order.
struct QueryIndex {
    std::vector<Variable> vars;
    std::map<Variable, VarId> ids;
    std::vector<std::vector<VarId>> atom_args; // per atom, per position
    std::vector<Schema> atom_schemas;          // per atom, sorted distinct
    std::vector<VarId> head;                   // head positions (repeats possible)

    static QueryIndex build(const ConjunctiveQuery& q) {
        QueryIndex qi;
        auto id_of = [&qi](const Variable& v) {
            auto it = qi.ids.find(v);
            if (it != qi.ids.end()) return it->second;
            VarId id = static_cast<VarId>(qi.vars.size());
            qi.vars.push_back(v);
            qi.ids.emplace(v, id);
            return id;
        };
        for (const Atom& a : q.body) {
            std::vector<VarId> args;
            for (const Variable& v : a.args) args.push_back(id_of(v));
            Schema s = args;
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            qi.atom_args.push_back(std::move(args));
            qi.atom_schemas.push_back(std::move(s));
        }
        for (const Variable& v : q.head) qi.head.push_back(qi.ids.at(v));
        return qi;
    }

    std::size_t num_vars() const { return vars.size(); }

    Schema schema_of(const std::vector<Variable>& vs) const {
        Schema s;
        for (const Variable& v : vs) s.push_back(ids.at(v));
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }
};

// A set of assignments over a schema of query variables.
struct Rel {
    Schema schema;
    std::vector<Tuple> tuples; // sorted, unique

    void normalize() {
        std::sort(tuples.begin(), tuples.end());
        tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    }
};

inline std::vector<std::size_t> positions_of(const Schema& schema, const Schema& sub) {
    std::vector<std::size_t> pos;
    pos.reserve(sub.size());
    for (VarId v : sub) {
        auto it = std::lower_bound(schema.begin(), schema.end(), v);
        pos.push_back(static_cast<std::size_t>(it - schema.begin()));
    }
    return pos;
}

inline Schema shared_vars(const Schema& a, const Schema& b) {
    Schema out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool schema_subset(const Schema& a, const Schema& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Tuple project_tuple(const Tuple& t, const std::vector<std::size_t>& pos) {
    Tuple out;
    out.reserve(pos.size());
    for (std::size_t p : pos) out.push_back(t[p]);
    return out;
}

inline Rel project(const Rel& r, const Schema& onto) {
    Rel out;
    out.schema = onto;
    auto pos = positions_of(r.schema, onto);
    out.tuples.reserve(r.tuples.size());
    for (const Tuple& t : r.tuples) out.tuples.push_back(project_tuple(t, pos));
    out.normalize();
    return out;
}

// left := left ⋉ right on the shared variables. With no shared variables the
// semijoin degenerates to an emptiness test of the right side.
inline void semijoin(Rel& left, const Rel& right) {
    Schema shared = shared_vars(left.schema, right.schema);
    if (shared.empty()) {
        if (right.tuples.empty()) left.tuples.clear();
        return;
    }
    auto rpos = positions_of(right.schema, shared);
    TupleSet keys;
    keys.reserve(right.tuples.size() * 2);
    for (const Tuple& t : right.tuples) keys.insert(project_tuple(t, rpos));
    auto lpos = positions_of(left.schema, shared);
    std::erase_if(left.tuples, [&](const Tuple& t) { return !keys.count(project_tuple(t, lpos)); });
}

// Intersection of two relations over the same schema.
inline void intersect(Rel& a, const Rel& b) {
    std::vector<Tuple> out;
    std::set_intersection(a.tuples.begin(), a.tuples.end(), b.tuples.begin(), b.tuples.end(),
                          std::back_inserter(out));
    a.tuples = std::move(out);
}

// Assignments of one atom: relation tuples that respect repeated arguments,
// projected onto the atom's distinct variables.
inline Rel atom_assignments(const QueryIndex& qi, const ConjunctiveQuery& q, const Database& db,
                            std::size_t atom_idx) {
    const Atom& atom = q.body[atom_idx];
    auto it = db.relations.find(atom.relation);
    if (it == db.relations.end())
        throw Error("relation '" + atom.relation + "' not present in the database");
    const Relation& rel = it->second;
    if (rel.arity != atom.args.size())
        throw Error("relation '" + atom.relation + "' has arity " + std::to_string(rel.arity) +
                    " but the atom uses " + std::to_string(atom.args.size()));
    const auto& args = qi.atom_args[atom_idx];
    Rel out;
    out.schema = qi.atom_schemas[atom_idx];
    // position of each schema variable's first occurrence among the args
    std::vector<std::size_t> first_pos;
    for (VarId v : out.schema) {
        for (std::size_t i = 0; i < args.size(); ++i)
            if (args[i] == v) {
                first_pos.push_back(i);
                break;
            }
    }
    for (const Tuple& t : rel.tuples) {
        bool ok = true;
        for (std::size_t i = 0; i < args.size() && ok; ++i)
            for (std::size_t j = i + 1; j < args.size() && ok; ++j)
                if (args[i] == args[j] && t[i] != t[j]) ok = false;
        if (!ok) continue;
        Tuple a;
        a.reserve(first_pos.size());
        for (std::size_t p : first_pos) a.push_back(t[p]);
        out.tuples.push_back(std::move(a));
    }
    out.normalize();
    return out;
}

// Join-tree evaluation state: one relation per tree node, nodes aligned with
// the distinct atom schemas of the query.
struct TreeEval {
    JoinTree tree;
    std::vector<Rel> node_rels;                  // aligned with tree.nodes
    std::vector<std::vector<std::size_t>> node_atoms;
    std::vector<std::size_t> bfs_order;          // root first

    static TreeEval build(const QueryIndex& qi, const ConjunctiveQuery& q, const Database& db,
                          const JoinTree& tree) {
        TreeEval te;
        te.tree = tree;
        te.node_rels.resize(tree.nodes.size());
        te.node_atoms.resize(tree.nodes.size());
        std::map<Schema, std::size_t> node_of_schema;
        for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
            Schema s = qi.schema_of(tree.nodes[i]);
            te.node_rels[i].schema = s;
            node_of_schema[s] = i;
        }
        std::vector<bool> filled(tree.nodes.size(), false);
        for (std::size_t a = 0; a < q.body.size(); ++a) {
            auto it = node_of_schema.find(qi.atom_schemas[a]);
            if (it == node_of_schema.end()) throw InvalidTree("tree node missing for an atom");
            std::size_t n = it->second;
            te.node_atoms[n].push_back(a);
            Rel r = atom_assignments(qi, q, db, a);
            if (!filled[n]) {
                te.node_rels[n] = std::move(r);
                filled[n] = true;
            } else {
                intersect(te.node_rels[n], r);
            }
        }
        for (std::size_t i = 0; i < tree.nodes.size(); ++i)
            if (!filled[i]) throw InvalidTree("tree node without any atom");
        // BFS from the root
        auto ch = te.tree.children();
        te.bfs_order.push_back(te.tree.root);
        for (std::size_t k = 0; k < te.bfs_order.size(); ++k)
            for (std::size_t c : ch[te.bfs_order[k]]) te.bfs_order.push_back(c);
        if (te.bfs_order.size() != tree.nodes.size()) throw InvalidTree("tree is not connected");
        return te;
    }

    // Leaf-to-root semijoin pass; afterwards the root holds exactly the node
    // tuples that extend to a full assignment.
    void reduce_bottom_up() {
        for (std::size_t k = bfs_order.size(); k-- > 0;) {
            std::size_t u = bfs_order[k];
            if (tree.parent[u]) semijoin(node_rels[*tree.parent[u]], node_rels[u]);
        }
    }

    // Root-to-leaf pass; after both passes every node tuple participates in
    // some full join result.
    void reduce_top_down() {
        for (std::size_t u : bfs_order)
            if (tree.parent[u]) semijoin(node_rels[u], node_rels[*tree.parent[u]]);
    }
};

} // namespace fgcq::relops

#endif // FGCQ_RELOPS_HPP
