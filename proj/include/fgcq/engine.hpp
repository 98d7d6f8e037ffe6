#ifndef FGCQ_ENGINE_HPP
#define FGCQ_ENGINE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include <fgcq/database.hpp>
#include <fgcq/hypergraph.hpp>
#include <fgcq/query.hpp>
#include <fgcq/relops.hpp>
#include <fgcq/structure.hpp>

namespace fgcq {

struct AnswerSet {
    std::vector<Variable> head;
    std::set<Tuple> tuples;
};

// Backtracking evaluation over the atoms, most-constrained atom next. This is
// the reference oracle: no index structures, no structural shortcuts.
inline AnswerSet brute_force_answers(const ConjunctiveQuery& q, const Database& db) {
    relops::QueryIndex qi = relops::QueryIndex::build(q);
    AnswerSet out;
    out.head = q.head;

    std::vector<const Relation*> rels;
    for (const Atom& a : q.body) {
        auto it = db.relations.find(a.relation);
        if (it == db.relations.end())
            throw Error("relation '" + a.relation + "' not present in the database");
        if (it->second.arity != a.args.size())
            throw Error("relation '" + a.relation + "' arity mismatch");
        rels.push_back(&it->second);
    }

    constexpr ValueId kUnbound = std::numeric_limits<ValueId>::max();
    std::vector<ValueId> assign(qi.num_vars(), kUnbound);
    std::vector<bool> used(q.body.size(), false);

    auto pick_atom = [&]() {
        std::size_t best = q.body.size();
        std::size_t best_bound = 0;
        std::size_t best_size = 0;
        for (std::size_t a = 0; a < q.body.size(); ++a) {
            if (used[a]) continue;
            std::size_t bound = 0;
            for (relops::VarId v : qi.atom_schemas[a])
                if (assign[v] != kUnbound) ++bound;
            std::size_t size = rels[a]->tuples.size();
            if (best == q.body.size() || bound > best_bound ||
                (bound == best_bound && size < best_size)) {
                best = a;
                best_bound = bound;
                best_size = size;
            }
        }
        return best;
    };

    auto emit = [&]() {
        Tuple t;
        t.reserve(qi.head.size());
        for (relops::VarId v : qi.head) t.push_back(assign[v]);
        out.tuples.insert(std::move(t));
    };

    std::vector<std::size_t> newly;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        std::size_t a = pick_atom();
        used[a] = true;
        const auto& args = qi.atom_args[a];
        for (const Tuple& t : rels[a]->tuples) {
            bool ok = true;
            std::size_t mark = newly.size();
            for (std::size_t i = 0; i < args.size() && ok; ++i) {
                ValueId cur = assign[args[i]];
                if (cur == kUnbound) {
                    assign[args[i]] = t[i];
                    newly.push_back(args[i]);
                } else if (cur != t[i]) {
                    ok = false;
                }
            }
            if (ok) self(self, remaining - 1);
            while (newly.size() > mark) {
                assign[newly.back()] = kUnbound;
                newly.pop_back();
            }
        }
        used[a] = false;
    };
    rec(rec, q.body.size());
    return out;
}

// Shrinks every relation to the tuples that participate in at least one full
// join result (leaf-to-root and root-to-leaf semijoin passes). The answer set
// is unchanged.
inline Database full_reduce(const ConjunctiveQuery& q, const JoinTree& tree, const Database& db) {
    Hypergraph h = build_hypergraph(q);
    if (!validate_join_tree(h, tree)) throw InvalidTree();
    relops::QueryIndex qi = relops::QueryIndex::build(q);
    relops::TreeEval te = relops::TreeEval::build(qi, q, db, tree);
    te.reduce_bottom_up();
    te.reduce_top_down();

    Database out;
    out.domain = db.domain;
    // Relations not mentioned by the query are passed through unchanged.
    for (const auto& [sym, rel] : db.relations) out.relations[sym] = Relation{rel.arity, {}};
    std::set<std::string> touched;
    for (const Atom& a : q.body) touched.insert(a.relation);
    for (const auto& [sym, rel] : db.relations)
        if (!touched.count(sym)) out.relations[sym] = rel;

    // A tuple survives if some atom of its symbol maps it into a surviving
    // node assignment.
    for (std::size_t n = 0; n < te.tree.nodes.size(); ++n) {
        relops::TupleSet node_set(te.node_rels[n].tuples.begin(), te.node_rels[n].tuples.end());
        for (std::size_t a : te.node_atoms[n]) {
            const Atom& atom = q.body[a];
            const Relation& src = db.relations.at(atom.relation);
            Relation& dst = out.relations[atom.relation];
            const auto& args = qi.atom_args[a];
            std::vector<std::size_t> first_pos;
            for (relops::VarId v : te.node_rels[n].schema)
                for (std::size_t i = 0; i < args.size(); ++i)
                    if (args[i] == v) {
                        first_pos.push_back(i);
                        break;
                    }
            for (const Tuple& t : src.tuples) {
                bool ok = true;
                for (std::size_t i = 0; i < args.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < args.size() && ok; ++j)
                        if (args[i] == args[j] && t[i] != t[j]) ok = false;
                if (!ok) continue;
                if (node_set.count(relops::project_tuple(t, first_pos))) dst.add(t);
            }
        }
    }
    out.normalize();
    return out;
}

// Yannakakis decision procedure: one leaf-to-root semijoin pass, then test the
// root. O(m) dictionary operations for a fixed query. The head is ignored.
inline bool yannakakis_boolean(const ConjunctiveQuery& q, const Database& db) {
    Hypergraph h = build_hypergraph(q);
    GyoResult gyo = gyo_acyclicity(h);
    if (!gyo.acyclic) throw NotAcyclic();
    JoinTree tree = build_join_tree(h);
    relops::QueryIndex qi = relops::QueryIndex::build(q);
    relops::TreeEval te = relops::TreeEval::build(qi, q, db, tree);
    te.reduce_bottom_up();
    return !te.node_rels[te.tree.root].tuples.empty();
}

namespace detail {

// Equivalent all-free join query for a free-connex query: relations over
// subsets of the head variables whose join is exactly the head projection of
// the original query, together with a join tree over them.
//
// Produced by eliminating quantified variables: project a variable private to
// one relation, fold a relation into a superset relation by semijoin, set
// aside all-head relations, and, when one relation covers every remaining head
// variable, keep only head projections of its connected component. Each step
// mirrors a GYO step on the hypergraph extended with the head edge, so for a
// free-connex query the loop always completes.
struct HeadPlan {
    relops::QueryIndex qi;
    bool empty_result = false;
    std::vector<relops::Rel> rels;                   // schemas over head variables only
    std::vector<std::optional<std::size_t>> parent;  // tree over rels
    std::size_t root = 0;
    std::vector<std::size_t> bfs_order;
};

inline HeadPlan build_head_plan(const ConjunctiveQuery& q, const Database& db) {
    if (!is_free_connex(q)) throw NotFreeConnex();
    HeadPlan plan;
    plan.qi = relops::QueryIndex::build(q);
    const relops::QueryIndex& qi = plan.qi;

    std::set<relops::VarId> headset(qi.head.begin(), qi.head.end());

    // Initial relations: one per distinct atom schema, globally reduced.
    Hypergraph h = build_hypergraph(q);
    relops::TreeEval te = relops::TreeEval::build(qi, q, db, build_join_tree(h));
    te.reduce_bottom_up();
    te.reduce_top_down();
    std::vector<relops::Rel> currents = std::move(te.node_rels);
    std::vector<relops::Rel> outputs;

    auto quantified_in = [&](const relops::Rel& r) {
        std::vector<relops::VarId> qs;
        for (relops::VarId v : r.schema)
            if (!headset.count(v)) qs.push_back(v);
        return qs;
    };

    bool done = false;
    while (!done) {
        for (const auto& r : currents)
            if (r.tuples.empty()) plan.empty_result = true;
        for (const auto& r : outputs)
            if (r.tuples.empty()) plan.empty_result = true;
        if (plan.empty_result) {
            currents.clear();
            outputs.clear();
            break;
        }

        // exit: no quantified variables left anywhere
        bool any_quantified = false;
        for (const auto& r : currents)
            if (!quantified_in(r).empty()) any_quantified = true;
        if (!any_quantified) {
            for (auto& r : currents) outputs.push_back(std::move(r));
            currents.clear();
            break;
        }

        // (A) project away a quantified variable private to one relation
        {
            std::map<relops::VarId, std::vector<std::size_t>> occ;
            for (std::size_t i = 0; i < currents.size(); ++i)
                for (relops::VarId v : quantified_in(currents[i])) occ[v].push_back(i);
            bool stepped = false;
            for (const auto& [v, where] : occ) {
                if (where.size() == 1) {
                    relops::Rel& r = currents[where[0]];
                    relops::Schema keep;
                    for (relops::VarId w : r.schema)
                        if (w != v) keep.push_back(w);
                    r = relops::project(r, keep);
                    stepped = true;
                    break;
                }
            }
            if (stepped) continue;
        }

        // (B) fold a relation into a relation over a superset schema
        {
            bool stepped = false;
            for (std::size_t i = 0; i < currents.size() && !stepped; ++i)
                for (std::size_t j = 0; j < currents.size() && !stepped; ++j) {
                    if (i == j) continue;
                    if (relops::schema_subset(currents[i].schema, currents[j].schema)) {
                        relops::semijoin(currents[j], currents[i]);
                        currents.erase(currents.begin() + static_cast<std::ptrdiff_t>(i));
                        stepped = true;
                    }
                }
            if (stepped) continue;
        }

        // (C) set aside a relation that is already over head variables only
        {
            bool stepped = false;
            for (std::size_t i = 0; i < currents.size(); ++i)
                if (quantified_in(currents[i]).empty()) {
                    outputs.push_back(std::move(currents[i]));
                    currents.erase(currents.begin() + static_cast<std::ptrdiff_t>(i));
                    stepped = true;
                    break;
                }
            if (stepped) continue;
        }

        // (D) one relation covers every head variable still in play: keep the
        // head projections of its connected component, drop the rest
        {
            std::set<relops::VarId> live_heads;
            for (const auto& r : currents)
                for (relops::VarId v : r.schema)
                    if (headset.count(v)) live_heads.insert(v);
            std::optional<std::size_t> cover;
            for (std::size_t i = 0; i < currents.size() && !cover; ++i) {
                bool all = true;
                for (relops::VarId v : live_heads)
                    if (!std::binary_search(currents[i].schema.begin(), currents[i].schema.end(), v))
                        all = false;
                if (all) cover = i;
            }
            if (cover) {
                // connected component of the covering relation
                std::vector<bool> in_comp(currents.size(), false);
                in_comp[*cover] = true;
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (std::size_t i = 0; i < currents.size(); ++i) {
                        if (in_comp[i]) continue;
                        for (std::size_t j = 0; j < currents.size(); ++j)
                            if (in_comp[j] &&
                                !relops::shared_vars(currents[i].schema, currents[j].schema).empty()) {
                                in_comp[i] = true;
                                grew = true;
                                break;
                            }
                    }
                }
                // relations outside the component carry no head variables and
                // are satisfiable (all tuples participate in the full join)
                for (std::size_t i = 0; i < currents.size(); ++i) {
                    if (!in_comp[i]) continue;
                    relops::Schema keep;
                    for (relops::VarId v : currents[i].schema)
                        if (headset.count(v)) keep.push_back(v);
                    outputs.push_back(relops::project(currents[i], keep));
                }
                currents.clear();
                done = true;
                continue;
            }
        }

        throw Error("free-connex elimination made no progress; this should be impossible");
    }

    if (plan.empty_result) return plan;

    // Merge duplicate schemas, drop neutral zero-arity relations.
    {
        std::map<relops::Schema, relops::Rel> merged;
        for (auto& r : outputs) {
            auto it = merged.find(r.schema);
            if (it == merged.end())
                merged.emplace(r.schema, std::move(r));
            else
                relops::intersect(it->second, r);
        }
        outputs.clear();
        for (auto& [s, r] : merged) {
            if (r.tuples.empty()) {
                plan.empty_result = true;
                return plan;
            }
            if (!s.empty()) outputs.push_back(std::move(r));
        }
    }

    if (outputs.empty()) return plan; // Boolean query, satisfiable: one empty answer

    // Join tree over the output schemas (acyclic by construction).
    std::vector<std::vector<Variable>> edges;
    for (const auto& r : outputs) {
        std::vector<Variable> e;
        for (relops::VarId v : r.schema) e.push_back(qi.vars[v]);
        edges.push_back(std::move(e));
    }
    Hypergraph oh = make_hypergraph(edges);
    JoinTree jt = build_join_tree(oh);
    plan.rels.resize(outputs.size());
    plan.parent.assign(outputs.size(), std::nullopt);
    std::map<relops::Schema, std::size_t> node_of;
    for (std::size_t i = 0; i < jt.nodes.size(); ++i) node_of[qi.schema_of(jt.nodes[i])] = i;
    for (auto& r : outputs) plan.rels[node_of.at(r.schema)] = std::move(r);
    for (std::size_t i = 0; i < jt.nodes.size(); ++i)
        plan.parent[i] = jt.parent[i];
    plan.root = jt.root;
    {
        std::vector<std::vector<std::size_t>> ch(plan.rels.size());
        for (std::size_t i = 0; i < plan.rels.size(); ++i)
            if (plan.parent[i]) ch[*plan.parent[i]].push_back(i);
        plan.bfs_order.push_back(plan.root);
        for (std::size_t k = 0; k < plan.bfs_order.size(); ++k)
            for (std::size_t c : ch[plan.bfs_order[k]]) plan.bfs_order.push_back(c);
    }

    // Global reduction so that during enumeration every partial assignment
    // extends to an answer.
    for (std::size_t k = plan.bfs_order.size(); k-- > 0;) {
        std::size_t u = plan.bfs_order[k];
        if (plan.parent[u]) relops::semijoin(plan.rels[*plan.parent[u]], plan.rels[u]);
    }
    for (std::size_t u : plan.bfs_order)
        if (plan.parent[u]) relops::semijoin(plan.rels[u], plan.rels[*plan.parent[u]]);
    for (const auto& r : plan.rels)
        if (r.tuples.empty()) {
            plan.empty_result = true;
            return plan;
        }
    return plan;
}

} // namespace detail

// Exact answer count for a free-connex acyclic query, via a bottom-up count
// DP over the all-free equivalent join query. O(m log m) for a fixed query.
inline std::uint64_t count_answers(const ConjunctiveQuery& q, const Database& db) {
    detail::HeadPlan plan = detail::build_head_plan(q, db);
    if (plan.empty_result) return 0;
    if (plan.rels.empty()) return 1; // Boolean true: the empty answer
    std::vector<relops::TupleMap<relops::Count>> counts(plan.rels.size());
    std::vector<std::vector<std::size_t>> ch(plan.rels.size());
    for (std::size_t i = 0; i < plan.rels.size(); ++i)
        if (plan.parent[i]) ch[*plan.parent[i]].push_back(i);
    for (std::size_t k = plan.bfs_order.size(); k-- > 0;) {
        std::size_t u = plan.bfs_order[k];
        // child counts grouped by shared-variable key
        std::vector<relops::TupleMap<relops::Count>> grouped;
        std::vector<std::vector<std::size_t>> keypos;
        for (std::size_t c : ch[u]) {
            relops::Schema shared = relops::shared_vars(plan.rels[u].schema, plan.rels[c].schema);
            auto cpos = relops::positions_of(plan.rels[c].schema, shared);
            relops::TupleMap<relops::Count> g;
            for (const Tuple& t : plan.rels[c].tuples) {
                auto it = counts[c].find(t);
                relops::Count cc = it == counts[c].end() ? 0 : it->second;
                g[relops::project_tuple(t, cpos)] += cc;
            }
            grouped.push_back(std::move(g));
            keypos.push_back(relops::positions_of(plan.rels[u].schema, shared));
        }
        for (const Tuple& t : plan.rels[u].tuples) {
            relops::Count c = 1;
            for (std::size_t i = 0; i < grouped.size() && c > 0; ++i) {
                auto it = grouped[i].find(relops::project_tuple(t, keypos[i]));
                c = (it == grouped[i].end()) ? 0 : c * it->second;
            }
            counts[u][t] = c;
        }
    }
    relops::Count total = 0;
    for (const Tuple& t : plan.rels[plan.root].tuples) total += counts[plan.root][t];
    if (total > std::numeric_limits<std::uint64_t>::max())
        throw Error("answer count exceeds 64 bits");
    return static_cast<std::uint64_t>(total);
}

// Constant-delay enumeration session. Preprocessing builds the reduced head
// plan with per-node candidate buckets; each next() then advances an odometer
// over the plan tree, so the gap between answers depends on the query alone.
class EnumerationSession {
public:
    EnumerationSession(const ConjunctiveQuery& q, const Database& db)
        : plan_(detail::build_head_plan(q, db)) {
        if (plan_.empty_result) {
            exhausted_ = true;
            return;
        }
        if (plan_.rels.empty()) {
            trivial_ = true; // single empty answer
            return;
        }
        const std::size_t n = plan_.rels.size();
        buckets_.resize(n);
        key_pos_.resize(n);
        assign_.assign(plan_.qi.num_vars(), 0);
        order_ = plan_.bfs_order;
        for (std::size_t u : order_) {
            if (!plan_.parent[u]) continue;
            std::size_t p = *plan_.parent[u];
            relops::Schema shared = relops::shared_vars(plan_.rels[p].schema, plan_.rels[u].schema);
            auto upos = relops::positions_of(plan_.rels[u].schema, shared);
            // key positions are expressed over variable assignment, the key is
            // built from the parent-side values already assigned
            key_pos_[u].clear();
            for (relops::VarId v : shared) key_pos_[u].push_back(v);
            for (std::size_t ti = 0; ti < plan_.rels[u].tuples.size(); ++ti)
                buckets_[u][relops::project_tuple(plan_.rels[u].tuples[ti], upos)].push_back(ti);
        }
        // the root gets a single bucket keyed by the empty tuple
        {
            std::size_t r = plan_.root;
            auto& all = buckets_[r][Tuple{}];
            all.resize(plan_.rels[r].tuples.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        }
        cursor_.assign(n, 0);
        current_bucket_.assign(n, nullptr);
        scratch_.clear();
    }

    EnumerationSession(const EnumerationSession&) = delete;
    EnumerationSession& operator=(const EnumerationSession&) = delete;
    EnumerationSession(EnumerationSession&&) = default;
    EnumerationSession& operator=(EnumerationSession&&) = default;

    // Writes the next answer (head layout) into `out`; false on exhaustion.
    bool next(Tuple& out) {
        if (exhausted_) return false;
        if (trivial_) {
            out.clear();
            exhausted_ = true;
            return true;
        }
        if (!primed_) {
            primed_ = true;
            for (std::size_t k = 0; k < order_.size(); ++k)
                if (!descend(k)) { // no root tuples at all
                    exhausted_ = true;
                    return false;
                }
        } else {
            std::size_t k = order_.size();
            while (k-- > 0) {
                std::size_t u = order_[k];
                const auto* vec = current_bucket_[u];
                if (cursor_[u] + 1 < vec->size()) {
                    ++cursor_[u];
                    select(u);
                    for (std::size_t j = k + 1; j < order_.size(); ++j) descend(j);
                    break;
                }
                if (k == 0) {
                    exhausted_ = true;
                    return false;
                }
            }
        }
        out.clear();
        for (relops::VarId v : plan_.qi.head) out.push_back(assign_[v]);
        return true;
    }

private:
    detail::HeadPlan plan_;
    bool trivial_ = false;
    bool exhausted_ = false;
    bool primed_ = false;
    std::vector<std::size_t> order_;
    std::vector<relops::TupleMap<std::vector<std::size_t>>> buckets_;
    std::vector<std::vector<relops::VarId>> key_pos_;
    std::vector<ValueId> assign_;
    std::vector<std::size_t> cursor_;
    std::vector<const std::vector<std::size_t>*> current_bucket_;
    Tuple scratch_;

    void select(std::size_t u) {
        const Tuple& t = plan_.rels[u].tuples[(*current_bucket_[u])[cursor_[u]]];
        const relops::Schema& s = plan_.rels[u].schema;
        for (std::size_t i = 0; i < s.size(); ++i) assign_[s[i]] = t[i];
    }

    // Chooses bucket and first tuple for the k-th node in order; the plan is
    // fully reduced, so buckets for surviving parent tuples are nonempty.
    bool descend(std::size_t k) {
        std::size_t u = order_[k];
        scratch_.clear();
        if (plan_.parent[u])
            for (relops::VarId v : key_pos_[u]) scratch_.push_back(assign_[v]);
        auto it = buckets_[u].find(scratch_);
        if (it == buckets_[u].end() || it->second.empty()) return false;
        current_bucket_[u] = &it->second;
        cursor_[u] = 0;
        select(u);
        return true;
    }
};

inline EnumerationSession enumerate_answers(const ConjunctiveQuery& q, const Database& db) {
    return EnumerationSession(q, db);
}

// Minimum over all join answers of the summed per-atom tuple weights; +inf on
// an empty join. Min-marginalization over a join tree when the query is
// acyclic, backtracking otherwise.
inline double tropical_aggregate(const ConjunctiveQuery& q, const Database& db,
                                 const TupleWeights& weights) {
    if (!q.is_join_query()) throw NotJoinQuery("tropical aggregation is defined for join queries");
    constexpr double kInf = std::numeric_limits<double>::infinity();
    relops::QueryIndex qi = relops::QueryIndex::build(q);

    auto atom_tuple_weight = [&](std::size_t a, const Tuple& node_tuple,
                                 const relops::Schema& schema) {
        // reconstruct the relation tuple matched by the atom
        const auto& args = qi.atom_args[a];
        Tuple rt;
        rt.reserve(args.size());
        for (relops::VarId v : args) {
            auto it = std::lower_bound(schema.begin(), schema.end(), v);
            rt.push_back(node_tuple[static_cast<std::size_t>(it - schema.begin())]);
        }
        return weights.at(q.body[a].relation, rt);
    };

    Hypergraph h = build_hypergraph(q);
    if (gyo_acyclicity(h).acyclic) {
        relops::TreeEval te = relops::TreeEval::build(qi, q, db, build_join_tree(h));
        std::vector<std::vector<double>> cost(te.tree.nodes.size());
        for (std::size_t k = te.bfs_order.size(); k-- > 0;) {
            std::size_t u = te.bfs_order[k];
            const relops::Rel& r = te.node_rels[u];
            cost[u].assign(r.tuples.size(), 0.0);
            for (std::size_t ti = 0; ti < r.tuples.size(); ++ti)
                for (std::size_t a : te.node_atoms[u])
                    cost[u][ti] += atom_tuple_weight(a, r.tuples[ti], r.schema);
        }
        // min-marginalize children into parents, bottom-up
        auto ch = te.tree.children();
        for (std::size_t k = te.bfs_order.size(); k-- > 0;) {
            std::size_t u = te.bfs_order[k];
            for (std::size_t c : ch[u]) {
                const relops::Rel& rc = te.node_rels[c];
                const relops::Rel& ru = te.node_rels[u];
                relops::Schema shared = relops::shared_vars(ru.schema, rc.schema);
                auto cpos = relops::positions_of(rc.schema, shared);
                auto upos = relops::positions_of(ru.schema, shared);
                relops::TupleMap<double> best;
                for (std::size_t ti = 0; ti < rc.tuples.size(); ++ti) {
                    Tuple key = relops::project_tuple(rc.tuples[ti], cpos);
                    auto it = best.find(key);
                    if (it == best.end() || cost[c][ti] < it->second) best[key] = cost[c][ti];
                }
                for (std::size_t ti = 0; ti < ru.tuples.size(); ++ti) {
                    auto it = best.find(relops::project_tuple(ru.tuples[ti], upos));
                    cost[u][ti] += (it == best.end()) ? kInf : it->second;
                }
            }
        }
        double result = kInf;
        for (double c : cost[te.tree.root]) result = std::min(result, c);
        return result;
    }

    // cyclic: desk-scale backtracking over the full answer set
    AnswerSet answers = brute_force_answers(q, db);
    double result = kInf;
    std::vector<relops::VarId> head_pos(qi.num_vars(), 0);
    for (std::size_t i = 0; i < qi.head.size(); ++i) head_pos[qi.head[i]] = static_cast<relops::VarId>(i);
    for (const Tuple& ans : answers.tuples) {
        double total = 0.0;
        for (std::size_t a = 0; a < q.body.size(); ++a) {
            Tuple rt;
            for (relops::VarId v : qi.atom_args[a]) rt.push_back(ans[head_pos[v]]);
            total += weights.at(q.body[a].relation, rt);
        }
        result = std::min(result, total);
    }
    return result;
}

} // namespace fgcq

#endif // FGCQ_ENGINE_HPP
