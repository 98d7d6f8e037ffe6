#ifndef FGCQ_ACCESS_HPP
#define FGCQ_ACCESS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <fgcq/database.hpp>
#include <fgcq/engine.hpp>
#include <fgcq/query.hpp>
#include <fgcq/relops.hpp>
#include <fgcq/structure.hpp>

namespace fgcq {

// A variable order plus the underlying domain order that together induce the
// lexicographic order on answers.
struct VariableOrder {
    std::vector<Variable> vars;
    enum class DomainOrder { by_id, by_value } domain_order = DomainOrder::by_id;
};

namespace detail {

// Future-component of the variable order: formed when its first variable (in
// order position) is processed, merging the components hanging off it. The
// attachment set of a component is a co-occurrence clique, so (attachment +
// formation variable) fits inside one atom and the per-component tables stay
// linear in the database.
struct LexComponent {
    relops::Schema attach;                 // earlier variables adjacent to the component
    std::vector<std::size_t> children;     // components merged into this one
    relops::TupleMap<relops::Count> tau;   // attachment assignment -> extension count
    // attachment assignment -> candidates for the formation variable, sorted
    // by domain rank, carrying cumulative extension counts
    relops::TupleMap<std::vector<std::pair<ValueId, relops::Count>>> cands;
};

} // namespace detail

// Simulated sorted answer array for a join query under a lexicographic order:
// O(m log m) preprocessing, then each access resolves one variable at a time
// by binary search on cumulative counts.
class DirectAccessIndex {
public:
    DirectAccessIndex(const ConjunctiveQuery& q, const VariableOrder& order, const Database& db)
        : order_(order) {
        if (!q.is_join_query()) throw NotJoinQuery("direct access is defined for join queries");
        Hypergraph h = build_hypergraph(q);
        if (!gyo_acyclicity(h).acyclic) throw NotAcyclic();
        auto trios = find_disruptive_trios(q, order.vars);
        if (!trios.empty())
            throw DisruptiveTrioPresent(trios[0].y1.name, trios[0].y2.name, trios[0].y3.name);

        qi_ = relops::QueryIndex::build(q);
        head_vars_ = q.head;
        const std::size_t k = order.vars.size();
        pi_.reserve(k);
        for (const Variable& v : order.vars) pi_.push_back(qi_.ids.at(v));

        // domain rank under the requested order
        rank_.resize(db.domain.size());
        if (order.domain_order == VariableOrder::DomainOrder::by_value) {
            std::vector<ValueId> ids(db.domain.size());
            for (ValueId i = 0; i < ids.size(); ++i) ids[i] = i;
            std::sort(ids.begin(), ids.end(), [&](ValueId a, ValueId b) {
                return db.domain.value(a) < db.domain.value(b);
            });
            for (std::size_t r = 0; r < ids.size(); ++r) rank_[ids[r]] = static_cast<ValueId>(r);
        } else {
            for (ValueId i = 0; i < rank_.size(); ++i) rank_[i] = i;
        }

        // globally reduced relation per distinct atom schema
        relops::TreeEval te = relops::TreeEval::build(qi_, q, db, build_join_tree(h));
        te.reduce_bottom_up();
        te.reduce_top_down();
        std::map<relops::Schema, relops::Rel> rel_of;
        std::map<relops::Schema, relops::TupleSet> set_of;
        for (auto& r : te.node_rels) {
            set_of[r.schema] = relops::TupleSet(r.tuples.begin(), r.tuples.end());
            rel_of[r.schema] = std::move(r);
        }

        // co-occurrence adjacency
        std::vector<std::set<relops::VarId>> adj(qi_.num_vars());
        for (const auto& s : qi_.atom_schemas)
            for (relops::VarId a : s)
                for (relops::VarId b : s)
                    if (a != b) adj[a].insert(b);

        std::vector<std::size_t> pos_of(qi_.num_vars(), 0);
        for (std::size_t j = 0; j < k; ++j) pos_of[pi_[j]] = j;

        comp_at_level_.assign(k, 0);
        std::vector<std::size_t> alive;
        for (std::size_t j = k; j-- > 0;) {
            relops::VarId x = pi_[j];
            detail::LexComponent comp;
            // merge the alive components whose attachment contains x
            std::set<relops::VarId> attach_set;
            for (relops::VarId y : adj[x])
                if (pos_of[y] < j) attach_set.insert(y);
            std::vector<std::size_t> next_alive;
            for (std::size_t ci : alive) {
                const auto& a = comps_[ci].attach;
                if (std::binary_search(a.begin(), a.end(), x)) {
                    comp.children.push_back(ci);
                    for (relops::VarId y : a)
                        if (y != x) attach_set.insert(y);
                } else {
                    next_alive.push_back(ci);
                }
            }
            comp.attach.assign(attach_set.begin(), attach_set.end());

            // attachment + x is a co-occurrence clique; acyclicity makes it
            // conformal, so some atom covers it
            relops::Schema key_schema = comp.attach;
            key_schema.insert(std::lower_bound(key_schema.begin(), key_schema.end(), x), x);
            const relops::Schema* cover = nullptr;
            for (const auto& s : qi_.atom_schemas)
                if (relops::schema_subset(key_schema, s)) {
                    cover = &s;
                    break;
                }
            if (!cover)
                throw Error("no atom covers a component attachment; the order check should prevent this");

            // atoms over past variables plus x, to filter candidate combos
            std::vector<const relops::TupleSet*> filters;
            std::vector<std::vector<std::size_t>> filter_pos;
            std::set<relops::Schema> seen_filters;
            for (const auto& s : qi_.atom_schemas) {
                if (!std::binary_search(s.begin(), s.end(), x)) continue;
                if (!relops::schema_subset(s, key_schema)) continue;
                if (!seen_filters.insert(s).second) continue;
                filters.push_back(&set_of.at(s));
                filter_pos.push_back(relops::positions_of(key_schema, s));
            }

            relops::Rel source = relops::project(rel_of.at(*cover), key_schema);
            auto attach_pos = relops::positions_of(key_schema, comp.attach);
            std::size_t x_pos = relops::positions_of(key_schema, {x})[0];
            std::vector<std::vector<std::size_t>> child_key_pos;
            for (std::size_t ci : comp.children)
                child_key_pos.push_back(relops::positions_of(key_schema, comps_[ci].attach));

            for (const Tuple& t : source.tuples) {
                bool ok = true;
                for (std::size_t f = 0; f < filters.size() && ok; ++f)
                    if (!filters[f]->count(relops::project_tuple(t, filter_pos[f]))) ok = false;
                if (!ok) continue;
                relops::Count rho = 1;
                for (std::size_t c = 0; c < comp.children.size() && rho > 0; ++c) {
                    const auto& tau = comps_[comp.children[c]].tau;
                    auto it = tau.find(relops::project_tuple(t, child_key_pos[c]));
                    rho = (it == tau.end()) ? 0 : rho * it->second;
                }
                if (rho == 0) continue;
                Tuple key = relops::project_tuple(t, attach_pos);
                comp.tau[key] += rho;
                comp.cands[key].emplace_back(t[x_pos], rho);
            }
            for (auto& [key, list] : comp.cands) {
                std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
                    return rank_[a.first] < rank_[b.first];
                });
                relops::Count run = 0;
                for (auto& [val, c] : list) {
                    run += c;
                    c = run;
                }
            }

            comps_.push_back(std::move(comp));
            comp_at_level_[j] = comps_.size() - 1;
            next_alive.push_back(comps_.size() - 1);
            alive = std::move(next_alive);
        }
        top_comps_ = alive;
        total_ = 1;
        for (std::size_t ci : top_comps_) {
            auto it = comps_[ci].tau.find(Tuple{});
            total_ = (it == comps_[ci].tau.end()) ? 0 : total_ * it->second;
            if (total_ == 0) break;
        }
    }

    relops::Count total() const { return total_; }
    const VariableOrder& order() const { return order_; }
    const std::vector<Variable>& head() const { return head_vars_; }

    // i-th answer (1-based) in the induced lexicographic order, head layout.
    Tuple at(relops::Count i) const {
        if (i == 0 || i > total_) throw OutOfRange();
        relops::Count remaining = i;
        std::vector<ValueId> assign(qi_.num_vars(), 0);
        std::vector<std::size_t> active = top_comps_;
        for (std::size_t j = 0; j < pi_.size(); ++j) {
            std::size_t star = comp_at_level_[j];
            relops::Count mult = 1;
            for (std::size_t ci : active) {
                if (ci == star) continue;
                mult *= comps_[ci].tau.at(key_for(ci, assign));
            }
            const auto& list = comps_[star].cands.at(key_for(star, assign));
            // smallest candidate with mult * cum >= remaining
            std::size_t lo = 0, hi = list.size() - 1;
            while (lo < hi) {
                std::size_t mid = (lo + hi) / 2;
                if (mult * list[mid].second >= remaining)
                    hi = mid;
                else
                    lo = mid + 1;
            }
            relops::Count before = (lo == 0) ? 0 : list[lo - 1].second;
            remaining -= mult * before;
            assign[pi_[j]] = list[lo].first;
            // replace the formed component by its children
            std::vector<std::size_t> next;
            for (std::size_t ci : active)
                if (ci != star) next.push_back(ci);
            for (std::size_t c : comps_[star].children) next.push_back(c);
            active = std::move(next);
        }
        Tuple out;
        out.reserve(qi_.head.size());
        for (relops::VarId v : qi_.head) out.push_back(assign[v]);
        return out;
    }

    // Does any answer extend the given assignment to a prefix of the variable
    // order?  Binary search over positions, using only at() calls.
    bool test_prefix(const Tuple& prefix) const {
        if (prefix.size() > pi_.size()) throw PrefixMismatch();
        if (prefix.empty()) return total_ > 0;
        for (ValueId v : prefix)
            if (v >= rank_.size()) throw UnknownValue("prefix value not in the domain");
        relops::Count lo = 1, hi = total_;
        if (total_ == 0) return false;
        while (lo < hi) {
            relops::Count mid = lo + (hi - lo) / 2;
            if (compare_prefix(at(mid), prefix) < 0)
                lo = mid + 1;
            else
                hi = mid;
        }
        return compare_prefix(at(lo), prefix) == 0;
    }

private:
    VariableOrder order_;
    relops::QueryIndex qi_;
    std::vector<Variable> head_vars_;
    std::vector<relops::VarId> pi_;
    std::vector<ValueId> rank_;
    std::vector<detail::LexComponent> comps_;
    std::vector<std::size_t> comp_at_level_;
    std::vector<std::size_t> top_comps_;
    relops::Count total_ = 0;

    Tuple key_for(std::size_t ci, const std::vector<ValueId>& assign) const {
        Tuple key;
        key.reserve(comps_[ci].attach.size());
        for (relops::VarId v : comps_[ci].attach) key.push_back(assign[v]);
        return key;
    }

    // lexicographic comparison of an answer against a prefix, in order
    // positions, by domain rank
    int compare_prefix(const Tuple& answer_head_layout, const Tuple& prefix) const {
        // map head layout back to order positions
        for (std::size_t j = 0; j < prefix.size(); ++j) {
            ValueId av = 0;
            for (std::size_t hp = 0; hp < qi_.head.size(); ++hp)
                if (qi_.head[hp] == pi_[j]) {
                    av = answer_head_layout[hp];
                    break;
                }
            if (rank_[av] < rank_[prefix[j]]) return -1;
            if (rank_[av] > rank_[prefix[j]]) return 1;
        }
        return 0;
    }
};

inline DirectAccessIndex build_lex_index(const ConjunctiveQuery& q, const VariableOrder& order,
                                         const Database& db) {
    return DirectAccessIndex(q, order, db);
}

inline Tuple lex_access(const DirectAccessIndex& idx, relops::Count i) { return idx.at(i); }

inline bool test_prefix(const DirectAccessIndex& idx, const Tuple& prefix) {
    return idx.test_prefix(prefix);
}

// Materialized answer array of a join query with a covering atom, sorted by
// summed domain weights, ties broken lexicographically by interned id.
struct SumOrderIndex {
    std::vector<Variable> head;
    std::vector<Tuple> answers;        // head layout
    std::vector<long long> weights;    // aligned with answers, non-decreasing

    std::size_t total() const { return answers.size(); }

    const Tuple& at(std::size_t i) const {
        if (i == 0 || i > answers.size()) throw OutOfRange();
        return answers[i - 1];
    }
};

inline SumOrderIndex sum_order_index(const ConjunctiveQuery& q, const WeightMap& weights,
                                     const Database& db) {
    if (!q.is_join_query()) throw NotJoinQuery("sum-order access is defined for join queries");
    relops::QueryIndex qi = relops::QueryIndex::build(q);
    relops::Schema all_vars;
    for (relops::VarId v = 0; v < qi.num_vars(); ++v) all_vars.push_back(v);
    bool covered = false;
    for (const auto& s : qi.atom_schemas)
        if (s == all_vars) covered = true;
    if (!covered) throw NoCoveringAtom();

    Hypergraph h = build_hypergraph(q);
    relops::TreeEval te = relops::TreeEval::build(qi, q, db, build_join_tree(h));
    te.reduce_bottom_up();
    te.reduce_top_down();
    const relops::Rel* full = nullptr;
    for (const auto& r : te.node_rels)
        if (r.schema == all_vars) full = &r;

    SumOrderIndex out;
    out.head = q.head;
    std::vector<std::size_t> head_pos;
    head_pos.reserve(qi.head.size());
    for (relops::VarId v : qi.head)
        head_pos.push_back(relops::positions_of(full->schema, {v})[0]);
    std::vector<std::pair<long long, Tuple>> rows;
    rows.reserve(full->tuples.size());
    for (const Tuple& t : full->tuples) {
        Tuple ans = relops::project_tuple(t, head_pos);
        long long w = 0;
        for (ValueId v : ans) w += weights.at(v);
        rows.emplace_back(w, std::move(ans));
    }
    std::sort(rows.begin(), rows.end());
    out.answers.reserve(rows.size());
    out.weights.reserve(rows.size());
    for (auto& [w, t] : rows) {
        out.weights.push_back(w);
        out.answers.push_back(std::move(t));
    }
    return out;
}

} // namespace fgcq

#endif // FGCQ_ACCESS_HPP
