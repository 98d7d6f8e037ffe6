#ifndef FGCQ_DATABASE_HPP
#define FGCQ_DATABASE_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <fgcq/errors.hpp>

namespace fgcq {

using ValueId = std::uint32_t;
using Tuple = std::vector<ValueId>;

// Bijection between external string values and dense ids, assigned in
// first-appearance order so runs are reproducible for fixed input files.
class Interner {
public:
    ValueId intern(const std::string& s) {
        auto it = ids_.find(s);
        if (it != ids_.end()) return it->second;
        ValueId id = static_cast<ValueId>(values_.size());
        values_.push_back(s);
        ids_.emplace(s, id);
        return id;
    }

    std::optional<ValueId> find(const std::string& s) const {
        auto it = ids_.find(s);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& value(ValueId id) const {
        if (id >= values_.size()) throw UnknownValue("unknown domain id " + std::to_string(id));
        return values_[id];
    }

    std::size_t size() const { return values_.size(); }

private:
    std::vector<std::string> values_;
    std::unordered_map<std::string, ValueId> ids_;
};

struct Relation {
    std::uint32_t arity = 0;
    std::vector<Tuple> tuples; // kept sorted and duplicate-free

    void add(Tuple t) { tuples.push_back(std::move(t)); }

    void normalize() {
        std::sort(tuples.begin(), tuples.end());
        tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    }

    bool contains(const Tuple& t) const {
        return std::binary_search(tuples.begin(), tuples.end(), t);
    }
};

struct Database {
    Interner domain;
    std::map<std::string, Relation> relations;

    std::size_t tuple_count() const {
        std::size_t m = 0;
        for (const auto& [sym, rel] : relations) m += rel.tuples.size();
        return m;
    }

    void normalize() {
        for (auto& [sym, rel] : relations) rel.normalize();
    }

    bool operator==(const Database& other) const {
        if (relations.size() != other.relations.size()) return false;
        for (const auto& [sym, rel] : relations) {
            auto it = other.relations.find(sym);
            if (it == other.relations.end()) return false;
            if (rel.arity != it->second.arity) return false;
            // compare by external values so interner id assignment does not matter
            auto externalize = [](const Database& db, const Relation& r) {
                std::vector<std::vector<std::string>> out;
                for (const Tuple& t : r.tuples) {
                    std::vector<std::string> row;
                    for (ValueId v : t) row.push_back(db.domain.value(v));
                    out.push_back(std::move(row));
                }
                std::sort(out.begin(), out.end());
                return out;
            };
            if (externalize(*this, rel) != externalize(other, it->second)) return false;
        }
        return true;
    }
};

namespace detail {

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace detail

// Loads one CSV file per relation symbol: no header, one tuple per row.
// Duplicate rows are silently deduplicated (set semantics).
inline Database load_database(const std::filesystem::path& dir,
                              const std::vector<std::pair<std::string, std::uint32_t>>& schema) {
    Database db;
    for (const auto& [symbol, arity] : schema) {
        std::filesystem::path file = dir / (symbol + ".csv");
        std::ifstream in(file);
        if (!in) throw IoError("missing relation file: " + file.string());
        Relation rel;
        rel.arity = arity;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line == "\r") continue;
            auto fields = detail::split_csv_row(line);
            if (fields.size() != arity)
                throw IoError(file.string() + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(arity) + " fields, got " + std::to_string(fields.size()));
            Tuple t;
            t.reserve(arity);
            for (const std::string& f : fields) t.push_back(db.domain.intern(f));
            rel.add(std::move(t));
        }
        rel.normalize();
        db.relations.emplace(symbol, std::move(rel));
    }
    return db;
}

// Number of (relation, tuple) pairs in which the value appears. A tuple counts
// once even when the value occupies several positions.
inline std::size_t degree(const Database& db, ValueId v) {
    if (v >= db.domain.size()) throw UnknownValue("domain id " + std::to_string(v) + " not interned");
    std::size_t d = 0;
    for (const auto& [sym, rel] : db.relations)
        for (const Tuple& t : rel.tuples)
            if (std::find(t.begin(), t.end(), v) != t.end()) ++d;
    return d;
}

struct DegreeSplit {
    double threshold = 0.0;
    std::vector<ValueId> light; // degree <= threshold
    std::vector<ValueId> heavy; // degree >  threshold
};

inline DegreeSplit degree_split(const Database& db, double threshold) {
    std::vector<std::size_t> deg(db.domain.size(), 0);
    for (const auto& [sym, rel] : db.relations)
        for (const Tuple& t : rel.tuples) {
            // count the tuple once per distinct value it contains
            for (std::size_t i = 0; i < t.size(); ++i) {
                bool first = true;
                for (std::size_t j = 0; j < i; ++j)
                    if (t[j] == t[i]) { first = false; break; }
                if (first) ++deg[t[i]];
            }
        }
    DegreeSplit split;
    split.threshold = threshold;
    for (ValueId v = 0; v < deg.size(); ++v) {
        if (deg[v] == 0) continue; // not in the active domain
        if (static_cast<double>(deg[v]) <= threshold)
            split.light.push_back(v);
        else
            split.heavy.push_back(v);
    }
    return split;
}

// Total integer weight map over a set of domain values.
class WeightMap {
public:
    void set(ValueId v, long long w) { weights_[v] = w; }

    long long at(ValueId v) const {
        auto it = weights_.find(v);
        if (it == weights_.end())
            throw UnknownValue("no weight for domain id " + std::to_string(v));
        return it->second;
    }

    bool has(ValueId v) const { return weights_.count(v) > 0; }
    std::size_t size() const { return weights_.size(); }

private:
    std::unordered_map<ValueId, long long> weights_;
};

// weights.csv rows are `value,integer`. Values not yet in the domain are
// interned so weight files can mention values before data does.
inline WeightMap load_weights(Database& db, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("missing weights file: " + path.string());
    WeightMap wm;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto fields = detail::split_csv_row(line);
        if (fields.size() != 2)
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected value,weight");
        ValueId v = db.domain.intern(fields[0]);
        if (wm.has(v))
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": duplicate value '" +
                          fields[0] + "'");
        try {
            std::size_t used = 0;
            long long w = std::stoll(fields[1], &used);
            if (used != fields[1].size()) throw std::invalid_argument(fields[1]);
            wm.set(v, w);
        } catch (const std::exception&) {
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": non-integer weight '" +
                          fields[1] + "'");
        }
    }
    return wm;
}

// Per-tuple weights for tropical aggregation, keyed by relation symbol.
struct TupleWeights {
    std::map<std::string, std::map<Tuple, double>> by_relation;
    std::optional<double> default_weight;

    double at(const std::string& symbol, const Tuple& t) const {
        auto rit = by_relation.find(symbol);
        if (rit != by_relation.end()) {
            auto tit = rit->second.find(t);
            if (tit != rit->second.end()) return tit->second;
        }
        if (default_weight) return *default_weight;
        throw MissingWeight("no weight for a tuple of " + symbol);
    }
};

// Reads `<symbol>.w.csv` (tuple values, then the weight as the final column)
// for every relation of the database; files may be absent.
inline TupleWeights load_tuple_weights(Database& db, const std::filesystem::path& dir,
                                       std::optional<double> default_weight = std::nullopt) {
    TupleWeights tw;
    tw.default_weight = default_weight;
    for (const auto& [symbol, rel] : db.relations) {
        std::filesystem::path file = dir / (symbol + ".w.csv");
        std::ifstream in(file);
        if (!in) continue;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line == "\r") continue;
            auto fields = detail::split_csv_row(line);
            if (fields.size() != rel.arity + 1)
                throw IoError(file.string() + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(rel.arity) + " values and a weight");
            Tuple t;
            for (std::size_t i = 0; i + 1 < fields.size(); ++i)
                t.push_back(db.domain.intern(fields[i]));
            try {
                std::size_t used = 0;
                double w = std::stod(fields.back(), &used);
                if (used != fields.back().size()) throw std::invalid_argument(fields.back());
                tw.by_relation[symbol][std::move(t)] = w;
            } catch (const std::exception&) {
                throw IoError(file.string() + ":" + std::to_string(lineno) + ": bad weight '" +
                              fields.back() + "'");
            }
        }
    }
    return tw;
}

} // namespace fgcq

#endif // FGCQ_DATABASE_HPP
