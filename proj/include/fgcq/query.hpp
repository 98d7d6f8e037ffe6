#ifndef FGCQ_QUERY_HPP
#define FGCQ_QUERY_HPP

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <vector>

#include <fgcq/errors.hpp>

namespace fgcq {

// A query variable. Identity is the name.
struct Variable {
    std::string name;

    auto operator<=>(const Variable&) const = default;
};

struct Atom {
    std::string relation;
    std::vector<Variable> args; // nonempty; repeats allowed

    std::size_t arity() const { return args.size(); }
    auto operator<=>(const Atom&) const = default;
};

// q(head) :- body.  Head order is significant: it fixes the answer tuple layout.
struct ConjunctiveQuery {
    std::string name = "q";
    std::vector<Variable> head;
    std::vector<Atom> body;

    auto operator<=>(const ConjunctiveQuery&) const = default;

    std::vector<Variable> body_variables() const {
        std::set<Variable> seen;
        std::vector<Variable> out;
        for (const Atom& a : body)
            for (const Variable& v : a.args)
                if (seen.insert(v).second) out.push_back(v);
        return out;
    }

    bool is_boolean() const { return head.empty(); }

    // Head covers every body variable.
    bool is_join_query() const {
        std::set<Variable> h(head.begin(), head.end());
        for (const Atom& a : body)
            for (const Variable& v : a.args)
                if (!h.count(v)) return false;
        return true;
    }

    bool is_self_join_free() const {
        std::set<std::string> syms;
        for (const Atom& a : body)
            if (!syms.insert(a.relation).second) return false;
        return true;
    }
};

namespace detail {

class QueryParser {
public:
    explicit QueryParser(const std::string& text) : text_(text) {}

    ConjunctiveQuery parse() {
        ConjunctiveQuery q;
        skip_ws();
        q.name = expect_name("query name");
        expect('(');
        skip_ws();
        if (peek() != ')') q.head = parse_varlist();
        expect(')');
        expect(':');
        expect('-');
        q.body.push_back(parse_atom());
        skip_ws();
        while (peek() == ',') {
            get();
            q.body.push_back(parse_atom());
            skip_ws();
        }
        expect('.');
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after '.'");
        validate(q);
        return q;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char get() {
        char c = peek();
        ++pos_;
        if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
        return c;
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = peek();
            if (c == '%') {
                while (pos_ < text_.size() && peek() != '\n') get();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    static bool name_start(char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    }
    static bool name_char(char c) { return name_start(c) || (c >= '0' && c <= '9'); }

    std::string expect_name(const char* what) {
        skip_ws();
        if (!name_start(peek())) fail(std::string("expected ") + what);
        std::string s;
        while (name_char(peek())) s.push_back(get());
        return s;
    }

    std::vector<Variable> parse_varlist() {
        std::vector<Variable> vars;
        vars.push_back(Variable{expect_name("variable")});
        skip_ws();
        while (peek() == ',') {
            get();
            vars.push_back(Variable{expect_name("variable")});
            skip_ws();
        }
        return vars;
    }

    Atom parse_atom() {
        Atom a;
        a.relation = expect_name("relation name");
        expect('(');
        a.args = parse_varlist();
        expect(')');
        return a;
    }

    void validate(const ConjunctiveQuery& q) const {
        if (q.body.empty()) fail("query body is empty");
        std::set<Variable> body_vars;
        for (const Atom& a : q.body) body_vars.insert(a.args.begin(), a.args.end());
        for (const Variable& v : q.head)
            if (!body_vars.count(v))
                throw ParseError(line_, col_, "head variable '" + v.name + "' does not occur in the body");
    }
};

} // namespace detail

inline ConjunctiveQuery parse_query(const std::string& text) {
    return detail::QueryParser(text).parse();
}

inline std::string render_query(const ConjunctiveQuery& q) {
    std::string out = q.name + "(";
    for (std::size_t i = 0; i < q.head.size(); ++i) {
        if (i) out += ",";
        out += q.head[i].name;
    }
    out += ") :- ";
    for (std::size_t i = 0; i < q.body.size(); ++i) {
        if (i) out += ", ";
        out += q.body[i].relation + "(";
        for (std::size_t j = 0; j < q.body[i].args.size(); ++j) {
            if (j) out += ",";
            out += q.body[i].args[j].name;
        }
        out += ")";
    }
    out += ".";
    return out;
}

} // namespace fgcq

#endif // FGCQ_QUERY_HPP
