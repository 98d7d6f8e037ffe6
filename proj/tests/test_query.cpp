#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <fgcq/hypergraph.hpp>
#include <fgcq/query.hpp>

using namespace fgcq;

namespace {
Variable V(const char* n) { return Variable{n}; }
}

TEST_CASE("parse a Boolean query") {
    auto q = parse_query("q() :- R(x,y), S(y,z).");
    CHECK(q.name == "q");
    CHECK(q.is_boolean());
    CHECK(q.body.size() == 2);
    CHECK(q.body[0].relation == "R");
    CHECK(q.body[1].args == std::vector<Variable>{V("y"), V("z")});
    CHECK_FALSE(q.is_join_query());
    CHECK(q.is_self_join_free());
}

TEST_CASE("parse the projected star query") {
    auto q = parse_query("q(x1,x2) :- R1(x1,z), R2(x2,z).");
    CHECK(q.head == std::vector<Variable>{V("x1"), V("x2")});
    CHECK_FALSE(q.is_boolean());
    CHECK_FALSE(q.is_join_query());
    CHECK(q.is_self_join_free());
}

TEST_CASE("head variable missing from the body is rejected") {
    CHECK_THROWS_AS(parse_query("q(x) :- R(y)."), ParseError);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_query("q(x) :-\n R(x)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 0);
    }
}

TEST_CASE("comments and whitespace are insignificant") {
    auto q = parse_query("% star\n  q ( x )  :-  % body\n R ( x , z ) .  % done\n");
    CHECK(q.head.size() == 1);
    CHECK(q.body.size() == 1);
    CHECK(q.body[0].args.size() == 2);
}

TEST_CASE("trailing garbage is rejected") {
    CHECK_THROWS_AS(parse_query("q() :- R(x). extra"), ParseError);
    CHECK_THROWS_AS(parse_query("q() :- ."), ParseError);
    CHECK_THROWS_AS(parse_query("q( :- R(x)."), ParseError);
}

TEST_CASE("self-join detection") {
    auto q = parse_query("q(x1,x2) :- R(x1,z), R(x2,z).");
    CHECK_FALSE(q.is_self_join_free());
}

TEST_CASE("triangle hypergraph") {
    auto q = parse_query("q() :- R1(x,y), R2(y,z), R3(z,x).");
    Hypergraph h = build_hypergraph(q);
    CHECK(h.vertices == std::vector<Variable>{V("x"), V("y"), V("z")});
    REQUIRE(h.edges.size() == 3);
    CHECK(h.has_edge({V("x"), V("y")}));
    CHECK(h.has_edge({V("y"), V("z")}));
    CHECK(h.has_edge({V("x"), V("z")}));
}

TEST_CASE("repeated arguments collapse to one vertex") {
    auto q = parse_query("q() :- R(x,x).");
    Hypergraph h = build_hypergraph(q);
    CHECK(h.vertices == std::vector<Variable>{V("x")});
    REQUIRE(h.edges.size() == 1);
    CHECK(h.edges[0] == std::vector<Variable>{V("x")});
}

TEST_CASE("Loomis-Whitney query of dimension 4") {
    auto q = parse_query("q() :- R1(x2,x3,x4), R2(x1,x3,x4), R3(x1,x2,x4), R4(x1,x2,x3).");
    Hypergraph h = build_hypergraph(q);
    CHECK(h.vertices.size() == 4);
    CHECK(h.edges.size() == 4);
    for (const auto& e : h.edges) CHECK(e.size() == 3);
}

TEST_CASE("duplicate atom variable sets collapse to one edge, query keeps both atoms") {
    auto q = parse_query("q() :- R(x,y), S(y,x).");
    Hypergraph h = build_hypergraph(q);
    CHECK(q.body.size() == 2);
    CHECK(h.edges.size() == 1);
}

TEST_CASE("hypergraph is invariant under body reordering") {
    auto a = parse_query("q() :- R(x,y), S(y,z), T(z,w).");
    auto b = parse_query("q() :- T(z,w), S(y,z), R(x,y).");
    CHECK(build_hypergraph(a) == build_hypergraph(b));
}

TEST_CASE("edge and vertex counts") {
    auto q = parse_query("q() :- R(x,y), S(y,x), T(x,z).");
    Hypergraph h = build_hypergraph(q);
    CHECK(h.edges.size() <= q.body.size());
    CHECK(h.vertices.size() == 3);
}

TEST_CASE("render-parse round trip on random queries") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        ConjunctiveQuery q;
        q.name = "q";
        int vars = 1 + static_cast<int>(rng() % 6);
        int atoms = 1 + static_cast<int>(rng() % 5);
        auto var = [&](int i) { return Variable{"v" + std::to_string(i)}; };
        std::set<Variable> used;
        for (int a = 0; a < atoms; ++a) {
            Atom at;
            at.relation = "R" + std::to_string(a);
            int arity = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < arity; ++i) {
                Variable v = var(static_cast<int>(rng() % vars));
                at.args.push_back(v);
                used.insert(v);
            }
            q.body.push_back(std::move(at));
        }
        for (const Variable& v : used)
            if (rng() % 2) q.head.push_back(v);
        auto round = parse_query(render_query(q));
        CHECK(round == q);
    }
}
