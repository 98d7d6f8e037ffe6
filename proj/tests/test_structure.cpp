#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <fgcq/structure.hpp>

#include "support/test_support.hpp"

using namespace fgcq;

namespace {
Variable V(const char* n) { return Variable{n}; }

Hypergraph triangle() {
    return build_hypergraph(parse_query("q() :- R1(x,y), R2(y,z), R3(z,x)."));
}

Hypergraph lw4() {
    return build_hypergraph(
        parse_query("q() :- R1(x2,x3,x4), R2(x1,x3,x4), R3(x1,x2,x4), R4(x1,x2,x3)."));
}
}

TEST_CASE("triangle is cyclic") {
    auto res = gyo_acyclicity(triangle());
    CHECK_FALSE(res.acyclic);
    CHECK_FALSE(replay_gyo(triangle(), res.trace));
}

TEST_CASE("path is acyclic and the trace replays to empty") {
    Hypergraph h = make_hypergraph({{V("x"), V("y")}, {V("y"), V("z")}});
    auto res = gyo_acyclicity(h);
    CHECK(res.acyclic);
    CHECK(replay_gyo(h, res.trace));
}

TEST_CASE("grown join trees are always acyclic") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        Hypergraph h = testsupport::random_grown_acyclic(rng, 6, 3);
        CAPTURE(h.edges);
        CHECK(gyo_acyclicity(h).acyclic);
    }
}

TEST_CASE("gyo agrees with the try-all-orders oracle on small hypergraphs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 400; ++i) {
        Hypergraph h = testsupport::random_hypergraph(rng, 5, 5);
        CAPTURE(h.edges);
        CHECK(gyo_acyclicity(h).acyclic == testsupport::brute_acyclic(h));
    }
}

TEST_CASE("gyo verdict is independent of tie-breaking") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 150; ++i) {
        Hypergraph h = testsupport::random_hypergraph(rng, 6, 5);
        bool expected = gyo_acyclicity(h).acyclic;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            GyoOptions opts;
            opts.shuffle_seed = seed * 7919 + i;
            auto res = gyo_acyclicity(h, opts);
            CHECK(res.acyclic == expected);
            if (res.acyclic) CHECK(replay_gyo(h, res.trace));
        }
    }
}

TEST_CASE("join tree of a path shares the middle variable") {
    Hypergraph h = make_hypergraph({{V("x"), V("y")}, {V("y"), V("z")}});
    JoinTree t = build_join_tree(h);
    REQUIRE(t.nodes.size() == 2);
    CHECK(validate_join_tree(h, t));
}

TEST_CASE("join tree of the 3-star has three nodes") {
    auto q = parse_query("q(x1,x2,x3) :- R1(x1,z), R2(x2,z), R3(x3,z).");
    Hypergraph h = build_hypergraph(q);
    JoinTree t = build_join_tree(h);
    CHECK(t.nodes.size() == 3);
    CHECK(validate_join_tree(h, t));
    CHECK(running_intersection_holds(t));
}

TEST_CASE("join tree on a cyclic hypergraph is refused") {
    CHECK_THROWS_AS(build_join_tree(triangle()), NotAcyclic);
}

TEST_CASE("join trees of random acyclic hypergraphs pass the marker test") {
    std::mt19937_64 rng(17);
    int built = 0;
    while (built < 60) {
        Hypergraph h = testsupport::random_hypergraph(rng, 6, 6);
        if (!gyo_acyclicity(h).acyclic) continue;
        JoinTree t = build_join_tree(h);
        CAPTURE(h.edges);
        CHECK(validate_join_tree(h, t));
        ++built;
    }
}

TEST_CASE("free-connex classification") {
    // star with projected center: acyclic but not free-connex
    auto star2 = parse_query("q(x1,x2) :- R1(x1,z), R2(x2,z).");
    CHECK(gyo_acyclicity(build_hypergraph(star2)).acyclic);
    CHECK_FALSE(is_free_connex(star2));

    // acyclic join queries are always free-connex
    auto path = parse_query("q(x,y,z) :- R(x,y), S(y,z).");
    CHECK(is_free_connex(path));

    // the star with the center in the head
    auto star_hat = parse_query("q(x1,x2,z) :- R1(x1,z), R2(x2,z).");
    CHECK(is_free_connex(star_hat));

    // cyclic queries are never free-connex
    auto tri = parse_query("q(x,y,z) :- R1(x,y), R2(y,z), R3(z,x).");
    CHECK_FALSE(is_free_connex(tri));

    // Boolean acyclic query
    auto boolean = parse_query("q() :- R(x,y), S(y,z).");
    CHECK(is_free_connex(boolean));
}

TEST_CASE("free-connex equals the two literal gyo runs") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        Hypergraph h = testsupport::random_hypergraph(rng, 5, 4);
        ConjunctiveQuery q;
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            q.body.push_back(Atom{"R" + std::to_string(e), h.edges[e]});
        for (const Variable& v : h.vertices)
            if (rng() % 2) q.head.push_back(v);
        bool expect = gyo_acyclicity(h).acyclic &&
                      gyo_acyclicity(with_extra_edge(h, q.head)).acyclic;
        CHECK(is_free_connex(q) == expect);
    }
}

TEST_CASE("disruptive trios of the hat star") {
    auto q = parse_query("q(x1,x2,z) :- R1(x1,z), R2(x2,z).");
    auto trios = find_disruptive_trios(q, {V("x1"), V("x2"), V("z")});
    REQUIRE(trios.size() == 1);
    CHECK(trios[0] == DisruptiveTrio{V("x1"), V("x2"), V("z")});

    CHECK(find_disruptive_trios(q, {V("z"), V("x1"), V("x2")}).empty());
}

TEST_CASE("single-atom queries have no trios") {
    auto q = parse_query("q(a,b,c) :- R(a,b,c).");
    CHECK(find_disruptive_trios(q, {V("a"), V("b"), V("c")}).empty());
    CHECK(find_disruptive_trios(q, {V("c"), V("a"), V("b")}).empty());
}

TEST_CASE("order must be a permutation of the body variables") {
    auto q = parse_query("q(x,y) :- R(x,y).");
    CHECK_THROWS_AS(find_disruptive_trios(q, {V("x")}), OrderMismatch);
    CHECK_THROWS_AS(find_disruptive_trios(q, {V("x"), V("z")}), OrderMismatch);
    CHECK_THROWS_AS(find_disruptive_trios(q, {V("x"), V("x")}), OrderMismatch);
}

TEST_CASE("trios equal a brute-force scan of the definition") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        Hypergraph h = testsupport::random_hypergraph(rng, 6, 5);
        ConjunctiveQuery q;
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            q.body.push_back(Atom{"R" + std::to_string(e), h.edges[e]});
        std::vector<Variable> order = h.vertices;
        std::shuffle(order.begin(), order.end(), rng);
        auto got = find_disruptive_trios(q, order);

        auto co = [&](const Variable& a, const Variable& b) {
            for (const Atom& at : q.body) {
                bool ha = std::find(at.args.begin(), at.args.end(), a) != at.args.end();
                bool hb = std::find(at.args.begin(), at.args.end(), b) != at.args.end();
                if (ha && hb) return true;
            }
            return false;
        };
        std::vector<DisruptiveTrio> expect;
        for (std::size_t p3 = 0; p3 < order.size(); ++p3)
            for (std::size_t p1 = 0; p1 < p3; ++p1)
                for (std::size_t p2 = p1 + 1; p2 < p3; ++p2)
                    if (co(order[p1], order[p3]) && co(order[p2], order[p3]) &&
                        !co(order[p1], order[p2]))
                        expect.push_back({order[p1], order[p2], order[p3]});
        CHECK(got == expect);
    }
}

TEST_CASE("hard witness of the triangle is the triangle") {
    HardWitness w = find_hard_witness(triangle());
    CHECK(w.kind == HardWitness::Kind::chordless_cycle);
    CHECK(w.vertices.size() == 3);
    CHECK(verify_hard_witness(triangle(), w));
}

TEST_CASE("hard witness of LW4 is a clique core on all four vertices") {
    HardWitness w = find_hard_witness(lw4());
    CHECK(w.kind == HardWitness::Kind::clique_core);
    CHECK(w.vertices.size() == 4);
    CHECK(verify_hard_witness(lw4(), w));
}

TEST_CASE("no subset of LW4 induces a chordless cycle") {
    Hypergraph h = lw4();
    for (std::size_t k = 3; k <= h.vertices.size(); ++k) {
        detail::for_each_subset_of_size(h.vertices, k, [&](const std::set<Variable>& s) {
            CHECK_FALSE(detail::chordless_cycle_on(h, s).has_value());
            return false;
        });
    }
}

TEST_CASE("hard witness of the 6-cycle is the full cycle") {
    auto q = parse_query("q() :- R1(a,b), R2(b,c), R3(c,d), R4(d,e), R5(e,f), R6(f,a).");
    Hypergraph h = build_hypergraph(q);
    HardWitness w = find_hard_witness(h);
    CHECK(w.kind == HardWitness::Kind::chordless_cycle);
    CHECK(w.vertices.size() == 6);
    CHECK(verify_hard_witness(h, w));
}

TEST_CASE("witness search refuses acyclic hypergraphs") {
    Hypergraph h = make_hypergraph({{V("x"), V("y")}});
    CHECK_THROWS_AS(find_hard_witness(h), IsAcyclic);
}

TEST_CASE("every witness on random cyclic hypergraphs verifies") {
    std::mt19937_64 rng(29);
    int found = 0;
    while (found < 60) {
        Hypergraph h = testsupport::random_hypergraph(rng, 6, 6);
        if (gyo_acyclicity(h).acyclic) continue;
        HardWitness w = find_hard_witness(h);
        CAPTURE(h.edges, w.vertices);
        CHECK(verify_hard_witness(h, w));
        ++found;
    }
}
