#include <doctest.h>

#include <fstream>
#include <set>

#include "qpc/balls.hpp"
#include "qpc/error.hpp"
#include "qpc/product_graph.hpp"
#include "test_support.hpp"

using namespace qpc;

TEST_CASE("factor distances") {
    const Factor p4 = Factor::path(4);
    CHECK(p4.distance(0, 3) == 3);
    CHECK(p4.distance(2, 2) == 0);
    CHECK(p4.diameter() == 3);

    const Factor c6 = Factor::cycle(6);
    CHECK(c6.distance(0, 3) == 3);  // antipodal
    CHECK(c6.distance(1, 5) == 2);
    CHECK(c6.diameter() == 3);

    CHECK_THROWS_AS(c6.distance(0, 6), Error);
    CHECK_THROWS_AS(Factor::path(0), Error);
}

TEST_CASE("degenerate cycles") {
    const Factor c1 = Factor::cycle(1);
    CHECK(c1.diameter() == 0);
    std::vector<int> nbr;
    c1.append_neighbors(0, nbr);
    CHECK(nbr.empty());

    const Factor c2 = Factor::cycle(2);
    CHECK(c2.distance(0, 1) == 1);
    nbr.clear();
    c2.append_neighbors(0, nbr);
    CHECK(nbr == std::vector<int>{1});  // single edge, no double-counted neighbor
}

TEST_CASE("explicit factor validation and metric") {
    // 6-cycle as an explicit edge list: table must match the cycle formula
    std::vector<std::pair<int, int>> ring;
    for (int i = 0; i < 6; ++i) ring.emplace_back(i, (i + 1) % 6);
    const Factor g = Factor::explicit_graph(6, ring);
    const Factor c6 = Factor::cycle(6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(g.distance(a, b) == c6.distance(a, b));

    CHECK_THROWS_AS(Factor::explicit_graph(3, {{0, 0}}), Error);          // loop
    CHECK_THROWS_AS(Factor::explicit_graph(3, {{0, 1}, {1, 0}}), Error);  // parallel edge
    CHECK_THROWS_AS(Factor::explicit_graph(3, {{0, 1}}), Error);          // disconnected
    CHECK_THROWS_AS(Factor::explicit_graph(2, {{0, 5}}), Error);          // endpoint range
}

TEST_CASE("graph spec parsing") {
    const ProductGraph torus = parse_graph_spec("C3xC6xC2");
    CHECK(torus.dim() == 3);
    CHECK(torus.vertex_count() == 36);
    CHECK(torus.spec_string() == "C3xC6xC2");

    const ProductGraph mesh = parse_graph_spec("P4xP4xP4");
    CHECK(mesh.vertex_count() == 64);

    const ProductGraph point = parse_graph_spec("C1");
    CHECK(point.vertex_count() == 1);

    CHECK_THROWS_AS(parse_graph_spec(""), Error);
    CHECK_THROWS_AS(parse_graph_spec("C0"), Error);
    CHECK_THROWS_AS(parse_graph_spec("Q3"), Error);
    CHECK_THROWS_AS(parse_graph_spec("C3x"), Error);
    CHECK_THROWS_AS(parse_graph_spec("C3xxC2"), Error);
    CHECK_THROWS_AS(parse_graph_spec("C-3"), Error);
    CHECK_THROWS_AS(parse_graph_spec("@/nonexistent/file"), Error);
}

TEST_CASE("explicit factor file loading") {
    const std::string path = "grid_factor.json";  // note: x-free, x separates factors
    {
        std::ofstream f(path);
        f << R"({"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})";
    }
    const ProductGraph g = parse_graph_spec("@" + path + "xP2");
    CHECK(g.vertex_count() == 8);
    CHECK(g.factor(0).kind() == FactorKind::explicit_graph);
    CHECK(g.factor(0).distance(0, 2) == 2);

    {
        std::ofstream f(path);
        f << R"({"edges": []})";
    }
    CHECK_THROWS_AS(parse_graph_spec("@" + path), Error);
    std::remove(path.c_str());
}

TEST_CASE("product distance examples") {
    const ProductGraph g = parse_graph_spec("C3xC6");
    CHECK(g.distance({0, 0}, {1, 2}) == 3);
    CHECK(g.distance({2, 5}, {2, 5}) == 0);

    const ProductGraph h = parse_graph_spec("C3xC6xC2");
    CHECK(h.distance({0, 0, 0}, {2, 1, 1}) == 3);

    CHECK_THROWS_AS(g.distance({0, 0, 0}, {0, 0}), Error);  // dimension mismatch
    CHECK_THROWS_AS(g.distance({0, 6}, {0, 0}), Error);     // coordinate range
}

TEST_CASE("enumeration is lexicographic and indexable") {
    const ProductGraph g = parse_graph_spec("C2xC2");
    const std::vector<Vertex> all = enumerate_vertices(g);
    CHECK(all == std::vector<Vertex>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

    const ProductGraph p1 = parse_graph_spec("P1");
    CHECK(enumerate_vertices(p1) == std::vector<Vertex>{{0}});

    const ProductGraph big = parse_graph_spec("C3xC6xC2");
    const std::vector<Vertex> vs = enumerate_vertices(big);
    CHECK(vs.size() == 36);
    for (std::int64_t i = 0; i < big.vertex_count(); ++i) {
        CHECK(big.index_of(vs[static_cast<size_t>(i)]) == i);
        CHECK(big.vertex_at(i) == vs[static_cast<size_t>(i)]);
    }
}

TEST_CASE("explicit_expand small cases") {
    const Factor ex = explicit_expand(parse_graph_spec("C3xC3"));
    CHECK(ex.order() == 9);
    std::vector<int> nbr;
    for (int v = 0; v < 9; ++v) {
        nbr.clear();
        ex.append_neighbors(v, nbr);
        CHECK(nbr.size() == 4);  // 4-regular
    }

    const Factor edge = explicit_expand(parse_graph_spec("P2"));
    CHECK(edge.order() == 2);
    CHECK(edge.edges().size() == 1);

    const Factor square = explicit_expand(parse_graph_spec("C2xC2"));
    CHECK(square.order() == 4);
    CHECK(square.edges().size() == 4);  // 4-cycle
    CHECK(square.diameter() == 2);

    CHECK_THROWS_AS(explicit_expand(parse_graph_spec("C100xC100xC100")), Error);
}

TEST_CASE("translate") {
    const ProductGraph torus = parse_graph_spec("C3xC6");
    const std::vector<Vertex> base = {{0, 0}, {1, 2}, {2, 4}};
    auto shifted = translate(torus, {0, 3}, base);
    std::sort(shifted.begin(), shifted.end());
    CHECK(shifted == std::vector<Vertex>{{0, 3}, {1, 5}, {2, 1}});

    CHECK(translate(torus, {0, 0}, base) == base);
    // negative offsets reduce modulo the order
    auto negative = translate(torus, {0, -3}, base);
    std::sort(negative.begin(), negative.end());
    CHECK(negative == shifted);

    const ProductGraph mesh = parse_graph_spec("P3xP4");
    CHECK_THROWS_AS(translate(mesh, {0, 3}, {{0, 2}}), Error);  // 5 >= 4
    CHECK(translate(mesh, {1, 3}, {{0, 0}}) == std::vector<Vertex>{{1, 3}});

    std::vector<std::pair<int, int>> ring = {{0, 1}, {1, 2}, {2, 0}};
    const ProductGraph with_explicit({Factor::explicit_graph(3, ring), Factor::cycle(4)});
    CHECK_THROWS_AS(translate(with_explicit, {1, 0}, {{0, 0}}), Error);
    CHECK(translate(with_explicit, {0, 5}, {{0, 0}}) == std::vector<Vertex>{{0, 1}});
}

TEST_CASE("translate preserves distances on all-cyclic products") {
    std::mt19937 rng(7);
    const ProductGraph torus = parse_graph_spec("C5xC3xC4");
    for (int trial = 0; trial < 50; ++trial) {
        const Vertex a = torus.vertex_at(static_cast<std::int64_t>(rng() % 60));
        const Vertex b = torus.vertex_at(static_cast<std::int64_t>(rng() % 60));
        const std::vector<int> off = {static_cast<int>(rng() % 10) - 5,
                                      static_cast<int>(rng() % 10) - 5,
                                      static_cast<int>(rng() % 10) - 5};
        const auto ta = translate(torus, off, {a});
        const auto tb = translate(torus, off, {b});
        CHECK(torus.distance(ta[0], tb[0]) == torus.distance(a, b));
    }
}

TEST_CASE("direct_sum") {
    const Factor p3 = Factor::path(3);
    CHECK(direct_sum({{0, 0}}, {1}, p3) == std::vector<Vertex>{{0, 0, 1}});
    CHECK(direct_sum({{0, 0}}, {}, p3).empty());
    CHECK_THROWS_AS(direct_sum({{0, 0}}, {3}, p3), Error);

    // projection recovers the base set
    const std::vector<Vertex> base = {{0, 0}, {1, 2}, {2, 4}};
    const auto summed = direct_sum(base, {0, 2}, Factor::cycle(4));
    CHECK(summed.size() == 6);
    std::set<Vertex> projected;
    for (const Vertex& v : summed) projected.insert({v[0], v[1]});
    CHECK(projected == std::set<Vertex>(base.begin(), base.end()));
}

TEST_CASE("ball and sphere") {
    const ProductGraph g = parse_graph_spec("C6xC4");
    const Vertex origin = {0, 0};
    CHECK(ball(g, origin, 0) == std::vector<Vertex>{origin});
    CHECK(sphere(g, origin, 0) == std::vector<Vertex>{origin});
    CHECK(ball(g, origin, 2).size() == 12);
    CHECK(sphere(g, origin, 2).size() == 7);

    const ProductGraph h = parse_graph_spec("C3xC6xC2");
    CHECK(ball(h, {0, 0, 0}, 1).size() == 6);

    const ProductGraph c333 = parse_graph_spec("C3xC3xC3");
    for (std::int64_t i = 0; i < 27; i += 5)
        CHECK(sphere(c333, c333.vertex_at(i), 3).size() == 8);
}

TEST_CASE("ball properties") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        const ProductGraph g = qpct::random_graph(rng, 150);
        const Vertex x = g.vertex_at(static_cast<std::int64_t>(rng() % static_cast<unsigned long>(g.vertex_count())));
        std::int64_t prev = 0;
        std::vector<Vertex> unioned;
        for (int r = 0; r <= g.diameter(); ++r) {
            const auto b = ball(g, x, r);
            CHECK(static_cast<std::int64_t>(b.size()) >= prev);
            prev = static_cast<std::int64_t>(b.size());
            const auto s = sphere(g, x, r);
            unioned.insert(unioned.end(), s.begin(), s.end());
            std::sort(unioned.begin(), unioned.end());
            CHECK(unioned == b);  // ball = union of spheres
        }
        CHECK(prev == g.vertex_count());  // reaches everything at the diameter
    }
}

TEST_CASE("analytic metric agrees with BFS on random mixed products") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const ProductGraph g = qpct::random_graph(rng, 150);
        const qpct::Expanded ex = qpct::expand(g);
        for (std::int64_t u = 0; u < g.vertex_count(); ++u) {
            const std::vector<int> d = qpct::bfs(ex, {u});
            const Vertex uu = g.vertex_at(u);
            for (std::int64_t v = 0; v < g.vertex_count(); ++v)
                CHECK(g.distance(uu, g.vertex_at(v)) == d[static_cast<size_t>(v)]);
        }
    }
}

TEST_CASE("metric axioms hold") {
    std::mt19937 rng(31);
    const ProductGraph g = qpct::random_graph(rng, 120);
    const auto idx = [&](std::mt19937& r) {
        return g.vertex_at(static_cast<std::int64_t>(r() % static_cast<unsigned long>(g.vertex_count())));
    };
    for (int trial = 0; trial < 200; ++trial) {
        const Vertex u = idx(rng), v = idx(rng), w = idx(rng);
        CHECK(g.distance(u, v) == g.distance(v, u));
        CHECK((g.distance(u, v) == 0) == (u == v));
        CHECK(g.distance(u, w) <= g.distance(u, v) + g.distance(v, w));
    }
}

TEST_CASE("explicit_expand agrees with the independent expansion") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 5; ++trial) {
        const ProductGraph g = qpct::random_graph(rng, 100);
        const Factor ex = explicit_expand(g);
        const qpct::Expanded ind = qpct::expand(g);
        for (int v = 0; v < ex.order(); ++v) {
            std::vector<int> a;
            ex.append_neighbors(v, a);
            std::vector<int> b = ind.adj[static_cast<size_t>(v)];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            CHECK(a == b);
        }
    }
}
