#include "latab/isotopy_graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "latab/constructions.hpp"
#include "oracles.hpp"

using namespace latab;

namespace {

LatinTableau one_row_pair() { return validate(Partition({2}), {{1, 2}}); }
LatinTableau t2() { return validate(Partition({3, 2}), {{3, 1, 2}, {1, 2}}); }
LatinTableau degree11() { return validate(Partition({4, 4}), {{1, 2, 3, 4}, {2, 1, 4, 3}}); }

}  // namespace

TEST_CASE("component of a single edge merges coinciding labels") {
    IsotopyGraph g = component(one_row_pair());
    CHECK(g.size() == 2);
    REQUIRE(g.edges().size() == 1);
    auto labels = g.edge_labels(g.edges()[0]);
    REQUIRE(labels.size() == 2);
    CHECK(labels[0] == Transform{TransformKind::Col, 1, 2});
    CHECK(labels[1] == Transform{TransformKind::Ent, 1, 2});
    CHECK(g.degree() == 1);
}

TEST_CASE("staircase components are isolated vertices") {
    for_each_filling(Partition({4, 3, 2, 1}), [](const LatinTableau& t) {
        IsotopyGraph g = component(t);
        CHECK(g.size() == 1);
        CHECK(g.edges().empty());
        CHECK(g.degree() == 0);
        return true;
    });
}

TEST_CASE("the T_2 component is a 4-cycle") {
    IsotopyGraph g = component(t2());
    CHECK(g.size() == 4);
    CHECK(g.edges().size() == 4);
    CHECK(g.degree() == 2);
}

TEST_CASE("full graphs of small shapes") {
    auto comps32 = full_graph(Partition({3, 2}));
    REQUIRE(comps32.size() == 2);
    CHECK(comps32[0].size() == 2);  // ordered by minimal filling
    CHECK(comps32[1].size() == 4);

    auto comps2 = full_graph(Partition({2}));
    REQUIRE(comps2.size() == 1);
    CHECK(comps2[0].size() == 2);

    auto comps333 = full_graph(Partition({3, 3, 3}));
    REQUIRE(comps333.size() == 1);
    CHECK(comps333[0].size() == 12);
    CHECK(comps333[0].degree() == 9);  // 3 * C(3,2)
}

TEST_CASE("every filling of a shape lands in exactly one component") {
    for (const Partition& shape : partitions_up_to(7)) {
        auto comps = full_graph(shape);
        std::uint64_t covered = 0;
        std::set<Cells> all;
        for (const auto& g : comps) {
            covered += g.size();
            for (const auto& c : g.vertex_cells()) CHECK(all.insert(c).second);
        }
        CHECK(covered == count_fillings_serial(shape));
    }
}

TEST_CASE("component cap") {
    CHECK_THROWS_AS(component(degree11(), 8), ComponentTooLarge);
}

TEST_CASE("symmetric pairs: known examples") {
    auto pairs = symmetric_pairs(degree11());
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == SymmetricPair{1, 2, 1, 2});
    CHECK(pairs[1] == SymmetricPair{3, 4, 3, 4});

    LatinTableau sq3 = validate(Partition({3, 3, 3}), {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK(symmetric_pairs(sq3).empty());
    LatinTableau sq4 = validate(Partition({4, 4, 4, 4}),
                                {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
    CHECK(symmetric_pairs(sq4).empty());
    CHECK(symmetric_pairs(t2()).empty());
}

TEST_CASE("the two (4,4) orbits have sizes 72 and 144") {
    auto comps = full_graph(Partition({4, 4}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 72);  // contains 1234/2143
    CHECK(comps[1].size() == 144);
    CHECK(stabilizer_order(comps[0]) == 16);
    CHECK(stabilizer_order(comps[1]) == 8);
}

TEST_CASE("symmetric pairs agree with the structural description") {
    for (const Partition& shape : partitions_up_to(7)) {
        for_each_filling(shape, [&](const LatinTableau& t) {
            auto ops = symmetric_pairs(t);
            auto structural = oracle::structural_symmetric_pairs(t);
            REQUIRE(ops.size() == structural.size());
            for (std::size_t k = 0; k < ops.size(); ++k) {
                CHECK(ops[k].col_i == structural[k].i);
                CHECK(ops[k].col_j == structural[k].j);
            }
            return true;
        });
    }
}

TEST_CASE("degrees: known examples") {
    CHECK(vertex_degree(component(degree11())) == 11);
    CHECK(degree_formula(degree11()) == 11);

    for_each_filling(Partition({3, 3, 3}), [](const LatinTableau& t) {
        CHECK(degree_formula(t) == 9);
        return true;
    });

    for_each_filling(Partition({4, 3, 2, 1}), [](const LatinTableau& t) {
        CHECK(degree_formula(t) == 0);
        return true;
    });
}

TEST_CASE("the 2x2 square is the one shape where the degree formula overcounts") {
    // All three generators act identically there, so the single edge absorbs
    // a row transform as well; a+2b-p counts only the column/entry merge.
    LatinTableau sq = validate(Partition({2, 2}), {{1, 2}, {2, 1}});
    IsotopyGraph g = component(sq);
    CHECK(g.size() == 2);
    CHECK(g.degree() == 1);
    CHECK(symmetric_pairs(sq).size() == 1);
    CHECK(degree_formula(sq) == 2);  // differs from the breadth-first degree
    auto labels = g.edge_labels(g.edges()[0]);
    CHECK(labels.size() == 3);
}

TEST_CASE("stabilizer orders") {
    CHECK(stabilizer_order(component(one_row_pair())) == 2);
    CHECK(stabilizer_order(component(t2())) == 1);
    LatinTableau fig5 = build_symmetric_family(3);
    IsotopyGraph g = component(fig5);
    CHECK(stabilizer_order(g) >= 2);
    CHECK(g.size() < (1u << 9));
}

TEST_CASE("stabilizer orders match a full group scan on tiny shapes") {
    for (const Partition& shape : partitions_up_to(6)) {
        if (static_cast<std::uint64_t>(isotopy_group_order(shape)) > 5000) continue;
        for_each_filling(shape, [&](const LatinTableau& t) {
            CHECK(stabilizer_order(component(t)) == oracle::stabilizer_by_group_scan(t));
            return true;
        });
    }
}

TEST_CASE("orbit-stabilizer holds exactly on small shapes") {
    for (const Partition& shape : partitions_up_to(7)) {
        for (const auto& g : full_graph(shape)) {
            CHECK(g.regular());
            CHECK(static_cast<unsigned __int128>(stabilizer_order(g)) * g.size() ==
                  isotopy_group_order(shape));
        }
    }
}

TEST_CASE("triangle witnesses: catalog head, T_2, and (4,4,3,1)") {
    LatinTableau block = validate(Partition({3, 3, 2}), {{2, 3, 1}, {3, 1, 2}, {1, 2}});
    auto ws = triangle_witnesses(block);
    CHECK_FALSE(ws.empty());
    for (const auto& w : ws) CHECK(w.all_conditions());

    CHECK(triangle_witnesses(t2()).empty());

    for_each_filling(Partition({4, 4, 3, 1}), [](const LatinTableau& t) {
        CHECK(triangle_witnesses(t).empty());
        auto g = component(t);
        CHECK(find_triangles(g, adjacency(g)).empty());
        return true;
    });
}

TEST_CASE("witnesses can exceed the entry bound as long as one stays within it") {
    // A long first row can feed large values into a symmetric column pair:
    // here r(2,3)c(1,2) acts like s(4,5). The triangle is still certified by
    // the second witness r(2,3)c(3,4) = s(1,2), which meets every condition.
    LatinTableau t = validate(Partition({5, 2, 2}), {{5, 4, 1, 2, 3}, {1, 2}, {2, 1}});
    auto ws = triangle_witnesses(t);
    REQUIRE(ws.size() == 2);
    bool saw_large = false, saw_full = false;
    for (const auto& w : ws) {
        CHECK(w.outside_in_pair);
        CHECK(w.confined);
        CHECK(w.corner_pattern_ok);
        if (!w.entries_small) {
            CHECK(w.ent_swap == Transform{TransformKind::Ent, 4, 5});
            saw_large = true;
        }
        if (w.all_conditions()) {
            CHECK(w.ent_swap == Transform{TransformKind::Ent, 1, 2});
            saw_full = true;
        }
    }
    CHECK(saw_large);
    CHECK(saw_full);
    IsotopyGraph g = component(t);
    CHECK_FALSE(find_triangles(g, adjacency(g)).empty());
}

TEST_CASE("clique numbers with exact cross-check") {
    auto stair = component(*first_filling(Partition({4, 3, 2, 1})));
    CHECK(clique_number(stair, adjacency(stair)) == 1);

    auto g44 = component(degree11());
    CHECK(clique_number(g44, adjacency(g44)) == 4);

    for (const auto& g : full_graph(Partition({3, 2}))) CHECK(clique_number(g, adjacency(g)) == 2);
}

TEST_CASE("cube recognition against the isomorphism oracle") {
    CHECK(cube_dimension(component(one_row_pair())) == 1);
    CHECK(cube_dimension(component(t2())) == 2);
    CHECK_FALSE(cube_dimension(component(build_symmetric_family(3))).has_value());

    for (const Partition& shape : partitions_up_to(7)) {
        for (const auto& g : full_graph(shape)) {
            if (g.size() > 16) continue;
            auto dim = cube_dimension(g);
            int d = 0;
            while ((std::size_t{1} << d) < g.size()) ++d;
            bool iso = (std::size_t{1} << d) == g.size() &&
                       oracle::isomorphic(adjacency(g), oracle::hypercube_adjacency(d));
            CHECK(dim.has_value() == iso);
            if (dim) CHECK(*dim == d);
        }
    }
}

TEST_CASE("cube criterion: clean cases and the loud 2x2 mismatch") {
    CHECK(cube_criterion(build_Td(3)));
    CHECK_FALSE(cube_criterion(build_symmetric_family(3)));
    LatinTableau sq3 = validate(Partition({3, 3, 3}), {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK_FALSE(cube_criterion(sq3));  // not squareable

    // The 2x2 square is a genuine counterexample to the criterion: its
    // component is a 1-cube while the stabilizer exceeds 2^p.
    LatinTableau sq2 = validate(Partition({2, 2}), {{1, 2}, {2, 1}});
    CHECK_THROWS_AS(cube_criterion(sq2), CriterionMismatch);
}

TEST_CASE("analysis report for (3,2)") {
    auto comps = full_graph(Partition({3, 2}));
    REQUIRE(comps.size() == 2);
    AnalysisReport small = analyze(comps[0]);
    CHECK(small.component_size == 2);
    CHECK(small.degree == 1);
    CHECK(small.degree_formula == 1);
    CHECK(small.stabilizer_order == 2);
    CHECK(small.clique_number == 2);
    CHECK(small.cube_dimension == 1);
    AnalysisReport big = analyze(comps[1]);
    CHECK(big.component_size == 4);
    CHECK(big.degree == 2);
    CHECK(big.stabilizer_order == 1);
    CHECK(big.cube_dimension == 2);
    CHECK_FALSE(big.has_triangle);
}
