#include "latab/tableau.hpp"

#include <doctest.h>

#include "latab/enumerate.hpp"

using namespace latab;

namespace {

LatinTableau t2() { return validate(Partition({3, 2}), {{3, 1, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("validate accepts and rejects per the definition") {
    CHECK_NOTHROW(validate(Partition({3, 2}), {{3, 1, 2}, {1, 2}}));
    CHECK_THROWS_AS(validate(Partition({2, 2}), {{1, 2}, {1, 2}}), TableauError);
    CHECK_THROWS_AS(validate(Partition({2, 2}), {{1, 3}, {2, 1}}), TableauError);
    CHECK_THROWS_AS(validate(Partition({2, 2}), {{1, 2}}), TableauError);

    try {
        validate(Partition({2, 2}), {{1, 2}, {1, 2}});
    } catch (const TableauError& e) {
        CHECK(e.kind == TableauError::Kind::ColumnRepeat);
        CHECK(std::string(e.what()).find("column 1") != std::string::npos);
    }
    try {
        validate(Partition({2, 2}), {{1, 3}, {2, 1}});
    } catch (const TableauError& e) {
        CHECK(e.kind == TableauError::Kind::RowNotPermutation);
        CHECK(std::string(e.what()).find("row 1") != std::string::npos);
    }
}

TEST_CASE("content equals the transposed shape") {
    CHECK(content(validate(Partition({1}), {{1}})) == Partition({1}));
    CHECK(content(t2()) == Partition({2, 2, 1}));
    LatinTableau sq = validate(Partition({3, 3, 3}), {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK(content(sq) == Partition({3, 3, 3}));
    for (const Partition& shape : partitions_up_to(8))
        for_each_filling(shape, [&](const LatinTableau& t) {
            CHECK(content(t) == transpose(shape));
            return true;
        });
}

TEST_CASE("generator lists") {
    CHECK(generators(Partition({4, 4})).size() == 13);
    CHECK(generators(Partition({4, 3, 2, 1})).empty());
    auto g32 = generators(Partition({3, 2}));
    REQUIRE(g32.size() == 2);
    CHECK(g32[0] == Transform{TransformKind::Col, 1, 2});
    CHECK(g32[1] == Transform{TransformKind::Ent, 1, 2});
    for (const Partition& shape : partitions_up_to(10)) {
        auto [a, b] = same_length_pairs(shape);
        CHECK(generators(shape).size() == static_cast<std::size_t>(a + 2 * b));
    }
}

TEST_CASE("apply: column and entry swaps") {
    LatinTableau t = t2();
    LatinTableau c = apply(Transform{TransformKind::Col, 1, 2}, t);
    CHECK(c == validate(Partition({3, 2}), {{1, 3, 2}, {2, 1}}));

    LatinTableau one_row = validate(Partition({2}), {{1, 2}});
    LatinTableau via_c = apply(Transform{TransformKind::Col, 1, 2}, one_row);
    LatinTableau via_s = apply(Transform{TransformKind::Ent, 1, 2}, one_row);
    CHECK(via_c == via_s);
    CHECK(via_c == validate(Partition({2}), {{2, 1}}));

    CHECK_THROWS_AS(apply(Transform{TransformKind::Row, 1, 2}, t), IllegalTransform);
}

TEST_CASE("every legal transform is an involution that preserves validity") {
    for (const Partition& shape : partitions_up_to(8)) {
        auto gens = generators(shape);
        for_each_filling(shape, [&](const LatinTableau& t) {
            for (const Transform& g : gens) {
                LatinTableau once = apply(g, t);
                CHECK_NOTHROW(validate(once.shape(), once.rows()));
                CHECK(apply(g, once) == t);
            }
            return true;
        });
    }
}

TEST_CASE("transforms of different kinds commute") {
    for (const Partition& shape : partitions_up_to(7)) {
        auto gens = generators(shape);
        for_each_filling(shape, [&](const LatinTableau& t) {
            for (const Transform& g : gens)
                for (const Transform& h : gens)
                    if (g.kind != h.kind) CHECK(apply(g, apply(h, t)) == apply(h, apply(g, t)));
            return true;
        });
    }
}

TEST_CASE("all generator pairs commute exactly on squareable shapes") {
    for (const Partition& shape : partitions_up_to(10)) {
        auto first = first_filling(shape);
        if (!first) continue;
        auto gens = generators(shape);
        bool all_commute = true;
        for (const Transform& g : gens)
            for (const Transform& h : gens)
                if (apply(g, apply(h, *first)) != apply(h, apply(g, *first))) all_commute = false;
        CHECK(all_commute == is_squareable(shape));
    }
}

TEST_CASE("transform text round-trip") {
    CHECK(to_string(Transform{TransformKind::Row, 1, 2}) == "r(1,2)");
    CHECK(to_string(Transform{TransformKind::Ent, 3, 14}) == "s(3,14)");
    for (const char* text : {"r(1,2)", "c(2,7)", "s(3,14)"}) {
        auto t = parse_transform(text);
        REQUIRE(t.has_value());
        CHECK(to_string(*t) == text);
    }
    CHECK_FALSE(parse_transform("q(1,2)").has_value());
    CHECK_FALSE(parse_transform("r(2,1)").has_value());
    CHECK_FALSE(parse_transform("r(1)").has_value());
}
