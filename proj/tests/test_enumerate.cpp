#include "latab/enumerate.hpp"

#include <doctest.h>

#include <set>

#include "oracles.hpp"

using namespace latab;

TEST_CASE("frozen counts, each computed by the row-product oracle") {
    CHECK(count_fillings(Partition({1})) == 1);
    CHECK(count_fillings(Partition({2, 2})) == 2);
    CHECK(count_fillings(Partition({3, 2})) == 6);
    CHECK(count_fillings(Partition({2, 1, 1})) == 0);
    CHECK(count_fillings(Partition({3, 3, 3})) == 12);
    CHECK(count_fillings(Partition({4, 4})) == 216);

    CHECK(oracle::count_by_row_products(Partition({2, 2})) == 2);
    CHECK(oracle::count_by_row_products(Partition({3, 2})) == 6);
    CHECK(oracle::count_by_row_products(Partition({2, 1, 1})) == 0);
    CHECK(oracle::count_by_row_products(Partition({3, 3, 3})) == 12);
    CHECK(oracle::count_by_row_products(Partition({4, 4})) == 216);
}

TEST_CASE("backtracker agrees with the oracle on every small shape") {
    for (const Partition& shape : partitions_up_to(8))
        CHECK(count_fillings_serial(shape) == oracle::count_by_row_products(shape));
}

TEST_CASE("exact fillings of (2,2) in lexicographic order") {
    auto all = all_fillings(Partition({2, 2}));
    REQUIRE(all.size() == 2);
    CHECK(all[0] == validate(Partition({2, 2}), {{1, 2}, {2, 1}}));
    CHECK(all[1] == validate(Partition({2, 2}), {{2, 1}, {1, 2}}));
}

TEST_CASE("emission is valid, duplicate-free and lexicographically sorted") {
    for (const Partition& shape : partitions_up_to(9)) {
        std::set<LatinTableau> seen;
        LatinTableau const* prev = nullptr;
        LatinTableau last = validate(Partition({1}), {{1}});
        bool first = true;
        for_each_filling(shape, [&](const LatinTableau& t) {
            CHECK_NOTHROW(validate(t.shape(), t.rows()));
            CHECK(seen.insert(t).second);
            if (!first) CHECK(last.cells() < t.cells());
            last = t;
            first = false;
            return true;
        });
        (void)prev;
        CHECK(seen.size() == count_fillings_serial(shape));
    }
}

TEST_CASE("parallel enumeration is identical to the serial reference") {
    for (const Partition& shape :
         {Partition({4, 4}), Partition({3, 3, 3}), Partition({5, 4}), Partition({4, 3, 2, 1})}) {
        CHECK(count_fillings(shape, 1) == count_fillings_serial(shape));
        CHECK(count_fillings(shape, 2) == count_fillings_serial(shape));
        CHECK(count_fillings(shape, 4) == count_fillings_serial(shape));
        auto serial = all_fillings(shape, 1);
        auto parallel = all_fillings(shape, 4);
        CHECK(serial == parallel);
    }
}

TEST_CASE("limit-style early stop") {
    int emitted = 0;
    for_each_filling(Partition({4, 4}), [&](const LatinTableau&) { return ++emitted < 5; });
    CHECK(emitted == 5);
}

TEST_CASE("wpc records") {
    WpcRecord r = verify_wpc(Partition({4, 3, 3}), true);
    CHECK(r.wide);
    CHECK(r.fillable);
    CHECK(r.consistent);
    REQUIRE(r.filling_count.has_value());
    CHECK(*r.filling_count > 0);

    r = verify_wpc(Partition({2, 1, 1}), true);
    CHECK_FALSE(r.wide);
    CHECK_FALSE(r.fillable);
    CHECK(r.consistent);
    CHECK(*r.filling_count == 0);

    r = verify_wpc(Partition({1}));
    CHECK(r.wide);
    CHECK(r.fillable);
    CHECK(r.consistent);
    CHECK_FALSE(r.filling_count.has_value());
}

TEST_CASE("wpc holds on a small range") {
    for (const WpcRecord& r : verify_wpc_range(8, true)) {
        CHECK(r.consistent);
        CHECK(r.fillable == (*r.filling_count > 0));
    }
    auto tiny = verify_wpc_range(3);
    CHECK(tiny.size() == 6);
    for (const WpcRecord& r : tiny) CHECK(r.consistent);
}
