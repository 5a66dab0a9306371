#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "persym/gf2.hpp"

#include "oracles.hpp"

using persym::EchelonBasis;
using persym::GF2Matrix;
using persym::word;

TEST_CASE("rank of hand-built matrices") {
    GF2Matrix zero(3, 5);
    CHECK(persym::rank(zero) == 0);
    CHECK(persym::nullity(zero) == 5);

    GF2Matrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.set(i, i, true);
    CHECK(persym::rank(id) == 4);
    CHECK(persym::nullity(id) == 0);

    auto dup = GF2Matrix::from_rows({0b101, 0b101, 0b011}, 3);
    CHECK(persym::rank(dup) == 2);

    auto dependent = GF2Matrix::from_rows({0b110, 0b011, 0b101}, 3);
    CHECK(persym::rank(dependent) == 2);
}

TEST_CASE("rank agrees with the span oracle on every tiny matrix") {
    for (int r = 1; r <= 4; ++r) {
        for (int c = 1; c <= 6; ++c) {
            if (r * c > 16) continue;
            word limit = word(1) << (r * c);
            for (word bits = 0; bits < limit; ++bits) {
                std::vector<word> rows(static_cast<std::size_t>(r));
                word mask = (word(1) << c) - 1;
                for (int i = 0; i < r; ++i)
                    rows[static_cast<std::size_t>(i)] = (bits >> (i * c)) & mask;
                GF2Matrix m = GF2Matrix::from_rows(rows, c);
                REQUIRE(persym::rank(m) == oracles::span_rank(rows));
            }
        }
    }
}

TEST_CASE("rank survives transposition and row operations") {
    std::mt19937_64 rng(0x5eedu);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + static_cast<int>(rng() % 10);
        int c = 1 + static_cast<int>(rng() % 12);
        GF2Matrix m(r, c);
        for (int i = 0; i < r; ++i) m.set_row(i, rng() & m.col_mask());

        int rk = persym::rank(m);
        CHECK(rk == persym::rank(persym::transpose(m)));

        GF2Matrix mixed = m;
        for (int step = 0; step < 8; ++step) {
            int a = static_cast<int>(rng() % r);
            int b = static_cast<int>(rng() % r);
            if (a == b) continue;
            mixed.set_row(a, mixed.row(a) ^ mixed.row(b));
        }
        CHECK(persym::rank(mixed) == rk);
    }
}

TEST_CASE("echelon basis validates its width") {
    CHECK_THROWS_AS(EchelonBasis(0), std::invalid_argument);
    CHECK_THROWS_AS(EchelonBasis(65), std::invalid_argument);
    CHECK_NOTHROW(EchelonBasis(1));
    CHECK_NOTHROW(EchelonBasis(64));

    EchelonBasis b(3);
    CHECK_THROWS_AS(b.insert(0b1000), std::invalid_argument);
    CHECK_THROWS_AS(b.reduce(0b1000), std::invalid_argument);
}

TEST_CASE("echelon basis insert and reduce") {
    EchelonBasis b(4);
    CHECK(b.size() == 0);
    CHECK(b.contains(0));

    CHECK(b.insert(0b0110));
    CHECK(b.insert(0b0011));
    CHECK_FALSE(b.insert(0b0101));
    CHECK(b.size() == 2);
    CHECK(b.contains(0b0110));
    CHECK(b.contains(0b0101));
    CHECK_FALSE(b.contains(0b0001));
    CHECK(b.reduce(0b0110) == 0);
    CHECK(b.insert(0b1000));
    CHECK(b.size() == 3);

    // Pivot rows come back ordered by their lowest set bit.
    word prev_low = 0;
    for (int i = 0; i < b.size(); ++i) {
        word row = b.pivot_row(i);
        word low = row & (word(0) - row);
        CHECK(low > prev_low);
        prev_low = low;
    }
    CHECK_THROWS_AS(b.pivot_row(3), std::out_of_range);
    CHECK_THROWS_AS(b.pivot_row(-1), std::out_of_range);
}

TEST_CASE("insert_row copies instead of mutating") {
    EchelonBasis base(5);
    base.insert(0b00110);

    auto [grown, fresh] = persym::insert_row(base, 0b01000);
    CHECK(fresh);
    CHECK(grown.size() == 2);
    CHECK(base.size() == 1);
    CHECK_FALSE(base.contains(0b01000));
    CHECK(grown.contains(0b01000));

    auto [same, stale] = persym::insert_row(grown, 0b01110);
    CHECK_FALSE(stale);
    CHECK(same.size() == grown.size());
}

TEST_CASE("span of a basis ignores insertion order") {
    std::mt19937_64 rng(0xbead5u);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<word> rows;
        for (int i = 0; i < 8; ++i) rows.push_back(rng() & 0x3ff);

        EchelonBasis fwd(10);
        for (word r : rows) fwd.insert(r);

        std::vector<word> shuffled = rows;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EchelonBasis bwd(10);
        for (word r : shuffled) bwd.insert(r);

        REQUIRE(fwd.size() == bwd.size());
        for (word probe = 0; probe < 1024; ++probe)
            REQUIRE(fwd.contains(probe) == bwd.contains(probe));
    }
}
