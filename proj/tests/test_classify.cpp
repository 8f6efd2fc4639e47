#include "magpow/classify.hpp"
#include "magpow/constructors.hpp"
#include "magpow/errors.hpp"
#include "magpow/exact_core.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace magpow;

namespace {

// Franklin's own order-8 square; BF is this with its first two rows swapped.
const IntSquare kFranklin{{52, 61, 4, 13, 20, 29, 36, 45}, {14, 3, 62, 51, 46, 35, 30, 19},
                          {53, 60, 5, 12, 21, 28, 37, 44}, {11, 6, 59, 54, 43, 38, 27, 22},
                          {55, 58, 7, 10, 23, 26, 39, 42}, {9, 8, 57, 56, 41, 40, 25, 24},
                          {50, 63, 2, 15, 18, 31, 34, 47}, {16, 1, 64, 49, 48, 33, 32, 17}};

} // namespace

TEST_SUITE("classify") {

TEST_CASE("line sums") {
    const auto r = line_sums(catalog("lat4a"));
    CHECK(r.d1 == 4);
    CHECK(r.d2 == 16);
    for (const auto& s : r.row_sums) CHECK(s == 10);
    for (const auto& s : r.col_sums) CHECK(s == 10);
    CHECK(r.bent_sums[0].size() == 4);
    CHECK(line_sums(catalog("loshu")).half_row_sums.empty());
    CHECK(line_sums(catalog("loshu")).bent_sums[0].empty());
}

TEST_CASE("down-V bent diagonal at r = 0 visits rows 0,1,2,3,3,2,1,0") {
    IntSquare probe(8);
    // Encode (row, col) as 10^row so the sum records which rows were hit.
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            Integer v;
            mpz_ui_pow_ui(v.get_mpz_t(), 10, i);
            probe(i, j) = v;
        }
    CHECK(line_sums(probe).bent_sums[0][0] == Integer(2 * (1 + 10 + 100 + 1000)));
}

TEST_CASE("sums of row and column totals agree") {
    for (const auto& e : catalog_entries()) {
        const auto r = line_sums(e.square);
        Integer rows = 0, cols = 0, all = 0;
        for (const auto& v : r.row_sums) rows += v;
        for (const auto& v : r.col_sums) cols += v;
        for (const auto& v : e.square.entries()) all += v;
        CHECK(rows == all);
        CHECK(cols == all);
    }
}

TEST_CASE("classify catalog squares") {
    const auto sud = classify(catalog("sud4a"));
    CHECK(sud.is_DDA);
    CHECK(sud.is_diagonal_latin);
    CHECK(sud.is_classic_latin);
    CHECK(sud.linesum == Integer(10));

    const auto lat = classify(catalog("lat4a"));
    CHECK(lat.is_DA);
    CHECK_FALSE(lat.is_DDA);
    CHECK(lat.is_latin);
    CHECK_FALSE(lat.is_diagonal_latin);
    CHECK(lat.type_label == TypeLabel::DA);

    const auto lo = classify(catalog("loshu"));
    CHECK(lo.is_classic_magic);
    CHECK(lo.is_associative);
    CHECK(lo.associative_constant == Integer(10));
    CHECK_FALSE(lo.is_pandiagonal);

    CHECK(classify(catalog("f360")).is_associative);
    CHECK_FALSE(classify(catalog("f181")).is_associative);

    const auto prime = classify(catalog("prime_latin"));
    CHECK(prime.is_latin);
    CHECK_FALSE(prime.is_classic_latin);
    CHECK(prime.linesum == Integer(2056));

    const auto fib = classify(catalog("freitag"));
    CHECK(fib.is_DDA);
    CHECK_FALSE(fib.is_classic_magic);
    CHECK_FALSE(fib.is_associative);

    CHECK(classify(IntSquare::constant(4, 3)).type_label == TypeLabel::constant);
    CHECK(classify(IntSquare{{1, 2}, {3, 4}}).type_label == TypeLabel::none);
}

TEST_CASE("Franklin properties") {
    const auto f = classify(kFranklin);
    CHECK(f.franklin_bent);
    CHECK(f.franklin_half_sums);
    CHECK_FALSE(f.is_DDA);

    const auto bf = classify(catalog("BF"));
    CHECK(bf.is_DDA);
    CHECK(bf.is_classic_magic);
    CHECK_FALSE(bf.franklin_bent);
    CHECK(bf.franklin_half_sums);
}

TEST_CASE("franklin half sums imply DA") {
    for (const auto& e : catalog_entries()) {
        const auto f = classify(e.square);
        if (f.franklin_half_sums) CHECK(f.is_DA);
    }
}

TEST_CASE("pandiagonal order-4 square") {
    const IntSquare pan{{1, 8, 13, 12}, {14, 11, 2, 7}, {4, 5, 16, 9}, {15, 10, 3, 6}};
    const auto f = classify(pan);
    CHECK(f.is_pandiagonal);
    CHECK(f.is_classic_magic);
    CHECK(f.franklin_quartet);
}

TEST_CASE("flags are invariant under the eight symmetries") {
    for (const auto& e : catalog_entries()) {
        const auto base = classify(e.square);
        for (int phase = 0; phase < 8; ++phase) {
            const auto f = classify(apply_symmetry(e.square, phase));
            CHECK(f.is_DA == base.is_DA);
            CHECK(f.is_DDA == base.is_DDA);
            CHECK(f.is_latin == base.is_latin);
            CHECK(f.is_associative == base.is_associative);
            CHECK(f.is_pandiagonal == base.is_pandiagonal);
        }
    }
}

TEST_CASE("apply_symmetry matches rotate/transpose oracle") {
    const auto a = catalog("f181");
    const auto images = oracle::orbit(oracle::to_grid(a));
    for (int phase = 0; phase < 8; ++phase)
        CHECK(apply_symmetry(a, phase) == oracle::from_grid(images[static_cast<std::size_t>(phase)]));
    CHECK_THROWS_AS(apply_symmetry(a, 8), precondition_error);
}

TEST_CASE("frenicle_canonical agrees with brute-force selection") {
    for (const char* name : {"f360", "f299", "f175", "f181", "sud4a", "freitag"}) {
        const auto a = catalog(name);
        for (int phase = 0; phase < 8; ++phase) {
            const auto img = apply_symmetry(a, phase);
            const auto [form, p] = frenicle_canonical(img);
            CHECK(form == oracle::from_grid(oracle::frenicle_by_search(oracle::to_grid(img))));
            CHECK(apply_symmetry(img, p) == form);
        }
    }
}

TEST_CASE("frenicle_canonical edge cases") {
    const auto f360 = catalog("f360");
    const auto [form, phase] = frenicle_canonical(f360);
    CHECK(frenicle_canonical(form) == std::pair{form, 0});
    CHECK_THROWS_AS(frenicle_canonical(IntSquare::constant(4, 1)), precondition_error);
    CHECK_THROWS_AS(frenicle_canonical(catalog("loshu")), precondition_error);
    CHECK(phase >= 0);
}

TEST_CASE("powers of DA squares keep linesum L^p") {
    for (const auto& e : catalog_entries()) {
        auto p = e.square;
        Integer lp = e.expected.linesum;
        for (int k = 1; k <= 4; ++k) {
            CHECK(classify(p).linesum == lp);
            p = mat_mul(p, e.square);
            lp *= e.expected.linesum;
        }
    }
}

} // TEST_SUITE
