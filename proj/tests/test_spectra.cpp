#include "magpow/constructors.hpp"
#include "magpow/errors.hpp"
#include "magpow/exact_core.hpp"
#include "magpow/spectra.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace magpow;

namespace {

std::vector<Integer> exact_roots(const CharPoly& p, std::initializer_list<long> candidates) {
    std::vector<Integer> found;
    auto rest = p;
    for (long c : candidates) {
        auto q = rest.deflate(c);
        if (!q) return {};
        found.emplace_back(c);
        rest = *q;
    }
    return rest.degree() == 0 ? found : std::vector<Integer>{};
}

} // namespace

TEST_SUITE("spectra") {

TEST_CASE("zero multiplicity") {
    CHECK(zero_multiplicity(char_poly(catalog("sud4a"))) == 3);
    CHECK(zero_multiplicity(char_poly(catalog("f181"))) == 0);
    CHECK(zero_multiplicity(char_poly(IntSquare(5))) == 5);
    CHECK(zero_multiplicity(char_poly(catalog("laa44"))) == 4);
}

TEST_CASE("is_1ev") {
    CHECK(is_1ev(catalog("sud4a")));
    CHECK_FALSE(is_1ev(catalog("lat4a")));
    CHECK(is_1ev(catalog("laa44")));
    CHECK(is_1ev(catalog("BF")));
    CHECK_FALSE(is_1ev(IntSquare(4)));
    CHECK_FALSE(is_1ev(IntSquare{{1, 1}, {0, 0}}));
    for (const auto& e : catalog_entries()) CHECK_MESSAGE(is_1ev(e.square) == e.expected.one_ev, e.name);
}

TEST_CASE("Gramian char poly roots are squared singular values") {
    CHECK(exact_roots(sv_squared_charpoly(catalog("sud4a")), {100, 16, 4, 0}).size() == 4);
    CHECK(exact_roots(sv_squared_charpoly(catalog("loshu")), {225, 48, 12}).size() == 3);
    CHECK(exact_roots(sv_squared_charpoly(IntSquare::constant(4, 1)), {16, 0, 0, 0}).size() == 4);
    CHECK(exact_roots(sv_squared_charpoly(catalog("f175")), {1156, 320, 20, 0}).size() == 4);
    CHECK(exact_roots(sv_squared_charpoly(mat_pow(catalog("loshu"), 3)), {11390625, 27648, 6912}).size() == 3);
}

TEST_CASE("singular values") {
    const auto sud = singular_values(catalog("sud4a"));
    REQUIRE(sud.size() == 4);
    CHECK(sud[0] == doctest::Approx(10).epsilon(1e-12));
    CHECK(sud[1] == doctest::Approx(4).epsilon(1e-12));
    CHECK(sud[2] == doctest::Approx(2).epsilon(1e-12));
    CHECK(sud[3] == 0.0);

    const auto prime = singular_values(catalog("prime_latin"));
    CHECK(prime[0] == doctest::Approx(2056));
    CHECK(prime[1] == doctest::Approx(840));
    CHECK(prime[2] == doctest::Approx(420));
    CHECK(prime[3] == 0.0);

    CHECK_THROWS_AS(singular_values(catalog("sud4a"), 0.0), precondition_error);
}

TEST_CASE("Jacobi eigenvalues of a small symmetric matrix") {
    // [[2,1],[1,2]] has eigenvalues 3 and 1.
    auto ev = jacobi_eigenvalues({2, 1, 1, 2}, 2);
    std::sort(ev.begin(), ev.end());
    CHECK(ev[0] == doctest::Approx(1));
    CHECK(ev[1] == doctest::Approx(3));
}

TEST_CASE("sigma_1 = L and sum of sigma^2 = Frobenius on the catalog") {
    for (const auto& e : catalog_entries()) {
        const auto sv = singular_values(e.square);
        const double l = e.expected.linesum.get_d();
        CHECK(std::fabs(sv[0] - l) <= 1e-9 * l);
        const auto l2 = e.expected.linesum * e.expected.linesum;
        CHECK(sv_squared_charpoly(e.square).evaluate(l2) == 0);

        Integer frob = 0;
        for (const auto& v : e.square.entries()) frob += v * v;
        CHECK(trace(gramian(e.square)) == frob);
        double s2 = 0;
        for (double s : sv) s2 += s * s;
        CHECK(std::fabs(s2 - frob.get_d()) <= 1e-9 * frob.get_d());
    }
}

TEST_CASE("numeric sigma^2 are roots of the exact Gramian polynomial") {
    for (const auto& e : catalog_entries()) {
        const auto p = sv_squared_charpoly(e.square);
        for (double s : singular_values(e.square)) {
            const double x = s * s;
            const double scale = p.magnitude_at(std::max(x, 1.0));
            CHECK_MESSAGE(std::fabs(p.evaluate(x)) / scale <= 1e-6, e.name << " sigma " << s);
        }
    }
}

TEST_CASE("count of singular values above tolerance equals rank") {
    for (const auto& e : catalog_entries()) {
        const auto sv = singular_values(e.square);
        std::size_t above = 0;
        for (double s : sv) above += s > 1e-9 * sv[0];
        CHECK_MESSAGE(above == rank(e.square), e.name);
        CHECK(zero_multiplicity(char_poly(e.square)) >= e.square.order() - rank(e.square));
    }
}

TEST_CASE("r_index") {
    CHECK(r_index(catalog("sud4a")) == 272);
    CHECK(r_index(catalog("BF")) == 463223040);
    CHECK(r_index(mat_pow(catalog("f360"), 2)) == 40960000);
    CHECK(r_index(mat_pow(catalog("f360"), 3)) == 0);
    for (const auto& e : catalog_entries()) {
        REQUIRE(e.expected.r_index);
        CHECK_MESSAGE(r_index(e.square) == *e.expected.r_index, e.name);
        CHECK(sgn(r_index(e.square)) >= 0);
        CHECK((r_index(e.square) == 0) == (rank(e.square) <= 1));
    }
    CHECK_THROWS_AS(r_index(IntSquare{{1, 2}, {3, 4}}), precondition_error);
    CHECK_THROWS_AS(r_index(IntSquare{{-1, 2}, {2, -1}}), precondition_error);
}

TEST_CASE("R equals the fourth-power sum of the trailing singular values") {
    for (const auto& e : catalog_entries()) {
        const auto sv = singular_values(e.square);
        double tail = 0;
        for (std::size_t i = 1; i < sv.size(); ++i) tail += std::pow(sv[i], 4);
        const double r = r_index(e.square).get_d();
        CHECK(std::fabs(tail - r) <= 1e-6 * std::max(1.0, std::pow(sv[0], 4)));
    }
}

TEST_CASE("compression") {
    CHECK(compression(catalog("sud4a")) == doctest::Approx(35.0603).epsilon(1e-3 / 35.0603));
    CHECK(compression(IntSquare::constant(4, 250)) == doctest::Approx(100));
    CHECK(compression(IntSquare::constant(7, 3)) == doctest::Approx(100));
    CHECK(std::fabs(compression(mat_pow(catalog("lat4a"), 2)) - 61.4828) <= 1e-3);
    CHECK_THROWS_AS(compression(IntSquare(3)), precondition_error);
    for (const auto& e : catalog_entries()) CHECK((std::fabs(compression(e.square) - 100) < 1e-9) == (rank(e.square) == 1));
}

TEST_CASE("compression from a hand-computed entropy") {
    // sigma-hat = (10/16, 4/16, 2/16) for sud4a.
    const double h = -(0.625 * std::log(0.625) + 0.25 * std::log(0.25) + 0.125 * std::log(0.125));
    CHECK(compression(catalog("sud4a")) == doctest::Approx((1 - h / std::log(4.0)) * 100));
}

TEST_CASE("spread") {
    CHECK(spread(catalog("sud4a")) == Rational(6, 5));
    CHECK(spread(IntSquare::constant(4, 9)) == 0);
    CHECK(spread(catalog("laa44")) == Rational(24, 13));
    CHECK_THROWS_AS(spread(IntSquare{{1, 2}, {3, 4}}), precondition_error);
    CHECK_THROWS_AS(spread(IntSquare{{1, -1}, {-1, 1}}), precondition_error);
}

TEST_CASE("Gerschgorin disks") {
    const auto col = gerschgorin_disks(catalog("sud4a"));
    std::vector<std::pair<long, long>> got;
    for (const auto& d : col) got.emplace_back(d.center.get_si(), d.radius.get_si());
    CHECK(got == std::vector<std::pair<long, long>>{{1, 9}, {4, 6}, {2, 8}, {3, 7}});

    for (const auto& d : gerschgorin_disks(IntSquare::identity(3))) {
        CHECK(d.center == 1);
        CHECK(d.radius == 0);
    }

    // Off-diagonal absolute row sums of loshu: 9+2, 3+7, 8+1.
    const auto row = gerschgorin_disks(catalog("loshu"), DiskAxis::row);
    CHECK(row[0].radius == 11);
    CHECK(row[1].radius == 10);
    CHECK(row[2].radius == 9);
    CHECK(row[2].center == 6);
}

TEST_CASE("every eigenvalue lies in the union of Gerschgorin disks") {
    for (const auto& e : catalog_entries())
        for (auto axis : {DiskAxis::row, DiskAxis::column}) {
            const auto disks = gerschgorin_disks(e.square, axis);
            for (const auto& z : numeric_eigenvalues(e.square)) {
                bool inside = false;
                for (const auto& d : disks)
                    inside = inside || std::abs(z - std::complex<double>(d.center.get_d(), 0)) <= d.radius.get_d() + 1e-7;
                CHECK_MESSAGE(inside, e.name);
            }
        }
}

TEST_CASE("split_integer_roots") {
    const auto f181 = char_poly(catalog("f181"));
    const auto split = split_integer_roots(f181, numeric_eigenvalues(catalog("f181")));
    CHECK(split.roots == std::vector<Integer>{34, -8});
    CHECK(split.residual == CharPoly({Integer(24), Integer(-8), Integer(1)}));

    const auto lat = split_integer_roots(char_poly(catalog("lat4a")), numeric_eigenvalues(catalog("lat4a")));
    CHECK(lat.roots == std::vector<Integer>{10, 0, -2, -4});
    CHECK(lat.residual.degree() == 0);
}

TEST_CASE("summarize") {
    const auto s = summarize(catalog("sud4a"));
    CHECK(s.rank == 3);
    CHECK(s.mu == 3);
    CHECK(s.one_ev);
    CHECK(s.linesum == Integer(10));
    CHECK(s.r_index == Integer(272));
    CHECK(s.spread == Rational(6, 5));
    REQUIRE(s.compression_pct);
    CHECK(std::fabs(*s.compression_pct - 35.0603) <= 1e-3);

    const auto z = summarize(IntSquare{{1, 2}, {3, 4}});
    CHECK_FALSE(z.linesum);
    CHECK_FALSE(z.r_index);
    CHECK_FALSE(z.spread);
}

} // TEST_SUITE
