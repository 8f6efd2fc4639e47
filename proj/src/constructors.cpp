#include "magpow/constructors.hpp"

#include "magpow/classify.hpp"
#include "magpow/errors.hpp"
#include "magpow/exact_core.hpp"

#include <algorithm>
#include <charconv>

namespace magpow {

namespace {

CatalogEntry entry(std::string name, IntSquare sq, std::string provenance, long linesum, bool one_ev,
                   std::optional<Integer> r) {
    return {std::move(name), std::move(sq), std::move(provenance), {Integer(linesum), one_ev, std::move(r)}};
}

std::optional<std::size_t> generated_order(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    const auto digits = name.substr(prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0 || digits.empty()) return std::nullopt;
    return n;
}

bool positive_entries(const IntSquare& a) {
    return std::all_of(a.entries().begin(), a.entries().end(), [](const Integer& v) { return sgn(v) > 0; });
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        entry("sud4a", {{1, 2, 3, 4}, {3, 4, 1, 2}, {4, 3, 2, 1}, {2, 1, 4, 3}},
              "order-4 diagonal Latin square (mini-Sudoku), 1EV", 10, true, Integer(272)),
        entry("lat4a", {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}},
              "sud4a with its second row moved last, 3EV", 10, false, Integer(272)),
        entry("loshu", {{4, 9, 2}, {3, 5, 7}, {8, 1, 6}}, "the order-3 magic square", 15, false, Integer(2448)),
        entry("f360", {{2, 11, 7, 14}, {13, 8, 12, 1}, {16, 5, 9, 4}, {3, 10, 6, 15}},
              "Frenicle #360, associative clan alpha, 1EV", 34, true, Integer(102800)),
        entry("f299", {{2, 7, 13, 12}, {16, 9, 3, 6}, {11, 14, 8, 1}, {5, 4, 10, 15}},
              "Frenicle #299, associative clan beta, 1EV", 34, true, Integer(78608)),
        entry("f175", {{1, 12, 8, 13}, {14, 7, 11, 2}, {15, 6, 10, 3}, {4, 9, 5, 16}},
              "Frenicle #175, associative clan alpha, 3EV", 34, false, Integer(102800)),
        entry("f181", {{1, 12, 13, 8}, {16, 9, 4, 5}, {2, 7, 14, 11}, {15, 6, 3, 10}},
              "Frenicle #181, non-singular, not associative", 34, false, Integer(93584)),
        entry("laa44",
              {{2, 11, 21, 23, 8}, {16, 14, 7, 6, 22}, {25, 17, 13, 9, 1}, {4, 20, 19, 12, 10}, {18, 3, 5, 15, 24}},
              "order-5 associative magic square, 1EV with mu = 4", 65, true, Integer(706000)),
        entry("BF",
              {{14, 3, 62, 51, 46, 35, 30, 19},
               {52, 61, 4, 13, 20, 29, 36, 45},
               {11, 6, 59, 54, 43, 38, 27, 22},
               {53, 60, 5, 12, 21, 28, 37, 44},
               {55, 58, 7, 10, 23, 26, 39, 42},
               {9, 8, 57, 56, 41, 40, 25, 24},
               {50, 63, 2, 15, 18, 31, 34, 47},
               {16, 1, 64, 49, 48, 33, 32, 17}},
              "order-8 row-permuted Franklin square (last cell of row 1 corrected to 19), 1EV", 260, true,
              Integer(463223040)),
        entry("freitag", {{13, 89, 97, 34}, {110, 21, 63, 39}, {68, 94, 55, 16}, {42, 29, 18, 144}},
              "Freitag's Fibonacci magic square, non-singular", 233, false, Integer(256672499)),
        entry("prime_latin", {{199, 409, 619, 829}, {619, 829, 199, 409}, {829, 619, 409, 199}, {409, 199, 829, 619}},
              "Latin square on the primes 199, 409, 619, 829 patterned on sud4a, 1EV", 2056, true,
              Integer("528988320000")),
    };
    return entries;
}

bool in_catalog(std::string_view name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return true;
    return generated_order(name, "identity") || generated_order(name, "ones") || generated_order(name, "zero");
}

IntSquare catalog(std::string_view name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e.square;
    if (auto n = generated_order(name, "identity")) return IntSquare::identity(*n);
    if (auto n = generated_order(name, "ones")) return IntSquare::constant(*n, 1);
    if (auto n = generated_order(name, "zero")) return IntSquare(*n);
    throw input_error("unknown catalog name '" + std::string(name) + "'");
}

IntSquare compound(const IntSquare& pattern, const IntSquare& base, CompoundKind kind) {
    const std::size_t m = pattern.order(), n = base.order();
    const auto pf = classify(pattern), bf = classify(base);
    Integer delta;
    if (kind == CompoundKind::latin) {
        if (!pf.is_classic_latin || !bf.is_classic_latin)
            throw precondition_error("latin compounding needs Latin pattern and base on symbols 1..n");
        delta = static_cast<unsigned long>(n);
    } else {
        if (!pf.is_DA || !bf.is_DA || !positive_entries(pattern) || !positive_entries(base))
            throw precondition_error("magic compounding needs doubly-affine pattern and base with positive entries");
        delta = static_cast<unsigned long>(n * n);
    }
    IntSquare out(m * n);
    for (std::size_t bi = 0; bi < m; ++bi)
        for (std::size_t bj = 0; bj < m; ++bj) {
            const Integer shift = (pattern(bi, bj) - 1) * delta;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out(bi * n + i, bj * n + j) = base(i, j) + shift;
        }
    return out;
}

IntSquare commutator(const IntSquare& a, const IntSquare& b) { return mat_mul(a, b) - mat_mul(b, a); }

std::vector<ProductFinding> pair_triple_study(const IntSquare& x, const IntSquare& y, const std::string& x_name,
                                              const std::string& y_name) {
    const IntSquare pair = mat_mul(x, y);
    const std::string pn = "(" + x_name + "." + y_name + ")";
    return {
        {x_name + "." + y_name, pair},
        {x_name + "." + pn, mat_mul(x, pair)},
        {pn + "." + x_name, mat_mul(pair, x)},
        {pn + "." + y_name, mat_mul(pair, y)},
        {y_name + "." + pn, mat_mul(y, pair)},
        {x_name + "." + y_name + " - " + y_name + "." + x_name, commutator(x, y)},
    };
}

} // namespace magpow
