#ifndef MAGPOW_CONSTRUCTORS_HPP
#define MAGPOW_CONSTRUCTORS_HPP

#include "magpow/int_square.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace magpow {

struct CatalogExpectation {
    Integer linesum;
    bool one_ev = false;
    std::optional<Integer> r_index;
};

struct CatalogEntry {
    std::string name;
    IntSquare square;
    std::string provenance;
    CatalogExpectation expected;
};

// Every square printed in the reference material, as printed (BF carries
// the corrected last cell of its first row).
const std::vector<CatalogEntry>& catalog_entries();

// Named square. Besides the fixed entries, "identity<n>", "ones<n>" and
// "zero<n>" generate I_n, E_n and the zero square. Throws input_error.
IntSquare catalog(std::string_view name);
bool in_catalog(std::string_view name);

enum class CompoundKind { latin, magic };

/*
 * Order m*n square whose block (i, j) is base + (pattern[i][j] - 1) * delta,
 * delta = n for latin and n^2 for magic.
 *
 * latin: pattern and base must be Latin on symbols 1..m, 1..n.
 * magic: base and pattern must be doubly-affine with positive entries;
 *        classic magic inputs give a classic magic result.
 */
IntSquare compound(const IntSquare& pattern, const IntSquare& base, CompoundKind kind);

// AB - BA.
IntSquare commutator(const IntSquare& a, const IntSquare& b);

// One product from the pair/triple study of two 1EV squares X and Y.
struct ProductFinding {
    std::string label; // e.g. "X.(X.Y)"
    IntSquare product;
};

// X.Y, the four triple products X.(XY), (XY).X, (XY).Y, Y.(XY), and the
// commutator XY - YX, in that order.
std::vector<ProductFinding> pair_triple_study(const IntSquare& x, const IntSquare& y,
                                              const std::string& x_name, const std::string& y_name);

} // namespace magpow

#endif
