#ifndef MAGPOW_CLASSIFY_HPP
#define MAGPOW_CLASSIFY_HPP

#include "magpow/int_square.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace magpow {

struct LineSumReport {
    std::vector<Integer> row_sums;
    std::vector<Integer> col_sums;
    Integer d1; // main diagonal
    Integer d2; // antidiagonal
    // [0]: down-right broken diagonals starting at (0, k); [1]: down-left
    // broken diagonals starting at (0, k). Both wrap around.
    std::array<std::vector<Integer>, 2> broken_diag_sums;
    // Even orders only: row i contributes left half then right half.
    std::vector<Integer> half_row_sums;
    std::vector<Integer> half_col_sums;
    // Orders divisible by 4 only: down-V, up-V, right-V, left-V families.
    std::array<std::vector<Integer>, 4> bent_sums;
};

enum class TypeLabel { constant, DDA, DA, none };

std::string to_string(TypeLabel t);

struct ClassificationFlags {
    bool is_DA = false;
    bool is_DDA = false;
    bool is_latin = false;
    bool is_diagonal_latin = false;
    bool is_classic_magic = false;
    bool is_classic_latin = false;
    bool is_associative = false;
    bool is_pandiagonal = false;
    bool is_ultramagic = false;
    bool franklin_half_sums = false;
    bool franklin_bent = false;
    bool franklin_quartet = false;
    std::optional<Integer> linesum;
    // Common antipodal pair sum when associative.
    std::optional<Integer> associative_constant;
    TypeLabel type_label = TypeLabel::none;
    Integer d1;
    Integer d2;
};

LineSumReport line_sums(const IntSquare& a);

ClassificationFlags classify(const IntSquare& a);

// The eight rotations/reflections. Phase k < 4 rotates clockwise by k
// quarter turns; phase k >= 4 transposes first, then rotates by k - 4.
IntSquare apply_symmetry(const IntSquare& a, int phase);

// Frenicle standard form of an order-4 square: smallest corner at the top
// left and a[0][1] < a[1][0]. Returns the form and the phase p such that
// apply_symmetry(a, p) is that form. Throws on other orders and on ties.
std::pair<IntSquare, int> frenicle_canonical(const IntSquare& a);

} // namespace magpow

#endif
