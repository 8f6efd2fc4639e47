#ifndef MAGPOW_STRUCTURE_HPP
#define MAGPOW_STRUCTURE_HPP

#include "magpow/int_square.hpp"

#include <vector>

namespace magpow {

// Jordan block sizes for the eigenvalue 0, read off the rank sequence of
// A^p (Weyr characteristic). No transform matrix is ever formed.
struct JordanZeroProfile {
    std::vector<std::size_t> block_sizes; // descending
    std::size_t max_block = 0;
    std::vector<std::size_t> zero_rank_sequence; // rank(A^p), p = 0..stabilisation
};

// N = Z - (l/n) E_n for a DA square Z with linesum l.
RationalSquare nilpotent_part(const IntSquare& z);

// Smallest k >= 1 with N^k = 0. Throws precondition_error when N^n != 0.
std::size_t nilpotency_index(const RationalSquare& n);

JordanZeroProfile zero_jordan_profile(const IntSquare& a);

// For a 1EV square: the first power at which A^k is constant, obtained
// from the nilpotent part alone.
std::size_t predicted_constancy_power(const IntSquare& a);

} // namespace magpow

#endif
