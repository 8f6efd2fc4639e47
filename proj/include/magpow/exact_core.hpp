#ifndef MAGPOW_EXACT_CORE_HPP
#define MAGPOW_EXACT_CORE_HPP

#include "magpow/int_square.hpp"

#include <optional>
#include <string>
#include <vector>

namespace magpow {

/*
 * Monic integer polynomial p(x) = sum c_i x^i, stored c_0..c_n.
 * As a characteristic polynomial it follows p(x) = det(xI - A), so
 * c_{n-1} = -trace(A) and c_0 = (-1)^n det(A).
 */
class CharPoly {
public:
    explicit CharPoly(std::vector<Integer> coeffs);

    std::size_t degree() const noexcept { return c_.size() - 1; }
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Integer>& coefficients() const noexcept { return c_; }

    Integer evaluate(const Integer& x) const;
    double evaluate(double x) const;
    // Sum of |c_i| x^i, the natural magnitude against which a residual is judged.
    double magnitude_at(double x) const;

    // p(A) via Horner; zero for the characteristic polynomial of A.
    IntSquare evaluate(const IntSquare& a) const;

    // Synthetic division by (x - r). Returns the quotient when r is an
    // exact root, otherwise nothing.
    std::optional<CharPoly> deflate(const Integer& r) const;

    // "x^4 - 10x^3", highest power first.
    std::string to_string() const;

    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.c_ == b.c_; }
    friend bool operator<(const CharPoly& a, const CharPoly& b);

private:
    std::vector<Integer> c_;
};

IntSquare mat_mul(const IntSquare& a, const IntSquare& b);

// A^p by iterated multiplication, p >= 1.
IntSquare mat_pow(const IntSquare& a, unsigned p);

// A^T A.
IntSquare gramian(const IntSquare& a);

Integer trace(const IntSquare& a);

// Faddeev-LeVerrier with exact integer division at every step.
CharPoly char_poly(const IntSquare& a);

// Fraction-free (Bareiss) elimination; pivot = first row with a nonzero
// entry in the current column.
std::size_t rank(const IntSquare& a);
std::size_t rank(const RationalSquare& a);

Integer determinant(const IntSquare& a);

// c when A = c * E_n.
std::optional<Integer> is_constant(const IntSquare& a);

} // namespace magpow

#endif
