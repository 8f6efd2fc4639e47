#ifndef MAGPOW_INT_SQUARE_HPP
#define MAGPOW_INT_SQUARE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace magpow {

using Integer = mpz_class;
using Rational = mpq_class;

/*
 * Dense order-n square of arbitrary-precision integers, row-major.
 *
 * Plain value type: copies are deep and independent, every analysis
 * function takes squares by const reference and returns new values.
 */
class IntSquare {
public:
    // n x n zero square. n must be >= 1.
    explicit IntSquare(std::size_t order);
    IntSquare(std::size_t order, std::vector<Integer> entries);
    IntSquare(std::initializer_list<std::initializer_list<long>> rows);

    static IntSquare identity(std::size_t order);
    // c * E_n, the constant square.
    static IntSquare constant(std::size_t order, const Integer& value);

    std::size_t order() const noexcept { return n_; }

    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    std::span<const Integer> entries() const noexcept { return a_; }
    std::span<const Integer> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

    IntSquare transposed() const;

    friend bool operator==(const IntSquare& a, const IntSquare& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
    // Lexicographic on (order, row-major entries).
    friend bool operator<(const IntSquare& a, const IntSquare& b);

private:
    std::size_t n_;
    std::vector<Integer> a_;
};

IntSquare operator+(const IntSquare& a, const IntSquare& b);
IntSquare operator-(const IntSquare& a, const IntSquare& b);
IntSquare operator*(const Integer& c, const IntSquare& a);

/*
 * Order-n square of exact rationals. mpq_class keeps every entry
 * canonical (lowest terms, positive denominator) after each operation.
 */
class RationalSquare {
public:
    explicit RationalSquare(std::size_t order);
    explicit RationalSquare(const IntSquare& a);

    std::size_t order() const noexcept { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::span<const Rational> entries() const noexcept { return a_; }

    bool is_zero() const;

    friend bool operator==(const RationalSquare& a, const RationalSquare& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    std::size_t n_;
    std::vector<Rational> a_;
};

RationalSquare operator*(const RationalSquare& a, const RationalSquare& b);

// Parses whitespace/comma separated integers (k^2 of them), or the JSON
// forms {"order": n, "rows": [[...], ...]} and [[...], ...].
// Lines starting with '#' are comments. Throws input_error.
IntSquare parse_square(std::string_view text);

// One row per line, columns right-aligned.
std::string format_square(const IntSquare& a);

} // namespace magpow

#endif
