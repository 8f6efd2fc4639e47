#ifndef MAGPOW_SPECTRA_HPP
#define MAGPOW_SPECTRA_HPP

#include "magpow/exact_core.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace magpow {

struct SpectralSummary {
    std::size_t rank = 0;
    std::size_t mu = 0;
    bool one_ev = false;
    std::optional<Integer> linesum;
    CharPoly char_poly{{Integer(1)}};
    CharPoly gramian_char_poly{{Integer(1)}};
    std::vector<double> singular_values; // descending
    std::optional<Integer> r_index;      // nonnegative DA squares only
    std::optional<double> compression_pct;
    std::optional<Rational> spread; // DA with nonzero linesum only
};

enum class DiskAxis { row, column };

struct Disk {
    Integer center;
    Integer radius;
    DiskAxis axis;
};

// Exact integer roots of a monic integer polynomial, with multiplicity,
// and the cofactor left after dividing them out.
struct IntegerRootSplit {
    std::vector<Integer> roots; // descending, repeated per multiplicity
    CharPoly residual;
};

// Algebraic multiplicity of the root 0: number of trailing zero coefficients.
std::size_t zero_multiplicity(const CharPoly& p);

// DA with linesum L != 0 and char_poly(A) == x^n - L x^(n-1).
bool is_1ev(const IntSquare& a);

// char_poly(A^T A); its roots are the squared singular values.
CharPoly sv_squared_charpoly(const IntSquare& a);

// Cyclic Jacobi on a double copy of A^T A, square-rooted, descending.
// Eigenvalues below tol * largest are clamped to zero.
std::vector<double> singular_values(const IntSquare& a, double tol = 1e-12);

// Eigenvalues of a symmetric matrix (row-major, n x n) by cyclic Jacobi
// rotations. Throws convergence_error after the sweep cap.
std::vector<double> jacobi_eigenvalues(std::vector<double> m, std::size_t n);

// R = trace((A^T A)^2) - L^4, the fourth-power sum of all but the leading
// singular value. Requires a DA square with nonnegative entries.
Integer r_index(const IntSquare& a);

// Entropy compression (percent) of the normalised nonzero singular values.
double compression(const IntSquare& a);
// Same measure from a known spectrum; only the leading `nonzero` values count.
double compression_from(const std::vector<double>& sv, std::size_t nonzero, std::size_t order);

// n (max - min) / L, exact.
Rational spread(const IntSquare& a);

std::vector<Disk> gerschgorin_disks(const IntSquare& a, DiskAxis axis = DiskAxis::column);

// Numeric eigenvalues (report and containment checks only).
std::vector<std::complex<double>> numeric_eigenvalues(const IntSquare& a);

// Integer roots found from numeric candidates and confirmed by exact deflation.
IntegerRootSplit split_integer_roots(const CharPoly& p, const std::vector<std::complex<double>>& candidates);

SpectralSummary summarize(const IntSquare& a);

} // namespace magpow

#endif
