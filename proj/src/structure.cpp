#include "magpow/structure.hpp"

#include "magpow/classify.hpp"
#include "magpow/errors.hpp"
#include "magpow/exact_core.hpp"
#include "magpow/spectra.hpp"

#include <algorithm>

namespace magpow {

RationalSquare nilpotent_part(const IntSquare& z) {
    const auto flags = classify(z);
    if (!flags.is_DA) throw precondition_error("nilpotent part needs a doubly-affine square");
    const std::size_t n = z.order();
    Rational shift(*flags.linesum, Integer(static_cast<unsigned long>(n)));
    shift.canonicalize();
    RationalSquare out(z);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) -= shift;
    return out;
}

std::size_t nilpotency_index(const RationalSquare& n) {
    RationalSquare power = n;
    for (std::size_t k = 1; k <= n.order(); ++k) {
        if (power.is_zero()) return k;
        power = power * n;
    }
    throw precondition_error("matrix is not nilpotent (source square is not 1EV)");
}

JordanZeroProfile zero_jordan_profile(const IntSquare& a) {
    const std::size_t n = a.order();
    const std::size_t mu = zero_multiplicity(char_poly(a));
    const std::size_t stable = n - mu; // rank carried by the nonzero eigenvalues

    JordanZeroProfile prof;
    prof.zero_rank_sequence.push_back(n);
    IntSquare power = a;
    while (prof.zero_rank_sequence.back() > stable) {
        if (prof.zero_rank_sequence.size() > n) throw precondition_error("rank sequence failed to stabilise");
        if (prof.zero_rank_sequence.size() > 1) power = mat_mul(power, a);
        prof.zero_rank_sequence.push_back(rank(power));
    }

    // at_least[p] = number of zero blocks of size >= p
    const auto& r = prof.zero_rank_sequence;
    std::vector<std::size_t> at_least(r.size() + 1, 0);
    for (std::size_t p = 1; p < r.size(); ++p) at_least[p] = r[p - 1] - r[p];
    for (std::size_t p = r.size() - 1; p >= 1; --p) {
        const std::size_t exactly = at_least[p] - at_least[p + 1];
        prof.block_sizes.insert(prof.block_sizes.end(), exactly, p);
    }
    prof.max_block = prof.block_sizes.empty() ? 0 : prof.block_sizes.front();
    return prof;
}

std::size_t predicted_constancy_power(const IntSquare& a) {
    if (!is_1ev(a)) throw precondition_error("constancy prediction needs a 1EV square");
    return nilpotency_index(nilpotent_part(a));
}

} // namespace magpow
