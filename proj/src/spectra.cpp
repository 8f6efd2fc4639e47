#include "magpow/spectra.hpp"

#include "magpow/classify.hpp"
#include "magpow/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>

namespace magpow {

namespace {

constexpr int kJacobiSweepCap = 100;
constexpr double kJacobiThreshold = 1e-14;

bool matches_1ev(const CharPoly& p, const std::optional<Integer>& linesum) {
    if (!linesum || sgn(*linesum) == 0) return false;
    const std::size_t n = p.degree();
    if (p[n - 1] != -*linesum) return false;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (sgn(p[i]) != 0) return false;
    return true;
}

std::optional<Integer> da_linesum(const IntSquare& a) {
    const auto s = line_sums(a);
    const Integer& l = s.row_sums.front();
    for (std::size_t i = 0; i < a.order(); ++i)
        if (s.row_sums[i] != l || s.col_sums[i] != l) return std::nullopt;
    return l;
}

bool nonnegative(const IntSquare& a) {
    return std::all_of(a.entries().begin(), a.entries().end(), [](const Integer& v) { return sgn(v) >= 0; });
}

Integer r_index_from(const IntSquare& g, const Integer& l) {
    Integer sum = 0;
    for (const auto& v : g.entries()) mpz_addmul(sum.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
    Integer l4;
    mpz_pow_ui(l4.get_mpz_t(), l.get_mpz_t(), 4);
    return sum - l4;
}

std::vector<double> sv_from_gramian(const IntSquare& g, double tol) {
    const std::size_t n = g.order();
    std::vector<double> m(n * n);
    for (std::size_t k = 0; k < n * n; ++k) m[k] = g.entries()[k].get_d();
    std::vector<double> ev = jacobi_eigenvalues(std::move(m), n);
    const double top = ev.empty() ? 0.0 : *std::max_element(ev.begin(), ev.end());
    for (auto& v : ev) v = (v <= tol * top || v < 0.0) ? 0.0 : std::sqrt(v);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

} // namespace

std::size_t zero_multiplicity(const CharPoly& p) {
    std::size_t k = 0;
    while (k < p.degree() && sgn(p[k]) == 0) ++k;
    return k;
}

bool is_1ev(const IntSquare& a) {
    const auto l = da_linesum(a);
    if (!l || sgn(*l) == 0) return false;
    return matches_1ev(char_poly(a), l);
}

CharPoly sv_squared_charpoly(const IntSquare& a) { return char_poly(gramian(a)); }

std::vector<double> jacobi_eigenvalues(std::vector<double> m, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };
    double frob = 0.0;
    for (double v : m) frob += v * v;
    frob = std::sqrt(frob);
    const double threshold = kJacobiThreshold * frob;

    for (int sweep = 0;; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
        if (std::sqrt(off) <= threshold) break;
        if (sweep == kJacobiSweepCap) throw convergence_error("Jacobi sweep cap reached");

        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    return ev;
}

std::vector<double> singular_values(const IntSquare& a, double tol) {
    if (!(tol > 0.0)) throw precondition_error("tolerance must be positive");
    return sv_from_gramian(gramian(a), tol);
}

Integer r_index(const IntSquare& a) {
    const auto l = da_linesum(a);
    if (!l) throw precondition_error("R-index needs a doubly-affine square");
    if (!nonnegative(a)) throw precondition_error("R-index needs nonnegative entries");
    return r_index_from(gramian(a), *l);
}

double compression_from(const std::vector<double>& sv, std::size_t nonzero, std::size_t order) {
    if (nonzero == 0) throw precondition_error("compression of the zero matrix is undefined");
    if (order == 1 || nonzero == 1) return 100.0;
    double total = 0.0;
    for (std::size_t i = 0; i < nonzero; ++i) total += sv[i];
    double h = 0.0;
    for (std::size_t i = 0; i < nonzero; ++i) {
        const double p = sv[i] / total;
        if (p > 0.0) h -= p * std::log(p);
    }
    return (1.0 - h / std::log(static_cast<double>(order))) * 100.0;
}

double compression(const IntSquare& a) {
    return compression_from(singular_values(a), rank(a), a.order());
}

Rational spread(const IntSquare& a) {
    const auto l = da_linesum(a);
    if (!l) throw precondition_error("spread needs a doubly-affine square");
    if (sgn(*l) == 0) throw precondition_error("spread needs a nonzero linesum");
    const auto [lo, hi] = std::minmax_element(a.entries().begin(), a.entries().end());
    Rational s(Integer(static_cast<unsigned long>(a.order())) * (*hi - *lo), *l);
    s.canonicalize();
    return s;
}

std::vector<Disk> gerschgorin_disks(const IntSquare& a, DiskAxis axis) {
    const std::size_t n = a.order();
    std::vector<Disk> disks;
    disks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer r = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            r += abs(axis == DiskAxis::row ? a(i, k) : a(k, i));
        }
        disks.push_back({a(i, i), r, axis});
    }
    return disks;
}

std::vector<std::complex<double>> numeric_eigenvalues(const IntSquare& a) {
    const auto n = static_cast<Eigen::Index>(a.order());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    const auto& ev = solver.eigenvalues();
    std::vector<std::complex<double>> out(ev.begin(), ev.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.real() != y.real() ? x.real() > y.real() : x.imag() > y.imag();
    });
    return out;
}

IntegerRootSplit split_integer_roots(const CharPoly& p, const std::vector<std::complex<double>>& candidates) {
    std::set<Integer, std::greater<>> tried;
    tried.insert(Integer(0));
    for (const auto& z : candidates) {
        Integer r;
        mpz_set_d(r.get_mpz_t(), std::nearbyint(z.real()));
        tried.insert(r);
    }
    IntegerRootSplit out{{}, p};
    for (const auto& r : tried) {
        while (out.residual.degree() > 0) {
            auto q = out.residual.deflate(r);
            if (!q) break;
            out.roots.push_back(r);
            out.residual = std::move(*q);
        }
    }
    return out;
}

SpectralSummary summarize(const IntSquare& a) {
    SpectralSummary s;
    const std::size_t n = a.order();
    const IntSquare g = gramian(a);
    s.rank = rank(a);
    s.char_poly = char_poly(a);
    s.mu = zero_multiplicity(s.char_poly);
    s.linesum = da_linesum(a);
    s.one_ev = matches_1ev(s.char_poly, s.linesum);
    s.gramian_char_poly = char_poly(g);
    s.singular_values = sv_from_gramian(g, 1e-12);
    if (s.linesum && nonnegative(a)) s.r_index = r_index_from(g, *s.linesum);
    if (s.rank > 0) s.compression_pct = compression_from(s.singular_values, s.rank, n);
    if (s.linesum && sgn(*s.linesum) != 0) s.spread = spread(a);
    return s;
}

} // namespace magpow
