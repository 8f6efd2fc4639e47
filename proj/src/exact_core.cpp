#include "magpow/exact_core.hpp"

#include "magpow/errors.hpp"

#include <algorithm>
#include <cmath>

namespace magpow {

namespace {

void divexact_inplace(Integer& num, const Integer& den) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

// Bareiss forward elimination in place. Returns the rank; swaps counts
// row interchanges so the caller can recover the determinant sign.
std::size_t bareiss(std::vector<Integer>& m, std::size_t n, std::size_t& swaps) {
    Integer prev = 1;
    std::size_t r = 0;
    swaps = 0;
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t p = r;
        while (p < n && sgn(at(p, col)) == 0) ++p;
        if (p == n) continue;
        if (p != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(r, j));
            ++swaps;
        }
        const Integer& piv = at(r, col);
        for (std::size_t i = r + 1; i < n; ++i) {
            const Integer lead = at(i, col);
            for (std::size_t j = col + 1; j < n; ++j) {
                Integer v = piv * at(i, j) - lead * at(r, j);
                divexact_inplace(v, prev);
                at(i, j) = std::move(v);
            }
            at(i, col) = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

} // namespace

CharPoly::CharPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty() || c_.back() != 1) throw precondition_error("characteristic polynomial must be monic");
}

Integer CharPoly::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double CharPoly::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

double CharPoly::magnitude_at(double x) const {
    double acc = 0.0;
    const double ax = std::fabs(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * ax + std::fabs(it->get_d());
    return acc;
}

IntSquare CharPoly::evaluate(const IntSquare& a) const {
    const std::size_t n = a.order();
    IntSquare acc(n);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = mat_mul(acc, a);
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

std::optional<CharPoly> CharPoly::deflate(const Integer& r) const {
    const std::size_t d = degree();
    if (d == 0) return std::nullopt;
    std::vector<Integer> q(d);
    Integer carry = 0;
    for (std::size_t i = d; i-- > 0;) {
        carry = c_[i + 1] + carry * r;
        q[i] = carry;
    }
    if (c_[0] + carry * r != 0) return std::nullopt;
    return CharPoly(std::move(q));
}

std::string CharPoly::to_string() const {
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Integer& c = c_[i];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

bool operator<(const CharPoly& a, const CharPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

IntSquare mat_mul(const IntSquare& a, const IntSquare& b) {
    if (a.order() != b.order()) throw precondition_error("order mismatch in product");
    const std::size_t n = a.order();
    IntSquare c(n);
    Integer t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
            }
        }
    return c;
}

IntSquare mat_pow(const IntSquare& a, unsigned p) {
    if (p == 0) throw precondition_error("power must be >= 1");
    IntSquare acc = a;
    for (unsigned k = 1; k < p; ++k) acc = mat_mul(acc, a);
    return acc;
}

IntSquare gramian(const IntSquare& a) {
    const std::size_t n = a.order();
    IntSquare g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Integer s = 0;
            for (std::size_t k = 0; k < n; ++k) mpz_addmul(s.get_mpz_t(), a(k, i).get_mpz_t(), a(k, j).get_mpz_t());
            g(i, j) = s;
            g(j, i) = s;
        }
    return g;
}

Integer trace(const IntSquare& a) {
    Integer t = 0;
    for (std::size_t i = 0; i < a.order(); ++i) t += a(i, i);
    return t;
}

CharPoly char_poly(const IntSquare& a) {
    const std::size_t n = a.order();
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    IntSquare am(n); // A * M_{k-1}, with M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        IntSquare m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        am = mat_mul(a, m);
        Integer t = -trace(am);
        divexact_inplace(t, Integer(static_cast<unsigned long>(k)));
        c[n - k] = t;
    }
    return CharPoly(std::move(c));
}

std::size_t rank(const IntSquare& a) {
    std::vector<Integer> m(a.entries().begin(), a.entries().end());
    std::size_t swaps = 0;
    return bareiss(m, a.order(), swaps);
}

std::size_t rank(const RationalSquare& a) {
    Integer den = 1;
    for (const auto& q : a.entries()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> m;
    m.reserve(a.entries().size());
    for (const auto& q : a.entries()) {
        Integer v = q.get_num() * den;
        divexact_inplace(v, q.get_den());
        m.push_back(std::move(v));
    }
    std::size_t swaps = 0;
    return bareiss(m, a.order(), swaps);
}

Integer determinant(const IntSquare& a) {
    const std::size_t n = a.order();
    std::vector<Integer> m(a.entries().begin(), a.entries().end());
    std::size_t swaps = 0;
    if (bareiss(m, n, swaps) < n) return 0;
    Integer d = m[n * n - 1];
    return swaps % 2 ? Integer(-d) : d;
}

std::optional<Integer> is_constant(const IntSquare& a) {
    const auto e = a.entries();
    const Integer& first = e.front();
    if (std::all_of(e.begin(), e.end(), [&](const Integer& v) { return v == first; })) return first;
    return std::nullopt;
}

} // namespace magpow
