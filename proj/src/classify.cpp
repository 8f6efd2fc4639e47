#include "magpow/classify.hpp"

#include "magpow/errors.hpp"
#include "magpow/exact_core.hpp"

#include <algorithm>
#include <set>

namespace magpow {

namespace {

bool all_equal(const std::vector<Integer>& v, const Integer& target) {
    return std::all_of(v.begin(), v.end(), [&](const Integer& x) { return x == target; });
}

bool all_distinct(std::vector<Integer> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

IntSquare rotate_clockwise(const IntSquare& a) {
    const std::size_t n = a.order();
    IntSquare b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = a(n - 1 - j, i);
    return b;
}

bool check_latin(const IntSquare& a, bool& classic) {
    const std::size_t n = a.order();
    std::set<Integer> symbols(a.entries().begin(), a.entries().end());
    classic = false;
    if (symbols.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> row(a.row(i).begin(), a.row(i).end());
        std::vector<Integer> col;
        for (std::size_t k = 0; k < n; ++k) col.push_back(a(k, i));
        if (!all_distinct(row) || !all_distinct(col)) return false;
    }
    classic = *symbols.begin() == 1 && *symbols.rbegin() == static_cast<long>(n);
    return true;
}

} // namespace

std::string to_string(TypeLabel t) {
    switch (t) {
    case TypeLabel::constant: return "constant";
    case TypeLabel::DDA: return "DDA";
    case TypeLabel::DA: return "DA";
    case TypeLabel::none: return "none";
    }
    return "none";
}

LineSumReport line_sums(const IntSquare& a) {
    const std::size_t n = a.order();
    LineSumReport r;
    r.row_sums.assign(n, 0);
    r.col_sums.assign(n, 0);
    r.d1 = 0;
    r.d2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r.row_sums[i] += a(i, j);
            r.col_sums[j] += a(i, j);
        }
        r.d1 += a(i, i);
        r.d2 += a(i, n - 1 - i);
    }
    for (auto& fam : r.broken_diag_sums) fam.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            r.broken_diag_sums[0][k] += a(i, (k + i) % n);
            r.broken_diag_sums[1][k] += a(i, (k + n - i % n) % n);
        }
    if (n % 2 == 0) {
        const std::size_t h = n / 2;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t half = 0; half < 2; ++half) {
                Integer rs = 0, cs = 0;
                for (std::size_t k = half * h; k < (half + 1) * h; ++k) {
                    rs += a(i, k);
                    cs += a(k, i);
                }
                r.half_row_sums.push_back(rs);
                r.half_col_sums.push_back(cs);
            }
    }
    if (n % 4 == 0) {
        auto bend = [n](std::size_t t) { return std::min(t, n - 1 - t); };
        for (auto& fam : r.bent_sums) fam.assign(n, 0);
        for (std::size_t anchor = 0; anchor < n; ++anchor)
            for (std::size_t t = 0; t < n; ++t) {
                const std::size_t b = bend(t);
                r.bent_sums[0][anchor] += a((anchor + b) % n, t);
                r.bent_sums[1][anchor] += a((anchor + n - b) % n, t);
                r.bent_sums[2][anchor] += a(t, (anchor + b) % n);
                r.bent_sums[3][anchor] += a(t, (anchor + n - b) % n);
            }
    }
    return r;
}

ClassificationFlags classify(const IntSquare& a) {
    const std::size_t n = a.order();
    const LineSumReport s = line_sums(a);
    ClassificationFlags f;
    f.d1 = s.d1;
    f.d2 = s.d2;

    const Integer& l = s.row_sums.front();
    f.is_DA = all_equal(s.row_sums, l) && all_equal(s.col_sums, l);
    if (f.is_DA) f.linesum = l;
    f.is_DDA = f.is_DA && s.d1 == l && s.d2 == l;

    f.is_latin = check_latin(a, f.is_classic_latin);
    if (f.is_latin) {
        std::vector<Integer> diag, anti;
        for (std::size_t i = 0; i < n; ++i) {
            diag.push_back(a(i, i));
            anti.push_back(a(i, n - 1 - i));
        }
        f.is_diagonal_latin = all_distinct(diag) && all_distinct(anti);
    }

    if (f.is_DDA) {
        std::vector<Integer> e(a.entries().begin(), a.entries().end());
        std::sort(e.begin(), e.end());
        bool seq = true;
        for (std::size_t k = 0; k < e.size() && seq; ++k) seq = e[k] == static_cast<unsigned long>(k + 1);
        f.is_classic_magic = seq;
    }

    const Integer pair = a(0, 0) + a(n - 1, n - 1);
    f.is_associative = true;
    for (std::size_t i = 0; i < n && f.is_associative; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) + a(n - 1 - i, n - 1 - j) != pair) {
                f.is_associative = false;
                break;
            }
    if (f.is_associative) f.associative_constant = pair;

    if (f.is_DA) {
        f.is_pandiagonal = all_equal(s.broken_diag_sums[0], l) && all_equal(s.broken_diag_sums[1], l);
        if (n % 4 == 0)
            f.franklin_bent = std::all_of(s.bent_sums.begin(), s.bent_sums.end(),
                                          [&](const std::vector<Integer>& fam) { return all_equal(fam, l); });
        Integer quartet = 4 * l;
        if (mpz_divisible_ui_p(quartet.get_mpz_t(), n)) {
            quartet /= static_cast<unsigned long>(n);
            f.franklin_quartet = true;
            for (std::size_t i = 0; i < n && f.franklin_quartet; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const std::size_t i1 = (i + 1) % n, j1 = (j + 1) % n;
                    if (a(i, j) + a(i, j1) + a(i1, j) + a(i1, j1) != quartet) {
                        f.franklin_quartet = false;
                        break;
                    }
                }
        }
    }
    f.is_ultramagic = f.is_associative && f.is_pandiagonal && f.is_DDA;

    if (n % 2 == 0) {
        const Integer& h = s.half_row_sums.front();
        f.franklin_half_sums = all_equal(s.half_row_sums, h) && all_equal(s.half_col_sums, h);
    }

    if (is_constant(a)) {
        f.type_label = TypeLabel::constant;
    } else if (f.is_DDA) {
        f.type_label = TypeLabel::DDA;
    } else if (f.is_DA) {
        f.type_label = TypeLabel::DA;
    }
    return f;
}

IntSquare apply_symmetry(const IntSquare& a, int phase) {
    if (phase < 0 || phase > 7) throw precondition_error("symmetry phase must be in 0..7");
    IntSquare s = phase >= 4 ? a.transposed() : a;
    for (int k = 0; k < phase % 4; ++k) s = rotate_clockwise(s);
    return s;
}

std::pair<IntSquare, int> frenicle_canonical(const IntSquare& a) {
    if (a.order() != 4) throw precondition_error("Frenicle form is defined for order 4 only");
    const Integer corners[] = {a(0, 0), a(0, 3), a(3, 0), a(3, 3)};
    const Integer least = *std::min_element(std::begin(corners), std::end(corners));
    if (std::count(std::begin(corners), std::end(corners), least) != 1)
        throw precondition_error("Frenicle form undefined: smallest corner value is repeated");
    for (int phase = 0; phase < 8; ++phase) {
        IntSquare s = apply_symmetry(a, phase);
        if (s(0, 0) != least) continue;
        if (s(0, 1) == s(1, 0)) throw precondition_error("Frenicle form undefined: a[0][1] == a[1][0]");
        if (s(0, 1) < s(1, 0)) return {std::move(s), phase};
    }
    throw precondition_error("Frenicle form not found");
}

} // namespace magpow
