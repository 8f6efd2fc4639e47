#include "magpow/report.hpp"

#include "magpow/exact_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace magpow {

using nlohmann::ordered_json;

namespace {

ordered_json exact(const Integer& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

double round_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
}

template <typename T, typename F>
ordered_json optional_json(const std::optional<T>& v, F&& f) {
    return v ? ordered_json(f(*v)) : ordered_json(nullptr);
}

ordered_json rational_json(const Rational& q) {
    ordered_json j;
    j["exact"] = q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
    j["value"] = round_sig6(q.get_d());
    return j;
}

ordered_json poly_json(const CharPoly& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(exact(c));
    return {{"coefficients", coeffs}, {"text", p.to_string()}};
}

ordered_json square_json(const IntSquare& a) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < a.order(); ++i) {
        ordered_json row = ordered_json::array();
        for (const auto& v : a.row(i)) row.push_back(exact(v));
        rows.push_back(row);
    }
    return {{"order", a.order()}, {"rows", rows}};
}

ordered_json flags_json(const ClassificationFlags& f) {
    ordered_json j;
    j["is_DA"] = f.is_DA;
    j["is_DDA"] = f.is_DDA;
    j["is_latin"] = f.is_latin;
    j["is_diagonal_latin"] = f.is_diagonal_latin;
    j["is_classic_magic"] = f.is_classic_magic;
    j["is_classic_latin"] = f.is_classic_latin;
    j["is_associative"] = f.is_associative;
    j["is_pandiagonal"] = f.is_pandiagonal;
    j["is_ultramagic"] = f.is_ultramagic;
    j["franklin_half_sums"] = f.franklin_half_sums;
    j["franklin_bent"] = f.franklin_bent;
    j["franklin_quartet"] = f.franklin_quartet;
    j["linesum"] = optional_json(f.linesum, exact);
    j["type_label"] = to_string(f.type_label);
    j["d1"] = exact(f.d1);
    j["d2"] = exact(f.d2);
    return j;
}

std::string join_sv(const std::vector<double>& sv) {
    std::string s;
    for (std::size_t i = 0; i < sv.size(); ++i) s += (i ? ", " : "") + format_sig6(sv[i]);
    return s;
}

// Quadratic leftovers (loshu's odd powers) are written in closed form.
std::string residual_text(const CharPoly& r) {
    if (r.degree() != 2) return "roots of " + r.to_string();
    const Integer b = r[1], c = r[0];
    const Integer disc = b * b - 4 * c;
    if (b == 0) return "±sqrt(" + Integer(-c).get_str() + ")";
    return "(" + Integer(-b).get_str() + " ± sqrt(" + disc.get_str() + "))/2";
}

} // namespace

std::string format_eigenvalues(const IntegerRootSplit& split) {
    std::string s;
    for (std::size_t i = 0; i < split.roots.size(); ++i) s += (i ? ", " : "") + split.roots[i].get_str();
    if (split.residual.degree() > 0) s += (s.empty() ? "" : ", ") + residual_text(split.residual);
    return s;
}

namespace {

IntegerRootSplit eigen_split(const IntSquare& a, const CharPoly& p) {
    return split_integer_roots(p, numeric_eigenvalues(a));
}

std::string flag_list(const ClassificationFlags& f) {
    std::vector<std::pair<const char*, bool>> items = {
        {"DA", f.is_DA},
        {"DDA", f.is_DDA},
        {"Latin", f.is_latin},
        {"diagonal Latin", f.is_diagonal_latin},
        {"classic magic", f.is_classic_magic},
        {"classic Latin", f.is_classic_latin},
        {"associative", f.is_associative},
        {"pandiagonal", f.is_pandiagonal},
        {"ultramagic", f.is_ultramagic},
        {"Franklin half sums", f.franklin_half_sums},
        {"Franklin bent diagonals", f.franklin_bent},
        {"Franklin quartets", f.franklin_quartet},
    };
    std::string s;
    for (const auto& [name, on] : items) s += std::string("- ") + name + ": " + (on ? "yes" : "no") + "\n";
    return s;
}

} // namespace

Report make_report(std::string subject, std::string provenance, const IntSquare& a,
                   std::optional<unsigned> trajectory_max_p) {
    Report r{std::move(subject), std::move(provenance), a, classify(a), summarize(a), {{}, CharPoly({Integer(1)})}, {}, {}};
    r.eigenvalues = eigen_split(a, r.spectra.char_poly);
    r.jordan = zero_jordan_profile(a);
    if (trajectory_max_p) r.trajectory = trajectory(a, *trajectory_max_p);
    return r;
}

ordered_json to_json(const PowerTrajectory& t) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : t.steps) {
        ordered_json j;
        j["p"] = s.p;
        j["rank"] = s.rank;
        j["type_label"] = to_string(s.type_label);
        j["d1"] = exact(s.d1);
        j["d2"] = exact(s.d2);
        j["linesum"] = optional_json(s.linesum, exact);
        j["compression_pct"] = optional_json(s.compression_pct, round_sig6);
        j["spread"] = optional_json(s.spread, rational_json);
        j["r_index"] = optional_json(s.r_index, exact);
        j["constant_value"] = optional_json(s.constant_value, exact);
        steps.push_back(j);
    }
    return steps;
}

ordered_json to_json(const Report& r) {
    ordered_json j;
    j["subject"] = {{"name", r.subject}, {"provenance", r.provenance}, {"square", square_json(r.square)}};
    j["classification"] = flags_json(r.classification);

    const auto& s = r.spectra;
    ordered_json sp;
    sp["rank"] = s.rank;
    sp["mu"] = s.mu;
    sp["one_ev"] = s.one_ev;
    sp["linesum"] = optional_json(s.linesum, exact);
    sp["char_poly"] = poly_json(s.char_poly);
    ordered_json roots = ordered_json::array();
    for (const auto& v : r.eigenvalues.roots) roots.push_back(exact(v));
    sp["integer_eigenvalues"] = roots;
    sp["eigen_residual_factor"] = poly_json(r.eigenvalues.residual);
    sp["gramian_char_poly"] = poly_json(s.gramian_char_poly);
    ordered_json sv = ordered_json::array();
    for (double v : s.singular_values) sv.push_back(round_sig6(v));
    sp["singular_values"] = sv;
    sp["r_index"] = optional_json(s.r_index, exact);
    sp["compression_pct"] = optional_json(s.compression_pct, round_sig6);
    sp["spread"] = optional_json(s.spread, rational_json);
    j["spectra"] = sp;

    j["jordan"] = {{"block_sizes", r.jordan.block_sizes}, {"max_block", r.jordan.max_block}};
    j["trajectory"] = r.trajectory ? to_json(*r.trajectory) : ordered_json(nullptr);
    return j;
}

std::string report_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string format_sig6(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_pct4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

std::string format_grouped(const Integer& v) {
    std::string digits = Integer(abs(v)).get_str();
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
        out += digits[i];
    }
    return sgn(v) < 0 ? "-" + out : out;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    Integer den = q.get_den();
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) return q.get_str() + " (" + format_sig6(q.get_d()) + ")";

    const unsigned places = std::max(twos, fives);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    Integer scaled = q.get_num() * scale / q.get_den();
    const bool neg = sgn(scaled) < 0;
    std::string digits = Integer(abs(scaled)).get_str();
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return neg ? "-" + digits : digits;
}

std::string type_column(const PowerStepRecord& step, const ClassificationFlags& base_flags) {
    std::string s;
    if (step.constant_value) {
        return "constant: " + step.constant_value->get_str() + " E" + std::to_string(step.singular_values.size());
    }
    if (step.p == 1 && base_flags.is_classic_magic) s = "magic";
    else if (step.p == 1 && base_flags.is_diagonal_latin) s = "diagonal Latin";
    else if (step.p == 1 && base_flags.is_latin) s = "Latin";
    else s = to_string(step.type_label);
    if (step.type_label == TypeLabel::DA) s += " d1=" + step.d1.get_str() + ", d2=" + step.d2.get_str();
    if (step.is_associative) s += " (associative)";
    return s;
}

std::string render_trajectory_table(const PowerTrajectory& t) {
    const auto base_flags = classify(t.base);
    std::ostringstream os;
    os << "| p | r | C% | Spread | Type | R |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& s : t.steps) {
        const std::string type = type_column(s, base_flags);
        os << "| " << s.p << " | " << s.rank << " | " << (s.compression_pct ? format_pct4(*s.compression_pct) : "-")
           << " | " << (s.spread ? format_rational(*s.spread) : "-") << " | " << type << " | "
           << (s.r_index ? format_grouped(*s.r_index) : "-") << " |\n";
    }
    if (t.truncated_at) os << "\nNo constant power up to p = " << *t.truncated_at << ".\n";
    return os.str();
}

std::string render_spectral_table(const PowerTrajectory& t) {
    std::ostringstream os;
    os << "| p | CharPoly | eigenvalues | singular values | r | R |\n";
    os << "|---|---|---|---|---|---|\n";
    IntSquare power = t.base;
    for (const auto& s : t.steps) {
        if (s.p > 1) power = mat_mul(power, t.base);
        const auto cp = char_poly(power);
        os << "| " << s.p << " | " << cp.to_string() << " | " << format_eigenvalues(eigen_split(power, cp)) << " | "
           << join_sv(s.singular_values) << " | " << s.rank << " | " << (s.r_index ? format_grouped(*s.r_index) : "-")
           << " |\n";
    }
    return os.str();
}

std::string render_power_report(const std::string& name, const PowerTrajectory& t) {
    std::string out = "# Powers of " + name + "\n\n" + render_spectral_table(t) + "\n" + render_trajectory_table(t);
    if (t.steps.size() >= 2) out += "\nAlternation verdict: " + cbh_alternation_check(t).to_string() + "\n";
    return out;
}

std::string render_markdown(const Report& r) {
    std::ostringstream os;
    const auto& s = r.spectra;
    os << "# " << r.subject << "\n\n";
    if (!r.provenance.empty()) os << r.provenance << "\n\n";
    os << "Order " << r.square.order() << ":\n\n```\n" << format_square(r.square) << "```\n\n";
    os << "## Classification\n\n" << flag_list(r.classification);
    os << "- linesum: " << (r.classification.linesum ? r.classification.linesum->get_str() : "-") << "\n";
    os << "- d1 = " << r.classification.d1.get_str() << ", d2 = " << r.classification.d2.get_str() << "\n";
    os << "- type: " << to_string(r.classification.type_label) << "\n\n";
    os << "## Spectrum\n\n";
    os << "- CharPoly: " << s.char_poly.to_string() << "\n";
    os << "- eigenvalues: " << format_eigenvalues(r.eigenvalues) << "\n";
    os << "- singular values: " << join_sv(s.singular_values) << "\n";
    os << "- Gramian CharPoly (roots are squared singular values): " << s.gramian_char_poly.to_string() << "\n";
    os << "- rank r = " << s.rank << ", mu = " << s.mu << ", 1EV: " << (s.one_ev ? "yes" : "no") << "\n";
    os << "- R = " << (s.r_index ? format_grouped(*s.r_index) : "-") << "\n";
    os << "- C% = " << (s.compression_pct ? format_pct4(*s.compression_pct) : "-") << "\n";
    os << "- Spread = " << (s.spread ? format_rational(*s.spread) : "-") << "\n\n";
    os << "## Jordan blocks for eigenvalue 0\n\n";
    os << "- block sizes: ";
    if (r.jordan.block_sizes.empty()) os << "none";
    for (std::size_t i = 0; i < r.jordan.block_sizes.size(); ++i) os << (i ? ", " : "") << r.jordan.block_sizes[i];
    os << "\n- largest block: " << r.jordan.max_block << "\n- rank(A^p), p = 0..: ";
    for (std::size_t i = 0; i < r.jordan.zero_rank_sequence.size(); ++i)
        os << (i ? ", " : "") << r.jordan.zero_rank_sequence[i];
    os << "\n";
    if (r.trajectory) {
        os << "\n## Powers\n\n" << render_spectral_table(*r.trajectory) << "\n" << render_trajectory_table(*r.trajectory);
        if (r.trajectory->steps.size() >= 2 || r.trajectory->constancy_onset)
            os << "\nAlternation verdict: " << cbh_alternation_check(*r.trajectory).to_string() << "\n";
    }
    return os.str();
}

std::string gerschgorin_svg(const IntSquare& a, DiskAxis axis) {
    const auto disks = gerschgorin_disks(a, axis);
    const auto cp = char_poly(a);
    const auto numeric = numeric_eigenvalues(a);
    const auto exact_roots = split_integer_roots(cp, numeric);

    double lo = std::numeric_limits<double>::max(), hi = std::numeric_limits<double>::lowest(), rmax = 0.0;
    for (const auto& d : disks) {
        lo = std::min(lo, Integer(d.center - d.radius).get_d());
        hi = std::max(hi, Integer(d.center + d.radius).get_d());
        rmax = std::max(rmax, d.radius.get_d());
    }
    for (const auto& z : numeric) {
        lo = std::min(lo, z.real());
        hi = std::max(hi, z.real());
        rmax = std::max(rmax, std::fabs(z.imag()));
    }
    const double span = std::max(hi - lo, 1.0);
    const double width = 640, pad = 30;
    const double scale = (width - 2 * pad) / span;
    const double height = std::max(2 * rmax * scale + 2 * pad, 120.0);
    const double cy = height / 2;
    auto x_of = [&](double v) { return pad + (v - lo) * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <title>Gerschgorin disks (" << (axis == DiskAxis::row ? "row" : "column") << ")</title>\n";
    os << "  <line x1=\"0\" y1=\"" << cy << "\" x2=\"" << width << "\" y2=\"" << cy << "\" stroke=\"#888\"/>\n";
    for (const auto& d : disks) {
        os << "  <circle cx=\"" << x_of(d.center.get_d()) << "\" cy=\"" << cy << "\" r=\"" << d.radius.get_d() * scale
           << "\" fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"#1f5fa8\"/>\n";
        os << "  <text x=\"" << x_of(d.center.get_d()) << "\" y=\"" << cy + 14
           << "\" font-size=\"10\" text-anchor=\"middle\">" << d.center.get_str() << "</text>\n";
    }
    for (const auto& z : numeric)
        os << "  <circle cx=\"" << x_of(z.real()) << "\" cy=\"" << cy - z.imag() * scale
           << "\" r=\"3\" fill=\"none\" stroke=\"#c0392b\"/>\n";
    for (const auto& root : exact_roots.roots)
        os << "  <circle cx=\"" << x_of(root.get_d()) << "\" cy=\"" << cy << "\" r=\"4\" fill=\"#c0392b\"><title>"
           << root.get_str() << "</title></circle>\n";
    os << "</svg>\n";
    return os.str();
}

std::string curves_svg(const PowerTrajectory& t, const std::string& title) {
    const double width = 640, height = 360, pad = 50;
    const std::size_t steps = t.steps.size();
    double smax = 0.0;
    for (const auto& s : t.steps)
        if (s.spread) smax = std::max(smax, s.spread->get_d());
    if (smax <= 0.0) smax = 1.0;
    auto x_of = [&](unsigned p) {
        return steps <= 1 ? width / 2 : pad + (p - 1) * (width - 2 * pad) / static_cast<double>(steps - 1);
    };
    auto y_pct = [&](double c) { return height - pad - c / 100.0 * (height - 2 * pad); };
    auto y_spread = [&](double v) { return height - pad - v / smax * (height - 2 * pad); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <title>" << title << ": C% and Spread vs p</title>\n";
    os << "  <line x1=\"" << pad << "\" y1=\"" << height - pad << "\" x2=\"" << width - pad << "\" y2=\"" << height - pad
       << "\" stroke=\"#000\"/>\n";
    os << "  <line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << height - pad
       << "\" stroke=\"#000\"/>\n";
    os << "  <text x=\"" << pad << "\" y=\"" << pad - 10 << "\" font-size=\"12\">C% (0-100, blue); Spread (0-"
       << format_sig6(smax) << ", orange)</text>\n";
    std::string pct_pts, spread_pts;
    for (const auto& s : t.steps) {
        const double x = x_of(s.p);
        os << "  <text x=\"" << x << "\" y=\"" << height - pad + 16 << "\" font-size=\"11\" text-anchor=\"middle\">"
           << s.p << "</text>\n";
        if (s.compression_pct) {
            pct_pts += std::to_string(x) + "," + std::to_string(y_pct(*s.compression_pct)) + " ";
            os << "  <circle cx=\"" << x << "\" cy=\"" << y_pct(*s.compression_pct) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
        }
        if (s.spread) {
            spread_pts += std::to_string(x) + "," + std::to_string(y_spread(s.spread->get_d())) + " ";
            os << "  <circle cx=\"" << x << "\" cy=\"" << y_spread(s.spread->get_d())
               << "\" r=\"3\" fill=\"#ff7f0e\"/>\n";
        }
    }
    os << "  <polyline points=\"" << pct_pts << "\" fill=\"none\" stroke=\"#1f77b4\"/>\n";
    os << "  <polyline points=\"" << spread_pts << "\" fill=\"none\" stroke=\"#ff7f0e\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace magpow
