#ifndef MAGPOW_REPORT_HPP
#define MAGPOW_REPORT_HPP

#include "magpow/classify.hpp"
#include "magpow/powering.hpp"
#include "magpow/spectra.hpp"
#include "magpow/structure.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace magpow {

struct Report {
    std::string subject;
    std::string provenance;
    IntSquare square;
    ClassificationFlags classification;
    SpectralSummary spectra;
    IntegerRootSplit eigenvalues;
    JordanZeroProfile jordan;
    std::optional<PowerTrajectory> trajectory;
};

Report make_report(std::string subject, std::string provenance, const IntSquare& a,
                   std::optional<unsigned> trajectory_max_p);

// Exact integers become JSON integers when they fit in 64 bits and
// decimal strings otherwise; floats carry 6 significant digits.
nlohmann::ordered_json to_json(const Report& r);
nlohmann::ordered_json to_json(const PowerTrajectory& t);
std::string report_json(const Report& r);

std::string render_markdown(const Report& r);

// p, CharPoly, eigenvalues, singular values, r, R for p = 1..onset/max_p.
std::string render_spectral_table(const PowerTrajectory& t);
// p, r, C%, Spread, Type, R.
std::string render_trajectory_table(const PowerTrajectory& t);

// Both tables under a heading, plus the alternation verdict.
std::string render_power_report(const std::string& name, const PowerTrajectory& t);

// Type column text for one step ("magic", "DA d1=120, d2=80", "constant: 250 E4", ...).
std::string type_column(const PowerStepRecord& step, const ClassificationFlags& base_flags);

// Terminating decimals as decimals, otherwise "p/q (x.xxxxx)".
std::string format_rational(const Rational& q);
std::string format_sig6(double v);
// Integer roots, then any leftover factor ("15, ±sqrt(-24)").
std::string format_eigenvalues(const IntegerRootSplit& split);
// Fixed 4 decimals with trailing zeros trimmed ("35.0603", "97.872", "100").
std::string format_pct4(double v);
// Integer with thousands separators ("102,800").
std::string format_grouped(const Integer& v);

std::string gerschgorin_svg(const IntSquare& a, DiskAxis axis);
std::string curves_svg(const PowerTrajectory& t, const std::string& title);

} // namespace magpow

#endif
