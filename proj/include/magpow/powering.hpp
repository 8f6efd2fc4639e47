#ifndef MAGPOW_POWERING_HPP
#define MAGPOW_POWERING_HPP

#include "magpow/classify.hpp"
#include "magpow/int_square.hpp"

#include <optional>
#include <string>
#include <vector>

namespace magpow {

inline constexpr unsigned kDefaultMaxPower = 12;

struct PowerStepRecord {
    unsigned p = 0;
    std::size_t rank = 0;
    TypeLabel type_label = TypeLabel::none;
    bool is_associative = false;
    Integer d1;
    Integer d2;
    std::optional<Integer> linesum;
    std::optional<double> compression_pct;
    std::optional<Rational> spread;
    std::optional<Integer> r_index;
    std::optional<Integer> constant_value;
    std::vector<double> singular_values;
};

struct PowerTrajectory {
    IntSquare base;
    std::vector<PowerStepRecord> steps;
    std::optional<unsigned> constancy_onset;
    std::optional<unsigned> truncated_at; // set when no constancy up to the cap
};

// Records for p = 1..min(max_p, onset). Later powers of a constant step
// stay constant, so the walk stops there.
PowerTrajectory trajectory(const IntSquare& a, unsigned max_p = kDefaultMaxPower);

std::optional<unsigned> constancy_onset(const IntSquare& a, unsigned max_p = kDefaultMaxPower);

// Odd-power DDA / even-power semimagic alternation claim for associative
// magic squares, judged on a computed trajectory.
enum class AlternationKind { alternates, all_dda, constant_at, other };

struct AlternationVerdict {
    AlternationKind kind = AlternationKind::other;
    std::optional<unsigned> constant_at;
    // For constant_at: every step before the constant one was DDA.
    bool dda_before_constant = false;

    std::string to_string() const;
};

AlternationVerdict cbh_alternation_check(const PowerTrajectory& t);

} // namespace magpow

#endif
