#include "magpow/powering.hpp"

#include "magpow/errors.hpp"
#include "magpow/exact_core.hpp"
#include "magpow/spectra.hpp"

namespace magpow {

namespace {

PowerStepRecord record_step(const IntSquare& m, unsigned p) {
    const auto flags = classify(m);
    const auto sum = summarize(m);
    PowerStepRecord r;
    r.p = p;
    r.rank = sum.rank;
    r.type_label = flags.type_label;
    r.is_associative = flags.is_associative;
    r.d1 = flags.d1;
    r.d2 = flags.d2;
    r.linesum = flags.linesum;
    r.compression_pct = sum.compression_pct;
    r.spread = sum.spread;
    r.r_index = sum.r_index;
    r.constant_value = is_constant(m);
    r.singular_values = sum.singular_values;
    return r;
}

} // namespace

PowerTrajectory trajectory(const IntSquare& a, unsigned max_p) {
    if (max_p == 0) throw precondition_error("max_p must be >= 1");
    PowerTrajectory t{a, {}, std::nullopt, std::nullopt};
    IntSquare power = a;
    for (unsigned p = 1; p <= max_p; ++p) {
        if (p > 1) power = mat_mul(power, a);
        t.steps.push_back(record_step(power, p));
        if (t.steps.back().constant_value) {
            t.constancy_onset = p;
            return t;
        }
    }
    t.truncated_at = max_p;
    return t;
}

std::optional<unsigned> constancy_onset(const IntSquare& a, unsigned max_p) {
    if (max_p == 0) throw precondition_error("max_p must be >= 1");
    IntSquare power = a;
    for (unsigned p = 1; p <= max_p; ++p) {
        if (p > 1) power = mat_mul(power, a);
        if (is_constant(power)) return p;
    }
    return std::nullopt;
}

std::string AlternationVerdict::to_string() const {
    switch (kind) {
    case AlternationKind::alternates: return "alternates";
    case AlternationKind::all_dda: return "all-DDA";
    case AlternationKind::constant_at:
        return "constant-at(" + std::to_string(*constant_at) + ")" + (dda_before_constant ? " after DDA steps" : "");
    case AlternationKind::other: return "other";
    }
    return "other";
}

AlternationVerdict cbh_alternation_check(const PowerTrajectory& t) {
    if (t.steps.size() < 2 && !t.constancy_onset) throw precondition_error("alternation check needs at least two steps");
    AlternationVerdict v;
    if (t.constancy_onset) {
        v.kind = AlternationKind::constant_at;
        v.constant_at = t.constancy_onset;
        v.dda_before_constant = true;
        for (const auto& s : t.steps)
            if (s.p < *t.constancy_onset && s.type_label != TypeLabel::DDA) v.dda_before_constant = false;
        return v;
    }
    bool all_dda = true, alternates = true;
    for (const auto& s : t.steps) {
        if (s.type_label != TypeLabel::DDA) all_dda = false;
        const TypeLabel want = s.p % 2 ? TypeLabel::DDA : TypeLabel::DA;
        if (s.type_label != want) alternates = false;
    }
    v.kind = all_dda ? AlternationKind::all_dda : alternates ? AlternationKind::alternates : AlternationKind::other;
    return v;
}

} // namespace magpow
