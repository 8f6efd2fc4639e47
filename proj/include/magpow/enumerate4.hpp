#ifndef MAGPOW_ENUMERATE4_HPP
#define MAGPOW_ENUMERATE4_HPP

#include "magpow/exact_core.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace magpow {

struct CensusMember {
    int index = 0; // Frenicle index, 1-based
    IntSquare square{4};
    bool associative = false;
    bool pandiagonal = false;
    std::size_t mu = 0;
    bool one_ev = false;
    Integer r_index;
    CharPoly gramian_char_poly{{Integer(1)}};
    int clan_id = 0;
};

// Squares sharing one exact Gramian characteristic polynomial.
struct Clan {
    int id = 0; // 1-based, in order of first member index
    CharPoly key{{Integer(1)}};
    Integer r_index;
    std::vector<int> members;
};

class Census {
public:
    Census(std::vector<IntSquare> canonical, std::size_t raw_solutions);

    const std::vector<CensusMember>& members() const noexcept { return members_; }
    const CensusMember& member(int index) const { return members_.at(static_cast<std::size_t>(index - 1)); }
    const std::vector<Clan>& clans() const noexcept { return clans_; }
    const Clan& clan(int id) const { return clans_.at(static_cast<std::size_t>(id - 1)); }
    std::size_t raw_solution_count() const noexcept { return raw_; }

    // Index of a square already in Frenicle form.
    std::optional<int> index_of(const IntSquare& canonical) const;

private:
    std::vector<CensusMember> members_;
    std::vector<Clan> clans_;
    std::map<IntSquare, int> index_;
    std::size_t raw_;
};

// Backtracking over 1..16 with forced cells and sum-34 pruning. The search
// is sharded on the top-left value over `workers` threads (0 = hardware
// concurrency); the result order does not depend on it.
Census enumerate_classic_magic4(unsigned workers = 0);

// Frenicle index (1..880) of any of the eight phases of a classic order-4
// magic square. Throws input_error otherwise.
int frenicle_index(const Census& census, const IntSquare& a);

struct OneEvRecord {
    int index = 0;
    Integer r_index;
    int clan_id = 0;
    std::string clan_label;
};

std::vector<OneEvRecord> onev_census(const Census& census, bool associative_only);

// Partition of a subset of indices by Gramian characteristic polynomial,
// keyed by clan id.
std::map<int, std::vector<int>> clan_partition(const Census& census, const std::vector<int>& subset);

// "alpha", "beta", "gamma" for the three clans of associative squares
// (descending R-index), "clan-<id>" otherwise.
std::string clan_label(const Census& census, int clan_id);

struct CalibrationAnchor {
    std::string name;
    int printed_index = 0;
    int found_index = 0;
};

struct CalibrationReport {
    bool ok = false;
    std::vector<CalibrationAnchor> anchors;
};

// Checks that the printed anchor squares land on their printed indices.
CalibrationReport calibrate(const Census& census);

// Resolves "f<k>" through the census (after calibration).
std::optional<IntSquare> census_square(const Census& census, std::string_view name);

// index, 16 entries, associative, pandiagonal, mu, 1EV, R, clan id.
std::string census_csv(const Census& census);

} // namespace magpow

#endif
