#include "magpow/enumerate4.hpp"

#include "magpow/classify.hpp"
#include "magpow/constructors.hpp"
#include "magpow/errors.hpp"
#include "magpow/spectra.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <future>
#include <sstream>
#include <thread>

namespace magpow {

namespace {

constexpr int kMagic = 34;
using Cells = std::array<int, 16>;

enum class Line { free, d1, d2, r0, r1, r2, c0, c1, c2 };

struct Step {
    int row, col;
    Line forced;
};

// Diagonals first, then cells whose line becomes complete as soon as
// possible; eight free choices, eight forced cells.
constexpr std::array<Step, 16> kOrder{{
    {0, 0, Line::free}, {1, 1, Line::free}, {2, 2, Line::free}, {3, 3, Line::d1},
    {0, 3, Line::free}, {1, 2, Line::free}, {2, 1, Line::free}, {3, 0, Line::d2},
    {0, 1, Line::free}, {0, 2, Line::r0},   {1, 0, Line::free}, {2, 0, Line::c0},
    {1, 3, Line::r1},   {2, 3, Line::r2},   {3, 1, Line::c1},   {3, 2, Line::c2},
}};

int at(const Cells& c, int i, int j) { return c[static_cast<std::size_t>(i * 4 + j)]; }

int forced_value(const Cells& c, Line line) {
    switch (line) {
    case Line::d1: return kMagic - at(c, 0, 0) - at(c, 1, 1) - at(c, 2, 2);
    case Line::d2: return kMagic - at(c, 0, 3) - at(c, 1, 2) - at(c, 2, 1);
    case Line::r0: return kMagic - at(c, 0, 0) - at(c, 0, 1) - at(c, 0, 3);
    case Line::r1: return kMagic - at(c, 1, 0) - at(c, 1, 1) - at(c, 1, 2);
    case Line::r2: return kMagic - at(c, 2, 0) - at(c, 2, 1) - at(c, 2, 2);
    case Line::c0: return kMagic - at(c, 0, 0) - at(c, 1, 0) - at(c, 3, 0);
    case Line::c1: return kMagic - at(c, 0, 1) - at(c, 1, 1) - at(c, 2, 1);
    case Line::c2: return kMagic - at(c, 0, 2) - at(c, 1, 2) - at(c, 2, 2);
    case Line::free: break;
    }
    return 0;
}

struct Search {
    Cells cells{};
    unsigned used = 0;
    std::vector<Cells> found;

    void place(std::size_t k, int v) {
        const auto& s = kOrder[k];
        cells[static_cast<std::size_t>(s.row * 4 + s.col)] = v;
        used ^= 1u << v;
        run(k + 1);
        used ^= 1u << v;
    }

    void run(std::size_t k) {
        if (k == kOrder.size()) {
            if (at(cells, 3, 0) + at(cells, 3, 1) + at(cells, 3, 2) + at(cells, 3, 3) == kMagic &&
                at(cells, 0, 3) + at(cells, 1, 3) + at(cells, 2, 3) + at(cells, 3, 3) == kMagic)
                found.push_back(cells);
            return;
        }
        const auto& s = kOrder[k];
        if (s.forced == Line::free) {
            for (int v = 1; v <= 16; ++v)
                if (!(used & (1u << v))) place(k, v);
        } else {
            const int v = forced_value(cells, s.forced);
            if (v >= 1 && v <= 16 && !(used & (1u << v))) place(k, v);
        }
    }
};

std::vector<Cells> search_shard(const std::vector<int>& first_values) {
    Search s;
    for (int v : first_values) s.place(0, v);
    return std::move(s.found);
}

IntSquare to_square(const Cells& c) {
    std::vector<Integer> e;
    e.reserve(16);
    for (int v : c) e.emplace_back(v);
    return IntSquare(4, std::move(e));
}

} // namespace

Census::Census(std::vector<IntSquare> canonical, std::size_t raw_solutions) : raw_(raw_solutions) {
    std::sort(canonical.begin(), canonical.end());
    std::map<CharPoly, int> clan_of;
    members_.reserve(canonical.size());
    for (std::size_t k = 0; k < canonical.size(); ++k) {
        CensusMember m;
        m.index = static_cast<int>(k + 1);
        m.square = std::move(canonical[k]);
        const auto flags = classify(m.square);
        m.associative = flags.is_associative;
        m.pandiagonal = flags.is_pandiagonal;
        const auto cp = char_poly(m.square);
        m.mu = zero_multiplicity(cp);
        m.one_ev = is_1ev(m.square);
        m.r_index = r_index(m.square);
        m.gramian_char_poly = sv_squared_charpoly(m.square);
        auto [it, inserted] = clan_of.emplace(m.gramian_char_poly, static_cast<int>(clans_.size() + 1));
        if (inserted) clans_.push_back({it->second, m.gramian_char_poly, m.r_index, {}});
        m.clan_id = it->second;
        clans_[static_cast<std::size_t>(m.clan_id - 1)].members.push_back(m.index);
        index_.emplace(m.square, m.index);
        members_.push_back(std::move(m));
    }
}

std::optional<int> Census::index_of(const IntSquare& canonical) const {
    auto it = index_.find(canonical);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Census enumerate_classic_magic4(unsigned workers) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, 16u);
    std::vector<std::vector<int>> shards(workers);
    for (int v = 1; v <= 16; ++v) shards[static_cast<std::size_t>(v - 1) % workers].push_back(v);

    std::vector<std::future<std::vector<Cells>>> jobs;
    for (auto& s : shards) jobs.push_back(std::async(std::launch::async, search_shard, s));
    std::vector<Cells> raw;
    for (auto& j : jobs) {
        auto part = j.get();
        raw.insert(raw.end(), part.begin(), part.end());
    }

    std::vector<IntSquare> canonical;
    canonical.reserve(raw.size() / 8);
    for (const auto& c : raw) {
        auto [form, phase] = frenicle_canonical(to_square(c));
        if (phase == 0) canonical.push_back(std::move(form));
    }
    return Census(std::move(canonical), raw.size());
}

int frenicle_index(const Census& census, const IntSquare& a) {
    if (a.order() != 4 || !classify(a).is_classic_magic)
        throw input_error("Frenicle index needs a classic order-4 magic square");
    const auto idx = census.index_of(frenicle_canonical(a).first);
    if (!idx) throw input_error("square missing from census");
    return *idx;
}

std::string clan_label(const Census& census, int clan_id) {
    std::vector<const Clan*> assoc;
    for (const auto& c : census.clans())
        if (std::any_of(c.members.begin(), c.members.end(), [&](int i) { return census.member(i).associative; }))
            assoc.push_back(&c);
    std::sort(assoc.begin(), assoc.end(), [](const Clan* a, const Clan* b) { return a->r_index > b->r_index; });
    static const char* greek[] = {"alpha", "beta", "gamma"};
    for (std::size_t k = 0; k < assoc.size() && k < 3; ++k)
        if (assoc[k]->id == clan_id) return greek[k];
    return "clan-" + std::to_string(clan_id);
}

std::vector<OneEvRecord> onev_census(const Census& census, bool associative_only) {
    std::vector<OneEvRecord> out;
    for (const auto& m : census.members()) {
        if (!m.one_ev || (associative_only && !m.associative)) continue;
        out.push_back({m.index, m.r_index, m.clan_id, clan_label(census, m.clan_id)});
    }
    return out;
}

std::map<int, std::vector<int>> clan_partition(const Census& census, const std::vector<int>& subset) {
    std::map<int, std::vector<int>> parts;
    for (int i : subset) parts[census.member(i).clan_id].push_back(i);
    return parts;
}

CalibrationReport calibrate(const Census& census) {
    static const std::pair<const char*, int> anchors[] = {{"f360", 360}, {"f299", 299}, {"f175", 175}, {"f181", 181}};
    CalibrationReport rep;
    rep.ok = true;
    for (const auto& [name, printed] : anchors) {
        const int found = frenicle_index(census, catalog(name));
        rep.anchors.push_back({name, printed, found});
        if (found != printed) rep.ok = false;
    }
    return rep;
}

std::optional<IntSquare> census_square(const Census& census, std::string_view name) {
    if (name.size() < 2 || name.front() != 'f') return std::nullopt;
    int k = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec != std::errc{} || ptr != name.data() + name.size()) return std::nullopt;
    if (k < 1 || k > static_cast<int>(census.members().size())) return std::nullopt;
    return census.member(k).square;
}

std::string census_csv(const Census& census) {
    std::ostringstream os;
    os << "index";
    for (int k = 0; k < 16; ++k) os << ",a" << k / 4 << k % 4;
    os << ",associative,pandiagonal,mu,one_ev,R,clan\n";
    for (const auto& m : census.members()) {
        os << m.index;
        for (const auto& v : m.square.entries()) os << ',' << v.get_str();
        os << ',' << m.associative << ',' << m.pandiagonal << ',' << m.mu << ',' << m.one_ev << ','
           << m.r_index.get_str() << ',' << m.clan_id << '\n';
    }
    return os.str();
}

} // namespace magpow
