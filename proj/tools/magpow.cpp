#include "magpow/classify.hpp"
#include "magpow/constructors.hpp"
#include "magpow/enumerate4.hpp"
#include "magpow/errors.hpp"
#include "magpow/exact_core.hpp"
#include "magpow/powering.hpp"
#include "magpow/report.hpp"
#include "magpow/spectra.hpp"
#include "magpow/structure.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace magpow;

namespace {

struct Options {
    bool json = false;
    bool md = false;
    std::string svg;
    unsigned max_p = kDefaultMaxPower;
    std::string axis = "column";
    std::string kind = "magic";
    std::string census_out;
    bool find_1ev = false;
    unsigned shards = 0;
    bool list = false;
    std::vector<std::string> inputs;
};

std::unique_ptr<Census> g_census;

const Census& census(unsigned shards = 0) {
    if (!g_census) {
        g_census = std::make_unique<Census>(enumerate_classic_magic4(shards));
        const auto cal = calibrate(*g_census);
        if (!cal.ok) {
            std::cerr << "warning: Frenicle calibration failed:";
            for (const auto& a : cal.anchors)
                std::cerr << ' ' << a.name << "->" << a.found_index;
            std::cerr << "; f<k> names may not match the printed indices\n";
        }
    }
    return *g_census;
}

struct Subject {
    std::string name;
    std::string provenance;
    IntSquare square;
};

Subject resolve(const std::string& input) {
    if (std::filesystem::is_regular_file(input)) {
        std::ifstream in(input);
        std::stringstream buf;
        buf << in.rdbuf();
        return {std::filesystem::path(input).filename().string(), "file " + input, parse_square(buf.str())};
    }
    for (const auto& e : catalog_entries())
        if (e.name == input) return {e.name, e.provenance, e.square};
    if (in_catalog(input)) return {input, "generated", catalog(input)};
    if (input.size() > 1 && input[0] == 'f' && input.find_first_not_of("0123456789", 1) == std::string::npos) {
        if (auto sq = census_square(census(), input)) return {input, "Frenicle census member #" + input.substr(1), *sq};
        throw input_error("Frenicle index out of range: " + input);
    }
    throw input_error("'" + input + "' is neither a readable file nor a catalog name");
}

DiskAxis parse_axis(const std::string& s) { return s == "row" ? DiskAxis::row : DiskAxis::column; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << text;
}

int cmd_analyze(const Options& o) {
    const auto s = resolve(o.inputs.at(0));
    const auto rep = make_report(s.name, s.provenance, s.square, o.max_p);
    std::cout << (o.json ? report_json(rep) : render_markdown(rep));
    if (!o.svg.empty() && rep.trajectory) write_file(o.svg, curves_svg(*rep.trajectory, s.name));
    return 0;
}

int cmd_power(const Options& o) {
    const auto s = resolve(o.inputs.at(0));
    const auto t = trajectory(s.square, o.max_p);
    if (o.json) {
        std::cout << to_json(t).dump(2) << '\n';
    } else {
        std::cout << render_power_report(s.name, t);
    }
    if (!o.svg.empty()) write_file(o.svg, curves_svg(t, s.name));
    return 0;
}

int cmd_compound(const Options& o) {
    if (o.inputs.size() != 2) throw input_error("compound needs a pattern and a base");
    const auto pattern = resolve(o.inputs[0]);
    const auto base = resolve(o.inputs[1]);
    const auto kind = o.kind == "latin" ? CompoundKind::latin : CompoundKind::magic;
    const auto sq = compound(pattern.square, base.square, kind);
    const std::string name = "compound(" + pattern.name + ", " + base.name + ", " + o.kind + ")";
    const auto rep = make_report(name, "", sq, o.max_p);
    std::cout << (o.json ? report_json(rep) : render_markdown(rep));
    if (!o.svg.empty() && rep.trajectory) write_file(o.svg, curves_svg(*rep.trajectory, name));
    return 0;
}

int cmd_enumerate4(const Options& o) {
    const auto& c = census(o.shards);
    const auto cal = calibrate(c);
    if (!o.census_out.empty()) write_file(o.census_out, census_csv(c));

    std::size_t associative = 0;
    for (const auto& m : c.members()) associative += m.associative;
    const auto onev = onev_census(c, true);

    if (o.json) {
        nlohmann::ordered_json j;
        j["raw_solutions"] = c.raw_solution_count();
        j["canonical"] = c.members().size();
        j["associative"] = associative;
        j["clans"] = c.clans().size();
        j["calibrated"] = cal.ok;
        if (o.find_1ev) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& r : onev)
                arr.push_back({{"index", r.index}, {"R", r.r_index.get_si()}, {"clan", r.clan_label}});
            j["associative_1ev"] = arr;
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    std::cout << "raw solutions: " << c.raw_solution_count() << "\ncanonical squares: " << c.members().size()
              << "\nassociative: " << associative << "\nSV clans: " << c.clans().size() << "\ncalibration:";
    for (const auto& a : cal.anchors) std::cout << ' ' << a.name << "->" << a.found_index;
    std::cout << (cal.ok ? " (ok)" : " (MISMATCH)") << '\n';
    if (o.find_1ev) {
        std::map<std::string, std::vector<const OneEvRecord*>> by_clan;
        for (const auto& r : onev) by_clan[r.clan_label].push_back(&r);
        std::cout << "\n| clan | R | singular values squared | 1EV members |\n|---|---|---|---|\n";
        for (const auto& [label, recs] : by_clan) {
            const auto& clan = c.clan(recs.front()->clan_id);
            std::cout << "| " << label << " | " << format_grouped(clan.r_index) << " | " << clan.key.to_string()
                      << " | ";
            for (std::size_t k = 0; k < recs.size(); ++k) std::cout << (k ? ", " : "") << recs[k]->index;
            std::cout << " |\n";
        }
        std::cout << "\nassociative clans:";
        for (const auto& clan : c.clans()) {
            const auto label = clan_label(c, clan.id);
            if (label.rfind("clan-", 0) == 0) continue;
            std::size_t assoc = 0;
            for (int i : clan.members) assoc += c.member(i).associative;
            std::cout << ' ' << label << " (R " << format_grouped(clan.r_index) << ", " << assoc << " associative)";
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_products(const Options& o) {
    if (o.inputs.size() != 2) throw input_error("products needs two squares");
    const auto x = resolve(o.inputs[0]);
    const auto y = resolve(o.inputs[1]);
    const auto findings = pair_triple_study(x.square, y.square, x.name, y.name);
    if (o.json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& f : findings) {
            auto rep = to_json(make_report(f.label, "", f.product, std::nullopt));
            rep["constancy_onset"] = nullptr;
            if (auto k = constancy_onset(f.product, o.max_p)) rep["constancy_onset"] = *k;
            arr.push_back(rep);
        }
        std::cout << arr.dump(2) << '\n';
        return 0;
    }
    std::cout << "| product | CharPoly | eigenvalues | d1 | d2 | 1EV | mu | constant at |\n";
    std::cout << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& f : findings) {
        const auto cp = char_poly(f.product);
        const auto split = split_integer_roots(cp, numeric_eigenvalues(f.product));
        const std::string eig = format_eigenvalues(split);
        const auto lines = line_sums(f.product);
        const auto onset = constancy_onset(f.product, o.max_p);
        std::cout << "| " << f.label << " | " << cp.to_string() << " | " << eig << " | " << lines.d1.get_str() << " | "
                  << lines.d2.get_str() << " | " << (is_1ev(f.product) ? "yes" : "no") << " | "
                  << zero_multiplicity(cp) << " | " << (onset ? std::to_string(*onset) : "-") << " |\n";
    }
    return 0;
}

int cmd_gerschgorin(const Options& o) {
    const auto s = resolve(o.inputs.at(0));
    const auto axis = parse_axis(o.axis);
    const auto disks = gerschgorin_disks(s.square, axis);
    if (o.json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& d : disks) arr.push_back({{"center", d.center.get_si()}, {"radius", d.radius.get_si()}});
        std::cout << nlohmann::ordered_json{{"axis", o.axis}, {"disks", arr}}.dump(2) << '\n';
    } else {
        for (std::size_t k = 0; k < disks.size(); ++k)
            std::cout << (k ? "," : "") << '(' << disks[k].center.get_str() << ',' << disks[k].radius.get_str() << ')';
        std::cout << '\n';
    }
    if (!o.svg.empty()) write_file(o.svg, gerschgorin_svg(s.square, axis));
    return 0;
}

int cmd_catalog(const Options& o) {
    if (o.list || o.inputs.empty()) {
        for (const auto& e : catalog_entries()) std::cout << e.name << "\t" << e.provenance << '\n';
        std::cout << "identity<n>\tidentity square of order n\nones<n>\tall-ones square of order n\n"
                     "zero<n>\tzero square of order n\n";
        return 0;
    }
    const auto s = resolve(o.inputs[0]);
    std::cout << format_square(s.square);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectral analysis of magic and Latin squares under matrix powering"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    auto fmt = app.add_option_group("format");
    fmt->add_flag("--json", o.json, "JSON output");
    fmt->add_flag("--md", o.md, "Markdown output (default)");
    fmt->require_option(0, 1);
    app.add_option("--svg", o.svg, "write an SVG plot to this path");
    app.add_option("--max-p", o.max_p, "highest power to compute")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--axis", o.axis, "Gerschgorin axis")->check(CLI::IsMember({"row", "column"}))->capture_default_str();

    auto analyze = app.add_subcommand("analyze", "full report for one square");
    analyze->add_option("input", o.inputs, "file path, catalog name or f<k>")->required()->expected(1);
    auto power = app.add_subcommand("power", "power trajectory tables");
    power->add_option("input", o.inputs, "file path, catalog name or f<k>")->required()->expected(1);
    auto comp = app.add_subcommand("compound", "compound a base square on a pattern square");
    comp->add_option("inputs", o.inputs, "pattern and base")->required()->expected(2);
    comp->add_option("--kind", o.kind, "latin or magic")->check(CLI::IsMember({"latin", "magic"}))->capture_default_str();
    auto en = app.add_subcommand("enumerate4", "enumerate the order-4 classic magic squares");
    en->add_option("--census", o.census_out, "write the census as CSV");
    en->add_flag("--find-1ev", o.find_1ev, "list the associative 1EV squares by clan");
    en->add_option("--shards", o.shards, "worker threads (0 = hardware)");
    auto prod = app.add_subcommand("products", "pair, triple products and commutator of two squares");
    prod->add_option("inputs", o.inputs, "two squares")->required()->expected(2);
    auto ger = app.add_subcommand("gerschgorin", "Gerschgorin disks");
    ger->add_option("input", o.inputs, "file path, catalog name or f<k>")->required()->expected(1);
    auto cat = app.add_subcommand("catalog", "list or print built-in squares");
    cat->add_flag("--list", o.list, "list names and provenance");
    cat->add_option("name", o.inputs, "square to print")->expected(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(o);
        if (*power) return cmd_power(o);
        if (*comp) return cmd_compound(o);
        if (*en) return cmd_enumerate4(o);
        if (*prod) return cmd_products(o);
        if (*ger) return cmd_gerschgorin(o);
        if (*cat) return cmd_catalog(o);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
