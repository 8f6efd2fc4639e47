#include "magpow/constructors.hpp"
#include "magpow/exact_core.hpp"
#include "magpow/report.hpp"

#include <doctest.h>

using namespace magpow;

TEST_SUITE("report") {

TEST_CASE("rational formatting") {
    CHECK(format_rational(Rational(6, 5)) == "1.2");
    CHECK(format_rational(Rational(4, 25)) == "0.16");
    CHECK(format_rational(Rational(0)) == "0");
    CHECK(format_rational(Rational(-3, 8)) == "-0.375");
    CHECK(format_rational(Rational(30, 17)) == "30/17 (1.76471)");
    CHECK(format_rational(Rational(17, 1)) == "17");
}

TEST_CASE("number formatting") {
    CHECK(format_pct4(35.06031) == "35.0603");
    CHECK(format_pct4(97.87200) == "97.872");
    CHECK(format_pct4(100.0) == "100");
    CHECK(format_grouped(Integer(102800)) == "102,800");
    CHECK(format_grouped(Integer(272)) == "272");
    CHECK(format_grouped(Integer(-1234567)) == "-1,234,567");
    CHECK(format_sig6(1.0 / 3) == "0.333333");
    CHECK(format_sig6(0.0) == "0");
}

TEST_CASE("eigenvalue text") {
    const auto lo = split_integer_roots(char_poly(catalog("loshu")), numeric_eigenvalues(catalog("loshu")));
    CHECK(format_eigenvalues(lo) == "15, ±sqrt(-24)");
}

TEST_CASE("type column") {
    const auto t = trajectory(catalog("sud4a"));
    const auto base = classify(catalog("sud4a"));
    CHECK(type_column(t.steps[0], base) == "diagonal Latin");
    CHECK(type_column(t.steps[2], base) == "constant: 250 E4");
    const auto lat = trajectory(catalog("lat4a"), 2);
    CHECK(type_column(lat.steps[1], classify(catalog("lat4a"))) == "DA d1=120, d2=80");
}

TEST_CASE("JSON report is deterministic and keeps big integers exact") {
    const auto a = make_report("loshu", "", catalog("loshu"), 6u);
    const auto b = make_report("loshu", "", catalog("loshu"), 6u);
    CHECK(report_json(a) == report_json(b));
    const auto j = to_json(a);
    CHECK(j["classification"]["is_classic_magic"] == true);
    CHECK(j["spectra"]["r_index"] == 2448);
    CHECK(j["spectra"]["spread"]["exact"] == "8/5");
    CHECK(j["spectra"]["singular_values"][1] == 6.9282);
    CHECK(j["jordan"]["block_sizes"].empty());
    CHECK(j["trajectory"][5]["r_index"] == 73040694872113152LL);
    CHECK(j["trajectory"][5]["d1"] == 11362977);

    const auto keys = j.items().begin().key();
    CHECK(keys == "subject");
}

TEST_CASE("Markdown report sections") {
    const auto md = render_markdown(make_report("laa44", "order-5", catalog("laa44"), 12u));
    CHECK(md.find("## Classification") != std::string::npos);
    CHECK(md.find("rank r = 4, mu = 4, 1EV: yes") != std::string::npos);
    CHECK(md.find("constant: 3570125 E5") != std::string::npos);
    CHECK(md.find("block sizes: 4") != std::string::npos);
}

TEST_CASE("SVG output") {
    const auto g = gerschgorin_svg(catalog("sud4a"), DiskAxis::column);
    CHECK(g.rfind("<svg", 0) == 0);
    CHECK(std::count(g.begin(), g.end(), '\n') > 4);
    CHECK(g.find("<title>10</title>") != std::string::npos);
    const auto c = curves_svg(trajectory(catalog("loshu"), 6), "loshu");
    CHECK(c.find("polyline") != std::string::npos);
    CHECK(c.find("</svg>") != std::string::npos);
}

} // TEST_SUITE
