#include "magpow/int_square.hpp"

#include "magpow/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace magpow {

namespace {

void require_order(std::size_t n) {
    if (n == 0) throw precondition_error("square order must be at least 1");
}

bool is_integer_token(std::string_view tok) {
    std::size_t i = 0;
    if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) ++i;
    if (i == tok.size()) return false;
    return std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(i), tok.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Integer integer_from_token(std::string_view tok) {
    if (!is_integer_token(tok)) throw input_error("non-integer token '" + std::string(tok) + "'");
    std::string s(tok);
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s, 10);
}

std::size_t exact_sqrt(std::size_t count) {
    auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(count))));
    while (r * r > count) --r;
    while ((r + 1) * (r + 1) <= count) ++r;
    return r * r == count ? r : 0;
}

Integer integer_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()), 10);
        return Integer(std::to_string(v.get<std::int64_t>()), 10);
    }
    if (v.is_string()) return integer_from_token(v.get<std::string>());
    throw input_error("non-integer JSON entry " + v.dump());
}

IntSquare square_from_json_rows(const nlohmann::json& rows, std::size_t declared) {
    if (!rows.is_array()) throw input_error("\"rows\" must be an array of arrays");
    const std::size_t n = rows.size();
    if (n == 0) throw input_error("empty square");
    if (declared != 0 && declared != n) throw input_error("declared order does not match row count");
    std::vector<Integer> entries;
    entries.reserve(n * n);
    for (const auto& r : rows) {
        if (!r.is_array() || r.size() != n) throw input_error("every row must have exactly n entries");
        for (const auto& v : r) entries.push_back(integer_from_json(v));
    }
    return IntSquare(n, std::move(entries));
}

IntSquare parse_json_square(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("malformed JSON square: ") + e.what());
    }
    if (doc.is_array()) return square_from_json_rows(doc, 0);
    if (!doc.is_object() || !doc.contains("rows")) throw input_error("JSON square needs a \"rows\" array");
    std::size_t declared = 0;
    if (doc.contains("order")) {
        const auto& o = doc["order"];
        if (!o.is_number_integer() || o.get<std::int64_t>() < 1) throw input_error("\"order\" must be a positive integer");
        declared = o.get<std::size_t>();
    }
    return square_from_json_rows(doc["rows"], declared);
}

} // namespace

IntSquare::IntSquare(std::size_t order) : n_(order), a_(order * order) { require_order(order); }

IntSquare::IntSquare(std::size_t order, std::vector<Integer> entries) : n_(order), a_(std::move(entries)) {
    require_order(order);
    if (a_.size() != n_ * n_) throw precondition_error("entry count must equal order squared");
}

IntSquare::IntSquare(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
    require_order(n_);
    a_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw precondition_error("ragged row in square literal");
        for (long v : r) a_.emplace_back(v);
    }
}

IntSquare IntSquare::identity(std::size_t order) {
    IntSquare s(order);
    for (std::size_t i = 0; i < order; ++i) s(i, i) = 1;
    return s;
}

IntSquare IntSquare::constant(std::size_t order, const Integer& value) {
    return IntSquare(order, std::vector<Integer>(order * order, value));
}

IntSquare IntSquare::transposed() const {
    IntSquare t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool operator<(const IntSquare& a, const IntSquare& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.a_.begin(), a.a_.end(), b.a_.begin(), b.a_.end());
}

IntSquare operator+(const IntSquare& a, const IntSquare& b) {
    if (a.order() != b.order()) throw precondition_error("order mismatch in addition");
    std::vector<Integer> e(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.entries()[k];
    return IntSquare(a.order(), std::move(e));
}

IntSquare operator-(const IntSquare& a, const IntSquare& b) {
    if (a.order() != b.order()) throw precondition_error("order mismatch in subtraction");
    std::vector<Integer> e(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] -= b.entries()[k];
    return IntSquare(a.order(), std::move(e));
}

IntSquare operator*(const Integer& c, const IntSquare& a) {
    std::vector<Integer> e(a.entries().begin(), a.entries().end());
    for (auto& v : e) v *= c;
    return IntSquare(a.order(), std::move(e));
}

RationalSquare::RationalSquare(std::size_t order) : n_(order), a_(order * order) { require_order(order); }

RationalSquare::RationalSquare(const IntSquare& a) : n_(a.order()) {
    a_.reserve(n_ * n_);
    for (const auto& v : a.entries()) a_.emplace_back(v);
}

bool RationalSquare::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalSquare operator*(const RationalSquare& a, const RationalSquare& b) {
    if (a.order() != b.order()) throw precondition_error("order mismatch in product");
    const std::size_t n = a.order();
    RationalSquare c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntSquare parse_square(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && (text[first] == '{' || text[first] == '['))
        return parse_json_square(text.substr(first));

    std::vector<Integer> values;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream toks(line);
        std::string tok;
        while (toks >> tok) values.push_back(integer_from_token(tok));
    }
    if (values.empty()) throw input_error("no values: a square needs order >= 1");
    const std::size_t n = exact_sqrt(values.size());
    if (n == 0)
        throw input_error(std::to_string(values.size()) + " values do not form a square");
    return IntSquare(n, std::move(values));
}

std::string format_square(const IntSquare& a) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (const auto& v : a.entries()) {
        cells.push_back(v.get_str());
        width = std::max(width, cells.back().size());
    }
    std::string out;
    const std::size_t n = a.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& c = cells[i * n + j];
            if (j > 0) out += ' ';
            out.append(width - c.size(), ' ');
            out += c;
        }
        out += '\n';
    }
    return out;
}

} // namespace magpow
