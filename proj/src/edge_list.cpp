// SPDX-License-Identifier: Apache-2.0
#include "forests/edge_list.hpp"

#include <charconv>
#include <sstream>

namespace forests {

namespace {

[[noreturn]] void parse_fail(int line, int column, const std::string& what) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                    what);
}

// Strips a trailing comment and surrounding whitespace-only content marker.
std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string body = pos == std::string::npos ? line : line.substr(0, pos);
    while (!body.empty() && (body.back() == '\r' || body.back() == ' ' || body.back() == '\t'))
        body.pop_back();
    return body;
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

long parse_int(const std::string& field, int line, int column) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        parse_fail(line, column, "expected an integer, got '" + field + "'");
    return value;
}

double parse_weight(const std::string& field, int line, int column) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        parse_fail(line, column, "expected a decimal weight, got '" + field + "'");
    return value;
}

}  // namespace

EdgeListDocument parse_edge_list(const std::string& text, const std::string& source) {
    EdgeListDocument doc;
    doc.source = source;
    bool have_header = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (is_blank(line)) continue;

        if (line.rfind("n ", 0) == 0 || line == "n" || line.rfind("n\t", 0) == 0) {
            if (have_header)
                throw Error(ErrorCode::DuplicateHeader, "second header at line " +
                                                            std::to_string(line_no));
            std::string count = line.size() > 1 ? line.substr(2) : "";
            doc.n = static_cast<int>(parse_int(count, line_no, 3));
            have_header = true;
            continue;
        }
        if (!have_header)
            throw Error(ErrorCode::MissingHeader,
                        "expected 'n <count>' before data at line " + std::to_string(line_no));

        size_t t1 = line.find('\t');
        size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            parse_fail(line_no, 1, "expected '<tail>\\t<head>\\t<weight>'");
        long tail = parse_int(line.substr(0, t1), line_no, 1);
        long head = parse_int(line.substr(t1 + 1, t2 - t1 - 1), line_no, static_cast<int>(t1) + 2);
        double weight = parse_weight(line.substr(t2 + 1), line_no, static_cast<int>(t2) + 2);
        doc.records.emplace_back(static_cast<int>(tail), static_cast<int>(head), weight);
    }
    if (!have_header) throw Error(ErrorCode::MissingHeader, "no 'n <count>' header found");
    return doc;
}

WeightedDigraph to_digraph(const EdgeListDocument& doc) {
    return WeightedDigraph::build(doc.n, doc.records);
}

std::string serialize_edge_list(const WeightedDigraph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    char buf[64];
    for (const Arc& a : g.arcs()) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), a.weight);
        out += std::to_string(a.tail + 1) + "\t" + std::to_string(a.head + 1) + "\t" +
               std::string(buf, ptr) + "\n";
    }
    return out;
}

}  // namespace forests
