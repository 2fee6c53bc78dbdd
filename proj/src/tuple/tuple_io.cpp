#include <sstream>

#include "rls/errors.hpp"
#include "rls/tuple.hpp"

namespace rls {

std::string format_tuple(const MonodromyTuple& t) {
    std::ostringstream out;
    out << "conductor " << t.conductor() << '\n';
    out << "rank " << t.rank() << '\n';
    out << "slots " << t.slot_count() << '\n';
    out << "labels";
    for (const auto& l : t.labels()) out << ' ' << l;
    out << '\n';
    for (const auto& m : t.matrices()) out << '\n' << m;
    return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

size_t parse_count(std::string_view value, size_t line) {
    try {
        size_t used = 0;
        const long v = std::stol(std::string(value), &used);
        if (used != value.size() || v < 1) throw std::invalid_argument("bad");
        return static_cast<size_t>(v);
    } catch (const std::exception&) {
        throw ParseError("expected a positive integer, got '" + std::string(value) + "'", line, 1);
    }
}

}  // namespace

MonodromyTuple parse_tuple(std::string_view text) {
    int conductor = 0;
    size_t rank = 0;
    size_t slots = 0;
    std::vector<std::string> labels;
    std::vector<Matrix> matrices;
    std::vector<Cyclotomic> pending;
    size_t pending_rows = 0;
    size_t line_no = 0;

    auto flush = [&](size_t line) {
        if (pending_rows == 0) return;
        if (pending_rows != rank) {
            throw ParseError("matrix has " + std::to_string(pending_rows) + " rows, expected " + std::to_string(rank),
                             line, 1);
        }
        matrices.emplace_back(rank, rank, std::move(pending));
        pending.clear();
        pending_rows = 0;
    };

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (!line.empty() && line.front() == '#') continue;
        if (line.empty()) {
            flush(line_no);
            continue;
        }
        if (conductor == 0 || rank == 0 || slots == 0 || labels.empty()) {
            const auto space = line.find_first_of(" \t");
            const std::string_view key = line.substr(0, space);
            const std::string_view value = space == std::string_view::npos ? "" : trim(line.substr(space));
            if (key == "conductor") {
                conductor = static_cast<int>(parse_count(value, line_no));
            } else if (key == "rank") {
                rank = parse_count(value, line_no);
            } else if (key == "slots") {
                slots = parse_count(value, line_no);
            } else if (key == "labels") {
                std::istringstream ls{std::string(value)};
                std::string l;
                while (ls >> l) labels.push_back(l);
            } else {
                throw ParseError("unexpected header key '" + std::string(key) + "'", line_no, 1);
            }
            continue;
        }
        size_t column = 1;
        size_t count = 0;
        size_t start = 0;
        const std::string row(line);
        while (start <= row.size()) {
            const auto comma = row.find(',', start);
            const std::string cell = row.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            column = start + 1;
            try {
                pending.push_back(parse_scalar(cell, conductor));
            } catch (const ParseError& e) {
                throw ParseError("bad matrix entry '" + std::string(trim(cell)) + "'", line_no, column + e.column() - 1);
            }
            ++count;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (count != rank) {
            throw ParseError("row has " + std::to_string(count) + " entries, expected " + std::to_string(rank), line_no,
                             1);
        }
        ++pending_rows;
    }
    flush(line_no);
    if (conductor == 0 || rank == 0 || slots == 0 || labels.empty()) {
        throw ParseError("incomplete header (need conductor, rank, slots, labels)", line_no, 1);
    }
    if (labels.size() != slots) throw ParseError("label count differs from slot count", line_no, 1);
    if (matrices.size() != slots) {
        throw ParseError("found " + std::to_string(matrices.size()) + " matrices, expected " + std::to_string(slots),
                         line_no, 1);
    }
    for (auto& m : matrices) m = m.lifted(conductor);
    return {std::move(labels), std::move(matrices)};
}

}  // namespace rls
