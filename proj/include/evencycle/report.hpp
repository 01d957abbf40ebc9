#pragma once

// Two serializations shared by every report: an aligned text table for people
// and key=value lines for diffing.

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace evencycle {

using Record = std::vector<std::pair<std::string, std::string>>;

inline std::string format_records(const Record& rec) {
    std::ostringstream s;
    for (const auto& [k, v] : rec) s << k << '=' << v << '\n';
    return s.str();
}

inline std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream s;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t c = 0; c < width.size(); ++c) {
            std::string cell = c < cells.size() ? cells[c] : "";
            if (c + 1 < width.size()) cell.resize(width[c], ' ');
            out += cell;
            if (c + 1 < width.size()) out += "  ";
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        s << out << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows) line(r);
    return s.str();
}

inline std::string fixed(double x, int digits = 4) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

} // namespace evencycle
