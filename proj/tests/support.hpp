#pragma once

#include "powg/errors.hpp"
#include "powg/group.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace support {

inline powg::Element by_label(const powg::FiniteGroup& g, const std::string& label)
{
    for (powg::Element x = 0; x < g.order(); ++x)
        if (g.label(x) == label)
            return x;
    throw std::out_of_range{"no element labelled " + label};
}

/// Cayley-table text of Z_n.
inline std::string cyclic_table_text(std::size_t n, const std::string& eol = "\n")
{
    std::string text = std::to_string(n) + eol;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            text += (b ? " " : "") + std::to_string((a + b) % n);
        text += eol;
    }
    return text;
}

inline std::string table_text(std::size_t n, const std::vector<std::vector<int>>& rows)
{
    std::string text = std::to_string(n) + "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            text += (i ? " " : "") + std::to_string(row[i]);
        text += "\n";
    }
    return text;
}

/// The family groups the property suites sweep over.
inline const std::vector<powg::FamilyParams>& small_families()
{
    static const std::vector<powg::FamilyParams> v{{2, 3}, {2, 5}, {3, 3}, {2, 7}, {4, 3}, {3, 5}};
    return v;
}

}  // namespace support
