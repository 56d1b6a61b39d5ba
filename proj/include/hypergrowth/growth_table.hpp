#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "hypergrowth/bigint.hpp"

namespace hypergrowth {

/// One radius of the closed-form growth sequence, optionally paired with the
/// brute-force measurement of the same quantities.
struct growth_row {
    std::int64_t r = 0;
    bigint perimeter;  // P
    bigint area;       // A
    bigint blue;       // B
    bigint yellow;     // Y
    std::optional<bigint> perimeter_oracle;
    std::optional<bigint> area_oracle;
};

struct growth_table {
    std::vector<growth_row> rows;

    bool has_oracle() const {
        for (const auto& row : rows)
            if (row.perimeter_oracle || row.area_oracle) return true;
        return false;
    }

    // CSV with header r,P,A,B,Y and, when oracle measurements are attached,
    // the extra P_oracle,A_oracle columns.
    void write_csv(std::ostream& out) const {
        const bool oracle = has_oracle();
        out << "r,P,A,B,Y";
        if (oracle) out << ",P_oracle,A_oracle";
        out << '\n';
        for (const auto& row : rows) {
            out << row.r << ',' << row.perimeter << ',' << row.area << ',' << row.blue << ','
                << row.yellow;
            if (oracle) {
                out << ',' << (row.perimeter_oracle ? row.perimeter_oracle->str() : "") << ','
                    << (row.area_oracle ? row.area_oracle->str() : "");
            }
            out << '\n';
        }
    }

    // Integers are rendered as decimal strings; they outgrow 64-bit fast.
    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj{{"r", row.r},
                               {"P", row.perimeter.str()},
                               {"A", row.area.str()},
                               {"B", row.blue.str()},
                               {"Y", row.yellow.str()}};
            if (row.perimeter_oracle) obj["P_oracle"] = row.perimeter_oracle->str();
            if (row.area_oracle) obj["A_oracle"] = row.area_oracle->str();
            arr.push_back(obj);
        }
        return arr;
    }
};

} // namespace hypergrowth
