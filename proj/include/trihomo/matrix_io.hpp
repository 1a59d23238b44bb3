#pragma once

// Matrix file format:
//   {"genus": g, "variable": "n" | null,
//    "alpha": [[entry, ...], ...], "beta": [...], "gamma": [...],
//    "label": string}
// where an entry is an integer or a polynomial string like "3+2n" or
// "-2-2*n". Parsing is exact; serialization is canonical: integers for
// degree 0, the canonical polynomial string otherwise, keys in alphabetical
// order, one matrix row per line.

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "trihomo/diagram.hpp"

namespace trihomo {

inline IntPoly entry_from_json(const nlohmann::json& e) {
    if (e.is_number_integer()) return IntPoly(Int128(e.get<long long>()));
    if (e.is_string()) return IntPoly::parse(e.get<std::string>());
    throw ParseError("matrix entry must be an integer or a polynomial string, got " + e.dump());
}

inline nlohmann::json entry_to_json(const IntPoly& p) {
    if (p.is_constant() && p.coeff(0).fits_int64()) return p.coeff(0).to_int64();
    return p.str();
}

inline TrisectionMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("matrix document must be a JSON object");
    if (!j.contains("genus") || !j["genus"].is_number_integer())
        throw ParseError("matrix document needs an integer \"genus\"");
    const int g = j["genus"].get<int>();
    if (g < 0) throw ParseError("negative genus");
    if (j.contains("variable") && !j["variable"].is_null()) {
        if (!j["variable"].is_string() || j["variable"].get<std::string>() != "n")
            throw ParseError("\"variable\" must be \"n\" or null");
    }

    auto read_family = [&](const char* name) {
        if (!j.contains(name) || !j[name].is_array())
            throw ParseError(std::string("matrix document needs an array \"") + name + "\"");
        std::vector<HClass> rows;
        for (const auto& jrow : j[name]) {
            if (!jrow.is_array()) throw ParseError(std::string(name) + " rows must be arrays");
            std::vector<IntPoly> entries;
            entries.reserve(jrow.size());
            for (const auto& e : jrow) entries.push_back(entry_from_json(e));
            rows.emplace_back(std::move(entries));
        }
        return rows;
    };

    std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
    return new_trisection_matrix(SymplecticSpace{g}, read_family("alpha"), read_family("beta"),
                                 read_family("gamma"), std::move(label));
}

inline nlohmann::json matrix_to_json(const TrisectionMatrix& d) {
    nlohmann::json j;
    for (Family f : all_families) {
        nlohmann::json fam = nlohmann::json::array();
        for (const HClass& r : d.family(f)) {
            nlohmann::json row = nlohmann::json::array();
            for (const IntPoly& e : r.entries()) row.push_back(entry_to_json(e));
            fam.push_back(std::move(row));
        }
        j[family_name(f)] = std::move(fam);
    }
    j["genus"] = d.genus();
    j["label"] = d.label;
    j["variable"] = d.is_constant() ? nlohmann::json() : nlohmann::json("n");
    return j;
}

// Canonical text: keys alphabetically, each matrix row on one line.
inline std::string matrix_to_text(const TrisectionMatrix& d) {
    std::ostringstream out;
    out << "{\n";
    for (Family f : all_families) {
        out << "  \"" << family_name(f) << "\": [\n";
        const auto& fam = d.family(f);
        for (size_t i = 0; i < fam.size(); ++i) {
            out << "    [";
            for (size_t k = 0; k < fam[i].size(); ++k) {
                if (k) out << ", ";
                out << entry_to_json(fam[i][k]).dump();
            }
            out << (i + 1 < fam.size() ? "],\n" : "]\n");
        }
        out << "  ],\n";
    }
    out << "  \"genus\": " << d.genus() << ",\n";
    out << "  \"label\": " << nlohmann::json(d.label).dump() << ",\n";
    out << "  \"variable\": " << (d.is_constant() ? "null" : "\"n\"") << "\n";
    out << "}\n";
    return out.str();
}

inline TrisectionMatrix matrix_from_text(const std::string& text, const std::string& what = "matrix") {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(what + ": not valid JSON");
    return matrix_from_json(j);
}

inline TrisectionMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return matrix_from_text(buf.str(), path);
}

inline void write_matrix_file(const std::string& path, const TrisectionMatrix& d) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << matrix_to_text(d);
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace trihomo
