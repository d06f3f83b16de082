#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdcrib/errors.hpp"
#include "pdcrib/materials.hpp"

namespace pdcrib {

// All numeric file output goes through this: 9 significant digits, locale-free.
inline std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open for writing: " + path);
    os << content;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') { out.push_back(cur); cur.clear(); }
        else if (c != '\r') cur.push_back(c);
    }
    out.push_back(cur);
    return out;
}

// Dispersion table export: `wavelength_um,n`, one row per sample.
inline std::string dispersion_csv(const std::vector<std::pair<double, double>>& samples) {
    std::string s = "wavelength_um,n\n";
    for (const auto& [l, n] : samples) s += fmt9(l) + "," + fmt9(n) + "\n";
    return s;
}

// FNV-1a, used for the config-hash sidecars. Stable across runs and platforms.
inline std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Dielectric model parameters from a JSON document mirroring the film-fit
// parameter table: eps_re, A_Sellm, E0_Sellm, A_TL, En_TL, C_TL, Eg.
inline DielectricModel dielectric_model_from_json(const nlohmann::json& j) {
    DielectricModel m;
    try {
        m.eps_offset = j.at("eps_re").get<double>();
        m.sellmeier_amp = j.at("A_Sellm").get<double>();
        m.sellmeier_e0 = j.at("E0_Sellm").get<double>();
        m.tl_amp = j.at("A_TL").get<double>();
        m.tl_en = j.at("En_TL").get<double>();
        m.tl_c = j.at("C_TL").get<double>();
        m.tl_eg = j.at("Eg").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("dielectric model JSON: ") + e.what());
    }
    m.validate();
    return m;
}

inline nlohmann::json dielectric_model_to_json(const DielectricModel& m) {
    return nlohmann::json{{"eps_re", m.eps_offset}, {"A_Sellm", m.sellmeier_amp},
                          {"E0_Sellm", m.sellmeier_e0}, {"A_TL", m.tl_amp},
                          {"En_TL", m.tl_en}, {"C_TL", m.tl_c}, {"Eg", m.tl_eg}};
}

}  // namespace pdcrib
