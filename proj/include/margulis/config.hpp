#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "margulis/cocycle.hpp"
#include "margulis/invariant.hpp"
#include "margulis/scan.hpp"

// Job configuration: one JSON document naming a group (Fricke boundary
// traces or explicit generator matrices), a cocycle (explicit generator
// values or boundary invariant targets), and the scan/check options.
//
//   {
//     "group":   {"fricke": [x, y, z]}
//              | {"matrices": {"a": [[m11,m12],[m21,m22]], "b": [[...],[...]]}},
//     "cocycle": {"boundary_targets": [t1, t2, t3]}
//              | {"u_a": [x1,x2,x3], "u_b": [x1,x2,x3]},
//     "scan":    {"max_len": 12, "tau_zero": 1e-8},      // optional
//     "check":   {"h": 1e-5, "samples": 100, "seed": 0}  // optional
//   }

namespace margulis {

struct JobConfig {
    // Group: exactly one variant is set.
    std::optional<std::array<double, 3>> fricke;
    std::optional<std::array<std::array<double, 4>, 2>> matrices;  // row-major a, b

    // Cocycle: exactly one variant is set.
    std::optional<std::array<double, 3>> boundary_targets;
    std::optional<std::array<std::array<double, 3>, 2>> generator_values;  // u_a, u_b

    int max_len = 12;
    double tau_zero = kScanZeroTolerance;
    double h = 1e-5;
    int samples = 100;
    std::uint64_t seed = 0;

    static JobConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    HolonomyRep build_rep() const {
        if (fricke) {
            return fricke_construct((*fricke)[0], (*fricke)[1], (*fricke)[2]);
        }
        const auto& m = *matrices;
        return HolonomyRep{IsometryLift{m[0][0], m[0][1], m[0][2], m[0][3]},
                           IsometryLift{m[1][0], m[1][1], m[1][2], m[1][3]}};
    }

    Cocycle build_cocycle(const HolonomyRep& rep) const {
        if (boundary_targets) {
            return solve_boundary_cocycle(rep, *boundary_targets);
        }
        const auto& g = *generator_values;
        return Cocycle{Vec21{g[0][0], g[0][1], g[0][2]},
                       Vec21{g[1][0], g[1][1], g[1][2]}};
    }
};

namespace detail {

inline void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : allowed) {
            if (item.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw std::invalid_argument(std::string("config: unknown key \"") +
                                        item.key() + "\" in " + where);
        }
    }
}

template <std::size_t N>
std::array<double, N> number_array(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != N) {
        throw std::invalid_argument(std::string("config: ") + what + " must be an array of " +
                                    std::to_string(N) + " numbers");
    }
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        if (!j[i].is_number()) {
            throw std::invalid_argument(std::string("config: ") + what +
                                        " must contain numbers only");
        }
        out[i] = j[i].get<double>();
    }
    return out;
}

inline std::array<double, 4> matrix2(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument(std::string("config: ") + what +
                                    " must be a 2x2 matrix as [[m11,m12],[m21,m22]]");
    }
    const auto row1 = number_array<2>(j[0], what);
    const auto row2 = number_array<2>(j[1], what);
    return {row1[0], row1[1], row2[0], row2[1]};
}

}  // namespace detail

inline JobConfig JobConfig::from_json(const nlohmann::json& j) {
    try {
        JobConfig cfg;
        if (!j.is_object()) {
            throw std::invalid_argument("config: top level must be a JSON object");
        }
        detail::require_keys(j, {"group", "cocycle", "scan", "check"}, "the top level");

        if (!j.contains("group")) {
            throw std::invalid_argument("config: missing \"group\" section");
        }
        const auto& grp = j.at("group");
        detail::require_keys(grp, {"fricke", "matrices"}, "\"group\"");
        if (grp.contains("fricke") == grp.contains("matrices")) {
            throw std::invalid_argument(
                "config: \"group\" needs exactly one of \"fricke\", \"matrices\"");
        }
        if (grp.contains("fricke")) {
            cfg.fricke = detail::number_array<3>(grp.at("fricke"), "group.fricke");
        } else {
            const auto& m = grp.at("matrices");
            detail::require_keys(m, {"a", "b"}, "\"group.matrices\"");
            if (!m.contains("a") || !m.contains("b")) {
                throw std::invalid_argument(
                    "config: \"group.matrices\" needs both \"a\" and \"b\"");
            }
            cfg.matrices = {detail::matrix2(m.at("a"), "group.matrices.a"),
                            detail::matrix2(m.at("b"), "group.matrices.b")};
        }

        if (!j.contains("cocycle")) {
            throw std::invalid_argument("config: missing \"cocycle\" section");
        }
        const auto& coc = j.at("cocycle");
        detail::require_keys(coc, {"boundary_targets", "u_a", "u_b"}, "\"cocycle\"");
        const bool has_targets = coc.contains("boundary_targets");
        const bool has_values = coc.contains("u_a") || coc.contains("u_b");
        if (has_targets == has_values) {
            throw std::invalid_argument(
                "config: \"cocycle\" needs exactly one of \"boundary_targets\" "
                "or the pair \"u_a\"/\"u_b\"");
        }
        if (has_targets) {
            cfg.boundary_targets =
                detail::number_array<3>(coc.at("boundary_targets"), "cocycle.boundary_targets");
        } else {
            if (!coc.contains("u_a") || !coc.contains("u_b")) {
                throw std::invalid_argument(
                    "config: explicit cocycle needs both \"u_a\" and \"u_b\"");
            }
            cfg.generator_values = {detail::number_array<3>(coc.at("u_a"), "cocycle.u_a"),
                                    detail::number_array<3>(coc.at("u_b"), "cocycle.u_b")};
        }

        if (j.contains("scan")) {
            const auto& s = j.at("scan");
            detail::require_keys(s, {"max_len", "tau_zero"}, "\"scan\"");
            if (s.contains("max_len")) {
                if (!s.at("max_len").is_number_integer() || s.at("max_len").get<int>() < 1) {
                    throw std::invalid_argument("config: scan.max_len must be a positive integer");
                }
                cfg.max_len = s.at("max_len").get<int>();
            }
            if (s.contains("tau_zero")) {
                const double tz = s.at("tau_zero").get<double>();
                if (!(tz >= 0.0)) {
                    throw std::invalid_argument("config: scan.tau_zero must be non-negative");
                }
                cfg.tau_zero = tz;
            }
        }
        if (j.contains("check")) {
            const auto& c = j.at("check");
            detail::require_keys(c, {"h", "samples", "seed"}, "\"check\"");
            if (c.contains("h")) {
                const double h = c.at("h").get<double>();
                if (!(h > 0.0)) {
                    throw std::invalid_argument("config: check.h must be positive");
                }
                cfg.h = h;
            }
            if (c.contains("samples")) {
                if (!c.at("samples").is_number_integer() || c.at("samples").get<int>() < 1) {
                    throw std::invalid_argument("config: check.samples must be a positive integer");
                }
                cfg.samples = c.at("samples").get<int>();
            }
            if (c.contains("seed")) {
                if (!c.at("seed").is_number_unsigned()) {
                    throw std::invalid_argument("config: check.seed must be a non-negative integer");
                }
                cfg.seed = c.at("seed").get<std::uint64_t>();
            }
        }
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config: malformed JSON value: ") + e.what());
    }
}

inline nlohmann::json JobConfig::to_json() const {
    nlohmann::json j;
    if (fricke) {
        j["group"]["fricke"] = *fricke;
    } else if (matrices) {
        const auto& m = *matrices;
        j["group"]["matrices"]["a"] = {{m[0][0], m[0][1]}, {m[0][2], m[0][3]}};
        j["group"]["matrices"]["b"] = {{m[1][0], m[1][1]}, {m[1][2], m[1][3]}};
    }
    if (boundary_targets) {
        j["cocycle"]["boundary_targets"] = *boundary_targets;
    } else if (generator_values) {
        j["cocycle"]["u_a"] = (*generator_values)[0];
        j["cocycle"]["u_b"] = (*generator_values)[1];
    }
    j["scan"]["max_len"] = max_len;
    j["scan"]["tau_zero"] = tau_zero;
    j["check"]["h"] = h;
    j["check"]["samples"] = samples;
    j["check"]["seed"] = seed;
    return j;
}

// Reads and parses a config file; file-system and JSON syntax problems both
// surface as invalid_argument (configuration errors).
inline JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("config: cannot open file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: JSON parse failure in '" + path +
                                    "': " + e.what());
    }
    return JobConfig::from_json(j);
}

}  // namespace margulis
