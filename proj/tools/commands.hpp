#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "plocal/bounds.hpp"

namespace plocal::cli {

using json = nlohmann::json;

inline constexpr const char* tool_version = "0.1.0";

struct JobConfig {
    std::string area;  // fusion, linking, tower, cohomology, examples, corpus
    std::string verb;
    std::string group, sylow = "auto", sub = "auto", tower, h_tower, dir, suite;
    std::string policy = "centric", check = "part-a", nerve_out;
    std::string prefix, pattern;
    unsigned p = 2, q = 0;
    std::size_t depth = 1, window = 2, maxdeg = 2, max_dim = 2, deg = 1;
    std::size_t count = 100, levels = 6, max_points = 40, max_gamma = 12, max_order = 100;
    std::uint64_t seed = 1;
    Bounds bounds;
};

// The result block for one command; throws plocal::Error on failure.
json run(const JobConfig& cfg);

// key: value lines, nested keys joined with '.'
std::string render_human(const json& report);

}  // namespace plocal::cli
