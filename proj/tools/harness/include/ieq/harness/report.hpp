#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ieq::harness {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "invariant-eq-lab/1";

enum class Format { Json, Csv };

/// Scalar fields plus an optional table. JSON nests the table under its name;
/// CSV prints the table when there is one and key,value rows otherwise.
struct Report {
    std::string command;
    Json fields = Json::object();
    std::string table_name;
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
};

/// Rounds to 12 significant digits so serialized output stays stable.
Json number(double x);

std::string render(const Report& report, Format format, std::uint64_t seed);

}  // namespace ieq::harness
