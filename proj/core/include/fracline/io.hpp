#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fracline/grid.hpp"
#include "fracline/solver.hpp"
#include "fracline/wellposedness.hpp"

namespace fracline {

// Minimal JSON document model for the emitted artifacts. Objects are
// std::map, so keys always serialize sorted; numbers are printed with
// %.17g so identical runs produce byte-identical files that parse back to
// the same doubles.
struct Json;
using JsonArray = std::vector<Json>;
using JsonObject = std::map<std::string, Json>;

struct Json : std::variant<std::nullptr_t, bool, std::int64_t, double, std::string,
                           JsonArray, JsonObject> {
    using variant::variant;
    Json() : variant(nullptr) {}
};

std::string dump(const Json& value, int indent = 2);

// Shortest fixed-precision form: %.17g, which round-trips every double.
// Non-finite values map to "null" (they never appear in valid artifacts).
std::string format_double(double x);

Json to_json(const GridSpec& grid);
Json to_json(const WellposednessReport& report);
Json to_json(const SolveResult& result);

// CSV with header "x,<value_header>", LF newlines, %.17g fields.
void write_csv(const std::string& path, const SampledFunction& f,
               const std::string& value_header = "value");

// Reads a two-column CSV produced as above (header optional). The row count
// must equal grid.n_points() and the x column must match the grid nodes;
// anything else raises IoError.
SampledFunction load_csv(const std::string& path, const GridSpec& grid);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace fracline
