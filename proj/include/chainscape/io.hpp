#pragma once

#include <optional>
#include <string>

#include "chainscape/core.hpp"
#include "chainscape/moduli.hpp"

namespace chainscape {

enum class InputFormat { csv, json };

/// CSV distance matrix: header row of n labels, then n rows of
/// `label,v0,...,v{n-1}`. Throws ParseError with line/column context.
MetricSpace load_space_csv(const std::string& text);

/// Point cloud: {"labels": [...], "points": [[...]], "metric":
/// "euclidean"|"l1"|"linf"|"product"}. Labels are optional.
MetricSpace load_space_json(const std::string& text);

/// Reads a file and dispatches on the format (by extension when absent).
MetricSpace load_space(const std::string& path,
                       std::optional<InputFormat> format = std::nullopt);

/// Canonical CSV serialization (shortest round-trip doubles); the digest
/// input, so byte-stable for a given space.
std::string canonical_csv(const MetricSpace& space);

/// {"breakpoints": [[t, v], ...]}
Modulus load_modulus_json(const std::string& text);
Modulus load_modulus_file(const std::string& path);
std::string modulus_to_json(const Modulus& m);

std::string read_file(const std::string& path);

/// Lowercase SHA-256 hex digest.
std::string sha256_hex(const std::string& data);

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

}  // namespace chainscape
