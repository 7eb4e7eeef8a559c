#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnum/rat_matrix.hpp"

namespace hnum {

/// One link as read from an input file.
struct LinkRecord {
    std::string name;
    std::optional<RatMatrix> seifert;
    std::optional<int> components;
    std::vector<std::string> tags;
    std::optional<RatMatrix> monodromy;  ///< h, for stage-isolated runs
    std::optional<RatMatrix> variation;  ///< V, for stage-isolated runs
};

/// Input problem with an optional source position (1-based; 0 when unknown).
class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
    std::string reason;  ///< message without the position suffix
    std::size_t line, column;
};

/// Parses a JSON array of records. Matrix entries are integers or "p/q" strings; floats are rejected.
/// A record needs a square "seifert" matrix unless `allow_variation_only` and it carries "variation".
std::vector<LinkRecord> parse_link_records(const std::string& text, bool allow_variation_only = false);
std::vector<LinkRecord> read_link_records(const std::string& path, bool allow_variation_only = false);

/// Serializes records in the input format (entries as integers when integral, else "p/q").
std::string write_link_records(const std::vector<LinkRecord>& records);

}  // namespace hnum
