#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "arith/structure.hpp"

namespace arith {

using Json = nlohmann::ordered_json;

/// Decimal integer with optional sign. Throws ParseError.
Integer parse_integer(std::string_view s);

/// Comma-separated integers such as "1,6,2,3". Throws ParseError.
IntVector parse_int_list(std::string_view s);

/// "family:N" or "file:PATH". The file holds {"rows": [[...], ...]} (an
/// optional "n" must match) or a bare array of rows. Throws ParseError,
/// FileError, InvalidMatrix.
Graph parse_graph_spec(const std::string& spec, bool require_symmetric = true);

/// Square integer matrix from a JSON file in the same layout as file: graph
/// specs, without the adjacency checks. Throws ParseError, FileError, InvalidMatrix.
IntMatrix read_matrix_file(const std::string& path);

/// Integers that fit in int64 become numbers, larger ones strings.
Json to_json(const Integer& x);
Json to_json(std::span<const Integer> v);
Json to_json(const ArithStructure& s);
Json to_json(const StructureSet& set);

/// Header d0..d{n-1},r0..r{n-1}, one structure per line.
std::string to_csv(const StructureSet& set);

}  // namespace arith
