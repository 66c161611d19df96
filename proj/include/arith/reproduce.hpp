#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace arith {

struct TableReport {
    std::string table;
    bool pass = true;
    std::vector<std::string> lines;  // one line per check, prefixed PASS or FAIL
};

/// c3-table, w3-from-c3, w3-167, star-counts, cycle-counts, path-counts,
/// r1-examples, orbit-example.
const std::vector<std::string>& table_ids();

/// ARITH_GOLDEN_DIR when set, otherwise the data/golden directory of the source tree.
std::filesystem::path default_golden_dir();

/// Rows of a golden file: '#' comments and blank lines skipped, fields split
/// on '|' and trimmed. Throws FileError.
std::vector<std::vector<std::string>> read_golden(const std::filesystem::path& file);

/// Recomputes one table and compares it with its golden file. "all" runs every
/// table. Throws UnknownTable.
std::vector<TableReport> reproduce(const std::string& table, const std::filesystem::path& golden_dir);

}  // namespace arith
