#include "arith/io.hpp"

#include <charconv>
#include <fstream>

#include "arith/error.hpp"

namespace arith {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Integer json_integer(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw Error(ErrorKind::ParseError, "matrix entry " + j.dump() + " is not an integer");
}

IntMatrix matrix_from_json(const Json& j) {
    const Json* rows = &j;
    if (j.is_object()) {
        if (!j.contains("rows")) throw Error(ErrorKind::ParseError, "matrix file lacks \"rows\"");
        rows = &j.at("rows");
    }
    if (!rows->is_array() || rows->empty()) throw Error(ErrorKind::InvalidMatrix, "rows must be a non-empty array");
    const std::size_t n = rows->size();
    if (j.is_object() && j.contains("n") && (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != n))
        throw Error(ErrorKind::InvalidMatrix, "\"n\" disagrees with the number of rows");
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = (*rows)[i];
        if (!row.is_array() || row.size() != n)
            throw Error(ErrorKind::InvalidMatrix, "row " + std::to_string(i) + " does not have " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = json_integer(row[k]);
    }
    return m;
}

}  // namespace

Integer parse_integer(std::string_view s) {
    s = trim(s);
    std::string text(s);
    if (!text.empty() && text.front() == '+') text.erase(0, 1);
    Integer x;
    if (text.empty() || x.set_str(text, 10) != 0) throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(s) + "'");
    return x;
}

IntVector parse_int_list(std::string_view s) {
    IntVector out;
    if (trim(s).empty()) throw Error(ErrorKind::ParseError, "empty integer list");
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(parse_integer(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FileError, "cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

Graph parse_graph_spec(const std::string& spec, bool require_symmetric) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "graph spec '" + spec + "' is not family:N or file:PATH");
    const std::string head = spec.substr(0, colon);
    const std::string tail = spec.substr(colon + 1);

    if (head == "file") return make_custom_graph(read_matrix_file(tail), require_symmetric);

    const auto family = parse_family(head);
    if (!family) throw Error(ErrorKind::ParseError, "unknown graph family '" + head + "'");
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty())
        throw Error(ErrorKind::ParseError, "bad vertex count '" + tail + "'");
    try {
        return make_graph(*family, n);
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, spec + ": " + e.detail());
    }
}

Json to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Json to_json(std::span<const Integer> v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const ArithStructure& s) {
    Json j;
    j["d"] = to_json(s.d);
    j["r"] = to_json(s.r);
    return j;
}

Json to_json(const StructureSet& set) {
    Json j;
    j["graph"] = set.graph.spec();
    j["complete"] = set.complete;
    j["r_cap"] = set.r_cap ? Json(*set.r_cap) : Json(nullptr);
    j["count"] = set.size();
    Json list = Json::array();
    for (const auto& s : set.structures) list.push_back(to_json(s));
    j["structures"] = std::move(list);
    return j;
}

std::string to_csv(const StructureSet& set) {
    const std::size_t n = set.graph.order();
    std::string out;
    for (std::size_t i = 0; i < n; ++i) out += "d" + std::to_string(i) + ",";
    for (std::size_t i = 0; i < n; ++i) out += "r" + std::to_string(i) + (i + 1 < n ? "," : "\n");
    for (const auto& s : set.structures) {
        for (const auto& x : s.d) out += x.get_str() + ",";
        for (std::size_t i = 0; i < n; ++i) out += s.r[i].get_str() + (i + 1 < n ? "," : "\n");
    }
    return out;
}

}  // namespace arith
