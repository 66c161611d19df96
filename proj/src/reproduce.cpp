#include "arith/reproduce.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "arith/enumerate.hpp"
#include "arith/error.hpp"
#include "arith/io.hpp"
#include "arith/transforms.hpp"

#ifndef ARITH_GOLDEN_DIR
#define ARITH_GOLDEN_DIR "data/golden"
#endif

namespace arith {

const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids{"c3-table",    "w3-from-c3",  "w3-167",      "star-counts",
                                              "cycle-counts", "path-counts", "r1-examples", "orbit-example"};
    return ids;
}

std::filesystem::path default_golden_dir() {
    if (const char* env = std::getenv("ARITH_GOLDEN_DIR"); env && *env) return env;
    return ARITH_GOLDEN_DIR;
}

std::vector<std::vector<std::string>> read_golden(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::FileError, "cannot open golden file " + file.string());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '|')) {
            const auto b = f.find_first_not_of(" \t\r");
            const auto e = f.find_last_not_of(" \t\r");
            fields.push_back(b == std::string::npos ? "" : f.substr(b, e - b + 1));
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

namespace {

class Reporter {
public:
    explicit Reporter(std::string table) { report_.table = std::move(table); }

    void check(bool ok, const std::string& what) {
        report_.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
        if (!ok) report_.pass = false;
    }

    TableReport take() { return std::move(report_); }

private:
    TableReport report_;
};

std::size_t to_size(const std::string& s) { return parse_integer(s).get_ui(); }

void require_fields(const std::vector<std::string>& row, std::size_t n, const std::string& table) {
    if (row.size() != n)
        throw Error(ErrorKind::ParseError, table + " golden row has " + std::to_string(row.size()) + " fields, expected " +
                                               std::to_string(n));
}

// Distinct (pi d, pi r) over all vertex permutations pi.
std::set<ArithStructure> full_orbit(const ArithStructure& s) {
    std::vector<std::size_t> perm(s.d.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<ArithStructure> orbit;
    do {
        ArithStructure t;
        for (std::size_t i : perm) {
            t.d.push_back(s.d[i]);
            t.r.push_back(s.r[i]);
        }
        orbit.insert(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return orbit;
}

IntVector sorted(IntVector v) {
    std::sort(v.begin(), v.end());
    return v;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

std::string count_line(const std::string& what, const Integer& got, const Integer& want) {
    return what + ": computed " + got.get_str() + ", expected " + want.get_str();
}

TableReport c3_table(const std::filesystem::path& dir) {
    Reporter rep("c3-table");
    const auto rows = read_golden(dir / "c3-table.txt");
    const auto set = enumerate_certified(Family::Cycle, 3);
    std::map<IntVector, std::size_t> classes;
    for (const auto& s : set.structures) ++classes[sorted(s.d)];
    std::size_t total = 0;
    for (const auto& row : rows) {
        require_fields(row, 3, "c3-table");
        const ArithStructure s{parse_int_list(row[0]), parse_int_list(row[1])};
        const std::size_t want = to_size(row[2]);
        total += want;
        rep.check(set.contains(s), "(" + row[0] + "), (" + row[1] + ") is a structure on C3");
        const auto it = classes.find(sorted(s.d));
        const std::size_t got = it == classes.end() ? 0 : it->second;
        rep.check(got == want, count_line("class of d = (" + row[0] + ")", got, want));
    }
    rep.check(classes.size() == rows.size(), count_line("number of d-classes", classes.size(), rows.size()));
    rep.check(set.size() == total, count_line("structures on C3", set.size(), total));
    return rep.take();
}

TableReport w3_from_c3(const std::filesystem::path& dir) {
    Reporter rep("w3-from-c3");
    const auto rows = read_golden(dir / "w3-from-c3.txt");
    const auto w3 = enumerate_certified(Family::Wheel, 3);
    for (const auto& row : rows) {
        require_fields(row, 5, "w3-from-c3");
        const ArithStructure want{parse_int_list(row[2]), parse_int_list(row[3])};
        const auto got = cycle_to_wheel_divisor(parse_int_list(row[0]), parse_int_list(row[1]));
        rep.check(got == want, "C3 (" + row[0] + "), (" + row[1] + ") maps to (" + to_string(got.d) + ", " +
                                   to_string(got.r) + "), expected ((" + row[2] + "), (" + row[3] + "))");
        rep.check(w3.contains(got), "image lies in the W3 set");
        const auto orbit = full_orbit(want);
        rep.check(orbit.size() == to_size(row[4]), count_line("permutation class size", orbit.size(), to_size(row[4])));
    }
    return rep.take();
}

TableReport w3_167(const std::filesystem::path& dir) {
    Reporter rep("w3-167");
    const auto rows = read_golden(dir / "w3-167.txt");
    const auto w3 = enumerate_certified(Family::Wheel, 3);
    std::set<ArithStructure> listed;
    std::size_t declared_total = 0, upper = 0, orbit_sum = 0;
    for (const auto& row : rows) {
        if (row.size() == 2 && row[0] == "total") {
            declared_total = to_size(row[1]);
            continue;
        }
        if (row.size() == 2 && row[0] == "upper") {
            upper = to_size(row[1]);
            continue;
        }
        require_fields(row, 3, "w3-167");
        const ArithStructure s{parse_int_list(row[0]), parse_int_list(row[1])};
        const auto orbit = full_orbit(s);
        orbit_sum += to_size(row[2]);
        rep.check(orbit.size() == to_size(row[2]),
                  count_line("orbit of (" + row[0] + "), (" + row[1] + ")", orbit.size(), to_size(row[2])));
        const bool inside = std::all_of(orbit.begin(), orbit.end(), [&](const auto& t) { return w3.contains(t); });
        rep.check(inside, "every permutation of (" + row[0] + "), (" + row[1] + ") lies in the W3 set");
        const std::size_t before = listed.size();
        listed.insert(orbit.begin(), orbit.end());
        rep.check(listed.size() == before + orbit.size(), "orbit of (" + row[0] + ") is disjoint from earlier rows");
    }
    rep.check(orbit_sum == declared_total, count_line("sum of orbit sizes", orbit_sum, declared_total));
    rep.check(listed.size() == declared_total, count_line("distinct listed structures", listed.size(), declared_total));
    const std::size_t star4 = enumerate_certified(Family::Star, 4).size();
    rep.check(star4 == upper, count_line("structures on S4 (upper bound)", star4, upper));
    rep.check(declared_total <= w3.size() && w3.size() <= upper,
              "bracket " + std::to_string(declared_total) + " <= |A(W3)| = " + std::to_string(w3.size()) +
                  " <= " + std::to_string(upper));
    const auto bounded = enumerate_bounded(w3.graph, kDefaultRCap);
    rep.check(bounded.structures == w3.structures,
              count_line("bounded search at r_cap " + std::to_string(kDefaultRCap), bounded.size(), w3.size()));
    return rep.take();
}

TableReport star_counts(const std::filesystem::path& dir) {
    Reporter rep("star-counts");
    for (const auto& row : read_golden(dir / "star-counts.txt")) {
        require_fields(row, 2, "star-counts");
        const std::size_t n = to_size(row[0]);
        const Integer want = parse_integer(row[1]);
        rep.check(star_structure_count(n) == want, count_line("S" + row[0] + " count", star_structure_count(n), want));
        if (n <= 4) {
            const std::size_t got = enumerate_certified(Family::Star, n).size();
            rep.check(got == want, count_line("S" + row[0] + " enumerated", got, want));
        }
    }
    return rep.take();
}

TableReport cycle_counts(const std::filesystem::path& dir) {
    Reporter rep("cycle-counts");
    for (const auto& row : read_golden(dir / "cycle-counts.txt")) {
        require_fields(row, 2, "cycle-counts");
        const std::size_t n = to_size(row[0]);
        const Integer want = parse_integer(row[1]);
        const auto set = enumerate_certified(Family::Cycle, n);
        rep.check(set.size() == want, count_line("C" + row[0] + " count", set.size(), want));
        rep.check(binomial(2 * n - 1, n - 1) == want, count_line("binom(2n-1, n-1)", binomial(2 * n - 1, n - 1), want));
        const auto hist = r1_histogram(set);
        for (std::size_t k = 1; k <= n; ++k) {
            const auto it = hist.find(k);
            const Integer got = it == hist.end() ? 0 : it->second;
            const Integer expect = binomial(2 * n - k - 1, n - k);
            rep.check(got == expect, count_line("C" + row[0] + " with " + std::to_string(k) + " unit entries", got, expect));
        }
    }
    return rep.take();
}

TableReport path_counts(const std::filesystem::path& dir) {
    Reporter rep("path-counts");
    for (const auto& row : read_golden(dir / "path-counts.txt")) {
        require_fields(row, 2, "path-counts");
        const std::size_t n = to_size(row[0]);
        const Integer want = parse_integer(row[1]);
        const auto set = enumerate_certified(Family::Path, n);
        rep.check(set.size() == want, count_line("P" + row[0] + " count", set.size(), want));
        const Integer catalan = binomial(2 * (n - 1), n - 1) / Integer(static_cast<unsigned long>(n));
        rep.check(catalan == want, count_line("Catalan(n-1)", catalan, want));
    }
    return rep.take();
}

TableReport r1_examples(const std::filesystem::path& dir) {
    Reporter rep("r1-examples");
    const auto w3 = enumerate_certified(Family::Wheel, 3);
    for (const auto& row : read_golden(dir / "r1-examples.txt")) {
        require_fields(row, 2, "r1-examples");
        const std::size_t n = to_size(row[0]);
        const IntVector r = parse_int_list(row[1]);
        const Graph w = make_graph(Family::Wheel, n);
        const auto d = r.size() == w.order() ? d_from_r(w.adjacency, r) : std::nullopt;
        rep.check(d.has_value(), "(" + row[1] + ") is an r-structure on W" + row[0] +
                                     (d ? " with d = " + to_string(*d) : std::string()));
        if (d && n == 3) rep.check(w3.contains({*d, r}), "(" + row[1] + ") lies in the W3 set");
    }
    return rep.take();
}

TableReport orbit_example(const std::filesystem::path& dir) {
    Reporter rep("orbit-example");
    for (const auto& row : read_golden(dir / "orbit-example.txt")) {
        require_fields(row, 3, "orbit-example");
        const std::size_t n = to_size(row[0]);
        std::vector<IntVector> want;
        std::stringstream ss(row[2]);
        std::string item;
        while (std::getline(ss, item, ';')) want.push_back(parse_int_list(item));
        const auto got = zn_orbit(n, parse_int_list(row[1]));
        std::string shown;
        for (const auto& v : got) shown += (shown.empty() ? "" : " ") + to_string(v);
        rep.check(std::set<IntVector>(got.begin(), got.end()) == std::set<IntVector>(want.begin(), want.end()),
                  "orbit of (" + row[1] + ") on W" + row[0] + " is " + shown);
        rep.check(n % got.size() == 0, "orbit size " + std::to_string(got.size()) + " divides " + row[0]);
    }
    return rep.take();
}

}  // namespace

std::vector<TableReport> reproduce(const std::string& table, const std::filesystem::path& golden_dir) {
    using Fn = TableReport (*)(const std::filesystem::path&);
    static const std::map<std::string, Fn> tables{
        {"c3-table", c3_table},       {"w3-from-c3", w3_from_c3},   {"w3-167", w3_167},
        {"star-counts", star_counts}, {"cycle-counts", cycle_counts}, {"path-counts", path_counts},
        {"r1-examples", r1_examples}, {"orbit-example", orbit_example}};
    std::vector<TableReport> out;
    if (table == "all") {
        for (const auto& id : table_ids()) out.push_back(tables.at(id)(golden_dir));
        return out;
    }
    const auto it = tables.find(table);
    if (it == tables.end()) throw Error(ErrorKind::UnknownTable, "'" + table + "'");
    out.push_back(it->second(golden_dir));
    return out;
}

}  // namespace arith
