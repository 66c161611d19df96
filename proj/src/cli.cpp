#include "arith/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "arith/critical.hpp"
#include "arith/enumerate.hpp"
#include "arith/error.hpp"
#include "arith/io.hpp"
#include "arith/mclass.hpp"
#include "arith/reproduce.hpp"
#include "arith/transforms.hpp"
#include "arith/wheel.hpp"

namespace arith {

namespace {

struct Options {
    std::string graph;
    std::string mode = "certified";
    std::int64_t r_cap = kDefaultRCap;
    bool bounded_ok = false;
    bool directed = false;
    std::string format = "json";
    std::string output;
    std::string d, r, p, q, clique, matrix, r0, a;
    std::size_t n = 0;
    std::string kind;
    std::string table;
    std::string golden_dir;
};

Error input_error(const std::string& what) { return Error(ErrorKind::InvalidArgument, what); }

const std::string& need(const std::string& value, const char* flag) {
    if (value.empty()) throw input_error(std::string("missing required flag ") + flag);
    return value;
}

Graph need_graph(const Options& o) { return parse_graph_spec(need(o.graph, "--graph"), !o.directed); }
IntVector need_list(const std::string& v, const char* flag) { return parse_int_list(need(v, flag)); }

std::size_t need_n(const Options& o) {
    if (o.n == 0) throw input_error("missing required flag --n");
    return o.n;
}

ArithStructure need_structure(const Options& o) { return {need_list(o.d, "--d"), need_list(o.r, "--r")}; }

Json structure_on(const std::string& graph, const ArithStructure& s) {
    Json j;
    j["graph"] = graph;
    j["d"] = to_json(s.d);
    j["r"] = to_json(s.r);
    return j;
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
    return rows;
}

Json class_json(const MatrixClass& c) {
    Json j;
    j["z_matrix"] = c.is_z;
    j["m_matrix"] = c.is_m;
    j["almost_nonsingular_m"] = c.is_almost_nonsingular_m;
    j["irreducible"] = c.is_irreducible;
    j["det"] = to_json(c.det);
    if (c.failing_minor) {
        Json idx = Json::array();
        for (auto i : *c.failing_minor) idx.push_back(i);
        j["failing_minor"] = std::move(idx);
    } else {
        j["failing_minor"] = nullptr;
    }
    return j;
}

struct Result {
    std::string text;
    int code = kExitOk;
};

// Objects are indented; arrays of scalars stay on one line.
void render(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(it.key()).dump() + ": ";
            render(it.value(), out, indent + 2);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            render(j[i], out, indent + 2);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
    } else if (j.is_array()) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else {
        out += j.dump();
    }
}

Result json_result(const Json& j, int code = kExitOk) {
    Result res{"", code};
    render(j, res.text, 0);
    res.text += "\n";
    return res;
}

Result cmd_enumerate(const Options& o) {
    const Graph g = need_graph(o);
    StructureSet set;
    if (o.mode == "certified") {
        if (g.tag.family == Family::Custom)
            throw Error(ErrorKind::UnsupportedFamily, "matrix files need --mode bounded --bounded-ok");
        set = enumerate_certified(g.tag.family, g.tag.n);
    } else {
        if (!o.bounded_ok)
            throw input_error("--mode bounded lists only structures with r entries <= r_cap; pass --bounded-ok to accept "
                              "an incomplete result");
        set = enumerate_bounded(g, o.r_cap);
    }
    if (o.format == "csv") return {to_csv(set), kExitOk};
    return json_result(to_json(set));
}

Result cmd_verify(const Options& o) {
    const Graph g = need_graph(o);
    const ArithStructure s = need_structure(o);
    Json j = structure_on(g.spec(), s);
    try {
        require_structure(g.adjacency, s.d, s.r);
        j["valid"] = true;
        return json_result(j);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAStructure) throw;
        j["valid"] = false;
        j["reason"] = e.what();
        return json_result(j, kExitVerificationFailure);
    }
}

Result cmd_classify(const Options& o) {
    const std::size_t n = need_n(o);
    const IntVector d = need_list(o.d, "--d");
    const WheelCase c = classify_wheel_structure(n, d);
    const Graph w = make_graph(Family::Wheel, n);
    const IntVector r = *r_from_d(w.adjacency, d);
    Json j = structure_on(w.spec(), {d, r});
    j["case"] = to_string(c);
    j["unit_d_neighbors"] = check_unit_d_neighbors(w, d);
    return json_result(j, c == WheelCase::Unclassified ? kExitVerificationFailure : kExitOk);
}

Result cmd_classify_matrix(const Options& o) {
    IntMatrix m;
    if (!o.matrix.empty()) {
        m = read_matrix_file(o.matrix);
    } else {
        const Graph g = need_graph(o);
        m = laplacian_like(g.adjacency, need_list(o.d, "--d"));
    }
    Json j = class_json(classify(m));
    if (!o.r.empty()) {
        const auto verdict = verify_thm_positive_kernel(m, parse_int_list(o.r));
        j["kernel_m_matrix"] = verdict.m_matrix;
        j["kernel_almost_nonsingular_iff_irreducible"] = verdict.almost_nonsingular_det0_iff_irreducible;
    }
    return json_result(j);
}

Result cmd_transform(const Options& o) {
    Json j;
    j["transform"] = o.kind;
    if (o.kind == "clique-star") {
        const Graph g = need_graph(o);
        std::vector<std::size_t> c;
        for (const auto& x : need_list(o.clique, "--clique")) {
            if (x < 0 || !x.fits_ulong_p()) throw input_error("clique vertex " + x.get_str() + " out of range");
            c.push_back(x.get_ui());
        }
        std::optional<ArithStructure> s;
        if (!o.d.empty() || !o.r.empty()) s = need_structure(o);
        const auto res = clique_star(g, c, s);
        j["adjacency"] = matrix_json(res.graph.adjacency);
        if (res.structure) {
            j["d"] = to_json(res.structure->d);
            j["r"] = to_json(res.structure->r);
        }
    } else if (o.kind == "blowup") {
        const Graph g = need_graph(o);
        const ArithStructure s = need_structure(o);
        const IntMatrix m = laplacian_like(g.adjacency, s.d);
        const IntVector q = need_list(o.q, "--q");
        const Blowup b = blowup_mq(m, q, s.r);
        IntVector rx = s.r;
        rx.push_back(b.x);
        j["x"] = to_json(b.x);
        j["mq"] = matrix_json(b.mq);
        j["mq_minus"] = matrix_json(b.mq_minus);
        j["kernel"] = to_json(rx);
        j["mq_minus_residue"] = to_json(b.mq_minus * rx);
        j["pq_conjugation"] = pq_conjugation_check(m, q);
    } else if (o.kind == "gen-blowup-m") {
        const Graph g = need_graph(o);
        const ArithStructure s = need_structure(o);
        const auto res = generalized_blowup_m(laplacian_like(g.adjacency, s.d), s.d, s.r, need_list(o.p, "--p"),
                                              need_list(o.q, "--q"));
        j["matrix"] = matrix_json(res.matrix);
        j["d"] = to_json(res.structure.d);
        j["r"] = to_json(res.structure.r);
    } else if (o.kind == "gen-blowup-a") {
        const Graph g = need_graph(o);
        const ArithStructure s = need_structure(o);
        const auto res = generalized_blowup_a(g.adjacency, s.d, s.r, need_list(o.p, "--p"), need_list(o.q, "--q"));
        j["adjacency"] = matrix_json(res.adjacency);
        j["raw"] = res.raw;
        j["d"] = to_json(res.structure.d);
        j["r"] = to_json(res.structure.r);
    } else if (o.kind == "cycle-to-wheel") {
        const ArithStructure s = need_structure(o);
        j.update(structure_on("wheel:" + std::to_string(s.r.size()), cycle_to_wheel_divisor(s.d, s.r)));
    } else if (o.kind == "cycle-to-wheel-lcm") {
        const IntVector r = need_list(o.r, "--r");
        j.update(structure_on("wheel:" + std::to_string(r.size()), cycle_to_wheel_lcm(r, parse_integer(need(o.r0, "--r0")))));
    } else if (o.kind == "cycle-to-wheel-affine") {
        const ArithStructure s = need_structure(o);
        j.update(structure_on("wheel:" + std::to_string(s.r.size()),
                              cycle_to_wheel_affine(s.d, s.r, parse_integer(need(o.a, "--a")))));
    } else if (o.kind == "wheel-extend") {
        const ArithStructure s = need_structure(o);
        j.update(structure_on("wheel:" + std::to_string(s.r.size()), wheel_extend(s.d, s.r)));
    } else if (o.kind == "wheel-unit") {
        const std::size_t n = need_n(o);
        j.update(structure_on("wheel:" + std::to_string(n), wheel_unit_structure(n)));
    }
    return json_result(j);
}

Result cmd_orbit(const Options& o) {
    const std::size_t n = need_n(o);
    const IntVector r = need_list(o.r, "--r");
    Json orbit = Json::array();
    const auto list = zn_orbit(n, r);
    for (const auto& v : list) orbit.push_back(to_json(v));
    Json j;
    j["graph"] = "wheel:" + std::to_string(n);
    j["r"] = to_json(r);
    j["size"] = list.size();
    j["orbit"] = std::move(orbit);
    return json_result(j);
}

Result cmd_critical(const Options& o) {
    const Graph g = need_graph(o);
    const ArithStructure s = need_structure(o);
    const CriticalGroup k = critical_group(g.adjacency, s.d, s.r);
    Json j;
    j["graph"] = g.spec();
    j["factors"] = to_json(k.invariant_factors);
    j["order"] = to_json(k.order);
    return json_result(j);
}

Result cmd_reproduce(const Options& o) {
    const auto dir = o.golden_dir.empty() ? default_golden_dir() : std::filesystem::path(o.golden_dir);
    Result res;
    for (const auto& rep : reproduce(o.table, dir)) {
        for (const auto& line : rep.lines) res.text += rep.table + ": " + line + "\n";
        res.text += rep.table + ": " + (rep.pass ? "PASS" : "FAIL") + "\n";
        if (!rep.pass) res.code = kExitVerificationFailure;
    }
    return res;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Arithmetical structures on graphs", "arith"};
    app.require_subcommand(1);

    auto graph_flag = [&](CLI::App* c) {
        c->add_option("--graph", o.graph, "family:N (path, cycle, star, complete, wheel) or file:PATH");
        c->add_flag("--directed-support", o.directed, "accept a non-symmetric matrix file");
    };
    auto structure_flags = [&](CLI::App* c) {
        c->add_option("--d", o.d, "comma-separated d vector");
        c->add_option("--r", o.r, "comma-separated r vector");
    };
    auto output_flags = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        c->add_option("--output", o.output, "write the result to this file");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list the arithmetical structures of a graph");
    graph_flag(enumerate);
    output_flags(enumerate);
    enumerate->add_option("--mode", o.mode, "certified or bounded")->check(CLI::IsMember({"certified", "bounded"}));
    enumerate->add_option("--r-cap", o.r_cap, "largest r entry searched in bounded mode")->check(CLI::PositiveNumber);
    enumerate->add_flag("--bounded-ok", o.bounded_ok, "accept that a bounded search may miss structures");

    auto* verify = app.add_subcommand("verify", "check a (d, r) pair; exit 2 when it is not a structure");
    graph_flag(verify);
    structure_flags(verify);
    output_flags(verify);

    auto* classify_cmd = app.add_subcommand("classify", "place a wheel structure in the trichotomy");
    classify_cmd->add_option("--n", o.n, "rim size of the wheel");
    structure_flags(classify_cmd);
    output_flags(classify_cmd);

    auto* classify_matrix = app.add_subcommand("classify-matrix", "M-matrix classification of a matrix or of L(G, d)");
    graph_flag(classify_matrix);
    structure_flags(classify_matrix);
    output_flags(classify_matrix);
    classify_matrix->add_option("--matrix", o.matrix, "JSON file with the matrix rows");

    auto* transform = app.add_subcommand("transform", "apply a structure transform");
    transform->add_option("kind", o.kind, "transform name")
        ->required()
        ->check(CLI::IsMember({"clique-star", "blowup", "gen-blowup-m", "gen-blowup-a", "cycle-to-wheel",
                               "cycle-to-wheel-lcm", "cycle-to-wheel-affine", "wheel-extend", "wheel-unit"}));
    graph_flag(transform);
    structure_flags(transform);
    output_flags(transform);
    transform->add_option("--clique", o.clique, "comma-separated clique vertices (0-based)");
    transform->add_option("--p", o.p, "comma-separated p vector");
    transform->add_option("--q", o.q, "comma-separated q vector");
    transform->add_option("--r0", o.r0, "hub value for cycle-to-wheel-lcm");
    transform->add_option("--a", o.a, "constant residue for cycle-to-wheel-affine");
    transform->add_option("--n", o.n, "rim size for wheel-unit");

    auto* orbit = app.add_subcommand("orbit", "orbit of a wheel r-structure under rim rotation");
    orbit->add_option("--n", o.n, "rim size of the wheel");
    orbit->add_option("--r", o.r, "comma-separated r vector, hub first");
    output_flags(orbit);

    auto* critical = app.add_subcommand("critical-group", "invariant factors of Ker(r^T) / Im(diag(d) - A)");
    graph_flag(critical);
    structure_flags(critical);
    output_flags(critical);

    auto* repro = app.add_subcommand("reproduce", "recompute a reference table and compare it with its golden file");
    repro->add_option("table", o.table, "table id or all")->required();
    repro->add_option("--golden-dir", o.golden_dir, "directory holding the golden files");

    std::vector<const char*> argv{"arith"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    Result res;
    try {
        if (o.format == "csv" && !enumerate->parsed())
            throw input_error("--format csv is only available for enumerate");
        if (enumerate->parsed()) res = cmd_enumerate(o);
        else if (verify->parsed()) res = cmd_verify(o);
        else if (classify_cmd->parsed()) res = cmd_classify(o);
        else if (classify_matrix->parsed()) res = cmd_classify_matrix(o);
        else if (transform->parsed()) res = cmd_transform(o);
        else if (orbit->parsed()) res = cmd_orbit(o);
        else if (critical->parsed()) res = cmd_critical(o);
        else res = cmd_reproduce(o);
    } catch (const Error& e) {
        err << "arith: " << e.what() << "\n";
        return kExitInputError;
    }

    if (!o.output.empty()) {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "arith: " << Error(ErrorKind::FileError, "cannot write '" + o.output + "'").what() << "\n";
            return kExitInputError;
        }
        file << res.text;
    } else {
        out << res.text;
    }
    return res.code;
}

}  // namespace arith
