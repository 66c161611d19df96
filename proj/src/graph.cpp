#include "arith/graph.hpp"

#include <vector>

#include "arith/error.hpp"

namespace arith {

std::string to_string(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::Complete: return "complete";
        case Family::Wheel: return "wheel";
        case Family::Custom: return "custom";
    }
    return "custom";
}

std::optional<Family> parse_family(const std::string& name) {
    for (Family f : {Family::Path, Family::Cycle, Family::Star, Family::Complete, Family::Wheel})
        if (to_string(f) == name) return f;
    return std::nullopt;
}

std::string Graph::spec() const {
    if (tag.family == Family::Custom) return "custom:" + std::to_string(order());
    return to_string(tag.family) + ":" + std::to_string(tag.n);
}

namespace {

void connect(IntMatrix& a, std::size_t i, std::size_t j) {
    a(i, j) = 1;
    a(j, i) = 1;
}

std::vector<std::string> numbered_labels(std::size_t first, std::size_t count) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < count; ++i) labels.push_back("v" + std::to_string(first + i));
    return labels;
}

}  // namespace

Graph make_graph(Family family, std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, to_string(family) + " needs n >= 1");
    Graph g;
    g.tag = {family, n};
    switch (family) {
        case Family::Path:
            g.adjacency = IntMatrix(n);
            for (std::size_t i = 0; i + 1 < n; ++i) connect(g.adjacency, i, i + 1);
            g.labels = numbered_labels(1, n);
            break;
        case Family::Cycle:
            if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs n >= 3");
            g.adjacency = IntMatrix(n);
            for (std::size_t i = 0; i < n; ++i) connect(g.adjacency, i, (i + 1) % n);
            g.labels = numbered_labels(1, n);
            break;
        case Family::Star:
            g.adjacency = IntMatrix(n + 1);
            for (std::size_t i = 1; i <= n; ++i) connect(g.adjacency, 0, i);
            g.labels = numbered_labels(0, n + 1);
            break;
        case Family::Complete:
            g.adjacency = IntMatrix(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) connect(g.adjacency, i, j);
            g.labels = numbered_labels(1, n);
            break;
        case Family::Wheel:
            if (n < 3) throw Error(ErrorKind::InvalidArgument, "wheel needs n >= 3");
            g.adjacency = IntMatrix(n + 1);
            for (std::size_t i = 1; i <= n; ++i) {
                connect(g.adjacency, 0, i);
                connect(g.adjacency, i, i % n + 1);
            }
            g.labels = numbered_labels(0, n + 1);
            break;
        case Family::Custom:
            throw Error(ErrorKind::InvalidArgument, "custom graphs are built with make_custom_graph");
    }
    return g;
}

void validate_generalized_graph(const IntMatrix& a) {
    if (!a.is_square() || a.size() == 0)
        throw Error(ErrorKind::InvalidGeneralizedGraph, "matrix must be square and non-empty");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a(i, i)) != 0)
            throw Error(ErrorKind::InvalidGeneralizedGraph, "diagonal entry " + std::to_string(i) + " is non-zero");
        for (std::size_t j = 0; j < a.size(); ++j)
            if (sgn(a(i, j)) < 0)
                throw Error(ErrorKind::InvalidGeneralizedGraph,
                            "negative entry at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
}

Graph make_custom_graph(IntMatrix adjacency, bool require_symmetric) {
    try {
        validate_generalized_graph(adjacency);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidMatrix, e.detail());
    }
    if (require_symmetric && !adjacency.is_symmetric())
        throw Error(ErrorKind::InvalidMatrix, "adjacency matrix is not symmetric");
    Graph g;
    g.tag = {Family::Custom, adjacency.size()};
    g.labels = numbered_labels(0, adjacency.size());
    g.adjacency = std::move(adjacency);
    return g;
}

IntMatrix laplacian_like(const IntMatrix& adjacency, std::span<const Integer> d) {
    if (!adjacency.is_square() || adjacency.size() != d.size())
        throw Error(ErrorKind::DimensionMismatch,
                    "d has length " + std::to_string(d.size()) + " but the matrix has order " +
                        std::to_string(adjacency.rows()));
    IntMatrix l(adjacency.size());
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < l.size(); ++j) l(i, j) = -adjacency(i, j);
    for (std::size_t i = 0; i < l.size(); ++i) l(i, i) += d[i];
    return l;
}

IntVector degree_vector(const IntMatrix& adjacency) {
    IntVector deg(adjacency.rows(), Integer(0));
    for (std::size_t i = 0; i < adjacency.rows(); ++i)
        for (std::size_t j = 0; j < adjacency.cols(); ++j) deg[i] += adjacency(i, j);
    return deg;
}

namespace {

std::size_t reach_count(const IntMatrix& m, bool reverse) {
    const std::size_t n = m.size();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            if (seen[v] || v == u) continue;
            const Integer& e = reverse ? m(v, u) : m(u, v);
            if (sgn(e) == 0) continue;
            seen[v] = 1;
            ++count;
            stack.push_back(v);
        }
    }
    return count;
}

}  // namespace

bool is_irreducible(const IntMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "irreducibility needs a square matrix");
    if (m.size() <= 1) return true;
    return reach_count(m, false) == m.size() && reach_count(m, true) == m.size();
}

bool in_generalized_class(const IntMatrix& adjacency) {
    validate_generalized_graph(adjacency);
    return adjacency.size() >= 2 && is_irreducible(adjacency);
}

}  // namespace arith
