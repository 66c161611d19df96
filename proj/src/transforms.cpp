#include "arith/transforms.hpp"

#include <algorithm>

#include "arith/error.hpp"

namespace arith {

namespace {

void require_len(std::span<const Integer> v, std::size_t n, const char* name) {
    if (v.size() != n)
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(name) + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
}

void require_kernel(const IntMatrix& m, std::span<const Integer> r) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    require_len(r, m.size(), "r");
    const IntVector mr = m * r;
    if (std::any_of(mr.begin(), mr.end(), [](const Integer& x) { return x != 0; }))
        throw Error(ErrorKind::KernelMismatch, "M r = " + to_string(mr));
}

void require_positive_pq(std::span<const Integer> p, std::span<const Integer> q, std::size_t n) {
    require_len(p, n, "p");
    require_len(q, n, "q");
    if (!all_positive(p) || !all_positive(q))
        throw Error(ErrorKind::NonPositivePQ, "p = " + to_string(p) + ", q = " + to_string(q));
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool divides(const Integer& a, const Integer& b) {
    return a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t());
}

IntVector prepend(const Integer& head, std::span<const Integer> tail) {
    IntVector v;
    v.reserve(tail.size() + 1);
    v.push_back(head);
    v.insert(v.end(), tail.begin(), tail.end());
    return v;
}

const IntMatrix& cycle_adjacency(std::size_t n) {
    thread_local std::vector<IntMatrix> cache;
    if (cache.size() <= n) cache.resize(n + 1);
    if (cache[n].size() == 0) cache[n] = make_graph(Family::Cycle, n).adjacency;
    return cache[n];
}

ArithStructure on_wheel(std::size_t n, IntVector d, IntVector r) {
    require_structure(make_graph(Family::Wheel, n).adjacency, d, r);
    return {std::move(d), std::move(r)};
}

}  // namespace

// ---------------------------------------------------------------------------

CliqueStar clique_star(const Graph& graph, std::span<const std::size_t> clique,
                       const std::optional<ArithStructure>& structure) {
    const std::size_t n = graph.order();
    if (clique.empty()) throw Error(ErrorKind::NotAClique, "empty vertex set");
    std::vector<std::size_t> c(clique.begin(), clique.end());
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
        throw Error(ErrorKind::NotAClique, "repeated vertex");
    if (c.back() >= n) throw Error(ErrorKind::NotAClique, "vertex " + std::to_string(c.back()) + " out of range");
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (graph.adjacency(c[i], c[j]) < 1 || graph.adjacency(c[j], c[i]) < 1)
                throw Error(ErrorKind::NotAClique,
                            graph.labels.at(c[i]) + " and " + graph.labels.at(c[j]) + " are not adjacent");

    CliqueStar out;
    IntMatrix& a = out.graph.adjacency;
    a = IntMatrix(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = graph.adjacency(i, j);
    for (std::size_t i : c) {
        for (std::size_t j : c)
            if (i != j) a(i, j) -= 1;
        a(i, n) = 1;
        a(n, i) = 1;
    }
    out.graph.tag = {Family::Custom, n + 1};
    out.graph.labels = graph.labels;
    out.graph.labels.push_back("v" + std::to_string(n));

    if (structure) {
        require_structure(graph.adjacency, structure->d, structure->r);
        ArithStructure s = *structure;
        Integer rv = 0;
        for (std::size_t i : c) {
            s.d[i] += 1;
            rv += s.r[i];
        }
        s.d.emplace_back(1);
        s.r.push_back(rv);
        require_structure(a, s.d, s.r);
        out.structure = std::move(s);
    }
    return out;
}

// ---------------------------------------------------------------------------

BlowupSpec make_blowup_spec(std::span<const Integer> p, std::span<const Integer> q, std::span<const Integer> r) {
    require_len(p, q.size(), "p");
    require_len(r, q.size(), "r");
    return {IntVector(p.begin(), p.end()), IntVector(q.begin(), q.end()), gcd_of(q), dot(q, r)};
}

IntMatrix blowup_matrix(const IntMatrix& m, std::span<const Integer> q) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    require_len(q, m.size(), "q");
    IntVector neg_q(q.begin(), q.end());
    for (auto& x : neg_q) x = -x;
    return block(m + outer(q, q), column_matrix(neg_q), row_matrix(neg_q), IntMatrix{{1}});
}

Blowup blowup_mq(const IntMatrix& m, std::span<const Integer> q, std::span<const Integer> r) {
    require_kernel(m, r);
    require_len(q, m.size(), "q");
    Blowup b;
    b.x = dot(q, r);
    if (b.x == 0) throw Error(ErrorKind::ZeroX, "sum q_i r_i = 0");
    b.mq = blowup_matrix(m, q);
    b.mq_minus = block(m - outer(q, q), column_matrix(q), row_matrix(q), IntMatrix{{1}});
    IntVector rx(r.begin(), r.end());
    rx.push_back(b.x);
    require_kernel(b.mq, rx);
    return b;
}

bool pq_conjugation_check(const IntMatrix& m, std::span<const Integer> q) {
    const std::size_t n = m.size();
    const IntMatrix mq = blowup_matrix(m, q);
    IntMatrix p = IntMatrix::identity(n + 1);
    IntMatrix qm = IntMatrix::identity(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        p(i, n) = q[i];
        qm(n, i) = q[i];
    }
    return p * mq * qm == block(m, IntMatrix(n, 1), IntMatrix(1, n), IntMatrix{{1}});
}

MatrixBlowup generalized_blowup_m(const IntMatrix& m, std::span<const Integer> d, std::span<const Integer> r,
                                  std::span<const Integer> p, std::span<const Integer> q) {
    require_kernel(m, r);
    const std::size_t n = m.size();
    require_len(d, n, "d");
    require_positive_pq(p, q, n);
    IntVector neg_p(p.begin(), p.end()), neg_q(q.begin(), q.end());
    for (auto& x : neg_p) x = -x;
    for (auto& x : neg_q) x = -x;

    MatrixBlowup out;
    out.matrix = block(IntMatrix{{1}}, row_matrix(neg_q), column_matrix(neg_p), outer(p, q) + m);
    out.structure.d.emplace_back(1);
    out.structure.r.push_back(dot(r, q));
    for (std::size_t i = 0; i < n; ++i) {
        out.structure.d.push_back(d[i] + p[i] * q[i]);
        out.structure.r.push_back(r[i]);
    }
    require_kernel(out.matrix, out.structure.r);
    return out;
}

GeneralizedBlowup generalized_blowup_a(const IntMatrix& adjacency, std::span<const Integer> d,
                                       std::span<const Integer> r, std::span<const Integer> p,
                                       std::span<const Integer> q) {
    const std::size_t n = adjacency.size();
    require_len(d, n, "d");
    require_kernel(laplacian_like(adjacency, d), r);
    require_positive_pq(p, q, n);
    const Integer g = gcd_of(q);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!divides(g, p[i] * q[j]))
                throw Error(ErrorKind::IntegralityViolation, "g = " + g.get_str() + " does not divide p" +
                                                                 std::to_string(i) + " q" + std::to_string(j));

    GeneralizedBlowup out;
    IntMatrix& a = out.adjacency;
    a = IntMatrix(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        a(0, i + 1) = q[i];
        a(i + 1, 0) = p[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            a(i + 1, j + 1) = adjacency(i, j) - p[i] * q[j] / g;
            if (a(i + 1, j + 1) < 0) out.raw = true;
        }
    }
    out.structure.d.push_back(g);
    out.structure.r.push_back(dot(r, q) / g);
    for (std::size_t i = 0; i < n; ++i) {
        out.structure.d.push_back(d[i] + p[i] * q[i] / g);
        out.structure.r.push_back(r[i]);
    }
    require_kernel(laplacian_like(a, out.structure.d), out.structure.r);
    return out;
}

// ---------------------------------------------------------------------------

ArithStructure cycle_to_wheel_divisor(std::span<const Integer> d, std::span<const Integer> r) {
    const std::size_t n = r.size();
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs n >= 3");
    require_structure(cycle_adjacency(n), d, r);
    const Integer s = sum_of(r);
    IntVector wd{Integer(1)};
    for (std::size_t i = 0; i < n; ++i) {
        if (!divides(r[i], s))
            throw Error(ErrorKind::DivisibilityViolation,
                        "r" + std::to_string(i + 1) + " = " + r[i].get_str() + " does not divide " + s.get_str());
        wd.push_back(d[i] + s / r[i]);
    }
    return on_wheel(n, std::move(wd), prepend(s, r));
}

ArithStructure cycle_to_wheel_lcm(std::span<const Integer> r, const Integer& r0) {
    const std::size_t n = r.size();
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs n >= 3");
    const auto d = d_from_r(cycle_adjacency(n), r);
    if (!d) throw Error(ErrorKind::NotAStructure, to_string(r) + " is not an r-structure on cycle:" + std::to_string(n));
    const Integer l = lcm_of(r);
    const Integer s = sum_of(r);
    if (!divides(l, r0))
        throw Error(ErrorKind::PreconditionViolation, "lcm " + l.get_str() + " does not divide r0 = " + r0.get_str());
    if (!divides(r0, s))
        throw Error(ErrorKind::PreconditionViolation, "r0 = " + r0.get_str() + " does not divide " + s.get_str());
    IntVector wd{s / r0};
    for (std::size_t i = 0; i < n; ++i) wd.push_back((*d)[i] + r0 / r[i]);
    return on_wheel(n, std::move(wd), prepend(r0, r));
}

std::vector<Integer> cycle_to_wheel_lcm_hubs(std::span<const Integer> r) {
    std::vector<Integer> hubs;
    if (r.empty() || !all_positive(r)) return hubs;
    const Integer l = lcm_of(r);
    const Integer s = sum_of(r);
    if (!divides(l, s)) return hubs;
    // r0 = l k with k dividing s / l.
    const Integer m = s / l;
    for (Integer k = 1; k * k <= m; ++k) {
        if (!divides(k, m)) continue;
        hubs.push_back(l * k);
        if (k * k != m) hubs.push_back(l * (m / k));
    }
    std::sort(hubs.begin(), hubs.end());
    return hubs;
}

ArithStructure cycle_to_wheel_affine(std::span<const Integer> d, std::span<const Integer> r, const Integer& a) {
    const std::size_t n = r.size();
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs n >= 3");
    require_len(d, n, "d");
    if (!all_positive(d) || !all_positive(r))
        throw Error(ErrorKind::InvalidArgument, "d and r must be positive");
    const IntVector res = laplacian_like(cycle_adjacency(n), d) * r;
    for (const auto& x : res)
        if (x != res.front())
            throw Error(ErrorKind::AffineResidueNotConstant, "L r = " + to_string(res));
    if (res.front() != a)
        throw Error(ErrorKind::AffineResidueNotConstant,
                    "L r = " + res.front().get_str() + " * 1, not " + a.get_str() + " * 1");
    const Integer s = sum_of(r);
    if (a <= 0 || !divides(a, s))
        throw Error(ErrorKind::DivisibilityViolation, "a = " + a.get_str() + " must be positive and divide " + s.get_str());
    IntVector wr = prepend(a, r);
    const Integer g = gcd_of(wr);
    for (auto& x : wr) x /= g;
    return on_wheel(n, prepend(s / a, d), std::move(wr));
}

// ---------------------------------------------------------------------------

ArithStructure wheel_unit_structure(std::size_t n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "wheel needs n >= 3");
    const Integer nn(static_cast<unsigned long>(n));
    IntVector d(n + 1, nn + 2), r(n + 1, Integer(1));
    d[0] = 1;
    r[0] = nn;
    return on_wheel(n, std::move(d), std::move(r));
}

ArithStructure wheel_extend(std::span<const Integer> d, std::span<const Integer> r) {
    if (r.size() < 4) throw Error(ErrorKind::InvalidArgument, "a wheel needs at least four vertices");
    const std::size_t n = r.size() - 1;
    require_len(d, n + 1, "d");
    require_structure(make_graph(Family::Wheel, n).adjacency, d, r);
    const Integer &r0 = r[0], &r1 = r[1], &rn = r[n];
    if (!divides(r0, r1 + rn))
        throw Error(ErrorKind::PreconditionViolation, "r0 does not divide r1 + rn");
    if (!divides(r1, r0)) throw Error(ErrorKind::PreconditionViolation, "r1 does not divide r0");
    if (!divides(rn, r0)) throw Error(ErrorKind::PreconditionViolation, "rn does not divide r0");

    IntVector nd(d.begin(), d.end()), nr(r.begin(), r.end());
    const Integer added = r1 + rn + r0;
    nd[0] += added / r0;
    nd[1] += (r1 + r0) / r1;
    nd[n] += (rn + r0) / rn;
    nd.emplace_back(1);
    nr.push_back(added);
    return on_wheel(n + 1, std::move(nd), std::move(nr));
}

IntVector zn_rotate(std::span<const Integer> r, std::size_t c) {
    const std::size_t n = r.size() - 1;
    IntVector out{r[0]};
    for (std::size_t i = 1; i <= n; ++i) out.push_back(r[(c + i - 1) % n + 1]);
    return out;
}

std::vector<IntVector> zn_orbit(std::size_t n, std::span<const Integer> r) {
    require_len(r, n + 1, "r");
    if (!d_from_r(make_graph(Family::Wheel, n).adjacency, r))
        throw Error(ErrorKind::NotAStructure, to_string(r) + " is not an r-structure on wheel:" + std::to_string(n));
    std::vector<IntVector> orbit;
    for (std::size_t c = 0; c < n; ++c) {
        IntVector v = zn_rotate(r, c);
        if (std::find(orbit.begin(), orbit.end(), v) == orbit.end()) orbit.push_back(std::move(v));
    }
    return orbit;
}

}  // namespace arith
