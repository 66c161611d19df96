#include "arith/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

#include "arith/error.hpp"

namespace arith {

unsigned worker_count() {
    if (const char* env = std::getenv("ARITH_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// ---------------------------------------------------------------------------
// Stars

namespace {

using Rational = mpq_class;

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Nondecreasing d[pos..] with sum of 1/d equal to `rem`. Since d is
// nondecreasing the next term satisfies 1/d <= rem <= m/d.
template <class F>
void egyptian_tails(std::size_t pos, const Integer& lo, const Rational& rem, IntVector& prefix, F& emit) {
    const std::size_t m = prefix.size() - pos;
    const Integer& num = rem.get_num();
    const Integer& den = rem.get_den();
    if (m == 1) {
        if (num == 1 && den >= lo) {
            prefix[pos] = den;
            emit(prefix);
        }
        return;
    }
    Integer first = std::max(lo, ceil_div(den, num));
    const Integer last = floor_div(Integer(static_cast<unsigned long>(m)) * den, num);
    for (Integer d = first; d <= last; ++d) {
        Rational next = rem - Rational(1, d);
        next.canonicalize();
        if (sgn(next) <= 0) continue;
        prefix[pos] = d;
        egyptian_tails(pos + 1, d, next, prefix, emit);
    }
}

template <class F>
void for_each_sorted_star(std::size_t leaves, F&& emit) {
    for (std::size_t hub = 1; hub <= leaves; ++hub) {
        IntVector prefix(leaves);
        auto tagged = [&](const IntVector& tuple) { emit(hub, tuple); };
        egyptian_tails(0, Integer(1), Rational(static_cast<unsigned long>(hub)), prefix, tagged);
    }
}

}  // namespace

std::vector<ArithStructure> star_structures(std::size_t leaves) {
    if (leaves < 1) throw Error(ErrorKind::InvalidArgument, "a star needs at least one leaf");
    std::vector<ArithStructure> out;
    for_each_sorted_star(leaves, [&](std::size_t hub, IntVector tuple) {
        // gcd(r0 / d_i) = r0 / lcm(d_i) = 1, so every r built this way is primitive.
        const Integer r0 = lcm_of(tuple);
        do {
            ArithStructure s;
            s.d.reserve(leaves + 1);
            s.r.reserve(leaves + 1);
            s.d.emplace_back(static_cast<unsigned long>(hub));
            s.r.push_back(r0);
            for (const auto& di : tuple) {
                s.d.push_back(di);
                s.r.push_back(r0 / di);
            }
            out.push_back(std::move(s));
        } while (std::next_permutation(tuple.begin(), tuple.end()));
    });
    canonicalize(out);
    return out;
}

Integer star_structure_count(std::size_t leaves) {
    if (leaves < 1) throw Error(ErrorKind::InvalidArgument, "a star needs at least one leaf");
    Integer total = 0;
    Integer full;
    mpz_fac_ui(full.get_mpz_t(), leaves);
    for_each_sorted_star(leaves, [&](std::size_t, const IntVector& tuple) {
        // Distinct orderings of a sorted tuple: leaves! / prod(multiplicity!).
        Integer perms = full;
        for (std::size_t i = 0; i < tuple.size();) {
            std::size_t j = i;
            while (j < tuple.size() && tuple[j] == tuple[i]) ++j;
            Integer f;
            mpz_fac_ui(f.get_mpz_t(), j - i);
            perms /= f;
            i = j;
        }
        total += perms;
    });
    return total;
}

// ---------------------------------------------------------------------------
// Paths and cycles

namespace {

using Small = std::vector<std::int64_t>;

ArithStructure complete_small(const IntMatrix& adjacency, const Small& r) {
    IntVector rv(r.begin(), r.end());
    auto d = d_from_r(adjacency, rv);
    if (!d) throw Error(ErrorKind::NotAStructure, "subdivision produced " + to_string(rv));
    return {std::move(*d), std::move(rv)};
}

std::vector<ArithStructure> complete_all(const IntMatrix& adjacency, const std::set<Small>& rs) {
    std::vector<ArithStructure> out;
    out.reserve(rs.size());
    for (const auto& r : rs) out.push_back(complete_small(adjacency, r));
    canonicalize(out);
    return out;
}

}  // namespace

std::vector<ArithStructure> path_structures(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "path needs n >= 1");
    // A single vertex has d r = 0 for every r: no structure.
    if (n == 1) return {};
    std::set<Small> level{Small{1, 1}};
    for (std::size_t k = 3; k <= n; ++k) {
        std::set<Small> next{Small(k, 1)};
        for (const auto& s : level)
            for (std::size_t i = 0; i + 1 < s.size(); ++i) {
                Small t = s;
                t.insert(t.begin() + static_cast<std::ptrdiff_t>(i + 1), s[i] + s[i + 1]);
                next.insert(std::move(t));
            }
        level = std::move(next);
    }
    return complete_all(make_graph(Family::Path, n).adjacency, level);
}

std::vector<ArithStructure> cycle_structures(std::size_t n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs n >= 3");
    // The doubled edge (a 2-cycle) carries d1 d2 = 4.
    std::set<Small> level{Small{1, 1}, Small{1, 2}, Small{2, 1}};
    for (std::size_t k = 3; k <= n; ++k) {
        std::set<Small> next{Small(k, 1)};
        for (const auto& s : level) {
            const std::size_t m = s.size();
            for (std::size_t g = 0; g < m; ++g) {
                const std::int64_t v = s[g] + s[(g + 1) % m];
                Small t = s;
                t.insert(t.begin() + static_cast<std::ptrdiff_t>(g + 1), v);
                next.insert(std::move(t));
                if (g + 1 == m) {
                    Small f = s;
                    f.insert(f.begin(), v);
                    next.insert(std::move(f));
                }
            }
        }
        level = std::move(next);
    }
    return complete_all(make_graph(Family::Cycle, n).adjacency, level);
}

std::vector<ArithStructure> wheel3_structures() {
    std::vector<ArithStructure> out;
    for (const auto& s : star_structures(4)) {
        if (s.d[0] != 1) continue;
        ArithStructure w;
        for (std::size_t i = 1; i <= 4; ++i) {
            w.d.push_back(s.d[i] - 1);
            w.r.push_back(s.r[i]);
        }
        out.push_back(std::move(w));
    }
    canonicalize(out);
    return out;
}

StructureSet enumerate_certified(Family family, std::size_t n) {
    StructureSet set;
    set.complete = true;
    auto bound = [&](std::size_t hi) {
        if (n > hi)
            throw Error(ErrorKind::InvalidArgument,
                        to_string(family) + ":" + std::to_string(n) + " exceeds the certified bound " + std::to_string(hi));
    };
    switch (family) {
        case Family::Path:
            bound(kMaxCertifiedPathCycle);
            set.graph = make_graph(family, n);
            set.structures = path_structures(n);
            break;
        case Family::Cycle:
            bound(kMaxCertifiedPathCycle);
            set.graph = make_graph(family, n);
            set.structures = cycle_structures(n);
            break;
        case Family::Star:
            bound(kMaxCertifiedStar);
            set.graph = make_graph(family, n);
            set.structures = star_structures(n);
            break;
        case Family::Wheel:
            if (n != 3)
                throw Error(ErrorKind::UnsupportedFamily,
                            "no certified enumerator for wheel:" + std::to_string(n) + "; use a bounded search");
            set.graph = make_graph(family, n);
            set.structures = wheel3_structures();
            break;
        default:
            throw Error(ErrorKind::UnsupportedFamily,
                        "no certified enumerator for " + to_string(family) + "; use a bounded search");
    }
    return set;
}

// ---------------------------------------------------------------------------
// Bounded search

namespace {

struct Step {
    std::size_t vertex = 0;
    std::vector<std::size_t> checks;  // vertices whose closed neighborhood completes here
    bool self_check = false;
    std::optional<std::size_t> stepper;  // earlier vertex forcing a residue class on `vertex`
};

struct Plan {
    std::size_t n = 0;
    std::int64_t cap = 0;
    std::vector<std::int64_t> adj;  // row-major
    std::vector<Step> steps;

    std::int64_t a(std::size_t i, std::size_t j) const { return adj[i * n + j]; }
};

Plan make_plan(const IntMatrix& adjacency, std::int64_t cap) {
    Plan p;
    p.n = adjacency.size();
    p.cap = cap;
    p.adj.resize(p.n * p.n);
    Integer row_max = 0;
    for (std::size_t i = 0; i < p.n; ++i) {
        Integer row = 0;
        for (std::size_t j = 0; j < p.n; ++j) {
            if (!adjacency(i, j).fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "adjacency entry too large");
            p.adj[i * p.n + j] = adjacency(i, j).get_si();
            row += adjacency(i, j);
        }
        row_max = std::max(row_max, row);
    }
    // Neighborhood sums must stay well inside int64.
    if (row_max * cap >= (Integer(1) << 62)) throw Error(ErrorKind::InvalidArgument, "r_cap too large for this matrix");

    // Greedy order: most already-placed neighbors first, ties to the lowest index.
    std::vector<std::size_t> pos(p.n, p.n);
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < p.n; ++k) {
        std::size_t best = p.n;
        std::size_t best_score = 0;
        for (std::size_t v = 0; v < p.n; ++v) {
            if (pos[v] != p.n) continue;
            std::size_t score = 0;
            for (std::size_t w = 0; w < p.n; ++w)
                if (pos[w] != p.n && (p.a(v, w) != 0 || p.a(w, v) != 0)) ++score;
            if (best == p.n || score > best_score) {
                best = v;
                best_score = score;
            }
        }
        pos[best] = k;
        order.push_back(best);
    }

    p.steps.resize(p.n);
    for (std::size_t k = 0; k < p.n; ++k) p.steps[k].vertex = order[k];
    for (std::size_t v = 0; v < p.n; ++v) {
        std::size_t done = pos[v];
        for (std::size_t w = 0; w < p.n; ++w)
            if (p.a(v, w) != 0) done = std::max(done, pos[w]);
        Step& s = p.steps[done];
        s.checks.push_back(v);
        if (v == s.vertex) s.self_check = true;
        else if (!s.stepper && p.a(v, s.vertex) != 0) s.stepper = v;
    }
    return p;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Inverse of a modulo m (gcd(a, m) = 1, m >= 1).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = a % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    std::int64_t inv = old_s % m;
    return inv < 0 ? inv + m : inv;
}

struct Found {
    Small d;
    Small r;
};

class Searcher {
public:
    explicit Searcher(const Plan& plan) : p_(plan), r_(plan.n, 0) {}

    void run_from(std::size_t k) { descend(k); }
    void assign(std::size_t v, std::int64_t x) { r_[v] = x; }
    bool checks_pass(std::size_t k) const {
        for (std::size_t v : p_.steps[k].checks)
            if (neighborhood_sum(v) % r_[v] != 0 || neighborhood_sum(v) == 0) return false;
        return true;
    }
    std::vector<Found>& results() { return found_; }

private:
    std::int64_t neighborhood_sum(std::size_t v) const {
        std::int64_t s = 0;
        for (std::size_t w = 0; w < p_.n; ++w) s += p_.a(v, w) * r_[w];
        return s;
    }

    void leaf() {
        std::int64_t g = 0;
        for (auto x : r_) g = gcd64(g, x);
        if (g != 1) return;
        Found f{Small(p_.n), r_};
        for (std::size_t v = 0; v < p_.n; ++v) f.d[v] = neighborhood_sum(v) / r_[v];
        found_.push_back(std::move(f));
    }

    void try_value(std::size_t k, std::int64_t x) {
        r_[p_.steps[k].vertex] = x;
        if (checks_pass(k)) descend(k + 1);
    }

    void descend(std::size_t k) {
        if (k == p_.n) {
            leaf();
            return;
        }
        const Step& st = p_.steps[k];
        const std::size_t u = st.vertex;
        r_[u] = 0;
        if (st.self_check) {
            // Every neighbor of u is placed: r_u must divide their weighted sum.
            const std::int64_t s = neighborhood_sum(u);
            if (s <= 0) return;
            std::vector<std::int64_t> divs;
            for (std::int64_t t = 1; t * t <= s && t <= p_.cap; ++t) {
                if (s % t != 0) continue;
                divs.push_back(t);
                if (t != s / t && s / t <= p_.cap) divs.push_back(s / t);
            }
            std::sort(divs.begin(), divs.end());
            for (auto x : divs) try_value(k, x);
        } else if (st.stepper) {
            // r_v | partial + m r_u fixes r_u modulo r_v / gcd(m, r_v).
            const std::size_t v = *st.stepper;
            const std::int64_t rv = r_[v];
            const std::int64_t m = p_.a(v, u);
            const std::int64_t partial = neighborhood_sum(v);  // r_u is 0 here
            const std::int64_t g = gcd64(m, rv);
            if (partial % g != 0) return;
            const std::int64_t mod = rv / g;
            std::int64_t x0 = 0;
            if (mod > 1) {
                const std::int64_t target = ((-(partial / g)) % mod + mod) % mod;
                const std::int64_t inv = inverse_mod((m / g) % mod, mod);
                x0 = static_cast<std::int64_t>((static_cast<__int128>(target) * inv) % mod);
            }
            for (std::int64_t x = x0 == 0 ? mod : x0; x <= p_.cap; x += mod) try_value(k, x);
        } else {
            for (std::int64_t x = 1; x <= p_.cap; ++x) try_value(k, x);
        }
    }

    const Plan& p_;
    Small r_;
    std::vector<Found> found_;
};

}  // namespace

StructureSet enumerate_bounded(const Graph& graph, std::int64_t r_cap, unsigned threads) {
    const IntMatrix& adjacency = graph.adjacency;
    validate_generalized_graph(adjacency);
    if (!is_irreducible(adjacency))
        throw Error(ErrorKind::ReducibleMatrix, "reducible matrices can carry infinitely many structures");
    if (r_cap < 1) throw Error(ErrorKind::InvalidArgument, "r_cap must be positive");

    const Plan plan = make_plan(adjacency, r_cap);
    if (threads == 0) threads = worker_count();
    threads = static_cast<unsigned>(std::min<std::int64_t>(threads, r_cap));

    // Parallelize over the value of the first vertex in the search order.
    std::vector<std::vector<Found>> partial(threads);
    auto work = [&](unsigned t) {
        Searcher s(plan);
        for (std::int64_t x = 1 + t; x <= r_cap; x += threads) {
            s.assign(plan.steps[0].vertex, x);
            if (s.checks_pass(0)) s.run_from(1);
        }
        partial[t] = std::move(s.results());
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    StructureSet set;
    set.graph = graph;
    set.complete = false;
    set.r_cap = r_cap;
    for (auto& chunk : partial)
        for (auto& f : chunk)
            set.structures.push_back({IntVector(f.d.begin(), f.d.end()), IntVector(f.r.begin(), f.r.end())});
    canonicalize(set.structures);
    return set;
}

StructureSet enumerate_bounded(const IntMatrix& adjacency, std::int64_t r_cap, unsigned threads) {
    validate_generalized_graph(adjacency);
    Graph g;
    g.adjacency = adjacency;
    g.tag = {Family::Custom, adjacency.size()};
    for (std::size_t i = 0; i < adjacency.size(); ++i) g.labels.push_back("v" + std::to_string(i));
    return enumerate_bounded(g, r_cap, threads);
}

std::map<std::size_t, std::size_t> r1_histogram(const StructureSet& set) {
    std::map<std::size_t, std::size_t> h;
    for (const auto& s : set.structures) {
        const auto k = static_cast<std::size_t>(std::count(s.r.begin(), s.r.end(), Integer(1)));
        ++h[k];
    }
    return h;
}

}  // namespace arith
