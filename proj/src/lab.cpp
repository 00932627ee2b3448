#include "graverpath/lab.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace graverpath {

namespace {

Int uniform(std::mt19937_64& rng, Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(rng() % span);
}

std::vector<std::string> node_order(const std::vector<Arc>& arcs, const std::string& source,
                                    const std::string& sink) {
    std::vector<std::string> nodes{source};
    auto add = [&](const std::string& v) {
        if (std::find(nodes.begin(), nodes.end(), v) == nodes.end()) nodes.push_back(v);
    };
    for (const auto& a : arcs) {
        add(a.tail);
        add(a.head);
    }
    add(sink);
    return nodes;
}

std::size_t index_of(const std::vector<std::string>& nodes, const std::string& v) {
    return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), v) - nodes.begin());
}

bool connected(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    for (std::size_t v = 1; v < count; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

}  // namespace

FlowModel maxflow_instance(const std::vector<Arc>& arcs, const std::string& source,
                           const std::string& sink) {
    if (source == sink) throw InputError("source and sink must differ");
    if (arcs.empty()) throw InputError("network has no arcs");
    auto nodes = node_order(arcs, source, sink);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    Int total = 0;
    for (const auto& a : arcs) {
        if (a.capacity < 0) throw InputError("arc capacities must be nonnegative");
        if (a.tail == a.head) throw InputError("self-loops are not supported");
        edges.emplace_back(index_of(nodes, a.tail), index_of(nodes, a.head));
        total = checked_add(total, a.capacity);
    }
    if (!connected(nodes.size(), edges)) throw InputError("network is not connected");

    const std::size_t rows = nodes.size() - 1;
    const std::size_t cols = arcs.size() + 1;
    IntegerMatrix a(rows, cols);
    IntVector u(cols), c(cols, 0);
    auto place = [&](std::size_t col, std::size_t tail, std::size_t head) {
        if (tail < rows) a(tail, col) = 1;
        if (head < rows) a(head, col) = -1;
    };
    for (std::size_t j = 0; j < arcs.size(); ++j) {
        place(j, edges[j].first, edges[j].second);
        u[j] = arcs[j].capacity;
    }
    place(arcs.size(), index_of(nodes, sink), index_of(nodes, source));
    u[arcs.size()] = total;
    c[arcs.size()] = -1;
    Instance inst("maxflow", std::move(a), IntVector(rows, 0), std::move(c), std::move(u),
                  Domain::integer);
    return FlowModel{std::move(inst), std::move(nodes), arcs.size()};
}

Int augmenting_path_max_flow(const std::vector<Arc>& arcs, const std::string& source,
                             const std::string& sink) {
    auto nodes = node_order(arcs, source, sink);
    const std::size_t count = nodes.size();
    std::vector<std::vector<Int>> residual(count, std::vector<Int>(count, 0));
    for (const auto& a : arcs)
        residual[index_of(nodes, a.tail)][index_of(nodes, a.head)] += a.capacity;
    const std::size_t s = index_of(nodes, source), t = index_of(nodes, sink);
    Int flow = 0;
    while (true) {
        std::vector<std::size_t> prev(count, count);
        prev[s] = s;
        std::deque<std::size_t> queue{s};
        while (!queue.empty() && prev[t] == count) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w = 0; w < count; ++w) {
                if (prev[w] == count && residual[v][w] > 0) {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if (prev[t] == count) return flow;
        Int push = -1;
        for (std::size_t v = t; v != s; v = prev[v])
            push = push < 0 ? residual[prev[v]][v] : std::min(push, residual[prev[v]][v]);
        for (std::size_t v = t; v != s; v = prev[v]) {
            residual[prev[v]][v] -= push;
            residual[v][prev[v]] += push;
        }
        flow += push;
    }
}

std::vector<Arc> random_network(std::uint64_t seed, std::size_t nodes, std::size_t extra_arcs,
                                Int cap_bound) {
    if (nodes < 2) throw InputError("a network needs at least two nodes");
    if (cap_bound < 1) throw InputError("capacity bound must be positive");
    std::mt19937_64 rng(seed);
    std::vector<std::string> names{"s"};
    for (std::size_t i = 1; i + 1 < nodes; ++i) names.push_back("v" + std::to_string(i));
    names.push_back("t");

    std::set<std::pair<std::size_t, std::size_t>> used;
    std::vector<Arc> arcs;
    auto push = [&](std::size_t from, std::size_t to) {
        if (from == to || !used.insert({from, to}).second) return false;
        arcs.push_back({names[from], names[to], uniform(rng, 1, cap_bound)});
        return true;
    };
    // Spanning tree, mostly oriented away from s.
    for (std::size_t i = 1; i < nodes; ++i) {
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(i) - 1));
        if (uniform(rng, 0, 3) == 0)
            push(i, j);
        else
            push(j, i);
    }
    const std::size_t max_arcs = nodes * (nodes - 1);
    for (std::size_t k = 0; k < extra_arcs && arcs.size() < max_arcs;) {
        auto from = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(nodes) - 1));
        auto to = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(nodes) - 1));
        if (push(from, to)) ++k;
    }
    return arcs;
}

Instance transportation_instance(std::span<const Int> supplies, std::span<const Int> demands,
                                 std::optional<IntVector> cost) {
    if (supplies.empty() || demands.empty())
        throw InputError("transportation problem needs supplies and demands");
    for (Int v : supplies)
        if (v < 0) throw InputError("supplies must be nonnegative");
    for (Int v : demands)
        if (v < 0) throw InputError("demands must be nonnegative");
    if (std::accumulate(supplies.begin(), supplies.end(), Int{0}) !=
        std::accumulate(demands.begin(), demands.end(), Int{0}))
        throw InputError("total supply must equal total demand");

    const std::size_t m = supplies.size(), k = demands.size();
    const std::size_t rows = m + k - 1;
    IntegerMatrix a(rows, m * k);
    IntVector b(rows), u(m * k);
    for (std::size_t i = 0; i < m; ++i) {
        b[i] = supplies[i];
        for (std::size_t j = 0; j < k; ++j) {
            a(i, i * k + j) = 1;
            if (m + j < rows) a(m + j, i * k + j) = 1;
            u[i * k + j] = std::min(supplies[i], demands[j]);
        }
    }
    for (std::size_t j = 0; j + 1 < k; ++j) b[m + j] = demands[j];
    IntVector c = cost ? std::move(*cost) : IntVector(m * k, 1);
    return Instance("transportation", std::move(a), std::move(b), std::move(c), std::move(u),
                    Domain::integer);
}

RationalVector northwest_corner(std::span<const Int> supplies, std::span<const Int> demands) {
    IntVector s(supplies.begin(), supplies.end()), d(demands.begin(), demands.end());
    RationalVector x(s.size() * d.size(), Rational(0));
    std::size_t i = 0, j = 0;
    while (i < s.size() && j < d.size()) {
        Int amount = std::min(s[i], d[j]);
        x[i * d.size() + j] = static_cast<long>(amount);
        s[i] -= amount;
        d[j] -= amount;
        if (s[i] == 0)
            ++i;
        else
            ++j;
    }
    return x;
}

IntegerMatrix random_incidence_matrix(std::uint64_t seed, std::size_t nodes,
                                      std::size_t extra_arcs) {
    auto arcs = random_network(seed, nodes, extra_arcs, 1);
    std::vector<std::string> names;
    for (const auto& a : arcs)
        for (const auto& v : {a.tail, a.head})
            if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
    std::sort(names.begin(), names.end());
    IntegerMatrix m(names.size(), arcs.size());
    for (std::size_t j = 0; j < arcs.size(); ++j) {
        m(index_of(names, arcs[j].tail), j) = 1;
        m(index_of(names, arcs[j].head), j) = -1;
    }
    return m;
}

std::vector<IntVector> feasible_lattice_points(const Instance& inst, std::uint64_t cap) {
    unsigned __int128 total = 1;
    for (Int v : inst.u) {
        total *= static_cast<unsigned __int128>(v) + 1;
        if (total > cap)
            throw ResourceError("lattice enumeration exceeds cap " + std::to_string(cap));
    }

    const std::size_t n = inst.cols();
    std::vector<IntVector> points;
    IntVector x(n, 0);
    while (true) {
        if (inst.a.apply(x) == inst.b) points.push_back(x);
        std::size_t i = n;
        while (i > 0 && x[i - 1] == inst.u[i - 1]) x[--i] = 0;
        if (i == 0) break;
        ++x[i - 1];
    }
    return points;
}

std::vector<RationalVector> enumerate_vertices(const Instance& inst, std::uint64_t cap) {
    const std::size_t n = inst.cols();
    const std::size_t r = rank(inst.a);
    auto bases = subsets_of_size(n, r);
    if (n - r >= 63 || bases.size() > cap / (std::uint64_t{1} << (n - r)))
        throw ResourceError("vertex enumeration exceeds cap " + std::to_string(cap));

    std::set<RationalVector> found;
    RationalVector rhs0 = to_rational(inst.b);
    for (const auto& basis : bases) {
        if (r > 0 && column_rank(inst.a, basis) != r) continue;
        std::vector<std::size_t> rest;
        for (std::size_t j = 0, k = 0; j < n; ++j) {
            if (k < basis.size() && basis[k] == j)
                ++k;
            else
                rest.push_back(j);
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
            RationalVector x(n, Rational(0));
            for (std::size_t k = 0; k < rest.size(); ++k)
                if (mask >> k & 1) x[rest[k]] = static_cast<long>(inst.u[rest[k]]);
            if (r == 0) {
                if (inst.a.apply(x) == rhs0) found.insert(x);
                continue;
            }
            RationalVector rhs = rhs0;
            auto ax = inst.a.apply(x);
            for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= ax[i];
            auto y = solve_full_column_rank(inst.a.select_columns(basis), rhs);
            if (!y) continue;
            bool inside = true;
            for (std::size_t k = 0; k < r && inside; ++k) {
                const auto& v = (*y)[k];
                if (v < 0 || v > Rational(static_cast<long>(inst.u[basis[k]]))) inside = false;
                x[basis[k]] = v;
            }
            if (inside) found.insert(std::move(x));
        }
    }
    return std::vector<RationalVector>(found.begin(), found.end());
}

OracleResult brute_force_optimum(const Instance& inst, std::uint64_t cap) {
    OracleResult best;
    auto consider = [&](RationalVector x) {
        Rational value = objective(inst, x);
        if (!best.feasible || value < best.objective) {
            best.feasible = true;
            best.objective = value;
            best.x = std::move(x);
        }
    };
    // Both enumerations run in lexicographic order, so the first minimizer wins ties.
    if (inst.domain == Domain::integer) {
        for (const auto& p : feasible_lattice_points(inst, cap)) consider(to_rational(p));
    } else {
        for (auto& v : enumerate_vertices(inst, cap)) consider(std::move(v));
    }
    return best;
}

Rational gamma(const Instance& inst, std::uint64_t cap) {
    Rational best = 0;
    bool any = false;
    auto scan = [&](std::span<const Rational> x) {
        any = true;
        for (const auto& v : x)
            if (abs(v) > best) best = abs(v);
    };
    if (inst.domain == Domain::integer) {
        for (const auto& p : feasible_lattice_points(inst, cap)) scan(to_rational(p));
    } else {
        for (const auto& v : enumerate_vertices(inst, cap)) scan(v);
    }
    if (!any) throw InputError("gamma is undefined for an infeasible instance");
    return best;
}

IntegerMatrix random_matrix(std::uint64_t seed, std::size_t d, std::size_t n, Int entry_bound) {
    if (d == 0 || n == 0) throw InputError("random matrix needs d >= 1 and n >= 1");
    std::mt19937_64 rng(seed);
    IntegerMatrix a(d, n);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = uniform(rng, -entry_bound, entry_bound);
    return a;
}

GeneratedInstance random_instance(std::uint64_t seed, std::size_t d, std::size_t n,
                                  Int entry_bound, Int u_bound, Domain domain) {
    if (d == 0 || n == 0) throw InputError("random instance needs d >= 1 and n >= 1");
    if (entry_bound < 0 || u_bound < 1) throw InputError("invalid random instance bounds");
    std::mt19937_64 rng(seed);
    IntegerMatrix a(d, n);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = uniform(rng, -entry_bound, entry_bound);
    IntVector c(n), u(n), x(n);
    for (auto& v : c) v = uniform(rng, -entry_bound, entry_bound);
    for (auto& v : u) v = uniform(rng, 1, u_bound);
    for (std::size_t i = 0; i < n; ++i) x[i] = uniform(rng, 0, u[i]);
    IntVector b = a.apply(x);
    Instance inst("random-" + std::to_string(seed), std::move(a), std::move(b), std::move(c),
                  std::move(u), domain);
    return GeneratedInstance{std::move(inst), to_rational(x)};
}

}  // namespace graverpath
