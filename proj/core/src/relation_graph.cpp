#include "tamecount/relation_graph.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "tamecount/errors.hpp"

namespace tamecount {

namespace {

// reach[u][v] = path u -> v through the precedes relation
std::vector<std::vector<bool>> closure(const RelationGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u == v || g.precedes(u, v)) reach[u][v] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t u = 0; u < n; ++u)
            if (reach[u][k])
                for (std::size_t v = 0; v < n; ++v)
                    if (reach[k][v]) reach[u][v] = true;
    return reach;
}

}  // namespace

RelationGraph::RelationGraph(std::vector<Vertex> vertices,
                             std::vector<std::vector<bool>> precedes)
    : vertices_(std::move(vertices)), prec_(std::move(precedes)) {
    if (prec_.size() != vertices_.size())
        throw BadArguments("RelationGraph: matrix size mismatch");
    for (std::size_t u = 0; u < prec_.size(); ++u) {
        if (prec_[u].size() != vertices_.size())
            throw BadArguments("RelationGraph: matrix size mismatch");
        if (prec_[u][u]) throw BadArguments("RelationGraph: self-loop");
    }
}

RelationGraph RelationGraph::build(const NormalizedSet& D) {
    const OrderedFactorization& canon = D.canonical();
    const std::size_t n = canon.size();
    std::vector<Vertex> vertices;
    vertices.reserve(n);
    for (std::size_t i = 0; i < n; ++i) vertices.push_back({i, canon[i]});
    std::vector<std::vector<bool>> prec(n, std::vector<bool>(n, false));
    for (const auto& m : D.members()) {
        // vertex i sits at position perm[i] of this member
        std::vector<std::size_t> perm = sigma(canon, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && perm[i] < perm[j]) prec[i][j] = true;
    }
    return RelationGraph(std::move(vertices), std::move(prec));
}

bool RelationGraph::strongly_connected() const {
    auto reach = closure(*this);
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v = 0; v < size(); ++v)
            if (!reach[u][v]) return false;
    return true;
}

long long RelationGraph::product() const {
    long long n = 1;
    for (const Vertex& v : vertices_) n *= v.value;
    return n;
}

RelationGraph RelationGraph::induced(const std::vector<std::size_t>& locals) const {
    std::vector<Vertex> vs;
    vs.reserve(locals.size());
    for (std::size_t u : locals) vs.push_back(vertices_[u]);
    std::vector<std::vector<bool>> prec(locals.size(),
                                        std::vector<bool>(locals.size(), false));
    for (std::size_t i = 0; i < locals.size(); ++i)
        for (std::size_t j = 0; j < locals.size(); ++j)
            if (i != j) prec[i][j] = prec_[locals[i]][locals[j]];
    return RelationGraph(std::move(vs), std::move(prec));
}

SccChain scc_chain(const RelationGraph& g) {
    const std::size_t n = g.size();
    auto reach = closure(g);
    std::vector<std::size_t> comp(n, n);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t u = 0; u < n; ++u) {
        if (comp[u] != n) continue;
        comp[u] = groups.size();
        groups.push_back({u});
        for (std::size_t v = u + 1; v < n; ++v)
            if (comp[v] == n && reach[u][v] && reach[v][u]) {
                comp[v] = comp[u];
                groups.back().push_back(v);
            }
    }
    // cross-component pairs are one-way; reachability gives the chain order
    std::sort(groups.begin(), groups.end(),
              [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                  return reach[a[0]][b[0]] && !reach[b[0]][a[0]];
              });
    SccChain chain;
    for (const auto& grp : groups) chain.components.push_back(g.induced(grp));
    return chain;
}

SubgraphSplit split_subgraphs(const RelationGraph& g) {
    if (!g.strongly_connected())
        throw NotStronglyConnected("split_subgraphs: graph is not strongly connected");
    SubgraphSplit split;
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            if (g.bidirectional(u, v))
                split.undirected.emplace_back(u, v);
            else if (g.unidirectional(u, v))
                split.directed.emplace_back(u, v);
            else if (g.unidirectional(v, u))
                split.directed.emplace_back(v, u);
        }
    return split;
}

namespace {

std::vector<std::size_t> open_neighborhood(const RelationGraph& g, std::size_t v) {
    std::vector<std::size_t> nb;
    for (std::size_t u = 0; u < g.size(); ++u)
        if (u != v && g.bidirectional(u, v)) nb.push_back(u);
    return nb;
}

// W-partition index of every vertex: locally maximal d_1..d_m get 1..m,
// the rest fall into V_0, V_1..V_m (as U(d_i) \ U(d_{i+1})) or V_{m+1}
std::vector<std::size_t> w_partition(const RelationGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<bool>> in_u(n, std::vector<bool>(n, false));
    std::vector<bool> locmax(n, true);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u : open_neighborhood(g, v)) {
            in_u[v][u] = true;
            if (g.vertex(u).value >= g.vertex(v).value) locmax[v] = false;
        }
    }
    std::vector<std::size_t> maxima;
    for (std::size_t v = 0; v < n; ++v)
        if (locmax[v]) maxima.push_back(v);
    // the locally maximal vertices lie on a directed path; any two are
    // one-way related, so the precedence relation sorts them totally
    std::sort(maxima.begin(), maxima.end(),
              [&](std::size_t a, std::size_t b) { return g.precedes(a, b); });
    const std::size_t m = maxima.size();

    std::vector<std::size_t> w(n, m + 1);
    for (std::size_t i = 0; i < m; ++i) w[maxima[i]] = i + 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (locmax[v]) continue;
        bool before_all = true;  // no d_i precedes v
        for (std::size_t d : maxima) before_all = before_all && !g.precedes(d, v);
        if (before_all) {
            w[v] = 0;
            continue;
        }
        for (std::size_t i = 0; i < m; ++i) {
            bool next = i + 1 < m && in_u[maxima[i + 1]][v];
            if (in_u[maxima[i]][v] && !next) {
                w[v] = i + 1;
                break;
            }
        }
    }
    return w;
}

}  // namespace

std::vector<Vertex> max_sink_order(const RelationGraph& g) {
    if (g.size() < 2) throw TooSmall("max_sink_order: need at least two vertices");
    if (!g.strongly_connected())
        throw NotStronglyConnected("max_sink_order: graph is not strongly connected");
    const std::size_t n = g.size();
    std::vector<std::size_t> w = w_partition(g);

    // lower partition index wins, then the larger value
    auto preferred = [&](std::size_t a, std::size_t b) {
        if (w[a] != w[b]) return w[a] < w[b];
        return g.vertex(a).value > g.vertex(b).value;
    };
    // depth-first search walks arcs v -> u for one-way "u precedes v", so
    // predecessors finish first and increasing finish time is topological
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> finish_order;
    auto visit = [&](auto&& self, std::size_t v) -> void {
        visited[v] = true;
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t u = 0; u < n; ++u)
                if (!visited[u] && g.unidirectional(u, v) && (!best || preferred(u, *best)))
                    best = u;
            if (!best) break;
            self(self, *best);
        }
        finish_order.push_back(v);
    };
    for (;;) {
        std::optional<std::size_t> root;
        for (std::size_t v = 0; v < n; ++v)
            if (!visited[v] && (!root || preferred(v, *root))) root = v;
        if (!root) break;
        visit(visit, *root);
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.precedes(finish_order[i], finish_order[j]))
                throw std::logic_error(
                    "max_sink_order: result is not a transitive Hamiltonian path");
    std::vector<Vertex> out;
    out.reserve(n);
    for (std::size_t v : finish_order) out.push_back(g.vertex(v));
    return out;
}

std::vector<std::vector<Vertex>> transitive_hamiltonian_paths(const RelationGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::size_t> order;
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self) -> void {
        if (order.size() == n) {
            std::vector<Vertex> path;
            for (std::size_t v : order) path.push_back(g.vertex(v));
            paths.push_back(std::move(path));
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (std::size_t u : order) ok = ok && g.precedes(u, v);
            if (!ok) continue;
            used[v] = true;
            order.push_back(v);
            self(self);
            order.pop_back();
            used[v] = false;
        }
    };
    extend(extend);
    return paths;
}

std::vector<long long> neighborhood_products(const RelationGraph& g) {
    if (g.size() < 2)
        throw TooSmall("neighborhood_products: need at least two vertices");
    if (!g.strongly_connected())
        throw NotStronglyConnected(
            "neighborhood_products: graph is not strongly connected");
    std::vector<long long> e(g.size(), 1);
    for (std::size_t v = 0; v < g.size(); ++v)
        for (std::size_t u : open_neighborhood(g, v)) e[v] *= g.vertex(u).value;
    return e;
}

std::vector<std::vector<std::size_t>> bubble_sort_states(
    const RelationGraph& g, std::vector<std::size_t> from,
    const std::vector<std::size_t>& to) {
    const std::size_t n = g.size();
    auto is_perm = [&](const std::vector<std::size_t>& order) {
        if (order.size() != n) return false;
        std::vector<bool> seen(n, false);
        for (std::size_t v : order) {
            if (v >= n || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    };
    if (!is_perm(from) || !is_perm(to))
        throw BadArguments("bubble_sort_states: orders must enumerate all vertices");
    std::vector<std::vector<std::size_t>> states{from};
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i;
        while (from[j] != to[i]) ++j;
        for (; j > i; --j) {
            std::swap(from[j - 1], from[j]);
            states.push_back(from);
        }
    }
    return states;
}

std::string to_dot(const RelationGraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    SccChain chain = scc_chain(g);
    // local index by vertex id, for edge endpoints below
    std::size_t cluster = 0;
    for (const RelationGraph& comp : chain.components) {
        out << "  subgraph cluster_" << cluster++ << " {\n";
        std::vector<Vertex> vs = comp.vertices();
        std::sort(vs.begin(), vs.end(),
                  [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
        for (const Vertex& v : vs)
            out << "    n" << v.id << " [label=\"" << v.value << '#' << v.id
                << "\"];\n";
        out << "  }\n";
    }
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            std::size_t iu = g.vertex(u).id, iv = g.vertex(v).id;
            if (g.bidirectional(u, v))
                out << "  n" << iu << " -> n" << iv << " [dir=both];\n";
            else if (g.precedes(u, v))  // paper arrow u <- v
                out << "  n" << iv << " -> n" << iu << ";\n";
            else if (g.precedes(v, u))
                out << "  n" << iu << " -> n" << iv << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace tamecount
