#ifndef TAMECOUNT_RELATION_GRAPH_HPP
#define TAMECOUNT_RELATION_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tamecount/refine.hpp"

namespace tamecount {

/// One basis entry. id is the position in the canonical member of the
/// normalized set that produced the graph, so equal values at different
/// positions stay distinct.
struct Vertex {
    std::size_t id;
    long long value;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Union of the transitive tournaments induced by the members of a
/// normalized set. The stored relation is "u precedes v in composition
/// order"; the paper-style arrow u <- v corresponds to precedes(u, v).
class RelationGraph {
public:
    /// build_graph: tournament union over the members of D.
    static RelationGraph build(const NormalizedSet& D);

    /// A graph on an explicit vertex set with an explicit precedence
    /// relation (row u, column v true iff u precedes v somewhere).
    RelationGraph(std::vector<Vertex> vertices, std::vector<std::vector<bool>> precedes);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t local) const { return vertices_[local]; }

    /// Indices below are local (0 .. size()-1).
    bool precedes(std::size_t u, std::size_t v) const { return prec_[u][v]; }
    bool bidirectional(std::size_t u, std::size_t v) const {
        return prec_[u][v] && prec_[v][u];
    }
    bool unidirectional(std::size_t u, std::size_t v) const {
        return prec_[u][v] && !prec_[v][u];
    }
    /// Complete underlying undirected graph: adjacent iff related either way.
    bool adjacent(std::size_t u, std::size_t v) const {
        return prec_[u][v] || prec_[v][u];
    }

    bool strongly_connected() const;

    /// Product n of all vertex values.
    long long product() const;

    /// Induced subgraph on the given local indices (kept in the given order).
    RelationGraph induced(const std::vector<std::size_t>& locals) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<bool>> prec_;
};

/// Strongly connected components ordered so that every vertex of an earlier
/// component precedes every vertex of a later one.
struct SccChain {
    std::vector<RelationGraph> components;
};

SccChain scc_chain(const RelationGraph& g);

/// Edge partition of a strongly connected relation graph.
struct SubgraphSplit {
    /// (u, v) with u preceding v, one-way only. The directed subgraph is acyclic.
    std::vector<std::pair<std::size_t, std::size_t>> directed;
    /// {u, v} with u < v, related both ways (2-loops). Connected for size >= 2.
    std::vector<std::pair<std::size_t, std::size_t>> undirected;
};

SubgraphSplit split_subgraphs(const RelationGraph& g);

/// The unique DFS topological sorting of the directed subgraph with the
/// locally-maximal-vertex tie-break; always a transitive Hamiltonian path.
/// Requires a strongly connected graph with at least two vertices.
std::vector<Vertex> max_sink_order(const RelationGraph& g);

/// All vertex orders whose transitive closure lies inside the graph.
/// Brute force with pruning; intended for oracles and tests.
std::vector<std::vector<Vertex>> transitive_hamiltonian_paths(const RelationGraph& g);

/// For each vertex, the product of its open undirected-subgraph
/// neighborhood; every entry is >= 2. Indexed like vertices().
std::vector<long long> neighborhood_products(const RelationGraph& g);

/// Adjacent-swap transformation of one transitive Hamiltonian path into
/// another, as local-index orders; returns every intermediate state,
/// starting with `from` and ending with `to`. Each swap crosses a
/// bidirectional edge and each state is itself a transitive Hamiltonian
/// path (checked by tests).
std::vector<std::vector<std::size_t>> bubble_sort_states(
    const RelationGraph& g, std::vector<std::size_t> from,
    const std::vector<std::size_t>& to);

/// DOT rendering; vertices labeled "value#id", bidirectional edges emitted
/// once with dir=both, strongly connected components as clusters in chain
/// order. Output is byte-deterministic.
std::string to_dot(const RelationGraph& g);

}  // namespace tamecount

#endif
