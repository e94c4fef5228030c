#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace m1taut {

using CanonicalKey = std::string;

// Stable n-pointed genus-one dual graph. Edges are stored as unordered
// vertex pairs (u <= v), loops as (v, v); this multigraph form determines
// the half-edge structure up to isomorphism, which is all the engine needs.
// Marking legs are labeled 1..n and fixed pointwise by isomorphisms.
struct StableGraph {
    int n = 0;
    std::vector<int> genus;                  // per vertex, 0 or 1
    std::vector<int> leg_vertex;             // leg label l sits at leg_vertex[l-1]
    std::vector<std::pair<int, int>> edges;  // u <= v

    int num_vertices() const { return static_cast<int>(genus.size()); }
    int codim() const { return static_cast<int>(edges.size()); }
    int first_betti() const;
    // Half-edge count at v: legs + edge ends, loops counting twice.
    int degree(int v) const;
    std::vector<int> legs_at(int v) const;  // sorted leg labels
    // Index of the genus-1 vertex, or -1 if the graph has none.
    int genus_one_vertex() const;

    // Throws std::invalid_argument naming the violated invariant.
    void validate() const;
    bool is_valid() const;
    // Same structural checks with a prescribed total genus; guests of
    // vertex substitutions are genus-0 or genus-1 stable graphs.
    void validate_as_genus(int total_genus) const;

    static StableGraph smooth(int n);  // one genus-1 vertex carrying all legs
};

// Isomorphism-invariant canonical encoding: equal keys iff isomorphic as
// marked graphs (genera, edge structure and leg labels preserved).
CanonicalKey canonical_form(const StableGraph& g);

// Inverse of the key encoding; returns the canonical representative.
StableGraph decode_canonical_key(const CanonicalKey& key);

// The same graph relabeled into its canonical vertex order, with edges
// sorted. Deterministic representative of the isomorphism class.
StableGraph canonical_representative(const StableGraph& g);

// All isomorphism classes of stable n-pointed genus-one graphs with the
// given number of edges, as canonical representatives sorted by key.
// Results are memoized per (n, codim).
const std::vector<StableGraph>& enumerate_graphs(int n, int codim);

// Order of the group of marked-graph automorphisms: half-edge permutations
// preserving vertices/genera/edges and fixing legs pointwise.
long automorphism_count(const StableGraph& g);

// One attachment point at a vertex: a leg or an edge end.
struct Stub {
    enum Kind { Leg, EdgeEnd } kind;
    int index;  // leg label, or edge index
    int end;    // 0/1 for edge ends (loops contribute both), unused for legs
    auto operator<=>(const Stub&) const = default;
};

// Sorted stub list at v: legs first by label, then edge ends by (edge, end).
std::vector<Stub> stubs_at(const StableGraph& g, int v);

// Split vertex v into v -- new vertex joined by one new edge, moving the
// given stubs to the new vertex and assigning the genera. Returns nullopt
// if either side ends up unstable.
std::optional<StableGraph> split_vertex(const StableGraph& g, int v, int genus_keep,
                                        int genus_new, const std::vector<Stub>& moved);

// Replace vertex v of host by guest. Guest is a stable graph of the same
// genus as v whose legs 1..m are matched to the stubs at v: matching[i]
// is the stub receiving guest leg i+1. Guest legs disappear; host legs at
// v reattach to the guest vertex their matched guest leg sat on. Returns
// nullopt if some vertex of the result is unstable.
std::optional<StableGraph> try_substitute_vertex(const StableGraph& host, int v,
                                                 const StableGraph& guest,
                                                 const std::vector<Stub>& matching);
// Throwing variant.
StableGraph substitute_vertex(const StableGraph& host, int v, const StableGraph& guest,
                              const std::vector<Stub>& matching);

// All ways to attach `extra` new distinguishable legs (labels n+1..n+extra)
// to vertices of g. Multiplicity one per distribution; no deduplication.
std::vector<StableGraph> distribute_legs(const StableGraph& g, int extra);

// Relabel legs: new label of l is perm[l-1] (a bijection on 1..n).
StableGraph relabel_legs(const StableGraph& g, const std::vector<int>& perm);

// Test-support generator, independent of enumerate_graphs: builds all
// multigraphs directly, filters the invariants and deduplicates by
// exhaustive isomorphism search. Exponential; intended for n <= 4.
std::vector<StableGraph> enumerate_graphs_naive(int n, int codim);

}  // namespace m1taut
