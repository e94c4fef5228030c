#pragma once

#include <map>
#include <string>
#include <vector>

#include "m1taut/rational.hpp"
#include "m1taut/sparse.hpp"
#include "m1taut/stable_graph.hpp"

namespace m1taut {

// Rational combination of isomorphism classes of stable graphs in a fixed
// (n, codim). Keys are canonical forms; zero coefficients are dropped.
struct StrataVector {
    int n = 0;
    int codim = 0;
    std::map<CanonicalKey, Rat> coeffs;

    void add(const CanonicalKey& k, const Rat& c);
    bool is_zero() const { return coeffs.empty(); }
    // Integer coefficients with content one, sign of the leading
    // (smallest-key) coefficient positive.
    StrataVector normalized() const;
    SparseVector to_sparse() const;

    friend bool operator==(const StrataVector& a, const StrataVector& b) {
        return a.n == b.n && a.codim == b.codim && a.coeffs == b.coeffs;
    }
};

// Basis of the codim-graded piece of F_0: canonical keys of all classes.
std::vector<CanonicalKey> generators(int n, int codim);

// WDVV pullback relations in the given codimension: for every class of
// codimension codim-1, every genus-0 vertex with >= 4 half-edges and every
// 4-subset {a,b,c,d} of them, the two vectors S(ab|cd)-S(ac|bd) and
// S(ab|cd)-S(ad|bc), where S(xy|zw) sums the splittings of the vertex with
// x,y on one side and z,w on the other, remaining half-edges distributed
// freely. Zero vectors are not emitted. With dedup_by_aut_orbit, duplicate
// emitted vectors are dropped — choices in one Aut-orbit produce identical
// vectors, so this subsumes orbit deduplication. A pure optimization; the
// span is unchanged either way.
std::vector<StrataVector> wdvv_relations(int n, int codim, bool dedup_by_aut_orbit = false);

// The codimension-two relation on the 4-pointed space, shipped as a data
// file and validated on load.
struct GetzlerRelationData {
    std::string provenance;
    std::vector<std::pair<StableGraph, Rat>> terms;

    StrataVector vector() const;  // accumulated into isomorphism classes
};

struct GetzlerLoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses and validates the data file: every term graph a valid (n=4,
// codim=2) stable graph, and the accumulated vector nonzero.
GetzlerRelationData load_getzler_relation(const std::string& path);
// Resolution order: M1TAUT_DATA env var, ./data/getzler_relation.json,
// then data/ next to and above the running executable.
std::string default_getzler_path();

// Insertion relations: for every class of codimension codim-2 whose
// genus-1 vertex has >= 4 half-edges and every 4-subset of them, insert
// each term of the data at the vertex, distributing the remaining
// half-edges over the term's vertices in all ways (multiplicity one each).
std::vector<StrataVector> getzler_relations(int n, int codim, const GetzlerRelationData& data);

// r_k = #generators(n,k) - rank of all relations at (n,k), k = 0..n.
// Pass nullptr to omit the Getzler family. threads > 1 parallelizes over
// codimensions; results are identical for any thread count.
std::vector<long> even_betti(int n, const GetzlerRelationData* getzler, int threads = 1);

// Rank of the relation span at one (n, codim).
long relation_rank(int n, int codim, const GetzlerRelationData* getzler);

// Sum over the full S_n orbit: sigma.v relabels legs and re-canonicalizes.
StrataVector symmetrize(const StrataVector& v);

// sigma acting on a strata vector by relabeling legs.
StrataVector act_on_strata(const StrataVector& v, const std::vector<int>& perm);

// Pullback of v along the forgetful map adding `extra` legs: every term is
// summed over its leg distributions, multiplicity one each.
StrataVector pullback_strata(const StrataVector& v, int extra);

}  // namespace m1taut
