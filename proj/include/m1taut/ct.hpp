#pragma once

#include <json.hpp>

#include <map>
#include <vector>

#include "m1taut/partition.hpp"
#include "m1taut/rational.hpp"
#include "m1taut/sl2.hpp"
#include "m1taut/sparse.hpp"

namespace m1taut::ct {

// The two odd coefficient letters: a fixed symplectic basis of H^1(U).
enum class Letter : std::uint8_t { A = 0, B = 1 };

// Normal-form basis monomial of E_U(n): an omega-forest (pairs (i,j) with
// i < j and the j's strictly increasing) times one optional odd letter per
// block minimum (blocks = connected components of the pair graph,
// singletons included). Bidegree (p, q) = (#letters, #pairs); the Hodge
// weight is p + 2q.
struct Monomial {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, Letter>> letters;  // sorted by position

    int p() const { return static_cast<int>(letters.size()); }
    int q() const { return static_cast<int>(pairs.size()); }
    int weight() const { return p() + 2 * q(); }
    int torus_weight() const;  // #a - #b

    BasisKey key() const;
    std::string str() const;

    auto operator<=>(const Monomial&) const = default;
};

// Finite rational combination of basis monomials.
using Element = std::map<Monomial, Rat>;

void add_to(Element& target, const Element& source, const Rat& scale = Rat(1));

Element multiply(const Element& x, const Element& y);

// d(omega_ij) = a_i b_j - b_i a_j, extended as an odd derivation; letters
// are closed. Shifts bidegree by (+2, -1).
Element differential(const Monomial& m);
Element differential(const Element& x);

// Transport along position map (injective); output is renormalized, so
// Koszul signs and Arnold rewrites are applied as needed.
Element relabel(const Monomial& m, const std::vector<int>& position_map);
Element relabel(const Element& x, const std::vector<int>& position_map);

// Raising operator e of sl2: e.b = a, e.a = 0, as an even derivation.
Element raising(const Monomial& m);
Element raising(const Element& x);

// Pullback along the injection [n] -> [targetN] induced by forgetting the
// other points; commutes with the differential.
Element pullback(const Element& x, int targetN, const std::vector<int>& injection);

// One page entry in the golden-file shape.
struct PageEntry {
    int p, q;
    long dim;
    SL2Rep sl2;
};

// The algebra E_U(n) with its single differential: page 2 is the
// presentation, page 3 its cohomology (= page infinity here).
class Algebra {
public:
    explicit Algebra(int n);

    int n() const { return n_; }

    const std::vector<Monomial>& basis(int p, int q) const;
    long entry_dim(int p, int q) const;

    SL2Rep page2_sl2(int p, int q) const;
    SL2Rep cohomology_sl2(int p, int q) const;
    long cohomology_dim(int p, int q) const;
    long cohomology_invariants(int p, int q) const;

    // Trace of a permutation of the given cycle type on the (p,q) entry of
    // the given page (2 or 3), either on the whole entry or on the
    // SL2-invariant part.
    Rat sn_character(int p, int q, const Partition& cycle_type, int page,
                     bool invariants_only) const;

    // {"n":..,"page":..,"entries":[{"p":..,"q":..,"dim":..,"sl2":[...]}]}
    nlohmann::json page_json(int page) const;

private:
    struct Cache;
    int n_;
    std::shared_ptr<Cache> cache_;  // lazy, guarded; Algebra is cheap to copy
};

// i -> (SL2-invariant dim of gr^W_i H^i, SL2-invariant dim of gr^W_{i+1} H^i),
// i.e. bottom-row invariants at (i,0) and second-row invariants at (i-1,1).
std::map<int, std::pair<long, long>> weight_row_report(int n);

// A canonical permutation of 1..n with the given cycle type.
std::vector<int> permutation_of_cycle_type(int n, const Partition& cycle_type);

}  // namespace m1taut::ct
