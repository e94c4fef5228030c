#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "m1taut/partition.hpp"

namespace m1taut {

// Semisimple SL2 representation with Tate twists: a multiset of summands
// V_k(-m), k = highest weight >= 0, m = twist >= 0. The Hodge weight of
// V_k(-m) is k + 2m.
class SL2Rep {
public:
    SL2Rep() = default;

    static SL2Rep irreducible(int k, int twist = 0, long mult = 1);

    void add(int k, int twist, long mult = 1);
    long mult(int k, int twist) const;
    const std::map<std::pair<int, int>, long>& summands() const { return summands_; }

    bool is_zero() const { return summands_.empty(); }
    mpz_class dim() const;

    // True iff every summand satisfies k + 2m == w.
    bool pure_of_weight(int w) const;

    SL2Rep& operator+=(const SL2Rep& o);
    friend bool operator==(const SL2Rep& a, const SL2Rep& b) {
        return a.summands_ == b.summands_;
    }

    std::string str() const;  // e.g. "3*V2(-1) + Q(-2)"

private:
    std::map<std::pair<int, int>, long> summands_;  // (k, twist) -> mult
};

// V_a(-s) (x) V_b(-t) = sum_{i=0}^{min(a,b)} V_{a+b-2i}(-s-t-i),
// extended bilinearly.
SL2Rep clebsch_gordan(const SL2Rep& a, const SL2Rep& b);

// Multiplicity of V_0 summands, any twist.
long sl2_invariants(const SL2Rep& d);

// One Schur-Weyl summand of H^1(U)^{(x)p}: the SL2 part V_k(-twist)
// paired with the S_p irreducible V_lambda.
struct SchurWeylSummand {
    int k;
    int twist;
    Partition lambda;
};

// H^1(U)^{(x)p} as an (SL2 x S_p)-bimodule: over a two-dimensional space
// only two-row partitions mu = (a,b) contribute, giving the SL2 factor
// V_{a-b}(-b) paired with V_{mu^T}. Total dimension 2^p.
std::vector<SchurWeylSummand> schur_weyl(int p);

}  // namespace m1taut
