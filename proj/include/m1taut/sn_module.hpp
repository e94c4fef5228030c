#pragma once

#include <map>
#include <optional>
#include <string>

#include "m1taut/partition.hpp"
#include "m1taut/rational.hpp"

namespace m1taut {

// Finite multiset of symmetric-group irreducibles over a fixed S_n.
class SnModule {
public:
    explicit SnModule(int n) : n_(n) {}
    SnModule(int n, std::map<Partition, long> summands);

    int n() const { return n_; }
    const std::map<Partition, long>& summands() const { return summands_; }
    void add(const Partition& lambda, long mult = 1);
    long mult(const Partition& lambda) const;
    bool is_zero() const { return summands_.empty(); }

    mpz_class dim() const;
    std::string str() const;  // e.g. "V(4) + V(3,1)"

    friend bool operator==(const SnModule& a, const SnModule& b) {
        return a.n_ == b.n_ && a.summands_ == b.summands_;
    }

private:
    int n_;
    std::map<Partition, long> summands_;
};

// Irreducible character chi_lambda evaluated on the conjugacy class of
// cycle type mu (Murnaghan-Nakayama, memoized).
mpz_class sn_character_value(const Partition& lambda, const Partition& mu);

// Character of a module on the class of cycle type mu.
mpz_class module_character(const SnModule& mod, const Partition& mu);

// Res^{S_n}_{S_{n-1}}: remove one removable corner box in all ways.
SnModule restrict_module(const SnModule& mod);

// Ind_{S_m x S_p}^{S_{m+p}} (trivial x V_lambda): Pieri, horizontal strips
// of size m added to lambda. All multiplicities are 0 or 1.
SnModule pieri_induce(int m, const Partition& lambda);

// Does a nonnegative-integer combination N of S_{n+1} irreducibles exist
// with restrict(N) == mod? Returns the witness if so.
std::optional<SnModule> is_restriction(const SnModule& mod);

// Inner product with the irreducible characters; throws std::domain_error
// if any multiplicity is not a nonnegative integer (the input is then not
// the character of a genuine S_n-module).
SnModule decompose_character(int n, const std::map<Partition, Rat>& char_values);

}  // namespace m1taut
