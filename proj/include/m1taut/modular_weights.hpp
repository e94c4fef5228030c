#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace m1taut {

// Weight table: (cohomological degree q, weight i) -> dimension. Absent
// entries are zero.
using WeightTable = std::map<std::pair<int, int>, long>;

// dim S_w for the full modular group: the number of monomials E4^x E6^y of
// weight w minus the Eisenstein line, for even w >= 4; zero otherwise.
long dim_cusp_forms(int w);

// H^1 of the weight-k symmetric-power local system on the open modular
// curve, graded by weight: empty for k odd or k = 0; for even k >= 2 the
// cusp classes sit in weight k+1 (dimension 2 dim S_{k+2}) and the
// Eisenstein class in weight 2k+2 (dimension 1).
WeightTable h1_local_system(int k);

// Every nonzero entry (1, i) of h1_local_system(k) has i odd or i >= k+4.
bool weight_check_lemma(int k);

// Dimension of the SL2-invariant part of gr^W_i H^q of the configuration
// space F(U, n), n = nPlus1 - 1, reported as gr^W_i H^q of the open
// (n+1)-pointed moduli space. Requires i even and i <= q+2 (the transfer
// isomorphism is only asserted there); throws std::domain_error otherwise.
long transfer_even_low_weight(int nPlus1, int q, int i);

struct TheoremCheck {
    std::string theorem;  // "1.1", "1.2", "1.3"
    int n;                // number of markings n+1 of the moduli space
    bool pass;
    std::string detail;
    nlohmann::json witness;

    nlohmann::json to_json() const;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    bool all_pass() const;
    nlohmann::json to_json() const;
};

// Desk-scale verification of the three theorems for all n+1 <= nMax:
// bottom-row invariant vanishing away from degree zero (1.1), second-row
// invariant support exactly at gr^W_4 H^3 for n+1 >= 4 (1.2), and the
// one-dimensionality/pullback data for the codimension-two relation (1.3).
// The 1.3 check needs the relation data file; pass getzler_path "" to use
// the default resolution order.
TheoremReport verify_theorems(int nMax, const std::string& getzler_path = "");

}  // namespace m1taut
