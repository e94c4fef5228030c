#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace m1taut {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;  // the empty partition of 0
    explicit Partition(std::vector<int> parts);

    static Partition single_row(int n);
    static Partition single_column(int n);
    static Partition rectangle(int part, int repeats);  // (part^repeats)

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return sum_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    // Dimension of the S_n irreducible V_lambda (hook length formula).
    mpz_class sn_dim() const;

    // Row indices (0-based) whose last box is removable, i.e. the corners.
    std::vector<int> removable_rows() const;
    Partition remove_box(int row) const;
    // Partitions obtained by adding one box (the branching-up set).
    std::vector<Partition> add_box_all() const;
    // mu with mu/this a horizontal strip of the given size (Pieri).
    std::vector<Partition> add_horizontal_strips(int size) const;

    // z_mu = prod k^{m_k} m_k!, the centralizer order of the cycle type.
    mpz_class centralizer_order() const;

    std::string str() const;  // e.g. "(4,1)"

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// All partitions of n, in a fixed deterministic order (descending lex).
std::vector<Partition> partitions_of(int n);

}  // namespace m1taut
