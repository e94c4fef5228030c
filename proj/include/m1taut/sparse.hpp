#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "m1taut/rational.hpp"

namespace m1taut {

// Basis keys are opaque byte strings compared bytewise. Producers (graph
// canonical forms, monomial encodings) guarantee canonicity; this module
// never looks inside a key.
using BasisKey = std::string;

// Sparse vector over an arbitrary key space. No zero entries are stored;
// equality is entry-map equality.
class SparseVector {
public:
    SparseVector() = default;

    void set(const BasisKey& k, const Rat& v);
    void add(const BasisKey& k, const Rat& v);
    Rat get(const BasisKey& k) const;

    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::map<BasisKey, Rat>& entries() const { return entries_; }

    SparseVector& operator+=(const SparseVector& o);
    SparseVector& operator*=(const Rat& c);

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::map<BasisKey, Rat> entries_;
};

// Ordered, deduplicated column key space shared by the rows of a matrix.
class ColumnSpace {
public:
    explicit ColumnSpace(std::vector<BasisKey> keys);

    std::size_t size() const { return keys_.size(); }
    const std::vector<BasisKey>& keys() const { return keys_; }
    const BasisKey& key(std::size_t i) const { return keys_[i]; }
    // -1 if the key does not belong to the space.
    long index_of(const BasisKey& k) const;

    friend bool operator==(const ColumnSpace& a, const ColumnSpace& b) {
        return a.keys_ == b.keys_;
    }

private:
    std::vector<BasisKey> keys_;
};

using ColumnSpacePtr = std::shared_ptr<const ColumnSpace>;

// Row-sparse matrix over a fixed column key space. Rows are immutable once
// added; rank computation does not mutate the matrix.
class SparseMatrix {
public:
    explicit SparseMatrix(ColumnSpacePtr cols) : cols_(std::move(cols)) {}

    // Throws if a key of v is not in the column space.
    void add_row(const SparseVector& v);
    // Row given directly as (column index, value) pairs; need not be sorted.
    void add_row_indexed(std::vector<std::pair<long, Rat>> row);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_->size(); }
    const ColumnSpacePtr& column_space() const { return cols_; }
    const std::vector<std::pair<long, Rat>>& row(std::size_t i) const { return rows_[i]; }

    SparseMatrix transposed() const;

private:
    ColumnSpacePtr cols_;
    std::vector<std::vector<std::pair<long, Rat>>> rows_;  // sorted by column
};

// Dimension over Q of the row span. Exact fraction-free elimination:
// rows are scaled to integers, combined by cross-multiplication and reduced
// by content, so no rational arithmetic happens in the inner loop.
// Deterministic: pivots take the smallest column first and rows are
// processed sparsest-first (densest last).
long rank(const SparseMatrix& m);

// rank(a rows + b rows) - rank(a): the number of independent new rows b
// contributes. Throws std::invalid_argument on mismatched column spaces.
long intersect_rank(const SparseMatrix& a, const SparseMatrix& b);

// Optional fast path: rank of the reduction mod a word-sized prime.
// Always <= rank(m); equality holds away from bad primes. The exact path
// is the default everywhere; the test suite verifies agreement.
long rank_mod_p(const SparseMatrix& m, std::uint64_t p = 2147483647ull);

}  // namespace m1taut
