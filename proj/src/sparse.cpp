#include "m1taut/sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace m1taut {

void SparseVector::set(const BasisKey& k, const Rat& v) {
    if (v.is_zero())
        entries_.erase(k);
    else
        entries_[k] = v;
}

void SparseVector::add(const BasisKey& k, const Rat& v) {
    if (v.is_zero())
        return;
    auto it = entries_.find(k);
    if (it == entries_.end()) {
        entries_.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero())
        entries_.erase(it);
}

Rat SparseVector::get(const BasisKey& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? Rat(0) : it->second;
}

SparseVector& SparseVector::operator+=(const SparseVector& o) {
    for (const auto& [k, v] : o.entries_)
        add(k, v);
    return *this;
}

SparseVector& SparseVector::operator*=(const Rat& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [k, v] : entries_)
        v *= c;
    return *this;
}

ColumnSpace::ColumnSpace(std::vector<BasisKey> keys) : keys_(std::move(keys)) {
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

long ColumnSpace::index_of(const BasisKey& k) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
    if (it == keys_.end() || *it != k)
        return -1;
    return it - keys_.begin();
}

void SparseMatrix::add_row(const SparseVector& v) {
    std::vector<std::pair<long, Rat>> row;
    row.reserve(v.size());
    for (const auto& [k, val] : v.entries()) {
        long idx = cols_->index_of(k);
        if (idx < 0)
            throw std::invalid_argument("SparseMatrix: row key not in column space: " + k);
        row.emplace_back(idx, val);
    }
    rows_.push_back(std::move(row));  // map iteration is key-sorted, so sorted
}

void SparseMatrix::add_row_indexed(std::vector<std::pair<long, Rat>> row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].first < 0 || row[i].first >= static_cast<long>(cols_->size()))
            throw std::invalid_argument("SparseMatrix: column index out of range");
        if (i > 0 && row[i].first == row[i - 1].first)
            throw std::invalid_argument("SparseMatrix: duplicate column index in row");
    }
    std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
    rows_.push_back(std::move(row));
}

SparseMatrix SparseMatrix::transposed() const {
    std::vector<BasisKey> rkeys;
    rkeys.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        // Fixed-width decimal so that key order matches row order.
        char buf[24];
        std::snprintf(buf, sizeof buf, "r%010zu", i);
        rkeys.emplace_back(buf);
    }
    auto cs = std::make_shared<ColumnSpace>(rkeys);
    SparseMatrix t(cs);
    std::vector<std::vector<std::pair<long, Rat>>> trows(cols_->size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [j, v] : rows_[i])
            trows[j].emplace_back(static_cast<long>(i), v);
    for (auto& r : trows)
        t.rows_.push_back(std::move(r));
    return t;
}

namespace {

using IntRow = std::vector<std::pair<long, mpz_class>>;  // sorted by column

// Clear denominators and divide by content; leading coefficient sign kept.
IntRow to_integer_row(const std::vector<std::pair<long, Rat>>& row) {
    mpz_class lcm = 1;
    for (const auto& [j, v] : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
    IntRow out;
    out.reserve(row.size());
    mpz_class content = 0;
    for (const auto& [j, v] : row) {
        mpz_class num = v.num() * (lcm / v.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
        out.emplace_back(j, std::move(num));
    }
    if (content > 1)
        for (auto& [j, v] : out)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return out;
}

void reduce_by_content(IntRow& row) {
    mpz_class content = 0;
    for (const auto& [j, v] : row) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        if (content == 1)
            return;
    }
    if (content > 1)
        for (auto& [j, v] : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

// r <- r * p_lead - p * r_lead, where both rows lead at the same column.
// The leading column cancels exactly; the result is content-reduced.
IntRow combine(const IntRow& r, const IntRow& p) {
    const mpz_class& r_lead = r.front().second;
    const mpz_class& p_lead = p.front().second;
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 1, k = 1;
    mpz_class tmp;
    while (i < r.size() || k < p.size()) {
        if (k >= p.size() || (i < r.size() && r[i].first < p[k].first)) {
            out.emplace_back(r[i].first, r[i].second * p_lead);
            ++i;
        } else if (i >= r.size() || p[k].first < r[i].first) {
            out.emplace_back(p[k].first, -(p[k].second * r_lead));
            ++k;
        } else {
            tmp = r[i].second * p_lead - p[k].second * r_lead;
            if (tmp != 0)
                out.emplace_back(r[i].first, tmp);
            ++i;
            ++k;
        }
    }
    reduce_by_content(out);
    return out;
}

// Incremental elimination state: pivot rows keyed by leading column.
struct Eliminator {
    std::map<long, IntRow> pivots;

    // Returns true if the row was independent (a new pivot was created).
    bool absorb(IntRow row) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                reduce_by_content(row);
                pivots.emplace(row.front().first, std::move(row));
                return true;
            }
            row = combine(row, it->second);
        }
        return false;
    }
};

std::vector<IntRow> prepared_rows(const SparseMatrix& m) {
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!m.row(i).empty())
            rows.push_back(to_integer_row(m.row(i)));
    // Sparsest rows first; stable so order is deterministic.
    std::stable_sort(rows.begin(), rows.end(),
                     [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });
    return rows;
}

}  // namespace

long rank(const SparseMatrix& m) {
    Eliminator e;
    long r = 0;
    for (auto& row : prepared_rows(m))
        if (e.absorb(std::move(row)))
            ++r;
    return r;
}

long intersect_rank(const SparseMatrix& a, const SparseMatrix& b) {
    if (!(*a.column_space() == *b.column_space()))
        throw std::invalid_argument("intersect_rank: mismatched column key spaces");
    Eliminator e;
    for (auto& row : prepared_rows(a))
        e.absorb(std::move(row));
    long extra = 0;
    for (auto& row : prepared_rows(b))
        if (e.absorb(std::move(row)))
            ++extra;
    return extra;
}

long rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
    using Row = std::vector<std::pair<long, std::uint64_t>>;
    auto modval = [&](const Rat& v) -> std::uint64_t {
        mpz_class num = v.num() % static_cast<long>(p);
        if (num < 0)
            num += static_cast<long>(p);
        mpz_class den = v.den() % static_cast<long>(p);
        std::uint64_t n = num.get_ui(), d = den.get_ui();
        if (d == 0)
            throw std::domain_error("rank_mod_p: denominator divisible by p");
        // Fermat inverse.
        std::uint64_t inv = 1, base = d, e = p - 2;
        while (e) {
            if (e & 1)
                inv = static_cast<__uint128_t>(inv) * base % p;
            base = static_cast<__uint128_t>(base) * base % p;
            e >>= 1;
        }
        return static_cast<__uint128_t>(n) * inv % p;
    };
    std::map<long, Row> pivots;
    long r = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Row row;
        for (const auto& [j, v] : m.row(i)) {
            std::uint64_t x = modval(v);
            if (x)
                row.emplace_back(j, x);
        }
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                pivots.emplace(row.front().first, std::move(row));
                ++r;
                break;
            }
            const Row& piv = it->second;
            // row -= (row_lead / piv_lead) * piv
            std::uint64_t lead = row.front().second, plead = piv.front().second;
            std::uint64_t inv = 1, base = plead, e = p - 2;
            while (e) {
                if (e & 1)
                    inv = static_cast<__uint128_t>(inv) * base % p;
                base = static_cast<__uint128_t>(base) * base % p;
                e >>= 1;
            }
            std::uint64_t factor = static_cast<__uint128_t>(lead) * inv % p;
            Row out;
            std::size_t a = 1, k = 1;
            while (a < row.size() || k < piv.size()) {
                if (k >= piv.size() || (a < row.size() && row[a].first < piv[k].first)) {
                    out.push_back(row[a++]);
                } else if (a >= row.size() || piv[k].first < row[a].first) {
                    std::uint64_t x = p - static_cast<__uint128_t>(factor) * piv[k].second % p;
                    if (x == p)
                        x = 0;
                    if (x)
                        out.emplace_back(piv[k].first, x);
                    ++k;
                } else {
                    std::uint64_t sub = static_cast<__uint128_t>(factor) * piv[k].second % p;
                    std::uint64_t x = (row[a].second + p - sub) % p;
                    if (x)
                        out.emplace_back(row[a].first, x);
                    ++a;
                    ++k;
                }
            }
            row = std::move(out);
        }
    }
    return r;
}

}  // namespace m1taut
