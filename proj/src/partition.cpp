#include "m1taut/partition.hpp"

#include <map>
#include <stdexcept>

namespace m1taut {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        sum_ += parts_[i];
    }
}

Partition Partition::single_row(int n) {
    return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::single_column(int n) {
    return Partition(std::vector<int>(n, 1));
}

Partition Partition::rectangle(int part, int repeats) {
    if (repeats == 0 || part == 0)
        return Partition();
    return Partition(std::vector<int>(repeats, part));
}

Partition Partition::conjugate() const {
    if (parts_.empty())
        return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            conj[j]++;
    return Partition(std::move(conj));
}

mpz_class Partition::sn_dim() const {
    if (parts_.empty())
        return 1;
    Partition conj = conjugate();
    mpz_class num = 1;
    for (int k = 2; k <= sum_; ++k)
        num *= k;
    mpz_class hooks = 1;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < parts_[i]; ++j) {
            int hook = (parts_[i] - j - 1) + (conj.parts()[j] - i - 1) + 1;
            hooks *= hook;
        }
    return num / hooks;
}

std::vector<int> Partition::removable_rows() const {
    std::vector<int> out;
    for (int i = 0; i < rows(); ++i)
        if (i + 1 == rows() || parts_[i] > parts_[i + 1])
            out.push_back(i);
    return out;
}

Partition Partition::remove_box(int row) const {
    std::vector<int> p = parts_;
    if (row < 0 || row >= rows())
        throw std::out_of_range("Partition::remove_box: bad row");
    p[row]--;
    if (p[row] == 0)
        p.erase(p.begin() + row);
    return Partition(std::move(p));
}

std::vector<Partition> Partition::add_box_all() const {
    std::vector<Partition> out;
    for (int i = 0; i <= rows(); ++i) {
        int cur = i < rows() ? parts_[i] : 0;
        int above = i == 0 ? cur + 1 : parts_[i - 1];
        if (cur + 1 <= above) {
            std::vector<int> p = parts_;
            if (i < rows())
                p[i]++;
            else
                p.push_back(1);
            out.emplace_back(std::move(p));
        }
    }
    return out;
}

std::vector<Partition> Partition::add_horizontal_strips(int size) const {
    // mu >= lambda rowwise with mu_i <= lambda_{i-1} (strip condition) and
    // |mu| - |lambda| = size; a new row of length <= lambda_last may appear.
    std::vector<Partition> out;
    int nrows = rows();
    std::vector<int> mu(nrows + 1, 0);
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == nrows + 1) {
            if (remaining == 0) {
                std::vector<int> p;
                for (int v : mu)
                    if (v > 0)
                        p.push_back(v);
                out.emplace_back(std::move(p));
            }
            return;
        }
        int lam = row < nrows ? parts_[row] : 0;
        int cap = row == 0 ? lam + remaining : parts_[row - 1];  // mu_row <= lambda_{row-1}
        int lo = lam;
        for (int v = lo; v <= std::min(lam + remaining, cap); ++v) {
            mu[row] = v;
            self(self, row + 1, remaining - (v - lam));
        }
        mu[row] = lam;
    };
    rec(rec, 0, size);
    return out;
}

mpz_class Partition::centralizer_order() const {
    std::map<int, int> mult;
    for (int p : parts_)
        mult[p]++;
    mpz_class z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i)
            z *= k;
        for (int i = 2; i <= m; ++i)
            z *= i;
    }
    return z;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    s += ")";
    return s;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace m1taut
