#include "m1taut/sn_module.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace m1taut {

SnModule::SnModule(int n, std::map<Partition, long> summands)
    : n_(n), summands_(std::move(summands)) {
    for (const auto& [lam, m] : summands_) {
        if (lam.sum() != n_)
            throw std::invalid_argument("SnModule: summand " + lam.str() +
                                        " is not a partition of " + std::to_string(n_));
        if (m < 0)
            throw std::invalid_argument("SnModule: negative multiplicity");
    }
    std::erase_if(summands_, [](const auto& e) { return e.second == 0; });
}

void SnModule::add(const Partition& lambda, long mult) {
    if (lambda.sum() != n_)
        throw std::invalid_argument("SnModule::add: partition of wrong size");
    summands_[lambda] += mult;
    if (summands_[lambda] == 0)
        summands_.erase(lambda);
    else if (summands_[lambda] < 0)
        throw std::invalid_argument("SnModule::add: negative multiplicity");
}

long SnModule::mult(const Partition& lambda) const {
    auto it = summands_.find(lambda);
    return it == summands_.end() ? 0 : it->second;
}

mpz_class SnModule::dim() const {
    mpz_class d = 0;
    for (const auto& [lam, m] : summands_)
        d += lam.sn_dim() * m;
    return d;
}

std::string SnModule::str() const {
    if (summands_.empty())
        return "0";
    std::string s;
    for (const auto& [lam, m] : summands_) {
        if (!s.empty())
            s += " + ";
        if (m != 1)
            s += std::to_string(m) + "*";
        s += "V" + lam.str();
    }
    return s;
}

namespace {

// Murnaghan-Nakayama via beta numbers: removing a border strip of size k
// means moving one beta number down by k onto a free slot; the sign is
// (-1)^(number of occupied slots jumped over).
mpz_class mn_recurse(const std::vector<int>& betas, const std::vector<int>& mu, std::size_t mi) {
    if (mi == mu.size())
        return 1;
    int k = mu[mi];
    mpz_class total = 0;
    for (std::size_t i = 0; i < betas.size(); ++i) {
        int target = betas[i] - k;
        if (target < 0)
            continue;
        bool occupied = false;
        int jumped = 0;
        for (std::size_t j = 0; j < betas.size(); ++j) {
            if (j == i)
                continue;
            if (betas[j] == target) {
                occupied = true;
                break;
            }
            if (betas[j] > target && betas[j] < betas[i])
                ++jumped;
        }
        if (occupied)
            continue;
        std::vector<int> next = betas;
        next[i] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        mpz_class sub = mn_recurse(next, mu, mi + 1);
        if (jumped % 2)
            total -= sub;
        else
            total += sub;
    }
    return total;
}

std::map<std::pair<Partition, Partition>, mpz_class> g_mn_cache;
std::mutex g_mn_mutex;

}  // namespace

mpz_class sn_character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum())
        throw std::invalid_argument("sn_character_value: |lambda| != |mu|");
    if (lambda.sum() == 0)
        return 1;
    {
        std::lock_guard<std::mutex> lock(g_mn_mutex);
        auto it = g_mn_cache.find({lambda, mu});
        if (it != g_mn_cache.end())
            return it->second;
    }
    int L = lambda.rows();
    std::vector<int> betas(L);
    for (int i = 0; i < L; ++i)
        betas[i] = lambda.parts()[i] + (L - 1 - i);
    mpz_class val = mn_recurse(betas, mu.parts(), 0);
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    g_mn_cache.emplace(std::make_pair(lambda, mu), val);
    return val;
}

mpz_class module_character(const SnModule& mod, const Partition& mu) {
    mpz_class v = 0;
    for (const auto& [lam, m] : mod.summands())
        v += sn_character_value(lam, mu) * m;
    return v;
}

SnModule restrict_module(const SnModule& mod) {
    if (mod.n() < 1)
        throw std::invalid_argument("restrict_module: need n >= 1");
    SnModule out(mod.n() - 1);
    for (const auto& [lam, m] : mod.summands())
        for (int row : lam.removable_rows())
            out.add(lam.remove_box(row), m);
    return out;
}

SnModule pieri_induce(int m, const Partition& lambda) {
    if (m < 0)
        throw std::invalid_argument("pieri_induce: m must be >= 0");
    SnModule out(m + lambda.sum());
    for (const Partition& mu : lambda.add_horizontal_strips(m))
        out.add(mu, 1);
    return out;
}

namespace {

bool restriction_dfs(std::map<Partition, long>& target, SnModule& witness) {
    auto it = std::find_if(target.begin(), target.end(),
                           [](const auto& e) { return e.second > 0; });
    if (it == target.end())
        return true;
    const Partition p = it->first;
    for (const Partition& mu : p.add_box_all()) {
        bool feasible = true;
        std::vector<Partition> removed;
        for (int row : mu.removable_rows()) {
            Partition nu = mu.remove_box(row);
            if (--target[nu] < 0)
                feasible = false;
            removed.push_back(std::move(nu));
        }
        if (feasible) {
            witness.add(mu, 1);
            if (restriction_dfs(target, witness))
                return true;
            witness.add(mu, -1);
        }
        for (const Partition& nu : removed)
            ++target[nu];
    }
    return false;
}

}  // namespace

std::optional<SnModule> is_restriction(const SnModule& mod) {
    std::map<Partition, long> target(mod.summands().begin(), mod.summands().end());
    SnModule witness(mod.n() + 1);
    if (restriction_dfs(target, witness))
        return witness;
    return std::nullopt;
}

SnModule decompose_character(int n, const std::map<Partition, Rat>& char_values) {
    std::vector<Partition> classes = partitions_of(n);
    for (const Partition& mu : classes)
        if (!char_values.count(mu))
            throw std::domain_error("decompose_character: missing class " + mu.str());
    SnModule out(n);
    for (const Partition& lam : classes) {
        Rat acc(0);
        for (const Partition& mu : classes) {
            Rat term = char_values.at(mu) * Rat(sn_character_value(lam, mu));
            term /= Rat(mu.centralizer_order());
            acc += term;
        }
        if (!acc.is_integer() || acc.sign() < 0)
            throw std::domain_error("decompose_character: multiplicity of " + lam.str() +
                                    " is " + acc.str() + ", not a nonnegative integer");
        if (!acc.is_zero())
            out.add(lam, acc.num().get_si());
    }
    return out;
}

}  // namespace m1taut
