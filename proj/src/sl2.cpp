#include "m1taut/sl2.hpp"

#include <stdexcept>

namespace m1taut {

SL2Rep SL2Rep::irreducible(int k, int twist, long mult) {
    SL2Rep r;
    r.add(k, twist, mult);
    return r;
}

void SL2Rep::add(int k, int twist, long mult) {
    if (k < 0 || twist < 0)
        throw std::invalid_argument("SL2Rep: k and twist must be >= 0");
    if (mult == 0)
        return;
    auto key = std::make_pair(k, twist);
    summands_[key] += mult;
    if (summands_[key] == 0)
        summands_.erase(key);
    else if (summands_[key] < 0)
        throw std::invalid_argument("SL2Rep: negative multiplicity");
}

long SL2Rep::mult(int k, int twist) const {
    auto it = summands_.find({k, twist});
    return it == summands_.end() ? 0 : it->second;
}

mpz_class SL2Rep::dim() const {
    mpz_class d = 0;
    for (const auto& [km, m] : summands_)
        d += mpz_class(km.first + 1) * m;
    return d;
}

bool SL2Rep::pure_of_weight(int w) const {
    for (const auto& [km, m] : summands_)
        if (km.first + 2 * km.second != w)
            return false;
    return true;
}

SL2Rep& SL2Rep::operator+=(const SL2Rep& o) {
    for (const auto& [km, m] : o.summands_)
        add(km.first, km.second, m);
    return *this;
}

std::string SL2Rep::str() const {
    if (summands_.empty())
        return "0";
    std::string s;
    for (const auto& [km, m] : summands_) {
        if (!s.empty())
            s += " + ";
        if (m != 1)
            s += std::to_string(m) + "*";
        s += km.first == 0 ? "Q" : "V" + std::to_string(km.first);
        if (km.second != 0)
            s += "(-" + std::to_string(km.second) + ")";
    }
    return s;
}

SL2Rep clebsch_gordan(const SL2Rep& a, const SL2Rep& b) {
    SL2Rep out;
    for (const auto& [km1, m1] : a.summands())
        for (const auto& [km2, m2] : b.summands()) {
            int ka = km1.first, kb = km2.first;
            int tw = km1.second + km2.second;
            for (int i = 0; i <= std::min(ka, kb); ++i)
                out.add(ka + kb - 2 * i, tw + i, m1 * m2);
        }
    return out;
}

long sl2_invariants(const SL2Rep& d) {
    long total = 0;
    for (const auto& [km, m] : d.summands())
        if (km.first == 0)
            total += m;
    return total;
}

std::vector<SchurWeylSummand> schur_weyl(int p) {
    if (p < 0)
        throw std::invalid_argument("schur_weyl: p must be >= 0");
    std::vector<SchurWeylSummand> out;
    for (int b = 0; 2 * b <= p; ++b) {
        int a = p - b;  // mu = (a, b), a >= b
        std::vector<int> mu;
        if (a > 0)
            mu.push_back(a);
        if (b > 0)
            mu.push_back(b);
        out.push_back({a - b, b, Partition(mu).conjugate()});
    }
    return out;
}

}  // namespace m1taut
