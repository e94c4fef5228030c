#include "m1taut/strata.hpp"

#include <algorithm>
#include <future>
#include <set>

namespace m1taut {

void StrataVector::add(const CanonicalKey& k, const Rat& c) {
    if (c.is_zero())
        return;
    auto it = coeffs.find(k);
    if (it == coeffs.end()) {
        coeffs.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        coeffs.erase(it);
}

StrataVector StrataVector::normalized() const {
    StrataVector out;
    out.n = n;
    out.codim = codim;
    if (coeffs.empty())
        return out;
    mpz_class lcm = 1;
    for (const auto& [k, c] : coeffs)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class content = 0;
    for (const auto& [k, c] : coeffs) {
        mpz_class num = c.num() * (lcm / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    if (coeffs.begin()->second.sign() < 0)
        content = -content;
    for (const auto& [k, c] : coeffs) {
        mpz_class num = c.num() * (lcm / c.den());
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), content.get_mpz_t());
        out.coeffs.emplace(k, Rat(num));
    }
    return out;
}

SparseVector StrataVector::to_sparse() const {
    SparseVector v;
    for (const auto& [k, c] : coeffs)
        v.set(k, c);
    return v;
}

std::vector<CanonicalKey> generators(int n, int codim) {
    std::vector<CanonicalKey> keys;
    for (const StableGraph& g : enumerate_graphs(n, codim))
        keys.push_back(canonical_form(g));
    std::sort(keys.begin(), keys.end());
    return keys;
}

namespace {

// S(xy|zw): all splittings of the genus-0 vertex v into two genus-0
// vertices joined by one edge, with x,y kept and z,w moved, the remaining
// half-edges distributed in all ways. Every splitting is stable (each side
// carries two of the chosen half-edges plus the new edge end).
StrataVector wdvv_sum(const StableGraph& g, int v, const Stub& z, const Stub& w,
                      const std::vector<Stub>& rest) {
    StrataVector out;
    out.n = g.n;
    out.codim = g.codim() + 1;
    int r = static_cast<int>(rest.size());
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<Stub> moved = {z, w};
        for (int i = 0; i < r; ++i)
            if (mask & (1 << i))
                moved.push_back(rest[i]);
        auto h = split_vertex(g, v, 0, 0, moved);
        if (h)
            out.add(canonical_form(*h), Rat(1));
    }
    return out;
}

StrataVector diff(const StrataVector& a, const StrataVector& b) {
    StrataVector out = a;
    for (const auto& [k, c] : b.coeffs)
        out.add(k, -c);
    return out;
}

}  // namespace

std::vector<StrataVector> wdvv_relations(int n, int codim, bool dedup_by_aut_orbit) {
    if (codim < 1)
        throw std::invalid_argument("wdvv_relations: codim must be >= 1");
    std::vector<StrataVector> out;
    std::set<std::map<CanonicalKey, Rat>> seen;  // only when deduplicating
    for (const StableGraph& g : enumerate_graphs(n, codim - 1)) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (g.genus[v] != 0)
                continue;
            std::vector<Stub> stubs = stubs_at(g, v);
            int s = static_cast<int>(stubs.size());
            if (s < 4)
                continue;
            std::vector<Stub> rest;
            for (int a = 0; a < s; ++a)
                for (int b = a + 1; b < s; ++b)
                    for (int c = b + 1; c < s; ++c)
                        for (int d = c + 1; d < s; ++d) {
                            rest.clear();
                            for (int i = 0; i < s; ++i)
                                if (i != a && i != b && i != c && i != d)
                                    rest.push_back(stubs[i]);
                            StrataVector s_ab_cd = wdvv_sum(g, v, stubs[c], stubs[d], rest);
                            StrataVector s_ac_bd = wdvv_sum(g, v, stubs[b], stubs[d], rest);
                            StrataVector s_ad_bc = wdvv_sum(g, v, stubs[b], stubs[c], rest);
                            for (StrataVector rel :
                                 {diff(s_ab_cd, s_ac_bd), diff(s_ab_cd, s_ad_bc)}) {
                                if (rel.is_zero())
                                    continue;
                                rel = rel.normalized();
                                if (dedup_by_aut_orbit && !seen.insert(rel.coeffs).second)
                                    continue;
                                out.push_back(std::move(rel));
                            }
                        }
        }
    }
    return out;
}

StrataVector GetzlerRelationData::vector() const {
    StrataVector v;
    v.n = 4;
    v.codim = 2;
    for (const auto& [g, c] : terms)
        v.add(canonical_form(g), c);
    return v;
}

std::vector<StrataVector> getzler_relations(int n, int codim, const GetzlerRelationData& data) {
    if (codim < 2)
        throw std::invalid_argument("getzler_relations: codim must be >= 2");
    std::vector<StrataVector> out;
    for (const StableGraph& host : enumerate_graphs(n, codim - 2)) {
        int v = host.genus_one_vertex();
        if (v < 0)
            continue;
        std::vector<Stub> stubs = stubs_at(host, v);
        int s = static_cast<int>(stubs.size());
        if (s < 4)
            continue;
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b)
                for (int c = b + 1; c < s; ++c)
                    for (int d = c + 1; d < s; ++d) {
                        std::vector<Stub> four = {stubs[a], stubs[b], stubs[c], stubs[d]};
                        std::vector<Stub> rest;
                        for (int i = 0; i < s; ++i)
                            if (i != a && i != b && i != c && i != d)
                                rest.push_back(stubs[i]);
                        StrataVector rel;
                        rel.n = n;
                        rel.codim = codim;
                        for (const auto& [graph, coeff] : data.terms) {
                            // Guest: the term with the leftover half-edges
                            // attached as extra legs, one distribution each.
                            for (const StableGraph& guest :
                                 distribute_legs(graph, static_cast<int>(rest.size()))) {
                                std::vector<Stub> matching = four;
                                matching.insert(matching.end(), rest.begin(), rest.end());
                                auto res = try_substitute_vertex(host, v, guest, matching);
                                if (res)
                                    rel.add(canonical_form(*res), coeff);
                            }
                        }
                        if (!rel.is_zero())
                            out.push_back(rel.normalized());
                    }
    }
    return out;
}

long relation_rank(int n, int codim, const GetzlerRelationData* getzler) {
    if (codim < 1)
        return 0;
    auto cols = std::make_shared<ColumnSpace>(generators(n, codim));
    SparseMatrix m(cols);
    for (const StrataVector& rel : wdvv_relations(n, codim))
        m.add_row(rel.to_sparse());
    if (getzler && codim >= 2)
        for (const StrataVector& rel : getzler_relations(n, codim, *getzler))
            m.add_row(rel.to_sparse());
    return rank(m);
}

std::vector<long> even_betti(int n, const GetzlerRelationData* getzler, int threads) {
    if (n < 1)
        throw std::invalid_argument("even_betti: n must be >= 1");
    std::vector<long> r(n + 1, 0);
    auto compute = [&](int k) -> long {
        long gens = static_cast<long>(generators(n, k).size());
        return gens - relation_rank(n, k, getzler);
    };
    if (threads <= 1) {
        for (int k = 0; k <= n; ++k)
            r[k] = compute(k);
    } else {
        // Pre-warm the shared enumeration cache serially.
        for (int k = 0; k <= n; ++k)
            enumerate_graphs(n, k);
        std::vector<std::future<long>> fut(n + 1);
        for (int k = 0; k <= n; ++k)
            fut[k] = std::async(std::launch::async, compute, k);
        for (int k = 0; k <= n; ++k)
            r[k] = fut[k].get();
    }
    return r;
}

StrataVector act_on_strata(const StrataVector& v, const std::vector<int>& perm) {
    StrataVector out;
    out.n = v.n;
    out.codim = v.codim;
    for (const auto& [k, c] : v.coeffs) {
        StableGraph g = decode_canonical_key(k);
        out.add(canonical_form(relabel_legs(g, perm)), c);
    }
    return out;
}

StrataVector symmetrize(const StrataVector& v) {
    std::vector<int> perm(v.n);
    for (int i = 0; i < v.n; ++i)
        perm[i] = i + 1;
    StrataVector out;
    out.n = v.n;
    out.codim = v.codim;
    do {
        for (const auto& [k, c] : act_on_strata(v, perm).coeffs)
            out.add(k, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

StrataVector pullback_strata(const StrataVector& v, int extra) {
    StrataVector out;
    out.n = v.n + extra;
    out.codim = v.codim;
    for (const auto& [k, c] : v.coeffs) {
        StableGraph g = decode_canonical_key(k);
        for (const StableGraph& h : distribute_legs(g, extra))
            out.add(canonical_form(h), c);
    }
    return out;
}

}  // namespace m1taut
