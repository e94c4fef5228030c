#include "m1taut/stable_graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace m1taut {

int StableGraph::first_betti() const {
    return codim() - num_vertices() + 1;  // connected graphs only
}

int StableGraph::degree(int v) const {
    int d = 0;
    for (int lv : leg_vertex)
        if (lv == v)
            ++d;
    for (const auto& [a, b] : edges) {
        if (a == v)
            ++d;
        if (b == v)
            ++d;
    }
    return d;
}

std::vector<int> StableGraph::legs_at(int v) const {
    std::vector<int> out;
    for (int l = 1; l <= n; ++l)
        if (leg_vertex[l - 1] == v)
            out.push_back(l);
    return out;
}

int StableGraph::genus_one_vertex() const {
    for (int v = 0; v < num_vertices(); ++v)
        if (genus[v] == 1)
            return v;
    return -1;
}

void StableGraph::validate() const {
    validate_as_genus(1);
    if (codim() > n)
        throw std::invalid_argument("StableGraph: codimension exceeds n");
}

void StableGraph::validate_as_genus(int total_genus) const {
    int nv = num_vertices();
    if (nv == 0)
        throw std::invalid_argument("StableGraph: no vertices");
    if (static_cast<int>(leg_vertex.size()) != n)
        throw std::invalid_argument("StableGraph: leg list does not match n");
    for (int g : genus)
        if (g != 0 && g != 1)
            throw std::invalid_argument("StableGraph: vertex genus must be 0 or 1");
    for (int lv : leg_vertex)
        if (lv < 0 || lv >= nv)
            throw std::invalid_argument("StableGraph: leg attached to missing vertex");
    for (const auto& [a, b] : edges)
        if (a < 0 || b < 0 || a >= nv || b >= nv || a > b)
            throw std::invalid_argument("StableGraph: malformed edge");

    // Connectivity.
    std::vector<int> comp(nv, -1);
    std::vector<int> stack = {0};
    comp[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : edges) {
            int w = -1;
            if (a == v)
                w = b;
            else if (b == v)
                w = a;
            if (w >= 0 && comp[w] == -1) {
                comp[w] = 0;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < nv; ++v)
        if (comp[v] == -1)
            throw std::invalid_argument("StableGraph: not connected");

    int vertex_genus = std::accumulate(genus.begin(), genus.end(), 0);
    if (vertex_genus + first_betti() != total_genus)
        throw std::invalid_argument(total_genus == 1
                                        ? "StableGraph: total genus is not one"
                                        : "StableGraph: wrong total genus");

    for (int v = 0; v < nv; ++v) {
        if (genus[v] == 0 && degree(v) < 3)
            throw std::invalid_argument("StableGraph: unstable genus-0 vertex");
        if (genus[v] == 1 && degree(v) < 1)
            throw std::invalid_argument("StableGraph: unstable genus-1 vertex");
    }
}

bool StableGraph::is_valid() const {
    try {
        validate();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

StableGraph StableGraph::smooth(int n) {
    StableGraph g;
    g.n = n;
    g.genus = {1};
    g.leg_vertex.assign(n, 0);
    return g;
}

namespace {

std::string encode_under(const StableGraph& g, const std::vector<int>& pos) {
    // pos[old vertex] = new index. Compact byte encoding.
    std::string s;
    s.reserve(8 + g.n + 3 * g.edges.size());
    s += static_cast<char>(g.n);
    s += static_cast<char>(g.num_vertices());
    std::vector<char> gen(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        gen[pos[v]] = static_cast<char>(g.genus[v]);
    s.append(gen.begin(), gen.end());
    for (int l = 0; l < g.n; ++l)
        s += static_cast<char>(pos[g.leg_vertex[l]]);
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        int x = pos[a], y = pos[b];
        es.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(es.begin(), es.end());
    for (const auto& [a, b] : es) {
        s += static_cast<char>(a);
        s += static_cast<char>(b);
    }
    return s;
}

// Vertex invariant used to refine the candidate orderings: isomorphisms can
// only match vertices with equal (genus, leg set, degree, loop count).
std::vector<std::string> vertex_invariants(const StableGraph& g) {
    std::vector<std::string> inv(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::string s;
        s += static_cast<char>(g.genus[v]);
        s += static_cast<char>(g.degree(v));
        int loops = 0;
        for (const auto& [a, b] : g.edges)
            if (a == v && b == v)
                ++loops;
        s += static_cast<char>(loops);
        for (int l : g.legs_at(v))
            s += static_cast<char>(l);
        inv[v] = s;
    }
    return inv;
}

// All orderings compatible with the invariant classes, as pos maps.
template <typename F>
void for_each_class_ordering(const StableGraph& g, F&& f) {
    int nv = g.num_vertices();
    std::vector<std::string> inv = vertex_invariants(g);
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return inv[a] != inv[b] ? inv[a] < inv[b] : a < b;
    });
    // Group boundaries of equal-invariant runs.
    std::vector<std::pair<int, int>> groups;
    for (int i = 0; i < nv;) {
        int j = i;
        while (j < nv && inv[order[j]] == inv[order[i]])
            ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    std::vector<int> pos(nv);
    auto rec = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            for (int i = 0; i < nv; ++i)
                pos[order[i]] = i;
            f(pos);
            return;
        }
        auto [lo, hi] = groups[gi];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            self(self, gi + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(rec, 0);
}

}  // namespace

CanonicalKey canonical_form(const StableGraph& g) {
    g.validate();
    std::string best;
    for_each_class_ordering(g, [&](const std::vector<int>& pos) {
        std::string s = encode_under(g, pos);
        if (best.empty() || s < best)
            best = std::move(s);
    });
    return best;
}

StableGraph canonical_representative(const StableGraph& g) {
    g.validate();
    std::string best;
    std::vector<int> best_pos;
    for_each_class_ordering(g, [&](const std::vector<int>& pos) {
        std::string s = encode_under(g, pos);
        if (best.empty() || s < best) {
            best = std::move(s);
            best_pos = pos;
        }
    });
    StableGraph out;
    out.n = g.n;
    out.genus.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        out.genus[best_pos[v]] = g.genus[v];
    out.leg_vertex.resize(g.n);
    for (int l = 0; l < g.n; ++l)
        out.leg_vertex[l] = best_pos[g.leg_vertex[l]];
    for (const auto& [a, b] : g.edges) {
        int x = best_pos[a], y = best_pos[b];
        out.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

long automorphism_count(const StableGraph& g) {
    g.validate();
    // Count vertex permutations preserving genus, legs pointwise, and edge
    // multiplicities; every such permutation lifts to mult! half-edge maps
    // per parallel class, times 2 per loop for the loop half-edge swap.
    std::map<std::pair<int, int>, int> mult;
    int loops = 0;
    for (const auto& e : g.edges) {
        mult[e]++;
        if (e.first == e.second)
            ++loops;
    }
    // The orderings achieving the canonical (minimal) encoding are a torsor
    // under the vertex-level automorphism group.
    std::string best;
    long nperm = 0;
    for_each_class_ordering(g, [&](const std::vector<int>& pos) {
        std::string s = encode_under(g, pos);
        if (best.empty() || s < best) {
            best = std::move(s);
            nperm = 1;
        } else if (s == best) {
            ++nperm;
        }
    });
    long lifts = 1;
    for (const auto& [e, m] : mult)
        for (int i = 2; i <= m; ++i)
            lifts *= i;
    for (int i = 0; i < loops; ++i)
        lifts *= 2;
    return nperm * lifts;
}

StableGraph decode_canonical_key(const CanonicalKey& key) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= key.size())
            throw std::invalid_argument("decode_canonical_key: truncated key");
        return static_cast<unsigned char>(key[pos++]);
    };
    StableGraph g;
    g.n = next();
    int nv = next();
    g.genus.resize(nv);
    for (int v = 0; v < nv; ++v)
        g.genus[v] = next();
    g.leg_vertex.resize(g.n);
    for (int l = 0; l < g.n; ++l)
        g.leg_vertex[l] = next();
    while (pos < key.size()) {
        int a = next();
        int b = next();
        g.edges.emplace_back(a, b);
    }
    g.validate();
    return g;
}

std::optional<StableGraph> split_vertex(const StableGraph& g, int v, int genus_keep,
                                        int genus_new, const std::vector<Stub>& moved) {
    StableGraph h = g;
    int nv = h.num_vertices();
    h.genus[v] = genus_keep;
    h.genus.push_back(genus_new);
    for (const Stub& st : moved) {
        if (st.kind == Stub::Leg) {
            h.leg_vertex[st.index - 1] = nv;
        } else {
            auto& e = h.edges[st.index];
            if (st.end == 0)
                e.first = nv;
            else
                e.second = nv;
        }
    }
    for (auto& e : h.edges)
        if (e.first > e.second)
            std::swap(e.first, e.second);
    h.edges.emplace_back(v, nv);
    std::sort(h.edges.begin(), h.edges.end());
    if (h.genus[v] == 0 && h.degree(v) < 3)
        return std::nullopt;
    if (h.genus[nv] == 0 && h.degree(nv) < 3)
        return std::nullopt;
    return h;
}

std::vector<Stub> stubs_at(const StableGraph& g, int v) {
    std::vector<Stub> out;
    for (int l : g.legs_at(v))
        out.push_back({Stub::Leg, l, 0});
    for (int e = 0; e < g.codim(); ++e) {
        if (g.edges[e].first == v)
            out.push_back({Stub::EdgeEnd, e, 0});
        if (g.edges[e].second == v)
            out.push_back({Stub::EdgeEnd, e, 1});
    }
    return out;
}

std::optional<StableGraph> try_substitute_vertex(const StableGraph& host, int v,
                                                 const StableGraph& guest,
                                                 const std::vector<Stub>& matching) {
    host.validate();
    if (v < 0 || v >= host.num_vertices())
        throw std::invalid_argument("substitute_vertex: bad vertex");
    guest.validate_as_genus(host.genus[v]);
    std::vector<Stub> stubs = stubs_at(host, v);
    if (guest.n != static_cast<int>(stubs.size()) ||
        matching.size() != stubs.size())
        throw std::invalid_argument("substitute_vertex: guest legs must match stubs at v");
    {
        std::set<Stub> seen(matching.begin(), matching.end());
        if (seen.size() != matching.size() ||
            !std::includes(seen.begin(), seen.end(), stubs.begin(), stubs.end()))
            throw std::invalid_argument("substitute_vertex: matching is not a bijection onto stubs");
    }

    // New vertex numbering: host vertices except v keep relative order,
    // guest vertices appended.
    int hv = host.num_vertices();
    std::vector<int> hostmap(hv, -1);
    int next = 0;
    for (int w = 0; w < hv; ++w)
        if (w != v)
            hostmap[w] = next++;
    int guest_base = next;

    StableGraph out;
    out.n = host.n;
    for (int w = 0; w < hv; ++w)
        if (w != v)
            out.genus.push_back(host.genus[w]);
    for (int w = 0; w < guest.num_vertices(); ++w)
        out.genus.push_back(guest.genus[w]);

    // Where each stub of v lands: the guest vertex carrying its matched leg.
    std::map<Stub, int> stub_target;
    for (std::size_t i = 0; i < matching.size(); ++i)
        stub_target[matching[i]] = guest_base + guest.leg_vertex[i];

    out.leg_vertex.resize(host.n);
    for (int l = 1; l <= host.n; ++l) {
        int w = host.leg_vertex[l - 1];
        out.leg_vertex[l - 1] =
            w == v ? stub_target.at({Stub::Leg, l, 0}) : hostmap[w];
    }
    for (int e = 0; e < host.codim(); ++e) {
        auto [a, b] = host.edges[e];
        int na = a == v ? stub_target.at({Stub::EdgeEnd, e, 0}) : hostmap[a];
        int nb = b == v ? stub_target.at({Stub::EdgeEnd, e, 1}) : hostmap[b];
        out.edges.emplace_back(std::min(na, nb), std::max(na, nb));
    }
    for (const auto& [a, b] : guest.edges)
        out.edges.emplace_back(guest_base + a, guest_base + b);
    std::sort(out.edges.begin(), out.edges.end());

    for (int w = 0; w < out.num_vertices(); ++w) {
        if (out.genus[w] == 0 && out.degree(w) < 3)
            return std::nullopt;
        if (out.genus[w] == 1 && out.degree(w) < 1)
            return std::nullopt;
    }
    out.validate();
    return out;
}

StableGraph substitute_vertex(const StableGraph& host, int v, const StableGraph& guest,
                              const std::vector<Stub>& matching) {
    auto r = try_substitute_vertex(host, v, guest, matching);
    if (!r)
        throw std::invalid_argument("substitute_vertex: unstable result");
    return *r;
}

std::vector<StableGraph> distribute_legs(const StableGraph& g, int extra) {
    g.validate();
    if (extra < 0)
        throw std::invalid_argument("distribute_legs: extra must be >= 0");
    std::vector<StableGraph> out;
    int nv = g.num_vertices();
    std::vector<int> target(extra, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == extra) {
            StableGraph h = g;
            h.n = g.n + extra;
            for (int j = 0; j < extra; ++j)
                h.leg_vertex.push_back(target[j]);
            out.push_back(std::move(h));
            return;
        }
        for (int v = 0; v < nv; ++v) {
            target[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

StableGraph relabel_legs(const StableGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw std::invalid_argument("relabel_legs: permutation size mismatch");
    StableGraph out = g;
    for (int l = 1; l <= g.n; ++l)
        out.leg_vertex[perm[l - 1] - 1] = g.leg_vertex[l - 1];
    return out;
}

namespace {

// One degeneration step: all stable graphs obtained from g by splitting a
// vertex (new separating edge) or converting a genus-1 vertex to a loop.
std::vector<StableGraph> degenerations(const StableGraph& g) {
    std::vector<StableGraph> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.genus[v] == 1) {
            StableGraph h = g;
            h.genus[v] = 0;
            h.edges.emplace_back(v, v);
            std::sort(h.edges.begin(), h.edges.end());
            out.push_back(std::move(h));
        }
        // Splits: v becomes v (kept stubs) -- new vertex (moved stubs).
        std::vector<Stub> stubs = stubs_at(g, v);
        int s = static_cast<int>(stubs.size());
        std::vector<std::pair<int, int>> genus_splits;
        if (g.genus[v] == 1)
            genus_splits = {{1, 0}, {0, 1}};
        else
            genus_splits = {{0, 0}};
        for (int mask = 0; mask < (1 << s); ++mask) {
            std::vector<Stub> moved;
            for (int i = 0; i < s; ++i)
                if (mask & (1 << i))
                    moved.push_back(stubs[i]);
            for (auto [gkeep, gnew] : genus_splits)
                if (auto h = split_vertex(g, v, gkeep, gnew, moved))
                    out.push_back(std::move(*h));
        }
    }
    return out;
}

std::map<std::pair<int, int>, std::vector<StableGraph>> g_enum_cache;
std::mutex g_enum_mutex;

}  // namespace

const std::vector<StableGraph>& enumerate_graphs(int n, int codim) {
    if (n < 1)
        throw std::invalid_argument("enumerate_graphs: n must be >= 1");
    if (codim < 0 || codim > n)
        throw std::invalid_argument("enumerate_graphs: need 0 <= codim <= n");
    std::lock_guard<std::mutex> lock(g_enum_mutex);
    auto key = std::make_pair(n, codim);
    auto it = g_enum_cache.find(key);
    if (it != g_enum_cache.end())
        return it->second;

    std::vector<StableGraph> level = {StableGraph::smooth(n)};
    if (!g_enum_cache.count({n, 0}))
        g_enum_cache[{n, 0}] = level;
    for (int c = 1; c <= codim; ++c) {
        auto lk = std::make_pair(n, c);
        if (auto lit = g_enum_cache.find(lk); lit != g_enum_cache.end()) {
            level = lit->second;
            continue;
        }
        std::map<CanonicalKey, StableGraph> classes;
        for (const StableGraph& g : level)
            for (StableGraph& h : degenerations(g)) {
                CanonicalKey k = canonical_form(h);
                if (!classes.count(k))
                    classes.emplace(std::move(k), canonical_representative(h));
            }
        level.clear();
        for (auto& [k, g] : classes)
            level.push_back(std::move(g));
        g_enum_cache[lk] = level;
    }
    return g_enum_cache[key];
}

namespace {

bool isomorphic_naive(const StableGraph& a, const StableGraph& b) {
    if (a.n != b.n || a.num_vertices() != b.num_vertices() ||
        a.edges.size() != b.edges.size())
        return false;
    int nv = a.num_vertices();
    std::vector<int> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> bes = b.edges;
    std::sort(bes.begin(), bes.end());
    do {
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v)
            if (a.genus[v] != b.genus[perm[v]])
                ok = false;
        for (int l = 0; l < a.n && ok; ++l)
            if (perm[a.leg_vertex[l]] != b.leg_vertex[l])
                ok = false;
        if (ok) {
            std::vector<std::pair<int, int>> aes;
            for (const auto& [x, y] : a.edges) {
                int u = perm[x], v = perm[y];
                aes.emplace_back(std::min(u, v), std::max(u, v));
            }
            std::sort(aes.begin(), aes.end());
            if (aes == bes)
                return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

std::vector<StableGraph> enumerate_graphs_naive(int n, int codim) {
    std::vector<StableGraph> found;
    // #vertices: codim+1 (genus-1 tree) or codim (all genus 0, betti 1);
    // codim 0 is just the smooth graph.
    std::vector<int> sizes;
    if (codim == 0)
        sizes = {1};
    else
        sizes = {codim, codim + 1};
    for (int nv : sizes) {
        if (nv < 1)
            continue;
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < nv; ++a)
            for (int b = a; b < nv; ++b)
                pairs.emplace_back(a, b);
        // Multisets of `codim` edges over the pairs.
        std::vector<int> pick(codim, 0);
        auto edges_rec = [&](auto&& self, int i, int lo) -> void {
            if (i == codim) {
                StableGraph g;
                g.n = n;
                for (int j = 0; j < codim; ++j)
                    g.edges.push_back(pairs[pick[j]]);
                for (int g1 = -1; g1 < nv; ++g1) {  // -1: no genus-1 vertex
                    g.genus.assign(nv, 0);
                    if (g1 >= 0)
                        g.genus[g1] = 1;
                    std::vector<int> legs(n, 0);
                    auto legs_rec = [&](auto&& lself, int li) -> void {
                        if (li == n) {
                            g.leg_vertex = legs;
                            if (!g.is_valid())
                                return;
                            for (const StableGraph& f : found)
                                if (isomorphic_naive(g, f))
                                    return;
                            found.push_back(g);
                            return;
                        }
                        for (int v = 0; v < nv; ++v) {
                            legs[li] = v;
                            lself(lself, li + 1);
                        }
                    };
                    legs_rec(legs_rec, 0);
                }
                return;
            }
            for (int p = lo; p < static_cast<int>(pairs.size()); ++p) {
                pick[i] = p;
                self(self, i + 1, p);
            }
        };
        edges_rec(edges_rec, 0, 0);
    }
    return found;
}

}  // namespace m1taut
