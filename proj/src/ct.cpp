#include "m1taut/ct.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "m1taut/json_io.hpp"

namespace m1taut::ct {

int Monomial::torus_weight() const {
    int t = 0;
    for (const auto& [pos, l] : letters)
        t += l == Letter::A ? 1 : -1;
    return t;
}

BasisKey Monomial::key() const {
    std::string s;
    s.reserve(2 + 2 * pairs.size() + 2 * letters.size());
    s += static_cast<char>(pairs.size());
    for (const auto& [i, j] : pairs) {
        s += static_cast<char>(i);
        s += static_cast<char>(j);
    }
    s += static_cast<char>(letters.size());
    for (const auto& [pos, l] : letters) {
        s += static_cast<char>(pos);
        s += static_cast<char>(l);
    }
    return s;
}

std::string Monomial::str() const {
    if (pairs.empty() && letters.empty())
        return "1";
    std::string s;
    for (const auto& [i, j] : pairs)
        s += "w(" + std::to_string(i) + "," + std::to_string(j) + ")";
    for (const auto& [pos, l] : letters)
        s += std::string(l == Letter::A ? "a" : "b") + std::to_string(pos);
    return s;
}

namespace {

// Internal odd symbol: the normalization engine works on words of these.
struct Sym {
    bool is_omega;
    int a, b;  // omega endpoints (a < b after orientation), or (position, -)
    Letter l = Letter::A;

    std::tuple<int, int, int> sort_key() const {
        return is_omega ? std::tuple<int, int, int>{0, b, a}
                        : std::tuple<int, int, int>{1, a, static_cast<int>(l)};
    }
};

Sym omega_sym(int i, int j) { return {true, std::min(i, j), std::max(i, j), Letter::A}; }
Sym letter_sym(int pos, Letter l) { return {false, pos, 0, l}; }

std::vector<Sym> word_of(const Monomial& m) {
    std::vector<Sym> w;
    w.reserve(m.pairs.size() + m.letters.size());
    for (const auto& [i, j] : m.pairs)
        w.push_back(omega_sym(i, j));
    for (const auto& [pos, l] : m.letters)
        w.push_back(letter_sym(pos, l));
    return w;
}

// Reduce a word of odd symbols to the normal-form basis:
//   - omega orientation is free (real dimension 2), omega^2 = 0;
//   - two letters at one position vanish (H^2(U) = 0);
//   - Arnold straightening makes the larger pair indices distinct;
//   - letters slide to block minima along the pair graph;
//   - all resorting of odd symbols contributes Koszul signs.
void normalize_into(std::vector<Sym> word0, Rat coeff0, Element& out) {
    struct Item {
        std::vector<Sym> word;
        Rat coeff;
    };
    std::vector<Item> work;
    work.push_back({std::move(word0), std::move(coeff0)});
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero())
            continue;
        bool zero = false;
        for (auto& s : w)
            if (s.is_omega && s.a == s.b) {
                zero = true;
                break;
            }
        if (zero)
            continue;

        // Insertion sort, counting inversions of odd symbols.
        long inversions = 0;
        for (std::size_t i = 1; i < w.size(); ++i) {
            Sym s = w[i];
            std::size_t j = i;
            while (j > 0 && s.sort_key() < w[j - 1].sort_key()) {
                w[j] = w[j - 1];
                --j;
                ++inversions;
            }
            w[j] = s;
        }
        if (inversions % 2)
            c = -c;

        for (std::size_t i = 0; i + 1 < w.size() && !zero; ++i) {
            const Sym &x = w[i], &y = w[i + 1];
            if (x.is_omega && y.is_omega && x.a == y.a && x.b == y.b)
                zero = true;  // omega^2
            else if (!x.is_omega && !y.is_omega && x.a == y.a)
                zero = true;  // two letters at one position
        }
        if (zero)
            continue;

        // Arnold: omega_{ac} omega_{bc} = omega_{ab} omega_{bc} - omega_{ab} omega_{ac}
        // for a < b < c; adjacent after sorting by (j, i).
        bool rewritten = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const Sym &x = w[i], &y = w[i + 1];
            if (x.is_omega && y.is_omega && x.b == y.b) {
                int a = x.a, b = y.a, cc = x.b;
                std::vector<Sym> w1 = w, w2 = w;
                w1[i] = omega_sym(a, b);
                w1[i + 1] = omega_sym(b, cc);
                w2[i] = omega_sym(a, b);
                w2[i + 1] = omega_sym(a, cc);
                work.push_back({std::move(w1), c});
                work.push_back({std::move(w2), -c});
                rewritten = true;
                break;
            }
        }
        if (rewritten)
            continue;

        // Slide letters to block minima. In-place substitution carries no
        // sign; the reinserted word is renormalized for the resorting sign.
        std::map<int, int> root;
        auto find = [&](int v) {
            if (!root.count(v))
                root[v] = v;
            while (root[v] != v)
                v = root[v];
            return v;
        };
        for (const Sym& s : w)
            if (s.is_omega) {
                int ra = find(s.a), rb = find(s.b);
                root[std::max(ra, rb)] = std::min(ra, rb);
            }
        for (std::size_t i = 0; i < w.size() && !rewritten; ++i) {
            if (w[i].is_omega)
                continue;
            int m = find(w[i].a);
            if (m != w[i].a) {
                w[i].a = m;
                work.push_back({std::move(w), c});
                rewritten = true;
            }
        }
        if (rewritten)
            continue;

        Monomial mon;
        for (const Sym& s : w) {
            if (s.is_omega)
                mon.pairs.emplace_back(s.a, s.b);
            else
                mon.letters.emplace_back(s.a, s.l);
        }
        auto it = out.find(mon);
        if (it == out.end()) {
            out.emplace(std::move(mon), c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                out.erase(it);
        }
    }
}

}  // namespace

void add_to(Element& target, const Element& source, const Rat& scale) {
    if (scale.is_zero())
        return;
    for (const auto& [m, c] : source) {
        Rat v = c * scale;
        auto it = target.find(m);
        if (it == target.end()) {
            target.emplace(m, v);
        } else {
            it->second += v;
            if (it->second.is_zero())
                target.erase(it);
        }
    }
}

Element multiply(const Element& x, const Element& y) {
    Element out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            std::vector<Sym> w = word_of(mx);
            std::vector<Sym> wy = word_of(my);
            w.insert(w.end(), wy.begin(), wy.end());
            normalize_into(std::move(w), cx * cy, out);
        }
    return out;
}

Element differential(const Monomial& m) {
    Element out;
    const std::vector<Sym> base = word_of(m);
    for (std::size_t k = 0; k < m.pairs.size(); ++k) {
        Rat sign(k % 2 == 0 ? 1 : -1);
        auto [i, j] = m.pairs[k];
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<Sym> w;
            w.reserve(base.size() + 1);
            for (std::size_t t = 0; t < base.size(); ++t) {
                if (t == k) {
                    if (variant == 0) {
                        w.push_back(letter_sym(i, Letter::A));
                        w.push_back(letter_sym(j, Letter::B));
                    } else {
                        w.push_back(letter_sym(i, Letter::B));
                        w.push_back(letter_sym(j, Letter::A));
                    }
                } else {
                    w.push_back(base[t]);
                }
            }
            normalize_into(std::move(w), variant == 0 ? sign : -sign, out);
        }
    }
    return out;
}

Element differential(const Element& x) {
    Element out;
    for (const auto& [m, c] : x)
        add_to(out, differential(m), c);
    return out;
}

Element relabel(const Monomial& m, const std::vector<int>& position_map) {
    std::vector<Sym> w;
    auto mapped = [&](int pos) {
        if (pos < 1 || pos > static_cast<int>(position_map.size()))
            throw std::invalid_argument("relabel: position out of range");
        return position_map[pos - 1];
    };
    for (const auto& [i, j] : m.pairs)
        w.push_back(omega_sym(mapped(i), mapped(j)));
    for (const auto& [pos, l] : m.letters)
        w.push_back(letter_sym(mapped(pos), l));
    Element out;
    normalize_into(std::move(w), Rat(1), out);
    return out;
}

Element relabel(const Element& x, const std::vector<int>& position_map) {
    Element out;
    for (const auto& [m, c] : x)
        add_to(out, relabel(m, position_map), c);
    return out;
}

Element raising(const Monomial& m) {
    Element out;
    for (std::size_t i = 0; i < m.letters.size(); ++i) {
        if (m.letters[i].second != Letter::B)
            continue;
        Monomial next = m;
        next.letters[i].second = Letter::A;
        auto it = out.find(next);
        if (it == out.end())
            out.emplace(std::move(next), Rat(1));
        else
            it->second += Rat(1);
    }
    return out;
}

Element raising(const Element& x) {
    Element out;
    for (const auto& [m, c] : x)
        add_to(out, raising(m), c);
    return out;
}

Element pullback(const Element& x, int targetN, const std::vector<int>& injection) {
    std::vector<bool> seen(targetN + 1, false);
    for (int v : injection) {
        if (v < 1 || v > targetN || seen[v])
            throw std::invalid_argument("pullback: map is not an injection into [targetN]");
        seen[v] = true;
    }
    return relabel(x, injection);
}

std::vector<int> permutation_of_cycle_type(int n, const Partition& cycle_type) {
    if (cycle_type.sum() != n)
        throw std::invalid_argument("permutation_of_cycle_type: |cycle type| != n");
    std::vector<int> perm(n);
    int start = 1;
    for (int part : cycle_type.parts()) {
        for (int i = 0; i < part; ++i)
            perm[start - 1 + i] = i + 1 == part ? start : start + i + 1;
        start += part;
    }
    return perm;
}

// ---------------------------------------------------------------------------

struct Algebra::Cache {
    int n;
    mutable std::recursive_mutex mu;
    std::map<std::pair<int, int>, std::vector<Monomial>> basis;
    std::map<std::pair<int, int>, std::vector<Element>> dmat;  // d of each basis element
    std::map<std::tuple<int, int, int>, long> rank_out;        // (p,q,t) -> rank of d|weight t
};

Algebra::Algebra(int n) : n_(n), cache_(std::make_shared<Cache>()) {
    if (n < 1)
        throw std::invalid_argument("Algebra: n must be >= 1");
    cache_->n = n;
}

namespace {

std::vector<Monomial> build_basis(int n, int p, int q) {
    std::vector<Monomial> out;
    if (p < 0 || q < 0 || p > n || q > n - 1)
        return out;
    std::vector<std::pair<int, int>> pairs;
    auto letters_for = [&](const std::vector<std::pair<int, int>>& forest) {
        // Block minima of the pair graph (singletons included).
        std::vector<int> root(n + 1);
        for (int v = 1; v <= n; ++v)
            root[v] = v;
        auto find = [&](int v) {
            while (root[v] != v)
                v = root[v];
            return v;
        };
        for (const auto& [i, j] : forest) {
            int ri = find(i), rj = find(j);
            root[std::max(ri, rj)] = std::min(ri, rj);
        }
        std::vector<int> minima;
        for (int v = 1; v <= n; ++v)
            if (find(v) == v)
                minima.push_back(v);
        // Choose p minima and a letter for each.
        int nm = static_cast<int>(minima.size());
        if (p > nm)
            return;
        std::vector<int> chosen;
        auto rec = [&](auto&& self, int from, int left) -> void {
            if (left == 0) {
                std::vector<std::pair<int, Letter>> letters(chosen.size());
                auto lrec = [&](auto&& lself, std::size_t k) -> void {
                    if (k == chosen.size()) {
                        Monomial m;
                        m.pairs = forest;
                        m.letters = letters;
                        out.push_back(std::move(m));
                        return;
                    }
                    for (Letter l : {Letter::A, Letter::B}) {
                        letters[k] = {chosen[k], l};
                        lself(lself, k + 1);
                    }
                };
                lrec(lrec, 0);
                return;
            }
            for (int i = from; i <= nm - left; ++i) {
                chosen.push_back(minima[i]);
                self(self, i + 1, left - 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0, p);
    };
    auto forests = [&](auto&& self, int min_j, int left) -> void {
        if (left == 0) {
            letters_for(pairs);
            return;
        }
        for (int j = min_j; j <= n; ++j)
            for (int i = 1; i < j; ++i) {
                pairs.emplace_back(i, j);
                self(self, j + 1, left - 1);
                pairs.pop_back();
            }
    };
    forests(forests, 2, q);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::vector<Monomial>& Algebra::basis(int p, int q) const {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    auto key = std::make_pair(p, q);
    auto it = cache_->basis.find(key);
    if (it == cache_->basis.end())
        it = cache_->basis.emplace(key, build_basis(n_, p, q)).first;
    return it->second;
}

long Algebra::entry_dim(int p, int q) const {
    return static_cast<long>(basis(p, q).size());
}

namespace {

SL2Rep sl2_from_weight_counts(const std::map<int, long>& count, int hodge_weight) {
    SL2Rep rep;
    auto at = [&](int t) {
        auto it = count.find(t);
        return it == count.end() ? 0l : it->second;
    };
    int maxk = 0;
    for (const auto& [t, c] : count)
        maxk = std::max(maxk, std::abs(t));
    for (int k = maxk; k >= 0; --k) {
        long mult = at(k) - at(k + 2);
        if (mult < 0)
            throw std::logic_error("sl2_from_weight_counts: negative multiplicity");
        if (mult > 0) {
            if ((hodge_weight - k) % 2 != 0 || hodge_weight < k)
                throw std::logic_error("sl2_from_weight_counts: weight/twist mismatch");
            rep.add(k, (hodge_weight - k) / 2, mult);
        }
    }
    return rep;
}

}  // namespace

SL2Rep Algebra::page2_sl2(int p, int q) const {
    std::map<int, long> count;
    for (const Monomial& m : basis(p, q))
        count[m.torus_weight()]++;
    return sl2_from_weight_counts(count, p + 2 * q);
}

long Algebra::cohomology_dim(int p, int q) const {
    mpz_class d = cohomology_sl2(p, q).dim();
    return d.get_si();
}

long Algebra::cohomology_invariants(int p, int q) const {
    return sl2_invariants(cohomology_sl2(p, q));
}

SL2Rep Algebra::cohomology_sl2(int p, int q) const {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    auto weight_rank = [&](int sp, int sq, int t) -> long {
        if (sp < 0 || sq < 0)
            return 0;
        auto key = std::make_tuple(sp, sq, t);
        auto it = cache_->rank_out.find(key);
        if (it != cache_->rank_out.end())
            return it->second;
        const std::vector<Monomial>& src = basis(sp, sq);
        const std::vector<Monomial>& dst = basis(sp + 2, sq - 1);
        std::vector<BasisKey> cols;
        for (const Monomial& m : dst)
            if (m.torus_weight() == t)
                cols.push_back(m.key());
        long r = 0;
        if (!cols.empty()) {
            auto cs = std::make_shared<ColumnSpace>(cols);
            SparseMatrix mat(cs);
            for (const Monomial& m : src) {
                if (m.torus_weight() != t)
                    continue;
                SparseVector row;
                for (const auto& [tm, c] : differential(m))
                    row.set(tm.key(), c);
                mat.add_row(row);
            }
            r = rank(mat);
        }
        cache_->rank_out.emplace(key, r);
        return r;
    };

    std::map<int, long> hdim;
    std::map<int, long> count;
    for (const Monomial& m : basis(p, q))
        count[m.torus_weight()]++;
    for (const auto& [t, c] : count) {
        long h = c - weight_rank(p, q, t) - weight_rank(p - 2, q + 1, t);
        if (h < 0)
            throw std::logic_error("cohomology_sl2: negative weight-space dimension");
        if (h > 0)
            hdim[t] = h;
    }
    return sl2_from_weight_counts(hdim, p + 2 * q);
}

namespace {

// Reduced row echelon form over Q with unit pivots; rows indexed densely.
struct Echelon {
    std::vector<std::vector<Rat>> rows;
    std::vector<long> pivot_col;

    void add(std::vector<Rat> v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rat c = v[pivot_col[r]];  // by value: the loop writes v
            if (!c.is_zero())
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (!rows[r][j].is_zero())
                        v[j] -= c * rows[r][j];
        }
        long pc = -1;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                pc = static_cast<long>(j);
                break;
            }
        if (pc < 0)
            return;
        Rat lead = v[pc];
        for (auto& x : v)
            x /= lead;
        // Clear the new pivot column in the old rows.
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rat c = rows[r][pc];
            if (!c.is_zero())
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (!v[j].is_zero())
                        rows[r][j] -= c * v[j];
        }
        rows.push_back(std::move(v));
        pivot_col.push_back(pc);
    }
};

}  // namespace

Rat Algebra::sn_character(int p, int q, const Partition& cycle_type, int page,
                          bool invariants_only) const {
    if (page != 2 && page != 3)
        throw std::invalid_argument("sn_character: page must be 2 or 3");
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    std::vector<int> sigma = permutation_of_cycle_type(n_, cycle_type);

    // Trace of sigma on the weight-t subspace of the entry (page 2), or of
    // the image of the incoming/outgoing differential (page 3 pieces).
    auto entry_trace = [&](int ep, int eq, int t) -> Rat {
        Rat tr(0);
        for (const Monomial& m : basis(ep, eq)) {
            if (m.torus_weight() != t)
                continue;
            Element im = relabel(m, sigma);
            auto it = im.find(m);
            if (it != im.end())
                tr += it->second;
        }
        return tr;
    };
    auto image_trace = [&](int sp, int sq, int t) -> Rat {
        // Image of d: (sp,sq) -> (sp+2,sq-1), restricted to weight t.
        if (sp < 0 || sq < 1)
            return Rat(0);
        const std::vector<Monomial>& dst = basis(sp + 2, sq - 1);
        std::vector<Monomial> dstw;
        std::map<Monomial, long> idx;
        for (const Monomial& m : dst)
            if (m.torus_weight() == t) {
                idx.emplace(m, static_cast<long>(dstw.size()));
                dstw.push_back(m);
            }
        if (dstw.empty())
            return Rat(0);
        Echelon ech;
        for (const Monomial& m : basis(sp, sq)) {
            if (m.torus_weight() != t)
                continue;
            std::vector<Rat> v(dstw.size(), Rat(0));
            for (const auto& [tm, c] : differential(m))
                v[idx.at(tm)] = c;
            ech.add(std::move(v));
        }
        if (ech.rows.empty())
            return Rat(0);
        // Matrix of sigma on the weight-t target subspace, as sparse columns.
        std::vector<std::vector<std::pair<long, Rat>>> sig(dstw.size());
        for (std::size_t j = 0; j < dstw.size(); ++j)
            for (const auto& [tm, cc] : relabel(dstw[j], sigma)) {
                auto it = idx.find(tm);
                if (it != idx.end())
                    sig[j].emplace_back(it->second, cc);
            }
        Rat tr(0);
        for (std::size_t r = 0; r < ech.rows.size(); ++r) {
            // Coordinate of sigma(row_r) on row_r: with unit pivots and a
            // fully reduced echelon this is the pivot-column entry.
            for (std::size_t j = 0; j < dstw.size(); ++j) {
                const Rat& c = ech.rows[r][j];
                if (c.is_zero())
                    continue;
                for (const auto& [ti, cc] : sig[j])
                    if (ti == ech.pivot_col[r])
                        tr += c * cc;
            }
        }
        return tr;
    };
    auto trace_at = [&](int t) -> Rat {
        Rat tr = entry_trace(p, q, t);
        if (page == 3) {
            tr -= image_trace(p, q, t);          // kernel of the outgoing d
            tr -= image_trace(p - 2, q + 1, t);  // minus the incoming image
        }
        return tr;
    };

    if (invariants_only)
        return trace_at(0) - trace_at(2);
    std::map<int, bool> weights;
    for (const Monomial& m : basis(p, q))
        weights[m.torus_weight()] = true;
    Rat tr(0);
    for (const auto& [t, _] : weights)
        tr += trace_at(t);
    return tr;
}

nlohmann::json Algebra::page_json(int page) const {
    if (page != 2 && page != 3)
        throw std::invalid_argument("page_json: page must be 2 or 3");
    nlohmann::json entries = nlohmann::json::array();
    for (int q = 0; q <= n_ - 1; ++q)
        for (int p = 0; p <= n_; ++p) {
            SL2Rep rep = page == 2 ? page2_sl2(p, q) : cohomology_sl2(p, q);
            if (rep.is_zero())
                continue;
            entries.push_back({{"p", p},
                               {"q", q},
                               {"dim", rep.dim().get_si()},
                               {"sl2", sl2_to_json(rep)["sl2"]}});
        }
    return {{"n", n_}, {"page", page}, {"entries", entries}};
}

std::map<int, std::pair<long, long>> weight_row_report(int n) {
    Algebra alg(n);
    std::map<int, std::pair<long, long>> out;
    for (int i = 0; i <= n + 1; ++i) {
        long bottom = i <= n ? alg.cohomology_invariants(i, 0) : 0;
        long second = (i >= 1 && i - 1 <= n) ? alg.cohomology_invariants(i - 1, 1) : 0;
        out[i] = {bottom, second};
    }
    return out;
}

}  // namespace m1taut::ct
