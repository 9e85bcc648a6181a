#include "hsober/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hsober {

std::size_t draw_index(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool draw_bool(std::mt19937_64& rng, double p) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

FiniteSpace random_space(std::mt19937_64& rng, std::size_t max_points) {
    if (max_points == 0) throw Error(ErrorKind::EmptySpace, "random_space needs at least one point");
    static constexpr double densities[] = {0.15, 0.3, 0.5};
    std::size_t n = 1 + draw_index(rng, max_points);
    double p = densities[draw_index(rng, 3)];
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[draw_index(rng, i + 1)]);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (draw_bool(rng, p)) pairs.emplace_back(perm[a], perm[b]);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
    return FiniteSpace::from_covers(std::move(labels), pairs);
}

namespace {

// Isomorphism-invariant point classes by iterated refinement on the classes
// of strict lower and upper neighbours.
std::vector<std::size_t> refine(const FiniteSpace& X) {
    const std::size_t n = X.size();
    using Key = std::vector<std::size_t>;
    std::vector<std::size_t> cls(n);
    auto renumber = [&](const std::vector<Key>& keys) {
        std::map<Key, std::size_t> ids;
        for (const auto& k : keys) ids.emplace(k, 0);
        std::size_t c = 0;
        for (auto& [k, v] : ids) v = c++;
        for (std::size_t i = 0; i < n; ++i) cls[i] = ids[keys[i]];
        return ids.size();
    };
    std::vector<Key> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = {X.down(i).count(), X.up(i).count()};
    std::size_t count = renumber(keys);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) {
            Key k{cls[i]};
            Key lo, hi;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                if (X.leq(j, i)) lo.push_back(cls[j]);
                if (X.leq(i, j)) hi.push_back(cls[j]);
            }
            std::sort(lo.begin(), lo.end());
            std::sort(hi.begin(), hi.end());
            k.push_back(lo.size());
            k.insert(k.end(), lo.begin(), lo.end());
            k.insert(k.end(), hi.begin(), hi.end());
            keys[i] = std::move(k);
        }
        std::size_t next = renumber(keys);
        if (next == count) break;
        count = next;
    }
    return cls;
}

std::uint64_t code_of(const FiniteSpace& X, const std::vector<std::size_t>& order) {
    const std::size_t n = order.size();
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && X.leq(order[i], order[j])) c |= std::uint64_t{1} << (63 - (i * n + j));
    return c;
}

struct Canon {
    std::uint64_t code = ~std::uint64_t{0};
    std::vector<std::size_t> order;
};

Canon canonical(const FiniteSpace& X) {
    const std::size_t n = X.size();
    check_cap(n, 8, "canonical_points");
    auto cls = refine(X);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cls[a] < cls[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && cls[order[j]] == cls[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    Canon best;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            auto c = code_of(X, order);
            if (c < best.code) best = {c, order};
            return;
        }
        auto [lo, hi] = cells[k];
        std::sort(order.begin() + lo, order.begin() + hi);
        do rec(k + 1);
        while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    return best;
}

}  // namespace

std::uint64_t canonical_code(const FiniteSpace& X) { return canonical(X).code; }

std::vector<FiniteSpace> posets_up_to_iso(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::EmptySpace, "posets need at least one point");
    check_cap(n, 6, "poset_enumeration");
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);

    std::map<std::uint64_t, FiniteSpace> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        // Every poset has a linear extension, so strict relations that only
        // point forward cover all isomorphism types.
        std::vector<std::uint32_t> up(n, 0);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask >> s & 1) up[slots[s].first] |= 1u << slots[s].second;
        bool transitive = true;
        for (std::size_t i = 0; i < n && transitive; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if ((up[i] >> j & 1) && (up[j] & ~up[i])) {
                    transitive = false;
                    break;
                }
        if (!transitive) continue;
        std::vector<Bits> rel(n, Bits(n));
        for (std::size_t i = 0; i < n; ++i) {
            rel[i].set(i);
            for (std::size_t j = 0; j < n; ++j)
                if (up[i] >> j & 1) rel[i].set(j);
        }
        auto X = FiniteSpace::from_order(labels, rel);
        auto c = canonical(X);
        if (found.count(c.code)) continue;
        std::vector<Bits> crel(n, Bits(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (X.leq(c.order[i], c.order[j])) crel[i].set(j);
        found.emplace(c.code, FiniteSpace::from_order(labels, crel));
    }
    std::vector<FiniteSpace> out;
    for (auto& [code, X] : found) out.push_back(X);
    return out;
}

std::vector<FiniteSpace> poset_corpus(std::size_t max_n) {
    std::vector<FiniteSpace> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto part = posets_up_to_iso(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteSpace& X, const FiniteSpace& Y) {
    const std::size_t n = X.size();
    if (Y.size() != n) return std::nullopt;
    auto cx = refine(X);
    auto cy = refine(Y);
    {
        auto sx = cx, sy = cy;
        std::sort(sx.begin(), sx.end());
        std::sort(sy.begin(), sy.end());
        if (sx != sy) return std::nullopt;
    }
    std::vector<std::size_t> f(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) return true;
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || cy[y] != cx[i]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = X.leq(i, j) == Y.leq(y, f[j]) && X.leq(j, i) == Y.leq(f[j], y);
            if (!ok) continue;
            f[i] = y;
            used[y] = true;
            if (rec(i + 1)) return true;
            used[y] = false;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return f;
}

}  // namespace hsober
