#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hsober {

/// Dense index set over a fixed universe {0, ..., size-1}.
///
/// Ordering (operator<) is lexicographic on the sorted index lists, so the
/// empty set comes first and {0,1} precedes {0,2} precedes {1}.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bits full(std::size_t n) {
        Bits b(n);
        for (auto& w : b.w_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }
    static Bits single(std::size_t n, std::size_t i) {
        Bits b(n);
        b.set(i);
        return b;
    }
    static Bits from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
        Bits b(n);
        for (auto i : idx) b.set(i);
        return b;
    }

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    /// Smallest member, or size() when empty.
    std::size_t first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
        return n_;
    }
    /// Smallest member strictly greater than i, or size().
    std::size_t next(std::size_t i) const {
        ++i;
        if (i >= n_) return n_;
        std::size_t k = i >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++k >= w_.size()) return n_;
            w = w_[k];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    /// Set difference.
    Bits& operator-=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }
    Bits complement() const {
        Bits b(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) b.w_[k] = ~w_[k];
        b.trim();
        return b;
    }

    friend bool operator==(const Bits& a, const Bits& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

    /// Lexicographic comparison of sorted index lists.
    friend bool operator<(const Bits& a, const Bits& b) {
        std::size_t i = a.first(), j = b.first();
        while (i < a.n_ && j < b.n_) {
            if (i != j) return i < j;
            i = a.next(i);
            j = b.next(j);
        }
        return i >= a.n_ && j < b.n_;
    }

    /// Size first, then lexicographic.
    static bool size_lex_less(const Bits& a, const Bits& b) {
        auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    }

    std::size_t hash() const {
        std::size_t h = n_ * 0x9e3779b97f4a7c15ull;
        for (auto w : w_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
        return h;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    void trim() {
        if (n_ % 64 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace hsober
