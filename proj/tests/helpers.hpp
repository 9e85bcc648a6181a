#pragma once

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hsober/error.hpp"
#include "hsober/space.hpp"

namespace test {

using Labels = std::vector<std::string>;

inline hsober::PointSet S(const hsober::FiniteSpace& X, const Labels& ls) { return hsober::make_set(X, ls); }

inline Labels L(const hsober::FiniteSpace& X, const hsober::Bits& b) { return hsober::set_labels(X, b); }
inline Labels L(const hsober::FiniteSpace& X, const hsober::PointSet& a) { return hsober::set_labels(X, a.bits); }

inline std::vector<Labels> LL(const hsober::FiniteSpace& X, const std::vector<hsober::Bits>& fam) {
    std::vector<Labels> out;
    for (const auto& b : fam) out.push_back(L(X, b));
    return out;
}

/// Every subset of a small carrier, by bitmask.
inline std::vector<hsober::Bits> all_subsets(const hsober::FiniteSpace& X) {
    std::vector<hsober::Bits> out;
    const std::size_t n = X.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        hsober::Bits b(n);
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1) b.set(i);
        out.push_back(b);
    }
    return out;
}

/// Down-sets by direct relation scan, independent of the library walkers.
inline bool is_down(const hsober::FiniteSpace& X, const hsober::Bits& a) {
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < X.size(); ++j)
            if (a.test(j) && X.leq(i, j) && !a.test(i)) return false;
    return true;
}
inline bool is_up(const hsober::FiniteSpace& X, const hsober::Bits& a) {
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < X.size(); ++j)
            if (a.test(i) && X.leq(i, j) && !a.test(j)) return false;
    return true;
}

/// The error kind a call throws, if any.
template <class F>
std::optional<hsober::ErrorKind> thrown(F&& f) {
    try {
        f();
    } catch (const hsober::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace test
