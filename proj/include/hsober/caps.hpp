#pragma once

#include <cstddef>
#include <string>

namespace hsober {

/// Size bounds for the exponential enumerations. Every operation that would
/// exceed one of these raises CapExceeded instead of approximating.
struct Caps {
    std::size_t family_points = 14;     ///< full open/closed family enumeration
    std::size_t m_family_points = 12;   ///< m(K) and property Q scans
    std::size_t subset_points = 12;     ///< scans over all subsets of a carrier
    std::size_t compact_family = 256;   ///< |K(X)| for the definitional filtered-family scan
    std::size_t smyth_carrier = 4096;   ///< |K(X)| for a Smyth space
    std::size_t double_smyth_base = 3;  ///< base carrier for P_S(P_S(X))
    std::size_t target_bound = 4;       ///< universal-property targets
    std::size_t product_points = 4096;  ///< product carrier
    std::size_t map_count = 1u << 20;   ///< enumerated continuous maps
    std::size_t family_budget = 256;    ///< H-families of P_S(X) sampled per characterization
    std::size_t smyth_open_scan = 8;    ///< scan every open of P_S(X) up to this many points
    std::size_t closed_sample = 48;     ///< closed sets per equational quantifier before sampling
    std::size_t open_scan_points = 5;   ///< scan every open of X up to this many points
};

inline const Caps& default_caps() {
    static const Caps c{};
    return c;
}

void check_cap(std::size_t value, std::size_t cap, const std::string& name);

}  // namespace hsober
