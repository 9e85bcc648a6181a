#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsober/power.hpp"
#include "hsober/systems.hpp"

namespace hsober {

struct Characterization {
    std::string name;
    bool value = false;
};

/// Outcome of one property check. `holds` is the definitional predicate;
/// `characterizations` lists every independent evaluation (the definitional
/// one first) and `characterizations_agreed` records whether they coincide.
struct Verdict {
    std::string property;
    bool holds = false;
    nlohmann::json evidence;
    std::vector<Characterization> characterizations;
    bool characterizations_agreed = true;
    nlohmann::json to_json() const;
};

/// Per-condition evaluation of a family of equivalent statements.
/// `exhaustive` is false when some quantifier ran over a deterministic sample
/// (the family budget) instead of the full range.
struct CrosscheckReport {
    std::string name;
    std::vector<Characterization> conditions;
    bool agreed = true;
    bool exhaustive = true;
    nlohmann::json to_json() const;
};

const std::vector<std::string>& property_names();
bool property_needs_system(const std::string& property);

/// Caches the Smyth space and family samples of one space so that several
/// checks share the enumeration work.
class SpaceChecker {
public:
    explicit SpaceChecker(FiniteSpace X, const Caps& caps = default_caps());
    ~SpaceChecker();
    SpaceChecker(SpaceChecker&&) noexcept;
    SpaceChecker& operator=(SpaceChecker&&) noexcept;

    const FiniteSpace& space() const { return X_; }
    const SmythSpace& smyth_space();

    Verdict check(const std::string& property, const std::optional<SubsetSystemId>& H = std::nullopt);
    CrosscheckReport crosscheck_h_sober(const SubsetSystemId& H);
    CrosscheckReport crosscheck_super(const SubsetSystemId& H);
    Verdict h_consonance(const SubsetSystemId& H);
    Verdict upper_topology_report(const SubsetSystemId& H);

private:
    struct Cache;
    FiniteSpace X_;
    Caps caps_;
    std::unique_ptr<Cache> cache_;
};

Verdict check(const FiniteSpace& X, const std::string& property, const std::optional<SubsetSystemId>& H = std::nullopt,
              const Caps& caps = default_caps());
CrosscheckReport crosscheck_h_sober(const FiniteSpace& X, const SubsetSystemId& H, const Caps& caps = default_caps());
CrosscheckReport crosscheck_super(const FiniteSpace& X, const SubsetSystemId& H, const Caps& caps = default_caps());
Verdict h_consonance(const FiniteSpace& X, const SubsetSystemId& H, const Caps& caps = default_caps());
Verdict upper_topology_report(const FiniteSpace& P, const SubsetSystemId& H, const Caps& caps = default_caps());

}  // namespace hsober
