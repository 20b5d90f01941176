#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "appell/families.hpp"

namespace appell {

// Outcome of checking one named identity over degrees 0..n_max. A pass means
// every residual is the literal zero polynomial; failing degrees keep their
// exact residual.
struct IdentityReport {
    std::string identity;
    std::size_t n_max = 0;
    bool pass = true;
    std::vector<std::pair<std::size_t, MultiPoly>> residuals;
    double elapsed_ms = 0.0;
};

nlohmann::json to_json(const IdentityReport& report);

// Registry of every supported identity, each checkable as an exact
// polynomial identity in Q[m,l,x,y].
class IdentitySuite {
public:
    // n_max bounds the degree range of later verify calls; the catalog is
    // built with the extra margin some right-hand sides need.
    explicit IdentitySuite(std::size_t n_max);

    static const std::vector<std::string>& identity_names();
    static bool known(const std::string& name);

    std::size_t n_max() const { return n_max_; }
    const FamilyCatalog& catalog() const { return catalog_; }

    IdentityReport verify(const std::string& name, std::size_t n_max) const;

    // Iterated-expectation variants: applies the matching expectation
    // operator shift_count times and compares against the order-reduced
    // (or plain power, for the classical mean-value entries) reference.
    // Only the expectation-flavored identity names are accepted.
    IdentityReport verify_expectation(const std::string& name, std::size_t n_max, unsigned shift_count) const;

    // Runs every registry entry at n_max; entries run concurrently, reports
    // come back in registry order. Failures are reported, never thrown.
    std::vector<IdentityReport> verify_all(std::size_t n_max) const;

private:
    std::size_t n_max_;
    FamilyCatalog catalog_;
};

}  // namespace appell
