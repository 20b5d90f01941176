#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "appell/appell_family.hpp"

namespace appell {

// Reciprocal moment generating functions, the series that define the two
// classical sequences: u/(e^u - 1) for the uniform shift and 2/(e^u + 1)
// for the fair-coin shift.
PowerSeries bernoulli_recip_mgf(std::size_t order);
PowerSeries euler_recip_mgf(std::size_t order);

enum class FamilyKind { Bernoulli, Euler, GenBernoulli, GenEuler, Mixed };

FamilyKind family_kind_from_name(const std::string& name);
std::string family_kind_name(FamilyKind kind);

// A family selector plus optional rational order bindings. Classical kinds
// take no bindings, the generalized ones only m, the mixed family m and/or l.
struct FamilyId {
    FamilyKind kind = FamilyKind::Bernoulli;
    std::optional<Rational> m_binding;
    std::optional<Rational> l_binding;

    void validate() const;  // throws std::invalid_argument on a bad binding set
};

// Constructs and caches the families at one series truncation order.
// All member polynomials are exact; orders stay symbolic unless bound.
class FamilyCatalog {
public:
    explicit FamilyCatalog(std::size_t n_max);

    std::size_t n_max() const { return n_max_; }

    MultiPoly bernoulli(std::size_t n, Var arg = Var::x) const;
    MultiPoly euler(std::size_t n, Var arg = Var::x) const;
    Rational bernoulli_number(std::size_t k) const;  // value at 0 of degree-k member
    Rational euler_at_zero(std::size_t k) const;

    MultiPoly gen_bernoulli(std::size_t n, Var order = Var::m, Var arg = Var::x) const;
    MultiPoly gen_euler(std::size_t n, Var order = Var::m, Var arg = Var::x) const;
    // Both orders symbolic: prefactor (u/(e^u-1))^m (2/(e^u+1))^l.
    MultiPoly mixed_q(std::size_t n, Var arg = Var::x) const;

    const AppellFamily& bernoulli_family(Var arg = Var::x) const;
    const AppellFamily& euler_family(Var arg = Var::x) const;
    const AppellFamily& gen_bernoulli_family(Var order = Var::m, Var arg = Var::x) const;
    const AppellFamily& gen_euler_family(Var order = Var::m, Var arg = Var::x) const;
    const AppellFamily& mixed_family(Var arg = Var::x) const;

    // Member polynomial with the id's order bindings applied.
    MultiPoly member(const FamilyId& id, std::size_t n) const;

private:
    const AppellFamily& get(const std::string& key, PowerSeries (*build)(std::size_t, Var, Var), Var order,
                            Var arg) const;

    std::size_t n_max_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::unique_ptr<AppellFamily>> cache_;
};

// Binds order variables (m and/or l) to rational values; other variables are
// rejected.
MultiPoly specialize_order(const MultiPoly& p, const std::map<Var, Rational>& bindings);

}  // namespace appell
