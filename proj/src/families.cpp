#include "appell/families.hpp"

#include <stdexcept>

#include "appell/bigint.hpp"

namespace appell {

PowerSeries bernoulli_recip_mgf(std::size_t order) {
    // (e^u - 1)/u = sum_k u^k/(k+1)!  then invert
    PowerSeries mgf(order);
    for (std::size_t k = 0; k <= order; ++k)
        mgf.coeff(k) = MultiPoly::constant(Rational(BigInt(1), factorial(static_cast<unsigned>(k) + 1)));
    return series::reciprocal(mgf);
}

PowerSeries euler_recip_mgf(std::size_t order) {
    // (e^u + 1)/2 = 1 + sum_{k>=1} u^k/(2 k!)  then invert
    PowerSeries mgf(order);
    mgf.coeff(0) = MultiPoly::one();
    for (std::size_t k = 1; k <= order; ++k)
        mgf.coeff(k) = MultiPoly::constant(Rational(BigInt(1), BigInt(2) * factorial(static_cast<unsigned>(k))));
    return series::reciprocal(mgf);
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "bernoulli") return FamilyKind::Bernoulli;
    if (name == "euler") return FamilyKind::Euler;
    if (name == "gen-bernoulli") return FamilyKind::GenBernoulli;
    if (name == "gen-euler") return FamilyKind::GenEuler;
    if (name == "mixed") return FamilyKind::Mixed;
    throw std::invalid_argument("unknown family kind '" + name + "'");
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Bernoulli: return "bernoulli";
        case FamilyKind::Euler: return "euler";
        case FamilyKind::GenBernoulli: return "gen-bernoulli";
        case FamilyKind::GenEuler: return "gen-euler";
        case FamilyKind::Mixed: return "mixed";
    }
    throw std::logic_error("unreachable");
}

void FamilyId::validate() const {
    switch (kind) {
        case FamilyKind::Bernoulli:
        case FamilyKind::Euler:
            if (m_binding || l_binding)
                throw std::invalid_argument(family_kind_name(kind) + " takes no order binding");
            return;
        case FamilyKind::GenBernoulli:
        case FamilyKind::GenEuler:
            if (l_binding) throw std::invalid_argument(family_kind_name(kind) + " has no l order");
            return;
        case FamilyKind::Mixed:
            return;  // either, both, or none
    }
}

namespace {

PowerSeries build_classical_bernoulli(std::size_t order, Var, Var) { return bernoulli_recip_mgf(order); }
PowerSeries build_classical_euler(std::size_t order, Var, Var) { return euler_recip_mgf(order); }
PowerSeries build_gen_bernoulli(std::size_t order, Var order_var, Var) {
    return series::pow_symbolic(bernoulli_recip_mgf(order), order_var);
}
PowerSeries build_gen_euler(std::size_t order, Var order_var, Var) {
    return series::pow_symbolic(euler_recip_mgf(order), order_var);
}
PowerSeries build_mixed(std::size_t order, Var, Var) {
    return series::mul(series::pow_symbolic(bernoulli_recip_mgf(order), Var::m),
                       series::pow_symbolic(euler_recip_mgf(order), Var::l));
}

void check_order_arg(Var order, Var arg, const char* what) {
    if (order != Var::m && order != Var::l)
        throw std::invalid_argument(std::string(what) + ": order variable must be m or l");
    if (arg != Var::x && arg != Var::y)
        throw std::invalid_argument(std::string(what) + ": argument variable must be x or y");
}

}  // namespace

FamilyCatalog::FamilyCatalog(std::size_t n_max) : n_max_(n_max) {}

const AppellFamily& FamilyCatalog::get(const std::string& key, PowerSeries (*build)(std::size_t, Var, Var),
                                       Var order, Var arg) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        auto fam = std::make_unique<AppellFamily>(build(n_max_, order, arg), arg, key);
        it = cache_.emplace(key, std::move(fam)).first;
    }
    return *it->second;
}

const AppellFamily& FamilyCatalog::bernoulli_family(Var arg) const {
    check_order_arg(Var::m, arg, "bernoulli");
    return get(std::string("bernoulli(") + var_name(arg) + ")", &build_classical_bernoulli, Var::m, arg);
}

const AppellFamily& FamilyCatalog::euler_family(Var arg) const {
    check_order_arg(Var::m, arg, "euler");
    return get(std::string("euler(") + var_name(arg) + ")", &build_classical_euler, Var::m, arg);
}

const AppellFamily& FamilyCatalog::gen_bernoulli_family(Var order, Var arg) const {
    check_order_arg(order, arg, "gen-bernoulli");
    return get(std::string("gen-bernoulli^") + var_name(order) + "(" + var_name(arg) + ")", &build_gen_bernoulli,
               order, arg);
}

const AppellFamily& FamilyCatalog::gen_euler_family(Var order, Var arg) const {
    check_order_arg(order, arg, "gen-euler");
    return get(std::string("gen-euler^") + var_name(order) + "(" + var_name(arg) + ")", &build_gen_euler, order,
               arg);
}

const AppellFamily& FamilyCatalog::mixed_family(Var arg) const {
    if (arg != Var::x && arg != Var::y) throw std::invalid_argument("mixed: argument variable must be x or y");
    return get(std::string("mixed(") + var_name(arg) + ")", &build_mixed, Var::m, arg);
}

MultiPoly FamilyCatalog::bernoulli(std::size_t n, Var arg) const { return bernoulli_family(arg).member(n); }
MultiPoly FamilyCatalog::euler(std::size_t n, Var arg) const { return euler_family(arg).member(n); }

Rational FamilyCatalog::bernoulli_number(std::size_t k) const {
    return bernoulli_family().base(k).constant_value();
}

Rational FamilyCatalog::euler_at_zero(std::size_t k) const { return euler_family().base(k).constant_value(); }

MultiPoly FamilyCatalog::gen_bernoulli(std::size_t n, Var order, Var arg) const {
    return gen_bernoulli_family(order, arg).member(n);
}

MultiPoly FamilyCatalog::gen_euler(std::size_t n, Var order, Var arg) const {
    return gen_euler_family(order, arg).member(n);
}

MultiPoly FamilyCatalog::mixed_q(std::size_t n, Var arg) const { return mixed_family(arg).member(n); }

MultiPoly FamilyCatalog::member(const FamilyId& id, std::size_t n) const {
    id.validate();
    std::map<Var, Rational> bindings;
    MultiPoly p;
    switch (id.kind) {
        case FamilyKind::Bernoulli: return bernoulli(n);
        case FamilyKind::Euler: return euler(n);
        case FamilyKind::GenBernoulli: p = gen_bernoulli(n); break;
        case FamilyKind::GenEuler: p = gen_euler(n); break;
        case FamilyKind::Mixed: p = mixed_q(n); break;
    }
    if (id.m_binding) bindings.emplace(Var::m, *id.m_binding);
    if (id.l_binding) bindings.emplace(Var::l, *id.l_binding);
    return bindings.empty() ? p : specialize_order(p, bindings);
}

MultiPoly specialize_order(const MultiPoly& p, const std::map<Var, Rational>& bindings) {
    for (const auto& [v, value] : bindings)
        if (v != Var::m && v != Var::l)
            throw std::invalid_argument(std::string("specialize_order: ") + var_name(v) + " is not an order variable");
    return p.eval(bindings);
}

}  // namespace appell
