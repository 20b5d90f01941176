#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

// The fixed variable universe. The index order doubles as display
// significance: within one total degree, terms print in x, y, m, l order.
enum class Var : unsigned { x = 0, y = 1, m = 2, l = 3 };

inline constexpr std::size_t kVarCount = 4;
inline constexpr std::array<char, kVarCount> kVarNames = {'x', 'y', 'm', 'l'};

Var var_from_name(std::string_view name);
const char* var_name(Var v);

// Exponent vector over (x, y, m, l).
struct Mono {
    std::array<std::uint16_t, kVarCount> e{};

    unsigned total_degree() const {
        return static_cast<unsigned>(e[0]) + e[1] + e[2] + e[3];
    }
    std::uint16_t operator[](Var v) const { return e[static_cast<unsigned>(v)]; }
    std::uint16_t& operator[](Var v) { return e[static_cast<unsigned>(v)]; }
    bool operator==(const Mono&) const = default;
};

// Graded-lexicographic order, highest term first, so map iteration order is
// the canonical rendering order.
struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned ta = a.total_degree(), tb = b.total_degree();
        if (ta != tb) return ta > tb;
        return a.e > b.e;
    }
};

// Exact multivariate polynomial over the rationals in x, y, m, l.
// Canonical form: no stored zero coefficients; equality is structural.
class MultiPoly {
public:
    using TermMap = std::map<Mono, Rational, MonoOrder>;

    MultiPoly() = default;  // zero
    static MultiPoly constant(Rational c);
    static MultiPoly variable(Var v, unsigned degree = 1);
    static MultiPoly monomial(Rational c, Mono mono);
    static MultiPoly one() { return constant(Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Mono& mono) const;

    bool contains(Var v) const;
    int degree(Var v) const;      // -1 for the zero polynomial
    int total_degree() const;     // -1 for the zero polynomial

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    friend MultiPoly operator*(const MultiPoly& p, const Rational& c) { return c * p; }

    bool operator==(const MultiPoly&) const = default;

    MultiPoly derivative(Var v) const;
    MultiPoly antiderivative(Var v) const;

    // Partial evaluation: substitutes the bound variables, leaves the rest.
    MultiPoly eval(const std::map<Var, Rational>& bindings) const;

    // Substitute v -> value simultaneously in every term.
    MultiPoly subst(Var v, const MultiPoly& value) const;

    // Taylor shift v -> v + delta; delta must not contain v.
    MultiPoly shift(Var v, const MultiPoly& delta) const;
    MultiPoly shift(Var v, const Rational& delta) const { return shift(v, MultiPoly::constant(delta)); }

    // Integrates over v in [0, 1]; v is consumed.
    MultiPoly integrate_unit(Var v) const;

    // Coefficients with respect to v, ascending power; index k is the
    // coefficient of v^k (a polynomial in the remaining variables).
    std::vector<MultiPoly> coefficients_of(Var v) const;
    MultiPoly leading_coefficient(Var v) const;

    MultiPoly pow(unsigned e) const;

    // Canonical text form, e.g. "x^2 - x + 1/6", "x - 1/2*m - 1/2*l".
    std::string to_string() const;
    static MultiPoly parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

private:
    void add_term(const Mono& mono, const Rational& c);
    TermMap terms_;
};

}  // namespace appell
