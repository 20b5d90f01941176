#include "appell/multipoly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace appell {

Var var_from_name(std::string_view name) {
    if (name.size() == 1)
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (name[0] == kVarNames[i]) return static_cast<Var>(i);
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

const char* var_name(Var v) {
    static constexpr std::array<const char*, kVarCount> names = {"x", "y", "m", "l"};
    return names[static_cast<unsigned>(v)];
}

MultiPoly MultiPoly::constant(Rational c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Mono{}, std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(Var v, unsigned degree) {
    if (degree == 0) return one();
    Mono mono;
    mono[v] = static_cast<std::uint16_t>(degree);
    return monomial(Rational(1), mono);
}

MultiPoly MultiPoly::monomial(Rational c, Mono mono) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(mono, std::move(c));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("MultiPoly: not a constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Mono& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::contains(Var v) const {
    for (const auto& [mono, c] : terms_)
        if (mono[v] > 0) return true;
    return false;
}

int MultiPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono[v]));
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.total_degree());
}

void MultiPoly::add_term(const Mono& mono, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono mono;
            for (std::size_t i = 0; i < kVarCount; ++i)
                mono.e[i] = static_cast<std::uint16_t>(ma.e[i] + mb.e[i]);
            r.add_term(mono, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [mono, pc] : p.terms_) r.terms_.emplace(mono, c * pc);
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly r;
    for (const auto& [mono, c] : terms_) {
        if (mono[v] == 0) continue;
        Mono d = mono;
        d[v] -= 1;
        r.add_term(d, c * Rational(static_cast<long>(mono[v])));
    }
    return r;
}

MultiPoly MultiPoly::antiderivative(Var v) const {
    MultiPoly r;
    for (const auto& [mono, c] : terms_) {
        Mono d = mono;
        d[v] += 1;
        r.add_term(d, c / Rational(static_cast<long>(d[v])));
    }
    return r;
}

MultiPoly MultiPoly::eval(const std::map<Var, Rational>& bindings) const {
    MultiPoly r;
    for (const auto& [mono, c] : terms_) {
        Rational value = c;
        Mono rest = mono;
        for (const auto& [v, binding] : bindings) {
            if (mono[v] > 0) {
                value *= binding.pow(mono[v]);
                rest[v] = 0;
            }
        }
        r.add_term(rest, value);
    }
    return r;
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& value) const {
    std::vector<MultiPoly> coeffs = coefficients_of(v);
    MultiPoly r;  // Horner in the substituted value
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * value + *it;
    return r;
}

MultiPoly MultiPoly::shift(Var v, const MultiPoly& delta) const {
    if (delta.contains(v))
        throw std::invalid_argument(std::string("MultiPoly::shift: delta contains ") + var_name(v));
    return subst(v, MultiPoly::variable(v) + delta);
}

MultiPoly MultiPoly::integrate_unit(Var v) const {
    MultiPoly anti = antiderivative(v);
    return anti.eval({{v, Rational(1)}}) - anti.eval({{v, Rational(0)}});
}

std::vector<MultiPoly> MultiPoly::coefficients_of(Var v) const {
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(std::max(0, degree(v))) + 1);
    for (const auto& [mono, c] : terms_) {
        Mono rest = mono;
        rest[v] = 0;
        coeffs[mono[v]].add_term(rest, c);
    }
    return coeffs;
}

MultiPoly MultiPoly::leading_coefficient(Var v) const {
    if (is_zero()) return MultiPoly();
    return coefficients_of(v).back();
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = one();
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        bool negative = c.sign() < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        Rational mag = c.abs();
        std::string vars;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (mono.e[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += kVarNames[i];
            if (mono.e[i] > 1) vars += '^' + std::to_string(mono.e[i]);
        }
        if (vars.empty())
            out << mag.to_string();
        else if (mag.is_one())
            out << vars;
        else
            out << mag.to_string() << '*' << vars;
    }
    return out.str();
}

namespace {

struct Scanner {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string_view read_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("MultiPoly::parse: expected digits in '" + std::string(s) + "'");
        return s.substr(start, pos - start);
    }
    unsigned read_exponent() {
        auto digits = read_digits();
        unsigned long v = std::stoul(std::string(digits));
        if (v > 0xffffu) throw std::invalid_argument("MultiPoly::parse: exponent too large");
        return static_cast<unsigned>(v);
    }
};

// term := rational ['*' factor ('*' factor)*] | factor ('*' factor)*
// factor := var ['^' exponent]
MultiPoly parse_term(Scanner& sc) {
    Rational coeff(1);
    Mono mono;
    bool saw_factor = false;
    bool expect_factor = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        BigInt num(sc.read_digits());
        if (sc.consume('/')) {
            BigInt den(sc.read_digits());
            coeff = Rational(num, den);
        } else {
            coeff = Rational(num, BigInt(1));
        }
        saw_factor = true;
        if (sc.consume('*')) expect_factor = true;
    }
    while (true) {
        char c = sc.peek();
        bool is_var = false;
        for (char name : kVarNames) is_var = is_var || (c == name);
        if (!is_var) {
            if (expect_factor) throw std::invalid_argument("MultiPoly::parse: dangling '*'");
            break;
        }
        ++sc.pos;
        unsigned exp = 1;
        if (sc.consume('^')) exp = sc.read_exponent();
        Var v = var_from_name(std::string_view(&c, 1));
        mono[v] = static_cast<std::uint16_t>(mono[v] + exp);
        saw_factor = true;
        expect_factor = sc.consume('*');
    }
    if (!saw_factor) throw std::invalid_argument("MultiPoly::parse: expected term");
    return MultiPoly::monomial(coeff, mono);
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
    Scanner sc{text};
    MultiPoly result;
    bool negative = sc.consume('-');
    if (!negative) sc.consume('+');
    while (true) {
        MultiPoly term = parse_term(sc);
        result += negative ? -term : term;
        if (sc.eof()) break;
        if (sc.consume('+'))
            negative = false;
        else if (sc.consume('-'))
            negative = true;
        else
            throw std::invalid_argument("MultiPoly::parse: unexpected character in '" + std::string(text) + "'");
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace appell
