#include "qi/multipoly.hpp"

#include <cctype>
#include <sstream>

#include "qi/errors.hpp"

namespace qi {

Monomial Monomial::variable(const std::string& name, int exponent) {
    if (name.empty()) throw DomainError("monomial variable needs a name");
    if (exponent < 0) throw DomainError("monomial exponents must be >= 0");
    Monomial m;
    if (exponent > 0) m.exps_[name] = exponent;
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [name, e] : exps_) d += e;
    return d;
}

int Monomial::exponent(const std::string& name) const {
    const auto it = exps_.find(name);
    return it == exps_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [name, e] : o.exps_) r.exps_[name] += e;
    return r;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, e] : exps_) {
        if (!first) out << "*";
        out << name;
        if (e > 1) out << "^" << e;
        first = false;
    }
    return out.str();
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw DomainError("polynomial '" + str() + "' is not constant");
    return terms_.begin()->second;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r{Rational(1)};
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

MultiPoly MultiPoly::truncate_by_weight(const std::function<int(const std::string&)>& weight,
                                        int bound) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        int w = 0;
        for (const auto& [name, e] : m.exponents()) w += weight(name) * e;
        if (w <= bound) r.add_term(m, c);
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) out << "-";
        const Rational a = c.sign() < 0 ? -c : c;
        if (m.is_one()) {
            out << a.str();
        } else {
            if (a != Rational(1)) out << a.str() << "*";
            out << m.str();
        }
        first = false;
    }
    return out.str();
}

MultiPoly exp_truncated(const MultiPoly& f, const std::function<int(const std::string&)>& weight,
                        int bound) {
    if (!f.coeff(Monomial()).is_zero())
        throw DomainError("polynomial exp needs zero constant term");
    MultiPoly g = f.truncate_by_weight(weight, bound);
    MultiPoly r{Rational(1)};
    MultiPoly power{Rational(1)};
    Rational fact(1);
    for (int k = 1; k <= bound; ++k) {
        power = (power * g).truncate_by_weight(weight, bound);
        if (power.is_zero()) break;
        fact *= Rational(k);
        MultiPoly term = power;
        MultiPoly scaled;
        for (const auto& [m, c] : term.terms()) scaled.add_term(m, c / fact);
        r += scaled;
    }
    return r;
}

namespace {

// term     := factor ('*' factor)*
// factor   := rational | ident ('^' uint)?
// poly     := ('+'|'-')? term (('+'|'-') term)*
struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    Rational parse_number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        std::string num = s.substr(start, i - start);
        if (num.empty()) throw ParseError("expected a number at '" + s.substr(start) + "'");
        if (peek() == '/') {
            ++i;
            skip_ws();
            std::size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            std::string den = s.substr(dstart, i - dstart);
            if (den.empty()) throw ParseError("expected a denominator in '" + s + "'");
            return Rational::from_string(num + "/" + den);
        }
        return Rational::from_string(num);
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (start == i) throw ParseError("expected an identifier in '" + s + "'");
        return s.substr(start, i - start);
    }

    MultiPoly parse_term() {
        Rational coeff(1);
        Monomial mono;
        bool saw_factor = false;
        while (true) {
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                const std::string name = parse_ident();
                int e = 1;
                if (peek() == '^') {
                    ++i;
                    const Rational ex = parse_number();
                    if (!ex.is_integer() || ex.sign() < 0)
                        throw ParseError("exponent must be a non-negative integer in '" + s + "'");
                    e = static_cast<int>(ex.numerator().get_si());
                }
                mono = mono * Monomial::variable(name, e);
            } else {
                throw ParseError("expected a factor in '" + s + "'");
            }
            saw_factor = true;
            if (peek() == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("empty term in '" + s + "'");
        MultiPoly p;
        p.add_term(mono, coeff);
        return p;
    }

    MultiPoly parse_poly() {
        MultiPoly result;
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++i;
        }
        while (true) {
            MultiPoly t = parse_term();
            result += negative ? -t : t;
            if (eof()) break;
            const char c = peek();
            if (c == '+' || c == '-') {
                negative = c == '-';
                ++i;
            } else {
                throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + s + "'");
            }
        }
        return result;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw ParseError("empty polynomial literal");
    return p.parse_poly();
}

}  // namespace qi
