#include "puiseux/parser.hpp"

#include <cctype>

namespace puiseux {

namespace {

enum class Tok { number, name, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

struct Lexer {
    const std::string& s;
    size_t p = 0;
    explicit Lexer(const std::string& src) : s(src) {}

    Token next() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p])))
            ++p;
        if (p >= s.size())
            return {Tok::end, "", p};
        size_t start = p;
        char c = s[p];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (p < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '.'))
                ++p;
            return {Tok::number, s.substr(start, p - start), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p]))))
                ++p;
            return {Tok::name, s.substr(start, p - start), start};
        }
        ++p;
        switch (c) {
        case '+': return {Tok::plus, "+", start};
        case '-': return {Tok::minus, "-", start};
        case '*': return {Tok::star, "*", start};
        case '/': return {Tok::slash, "/", start};
        case '^': return {Tok::caret, "^", start};
        case '(': return {Tok::lparen, "(", start};
        case ')': return {Tok::rparen, ")", start};
        default: throw parse_error(std::string("unexpected character '") + c + "'", start);
        }
    }
};

// value = p0 + p1 * y1
struct EqValue {
    XYPoly p0, p1;
    bool has_y1() const { return !p1.is_zero(); }
};

EqValue ev_const(const Scalar& c) { return {XYPoly::constant(c), XYPoly()}; }

EqValue ev_add(const EqValue& a, const EqValue& b) { return {a.p0 + b.p0, a.p1 + b.p1}; }

EqValue ev_neg(const EqValue& a) { return {-a.p0, -a.p1}; }

EqValue ev_mul(const EqValue& a, const EqValue& b, size_t pos) {
    if (a.has_y1() && b.has_y1())
        throw parse_error("y1 appears with degree >= 2; only first order and first degree "
                          "equations are supported",
                          pos);
    return {a.p0 * b.p0, a.p0 * b.p1 + a.p1 * b.p0};
}

Rat parse_number(const std::string& text, size_t pos) {
    auto dot = text.find('.');
    if (dot == std::string::npos)
        return Rat(Int(text));
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.find('.') != std::string::npos || frac.empty())
        throw parse_error("bad decimal literal '" + text + "'", pos);
    Int den = 1;
    for (size_t i = 0; i < frac.size(); ++i)
        den *= 10;
    Int num = Int(whole.empty() ? "0" : whole) * den + Int(frac);
    return Rat(num, den);
}

struct Parser {
    Lexer lex;
    Token tok;
    bool allow_y;

    Parser(const std::string& src, bool allow_y_) : lex(src), allow_y(allow_y_) { advance(); }
    void advance() { tok = lex.next(); }
    void expect(Tok k, const char* what) {
        if (tok.kind != k)
            throw parse_error(std::string("expected ") + what, tok.pos);
        advance();
    }

    EqValue parse_expr() {
        bool neg = false;
        while (tok.kind == Tok::plus || tok.kind == Tok::minus) {
            if (tok.kind == Tok::minus)
                neg = !neg;
            advance();
        }
        EqValue acc = parse_term();
        if (neg)
            acc = ev_neg(acc);
        while (tok.kind == Tok::plus || tok.kind == Tok::minus) {
            bool minus = tok.kind == Tok::minus;
            advance();
            EqValue t = parse_term();
            acc = ev_add(acc, minus ? ev_neg(t) : t);
        }
        return acc;
    }

    EqValue parse_term() {
        EqValue acc = parse_factor();
        while (tok.kind == Tok::star || tok.kind == Tok::slash) {
            bool div = tok.kind == Tok::slash;
            size_t pos = tok.pos;
            advance();
            EqValue f = parse_factor();
            if (div) {
                if (f.has_y1() || f.p0.terms().size() != 1 ||
                    !(f.p0.terms().begin()->first == XYKey{Rat(0), 0}))
                    throw parse_error("division only by a nonzero constant", pos);
                Scalar d = f.p0.terms().begin()->second;
                acc = {acc.p0 * d.inv(), acc.p1 * d.inv()};
            } else {
                acc = ev_mul(acc, f, pos);
            }
        }
        return acc;
    }

    EqValue parse_factor() {
        if (tok.kind == Tok::minus || tok.kind == Tok::plus) {
            bool neg = tok.kind == Tok::minus;
            advance();
            EqValue v = parse_factor();
            return neg ? ev_neg(v) : v;
        }
        EqValue base = parse_primary();
        if (tok.kind == Tok::caret) {
            size_t pos = tok.pos;
            advance();
            auto [num, den] = parse_exponent();
            if (den != 1) {
                // fractional powers only directly on x
                XYKey xkey{Rat(1), 0};
                if (base.has_y1() || base.p0.terms().size() != 1 ||
                    !(base.p0.terms().begin()->first == xkey) ||
                    !(base.p0.terms().begin()->second == Scalar(1)))
                    throw parse_error("fractional exponent allowed only on x", pos);
                return {XYPoly::monomial(Scalar(1), Rat(num, den), 0), XYPoly()};
            }
            if (num < 0)
                throw parse_error("negative exponents are not allowed", pos);
            if (base.has_y1()) {
                if (num == 0)
                    return ev_const(Scalar(1));
                if (num > 1)
                    throw parse_error("y1 appears with degree >= 2", pos);
                return base;
            }
            return {base.p0.pow(num), XYPoly()};
        }
        return base;
    }

    std::pair<long long, long long> parse_exponent() {
        bool neg = false;
        if (tok.kind == Tok::minus) {
            neg = true;
            advance();
        }
        if (tok.kind == Tok::number) {
            if (tok.text.find('.') != std::string::npos)
                throw parse_error("exponent must be an integer", tok.pos);
            long long v = std::stoll(tok.text);
            advance();
            return {neg ? -v : v, 1};
        }
        if (tok.kind == Tok::lparen) {
            advance();
            bool n2 = false;
            if (tok.kind == Tok::minus) {
                n2 = true;
                advance();
            }
            if (tok.kind != Tok::number || tok.text.find('.') != std::string::npos)
                throw parse_error("expected integer numerator", tok.pos);
            long long num = std::stoll(tok.text);
            advance();
            expect(Tok::slash, "'/'");
            if (tok.kind != Tok::number || tok.text.find('.') != std::string::npos)
                throw parse_error("expected integer denominator", tok.pos);
            long long den = std::stoll(tok.text);
            advance();
            expect(Tok::rparen, "')'");
            if (den <= 0)
                throw parse_error("exponent denominator must be positive", tok.pos);
            return {(neg != n2) ? -num : num, den};
        }
        throw parse_error("expected exponent", tok.pos);
    }

    EqValue parse_primary() {
        switch (tok.kind) {
        case Tok::number: {
            Rat r = parse_number(tok.text, tok.pos);
            advance();
            return ev_const(Scalar(r));
        }
        case Tok::name: {
            std::string n = tok.text;
            size_t pos = tok.pos;
            advance();
            if (n == "x")
                return {XYPoly::monomial(Scalar(1), Rat(1), 0), XYPoly()};
            if (n == "y") {
                if (!allow_y)
                    throw parse_error("'y' is not allowed here", pos);
                return {XYPoly::monomial(Scalar(1), Rat(0), 1), XYPoly()};
            }
            if (n == "y1") {
                if (!allow_y)
                    throw parse_error("'y1' is not allowed here", pos);
                return {XYPoly(), XYPoly::constant(Scalar(1))};
            }
            if (n == "i")
                return ev_const(Scalar::quadratic(Rat(0), Rat(1), Int(-1)));
            if (n == "sqrt") {
                expect(Tok::lparen, "'('");
                EqValue arg = parse_expr();
                expect(Tok::rparen, "')'");
                if (arg.has_y1() || arg.p0.y_degree() > 0 || arg.p0.grid_denominator() != 1 ||
                    (!arg.p0.is_zero() && arg.p0.terms().rbegin()->first.i != 0))
                    throw parse_error("sqrt takes a constant argument", pos);
                Scalar c = arg.p0.coeff(Rat(0), 0);
                if (c.is_rational())
                    return ev_const(sqrt_of_rat(c.rat()));
                if (auto s = c.sqrt_exact())
                    return ev_const(*s);
                throw parse_error("sqrt argument outside the exact tower", pos);
            }
            throw parse_error("unknown name '" + n + "'", pos);
        }
        case Tok::lparen: {
            advance();
            EqValue v = parse_expr();
            expect(Tok::rparen, "')'");
            return v;
        }
        default:
            throw parse_error("expected a term", tok.pos);
        }
    }
};

EqValue parse_text(const std::string& text, bool allow_y) {
    Parser p(text, allow_y);
    EqValue v = p.parse_expr();
    if (p.tok.kind != Tok::end)
        throw parse_error("trailing input", p.tok.pos);
    return v;
}

} // namespace

CoveredEquation parse_equation(const std::string& text, const OperatorSpec& op) {
    EqValue v = parse_text(text, true);
    for (const auto& part : {v.p0, v.p1})
        for (const auto& [k, c] : part.terms())
            if (k.i < 0)
                throw parse_error("negative exponents are not allowed", 0);
    return CoveredEquation::from_raw(op, v.p0, v.p1);
}

PuiseuxPoly parse_series(const std::string& text) {
    EqValue v = parse_text(text, false);
    PuiseuxPoly zero(1);
    return v.p0.eval_y(zero);
}

Scalar parse_scalar(const std::string& text) {
    EqValue v = parse_text(text, false);
    if (!v.p0.is_zero() && v.p0.terms().rbegin()->first.i != 0)
        throw parse_error("expected a constant", 0);
    return v.p0.coeff(Rat(0), 0);
}

} // namespace puiseux
