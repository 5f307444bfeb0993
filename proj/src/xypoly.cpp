#include "puiseux/xypoly.hpp"

#include <sstream>

namespace puiseux {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    Int out = 1;
    for (long long i = 0; i < k; ++i) {
        out *= Int(n - i);
        out /= Int(i + 1);
    }
    return out;
}

XYPoly XYPoly::monomial(const Scalar& c, const Rat& i, long long j) {
    XYPoly p;
    p.add(i, j, c);
    return p;
}

XYPoly XYPoly::from_series(const PuiseuxPoly& s) {
    XYPoly p;
    long long n = s.ramification();
    for (const auto& [i, a] : s.coeffs())
        p.add(Rat(i, n), 0, a);
    return p;
}

Scalar XYPoly::coeff(const Rat& i, long long j) const {
    auto it = t_.find(XYKey{i, j});
    return it == t_.end() ? Scalar(0) : it->second;
}

void XYPoly::add(const Rat& i, long long j, const Scalar& c) {
    if (c.is_zero())
        return;
    XYKey k{i, j};
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        t_.erase(it);
}

XYPoly XYPoly::operator-() const {
    XYPoly p;
    for (const auto& [k, c] : t_)
        p.t_.emplace(k, -c);
    return p;
}

XYPoly operator+(const XYPoly& a, const XYPoly& b) {
    XYPoly p = a;
    for (const auto& [k, c] : b.t_)
        p.add(k.i, k.j, c);
    return p;
}

XYPoly operator-(const XYPoly& a, const XYPoly& b) { return a + (-b); }

XYPoly operator*(const XYPoly& a, const XYPoly& b) {
    XYPoly p;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_)
            p.add(ka.i + kb.i, ka.j + kb.j, ca * cb);
    return p;
}

XYPoly XYPoly::operator*(const Scalar& c) const {
    XYPoly p;
    if (c.is_zero())
        return p;
    for (const auto& [k, v] : t_)
        p.add(k.i, k.j, v * c);
    return p;
}

bool XYPoly::operator==(const XYPoly& o) const {
    if (t_.size() != o.t_.size())
        return false;
    for (const auto& [k, v] : t_) {
        auto it = o.t_.find(k);
        if (it == o.t_.end() || !(it->second == v))
            return false;
    }
    return true;
}

XYPoly XYPoly::dx() const {
    XYPoly p;
    for (const auto& [k, v] : t_) {
        if (k.i == 0)
            continue;
        p.add(k.i - 1, k.j, v * Scalar(k.i));
    }
    return p;
}

XYPoly XYPoly::dy() const {
    XYPoly p;
    for (const auto& [k, v] : t_) {
        if (k.j == 0)
            continue;
        p.add(k.i, k.j - 1, v * Scalar(k.j));
    }
    return p;
}

XYPoly XYPoly::pow(long long e) const {
    if (e < 0)
        throw scalar_error("negative power of a polynomial");
    XYPoly acc = constant(Scalar(1));
    XYPoly base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rat XYPoly::origin_order() const {
    if (t_.empty())
        throw scalar_error("origin order of the zero polynomial");
    bool first = true;
    Rat best;
    for (const auto& [k, v] : t_) {
        Rat o = k.i + k.j;
        if (first || o < best) {
            best = o;
            first = false;
        }
    }
    return best;
}

long long XYPoly::y_degree() const {
    long long d = 0;
    for (const auto& [k, v] : t_)
        d = std::max(d, k.j);
    return d;
}

long long XYPoly::grid_denominator() const {
    long long r = 1;
    for (const auto& [k, v] : t_)
        r = lcm_ll(r, static_cast<long long>(boost::multiprecision::denominator(k.i)));
    return r;
}

PuiseuxPoly XYPoly::eval_y(const PuiseuxPoly& s) const {
    PuiseuxPoly out(1);
    std::map<long long, PuiseuxPoly> pows;
    for (const auto& [k, v] : t_) {
        auto it = pows.find(k.j);
        if (it == pows.end())
            it = pows.emplace(k.j, s.pow(k.j)).first;
        long long num = static_cast<long long>(boost::multiprecision::numerator(k.i));
        long long den = static_cast<long long>(boost::multiprecision::denominator(k.i));
        out = out + it->second * PuiseuxPoly::monomial(v, num, den);
    }
    return out;
}

XYPoly XYPoly::linear_change(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
    XYPoly out;
    XYPoly nx = monomial(Scalar(a), 1, 0) + monomial(Scalar(b), 0, 1);
    XYPoly ny = monomial(Scalar(c), 1, 0) + monomial(Scalar(d), 0, 1);
    std::map<long long, XYPoly> px, py;
    for (const auto& [k, v] : t_) {
        if (boost::multiprecision::denominator(k.i) != 1)
            throw scalar_error("linear change needs integer exponents");
        long long e = static_cast<long long>(boost::multiprecision::numerator(k.i));
        if (e < 0)
            throw scalar_error("linear change needs nonnegative exponents");
        if (!px.count(e))
            px[e] = nx.pow(e);
        if (!py.count(k.j))
            py[k.j] = ny.pow(k.j);
        out = out + (px[e] * py[k.j]) * v;
    }
    return out;
}

XYPoly XYPoly::to_numeric() const {
    XYPoly out;
    for (const auto& [k, v] : t_)
        out.add(k.i, k.j, v.to_numeric());
    return out;
}

std::string XYPoly::str(const std::string& yname) const {
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : t_) {
        std::string cs = v.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg)
            cs = cs.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool is_const = (k.i == 0 && k.j == 0);
        bool one = (cs == "1");
        bool wrap = cs.find_first_of("+-/") != std::string::npos;
        std::string piece;
        if (!one || is_const)
            piece = wrap ? "(" + cs + ")" : cs;
        auto app = [&piece](const std::string& m) {
            if (!piece.empty())
                piece += "*";
            piece += m;
        };
        if (k.i != 0) {
            Int num = boost::multiprecision::numerator(k.i);
            Int den = boost::multiprecision::denominator(k.i);
            if (den == 1 && num == 1)
                app("x");
            else if (den == 1)
                app("x^" + num.str());
            else
                app("x^(" + num.str() + "/" + den.str() + ")");
        }
        if (k.j != 0)
            app(k.j == 1 ? yname : yname + "^" + std::to_string(k.j));
        os << piece;
    }
    return os.str();
}

} // namespace puiseux
