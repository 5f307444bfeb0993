#include "puiseux/poly.hpp"

#include <algorithm>
#include <sstream>

namespace puiseux {

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Poly Poly::monomial(const Scalar& c, long long deg) {
    std::vector<Scalar> v(static_cast<size_t>(deg) + 1, Scalar(0));
    v.back() = c;
    return Poly(std::move(v));
}

Scalar Poly::coeff(long long i) const {
    if (i < 0 || i >= static_cast<long long>(c_.size()))
        return Scalar(0);
    return c_[static_cast<size_t>(i)];
}

Scalar Poly::lead() const {
    if (c_.empty())
        throw scalar_error("zero polynomial has no leading coefficient");
    return c_.back();
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return Poly();
    std::vector<Scalar> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Scalar(static_cast<long long>(i));
    return Poly(std::move(d));
}

Poly Poly::operator-() const {
    std::vector<Scalar> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = -c_[i];
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        v[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i)
        v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Scalar& s) const {
    std::vector<Scalar> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i] * s;
    return Poly(std::move(v));
}

bool Poly::operator==(const Poly& o) const {
    long long d = std::max(degree(), o.degree());
    for (long long i = 0; i <= d; ++i)
        if (coeff(i) != o.coeff(i))
            return false;
    return true;
}

Poly Poly::deflate(const Scalar& r) const {
    if (is_zero())
        throw scalar_error("deflating the zero polynomial");
    // synthetic division
    std::vector<Scalar> q(c_.size() - 1, Scalar(0));
    Scalar carry = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c_[i] + carry * r;
    }
    if (!carry.is_zero())
        throw scalar_error("deflate: not a root");
    return Poly(std::move(q));
}

int Poly::root_multiplicity(const Scalar& r) const {
    Poly p = *this;
    int m = 0;
    while (!p.is_zero() && p.degree() >= 1 && p.eval(r).is_zero()) {
        p = p.deflate(r);
        ++m;
    }
    return m;
}

std::string Poly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long long i = degree(); i >= 0; --i) {
        Scalar a = coeff(i);
        if (a.is_zero())
            continue;
        std::string cs = a.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg)
            cs = cs.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool one = (cs == "1");
        bool wrap = cs.find_first_of("+-/") != std::string::npos;
        if (!one || i == 0)
            os << (wrap ? "(" + cs + ")" : cs);
        if (i > 0) {
            if (!one)
                os << "*";
            os << "C";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

long long RootResult::total_multiplicity() const {
    long long t = 0;
    for (const auto& [r, m] : roots)
        t += m;
    return t;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw scalar_error("polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree())
        return {Poly(), rem};
    std::vector<Scalar> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Scalar(0));
    Scalar lead_inv = b.lead().inv();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        long long shift = rem.degree() - b.degree();
        Scalar c = rem.lead() * lead_inv;
        q[static_cast<size_t>(shift)] = c;
        rem = rem - Poly::monomial(c, shift) * b;
        if (!rem.is_zero() && rem.degree() == shift + b.degree())
            throw scalar_error("polynomial division failed to reduce the degree");
    }
    return {Poly(std::move(q)), rem};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero())
        return x;
    return x * x.lead().inv(); // monic
}

} // namespace puiseux
