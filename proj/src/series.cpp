#include "puiseux/series.hpp"

#include <numeric>
#include <sstream>

namespace puiseux {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0)
        return 0;
    return a / std::gcd(a, b) * b;
}

PuiseuxPoly PuiseuxPoly::monomial(const Scalar& c, long long i, long long n) {
    PuiseuxPoly s(n);
    s.set_coeff(i, c);
    return s;
}

Scalar PuiseuxPoly::coeff(long long i) const {
    auto it = c_.find(i);
    return it == c_.end() ? Scalar(0) : it->second;
}

void PuiseuxPoly::set_coeff(long long i, const Scalar& v) {
    if (v.is_zero())
        c_.erase(i);
    else
        c_[i] = v;
}

std::optional<Rat> PuiseuxPoly::order() const {
    if (c_.empty())
        return std::nullopt;
    return Rat(c_.begin()->first, n_);
}

long long PuiseuxPoly::top_index() const {
    if (c_.empty())
        throw scalar_error("zero series has no top index");
    return c_.rbegin()->first;
}

PuiseuxPoly PuiseuxPoly::truncate(long long k) const {
    PuiseuxPoly out(n_);
    for (const auto& [i, a] : c_)
        if (i > 0 && i <= k)
            out.c_[i] = a;
    return out;
}

PuiseuxPoly PuiseuxPoly::reduce() const {
    long long g = n_;
    for (const auto& [i, a] : c_)
        g = gcd_ll(g, i < 0 ? -i : i);
    if (g == 0 || g == 1)
        return *this;
    PuiseuxPoly out(n_ / g);
    for (const auto& [i, a] : c_)
        out.c_[i / g] = a;
    return out;
}

PuiseuxPoly PuiseuxPoly::with_ramification(long long m) const {
    if (m <= 0 || m % n_ != 0)
        throw scalar_error("new ramification must be a positive multiple");
    long long f = m / n_;
    PuiseuxPoly out(m);
    for (const auto& [i, a] : c_)
        out.c_[i * f] = a;
    return out;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
    PuiseuxPoly out(n_);
    for (const auto& [i, a] : c_)
        out.c_[i] = -a;
    return out;
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    long long m = lcm_ll(a.n_, b.n_);
    PuiseuxPoly x = a.with_ramification(m), y = b.with_ramification(m);
    for (const auto& [i, c] : y.c_)
        x.set_coeff(i, x.coeff(i) + c);
    return x;
}

PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    long long m = lcm_ll(a.n_, b.n_);
    PuiseuxPoly x = a.with_ramification(m), y = b.with_ramification(m);
    PuiseuxPoly out(m);
    for (const auto& [i, c] : x.c_)
        for (const auto& [j, d] : y.c_)
            out.set_coeff(i + j, out.coeff(i + j) + c * d);
    return out;
}

PuiseuxPoly PuiseuxPoly::operator*(const Scalar& c) const {
    PuiseuxPoly out(n_);
    if (c.is_zero())
        return out;
    for (const auto& [i, a] : c_)
        out.set_coeff(i, a * c);
    return out;
}

PuiseuxPoly PuiseuxPoly::pow(long long e) const {
    if (e < 0)
        throw scalar_error("negative series power");
    PuiseuxPoly acc = monomial(Scalar(1), 0, 1);
    PuiseuxPoly base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool PuiseuxPoly::operator==(const PuiseuxPoly& o) const {
    long long m = lcm_ll(n_, o.n_);
    PuiseuxPoly x = with_ramification(m), y = o.with_ramification(m);
    if (x.c_.size() != y.c_.size())
        return false;
    for (const auto& [i, a] : x.c_) {
        if (!(y.coeff(i) == a))
            return false;
    }
    return true;
}

std::string PuiseuxPoly::str() const {
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, a] : c_) {
        std::string cs = a.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg)
            cs = cs.substr(1);
        if (first) {
            if (neg)
                os << "- ";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool need_coeff = !(cs == "1" && i != 0);
        bool wrap = cs.find_first_of("+-/") != std::string::npos;
        if (need_coeff) {
            if (wrap)
                os << "(" << cs << ")";
            else
                os << cs;
        }
        if (i != 0) {
            if (need_coeff)
                os << "*";
            os << "x";
            long long g = gcd_ll(i < 0 ? -i : i, n_);
            long long num = i / g, den = n_ / g;
            if (den == 1) {
                if (num != 1)
                    os << "^" << num;
            } else {
                os << "^(" << num << "/" << den << ")";
            }
        }
    }
    return os.str();
}

PuiseuxPoly sigma_apply(const PuiseuxPoly& s, const OperatorSpec& op) {
    PuiseuxPoly out(s.ramification());
    long long n = s.ramification();
    for (const auto& [i, a] : s.coeffs()) {
        if (op.is_differential()) {
            if (i == 0)
                continue;
            out.set_coeff(i - n, a * Scalar(Rat(i, n)));
        } else {
            out.set_coeff(i, a * q_power(op, Rat(i, n)));
        }
    }
    return out;
}

CharacteristicData characteristic_data(const PuiseuxPoly& s_in) {
    if (s_in.is_zero())
        throw scalar_error("characteristic data of the zero series");
    PuiseuxPoly s = s_in.reduce();
    long long n = s.ramification();
    CharacteristicData cd;
    long long cur = 1; // r_1 ... r_i so far
    for (const auto& [k, a] : s.coeffs()) {
        if (cur == n)
            break;
        long long step = n / cur; // current grid: indices divisible by step
        if (k % step == 0)
            continue;
        // r_1...r_i * e/n = p/r in lowest terms
        long long num = cur * k, den = n;
        long long g = gcd_ll(num < 0 ? -num : num, den);
        long long p = num / g, r = den / g;
        cd.exponents.push_back(k);
        cd.factors.push_back(r);
        cd.p.push_back(p);
        cur *= r;
    }
    if (cur != n)
        throw scalar_error("series is not reduced");
    cd.genus = static_cast<long long>(cd.factors.size());
    return cd;
}

long long factor_for_index(const CharacteristicData& cd, long long k) {
    for (size_t i = 0; i < cd.exponents.size(); ++i)
        if (cd.exponents[i] == k)
            return cd.factors[i];
    return 1;
}

} // namespace puiseux
