#include "puiseux/equation.hpp"

namespace puiseux {

CoveredEquation CoveredEquation::from_raw(const OperatorSpec& op, const XYPoly& a,
                                          const XYPoly& b_raw) {
    CoveredEquation p;
    p.op_ = op;
    p.a_ = a;
    // Substituting a term of order < 1 into a differential equation moves
    // sigma-images with exponents in (-1, 0) into A; the cloud region is
    // bounded below by -o_sigma either way. Honest input equations are
    // validated at the parser instead.
    for (const auto& [k, v] : a.terms())
        if (k.i + op.order() < 0)
            throw scalar_error("x-exponent below the operator bound in A");
    for (const auto& [k, v] : b_raw.terms()) {
        if (k.i < 0)
            throw scalar_error("negative x-exponent in B");
        p.b_.add(k.i - op.order(), k.j + 1, v);
    }
    return p;
}

CoveredEquation CoveredEquation::from_shifted(const OperatorSpec& op, const XYPoly& a,
                                              const XYPoly& b_shifted) {
    CoveredEquation p;
    p.op_ = op;
    p.a_ = a;
    p.b_ = b_shifted;
    for (const auto& [k, v] : b_shifted.terms())
        if (k.i + op.order() < 0 || k.j < 1)
            throw scalar_error("invalid shifted B support");
    return p;
}

XYPoly CoveredEquation::b_raw() const {
    XYPoly out;
    for (const auto& [k, v] : b_.terms())
        out.add(k.i + op_.order(), k.j - 1, v);
    return out;
}

long long CoveredEquation::ramification() const {
    return lcm_ll(a_.grid_denominator(), b_.grid_denominator());
}

std::vector<CloudPoint> CoveredEquation::cloud() const {
    std::map<XYKey, CloudPoint> pts;
    for (const auto& [k, v] : a_.terms()) {
        auto& p = pts[k];
        p.iota = k.i;
        p.j = k.j;
        p.from_a = true;
    }
    for (const auto& [k, v] : b_.terms()) {
        auto& p = pts[k];
        p.iota = k.i;
        p.j = k.j;
        p.from_b = true;
    }
    std::vector<CloudPoint> out;
    out.reserve(pts.size());
    for (auto& [k, p] : pts)
        out.push_back(p);
    return out;
}

Rat CoveredEquation::nu0() const {
    if (is_zero())
        throw scalar_error("multiplicity of the zero equation");
    bool have = false;
    Rat best;
    auto scan = [&](const XYPoly& f) {
        if (f.is_zero())
            return;
        Rat o = f.origin_order();
        if (!have || o < best) {
            best = o;
            have = true;
        }
    };
    scan(a_);
    scan(b_raw());
    return best;
}

PuiseuxPoly CoveredEquation::residual(const PuiseuxPoly& s) const {
    PuiseuxPoly out = a_.eval_y(s);
    if (!b_.is_zero())
        out = out + b_raw().eval_y(s) * sigma_apply(s, op_);
    return out;
}

std::string CoveredEquation::str() const {
    XYPoly braw = b_raw();
    if (braw.is_zero())
        return a_.str();
    std::string bs = braw.str();
    std::string out;
    if (!a_.is_zero())
        out = a_.str() + " + ";
    return out + "(" + bs + ")*y1";
}

ValidationReport validate_covered(const CoveredEquation& p) {
    ValidationReport r;
    Scalar a00 = p.a().coeff(Rat(0), 0);
    Scalar b00 = p.b_raw().coeff(Rat(0), 0);
    r.a00_zero = a00.is_zero();
    r.b00_zero = b00.is_zero();
    if (!r.a00_zero)
        r.warnings.push_back("A(0,0) = " + a00.str() + " != 0");
    if (!r.b00_zero)
        r.warnings.push_back("B(0,0) = " + b00.str() + " != 0");
    return r;
}

namespace {

// y := y + c x^mu
XYPoly shift_y(const XYPoly& f, const Scalar& c, const Rat& mu) {
    if (c.is_zero())
        return f;
    XYPoly out;
    for (const auto& [k, v] : f.terms()) {
        for (long long l = 0; l <= k.j; ++l) {
            Scalar coef = v * Scalar(binomial(k.j, l)) * c.pow(k.j - l);
            out.add(k.i + Rat(k.j - l) * mu, l, coef);
        }
    }
    return out;
}

} // namespace

CoveredEquation substitute(const CoveredEquation& p, const Scalar& c, long long k, long long n) {
    if (k < 1 || n < 1)
        throw scalar_error("substitution needs k >= 1, n >= 1");
    Rat mu(k, n);
    XYPoly a_raw = p.a();
    XYPoly b_raw = p.b_raw();
    XYPoly a_new = shift_y(a_raw, c, mu);
    XYPoly b_new = shift_y(b_raw, c, mu);
    if (!b_new.is_zero() && !c.is_zero()) {
        // sigma(c x^mu) = c delta_mu x^{mu - o}
        Scalar d = delta_coeff(p.op(), mu);
        XYPoly sig = XYPoly::monomial(c * d, mu - p.op().order(), 0);
        a_new = a_new + b_new * sig;
    }
    return CoveredEquation::from_raw(p.op(), a_new, b_new);
}

Poly ParamEquation::a_at(const Rat& iota, long long j) const {
    auto it = a.find(XYKey{iota, j});
    return it == a.end() ? Poly() : it->second;
}

Poly ParamEquation::b_at(const Rat& iota, long long j) const {
    auto it = b.find(XYKey{iota, j});
    return it == b.end() ? Poly() : it->second;
}

CoveredEquation ParamEquation::eval(const Scalar& c) const {
    XYPoly ea, eb;
    for (const auto& [k, pol] : a)
        ea.add(k.i, k.j, pol.eval(c));
    for (const auto& [k, pol] : b)
        eb.add(k.i, k.j, pol.eval(c));
    return CoveredEquation::from_shifted(op, ea, eb);
}

CoveredEquation to_numeric(const CoveredEquation& p) {
    return CoveredEquation::from_shifted(p.op(), p.a().to_numeric(), p.b_shifted().to_numeric());
}

PuiseuxPoly to_numeric(const PuiseuxPoly& s) {
    PuiseuxPoly out(s.ramification());
    for (const auto& [i, c] : s.coeffs())
        out.set_coeff(i, c.to_numeric());
    return out;
}

ParamEquation substitute_parametric(const CoveredEquation& p, long long k, long long n) {
    if (k < 1 || n < 1)
        throw scalar_error("substitution needs k >= 1, n >= 1");
    Rat mu(k, n);
    ParamEquation out;
    out.op = p.op();

    auto add = [](std::map<XYKey, Poly>& dst, const Rat& i, long long j, const Poly& q) {
        if (q.is_zero())
            return;
        auto [it, fresh] = dst.try_emplace(XYKey{i, j}, q);
        if (!fresh) {
            it->second = it->second + q;
            if (it->second.is_zero())
                dst.erase(it);
        }
    };

    // A part: A_{ij} x^i (y + C x^mu)^j
    for (const auto& [key, v] : p.a().terms())
        for (long long l = 0; l <= key.j; ++l)
            add(out.a, key.i + Rat(key.j - l) * mu, l,
                Poly::monomial(v * Scalar(binomial(key.j, l)), key.j - l));

    // B part: b x^i (y + C x^mu)^{j} (y1 + C delta x^{mu - o})
    Scalar d = delta_coeff(p.op(), mu);
    XYPoly braw = p.b_raw();
    for (const auto& [key, v] : braw.terms()) {
        for (long long l = 0; l <= key.j; ++l) {
            Poly coef = Poly::monomial(v * Scalar(binomial(key.j, l)), key.j - l);
            // y1 branch stays in B (shifted indexing)
            add(out.b, key.i + Rat(key.j - l) * mu - p.op().order(), l + 1, coef);
            // sigma branch lands in A with one more factor of C
            add(out.a, key.i + Rat(key.j - l) * mu + mu - p.op().order(), l,
                coef * Poly({Scalar(0), d}));
        }
    }
    return out;
}

} // namespace puiseux
