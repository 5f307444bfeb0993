#include "puiseux/polygon.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace puiseux {

std::vector<Rat> NewtonPolygon::side_coslopes() const {
    std::vector<Rat> out;
    for (size_t i = 0; i + 1 < v_.size(); ++i) {
        Rat di = v_[i + 1].iota - v_[i].iota;
        Rat dj = Rat(v_[i].j - v_[i + 1].j);
        out.push_back(di / dj); // positive: j decreases, iota increases
    }
    return out;
}

NewtonPolygon build_polygon(const std::vector<CloudPoint>& cloud) {
    if (cloud.empty())
        throw scalar_error("empty cloud");
    std::vector<Vertex> pts;
    pts.reserve(cloud.size());
    for (const auto& c : cloud)
        pts.push_back({c.iota, c.j});
    std::sort(pts.begin(), pts.end(), [](const Vertex& a, const Vertex& b) {
        if (a.iota != b.iota)
            return a.iota < b.iota;
        return a.j < b.j;
    });
    // staircase of quadrant-minimal points
    std::vector<Vertex> stair;
    for (const auto& p : pts)
        if (stair.empty() || p.j < stair.back().j)
            stair.push_back(p);
    // lower-left convex chain
    std::vector<Vertex> hull;
    for (const auto& p : stair) {
        while (hull.size() >= 2) {
            const Vertex& a = hull[hull.size() - 2];
            const Vertex& b = hull[hull.size() - 1];
            Rat cross = (b.iota - a.iota) * Rat(p.j - a.j) - Rat(b.j - a.j) * (p.iota - a.iota);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return NewtonPolygon(std::move(hull));
}

SupportElement element(const std::vector<CloudPoint>& cloud, const Rat& mu) {
    if (mu <= 0)
        throw scalar_error("co-slope must be positive");
    if (cloud.empty())
        throw scalar_error("empty cloud");
    SupportElement e;
    e.mu = mu;
    bool first = true;
    for (const auto& p : cloud) {
        Rat val = Rat(p.j) + p.iota / mu;
        if (first || val < e.alpha) {
            e.alpha = val;
            first = false;
        }
    }
    for (const auto& p : cloud)
        if (Rat(p.j) + p.iota / mu == e.alpha)
            e.points.push_back(p);
    std::sort(e.points.begin(), e.points.end(),
              [](const CloudPoint& a, const CloudPoint& b) { return a.iota < b.iota; });
    e.top = e.points.front().j;
    e.bot = e.points.back().j;
    return e;
}

SupportElement element(const CoveredEquation& p, const Rat& mu) { return element(p.cloud(), mu); }

long long height(const CoveredEquation& p) {
    auto cl = p.cloud();
    if (cl.empty())
        throw scalar_error("height of the zero equation");
    Rat min_iota = cl.front().iota;
    for (const auto& c : cl)
        min_iota = std::min(min_iota, c.iota);
    long long h = -1;
    for (const auto& c : cl)
        if (c.iota == min_iota && (h < 0 || c.j < h))
            h = c.j;
    return h;
}

long long relative_height(const CoveredEquation& p, const PuiseuxPoly& s) {
    auto ord = s.order();
    if (!ord)
        throw scalar_error("relative height needs a nonzero series");
    if (*ord <= 0)
        throw scalar_error("relative height needs ord(s) > 0");
    return element(p, *ord).top;
}

namespace {

nlohmann::json rat_json(const Rat& r) {
    return nlohmann::json::array({boost::multiprecision::numerator(r).str(),
                                  boost::multiprecision::denominator(r).str()});
}

// fixed-point decimal with 3 digits, exact integer arithmetic
std::string px(const Rat& v) {
    Rat scaled = v * 1000;
    Int n = boost::multiprecision::numerator(scaled);
    Int d = boost::multiprecision::denominator(scaled);
    Int q = n / d; // truncation is fine: inputs are small grid fractions
    bool neg = q < 0;
    Int aq = boost::multiprecision::abs(q);
    Int whole = aq / 1000, frac = aq % 1000;
    std::ostringstream os;
    if (neg)
        os << "-";
    os << whole;
    if (frac != 0) {
        std::string f = frac.str();
        while (f.size() < 3)
            f = "0" + f;
        while (!f.empty() && f.back() == '0')
            f.pop_back();
        os << "." << f;
    }
    return os.str();
}

std::string render_svg(const CoveredEquation& p, const RenderOptions& opts) {
    auto cl = p.cloud();
    auto poly = build_polygon(cl);
    Rat min_i(0), max_i(1);
    long long max_j = 1;
    for (const auto& c : cl) {
        min_i = std::min(min_i, c.iota);
        max_i = std::max(max_i, c.iota);
        max_j = std::max(max_j, c.j);
    }
    const long long unit = 32;
    Rat w = (max_i - min_i + 2) * unit;
    Rat h = Rat(max_j + 2) * unit;
    // y flips: svg origin is top-left
    auto X = [&](const Rat& i) { return px((i - min_i + 1) * unit); };
    auto Y = [&](const Rat& j) { return px((Rat(max_j) - j + 1) * unit); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << px(w) << " " << px(h)
       << "\">\n";
    // axes
    os << "<line x1=\"" << X(Rat(0)) << "\" y1=\"" << Y(Rat(-1)) << "\" x2=\"" << X(Rat(0))
       << "\" y2=\"" << Y(Rat(max_j + 1)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << X(min_i - 1) << "\" y1=\"" << Y(Rat(0)) << "\" x2=\""
       << X(max_i + 1) << "\" y2=\"" << Y(Rat(0)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // polygon boundary with vertical/horizontal rays
    const auto& vs = poly.vertices();
    os << "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" points=\"";
    os << X(vs.front().iota) << "," << Y(Rat(max_j + 1)) << " ";
    for (const auto& v : vs)
        os << X(v.iota) << "," << Y(Rat(v.j)) << " ";
    os << X(max_i + 1) << "," << Y(Rat(vs.back().j)) << "\"/>\n";
    // supporting lines
    for (const Rat& mu : opts.lines) {
        auto e = element(cl, mu);
        // j = alpha - i/mu between i at j=max_j+1 and j=0
        Rat i_top = (e.alpha - Rat(max_j + 1)) * mu;
        Rat i_bot = e.alpha * mu;
        os << "<line x1=\"" << X(i_top) << "\" y1=\"" << Y(Rat(max_j + 1)) << "\" x2=\""
           << X(i_bot) << "\" y2=\"" << Y(Rat(0))
           << "\" stroke=\"gray\" stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n";
    }
    // cloud: filled circles; unfilled when the point carries only B
    for (const auto& c : cl) {
        bool filled = c.from_a;
        os << "<circle cx=\"" << X(c.iota) << "\" cy=\"" << Y(Rat(c.j)) << "\" r=\"4\" "
           << (filled ? "fill=\"black\"" : "fill=\"white\" stroke=\"black\"") << "/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_ascii(const CoveredEquation& p) {
    auto cl = p.cloud();
    auto poly = build_polygon(cl);
    long long r = 1;
    for (const auto& c : cl)
        r = lcm_ll(r, static_cast<long long>(boost::multiprecision::denominator(c.iota)));
    long long min_col = 0, max_col = 0, max_j = 0;
    auto col_of = [&](const Rat& i) {
        Rat c = i * r;
        return static_cast<long long>(boost::multiprecision::numerator(c));
    };
    for (const auto& c : cl) {
        min_col = std::min(min_col, col_of(c.iota));
        max_col = std::max(max_col, col_of(c.iota));
        max_j = std::max(max_j, c.j);
    }
    std::vector<std::string> grid(static_cast<size_t>(max_j + 1),
                                  std::string(static_cast<size_t>(max_col - min_col + 1), '.'));
    for (const auto& c : cl) {
        char ch = c.from_a ? '*' : 'o';
        grid[static_cast<size_t>(max_j - c.j)][static_cast<size_t>(col_of(c.iota) - min_col)] = ch;
    }
    for (const auto& v : poly.vertices())
        grid[static_cast<size_t>(max_j - v.j)][static_cast<size_t>(col_of(v.iota) - min_col)] = '#';
    std::ostringstream os;
    for (long long j = 0; j <= max_j; ++j)
        os << (max_j - j) << " |" << grid[static_cast<size_t>(j)] << "\n";
    os << "   " << std::string(static_cast<size_t>(max_col - min_col + 1), '-') << "  (x step 1/"
       << r << ")\n";
    return os.str();
}

std::string render_json(const CoveredEquation& p, const RenderOptions& opts) {
    auto cl = p.cloud();
    auto poly = build_polygon(cl);
    nlohmann::json out;
    out["vertices"] = nlohmann::json::array();
    for (const auto& v : poly.vertices())
        out["vertices"].push_back(nlohmann::json::array(
            {boost::multiprecision::numerator(v.iota).str(),
             boost::multiprecision::denominator(v.iota).str(), v.j}));
    out["cloud"] = nlohmann::json::array();
    for (const auto& c : cl) {
        std::string src = std::string(c.from_a ? "A" : "") + (c.from_b ? "B" : "");
        out["cloud"].push_back(
            nlohmann::json{{"i", rat_json(c.iota)}, {"j", c.j}, {"sources", src}});
    }
    out["lines"] = nlohmann::json::array();
    for (const Rat& mu : opts.lines) {
        auto e = element(cl, mu);
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& c : e.points)
            pts.push_back(nlohmann::json::array({rat_json(c.iota), c.j}));
        out["lines"].push_back(nlohmann::json{{"mu", rat_json(mu)},
                                              {"alpha", rat_json(e.alpha)},
                                              {"top", e.top},
                                              {"bot", e.bot},
                                              {"points", pts}});
    }
    return out.dump(2) + "\n";
}

} // namespace

std::string render(const CoveredEquation& p, RenderFormat format, const RenderOptions& opts) {
    switch (format) {
    case RenderFormat::svg: return render_svg(p, opts);
    case RenderFormat::ascii: return render_ascii(p);
    case RenderFormat::json: return render_json(p, opts);
    }
    throw scalar_error("unknown render format");
}

} // namespace puiseux
