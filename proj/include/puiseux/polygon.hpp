#pragma once

#include "puiseux/equation.hpp"

#include <vector>

namespace puiseux {

struct Vertex {
    Rat iota;
    long long j;
    bool operator==(const Vertex& o) const { return iota == o.iota && j == o.j; }
};

// Negative-slope boundary of the convex envelope of the cloud fattened by
// positive quadrants: j strictly decreasing, iota strictly increasing.
// Vertical/horizontal rays are implicit at the first/last vertex.
class NewtonPolygon {
  public:
    NewtonPolygon() = default;
    explicit NewtonPolygon(std::vector<Vertex> vs) : v_(std::move(vs)) {}
    const std::vector<Vertex>& vertices() const { return v_; }
    bool operator==(const NewtonPolygon& o) const { return v_ == o.v_; }

    // co-slopes of the finite sides, increasing
    std::vector<Rat> side_coslopes() const;

  private:
    std::vector<Vertex> v_;
};

NewtonPolygon build_polygon(const std::vector<CloudPoint>& cloud);

// Contact set of the supporting line of co-slope mu with the polygon.
struct SupportElement {
    Rat mu;
    Rat alpha;                     // intercept: min over cloud of j + iota/mu
    std::vector<CloudPoint> points; // cloud points on the line, ascending iota
    long long top = 0;
    long long bot = 0;
    bool is_vertex() const { return points.size() == 1; }
    // abscissa of the line's lattice point at ordinate j
    Rat iota_at(long long j) const { return (alpha - Rat(j)) * mu; }
};

SupportElement element(const CoveredEquation& p, const Rat& mu);
SupportElement element(const std::vector<CloudPoint>& cloud, const Rat& mu);

// H(P): ordinate of the leftmost vertex
long long height(const CoveredEquation& p);
// H(P, s) = Top(E_{P, ord s}); requires 0 < ord s < infinity
long long relative_height(const CoveredEquation& p, const PuiseuxPoly& s);

enum class RenderFormat { svg, ascii, json };

struct RenderOptions {
    std::vector<Rat> lines; // supporting lines to draw
};

std::string render(const CoveredEquation& p, RenderFormat format,
                   const RenderOptions& opts = {});

} // namespace puiseux
