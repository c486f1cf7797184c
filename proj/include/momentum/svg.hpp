#pragma once

// SVG rendering of rank-two momentum polytopes.
//
// Drawing coordinates have the form a + b*sqrt(3) with rational a, b and are
// the image of fundamental-weight coordinates under a fixed linear map per
// type (scale s = 100):
//   A2:    pi1 -> (-1/2, sqrt3/2) s,  pi2 -> (1/2, sqrt3/2) s
//   G2:    pi1 -> (1/2, sqrt3/2) s,   pi2 -> (0, sqrt3) s
//   B2:    pi1 -> (1, 0) s,           pi2 -> (1/2, 1/2) s
//   C2:    pi1 -> (1, 0) s,           pi2 -> (1, 1) s
//   A1xA1: pi1 -> (1, 0) s,           pi2 -> (0, 1) s
// The SVG uses these numbers verbatim (decimalized to 6 places) inside a
// group flipped by scale(1,-1), so the y axis points up.

#include "momentum/momentum.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace momentum {

// a + b*sqrt(3)
struct Surd {
    Rational a = 0, b = 0;

    friend Surd operator+(const Surd& x, const Surd& y) { return {x.a + y.a, x.b + y.b}; }
    friend Surd operator*(const Rational& s, const Surd& x) { return {s * x.a, s * x.b}; }
    friend bool operator==(const Surd&, const Surd&) = default;
};

struct DrawPoint {
    Surd x, y;
};

// Six-decimal rendering, rounded half away from zero. Exact when b = 0;
// otherwise evaluated with 512-bit GMP floats, which cannot hit a tie.
inline std::string decimal6(const Surd& s) {
    Integer scaled;
    if (s.b == 0) {
        Rational v = s.a * 1000000;
        Integer num = abs(v.get_num()), den = v.get_den();
        Integer q = (2 * num + den) / (2 * den);
        scaled = v < 0 ? Integer(-q) : q;
    } else {
        mpf_class three(3, 512), r(0, 512);
        mpf_sqrt(r.get_mpf_t(), three.get_mpf_t());
        mpf_class v(s.a, 512);
        v += mpf_class(s.b, 512) * r;
        v *= 1000000;
        mpf_class half(0.5, 512);
        mpf_class t = v < 0 ? mpf_class(v - half, 512) : mpf_class(v + half, 512);
        mpf_class tr(0, 512);
        mpf_trunc(tr.get_mpf_t(), t.get_mpf_t());
        scaled = Integer(tr);
    }
    bool neg = scaled < 0;
    std::string digits = Integer(abs(scaled)).get_str();
    if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
    return (neg ? "-" : "") + out;
}

inline double approx(const Surd& s) { return s.a.get_d() + s.b.get_d() * 1.7320508075688772; }

class DrawingMap {
public:
    explicit DrawingMap(const RootSystem& rs, Rational scale = 100) {
        const auto& spec = rs.spec();
        if (spec.torus_rank != 0 || rs.semisimple_rank() != 2)
            throw UnsupportedCase("rendering needs semisimple rank exactly 2 and no central torus");
        const Rational h = make_rational(1, 2);
        if (spec.factors.size() == 2) {
            images_ = {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}};
        } else {
            switch (spec.factors[0].type) {
                case CartanType::A: images_ = {{{-h, 0}, {0, h}}, {{h, 0}, {0, h}}}; break;
                case CartanType::G: images_ = {{{h, 0}, {0, h}}, {{0, 0}, {0, 1}}}; break;
                case CartanType::B: images_ = {{{1, 0}, {0, 0}}, {{h, 0}, {h, 0}}}; break;
                case CartanType::C: images_ = {{{1, 0}, {0, 0}}, {{1, 0}, {1, 0}}}; break;
                default: throw UnsupportedCase("no drawing map for this rank-2 type");
            }
        }
        for (auto& p : images_) {
            p.x = scale * p.x;
            p.y = scale * p.y;
        }
    }

    DrawPoint operator()(const QVec& w) const {
        DrawPoint out;
        for (std::size_t i = 0; i < 2; ++i) {
            out.x = out.x + w[i] * images_[i].x;
            out.y = out.y + w[i] * images_[i].y;
        }
        return out;
    }

private:
    std::vector<DrawPoint> images_;
};

enum class PolygonStyle { chamber, weight_hull, momentum_light, momentum_dark };
enum class Glyph { dot, square };

struct ScenePolygon {
    std::vector<DrawPoint> loop;
    PolygonStyle style;
};
struct SceneMarker {
    DrawPoint at;
    Glyph glyph;
    std::string label;
};
struct SvgScene {
    std::vector<ScenePolygon> polygons;  // drawn in order
    std::vector<SceneMarker> markers;
};

// Vertices of a polygon in the plane, in counterclockwise order (exact).
inline std::vector<QVec> cyclic_order(std::vector<QVec> pts) {
    if (pts.size() < 3) return pts;
    QVec c(2);
    for (const auto& p : pts) c += p;
    c *= Rational(1, static_cast<unsigned long>(pts.size()));
    auto half = [&](const QVec& p) {
        Rational dx = p[0] - c[0], dy = p[1] - c[1];
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const QVec& p, const QVec& q) {
        int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        Rational cross = (p[0] - c[0]) * (q[1] - c[1]) - (p[1] - c[1]) * (q[0] - c[0]);
        return cross > 0;
    });
    return pts;
}

inline SvgScene build_scene(const RootSystem& rs, const Polyhedron& dark0, const std::vector<QVec>& hw_list) {
    DrawingMap map(rs);
    SvgScene scene;
    Polyhedron dark = dark0.canonical();
    if (!dark.is_polytope()) throw UnsupportedCase("rendering needs a bounded polytope");

    std::vector<QVec> extent = dark.points();
    std::set<QVec> orbit_pts;
    for (const auto& l : hw_list) {
        auto o = rs.weyl_orbit(rs.star(l));
        orbit_pts.insert(o.begin(), o.end());
    }
    extent.insert(extent.end(), orbit_pts.begin(), orbit_pts.end());
    for (std::size_t i = 0; i < 2; ++i) extent.push_back(QVec::unit(2, i));

    // walls: mirrors of all positive roots, as segments through the origin
    // long enough to cover the content
    Rational reach = 1;
    for (const auto& p : extent) reach = std::max(reach, rs.inner(p, p));
    for (const auto& a : rs.positive_roots()) {
        // a weight perpendicular to alpha: rotate the root by the form
        QVec w(2);
        w[0] = rs.pairing(QVec::unit(2, 1), a);
        w[1] = -rs.pairing(QVec::unit(2, 0), a);
        Rational n = rs.inner(w, w);
        // scale so that |w|^2 >= 1.1^2 * reach, using a rational factor
        Rational f = 1;
        while (f * f * n < reach * Rational(121, 100)) f *= 2;
        scene.polygons.push_back(ScenePolygon{{map(-(f * w)), map(f * w)}, PolygonStyle::chamber});
    }
    if (!orbit_pts.empty()) {
        Polyhedron wh = hull_of(orbit_pts);
        std::vector<DrawPoint> loop;
        for (const auto& v : cyclic_order(wh.points())) loop.push_back(map(v));
        scene.polygons.push_back(ScenePolygon{std::move(loop), PolygonStyle::weight_hull});
        Polyhedron light = naive_projective_bound(rs, hw_list);
        loop.clear();
        for (const auto& v : cyclic_order(light.points())) loop.push_back(map(v));
        scene.polygons.push_back(ScenePolygon{std::move(loop), PolygonStyle::momentum_light});
    }
    if (!dark.is_empty()) {
        std::vector<DrawPoint> loop;
        for (const auto& v : cyclic_order(dark.points())) loop.push_back(map(v));
        scene.polygons.push_back(ScenePolygon{std::move(loop), PolygonStyle::momentum_dark});
    }
    if (!hw_list.empty()) {
        std::set<QVec> dominant;
        for (const auto& l : hw_list) {
            WeightSystem ws = irrep_weights(rs, l);
            for (const auto& [mu, m] : ws.dominant_multiplicities()) dominant.insert(rs.star(mu));
        }
        std::set<QVec> stars;
        for (const auto& l : hw_list) stars.insert(rs.star(l));
        for (const auto& mu : dominant) {
            std::string label;
            if (stars.count(mu)) label = "lambda*";
            else if (mu == QVec::unit(2, 0)) label = "pi1";
            else if (mu == QVec::unit(2, 1)) label = "pi2";
            scene.markers.push_back(SceneMarker{map(mu), Glyph::dot, label});
        }
        for (std::size_t i = 0; i < 2; ++i) {
            QVec pi = QVec::unit(2, i);
            if (!dominant.count(pi))
                scene.markers.push_back(SceneMarker{map(pi), Glyph::square, "pi" + std::to_string(i + 1)});
        }
    }
    return scene;
}

inline std::string to_svg(const SvgScene& scene) {
    // bounding box over every drawn point
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    auto grow = [&](const DrawPoint& p) {
        double x = approx(p.x), y = approx(p.y);
        if (first) {
            minx = maxx = x;
            miny = maxy = y;
            first = false;
        }
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    };
    for (const auto& poly : scene.polygons)
        for (const auto& p : poly.loop) grow(p);
    for (const auto& m : scene.markers) grow(m.at);
    double w = std::max(maxx - minx, 1.0), h = std::max(maxy - miny, 1.0);
    double mx = 0.05 * w, my = 0.05 * h;
    // the y axis is flipped, so the box spans [-maxy, -miny]
    auto fmt = [](double v) {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(6);
        os << v;
        return os.str();
    };
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(minx - mx) << ' '
       << fmt(-maxy - my) << ' ' << fmt(w + 2 * mx) << ' ' << fmt(h + 2 * my) << "\">\n";
    auto coords = [](const std::vector<DrawPoint>& loop) {
        std::string s;
        for (std::size_t i = 0; i < loop.size(); ++i) {
            if (i) s += ' ';
            s += decimal6(loop[i].x) + "," + decimal6(loop[i].y);
        }
        return s;
    };
    auto layer = [&](PolygonStyle style, const char* id, const char* attrs, bool closed) {
        os << "  <g id=\"" << id << "\" transform=\"scale(1,-1)\" " << attrs << ">\n";
        for (const auto& poly : scene.polygons) {
            if (poly.style != style) continue;
            if (poly.loop.size() == 1) {
                os << "    <circle cx=\"" << decimal6(poly.loop[0].x) << "\" cy=\"" << decimal6(poly.loop[0].y)
                   << "\" r=\"2\"/>\n";
            } else {
                os << "    <" << (closed && poly.loop.size() > 2 ? "polygon" : "polyline") << " points=\""
                   << coords(poly.loop) << "\"/>\n";
            }
        }
        os << "  </g>\n";
    };
    layer(PolygonStyle::chamber, "walls", "fill=\"none\" stroke=\"black\" stroke-width=\"0.5\" stroke-dasharray=\"5,5\"",
          false);
    layer(PolygonStyle::weight_hull, "weight-hull", "fill=\"none\" stroke=\"black\" stroke-width=\"1\"", true);
    layer(PolygonStyle::momentum_light, "momentum-light", "fill=\"#e0e0e0\" stroke=\"black\" stroke-width=\"0.5\"", true);
    layer(PolygonStyle::momentum_dark, "momentum-dark", "fill=\"#909090\" stroke=\"black\" stroke-width=\"1.5\"", true);
    os << "  <g id=\"markers\" fill=\"black\">\n";
    for (const auto& m : scene.markers) {
        std::string x = decimal6(m.at.x);
        std::string y = decimal6(Surd{-m.at.y.a, -m.at.y.b});
        if (m.glyph == Glyph::dot) os << "    <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\"/>\n";
        else {
            Surd left = m.at.x + Surd{-4, 0}, top = Surd{-m.at.y.a - 4, -m.at.y.b};
            os << "    <rect x=\"" << decimal6(left) << "\" y=\"" << decimal6(top) << "\" width=\"8\" height=\"8\"/>\n";
        }
        if (!m.label.empty())
            os << "    <text x=\"" << decimal6(m.at.x + Surd{8, 0}) << "\" y=\"" << y
               << "\" font-size=\"14\">" << m.label << "</text>\n";
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

inline std::string render(const RootSystem& rs, const Polyhedron& dark, const std::vector<QVec>& hw_list = {}) {
    return to_svg(build_scene(rs, dark, hw_list));
}

}  // namespace momentum
