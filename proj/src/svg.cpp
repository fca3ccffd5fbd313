#include "lnet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <sstream>
#include <vector>

namespace lnet {

namespace {

struct Disk {
  Vec2 center;
  double radius;
  const char* cls;
};
struct Segment {
  Vec2 a, b;
};
struct Polygon {
  std::vector<Vec2> pts;
};

struct Layer {
  std::string id;
  std::string style;
  std::vector<Disk> disks;
  std::vector<Segment> segments;
  std::vector<Polygon> polygons;
};

bool is_circle(const Disk& d) { return std::string(d.cls) == "circle"; }

bool finite(const Vec2& p) { return std::isfinite(p[0]) && std::isfinite(p[1]); }

class Drawing {
 public:
  explicit Drawing(const SvgOptions& o) : opt_(o) {}

  Layer& layer(const std::string& id, const std::string& style) {
    layers_.push_back({id, style, {}, {}, {}});
    return layers_.back();
  }

  std::string render() {
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_x;
    bool any = false;
    auto grow = [&](const Vec2& p, double r) {
      lo_x = std::min(lo_x, p[0] - r);
      hi_x = std::max(hi_x, p[0] + r);
      lo_y = std::min(lo_y, p[1] - r);
      hi_y = std::max(hi_y, p[1] + r);
      any = true;
    };
    for (const Layer& l : layers_) {
      for (const Disk& d : l.disks) grow(d.center, is_circle(d) ? std::abs(d.radius) : 0.0);
      for (const Segment& s : l.segments) grow(s.a, 0), grow(s.b, 0);
      for (const Polygon& p : l.polygons)
        for (const Vec2& x : p.pts) grow(x, 0);
    }
    if (!any) throw Error(ErrorKind::EmptyNet, "nothing finite to draw");
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    const double inner = opt_.width - 2 * opt_.margin;
    scale_ = inner / span;
    lo_x_ = lo_x;
    hi_y_ = hi_y;
    const double height = (hi_y - lo_y) * scale_ + 2 * opt_.margin;
    const double dot = std::max(1.5, 0.004 * opt_.width);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(opt_.width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(opt_.width) << ' ' << num(height) << "\">\n";
    for (const Layer& l : layers_) {
      if (l.disks.empty() && l.segments.empty() && l.polygons.empty()) continue;
      out << " <g id=\"" << l.id << "\" " << l.style << ">\n";
      for (const Polygon& p : l.polygons) {
        out << "  <polygon points=\"";
        for (std::size_t k = 0; k < p.pts.size(); ++k) out << (k ? " " : "") << x(p.pts[k]) << ',' << y(p.pts[k]);
        out << "\"/>\n";
      }
      for (const Segment& s : l.segments) {
        out << "  <line x1=\"" << x(s.a) << "\" y1=\"" << y(s.a) << "\" x2=\"" << x(s.b) << "\" y2=\"" << y(s.b)
            << "\"/>\n";
      }
      for (const Disk& d : l.disks) {
        const double r = is_circle(d) ? std::abs(d.radius) * scale_ : dot;
        out << "  <circle class=\"" << d.cls << "\" cx=\"" << x(d.center) << "\" cy=\"" << y(d.center) << "\" r=\""
            << num(r) << "\"/>\n";
      }
      out << " </g>\n";
    }
    out << "</svg>\n";
    return out.str();
  }

 private:
  std::string num(double v) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", opt_.precision, v);
    std::string s = buf;
    if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) s = "0";
    return s;
  }
  std::string x(const Vec2& p) const { return num(opt_.margin + (p[0] - lo_x_) * scale_); }
  std::string y(const Vec2& p) const { return num(opt_.margin + (hi_y_ - p[1]) * scale_); }

  SvgOptions opt_;
  std::deque<Layer> layers_;  // references handed out by layer() stay valid
  double scale_ = 1.0;
  double lo_x_ = 0.0;
  double hi_y_ = 0.0;
};

const char* kCircleStyle = "fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1\"";
const char* kLineStyle = "stroke=\"#888888\" stroke-width=\"0.75\"";
const char* kCenterStyle = "fill=\"#1f4e79\"";
const char* kPointStyle = "fill=\"#c0392b\"";

}  // namespace

std::string render_svg(const CirclePattern& p, const SvgOptions& options) {
  Drawing d(options);
  Layer& circles = d.layer("circles", kCircleStyle);
  for (const Circle2& c : p.circles.data())
    if (finite(c.center) && std::isfinite(c.radius)) circles.disks.push_back({c.center, c.radius, "circle"});
  if (options.centers) {
    Layer& centers = d.layer("centers", kCenterStyle);
    for (const Circle2& c : p.circles.data())
      if (finite(c.center)) centers.disks.push_back({c.center, 0.0, "center"});
  }
  if (options.points) {
    Layer& points = d.layer("points", kPointStyle);
    for (const Vec2& x : p.points.data())
      if (finite(x)) points.disks.push_back({x, 0.0, "point"});
  }
  return d.render();
}

std::string render_svg(const CyclePattern& p, const SvgOptions& options) {
  Drawing d(options);
  Layer& circles = d.layer("circles", kCircleStyle);
  for (const Cycle2& c : p.cycles.data())
    if (finite(c.center) && std::isfinite(c.radius)) circles.disks.push_back({c.center, c.radius, "circle"});
  if (options.lines) {
    Layer& lines = d.layer("lines", kLineStyle);
    const QuadGrid& g = p.lines.grid();
    for (FaceId f : g.faces()) {
      const OrientedLine2& l = p.lines[f];
      const Vec2 u = l.direction();
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (VertexId v : g.face_vertices(f)) {
        const Cycle2& c = p.cycles[v];
        const Vec2 touch = c.center - l.signed_distance(c.center) * l.normal;
        const double t = u.dot(touch - l.foot());
        lo = std::min(lo, t);
        hi = std::max(hi, t);
      }
      const double pad = 0.15 * (hi - lo) + 1e-9;
      const Vec2 a = l.foot() + (lo - pad) * u;
      const Vec2 b = l.foot() + (hi + pad) * u;
      if (finite(a) && finite(b)) lines.segments.push_back({a, b});
    }
  }
  if (options.centers) {
    Layer& centers = d.layer("centers", kCenterStyle);
    for (const Cycle2& c : p.cycles.data())
      if (finite(c.center)) centers.disks.push_back({c.center, 0.0, "center"});
  }
  return d.render();
}

namespace {

void draw_incircular(Drawing& d, const IncircularNet& net, const SvgOptions& options, const std::string& prefix,
                     const char* quad_style) {
  const QuadGrid& g = net.grid();
  Layer& quads = d.layer(prefix + "quads", quad_style);
  Layer& circles = d.layer(prefix + "circles", kCircleStyle);
  for (VertexId w : g.vertices()) {
    if (color_of(w) != Color::white || !g.is_interior(w)) continue;
    Polygon poly;
    for (VertexId b : g.star(w)) poly.pts.push_back(net.centers[b]);
    quads.polygons.push_back(poly);
    const double r = net.incircle_radius[w];
    if (std::isfinite(r)) circles.disks.push_back({net.centers[w], r, "circle"});
  }
  if (options.centers) {
    Layer& centers = d.layer(prefix + "centers", kCenterStyle);
    for (const Vec2& c : net.centers.data())
      if (finite(c)) centers.disks.push_back({c, 0.0, "center"});
  }
}

}  // namespace

std::string render_svg(const IncircularNet& net, const SvgOptions& options, const IncircularNet* companion) {
  Drawing d(options);
  draw_incircular(d, net, options, "", "fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"");
  if (companion) {
    draw_incircular(d, *companion, options, "companion-",
                    "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
  }
  return d.render();
}

}  // namespace lnet
