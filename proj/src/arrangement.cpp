#include "gitfan/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gitfan::arrangement {

namespace {

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx,
               const Rational& by) {
  return ax * by - ay * bx;
}

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Rational& dx, const Rational& dy) {
  return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
}

}  // namespace

Rational orient(const Point2& a, const Point2& b, const Point2& c) {
  return cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& c) {
  if (orient(a, b, c) != 0) return false;
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

Dcel Dcel::build(const std::vector<std::pair<Point2, Point2>>& segments) {
  std::vector<std::pair<Point2, Point2>> segs;
  for (const auto& s : segments)
    if (!(s.first == s.second)) segs.push_back(s);

  std::vector<std::vector<Point2>> on(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    on[i].push_back(segs[i].first);
    on[i].push_back(segs[i].second);
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& [a, b] = segs[i];
    const Rational dx1 = b.x - a.x, dy1 = b.y - a.y;
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& [c, d] = segs[j];
      const Rational dx2 = d.x - c.x, dy2 = d.y - c.y;
      const Rational denom = cross(dx1, dy1, dx2, dy2);
      const Rational ex = c.x - a.x, ey = c.y - a.y;
      if (denom != 0) {
        const Rational t = cross(ex, ey, dx2, dy2) / denom;
        const Rational u = cross(ex, ey, dx1, dy1) / denom;
        if (t >= 0 && t <= 1 && u >= 0 && u <= 1) {
          Point2 p{a.x + t * dx1, a.y + t * dy1};
          on[i].push_back(p);
          on[j].push_back(p);
        }
      } else if (cross(ex, ey, dx1, dy1) == 0) {
        for (const auto& p : {c, d})
          if (on_segment(a, b, p)) on[i].push_back(p);
        for (const auto& p : {a, b})
          if (on_segment(c, d, p)) on[j].push_back(p);
      }
    }
  }

  Dcel g;
  std::map<Point2, std::size_t> index;
  auto vertex_id = [&](const Point2& p) {
    auto [it, inserted] = index.emplace(p, g.vertices_.size());
    if (inserted) g.vertices_.push_back(p);
    return it->second;
  };

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& [a, b] = segs[i];
    const Rational dx = b.x - a.x, dy = b.y - a.y;
    auto& pts = on[i];
    std::sort(pts.begin(), pts.end(), [&](const Point2& p, const Point2& q) {
      return (p.x - a.x) * dx + (p.y - a.y) * dy < (q.x - a.x) * dx + (q.y - a.y) * dy;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const auto u = vertex_id(pts[k]);
      const auto v = vertex_id(pts[k + 1]);
      edges.emplace(std::min(u, v), std::max(u, v));
    }
  }

  std::vector<std::vector<std::size_t>> outgoing(g.vertices_.size());
  for (const auto& [u, v] : edges) {
    const std::size_t e = g.half_edges_.size();
    g.half_edges_.push_back({u, e + 1, 0, 0});
    g.half_edges_.push_back({v, e, 0, 0});
    outgoing[u].push_back(e);
    outgoing[v].push_back(e + 1);
  }

  auto direction = [&](std::size_t e) {
    const auto& o = g.vertices_[g.half_edges_[e].origin];
    const auto& d = g.vertices_[g.half_edges_[g.half_edges_[e].twin].origin];
    return std::pair<Rational, Rational>{d.x - o.x, d.y - o.y};
  };
  for (auto& out : outgoing) {
    std::sort(out.begin(), out.end(), [&](std::size_t e1, std::size_t e2) {
      const auto [x1, y1] = direction(e1);
      const auto [x2, y2] = direction(e2);
      const int h1 = half_plane(x1, y1), h2 = half_plane(x2, y2);
      if (h1 != h2) return h1 < h2;
      return cross(x1, y1, x2, y2) > 0;
    });
  }
  // Turning clockwise at each vertex keeps the face on the left.
  for (std::size_t e = 0; e < g.half_edges_.size(); ++e) {
    const auto twin = g.half_edges_[e].twin;
    const auto& out = outgoing[g.half_edges_[twin].origin];
    const auto pos = static_cast<std::size_t>(
        std::find(out.begin(), out.end(), twin) - out.begin());
    g.half_edges_[e].next = out[(pos + out.size() - 1) % out.size()];
  }

  std::vector<char> seen(g.half_edges_.size(), 0);
  for (std::size_t e = 0; e < g.half_edges_.size(); ++e) {
    if (seen[e]) continue;
    Face f{e, {}, 0};
    std::size_t cur = e;
    do {
      seen[cur] = 1;
      g.half_edges_[cur].face = g.faces_.size();
      f.cycle.push_back(g.half_edges_[cur].origin);
      cur = g.half_edges_[cur].next;
    } while (cur != e);
    for (std::size_t k = 0; k < f.cycle.size(); ++k) {
      const auto& p = g.vertices_[f.cycle[k]];
      const auto& q = g.vertices_[f.cycle[(k + 1) % f.cycle.size()]];
      f.twice_area += p.x * q.y - p.y * q.x;
    }
    g.faces_.push_back(std::move(f));
  }
  return g;
}

std::vector<std::vector<Point2>> Dcel::bounded_faces() const {
  std::vector<std::vector<Point2>> out;
  for (const auto& f : faces_) {
    if (f.twice_area <= 0) continue;
    std::vector<Point2> poly;
    for (auto v : f.cycle) poly.push_back(vertices_[v]);
    out.push_back(std::move(poly));
  }
  return out;
}

}  // namespace gitfan::arrangement
