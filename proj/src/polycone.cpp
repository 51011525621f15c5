#include "gitfan/polycone.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "gitfan/error.hpp"

namespace gitfan::polycone {

using ratlin::dot;
using ratlin::Integer;
using ratlin::primitive;

namespace {

IntVector combine(const Integer& a, const IntVector& x, const Integer& b,
                  const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] - b * y[i];
  return primitive(out);
}

std::vector<IntVector> with_negations(std::vector<IntVector> base,
                                      const std::vector<IntVector>& both_ways) {
  for (const auto& v : both_ways) {
    base.push_back(v);
    base.push_back(ratlin::negate(v));
  }
  return base;
}

void check_lengths(std::size_t dim, const std::vector<IntVector>& vs) {
  for (const auto& v : vs) {
    if (v.size() != dim) {
      throw InputError("dimension_mismatch", "vector length differs from ambient dimension");
    }
  }
}

std::vector<IntVector> canonical_modulo(const std::vector<IntVector>& vs,
                                        const std::vector<IntVector>& subspace) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    auto p = ratlin::project_out(v, subspace);
    if (!ratlin::is_zero(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), ratlin::lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Generators double_description(std::size_t dim,
                              const std::vector<IntVector>& inequalities) {
  check_lengths(dim, inequalities);
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, 0);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<IntVector> rays;
  std::vector<IntVector> processed;

  for (const auto& a : inequalities) {
    if (ratlin::is_zero(a)) continue;

    auto lit = std::find_if(lineality.begin(), lineality.end(),
                            [&](const IntVector& l) { return dot(a, l) != 0; });
    if (lit != lineality.end()) {
      IntVector l0 = *lit;
      lineality.erase(lit);
      Integer s0 = dot(a, l0);
      if (s0 < 0) {
        l0 = ratlin::negate(std::move(l0));
        s0 = -s0;
      }
      for (auto& l : lineality) {
        const Integer sl = dot(a, l);
        if (sl != 0) l = combine(s0, l, sl, l0);
      }
      for (auto& r : rays) {
        const Integer sr = dot(a, r);
        if (sr != 0) r = combine(s0, r, sr, l0);
      }
      rays.push_back(std::move(l0));
      processed.push_back(a);
      continue;
    }

    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i]);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
      else zer.push_back(i);
    }
    if (neg.empty()) {
      processed.push_back(a);
      continue;
    }

    // Zero sets against the constraints seen so far, for the combinatorial
    // adjacency test.
    std::vector<std::vector<char>> zero(rays.size(),
                                        std::vector<char>(processed.size()));
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t k = 0; k < processed.size(); ++k)
        zero[i][k] = dot(processed[k], rays[i]) == 0;

    std::vector<IntVector> next;
    for (auto i : pos) next.push_back(rays[i]);
    for (auto i : zer) next.push_back(rays[i]);
    std::vector<char> common(processed.size());
    for (auto p : pos) {
      for (auto n : neg) {
        for (std::size_t k = 0; k < processed.size(); ++k)
          common[k] = zero[p][k] && zero[n][k];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          bool covers = true;
          for (std::size_t k = 0; k < processed.size(); ++k)
            if (common[k] && !zero[r][k]) {
              covers = false;
              break;
            }
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        // val[p] > 0 > val[n]; the combination is tight on `a`.
        next.push_back(combine(val[p], rays[n], val[n], rays[p]));
      }
    }
    rays = std::move(next);
    processed.push_back(a);
  }
  return {std::move(rays), std::move(lineality)};
}

Cone Cone::assemble(std::size_t dim, std::vector<IntVector> rays,
                    std::vector<IntVector> lineality,
                    std::vector<IntVector> facets,
                    std::vector<IntVector> equations) {
  Cone c;
  c.dim_ = dim;
  c.lineality_ = ratlin::span_basis(lineality, dim);
  c.equations_ = ratlin::span_basis(equations, dim);
  c.rays_ = canonical_modulo(rays, c.lineality_);
  c.facets_ = canonical_modulo(facets, c.equations_);
  return c;
}

Cone Cone::from_rays(std::size_t dim, const std::vector<IntVector>& rays,
                     const std::vector<IntVector>& lineality) {
  check_lengths(dim, rays);
  check_lengths(dim, lineality);
  for (const auto& r : rays) {
    if (ratlin::is_zero(r)) throw InputError("zero_ray", "zero vector among cone generators");
  }
  const auto h = double_description(dim, with_negations(rays, lineality));
  const auto g = double_description(dim, with_negations(h.rays, h.lineality));
  return assemble(dim, g.rays, g.lineality, h.rays, h.lineality);
}

Cone Cone::from_inequalities(std::size_t dim,
                             const std::vector<IntVector>& normals,
                             const std::vector<IntVector>& equations) {
  check_lengths(dim, normals);
  check_lengths(dim, equations);
  const auto g = double_description(dim, with_negations(normals, equations));
  const auto h = double_description(dim, with_negations(g.rays, g.lineality));
  return assemble(dim, g.rays, g.lineality, h.rays, h.lineality);
}

Cone dual(const Cone& c) {
  Cone d;
  d.dim_ = c.dim_;
  d.rays_ = c.facets_;
  d.lineality_ = c.equations_;
  d.facets_ = c.rays_;
  d.equations_ = c.lineality_;
  return d;
}

bool is_simplicial(const Cone& c) {
  auto gens = c.rays();
  gens.insert(gens.end(), c.lineality().begin(), c.lineality().end());
  return ratlin::rank(gens, c.ambient_dim()) == gens.size();
}

bool contains(const Cone& c, const RatVector& v, bool strict) {
  if (v.size() != c.ambient_dim()) {
    throw InputError("dimension_mismatch", "point length differs from ambient dimension");
  }
  for (const auto& e : c.equations())
    if (dot(e, v) != 0) return false;
  for (const auto& f : c.facets()) {
    const auto s = dot(f, v);
    if (s < 0 || (strict && s == 0)) return false;
  }
  return true;
}

bool contains(const Cone& c, const IntVector& v, bool strict) {
  std::vector<ratlin::Rational> q(v.begin(), v.end());
  return contains(c, RatVector(std::move(q)), strict);
}

bool contains(const Cone& outer, const Cone& inner) {
  for (const auto& r : inner.rays())
    if (!contains(outer, r)) return false;
  for (const auto& l : inner.lineality())
    if (!contains(outer, l) || !contains(outer, ratlin::negate(l))) return false;
  return true;
}

Cone intersect(const Cone& a, const Cone& b) {
  auto normals = a.facets();
  normals.insert(normals.end(), b.facets().begin(), b.facets().end());
  auto eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_dim(), normals, eqs);
}

bool is_face(const Cone& face, const Cone& c) {
  auto eqs = c.equations();
  for (const auto& n : c.facets()) {
    bool tight = true;
    for (const auto& r : face.rays())
      if (dot(n, r) != 0) {
        tight = false;
        break;
      }
    for (const auto& l : face.lineality())
      if (tight && dot(n, l) != 0) tight = false;
    if (tight) eqs.push_back(n);
  }
  return face == Cone::from_inequalities(c.ambient_dim(), c.facets(), eqs);
}

bool common_face_check(const Cone& c1, const Cone& c2) {
  if (c1.ambient_dim() != c2.ambient_dim()) {
    throw InputError("dimension_mismatch", "cones in different ambient spaces");
  }
  const Cone meet = intersect(c1, c2);
  return is_face(meet, c1) && is_face(meet, c2);
}

FanReport fan_check(const Fan& f) {
  FanReport rep;
  const auto& cones = f.maximal_cones;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!is_simplicial(cones[i].second)) rep.all_simplicial = false;
    for (std::size_t j = i + 1; j < cones.size() && rep.pairwise_faces; ++j)
      if (!common_face_check(cones[i].second, cones[j].second)) rep.pairwise_faces = false;
  }

  const bool pure = std::all_of(cones.begin(), cones.end(), [](const auto& lc) {
    return lc.second.is_full_dimensional() && lc.second.is_pointed();
  });
  if (!pure) {
    rep.completeness_criterion =
        "not applicable: maximal cones are not all full-dimensional and pointed";
    return rep;
  }
  rep.completeness_criterion =
      "ridge matching: every facet shared by exactly two maximal cones, "
      "facet-adjacency graph connected";

  std::map<std::vector<IntVector>, std::vector<std::size_t>> ridges;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const Cone& c = cones[i].second;
    for (const auto& n : c.facets()) {
      std::vector<IntVector> key;
      for (const auto& r : c.rays())
        if (dot(n, r) == 0) key.push_back(r);
      ridges[key].push_back(i);
    }
  }
  rep.ridge_count = ridges.size();
  std::vector<std::vector<std::size_t>> adj(cones.size());
  for (const auto& [key, owners] : ridges) {
    if (owners.size() != 2) {
      ++rep.unmatched_ridges;
      continue;
    }
    adj[owners[0]].push_back(owners[1]);
    adj[owners[1]].push_back(owners[0]);
  }
  bool connected = !cones.empty();
  if (connected) {
    std::vector<char> seen(cones.size(), 0);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
      const auto u = todo.front();
      todo.pop();
      for (auto v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          todo.push(v);
        }
    }
    connected = reached == cones.size();
  }
  rep.complete = connected && rep.unmatched_ridges == 0;
  return rep;
}

}  // namespace gitfan::polycone
