#include "runpoly/polyops.hpp"

#include <algorithm>
#include <cstdint>

#include "runpoly/simplex.hpp"

namespace runpoly {

int rational_rank(std::vector<std::vector<Rat>> M) {
  const int rows = static_cast<int>(M.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(M[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      if (M[r][c] == 0) continue;
      Rat f = M[r][c] / M[rank][c];
      for (int j = c; j < cols; ++j)
        if (M[rank][j] != 0) M[r][j] -= f * M[rank][j];
    }
    ++rank;
  }
  return rank;
}

int affine_dim(const std::vector<std::vector<Rat>>& points) {
  if (points.empty())
    throw std::invalid_argument("affine_dim: empty point list");
  std::vector<std::vector<Rat>> diffs;
  diffs.reserve(points.size() - 1);
  for (size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != points[0].size())
      throw std::invalid_argument("affine_dim: dimension mismatch");
    std::vector<Rat> d(points[0].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return rational_rank(std::move(diffs));
}

namespace {

std::vector<Rat> dense_coeffs(const LinIneq& row, const HPolytope& poly) {
  std::vector<Rat> out(poly.variables.size());
  for (const auto& [v, c] : row.coeffs) out[poly.var_index(v)] += c;
  return out;
}

}  // namespace

bool is_extreme(const HPolytope& poly, const std::map<std::string, Rat>& point) {
  if (!poly.contains(point))
    throw std::invalid_argument("is_extreme: point is not in the polytope");
  std::vector<std::vector<Rat>> tight;
  for (const auto& row : poly.equalities) tight.push_back(dense_coeffs(row, poly));
  for (const auto& row : poly.inequalities)
    if (row.lhs_value(point) == row.rhs) tight.push_back(dense_coeffs(row, poly));
  return rational_rank(std::move(tight)) ==
         static_cast<int>(poly.variables.size());
}

bool membership_in_conv(const std::vector<std::vector<Rat>>& points,
                        const std::vector<Rat>& p) {
  if (points.empty())
    throw std::invalid_argument("membership_in_conv: empty point list");
  for (const auto& q : points)
    if (q.size() != p.size())
      throw std::invalid_argument("membership_in_conv: dimension mismatch");
  HPolytope lp;
  lp.name = "convex_membership";
  const int k = static_cast<int>(points.size());
  for (int i = 0; i < k; ++i) lp.add_variable("l" + std::to_string(i));
  for (int i = 0; i < k; ++i) {
    LinIneq nn;
    nn.name = "nn" + std::to_string(i);
    nn.coeffs["l" + std::to_string(i)] = -1;
    nn.rhs = 0;
    nn.sense = Sense::LE;
    lp.add_row(nn);
  }
  LinIneq one;
  one.name = "sum";
  one.sense = Sense::EQ;
  one.rhs = 1;
  for (int i = 0; i < k; ++i) one.coeffs["l" + std::to_string(i)] = 1;
  lp.add_row(one);
  for (size_t j = 0; j < p.size(); ++j) {
    LinIneq row;
    row.name = "c" + std::to_string(j);
    row.sense = Sense::EQ;
    row.rhs = p[j];
    for (int i = 0; i < k; ++i)
      if (points[i][j] != 0) row.coeffs["l" + std::to_string(i)] = points[i][j];
    lp.add_row(row);
  }
  return lp_feasible(lp);
}

// ---------------------------------------------------------------------------
// double description
// ---------------------------------------------------------------------------

namespace {

struct TightSet {
  std::vector<std::uint64_t> w;
  void resize(int bits) { w.assign((bits + 63) / 64, 0); }
  void set(int i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  static TightSet intersect(const TightSet& a, const TightSet& b) {
    TightSet out;
    out.w.resize(a.w.size());
    for (size_t i = 0; i < a.w.size(); ++i) out.w[i] = a.w[i] & b.w[i];
    return out;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
};

struct Ray {
  std::vector<Rat> v;
  TightSet tight;
};

// scale to coprime integers; rays are identified up to positive scaling
void normalize_ray(std::vector<Rat>& v) {
  Int l = 1;
  for (const Rat& x : v) l = boost::multiprecision::lcm(l, rat_den(x));
  Int g = 0;
  for (const Rat& x : v) g = boost::multiprecision::gcd(g, rat_num(x) * (l / rat_den(x)));
  if (g == 0) return;
  for (Rat& x : v) x = Rat(rat_num(x) * (l / rat_den(x)) / g);
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// Row reduction of [A | b]: returns false on inconsistency; otherwise fills a
// particular solution (free coordinates zero) and a kernel basis.
bool solve_affine(std::vector<std::vector<Rat>> aug, int vars,
                  std::vector<Rat>* x0, std::vector<std::vector<Rat>>* kernel) {
  const int rows = static_cast<int>(aug.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < vars && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (aug[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(aug[r], aug[piv]);
    Rat p = aug[r][c];
    for (int j = c; j <= vars; ++j) aug[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rat f = aug[i][c];
      for (int j = c; j <= vars; ++j)
        if (aug[r][j] != 0) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (aug[i][vars] != 0) return false;
  std::vector<char> is_pivot(vars, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  x0->assign(vars, Rat(0));
  for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
    (*x0)[pivot_col[i]] = aug[i][vars];
  kernel->clear();
  for (int f = 0; f < vars; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> k(vars);
    k[f] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      k[pivot_col[i]] = -aug[i][f];
    kernel->push_back(std::move(k));
  }
  return true;
}

}  // namespace

std::vector<std::pair<std::vector<Rat>, Rat>> affine_hull_relations(
    const std::vector<std::vector<Rat>>& points) {
  if (points.empty())
    throw std::invalid_argument("affine_hull_relations: empty point list");
  const int dim = static_cast<int>(points[0].size());
  // normals are the kernel of the difference matrix
  std::vector<std::vector<Rat>> aug;
  for (size_t i = 1; i < points.size(); ++i) {
    std::vector<Rat> row(dim + 1, Rat(0));
    for (int j = 0; j < dim; ++j) row[j] = points[i][j] - points[0][j];
    aug.push_back(std::move(row));
  }
  std::vector<Rat> unused;
  std::vector<std::vector<Rat>> kernel;
  if (aug.empty()) {
    kernel.resize(dim);
    for (int i = 0; i < dim; ++i) {
      kernel[i].assign(dim, Rat(0));
      kernel[i][i] = 1;
    }
  } else {
    solve_affine(std::move(aug), dim, &unused, &kernel);
  }
  std::vector<std::pair<std::vector<Rat>, Rat>> out;
  for (auto& a : kernel) {
    Rat c = 0;
    for (int j = 0; j < dim; ++j)
      if (a[j] != 0) c += a[j] * points[0][j];
    out.emplace_back(std::move(a), std::move(c));
  }
  return out;
}

std::vector<std::map<std::string, Rat>> enumerate_vertices(
    const HPolytope& poly, const VertexEnumOptions& opt) {
  const int m = static_cast<int>(poly.variables.size());

  std::vector<Rat> x0(m, Rat(0));
  std::vector<std::vector<Rat>> kernel;
  if (!poly.equalities.empty()) {
    std::vector<std::vector<Rat>> aug;
    for (const auto& row : poly.equalities) {
      std::vector<Rat> a = dense_coeffs(row, poly);
      a.push_back(row.rhs);
      aug.push_back(std::move(a));
    }
    if (!solve_affine(std::move(aug), m, &x0, &kernel)) return {};
  } else {
    kernel.resize(m);
    for (int i = 0; i < m; ++i) {
      kernel[i].assign(m, Rat(0));
      kernel[i][i] = 1;
    }
  }
  const int d = static_cast<int>(kernel.size());
  if (d > opt.max_dim)
    throw resource_limit_error(
        "enumerate_vertices: reduced dimension " + std::to_string(d) +
        " exceeds limit " + std::to_string(opt.max_dim));

  auto lift = [&](const std::vector<Rat>& t) {
    std::vector<Rat> x = x0;
    for (int i = 0; i < d; ++i)
      if (t[i] != 0)
        for (int j = 0; j < m; ++j)
          if (kernel[i][j] != 0) x[j] += t[i] * kernel[i][j];
    return x;
  };

  if (d == 0) {
    auto pt = poly.as_point(x0);
    for (const auto& row : poly.inequalities)
      if (!row.satisfied(pt)) return {};
    return {pt};
  }

  if (!lp_feasible(poly)) return {};

  // homogenized constraint rows g with meaning g . (t, s) <= 0; s >= 0 first
  const int D = d + 1;
  std::vector<std::vector<Rat>> cons;
  {
    std::vector<Rat> srow(D, Rat(0));
    srow[d] = -1;
    cons.push_back(std::move(srow));
  }
  for (const auto& row : poly.inequalities) {
    std::vector<Rat> a = dense_coeffs(row, poly);
    std::vector<Rat> g(D, Rat(0));
    bool live = false;
    for (int i = 0; i < d; ++i) {
      g[i] = dot(a, kernel[i]);
      if (g[i] != 0) live = true;
    }
    Rat shift = row.rhs - dot(a, x0);
    g[d] = -shift;
    if (live || g[d] != 0) cons.push_back(std::move(g));
  }
  const int nc = static_cast<int>(cons.size());

  // cone = span(lineality) + cone(rays); start from the full space
  std::vector<std::vector<Rat>> lin;
  for (int i = 0; i < D; ++i) {
    std::vector<Rat> e(D, Rat(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (int ci = 0; ci < nc; ++ci) {
    const std::vector<Rat>& g = cons[ci];
    int lhit = -1;
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(g, lin[i]) != 0) {
        lhit = static_cast<int>(i);
        break;
      }
    if (lhit >= 0) {
      // consume one lineality vector: the rest is projected into g = 0 and
      // the consumed vector becomes a ray on the feasible side
      std::vector<Rat> l = lin[lhit];
      lin.erase(lin.begin() + lhit);
      Rat gl = dot(g, l);
      if (gl > 0) {
        for (Rat& x : l) x = -x;
        gl = -gl;
      }
      for (auto& other : lin) {
        Rat f = dot(g, other);
        if (f == 0) continue;
        for (int j = 0; j < D; ++j) other[j] -= (f / gl) * l[j];
      }
      for (auto& ray : rays) {
        Rat f = dot(g, ray.v);
        if (f == 0) {
          ray.tight.set(ci);
          continue;
        }
        for (int j = 0; j < D; ++j) ray.v[j] -= (f / gl) * l[j];
        normalize_ray(ray.v);
        ray.tight.set(ci);
      }
      Ray nr;
      nr.v = std::move(l);
      normalize_ray(nr.v);
      nr.tight.resize(nc);
      for (int k = 0; k < ci; ++k) nr.tight.set(k);
      rays.push_back(std::move(nr));
      continue;
    }
    // g vanishes on the lineality space: split the pointed part
    std::vector<int> plus, zero, minus;
    std::vector<Rat> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(g, rays[i].v);
      if (val[i] > 0)
        plus.push_back(static_cast<int>(i));
      else if (val[i] == 0)
        zero.push_back(static_cast<int>(i));
      else
        minus.push_back(static_cast<int>(i));
    }
    if (plus.empty()) {
      for (int i : zero) rays[i].tight.set(ci);
      continue;
    }
    const int pointed_dim = D - static_cast<int>(lin.size());
    std::vector<Ray> next;
    for (int ip : plus) {
      for (int im : minus) {
        TightSet common = TightSet::intersect(rays[ip].tight, rays[im].tight);
        if (common.count() < pointed_dim - 2) continue;
        std::vector<std::vector<Rat>> sel;
        for (int k = 0; k < ci; ++k)
          if (common.test(k)) sel.push_back(cons[k]);
        if (rational_rank(std::move(sel)) != pointed_dim - 2) continue;
        Ray w;
        w.v.assign(D, Rat(0));
        const Rat& vp = val[ip];
        const Rat& vm = val[im];
        for (int j = 0; j < D; ++j)
          w.v[j] = vp * rays[im].v[j] - vm * rays[ip].v[j];
        normalize_ray(w.v);
        w.tight = common;
        w.tight.set(ci);
        next.push_back(std::move(w));
      }
    }
    for (int i : minus) next.push_back(std::move(rays[i]));
    for (int i : zero) {
      rays[i].tight.set(ci);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  if (!lin.empty())
    throw unbounded_error("enumerate_vertices: feasible set contains a line");

  std::vector<std::vector<Rat>> verts;
  for (const Ray& r : rays) {
    if (r.v[d] == 0) {
      bool nonzero = false;
      for (const Rat& x : r.v)
        if (x != 0) nonzero = true;
      if (nonzero)
        throw unbounded_error("enumerate_vertices: recession ray found");
      continue;
    }
    std::vector<Rat> t(d);
    for (int i = 0; i < d; ++i) t[i] = r.v[i] / r.v[d];
    verts.push_back(lift(t));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<std::map<std::string, Rat>> out;
  out.reserve(verts.size());
  for (auto& v : verts) out.push_back(poly.as_point(v));
  return out;
}

}  // namespace runpoly
