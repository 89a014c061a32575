#include "ksbound/polytope.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <optional>

#include "ksbound/error.hpp"

namespace ksb {

HRepPolytope::HRepPolytope(std::vector<Label> variables, std::vector<LinearConstraint> equalities,
                           std::vector<LinearConstraint> inequalities)
    : variables_(std::move(variables)),
      equalities_(std::move(equalities)),
      inequalities_(std::move(inequalities)) {
  size_t n = variables_.size();
  for (const auto& c : equalities_)
    if (c.coeffs.size() != n) fail(Errc::dimension_mismatch, "equality coefficient length");
  for (const auto& c : inequalities_)
    if (c.coeffs.size() != n) fail(Errc::dimension_mismatch, "inequality coefficient length");
}

HRepPolytope build_polytope(const ExclusivityGraph& g, const std::vector<Context>& contexts,
                            int d) {
  if (contexts.empty())
    fail(Errc::empty_context_list, "no contexts: every variable would be unbounded");
  size_t n = static_cast<size_t>(g.size());
  std::vector<LinearConstraint> eqs, ineqs;
  std::vector<bool> covered(n, false);
  for (const Context& c : contexts) {
    require_clique(g, c);
    if (static_cast<int>(c.members.size()) > d)
      fail(Errc::context_too_large, "context of size " + std::to_string(c.members.size()) +
                                        " exceeds dimension " + std::to_string(d));
    LinearConstraint row{RatVec(n, Rational(0)), Rational(1)};
    for (int m : c.members) {
      row.coeffs[static_cast<size_t>(m)] += 1;
      covered[static_cast<size_t>(m)] = true;
    }
    if (static_cast<int>(c.members.size()) == d)
      eqs.push_back(std::move(row));
    else
      ineqs.push_back(std::move(row));
  }
  for (size_t v = 0; v < n; ++v)
    if (!covered[v])
      fail(Errc::unbounded_polytope, "variable \"" + g.label(static_cast<int>(v)) +
                                         "\" occurs in no context");
  return HRepPolytope(g.labels(), std::move(eqs), std::move(ineqs));
}

HRepPolytope slice(const HRepPolytope& p, const std::vector<SliceConstraint>& constraints) {
  std::vector<LinearConstraint> ineqs = p.inequalities();
  size_t n = static_cast<size_t>(p.dimension());
  for (const SliceConstraint& c : constraints) {
    if (c.coeffs.size() != n) fail(Errc::dimension_mismatch, "slice coefficient length");
    LinearConstraint row{c.coeffs, c.rhs};
    if (c.relation == Relation::greater_equal) {
      for (Rational& x : row.coeffs) x = -x;
      row.rhs = -row.rhs;
    }
    ineqs.push_back(std::move(row));
  }
  return HRepPolytope(p.variables(), p.equalities(), std::move(ineqs));
}

namespace {

// Equality block eliminated: pivot variables are affine in the free ones.
struct ReducedSystem {
  bool inconsistent = false;
  std::vector<int> free_vars;   // original indices, ascending
  std::vector<int> pivot_vars;  // original indices, elimination order
  RatMat pivot_coef;            // w_pivot[i] = pivot_rhs[i] - pivot_coef[i] . y
  RatVec pivot_rhs;
  std::vector<LinearConstraint> rows;  // over y: coeffs . y <= rhs
};

ReducedSystem reduce(const HRepPolytope& p) {
  size_t n = static_cast<size_t>(p.dimension());
  ReducedSystem rs;

  RatMat a;
  RatVec b;
  for (const auto& e : p.equalities()) {
    a.push_back(e.coeffs);
    b.push_back(e.rhs);
  }
  size_t rows = a.size(), r = 0;
  std::vector<size_t> pivot_col;
  for (size_t c = 0; c < n && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    std::swap(b[r], b[piv]);
    Rational inv = a[r][c];
    for (size_t j = c; j < n; ++j) a[r][j] /= inv;
    b[r] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) {
      rs.inconsistent = true;
      return rs;
    }

  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t v = 0; v < n; ++v)
    if (!is_pivot[v]) rs.free_vars.push_back(static_cast<int>(v));
  size_t k = rs.free_vars.size();

  for (size_t i = 0; i < pivot_col.size(); ++i) {
    rs.pivot_vars.push_back(static_cast<int>(pivot_col[i]));
    RatVec coef(k, Rational(0));
    for (size_t f = 0; f < k; ++f) coef[f] = a[i][static_cast<size_t>(rs.free_vars[f])];
    rs.pivot_coef.push_back(std::move(coef));
    rs.pivot_rhs.push_back(b[i]);
  }

  // Substitute into a full-space row coeffs . w <= rhs.
  auto transform = [&](const RatVec& coeffs, const Rational& rhs) -> LinearConstraint {
    RatVec c(k, Rational(0));
    Rational rr = rhs;
    for (size_t f = 0; f < k; ++f) c[f] = coeffs[static_cast<size_t>(rs.free_vars[f])];
    for (size_t i = 0; i < rs.pivot_vars.size(); ++i) {
      const Rational& cp = coeffs[static_cast<size_t>(rs.pivot_vars[i])];
      if (cp == 0) continue;
      rr -= cp * rs.pivot_rhs[i];
      for (size_t f = 0; f < k; ++f) c[f] -= cp * rs.pivot_coef[i][f];
    }
    return LinearConstraint{std::move(c), std::move(rr)};
  };

  auto push_row = [&](LinearConstraint row) {
    bool all_zero = std::all_of(row.coeffs.begin(), row.coeffs.end(),
                                [](const Rational& x) { return x == 0; });
    if (all_zero) {
      if (row.rhs < 0) rs.inconsistent = true;  // 0 <= negative
      return;
    }
    rs.rows.push_back(std::move(row));
  };

  for (const auto& iq : p.inequalities()) push_row(transform(iq.coeffs, iq.rhs));
  // Nonnegativity of every original variable, in label order.
  for (size_t v = 0; v < n; ++v) {
    RatVec c(n, Rational(0));
    c[v] = -1;
    push_row(transform(c, Rational(0)));
  }
  return rs;
}

std::optional<RatMat> invert(RatMat m) {
  size_t d = m.size();
  RatMat inv(d, RatVec(d, Rational(0)));
  for (size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < d; ++c) {
    size_t piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    Rational f = m[c][c];
    for (size_t j = 0; j < d; ++j) {
      m[c][j] /= f;
      inv[c][j] /= f;
    }
    for (size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational g = m[i][c];
      for (size_t j = 0; j < d; ++j) {
        m[i][j] -= g * m[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

struct Ray {
  RatVec z;                       // homogenized coordinates (t, y)
  boost::dynamic_bitset<> active; // rows with exact zero slack
};

void normalize_ray(RatVec& z) {
  for (const Rational& x : z) {
    if (x != 0) {
      Rational scale = abs(x);
      for (Rational& y : z) y /= scale;
      return;
    }
  }
}

// Extreme rays of {z : row . z >= 0 for all rows}; the cone is pointed
// (rows always contain a nonsingular block). Incremental double
// description with the combinatorial adjacency test.
std::vector<Ray> dd_extreme_rays(const std::vector<RatVec>& rows) {
  size_t m = rows.size();
  size_t dim = rows[0].size();

  auto compute_active = [&](const RatVec& z) {
    boost::dynamic_bitset<> act(m);
    for (size_t i = 0; i < m; ++i)
      if (dot(rows[i], z) == 0) act.set(i);
    return act;
  };

  // Initial basis: first dim linearly independent rows (canonical order).
  std::vector<size_t> basis;
  {
    RatMat probe;
    for (size_t i = 0; i < m && basis.size() < dim; ++i) {
      probe.push_back(rows[i]);
      if (rank(probe) == static_cast<int>(probe.size()))
        basis.push_back(i);
      else
        probe.pop_back();
    }
    if (basis.size() < dim) fail(Errc::unbounded_polytope, "homogenized cone is not pointed");
  }

  RatMat mbasis;
  for (size_t i : basis) mbasis.push_back(rows[i]);
  auto minv = invert(std::move(mbasis));
  if (!minv) fail(Errc::unbounded_polytope, "initial basis not invertible");

  std::vector<Ray> rays;
  for (size_t j = 0; j < dim; ++j) {
    RatVec z(dim);
    for (size_t i = 0; i < dim; ++i) z[i] = (*minv)[i][j];
    normalize_ray(z);
    rays.push_back(Ray{std::move(z), {}});
  }
  for (Ray& r : rays) r.active = compute_active(r.z);

  boost::dynamic_bitset<> processed(m);
  for (size_t i : basis) processed.set(i);

  for (size_t ri = 0; ri < m; ++ri) {
    if (processed.test(ri)) continue;
    std::vector<Rational> vals(rays.size());
    std::vector<size_t> pos, neg, zero;
    for (size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot(rows[ri], rays[i].z);
      if (vals[i] > 0)
        pos.push_back(i);
      else if (vals[i] < 0)
        neg.push_back(i);
      else
        zero.push_back(i);
    }
    processed.set(ri);
    if (neg.empty()) continue;
    if (pos.empty() && zero.empty()) {
      rays.clear();
      break;
    }

    auto adjacent = [&](size_t i1, size_t i2) {
      boost::dynamic_bitset<> common = rays[i1].active & rays[i2].active & processed;
      if (common.count() + 2 < dim) return false;  // rank dim-2 needs that many rows
      for (size_t t = 0; t < rays.size(); ++t) {
        if (t == i1 || t == i2) continue;
        if (common.is_subset_of(rays[t].active)) return false;
      }
      return true;
    };

    std::vector<Ray> fresh_rays;
    for (size_t ip : pos)
      for (size_t in : neg) {
        if (!adjacent(ip, in)) continue;
        RatVec z(dim);
        for (size_t j = 0; j < dim; ++j)
          z[j] = vals[ip] * rays[in].z[j] - vals[in] * rays[ip].z[j];
        normalize_ray(z);
        Ray fresh{std::move(z), {}};
        fresh.active = compute_active(fresh.z);
        fresh_rays.push_back(std::move(fresh));
      }
    std::vector<Ray> next;
    for (size_t i : zero) next.push_back(std::move(rays[i]));
    for (size_t i : pos) next.push_back(std::move(rays[i]));
    for (Ray& r : fresh_rays) next.push_back(std::move(r));
    rays = std::move(next);
    if (rays.empty()) break;
  }
  return rays;
}

}  // namespace

std::vector<RfVertex> enumerate_vertices(const HRepPolytope& p) {
  ReducedSystem rs = reduce(p);
  if (rs.inconsistent) return {};
  size_t k = rs.free_vars.size();
  size_t n = static_cast<size_t>(p.dimension());

  // Homogenize: inequality c . y <= r becomes (r, -c) . (t, y) >= 0.
  std::vector<RatVec> rows;
  {
    RatVec trow(k + 1, Rational(0));
    trow[0] = 1;
    rows.push_back(std::move(trow));
  }
  for (const auto& row : rs.rows) {
    RatVec h(k + 1);
    h[0] = row.rhs;
    for (size_t j = 0; j < k; ++j) h[j + 1] = -row.coeffs[j];
    rows.push_back(std::move(h));
  }

  std::vector<Ray> rays = dd_extreme_rays(rows);
  std::vector<RfVertex> vertices;
  vertices.reserve(rays.size());
  for (const Ray& ray : rays) {
    const Rational& t = ray.z[0];
    if (t == 0)
      fail(Errc::unbounded_polytope, "recession direction found during enumeration");
    RatVec y(k);
    for (size_t j = 0; j < k; ++j) y[j] = ray.z[j + 1] / t;
    RatVec x(n, Rational(0));
    for (size_t f = 0; f < k; ++f) x[static_cast<size_t>(rs.free_vars[f])] = y[f];
    for (size_t i = 0; i < rs.pivot_vars.size(); ++i) {
      Rational value = rs.pivot_rhs[i];
      for (size_t f = 0; f < k; ++f) value -= rs.pivot_coef[i][f] * y[f];
      x[static_cast<size_t>(rs.pivot_vars[i])] = std::move(value);
    }
    vertices.push_back(RfVertex{std::move(x)});
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const RfVertex& a, const RfVertex& b) { return a.coords < b.coords; });
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::pair<Rational, RfVertex> max_functional(const std::vector<RfVertex>& vertices,
                                             const Functional& f) {
  if (vertices.empty()) fail(Errc::empty_vertex_list, "no vertices to maximize over");
  const RfVertex* best = &vertices.front();
  Rational best_val = f.eval(best->coords);
  for (const RfVertex& v : vertices) {
    Rational val = f.eval(v.coords);
    if (val > best_val) {  // ties keep the lexicographically first vertex
      best_val = std::move(val);
      best = &v;
    }
  }
  return {best_val, *best};
}

std::vector<RfVertex> deterministic_vertices(const std::vector<RfVertex>& vertices) {
  std::vector<RfVertex> out;
  for (const RfVertex& v : vertices) {
    bool det = std::all_of(v.coords.begin(), v.coords.end(),
                           [](const Rational& x) { return x == 0 || x == 1; });
    if (det) out.push_back(v);
  }
  return out;
}

VertexCheck check_vertex(const HRepPolytope& p, const RfVertex& v) {
  size_t n = static_cast<size_t>(p.dimension());
  if (v.coords.size() != n) fail(Errc::dimension_mismatch, "vertex coordinate length");
  VertexCheck out{true, false};
  RatMat active;
  for (const auto& e : p.equalities()) {
    if (dot(e.coeffs, v.coords) != e.rhs) out.feasible = false;
    active.push_back(e.coeffs);
  }
  for (const auto& iq : p.inequalities()) {
    Rational s = dot(iq.coeffs, v.coords);
    if (s > iq.rhs) out.feasible = false;
    if (s == iq.rhs) active.push_back(iq.coeffs);
  }
  for (size_t i = 0; i < n; ++i) {
    if (v.coords[i] < 0) out.feasible = false;
    if (v.coords[i] == 0) {
      RatVec row(n, Rational(0));
      row[i] = 1;
      active.push_back(std::move(row));
    }
  }
  out.extremal = rank(std::move(active)) == static_cast<int>(n);
  return out;
}

}  // namespace ksb
