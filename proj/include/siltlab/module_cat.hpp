// The module category of a type-A path algebra: interval modules, Hom by
// exact integer linear algebra, Ext^1 via the Euler form, AR quiver by knitting.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "siltlab/quiver.hpp"

namespace siltlab {

// Indecomposable kQ-module with support [lo, hi].  Every indecomposable of a
// type-A path algebra is of this form, with identity maps along the arrows
// inside the support.
struct IntervalModule {
  int lo = 1;
  int hi = 1;

  bool contains(int v) const { return lo <= v && v <= hi; }
  auto operator<=>(const IntervalModule&) const = default;
};

inline DimVector dim_vector(const QuiverA& q, const IntervalModule& m) {
  std::vector<long long> e(q.n, 0);
  for (int v = m.lo; v <= m.hi; ++v) e[v - 1] = 1;
  return DimVector(std::move(e));
}

// Exact rank of a small integer matrix by fraction-free elimination.
inline int integer_rank(std::vector<std::vector<long long>> a) {
  int rows = (int)a.size();
  if (rows == 0) return 0;
  int cols = (int)a[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      long long f1 = a[rank][c], f2 = a[r][c];
      for (int k = c; k < cols; ++k) a[r][k] = a[r][k] * f1 - a[rank][k] * f2;
    }
    ++rank;
  }
  return rank;
}

inline long long integer_det(std::vector<std::vector<long long>> a) {
  int n = (int)a.size();
  long long det = 1;
  long long prev = 1;  // Bareiss
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) { std::swap(a[c], a[piv]); det = -det; }
    for (int r = c + 1; r < n; ++r)
      for (int k = c + 1; k < n; ++k)
        a[r][k] = (a[r][k] * a[c][c] - a[r][c] * a[c][k]) / prev;
    prev = a[c][c];
  }
  return det * a[n - 1][n - 1];
}

// dim Hom(M,N): solution space of { phi_w M_a = N_a phi_v : a in Q_1 } with
// one scalar unknown per vertex of supp M ∩ supp N.
inline int hom_dim(const QuiverA& q, const IntervalModule& m, const IntervalModule& n) {
  std::vector<int> var(q.n + 1, -1);
  int nvars = 0;
  for (int v = 1; v <= q.n; ++v)
    if (m.contains(v) && n.contains(v)) var[v] = nvars++;
  if (nvars == 0) return 0;
  std::vector<std::vector<long long>> rows;
  for (const Arrow& a : q.arrows()) {
    // equation lives in Hom_k(M_v, N_w); skip if that space is zero
    if (!m.contains(a.src) || !n.contains(a.dst)) continue;
    std::vector<long long> row(nvars, 0);
    bool ma = m.contains(a.src) && m.contains(a.dst);  // M_a = id or 0
    bool na = n.contains(a.src) && n.contains(a.dst);
    if (ma && var[a.dst] >= 0) row[var[a.dst]] += 1;   // phi_w * M_a
    if (na && var[a.src] >= 0) row[var[a.src]] -= 1;   // N_a * phi_v
    rows.push_back(std::move(row));
  }
  return nvars - integer_rank(std::move(rows));
}

inline int ext_dim(const QuiverA& q, const IntervalModule& m, const IntervalModule& n) {
  long long e = hom_dim(q, m, n) - euler_form(q, dim_vector(q, m), dim_vector(q, n));
  if (e < 0) throw std::logic_error("ext_dim: negative value, Euler identity violated");
  return (int)e;
}

// P_v: vertices reachable from v by directed paths.  I_v: vertices reaching v.
inline IntervalModule projective(const QuiverA& q, int v) {
  if (v < 1 || v > q.n) throw std::invalid_argument("projective: vertex out of range");
  int lo = v, hi = v;
  while (lo > 1 && q.orientation[lo - 2] == Dir::Backward) --lo;
  while (hi < q.n && q.orientation[hi - 1] == Dir::Forward) ++hi;
  return {lo, hi};
}

inline IntervalModule injective(const QuiverA& q, int v) {
  if (v < 1 || v > q.n) throw std::invalid_argument("injective: vertex out of range");
  int lo = v, hi = v;
  while (lo > 1 && q.orientation[lo - 2] == Dir::Forward) --lo;
  while (hi < q.n && q.orientation[hi - 1] == Dir::Backward) ++hi;
  return {lo, hi};
}

struct ARQuiver {
  std::vector<IntervalModule> vertices;
  std::vector<std::pair<IntervalModule, IntervalModule>> arrows;
  std::map<IntervalModule, IntervalModule> translate;  // tau, defined off projectives
};

// Classical knitting.  Starts from the projective slice and repeatedly applies
// mesh additivity dim(tau^{-1} Z) = sum_{Z->W} dim W - dim Z.
inline ARQuiver knit_ar_quiver(const QuiverA& q) {
  ARQuiver ar;
  std::vector<IntervalModule> projs, injs;
  for (int v = 1; v <= q.n; ++v) {
    projs.push_back(projective(q, v));
    injs.push_back(injective(q, v));
  }
  auto is_injective = [&](const IntervalModule& m) {
    return std::find(injs.begin(), injs.end(), m) != injs.end();
  };

  std::map<IntervalModule, std::vector<IntervalModule>> out_arrows;
  std::map<IntervalModule, bool> translated;
  for (const IntervalModule& p : projs) {
    if (std::find(ar.vertices.begin(), ar.vertices.end(), p) == ar.vertices.end())
      ar.vertices.push_back(p);
    translated[p] = false;
  }
  // irreducible maps between projectives: P_w -> P_v for each arrow v -> w
  for (const Arrow& a : q.arrows()) {
    IntervalModule pv = projective(q, a.src), pw = projective(q, a.dst);
    out_arrows[pw].push_back(pv);
    ar.arrows.push_back({pw, pv});
  }

  auto incoming_done = [&](const IntervalModule& z) {
    // every X with an arrow X -> Z must already be translated or injective
    for (const auto& [x, outs] : out_arrows)
      for (const IntervalModule& w : outs)
        if (w == z && !translated[x] && !is_injective(x)) return false;
    return true;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < ar.vertices.size(); ++i) {
      IntervalModule z = ar.vertices[i];
      if (translated[z] || is_injective(z) || !incoming_done(z)) continue;
      std::vector<long long> d(q.n, 0);
      for (const IntervalModule& w : out_arrows[z])
        for (int v = w.lo; v <= w.hi; ++v) d[v - 1] += 1;
      for (int v = z.lo; v <= z.hi; ++v) d[v - 1] -= 1;
      // the mesh dim vector must be the indicator of an interval
      int lo = 0, hi = 0;
      for (int v = 1; v <= q.n; ++v) {
        if (d[v - 1] < 0 || d[v - 1] > 1)
          throw std::logic_error("knitting: mesh produced a non-interval dim vector");
        if (d[v - 1] == 1) {
          if (lo == 0) lo = v;
          hi = v;
        }
      }
      for (int v = lo; v <= hi; ++v)
        if (d[v - 1] != 1) throw std::logic_error("knitting: mesh support not an interval");
      if (lo == 0) throw std::logic_error("knitting: mesh produced the zero module");
      IntervalModule znext{lo, hi};
      if (std::find(ar.vertices.begin(), ar.vertices.end(), znext) != ar.vertices.end())
        throw std::logic_error("knitting: translate already present");
      ar.vertices.push_back(znext);
      translated[znext] = false;
      ar.translate[znext] = z;  // tau(znext) = z
      for (const IntervalModule& w : out_arrows[z]) {
        out_arrows[w].push_back(znext);
        ar.arrows.push_back({w, znext});
      }
      translated[z] = true;
      progress = true;
    }
  }

  if ((int)ar.vertices.size() != q.n * (q.n + 1) / 2)
    throw std::logic_error("knitting: wrong number of indecomposables");
  return ar;
}

// Per-quiver tables: all indecomposables, Hom/Ext matrices, tau in both
// directions.  Built once and then shared read-only.
class ModuleCategory {
 public:
  explicit ModuleCategory(QuiverA q) : q_(std::move(q)), ar_(knit_ar_quiver(q_)) {
    for (int lo = 1; lo <= q_.n; ++lo)
      for (int hi = lo; hi <= q_.n; ++hi) mods_.push_back({lo, hi});
    for (const IntervalModule& m : mods_)
      for (const IntervalModule& n : mods_) {
        hom_[{m, n}] = hom_dim(q_, m, n);
        ext_[{m, n}] = ext_dim(q_, m, n);
      }
    for (const auto& [znext, z] : ar_.translate) {
      tau_[znext] = z;
      tau_inv_[z] = znext;
    }
  }

  const QuiverA& quiver() const { return q_; }
  const ARQuiver& ar() const { return ar_; }
  const std::vector<IntervalModule>& modules() const { return mods_; }

  int hom(const IntervalModule& m, const IntervalModule& n) const { return hom_.at({m, n}); }
  int ext(const IntervalModule& m, const IntervalModule& n) const { return ext_.at({m, n}); }

  bool is_projective(const IntervalModule& m) const {
    for (int v = 1; v <= q_.n; ++v)
      if (projective(q_, v) == m) return true;
    return false;
  }
  bool is_injective(const IntervalModule& m) const {
    for (int v = 1; v <= q_.n; ++v)
      if (injective(q_, v) == m) return true;
    return false;
  }
  // vertex v with P_v = m (requires m projective), resp. I_v = m
  int projective_vertex(const IntervalModule& m) const {
    for (int v = 1; v <= q_.n; ++v)
      if (projective(q_, v) == m) return v;
    throw std::invalid_argument("not a projective module");
  }
  int injective_vertex(const IntervalModule& m) const {
    for (int v = 1; v <= q_.n; ++v)
      if (injective(q_, v) == m) return v;
    throw std::invalid_argument("not an injective module");
  }

  std::optional<IntervalModule> tau(const IntervalModule& m) const {
    auto it = tau_.find(m);
    if (it == tau_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<IntervalModule> tau_inv(const IntervalModule& m) const {
    auto it = tau_inv_.find(m);
    if (it == tau_inv_.end()) return std::nullopt;
    return it->second;
  }

 private:
  QuiverA q_;
  ARQuiver ar_;
  std::vector<IntervalModule> mods_;
  std::map<std::pair<IntervalModule, IntervalModule>, int> hom_, ext_;
  std::map<IntervalModule, IntervalModule> tau_, tau_inv_;
};

}  // namespace siltlab
