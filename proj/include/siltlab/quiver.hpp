// Type-A quivers with arbitrary orientation and their Grothendieck-group data.
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace siltlab {

enum class Dir { Forward, Backward };  // k -> k+1  vs  k+1 -> k

struct Arrow {
  int src = 0;
  int dst = 0;
};

// The quiver with underlying graph 1 -- 2 -- ... -- n.  Vertices are 1-based.
struct QuiverA {
  int n = 1;
  std::vector<Dir> orientation;  // n-1 entries, edge k is {k, k+1}

  QuiverA() = default;
  QuiverA(int n_, std::vector<Dir> orient) : n(n_), orientation(std::move(orient)) {
    if (n < 1) throw std::invalid_argument("QuiverA: need n >= 1");
    if ((int)orientation.size() != n - 1)
      throw std::invalid_argument("QuiverA: orientation needs n-1 entries");
  }

  static QuiverA linear(int n_) {
    return QuiverA(n_, std::vector<Dir>(std::max(0, n_ - 1), Dir::Forward));
  }

  std::vector<Arrow> arrows() const {
    std::vector<Arrow> out;
    out.reserve(n - 1);
    for (int k = 1; k < n; ++k) {
      if (orientation[k - 1] == Dir::Forward)
        out.push_back({k, k + 1});
      else
        out.push_back({k + 1, k});
    }
    return out;
  }

  bool is_sink(int v) const {
    for (const Arrow& a : arrows())
      if (a.src == v) return false;
    return true;
  }

  bool is_source(int v) const {
    for (const Arrow& a : arrows())
      if (a.dst == v) return false;
    return true;
  }

  bool operator==(const QuiverA& o) const { return n == o.n && orientation == o.orientation; }

  std::string name() const {
    std::string s = "a" + std::to_string(n);
    if (n > 1) {
      s += ":";
      for (Dir d : orientation) s += (d == Dir::Forward ? 'F' : 'B');
    }
    return s;
  }
};

// Parses "a2", "a3:FB", "a4:FFB".  Letters are per edge, F = k->k+1.
inline QuiverA parse_quiver(const std::string& spec) {
  if (spec.size() < 2 || (spec[0] != 'a' && spec[0] != 'A'))
    throw std::invalid_argument("quiver spec must look like \"a3\" or \"a3:FB\": " + spec);
  size_t colon = spec.find(':');
  std::string num = spec.substr(1, colon == std::string::npos ? std::string::npos : colon - 1);
  for (char c : num)
    if (!std::isdigit((unsigned char)c))
      throw std::invalid_argument("bad vertex count in quiver spec: " + spec);
  int n = std::stoi(num);
  if (n < 1) throw std::invalid_argument("quiver must have at least one vertex: " + spec);
  std::vector<Dir> orient(n - 1, Dir::Forward);
  if (colon != std::string::npos) {
    std::string letters = spec.substr(colon + 1);
    if ((int)letters.size() != n - 1)
      throw std::invalid_argument("orientation needs exactly n-1 letters: " + spec);
    for (int i = 0; i < n - 1; ++i) {
      char c = (char)std::toupper((unsigned char)letters[i]);
      if (c == 'F')
        orient[i] = Dir::Forward;
      else if (c == 'B')
        orient[i] = Dir::Backward;
      else
        throw std::invalid_argument("orientation letters must be F or B: " + spec);
    }
  }
  return QuiverA(n, std::move(orient));
}

struct DimVector {
  std::vector<long long> entries;

  DimVector() = default;
  explicit DimVector(std::vector<long long> e) : entries(std::move(e)) {}

  long long operator[](int v) const { return entries[v - 1]; }  // 1-based access
  int size() const { return (int)entries.size(); }
  bool operator==(const DimVector& o) const { return entries == o.entries; }
};

// Euler form <d,e> = sum_v d_v e_v - sum_{a:v->w} d_v e_w.
// For the hereditary path algebra this equals dim Hom - dim Ext^1.
inline long long euler_form(const QuiverA& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.n || e.size() != q.n)
    throw std::invalid_argument("euler_form: dimension vector length does not match quiver");
  long long s = 0;
  for (int v = 1; v <= q.n; ++v) s += d[v] * e[v];
  for (const Arrow& a : q.arrows()) s -= d[a.src] * e[a.dst];
  return s;
}

}  // namespace siltlab
