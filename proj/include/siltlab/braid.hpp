// Artin braid group of the type-A diagram in ElRifai-Morton left-greedy normal
// form.  Elements are Delta^k s_1...s_l with the s_i permutation braids, each
// adjacent pair left-weighted; the form is the canonical representative, so
// equality of elements is equality of forms and x is positive iff k >= 0.
#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace siltlab {

using Perm = std::vector<int>;  // one-line notation, 0-based

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}
inline Perm perm_compose(const Perm& a, const Perm& b) {  // "a then b"
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}
inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = (int)i;
  return r;
}
inline bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != (int)i) return false;
  return true;
}
// starting set = descents: sigma_i left-divides p iff p[i-1] > p[i]
inline bool in_starting_set(const Perm& p, int i) { return p[i - 1] > p[i]; }
inline bool in_finishing_set(const Perm& p, int i) {
  Perm q = perm_inverse(p);
  return q[i - 1] > q[i];
}

struct BraidLetter {
  int gen = 1;   // 1..rank
  int sign = 1;  // +1 for b_i, -1 for b_i^{-1}
};
using BraidWord = std::vector<BraidLetter>;

// "b1 b2 B1" with capitals for inverses
inline BraidWord parse_braid_word(const std::string& text) {
  BraidWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'b' && tok[0] != 'B'))
      throw std::invalid_argument("bad braid letter (want b3 or B3): " + tok);
    for (size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit((unsigned char)tok[i]))
        throw std::invalid_argument("bad braid letter index: " + tok);
    w.push_back({std::stoi(tok.substr(1)), tok[0] == 'b' ? +1 : -1});
  }
  return w;
}

struct BraidElement {
  int inf = 0;               // power of Delta
  std::vector<Perm> factors; // proper simples, left-weighted

  bool is_identity() const { return inf == 0 && factors.empty(); }
  auto operator<=>(const BraidElement&) const = default;
};

class BraidGroup {
 public:
  // rank = number of diagram vertices = generators; acts on rank+1 strands
  explicit BraidGroup(int rank) : rank_(rank), strands_(rank + 1) {
    if (rank < 1) throw std::invalid_argument("BraidGroup: rank must be >= 1");
    delta_ = perm_identity(strands_);
    std::reverse(delta_.begin(), delta_.end());
  }

  int rank() const { return rank_; }
  int strands() const { return strands_; }
  const Perm& delta() const { return delta_; }

  Perm sigma(int i) const {
    if (i < 1 || i > rank_) throw std::invalid_argument("generator index out of range");
    Perm p = perm_identity(strands_);
    std::swap(p[i - 1], p[i]);
    return p;
  }

  Perm tau(const Perm& p) const {  // Delta^{-1} p Delta, the flip
    int n = strands_;
    Perm r(n);
    for (int i = 0; i < n; ++i) r[i] = n - 1 - p[n - 1 - i];
    return r;
  }

  // Make (a,b) left-weighted: slide initial letters of b into a while possible.
  void left_weight(Perm& a, Perm& b, bool& changed) const {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 1; i <= rank_; ++i) {
        if (in_starting_set(b, i) && !in_finishing_set(a, i)) {
          Perm s = sigma(i);
          a = perm_compose(a, s);
          b = perm_compose(s, b);
          moved = true;
          changed = true;
        }
      }
    }
  }

  BraidElement normalize(int inf, std::vector<Perm> factors) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::erase_if(factors, [&](const Perm& p) { return perm_is_identity(p); });
      for (size_t j = 0; j + 1 < factors.size(); ++j)
        left_weight(factors[j], factors[j + 1], changed);
      for (size_t j = 0; j < factors.size(); ++j) {
        if (factors[j] == delta_) {
          for (size_t i = 0; i < j; ++i) factors[i] = tau(factors[i]);
          factors.erase(factors.begin() + j);
          inf += 1;
          changed = true;
          break;
        }
      }
    }
    return {inf, std::move(factors)};
  }

  BraidElement identity_element() const { return {0, {}}; }

  BraidElement generator(int i, int sign = +1) const {
    if (sign > 0) return {0, {sigma(i)}};
    // b_i^{-1} = Delta^{-1} (Delta b_i^{-1}), and Delta sigma_i is simple
    return {-1, {perm_compose(delta_, sigma(i))}};
  }

  BraidElement multiply(const BraidElement& x, const BraidElement& y) const {
    std::vector<Perm> fs;
    fs.reserve(x.factors.size() + y.factors.size());
    for (const Perm& f : x.factors) fs.push_back(y.inf % 2 == 0 ? f : tau(f));
    for (const Perm& f : y.factors) fs.push_back(f);
    return normalize(x.inf + y.inf, std::move(fs));
  }

  BraidElement inverse(const BraidElement& x) const {
    BraidElement r = identity_element();
    for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it)
      r = multiply(r, BraidElement{-1, {perm_compose(delta_, perm_inverse(*it))}});
    return multiply(r, BraidElement{-x.inf, {}});
  }

  BraidElement normal_form(const BraidWord& w) const {
    BraidElement r = identity_element();
    for (const BraidLetter& l : w) r = multiply(r, generator(l.gen, l.sign));
    return r;
  }

  BraidElement power(const BraidElement& x, int k) const {
    BraidElement base = k >= 0 ? x : inverse(x);
    BraidElement r = identity_element();
    for (int i = 0; i < std::abs(k); ++i) r = multiply(r, base);
    return r;
  }

  bool is_positive(const BraidElement& x) const { return x.inf >= 0; }

  bool geq(const BraidElement& a, const BraidElement& b) const {
    return is_positive(multiply(a, inverse(b)));
  }

  std::string to_string(const BraidElement& x) const {
    if (x.is_identity()) return "identity";
    std::ostringstream out;
    out << "D^" << x.inf << " |";
    for (size_t j = 0; j < x.factors.size(); ++j) {
      out << (j == 0 ? " " : ".");
      for (int v : x.factors[j]) {
        if (strands_ > 9) out << (v + 1) << ' ';
        else out << (v + 1);
      }
    }
    return out.str();
  }

 private:
  int rank_;
  int strands_;
  Perm delta_;
};

}  // namespace siltlab
