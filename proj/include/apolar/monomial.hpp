#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "apolar/errors.hpp"

namespace apolar {

/// Exponent tuple of a monomial; length equals the variable count.
using ExponentVector = std::vector<int>;

inline int total_degree(const ExponentVector& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Componentwise a <= b, i.e. x^a divides x^b.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExponentVector ev_add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExponentVector ev_sub(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ExponentVector ev_scale(const ExponentVector& a, int k) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

inline ExponentVector ev_min(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

/// Graded-lexicographic term order: degree ascending, then lex with
/// x1 > x2 > ... (so within a degree, (2,0) precedes (1,1) precedes (0,2)).
/// This is the global convention for canonical output and matrix indexing.
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

/// True graded-lex comparison (not the iteration order): higher degree wins,
/// then lex with x1 > x2 > ...
inline bool grlex_greater(const ExponentVector& a, const ExponentVector& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

namespace detail {
inline void enum_degree(int n_left, int d, ExponentVector& cur,
                        std::vector<ExponentVector>& out) {
  if (n_left == 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.push_back(e);
    enum_degree(n_left - 1, d - e, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All C(N+d-1, d) exponent vectors of total degree d, in canonical order.
inline std::vector<ExponentVector> monomials_of_degree(int n_vars, int d) {
  std::vector<ExponentVector> out;
  ExponentVector cur;
  detail::enum_degree(n_vars, d, cur, out);
  return out;
}

/// Monomials of degree 0..max_deg, degree-major in canonical order.
inline std::vector<ExponentVector> monomials_up_to(int n_vars, int max_deg) {
  std::vector<ExponentVector> out;
  for (int d = 0; d <= max_deg; ++d) {
    std::vector<ExponentVector> layer = monomials_of_degree(n_vars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Canonical column/row indexing over the degree-<=max_deg monomials.
class MonomialIndex {
 public:
  MonomialIndex(int n_vars, int max_deg)
      : n_vars_(n_vars), max_deg_(max_deg), list_(monomials_up_to(n_vars, max_deg)) {
    for (int i = 0; i < static_cast<int>(list_.size()); ++i) pos_[list_[i]] = i;
  }

  int size() const { return static_cast<int>(list_.size()); }
  int n_vars() const { return n_vars_; }
  int max_deg() const { return max_deg_; }
  const ExponentVector& at(int i) const { return list_[i]; }

  int index(const ExponentVector& e) const {
    auto it = pos_.find(e);
    if (it == pos_.end()) throw Error("monomial outside the index range");
    return it->second;
  }

  bool in_range(const ExponentVector& e) const { return total_degree(e) <= max_deg_; }

 private:
  int n_vars_;
  int max_deg_;
  std::vector<ExponentVector> list_;
  std::map<ExponentVector, int, GrlexLess> pos_;
};

enum class VarRole { ring, dual };

/// Variable context: N variables, lowercase x (ring) or uppercase X (dual).
struct VarContext {
  int n_vars = 0;
  VarRole role = VarRole::ring;

  bool operator==(const VarContext& o) const { return n_vars == o.n_vars && role == o.role; }
  bool operator!=(const VarContext& o) const { return !(*this == o); }
};

}  // namespace apolar
