#pragma once

// Exact rational linear algebra over Q: square matrices acting on row
// vectors from the right, subspaces in canonical reduced row echelon form,
// and closure of subspace families under a finite matrix group.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "refmon/core.hpp"

namespace refmon::exactlin {

using Vector = std::vector<Rational>;

inline Vector unit_vector(std::size_t d, std::size_t i) {
  Vector v(d, Rational(0));
  v.at(i) = 1;
  return v;
}

inline Rational dot(Vector const& a, Vector const& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::ambient_mismatch, "dot product of vectors of "
                "different lengths");
  }
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) {
      r += a[i] * b[i];
    }
  }
  return r;
}

inline bool is_zero(Vector const& v) {
  return std::all_of(v.begin(), v.end(),
                     [](Rational const& x) { return x.is_zero(); });
}

inline std::string to_string(Vector const& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << v[i];
  }
  os << ')';
  return os.str();
}

// Reduced row echelon form; zero rows are dropped. Returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(std::vector<Vector>& rows,
                                              std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t              r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) {
      ++p;
    }
    if (p == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[p]);
    Rational const lead = rows[r][c];
    if (lead != 1) {
      for (std::size_t k = c; k < ncols; ++k) {
        rows[r][k] /= lead;
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) {
        continue;
      }
      Rational const f = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k) {
        if (!rows[r][k].is_zero()) {
          rows[i][k] -= f * rows[r][k];
        }
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

class RationalMatrix {
 public:
  RationalMatrix() = default;

  explicit RationalMatrix(std::size_t d) : dim_(d), a_(d * d, Rational(0)) {}

  RationalMatrix(std::size_t d, std::vector<Rational> entries)
      : dim_(d), a_(std::move(entries)) {
    if (a_.size() != d * d) {
      throw Error(ErrorKind::size_mismatch, "matrix needs d*d entries");
    }
  }

  static RationalMatrix identity(std::size_t d) {
    RationalMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  // Reflection x -> x - 2 (x.v)/(v.v) v, written as a matrix for row vectors.
  static RationalMatrix reflection(Vector const& v) {
    Rational const n = dot(v, v);
    if (n.is_zero()) {
      throw Error(ErrorKind::invalid_argument, "reflection in zero vector");
    }
    std::size_t    d = v.size();
    RationalMatrix m = identity(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        m(i, j) -= 2 * v[i] * v[j] / n;
      }
    }
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Rational const& operator()(std::size_t i, std::size_t j) const {
    return a_[i * dim_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return a_[i * dim_ + j];
  }

  // x -> x M
  Vector apply(Vector const& x) const {
    if (x.size() != dim_) {
      throw Error(ErrorKind::ambient_mismatch, "vector/matrix dimensions");
    }
    Vector y(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < dim_; ++j) {
        Rational const& e = (*this)(i, j);
        if (!e.is_zero()) {
          y[j] += x[i] * e;
        }
      }
    }
    return y;
  }

  friend RationalMatrix operator*(RationalMatrix const& a,
                                  RationalMatrix const& b) {
    if (a.dim_ != b.dim_) {
      throw Error(ErrorKind::size_mismatch, "matrix product dimensions");
    }
    RationalMatrix c(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        Rational const& x = a(i, k);
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < a.dim_; ++j) {
          if (!b(k, j).is_zero()) {
            c(i, j) += x * b(k, j);
          }
        }
      }
    }
    return c;
  }

  Rational determinant() const {
    std::vector<Vector> rows(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      rows[i].assign(a_.begin() + i * dim_, a_.begin() + (i + 1) * dim_);
    }
    Rational det = 1;
    for (std::size_t c = 0; c < dim_; ++c) {
      std::size_t p = c;
      while (p < dim_ && rows[p][c].is_zero()) {
        ++p;
      }
      if (p == dim_) {
        return 0;
      }
      if (p != c) {
        std::swap(rows[p], rows[c]);
        det = -det;
      }
      det *= rows[c][c];
      for (std::size_t i = c + 1; i < dim_; ++i) {
        if (rows[i][c].is_zero()) {
          continue;
        }
        Rational const f = rows[i][c] / rows[c][c];
        for (std::size_t k = c; k < dim_; ++k) {
          rows[i][k] -= f * rows[c][k];
        }
      }
    }
    return det;
  }

  bool is_invertible() const { return !determinant().is_zero(); }

  RationalMatrix transpose() const {
    RationalMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  friend bool operator==(RationalMatrix const&, RationalMatrix const&)
      = default;

  friend bool operator<(RationalMatrix const& a, RationalMatrix const& b) {
    if (a.dim_ != b.dim_) {
      return a.dim_ < b.dim_;
    }
    return std::lexicographical_compare(a.a_.begin(), a.a_.end(),
                                        b.a_.begin(), b.a_.end());
  }

 private:
  std::size_t           dim_ = 0;
  std::vector<Rational> a_;
};

/// A linear subspace of Q^d stored by its reduced row echelon basis.
///
/// The basis is unique per subspace, so structural equality is subspace
/// equality and the ordering (by dimension, then basis) is a total order
/// usable for canonical sorting.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(std::size_t ambient, std::vector<Vector> vectors) {
    for (auto const& v : vectors) {
      if (v.size() != ambient) {
        throw Error(ErrorKind::ambient_mismatch, "spanning vector length");
      }
    }
    Subspace s;
    s.ambient_ = ambient;
    rref_in_place(vectors, ambient);
    s.rows_ = std::move(vectors);
    return s;
  }

  static Subspace full(std::size_t d) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < d; ++i) {
      rows.push_back(unit_vector(d, i));
    }
    Subspace s;
    s.ambient_ = d;
    s.rows_    = std::move(rows);
    return s;
  }

  static Subspace zero(std::size_t d) {
    Subspace s;
    s.ambient_ = d;
    return s;
  }

  // The hyperplane normal^perp for the standard inner product.
  static Subspace hyperplane(Vector const& normal) {
    if (exactlin::is_zero(normal)) {
      throw Error(ErrorKind::invalid_argument, "zero normal vector");
    }
    return Subspace::span(normal.size(), {normal}).perp();
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t codim() const noexcept { return ambient_ - rows_.size(); }
  std::vector<Vector> const& basis() const noexcept { return rows_; }

  bool is_full() const noexcept { return rows_.size() == ambient_; }
  bool is_zero() const noexcept { return rows_.empty(); }

  bool contains(Vector const& v) const {
    if (v.size() != ambient_) {
      throw Error(ErrorKind::ambient_mismatch, "membership test");
    }
    // Reduce v by the echelon basis; v is in the span iff nothing is left.
    Vector w = v;
    for (auto const& row : rows_) {
      std::size_t c = 0;
      while (row[c].is_zero()) {
        ++c;
      }
      if (!w[c].is_zero()) {
        Rational const f = w[c];
        for (std::size_t k = c; k < ambient_; ++k) {
          w[k] -= f * row[k];
        }
      }
    }
    return exactlin::is_zero(w);
  }

  bool contains(Subspace const& other) const {
    if (other.ambient_ != ambient_) {
      throw Error(ErrorKind::ambient_mismatch, "containment test");
    }
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [this](Vector const& v) { return contains(v); });
  }

  // Orthogonal complement for the standard inner product.
  Subspace perp() const {
    std::vector<Vector> rows  = rows_;
    auto                pivot = rref_in_place(rows, ambient_);
    std::vector<bool>   is_pivot(ambient_, false);
    for (auto c : pivot) {
      is_pivot[c] = true;
    }
    std::vector<Vector> null;
    for (std::size_t f = 0; f < ambient_; ++f) {
      if (is_pivot[f]) {
        continue;
      }
      Vector v(ambient_, Rational(0));
      v[f] = 1;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        v[pivot[r]] = -rows[r][f];
      }
      null.push_back(std::move(v));
    }
    return Subspace::span(ambient_, std::move(null));
  }

  std::string to_string() const {
    std::string s = "span{";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      s += (i ? "," : "") + exactlin::to_string(rows_[i]);
    }
    return s + "}";
  }

  friend bool operator==(Subspace const&, Subspace const&) = default;

  friend bool operator<(Subspace const& a, Subspace const& b) {
    if (a.ambient_ != b.ambient_) {
      return a.ambient_ < b.ambient_;
    }
    if (a.rows_.size() != b.rows_.size()) {
      return a.rows_.size() > b.rows_.size();
    }
    return a.rows_ < b.rows_;
  }

 private:
  std::size_t         ambient_ = 0;
  std::vector<Vector> rows_;
};

inline Subspace sum(Subspace const& x, Subspace const& y) {
  if (x.ambient_dim() != y.ambient_dim()) {
    throw Error(ErrorKind::ambient_mismatch, "subspace sum");
  }
  std::vector<Vector> rows = x.basis();
  rows.insert(rows.end(), y.basis().begin(), y.basis().end());
  return Subspace::span(x.ambient_dim(), std::move(rows));
}

inline Subspace intersect(Subspace const& x, Subspace const& y) {
  if (x.ambient_dim() != y.ambient_dim()) {
    throw Error(ErrorKind::ambient_mismatch, "subspace intersection");
  }
  if (x.is_full() || x == y) {
    return y;
  }
  if (y.is_full()) {
    return x;
  }
  return sum(x.perp(), y.perp()).perp();
}

// The image Xg = {xg : x in X}.
inline Subspace act(Subspace const& x, RationalMatrix const& g) {
  if (x.ambient_dim() != g.dim()) {
    throw Error(ErrorKind::ambient_mismatch, "subspace action");
  }
  if (!g.is_invertible()) {
    throw Error(ErrorKind::singular_matrix, "acting matrix is singular");
  }
  std::vector<Vector> rows;
  rows.reserve(x.dim());
  for (auto const& v : x.basis()) {
    rows.push_back(g.apply(v));
  }
  return Subspace::span(x.ambient_dim(), std::move(rows));
}

inline constexpr std::size_t kDefaultClosureCap = 100'000;

/// The least family containing the seeds and the full space that is closed
/// under the action of the group generated by `generators` and under pairwise
/// intersection. Output is sorted canonically.
inline std::vector<Subspace> system_closure(
    std::span<Subspace const>       seeds,
    std::span<RationalMatrix const> generators,
    std::size_t                     ambient,
    std::size_t                     cap = kDefaultClosureCap) {
  for (auto const& g : generators) {
    if (g.dim() != ambient) {
      throw Error(ErrorKind::ambient_mismatch, "closure generator");
    }
  }
  std::set<Subspace>         found;
  std::vector<Subspace>      order;
  std::deque<std::size_t>    todo;
  auto add = [&](Subspace s) {
    if (s.ambient_dim() != ambient) {
      throw Error(ErrorKind::ambient_mismatch, "closure seed");
    }
    if (found.insert(s).second) {
      if (found.size() > cap) {
        throw Error(ErrorKind::cap_exceeded,
                    "system closure exceeded " + std::to_string(cap)
                        + " subspaces");
      }
      order.push_back(std::move(s));
      todo.push_back(order.size() - 1);
    }
  };
  add(Subspace::full(ambient));
  for (auto const& s : seeds) {
    add(s);
  }
  while (!todo.empty()) {
    std::size_t const i = todo.front();
    todo.pop_front();
    for (auto const& g : generators) {
      add(act(order[i], g));
    }
    // Every pair meets once: the later of the two sees the earlier here.
    for (std::size_t j = 0; j <= i; ++j) {
      add(intersect(order[i], order[j]));
    }
  }
  return {found.begin(), found.end()};
}

// Post-hoc check of the three system axioms.
inline bool satisfies_system_axioms(std::span<Subspace const>       family,
                                    std::span<RationalMatrix const> group,
                                    std::size_t                     ambient) {
  std::set<Subspace> s(family.begin(), family.end());
  if (!s.contains(Subspace::full(ambient))) {
    return false;
  }
  for (auto const& x : family) {
    for (auto const& g : group) {
      if (!s.contains(act(x, g))) {
        return false;
      }
    }
    for (auto const& y : family) {
      if (!s.contains(intersect(x, y))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace refmon::exactlin
