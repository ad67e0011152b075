// Lattice vectors in Z^2 / Z^3 and the exact multilinear forms on them.
#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "latfano/numeric.hpp"

namespace latfano {

/// Point of M = Z^d with d in {2,3}. Value type; all operations are pure.
class Vec {
 public:
  Vec() = default;  // dim 0 placeholder, only valid as a target of assignment

  Vec(std::initializer_list<long long> xs) {
    if (xs.size() != 2 && xs.size() != 3)
      throw std::invalid_argument("Vec: dimension must be 2 or 3");
    dim_ = static_cast<int>(xs.size());
    int i = 0;
    for (long long x : xs) c_[i++] = Int(x);
  }

  explicit Vec(const std::vector<Int>& xs) {
    if (xs.size() != 2 && xs.size() != 3)
      throw std::invalid_argument("Vec: dimension must be 2 or 3");
    dim_ = static_cast<int>(xs.size());
    for (int i = 0; i < dim_; ++i) c_[i] = xs[i];
  }

  static Vec zero(int dim) {
    Vec v;
    if (dim != 2 && dim != 3)
      throw std::invalid_argument("Vec: dimension must be 2 or 3");
    v.dim_ = dim;
    return v;
  }

  static Vec unit(int dim, int axis) {
    Vec v = zero(dim);
    v[axis] = Int(1);
    return v;
  }

  int dim() const { return dim_; }

  Int operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Int& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r = matched(a, b);
    for (int i = 0; i < r.dim_; ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r = matched(a, b);
    for (int i = 0; i < r.dim_; ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend Vec operator-(const Vec& a) {
    Vec r = a;
    for (int i = 0; i < r.dim_; ++i) r[i] = -a[i];
    return r;
  }
  friend Vec operator*(Int k, const Vec& a) {
    Vec r = a;
    for (int i = 0; i < r.dim_; ++i) r[i] = k * a[i];
    return r;
  }

  friend bool operator==(const Vec&, const Vec&) = default;

  // Lexicographic order on coordinates; total on vectors of equal dimension.
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    for (int i = 0; i < a.dim_; ++i)
      if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  static Vec matched(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_ || a.dim_ == 0)
      throw std::invalid_argument("Vec: dimension mismatch");
    return zero(a.dim_);
  }

  std::array<Int, 3> c_{Int(0), Int(0), Int(0)};
  int dim_ = 0;
};

/// Dual pairing <m, v> = sum_i m_i v_i.
inline Int dot(const Vec& m, const Vec& v) {
  if (m.dim() != v.dim() || m.dim() == 0)
    throw std::invalid_argument("dot: dimension mismatch");
  Int s(0);
  for (int i = 0; i < m.dim(); ++i) s += m[i] * v[i];
  return s;
}

inline bool is_zero(const Vec& v) {
  for (int i = 0; i < v.dim(); ++i)
    if (v[i] != Int(0)) return false;
  return true;
}

/// v / gcd(coords); the zero vector has no primitive representative.
inline Vec primitive(const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("primitive: zero vector");
  Int g(0);
  for (int i = 0; i < v.dim(); ++i) g = gcd(g, v[i]);
  Vec r = v;
  for (int i = 0; i < v.dim(); ++i) r[i] = divexact(v[i], g);
  return r;
}

inline bool is_primitive(const Vec& v) {
  if (is_zero(v)) return false;
  Int g(0);
  for (int i = 0; i < v.dim(); ++i) g = gcd(g, v[i]);
  return g == Int(1);
}

inline Int det2(const Vec& a, const Vec& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw std::invalid_argument("det2: needs 2d vectors");
  return a[0] * b[1] - a[1] * b[0];
}

inline Vec cross(const Vec& a, const Vec& b) {
  if (a.dim() != 3 || b.dim() != 3)
    throw std::invalid_argument("cross: needs 3d vectors");
  Vec r = Vec::zero(3);
  r[0] = a[1] * b[2] - a[2] * b[1];
  r[1] = a[2] * b[0] - a[0] * b[2];
  r[2] = a[0] * b[1] - a[1] * b[0];
  return r;
}

inline Int det3(const Vec& a, const Vec& b, const Vec& c) {
  return dot(a, cross(b, c));
}

inline std::string to_string(const Vec& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

/// Vector with rational coordinates; transient values only (solver output,
/// non-integrality witnesses), never stored in a Polytope.
struct RatVec {
  std::array<Rat, 3> c{};
  int dim = 0;

  RatVec() = default;
  explicit RatVec(int d) : dim(d) {
    if (d != 2 && d != 3) throw std::invalid_argument("RatVec: bad dimension");
  }
  explicit RatVec(const Vec& v) : dim(v.dim()) {
    for (int i = 0; i < dim; ++i) c[static_cast<size_t>(i)] = Rat(v[i]);
  }

  Rat operator[](int i) const { return c[static_cast<size_t>(i)]; }
  Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }

  bool is_integral() const {
    for (int i = 0; i < dim; ++i)
      if (!c[static_cast<size_t>(i)].is_integer()) return false;
    return true;
  }

  Vec to_vec() const {
    if (!is_integral()) throw std::logic_error("RatVec: not integral");
    Vec v = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) v[i] = c[static_cast<size_t>(i)].num;
    return v;
  }

  friend bool operator==(const RatVec&, const RatVec&) = default;
  friend std::strong_ordering operator<=>(const RatVec& a, const RatVec& b) {
    if (auto s = a.dim <=> b.dim; s != 0) return s;
    for (int i = 0; i < a.dim; ++i)
      if (auto s = a[i] <=> b[i]; s != 0) return s;
    return std::strong_ordering::equal;
  }
};

inline std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim; ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

/// Affine lattice automorphism y -> A y + t with |det A| = 1, checked at
/// construction. Used for canonical forms and for change-of-basis tests.
struct UnimodularMap {
  int dim = 0;
  std::array<std::array<Int, 3>, 3> a{};  // row-major
  Vec t;

  UnimodularMap(int d, const std::array<std::array<Int, 3>, 3>& rows,
                const Vec& shift)
      : dim(d), a(rows), t(shift) {
    if (d != 2 && d != 3) throw std::invalid_argument("UnimodularMap: bad dim");
    if (shift.dim() != d)
      throw std::invalid_argument("UnimodularMap: shift dimension mismatch");
    Int d0;
    if (d == 2) {
      d0 = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    } else {
      Vec r0 = row(0), r1 = row(1), r2 = row(2);
      d0 = det3(r0, r1, r2);
    }
    if (d0 != Int(1) && d0 != Int(-1))
      throw std::invalid_argument("UnimodularMap: |det| != 1");
  }

  static UnimodularMap identity(int d) {
    std::array<std::array<Int, 3>, 3> rows{};
    for (int i = 0; i < 3; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = Int(1);
    return UnimodularMap(d, rows, Vec::zero(d));
  }

  Vec row(int i) const {
    Vec r = Vec::zero(dim);
    for (int j = 0; j < dim; ++j) r[j] = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return r;
  }

  Vec apply(const Vec& v) const {
    if (v.dim() != dim)
      throw std::invalid_argument("UnimodularMap: dimension mismatch");
    Vec r = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) r[i] = dot(row(i), v) + t[i];
    return r;
  }
};

}  // namespace latfano
