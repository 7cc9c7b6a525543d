#pragma once

// Partial bijections of a finite set. Maps act on the right and compose
// left to right: x(ab) = (xa)b.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "refmon/core.hpp"

namespace refmon {

class PartialMap {
 public:
  PartialMap() = default;

  // img[i] is the image of point i (0-based) or -1 where undefined.
  PartialMap(std::size_t n, std::vector<int> img) : img_(std::move(img)) {
    if (img_.size() != n) {
      throw Error(ErrorKind::size_mismatch, "image vector length");
    }
    std::vector<bool> hit(n, false);
    for (int j : img_) {
      if (j < -1 || j >= static_cast<int>(n)) {
        throw Error(ErrorKind::invalid_argument, "image out of range");
      }
      if (j >= 0) {
        if (hit[j]) {
          throw Error(ErrorKind::invalid_argument, "not injective");
        }
        hit[j] = true;
      }
    }
  }

  // From 1-based (source, target) pairs.
  static PartialMap from_pairs(
      std::size_t n, std::initializer_list<std::pair<int, int>> graph) {
    std::vector<int> img(n, -1);
    for (auto [i, j] : graph) {
      if (i < 1 || j < 1 || i > static_cast<int>(n) || j > static_cast<int>(n)) {
        throw Error(ErrorKind::invalid_argument, "point outside 1..n");
      }
      if (img[i - 1] != -1) {
        throw Error(ErrorKind::invalid_argument, "repeated source point");
      }
      img[i - 1] = j - 1;
    }
    return PartialMap(n, std::move(img));
  }

  static PartialMap identity(std::size_t n) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = static_cast<int>(i);
    }
    return PartialMap(n, std::move(img));
  }

  // The partial identity on a set of 0-based points.
  static PartialMap partial_identity(std::size_t n,
                                     std::vector<std::size_t> const& y) {
    std::vector<int> img(n, -1);
    for (auto i : y) {
      img.at(i) = static_cast<int>(i);
    }
    return PartialMap(n, std::move(img));
  }

  std::size_t n() const noexcept { return img_.size(); }
  int operator[](std::size_t i) const { return img_[i]; }
  std::vector<int> const& images() const noexcept { return img_; }

  bool defined_at(std::size_t i) const { return img_[i] >= 0; }

  std::vector<std::size_t> domain() const {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] >= 0) {
        d.push_back(i);
      }
    }
    return d;
  }

  std::vector<std::size_t> image() const {
    std::vector<std::size_t> r;
    for (int j : img_) {
      if (j >= 0) {
        r.push_back(static_cast<std::size_t>(j));
      }
    }
    std::sort(r.begin(), r.end());
    return r;
  }

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(img_.begin(), img_.end(), [](int j) { return j >= 0; }));
  }

  bool is_idempotent() const {
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] >= 0 && img_[i] != static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  }

  bool is_total() const { return rank() == n(); }

  // 1-based listing, e.g. "[1->2,3->3]".
  std::string to_string() const {
    std::string s = "[";
    bool        first = true;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] < 0) {
        continue;
      }
      s += (first ? "" : ",") + std::to_string(i + 1) + "->"
           + std::to_string(img_[i] + 1);
      first = false;
    }
    return s + "]";
  }

  friend bool operator==(PartialMap const&, PartialMap const&) = default;
  friend auto operator<=>(PartialMap const&, PartialMap const&) = default;

 private:
  std::vector<int> img_;
};

inline PartialMap compose(PartialMap const& a, PartialMap const& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorKind::size_mismatch, "composing maps on different sets");
  }
  std::vector<int> img(a.n(), -1);
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (a[i] >= 0) {
      img[i] = b[static_cast<std::size_t>(a[i])];
    }
  }
  return PartialMap(a.n(), std::move(img));
}

inline PartialMap inverse(PartialMap const& a) {
  std::vector<int> img(a.n(), -1);
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (a[i] >= 0) {
      img[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    }
  }
  return PartialMap(a.n(), std::move(img));
}

/// A partial bijection of {±1..±n} commuting with negation.
///
/// Stored as a PartialMap on 2n points where +i is point i-1 and -i is
/// point n+i-1.
class SignedPartialMap {
 public:
  SignedPartialMap() = default;

  explicit SignedPartialMap(PartialMap base) : base_(std::move(base)) {
    if (base_.n() % 2 != 0) {
      throw Error(ErrorKind::size_mismatch, "signed map needs 2n points");
    }
    std::size_t const m = base_.n() / 2;
    for (std::size_t p = 0; p < base_.n(); ++p) {
      int const img = base_[p];
      int const neg_img = base_[negate(p, m)];
      if ((img < 0) != (neg_img < 0)) {
        throw Error(ErrorKind::invalid_argument, "domain not symmetric");
      }
      if (img >= 0
          && negate(static_cast<std::size_t>(img), m)
                 != static_cast<std::size_t>(neg_img)) {
        throw Error(ErrorKind::invalid_argument, "map does not commute with "
                    "negation");
      }
    }
  }

  // signed_img[i-1] is the signed image of +i (0 where undefined).
  static SignedPartialMap from_signed(std::size_t n,
                                      std::vector<int> const& signed_img) {
    if (signed_img.size() != n) {
      throw Error(ErrorKind::size_mismatch, "signed image vector length");
    }
    std::vector<int> img(2 * n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      int const t = signed_img[i];
      if (t == 0) {
        continue;
      }
      if (std::abs(t) > static_cast<int>(n)) {
        throw Error(ErrorKind::invalid_argument, "signed image out of range");
      }
      img[i]     = point(t, n);
      img[n + i] = point(-t, n);
    }
    return SignedPartialMap(PartialMap(2 * n, std::move(img)));
  }

  static SignedPartialMap identity(std::size_t n) {
    return SignedPartialMap(PartialMap::identity(2 * n));
  }

  std::size_t n() const noexcept { return base_.n() / 2; }
  PartialMap const& base() const noexcept { return base_; }

  // Signed image of +i for 1 <= i <= n, 0 where undefined.
  int operator()(int i) const {
    int const p = base_[static_cast<std::size_t>(point(i, n()))];
    return p < 0 ? 0 : label(static_cast<std::size_t>(p), n());
  }

  std::string to_string() const {
    std::string s = "[";
    bool        first = true;
    for (int i = 1; i <= static_cast<int>(n()); ++i) {
      int const t = (*this)(i);
      if (t == 0) {
        continue;
      }
      s += (first ? "" : ",") + std::to_string(i) + "->" + std::to_string(t);
      first = false;
    }
    return s + "]";
  }

  static int point(int signed_label, std::size_t n) {
    return signed_label > 0 ? signed_label - 1
                            : static_cast<int>(n) - signed_label - 1;
  }
  static int label(std::size_t p, std::size_t n) {
    return p < n ? static_cast<int>(p) + 1 : -static_cast<int>(p - n) - 1;
  }

  friend bool operator==(SignedPartialMap const&, SignedPartialMap const&)
      = default;
  friend auto operator<=>(SignedPartialMap const&, SignedPartialMap const&)
      = default;

 private:
  static std::size_t negate(std::size_t p, std::size_t m) {
    return p < m ? p + m : p - m;
  }

  PartialMap base_;
};

inline SignedPartialMap compose(SignedPartialMap const& a,
                                SignedPartialMap const& b) {
  return SignedPartialMap(compose(a.base(), b.base()));
}

inline SignedPartialMap inverse(SignedPartialMap const& a) {
  return SignedPartialMap(inverse(a.base()));
}

// Every partial permutation of {1..n}, the symmetric inverse monoid I_n.
inline std::vector<PartialMap> all_partial_maps(std::size_t n) {
  std::vector<PartialMap> out;
  std::vector<int>        img(n, -1);
  std::vector<bool>       used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.emplace_back(n, img);
      return;
    }
    img[i] = -1;
    rec(i + 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j]) {
        used[j] = true;
        img[i]  = static_cast<int>(j);
        rec(i + 1);
        used[j] = false;
      }
    }
    img[i] = -1;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Every partial signed permutation of {±1..±n}, the monoid J_n.
inline std::vector<SignedPartialMap> all_signed_partial_maps(std::size_t n) {
  std::vector<SignedPartialMap> out;
  std::vector<int>              img(n, 0);
  std::vector<bool>             used(n + 1, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(SignedPartialMap::from_signed(n, img));
      return;
    }
    img[i] = 0;
    rec(i + 1);
    for (int j = 1; j <= static_cast<int>(n); ++j) {
      if (!used[j]) {
        used[j] = true;
        for (int s : {1, -1}) {
          img[i] = s * j;
          rec(i + 1);
        }
        used[j] = false;
      }
    }
    img[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace refmon
