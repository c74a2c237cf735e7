#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilden {

// Permutation of {0, ..., degree-1}, stored as the image vector.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  // Swaps adjacent points i and i+1 (0-based).
  static Permutation transposition(int degree, int i) {
    if (i < 0 || i + 1 >= degree) throw std::invalid_argument("transposition out of range");
    Permutation p = identity(degree);
    std::swap(p.img_[i], p.img_[i + 1]);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  // Composition in application order: (a.then(b))(x) == b(a(x)).
  Permutation then(const Permutation& next) const {
    if (degree() != next.degree()) throw std::invalid_argument("degree mismatch");
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[i] = next.img_[img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // One-line notation on 1-based points, e.g. "[3,4,1,2]".
  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < degree(); ++i) {
      if (i) s += ',';
      s += std::to_string(img_[i] + 1);
    }
    s += ']';
    return s;
  }

private:
  std::vector<int> img_;
};

}  // namespace hilden
