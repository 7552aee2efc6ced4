#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cht {

/// Thrown for malformed inputs: unknown ids, inconsistent structure maps,
/// unparsable files. CLI maps it to exit code 1.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation is not defined for the given context
/// (e.g. reversal of a directed path).
struct unsupported_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Thrown when an exhaustive search exceeds its node budget. The result is
/// neither confirmed nor refuted; CLI maps it to exit code 2.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const { return parent_.size(); }

  std::size_t add() {
    parent_.push_back(parent_.size());
    size_.push_back(1);
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true if the two elements were in distinct classes.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

  std::size_t class_count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }

  /// Dense renumbering: result[i] is the class index of element i,
  /// classes numbered 0..k-1 in order of first appearance.
  std::vector<int> labels() {
    std::vector<int> lab(parent_.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      std::size_t r = find(i);
      if (lab[r] < 0) lab[r] = next++;
      lab[i] = lab[r];
    }
    return lab;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct VecHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const {
    std::size_t seed = v.size();
    for (const T& x : v) hash_combine(seed, std::hash<T>{}(x));
    return seed;
  }
};

}  // namespace cht
