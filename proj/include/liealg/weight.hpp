#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace liealg {

/// A weight in Dynkin-label coordinates (the fundamental-weight basis).
/// Labels may be negative; the weight is dominant iff all labels are >= 0.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : labels_(rank, 0) {}
  explicit Weight(std::vector<int> labels) : labels_(std::move(labels)) {}
  Weight(std::initializer_list<int> labels) : labels_(labels) {}

  static Weight zero(std::size_t rank) { return Weight(rank); }
  /// The fundamental weight with a 1 at zero-based position `node`.
  static Weight fundamental(std::size_t rank, std::size_t node);

  /// Parses a bracketed integer list such as "[0,0,1]".
  static Weight parse(std::string_view text);

  std::size_t rank() const { return labels_.size(); }
  int operator[](std::size_t i) const { return labels_[i]; }
  int& operator[](std::size_t i) { return labels_[i]; }
  std::span<const int> labels() const { return labels_; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight operator-() const;
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight w);

  auto operator<=>(const Weight&) const = default;

  /// "[a,b,c]", no spaces.
  std::string str() const;

 private:
  std::vector<int> labels_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace liealg
