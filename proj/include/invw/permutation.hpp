#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invw {

/// A bijection of {1, ..., m}. Points are 1-indexed in every public
/// accessor; the degree is explicit and never inferred from moved points.
class Permutation {
 public:
  using Point = std::size_t;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 1);

  /// `images[i - 1]` is the image of point i. Throws std::invalid_argument
  /// unless `images` is a bijection of {1..m}.
  static Permutation from_images(std::span<const Point> images);

  /// Product of the given disjoint or overlapping cycles, applied left to
  /// right. Throws on points out of range or repeated within one cycle.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  static Permutation transposition(std::size_t degree, Point a, Point b);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point point) const;
  Point image(Point point) const { return (*this)(point); }

  /// Zero-based image table, entry i is the image of i (both 0-based).
  const std::vector<std::uint16_t>& raw_images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t order() const;
  std::vector<Point> support() const;

  /// Canonical cycle notation, e.g. "(1 2 3)(4 5)"; identity prints "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {}
  std::vector<std::uint16_t> images_;
};

/// i -> q(p(i)): the left factor acts first.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// Composition of a whole sequence, left factor first. `degree` is used
/// when the sequence is empty.
Permutation compose_all(std::span<const Permutation> factors, std::size_t degree);

Permutation parse_cycles(std::string_view text, std::size_t degree);

struct CycleDecomposition {
  /// Each cycle starts at its smallest point; cycles ordered by that point.
  std::vector<std::vector<Permutation::Point>> cycles;
  std::vector<Permutation::Point> fixed_points;
  /// counts[j] = number of cycles (length >= 2) with length = j mod 4.
  std::array<std::size_t, 4> counts{};
};

CycleDecomposition cycle_decomposition(const Permutation& p);

enum class Parity { even, odd };

Parity parity(const Permutation& p);

inline bool is_even(const Permutation& p) { return parity(p) == Parity::even; }

std::string_view to_string(Parity parity);

}  // namespace invw
