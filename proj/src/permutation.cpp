#include "invw/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace invw {

namespace {

void check_degree(std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  if (degree > 0xFFFF) throw std::invalid_argument("permutation degree too large");
}

}  // namespace

Permutation::Permutation(std::size_t degree) {
  check_degree(degree);
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

Permutation Permutation::from_images(std::span<const Point> images) {
  check_degree(images.size());
  std::vector<std::uint16_t> raw(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point image = images[i];
    if (image < 1 || image > images.size())
      throw std::invalid_argument("image " + std::to_string(image) + " out of range");
    if (seen[image - 1])
      throw std::invalid_argument("image " + std::to_string(image) + " repeated");
    seen[image - 1] = true;
    raw[i] = static_cast<std::uint16_t>(image - 1);
  }
  return Permutation(std::move(raw));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) continue;
    std::vector<bool> used(degree, false);
    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point a = cycle[i];
      if (a < 1 || a > degree)
        throw std::invalid_argument("point " + std::to_string(a) + " exceeds degree " +
                                    std::to_string(degree));
      if (used[a - 1]) throw std::invalid_argument("repeated point " + std::to_string(a));
      used[a - 1] = true;
      c.images_[a - 1] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()] - 1);
    }
    result = compose(result, c);
  }
  return result;
}

Permutation Permutation::transposition(std::size_t degree, Point a, Point b) {
  if (a == b) throw std::invalid_argument("transposition needs two distinct points");
  return from_cycles(degree, {{a, b}});
}

Permutation::Point Permutation::operator()(Point point) const {
  if (point < 1 || point > images_.size())
    throw std::out_of_range("point " + std::to_string(point) + " out of range");
  return static_cast<Point>(images_[point - 1]) + 1;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint16_t>(i);
  return Permutation(std::move(inv));
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& cycle : cycle_decomposition(*this).cycles)
    result = std::lcm(result, cycle.size());
  return result;
}

std::vector<Permutation::Point> Permutation::support() const {
  std::vector<Point> moved;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) moved.push_back(i + 1);
  return moved;
}

std::string Permutation::to_string() const {
  const auto cd = cycle_decomposition(*this);
  if (cd.cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cd.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  const auto& a = p.raw_images();
  const auto& b = q.raw_images();
  std::vector<Permutation::Point> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = static_cast<std::size_t>(b[a[i]]) + 1;
  return Permutation::from_images(images);
}

Permutation compose_all(std::span<const Permutation> factors, std::size_t degree) {
  Permutation result(degree);
  for (const auto& f : factors) result = compose(result, f);
  return result;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  check_degree(degree);
  std::vector<std::vector<Permutation::Point>> cycles;
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty cycle notation");
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("malformed cycle notation: expected '(' at offset " +
                                  std::to_string(i));
    ++i;
    std::vector<Permutation::Point> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw std::invalid_argument("malformed cycle notation: missing ')'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument(std::string("malformed cycle notation: unexpected '") +
                                    text[i] + "'");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree)
          throw std::invalid_argument("point exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (value < 1) throw std::invalid_argument("points are 1-indexed");
      if (used[value - 1]) throw std::invalid_argument("repeated point " + std::to_string(value));
      used[value - 1] = true;
      cycle.push_back(value);
    }
    if (cycle.size() == 1) used[cycle.front() - 1] = true;
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition cd;
  const auto& images = p.raw_images();
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Permutation::Point> cycle;
    for (std::size_t x = start; !seen[x]; x = images[x]) {
      seen[x] = true;
      cycle.push_back(x + 1);
    }
    if (cycle.size() == 1) {
      cd.fixed_points.push_back(start + 1);
    } else {
      ++cd.counts[cycle.size() % 4];
      cd.cycles.push_back(std::move(cycle));
    }
  }
  return cd;
}

Parity parity(const Permutation& p) {
  std::size_t transpositions = 0;
  for (const auto& cycle : cycle_decomposition(p).cycles) transpositions += cycle.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::string_view to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

}  // namespace invw
