#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rloops {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}; images()[i] is where point i goes.
///
/// Products are read left to right: `p * q` applies p first, then q, so
/// (p * q)(x) == q(p(x)). Every module relies on this one convention.
class Perm {
 public:
  Perm() = default;

  /// Throws InputError unless `images` is a bijection of {0..n-1}.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  static Perm transposition(std::size_t degree, Point a, Point b);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  /// Lexicographic on the image sequence; the identity is the minimum.
  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  struct Trusted {};
  Perm(Trusted, std::vector<Point> images) : images_(std::move(images)) {}
  friend Perm compose(const Perm&, const Perm&);

  std::vector<Point> images_;
};

/// compose(p, q)(x) == q(p(x)). Throws InputError on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// g^-1 p g
Perm conjugate(const Perm& p, const Perm& g);

/// a^-1 b^-1 a b
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Parses 1-based disjoint cycle notation such as "(1,3)(2,4)".
/// "()", "id" and "I" denote the identity. Whitespace between cycles is
/// tolerated; points must lie in 1..degree.
Perm parse_cycles(std::string_view text, std::size_t degree);

/// 1-based cycle notation, fixed points omitted; the identity prints as "()".
std::string format_cycles(const Perm& p);

}  // namespace rloops
