#include "rloops/perm.hpp"

#include <algorithm>
#include <charconv>

#include "rloops/error.hpp"

namespace rloops {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw InputError("permutation images are not a bijection of 0.." +
                       std::to_string(images_.size()) + "-1");
    }
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  return Perm(Trusted{}, std::move(img));
}

Perm Perm::transposition(std::size_t degree, Point a, Point b) {
  if (a >= degree || b >= degree) throw InputError("transposition point out of range");
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  std::swap(img[a], img[b]);
  return Perm(Trusted{}, std::move(img));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Perm(Trusted{}, std::move(inv));
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw InputError("cannot compose permutations of degree " + std::to_string(p.degree()) +
                     " and " + std::to_string(q.degree()));
  }
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = q.images_[p.images_[i]];
  return Perm(Perm::Trusted{}, std::move(img));
}

Perm conjugate(const Perm& p, const Perm& g) { return g.inverse() * p * g; }

Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image sequence
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

}  // namespace

Perm parse_cycles(std::string_view text, std::size_t degree) {
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);

  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  if (text.empty() || text == "()" || text == "id" || text == "I") return Perm(std::move(img));

  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("malformed cycle notation '" + std::string(text) + "': " + why);
  };

  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw fail("expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw fail("unterminated cycle");
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;

    // Points are separated by commas and/or blanks: "(1,2,3)" or "(1 2 3)".
    std::vector<Point> cycle;
    std::size_t start = 0;
    while (true) {
      while (start < body.size() && (is_space(body[start]) || body[start] == ',')) ++start;
      if (start == body.size()) break;
      std::size_t end = start;
      while (end < body.size() && !is_space(body[end]) && body[end] != ',') ++end;
      std::string_view tok = body.substr(start, end - start);
      unsigned long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw fail("bad point '" + std::string(tok) + "'");
      if (value < 1 || value > degree)
        throw fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      const Point p = static_cast<Point>(value - 1);
      if (used[p]) throw fail("point " + std::to_string(value) + " repeated");
      used[p] = true;
      cycle.push_back(p);
      start = end;
    }
    if (cycle.empty()) throw fail("empty cycle");
    if (cycle.size() == 1) throw fail("one-point cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start) continue;
    out += '(';
    Point x = start;
    bool first = true;
    do {
      if (!first) out += ',';
      first = false;
      out += std::to_string(x + 1);
      done[x] = true;
      x = p(x);
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace rloops
