#include "rloops/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rloops::oracle {

namespace {

void partitions_rec(std::size_t n, std::vector<Elem>& cur, Elem max_label, std::vector<std::vector<Elem>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (Elem l = 0; l <= max_label + 1; ++l) {
    cur.push_back(l);
    partitions_rec(n, cur, std::max(max_label, l), out);
    cur.pop_back();
  }
}

// Equivalence relation as a dense boolean matrix.
using Rel = std::vector<char>;

// Smallest relation containing r that is an equivalence and is compatible with
// the binary operation given by `table`.
void naive_close(Rel& r, const std::vector<Elem>& table, std::size_t m) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < m; ++i) r[i * m + i] = 1;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (r[i * m + j] && !r[j * m + i]) r[j * m + i] = 1, changed = true;
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i)
        if (r[i * m + k])
          for (std::size_t j = 0; j < m; ++j)
            if (r[k * m + j] && !r[i * m + j]) r[i * m + j] = 1, changed = true;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (!r[a * m + b]) continue;
        for (std::size_t c = 0; c < m; ++c) {
          const std::size_t ac = table[a * m + c], bc = table[b * m + c];
          const std::size_t ca = table[c * m + a], cb = table[c * m + b];
          if (!r[ac * m + bc]) r[ac * m + bc] = 1, changed = true;
          if (!r[ca * m + cb]) r[ca * m + cb] = 1, changed = true;
        }
      }
  }
}

std::vector<Elem> rel_labels(const Rel& r, std::size_t m) {
  std::vector<Elem> l(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = 0;
    while (!r[i * m + j]) ++j;
    l[i] = static_cast<Elem>(j);
  }
  return l;
}

struct Pairs {
  std::vector<std::pair<Elem, Elem>> list;
  std::vector<long> index;  // index[x * n + y], -1 when (x, y) not in β
  std::vector<Elem> table;
};

Pairs pairs_of(const RightLoop& s, const Congruence& beta) {
  const std::size_t n = s.order();
  Pairs p;
  p.index.assign(n * n, -1);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (beta.class_of(x) == beta.class_of(y)) {
        p.index[x * n + y] = static_cast<long>(p.list.size());
        p.list.emplace_back(x, y);
      }
  const std::size_t m = p.list.size();
  p.table.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Elem a = s.op(p.list[i].first, p.list[j].first);
      const Elem b = s.op(p.list[i].second, p.list[j].second);
      p.table[i * m + j] = static_cast<Elem>(p.index[a * n + b]);
    }
  return p;
}

// Conditions (i) and the injective half of (ii) only get harder to satisfy
// as the relation grows, so they prune the search.
bool downward_ok(const Pairs& p, const Rel& r, const Congruence& gamma) {
  const std::size_t m = p.list.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!r[a * m + b] || a == b) continue;
      const Elem x = p.list[a].first, u = p.list[b].first;
      if (gamma.class_of(x) != gamma.class_of(u)) return false;  // (i)
      if (x == u) return false;                                  // π injective
    }
  return true;
}

bool all_conditions(const Pairs& p, const Rel& r, const Congruence& gamma, std::size_t n) {
  const std::size_t m = p.list.size();
  auto rel = [&](Elem x, Elem y, Elem u, Elem v) {
    return r[static_cast<std::size_t>(p.index[x * n + y]) * m + static_cast<std::size_t>(p.index[u * n + v])] != 0;
  };
  // (i)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (r[a * m + b] && gamma.class_of(p.list[a].first) != gamma.class_of(p.list[b].first)) return false;
  // (ii): π from the class of (x, y) onto the γ-class of x is a bijection.
  for (std::size_t a = 0; a < m; ++a) {
    const Elem x = p.list[a].first;
    std::vector<int> hits(n, 0);
    for (std::size_t b = 0; b < m; ++b)
      if (r[a * m + b]) ++hits[p.list[b].first];
    for (Elem u = 0; u < n; ++u) {
      const int want = gamma.class_of(u) == gamma.class_of(x) ? 1 : 0;
      if (hits[u] != want) return false;
    }
  }
  // (iii)
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (gamma.class_of(x) == gamma.class_of(y) && !rel(x, x, y, y)) return false;
  // (iv)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (r[a * m + b]) {
        const auto [x, y] = p.list[a];
        const auto [u, v] = p.list[b];
        if (!rel(y, x, v, u)) return false;
      }
  // (v)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!r[a * m + b]) continue;
      const auto [x, y] = p.list[a];
      const auto [u, v] = p.list[b];
      for (Elem z = 0; z < n; ++z)
        for (Elem w = 0; w < n; ++w) {
          if (p.index[y * n + z] < 0 || p.index[v * n + w] < 0) continue;
          if (rel(y, z, v, w) && !rel(x, z, u, w)) return false;
        }
    }
  return true;
}

}  // namespace

std::vector<std::vector<Elem>> all_partitions(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  if (n == 0) return {{}};
  std::vector<Elem> cur{0};
  partitions_rec(n, cur, 0, out);
  return out;
}

bool is_congruence_naive(const RightLoop& s, const std::vector<Elem>& labels) {
  const std::size_t n = s.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem u = 0; u < n; ++u) {
      if (labels[x] != labels[u]) continue;
      for (Elem y = 0; y < n; ++y)
        for (Elem v = 0; v < n; ++v)
          if (labels[y] == labels[v] && labels[s.op(x, y)] != labels[s.op(u, v)]) return false;
    }
  return true;
}

std::vector<Congruence> all_congruences_naive(const RightLoop& s) {
  std::vector<Congruence> out;
  for (const auto& l : all_partitions(s.order()))
    if (is_congruence_naive(s, l)) out.push_back(Congruence::from_labels(l));
  std::sort(out.begin(), out.end());
  return out;
}

bool quotient_is_group(const RightLoop& s, const Congruence& c) {
  const std::size_t n = s.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (c.class_of(s.op(s.op(x, y), z)) != c.class_of(s.op(x, s.op(y, z)))) return false;
  return true;
}

bool quotient_is_abelian_group(const RightLoop& s, const Congruence& c) {
  if (!quotient_is_group(s, c)) return false;
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem y = 0; y < s.order(); ++y)
      if (c.class_of(s.op(x, y)) != c.class_of(s.op(y, x))) return false;
  return true;
}

namespace {

template <class Pred>
std::optional<Congruence> minimum_with(const RightLoop& s, Pred pred) {
  std::vector<Congruence> good;
  for (const auto& c : all_congruences_naive(s))
    if (pred(s, c)) good.push_back(c);
  for (const auto& c : good)
    if (std::all_of(good.begin(), good.end(), [&](const Congruence& d) { return c.refines(d); })) return c;
  return std::nullopt;
}

}  // namespace

std::optional<Congruence> minimum_group_congruence(const RightLoop& s) { return minimum_with(s, quotient_is_group); }

std::optional<Congruence> minimum_abelian_congruence(const RightLoop& s) {
  return minimum_with(s, quotient_is_abelian_group);
}

CenteringSearch find_centering_congruence(const RightLoop& s, const Congruence& beta, const Congruence& gamma) {
  const std::size_t n = s.order();
  const Pairs p = pairs_of(s, beta);
  const std::size_t m = p.list.size();
  CenteringSearch out;

  // Every centering congruence contains the pairs demanded by (iii).
  Rel base(m * m, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (gamma.class_of(x) == gamma.class_of(y))
        base[static_cast<std::size_t>(p.index[x * n + x]) * m + static_cast<std::size_t>(p.index[y * n + y])] = 1;
  naive_close(base, p.table, m);
  if (!downward_ok(p, base, gamma)) return out;

  // Breadth-first over congruences above the base that still pass the
  // downward-closed conditions. Every such congruence is reached through a
  // chain of single-pair joins that stays below it.
  std::set<std::vector<Elem>> seen{rel_labels(base, m)};
  std::deque<Rel> queue{base};
  while (!queue.empty()) {
    Rel r = std::move(queue.front());
    queue.pop_front();
    ++out.candidates;
    if (all_conditions(p, r, gamma, n)) {
      out.exists = true;
      const Congruence found = Congruence::from_labels(rel_labels(r, m));
      out.witness = std::vector<Elem>(found.labels().begin(), found.labels().end());
      return out;
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        if (r[a * m + b]) continue;
        Rel next = r;
        next[a * m + b] = 1;
        naive_close(next, p.table, m);
        if (!downward_ok(p, next, gamma)) continue;
        if (seen.insert(rel_labels(next, m)).second) queue.push_back(std::move(next));
      }
  }
  return out;
}

}  // namespace rloops::oracle
