#include "oracles.hpp"

#include <boost/rational.hpp>
#include <functional>
#include <map>
#include <numeric>

namespace oracle {

GroupElement add(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  GroupElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = (a.coords[i] + b.coords[i]) % g.orders()[i];
  return out;
}

bool is_zero(const GroupElement& a) {
  for (int c : a.coords)
    if (c != 0) return false;
  return true;
}

int order(const FiniteAbelianGroup& g, const GroupElement& a) {
  GroupElement x = a;
  int k = 1;
  while (!is_zero(x)) {
    x = add(g, x, a);
    ++k;
  }
  return k;
}

std::set<GroupElement> closure(const FiniteAbelianGroup& g, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> out{g.zero()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& x : std::vector<GroupElement>(out.begin(), out.end()))
      for (const auto& e : gens) grew |= out.insert(add(g, x, e)).second;
  }
  return out;
}

bool independent(const FiniteAbelianGroup& g, const std::vector<GroupElement>& family) {
  for (const auto& e : family)
    if (is_zero(e)) return false;
  std::vector<int> m(family.size(), 0);
  std::function<bool(std::size_t, GroupElement)> walk = [&](std::size_t i, GroupElement acc) {
    if (i == family.size()) {
      if (!is_zero(acc)) return true;
      for (std::size_t j = 0; j < family.size(); ++j)
        if (m[j] != 0) return false;  // m_j < ord(e_j), so m_j e_j != 0
      return true;
    }
    const int ord = order(g, family[i]);
    for (m[i] = 0; m[i] < ord; ++m[i]) {
      if (!walk(i + 1, acc)) return false;
      acc = add(g, acc, family[i]);
    }
    m[i] = 0;
    return true;
  };
  return walk(0, g.zero());
}

namespace {

bool zero_sum(const SupportSet& s, const std::vector<int>& v) {
  const auto& g = s.group();
  GroupElement acc = g.zero();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (int k = 0; k < v[i]; ++k) acc = add(g, acc, s[i]);
  return is_zero(acc);
}

void box(const std::vector<int>& caps, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> v(caps.size(), 0);
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == caps[i]) v[i++] = 0;
    if (i == v.size()) return;
    ++v[i];
  }
}

bool leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

std::vector<SequenceVec> atoms(const SupportSet& s) {
  std::vector<int> caps;
  for (std::size_t i = 0; i < s.size(); ++i) caps.push_back(order(s.group(), s[i]));
  std::vector<std::vector<int>> sums;
  box(caps, [&](const std::vector<int>& v) {
    if (std::accumulate(v.begin(), v.end(), 0) > 0 && zero_sum(s, v)) sums.push_back(v);
  });
  std::vector<SequenceVec> out;
  for (const auto& v : sums) {
    bool minimal = true;
    for (const auto& w : sums)
      if (w != v && leq(w, v)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(SequenceVec{v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::set<int> lengths_cached(const std::vector<SequenceVec>& atoms, const std::vector<int>& b,
                             std::map<std::vector<int>, std::set<int>>& seen) {
  if (std::all_of(b.begin(), b.end(), [](int x) { return x == 0; })) return {0};
  if (auto it = seen.find(b); it != seen.end()) return it->second;
  std::set<int> out;
  for (const auto& a : atoms) {
    if (!leq(a.exponents, b)) continue;
    std::vector<int> rest = b;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= a.exponents[i];
    for (int l : lengths_cached(atoms, rest, seen)) out.insert(l + 1);
  }
  seen.emplace(b, out);
  return out;
}

}  // namespace

std::set<int> lengths(const std::vector<SequenceVec>& atoms, const SequenceVec& b) {
  std::map<std::vector<int>, std::set<int>> seen;
  return lengths_cached(atoms, b.exponents, seen);
}

std::size_t rank(const zerosum::ExponentMatrix& m) {
  using Q = boost::rational<long long>;
  std::vector<std::vector<Q>> a(m.rows, std::vector<Q>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t p = rank;
    while (p < m.rows && a[p][c] == Q(0)) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || a[r][c] == Q(0)) continue;
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<SequenceVec> zero_sums_up_to(const SupportSet& s, int max_len) {
  std::vector<int> caps(s.size(), max_len);
  std::vector<SequenceVec> out;
  box(caps, [&](const std::vector<int>& v) {
    const int len = std::accumulate(v.begin(), v.end(), 0);
    if (len >= 1 && len <= max_len && zero_sum(s, v)) out.push_back(SequenceVec{v});
  });
  return out;
}

int observed_gcd(const SupportSet& s, int max_len) {
  const auto a = atoms(s);
  std::map<std::vector<int>, std::set<int>> seen;
  int g = 0;
  for (const auto& b : zero_sums_up_to(s, max_len)) {
    const auto l = lengths_cached(a, b.exponents, seen);
    for (auto it = l.begin(); it != l.end() && std::next(it) != l.end(); ++it) g = std::gcd(g, *std::next(it) - *it);
  }
  return g;
}

}  // namespace oracle
