#include "zerosum/lattice.hpp"

#include <algorithm>
#include <utility>

#include "zerosum/errors.hpp"

namespace zerosum {

namespace {

// Columns of the working matrix: `top` rows of M followed by carried rows.
using Column = std::vector<BigInt>;

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void axpy(Column& target, const BigInt& q, const Column& source) {
  for (std::size_t i = 0; i < target.size(); ++i)
    if (!source[i].is_zero()) target[i] -= q * source[i];
}

// Column-reduces the first `top` rows to echelon form using unimodular column
// operations. Returns the rank; columns [rank, n) have a zero top block.
std::size_t column_echelon(std::vector<Column>& cols, std::size_t top) {
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < top && pivot < cols.size(); ++r) {
    while (true) {
      std::size_t best = cols.size();
      for (std::size_t c = pivot; c < cols.size(); ++c) {
        if (cols[c][r].is_zero()) continue;
        if (best == cols.size() || abs_value(cols[c][r]) < abs_value(cols[best][r])) best = c;
      }
      if (best == cols.size()) break;  // row already zero beyond the pivot
      std::swap(cols[pivot], cols[best]);
      bool clean = true;
      for (std::size_t c = pivot + 1; c < cols.size(); ++c) {
        if (cols[c][r].is_zero()) continue;
        const BigInt q = cols[c][r] / cols[pivot][r];
        axpy(cols[c], q, cols[pivot]);
        if (!cols[c][r].is_zero()) clean = false;
      }
      if (clean) {
        ++pivot;
        break;
      }
    }
  }
  return pivot;
}

std::vector<Column> load(const ExponentMatrix& m, std::size_t carry_rows) {
  std::vector<Column> cols(m.cols, Column(m.rows + carry_rows));
  for (std::size_t c = 0; c < m.cols; ++c)
    for (std::size_t r = 0; r < m.rows; ++r) cols[c][r] = m.at(r, c);
  return cols;
}

void verify_kernel_vector(const ExponentMatrix& m, const BigVector& z) {
  for (std::size_t r = 0; r < m.rows; ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < m.cols; ++c) acc += m.at(r, c) * z[c];
    if (!acc.is_zero()) throw ConsistencyFault("integer_kernel produced a vector outside the kernel");
  }
}

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs_value(a);
  b = abs_value(b);
  while (!b.is_zero()) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
std::tuple<BigInt, BigInt, BigInt> ext_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (!r.is_zero()) {
    const BigInt q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

int to_int(const BigInt& x) { return x.convert_to<int>(); }

}  // namespace

KernelBasis integer_kernel(const ExponentMatrix& m) {
  auto cols = load(m, m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) cols[c][m.rows + c] = 1;
  const std::size_t rank = column_echelon(cols, m.rows);
  KernelBasis basis{m.cols, {}};
  for (std::size_t c = rank; c < cols.size(); ++c) {
    BigVector z(cols[c].begin() + static_cast<std::ptrdiff_t>(m.rows), cols[c].end());
    verify_kernel_vector(m, z);
    basis.vectors.push_back(std::move(z));
  }
  return basis;
}

std::size_t matrix_rank(const ExponentMatrix& m) {
  auto cols = load(m, 0);
  return column_echelon(cols, m.rows);
}

BigInt length_gcd(const KernelBasis& basis) {
  BigInt g = 0;
  for (const auto& z : basis.vectors) {
    BigInt s = 0;
    for (const auto& x : z) s += x;
    g = gcd_big(g, s);
  }
  return g;
}

int min_delta(const ExponentMatrix& m) {
  auto cols = load(m, 1);
  for (std::size_t c = 0; c < m.cols; ++c) cols[c][m.rows] = 1;
  const std::size_t rank = column_echelon(cols, m.rows);
  BigInt g = 0;
  for (std::size_t c = rank; c < cols.size(); ++c) g = gcd_big(g, cols[c][m.rows]);
  return to_int(g);
}

int min_delta(const AtomSet& atoms) { return min_delta(atoms.matrix()); }

HalfFactoriality half_factoriality(const AtomSet& atoms) {
  bool route_a = true;
  for (const auto& a : atoms.atoms())
    if (cross_number(atoms.support(), a) != Rational(1)) {
      route_a = false;
      break;
    }
  const int delta = min_delta(atoms);
  const bool route_b = delta == 0;
  if (route_a != route_b)
    throw ConsistencyFault("half-factoriality routes disagree on " + atoms.support().to_string() +
                           ": cross numbers say " + (route_a ? "yes" : "no") + ", kernel lattice says " +
                           (route_b ? "yes" : "no"));
  return {route_a, delta};
}

bool is_half_factorial(const AtomSet& atoms) { return half_factoriality(atoms).half_factorial; }

std::optional<DistanceWitness> explain_min_delta(const AtomSet& atoms) {
  const auto m = atoms.matrix();
  const auto basis = integer_kernel(m);
  BigVector w(m.cols, 0);
  BigInt g = 0;
  for (const auto& z : basis.vectors) {
    BigInt s = 0;
    for (const auto& x : z) s += x;
    if (s.is_zero()) continue;
    auto [d, x, y] = ext_gcd(g, s);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = x * w[i] + y * z[i];
    g = d;
  }
  if (g.is_zero()) return std::nullopt;
  verify_kernel_vector(m, w);
  DistanceWitness out;
  out.delta = to_int(g);
  out.kernel_vector = w;
  out.longer.resize(w.size());
  out.shorter.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.longer[i] = w[i] > 0 ? w[i] : BigInt(0);
    out.shorter[i] = w[i] < 0 ? BigInt(-w[i]) : BigInt(0);
  }
  return out;
}

}  // namespace zerosum
