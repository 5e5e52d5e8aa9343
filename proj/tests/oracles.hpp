#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's linear algebra or polynomial code.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "solvlie/matrix.hpp"

namespace oracle {

using solvlie::QMatrix;
using solvlie::Rational;

// Cofactor expansion along the first row.
inline Rational det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k == 1) return m[0][0];
  Rational sum = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * det(minor);
    sum += (c % 2 ? -term : term);
  }
  return sum;
}

// Largest k with a nonzero k x k minor. Exponential; keep inputs small.
inline std::size_t minor_rank(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t best = 0;
  const auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  };
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    bool found = false;
    for (const auto& rs : subsets(rows, k)) {
      for (const auto& cs : subsets(cols, k)) {
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rs[i], cs[j]);
        if (det(sub) != 0) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
    best = k;
  }
  return best;
}

// Gaussian elimination mod a 61-bit prime.
inline std::size_t modular_rank(std::vector<std::vector<std::int64_t>> a) {
  constexpr std::uint64_t p = (1ULL << 61) - 1;
  const auto mul = [](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  };
  const auto inv = [&](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<std::uint64_t>> m;
  for (auto& row : a) {
    std::vector<std::uint64_t> r;
    for (auto v : row) r.push_back(v >= 0 ? static_cast<std::uint64_t>(v) % p : p - static_cast<std::uint64_t>(-v) % p);
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t f = mul(m[r][c], iv);
      for (std::size_t j = c; j < cols; ++j) m[r][j] = (m[r][j] + p - mul(f, m[rank][j])) % p;
    }
    ++rank;
  }
  return rank;
}

// [e_k, e_n] = e_{k-1} written out directly (1-based labels, result as a
// coefficient vector of length n).
inline std::vector<std::int64_t> nil_bracket(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<std::int64_t> v(n);
  if (b == n && a >= 2 && a <= n - 1) v[a - 2] = 1;
  if (a == n && b >= 2 && b <= n - 1) v[b - 2] = -1;
  return v;
}

// Dimension of the space of D with D[x,y] = [Dx,y] + [x,Dy] on n(n,1),
// D(e_a) = sum_b D_ab e_b, unknown D_ab at index (a-1)*n + (b-1).
inline std::size_t nil_derivation_dimension(std::size_t n) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b)
      for (std::size_t c = 1; c <= n; ++c) {
        std::vector<std::int64_t> row(n * n);
        const auto br = nil_bracket(n, a, b);
        for (std::size_t m = 1; m <= n; ++m) row[(m - 1) * n + (c - 1)] += br[m - 1];
        for (std::size_t m = 1; m <= n; ++m) row[(a - 1) * n + (m - 1)] -= nil_bracket(n, m, b)[c - 1];
        for (std::size_t m = 1; m <= n; ++m) row[(b - 1) * n + (m - 1)] -= nil_bracket(n, a, m)[c - 1];
        rows.push_back(std::move(row));
      }
  return n * n - modular_rank(rows);
}

// xi_k evaluated straight from its defining sum, e[i] = e_{i+1}.
inline Rational xi_value(std::size_t k, const std::vector<Rational>& e) {
  if (k == 0) return e[0];
  const auto fact = [](std::size_t m) {
    Rational f = 1;
    for (std::size_t i = 2; i <= m; ++i) f *= static_cast<long>(i);
    return f;
  };
  const auto pw = [](Rational b, std::size_t m) {
    Rational r = 1;
    while (m--) r *= b;
    return r;
  };
  Rational v = (k % 2 ? -1 : 1) * Rational(static_cast<long>(k)) / fact(k + 1) * pw(e[1], k + 1);
  for (std::size_t j = 0; j < k; ++j)
    v += (j % 2 ? -1 : 1) / fact(j) * pw(e[1], j) * e[k + 1 - j] * pw(e[0], k - j);
  return v;
}

// Central difference of f along direction v at x, in doubles.
inline double directional_derivative(const std::function<double(const std::vector<double>&)>& f,
                                     const std::vector<double>& x, const std::vector<double>& v, double h = 1e-5) {
  std::vector<double> xp = x, xm = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xp[i] += h * v[i];
    xm[i] -= h * v[i];
  }
  return (f(xp) - f(xm)) / (2 * h);
}

}  // namespace oracle
