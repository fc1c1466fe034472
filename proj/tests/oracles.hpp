// Brute-force reference computations shared by the unit and acceptance tests.
// Everything here works on plain strings and small integers so that it stays
// independent of the library code paths it checks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

/// Every distinct nonempty subword, via all 2^n position subsets.
inline std::set<std::string> subwords(const std::string& w) {
  std::set<std::string> out;
  const std::size_t n = w.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::string v;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) v += w[i];
    }
    out.insert(v);
  }
  return out;
}

/// Σ over positions k with tau minus letter k equal to sigma of (-1)^(k+1).
inline int incidence(const std::string& sigma, const std::string& tau) {
  int sum = 0;
  for (std::size_t k = 0; k < tau.size(); ++k) {
    std::string t = tau;
    t.erase(k, 1);
    if (t == sigma) sum += k % 2 == 0 ? -1 : 1;
  }
  return sum;
}

/// -1 + Σ (-1)^(|v|-1) over distinct nonempty subwords.
inline std::int64_t euler(const std::string& w) {
  std::int64_t e = -1;
  for (const std::string& v : subwords(w)) e += v.size() % 2 == 1 ? 1 : -1;
  return e;
}

inline std::vector<std::size_t> f_vector(const std::string& w) {
  std::vector<std::size_t> f(w.size(), 0);
  for (const std::string& v : subwords(w)) ++f[v.size() - 1];
  return f;
}

inline bool is_subword(const std::string& v, const std::string& w) {
  std::size_t i = 0;
  for (char c : w) {
    if (i < v.size() && v[i] == c) ++i;
  }
  return i == v.size();
}

/// ava with a absent from v.
inline bool circular(const std::string& w) {
  if (w.size() < 2 || w.front() != w.back()) return false;
  return w.substr(1, w.size() - 2).find(w.front()) == std::string::npos;
}

/// Minimum number of circular factors over all splittings, or -1 if none.
/// Trying every split point keeps this independent of the greedy rule.
inline int spherical_factors(const std::string& w) {
  std::vector<int> best(w.size() + 1, -1);
  best[0] = 0;
  for (std::size_t end = 1; end <= w.size(); ++end) {
    for (std::size_t start = 0; start < end; ++start) {
      if (best[start] < 0 || !circular(w.substr(start, end - start))) continue;
      const int q = best[start] + 1;
      if (best[end] < 0 || q < best[end]) best[end] = q;
    }
  }
  return best[w.size()];
}

inline bool conical(const std::string& w) {
  return !w.empty() && w.find(w.front(), 1) == std::string::npos;
}

inline std::string canonical(const std::string& w) {
  std::map<char, char> rename;
  std::string out;
  for (char c : w) {
    auto it = rename.find(c);
    if (it == rename.end()) it = rename.emplace(c, static_cast<char>('a' + rename.size())).first;
    out += it->second;
  }
  return out;
}

/// Run-length exponents and letters.
struct Runs {
  std::string letters;
  std::vector<std::size_t> exps;
};

inline Runs runs(const std::string& w) {
  Runs r;
  for (char c : w) {
    if (!r.letters.empty() && r.letters.back() == c) {
      ++r.exps.back();
    } else {
      r.letters += c;
      r.exps.push_back(1);
    }
  }
  return r;
}

/// Every β <= α, by odometer.
inline std::vector<std::vector<std::size_t>> all_tuples(const std::vector<std::size_t>& alpha) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> beta(alpha.size(), 0);
  for (;;) {
    out.push_back(beta);
    std::size_t i = 0;
    while (i < beta.size() && beta[i] == alpha[i]) beta[i++] = 0;
    if (i == beta.size()) break;
    ++beta[i];
  }
  return out;
}

inline std::string expand(const Runs& r, const std::vector<std::size_t>& beta) {
  std::string out;
  for (std::size_t i = 0; i < beta.size(); ++i) out += std::string(beta[i], r.letters[i]);
  return out;
}

inline std::vector<std::vector<std::size_t>> presentations(const Runs& r, const std::string& v) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& beta : all_tuples(r.exps)) {
    if (expand(r, beta) == v) out.push_back(beta);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank over Z/p by Gaussian elimination; p is a large prime.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  constexpr std::int64_t p = 1000000007;
  auto inv = [](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c] * iv % p;
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers over Z/p from string-built boundary matrices.
inline std::vector<std::size_t> betti_mod_p(const std::string& w) {
  std::vector<std::vector<std::string>> cells(w.size());
  for (const std::string& v : subwords(w)) cells[v.size() - 1].push_back(v);
  std::vector<std::size_t> ranks(w.size() + 1, 0);
  ranks[0] = cells[0].empty() ? 0 : 1;  // augmentation
  for (std::size_t n = 1; n < w.size(); ++n) {
    std::vector<std::vector<std::int64_t>> m(cells[n - 1].size(),
                                             std::vector<std::int64_t>(cells[n].size(), 0));
    for (std::size_t i = 0; i < cells[n - 1].size(); ++i) {
      for (std::size_t j = 0; j < cells[n].size(); ++j) m[i][j] = incidence(cells[n - 1][i], cells[n][j]);
    }
    ranks[n] = rank_mod_p(m);
  }
  std::vector<std::size_t> betti;
  for (std::size_t n = 0; n < w.size(); ++n) {
    betti.push_back(cells[n].size() - ranks[n] - ranks[n + 1]);
  }
  return betti;
}

/// Determinant by Bareiss elimination on exact 128-bit integers.
inline __int128 determinant(std::vector<std::vector<__int128>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  __int128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Invariant factors as quotients of determinantal divisors d_k / d_{k-1},
/// with d_k the gcd of all k x k minors.
inline std::vector<std::int64_t> invariant_factors(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::vector<__int128> d{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    __int128 g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::vector<__int128>> sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          std::vector<__int128> row;
          for (std::size_t c = 0; c < cols; ++c) {
            if (csel[c]) row.push_back(m[r][c]);
          }
          sub.push_back(row);
        }
        g = gcd128(g, determinant(sub));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(static_cast<std::int64_t>(d[k] / d[k - 1]));
  return out;
}

/// Random word over the first `alphabet` letters.
inline std::string random_word(std::mt19937& rng, std::size_t len, std::size_t alphabet) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alphabet) - 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w += static_cast<char>('a' + pick(rng));
  return w;
}

/// All words of the given length over the first `alphabet` letters.
inline std::vector<std::string> all_words(std::size_t len, std::size_t alphabet) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const std::string& w : out) {
      for (std::size_t a = 0; a < alphabet; ++a) next.push_back(w + static_cast<char>('a' + a));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
