#pragma once

// Reference implementations that share no code with the library.

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

/// One-line notation of s_{i_1} ... s_{i_k} in S_{n+1}; letters 0-based.
inline std::vector<int> permutation_of(const std::vector<int>& word, int n) {
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  for (int i : word) std::swap(p[i], p[i + 1]);
  return p;
}

inline int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

/// Tableau criterion for Bruhat order on S_m.
inline bool tableau_leq(const std::vector<int>& u, const std::vector<int>& v) {
  const int m = static_cast<int>(u.size());
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      int cu = 0, cv = 0;
      for (int j = 0; j <= i; ++j) {
        cu += u[j] >= k;
        cv += v[j] >= k;
      }
      if (cu > cv) return false;
    }
  }
  return true;
}

}  // namespace oracle
