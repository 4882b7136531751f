#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracles {

// S3 built directly from two-line permutation composition. Elements are the
// six permutations of {0,1,2} in lexicographic order; product is "apply the
// right factor first".
inline std::vector<std::vector<int>> s3_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };

  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> comp(3);
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      table[i][j] = index_of(comp);
    }
  return table;
}

// All bijections of 0..n-1 fixing 0 that satisfy the homomorphism law on the
// given flat table, listed as image arrays. Exponential in n; for n <= 10.
inline std::vector<std::vector<int>> brute_force_automorphisms(
    int n, const std::vector<int>& table) {
  std::vector<std::vector<int>> found;
  std::vector<int> tail(n - 1);
  std::iota(tail.begin(), tail.end(), 1);
  do {
    std::vector<int> img(n);
    img[0] = 0;
    for (int i = 1; i < n; ++i) img[i] = tail[i - 1];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = img[table[a * n + b]] == table[img[a] * n + img[b]];
    if (ok) found.push_back(img);
  } while (std::next_permutation(tail.begin(), tail.end()));
  return found;
}

inline long long totient(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace oracles
