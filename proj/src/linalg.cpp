#include "hibi/linalg.hpp"

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace hibi {

namespace {

struct Overflow : std::exception {};

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

long long checked_sub(long long a, long long b) {
  long long out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}

// Bareiss elimination; every intermediate entry is a minor, so the division
// by the previous pivot is exact.
template <class T, class Mul, class Sub>
long long bareiss_rank(std::vector<std::vector<T>> m, Mul mul, Sub sub) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const T p = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T f = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = sub(mul(p, m[i][j]), mul(f, m[rank][j])) / prev;
      m[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<long long>(rank);
}

}  // namespace

long long rank_rational(std::vector<std::vector<long long>> rows) {
  try {
    return bareiss_rank(rows, checked_mul, checked_sub);
  } catch (const Overflow&) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> big;
    for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
    return bareiss_rank(
        std::move(big), [](const cpp_int& a, const cpp_int& b) { return cpp_int(a * b); },
        [](const cpp_int& a, const cpp_int& b) { return cpp_int(a - b); });
  }
}

long long rank_mod_p(const std::vector<std::vector<long long>>& rows, long long p) {
  if (rows.empty()) return 0;
  std::vector<std::vector<long long>> m = rows;
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;
  const std::size_t nr = m.size(), nc = m[0].size();
  auto inverse = [p](long long a) {
    long long result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t pivot = rank;
    while (pivot < nr && m[pivot][c] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(m[pivot], m[rank]);
    long long inv = inverse(m[rank][c]);
    for (std::size_t i = rank + 1; i < nr; ++i) {
      if (m[i][c] == 0) continue;
      long long f = m[i][c] * inv % p;
      for (std::size_t j = c; j < nc; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

}  // namespace hibi
