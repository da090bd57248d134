#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "mellin/exact.hpp"

namespace mellin::exact {
namespace {

constexpr std::size_t kPrefill = 65;

// Append-only table: readers take a shared lock, a miss upgrades to an
// exclusive lock and regrows the whole prefix with `fill`.
template <typename T, typename Fill>
class GrowableTable {
 public:
  explicit GrowableTable(Fill fill) : fill_(std::move(fill)) {}

  T at(std::size_t index) {
    {
      std::shared_lock lock(mutex_);
      if (index < values_.size()) return values_[index];
    }
    std::unique_lock lock(mutex_);
    if (index >= values_.size()) {
      const std::size_t target = std::max({index + 1, 2 * values_.size(), kPrefill});
      values_ = fill_(target);
    }
    return values_[index];
  }

 private:
  Fill fill_;
  std::shared_mutex mutex_;
  std::vector<T> values_;
};

template <typename T, typename Fill>
GrowableTable<T, Fill> make_table(Fill fill) {
  return GrowableTable<T, Fill>(std::move(fill));
}

// Tangent numbers T_1..T_m by the Brent-Harvey in-place recurrence; then
// B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
std::vector<Rational> fill_bernoulli(std::size_t count) {
  std::vector<Rational> b(count, Rational(0));
  b[0] = Rational(1);
  if (count > 1) b[1] = Rational(-1, 2);
  const std::size_t m = count / 2;
  if (m == 0) return b;
  std::vector<Integer> t(m + 1);
  t[1] = 1;
  for (std::size_t k = 2; k <= m; ++k) t[k] = Integer(static_cast<unsigned long>(k - 1)) * t[k - 1];
  for (std::size_t k = 2; k <= m; ++k) {
    for (std::size_t j = k; j <= m; ++j) {
      t[j] = Integer(static_cast<unsigned long>(j - k)) * t[j - 1] +
             Integer(static_cast<unsigned long>(j - k + 2)) * t[j];
    }
  }
  for (std::size_t k = 1; k <= m && 2 * k < count; ++k) {
    const Integer four_k = pow2(static_cast<unsigned>(2 * k));
    Integer num = Integer(static_cast<unsigned long>(2 * k)) * t[k];
    if (k % 2 == 0) num = -num;
    b[2 * k] = Rational(num, four_k * (four_k - 1));
  }
  return b;
}

// sech x * cosh x = 1 written on exponential generating functions:
// sum_{j<=k} C(2k,2j) E_{2j} = 0 for k >= 1.
std::vector<Integer> fill_euler(std::size_t count) {
  std::vector<Integer> e(count, Integer(0));
  e[0] = 1;
  for (std::size_t n = 2; n < count; n += 2) {
    Integer acc = 0;
    for (std::size_t j = 0; j < n; j += 2) acc += binomial(static_cast<long>(n), static_cast<long>(j)) * e[j];
    e[n] = -acc;
  }
  return e;
}

std::vector<Rational> fill_harmonic(std::size_t count) {
  std::vector<Rational> h(count);
  h[0] = Rational(0);
  for (std::size_t k = 1; k < count; ++k) h[k] = h[k - 1] + Rational(1, static_cast<long>(k));
  return h;
}

using Row = std::vector<Integer>;

// <n,k> = (k+1)<n-1,k> + (n-k)<n-1,k-1>
std::vector<Row> fill_eulerian_a(std::size_t count) {
  std::vector<Row> rows(count);
  rows[0] = Row{1};
  for (std::size_t n = 1; n < count; ++n) {
    Row& row = rows[n];
    row.assign(n, Integer(0));
    const Row& prev = rows[n - 1];
    for (std::size_t k = 0; k < n; ++k) {
      Integer v = 0;
      if (k < prev.size()) v += Integer(static_cast<unsigned long>(k + 1)) * prev[k];
      if (k >= 1) v += Integer(static_cast<unsigned long>(n - k)) * prev[k - 1];
      row[k] = v;
    }
  }
  return rows;
}

// B(n,k) = (2k+1) B(n-1,k) + (2n-2k+1) B(n-1,k-1)
std::vector<Row> fill_eulerian_b(std::size_t count) {
  std::vector<Row> rows(count);
  rows[0] = Row{1};
  for (std::size_t n = 1; n < count; ++n) {
    Row& row = rows[n];
    row.assign(n + 1, Integer(0));
    const Row& prev = rows[n - 1];
    for (std::size_t k = 0; k <= n; ++k) {
      Integer v = 0;
      if (k < prev.size()) v += Integer(static_cast<unsigned long>(2 * k + 1)) * prev[k];
      if (k >= 1) v += Integer(static_cast<unsigned long>(2 * n - 2 * k + 1)) * prev[k - 1];
      row[k] = v;
    }
  }
  return rows;
}

auto& bernoulli_table() {
  static auto table = make_table<Rational>(fill_bernoulli);
  return table;
}
auto& euler_table() {
  static auto table = make_table<Integer>(fill_euler);
  return table;
}
auto& harmonic_table() {
  static auto table = make_table<Rational>(fill_harmonic);
  return table;
}
auto& eulerian_a_table() {
  static auto table = make_table<Row>(fill_eulerian_a);
  return table;
}
auto& eulerian_b_table() {
  static auto table = make_table<Row>(fill_eulerian_b);
  return table;
}

}  // namespace

Rational bernoulli(unsigned n) { return bernoulli_table().at(n); }

Integer euler_number(unsigned n) {
  if (n % 2 == 1) return 0;
  return euler_table().at(n);
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational harmonic(unsigned n) { return harmonic_table().at(n); }

std::vector<Integer> eulerian_row(EulerianKind kind, unsigned n) {
  return (kind == EulerianKind::A ? eulerian_a_table() : eulerian_b_table()).at(n);
}

Integer eulerian(EulerianKind kind, long n, long k) {
  if (n < 0 || k < 0) return 0;
  const Row row = eulerian_row(kind, static_cast<unsigned>(n));
  if (static_cast<std::size_t>(k) >= row.size()) return 0;
  return row[static_cast<std::size_t>(k)];
}

}  // namespace mellin::exact
