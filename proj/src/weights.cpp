#include "evenflows/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace evenflows::weights {

namespace {

void check_rank(int n) {
  if (n < 1) throw std::domain_error("rank must be at least 1");
}

void check_root_index(RootIndex idx, int n) {
  check_rank(n);
  if (idx.k < 1 || idx.k > n - 1 || idx.p < 1 || idx.p > n - idx.k)
    throw std::domain_error("root index (k=" + std::to_string(idx.k) +
                            ",p=" + std::to_string(idx.p) + ") out of range for rank " +
                            std::to_string(n));
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace

DominantWeight::DominantWeight(int rank, std::vector<long long> c) : n(rank), coords(std::move(c)) {
  check_rank(n);
  if (coords.size() != static_cast<size_t>(n))
    throw std::domain_error("weight has " + std::to_string(coords.size()) +
                            " coordinates, expected " + std::to_string(n));
  for (int i = 0; i + 1 < n; ++i)
    if (coords[static_cast<size_t>(i)] < 0)
      throw std::domain_error("weight not dominant: coordinate " + std::to_string(i + 1) +
                              " is negative");
}

WeightVector root_weight_coords(RootIndex idx, int n) {
  check_root_index(idx, n);
  std::vector<long long> c(static_cast<size_t>(n), 0);
  if (idx.p >= 2) c[static_cast<size_t>(idx.p - 2)] -= 1;  // -omega_{p-1}, omega_0 dropped
  c[static_cast<size_t>(idx.p - 1)] += 1;
  c[static_cast<size_t>(idx.p + idx.k - 2)] += 1;
  c[static_cast<size_t>(idx.p + idx.k - 1)] -= 1;  // p+k <= n always
  return WeightVector{n, std::move(c)};
}

LiftedVector lifted_root_coords(RootIndex idx, int n) {
  check_root_index(idx, n);
  std::vector<long long> c(static_cast<size_t>(n + 1), 0);
  c[static_cast<size_t>(idx.p - 1)] -= 1;
  c[static_cast<size_t>(idx.p)] += 1;
  c[static_cast<size_t>(idx.p + idx.k - 1)] += 1;
  c[static_cast<size_t>(idx.p + idx.k)] -= 1;
  return LiftedVector{n, std::move(c)};
}

std::vector<RootIndex> even_positive_roots(int n) {
  check_rank(n);
  std::vector<RootIndex> out;
  for (int k = 2; k <= n - 1; k += 2)
    for (int p = 1; p <= n - k; ++p) out.push_back(RootIndex{k, p});
  return out;
}

std::optional<SimpleRootVector> to_simple_root_coords(const WeightVector& x) {
  const int n = x.n;
  check_rank(n);
  if (n == 1) {
    if (x.coords[0] != 0) return std::nullopt;
    return SimpleRootVector{1, {}};
  }
  // x_j = 2 m_j - m_{j-1} - m_{j+1} (m_0 = m_n = 0), x_n = -m_{n-1}.
  std::vector<long long> m(static_cast<size_t>(n - 1), 0);
  m[static_cast<size_t>(n - 2)] = -x.coords[static_cast<size_t>(n - 1)];
  for (int j = n - 1; j >= 2; --j) {
    long long up = (j <= n - 2) ? m[static_cast<size_t>(j)] : 0;
    m[static_cast<size_t>(j - 2)] = 2 * m[static_cast<size_t>(j - 1)] - up - x.coords[static_cast<size_t>(j - 1)];
  }
  long long m2 = (n >= 3) ? m[1] : 0;
  if (x.coords[0] != 2 * m[0] - m2) return std::nullopt;
  return SimpleRootVector{n, std::move(m)};
}

// An interval open at position i carries the parity of its length so far;
// it may close only at even length, and odd ones must keep running.  That
// forces the count e_i of even-parity open intervals: e_1 = 0 and
// e_{i+1} = m_i - e_i, with 0 <= e_i <= m_i throughout and all intervals
// even (m_{n-1} - e_{n-1} = 0) at the end.  Membership is this linear scan.
bool in_even_root_cone(const SimpleRootVector& m) {
  for (long long v : m.coords)
    if (v < 0) return false;
  if (m.coords.empty()) return true;
  long long e = 0;
  for (size_t i = 0; i + 1 < m.coords.size(); ++i) {
    long long next = m.coords[i] - e;
    if (next < 0 || next > m.coords[i + 1]) return false;
    e = next;
  }
  return m.coords.back() - e == 0;
}

std::optional<std::vector<RootIndex>> even_cone_decomposition(const SimpleRootVector& m) {
  if (!in_even_root_cone(m)) return std::nullopt;
  const int len = static_cast<int>(m.coords.size());
  std::vector<RootIndex> out;
  struct Open {
    int start;
    int parity;  // length so far mod 2
  };
  std::vector<Open> open;
  auto close_evens = [&](int endpos, long long count) {
    // Close the most recently opened even-parity intervals, keeping older
    // ones running as long as possible.
    for (auto it = open.rbegin(); count > 0 && it != open.rend();) {
      if (it->parity == 0) {
        out.push_back(RootIndex{endpos - it->start + 1, it->start});
        it = decltype(it)(open.erase(std::next(it).base()));
        --count;
      } else {
        ++it;
      }
    }
  };
  for (int i = 1; i <= len; ++i) {
    long long mi = m.coords[static_cast<size_t>(i - 1)];
    if (i > 1) {
      long long prev = m.coords[static_cast<size_t>(i - 2)];
      close_evens(i - 1, std::max<long long>(0, prev - mi));
      for (auto& o : open) o.parity ^= 1;
    }
    long long fresh = mi - static_cast<long long>(open.size());
    for (long long t = 0; t < fresh; ++t) open.push_back(Open{i, 1});
  }
  close_evens(len, static_cast<long long>(open.size()));
  std::sort(out.begin(), out.end(), [](RootIndex a, RootIndex b) {
    return a.p != b.p ? a.p < b.p : a.k < b.k;
  });
  return out;
}

namespace {

std::optional<SimpleRootVector> difference_in_root_lattice(const DominantWeight& mu,
                                                           const DominantWeight& lambda) {
  if (mu.n != lambda.n) throw std::domain_error("rank mismatch in weight comparison");
  std::vector<long long> d(static_cast<size_t>(lambda.n));
  for (size_t i = 0; i < d.size(); ++i) d[i] = lambda.coords[i] - mu.coords[i];
  return to_simple_root_coords(WeightVector{lambda.n, std::move(d)});
}

}  // namespace

bool even_leq(const DominantWeight& mu, const DominantWeight& lambda) {
  auto m = difference_in_root_lattice(mu, lambda);
  return m && in_even_root_cone(*m);
}

bool leq(const DominantWeight& mu, const DominantWeight& lambda) {
  auto m = difference_in_root_lattice(mu, lambda);
  if (!m) return false;
  return std::all_of(m->coords.begin(), m->coords.end(), [](long long v) { return v >= 0; });
}

bool is_even_minuscule(const DominantWeight& lambda) {
  const int n = lambda.n;
  bool odd_pos = false, even_pos = false;
  for (int i = 1; i <= n - 1; ++i)
    if (lambda.coord(i) > 0) (i % 2 ? odd_pos : even_pos) = true;
  if (odd_pos && even_pos) return false;
  long long mid = 0;
  for (int i = 2; i <= n - 2; ++i) mid += lambda.coord(i);
  return mid <= 1;
}

bool is_minuscule(const DominantWeight& lambda) {
  long long s = 0;
  for (int i = 1; i <= lambda.n - 1; ++i) s += lambda.coord(i);
  return s <= 1;
}

long long default_oracle_bound(const DominantWeight& lambda) {
  long long s = 0;
  for (int i = 1; i <= lambda.n - 1; ++i) s += lambda.coord(i);
  return static_cast<long long>(lambda.n) * s + 2;
}

// The search runs in the standard (epsilon) basis, where lambda becomes the
// weakly decreasing sequence a_j = lambda_j + ... + lambda_n and candidates
// mu below lambda become weakly decreasing integer sequences b with the same
// total, prefix sums dominated by those of a (that is m >= 0), and b_n >= a_n.
// Each completed b is one candidate mu; the cone test decides lambda >_2 mu.
std::optional<DominantWeight> even_lower_witness(const DominantWeight& lambda, long long bound) {
  if (bound < 1) throw std::domain_error("oracle bound must be >= 1");
  const int n = lambda.n;
  std::vector<long long> a(static_cast<size_t>(n));
  a[static_cast<size_t>(n - 1)] = lambda.coords[static_cast<size_t>(n - 1)];
  for (int j = n - 2; j >= 0; --j)
    a[static_cast<size_t>(j)] = a[static_cast<size_t>(j + 1)] + lambda.coords[static_cast<size_t>(j)];
  std::vector<long long> prefix_a(static_cast<size_t>(n + 1), 0);
  for (int j = 0; j < n; ++j) prefix_a[static_cast<size_t>(j + 1)] = prefix_a[static_cast<size_t>(j)] + a[static_cast<size_t>(j)];
  const long long total = prefix_a[static_cast<size_t>(n)];
  const long long tail_min = a[static_cast<size_t>(n - 1)];

  std::vector<long long> b(static_cast<size_t>(n), 0);
  std::optional<DominantWeight> found;

  auto accept = [&](void) -> bool {
    std::vector<long long> m(static_cast<size_t>(n - 1));
    long long pb = 0;
    bool zero = true;
    for (int i = 0; i < n - 1; ++i) {
      pb += b[static_cast<size_t>(i)];
      m[static_cast<size_t>(i)] = prefix_a[static_cast<size_t>(i + 1)] - pb;
      if (m[static_cast<size_t>(i)] != 0) zero = false;
      if (m[static_cast<size_t>(i)] > bound) return false;
    }
    if (zero) return false;  // mu == lambda
    if (!in_even_root_cone(SimpleRootVector{n, m})) return false;
    std::vector<long long> mu(static_cast<size_t>(n));
    for (int i = 0; i + 1 < n; ++i) mu[static_cast<size_t>(i)] = b[static_cast<size_t>(i)] - b[static_cast<size_t>(i + 1)];
    mu[static_cast<size_t>(n - 1)] = b[static_cast<size_t>(n - 1)];
    found.emplace(n, std::move(mu));
    return true;
  };

  // Depth-first over b_1 >= b_2 >= ... >= b_n, high values first so the first
  // leaves stay close to lambda itself.
  auto rec = [&](auto&& self, int i, long long prefix_b) -> bool {
    if (i == n - 1) {
      long long bn = total - prefix_b;
      if (bn > b[static_cast<size_t>(n - 2)] || bn < tail_min) return false;
      b[static_cast<size_t>(n - 1)] = bn;
      return accept();
    }
    long long hi = prefix_a[static_cast<size_t>(i + 1)] - prefix_b;  // keeps m_{i+1} >= 0
    if (i > 0) hi = std::min(hi, b[static_cast<size_t>(i - 1)]);
    long long remaining = total - prefix_b;
    long long lo = std::max(tail_min, ceil_div(remaining, n - i));
    for (long long v = hi; v >= lo; --v) {
      b[static_cast<size_t>(i)] = v;
      if (self(self, i + 1, prefix_b + v)) return true;
    }
    return false;
  };

  if (n == 1) return std::nullopt;
  rec(rec, 0, 0);
  return found;
}

bool is_even_minuscule_oracle(const DominantWeight& lambda, long long bound) {
  return !even_lower_witness(lambda, bound).has_value();
}

}  // namespace evenflows::weights
