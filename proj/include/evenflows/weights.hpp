#pragma once

#include <optional>
#include <vector>

namespace evenflows::weights {

// Integral weight of GL(n) in the fundamental-weight basis omega_1..omega_n.
// Dominance constrains coordinates 1..n-1 to be nonnegative; the omega_n
// coefficient (determinant direction) is a free integer.
struct DominantWeight {
  int n = 0;
  std::vector<long long> coords;  // size n

  DominantWeight(int rank, std::vector<long long> c);
  long long coord(int i) const { return coords[static_cast<size_t>(i - 1)]; }
  bool operator==(const DominantWeight&) const = default;
};

// Unconstrained vector in the omega basis, typically a difference of weights.
struct WeightVector {
  int n = 0;
  std::vector<long long> coords;  // size n
  bool operator==(const WeightVector&) const = default;
};

// Vector in the lifted space spanned by omega_0, omega_1, ..., omega_n, where
// omega_0 is kept as an independent direction instead of being set to zero.
struct LiftedVector {
  int n = 0;
  std::vector<long long> coords;  // size n+1, positions 0..n
  bool operator==(const LiftedVector&) const = default;
};

// Positive root alpha_{k,p} of height k starting at position p; as an element
// of the root lattice it is the interval alpha_p + ... + alpha_{p+k-1} of
// consecutive simple roots. Valid range: 1 <= k <= n-1, 1 <= p <= n-k.
struct RootIndex {
  int k = 0;
  int p = 0;
  bool operator==(const RootIndex&) const = default;
};

// Coordinates m_1..m_{n-1} of a root-lattice element in the simple-root basis.
struct SimpleRootVector {
  int n = 0;
  std::vector<long long> coords;  // size n-1
  bool operator==(const SimpleRootVector&) const = default;
};

// omega-basis coordinates of alpha_{k,p}: -omega_{p-1} + omega_p
// + omega_{p+k-1} - omega_{p+k}, with omega_0 read as zero.
WeightVector root_weight_coords(RootIndex idx, int n);

// Same root in the lifted space, keeping the omega_0 coordinate.
LiftedVector lifted_root_coords(RootIndex idx, int n);

// All (k,p) with k even; empty for n <= 2.
std::vector<RootIndex> even_positive_roots(int n);

// Inverts x = sum m_i alpha_{1,i} when x lies in the root lattice. The system
// is triangular from the omega_n coordinate upward; the leftover equation at
// position 1 decides membership. Entries may be negative.
std::optional<SimpleRootVector> to_simple_root_coords(const WeightVector& x);

// Whether m decomposes as a nonnegative sum of even-height roots, i.e. a
// multiset of even-length intervals covering position i exactly m_i times.
bool in_even_root_cone(const SimpleRootVector& m);

// One such decomposition (closing intervals as late as possible), or nullopt
// when m is not in the cone. Result sorted by (p, k).
std::optional<std::vector<RootIndex>> even_cone_decomposition(const SimpleRootVector& m);

// lambda >=_2 mu in the even partial order: lambda - mu is a nonnegative
// integer combination of even-height positive roots.
bool even_leq(const DominantWeight& mu, const DominantWeight& lambda);

// Closed-form test: lambda is minimal for >=_2 iff it has no two nonzero
// coordinates at positions of different parity in 1..n-1 and
// lambda_2 + ... + lambda_{n-2} <= 1.
bool is_even_minuscule(const DominantWeight& lambda);

// Search bound sufficient for any witness below lambda (simple-root
// coordinates of lambda - mu are at most n * sum of the first n-1
// coordinates for dominant mu).
long long default_oracle_bound(const DominantWeight& lambda);

// Brute-force minimality check, independent of the closed form: searches all
// dominant mu with lambda - mu in the root lattice, m >= 0 componentwise and
// max m_i <= bound, and reports the first mu with lambda >_2 mu.
std::optional<DominantWeight> even_lower_witness(const DominantWeight& lambda, long long bound);
bool is_even_minuscule_oracle(const DominantWeight& lambda, long long bound);

// Ordinary dominance-order analogues (all root heights allowed). lambda >= mu
// reduces to componentwise nonnegativity of the simple-root coordinates, and
// the minimal weights are a_n omega_n and a_n omega_n + omega_k.
bool leq(const DominantWeight& mu, const DominantWeight& lambda);
bool is_minuscule(const DominantWeight& lambda);

}  // namespace evenflows::weights
