#pragma once

#include <map>
#include <string>
#include <vector>

#include "evenflows/weights.hpp"

namespace evenflows::higgs {

// Points of the curve are opaque labels; only coincidence and multiplicity
// patterns matter.
using PointLabel = std::string;

// Divisor on the abstract point set. Zero multiplicities are never stored.
struct Divisor {
  std::map<PointLabel, long long> support;

  static Divisor of(std::initializer_list<std::pair<PointLabel, long long>> entries);
  long long at(const PointLabel& c) const;
  void add(const PointLabel& c, long long mult);
  bool effective() const;
  long long degree() const;
  bool operator==(const Divisor&) const = default;
};

// A type (1,...,1) fixed point: one arbitrary divisor delta_0 (a class
// representative for L_0) and effective divisors delta_1..delta_{n-1}, the
// vanishing divisors of the Higgs maps b_i : L_{i-1} -> L_i K.
struct DivisorTuple {
  int n = 0;
  Divisor delta0;
  std::vector<Divisor> middle;  // size n-1, each effective

  DivisorTuple(int rank, Divisor d0, std::vector<Divisor> mid);
  static DivisorTuple zero(int rank);
  const Divisor& delta(int i) const;  // i in 1..n-1
  bool operator==(const DivisorTuple&) const = default;
};

// Finitely supported map from points to dominant weights; absent points
// carry the zero weight.
struct WeightMap {
  int n = 0;
  std::map<PointLabel, weights::DominantWeight> assignments;

  WeightMap(int rank, std::map<PointLabel, weights::DominantWeight> a);
  static WeightMap empty(int rank) { return WeightMap(rank, {}); }
  bool operator==(const WeightMap&) const = default;
};

struct Witness {
  // "odd-parity-pair": delta_i and delta_j share a point, j - i odd;
  // "middle-multiple-zero": total multiplicity >= 2 over indices 2..n-2;
  // "adjacent-repeat": a single delta_i, 2 <= i <= n-2, has a multiple point.
  std::string kind;
  PointLabel point;
  std::vector<int> indices;  // one or two entries
  bool operator==(const Witness&) const = default;
};

struct ClassificationReport {
  bool very_stable = false;
  bool even_very_stable = false;
  std::vector<Witness> witnesses;  // empty iff even_very_stable
};

struct HeckeOp {
  PointLabel point;
  int index = 0;  // 1..n-1 increments delta_index at point; n increments delta_0
  bool operator==(const HeckeOp&) const = default;
};

// The delta <-> mu dictionary: mu(c) = delta_1(c) omega_1 + ...
// + delta_{n-1}(c) omega_{n-1} + delta_0(c) omega_n, and back.
WeightMap mu_from_delta(const DivisorTuple& delta);
DivisorTuple delta_from_mu(const WeightMap& mu);

// Degree bookkeeping convention for the splitting E = L_0 + ... + L_{n-1}.
// kThroughI (default): deg L_i = deg L_0 + deg(delta_1+...+delta_i) - i(2g-2),
// matching delta_i = div(b_i) for b_i : L_{i-1} -> L_i K.
// kBelowI: the variant deg L_i = deg L_0 + deg(delta_1+...+delta_{i-1}) - i(2g-2).
enum class DegreeConvention { kThroughI, kBelowI };

std::vector<long long> line_bundle_degrees(const DivisorTuple& delta, long long deg_L0,
                                           int genus,
                                           DegreeConvention conv = DegreeConvention::kThroughI);

// Very stable iff delta_1 + ... + delta_{n-1} is reduced.
bool is_very_stable(const DivisorTuple& delta);

// Even very stable iff at every point the middle multiplicity
// sum_{i=2}^{n-2} delta_i(c) is at most 1 and no two divisors of
// different-parity index share a point. Violations are reported as witnesses,
// sorted by (point, indices).
ClassificationReport classify(const DivisorTuple& delta);

// The weight-side criterion: every mu(c) is even minuscule. Must agree with
// classify(...).even_very_stable.
bool classify_via_weights(const DivisorTuple& delta);

// Elementary Hecke operations that rebuild delta_from_mu(mu) from the zero
// tuple, in canonical order (point, then index ascending). Weights with a
// negative omega_n coefficient have no such expansion and are rejected.
std::vector<HeckeOp> hecke_path(const WeightMap& mu);
DivisorTuple apply_hecke(const DivisorTuple& delta, const HeckeOp& op);

// Generic multiplicity of the Hitchin map on the upward flow through the
// omega_k point: the rank of the equivariant cohomology of Gr_k(C^n) over
// the base, i.e. binomial(n,k) via the Weyl order ratio.
long long hitchin_multiplicity(int n, int k);

// Even counterpart on the flow through omega_{k2}, k2 and n2 even: the
// signature of Gr_{k2}(C^{n2}), checked against the Euler characteristic of
// the quaternionic Grassmannian Gr_{k2/2}(H^{n2/2}).
long long even_hitchin_multiplicity(int n2, int k2);

}  // namespace evenflows::higgs
