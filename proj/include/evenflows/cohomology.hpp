#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "evenflows/weyl.hpp"

namespace evenflows::cohomology {

using Rational = boost::multiprecision::cpp_rational;

struct Variable {
  std::string name;
  int degree = 0;
  bool operator==(const Variable&) const = default;
};

// Multivariate polynomial with exact rational coefficients over a fixed
// variable list; keyed by exponent vector, zero coefficients never stored.
struct MultiPoly {
  std::vector<Variable> vars;
  std::map<std::vector<int>, Rational> terms;

  void add_term(std::vector<int> exps, const Rational& coeff);
  int degree() const;  // common degree of all terms; requires homogeneity
  bool homogeneous() const;
  bool zero() const { return terms.empty(); }
  std::string str() const;
};

// Graded ring presentation: polynomial ring on `generators` modulo the
// homogeneous `relations`. `base_generators` marks the subring the structure
// map comes from (the c-variables for Grassmannian presentations).
struct GradedPresentation {
  std::vector<Variable> generators;
  std::vector<std::string> base_generators;
  std::vector<MultiPoly> relations;
  std::string label;
};

// Product form prod_{d in num}(1-q^d) / prod_{d in den}(1-q^d), kept
// canonical: both lists sorted, common factors cancelled. Two series are
// equal as rational functions iff their canonical forms coincide.
struct HilbertSeries {
  std::vector<int> num;
  std::vector<int> den;

  static HilbertSeries make(std::vector<int> num, std::vector<int> den);
  bool operator==(const HilbertSeries&) const = default;
  std::string str() const;
};

// Power-series coefficients of the series up to degree max_degree inclusive.
std::vector<long long> series_coefficients(const HilbertSeries& hs, int max_degree);

// H^{2*}_{GL_n}(Gr_k(C^n)): generators e_1..e_k, f_1..f_{n-k}, c_1..c_n (the
// c's are the base), and the n relations expressing that
// (t^k + e_1 t^{k-1} + ...)(t^{n-k} + f_1 t^{n-k-1} + ...) equals
// t^n + c_1 t^{n-1} + ... + c_n coefficient by coefficient.
GradedPresentation grassmannian_presentation(int n, int k);

// Coinvariant under theta = (-1)^deg: odd-degree generators are removed and
// substituted by zero, relations that vanish identically are dropped.
GradedPresentation theta_coinvariant(const GradedPresentation& pres);

// Complete-intersection Hilbert series
// prod_rel (1-q^deg) / prod_gen (1-q^deg); the regular-sequence hypothesis is
// certified downstream by the graded-dimension oracle, not assumed here.
HilbertSeries hilbert_series_ci(const GradedPresentation& pres);

long long default_monomial_cap();  // 20000, or EVENFLOWS_MONOMIAL_CAP

// Graded dimensions of the quotient ring up to max_degree, by exact rational
// linear algebra on the span of monomial multiples of the relations. Throws
// ResourceLimit when a degree needs more than `monomial_cap` monomials.
std::vector<long long> graded_dims_oracle(const GradedPresentation& pres, int max_degree,
                                          long long monomial_cap = default_monomial_cap());

struct DiagramCase {
  enum class Kind { Quaternionic, Sphere, Cayley, RealGrassmannian, SO4n };

  Kind kind = Kind::Cayley;
  int n = 0;
  int k = 0;

  static DiagramCase quaternionic(int n, int k);  // Gr_{2k}(C^{2n}) vs Gr_k(H^n)
  static DiagramCase sphere(int n);               // even quadric vs S^{4n}
  static DiagramCase cayley();                    // complex vs real Cayley plane
  static DiagramCase real_grassmannian(int n, int k);  // Gr_{2k}(C^{2n+1}) vs Gr_{2k}(R^{2n+1})
  static DiagramCase so4n(int n);                 // SO_{4n} quadric, Pfaffian-killing involution

  std::string case_name() const;
  std::vector<int> params() const;
};

// Series of the fixed-side equivariant cohomology, from Weyl degree data.
HilbertSeries compact_side_series(const DiagramCase& c);

// Series of the coinvariant algebra of the ambient equivariant cohomology:
// kill the anti-invariant generators (odd degrees, or the Pfaffian for the
// SO_{4n} case) in the ambient presentation of H*_G(G/H) = C[t]^{W_H}.
HilbertSeries coinvariant_side_series(const DiagramCase& c);

struct DiagramReport {
  DiagramCase diagram_case;
  HilbertSeries coinvariant_series;
  HilbertSeries compact_series;
  bool equal = false;
  long long rank = 0;       // rank of the coinvariant algebra over its base
  long long signature = 0;  // trace of the involution on the ambient fiber
  int oracle_checked_to_degree = 0;
};

// Compares both sides, computes the rank over the base via the polynomial
// part at q -> 1, cross-checks the signature through the weyl module, and for
// the quaternionic case certifies the coinvariant presentation against its
// series with the exact-linear-algebra oracle up to oracle_degree.
DiagramReport verify_diagram(const DiagramCase& c, int oracle_degree = 10,
                             long long monomial_cap = default_monomial_cap());

}  // namespace evenflows::cohomology
