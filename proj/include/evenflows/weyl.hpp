#pragma once

#include <string>
#include <vector>

namespace evenflows::weyl {

// Connected reductive groups we carry invariant-degree data for. SO and Spin
// are stored with the matrix size (SO6 means SO(6)); GL/SL/Sp with the rank.
struct GroupSpec {
  enum class Kind { GL, SL, SO, Spin, Sp, U1, F4, E6, Product };

  Kind kind = Kind::U1;
  int param = 0;
  std::vector<GroupSpec> factors;  // Product only

  static GroupSpec GL(int n);
  static GroupSpec SL(int n);
  static GroupSpec SO(int m);
  static GroupSpec Spin(int m);
  static GroupSpec Sp(int n);
  static GroupSpec U1();
  static GroupSpec F4();
  static GroupSpec E6();
  static GroupSpec product(std::vector<GroupSpec> fs);

  std::string name() const;
};

// Degrees of the fundamental invariants of the Weyl group, in the half
// grading where H^2 has degree 1. Stored sorted; the product of the entries
// is the Weyl group order.
struct DegreeList {
  std::vector<int> degrees;
  bool operator==(const DegreeList&) const = default;
};

struct HomogeneousPair {
  GroupSpec ambient;
  GroupSpec subgroup;
};

// Polynomial with integer coefficients indexed by degree in q.
struct IntPolynomial {
  std::vector<long long> coeffs;  // trailing zeros trimmed

  long long eval(long long q) const;
  long long coeff(size_t d) const { return d < coeffs.size() ? coeffs[d] : 0; }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const IntPolynomial&) const = default;
};

DegreeList invariant_degrees(const GroupSpec& g);
long long weyl_order(const GroupSpec& g);

// Helper shared with the cohomology module: the quotient
// prod_{d in num}(1-q^d) / prod_{d in den}(1-q^d), which must be a
// polynomial; throws std::domain_error otherwise.
IntPolynomial quotient_of_products(std::vector<int> num_degrees, std::vector<int> den_degrees);

// Graded rank of C[t]^{W_H} over C[t]^{W_G}; requires matching torus ranks
// and a quotient with nonnegative coefficients.
IntPolynomial poincare_polynomial(const HomogeneousPair& pair);

long long euler_characteristic(const HomogeneousPair& pair);  // value at q = 1
long long signature(const HomogeneousPair& pair);             // value at q = -1

// Mini-grammar for the CLI: "GL4/GL2xGL2", "SO6/SO2xSO4", "E6/Spin10xU1".
GroupSpec parse_group(const std::string& text);
HomogeneousPair parse_pair(const std::string& text);

// Validates the degree tables against closed-form Weyl orders (ranks <= 12)
// and the SO(2n+1) / Sp(n) agreement; throws InvariantBreach on failure.
void self_check();

}  // namespace evenflows::weyl
