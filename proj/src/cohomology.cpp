#include "evenflows/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "evenflows/errors.hpp"

namespace evenflows::cohomology {

using weyl::GroupSpec;

void MultiPoly::add_term(std::vector<int> exps, const Rational& coeff) {
  if (exps.size() != vars.size()) throw std::domain_error("exponent vector length mismatch");
  auto [it, inserted] = terms.try_emplace(std::move(exps), 0);
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

bool MultiPoly::homogeneous() const {
  int d = -1;
  for (const auto& [exps, c] : terms) {
    int td = 0;
    for (size_t i = 0; i < exps.size(); ++i) td += exps[i] * vars[i].degree;
    if (d == -1)
      d = td;
    else if (td != d)
      return false;
  }
  return true;
}

int MultiPoly::degree() const {
  if (terms.empty()) return 0;
  if (!homogeneous()) throw std::domain_error("relation is not homogeneous");
  const auto& exps = terms.begin()->first;
  int d = 0;
  for (size_t i = 0; i < exps.size(); ++i) d += exps[i] * vars[i].degree;
  return d;
}

std::string MultiPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : terms) {
    Rational a = c;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    first = false;
    if (a < 0) a = -a;
    bool printed_coeff = false;
    bool has_var = std::any_of(exps.begin(), exps.end(), [](int e) { return e > 0; });
    if (a != 1 || !has_var) {
      os << a;
      printed_coeff = true;
    }
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (printed_coeff) os << "*";
      printed_coeff = true;
      os << vars[i].name;
      if (exps[i] > 1) os << "^" << exps[i];
    }
  }
  return os.str();
}

HilbertSeries HilbertSeries::make(std::vector<int> num, std::vector<int> den) {
  for (int d : num)
    if (d < 1) throw std::domain_error("series factor exponent must be >= 1");
  for (int d : den)
    if (d < 1) throw std::domain_error("series factor exponent must be >= 1");
  std::multiset<int> ns(num.begin(), num.end());
  std::vector<int> dkeep;
  for (int d : den) {
    auto it = ns.find(d);
    if (it != ns.end())
      ns.erase(it);
    else
      dkeep.push_back(d);
  }
  HilbertSeries hs;
  hs.num.assign(ns.begin(), ns.end());
  hs.den = std::move(dkeep);
  std::sort(hs.den.begin(), hs.den.end());
  return hs;
}

std::string HilbertSeries::str() const {
  auto prod = [](const std::vector<int>& ds) {
    if (ds.empty()) return std::string("1");
    std::string s;
    for (int d : ds) s += "(1-q^" + std::to_string(d) + ")";
    return s;
  };
  return den.empty() ? prod(num) : prod(num) + " / " + prod(den);
}

std::vector<long long> series_coefficients(const HilbertSeries& hs, int max_degree) {
  if (max_degree < 0) throw std::domain_error("max_degree must be >= 0");
  std::vector<long long> c(static_cast<size_t>(max_degree) + 1, 0);
  c[0] = 1;
  for (int d : hs.num)  // multiply by (1 - q^d), truncated
    for (int t = max_degree; t >= d; --t) c[static_cast<size_t>(t)] -= c[static_cast<size_t>(t - d)];
  for (int d : hs.den)  // multiply by 1/(1 - q^d) = sum q^{jd}
    for (int t = d; t <= max_degree; ++t) c[static_cast<size_t>(t)] += c[static_cast<size_t>(t - d)];
  return c;
}

GradedPresentation grassmannian_presentation(int n, int k) {
  if (n < 2 || k < 1 || k >= n) throw std::domain_error("need 0 < k < n with n >= 2");
  GradedPresentation pres;
  pres.label = "H*_GL" + std::to_string(n) + "(Gr_" + std::to_string(k) + "(C^" +
               std::to_string(n) + "))";
  for (int i = 1; i <= k; ++i) pres.generators.push_back({"e" + std::to_string(i), i});
  for (int j = 1; j <= n - k; ++j) pres.generators.push_back({"f" + std::to_string(j), j});
  for (int l = 1; l <= n; ++l) {
    pres.generators.push_back({"c" + std::to_string(l), l});
    pres.base_generators.push_back("c" + std::to_string(l));
  }
  const size_t nv = pres.generators.size();
  auto e_pos = [&](int i) { return static_cast<size_t>(i - 1); };
  auto f_pos = [&](int j) { return static_cast<size_t>(k + j - 1); };
  auto c_pos = [&](int l) { return static_cast<size_t>(n + l - 1); };
  for (int d = 1; d <= n; ++d) {
    MultiPoly r;
    r.vars = pres.generators;
    for (int i = 0; i <= d; ++i) {
      int j = d - i;
      if (i > k || j > n - k) continue;  // e_0 = f_0 = 1
      std::vector<int> exps(nv, 0);
      if (i >= 1) exps[e_pos(i)] += 1;
      if (j >= 1) exps[f_pos(j)] += 1;
      r.add_term(std::move(exps), 1);
    }
    std::vector<int> exps(nv, 0);
    exps[c_pos(d)] = 1;
    r.add_term(std::move(exps), -1);
    pres.relations.push_back(std::move(r));
  }
  return pres;
}

GradedPresentation theta_coinvariant(const GradedPresentation& pres) {
  std::vector<size_t> kept;
  for (size_t i = 0; i < pres.generators.size(); ++i)
    if (pres.generators[i].degree % 2 == 0) kept.push_back(i);
  if (kept.size() == pres.generators.size()) return pres;

  GradedPresentation out;
  out.label = pres.label.empty() ? "theta coinvariant" : pres.label + " theta-coinvariant";
  for (size_t i : kept) out.generators.push_back(pres.generators[i]);
  std::set<std::string> kept_names;
  for (const auto& v : out.generators) kept_names.insert(v.name);
  for (const auto& b : pres.base_generators)
    if (kept_names.count(b)) out.base_generators.push_back(b);

  for (const auto& rel : pres.relations) {
    MultiPoly r;
    r.vars = out.generators;
    for (const auto& [exps, coeff] : rel.terms) {
      bool kills = false;
      for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0 && pres.generators[i].degree % 2 != 0) {
          kills = true;
          break;
        }
      if (kills) continue;
      std::vector<int> nexps(kept.size());
      for (size_t t = 0; t < kept.size(); ++t) nexps[t] = exps[kept[t]];
      r.add_term(std::move(nexps), coeff);
    }
    if (!r.zero()) out.relations.push_back(std::move(r));
  }
  return out;
}

HilbertSeries hilbert_series_ci(const GradedPresentation& pres) {
  if (pres.relations.size() > pres.generators.size())
    throw std::domain_error("more relations than generators; not a complete intersection shape");
  std::vector<int> num, den;
  for (const auto& r : pres.relations) num.push_back(r.degree());
  for (const auto& g : pres.generators) den.push_back(g.degree);
  return HilbertSeries::make(std::move(num), std::move(den));
}

long long default_monomial_cap() {
  if (const char* env = std::getenv("EVENFLOWS_MONOMIAL_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("EVENFLOWS_MONOMIAL_CAP must be a positive integer");
  }
  return 20000;
}

namespace {

// All exponent vectors of the given total degree, variables in presentation
// order, exponent of the first variable decreasing: a fixed deterministic
// order for the elimination below.
void enumerate_monomials(const std::vector<Variable>& vars, int degree, size_t at,
                         std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (at == vars.size()) {
    if (degree == 0) out.push_back(current);
    return;
  }
  if (at + 1 == vars.size()) {
    if (degree % vars[at].degree == 0) {
      current[at] = degree / vars[at].degree;
      out.push_back(current);
      current[at] = 0;
    }
    return;
  }
  for (int e = degree / vars[at].degree; e >= 0; --e) {
    current[at] = e;
    enumerate_monomials(vars, degree - e * vars[at].degree, at + 1, current, out);
  }
  current[at] = 0;
}

using SparseRow = std::map<size_t, Rational>;

// Rank of the span of the rows, by ordered Gaussian elimination with exact
// rational arithmetic; pivots normalized to 1 and stored per column.
size_t row_space_rank(std::vector<SparseRow>& rows) {
  std::map<size_t, SparseRow> pivots;
  size_t rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      const size_t col = row.begin()->first;
      auto piv = pivots.find(col);
      if (piv == pivots.end()) {
        const Rational lead = row.begin()->second;
        for (auto& [c, v] : row) v /= lead;
        pivots.emplace(col, std::move(row));
        ++rank;
        break;
      }
      const Rational factor = row.begin()->second;
      for (const auto& [c, v] : piv->second) {
        auto [it, inserted] = row.try_emplace(c, 0);
        it->second -= factor * v;
        if (it->second == 0) row.erase(it);
      }
    }
  }
  return rank;
}

}  // namespace

std::vector<long long> graded_dims_oracle(const GradedPresentation& pres, int max_degree,
                                          long long monomial_cap) {
  if (max_degree < 0) throw std::domain_error("max_degree must be >= 0");
  for (const auto& r : pres.relations)
    if (!r.homogeneous()) throw std::domain_error("relations must be homogeneous");

  // Monomial tables for every degree up to max_degree; reused both for the
  // ambient count and for indexing the multiplier monomials.
  std::vector<std::vector<std::vector<int>>> mons(static_cast<size_t>(max_degree) + 1);
  std::vector<std::map<std::vector<int>, size_t>> index(static_cast<size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<int> current(pres.generators.size(), 0);
    enumerate_monomials(pres.generators, d, 0, current, mons[static_cast<size_t>(d)]);
    if (static_cast<long long>(mons[static_cast<size_t>(d)].size()) > monomial_cap)
      throw ResourceLimit("degree " + std::to_string(d) + " needs " +
                          std::to_string(mons[static_cast<size_t>(d)].size()) +
                          " monomials, cap is " + std::to_string(monomial_cap));
    for (size_t i = 0; i < mons[static_cast<size_t>(d)].size(); ++i)
      index[static_cast<size_t>(d)].emplace(mons[static_cast<size_t>(d)][i], i);
  }

  std::vector<long long> dims(static_cast<size_t>(max_degree) + 1, 0);
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<SparseRow> rows;
    for (const auto& rel : pres.relations) {
      if (rel.zero()) continue;
      const int rd = rel.degree();
      if (rd > d) continue;
      for (const auto& u : mons[static_cast<size_t>(d - rd)]) {
        SparseRow row;
        for (const auto& [exps, coeff] : rel.terms) {
          std::vector<int> prod(exps.size());
          for (size_t i = 0; i < exps.size(); ++i) prod[i] = exps[i] + u[i];
          row[index[static_cast<size_t>(d)].at(prod)] += coeff;
        }
        rows.push_back(std::move(row));
      }
    }
    dims[static_cast<size_t>(d)] =
        static_cast<long long>(mons[static_cast<size_t>(d)].size()) -
        static_cast<long long>(row_space_rank(rows));
  }
  return dims;
}

DiagramCase DiagramCase::quaternionic(int n, int k) {
  if (n < 2 || k < 1 || k >= n) throw std::domain_error("quaternionic case needs 0 < k < n");
  return DiagramCase{Kind::Quaternionic, n, k};
}
DiagramCase DiagramCase::sphere(int n) {
  if (n < 1) throw std::domain_error("sphere case needs n >= 1");
  return DiagramCase{Kind::Sphere, n, 0};
}
DiagramCase DiagramCase::cayley() { return DiagramCase{Kind::Cayley, 0, 0}; }
DiagramCase DiagramCase::real_grassmannian(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("real Grassmannian case needs 0 < k <= n");
  return DiagramCase{Kind::RealGrassmannian, n, k};
}
DiagramCase DiagramCase::so4n(int n) {
  if (n < 1) throw std::domain_error("so4n case needs n >= 1");
  return DiagramCase{Kind::SO4n, n, 0};
}

std::string DiagramCase::case_name() const {
  switch (kind) {
    case Kind::Quaternionic: return "quaternionic";
    case Kind::Sphere: return "sphere";
    case Kind::Cayley: return "cayley";
    case Kind::RealGrassmannian: return "real_grassmannian";
    case Kind::SO4n: return "so4n";
  }
  return "?";
}

std::vector<int> DiagramCase::params() const {
  switch (kind) {
    case Kind::Quaternionic:
    case Kind::RealGrassmannian: return {n, k};
    case Kind::Sphere:
    case Kind::SO4n: return {n};
    case Kind::Cayley: return {};
  }
  return {};
}

namespace {

std::vector<int> degrees_of(const GroupSpec& g) { return weyl::invariant_degrees(g).degrees; }

std::vector<int> even_entries(std::vector<int> ds) {
  std::erase_if(ds, [](int d) { return d % 2 != 0; });
  return ds;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

// Degree list minus one copy of the Pfaffian-type generator (degree r for
// SO_{2r}, the Euler class in degree 1 for SO_2).
std::vector<int> drop_pfaffian(const GroupSpec& so_even) {
  if (so_even.kind != GroupSpec::Kind::SO || so_even.param % 2 != 0)
    throw std::domain_error("Pfaffian removal needs an even special orthogonal group");
  auto ds = degrees_of(so_even);
  int pf = so_even.param / 2;
  auto it = std::find(ds.begin(), ds.end(), pf);
  ds.erase(it);
  return ds;
}

}  // namespace

HilbertSeries compact_side_series(const DiagramCase& c) {
  switch (c.kind) {
    case DiagramCase::Kind::Quaternionic:
      return HilbertSeries::make(
          {}, concat(degrees_of(GroupSpec::Sp(c.k)), degrees_of(GroupSpec::Sp(c.n - c.k))));
    case DiagramCase::Kind::Sphere: {
      // H*_{SO(4n+1)}(S^{4n}): classes in degrees 0 and 2n over the B_{2n} base.
      auto den = concat({2 * c.n}, degrees_of(GroupSpec::SO(4 * c.n + 1)));
      return HilbertSeries::make({4 * c.n}, den);
    }
    case DiagramCase::Kind::Cayley:
      return HilbertSeries::make({}, degrees_of(GroupSpec::Spin(9)));
    case DiagramCase::Kind::RealGrassmannian: {
      std::vector<int> den;
      for (int i = 1; i <= c.k; ++i) den.push_back(2 * i);
      for (int i = 1; i <= c.n - c.k; ++i) den.push_back(2 * i);
      return HilbertSeries::make({}, den);
    }
    case DiagramCase::Kind::SO4n:
      return HilbertSeries::make({}, degrees_of(GroupSpec::Spin(4 * c.n - 1)));
  }
  throw std::domain_error("invalid diagram case");
}

HilbertSeries coinvariant_side_series(const DiagramCase& c) {
  switch (c.kind) {
    case DiagramCase::Kind::Quaternionic:
      return hilbert_series_ci(theta_coinvariant(grassmannian_presentation(2 * c.n, 2 * c.k)));
    case DiagramCase::Kind::Sphere: {
      // H*_{SO(4n+2)}(quadric) = C[t]^{W(SO_2 x SO_4n)}; theta kills the
      // degree-1 Euler class of the SO_2 factor.
      auto h = concat(degrees_of(GroupSpec::U1()), degrees_of(GroupSpec::SO(4 * c.n)));
      return HilbertSeries::make({}, even_entries(std::move(h)));
    }
    case DiagramCase::Kind::Cayley: {
      auto h = concat(degrees_of(GroupSpec::Spin(10)), degrees_of(GroupSpec::U1()));
      return HilbertSeries::make({}, even_entries(std::move(h)));
    }
    case DiagramCase::Kind::RealGrassmannian: {
      // Subgroup S(GL_{2k} x GL_{2n+1-2k}) of SL_{2n+1}: GL x GL degrees with
      // one degree-1 generator removed; theta kills every odd degree anyway.
      auto h = concat(degrees_of(GroupSpec::GL(2 * c.k)), degrees_of(GroupSpec::GL(2 * c.n + 1 - 2 * c.k)));
      h.erase(std::find(h.begin(), h.end(), 1));
      return HilbertSeries::make({}, even_entries(std::move(h)));
    }
    case DiagramCase::Kind::SO4n:
      // theta_tau is not (-1)^deg here; it kills the Pfaffian generator.
      return HilbertSeries::make({}, drop_pfaffian(GroupSpec::SO(4 * c.n)));
  }
  throw std::domain_error("invalid diagram case");
}

namespace {

// Rank of the algebra with the given series over the free base ring on
// base_degrees: the polynomial part of series * prod_base (1-q^d) at q -> 1.
long long rank_over_base(const HilbertSeries& series, const std::vector<int>& base_degrees) {
  auto num = series.num;
  num.insert(num.end(), base_degrees.begin(), base_degrees.end());
  return weyl::quotient_of_products(std::move(num), series.den).eval(1);
}

}  // namespace

DiagramReport verify_diagram(const DiagramCase& c, int oracle_degree, long long monomial_cap) {
  DiagramReport rep;
  rep.diagram_case = c;
  rep.coinvariant_series = coinvariant_side_series(c);
  rep.compact_series = compact_side_series(c);
  rep.equal = rep.coinvariant_series == rep.compact_series;

  using K = DiagramCase::Kind;
  switch (c.kind) {
    case K::Quaternionic: {
      rep.rank = rank_over_base(rep.coinvariant_series, degrees_of(GroupSpec::Sp(c.n)));
      rep.signature = weyl::signature(
          {GroupSpec::GL(2 * c.n),
           GroupSpec::product({GroupSpec::GL(2 * c.k), GroupSpec::GL(2 * c.n - 2 * c.k)})});
      auto pres = theta_coinvariant(grassmannian_presentation(2 * c.n, 2 * c.k));
      auto dims = graded_dims_oracle(pres, oracle_degree, monomial_cap);
      auto expected = series_coefficients(rep.coinvariant_series, oracle_degree);
      if (dims != expected)
        throw InvariantBreach("coinvariant presentation of " + pres.label +
                              " does not match its Hilbert series");
      rep.oracle_checked_to_degree = oracle_degree;
      break;
    }
    case K::Sphere:
      rep.rank = rank_over_base(rep.coinvariant_series, degrees_of(GroupSpec::SO(4 * c.n + 1)));
      rep.signature = weyl::signature(
          {GroupSpec::SO(4 * c.n + 2),
           GroupSpec::product({GroupSpec::SO(2), GroupSpec::SO(4 * c.n)})});
      break;
    case K::Cayley:
      rep.rank = rank_over_base(rep.coinvariant_series, degrees_of(GroupSpec::F4()));
      rep.signature = weyl::signature(
          {GroupSpec::E6(), GroupSpec::product({GroupSpec::Spin(10), GroupSpec::U1()})});
      break;
    case K::RealGrassmannian:
      rep.rank = rank_over_base(rep.coinvariant_series, degrees_of(GroupSpec::SO(2 * c.n + 1)));
      rep.signature = weyl::signature(
          {GroupSpec::GL(2 * c.n + 1),
           GroupSpec::product({GroupSpec::GL(2 * c.k), GroupSpec::GL(2 * c.n + 1 - 2 * c.k)})});
      break;
    case K::SO4n: {
      // Fiber-level ratio: SO_{4n-2}-invariants over Spin_{4n-1}-invariants.
      rep.rank = weyl::quotient_of_products(degrees_of(GroupSpec::Spin(4 * c.n - 1)),
                                            degrees_of(GroupSpec::SO(4 * c.n - 2)))
                     .eval(1);
      rep.signature = weyl::euler_characteristic(
          {GroupSpec::SO(4 * c.n - 1), GroupSpec::SO(4 * c.n - 2)});
      break;
    }
  }
  return rep;
}

}  // namespace evenflows::cohomology
