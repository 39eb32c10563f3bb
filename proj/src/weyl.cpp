#include "evenflows/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "evenflows/errors.hpp"

namespace evenflows::weyl {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

GroupSpec GroupSpec::GL(int n) {
  require(n >= 1, "GL rank must be positive");
  return GroupSpec{Kind::GL, n, {}};
}
GroupSpec GroupSpec::SL(int n) {
  require(n >= 1, "SL rank must be positive");
  return GroupSpec{Kind::SL, n, {}};
}
GroupSpec GroupSpec::SO(int m) {
  require(m >= 1, "SO size must be positive");
  return GroupSpec{Kind::SO, m, {}};
}
GroupSpec GroupSpec::Spin(int m) {
  require(m >= 1, "Spin size must be positive");
  return GroupSpec{Kind::Spin, m, {}};
}
GroupSpec GroupSpec::Sp(int n) {
  require(n >= 1, "Sp rank must be positive");
  return GroupSpec{Kind::Sp, n, {}};
}
GroupSpec GroupSpec::U1() { return GroupSpec{Kind::U1, 1, {}}; }
GroupSpec GroupSpec::F4() { return GroupSpec{Kind::F4, 4, {}}; }
GroupSpec GroupSpec::E6() { return GroupSpec{Kind::E6, 6, {}}; }
GroupSpec GroupSpec::product(std::vector<GroupSpec> fs) {
  require(!fs.empty(), "empty product");
  if (fs.size() == 1) return fs.front();
  return GroupSpec{Kind::Product, 0, std::move(fs)};
}

std::string GroupSpec::name() const {
  switch (kind) {
    case Kind::GL: return "GL" + std::to_string(param);
    case Kind::SL: return "SL" + std::to_string(param);
    case Kind::SO: return "SO" + std::to_string(param);
    case Kind::Spin: return "Spin" + std::to_string(param);
    case Kind::Sp: return "Sp" + std::to_string(param);
    case Kind::U1: return "U1";
    case Kind::F4: return "F4";
    case Kind::E6: return "E6";
    case Kind::Product: {
      std::string s;
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "x";
        s += factors[i].name();
      }
      return s;
    }
  }
  return "?";
}

DegreeList invariant_degrees(const GroupSpec& g) {
  std::vector<int> d;
  switch (g.kind) {
    case GroupSpec::Kind::GL:
      for (int i = 1; i <= g.param; ++i) d.push_back(i);
      break;
    case GroupSpec::Kind::SL:
      for (int i = 2; i <= g.param; ++i) d.push_back(i);
      break;
    case GroupSpec::Kind::SO:
    case GroupSpec::Kind::Spin: {
      int m = g.param;
      if (m % 2 == 1) {  // type B_r, r = (m-1)/2
        for (int i = 2; i <= m - 1; i += 2) d.push_back(i);
      } else {  // type D_r, r = m/2, with the Pfaffian in degree r
        int r = m / 2;
        for (int i = 2; i <= m - 2; i += 2) d.push_back(i);
        d.push_back(r);
      }
      break;
    }
    case GroupSpec::Kind::Sp:
      for (int i = 2; i <= 2 * g.param; i += 2) d.push_back(i);
      break;
    case GroupSpec::Kind::U1:
      d.push_back(1);
      break;
    case GroupSpec::Kind::F4:
      d = {2, 6, 8, 12};
      break;
    case GroupSpec::Kind::E6:
      d = {2, 5, 6, 8, 9, 12};
      break;
    case GroupSpec::Kind::Product:
      for (const auto& f : g.factors) {
        auto fd = invariant_degrees(f).degrees;
        d.insert(d.end(), fd.begin(), fd.end());
      }
      break;
  }
  std::sort(d.begin(), d.end());
  return DegreeList{std::move(d)};
}

long long weyl_order(const GroupSpec& g) {
  long long o = 1;
  for (int d : invariant_degrees(g).degrees) o *= d;
  return o;
}

long long IntPolynomial::eval(long long q) const {
  long long v = 0;
  for (size_t i = coeffs.size(); i-- > 0;) v = v * q + coeffs[i];
  return v;
}

namespace {

void trim(std::vector<long long>& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

// Multiply p by (1 - q^d).
std::vector<long long> times_factor(const std::vector<long long>& p, int d) {
  std::vector<long long> r(p.size() + static_cast<size_t>(d), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    r[i] += p[i];
    r[i + static_cast<size_t>(d)] -= p[i];
  }
  trim(r);
  return r;
}

// Exact division of p by (1 - q^d); throws when the division leaves a
// remainder.
std::vector<long long> divide_factor(const std::vector<long long>& p, int d) {
  if (p.size() <= static_cast<size_t>(d)) {
    if (std::all_of(p.begin(), p.end(), [](long long v) { return v == 0; }))
      return {0};
    throw std::domain_error("quotient of products is not a polynomial");
  }
  std::vector<long long> q(p.size() - static_cast<size_t>(d), 0);
  std::vector<long long> rem(p);
  for (size_t i = 0; i < q.size(); ++i) {
    q[i] = rem[i];
    rem[i + static_cast<size_t>(d)] += rem[i];
  }
  for (size_t i = q.size(); i < rem.size(); ++i)
    if (rem[i] != 0) throw std::domain_error("quotient of products is not a polynomial");
  trim(q);
  return q;
}

void cancel_common(std::vector<int>& a, std::vector<int>& b) {
  std::multiset<int> bs(b.begin(), b.end());
  std::vector<int> keep;
  for (int d : a) {
    auto it = bs.find(d);
    if (it != bs.end())
      bs.erase(it);
    else
      keep.push_back(d);
  }
  a = std::move(keep);
  b.assign(bs.begin(), bs.end());
}

}  // namespace

IntPolynomial quotient_of_products(std::vector<int> num_degrees, std::vector<int> den_degrees) {
  cancel_common(num_degrees, den_degrees);
  std::vector<long long> p{1};
  for (int d : num_degrees) p = times_factor(p, d);
  for (int d : den_degrees) p = divide_factor(p, d);
  return IntPolynomial{std::move(p)};
}

IntPolynomial poincare_polynomial(const HomogeneousPair& pair) {
  auto dg = invariant_degrees(pair.ambient).degrees;
  auto dh = invariant_degrees(pair.subgroup).degrees;
  if (dg.size() != dh.size())
    throw std::domain_error("torus rank mismatch: " + pair.ambient.name() + " has rank " +
                            std::to_string(dg.size()) + ", " + pair.subgroup.name() + " has rank " +
                            std::to_string(dh.size()));
  auto p = quotient_of_products(dg, dh);
  for (long long c : p.coeffs)
    if (c < 0)
      throw std::domain_error("pair " + pair.ambient.name() + "/" + pair.subgroup.name() +
                              " has no valid graded rank polynomial");
  return p;
}

long long euler_characteristic(const HomogeneousPair& pair) { return poincare_polynomial(pair).eval(1); }

long long signature(const HomogeneousPair& pair) { return poincare_polynomial(pair).eval(-1); }

GroupSpec parse_group(const std::string& text) {
  std::vector<GroupSpec> factors;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find('x', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    size_t split = 0;
    while (split < tok.size() && !std::isdigit(static_cast<unsigned char>(tok[split]))) ++split;
    std::string head = tok.substr(0, split);
    std::string digits = tok.substr(split);
    int value = 0;
    if (!digits.empty()) {
      try {
        value = std::stoi(digits);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad group token '" + tok + "'");
      }
    }
    if (head == "GL" && value >= 1)
      factors.push_back(GroupSpec::GL(value));
    else if (head == "SL" && value >= 1)
      factors.push_back(GroupSpec::SL(value));
    else if (head == "SO" && value >= 1)
      factors.push_back(GroupSpec::SO(value));
    else if (head == "Spin" && value >= 1)
      factors.push_back(GroupSpec::Spin(value));
    else if (head == "Sp" && value >= 1)
      factors.push_back(GroupSpec::Sp(value));
    else if (tok == "U1")
      factors.push_back(GroupSpec::U1());
    else if (tok == "F4")
      factors.push_back(GroupSpec::F4());
    else if (tok == "E6")
      factors.push_back(GroupSpec::E6());
    else
      throw std::invalid_argument("unknown group '" + tok + "'");
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (factors.empty()) throw std::invalid_argument("empty group spec");
  return GroupSpec::product(std::move(factors));
}

HomogeneousPair parse_pair(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size())
    throw std::invalid_argument("pair spec must look like G/H, got '" + text + "'");
  return HomogeneousPair{parse_group(text.substr(0, slash)), parse_group(text.substr(slash + 1))};
}

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long pow2(int n) { return 1LL << n; }

}  // namespace

void self_check() {
  auto expect = [](bool ok, const std::string& what) {
    if (!ok) throw InvariantBreach("degree table self-check failed: " + what);
  };
  for (int n = 1; n <= 12; ++n) {
    expect(weyl_order(GroupSpec::GL(n)) == factorial(n), "GL" + std::to_string(n));
    expect(weyl_order(GroupSpec::SL(n)) == factorial(n), "SL" + std::to_string(n));
    expect(weyl_order(GroupSpec::Sp(n)) == pow2(n) * factorial(n), "Sp" + std::to_string(n));
    expect(weyl_order(GroupSpec::SO(2 * n + 1)) == pow2(n) * factorial(n),
           "SO" + std::to_string(2 * n + 1));
    expect(weyl_order(GroupSpec::SO(2 * n)) == pow2(n - 1) * factorial(n),
           "SO" + std::to_string(2 * n));
    expect(invariant_degrees(GroupSpec::SO(2 * n + 1)) == invariant_degrees(GroupSpec::Sp(n)),
           "Langlands agreement at rank " + std::to_string(n));
    expect(invariant_degrees(GroupSpec::Spin(2 * n + 1)) ==
               invariant_degrees(GroupSpec::SO(2 * n + 1)),
           "Spin/SO odd " + std::to_string(n));
    expect(invariant_degrees(GroupSpec::Spin(2 * n)) == invariant_degrees(GroupSpec::SO(2 * n)),
           "Spin/SO even " + std::to_string(n));
  }
  expect(weyl_order(GroupSpec::F4()) == 1152, "F4");
  expect(weyl_order(GroupSpec::E6()) == 51840, "E6");
  expect(weyl_order(GroupSpec::U1()) == 1, "U1");
}

}  // namespace evenflows::weyl
