#include "evenflows/higgs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "evenflows/errors.hpp"
#include "evenflows/weyl.hpp"

namespace evenflows::higgs {

Divisor Divisor::of(std::initializer_list<std::pair<PointLabel, long long>> entries) {
  Divisor d;
  for (const auto& [c, m] : entries) d.add(c, m);
  return d;
}

long long Divisor::at(const PointLabel& c) const {
  auto it = support.find(c);
  return it == support.end() ? 0 : it->second;
}

void Divisor::add(const PointLabel& c, long long mult) {
  if (c.empty()) throw std::domain_error("empty point label");
  auto [it, inserted] = support.try_emplace(c, 0);
  it->second += mult;
  if (it->second == 0) support.erase(it);
}

bool Divisor::effective() const {
  return std::all_of(support.begin(), support.end(),
                     [](const auto& e) { return e.second > 0; });
}

long long Divisor::degree() const {
  long long d = 0;
  for (const auto& [c, m] : support) d += m;
  return d;
}

DivisorTuple::DivisorTuple(int rank, Divisor d0, std::vector<Divisor> mid)
    : n(rank), delta0(std::move(d0)), middle(std::move(mid)) {
  if (n < 1) throw std::domain_error("rank must be at least 1");
  if (middle.size() != static_cast<size_t>(n - 1))
    throw std::domain_error("expected " + std::to_string(n - 1) + " middle divisors, got " +
                            std::to_string(middle.size()));
  for (const auto& d : middle)
    if (!d.effective()) throw std::domain_error("non-effective middle divisor");
}

DivisorTuple DivisorTuple::zero(int rank) {
  return DivisorTuple(rank, Divisor{}, std::vector<Divisor>(static_cast<size_t>(rank - 1)));
}

const Divisor& DivisorTuple::delta(int i) const {
  if (i < 1 || i > n - 1) throw std::domain_error("divisor index out of range");
  return middle[static_cast<size_t>(i - 1)];
}

WeightMap::WeightMap(int rank, std::map<PointLabel, weights::DominantWeight> a)
    : n(rank), assignments(std::move(a)) {
  if (n < 1) throw std::domain_error("rank must be at least 1");
  for (auto it = assignments.begin(); it != assignments.end();) {
    if (it->second.n != n) throw std::domain_error("weight rank mismatch in weight map");
    bool zero = std::all_of(it->second.coords.begin(), it->second.coords.end(),
                            [](long long v) { return v == 0; });
    it = zero ? assignments.erase(it) : std::next(it);
  }
}

WeightMap mu_from_delta(const DivisorTuple& delta) {
  std::set<PointLabel> points;
  for (const auto& [c, m] : delta.delta0.support) points.insert(c);
  for (const auto& d : delta.middle)
    for (const auto& [c, m] : d.support) points.insert(c);
  std::map<PointLabel, weights::DominantWeight> out;
  for (const auto& c : points) {
    std::vector<long long> coords(static_cast<size_t>(delta.n));
    for (int i = 1; i <= delta.n - 1; ++i) coords[static_cast<size_t>(i - 1)] = delta.delta(i).at(c);
    coords[static_cast<size_t>(delta.n - 1)] = delta.delta0.at(c);
    out.emplace(c, weights::DominantWeight(delta.n, std::move(coords)));
  }
  return WeightMap(delta.n, std::move(out));
}

DivisorTuple delta_from_mu(const WeightMap& mu) {
  Divisor d0;
  std::vector<Divisor> mid(static_cast<size_t>(mu.n - 1));
  for (const auto& [c, w] : mu.assignments) {
    if (w.coord(mu.n) != 0) d0.add(c, w.coord(mu.n));
    for (int i = 1; i <= mu.n - 1; ++i)
      if (w.coord(i) != 0) mid[static_cast<size_t>(i - 1)].add(c, w.coord(i));
  }
  return DivisorTuple(mu.n, std::move(d0), std::move(mid));
}

std::vector<long long> line_bundle_degrees(const DivisorTuple& delta, long long deg_L0,
                                           int genus, DegreeConvention conv) {
  if (genus < 2) throw std::domain_error("genus must be at least 2");
  const long long canonical = 2LL * genus - 2;
  std::vector<long long> out(static_cast<size_t>(delta.n));
  out[0] = deg_L0;
  long long acc = deg_L0;
  for (int i = 1; i <= delta.n - 1; ++i) {
    int j = conv == DegreeConvention::kThroughI ? i : i - 1;
    acc += (j >= 1 ? delta.delta(j).degree() : 0);
    out[static_cast<size_t>(i)] = acc - static_cast<long long>(i) * canonical;
  }
  return out;
}

bool is_very_stable(const DivisorTuple& delta) {
  std::map<PointLabel, long long> total;
  for (const auto& d : delta.middle)
    for (const auto& [c, m] : d.support) total[c] += m;
  return std::all_of(total.begin(), total.end(), [](const auto& e) { return e.second <= 1; });
}

ClassificationReport classify(const DivisorTuple& delta) {
  ClassificationReport rep;
  rep.very_stable = is_very_stable(delta);

  std::set<PointLabel> points;
  for (const auto& d : delta.middle)
    for (const auto& [c, m] : d.support) points.insert(c);

  const int n = delta.n;
  for (const auto& c : points) {
    long long mid_total = 0;
    std::vector<int> mid_indices;  // contributing indices, with multiplicity
    for (int i = 2; i <= n - 2; ++i) {
      long long m = delta.delta(i).at(c);
      mid_total += m;
      for (long long t = 0; t < std::min<long long>(m, 2); ++t) mid_indices.push_back(i);
      if (m >= 2) rep.witnesses.push_back(Witness{"adjacent-repeat", c, {i}});
    }
    if (mid_total >= 2)
      rep.witnesses.push_back(Witness{"middle-multiple-zero", c, {mid_indices[0], mid_indices[1]}});
    for (int i = 1; i <= n - 1; ++i) {
      if (delta.delta(i).at(c) < 1) continue;
      for (int j = i + 1; j <= n - 1; ++j)
        if ((j - i) % 2 == 1 && delta.delta(j).at(c) >= 1)
          rep.witnesses.push_back(Witness{"odd-parity-pair", c, {i, j}});
    }
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end(), [](const Witness& a, const Witness& b) {
    if (a.point != b.point) return a.point < b.point;
    if (a.indices != b.indices) return a.indices < b.indices;
    return a.kind < b.kind;
  });
  rep.even_very_stable = rep.witnesses.empty();
  return rep;
}

bool classify_via_weights(const DivisorTuple& delta) {
  const WeightMap mu = mu_from_delta(delta);
  return std::all_of(mu.assignments.begin(), mu.assignments.end(),
                     [](const auto& e) { return weights::is_even_minuscule(e.second); });
}

std::vector<HeckeOp> hecke_path(const WeightMap& mu) {
  std::vector<HeckeOp> ops;
  for (const auto& [c, w] : mu.assignments) {
    if (w.coord(mu.n) < 0)
      throw std::domain_error("weight at " + c +
                              " has negative omega_n coefficient; no elementary Hecke expansion");
    for (int k = 1; k <= mu.n; ++k)
      for (long long t = 0; t < w.coord(k); ++t) ops.push_back(HeckeOp{c, k});
  }
  return ops;
}

DivisorTuple apply_hecke(const DivisorTuple& delta, const HeckeOp& op) {
  if (op.index < 1 || op.index > delta.n) throw std::domain_error("Hecke index out of range");
  DivisorTuple out = delta;
  if (op.index == delta.n)
    out.delta0.add(op.point, 1);
  else
    out.middle[static_cast<size_t>(op.index - 1)].add(op.point, 1);
  return out;
}

long long hitchin_multiplicity(int n, int k) {
  if (n < 1 || k < 1 || k >= n) throw std::domain_error("need 0 < k < n");
  using weyl::GroupSpec;
  return weyl::weyl_order(GroupSpec::GL(n)) /
         (weyl::weyl_order(GroupSpec::GL(k)) * weyl::weyl_order(GroupSpec::GL(n - k)));
}

long long even_hitchin_multiplicity(int n2, int k2) {
  if (n2 % 2 != 0 || k2 % 2 != 0)
    throw std::domain_error("even multiplicity needs even rank and index");
  if (k2 < 1 || k2 >= n2) throw std::domain_error("need 0 < k2 < n2");
  using weyl::GroupSpec;
  const long long sig = weyl::signature(
      {GroupSpec::GL(n2), GroupSpec::product({GroupSpec::GL(k2), GroupSpec::GL(n2 - k2)})});
  const int n = n2 / 2, k = k2 / 2;
  const long long chi = weyl::euler_characteristic(
      {GroupSpec::Sp(n), GroupSpec::product({GroupSpec::Sp(k), GroupSpec::Sp(n - k)})});
  if (sig != chi)
    throw InvariantBreach("signature of Gr_" + std::to_string(k2) + "(C^" + std::to_string(n2) +
                          ") disagrees with the quaternionic Euler characteristic");
  return sig;
}

}  // namespace evenflows::higgs
