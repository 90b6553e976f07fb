#include "gutsbound/ibundle.hpp"

#include <algorithm>

namespace gutsbound::ibundles {

namespace {

void check_order(long v) {
  core::ConeLabel check(v);  // enforces v >= 2 and the cap
  (void)check;
}

}  // namespace

IBundleSpec::IBundleSpec(IBundleType t, std::array<long, 4> p, int n)
    : type_(t), params_(p), nparams_(n) {
  for (int i = 0; i < n; ++i) check_order(params_[std::size_t(i)]);
}

IBundleSpec IBundleSpec::type_i(long a, long b) {
  if (a > b) std::swap(a, b);
  return {IBundleType::I, {a, b, 0, 0}, 2};
}

IBundleSpec IBundleSpec::type_ii(long a, long b, long c) {
  if (b > c) std::swap(b, c);  // the fixed pair is unordered; a is the swapped pair
  return {IBundleType::II, {a, b, c, 0}, 3};
}

IBundleSpec IBundleSpec::type_iii(long a, long b, long c, long d) {
  std::array<long, 4> p{a, b, c, d};
  std::sort(p.begin(), p.end());
  return {IBundleType::III, p, 4};
}

IBundleSpec IBundleSpec::type_iv(long a) { return {IBundleType::IV, {a, 0, 0, 0}, 1}; }

IBundleSpec IBundleSpec::type_v(long a, long b) {
  if (a > b) std::swap(a, b);
  return {IBundleType::V, {a, b, 0, 0}, 2};
}

IBundleSpec IBundleSpec::type_vi(long a, long b) {
  if (a > b) std::swap(a, b);
  return {IBundleType::VI, {a, b, 0, 0}, 2};
}

IBundleSpec IBundleSpec::make(IBundleType type, const std::vector<long>& p) {
  auto need = [&](std::size_t n) {
    if (p.size() != n)
      throw Error(std::string("i-bundle type ") + ibundle_type_name(type) + " takes " +
                  std::to_string(n) + " parameters");
  };
  switch (type) {
    case IBundleType::I: need(2); return type_i(p[0], p[1]);
    case IBundleType::II: need(3); return type_ii(p[0], p[1], p[2]);
    case IBundleType::III: need(4); return type_iii(p[0], p[1], p[2], p[3]);
    case IBundleType::IV: need(1); return type_iv(p[0]);
    case IBundleType::V: need(2); return type_v(p[0], p[1]);
    case IBundleType::VI: need(2); return type_vi(p[0], p[1]);
  }
  throw Error("unknown i-bundle type");
}

std::vector<long> IBundleSpec::params() const {
  return std::vector<long>(params_.begin(), params_.begin() + nparams_);
}

long IBundleSpec::max_param() const {
  long m = 0;
  for (int i = 0; i < nparams_; ++i) m = std::max(m, params_[std::size_t(i)]);
  return m;
}

std::string IBundleSpec::str() const {
  std::string s = ibundle_type_name(type_);
  s += '(';
  for (int i = 0; i < nparams_; ++i) {
    if (i) s += ',';
    s += std::to_string(params_[std::size_t(i)]);
  }
  s += ')';
  return s;
}

core::SphereOrbifold boundary_cone_multiset(const IBundleSpec& spec) {
  const long a = spec.param_count() > 0 ? spec.param(0) : 0;
  const long b = spec.param_count() > 1 ? spec.param(1) : 0;
  const long c = spec.param_count() > 2 ? spec.param(2) : 0;
  const long d = spec.param_count() > 3 ? spec.param(3) : 0;
  switch (spec.type()) {
    case IBundleType::I: return core::SphereOrbifold::of({a, a, b, b});
    case IBundleType::II: return core::SphereOrbifold::of({a, a, b, c});
    case IBundleType::III: return core::SphereOrbifold::of({a, b, c, d});
    case IBundleType::IV: return core::SphereOrbifold::of({a, a, 2, 2});
    case IBundleType::V: return core::SphereOrbifold::of({a, b, 2, 2});
    case IBundleType::VI: return core::SphereOrbifold::of({a, a, b, b});
  }
  throw Error("unknown i-bundle type");
}

std::vector<IBundleSpec> all_specs(long param_bound) {
  if (param_bound < 2) throw Error("i-bundle param bound must be >= 2");
  std::vector<IBundleSpec> out;
  for (long a = 2; a <= param_bound; ++a) {
    out.push_back(IBundleSpec::type_iv(a));
    for (long b = a; b <= param_bound; ++b) {
      out.push_back(IBundleSpec::type_i(a, b));
      out.push_back(IBundleSpec::type_v(a, b));
      out.push_back(IBundleSpec::type_vi(a, b));
    }
  }
  for (long a = 2; a <= param_bound; ++a)
    for (long b = 2; b <= param_bound; ++b)
      for (long c = b; c <= param_bound; ++c) out.push_back(IBundleSpec::type_ii(a, b, c));
  for (long a = 2; a <= param_bound; ++a)
    for (long b = a; b <= param_bound; ++b)
      for (long c = b; c <= param_bound; ++c)
        for (long d = c; d <= param_bound; ++d) out.push_back(IBundleSpec::type_iii(a, b, c, d));
  return out;
}

std::vector<IBundleSpec> compatible_fills(const core::SphereOrbifold& required, long param_bound) {
  std::vector<IBundleSpec> out;
  for (const IBundleSpec& s : all_specs(param_bound))
    if (boundary_cone_multiset(s) == required) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

SingularGraphSummary interior_singular_description(const IBundleSpec& spec) {
  const long a = spec.param_count() > 0 ? spec.param(0) : 0;
  const long b = spec.param_count() > 1 ? spec.param(1) : 0;
  const long c = spec.param_count() > 2 ? spec.param(2) : 0;
  const long d = spec.param_count() > 3 ? spec.param(3) : 0;
  SingularGraphSummary g;
  auto vertex = [](long x) { return std::array<long, 3>{2, 2, x}; };
  switch (spec.type()) {
    case IBundleType::I:
      // reflection circle misses the cone points; exchanged pairs fold to arcs
      g.circle_labels = {2};
      g.arc_labels = {a, b};
      break;
    case IBundleType::II:
      g.circle_labels = {2};
      g.arc_labels = {a};
      g.vertex_labels = {vertex(b), vertex(c)};
      break;
    case IBundleType::III:
      g.circle_labels = {2};
      g.vertex_labels = {vertex(a), vertex(b), vertex(c), vertex(d)};
      break;
    case IBundleType::IV:
      // fixed diameter folds to an order-2 arc; the exchanged pair to an a-arc
      g.arc_labels = {2, a};
      break;
    case IBundleType::V:
      g.arc_labels = {2, a, b};
      g.vertex_labels = {vertex(a), vertex(b)};
      break;
    case IBundleType::VI:
      g.arc_labels = {a, b};  // product: no quotient fixed set
      break;
  }
  std::sort(g.circle_labels.begin(), g.circle_labels.end());
  std::sort(g.arc_labels.begin(), g.arc_labels.end());
  for (auto& v : g.vertex_labels) std::sort(v.begin(), v.end());
  std::sort(g.vertex_labels.begin(), g.vertex_labels.end());
  return g;
}

const char* ibundle_type_name(IBundleType t) {
  switch (t) {
    case IBundleType::I: return "I";
    case IBundleType::II: return "II";
    case IBundleType::III: return "III";
    case IBundleType::IV: return "IV";
    case IBundleType::V: return "V";
    case IBundleType::VI: return "VI";
  }
  return "?";
}

IBundleType ibundle_type_from_name(const std::string& name) {
  if (name == "I") return IBundleType::I;
  if (name == "II") return IBundleType::II;
  if (name == "III") return IBundleType::III;
  if (name == "IV") return IBundleType::IV;
  if (name == "V") return IBundleType::V;
  if (name == "VI") return IBundleType::VI;
  throw Error("unknown i-bundle type name: '" + name + "'");
}

}  // namespace gutsbound::ibundles
