#include "gutsbound/orbifold.hpp"

#include <algorithm>
#include <atomic>

namespace gutsbound::core {

namespace {
std::atomic<long> g_max_order{1'000'000};
}

ConeLabel::ConeLabel(long value) : value_(value) {
  if (value < 2) throw InvalidLabel("cone order < 2");
  if (value > max_order())
    throw InvalidLabel("cone order " + std::to_string(value) + " above cap " +
                       std::to_string(max_order()));
}

long ConeLabel::max_order() { return g_max_order.load(std::memory_order_relaxed); }

void ConeLabel::set_max_order(long cap) {
  if (cap < 2) throw InvalidLabel("cone order cap must be >= 2");
  g_max_order.store(cap, std::memory_order_relaxed);
}

SphereOrbifold::SphereOrbifold(std::vector<ConeLabel> orders) : orders_(std::move(orders)) {
  std::sort(orders_.begin(), orders_.end());
}

SphereOrbifold SphereOrbifold::of(std::initializer_list<long> orders) {
  std::vector<ConeLabel> v;
  v.reserve(orders.size());
  for (long n : orders) v.emplace_back(n);
  return SphereOrbifold(std::move(v));
}

std::string SphereOrbifold::str() const {
  std::string s = "S2(";
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(orders_[i].value());
  }
  s += ')';
  return s;
}

MirroredDiskOrbifold::MirroredDiskOrbifold(ConeLabel n1, ConeLabel n2)
    : n1_(std::min(n1, n2)), n2_(std::max(n1, n2)) {}

MirroredDiskOrbifold MirroredDiskOrbifold::of(long n1, long n2) {
  return {ConeLabel(n1), ConeLabel(n2)};
}

std::string MirroredDiskOrbifold::str() const {
  return "D2*(" + std::to_string(n1_.value()) + "," + std::to_string(n2_.value()) + ")";
}

LabelQuadruple quadruple_of(std::initializer_list<long> orders) {
  if (orders.size() != 4) throw Error("quadruple needs exactly 4 cone orders");
  auto it = orders.begin();
  long a = *it++, b = *it++, c = *it++, d = *it++;
  return {ConeLabel(a), ConeLabel(b), ConeLabel(c), ConeLabel(d)};
}

LabelQuadruple sorted_quadruple(const SphereOrbifold& s) {
  if (s.size() != 4) throw Error("surface " + s.str() + " does not have 4 cone points");
  const auto& o = s.cone_orders();
  return {o[0], o[1], o[2], o[3]};
}

SphereOrbifold multiset_of(const LabelQuadruple& q) {
  return SphereOrbifold(std::vector<ConeLabel>(q.begin(), q.end()));
}

std::string quadruple_str(const LabelQuadruple& q) {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    s += std::to_string(q[std::size_t(i)].value());
  }
  s += ')';
  return s;
}

ExactRational euler_sphere(const SphereOrbifold& s) {
  // chi = 2 - sum (1 - 1/n_i)
  ExactRational chi(2 - static_cast<long long>(s.size()));
  for (const ConeLabel& n : s.cone_orders()) chi += ExactRational::reciprocal_of(n.value());
  return chi;
}

ExactRational euler_mirrored_disk(const MirroredDiskOrbifold& d) {
  // chi = -1 + 1/n1 + 1/n2
  return ExactRational(-1) + ExactRational::reciprocal_of(d.n1().value()) +
         ExactRational::reciprocal_of(d.n2().value());
}

TripleClass classify_triple(ConeLabel p, ConeLabel q, ConeLabel r) {
  ExactRational sum = ExactRational::reciprocal_of(p.value()) +
                      ExactRational::reciprocal_of(q.value()) +
                      ExactRational::reciprocal_of(r.value());
  auto cmp = sum <=> ExactRational(1);
  if (cmp > 0) return TripleClass::Spherical;
  if (cmp == 0) return TripleClass::RigidEuclidean;
  return TripleClass::Hyperbolic;
}

SphereOrbifold double_of_mirrored_disk(const MirroredDiskOrbifold& d) {
  return SphereOrbifold({d.n1(), d.n1(), d.n2(), d.n2()});
}

const char* triple_class_name(TripleClass c) {
  switch (c) {
    case TripleClass::Spherical: return "spherical";
    case TripleClass::RigidEuclidean: return "rigid-euclidean";
    case TripleClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

}  // namespace gutsbound::core
