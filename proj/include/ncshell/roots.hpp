#pragma once

// Root systems of finite reflection groups.
//
// Positive roots are indexed 0..N-1. Throughout the library a *signed root*
// is encoded as an int32 code +(i+1) for the positive root i and -(i+1) for
// its negative; the reflection of root i is referred to by the index i.
//
// Geometric types carry exact coordinates. I2(m) is modelled
// combinatorially: the 2m roots sit at angles k*pi/m, k = 0..2m-1, the
// positive ones being k < m, and every group action is index arithmetic
// modulo 2m.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncshell/coxeter_type.hpp"
#include "ncshell/errors.hpp"
#include "ncshell/linalg.hpp"
#include "ncshell/scalar.hpp"

namespace ncshell {

using RootCode = std::int32_t;

inline RootCode positive_code(std::size_t index) { return static_cast<RootCode>(index + 1); }
inline RootCode negative_code(std::size_t index) { return -static_cast<RootCode>(index + 1); }
inline std::size_t code_index(RootCode c) { return static_cast<std::size_t>(std::abs(c)) - 1; }
inline bool code_positive(RootCode c) { return c > 0; }

struct SignedRoot {
  std::size_t index = 0;
  int sign = 1;
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

struct CodeVectorHash {
  std::size_t operator()(const std::vector<RootCode>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (RootCode c : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c));
      h *= 1099511628211ull;
    }
    return h;
  }
};

class RootSystem;
RootSystem build_root_system(const CoxeterType& type);

class RootSystem {
 public:
  const CoxeterType& type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t size() const { return num_positive_; }
  int coxeter_number() const { return type_.coxeter_number(); }
  std::vector<int> degrees() const { return type_.degrees(); }
  bool crystallographic() const { return type_.crystallographic(); }

  bool dihedral() const { return dihedral_m_ > 0; }
  int dihedral_m() const { return dihedral_m_; }

  // Ambient dimension of the coordinate space (0 for the dihedral model).
  std::size_t ambient_dim() const { return ambient_dim_; }

  const std::vector<std::size_t>& simple() const { return simple_; }
  bool is_simple(std::size_t r) const {
    return std::find(simple_.begin(), simple_.end(), r) != simple_.end();
  }
  // Two blocks of pairwise orthogonal simple roots, each sorted by index.
  const std::array<std::vector<std::size_t>, 2>& bipartition() const { return bipartition_; }
  // 1 or 2 for simple roots, 0 otherwise.
  int block_of(std::size_t r) const {
    for (int b = 0; b < 2; ++b)
      for (auto s : bipartition_[b])
        if (s == r) return b + 1;
    return 0;
  }

  const Vec& root(std::size_t i) const {
    require_geometry("root coordinates");
    return roots_.at(i);
  }
  Vec signed_root_vector(RootCode c) const {
    return code_positive(c) ? root(code_index(c)) : -root(code_index(c));
  }
  // Coordinates of positive root i in the basis of simple roots (ordered as
  // simple()).
  const Vec& simple_coordinates(std::size_t i) const {
    require_geometry("simple-root coordinates");
    return simple_coords_.at(i);
  }
  const Scalar& gram(std::size_t i, std::size_t j) const {
    require_geometry("inner products");
    return gram_[i * num_positive_ + j];
  }

  // Sign of the inner product (root i, root j) of two positive roots.
  int inner_sign(std::size_t i, std::size_t j) const {
    if (dihedral()) {
      const int d = std::abs(static_cast<int>(i) - static_cast<int>(j));
      const int twice = 2 * d;
      if (twice < dihedral_m_) return 1;
      if (twice == dihedral_m_) return 0;
      return -1;
    }
    return gram(i, j).sign();
  }

  // Image of a signed root under the reflection t_r.
  RootCode reflect(std::size_t r, RootCode c) const {
    const RootCode img = reflection_images_[r][code_index(c)];
    return code_positive(c) ? img : -img;
  }
  const std::vector<RootCode>& reflection_images(std::size_t r) const {
    return reflection_images_.at(r);
  }
  std::optional<std::size_t> reflection_with_images(const std::vector<RootCode>& images) const {
    auto it = reflection_lookup_.find(images);
    if (it == reflection_lookup_.end()) return std::nullopt;
    return it->second;
  }

  // Index and sign of v if +-v is a root.
  std::optional<SignedRoot> lookup(const Vec& v) const {
    require_geometry("root lookup");
    if (v.size() != ambient_dim_) {
      throw DimensionError("lookup vector has dimension " + std::to_string(v.size()) +
                           ", expected " + std::to_string(ambient_dim_));
    }
    if (auto it = index_.find(v); it != index_.end()) return SignedRoot{it->second, 1};
    if (auto it = index_.find(-v); it != index_.end()) return SignedRoot{it->second, -1};
    return std::nullopt;
  }

  // Angle index of a signed root in the dihedral model.
  int angle_index(RootCode c) const {
    const int i = static_cast<int>(code_index(c));
    return code_positive(c) ? i : i + dihedral_m_;
  }
  RootCode code_from_angle(int a) const {
    const int m = dihedral_m_;
    a = ((a % (2 * m)) + 2 * m) % (2 * m);
    return a < m ? positive_code(static_cast<std::size_t>(a))
                 : negative_code(static_cast<std::size_t>(a - m));
  }

 private:
  friend RootSystem build_root_system(const CoxeterType& type);
  friend RootSystem build_dihedral(const CoxeterType& type);
  friend RootSystem build_geometric(const CoxeterType& type, const std::vector<Vec>& simple);

  void require_geometry(const char* what) const {
    if (dihedral()) {
      throw DomainError(std::string(what) + " are not available for the dihedral model " +
                        type_.name());
    }
  }

  void finish_bipartition();
  void finish_reflections();

  CoxeterType type_;
  int rank_ = 0;
  std::size_t num_positive_ = 0;
  int dihedral_m_ = 0;
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> roots_;
  std::vector<Vec> simple_coords_;
  std::vector<Scalar> gram_;
  std::vector<std::size_t> simple_;
  std::array<std::vector<std::size_t>, 2> bipartition_;
  std::map<Vec, std::size_t, VecLess> index_;
  std::vector<std::vector<RootCode>> reflection_images_;
  std::unordered_map<std::vector<RootCode>, std::size_t, CodeVectorHash> reflection_lookup_;
};

// The Coxeter graph joins simple roots that are not orthogonal. Blocks are
// filled by 2-colouring each connected component, starting every component
// from its smallest root index in block one.
inline void RootSystem::finish_bipartition() {
  const std::size_t l = simple_.size();
  std::vector<int> colour(l, -1);
  std::vector<std::size_t> order(l);
  for (std::size_t i = 0; i < l; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return simple_[a] < simple_[b]; });
  for (auto start : order) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      const auto a = q.front();
      q.pop();
      for (std::size_t b = 0; b < l; ++b) {
        if (b == a || inner_sign(simple_[a], simple_[b]) == 0) continue;
        if (colour[b] == -1) {
          colour[b] = 1 - colour[a];
          q.push(b);
        } else if (colour[b] == colour[a]) {
          throw InternalError("Coxeter graph of " + type_.name() + " is not bipartite");
        }
      }
    }
  }
  for (std::size_t i = 0; i < l; ++i) bipartition_[colour[i]].push_back(simple_[i]);
  for (auto& block : bipartition_) std::sort(block.begin(), block.end());
}

inline void RootSystem::finish_reflections() {
  for (std::size_t r = 0; r < reflection_images_.size(); ++r)
    reflection_lookup_.emplace(reflection_images_[r], r);
  const auto expected = static_cast<std::size_t>(rank_ * type_.coxeter_number() / 2);
  if (num_positive_ != expected) {
    throw InternalError(type_.name() + ": built " + std::to_string(num_positive_) +
                        " positive roots, expected l*h/2 = " + std::to_string(expected));
  }
}

inline RootSystem build_dihedral(const CoxeterType& type) {
  RootSystem rs;
  const int m = type.parameter;
  rs.type_ = type;
  rs.rank_ = 2;
  rs.dihedral_m_ = m;
  rs.num_positive_ = static_cast<std::size_t>(m);
  rs.simple_ = {0, static_cast<std::size_t>(m - 1)};
  // t_k reflects angle index x to 2k + m - x (mod 2m).
  rs.reflection_images_.assign(m, std::vector<RootCode>(m));
  for (int k = 0; k < m; ++k)
    for (int x = 0; x < m; ++x) rs.reflection_images_[k][x] = rs.code_from_angle(2 * k + m - x);
  rs.finish_bipartition();
  rs.finish_reflections();
  return rs;
}

inline RootSystem build_geometric(const CoxeterType& type, const std::vector<Vec>& simple) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = static_cast<int>(simple.size());
  rs.ambient_dim_ = simple.front().size();
  const std::size_t l = simple.size();

  std::vector<Scalar> norms(l);
  for (std::size_t i = 0; i < l; ++i) norms[i] = inner(simple[i], simple[i]);

  // Orbit of the simple roots under the simple reflections, tracking
  // simple-root coordinates alongside ambient coordinates.
  std::map<Vec, Vec, VecLess> all;
  std::queue<Vec> q;
  for (std::size_t i = 0; i < l; ++i) {
    all.emplace(simple[i], unit_vector(l, i));
    q.push(simple[i]);
  }
  while (!q.empty()) {
    const Vec beta = q.front();
    q.pop();
    const Vec coords = all.at(beta);
    for (std::size_t i = 0; i < l; ++i) {
      const Scalar c = Scalar(2) * inner(beta, simple[i]) / norms[i];
      if (c.is_zero()) continue;
      Vec image = beta - c * simple[i];
      if (all.count(image)) continue;
      Vec image_coords = coords;
      image_coords[i] -= c;
      all.emplace(image, std::move(image_coords));
      q.push(std::move(image));
    }
  }

  // Positive roots have nonnegative simple coordinates; index them in
  // descending lexicographic order of ambient coordinates.
  std::vector<std::pair<Vec, Vec>> positive;
  for (const auto& [v, c] : all) {
    auto first = std::find_if(c.begin(), c.end(), [](const Scalar& x) { return !x.is_zero(); });
    if (first == c.end()) throw InternalError("zero root in closure");
    if (first->sign() > 0) {
      for (const auto& x : c)
        if (x.sign() < 0) throw InternalError("root with mixed-sign simple coordinates");
      positive.emplace_back(v, c);
    }
  }
  std::sort(positive.begin(), positive.end(),
            [](const auto& a, const auto& b) { return VecLess{}(b.first, a.first); });
  rs.num_positive_ = positive.size();
  for (std::size_t i = 0; i < positive.size(); ++i) {
    rs.roots_.push_back(positive[i].first);
    rs.simple_coords_.push_back(positive[i].second);
    rs.index_.emplace(positive[i].first, i);
  }
  for (const auto& s : simple) rs.simple_.push_back(rs.index_.at(s));

  const std::size_t n = rs.num_positive_;
  rs.gram_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      rs.gram_[i * n + j] = inner(rs.roots_[i], rs.roots_[j]);
      rs.gram_[j * n + i] = rs.gram_[i * n + j];
    }

  rs.reflection_images_.assign(n, std::vector<RootCode>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const Scalar norm = rs.gram_[r * n + r];
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar c = Scalar(2) * rs.gram_[j * n + r] / norm;
      const Vec image = rs.roots_[j] - c * rs.roots_[r];
      const auto hit = rs.lookup(image);
      if (!hit) throw InternalError("reflection image is not a root");
      rs.reflection_images_[r][j] =
          hit->sign > 0 ? positive_code(hit->index) : negative_code(hit->index);
    }
  }
  rs.finish_bipartition();
  rs.finish_reflections();
  return rs;
}

namespace detail {

inline Scalar half(long long p) { return Scalar::fraction(p, 2); }

inline std::vector<Vec> simple_roots_for(const CoxeterType& t) {
  std::vector<Vec> s;
  const int n = t.parameter;
  auto e_diff = [](std::size_t dim, std::size_t i, std::size_t j) {
    Vec v(dim);
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  const Scalar tau = Scalar::golden();
  const Scalar tau1 = tau - Scalar(1);  // 1/tau
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) s.push_back(e_diff(n + 1, i, i + 1));
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) s.push_back(e_diff(n, i, i + 1));
      s.push_back(unit_vector(n, n - 1));
      break;
    case Family::D: {
      for (int i = 0; i + 1 < n; ++i) s.push_back(e_diff(n, i, i + 1));
      Vec last(n);
      last[n - 2] = 1;
      last[n - 1] = 1;
      s.push_back(last);
      break;
    }
    case Family::G2:
      s.push_back(Vec{1, -1, 0});
      s.push_back(Vec{-2, 1, 1});
      break;
    case Family::F4:
      s.push_back(Vec{0, 1, -1, 0});
      s.push_back(Vec{0, 0, 1, -1});
      s.push_back(Vec{0, 0, 0, 1});
      s.push_back(Vec{half(1), half(-1), half(-1), half(-1)});
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      // Bourbaki simple roots of E8; E6 and E7 take the first 6 and 7.
      s.push_back(Vec{half(1), half(-1), half(-1), half(-1), half(-1), half(-1), half(-1),
                      half(1)});
      Vec a2(8);
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a2);
      for (std::size_t i = 0; i < 6; ++i) s.push_back(e_diff(8, i + 1, i) );
      s.resize(static_cast<std::size_t>(t.rank()));
      break;
    }
    case Family::H3:
      // Coxeter graph s1 - s3 (label 3), s3 - s2 (label 5); all norms 4.
      s.push_back(Vec{-tau, 1, tau1});
      s.push_back(Vec{tau1, tau, -1});
      s.push_back(Vec{tau1, -tau, 1});
      break;
    case Family::H4:
      // Coxeter graph s1 - s3 - s2 (labels 3, 3), s2 - s4 (label 5).
      s.push_back(Vec{-tau, -tau1, 0, 1});
      s.push_back(Vec{tau1, 0, -tau, 1});
      s.push_back(Vec{0, tau, tau1, -1});
      s.push_back(Vec{0, -1, tau, -tau1});
      break;
    case Family::I2:
      break;
  }
  return s;
}

}  // namespace detail

inline RootSystem build_root_system(const CoxeterType& type) {
  type.validate();
  if (type.family == Family::I2) return build_dihedral(type);
  return build_geometric(type, detail::simple_roots_for(type));
}

// Index and sign of v if +-v is a root, absent otherwise.
inline std::optional<SignedRoot> root_lookup(const RootSystem& rs, const Vec& v) {
  return rs.lookup(v);
}

// ---------------------------------------------------------------------------
// Rank-2 induced subsystems.

struct Rank2Subsystem {
  std::vector<std::size_t> members;  // positive roots in the span, ascending index
  bool irreducible = false;
  // The two indecomposable members, smaller index first.
  std::pair<std::size_t, std::size_t> simple_pair{0, 0};
  // Members sorted by angle from simple_pair.first to simple_pair.second;
  // this is the t_1, ..., t_m enumeration of a dihedral group.
  std::vector<std::size_t> rotational_order;
};

namespace detail {

// Signs of the coefficients of root k in the basis (p, q), scaled by the
// positive Gram determinant of p, q.
inline std::pair<Scalar, Scalar> scaled_coefficients(const RootSystem& rs, std::size_t p,
                                                     std::size_t q, std::size_t k) {
  const Scalar& gpp = rs.gram(p, p);
  const Scalar& gqq = rs.gram(q, q);
  const Scalar& gpq = rs.gram(p, q);
  const Scalar& gkp = rs.gram(k, p);
  const Scalar& gkq = rs.gram(k, q);
  return {gkp * gqq - gkq * gpq, gkq * gpp - gkp * gpq};
}

inline bool in_span(const RootSystem& rs, std::size_t i, std::size_t j, std::size_t k) {
  const Scalar& a = rs.gram(i, i);
  const Scalar& b = rs.gram(i, j);
  const Scalar& c = rs.gram(i, k);
  const Scalar& d = rs.gram(j, j);
  const Scalar& e = rs.gram(j, k);
  const Scalar& f = rs.gram(k, k);
  const Scalar det = a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c);
  return det.is_zero();
}

}  // namespace detail

// Completes a rank-2 subsystem from its member set (at least two positive
// roots spanning a plane): finds the simple pair and the rotational order.
inline Rank2Subsystem make_rank2(const RootSystem& rs, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() < 2) throw DegeneracyError("rank-2 subsystem needs two roots");
  Rank2Subsystem out;
  out.members = members;
  out.irreducible = members.size() >= 3;
  if (rs.dihedral()) {
    // Angles increase with the index, all within [0, pi).
    out.simple_pair = {members.front(), members.back()};
    out.rotational_order = members;
    return out;
  }
  if (members.size() == 2) {
    out.simple_pair = {members[0], members[1]};
    out.rotational_order = members;
    return out;
  }
  // A member is simple iff it is not a positive combination of two others;
  // equivalently the simple pair is the one pair in whose basis every other
  // member has strictly positive coefficients.
  bool found = false;
  for (std::size_t a = 0; a < members.size() && !found; ++a)
    for (std::size_t b = a + 1; b < members.size() && !found; ++b) {
      bool ok = true;
      for (std::size_t k = 0; k < members.size() && ok; ++k) {
        if (k == a || k == b) continue;
        auto [x, y] = detail::scaled_coefficients(rs, members[a], members[b], members[k]);
        ok = x.sign() > 0 && y.sign() > 0;
      }
      if (ok) {
        out.simple_pair = {members[a], members[b]};
        found = true;
      }
    }
  if (!found) throw InternalError("rank-2 subsystem without a simple pair");
  const auto [p, q] = out.simple_pair;
  std::vector<std::pair<std::size_t, std::pair<Scalar, Scalar>>> keyed;
  for (auto k : members) keyed.emplace_back(k, detail::scaled_coefficients(rs, p, q, k));
  // Angle from p grows with y/x; all coefficients are >= 0 and x = 0 only
  // for q itself, so cross-multiplication compares angles.
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
    const auto& [x1, y1] = l.second;
    const auto& [x2, y2] = r.second;
    return y1 * x2 < y2 * x1;
  });
  for (const auto& [k, _] : keyed) out.rotational_order.push_back(k);
  return out;
}

// The rank-2 subsystem spanned by positive roots i and j.
inline Rank2Subsystem rank2_subsystem(const RootSystem& rs, std::size_t i, std::size_t j) {
  if (i >= rs.size() || j >= rs.size()) throw DomainError("root index out of range");
  if (i == j) throw DegeneracyError("proportional roots do not span a plane");
  std::vector<std::size_t> members;
  if (rs.dihedral()) {
    for (std::size_t k = 0; k < rs.size(); ++k) members.push_back(k);
  } else {
    for (std::size_t k = 0; k < rs.size(); ++k)
      if (k == i || k == j || detail::in_span(rs, i, j, k)) members.push_back(k);
  }
  return make_rank2(rs, std::move(members));
}

// Every rank-2 induced subsystem exactly once, in order of its smallest
// spanning pair of root indices.
inline std::vector<Rank2Subsystem> rank2_subsystems(const RootSystem& rs) {
  const std::size_t n = rs.size();
  std::vector<char> done(n * n, 0);
  std::vector<Rank2Subsystem> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (done[i * n + j]) continue;
      Rank2Subsystem sub = rank2_subsystem(rs, i, j);
      for (auto a : sub.members)
        for (auto b : sub.members) done[a * n + b] = 1;
      out.push_back(std::move(sub));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Root-lattice predicates (crystallographic types only).

inline void require_crystallographic(const RootSystem& rs, const char* what) {
  if (!rs.crystallographic()) {
    throw DomainError(std::string(what) + " requires a crystallographic type, got " +
                      rs.type().name());
  }
}

// True iff the given roots form a Z-basis of the root lattice, i.e. their
// simple-root coordinate matrix has determinant +-1.
inline bool zbasis_check(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  require_crystallographic(rs, "zbasis_check");
  if (roots.size() != static_cast<std::size_t>(rs.rank())) {
    throw DimensionError("zbasis_check needs exactly rank-many roots");
  }
  Matrix m;
  for (auto r : roots) m.push_back(rs.simple_coordinates(r));
  const Scalar det = determinant(std::move(m));
  return det == Scalar(1) || det == Scalar(-1);
}

// Positive roots of a root subsystem (given as a mask over positive roots)
// that are simple for it: beta is simple iff no other member alpha with
// (alpha, beta) > 0 reflects beta to a positive root.
inline std::vector<std::size_t> subsystem_simple_roots(const RootSystem& rs,
                                                       const std::vector<bool>& mask) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < rs.size(); ++b) {
    if (!mask[b]) continue;
    bool simple = true;
    for (std::size_t a = 0; a < rs.size() && simple; ++a) {
      if (a == b || !mask[a] || rs.inner_sign(a, b) <= 0) continue;
      if (code_positive(rs.reflect(a, positive_code(b)))) simple = false;
    }
    if (simple) out.push_back(b);
  }
  return out;
}

// Certificate that `candidate` is the simple system of the subsystem
// `mask`: candidate is a Z-basis of its root lattice and no difference of
// two candidates is a root of the subsystem. When the certificate holds but
// the candidate differs from the independently computed simple system, a
// PropertyViolation is thrown.
inline bool simple_system_certificate(const RootSystem& rs, const std::vector<bool>& mask,
                                      std::vector<std::size_t> candidate) {
  require_crystallographic(rs, "simple-system certificate");
  std::sort(candidate.begin(), candidate.end());
  for (auto c : candidate)
    if (!mask.at(c)) return false;
  std::vector<Vec> columns;
  for (auto c : candidate) columns.push_back(rs.simple_coordinates(c));
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (!mask[r]) continue;
    std::optional<Vec> x;
    try {
      x = solve_in_span(columns, rs.simple_coordinates(r));
    } catch (const DegeneracyError&) {
      return false;
    }
    if (!x) return false;
    for (const auto& v : *x)
      if (!v.is_integer()) return false;
  }
  for (std::size_t a = 0; a < candidate.size(); ++a)
    for (std::size_t b = a + 1; b < candidate.size(); ++b) {
      const auto hit = rs.lookup(rs.root(candidate[a]) - rs.root(candidate[b]));
      if (hit && mask[hit->index]) return false;
    }
  if (subsystem_simple_roots(rs, mask) != candidate) {
    throw PropertyViolation("simple-system certificate holds for a set that is not simple");
  }
  return true;
}

// Certificate on the whole system: a Z-basis of positive roots
// with no pairwise difference in Phi is the simple system.
inline bool is_simple_system_certificate(const RootSystem& rs,
                                         const std::vector<std::size_t>& roots) {
  if (!zbasis_check(rs, roots)) return false;
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (rs.lookup(rs.root(roots[a]) - rs.root(roots[b]))) return false;
  std::vector<std::size_t> sorted = roots, simple = rs.simple();
  std::sort(sorted.begin(), sorted.end());
  std::sort(simple.begin(), simple.end());
  if (sorted != simple) {
    throw PropertyViolation("certified set differs from the simple system of " +
                            rs.type().name());
  }
  return true;
}

}  // namespace ncshell
