#pragma once

// Group elements as signed permutations of the positive roots, reflection
// length through fixed spaces, and the absolute order.
//
// Composition convention: compose(u, v) is the element "uv", acting by v
// first and then u. Every product t_1 t_2 ... t_k in the library is
// evaluated under this convention.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ncshell/errors.hpp"
#include "ncshell/linalg.hpp"
#include "ncshell/roots.hpp"

namespace ncshell {

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<RootCode> images) : images_(std::move(images)) {}

  static GroupElement identity(std::size_t num_positive) {
    std::vector<RootCode> im(num_positive);
    for (std::size_t i = 0; i < num_positive; ++i) im[i] = positive_code(i);
    return GroupElement(std::move(im));
  }

  // Canonical key: images_[i] is the signed code of w(root i).
  const std::vector<RootCode>& key() const { return images_; }
  std::size_t degree() const { return images_.size(); }

  RootCode operator()(RootCode c) const {
    const RootCode img = images_[code_index(c)];
    return code_positive(c) ? img : -img;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != positive_code(i)) return false;
    return true;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<RootCode> images_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    return CodeVectorHash{}(g.key());
  }
};

// uv: apply v, then u.
inline GroupElement compose(const GroupElement& u, const GroupElement& v) {
  if (u.degree() != v.degree()) throw DimensionError("composing elements of different groups");
  std::vector<RootCode> im(v.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = u(v.key()[i]);
  return GroupElement(std::move(im));
}

inline GroupElement inverse(const GroupElement& w) {
  std::vector<RootCode> im(w.degree());
  for (std::size_t i = 0; i < im.size(); ++i) {
    const RootCode c = w.key()[i];
    im[code_index(c)] = code_positive(c) ? positive_code(i) : negative_code(i);
  }
  return GroupElement(std::move(im));
}

inline GroupElement reflection_element(const RootSystem& rs, std::size_t r) {
  if (r >= rs.size()) throw DomainError("reflection index out of range");
  return GroupElement(rs.reflection_images(r));
}

// The reflection index of w, if w is a reflection.
inline std::optional<std::size_t> as_reflection(const RootSystem& rs, const GroupElement& w) {
  return rs.reflection_with_images(w.key());
}

inline std::size_t element_order(const GroupElement& w) {
  GroupElement p = w;
  std::size_t k = 1;
  while (!p.is_identity()) {
    p = compose(w, p);
    ++k;
  }
  return k;
}

// Product t_{r_0} t_{r_1} ... t_{r_k}.
inline GroupElement product_of_reflections(const RootSystem& rs,
                                           std::span<const std::size_t> reflections) {
  GroupElement p = GroupElement::identity(rs.size());
  for (auto r : reflections) p = compose(p, reflection_element(rs, r));
  return p;
}

namespace detail {

// Dihedral elements act on angle indices as x -> x + c (rotations) or
// x -> c - x (reflections).
struct DihedralForm {
  bool reflection = false;
  int shift = 0;  // c mod 2m
};

inline DihedralForm dihedral_form(const RootSystem& rs, const GroupElement& w) {
  const int m = rs.dihedral_m();
  const int a0 = rs.angle_index(w(positive_code(0)));
  const int a1 = rs.angle_index(w(positive_code(1 % rs.size())));
  const int step = ((a1 - a0) % (2 * m) + 2 * m) % (2 * m);
  DihedralForm f;
  f.reflection = step == 2 * m - 1;
  f.shift = a0;
  return f;
}

}  // namespace detail

// Basis of the fixed space F(w) inside V = span(Phi), in simple-root
// coordinates. Geometric types only.
inline std::vector<Vec> fixed_space_basis(const RootSystem& rs, const GroupElement& w) {
  const std::size_t l = static_cast<std::size_t>(rs.rank());
  Matrix a_minus_i(l, Vec(l));
  for (std::size_t i = 0; i < l; ++i) {
    const RootCode img = w(positive_code(rs.simple()[i]));
    const Vec& c = rs.simple_coordinates(code_index(img));
    const Scalar sign = code_positive(img) ? Scalar(1) : Scalar(-1);
    for (std::size_t r = 0; r < l; ++r) a_minus_i[r][i] = c[r].is_zero() ? Scalar(0) : sign * c[r];
    a_minus_i[i][i] -= 1;
  }
  return nullspace(a_minus_i);
}

// dim F(w), computed inside the span of the roots, so the line fixed by all
// of W(A_n) in R^{n+1} (and the complement of E6, E7 in R^8) is excluded.
inline std::size_t fixed_space_dim(const RootSystem& rs, const GroupElement& w) {
  if (rs.dihedral()) {
    if (w.is_identity()) return 2;
    return detail::dihedral_form(rs, w).reflection ? 1 : 0;
  }
  return fixed_space_basis(rs, w).size();
}

// l_T(w) = rank - dim F(w).
inline std::size_t reflection_length(const RootSystem& rs, const GroupElement& w) {
  return static_cast<std::size_t>(rs.rank()) - fixed_space_dim(rs, w);
}

// u <= v iff l_T(u) + l_T(u^{-1} v) = l_T(v).
inline bool absolute_le(const RootSystem& rs, const GroupElement& u, const GroupElement& v) {
  return reflection_length(rs, u) + reflection_length(rs, compose(inverse(u), v)) ==
         reflection_length(rs, v);
}

// Mask of the reflections t with t <= w, i.e. F(w) inside the hyperplane of t.
inline boost::dynamic_bitset<> reflections_below(const RootSystem& rs, const GroupElement& w) {
  boost::dynamic_bitset<> mask(rs.size());
  if (rs.dihedral()) {
    if (w.is_identity()) return mask;
    const auto f = detail::dihedral_form(rs, w);
    if (!f.reflection) {
      mask.set();
      return mask;
    }
    mask.set(*as_reflection(rs, w));
    return mask;
  }
  const auto basis = fixed_space_basis(rs, w);
  const auto& simple = rs.simple();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    bool inside = true;
    for (const auto& x : basis) {
      Scalar s;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) s += x[i] * rs.gram(simple[i], r);
      if (!s.is_zero()) {
        inside = false;
        break;
      }
    }
    if (inside) mask.set(r);
  }
  return mask;
}

inline bool reflection_below(const RootSystem& rs, std::size_t r, const GroupElement& w) {
  return reflections_below(rs, w).test(r);
}

// t_{s_0} t_{s_1} ... for the simple roots listed in `order`.
inline GroupElement coxeter_element(const RootSystem& rs, std::span<const std::size_t> order) {
  std::vector<std::size_t> sorted(order.begin(), order.end()), simple = rs.simple();
  std::sort(sorted.begin(), sorted.end());
  std::sort(simple.begin(), simple.end());
  if (sorted != simple) throw DomainError("Coxeter element needs a permutation of the simple roots");
  return product_of_reflections(rs, order);
}

// The simple reflections of block one, then block two.
inline std::vector<std::size_t> bipartite_simple_order(const RootSystem& rs,
                                                       bool swap_blocks = false) {
  const auto& blocks = rs.bipartition();
  std::vector<std::size_t> order = blocks[swap_blocks ? 1 : 0];
  const auto& second = blocks[swap_blocks ? 0 : 1];
  order.insert(order.end(), second.begin(), second.end());
  return order;
}

inline GroupElement bipartite_coxeter_element(const RootSystem& rs, bool swap_blocks = false) {
  const auto order = bipartite_simple_order(rs, swap_blocks);
  return coxeter_element(rs, order);
}

// Exact orthogonal matrix of w on the ambient space: w acts on the roots as
// recorded and trivially on their orthogonal complement.
inline Matrix ambient_matrix(const RootSystem& rs, const GroupElement& w) {
  if (rs.dihedral()) throw DomainError("the dihedral model has no matrices");
  const std::size_t dim = rs.ambient_dim();
  Matrix simple_rows;
  for (auto s : rs.simple()) simple_rows.push_back(rs.root(s));
  const auto complement = nullspace(simple_rows);
  Matrix basis, image;  // columns stored as rows, transposed below
  for (auto s : rs.simple()) {
    basis.push_back(rs.root(s));
    image.push_back(rs.signed_root_vector(w(positive_code(s))));
  }
  for (const auto& c : complement) {
    basis.push_back(c);
    image.push_back(c);
  }
  if (basis.size() != dim) throw InternalError("ambient basis has the wrong size");
  return multiply(transpose(image), inverse(transpose(basis)));
}

// v -> v - 2 (v, alpha) / (alpha, alpha) alpha.
inline Matrix reflection_matrix(const RootSystem& rs, std::size_t r) {
  const Vec& a = rs.root(r);
  const Scalar norm = inner(a, a);
  const std::size_t dim = rs.ambient_dim();
  Matrix m = identity_matrix(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m[i][j] -= Scalar(2) * a[i] * a[j] / norm;
  return m;
}

// Element acting on R^n by e_i -> sign_i e_{target_i}. Used for the
// signed-cycle Coxeter elements of types A, B and D.
inline GroupElement element_from_signed_permutation(const RootSystem& rs,
                                                    const std::vector<int>& images) {
  const std::size_t dim = rs.ambient_dim();
  if (images.size() != dim) throw DimensionError("signed permutation has the wrong degree");
  std::vector<RootCode> im(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    Vec v(dim);
    const Vec& a = rs.root(i);
    for (std::size_t c = 0; c < dim; ++c) {
      if (a[c].is_zero()) continue;
      const int t = images[c];
      const std::size_t target = static_cast<std::size_t>(std::abs(t)) - 1;
      v.at(target) = t > 0 ? a[c] : -a[c];
    }
    const auto hit = rs.lookup(v);
    if (!hit) throw DomainError("signed permutation does not preserve the root system");
    im[i] = hit->sign > 0 ? positive_code(hit->index) : negative_code(hit->index);
  }
  return GroupElement(std::move(im));
}

}  // namespace ncshell
