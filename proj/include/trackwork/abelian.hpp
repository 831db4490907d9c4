#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trackwork/intmatrix.hpp"
#include "trackwork/smith.hpp"

namespace trackwork {

/// Finitely generated abelian group in invariant-factor form,
///   Z^free_rank  (+)  Z/d_1 (+) ... (+) Z/d_k   with  d_1 | d_2 | ... , d_i >= 2.
/// Elements are integer coordinate vectors (free coordinates first); torsion
/// coordinates are reduced to [0, d_i) on read.
struct AbGroup {
  int free_rank = 0;
  std::vector<Int> torsion;

  AbGroup() = default;
  AbGroup(int fr, std::vector<Int> tors) : free_rank(fr), torsion(std::move(tors)) {
    if (free_rank < 0) throw std::invalid_argument("AbGroup: negative free rank");
    for (size_t i = 0; i < torsion.size(); ++i) {
      if (torsion[i] < 2) throw std::invalid_argument("AbGroup: torsion factor < 2");
      if (i > 0 && torsion[i] % torsion[i - 1] != 0)
        throw std::invalid_argument("AbGroup: torsion factors not in divisibility order");
    }
  }

  static AbGroup zero() { return AbGroup(0, {}); }
  static AbGroup free_abelian(int r) { return AbGroup(r, {}); }
  static AbGroup cyclic(long d) { return d == 0 ? free_abelian(1) : AbGroup(0, {Int(d)}); }

  int dim() const { return free_rank + static_cast<int>(torsion.size()); }
  bool is_trivial() const { return dim() == 0; }
  bool is_finite() const { return free_rank == 0; }

  Int order() const {
    if (!is_finite()) throw std::logic_error("AbGroup: infinite group has no order");
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
  }

  bool has_even_torsion() const {
    for (const Int& d : torsion)
      if (d % 2 == 0) return true;
    return false;
  }

  std::vector<Int> reduce(std::vector<Int> v) const {
    if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("AbGroup: element size");
    for (size_t i = 0; i < torsion.size(); ++i) {
      Int& c = v[free_rank + i];
      c = floor_mod(c, torsion[i]);
    }
    return v;
  }

  std::vector<Int> zero_element() const { return std::vector<Int>(static_cast<size_t>(dim())); }

  bool is_zero(const std::vector<Int>& v) const {
    auto r = reduce(v);
    for (const Int& c : r)
      if (c != 0) return false;
    return true;
  }

  bool equal(const std::vector<Int>& a, const std::vector<Int>& b) const {
    return reduce(a) == reduce(b);
  }

  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const {
    auto r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return reduce(r);
  }

  std::vector<Int> neg(const std::vector<Int>& a) const {
    auto r = a;
    for (Int& c : r) c = -c;
    return reduce(r);
  }

  std::vector<Int> scale(const Int& k, const std::vector<Int>& a) const {
    auto r = a;
    for (Int& c : r) c *= k;
    return reduce(r);
  }

  /// Diagonal relation matrix: columns generate the kernel of Z^dim -> group.
  IntMatrix relation_matrix() const {
    IntMatrix rel(dim(), static_cast<int>(torsion.size()));
    for (size_t i = 0; i < torsion.size(); ++i)
      rel(free_rank + static_cast<int>(i), static_cast<int>(i)) = torsion[i];
    return rel;
  }

  /// All elements (finite groups only), in lexicographic coordinate order.
  std::vector<std::vector<Int>> elements() const {
    if (!is_finite()) throw std::logic_error("AbGroup: cannot enumerate infinite group");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(torsion.size(), Int(0));
    while (true) {
      out.push_back(cur);
      int i = static_cast<int>(torsion.size()) - 1;
      for (; i >= 0; --i) {
        if (++cur[i] < torsion[i]) break;
        cur[i] = 0;
      }
      if (i < 0) break;
    }
    return out;
  }

  /// Index of a reduced element in the enumeration above.
  size_t element_index(const std::vector<Int>& v) const {
    auto r = reduce(v);
    size_t idx = 0;
    for (size_t i = 0; i < torsion.size(); ++i)
      idx = idx * static_cast<size_t>(torsion[i]) + static_cast<size_t>(r[free_rank + i]);
    return idx;
  }

  std::vector<Int> random_element(Rng& rng, long free_bound = 9) const {
    std::vector<Int> v(static_cast<size_t>(dim()));
    for (int i = 0; i < free_rank; ++i) v[i] = rng.range(-free_bound, free_bound);
    for (size_t i = 0; i < torsion.size(); ++i)
      v[free_rank + i] = Int(rng.below(static_cast<std::uint64_t>(torsion[i])));
    return v;
  }

  bool operator==(const AbGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const AbGroup& o) const { return !(*this == o); }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < free_rank; ++i) {
      os << (first ? "" : " + ") << "Z";
      first = false;
    }
    for (const Int& d : torsion) {
      os << (first ? "" : " + ") << "Z/" << d;
      first = false;
    }
    return os.str();
  }
};

/// Is the integer matrix a well-defined homomorphism src -> dst on coordinates?
/// (It must carry each src relation into the dst relation lattice.)
inline bool is_valid_hom(const AbGroup& src, const AbGroup& dst, const IntMatrix& m) {
  if (m.rows() != dst.dim() || m.cols() != src.dim()) return false;
  for (size_t j = 0; j < src.torsion.size(); ++j) {
    std::vector<Int> col(static_cast<size_t>(dst.dim()));
    for (int i = 0; i < dst.dim(); ++i) col[i] = src.torsion[j] * m(i, src.free_rank + static_cast<int>(j));
    if (!dst.is_zero(dst.reduce(col))) return false;
  }
  return true;
}

inline std::vector<Int> apply_hom(const AbGroup& dst, const IntMatrix& m, const std::vector<Int>& x) {
  return dst.reduce(m.apply(x));
}

}  // namespace trackwork
