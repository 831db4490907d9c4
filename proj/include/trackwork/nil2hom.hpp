#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trackwork/intmatrix.hpp"
#include "trackwork/nil2.hpp"

namespace trackwork {

/// Homomorphism between free class-2 nilpotent groups, stored by the images
/// of the source generators. A hom is determined by these images (freeness).
struct Nil2Hom {
  int src_rank = 0;
  int tgt_rank = 0;
  std::vector<Nil2Element> images;  // images[e] = image of x_{e+1}, rank tgt_rank

  Nil2Hom() = default;
  Nil2Hom(int src, int tgt, std::vector<Nil2Element> im)
      : src_rank(src), tgt_rank(tgt), images(std::move(im)) {
    if (static_cast<int>(images.size()) != src_rank)
      throw MalformedInput("Nil2Hom: image count does not match source rank");
    for (const auto& x : images)
      if (x.rank != tgt_rank) throw MalformedInput("Nil2Hom: image rank mismatch");
  }

  bool operator==(const Nil2Hom& o) const {
    return src_rank == o.src_rank && tgt_rank == o.tgt_rank && images == o.images;
  }
  bool operator!=(const Nil2Hom& o) const { return !(*this == o); }
};

inline Nil2Element hom_apply(const Nil2Hom& f, const Nil2Element& a) {
  if (a.rank != f.src_rank) throw MalformedInput("hom_apply: rank mismatch");
  Nil2Element r = Nil2Element::identity(f.tgt_rank);
  for (int i = 0; i < a.rank; ++i)
    if (a.gen[i] != 0) r = nil2_mul(r, nil2_pow(f.images[i], a.gen[i]));
  for (int i = 0; i < a.rank; ++i)
    for (int j = i + 1; j < a.rank; ++j) {
      const Int& c = a.comm[Nil2Element::pair_index(i, j, a.rank)];
      if (c != 0) r = nil2_mul(r, nil2_pow(nil2_commutator(f.images[i], f.images[j]), c));
    }
  return r;
}

/// Composite f . g (g applied first); requires f.src_rank == g.tgt_rank.
inline Nil2Hom hom_compose(const Nil2Hom& f, const Nil2Hom& g) {
  if (f.src_rank != g.tgt_rank) throw MalformedInput("hom_compose: rank mismatch");
  std::vector<Nil2Element> im;
  im.reserve(g.images.size());
  for (const auto& x : g.images) im.push_back(hom_apply(f, x));
  return Nil2Hom(g.src_rank, f.tgt_rank, std::move(im));
}

/// The column-of-exponent-sums matrix: column e holds gen of images[e].
/// Functorial: abelianize(f . g) = abelianize(f) * abelianize(g).
inline IntMatrix abelianize(const Nil2Hom& f) {
  IntMatrix m(f.tgt_rank, f.src_rank);
  for (int e = 0; e < f.src_rank; ++e)
    for (int i = 0; i < f.tgt_rank; ++i) m(i, e) = f.images[e].gen[i];
  return m;
}

// ---- structural maps ------------------------------------------------------

inline Nil2Hom identity_hom(int n) {
  std::vector<Nil2Element> im;
  for (int i = 0; i < n; ++i) im.push_back(Nil2Element::generator(n, i));
  return Nil2Hom(n, n, std::move(im));
}

inline Nil2Hom trivial_hom(int src, int tgt) {
  return Nil2Hom(src, tgt, std::vector<Nil2Element>(static_cast<size_t>(src),
                                                    Nil2Element::identity(tgt)));
}

/// Z -> F_n, x |-> x_1 x_2 ... x_n (product of the generators in order).
inline Nil2Hom generator_product(int n) {
  Nil2Element w(n);
  for (int i = 0; i < n; ++i) w.gen[i] = 1;
  return Nil2Hom(1, n, {w});
}

/// F_n -> Z, every generator to the generator (the fold onto one summand).
inline Nil2Hom fold_to_generator(int n) {
  return Nil2Hom(n, 1, std::vector<Nil2Element>(static_cast<size_t>(n),
                                                Nil2Element::generator(1, 0)));
}

/// F_n -> Z, x_e |-> x and every other generator to 1.
inline Nil2Hom retraction(int n, int e) {
  if (e < 0 || e >= n) throw MalformedInput("retraction: index out of range");
  std::vector<Nil2Element> im(static_cast<size_t>(n), Nil2Element::identity(1));
  im[static_cast<size_t>(e)] = Nil2Element::generator(1, 0);
  return Nil2Hom(n, 1, std::move(im));
}

/// Z -> F_n, x |-> x_e.
inline Nil2Hom inclusion(int n, int e) {
  if (e < 0 || e >= n) throw MalformedInput("inclusion: index out of range");
  return Nil2Hom(1, n, {Nil2Element::generator(n, e)});
}

/// Z -> Z, x |-> x^k.
inline Nil2Hom power_map(const Int& k) {
  return Nil2Hom(1, 1, {Nil2Element::generator(1, 0, k)});
}

/// F_n -> F_m along an injection idx: each x_e |-> x_{idx[e]}.
inline Nil2Hom inclusion_along(const std::vector<int>& idx, int m) {
  int n = static_cast<int>(idx.size());
  std::vector<bool> seen(static_cast<size_t>(m), false);
  std::vector<Nil2Element> im;
  for (int e = 0; e < n; ++e) {
    if (idx[e] < 0 || idx[e] >= m || seen[idx[e]])
      throw MalformedInput("inclusion_along: not an injection into the target");
    seen[idx[e]] = true;
    im.push_back(Nil2Element::generator(m, idx[e]));
  }
  return Nil2Hom(n, m, std::move(im));
}

/// F_m -> F_n for an injection idx of n into m: x_{idx[e]} |-> x_e, rest to 1.
inline Nil2Hom projection_along(const std::vector<int>& idx, int m) {
  int n = static_cast<int>(idx.size());
  std::vector<Nil2Element> im(static_cast<size_t>(m), Nil2Element::identity(n));
  std::vector<bool> seen(static_cast<size_t>(m), false);
  for (int e = 0; e < n; ++e) {
    if (idx[e] < 0 || idx[e] >= m || seen[idx[e]])
      throw MalformedInput("projection_along: not an injection into the source");
    seen[idx[e]] = true;
    im[static_cast<size_t>(idx[e])] = Nil2Element::generator(n, e);
  }
  return Nil2Hom(m, n, std::move(im));
}

/// Fold of m blocks: F_{n*m} -> F_n, generator (b,i) |-> x_i.
/// Block b occupies generator indices [b*n, (b+1)*n).
inline Nil2Hom block_fold(int n, int m) {
  std::vector<Nil2Element> im;
  for (int b = 0; b < m; ++b)
    for (int i = 0; i < n; ++i) im.push_back(Nil2Element::generator(n, i));
  return Nil2Hom(n * m, n, std::move(im));
}

/// Coproduct of homs: block-diagonal on generators.
inline Nil2Hom vee(const Nil2Hom& f, const Nil2Hom& g) {
  int n = f.src_rank + g.src_rank, m = f.tgt_rank + g.tgt_rank;
  std::vector<Nil2Element> im;
  auto shift = [&](const Nil2Element& x, int offset) {
    Nil2Element y(m);
    for (int i = 0; i < x.rank; ++i) y.gen[offset + i] = x.gen[i];
    for (int i = 0; i < x.rank; ++i)
      for (int j = i + 1; j < x.rank; ++j)
        y.comm[Nil2Element::pair_index(offset + i, offset + j, m)] =
            x.comm[Nil2Element::pair_index(i, j, x.rank)];
    return y;
  };
  for (const auto& x : f.images) im.push_back(shift(x, 0));
  for (const auto& x : g.images) im.push_back(shift(x, f.tgt_rank));
  return Nil2Hom(n, m, std::move(im));
}

inline Nil2Hom vee_power(const Nil2Hom& f, int k) {
  if (k == 0) return Nil2Hom(0, 0, {});
  Nil2Hom r = f;
  for (int i = 1; i < k; ++i) r = vee(r, f);
  return r;
}

/// Copairing (f_1, ..., f_k): all components share one target.
inline Nil2Hom copair(const std::vector<Nil2Hom>& parts) {
  if (parts.empty()) throw MalformedInput("copair: empty");
  int m = parts[0].tgt_rank, n = 0;
  std::vector<Nil2Element> im;
  for (const auto& p : parts) {
    if (p.tgt_rank != m) throw MalformedInput("copair: target mismatch");
    n += p.src_rank;
    for (const auto& x : p.images) im.push_back(x);
  }
  return Nil2Hom(n, m, std::move(im));
}

/// Component e of a hom under the coproduct decomposition of its source.
inline Nil2Hom component(const Nil2Hom& f, int e) {
  if (e < 0 || e >= f.src_rank) throw MalformedInput("component: index out of range");
  return Nil2Hom(1, f.tgt_rank, {f.images[static_cast<size_t>(e)]});
}

/// The integer alpha(e, g): exponent sum of generator g in the image of
/// generator e, i.e. retraction(g) . alpha . inclusion(e) = power_map of it.
inline Int exponent_of(const Nil2Hom& alpha, int e, int g) {
  return alpha.images[static_cast<size_t>(e)].gen[static_cast<size_t>(g)];
}

/// Substitution of an object of rank r into alpha: F_{n*r} -> F_{m*r},
/// generator (e,i) |-> the word alpha(x_e) with each letter x_f replaced by
/// x_{(f,i)}. This is the strict coproduct-preserving extension of alpha
/// along blocks of size r.
inline Nil2Hom substitute(const Nil2Hom& alpha, int r) {
  int n = alpha.src_rank, m = alpha.tgt_rank;
  std::vector<Nil2Element> im;
  im.reserve(static_cast<size_t>(n) * r);
  for (int e = 0; e < n; ++e)
    for (int i = 0; i < r; ++i) {
      const Nil2Element& w = alpha.images[static_cast<size_t>(e)];
      Nil2Element y(m * r);
      for (int f = 0; f < m; ++f) y.gen[f * r + i] = w.gen[f];
      for (int f = 0; f < m; ++f)
        for (int g = f + 1; g < m; ++g)
          y.comm[Nil2Element::pair_index(f * r + i, g * r + i, m * r)] =
              w.comm[Nil2Element::pair_index(f, g, m)];
      im.push_back(std::move(y));
    }
  return Nil2Hom(n * r, m * r, std::move(im));
}

/// True when every generator image is trivial or a single generator to the
/// first power. Inclusions, projections, folds, identities and zero maps all
/// satisfy this; the coproduct structural maps of the theory do not mix or
/// invert generators.
inline bool is_coproduct_structural(const Nil2Hom& f) {
  for (const auto& x : f.images) {
    if (x.is_identity()) continue;
    int nonzero = 0;
    for (const Int& c : x.comm)
      if (c != 0) return false;
    for (const Int& g : x.gen) {
      if (g == 0) continue;
      if (g != 1) return false;
      ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

// ---- named structural-map dispatch (CLI / serialization) ------------------

struct StructuralSpec {
  std::string kind;        // alpha | beta | retract | include | power | fold | identity | trivial
  int n = 1;               // primary rank parameter
  int m = 1;               // secondary rank (fold blocks, trivial target)
  int e = 1;               // 1-based summand index for retract/include
  Int k = 1;               // exponent for power
};

inline Nil2Hom structural_map(const StructuralSpec& s) {
  if (s.kind == "alpha") return generator_product(s.n);
  if (s.kind == "beta") return fold_to_generator(s.n);
  if (s.kind == "retract") return retraction(s.n, s.e - 1);
  if (s.kind == "include") return inclusion(s.n, s.e - 1);
  if (s.kind == "power") return power_map(s.k);
  if (s.kind == "fold") return block_fold(s.n, s.m);
  if (s.kind == "identity") return identity_hom(s.n);
  if (s.kind == "trivial") return trivial_hom(s.n, s.m);
  throw MalformedInput("structural_map: unknown kind '" + s.kind + "'");
}

// ---- text form -------------------------------------------------------------

/// Homs are serialized as an ordered list of element strings (one per source
/// generator), each in the element text form of the target group.
inline std::string to_text(const Nil2Hom& f) {
  std::ostringstream os;
  for (int e = 0; e < f.src_rank; ++e) os << (e ? "; " : "") << to_text(f.images[e]);
  return os.str();
}

inline Nil2Hom parse_nil2_hom(const std::vector<std::string>& image_texts, int tgt_rank) {
  std::vector<Nil2Element> im;
  for (const auto& t : image_texts) im.push_back(parse_nil2(t, tgt_rank));
  return Nil2Hom(static_cast<int>(im.size()), tgt_rank, std::move(im));
}

/// Stable content key, usable for deterministic per-hom seeds and map keys.
inline std::string hom_key(const Nil2Hom& f) {
  std::ostringstream os;
  os << f.src_rank << "->" << f.tgt_rank << ':' << to_text(f);
  return os.str();
}

}  // namespace trackwork
