#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trackwork/freeword.hpp"
#include "trackwork/ints.hpp"

namespace trackwork {

/// Normal form in the free class-2 nilpotent group of the given rank:
///   prod_i x_i^{gen[i]}  *  prod_{i<j} [x_i, x_j]^{comm[ij]}
/// with the commutator convention [a,b] = a^-1 b^-1 a b. Basic commutators
/// [x_i, x_j], i < j, are central and form a basis of the derived subgroup.
///
/// The group law in collected coordinates is
///   (a, c) * (b, d) = (a + b, c + d + kappa(a, b)),   kappa(a,b)_{ij} = -a_j b_i,
/// a formula fixed once against the free-group rewriting oracle (x_j x_i =
/// x_i x_j [x_j, x_i] for i < j) and frozen here.
struct Nil2Element {
  int rank = 1;
  std::vector<Int> gen;   // length rank
  std::vector<Int> comm;  // length rank*(rank-1)/2, pairs (i,j), i<j, lex order

  Nil2Element() : gen(1), comm(0) {}
  explicit Nil2Element(int r)
      : rank(r), gen(static_cast<size_t>(r)), comm(static_cast<size_t>(comm_dim(r))) {
    if (r < 0) throw MalformedInput("Nil2Element: negative rank");
  }
  Nil2Element(int r, std::vector<Int> g, std::vector<Int> c)
      : rank(r), gen(std::move(g)), comm(std::move(c)) {
    if (static_cast<int>(gen.size()) != rank || static_cast<int>(comm.size()) != comm_dim(rank))
      throw MalformedInput("Nil2Element: coordinate sizes do not match rank");
  }

  static int comm_dim(int r) { return r * (r - 1) / 2; }

  static int pair_index(int i, int j, int r) {
    // pairs (0,1),(0,2),...,(0,r-1),(1,2),... in lex order
    return i * r - i * (i + 1) / 2 + (j - i - 1);
  }

  static Nil2Element identity(int r) { return Nil2Element(r); }

  static Nil2Element generator(int r, int i, Int e = 1) {
    Nil2Element x(r);
    x.gen[static_cast<size_t>(i)] = std::move(e);
    return x;
  }

  static Nil2Element basic_commutator(int r, int i, int j, Int e = 1) {
    if (i >= j) throw MalformedInput("basic_commutator: need i < j");
    Nil2Element x(r);
    x.comm[static_cast<size_t>(pair_index(i, j, r))] = std::move(e);
    return x;
  }

  bool is_identity() const {
    for (const Int& v : gen)
      if (v != 0) return false;
    for (const Int& v : comm)
      if (v != 0) return false;
    return true;
  }

  bool is_central() const {
    for (const Int& v : gen)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const Nil2Element& o) const {
    return rank == o.rank && gen == o.gen && comm == o.comm;
  }
  bool operator!=(const Nil2Element& o) const { return !(*this == o); }
};

namespace detail {
inline void check_rank(const Nil2Element& a, const Nil2Element& b, const char* op) {
  if (a.rank != b.rank)
    throw MalformedInput(std::string(op) + ": rank mismatch (" + std::to_string(a.rank) + " vs " +
                         std::to_string(b.rank) + ")");
}
// kappa(a,b)_{ij} = -a_j * b_i for i < j
inline std::vector<Int> kappa(const std::vector<Int>& a, const std::vector<Int>& b, int r) {
  std::vector<Int> k(static_cast<size_t>(Nil2Element::comm_dim(r)));
  int idx = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j, ++idx) k[idx] = -a[j] * b[i];
  return k;
}
}  // namespace detail

inline Nil2Element nil2_mul(const Nil2Element& a, const Nil2Element& b) {
  detail::check_rank(a, b, "nil2_mul");
  Nil2Element r(a.rank);
  for (int i = 0; i < a.rank; ++i) r.gen[i] = a.gen[i] + b.gen[i];
  auto k = detail::kappa(a.gen, b.gen, a.rank);
  for (size_t i = 0; i < r.comm.size(); ++i) r.comm[i] = a.comm[i] + b.comm[i] + k[i];
  return r;
}

inline Nil2Element nil2_inv(const Nil2Element& a) {
  Nil2Element r(a.rank);
  for (int i = 0; i < a.rank; ++i) r.gen[i] = -a.gen[i];
  auto k = detail::kappa(a.gen, a.gen, a.rank);
  for (size_t i = 0; i < r.comm.size(); ++i) r.comm[i] = -a.comm[i] + k[i];
  return r;
}

/// a^k in closed form: (k*gen, k*comm + C(k,2)*kappa(gen,gen)).
inline Nil2Element nil2_pow(const Nil2Element& a, const Int& k) {
  Nil2Element r(a.rank);
  Int c2 = binom2(k);
  for (int i = 0; i < a.rank; ++i) r.gen[i] = k * a.gen[i];
  auto kap = detail::kappa(a.gen, a.gen, a.rank);
  for (size_t i = 0; i < r.comm.size(); ++i) r.comm[i] = k * a.comm[i] + c2 * kap[i];
  return r;
}

inline Nil2Element nil2_commutator(const Nil2Element& a, const Nil2Element& b) {
  return nil2_mul(nil2_mul(nil2_inv(a), nil2_inv(b)), nil2_mul(a, b));
}

/// Image of a free word in the class-2 quotient, by iterated multiplication.
inline Nil2Element nil2_normalize(const FreeWord& w) {
  Nil2Element r = Nil2Element::identity(w.rank);
  for (const auto& [g, e] : w.letters) {
    if (g < 0 || g >= w.rank) throw MalformedInput("nil2_normalize: generator out of range");
    r = nil2_mul(r, Nil2Element::generator(w.rank, g, e));
  }
  return r;
}

/// Parse the element text form `x1^2 x2^-1 [x1,x2]^3`. Bracket letters act
/// directly on the commutator coordinates; [xj,xi] with j > i contributes the
/// inverse of the basic commutator [xi,xj].
inline Nil2Element parse_nil2(const std::string& text, int rank) {
  Nil2Element r = Nil2Element::identity(rank);
  for (const auto& t : wordtext::tokenize(text)) {
    if (t.i >= rank || t.j >= rank) throw MalformedInput("nil2 parse: generator exceeds rank");
    if (!t.is_comm) {
      r = nil2_mul(r, Nil2Element::generator(rank, t.i, t.exp));
    } else if (t.i == t.j) {
      continue;  // [x,x] = 1
    } else if (t.i < t.j) {
      r = nil2_mul(r, Nil2Element::basic_commutator(rank, t.i, t.j, t.exp));
    } else {
      r = nil2_mul(r, Nil2Element::basic_commutator(rank, t.j, t.i, -t.exp));
    }
  }
  return r;
}

inline std::string to_text(const Nil2Element& a) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& sym, const Int& e) {
    if (e == 0) return;
    if (!first) os << ' ';
    first = false;
    os << sym;
    if (e != 1) os << '^' << e;
  };
  for (int i = 0; i < a.rank; ++i) emit("x" + std::to_string(i + 1), a.gen[i]);
  for (int i = 0; i < a.rank; ++i)
    for (int j = i + 1; j < a.rank; ++j)
      emit("[x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "]",
           a.comm[Nil2Element::pair_index(i, j, a.rank)]);
  if (first) return "1";
  return os.str();
}

}  // namespace trackwork
