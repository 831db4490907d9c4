#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trackwork/ints.hpp"

namespace trackwork {

struct MalformedInput : std::runtime_error {
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

/// Word in a free group: letters are (generator index, nonzero exponent),
/// adjacent letters have distinct generators once reduced.
struct FreeWord {
  int rank = 1;
  std::vector<std::pair<int, Int>> letters;  // generator indices are 0-based

  FreeWord() = default;
  FreeWord(int r, std::vector<std::pair<int, Int>> ls) : rank(r), letters(std::move(ls)) {
    if (rank < 1) throw MalformedInput("FreeWord: rank must be positive");
    for (auto& [g, e] : letters) {
      if (g < 0 || g >= rank) throw MalformedInput("FreeWord: generator index out of range");
      if (e == 0) throw MalformedInput("FreeWord: zero exponent letter");
    }
  }

  bool is_identity() const { return letters.empty(); }

  FreeWord concat(const FreeWord& o) const {
    if (rank != o.rank) throw MalformedInput("FreeWord: rank mismatch in concat");
    FreeWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
  }

  FreeWord inverse() const {
    FreeWord w;
    w.rank = rank;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      w.letters.emplace_back(it->first, -it->second);
    return w;
  }

  bool operator==(const FreeWord& o) const { return rank == o.rank && letters == o.letters; }
};

/// The unique reduced word freely equal to w: merges equal-generator runs and
/// drops cancelling letters. Idempotent.
inline FreeWord fg_reduce(const FreeWord& w) {
  FreeWord r;
  r.rank = w.rank;
  for (const auto& [g, e] : w.letters) {
    if (g < 0 || g >= w.rank) throw MalformedInput("fg_reduce: generator index out of range");
    if (e == 0) continue;
    if (!r.letters.empty() && r.letters.back().first == g) {
      r.letters.back().second += e;
      if (r.letters.back().second == 0) r.letters.pop_back();
    } else {
      r.letters.emplace_back(g, e);
    }
  }
  // a merge can expose a new cancellation pair; iterate to a fixed point
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, Int>> out;
    for (const auto& [g, e] : r.letters) {
      if (!out.empty() && out.back().first == g) {
        out.back().second += e;
        if (out.back().second == 0) out.pop_back();
        changed = true;
      } else {
        out.emplace_back(g, e);
      }
    }
    r.letters = std::move(out);
  }
  return r;
}

namespace wordtext {

// One token of the group-word grammar: a generator power x3^-2 or a bracket
// commutator [x1,x2]^4.
struct Token {
  bool is_comm = false;
  int i = 0;  // generator (or first commutator slot), 0-based
  int j = 0;  // second commutator slot
  Int exp = 1;
};

inline Int parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw MalformedInput("word parse: expected integer at position " + std::to_string(start));
  return Int(s.substr(start, pos - start));
}

inline int parse_generator(const std::string& s, size_t& pos) {
  if (pos >= s.size() || s[pos] != 'x')
    throw MalformedInput("word parse: expected generator at position " + std::to_string(pos));
  ++pos;
  Int n = parse_int(s, pos);
  if (n < 1) throw MalformedInput("word parse: generator indices start at 1");
  return static_cast<int>(n) - 1;
}

/// Grammar: whitespace-separated letters; letter = `xN`, `xN^E`, `[xN,xM]`,
/// `[xN,xM]^E`; the bare token `1` is the empty word.
inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> toks;
  std::istringstream in(text);
  std::string piece;
  while (in >> piece) {
    if (piece == "1") continue;
    size_t pos = 0;
    Token t;
    if (piece[0] == '[') {
      pos = 1;
      t.is_comm = true;
      t.i = parse_generator(piece, pos);
      if (pos >= piece.size() || piece[pos] != ',')
        throw MalformedInput("word parse: expected ',' in commutator: " + piece);
      ++pos;
      t.j = parse_generator(piece, pos);
      if (pos >= piece.size() || piece[pos] != ']')
        throw MalformedInput("word parse: expected ']' in commutator: " + piece);
      ++pos;
    } else {
      t.i = parse_generator(piece, pos);
    }
    if (pos < piece.size()) {
      if (piece[pos] != '^') throw MalformedInput("word parse: unexpected characters: " + piece);
      ++pos;
      t.exp = parse_int(piece, pos);
      if (pos != piece.size()) throw MalformedInput("word parse: trailing characters: " + piece);
    }
    if (t.exp != 0) toks.push_back(t);
  }
  return toks;
}

}  // namespace wordtext

/// Parse `x1^2 x2^-1 ...` as a free word; bracket commutators expand to
/// their four-letter definition [a,b] = a^-1 b^-1 a b.
inline FreeWord parse_free_word(const std::string& text, int rank) {
  FreeWord w;
  w.rank = rank;
  for (const auto& t : wordtext::tokenize(text)) {
    if (t.i >= rank || t.j >= rank) throw MalformedInput("word parse: generator exceeds rank");
    if (!t.is_comm) {
      w.letters.emplace_back(t.i, t.exp);
    } else {
      if (boost::multiprecision::abs(t.exp) > 4096)
        throw MalformedInput("word parse: commutator exponent too large to expand");
      long reps = static_cast<long>(boost::multiprecision::abs(t.exp));
      bool inv = t.exp < 0;
      for (long r = 0; r < reps; ++r) {
        std::vector<std::pair<int, Int>> c = {{t.i, -1}, {t.j, -1}, {t.i, 1}, {t.j, 1}};
        if (inv) {
          std::reverse(c.begin(), c.end());
          for (auto& [g, e] : c) e = -e;
        }
        for (auto& l : c) w.letters.push_back(l);
      }
    }
  }
  return fg_reduce(w);
}

inline std::string to_text(const FreeWord& w) {
  if (w.letters.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : w.letters) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << (g + 1);
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace trackwork
