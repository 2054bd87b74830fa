#pragma once
/// \file parse.hpp
/// Element literals for the `nf` command and the Python surface.
///
/// A word is a '*'-separated sequence of generator letters, each optionally
/// raised to an integer power: "F^2*K^-1*E", "W0*Z1^3", "X^-1*Y".  Whitespace
/// around letters is ignored; the empty word denotes 1.  The word is
/// evaluated as a fold of algebra products over the letters, so the result
/// comes back in normal form.  Letters outside the chosen presentation, and
/// negative powers of generators that have no inverse, raise IllegalLetter.

#include <stdexcept>
#include <string>
#include <vector>

#include "uqfm/eqexpr.hpp"
#include "uqfm/pbw.hpp"
#include "uqfm/render.hpp"

namespace uqfm {

/// Word algebras understood by the parser.  The first three are the PBW
/// presentations; AlgA is the rewriting algebra with generators W0, W1, Z1,
/// Zt1; Equitable is the X, Y, Z presentation (only X is invertible).
enum class WordAlg { GL2, SL2, SL2H, AlgA, Equitable };

struct IllegalLetter : std::runtime_error {
  explicit IllegalLetter(const std::string& what) : std::runtime_error(what) {}
};

struct WordLetter {
  std::string name;
  long exp = 1;
};

/// A parsed word: letters with exponents, tagged by its algebra.
struct FreeWord {
  WordAlg alg;
  std::vector<WordLetter> letters;
};

inline WordAlg word_alg_from_name(const std::string& s) {
  if (s == "gl2") return WordAlg::GL2;
  if (s == "sl2") return WordAlg::SL2;
  if (s == "sl2h") return WordAlg::SL2H;
  if (s == "word") return WordAlg::AlgA;
  if (s == "eq") return WordAlg::Equitable;
  throw IllegalLetter("unknown algebra '" + s +
                      "' (expected gl2|sl2|sl2h|word|eq)");
}

namespace detail {

inline const std::vector<std::string>& letters_for(WordAlg alg) {
  static const std::vector<std::string> gl2{"E", "F", "K1", "K2"};
  static const std::vector<std::string> sl2{"E", "F", "K"};
  static const std::vector<std::string> sl2h{"E", "F", "K", "Kh"};
  static const std::vector<std::string> alga{"W0", "W1", "Z1", "Zt1"};
  static const std::vector<std::string> eq{"X", "Y", "Z"};
  switch (alg) {
    case WordAlg::GL2: return gl2;
    case WordAlg::SL2: return sl2;
    case WordAlg::SL2H: return sl2h;
    case WordAlg::AlgA: return alga;
    case WordAlg::Equitable: return eq;
  }
  throw std::logic_error("letters_for: bad algebra");
}

inline std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

/// Split a literal into letters; validates names and exponent syntax but not
/// invertibility (that is checked during evaluation, where the algebra is
/// known).
inline FreeWord parse_word(WordAlg alg, const std::string& text) {
  FreeWord w{alg, {}};
  const auto& allowed = detail::letters_for(alg);
  std::string rest = text;
  // '*'-separated factors; an entirely blank literal is the empty word.
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= rest.size()) {
    size_t star = rest.find('*', pos);
    if (star == std::string::npos) star = rest.size();
    parts.push_back(detail::strip(rest.substr(pos, star - pos)));
    pos = star + 1;
  }
  if (parts.size() == 1 && parts[0].empty()) return w;
  for (const auto& part : parts) {
    if (part.empty())
      throw IllegalLetter("empty factor in word '" + text + "'");
    std::string name = part;
    long exp = 1;
    if (size_t caret = part.find('^'); caret != std::string::npos) {
      name = detail::strip(part.substr(0, caret));
      const std::string es = detail::strip(part.substr(caret + 1));
      try {
        size_t used = 0;
        exp = std::stol(es, &used);
        if (used != es.size()) throw std::invalid_argument(es);
      } catch (const std::exception&) {
        throw IllegalLetter("bad exponent '" + es + "' in '" + part + "'");
      }
    }
    bool ok = false;
    for (const auto& l : allowed) ok = ok || l == name;
    if (!ok)
      throw IllegalLetter("letter '" + name +
                          "' is not a generator of this algebra");
    w.letters.push_back({name, exp});
  }
  return w;
}

namespace detail {

/// One letter as an algebra element; negative powers only for the Cartan
/// letters (and X in the equitable presentation).
template <class C, Pres P>
AlgElem<C, P> pbw_letter(const WordLetter& l) {
  using A = AlgElem<C, P>;
  const long e = l.exp;
  auto need_nonneg = [&](const char* nm) {
    if (e < 0)
      throw IllegalLetter(std::string(nm) + " has no inverse; exponent " +
                          std::to_string(e) + " is illegal");
  };
  if (l.name == "E") {
    need_nonneg("E");
    return A::gen_e(static_cast<int>(e));
  }
  if (l.name == "F") {
    need_nonneg("F");
    return A::gen_f(static_cast<int>(e));
  }
  if constexpr (P == Pres::GL2) {
    if (l.name == "K1") return A::k12(static_cast<int>(e), 0);
    if (l.name == "K2") return A::k12(0, static_cast<int>(e));
  } else {
    if (l.name == "K") return A::k_pow(static_cast<int>(e));
    if constexpr (P == Pres::SL2H) {
      if (l.name == "Kh") return A::k_half_pow(static_cast<int>(e));
    }
  }
  throw IllegalLetter("letter '" + l.name +
                      "' is not a generator of this algebra");
}

}  // namespace detail

/// Fold of the algebra product over the letters; the empty word is 1.
template <class C, Pres P>
AlgElem<C, P> nf_word_pbw(const FreeWord& w) {
  auto r = AlgElem<C, P>::one();
  for (const auto& l : w.letters) r = r * detail::pbw_letter<C, P>(l);
  return r;
}

template <class C>
AElem<C> nf_word_a(const FreeWord& w) {
  auto r = AElem<C>::one();
  for (const auto& l : w.letters) {
    if (l.exp < 0)
      throw IllegalLetter(l.name + " has no inverse; exponent " +
                          std::to_string(l.exp) + " is illegal");
    int g = l.name == "W0" ? 0 : l.name == "W1" ? 1 : l.name == "Z1" ? 2 : 3;
    for (long i = 0; i < l.exp; ++i) r = r * AElem<C>::gen(g);
  }
  return r;
}

template <class C>
EqElem<C> nf_word_eq(const FreeWord& w) {
  auto r = EqElem<C>::one();
  for (const auto& l : w.letters) {
    if (l.exp < 0 && l.name != "X")
      throw IllegalLetter(l.name + " has no inverse; exponent " +
                          std::to_string(l.exp) + " is illegal");
    EqElem<C> g = l.name == "X" ? (l.exp < 0 ? EqElem<C>::Xi() : EqElem<C>::X())
                  : l.name == "Y" ? EqElem<C>::Y()
                                  : EqElem<C>::Z();
    const long n = l.exp < 0 ? -l.exp : l.exp;
    for (long i = 0; i < n; ++i) r = r * g;
  }
  return r;
}

/// Parse + normalize + render in one step (the `nf` command body).
inline std::string nf_text(const std::string& alg_name,
                           const std::string& text) {
  const WordAlg alg = word_alg_from_name(alg_name);
  const FreeWord w = parse_word(alg, text);
  switch (alg) {
    case WordAlg::GL2: return render(nf_word_pbw<RatQ, Pres::GL2>(w));
    case WordAlg::SL2: return render(nf_word_pbw<RatQ, Pres::SL2>(w));
    case WordAlg::SL2H: return render(nf_word_pbw<RatQ, Pres::SL2H>(w));
    case WordAlg::AlgA: return render(nf_word_a<RatQ>(w));
    case WordAlg::Equitable: return render(nf_word_eq<RatQ>(w));
  }
  throw std::logic_error("nf_text: bad algebra");
}

}  // namespace uqfm
