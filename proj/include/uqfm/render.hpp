#pragma once
/// \file render.hpp
/// Canonical text rendering used in reports and JSON output.
///
/// Internally every scalar is a rational function in the half-power variable
/// p (p^2 = q).  Reports use the q-based notation instead: even p-powers
/// print as integral q-powers, odd ones as explicit half-integral q-powers,
/// and the structure constants print as "k+", "k-", "e+", "e-", "alpha".
/// Algebra elements and Laurent matrices reuse the same term layout as the
/// debug printers in pbw.hpp / lpoly.hpp, only with canonical coefficients.

#include <string>

#include "uqfm/eqexpr.hpp"
#include "uqfm/lpoly.hpp"
#include "uqfm/mat.hpp"
#include "uqfm/pbw.hpp"
#include "uqfm/tensorelem.hpp"

namespace uqfm {

inline constexpr std::array<const char*, kNumVars> kRenderVarNames{
    "q", "k+", "k-", "e+", "e-", "alpha"};

/// q-power factor for a p-exponent: "" (e=0), "q", "q^2", "q^(1/2)", ...
inline std::string render_q_power(int pe) {
  if (pe == 0) return "";
  if (pe % 2 == 0) {
    const int qe = pe / 2;
    return qe == 1 ? "q" : "q^" + std::to_string(qe);
  }
  return "q^(" + std::to_string(pe) + "/2)";
}

inline std::string render(const Int& c) { return c.str(); }

inline std::string render(const Rat& c) {
  std::string s = numerator(c).str();
  if (denominator(c) != 1) s += "/" + denominator(c).str();
  return s;
}

/// Sum of terms c/cd * prod var^{e - shift}; exponents may go negative, so
/// monomial denominators fold into Laurent notation (1/p^2 prints as q^-1).
inline std::string render_laurent(const Mpoly& num, const Expo& shift,
                                  const Int& cd) {
  if (num.is_zero()) return "0";
  std::string s;
  for (auto it = num.t.rbegin(); it != num.t.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rat r(c, cd);
    const Rat ab = r < 0 ? -r : r;
    s += (r < 0) ? "-" : (s.empty() ? "" : "+");
    std::string factors = render_q_power(e[0] - shift[0]);
    for (int i = 1; i < kNumVars; ++i) {
      const int pe = e[i] - shift[i];
      if (pe == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += kRenderVarNames[i];
      if (pe != 1) factors += "^" + std::to_string(pe);
    }
    if (factors.empty()) {
      s += render(ab);
    } else {
      if (ab != 1) s += render(ab) + "*";
      s += factors;
    }
  }
  return s;
}

inline std::string render(const Mpoly& a) {
  return render_laurent(a, Expo{}, Int(1));
}

inline std::string render(const RatQ& a) {
  if (a.den.t.size() == 1) {
    const auto& [e, c] = *a.den.t.begin();
    return render_laurent(a.num, e, c);
  }
  const bool pn = a.num.t.size() > 1;
  std::string s = pn ? "(" + render(a.num) + ")" : render(a.num);
  return s + "/(" + render(a.den) + ")";
}

/// Shared term-sum layout: coefficient handling identical to the debug
/// printers, monomial text supplied by the caller.
template <class C, class Key, class KeyFn>
std::string render_terms(const std::map<Key, C>& t, const Key& unit,
                         KeyFn&& key_str) {
  std::string s;
  for (const auto& [k, c] : t) {
    std::string cs = render(c);
    const bool sum = cs.find('+') != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    if (sum) cs = "(" + cs + ")";
    // Separator must be decided after parenthesizing: a leading '-' inside
    // parentheses no longer separates terms.
    if (!s.empty() && cs[0] != '-') s += "+";
    if (k == unit) {
      s += cs;
    } else if (cs == "1") {
      s += key_str(k);
    } else if (cs == "-1") {
      s += "-" + key_str(k);
    } else {
      s += cs + "*" + key_str(k);
    }
  }
  return s.empty() ? "0" : s;
}

template <class C, Pres P>
std::string render(const AlgElem<C, P>& a) {
  return render_terms(a.t, kUnitMono,
                      [](const Mono& m) { return mono_to_string<P>(m); });
}

template <class C>
std::string render(const FreeElem<C>& a) {
  return render_terms(a.t, std::string(),
                      [](const std::string& w) { return word_to_string(w); });
}

template <class C>
std::string render(const AElem<C>& a) {
  return render(a.v);
}

inline std::string eq_word_to_string(const std::string& w) {
  std::string s;
  for (char ch : w) {
    if (!s.empty()) s += "*";
    s += (ch == 'x') ? "X^-1" : std::string(1, ch);
  }
  return s.empty() ? "1" : s;
}

template <class C>
std::string render(const EqElem<C>& a) {
  return render_terms(a.t, std::string(),
                      [](const std::string& w) { return eq_word_to_string(w); });
}

template <class C, Pres P>
std::string render(const TensorElem<C, P>& a) {
  using Key = typename TensorElem<C, P>::Key;
  return render_terms(a.t, Key{kUnitMono, kUnitMono}, [](const Key& k) {
    return mono_to_string<P>(k.first) + "(x)" + mono_to_string<P>(k.second);
  });
}

template <class T>
std::string render(const Lpoly<T>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [d, c] : a.t) {
    if (!s.empty()) s += " + ";
    std::string mono;
    if (d.first != 0) mono += "u^" + std::to_string(d.first);
    if (d.second != 0)
      mono += (mono.empty() ? "" : "*") + std::string("v^") +
              std::to_string(d.second);
    std::string cs = render(c);
    if (mono.empty())
      s += cs;
    else
      s += "(" + cs + ")*" + mono;
  }
  return s;
}

/// First nonzero entry of a residual matrix, rendered, with its position;
/// empty string when the matrix vanishes (the PASS case).
template <class R>
std::string first_nonzero_entry(const Mat<R>& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const R& x = m.get(i, j);
      if (!is_zero(x))
        return "[" + std::to_string(i) + "," + std::to_string(j) +
               "] = " + render(x);
    }
  return "";
}

}  // namespace uqfm
