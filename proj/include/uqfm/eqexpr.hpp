#pragma once
/// \file eqexpr.hpp
/// Formal elements of the equitable presentation: linear combinations of
/// words in X, X^{-1}, Y, Z.  The only rewriting applied is the free
/// cancellation X X^{-1} = X^{-1} X = 1; every other identity is delegated
/// to the Chevalley side through the substitution map phi, so no completeness
/// assumption about the equitable relations is ever needed.
///
/// Letters: 'X' = X, 'x' = X^{-1}, 'Y' = Y, 'Z' = Z.

#include <map>
#include <string>

#include "uqfm/maps.hpp"

namespace uqfm {

inline std::string eq_word_simplify(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if ((w[i] == 'X' && w[i + 1] == 'x') || (w[i] == 'x' && w[i + 1] == 'X')) {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

template <class C>
class EqElem {
  using Ops = CoefOps<C>;

 public:
  std::map<std::string, C> t;

  EqElem() = default;

  static EqElem zero() { return EqElem(); }
  static EqElem one() { return from_word(""); }
  static EqElem from_coef(const C& c) {
    EqElem r;
    r.add_term("", c);
    return r;
  }
  static EqElem from_word(const std::string& w, const C& c = Ops::one()) {
    EqElem r;
    r.add_term(eq_word_simplify(w), c);
    return r;
  }
  static EqElem X() { return from_word("X"); }
  static EqElem Xi() { return from_word("x"); }
  static EqElem Y() { return from_word("Y"); }
  static EqElem Z() { return from_word("Z"); }

  bool is_zero() const { return t.empty(); }
  bool operator==(const EqElem& o) const { return t == o.t; }
  bool operator!=(const EqElem& o) const { return !(*this == o); }

  EqElem& operator+=(const EqElem& o) {
    for (const auto& [w, c] : o.t) add_term(w, c);
    return *this;
  }
  EqElem& operator-=(const EqElem& o) {
    for (const auto& [w, c] : o.t) add_term(w, Ops::zero() - c);
    return *this;
  }
  friend EqElem operator+(EqElem a, const EqElem& b) { return a += b; }
  friend EqElem operator-(EqElem a, const EqElem& b) { return a -= b; }
  friend EqElem operator-(const EqElem& a) {
    EqElem r;
    for (const auto& [w, c] : a.t) r.t.emplace(w, Ops::zero() - c);
    return r;
  }
  EqElem scaled(const C& c) const {
    EqElem r;
    if (Ops::is_zero(c)) return r;
    for (const auto& [w, cc] : t) r.add_term(w, c * cc);
    return r;
  }
  friend EqElem operator*(const C& c, const EqElem& a) { return a.scaled(c); }
  friend EqElem operator*(const EqElem& a, const EqElem& b) {
    EqElem r;
    for (const auto& [wa, ca] : a.t)
      for (const auto& [wb, cb] : b.t)
        r.add_term(eq_word_simplify(wa + wb), ca * cb);
    return r;
  }
  EqElem& operator*=(const EqElem& o) { return *this = *this * o; }

  void add_term(const std::string& w, const C& c) {
    if (Ops::is_zero(c)) return;
    auto it = t.find(w);
    if (it == t.end()) {
      t.emplace(w, c);
    } else {
      it->second += c;
      if (Ops::is_zero(it->second)) t.erase(it);
    }
  }
};

template <class C>
bool is_zero(const EqElem<C>& a) {
  return a.is_zero();
}

/// Substitution into the Chevalley presentation:
///   X -> K, X^{-1} -> K^{-1},
///   Y -> K^{-1} + (q-q^{-1}) F,
///   Z -> K^{-1} - q(q-q^{-1}) K^{-1}E.
template <class C>
AlgElem<C, Pres::SL2> phi(const EqElem<C>& x) {
  using A = AlgElem<C, Pres::SL2>;
  using Ops = CoefOps<C>;
  const C qq = Ops::q_pow(1) - Ops::q_pow(-1);
  static const A imgX = A::k_pow(1);
  static const A imgXi = A::k_pow(-1);
  const A imgY = A::k_pow(-1) + qq * A::gen_f();
  const A imgZ = A::k_pow(-1) - (Ops::q_pow(1) * qq) * (A::k_pow(-1) * A::gen_e());
  A sum;
  for (const auto& [w, c] : x.t) {
    A term = A::from_coef(c);
    for (char ch : w) {
      switch (ch) {
        case 'X': term *= imgX; break;
        case 'x': term *= imgXi; break;
        case 'Y': term *= imgY; break;
        case 'Z': term *= imgZ; break;
        default: throw std::logic_error("phi: bad letter");
      }
    }
    sum += term;
  }
  return sum;
}

/// Rotation X -> Y -> Z -> X.  Words containing X^{-1} are not in its
/// formal domain here (the image Y^{-1} is not a word).
template <class C>
EqElem<C> rotate_r(const EqElem<C>& x) {
  EqElem<C> r;
  for (const auto& [w, c] : x.t) {
    std::string img;
    for (char ch : w) {
      switch (ch) {
        case 'X': img += 'Y'; break;
        case 'Y': img += 'Z'; break;
        case 'Z': img += 'X'; break;
        default:
          throw std::logic_error("rotate_r: X^{-1} outside formal domain");
      }
    }
    r.add_term(img, c);
  }
  return r;
}

/// Casimir of the equitable presentation: qX + q^{-1}Y + qZ - qXYZ.
template <class C>
EqElem<C> omega_eq() {
  using Ops = CoefOps<C>;
  using E = EqElem<C>;
  return Ops::q_pow(1) * E::X() + Ops::q_pow(-1) * E::Y() +
         Ops::q_pow(1) * E::Z() - Ops::q_pow(1) * E::from_word("XYZ");
}

// ---------------------------------------------------------------------------
// Formal coalgebra structure on equitable words
// ---------------------------------------------------------------------------

template <class C>
class EqTensor {
  using Ops = CoefOps<C>;

 public:
  using Key = std::pair<std::string, std::string>;
  std::map<Key, C> t;

  EqTensor() = default;
  static EqTensor one() {
    EqTensor r;
    r.add_term({"", ""}, Ops::one());
    return r;
  }
  static EqTensor simple(const EqElem<C>& a, const EqElem<C>& b) {
    EqTensor r;
    for (const auto& [wa, ca] : a.t)
      for (const auto& [wb, cb] : b.t) r.add_term({wa, wb}, ca * cb);
    return r;
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const EqTensor& o) const { return t == o.t; }
  bool operator!=(const EqTensor& o) const { return !(*this == o); }

  EqTensor& operator+=(const EqTensor& o) {
    for (const auto& [k, c] : o.t) add_term(k, c);
    return *this;
  }
  friend EqTensor operator+(EqTensor a, const EqTensor& b) { return a += b; }
  friend EqTensor operator*(const EqTensor& a, const EqTensor& b) {
    EqTensor r;
    for (const auto& [ka, ca] : a.t)
      for (const auto& [kb, cb] : b.t)
        r.add_term({eq_word_simplify(ka.first + kb.first),
                    eq_word_simplify(ka.second + kb.second)},
                   ca * cb);
    return r;
  }

  void add_term(const Key& k, const C& c) {
    if (Ops::is_zero(c)) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t.emplace(k, c);
    } else {
      it->second += c;
      if (Ops::is_zero(it->second)) t.erase(it);
    }
  }
};

/// Coproduct on equitable generators:
///   D(X^{±1}) = X^{±1} (x) X^{±1},
///   D(Y) = (Y-1)(x)X^{-1} + 1(x)Y,  D(Z) = (Z-1)(x)X^{-1} + 1(x)Z.
template <class C>
EqTensor<C> eq_coproduct(const EqElem<C>& x) {
  using E = EqElem<C>;
  using T = EqTensor<C>;
  const T dX = T::simple(E::X(), E::X());
  const T dXi = T::simple(E::Xi(), E::Xi());
  const T dY = T::simple(E::Y() - E::one(), E::Xi()) + T::simple(E::one(), E::Y());
  const T dZ = T::simple(E::Z() - E::one(), E::Xi()) + T::simple(E::one(), E::Z());
  T sum;
  for (const auto& [w, c] : x.t) {
    T term = T::simple(E::from_coef(c), E::one());
    for (char ch : w) {
      switch (ch) {
        case 'X': term = term * dX; break;
        case 'x': term = term * dXi; break;
        case 'Y': term = term * dY; break;
        case 'Z': term = term * dZ; break;
        default: throw std::logic_error("eq_coproduct: bad letter");
      }
    }
    sum += term;
  }
  return sum;
}

/// Counit: every generator goes to 1.
template <class C>
C eq_counit(const EqElem<C>& x) {
  using Ops = CoefOps<C>;
  C r = Ops::zero();
  for (const auto& [w, c] : x.t) r += c;
  return r;
}

/// Antipode (an antihomomorphism):
///   S(X) = X^{-1}, S(X^{-1}) = X, S(Y) = 1 + X - YX, S(Z) = 1 + X - ZX.
template <class C>
EqElem<C> eq_antipode(const EqElem<C>& x) {
  using E = EqElem<C>;
  const E sX = E::Xi();
  const E sXi = E::X();
  const E sY = E::one() + E::X() - E::from_word("YX");
  const E sZ = E::one() + E::X() - E::from_word("ZX");
  E sum;
  for (const auto& [w, c] : x.t) {
    E term = E::from_coef(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      switch (*it) {
        case 'X': term *= sX; break;
        case 'x': term *= sXi; break;
        case 'Y': term *= sY; break;
        case 'Z': term *= sZ; break;
        default: throw std::logic_error("eq_antipode: bad letter");
      }
    }
    sum += term;
  }
  return sum;
}

/// (phi (x) phi) applied to a formal two-leg tensor.
template <class C>
TensorElem<C, Pres::SL2> phi_tensor(const EqTensor<C>& x) {
  using T2 = TensorElem<C, Pres::SL2>;
  T2 r;
  for (const auto& [k, c] : x.t)
    r += c * T2::simple(phi(EqElem<C>::from_word(k.first)),
                        phi(EqElem<C>::from_word(k.second)));
  return r;
}

template <class C>
std::string to_string(const EqElem<C>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : a.t) {
    std::string ws;
    for (char ch : w) {
      if (!ws.empty()) ws += "*";
      ws += (ch == 'x') ? "X^-1" : std::string(1, ch);
    }
    if (ws.empty()) ws = "1";
    std::string cs = to_string(c);
    if (!s.empty() && cs[0] != '-') s += "+";
    const bool sum = cs.find('+') != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    if (sum) cs = "(" + cs + ")";
    if (ws == "1") {
      s += cs;
    } else if (cs == "1") {
      s += ws;
    } else if (cs == "-1") {
      s += "-" + ws;
    } else {
      s += cs + "*" + ws;
    }
  }
  return s;
}

}  // namespace uqfm
