#pragma once
/// \file tensorelem.hpp
/// Elements of two- and three-fold tensor powers of the PBW algebras, with
/// each leg kept in PBW normal form.

#include <array>
#include <map>

#include "uqfm/pbw.hpp"

namespace uqfm {

template <class C, Pres P>
class TensorElem {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, P>;

 public:
  using Key = std::pair<Mono, Mono>;
  std::map<Key, C> t;

  TensorElem() = default;

  static TensorElem zero() { return TensorElem(); }
  static TensorElem one() {
    TensorElem r;
    r.add_term({kUnitMono, kUnitMono}, Ops::one());
    return r;
  }
  static TensorElem from_coef(const C& c) {
    TensorElem r;
    r.add_term({kUnitMono, kUnitMono}, c);
    return r;
  }
  /// x (x) y.
  static TensorElem simple(const A& x, const A& y) {
    TensorElem r;
    for (const auto& [mx, cx] : x.t)
      for (const auto& [my, cy] : y.t) r.add_term({mx, my}, cx * cy);
    return r;
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const TensorElem& o) const { return t == o.t; }
  bool operator!=(const TensorElem& o) const { return !(*this == o); }

  TensorElem& operator+=(const TensorElem& o) {
    for (const auto& [k, c] : o.t) add_term(k, c);
    return *this;
  }
  TensorElem& operator-=(const TensorElem& o) {
    for (const auto& [k, c] : o.t) add_term(k, Ops::zero() - c);
    return *this;
  }
  friend TensorElem operator+(TensorElem a, const TensorElem& b) {
    return a += b;
  }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) {
    return a -= b;
  }
  friend TensorElem operator-(const TensorElem& a) {
    TensorElem r;
    for (const auto& [k, c] : a.t) r.t.emplace(k, Ops::zero() - c);
    return r;
  }
  TensorElem scaled(const C& c) const {
    TensorElem r;
    if (Ops::is_zero(c)) return r;
    for (const auto& [k, cc] : t) r.add_term(k, c * cc);
    return r;
  }
  friend TensorElem operator*(const C& c, const TensorElem& a) {
    return a.scaled(c);
  }
  friend TensorElem operator*(const TensorElem& a, const TensorElem& b) {
    TensorElem r;
    for (const auto& [ka, ca] : a.t)
      for (const auto& [kb, cb] : b.t) {
        const A left = A::mono_mul(ka.first, kb.first);
        const A right = A::mono_mul(ka.second, kb.second);
        const C c = ca * cb;
        for (const auto& [ml, cl] : left.t)
          for (const auto& [mr, cr] : right.t)
            r.add_term({ml, mr}, c * cl * cr);
      }
    return r;
  }
  TensorElem& operator*=(const TensorElem& o) { return *this = *this * o; }

  /// Leg swap (x (x) y -> y (x) x).
  TensorElem swapped() const {
    TensorElem r;
    for (const auto& [k, c] : t) r.add_term({k.second, k.first}, c);
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

template <class C, Pres P>
bool is_zero(const TensorElem<C, P>& a) {
  return a.is_zero();
}

template <class C, Pres P>
class Tensor3 {
  using Ops = CoefOps<C>;

 public:
  using Key = std::array<Mono, 3>;
  std::map<Key, C> t;

  bool is_zero() const { return t.empty(); }
  bool operator==(const Tensor3& o) const { return t == o.t; }
  bool operator!=(const Tensor3& o) const { return !(*this == o); }

  Tensor3& operator-=(const Tensor3& o) {
    for (const auto& [k, c] : o.t) add_term(k, Ops::zero() - c);
    return *this;
  }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

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

template <class C, Pres P>
bool is_zero(const Tensor3<C, P>& a) {
  return a.is_zero();
}

template <class C, Pres P>
std::string to_string(const TensorElem<C, P>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : a.t) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")*" + mono_to_string<P>(k.first) + "(x)" +
         mono_to_string<P>(k.second);
  }
  return s;
}

}  // namespace uqfm
