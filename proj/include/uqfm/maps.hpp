#pragma once
/// \file maps.hpp
/// Structure maps of the quantized enveloping algebras: coproduct, counit,
/// antipode, the Cartan flip, and generic evaluation of PBW elements under
/// generator substitutions (used for representations and presentation
/// changes alike).

#include <functional>

#include "uqfm/tensorelem.hpp"

namespace uqfm {

template <class R>
R ring_pow(const R& base, int n, const R& unit) {
  if (n < 0) throw std::invalid_argument("ring_pow: negative exponent");
  R r = unit;
  R b = base;
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * b;
    if (n > 1) b = b * b;
  }
  return r;
}

/// Images of the generators in a target ring R.  For GL2, k1/k2 are the
/// images of K1/K2; for SL2 they are the images of K (k2 unused); for SL2H
/// they are the images of K^{1/2}.
template <class R>
struct GenImages {
  R unit, f, e, k1, k1i, k2, k2i;
};

/// Evaluate a PBW element under a generator substitution.  lift embeds the
/// coefficients into R.  With anti=true the factors of every monomial are
/// multiplied in reverse order (for antihomomorphisms like the antipode).
template <class R, class C, Pres P, class Lift>
R eval_elem(const AlgElem<C, P>& x, const GenImages<R>& g, Lift lift,
            bool anti = false) {
  R sum{};
  for (const auto& [m, c] : x.t) {
    std::vector<R> factors;
    if (m[0] != 0) factors.push_back(ring_pow(g.f, m[0], g.unit));
    if constexpr (P == Pres::GL2) {
      if (m[1] != 0)
        factors.push_back(
            ring_pow(m[1] > 0 ? g.k1 : g.k1i, std::abs(m[1]), g.unit));
      if (m[2] != 0)
        factors.push_back(
            ring_pow(m[2] > 0 ? g.k2 : g.k2i, std::abs(m[2]), g.unit));
    } else {
      // Doubled Cartan exponents: SL2 images are per unit of K, SL2H per
      // unit of K^{1/2}.
      const int step = (P == Pres::SL2) ? 2 : 1;
      if (m[1] != 0)
        factors.push_back(
            ring_pow(m[1] > 0 ? g.k1 : g.k1i, std::abs(m[1]) / step, g.unit));
    }
    if (m[3] != 0) factors.push_back(ring_pow(g.e, m[3], g.unit));
    R term = lift(c);
    if (anti) {
      for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        term = term * *it;
    } else {
      for (const auto& f : factors) term = term * f;
    }
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Hopf structure maps
// ---------------------------------------------------------------------------

template <class C, Pres P>
struct Hopf {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, P>;
  using T2 = TensorElem<C, P>;

  /// Coproduct generator images:
  ///   GL2: D(E) = E(x)1 + K1K2^{-1}(x)E, D(F) = F(x)K1^{-1}K2 + 1(x)F,
  ///        D(Ki) = Ki(x)Ki
  ///   SL2: D(E) = E(x)1 + K(x)E, D(F) = F(x)K^{-1} + 1(x)F, D(K) = K(x)K
  static GenImages<T2> coproduct_images() {
    GenImages<T2> g;
    g.unit = T2::one();
    if constexpr (P == Pres::GL2) {
      g.f = T2::simple(A::gen_f(), A::k12(-1, 1)) +
            T2::simple(A::one(), A::gen_f());
      g.e = T2::simple(A::gen_e(), A::one()) +
            T2::simple(A::k12(1, -1), A::gen_e());
      g.k1 = T2::simple(A::k12(1, 0), A::k12(1, 0));
      g.k1i = T2::simple(A::k12(-1, 0), A::k12(-1, 0));
      g.k2 = T2::simple(A::k12(0, 1), A::k12(0, 1));
      g.k2i = T2::simple(A::k12(0, -1), A::k12(0, -1));
    } else {
      g.f = T2::simple(A::gen_f(), A::k_pow(-1)) +
            T2::simple(A::one(), A::gen_f());
      g.e = T2::simple(A::gen_e(), A::one()) +
            T2::simple(A::k_pow(1), A::gen_e());
      const int step = (P == Pres::SL2) ? 2 : 1;
      g.k1 = T2::simple(A::k_half_pow(step), A::k_half_pow(step));
      g.k1i = T2::simple(A::k_half_pow(-step), A::k_half_pow(-step));
      g.k2 = g.unit;
      g.k2i = g.unit;
    }
    return g;
  }

  static T2 coproduct(const A& x) {
    static const GenImages<T2> g = coproduct_images();
    return eval_elem(x, g, [](const C& c) { return T2::from_coef(c); });
  }
  /// Opposite coproduct D' = swap o D.
  static T2 coproduct_op(const A& x) { return coproduct(x).swapped(); }

  static C counit(const A& x) {
    GenImages<C> g;
    g.unit = Ops::one();
    g.f = Ops::zero();
    g.e = Ops::zero();
    g.k1 = Ops::one();
    g.k1i = Ops::one();
    g.k2 = Ops::one();
    g.k2i = Ops::one();
    return eval_elem(x, g, [](const C& c) { return c; });
  }

  /// Antipode: S(E) = -K1^{-1}K2 E, S(F) = -F K1K2^{-1}, S(Ki) = Ki^{-1}
  /// (GL2); S(E) = -K^{-1}E, S(F) = -FK, S(K^{1/2}) = K^{-1/2} (SL2/SL2H).
  static A antipode(const A& x) {
    GenImages<A> g;
    g.unit = A::one();
    if constexpr (P == Pres::GL2) {
      g.e = -(A::k12(-1, 1) * A::gen_e());
      g.f = -(A::gen_f() * A::k12(1, -1));
      g.k1 = A::k12(-1, 0);
      g.k1i = A::k12(1, 0);
      g.k2 = A::k12(0, -1);
      g.k2i = A::k12(0, 1);
    } else {
      g.e = -(A::k_pow(-1) * A::gen_e());
      g.f = -(A::gen_f() * A::k_pow(1));
      const int step = (P == Pres::SL2) ? 2 : 1;
      g.k1 = A::k_half_pow(-step);
      g.k1i = A::k_half_pow(step);
    }
    return eval_elem(x, g, [](const C& c) { return A::from_coef(c); },
                     /*anti=*/true);
  }

  /// (D (x) id) D(x) as a three-leg tensor.
  static Tensor3<C, P> coassoc_left(const A& x) {
    Tensor3<C, P> r;
    for (const auto& [k, c] : coproduct(x).t) {
      const T2 d1 = coproduct(A::from_mono(k.first));
      for (const auto& [k1, c1] : d1.t)
        r.add_term({k1.first, k1.second, k.second}, c * c1);
    }
    return r;
  }
  /// (id (x) D) D(x).
  static Tensor3<C, P> coassoc_right(const A& x) {
    Tensor3<C, P> r;
    for (const auto& [k, c] : coproduct(x).t) {
      const T2 d2 = coproduct(A::from_mono(k.second));
      for (const auto& [k2, c2] : d2.t)
        r.add_term({k.first, k2.first, k2.second}, c * c2);
    }
    return r;
  }

  /// m (S (x) id) D(x), which must equal eps(x) 1.
  static A antipode_fold_left(const A& x) {
    A r;
    for (const auto& [k, c] : coproduct(x).t)
      r += c * (antipode(A::from_mono(k.first)) * A::from_mono(k.second));
    return r;
  }
  /// m (id (x) S) D(x).
  static A antipode_fold_right(const A& x) {
    A r;
    for (const auto& [k, c] : coproduct(x).t)
      r += c * (A::from_mono(k.first) * antipode(A::from_mono(k.second)));
    return r;
  }
  /// (eps (x) id) D(x).
  static A counit_fold_left(const A& x) {
    A r;
    for (const auto& [k, c] : coproduct(x).t)
      r += (c * counit(A::from_mono(k.first))) * A::from_mono(k.second);
    return r;
  }
  static A counit_fold_right(const A& x) {
    A r;
    for (const auto& [k, c] : coproduct(x).t)
      r += (c * counit(A::from_mono(k.second))) * A::from_mono(k.first);
    return r;
  }
};

/// Cartan flip of SL2/SL2H: E <-> F, K -> K^{-1} (an algebra automorphism).
template <class C, Pres P>
AlgElem<C, P> theta(const AlgElem<C, P>& x) {
  static_assert(P != Pres::GL2, "theta is defined on SL2/SL2H");
  using A = AlgElem<C, P>;
  GenImages<A> g;
  g.unit = A::one();
  g.f = A::gen_e();
  g.e = A::gen_f();
  const int step = (P == Pres::SL2) ? 2 : 1;
  g.k1 = A::k_half_pow(-step);
  g.k1i = A::k_half_pow(step);
  return eval_elem(x, g, [](const C& c) { return A::from_coef(c); });
}

}  // namespace uqfm
