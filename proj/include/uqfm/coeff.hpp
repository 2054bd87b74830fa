#pragma once
/// \file coeff.hpp
/// Coefficient-ring abstraction.  All algebra templates take a coefficient
/// type C and use CoefOps<C> as the bridge; two models ship:
///
///   C = RatQ  -- exact symbolic: rational functions in p, kp, km, ep, em, al
///   C = Rat   -- exact numeric: every variable replaced by a fixed rational
///                value from the ambient NumericContext (fast cross-check)
///
/// Numeric values are chosen generic enough that the verified identities are
/// not accidental coincidences (no roots of unity, all parameters distinct).

#include "uqfm/scalars.hpp"

namespace uqfm {

/// Values substituted for the symbolic variables in numeric mode.
struct NumericContext {
  Rat p{5, 7};  // q^{1/2}
  Rat kp{2};
  Rat km{3};
  Rat ep{5};
  Rat em{7};
  Rat al{11};

  Rat value(Var v) const {
    switch (v) {
      case Var::p: return p;
      case Var::kp: return kp;
      case Var::km: return km;
      case Var::ep: return ep;
      case Var::em: return em;
      case Var::al: return al;
    }
    throw std::logic_error("NumericContext: bad variable");
  }
};

inline NumericContext& numeric_context() {
  static NumericContext ctx;
  return ctx;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::logic_error("rat_pow: zero to negative power");
    return rat_pow(Rat(denominator(base), numerator(base)), -e);
  }
  Rat r = 1;
  Rat b = base;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

template <class C>
struct CoefOps;

template <>
struct CoefOps<RatQ> {
  static RatQ zero() { return RatQ(); }
  static RatQ one() { return RatQ(1L); }
  static RatQ from_int(long n) { return RatQ(n); }
  static RatQ from_rat(const Rat& r) { return RatQ(r); }
  static RatQ p_pow(long e) { return RatQ::p_pow(e); }
  static RatQ q_pow(long e) { return RatQ::q_pow(e); }
  static RatQ sym(Var v) { return RatQ::variable(v); }
  static bool is_zero(const RatQ& a) { return a.is_zero(); }
};

template <>
struct CoefOps<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_int(long n) { return Rat(n); }
  static Rat from_rat(const Rat& r) { return r; }
  static Rat p_pow(long e) { return rat_pow(numeric_context().p, e); }
  static Rat q_pow(long e) { return p_pow(2 * e); }
  static Rat sym(Var v) { return numeric_context().value(v); }
  static bool is_zero(const Rat& a) { return a == 0; }
};

/// Evaluate a symbolic scalar at the numeric context (for cross-checking the
/// two coefficient models against each other).
inline Rat eval_numeric(const Mpoly& m, const NumericContext& ctx) {
  Rat r = 0;
  for (const auto& [e, c] : m.t) {
    Rat term(c);
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) term *= rat_pow(ctx.value(static_cast<Var>(i)), e[i]);
    r += term;
  }
  return r;
}
inline Rat eval_numeric(const RatQ& a, const NumericContext& ctx) {
  const Rat d = eval_numeric(a.den, ctx);
  if (d == 0) throw std::logic_error("eval_numeric: denominator vanishes");
  return eval_numeric(a.num, ctx) / d;
}

/// q-integer [n]_q = (q^n - q^{-n})/(q - q^{-1}) as an explicit Laurent sum,
/// so it stays polynomial in p for both coefficient models.
template <class C>
C q_int(long n) {
  const long m = n < 0 ? -n : n;
  C r = CoefOps<C>::zero();
  for (long j = 0; j < m; ++j) r += CoefOps<C>::q_pow(m - 1 - 2 * j);
  if (n < 0) r = CoefOps<C>::zero() - r;
  return r;
}

}  // namespace uqfm
