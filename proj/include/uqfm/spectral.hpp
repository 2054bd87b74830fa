#pragma once
/// \file spectral.hpp
/// Spectral-parameter layer: the symmetric R-matrix R(u), the Lax operator
/// L(u) over the half-integer-weight extension, the general K-operator over
/// the q-commutator word algebra together with its three specializations,
/// Sklyanin determinants, and the decomposition machinery relating the
/// spectral operators to the constant ones.

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "uqfm/coeff.hpp"
#include "uqfm/eqexpr.hpp"
#include "uqfm/lpoly.hpp"
#include "uqfm/mat.hpp"
#include "uqfm/matalg.hpp"
#include "uqfm/pbw.hpp"
#include "uqfm/scalars.hpp"

namespace uqfm {

// ---------------------------------------------------------------------------
// Entrywise helpers on Laurent-polynomial matrices
// ---------------------------------------------------------------------------

/// Lift a constant matrix over C into a matrix of constant Laurent
/// polynomials over the algebra T.
template <class T, class C>
Mat<Lpoly<T>> lift_lmat(const Mat<C>& m) {
  Mat<Lpoly<T>> r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const T c = T::from_coef(m.get(i, j));
      if (!is_zero(c)) r.set(i, j, Lpoly<T>::constant(c));
    }
  return r;
}

/// Lift a constant matrix over the algebra T into constant Laurent
/// polynomials.
template <class T>
Mat<Lpoly<T>> lift_lmat_alg(const Mat<T>& m) {
  Mat<Lpoly<T>> r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!is_zero(m.get(i, j)))
        r.set(i, j, Lpoly<T>::constant(m.get(i, j)));
  return r;
}

/// Apply f to every Laurent coefficient of every entry.
template <class B, class A, class F>
Mat<Lpoly<B>> map_lmat(const Mat<Lpoly<A>>& m, F&& f) {
  Mat<Lpoly<B>> r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      Lpoly<B> e;
      for (const auto& [d, c] : m.get(i, j).t) e.add_term(d.first, d.second, f(c));
      if (!e.is_zero()) r.set(i, j, e);
    }
  return r;
}

/// Substitute u -> u p^s: the coefficient of u^a v^b is scaled by p^{s a}.
template <class C, class T>
Lpoly<T> shift_u(const Lpoly<T>& x, int s) {
  using Ops = CoefOps<C>;
  Lpoly<T> r;
  for (const auto& [d, c] : x.t)
    r.add_term(d.first, d.second, c.scaled(Ops::p_pow(s * d.first)));
  return r;
}

template <class C, class T>
Mat<Lpoly<T>> shift_u(const Mat<Lpoly<T>>& m, int s) {
  Mat<Lpoly<T>> r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.get(i, j).is_zero()) r.set(i, j, shift_u<C>(m.get(i, j), s));
  return r;
}

/// Rename the spectral variable u -> v (only valid on polynomials in u alone).
template <class T>
Lpoly<T> to_v(const Lpoly<T>& x) {
  Lpoly<T> r;
  for (const auto& [d, c] : x.t) {
    if (d.second != 0) throw std::logic_error("to_v: input already involves v");
    r.add_term(0, d.first, c);
  }
  return r;
}

template <class T>
Mat<Lpoly<T>> to_v_mat(const Mat<Lpoly<T>>& m) {
  Mat<Lpoly<T>> r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.get(i, j).is_zero()) r.set(i, j, to_v(m.get(i, j)));
  return r;
}

/// Multiply every term by u^{du} v^{dv} (degrees shift, coefficients fixed).
template <class T>
Lpoly<T> u_scale_terms(const Lpoly<T>& x, int du, int dv) {
  Lpoly<T> r;
  for (const auto& [d, c] : x.t) r.add_term(d.first + du, d.second + dv, c);
  return r;
}

/// Scale every coefficient of an algebra-valued Laurent polynomial by p^e.
template <class C, class T>
Lpoly<T> p_scale(const Lpoly<T>& x, int e) {
  using Ops = CoefOps<C>;
  Lpoly<T> r;
  for (const auto& [d, c] : x.t) r.add_term(d.first, d.second, c.scaled(Ops::p_pow(e)));
  return r;
}

// ---------------------------------------------------------------------------
// Spectral R-matrix
// ---------------------------------------------------------------------------

/// The symmetric R-matrix R(x) at argument x = u^{du} v^{dv}:
///   [[ xq - x^{-1}q^{-1}, 0, 0, 0 ],
///    [ 0, x - x^{-1}, q - q^{-1}, 0 ],
///    [ 0, q - q^{-1}, x - x^{-1}, 0 ],
///    [ 0, 0, 0, xq - x^{-1}q^{-1} ]].
/// mat_r_spec(1,0) is R(u), mat_r_spec(1,-1) is R(u/v), and mat_r_spec(0,0)
/// collapses to (q - q^{-1}) P.
template <class C>
Mat<Lpoly<C>> mat_r_spec(int du, int dv) {
  using Ops = CoefOps<C>;
  const C q = Ops::q_pow(1), qi = Ops::q_pow(-1);
  Mat<Lpoly<C>> r(4, 4);
  Lpoly<C> diag_out = Lpoly<C>::term(du, dv, q);
  diag_out.add_term(-du, -dv, Ops::zero() - qi);
  Lpoly<C> diag_in = Lpoly<C>::term(du, dv, Ops::one());
  diag_in.add_term(-du, -dv, Ops::zero() - Ops::one());
  const Lpoly<C> cross = Lpoly<C>::constant(q - qi);
  r.set(0, 0, diag_out);
  r.set(3, 3, diag_out);
  r.set(1, 1, diag_in);
  r.set(2, 2, diag_in);
  r.set(1, 2, cross);
  r.set(2, 1, cross);
  return r;
}

/// The nonsymmetric combination R^{ns}(x) = x R - x^{-1} R21^{-1} at
/// x = u^{du} v^{dv}.
template <class C>
Mat<Lpoly<C>> mat_r_ns(int du, int dv) {
  const Mat<C> rp = mat_R<C>();
  const Mat<C> rm = mat_R21_inv<C>();
  Mat<Lpoly<C>> r(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Lpoly<C> e;
      e.add_term(du, dv, rp.get(i, j));
      e.add_term(-du, -dv, CoefOps<C>::zero() - rm.get(i, j));
      if (!e.is_zero()) r.set(i, j, e);
    }
  return r;
}

/// Conjugate a 4x4 spectral matrix by the inverse two-leg weight matrix:
/// entry (i,j) is multiplied by u^{(wa_j - wa_i)/2} v^{(wb_j - wb_i)/2}.
/// Throws std::domain_error if a nonzero entry would acquire a fractional
/// power of u or v.
template <class C>
Mat<Lpoly<C>> leg_scale(const Mat<Lpoly<C>>& m, const std::array<int, 4>& wa,
                        const std::array<int, 4>& wb) {
  Mat<Lpoly<C>> r(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (m.get(i, j).is_zero()) continue;
      const int da = wa[j] - wa[i], db = wb[j] - wb[i];
      if (da % 2 != 0 || db % 2 != 0)
        throw std::domain_error("leg_scale: fractional spectral exponent");
      r.set(i, j, u_scale_terms(m.get(i, j), da / 2, db / 2));
    }
  return r;
}

/// Conjugate a 2x2 K-operator by M(u p^s) = diag((u p^s)^{1/2}, (u p^s)^{-1/2}):
/// entry (0,1) gains a factor u p^s and entry (1,0) a factor u^{-1} p^{-s}.
template <class C, class T>
Mat<Lpoly<T>> m_conj(const Mat<Lpoly<T>>& k, int s) {
  Mat<Lpoly<T>> r(2, 2);
  r.set(0, 0, k.get(0, 0));
  r.set(1, 1, k.get(1, 1));
  r.set(0, 1, p_scale<C>(u_scale_terms(k.get(0, 1), 1, 0), s));
  r.set(1, 0, p_scale<C>(u_scale_terms(k.get(1, 0), -1, 0), -s));
  return r;
}

// ---------------------------------------------------------------------------
// Lax operators
// ---------------------------------------------------------------------------

/// L(u) = [[u K^{1/2} - u^{-1} K^{-1/2}, (q-q^{-1}) F K^{1/2}],
///         [(q-q^{-1}) K^{-1/2} E,       u K^{-1/2} - u^{-1} K^{1/2}]].
template <class C>
Mat<Lpoly<AlgElem<C, Pres::SL2H>>> lax_u() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2H>;
  const C d = Ops::q_pow(1) - Ops::q_pow(-1);
  Mat<Lpoly<A>> r(2, 2);
  Lpoly<A> a00 = Lpoly<A>::term(1, 0, A::k_half_pow(1));
  a00.add_term(-1, 0, -A::k_half_pow(-1));
  Lpoly<A> a11 = Lpoly<A>::term(1, 0, A::k_half_pow(-1));
  a11.add_term(-1, 0, -A::k_half_pow(1));
  r.set(0, 0, a00);
  r.set(1, 1, a11);
  r.set(0, 1, Lpoly<A>::constant((A::gen_f() * A::k_half_pow(1)).scaled(d)));
  r.set(1, 0, Lpoly<A>::constant((A::k_half_pow(-1) * A::gen_e()).scaled(d)));
  return r;
}

/// L0(u) = diag(u K^{1/2}, u K^{-1/2}).
template <class C>
Mat<Lpoly<AlgElem<C, Pres::SL2H>>> lax0_u() {
  using A = AlgElem<C, Pres::SL2H>;
  Mat<Lpoly<A>> r(2, 2);
  r.set(0, 0, Lpoly<A>::term(1, 0, A::k_half_pow(1)));
  r.set(1, 1, Lpoly<A>::term(1, 0, A::k_half_pow(-1)));
  return r;
}

// ---------------------------------------------------------------------------
// Spectral K-operators
// ---------------------------------------------------------------------------

/// The general K-operator over the word algebra (W is FreeElem or AElem):
///   [[ uq W0 - u^{-1} ep,          Z1 + kp q u^2 / (q-q^{-1}) ],
///    [ Zt1 + km q u^2 / (q-q^{-1}), uq W1 - u^{-1} em ]].
template <class C, template <class> class W>
Mat<Lpoly<W<C>>> kop_g_u() {
  using Ops = CoefOps<C>;
  using A = W<C>;
  const C q = Ops::q_pow(1);
  const C dinv = Ops::one() / (q - Ops::q_pow(-1));
  const C kp = Ops::sym(Var::kp), km = Ops::sym(Var::km);
  const C ep = Ops::sym(Var::ep), em = Ops::sym(Var::em);
  Mat<Lpoly<A>> r(2, 2);
  Lpoly<A> a00 = Lpoly<A>::term(1, 0, A::gen(0).scaled(q));
  a00.add_term(-1, 0, A::from_coef(Ops::zero() - ep));
  Lpoly<A> a11 = Lpoly<A>::term(1, 0, A::gen(1).scaled(q));
  a11.add_term(-1, 0, A::from_coef(Ops::zero() - em));
  Lpoly<A> a01 = Lpoly<A>::constant(A::gen(2));
  a01.add_term(2, 0, A::from_coef(kp * q * dinv));
  Lpoly<A> a10 = Lpoly<A>::constant(A::gen(3));
  a10.add_term(2, 0, A::from_coef(km * q * dinv));
  r.set(0, 0, a00);
  r.set(0, 1, a01);
  r.set(1, 0, a10);
  r.set(1, 1, a11);
  return r;
}

/// K_c(u) = [[uqK - u^{-1}, (q-q^{-1})FK], [(q-q^{-1})K^{-1}E, uqK^{-1} - u^{-1}]].
template <class C>
Mat<Lpoly<AlgElem<C, Pres::SL2>>> kop_c_u() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const C q = Ops::q_pow(1);
  const C d = q - Ops::q_pow(-1);
  Mat<Lpoly<A>> r(2, 2);
  Lpoly<A> a00 = Lpoly<A>::term(1, 0, A::k_pow(1).scaled(q));
  a00.add_term(-1, 0, -A::one());
  Lpoly<A> a11 = Lpoly<A>::term(1, 0, A::k_pow(-1).scaled(q));
  a11.add_term(-1, 0, -A::one());
  r.set(0, 0, a00);
  r.set(1, 1, a11);
  r.set(0, 1, Lpoly<A>::constant((A::gen_f() * A::k_pow(1)).scaled(d)));
  r.set(1, 0, Lpoly<A>::constant((A::k_pow(-1) * A::gen_e()).scaled(d)));
  return r;
}

/// K_e(u) = [[uqX - u^{-1}, q^{-1}(YX - 1)], [qu^2 - Z, uqY - u^{-1}]].
template <class C>
Mat<Lpoly<EqElem<C>>> kop_e_u() {
  using Ops = CoefOps<C>;
  using A = EqElem<C>;
  const C q = Ops::q_pow(1), qi = Ops::q_pow(-1);
  Mat<Lpoly<A>> r(2, 2);
  Lpoly<A> a00 = Lpoly<A>::term(1, 0, A::X().scaled(q));
  a00.add_term(-1, 0, -A::one());
  Lpoly<A> a11 = Lpoly<A>::term(1, 0, A::Y().scaled(q));
  a11.add_term(-1, 0, -A::one());
  Lpoly<A> a10 = Lpoly<A>::term(2, 0, A::one().scaled(q));
  a10.add_term(0, 0, -A::Z());
  r.set(0, 0, a00);
  r.set(1, 1, a11);
  r.set(0, 1, Lpoly<A>::constant((A::Y() * A::X() - A::one()).scaled(qi)));
  r.set(1, 0, a10);
  return r;
}

/// The rotated equitable operator
/// [[uqY - u^{-1}, q^{-1}(ZY - 1)], [qu^2 - X, uqZ - u^{-1}]].
template <class C>
Mat<Lpoly<EqElem<C>>> kop_bx_u() {
  using Ops = CoefOps<C>;
  using A = EqElem<C>;
  const C q = Ops::q_pow(1), qi = Ops::q_pow(-1);
  Mat<Lpoly<A>> r(2, 2);
  Lpoly<A> a00 = Lpoly<A>::term(1, 0, A::Y().scaled(q));
  a00.add_term(-1, 0, -A::one());
  Lpoly<A> a11 = Lpoly<A>::term(1, 0, A::Z().scaled(q));
  a11.add_term(-1, 0, -A::one());
  Lpoly<A> a10 = Lpoly<A>::term(2, 0, A::one().scaled(q));
  a10.add_term(0, 0, -A::X());
  r.set(0, 0, a00);
  r.set(1, 1, a11);
  r.set(0, 1, Lpoly<A>::constant((A::Z() * A::Y() - A::one()).scaled(qi)));
  r.set(1, 0, a10);
  return r;
}

/// Seed operator intertwining the two spectral gauges:
/// [[u^{-1}, 0], [q^{-1}, u^{-1}]].
template <class C>
Mat<Lpoly<C>> kop0_ec_u() {
  using Ops = CoefOps<C>;
  Mat<Lpoly<C>> r(2, 2);
  r.set(0, 0, Lpoly<C>::term(-1, 0, Ops::one()));
  r.set(1, 1, Lpoly<C>::term(-1, 0, Ops::one()));
  r.set(1, 0, Lpoly<C>::constant(Ops::q_pow(-1)));
  return r;
}

// ---------------------------------------------------------------------------
// Exchange residuals and Sklyanin determinants
// ---------------------------------------------------------------------------

/// Residual of the spectral exchange equation
/// S K1 T K2 - K2 T K1 S on the 4x4 tensor square, with K1 = k_u x I and
/// K2 = I x k_v.
template <class T>
Mat<Lpoly<T>> re_residual(const Mat<Lpoly<T>>& s, const Mat<Lpoly<T>>& t0,
                          const Mat<Lpoly<T>>& k_u, const Mat<Lpoly<T>>& k_v) {
  const Mat<Lpoly<T>> id2 = Mat<Lpoly<T>>::identity(2, Lpoly<T>::constant(T::one()));
  const auto k1 = kron(k_u, id2);
  const auto k2 = kron(id2, k_v);
  return s * k1 * t0 * k2 - k2 * t0 * k1 * s;
}

/// tr_{12}( P^- (A(u) x I) MID (I x B(uq)) ), the Sklyanin-determinant trace
/// shared by the Lax quantum determinant (MID = I) and the two-boundary
/// generating function (MID = R^(0)).
template <class C, class T>
Lpoly<T> sklyanin_det(const Mat<Lpoly<T>>& a_u, const Mat<Lpoly<T>>& mid,
                      const Mat<Lpoly<T>>& b_u) {
  using Ops = CoefOps<C>;
  const Mat<Lpoly<T>> id2 = Mat<Lpoly<T>>::identity(2, Lpoly<T>::constant(T::one()));
  const Mat<Lpoly<T>> id4 = Mat<Lpoly<T>>::identity(4, Lpoly<T>::constant(T::one()));
  const C half = Ops::one() / Ops::from_int(2);
  Mat<Lpoly<T>> pmat = lift_lmat<T>(mat_P<C>());
  Mat<Lpoly<T>> pminus = (id4 - pmat).scaled(Lpoly<T>::constant(T::from_coef(half)));
  const auto a1 = kron(a_u, id2);
  const auto b2 = kron(id2, shift_u<C>(b_u, 2));
  return (pminus * a1 * mid * b2).trace();
}

// ---------------------------------------------------------------------------
// Specialization of the word algebra
// ---------------------------------------------------------------------------

/// Evaluate a rational coefficient at fixed values of the four structure
/// constants (kp, km, ep, em); p and al are left untouched.  Throws
/// std::domain_error if the denominator vanishes under the substitution.
inline RatQ subst_consts(const RatQ& x, const std::array<RatQ, 4>& vals) {
  auto eval = [&vals](const Mpoly& m) {
    RatQ acc;
    for (const auto& [e, c] : m.t) {
      Expo keep{};
      keep[int(Var::p)] = e[int(Var::p)];
      keep[int(Var::al)] = e[int(Var::al)];
      RatQ term = RatQ::from_poly(Mpoly::monomial(c, keep));
      for (int j = 0; j < 4; ++j)
        for (int32_t k = 0; k < e[int(Var::kp) + j]; ++k) term *= vals[j];
      acc += term;
    }
    return acc;
  };
  const RatQ den = eval(x.den);
  if (den.num.is_zero())
    throw std::domain_error("subst_consts: denominator vanishes");
  return eval(x.num) / den;
}

/// Map a free word element into the algebra A by substituting images of the
/// four generators and transforming each coefficient with cmap.
template <class A, class C, class F>
A subst_words(const FreeElem<C>& x, const std::array<A, 4>& img, F&& cmap) {
  A acc = A::zero();
  for (const auto& [w, c] : x.t) {
    A term = A::from_coef(cmap(c));
    for (char ch : w) term *= img[ch - '0'];
    acc += term;
  }
  return acc;
}

template <class A, class C, class F>
Lpoly<A> subst_words(const Lpoly<FreeElem<C>>& x, const std::array<A, 4>& img,
                     F&& cmap) {
  Lpoly<A> r;
  for (const auto& [d, c] : x.t) r.add_term(d.first, d.second, subst_words(c, img, cmap));
  return r;
}

template <class A, class C, class F>
Mat<Lpoly<A>> subst_words_mat(const Mat<Lpoly<FreeElem<C>>>& m,
                              const std::array<A, 4>& img, F&& cmap) {
  Mat<Lpoly<A>> r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.get(i, j).is_zero()) r.set(i, j, subst_words(m.get(i, j), img, cmap));
  return r;
}

/// Generator images of the three specializations of the word algebra, indexed
/// by (W0, W1, Z1, Zt1), together with the structure-constant values
/// (kp, km, ep, em) they require.

/// Chevalley column: (K, K^{-1}, (q-q^{-1})FK, (q-q^{-1})K^{-1}E),
/// constants (0, 0, 1, 1).
template <class C>
std::array<AlgElem<C, Pres::SL2>, 4> spec_images_c() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const C d = Ops::q_pow(1) - Ops::q_pow(-1);
  return {A::k_pow(1), A::k_pow(-1), (A::gen_f() * A::k_pow(1)).scaled(d),
          (A::k_pow(-1) * A::gen_e()).scaled(d)};
}

/// Equitable column: (X, Y, q^{-1}(YX - 1), -Z), constants (0, q-q^{-1}, 1, 1).
template <class C>
std::array<EqElem<C>, 4> spec_images_e() {
  using Ops = CoefOps<C>;
  using A = EqElem<C>;
  return {A::X(), A::Y(), (A::Y() * A::X() - A::one()).scaled(Ops::q_pow(-1)),
          -A::Z()};
}

/// Second Chevalley column: (E, F, -K/(q-q^{-1}), -K^{-1}/(q-q^{-1})),
/// constants (1, 1, 0, 0).
template <class C>
std::array<AlgElem<C, Pres::SL2>, 4> spec_images_cp() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const C dinv = Ops::one() / (Ops::q_pow(1) - Ops::q_pow(-1));
  return {A::gen_e(), A::gen_f(), A::k_pow(1).scaled(Ops::zero() - dinv),
          A::k_pow(-1).scaled(Ops::zero() - dinv)};
}

/// Structure-constant values of the three specializations, as substitution
/// arrays for subst_consts.
inline std::array<RatQ, 4> spec_consts_c() {
  using Ops = CoefOps<RatQ>;
  return {Ops::zero(), Ops::zero(), Ops::one(), Ops::one()};
}
inline std::array<RatQ, 4> spec_consts_e() {
  using Ops = CoefOps<RatQ>;
  return {Ops::zero(), Ops::q_pow(1) - Ops::q_pow(-1), Ops::one(), Ops::one()};
}
inline std::array<RatQ, 4> spec_consts_cp() {
  using Ops = CoefOps<RatQ>;
  return {Ops::one(), Ops::one(), Ops::zero(), Ops::zero()};
}

}  // namespace uqfm
