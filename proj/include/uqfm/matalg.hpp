#pragma once

// Named 2x2 operator matrices and 4x4 auxiliary-space matrices, together with
// the residual helpers used to verify exchange-type matrix equations.
//
// Conventions:
//  * the auxiliary space is C^2 (x) C^2; leg 0 is the most significant index,
//    so a 4x4 matrix acts with row index 2*i1 + i2;
//  * M1 = M (x) I and M2 = I (x) M for a 2x2 operator matrix M;
//  * scalar matrices are lifted into an operator ring entrywise via
//    R::from_coef.

#include <optional>
#include <stdexcept>
#include <vector>

#include "uqfm/coeff.hpp"
#include "uqfm/eqexpr.hpp"
#include "uqfm/maps.hpp"
#include "uqfm/mat.hpp"
#include "uqfm/pbw.hpp"
#include "uqfm/tensorelem.hpp"

namespace uqfm {

// ---------------------------------------------------------------------------
// Scalar auxiliary-space matrices.

template <class C>
Mat<C> mat_identity(int n) {
  return Mat<C>::identity(n, CoefOps<C>::one());
}

/// The standard 4x4 braid-compatible R-matrix
///   [[q,0,0,0],[0,1,q-q^-1,0],[0,0,1,0],[0,0,0,q]].
template <class C>
Mat<C> mat_R() {
  using Ops = CoefOps<C>;
  Mat<C> r(4, 4);
  r.set(0, 0, Ops::q_pow(1));
  r.set(1, 1, Ops::one());
  r.set(1, 2, Ops::q_pow(1) - Ops::q_pow(-1));
  r.set(2, 2, Ops::one());
  r.set(3, 3, Ops::q_pow(1));
  return r;
}

/// Inverse of mat_R (equals mat_R with q -> q^-1).
template <class C>
Mat<C> mat_R_inv() {
  using Ops = CoefOps<C>;
  Mat<C> r(4, 4);
  r.set(0, 0, Ops::q_pow(-1));
  r.set(1, 1, Ops::one());
  r.set(1, 2, Ops::q_pow(-1) - Ops::q_pow(1));
  r.set(2, 2, Ops::one());
  r.set(3, 3, Ops::q_pow(-1));
  return r;
}

/// Permutation operator P(v1 (x) v2) = v2 (x) v1 on C^2 (x) C^2.
template <class C>
Mat<C> mat_P() {
  using Ops = CoefOps<C>;
  Mat<C> r(4, 4);
  r.set(0, 0, Ops::one());
  r.set(1, 2, Ops::one());
  r.set(2, 1, Ops::one());
  r.set(3, 3, Ops::one());
  return r;
}

template <class C>
Mat<C> mat_R21() {
  return mat_P<C>() * mat_R<C>() * mat_P<C>();
}

template <class C>
Mat<C> mat_R21_inv() {
  return mat_P<C>() * mat_R_inv<C>() * mat_P<C>();
}

/// Diagonal exchange-equation companion diag(1, q^-1, q^-1, 1).
template <class C>
Mat<C> mat_R0() {
  using Ops = CoefOps<C>;
  Mat<C> r(4, 4);
  r.set(0, 0, Ops::one());
  r.set(1, 1, Ops::q_pow(-1));
  r.set(2, 2, Ops::q_pow(-1));
  r.set(3, 3, Ops::one());
  return r;
}

template <class C>
Mat<C> mat_R0_inv() {
  using Ops = CoefOps<C>;
  Mat<C> r(4, 4);
  r.set(0, 0, Ops::one());
  r.set(1, 1, Ops::q_pow(1));
  r.set(2, 2, Ops::q_pow(1));
  r.set(3, 3, Ops::one());
  return r;
}

/// Hecke idempotent-like element U = P R - q I.
template <class C>
Mat<C> mat_U() {
  using Ops = CoefOps<C>;
  return mat_P<C>() * mat_R<C>() -
         mat_identity<C>(4).scaled(Ops::q_pow(1));
}

/// Quantum-trace weight diag(q, q^-1).
template <class C>
Mat<C> mat_D() {
  using Ops = CoefOps<C>;
  Mat<C> r(2, 2);
  r.set(0, 0, Ops::q_pow(1));
  r.set(1, 1, Ops::q_pow(-1));
  return r;
}

/// Lower-triangular unipotent [[1,0],[alpha,1]].
template <class C>
Mat<C> mat_K0(const C& alpha) {
  using Ops = CoefOps<C>;
  Mat<C> r(2, 2);
  r.set(0, 0, Ops::one());
  r.set(1, 0, alpha);
  r.set(1, 1, Ops::one());
  return r;
}

// ---------------------------------------------------------------------------
// Quantum L-operators (upper/lower triangular Borel generators).

namespace detail {
template <class C>
C qq_minus() {
  using Ops = CoefOps<C>;
  return Ops::q_pow(1) - Ops::q_pow(-1);
}
}  // namespace detail

/// L^+ = [[K1, (q-q^-1) K1 F], [0, K2]]; for SL2H, K1 -> K^{1/2},
/// K2 -> K^{-1/2}.
template <class C, Pres P>
Mat<AlgElem<C, P>> lop_plus() {
  static_assert(P != Pres::SL2, "L-operators need half-integer Cartan powers");
  using A = AlgElem<C, P>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  if constexpr (P == Pres::GL2) {
    r.set(0, 0, A::k12(1, 0));
    r.set(0, 1, (A::k12(1, 0) * A::gen_f()).scaled(d));
    r.set(1, 1, A::k12(0, 1));
  } else {
    r.set(0, 0, A::k_half_pow(1));
    r.set(0, 1, (A::k_half_pow(1) * A::gen_f()).scaled(d));
    r.set(1, 1, A::k_half_pow(-1));
  }
  return r;
}

/// L^- = [[K1^-1, 0], [-(q-q^-1) E K1^-1, K2^-1]].
template <class C, Pres P>
Mat<AlgElem<C, P>> lop_minus() {
  static_assert(P != Pres::SL2, "L-operators need half-integer Cartan powers");
  using A = AlgElem<C, P>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  if constexpr (P == Pres::GL2) {
    r.set(0, 0, A::k12(-1, 0));
    r.set(1, 0, -(A::gen_e() * A::k12(-1, 0)).scaled(d));
    r.set(1, 1, A::k12(0, -1));
  } else {
    r.set(0, 0, A::k_half_pow(-1));
    r.set(1, 0, -(A::gen_e() * A::k_half_pow(-1)).scaled(d));
    r.set(1, 1, A::k_half_pow(1));
  }
  return r;
}

/// (L^+)^{-1} = [[K1^-1, -(q-q^-1) F K2^-1], [0, K2^-1]].
template <class C, Pres P>
Mat<AlgElem<C, P>> lop_plus_inv() {
  static_assert(P != Pres::SL2, "L-operators need half-integer Cartan powers");
  using A = AlgElem<C, P>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  if constexpr (P == Pres::GL2) {
    r.set(0, 0, A::k12(-1, 0));
    r.set(0, 1, -(A::gen_f() * A::k12(0, -1)).scaled(d));
    r.set(1, 1, A::k12(0, -1));
  } else {
    r.set(0, 0, A::k_half_pow(-1));
    r.set(0, 1, -(A::gen_f() * A::k_half_pow(1)).scaled(d));
    r.set(1, 1, A::k_half_pow(1));
  }
  return r;
}

/// (L^-)^{-1} = [[K1, 0], [(q-q^-1) K2 E, K2]].
template <class C, Pres P>
Mat<AlgElem<C, P>> lop_minus_inv() {
  static_assert(P != Pres::SL2, "L-operators need half-integer Cartan powers");
  using A = AlgElem<C, P>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  if constexpr (P == Pres::GL2) {
    r.set(0, 0, A::k12(1, 0));
    r.set(1, 0, (A::k12(0, 1) * A::gen_e()).scaled(d));
    r.set(1, 1, A::k12(0, 1));
  } else {
    r.set(0, 0, A::k_half_pow(1));
    r.set(1, 0, (A::k_half_pow(-1) * A::gen_e()).scaled(d));
    r.set(1, 1, A::k_half_pow(-1));
  }
  return r;
}

/// Reduced diagonal Lax operators diag(K1, K2) and diag(K2^-1, K1^-1).
template <class C>
Mat<AlgElem<C, Pres::GL2>> lop0_plus() {
  using A = AlgElem<C, Pres::GL2>;
  Mat<A> r(2, 2);
  r.set(0, 0, A::k12(1, 0));
  r.set(1, 1, A::k12(0, 1));
  return r;
}

template <class C>
Mat<AlgElem<C, Pres::GL2>> lop0_minus_bar() {
  using A = AlgElem<C, Pres::GL2>;
  Mat<A> r(2, 2);
  r.set(0, 0, A::k12(0, -1));
  r.set(1, 1, A::k12(-1, 0));
  return r;
}

// ---------------------------------------------------------------------------
// One-parameter K-operator family over the two-Cartan algebra; the parameter
// is the coefficient symbol `al`.

/// K^{+,a} = [[K1 K2^-1, (q-q^-1) K1 K2^-1 F], [a, K2 K1^-1 + a (q-q^-1) F]].
/// By default the parameter is kept symbolic.
template <class C>
Mat<AlgElem<C, Pres::GL2>> kop_alpha_plus(const C& a = CoefOps<C>::sym(Var::al)) {
  using A = AlgElem<C, Pres::GL2>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  r.set(0, 0, A::k12(1, -1));
  r.set(0, 1, (A::k12(1, -1) * A::gen_f()).scaled(d));
  r.set(1, 0, A::from_coef(a));
  r.set(1, 1, A::k12(-1, 1) + A::gen_f().scaled(a * d));
  return r;
}

/// K^{-,a} = [[1, 0], [a K2 K1^-1 - q (q-q^-1) K2 K1^-1 E, 1]].
template <class C>
Mat<AlgElem<C, Pres::GL2>> kop_alpha_minus(const C& a = CoefOps<C>::sym(Var::al)) {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::GL2>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  r.set(0, 0, A::one());
  r.set(1, 0, A::k12(-1, 1).scaled(a) -
                  (A::k12(-1, 1) * A::gen_e()).scaled(Ops::q_pow(1) * d));
  r.set(1, 1, A::one());
  return r;
}

// ---------------------------------------------------------------------------
// Chevalley K-operators and inverses.

/// K_c^+ = [[K, (q-q^-1) K F], [0, K^-1]].
template <class C>
Mat<AlgElem<C, Pres::SL2>> kop_c_plus() {
  using A = AlgElem<C, Pres::SL2>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  r.set(0, 0, A::k_pow(1));
  r.set(0, 1, (A::k_pow(1) * A::gen_f()).scaled(d));
  r.set(1, 1, A::k_pow(-1));
  return r;
}

/// K_c^- = [[1, 0], [-q (q-q^-1) K^-1 E, 1]].
template <class C>
Mat<AlgElem<C, Pres::SL2>> kop_c_minus() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  r.set(0, 0, A::one());
  r.set(1, 0, -(A::k_pow(-1) * A::gen_e()).scaled(Ops::q_pow(1) * d));
  r.set(1, 1, A::one());
  return r;
}

/// (K_c^+)^{-1} = [[K^-1, -(q-q^-1) F K], [0, K]].
template <class C>
Mat<AlgElem<C, Pres::SL2>> kop_c_plus_inv() {
  using A = AlgElem<C, Pres::SL2>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  r.set(0, 0, A::k_pow(-1));
  r.set(0, 1, -(A::gen_f() * A::k_pow(1)).scaled(d));
  r.set(1, 1, A::k_pow(1));
  return r;
}

/// (K_c^-)^{-1} = [[1, 0], [q^-1 (q-q^-1) E K^-1, 1]].
template <class C>
Mat<AlgElem<C, Pres::SL2>> kop_c_minus_inv() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  r.set(0, 0, A::one());
  r.set(1, 0, (A::gen_e() * A::k_pow(-1)).scaled(Ops::q_pow(-1) * d));
  r.set(1, 1, A::one());
  return r;
}

/// Variant pair used with the inverted diagonal companion:
/// [[1, (q-q^-1) F], [0, 1]] and [[K^-1, 0], [-q (q-q^-1) K E, K]].
template <class C>
Mat<AlgElem<C, Pres::SL2>> kop_c_plus_bis() {
  using A = AlgElem<C, Pres::SL2>;
  Mat<A> r(2, 2);
  r.set(0, 0, A::one());
  r.set(0, 1, A::gen_f().scaled(detail::qq_minus<C>()));
  r.set(1, 1, A::one());
  return r;
}

/// The lower-left entry is -q(q-q^-1)E: with a spurious K factor there the
/// mixed exchange equation of the inverted-diagonal presentation fails (the
/// like-sign ones survive, since E -> cKE extends to an automorphism of the
/// upper Borel subalgebra and only the mixed equation pins the entry).
template <class C>
Mat<AlgElem<C, Pres::SL2>> kop_c_minus_bis() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  r.set(0, 0, A::k_pow(-1));
  r.set(1, 0, -A::gen_e().scaled(Ops::q_pow(1) * d));
  r.set(1, 1, A::k_pow(1));
  return r;
}

/// (kop_c_minus_bis)^{-1} = [[K, 0], [q^-1 (q-q^-1) E, K^-1]].
template <class C>
Mat<AlgElem<C, Pres::SL2>> kop_c_minus_bis_inv() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  r.set(0, 0, A::k_pow(1));
  r.set(1, 0, A::gen_e().scaled(Ops::q_pow(-1) * d));
  r.set(1, 1, A::k_pow(-1));
  return r;
}

// ---------------------------------------------------------------------------
// Equitable K-operators (entries are formal words).

/// K_e^+ = [[X, XY-1], [1, Y]].
template <class C>
Mat<EqElem<C>> kop_e_plus() {
  using E = EqElem<C>;
  Mat<E> r(2, 2);
  r.set(0, 0, E::X());
  r.set(0, 1, E::X() * E::Y() - E::one());
  r.set(1, 0, E::one());
  r.set(1, 1, E::Y());
  return r;
}

/// K_e^- = [[1, 0], [Z, 1]].
template <class C>
Mat<EqElem<C>> kop_e_minus() {
  using E = EqElem<C>;
  Mat<E> r(2, 2);
  r.set(0, 0, E::one());
  r.set(1, 0, E::Z());
  r.set(1, 1, E::one());
  return r;
}

/// (K_e^+)^{-1} = [[Y, 1-YX], [-1, X]] (a two-sided inverse already at the
/// level of formal words).
template <class C>
Mat<EqElem<C>> kop_e_plus_inv() {
  using E = EqElem<C>;
  Mat<E> r(2, 2);
  r.set(0, 0, E::Y());
  r.set(0, 1, E::one() - E::Y() * E::X());
  r.set(1, 0, -E::one());
  r.set(1, 1, E::X());
  return r;
}

template <class C>
Mat<EqElem<C>> kop_e_minus_inv() {
  using E = EqElem<C>;
  Mat<E> r(2, 2);
  r.set(0, 0, E::one());
  r.set(1, 0, -E::Z());
  r.set(1, 1, E::one());
  return r;
}

/// Rotated operators K_B = [[Y, YZ-1], [1, Z]] and K_X = [[1, 0], [X, 1]].
template <class C>
Mat<EqElem<C>> kop_borel() {
  using E = EqElem<C>;
  Mat<E> r(2, 2);
  r.set(0, 0, E::Y());
  r.set(0, 1, E::Y() * E::Z() - E::one());
  r.set(1, 0, E::one());
  r.set(1, 1, E::Z());
  return r;
}

template <class C>
Mat<EqElem<C>> kop_x() {
  using E = EqElem<C>;
  Mat<E> r(2, 2);
  r.set(0, 0, E::one());
  r.set(1, 0, E::X());
  r.set(1, 1, E::one());
  return r;
}

/// Variant pair for the inverted diagonal companion:
/// [[1, Y], [0, 1]] and [[Z, 1], [XZ-1, X]].
template <class C>
Mat<EqElem<C>> kop_e_plus_bis() {
  using E = EqElem<C>;
  Mat<E> r(2, 2);
  r.set(0, 0, E::one());
  r.set(0, 1, E::Y());
  r.set(1, 1, E::one());
  return r;
}

template <class C>
Mat<EqElem<C>> kop_e_minus_bis() {
  using E = EqElem<C>;
  Mat<E> r(2, 2);
  r.set(0, 0, E::Z());
  r.set(0, 1, E::one());
  r.set(1, 0, E::X() * E::Z() - E::one());
  r.set(1, 1, E::X());
  return r;
}

/// (kop_e_minus_bis)^{-1} = [[X, -1], [1-ZX, Z]] (two-sided as formal words).
template <class C>
Mat<EqElem<C>> kop_e_minus_bis_inv() {
  using E = EqElem<C>;
  Mat<E> r(2, 2);
  r.set(0, 0, E::X());
  r.set(0, 1, -E::one());
  r.set(1, 0, E::one() - E::Z() * E::X());
  r.set(1, 1, E::Z());
  return r;
}

// ---------------------------------------------------------------------------
// Matrix-level maps.

/// Lift a scalar matrix into an operator ring entrywise.
template <class R, class C>
Mat<R> lift_mat(const Mat<C>& m) {
  return m.template map<R>([](const C& c) { return R::from_coef(c); });
}

template <class R>
Mat<R> leg1(const Mat<R>& m) {
  return tensor_place(m, {0}, {2, 2});
}

template <class R>
Mat<R> leg2(const Mat<R>& m) {
  return tensor_place(m, {1}, {2, 2});
}

/// Apply the word-to-operator homomorphism entrywise.
template <class C>
Mat<AlgElem<C, Pres::SL2>> phi_mat(const Mat<EqElem<C>>& m) {
  return m.template map<AlgElem<C, Pres::SL2>>(
      [](const EqElem<C>& e) { return phi(e); });
}

/// Residual of the exchange equation  S A1 T B2 = B2 T A1 S  with scalar
/// auxiliary matrices S, T and operator matrices A, B.
template <class C, class R>
Mat<R> exchange_residual(const Mat<C>& s, const Mat<C>& t, const Mat<R>& a,
                         const Mat<R>& b) {
  const Mat<R> sl = lift_mat<R>(s), tl = lift_mat<R>(t);
  const Mat<R> a1 = leg1(a), b2 = leg2(b);
  return sl * a1 * tl * b2 - b2 * tl * a1 * sl;
}

/// Residual of the mixed relation  A1 T B2 = B2 T A1.
template <class C, class R>
Mat<R> cross_residual(const Mat<R>& a, const Mat<C>& t, const Mat<R>& b) {
  const Mat<R> tl = lift_mat<R>(t);
  const Mat<R> a1 = leg1(a), b2 = leg2(b);
  return a1 * tl * b2 - b2 * tl * a1;
}

/// Product  S A1 T B2  (used for quantum-determinant style traces).
template <class C, class R>
Mat<R> braid_product(const Mat<C>& s, const Mat<R>& a, const Mat<C>& t,
                     const Mat<R>& b) {
  return lift_mat<R>(s) * leg1(a) * lift_mat<R>(t) * leg2(b);
}

// ---------------------------------------------------------------------------
// Hopf structure applied entrywise and the matrix coproduct patterns.

/// Group-like coproduct pattern: out(i,j) = sum_k m(i,k) (x) m(k,j).
template <class C, Pres P>
Mat<TensorElem<C, P>> matrix_coproduct(const Mat<AlgElem<C, P>>& m) {
  using T2 = TensorElem<C, P>;
  Mat<T2> r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      T2 s = T2::zero();
      for (int k = 0; k < m.cols; ++k)
        s += T2::simple(m.get(i, k), m.get(k, j));
      r.set(i, j, s);
    }
  return r;
}

/// Sandwich coproduct pattern with dress matrices t, t'' and core t':
/// out(i,j) = sum_{k,l} t'(k,l) (x) t(i,k) t''(l,j).
template <class C, Pres P>
Mat<TensorElem<C, P>> dress_bracket(const Mat<AlgElem<C, P>>& t,
                                    const Mat<AlgElem<C, P>>& tp,
                                    const Mat<AlgElem<C, P>>& tpp) {
  using T2 = TensorElem<C, P>;
  Mat<T2> r(tp.rows, tp.cols);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j) {
      T2 s = T2::zero();
      for (int k = 0; k < t.cols; ++k)
        for (int l = 0; l < tpp.rows; ++l)
          s += T2::simple(tp.get(k, l), t.get(i, k) * tpp.get(l, j));
      r.set(i, j, s);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Conversions between the two-Cartan tensor square and the one-Cartan one.

/// Convert each tensor leg via the two-Cartan -> extended -> one-Cartan chain;
/// empty result if some leg carries an odd half-power.
template <class C>
std::optional<TensorElem<C, Pres::SL2>> narrow_tensor(
    const TensorElem<C, Pres::GL2>& x) {
  using Agl = AlgElem<C, Pres::GL2>;
  TensorElem<C, Pres::SL2> r;
  for (const auto& [key, c] : x.t) {
    auto left = narrow(to_sl2h(Agl::from_mono(key.first)));
    auto right = narrow(to_sl2h(Agl::from_mono(key.second)));
    if (!left || !right) return std::nullopt;
    if (left->t.size() != 1 || right->t.size() != 1)
      throw std::logic_error("narrow_tensor: non-monomial leg image");
    r.add_term({left->t.begin()->first, right->t.begin()->first},
               c * left->t.begin()->second * right->t.begin()->second);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Fundamental (two-dimensional) representation at symbolic q.

/// Generator images on C^2: K -> diag(q, q^-1) (resp. K^{1/2} -> diag(p,
/// p^-1)), E -> E_{12}, F -> E_{21}.
template <class C, Pres P>
GenImages<Mat<C>> fund_images() {
  static_assert(P != Pres::GL2, "fundamental rep provided for one-Cartan");
  using Ops = CoefOps<C>;
  GenImages<Mat<C>> g;
  g.unit = mat_identity<C>(2);
  g.e = Mat<C>(2, 2);
  g.e.set(0, 1, Ops::one());
  g.f = Mat<C>(2, 2);
  g.f.set(1, 0, Ops::one());
  const long half = (P == Pres::SL2) ? 2 : 1;
  g.k1 = Mat<C>(2, 2);
  g.k1.set(0, 0, Ops::p_pow(half));
  g.k1.set(1, 1, Ops::p_pow(-half));
  g.k1i = Mat<C>(2, 2);
  g.k1i.set(0, 0, Ops::p_pow(-half));
  g.k1i.set(1, 1, Ops::p_pow(half));
  return g;
}

template <class C, Pres P>
Mat<C> rho_fund(const AlgElem<C, P>& x) {
  static const GenImages<Mat<C>> g = fund_images<C, P>();
  return eval_elem(x, g, [](const C& c) {
    return mat_identity<C>(2).scaled(c);
  });
}

template <class C>
Mat<C> rho_fund_eq(const EqElem<C>& x) {
  return rho_fund(phi(x));
}

/// Flatten a 2x2 operator matrix to the 4x4 matrix of the fundamental
/// representation, with the operator indices as the outer (most significant)
/// block indices: out(2i+r, 2j+c) = rho(m(i,j))(r,c).
template <class C, Pres P>
Mat<C> rho_fund_mat(const Mat<AlgElem<C, P>>& m) {
  Mat<C> r(2 * m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const Mat<C> b = rho_fund(m.get(i, j));
      for (const auto& [rc, v] : b.t)
        r.add(2 * i + rc.first, 2 * j + rc.second, v);
    }
  return r;
}

template <class C>
Mat<C> rho_fund_eq_mat(const Mat<EqElem<C>>& m) {
  return rho_fund_mat(phi_mat(m));
}

/// Apply (rho (x) id) to a tensor-square element: the first leg becomes a 2x2
/// scalar matrix, the second stays an algebra element.
template <class C, Pres P>
Mat<AlgElem<C, P>> rho_otimes_id(const TensorElem<C, P>& x) {
  using A = AlgElem<C, P>;
  Mat<A> r(2, 2);
  for (const auto& [key, c] : x.t) {
    const Mat<C> m = rho_fund(A::from_mono(key.first));
    for (const auto& [ij, v] : m.t)
      r.add(ij.first, ij.second, A::from_mono(key.second, c * v));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Two-sided comodule-style generator images (2x2 operator matrices).

/// Images of K^{+-1}, E, F under the twisted coaction:
///   K^{+-1} -> [[q^{+-1} K^{+-1}, 0], [0, q^{-+1} K^{+-1}]],
///   E -> [[q^2 E, K], [0, q^-2 E]],  F -> [[q^-1 F, 0], [K^-2, q F]].
template <class C>
Mat<AlgElem<C, Pres::SL2>> twist_c_k(int sign) {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  Mat<A> r(2, 2);
  r.set(0, 0, A::k_pow(sign).scaled(Ops::q_pow(sign)));
  r.set(1, 1, A::k_pow(sign).scaled(Ops::q_pow(-sign)));
  return r;
}

template <class C>
Mat<AlgElem<C, Pres::SL2>> twist_c_e() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  Mat<A> r(2, 2);
  r.set(0, 0, A::gen_e().scaled(Ops::q_pow(2)));
  r.set(0, 1, A::k_pow(1));
  r.set(1, 1, A::gen_e().scaled(Ops::q_pow(-2)));
  return r;
}

template <class C>
Mat<AlgElem<C, Pres::SL2>> twist_c_f() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  Mat<A> r(2, 2);
  r.set(0, 0, A::gen_f().scaled(Ops::q_pow(-1)));
  r.set(1, 0, A::k_pow(-2));
  r.set(1, 1, A::gen_f().scaled(Ops::q_pow(1)));
  return r;
}

/// Images of X^{+-1}, Y, Z (written through the word-to-operator map):
///   X -> [[q X, 0], [q-q^-1, q^-1 X]],
///   X^-1 -> [[q^-1 X^-1, 0], [-(q-q^-1) X^-2, q X^-1]],
///   Y -> [[q^-1 Y, 0], [0, q Y]],  Z -> [[q Z, q^-1-q], [0, q^-1 Z]].
template <class C>
Mat<AlgElem<C, Pres::SL2>> twist_e_x(int sign) {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const C d = detail::qq_minus<C>();
  Mat<A> r(2, 2);
  if (sign > 0) {
    r.set(0, 0, A::k_pow(1).scaled(Ops::q_pow(1)));
    r.set(1, 0, A::from_coef(d));
    r.set(1, 1, A::k_pow(1).scaled(Ops::q_pow(-1)));
  } else {
    r.set(0, 0, A::k_pow(-1).scaled(Ops::q_pow(-1)));
    r.set(1, 0, -A::k_pow(-2).scaled(d));
    r.set(1, 1, A::k_pow(-1).scaled(Ops::q_pow(1)));
  }
  return r;
}

template <class C>
Mat<AlgElem<C, Pres::SL2>> twist_e_y() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const auto y = phi(EqElem<C>::Y());
  Mat<A> r(2, 2);
  r.set(0, 0, y.scaled(Ops::q_pow(-1)));
  r.set(1, 1, y.scaled(Ops::q_pow(1)));
  return r;
}

template <class C>
Mat<AlgElem<C, Pres::SL2>> twist_e_z() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const auto z = phi(EqElem<C>::Z());
  Mat<A> r(2, 2);
  r.set(0, 0, z.scaled(Ops::q_pow(1)));
  r.set(0, 1, A::from_coef(Ops::q_pow(-1) - Ops::q_pow(1)));
  r.set(1, 1, z.scaled(Ops::q_pow(-1)));
  return r;
}

/// Diagonal coaction on the {Y,Z} subalgebra:
///   Y -> [[q Y, 0], [0, q^-1 Y]],  Z -> [[q^-1 Z, 0], [q-q^-1, q Z]].
template <class C>
Mat<AlgElem<C, Pres::SL2>> coact_b_y() {
  using Ops = CoefOps<C>;
  const auto y = phi(EqElem<C>::Y());
  Mat<AlgElem<C, Pres::SL2>> r(2, 2);
  r.set(0, 0, y.scaled(Ops::q_pow(1)));
  r.set(1, 1, y.scaled(Ops::q_pow(-1)));
  return r;
}

template <class C>
Mat<AlgElem<C, Pres::SL2>> coact_b_z() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const auto z = phi(EqElem<C>::Z());
  Mat<A> r(2, 2);
  r.set(0, 0, z.scaled(Ops::q_pow(-1)));
  r.set(1, 0, A::from_coef(detail::qq_minus<C>()));
  r.set(1, 1, z.scaled(Ops::q_pow(1)));
  return r;
}

/// Twisted coaction on the {Y,Z} subalgebra:
///   Y -> [[q Y, 0], [q-q^-1, q^-1 Y]],  Z -> [[q^-1 Z, 0], [0, q Z]].
template <class C>
Mat<AlgElem<C, Pres::SL2>> twist_b_y() {
  using Ops = CoefOps<C>;
  using A = AlgElem<C, Pres::SL2>;
  const auto y = phi(EqElem<C>::Y());
  Mat<A> r(2, 2);
  r.set(0, 0, y.scaled(Ops::q_pow(1)));
  r.set(1, 0, A::from_coef(detail::qq_minus<C>()));
  r.set(1, 1, y.scaled(Ops::q_pow(-1)));
  return r;
}

template <class C>
Mat<AlgElem<C, Pres::SL2>> twist_b_z() {
  using Ops = CoefOps<C>;
  const auto z = phi(EqElem<C>::Z());
  Mat<AlgElem<C, Pres::SL2>> r(2, 2);
  r.set(0, 0, z.scaled(Ops::q_pow(-1)));
  r.set(1, 1, z.scaled(Ops::q_pow(1)));
  return r;
}

}  // namespace uqfm
