#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "uqfm/reps.hpp"
#include "uqfm/spectral.hpp"

using namespace uqfm;

namespace {

using Q = RatQ;
using Ops = CoefOps<Q>;
using Asl = AlgElem<Q, Pres::SL2>;
using Ah = AlgElem<Q, Pres::SL2H>;
using Eq = EqElem<Q>;
using Wf = FreeElem<Q>;
using Wa = AElem<Q>;

Q qp(int e) { return Ops::q_pow(e); }
Q qq() { return qp(1) - qp(-1); }

template <class T>
Mat<Lpoly<T>> lift_coef_lmat(const Mat<Lpoly<Q>>& m) {
  return map_lmat<T>(m, [](const Q& c) { return T::from_coef(c); });
}

/// Entrywise lift of a constant scalar matrix into Lpoly over the algebra T.
template <class T>
Mat<Lpoly<T>> const_lmat(const Mat<Q>& m) {
  return lift_lmat<T>(m);
}

/// uq A - u^{-1} B, the decomposition combination of two constant operators.
template <class T>
Mat<Lpoly<T>> spectral_combo(const Mat<T>& a, const Mat<T>& b) {
  Mat<Lpoly<T>> r(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      Lpoly<T> e;
      e.add_term(1, 0, a.get(i, j).scaled(qp(1)));
      e.add_term(-1, 0, -b.get(i, j));
      if (!e.is_zero()) r.set(i, j, e);
    }
  return r;
}

/// Scale entry (i,j) by p^{g_i + h_j} (a diagonal gauge on both sides).
template <class T>
Mat<Lpoly<T>> p_gauge(const Mat<Lpoly<T>>& m, const std::array<int, 2>& g,
                      const std::array<int, 2>& h) {
  Mat<Lpoly<T>> r(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!m.get(i, j).is_zero())
        r.set(i, j, p_scale<Q>(m.get(i, j), g[i] + h[j]));
  return r;
}

bool lmat_is_zero(const Mat<Lpoly<Asl>>& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.get(i, j).is_zero()) return false;
  return true;
}

template <class T>
bool lzero(const Mat<Lpoly<T>>& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.get(i, j).is_zero()) return false;
  return true;
}

Mat<Lpoly<Asl>> phi_lmat(const Mat<Lpoly<Eq>>& m) {
  return map_lmat<Asl>(m, [](const Eq& c) { return phi(c); });
}

}  // namespace

TEST_CASE("spectral R-matrix: degenerations and Yang-Baxter equation") {
  const auto r_uv = mat_r_spec<Q>(1, -1);
  const auto r_u = mat_r_spec<Q>(1, 0);
  const auto r_v = mat_r_spec<Q>(0, 1);

  // R(1) collapses to (q - q^{-1}) P.
  const auto r1 = mat_r_spec<Q>(0, 0);
  const auto pm = mat_P<Q>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Lpoly<Q> want;
      want.add_term(0, 0, qq() * pm.get(i, j));
      CHECK(r1.get(i, j) == want);
    }

  // The matrix is symmetric: P R(u) P = R(u).
  Mat<Lpoly<Q>> pl(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!is_zero(pm.get(i, j)))
        pl.set(i, j, Lpoly<Q>::constant(pm.get(i, j)));
  CHECK(pl * r_u * pl == r_u);

  // Yang-Baxter equation on three legs (third argument normalized to 1).
  const std::vector<int> dims{2, 2, 2};
  const auto r12 = tensor_place(r_uv, {0, 1}, dims);
  const auto r13 = tensor_place(r_u, {0, 2}, dims);
  const auto r23 = tensor_place(r_v, {1, 2}, dims);
  CHECK(r12 * r13 * r23 == r23 * r13 * r12);

  // Mutation trap: corrupting one exchange entry must break the equation.
  auto bad = r_uv;
  bad.set(1, 2, Lpoly<Q>::constant(Ops::one()));
  const auto b12 = tensor_place(bad, {0, 1}, dims);
  CHECK(b12 * r13 * r23 != r23 * r13 * b12);
}

TEST_CASE("Lax operator: exchange relations with the spectral R-matrix") {
  CHECK(Ah::k_half_pow(1) * Ah::k_half_pow(-1) == Ah::one());

  const auto r_uv = lift_coef_lmat<Ah>(mat_r_spec<Q>(1, -1));
  const auto id4 = Mat<Lpoly<Ah>>::identity(4, Lpoly<Ah>::constant(Ah::one()));
  const auto lax = lax_u<Q>();
  const auto lax0 = lax0_u<Q>();

  // R(u/v) L1(u) L2(v) = L2(v) L1(u) R(u/v), and the same for the
  // terminating diagonal operator L0.
  CHECK(lzero(re_residual(r_uv, id4, lax, to_v_mat(lax))));
  CHECK(lzero(re_residual(r_uv, id4, lax0, to_v_mat(lax0))));

  // Mixed relation with the constant diagonal R-matrix:
  // R0 L0_1(u) L_2(v) = L_2(v) L0_1(u) R0 for all u, v.
  const auto r0 = const_lmat<Ah>(mat_R0<Q>());
  CHECK(lzero(re_residual(r0, id4, lax0, to_v_mat(lax))));

  // Mutation trap: scaling the lower-left entry of L(u) breaks the exchange.
  auto bad = lax;
  bad.set(1, 0, p_scale<Q>(bad.get(1, 0), 2));
  CHECK(!lzero(re_residual(r_uv, id4, bad, to_v_mat(bad))));
}

TEST_CASE("Lax quantum determinant is central and quadratic in u") {
  const auto lax = lax_u<Q>();
  const auto id4 = Mat<Lpoly<Ah>>::identity(4, Lpoly<Ah>::constant(Ah::one()));
  const auto det = sklyanin_det<Q>(lax, id4, lax);

  // Derived value: q u^2 + q^{-1} u^{-2} - (q-q^{-1})^2 Omega.
  Lpoly<Ah> want = Lpoly<Ah>::term(2, 0, Ah::one().scaled(qp(1)));
  want.add_term(-2, 0, Ah::one().scaled(qp(-1)));
  want -= Lpoly<Ah>::constant(widen(omega_sl2<Q>()).scaled(qq() * qq()));
  CHECK(det == want);

  // The variant with the u^2 / u^{-2} prefactors swapped does not hold.
  Lpoly<Ah> swapped = Lpoly<Ah>::term(2, 0, Ah::one().scaled(qp(-1)));
  swapped.add_term(-2, 0, Ah::one().scaled(qp(1)));
  swapped -= Lpoly<Ah>::constant(widen(omega_sl2<Q>()).scaled(qq() * qq()));
  CHECK(det != swapped);
}

TEST_CASE("general K-operator solves the spectral exchange equation") {
  const auto kg = kop_g_u<Q, AElem>();
  const auto r_uv = lift_coef_lmat<Wa>(mat_r_spec<Q>(1, -1));
  const auto r0 = const_lmat<Wa>(mat_R0<Q>());
  CHECK(lzero(re_residual(r_uv, r0, kg, to_v_mat(kg))));
}

TEST_CASE("exchange residual of the free K-operator spans the relation space") {
  const auto kg = kop_g_u<Q, FreeElem>();
  const auto r_uv = lift_coef_lmat<Wf>(mat_r_spec<Q>(1, -1));
  const auto r0 = const_lmat<Wf>(mat_R0<Q>());
  const auto res = re_residual(r_uv, r0, kg, to_v_mat(kg));
  CHECK(!lzero(res));

  // Collect the coefficient of every u^a v^b monomial of every entry.
  std::vector<Wf> coeffs;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (const auto& [d, c] : res.get(i, j).t) coeffs.push_back(c);

  const auto relators = word_relators<Q>();
  FreeSpan<Q> rel_span;
  for (const auto& r : relators) CHECK(rel_span.add(r));
  CHECK(rel_span.rank() == 6);

  // Every extracted coefficient is a combination of the defining relations,
  // and together they span all six of them.
  FreeSpan<Q> coef_span;
  for (const auto& c : coeffs) {
    CHECK(rel_span.contains(c));
    coef_span.add(c);
  }
  CHECK(coef_span.rank() == 6);
  for (const auto& r : relators) CHECK(coef_span.contains(r));

  // Sanity: a single monomial is not in the relation span.
  CHECK(!rel_span.contains(Wf::from_word("01")));
}

TEST_CASE("Sklyanin determinant of the general K-operator") {
  const auto kg = kop_g_u<Q, AElem>();
  const auto r0 = const_lmat<Wa>(mat_R0<Q>());
  const auto gamma = sklyanin_det<Q>(kg, r0, kg);

  const Q kp = Ops::sym(Var::kp), km = Ops::sym(Var::km);
  const Q ep = Ops::sym(Var::ep), em = Ops::sym(Var::em);

  // q^2 (q-q^{-1})^2 Gamma(u) = u^2 q^4 Gamma_0 - (q-q^{-1})^2 q^2 Gamma_1
  //                             - kp km u^4 q^6 + (q-q^{-1})^2 ep em u^{-2}.
  // The overall factor q^2 (q-q^{-1})^2 = (q^2-1)^2 is needed: the trace
  // itself expands with the same central combinations but scaled down, as the
  // u^{-2} coefficient ep em q^{-2} shows.
  Lpoly<Wa> want = Lpoly<Wa>::term(2, 0, gamma0_a<Q>().scaled(qp(4)));
  want.add_term(0, 0, gamma1_a<Q>().scaled(Ops::zero() - qq() * qq() * qp(2)));
  want.add_term(4, 0, Wa::from_coef(Ops::zero() - kp * km * qp(6)));
  want.add_term(-2, 0, Wa::from_coef(qq() * qq() * ep * em));
  const Q norm = qp(2) * qq() * qq();
  Lpoly<Wa> scaled;
  for (const auto& [d, c] : gamma.t) scaled.add_term(d.first, d.second, c.scaled(norm));
  CHECK(scaled == want);
  CHECK(gamma != want);

  // Gamma(u) commutes with every entry of K(v).
  const auto kv = to_v_mat(kg);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(gamma * kv.get(i, j) == kv.get(i, j) * gamma);
}

TEST_CASE("specializations of the word algebra") {
  const auto relators = word_relators<Q>();
  const auto img_c = spec_images_c<Q>();
  const auto img_e = spec_images_e<Q>();
  const auto img_cp = spec_images_cp<Q>();
  auto cmap_c = [](const Q& c) { return subst_consts(c, spec_consts_c()); };
  auto cmap_e = [](const Q& c) { return subst_consts(c, spec_consts_e()); };
  auto cmap_cp = [](const Q& c) { return subst_consts(c, spec_consts_cp()); };

  // All six defining relations hold for each family of images (the
  // equitable ones through the embedding phi).
  for (const auto& r : relators) {
    CHECK(subst_words(r, img_c, cmap_c).is_zero());
    CHECK(phi(subst_words(r, img_e, cmap_e)).is_zero());
    CHECK(subst_words(r, img_cp, cmap_cp).is_zero());
  }

  // The general K-operator specializes to the two displayed ones.
  const auto kg = kop_g_u<Q, FreeElem>();
  CHECK(subst_words_mat(kg, img_c, cmap_c) == kop_c_u<Q>());
  CHECK(subst_words_mat(kg, img_e, cmap_e) == kop_e_u<Q>());

  // The rotated equitable operator is the image of K_e(u) under the cyclic
  // automorphism X -> Y -> Z -> X.
  const auto rot = map_lmat<Eq>(kop_e_u<Q>(), [](const Eq& c) { return rotate_r(c); });
  CHECK(rot == kop_bx_u<Q>());

  // Central-element images match the table values.
  const auto g0 = gamma0_a<Q>().v;
  const auto g1 = gamma1_a<Q>().v;
  const Q d2 = qq() * qq();
  CHECK(subst_words(g0, img_c, cmap_c) == Asl::one().scaled(d2));
  CHECK(subst_words(g1, img_c, cmap_c) == omega_sl2<Q>().scaled(d2));
  CHECK(phi(subst_words(g0, img_e, cmap_e)) == Asl::one().scaled(d2));
  CHECK(phi(subst_words(g1, img_e, cmap_e)) == phi(omega_eq<Q>()));
  CHECK(subst_words(g0, img_cp, cmap_cp) == omega_sl2<Q>().scaled(d2));
  CHECK(subst_words(g1, img_cp, cmap_cp) ==
        Asl::one().scaled(Ops::one() / d2));

  // Specializing the symbolic Sklyanin determinant agrees with computing it
  // from the specialized operator.
  const auto r0w = const_lmat<Wa>(mat_R0<Q>());
  const auto gamma_sym = sklyanin_det<Q>(kop_g_u<Q, AElem>(), r0w, kop_g_u<Q, AElem>());
  Lpoly<Asl> gamma_spec;
  for (const auto& [d, c] : gamma_sym.t)
    gamma_spec.add_term(d.first, d.second, subst_words(c.v, img_c, cmap_c));
  const auto r0c = const_lmat<Asl>(mat_R0<Q>());
  CHECK(gamma_spec == sklyanin_det<Q>(kop_c_u<Q>(), r0c, kop_c_u<Q>()));
}

TEST_CASE("specialized spectral K-operators solve the exchange equation") {
  const auto r_sl = lift_coef_lmat<Asl>(mat_r_spec<Q>(1, -1));
  const auto r0_sl = const_lmat<Asl>(mat_R0<Q>());

  const auto kc = kop_c_u<Q>();
  CHECK(lzero(re_residual(r_sl, r0_sl, kc, to_v_mat(kc))));

  // The second-Chevalley specialization has no printed display; build it
  // from the general operator and check the exchange equation directly.
  const auto img_cp = spec_images_cp<Q>();
  auto cmap_cp = [](const Q& c) { return subst_consts(c, spec_consts_cp()); };
  const auto kcp = subst_words_mat(kop_g_u<Q, FreeElem>(), img_cp, cmap_cp);
  CHECK(lzero(re_residual(r_sl, r0_sl, kcp, to_v_mat(kcp))));

  // The equitable operators satisfy it in the quotient (through phi), not in
  // the free word algebra.
  const auto r_eq = lift_coef_lmat<Eq>(mat_r_spec<Q>(1, -1));
  const auto r0_eq = const_lmat<Eq>(mat_R0<Q>());
  for (const auto& ke : {kop_e_u<Q>(), kop_bx_u<Q>()}) {
    const auto res = re_residual(r_eq, r0_eq, ke, to_v_mat(ke));
    CHECK(!lzero(res));
    CHECK(lmat_is_zero(phi_lmat(res)));
  }

  // Seed operator between the two gauges.
  const auto k0 = lift_coef_lmat<Asl>(kop0_ec_u<Q>());
  CHECK(lzero(re_residual(r_sl, r0_sl, k0, to_v_mat(k0))));

  // Mutation trap: scaling one off-diagonal entry of K_c(u) breaks the
  // equation (unlike a full diagonal gauge, which would preserve it).
  auto bad = kc;
  bad.set(0, 1, p_scale<Q>(bad.get(0, 1), 2));
  CHECK(!lzero(re_residual(r_sl, r0_sl, bad, to_v_mat(bad))));
}

TEST_CASE("dressing the seed operator yields the equitable spectral operator") {
  const auto lax = lax_u<Q>();
  const auto lax0 = lax0_u<Q>();
  const auto k0 = lift_coef_lmat<Ah>(kop0_ec_u<Q>());
  const auto product = lax0 * k0 * lax;

  const auto target =
      map_lmat<Ah>(kop_e_u<Q>(), [](const Eq& c) { return widen(phi(c)); });

  // The identity needs both the argument shift u -> u q^{1/2} and the
  // diagonal gauge diag(1, q^{1/2}) . diag(q^{1/2}, 1).
  const auto dressed = p_gauge(shift_u<Q>(product, 1), {0, 1}, {1, 0});
  CHECK(dressed == target);
  CHECK(product != target);
}

TEST_CASE("spectral operators decompose into the constant K-matrices") {
  // Chevalley: conjugating by M(u q^{-1}) gives uq K^+ - u^{-1} K^-.
  const auto kc_ns = m_conj<Q>(kop_c_u<Q>(), -2);
  const auto combo_c = spectral_combo(kop_c_plus<Q>(), kop_c_minus<Q>());
  CHECK(kc_ns == combo_c);
  CHECK(m_conj<Q>(kop_c_u<Q>(), 0) != combo_c);

  // Equitable: conjugating by M(u) gives uq K^+ - u^{-1} K^-, an identity of
  // the quotient algebra (through phi), not of free words.
  const auto ke_ns = m_conj<Q>(kop_e_u<Q>(), 0);
  const auto combo_e = spectral_combo(kop_e_plus<Q>(), kop_e_minus<Q>());
  CHECK(ke_ns != combo_e);
  CHECK(phi_lmat(ke_ns) == phi_lmat(combo_e));

  // Both decompositions solve the nonsymmetric exchange equation
  // R^ns(u/v) K1(u) R0 K2(v) = K2(v) R0 K1(u) R^ns(u/v).
  const auto rns = lift_coef_lmat<Asl>(mat_r_ns<Q>(1, -1));
  const auto r0 = const_lmat<Asl>(mat_R0<Q>());
  CHECK(lzero(re_residual(rns, r0, combo_c, to_v_mat(combo_c))));
  const auto combo_e_sl = spectral_combo(phi_mat(kop_e_plus<Q>()), phi_mat(kop_e_minus<Q>()));
  CHECK(lzero(re_residual(rns, r0, combo_e_sl, to_v_mat(combo_e_sl))));

  // Remaining constant equation linking the two mixed exchange relations:
  // R K1^- R0 K2^+ - K2^+ R0 K1^- R = R21^{-1} K1^+ R0 K2^- - K2^- R0 K1^+ R21^{-1}.
  const auto lhs_c = exchange_residual(mat_R<Q>(), mat_R0<Q>(), kop_c_minus<Q>(),
                                       kop_c_plus<Q>());
  const auto rhs_c = exchange_residual(mat_R21_inv<Q>(), mat_R0<Q>(),
                                       kop_c_plus<Q>(), kop_c_minus<Q>());
  CHECK((lhs_c - rhs_c).is_zero());
  CHECK(!lhs_c.is_zero());
  const auto ep_sl = phi_mat(kop_e_plus<Q>());
  const auto em_sl = phi_mat(kop_e_minus<Q>());
  const auto lhs_e = exchange_residual(mat_R<Q>(), mat_R0<Q>(), em_sl, ep_sl);
  const auto rhs_e = exchange_residual(mat_R21_inv<Q>(), mat_R0<Q>(), ep_sl, em_sl);
  CHECK((lhs_e - rhs_e).is_zero());
  CHECK(!lhs_e.is_zero());

  // The symmetric R-matrix is recovered from R^ns by undoing the two-leg
  // weight scaling.
  CHECK(leg_scale(mat_r_ns<Q>(1, -1), {1, 1, -1, -1}, {1, -1, 1, -1}) ==
        mat_r_spec<Q>(1, -1));
  CHECK_THROWS_AS(leg_scale(mat_r_ns<Q>(1, -1), {1, 0, -1, -1}, {1, -1, 1, -1}),
                  std::domain_error);

  // Lax decomposition: after the shift u -> u q^{1/2} and the gauge
  // diag(1, q) . diag(1, q^{-1}), the conjugated L(u) splits as
  // u q^{1/2} L^+ - u^{-1} q^{-1/2} L^-.
  const auto lns = p_gauge(shift_u<Q>(m_conj<Q>(lax_u<Q>(), 0), 1), {0, 2}, {0, -2});
  const auto lp = lop_plus<Q, Pres::SL2H>();
  const auto lm = lop_minus<Q, Pres::SL2H>();
  Mat<Lpoly<Ah>> combo_l(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Lpoly<Ah> e;
      e.add_term(1, 0, lp.get(i, j).scaled(Ops::p_pow(1)));
      e.add_term(-1, 0, -lm.get(i, j).scaled(Ops::p_pow(-1)));
      if (!e.is_zero()) combo_l.set(i, j, e);
    }
  CHECK(lns == combo_l);
}

TEST_CASE("spectral operators in the fundamental module match the displays") {
  const auto rep_c = make_rep<Q>(1, RepFlavor::chevalley);
  const auto rep_e = make_rep<Q>(1, RepFlavor::equitable_ycol);

  auto T1 = [](int du, const Q& c) { return Lpoly<Q>::term(du, 0, c); };
  auto D = [&](int k) {
    Lpoly<Q> e = T1(1, qp(k));
    e.add_term(-1, 0, Ops::zero() - Ops::one());
    return e;
  };  // uq^k - u^{-1}
  const Lpoly<Q> uu = T1(1, Ops::one()) + T1(-1, Ops::zero() - Ops::one());

  // K_c(u) on the two-dimensional module.
  Mat<Lpoly<Q>> kc_ref(4, 4);
  kc_ref.set(0, 0, D(2));
  kc_ref.set(3, 3, D(2));
  kc_ref.set(1, 1, uu);
  kc_ref.set(2, 2, uu);
  kc_ref.set(1, 2, Lpoly<Q>::constant(qp(1) * qq()));
  kc_ref.set(2, 1, Lpoly<Q>::constant(qp(-1) * qq()));
  CHECK(rep_mat_u(kop_c_u<Q>(), rep_c) == kc_ref);

  // K_e(u) on the two-dimensional module.
  Mat<Lpoly<Q>> ke_ref(4, 4);
  ke_ref.set(0, 0, D(2));
  ke_ref.set(3, 3, D(2));
  ke_ref.set(1, 1, uu);
  ke_ref.set(2, 2, uu);
  ke_ref.set(1, 2, Lpoly<Q>::constant(qq()));
  ke_ref.set(2, 1, Lpoly<Q>::constant(qq()));
  ke_ref.set(2, 0, T1(2, qp(1)) + Lpoly<Q>::constant(Ops::zero() - qp(-1)));
  ke_ref.set(3, 1, T1(2, qp(1)) + Lpoly<Q>::constant(Ops::zero() - qp(1)));
  ke_ref.set(3, 2, T1(1, qp(1) * qq()));
  CHECK(rep_mat_u(kop_e_u<Q>(), rep_e) == ke_ref);

  // The rotated operator on the two-dimensional module.
  Mat<Lpoly<Q>> kbx_ref(4, 4);
  kbx_ref.set(0, 0, uu);
  kbx_ref.set(0, 2, Lpoly<Q>::constant(qp(-1) - qp(1)));
  kbx_ref.set(0, 3, Lpoly<Q>::constant(qp(-1) - qp(1)));
  kbx_ref.set(1, 0, T1(1, qp(2) - Ops::one()));
  kbx_ref.set(1, 1, D(2));
  kbx_ref.set(1, 2, Lpoly<Q>::constant(qq()));
  kbx_ref.set(1, 3, Lpoly<Q>::constant(qq()));
  kbx_ref.set(2, 0, T1(2, qp(1)) + Lpoly<Q>::constant(Ops::zero() - qp(1)));
  kbx_ref.set(2, 2, uu);
  kbx_ref.set(2, 3, T1(1, Ops::one() - qp(2)));
  kbx_ref.set(3, 1, T1(2, qp(1)) + Lpoly<Q>::constant(Ops::zero() - qp(-1)));
  kbx_ref.set(3, 3, D(2));
  CHECK(rep_mat_u(kop_bx_u<Q>(), rep_e) == kbx_ref);

  // On the trivial module both equitable operators collapse to the same
  // lower-triangular matrix.
  const auto rep0 = make_rep<Q>(0, RepFlavor::equitable_ycol);
  Mat<Lpoly<Q>> ref0(2, 2);
  ref0.set(0, 0, D(1));
  ref0.set(1, 1, D(1));
  ref0.set(1, 0, T1(2, qp(1)) + Lpoly<Q>::constant(Ops::zero() - Ops::one()));
  CHECK(rep_mat_u(kop_e_u<Q>(), rep0) == ref0);
  CHECK(rep_mat_u(kop_bx_u<Q>(), rep0) == ref0);
}

TEST_CASE("spectral exchange equation holds in every module") {
  const auto s = mat_r_spec<Q>(1, -1);
  Mat<Lpoly<Q>> t0(4, 4);
  {
    const auto r0 = mat_R0<Q>();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!is_zero(r0.get(i, j)))
          t0.set(i, j, Lpoly<Q>::constant(r0.get(i, j)));
  }
  for (int two_s = 0; two_s <= 2; ++two_s) {
    const auto rep_c = make_rep<Q>(two_s, RepFlavor::chevalley);
    const auto rep_e = make_rep<Q>(two_s, RepFlavor::equitable_ycol);
    const int dim = two_s + 1;
    for (const auto& k : {rep_mat_u(kop_c_u<Q>(), rep_c),
                          rep_mat_u(kop_e_u<Q>(), rep_e),
                          rep_mat_u(kop_bx_u<Q>(), rep_e)}) {
      const auto res = fm3_residual(s, t0, k, to_v_mat(k), dim);
      CHECK(lzero(res));
    }
  }
}

TEST_CASE("numeric instantiation agrees with the symbolic spectral run") {
  using R = Rat;
  using Rops = CoefOps<R>;
  const auto rep = make_rep<R>(2, RepFlavor::chevalley);
  const auto s = mat_r_spec<R>(1, -1);
  Mat<Lpoly<R>> t0(4, 4);
  const auto r0 = mat_R0<R>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!is_zero(r0.get(i, j))) t0.set(i, j, Lpoly<R>::constant(r0.get(i, j)));
  const auto k = rep_mat_u(kop_c_u<R>(), rep);
  CHECK(lzero(fm3_residual(s, t0, k, to_v_mat(k), 3)));

  // Corrupting one module entry must surface in the residual.
  auto bad = k;
  bad.set(0, 0, bad.get(0, 0) + Lpoly<R>::constant(Rops::one()));
  CHECK(!lzero(fm3_residual(s, t0, bad, to_v_mat(bad), 3)));
}
