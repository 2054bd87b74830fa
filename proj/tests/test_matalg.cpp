#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqfm/matalg.hpp"

using namespace uqfm;

namespace {

using Q = RatQ;
using Ops = CoefOps<Q>;
using Agl = AlgElem<Q, Pres::GL2>;
using Asl = AlgElem<Q, Pres::SL2>;
using Ah = AlgElem<Q, Pres::SL2H>;
using Eq = EqElem<Q>;
using T2gl = TensorElem<Q, Pres::GL2>;
using T2sl = TensorElem<Q, Pres::SL2>;
using Hgl = Hopf<Q, Pres::GL2>;
using Hsl = Hopf<Q, Pres::SL2>;
using Hh = Hopf<Q, Pres::SL2H>;

Q qq() { return Ops::q_pow(1) - Ops::q_pow(-1); }

template <class R>
Mat<R> three_leg(const Mat<R>& m, std::vector<int> legs) {
  return tensor_place(m, legs, {2, 2, 2});
}

/// Restrict a two-Cartan operator matrix to the one-Cartan subalgebra.
Mat<Asl> narrow_mat(const Mat<Agl>& m) {
  return m.map<Asl>([](const Agl& x) {
    auto r = narrow(to_sl2h(x));
    REQUIRE(r.has_value());
    return *r;
  });
}

/// mu (id (x) S) applied to a formal-word tensor, evaluated through phi.
Asl eq_fold_right(const Eq& x) {
  Asl acc = Asl::zero();
  for (const auto& [key, c] : eq_coproduct(x).t)
    acc += c * (phi(Eq::from_word(key.first)) *
                phi(eq_antipode(Eq::from_word(key.second))));
  return acc;
}

/// mu (S (x) id) applied to a formal-word tensor, evaluated through phi.
Asl eq_fold_left(const Eq& x) {
  Asl acc = Asl::zero();
  for (const auto& [key, c] : eq_coproduct(x).t)
    acc += c * (phi(eq_antipode(Eq::from_word(key.first))) *
                phi(Eq::from_word(key.second)));
  return acc;
}

/// (rho (x) id) applied to the opposite coproduct of a formal word.
Mat<Asl> rho_op_eq(const Eq& w) {
  Mat<Asl> r(2, 2);
  for (const auto& [key, c] : eq_coproduct(w).t) {
    const Mat<Q> m = rho_fund_eq(Eq::from_word(key.second));
    const Asl a = phi(Eq::from_word(key.first));
    for (const auto& [ij, v] : m.t) r.add(ij.first, ij.second, a.scaled(c * v));
  }
  return r;
}

/// Scale every entry of an operator matrix by a coefficient.
template <class R>
Mat<R> smul(const Q& c, const Mat<R>& m) {
  return m.template map<R>([&](const R& x) { return x.scaled(c); });
}

/// tr(D a b) for 2x2 operator matrices a, b.
template <class R>
R qtrace(const Mat<R>& a, const Mat<R>& b) {
  return (lift_mat<R>(mat_D<Q>()) * a * b).trace();
}

}  // namespace

TEST_CASE("auxiliary-space scalar matrices") {
  const auto R = mat_R<Q>();
  const auto I4 = mat_identity<Q>(4);

  // Yang-Baxter equation R12 R13 R23 = R23 R13 R12 on three legs.
  const auto r12 = three_leg(R, {0, 1});
  const auto r13 = three_leg(R, {0, 2});
  const auto r23 = three_leg(R, {1, 2});
  CHECK((r12 * r13 * r23 - r23 * r13 * r12).is_zero());

  // Two-sided inverse and the braiding shift R - R21^{-1} = (q-q^{-1}) P.
  CHECK((R * mat_R_inv<Q>() - I4).is_zero());
  CHECK((mat_R_inv<Q>() * R - I4).is_zero());
  CHECK((R - mat_R21_inv<Q>() - mat_P<Q>().scaled(qq())).is_zero());
  CHECK((mat_R0<Q>() * mat_R0_inv<Q>() - I4).is_zero());

  // Hecke element: U^2 = -(q+q^{-1}) U and the braid idempotency relation.
  const auto U = mat_U<Q>();
  CHECK((U * U + U.scaled(Ops::q_pow(1) + Ops::q_pow(-1))).is_zero());
  const auto u12 = three_leg(U, {0, 1});
  const auto u23 = three_leg(U, {1, 2});
  CHECK((u12 * u23 * u12 - u12).is_zero());
}

TEST_CASE("triangular Lax operators: exchange relations and inverses") {
  const auto R = mat_R<Q>();
  const auto I4 = mat_identity<Q>(4);
  const auto I2op = Mat<Agl>::identity(2, Agl::one());
  const auto lp = lop_plus<Q, Pres::GL2>();
  const auto lm = lop_minus<Q, Pres::GL2>();
  const auto lpi = lop_plus_inv<Q, Pres::GL2>();
  const auto lmi = lop_minus_inv<Q, Pres::GL2>();

  // Stated inverses are two-sided.
  CHECK((lp * lpi - I2op).is_zero());
  CHECK((lpi * lp - I2op).is_zero());
  CHECK((lm * lmi - I2op).is_zero());
  CHECK((lmi * lm - I2op).is_zero());

  // Diagonal entries of L^+ and L^- are mutually inverse.
  for (int i = 0; i < 2; ++i) {
    CHECK(lp.get(i, i) * lm.get(i, i) == Agl::one());
    CHECK(lm.get(i, i) * lp.get(i, i) == Agl::one());
  }

  // RLL exchange relations, same-sign and mixed.
  CHECK(exchange_residual(R, I4, lp, lp).is_zero());
  CHECK(exchange_residual(R, I4, lm, lm).is_zero());
  CHECK(exchange_residual(R, I4, lp, lm).is_zero());
  CHECK(exchange_residual(mat_R21_inv<Q>(), I4, lm, lp).is_zero());

  // Exchange relations for the inverse operators, with R21.
  CHECK(exchange_residual(mat_R21<Q>(), I4, lpi, lpi).is_zero());
  CHECK(exchange_residual(mat_R21<Q>(), I4, lmi, lmi).is_zero());
  CHECK(exchange_residual(mat_R21<Q>(), I4, lmi, lpi).is_zero());

  // The same relations hold for the one-Cartan specialization.
  const auto lph = lop_plus<Q, Pres::SL2H>();
  const auto lmh = lop_minus<Q, Pres::SL2H>();
  CHECK(exchange_residual(R, I4, lph, lph).is_zero());
  CHECK(exchange_residual(R, I4, lph, lmh).is_zero());
  const auto I2h = Mat<Ah>::identity(2, Ah::one());
  CHECK((lph * lop_plus_inv<Q, Pres::SL2H>() - I2h).is_zero());
  CHECK((lmh * lop_minus_inv<Q, Pres::SL2H>() - I2h).is_zero());
}

TEST_CASE("quantum determinants of the Lax pencil") {
  const auto U = mat_U<Q>();
  const auto I4 = mat_identity<Q>(4);
  const auto lp = lop_plus<Q, Pres::GL2>();
  const auto lm = lop_minus<Q, Pres::GL2>();

  const Agl det1 = braid_product(U, lp, I4, lp).trace();
  CHECK(det1 == omega1_gl2<Q>().scaled(-(Ops::q_pow(1) + Ops::q_pow(-1))));

  const Agl det2 = braid_product(U, lp, I4, lm).trace();
  CHECK(det2 == omega2_gl2<Q>().scaled(-(qq() * qq())));
}

TEST_CASE("FRT Hopf structure on Lax operators") {
  const auto lp = lop_plus<Q, Pres::GL2>();
  const auto lm = lop_minus<Q, Pres::GL2>();

  for (const auto* l : {&lp, &lm}) {
    const auto cop = matrix_coproduct(*l);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CHECK(Hgl::coproduct(l->get(i, j)) == cop.get(i, j));
        CHECK(Hgl::counit(l->get(i, j)) ==
              (i == j ? Ops::one() : Ops::zero()));
      }
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(Hgl::antipode(lp.get(i, j)) ==
            lop_plus_inv<Q, Pres::GL2>().get(i, j));
      CHECK(Hgl::antipode(lm.get(i, j)) ==
            lop_minus_inv<Q, Pres::GL2>().get(i, j));
    }
}

TEST_CASE("one-parameter K-operator family over the two-Cartan algebra") {
  const auto R = mat_R<Q>();
  const auto R0 = mat_R0<Q>();
  const auto kp = kop_alpha_plus<Q>();
  const auto km = kop_alpha_minus<Q>();
  const auto l0p = lop0_plus<Q>();
  const auto l0mb = lop0_minus_bar<Q>();
  const auto lp = lop_plus<Q, Pres::GL2>();
  const auto lm = lop_minus<Q, Pres::GL2>();
  const auto k0 = lift_mat<Agl>(mat_K0<Q>(Ops::sym(Var::al)));

  // The family factors through the reduced Lax operators.
  CHECK((l0mb * k0 * lp - kp).is_zero());
  CHECK((l0p * k0 * lm - km).is_zero());

  // Exchange equations, same-sign and mixed.
  CHECK(exchange_residual(R, R0, kp, kp).is_zero());
  CHECK(exchange_residual(R, R0, km, km).is_zero());
  CHECK(exchange_residual(R, R0, kp, km).is_zero());

  // Supporting relations used to derive the factored solutions.
  const auto I4 = mat_identity<Q>(4);
  CHECK(exchange_residual(R, I4, l0p, l0p).is_zero());
  CHECK(exchange_residual(R, I4, l0mb, l0mb).is_zero());
  CHECK(cross_residual(l0mb, R0, lp).is_zero());
  CHECK(cross_residual(lp, R0, l0mb).is_zero());
  CHECK(cross_residual(l0p, R0, lm).is_zero());
  CHECK(cross_residual(lm, R0, l0p).is_zero());
  CHECK(cross_residual(l0mb, R0, lm).is_zero());
  CHECK(cross_residual(lm, R0, l0mb).is_zero());
}

TEST_CASE("coproduct dressing of the K-operator family") {
  const Q al = Ops::sym(Var::al);
  const Q d = qq();
  const auto kp = kop_alpha_plus<Q>();
  const auto km = kop_alpha_minus<Q>();
  const auto brp = dress_bracket(lop0_minus_bar<Q>(), kp, lop_plus<Q, Pres::GL2>());
  const auto brm = dress_bracket(lop0_plus<Q>(), km, lop_minus<Q, Pres::GL2>());

  // The dressed operators are the entrywise coproducts.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(Hgl::coproduct(kp.get(i, j)) == brp.get(i, j));
      CHECK(Hgl::coproduct(km.get(i, j)) == brm.get(i, j));
    }

  // Fixed-entry oracles for the dressed operators.
  const Agl w = Agl::k12(1, -1), wi = Agl::k12(-1, 1);
  CHECK(brp.get(0, 0) == T2gl::simple(w, w));
  CHECK(brp.get(1, 0) == T2gl::simple(Agl::one(), Agl::one()).scaled(al));
  CHECK(brp.get(0, 1) == T2gl::simple(w, (w * Agl::gen_f()).scaled(d)) +
                             T2gl::simple((w * Agl::gen_f()).scaled(d), Agl::one()));
  CHECK(brp.get(1, 1) ==
        T2gl::simple(wi + Agl::gen_f().scaled(al * d) - Agl::from_coef(al), wi) +
            T2gl::simple(Agl::one(),
                         wi.scaled(al) + Agl::gen_f().scaled(al * d)));
  CHECK(brm.get(0, 0) == T2gl::one());
  CHECK(brm.get(1, 1) == T2gl::one());
  CHECK(brm.get(0, 1) == T2gl::zero());
  const Agl low = wi.scaled(al) - (wi * Agl::gen_e()).scaled(Ops::q_pow(1) * d);
  CHECK(brm.get(1, 0) ==
        T2gl::simple(low - Agl::from_coef(al), wi) + T2gl::simple(Agl::one(), low));

  // The dressed operators satisfy the same exchange equations over the
  // tensor-square ring.
  const auto R = mat_R<Q>();
  const auto R0 = mat_R0<Q>();
  CHECK(exchange_residual(R, R0, brp, brp).is_zero());
  CHECK(exchange_residual(R, R0, brm, brm).is_zero());
  CHECK(exchange_residual(R, R0, brp, brm).is_zero());

  // Counit and antipode-fold act entrywise as expected.
  const auto k0 = mat_K0<Q>(al);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(Hgl::counit(kp.get(i, j)) == k0.get(i, j));
      CHECK(Hgl::counit(km.get(i, j)) == k0.get(i, j));
      for (const auto* k : {&kp, &km}) {
        const Agl e = Agl::from_coef(Hgl::counit(k->get(i, j)));
        CHECK(Hgl::antipode_fold_left(k->get(i, j)) == e);
        CHECK(Hgl::antipode_fold_right(k->get(i, j)) == e);
      }
    }
}

TEST_CASE("Chevalley exchange presentation") {
  const auto R = mat_R<Q>();
  const auto R0 = mat_R0<Q>();
  const auto kp = kop_c_plus<Q>();
  const auto km = kop_c_minus<Q>();
  const auto I2 = Mat<Asl>::identity(2, Asl::one());

  // Restriction of the alpha = 0 family gives the one-Cartan operators.
  CHECK((narrow_mat(kop_alpha_plus<Q>(Ops::zero())) - kp).is_zero());
  CHECK((narrow_mat(kop_alpha_minus<Q>(Ops::zero())) - km).is_zero());

  // Stated inverses are two-sided.
  CHECK((kp * kop_c_plus_inv<Q>() - I2).is_zero());
  CHECK((kop_c_plus_inv<Q>() * kp - I2).is_zero());
  CHECK((km * kop_c_minus_inv<Q>() - I2).is_zero());
  CHECK((kop_c_minus_inv<Q>() * km - I2).is_zero());

  // Exchange equations.
  CHECK(exchange_residual(R, R0, kp, kp).is_zero());
  CHECK(exchange_residual(R, R0, km, km).is_zero());
  CHECK(exchange_residual(R, R0, kp, km).is_zero());

  // Consequences with the reversed braiding.
  const auto R21i = mat_R21_inv<Q>();
  CHECK(exchange_residual(R21i, R0, kp, kp).is_zero());
  CHECK(exchange_residual(R21i, R0, km, km).is_zero());
  CHECK(exchange_residual(R21i, R0, km, kp).is_zero());

  // Exchange equations for the inverse operators.
  const auto R21 = mat_R21<Q>();
  const auto R0i = mat_R0_inv<Q>();
  const auto kpi = kop_c_plus_inv<Q>();
  const auto kmi = kop_c_minus_inv<Q>();
  CHECK(exchange_residual(R21, R0i, kpi, kpi).is_zero());
  CHECK(exchange_residual(R21, R0i, kmi, kmi).is_zero());
  CHECK(exchange_residual(R21, R0i, kmi, kpi).is_zero());

  // Variant pair with the inverted diagonal companion.
  const auto kpb = kop_c_plus_bis<Q>();
  const auto kmb = kop_c_minus_bis<Q>();
  CHECK(exchange_residual(R, R0i, kpb, kpb).is_zero());
  CHECK(exchange_residual(R, R0i, kmb, kmb).is_zero());
  CHECK(exchange_residual(R, R0i, kpb, kmb).is_zero());
  CHECK((kmb * kop_c_minus_bis_inv<Q>() - I2).is_zero());
  CHECK((kop_c_minus_bis_inv<Q>() * kmb - I2).is_zero());

  // Quantum-determinant analog produces the Casimir element.
  const Asl det = braid_product(mat_U<Q>(), kp, R0, km).trace();
  CHECK(det == omega_sl2<Q>().scaled(-Ops::q_pow(-1) * qq() * qq()));
}

TEST_CASE("Chevalley Hopf structure on K-operators") {
  const auto kp = kop_c_plus<Q>();
  const auto km = kop_c_minus<Q>();
  const auto brp = dress_bracket(lop0_minus_bar<Q>(), kop_alpha_plus<Q>(Ops::zero()),
                                 lop_plus<Q, Pres::GL2>());
  const auto brm = dress_bracket(lop0_plus<Q>(), kop_alpha_minus<Q>(Ops::zero()),
                                 lop_minus<Q, Pres::GL2>());

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      // The one-Cartan coproduct agrees with the restricted dressed bracket.
      auto np = narrow_tensor(brp.get(i, j));
      auto nm = narrow_tensor(brm.get(i, j));
      REQUIRE(np.has_value());
      REQUIRE(nm.has_value());
      CHECK(Hsl::coproduct(kp.get(i, j)) == *np);
      CHECK(Hsl::coproduct(km.get(i, j)) == *nm);

      // Counit sends the operators to the unipotent pattern at 0.
      const Q e = (i == j) ? Ops::one() : Ops::zero();
      CHECK(Hsl::counit(kp.get(i, j)) == e);
      CHECK(Hsl::counit(km.get(i, j)) == e);

      // Antipode compatibility entrywise.
      for (const auto* k : {&kp, &km}) {
        const Asl ee = Asl::from_coef(Hsl::counit(k->get(i, j)));
        CHECK(Hsl::antipode_fold_left(k->get(i, j)) == ee);
        CHECK(Hsl::antipode_fold_right(k->get(i, j)) == ee);
      }
    }
}

TEST_CASE("equitable exchange presentation") {
  const auto R = mat_R<Q>();
  const auto R0 = mat_R0<Q>();
  const auto kp = kop_e_plus<Q>();
  const auto km = kop_e_minus<Q>();
  const auto I2 = Mat<Eq>::identity(2, Eq::one());

  // Upper-left entries are invertible; the stated inverses are two-sided
  // already at the level of formal words.
  CHECK(Eq::X() * Eq::Xi() == Eq::one());
  CHECK(Eq::Xi() * Eq::X() == Eq::one());
  CHECK((kp * kop_e_plus_inv<Q>() - I2).is_zero());
  CHECK((kop_e_plus_inv<Q>() * kp - I2).is_zero());
  CHECK((km * kop_e_minus_inv<Q>() - I2).is_zero());
  CHECK((kop_e_minus_inv<Q>() * km - I2).is_zero());

  // Exchange equations hold modulo the defining relations: the residuals
  // vanish under the word-to-operator homomorphism.
  CHECK(phi_mat(exchange_residual(R, R0, kp, kp)).is_zero());
  CHECK(phi_mat(exchange_residual(R, R0, km, km)).is_zero());
  CHECK(phi_mat(exchange_residual(R, R0, kp, km)).is_zero());

  // The residuals are NOT zero freely: the equations encode the relations.
  CHECK(!exchange_residual(R, R0, kp, kp).is_zero());
  CHECK(!exchange_residual(R, R0, kp, km).is_zero());

  // Rotated pair on the {Y,Z} and {X} sides.
  const auto kb = kop_borel<Q>();
  const auto kx = kop_x<Q>();
  CHECK(phi_mat(exchange_residual(R, R0, kb, kb)).is_zero());
  CHECK(phi_mat(exchange_residual(R, R0, kx, kx)).is_zero());
  CHECK(phi_mat(exchange_residual(R, R0, kb, kx)).is_zero());

  // Variant pair with the inverted diagonal companion.
  const auto R0i = mat_R0_inv<Q>();
  const auto kpb = kop_e_plus_bis<Q>();
  const auto kmb = kop_e_minus_bis<Q>();
  CHECK(phi_mat(exchange_residual(R, R0i, kpb, kpb)).is_zero());
  CHECK(phi_mat(exchange_residual(R, R0i, kmb, kmb)).is_zero());
  CHECK(phi_mat(exchange_residual(R, R0i, kpb, kmb)).is_zero());
  CHECK((kmb * kop_e_minus_bis_inv<Q>() - I2).is_zero());
  CHECK((kop_e_minus_bis_inv<Q>() * kmb - I2).is_zero());

  // Quantum-determinant analog in word form, compared through the
  // homomorphism: tr12(U12 K1+ R0 K2-) = -q^{-1} (sum form of the Casimir).
  const Eq det = braid_product(mat_U<Q>(), kp, R0, km).trace();
  CHECK(phi(det) == phi(omega_eq<Q>()).scaled(-Ops::q_pow(-1)));
  CHECK(phi(det) == omega_sl2<Q>().scaled(-Ops::q_pow(-1) * qq() * qq()));
}

TEST_CASE("equitable Hopf structure on K-operators") {
  const auto kp = kop_e_plus<Q>();
  const auto km = kop_e_minus<Q>();
  const auto brp = dress_bracket(lop0_minus_bar<Q>(), kop_alpha_plus<Q>(Ops::one()),
                                 lop_plus<Q, Pres::GL2>());
  const auto brm = dress_bracket(lop0_plus<Q>(), kop_alpha_minus<Q>(Ops::one()),
                                 lop_minus<Q, Pres::GL2>());

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      // Word coproduct pushed through phi (x) phi matches the restricted
      // dressed bracket at parameter 1.
      auto np = narrow_tensor(brp.get(i, j));
      auto nm = narrow_tensor(brm.get(i, j));
      REQUIRE(np.has_value());
      REQUIRE(nm.has_value());
      CHECK(phi_tensor(eq_coproduct(kp.get(i, j))) == *np);
      CHECK(phi_tensor(eq_coproduct(km.get(i, j))) == *nm);

      // Counit gives the unipotent pattern at 1.
      const auto k01 = mat_K0<Q>(Ops::one());
      CHECK(eq_counit(kp.get(i, j)) == k01.get(i, j));
      CHECK(eq_counit(km.get(i, j)) == k01.get(i, j));

      // Antipode compatibility entrywise, through the homomorphism.
      for (const auto* k : {&kp, &km}) {
        const Asl e = Asl::from_coef(eq_counit(k->get(i, j)));
        CHECK(eq_fold_left(k->get(i, j)) == e);
        CHECK(eq_fold_right(k->get(i, j)) == e);
      }
    }
}

TEST_CASE("quantum traces of the K-operator pairs") {
  const Q d2 = qq() * qq();

  // Original pair: tr(D K+ (K-)^{-1}) is the Casimir, exactly.
  const Asl t1 = qtrace(kop_c_plus<Q>(), kop_c_minus_inv<Q>());
  CHECK(t1 == omega_sl2<Q>().scaled(d2));

  // Word pair: the trace equals the six-term sum already as formal words.
  const Eq t3 = qtrace(kop_e_plus<Q>(), kop_e_minus_inv<Q>());
  CHECK(t3 == omega_eq<Q>());
  CHECK(phi(t3) == omega_sl2<Q>().scaled(d2));

  // Variant pair, one-Cartan side: the trace is again the Casimir, exactly.
  const Asl t2 = qtrace(kop_c_plus_bis<Q>(), kop_c_minus_bis_inv<Q>());
  CHECK(t2 == omega_sl2<Q>().scaled(d2));

  // Variant pair, word side: the trace differs freely from the six-term sum
  // but agrees with it modulo the defining relations.
  const Eq t4 = qtrace(kop_e_plus_bis<Q>(), kop_e_minus_bis_inv<Q>());
  CHECK(t4 != omega_eq<Q>());
  CHECK(phi(t4) == omega_sl2<Q>().scaled(d2));
}

TEST_CASE("coaction matrices and intertwining relations") {
  const Q d = qq();
  const auto I2 = Mat<Asl>::identity(2, Asl::one());

  // One-Cartan coaction images satisfy the defining relations.
  const auto tk = twist_c_k<Q>(1);
  const auto tki = twist_c_k<Q>(-1);
  const auto te = twist_c_e<Q>();
  const auto tf = twist_c_f<Q>();
  CHECK((tk * tki - I2).is_zero());
  CHECK((tki * tk - I2).is_zero());
  CHECK((tk * te - smul(Ops::q_pow(2), te * tk)).is_zero());
  CHECK((tk * tf - smul(Ops::q_pow(-2), tf * tk)).is_zero());
  CHECK((te * tf - tf * te - smul(Ops::one() / d, tk - tki)).is_zero());

  // Intertwining with the triangular K-operators.
  const auto kc_p = kop_c_plus<Q>();
  const auto kc_m = kop_c_minus<Q>();
  const std::pair<Mat<Asl>, Asl> chev[] = {
      {tk, Asl::k_pow(1)},
      {tki, Asl::k_pow(-1)},
      {te, Asl::gen_e()},
      {tf, Asl::gen_f()},
  };
  for (const auto& [img, x] : chev) {
    const auto rhs = rho_otimes_id(Hsl::coproduct_op(x));
    CHECK((img * kc_p - kc_p * rhs).is_zero());
    CHECK((img * kc_m - kc_m * rhs).is_zero());
  }

  // Word-side coaction images satisfy the cyclic relations.
  const auto ux = twist_e_x<Q>(1);
  const auto uxi = twist_e_x<Q>(-1);
  const auto uy = twist_e_y<Q>();
  const auto uz = twist_e_z<Q>();
  CHECK((ux * uxi - I2).is_zero());
  CHECK((uxi * ux - I2).is_zero());
  const auto qcomm = [&](const Mat<Asl>& a, const Mat<Asl>& b) {
    return smul(Ops::q_pow(1), a * b) - smul(Ops::q_pow(-1), b * a) -
           smul(d, I2);
  };
  CHECK(qcomm(ux, uy).is_zero());
  CHECK(qcomm(uy, uz).is_zero());
  CHECK(qcomm(uz, ux).is_zero());

  // Intertwining with the word K-operators, through the homomorphism.
  const auto ke_p = phi_mat(kop_e_plus<Q>());
  const auto ke_m = phi_mat(kop_e_minus<Q>());
  const std::pair<Mat<Asl>, Eq> equi[] = {
      {ux, Eq::X()},
      {uxi, Eq::Xi()},
      {uy, Eq::Y()},
      {uz, Eq::Z()},
  };
  for (const auto& [img, w] : equi) {
    const auto rhs = rho_op_eq(w);
    CHECK((img * ke_p - ke_p * rhs).is_zero());
    CHECK((img * ke_m - ke_m * rhs).is_zero());
  }

  // {Y,Z} subalgebra: both coactions preserve its defining relation and the
  // rotated operator intertwines them.
  const auto by = coact_b_y<Q>();
  const auto bz = coact_b_z<Q>();
  const auto ty = twist_b_y<Q>();
  const auto tz = twist_b_z<Q>();
  CHECK((smul(Ops::q_pow(1), by * bz) - smul(Ops::q_pow(-1), bz * by) -
         smul(d, I2))
            .is_zero());
  CHECK((smul(Ops::q_pow(1), ty * tz) - smul(Ops::q_pow(-1), tz * ty) -
         smul(d, I2))
            .is_zero());
  const auto kb = phi_mat(kop_borel<Q>());
  CHECK((ty * kb - kb * by).is_zero());
  CHECK((tz * kb - kb * bz).is_zero());

  // Lax operators intertwine the coproduct and its opposite.
  const auto lp = lop_plus<Q, Pres::SL2H>();
  const auto lm = lop_minus<Q, Pres::SL2H>();
  const Ah gens[] = {Ah::k_half_pow(1), Ah::k_half_pow(-1), Ah::gen_e(),
                     Ah::gen_f()};
  for (const auto& x : gens) {
    const auto lhs = rho_otimes_id(Hh::coproduct(x));
    const auto rhs = rho_otimes_id(Hh::coproduct_op(x));
    CHECK((lhs * lp - lp * rhs).is_zero());
    CHECK((lhs * lm - lm * rhs).is_zero());
  }
}

TEST_CASE("constant K-matrices in the fundamental representation") {
  const auto R = mat_R<Q>();
  const auto R0 = mat_R0<Q>();

  // R-matrix factorization through the Lax operators.
  CHECK((rho_fund_mat(lop_plus<Q, Pres::SL2H>()).scaled(Ops::p_pow(1)) - R)
            .is_zero());
  CHECK((rho_fund_mat(lop_minus<Q, Pres::SL2H>()).scaled(Ops::p_pow(-1)) -
         mat_R21_inv<Q>())
            .is_zero());

  // Images of the triangular K-operators are braided R-matrix products.
  const auto kc_p = rho_fund_mat(kop_c_plus<Q>());
  const auto kc_m = rho_fund_mat(kop_c_minus<Q>());
  CHECK((kc_p - R0 * R).is_zero());
  CHECK((kc_m - (R0 * mat_R21_inv<Q>()).scaled(Ops::q_pow(1))).is_zero());

  // Fixed 4x4 oracles for the word-side operators.
  const Q q1 = Ops::q_pow(1), qm = Ops::q_pow(-1);
  const Q d = qq();
  Mat<Q> ke_p_ref(4, 4);
  ke_p_ref.set(0, 0, q1);
  ke_p_ref.set(1, 1, qm);
  ke_p_ref.set(1, 2, qm * d);
  ke_p_ref.set(2, 0, Ops::one());
  ke_p_ref.set(2, 2, qm);
  ke_p_ref.set(3, 1, Ops::one());
  ke_p_ref.set(3, 2, d);
  ke_p_ref.set(3, 3, q1);
  CHECK((rho_fund_eq_mat(kop_e_plus<Q>()) - ke_p_ref).is_zero());

  Mat<Q> ke_m_ref = mat_identity<Q>(4);
  ke_m_ref.set(2, 0, qm);
  ke_m_ref.set(2, 1, Ops::zero() - d);
  ke_m_ref.set(3, 1, q1);
  CHECK((rho_fund_eq_mat(kop_e_minus<Q>()) - ke_m_ref).is_zero());

  Mat<Q> kb_ref(4, 4);
  kb_ref.set(0, 0, qm);
  kb_ref.set(0, 2, qm * qm - Ops::one());
  kb_ref.set(0, 3, qm * qm - Ops::one());
  kb_ref.set(1, 0, d);
  kb_ref.set(1, 1, q1);
  kb_ref.set(1, 2, Ops::one() - qm * qm);
  kb_ref.set(1, 3, Ops::one() - qm * qm);
  kb_ref.set(2, 0, Ops::one());
  kb_ref.set(2, 2, qm);
  kb_ref.set(2, 3, qm - q1);
  kb_ref.set(3, 1, Ops::one());
  kb_ref.set(3, 3, q1);
  CHECK((rho_fund_eq_mat(kop_borel<Q>()) - kb_ref).is_zero());

  Mat<Q> kx_ref = mat_identity<Q>(4);
  kx_ref.set(2, 0, q1);
  kx_ref.set(3, 1, qm);
  CHECK((rho_fund_eq_mat(kop_x<Q>()) - kx_ref).is_zero());

  // The one-dimensional image of the word-side operators is the unipotent
  // pattern at 1 (evaluation of every word at 1 is the word counit).
  const auto k01 = mat_K0<Q>(Ops::one());
  const Mat<Eq> word_ops[] = {kop_e_plus<Q>(), kop_e_minus<Q>(), kop_borel<Q>(),
                              kop_x<Q>()};
  for (const auto& k : word_ops) {
    const auto img = k.map<Q>([](const Eq& w) { return eq_counit(w); });
    CHECK((img - k01).is_zero());
  }

  // Three-leg exchange equation for the constant K-matrices, with the
  // K-matrix acting on an auxiliary leg and the quantum leg.
  const auto fm3 = [&](const Mat<Q>& ka, const Mat<Q>& kb2) {
    const auto r12 = tensor_place(R, {0, 1}, {2, 2, 2});
    const auto r012 = tensor_place(R0, {0, 1}, {2, 2, 2});
    const auto k13 = tensor_place(ka, {0, 2}, {2, 2, 2});
    const auto k23 = tensor_place(kb2, {1, 2}, {2, 2, 2});
    return r12 * k13 * r012 * k23 - k23 * r012 * k13 * r12;
  };
  CHECK(fm3(ke_p_ref, ke_p_ref).is_zero());
  CHECK(fm3(ke_m_ref, ke_m_ref).is_zero());
  CHECK(fm3(ke_p_ref, ke_m_ref).is_zero());
  CHECK(fm3(kb_ref, kb_ref).is_zero());
  CHECK(fm3(kx_ref, kx_ref).is_zero());
  CHECK(fm3(kb_ref, kx_ref).is_zero());
  CHECK(fm3(kc_p, kc_p).is_zero());
  CHECK(fm3(kc_m, kc_m).is_zero());
  CHECK(fm3(kc_p, kc_m).is_zero());
}

TEST_CASE("numeric-coefficient instantiation") {
  using N = Rat;
  using NOps = CoefOps<N>;
  const auto R = mat_R<N>();
  const auto R0 = mat_R0<N>();
  CHECK(exchange_residual(R, R0, kop_c_plus<N>(), kop_c_minus<N>()).is_zero());
  const auto U = mat_U<N>();
  const auto det1 =
      braid_product(U, lop_plus<N, Pres::GL2>(), mat_identity<N>(4),
                    lop_plus<N, Pres::GL2>())
          .trace();
  CHECK(det1 == omega1_gl2<N>().scaled(NOps::zero() - NOps::q_pow(1) -
                                       NOps::q_pow(-1)));
}

TEST_CASE("mutated data fails the exchange equations") {
  // Corrupting one entry of the R-matrix breaks the Yang-Baxter equation.
  // (Zeroing it instead would leave a diagonal matrix, which satisfies the
  // equation trivially, so the corrupted value must stay off-diagonal.)
  auto rb = mat_R<Q>();
  rb.set(1, 2, Ops::one());
  const auto r12 = three_leg(rb, {0, 1});
  const auto r13 = three_leg(rb, {0, 2});
  const auto r23 = three_leg(rb, {1, 2});
  CHECK(!(r12 * r13 * r23 - r23 * r13 * r12).is_zero());

  // Corrupting the Hecke element breaks its quadratic relation.
  auto ub = mat_U<Q>();
  ub.set(1, 1, Ops::q_pow(1));
  CHECK(!(ub * ub + ub.scaled(Ops::q_pow(1) + Ops::q_pow(-1))).is_zero());

  // Flipping a sign in the upper K-operator breaks the mixed exchange
  // equation.  (The like-sign equation would survive this flip: F -> -F is
  // an automorphism of the lower Borel subalgebra, so only the mixed
  // equation, which also involves E, pins the sign.)
  auto kb = kop_c_plus<Q>();
  kb.set(0, 1, -kb.get(0, 1));
  CHECK(!exchange_residual(mat_R<Q>(), mat_R0<Q>(), kb, kop_c_minus<Q>())
             .is_zero());

  // Dropping the off-diagonal entry of the Lax operator breaks the mixed
  // exchange relation.
  auto lb = lop_plus<Q, Pres::GL2>();
  lb.set(0, 1, Agl::zero());
  CHECK(!exchange_residual(mat_R<Q>(), mat_identity<Q>(4), lb,
                           lop_minus<Q, Pres::GL2>())
             .is_zero());
}
