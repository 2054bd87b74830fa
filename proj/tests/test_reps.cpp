#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "uqfm/reps.hpp"

using namespace uqfm;

using Q = RatQ;
using Ops = CoefOps<Q>;
using Asl = AlgElem<Q, Pres::SL2>;
using Agl = AlgElem<Q, Pres::GL2>;
using Ah = AlgElem<Q, Pres::SL2H>;
using Eq = EqElem<Q>;

namespace {

Q qq() { return Ops::q_pow(1) - Ops::q_pow(-1); }

template <class C>
Mat<C> ident(int n, const C& c) {
  return Mat<C>::identity(n, CoefOps<C>::one()).scaled(c);
}

template <class C>
Mat<C> smul(const C& c, const Mat<C>& m) {
  return m.scaled(c);
}

}  // namespace

TEST_CASE("module matrices satisfy the defining relations") {
  const Q d = qq();
  for (int two_s = 0; two_s <= 4; ++two_s) {
    const auto rc = make_rep<Q>(two_s, RepFlavor::chevalley);
    const auto I = Mat<Q>::identity(rc.dim, Ops::one());
    CHECK((rc.k * rc.ki - I).is_zero());
    CHECK((rc.khalf * rc.khalfi - I).is_zero());
    CHECK((rc.khalf * rc.khalf - rc.k).is_zero());
    CHECK((rc.k * rc.e - smul(Ops::q_pow(2), rc.e * rc.k)).is_zero());
    CHECK((rc.k * rc.f - smul(Ops::q_pow(-2), rc.f * rc.k)).is_zero());
    CHECK((rc.e * rc.f - rc.f * rc.e - smul(Ops::one() / d, rc.k - rc.ki))
              .is_zero());

    const auto re = make_rep<Q>(two_s, RepFlavor::equitable_ycol);
    CHECK((re.x * re.xi - I).is_zero());
    CHECK((re.xi * re.x - I).is_zero());
    const auto qcomm = [&](const Mat<Q>& a, const Mat<Q>& b) {
      return smul(Ops::one() / d, smul(Ops::q_pow(1), a * b) -
                                      smul(Ops::q_pow(-1), b * a));
    };
    CHECK((qcomm(re.x, re.y) - I).is_zero());
    CHECK((qcomm(re.y, re.z) - I).is_zero());
    CHECK((qcomm(re.z, re.x) - I).is_zero());
  }
}

TEST_CASE("smallest modules match the printed matrices") {
  const Q d = qq();
  const auto rc = make_rep<Q>(1, RepFlavor::chevalley);
  Mat<Q> kref(2, 2), eref(2, 2), fref(2, 2);
  kref.set(0, 0, Ops::q_pow(1));
  kref.set(1, 1, Ops::q_pow(-1));
  eref.set(0, 1, Ops::one());
  fref.set(1, 0, Ops::one());
  CHECK(rc.k == kref);
  CHECK(rc.e == eref);
  CHECK(rc.f == fref);

  const auto re = make_rep<Q>(1, RepFlavor::equitable_ycol);
  Mat<Q> yref(2, 2), zref(2, 2);
  yref.set(0, 0, Ops::q_pow(-1));
  yref.set(1, 0, d);
  yref.set(1, 1, Ops::q_pow(1));
  zref.set(0, 0, Ops::q_pow(-1));
  zref.set(0, 1, -d);
  zref.set(1, 1, Ops::q_pow(1));
  CHECK(re.x == kref);
  CHECK(re.y == yref);
  CHECK(re.z == zref);

  // The one-dimensional module sends every generator to the 1x1 identity
  // (and E, F to zero).
  const auto r0c = make_rep<Q>(0, RepFlavor::chevalley);
  const auto r0e = make_rep<Q>(0, RepFlavor::equitable_ycol);
  const auto one1 = Mat<Q>::identity(1, Ops::one());
  CHECK(r0c.k == one1);
  CHECK(r0c.e.is_zero());
  CHECK(r0c.f.is_zero());
  CHECK(r0e.x == one1);
  CHECK(r0e.y == one1);
  CHECK(r0e.z == one1);
}

TEST_CASE("element evaluation is a homomorphism on the relations") {
  const Q d = qq();
  const auto rc = make_rep<Q>(1, RepFlavor::chevalley);
  CHECK(eval_rep(Asl::one(), rc) == Mat<Q>::identity(2, Ops::one()));
  const Asl comm = Asl::gen_e() * Asl::gen_f() - Asl::gen_f() * Asl::gen_e();
  const Asl kdiff = (Asl::k_pow(1) - Asl::k_pow(-1)).scaled(Ops::one() / d);
  Mat<Q> diag1m1(2, 2);
  diag1m1.set(0, 0, Ops::one());
  diag1m1.set(1, 1, -Ops::one());
  CHECK(eval_rep(comm, rc) == diag1m1);
  CHECK(eval_rep(comm, rc) == eval_rep(kdiff, rc));
}

TEST_CASE("central elements act as scalars in every module") {
  const Q d2 = qq() * qq();
  for (int two_s = 0; two_s <= 4; ++two_s) {
    const auto rc = make_rep<Q>(two_s, RepFlavor::chevalley);
    const Q scalar =
        (Ops::q_pow(two_s + 1) + Ops::q_pow(-two_s - 1)) / d2;
    CHECK(eval_rep(omega_sl2<Q>(), rc) == ident(rc.dim, scalar));
    // The two-Cartan centers factor through the same module.
    CHECK(eval_rep(omega1_gl2<Q>(), rc) == ident(rc.dim, Ops::one()));
    CHECK(eval_rep(omega2_gl2<Q>(), rc) == ident(rc.dim, scalar));

    const auto re = make_rep<Q>(two_s, RepFlavor::equitable_ycol);
    CHECK(eval_rep(omega_eq<Q>(), re) == ident(re.dim, scalar * d2));
  }
}

TEST_CASE("constant K-matrices reproduce the printed displays") {
  const Q q1 = Ops::q_pow(1), qm = Ops::q_pow(-1);
  const Q d = qq();
  const auto re = make_rep<Q>(1, RepFlavor::equitable_ycol);
  const auto rc = make_rep<Q>(1, RepFlavor::chevalley);

  Mat<Q> ke_p_ref(4, 4);
  ke_p_ref.set(0, 0, q1);
  ke_p_ref.set(1, 1, qm);
  ke_p_ref.set(1, 2, qm * d);
  ke_p_ref.set(2, 0, Ops::one());
  ke_p_ref.set(2, 2, qm);
  ke_p_ref.set(3, 1, Ops::one());
  ke_p_ref.set(3, 2, d);
  ke_p_ref.set(3, 3, q1);
  CHECK(rep_mat(kop_e_plus<Q>(), re) == ke_p_ref);

  Mat<Q> ke_m_ref(4, 4);
  ke_m_ref.set(0, 0, Ops::one());
  ke_m_ref.set(1, 1, Ops::one());
  ke_m_ref.set(2, 0, qm);
  ke_m_ref.set(2, 1, -d);
  ke_m_ref.set(2, 2, Ops::one());
  ke_m_ref.set(3, 1, q1);
  ke_m_ref.set(3, 3, Ops::one());
  CHECK(rep_mat(kop_e_minus<Q>(), re) == ke_m_ref);

  Mat<Q> kb_ref(4, 4);
  kb_ref.set(0, 0, qm);
  kb_ref.set(0, 2, Ops::q_pow(-2) - Ops::one());
  kb_ref.set(0, 3, Ops::q_pow(-2) - Ops::one());
  kb_ref.set(1, 0, d);
  kb_ref.set(1, 1, q1);
  kb_ref.set(1, 2, Ops::one() - Ops::q_pow(-2));
  kb_ref.set(1, 3, Ops::one() - Ops::q_pow(-2));
  kb_ref.set(2, 0, Ops::one());
  kb_ref.set(2, 2, qm);
  kb_ref.set(2, 3, qm - q1);
  kb_ref.set(3, 1, Ops::one());
  kb_ref.set(3, 3, q1);
  CHECK(rep_mat(kop_borel<Q>(), re) == kb_ref);

  Mat<Q> kx_ref(4, 4);
  kx_ref.set(0, 0, Ops::one());
  kx_ref.set(1, 1, Ops::one());
  kx_ref.set(2, 0, q1);
  kx_ref.set(2, 2, Ops::one());
  kx_ref.set(3, 1, qm);
  kx_ref.set(3, 3, Ops::one());
  CHECK(rep_mat(kop_x<Q>(), re) == kx_ref);

  // Chevalley images are braided R-matrix products; the R-matrix itself is
  // the image of the triangular Lax operators.
  CHECK(rep_mat(kop_c_plus<Q>(), rc) == mat_R0<Q>() * mat_R<Q>());
  CHECK(rep_mat(kop_c_minus<Q>(), rc) ==
        (mat_R0<Q>() * mat_R21_inv<Q>()).scaled(q1));
  CHECK(rep_mat(lop_plus<Q, Pres::SL2H>(), rc) ==
        mat_R<Q>().scaled(Ops::p_pow(-1)));
  CHECK(rep_mat(lop_minus<Q, Pres::SL2H>(), rc) ==
        mat_R21_inv<Q>().scaled(Ops::p_pow(1)));

  // In the one-dimensional module every word operator collapses to the
  // same unipotent matrix.
  const auto re0 = make_rep<Q>(0, RepFlavor::equitable_ycol);
  Mat<Q> low1(2, 2);
  low1.set(0, 0, Ops::one());
  low1.set(1, 0, Ops::one());
  low1.set(1, 1, Ops::one());
  const Mat<Eq> word_ops[] = {kop_e_plus<Q>(), kop_e_minus<Q>(),
                              kop_borel<Q>(), kop_x<Q>()};
  for (const auto& op : word_ops) CHECK(rep_mat(op, re0) == low1);
}

TEST_CASE("constant exchange equation holds in every module") {
  for (int two_s = 0; two_s <= 2; ++two_s) {
    const auto rc = make_rep<Q>(two_s, RepFlavor::chevalley);
    const auto re = make_rep<Q>(two_s, RepFlavor::equitable_ycol);
    const auto R = mat_R<Q>();
    const auto R0 = mat_R0<Q>();
    const int n = rc.dim;

    const auto cp = rep_mat(kop_c_plus<Q>(), rc);
    const auto cm = rep_mat(kop_c_minus<Q>(), rc);
    CHECK(fm3_residual(R, R0, cp, cp, n).is_zero());
    CHECK(fm3_residual(R, R0, cm, cm, n).is_zero());
    CHECK(fm3_residual(R, R0, cp, cm, n).is_zero());

    const auto ep = rep_mat(kop_e_plus<Q>(), re);
    const auto em = rep_mat(kop_e_minus<Q>(), re);
    const auto kb = rep_mat(kop_borel<Q>(), re);
    const auto kx = rep_mat(kop_x<Q>(), re);
    CHECK(fm3_residual(R, R0, ep, ep, n).is_zero());
    CHECK(fm3_residual(R, R0, em, em, n).is_zero());
    CHECK(fm3_residual(R, R0, ep, em, n).is_zero());
    CHECK(fm3_residual(R, R0, kb, kb, n).is_zero());
    CHECK(fm3_residual(R, R0, kx, kx, n).is_zero());
    CHECK(fm3_residual(R, R0, kb, kx, n).is_zero());

    // Two-Cartan one-parameter family, alpha kept symbolic.
    const auto ap = rep_mat(kop_alpha_plus<Q>(), rc);
    const auto am = rep_mat(kop_alpha_minus<Q>(), rc);
    CHECK(fm3_residual(R, R0, ap, ap, n).is_zero());
    CHECK(fm3_residual(R, R0, ap, am, n).is_zero());
  }
}

TEST_CASE("numeric instantiation agrees with the symbolic run") {
  using N = Rat;
  using NOps = CoefOps<N>;
  const auto rc = make_rep<N>(2, RepFlavor::chevalley);
  const auto cp = rep_mat(kop_c_plus<N>(), rc);
  const auto cm = rep_mat(kop_c_minus<N>(), rc);
  CHECK(fm3_residual(mat_R<N>(), mat_R0<N>(), cp, cm, rc.dim).is_zero());
  const auto rc1 = make_rep<N>(1, RepFlavor::chevalley);
  CHECK(rep_mat(kop_c_plus<N>(), rc1) == mat_R0<N>() * mat_R<N>());
  const N d2 = (NOps::q_pow(1) - NOps::q_pow(-1)) * (NOps::q_pow(1) - NOps::q_pow(-1));
  const N scalar = (NOps::q_pow(3) + NOps::q_pow(-3)) / d2;
  CHECK(eval_rep(omega_sl2<N>(), rc) == ident(rc.dim, scalar));
}

TEST_CASE("flavor mismatch is rejected") {
  const auto rc = make_rep<Q>(1, RepFlavor::chevalley);
  const auto re = make_rep<Q>(1, RepFlavor::equitable_ycol);
  CHECK_THROWS_AS(eval_rep(Eq::Y(), rc), std::invalid_argument);
  CHECK_THROWS_AS(eval_rep(Asl::gen_e(), re), std::invalid_argument);
  CHECK_THROWS_AS(make_rep<Q>(-1, RepFlavor::chevalley),
                  std::invalid_argument);
}

TEST_CASE("mutated module data fails the relations") {
  const Q d = qq();
  auto rc = make_rep<Q>(2, RepFlavor::chevalley);
  rc.e.set(0, 1, Ops::one());  // true entry is [2]_q
  const auto I = Mat<Q>::identity(rc.dim, Ops::one());
  CHECK(!(rc.e * rc.f - rc.f * rc.e - smul(Ops::one() / d, rc.k - rc.ki))
             .is_zero());

  const auto good = make_rep<Q>(1, RepFlavor::chevalley);
  auto cp = rep_mat(kop_c_plus<Q>(), good);
  cp.set(0, 1, cp.get(0, 1) + Ops::one());
  CHECK(!fm3_residual(mat_R<Q>(), mat_R0<Q>(),
                      cp, rep_mat(kop_c_minus<Q>(), good), good.dim)
             .is_zero());
}
