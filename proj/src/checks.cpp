/// \file checks.cpp
/// Implementation of the verification registry declared in checks.hpp.
///
/// Each check body runs in the exact symbolic coefficient model and, where
/// the computation supports it, repeats in the exact numeric model at the
/// configured evaluation point (residual prefixes "symbolic:" / "numeric:"
/// say which run failed).  Module-level checks loop over the spins selected
/// in CheckOptions.  Mutation checks corrupt one input and require the
/// residual to become nonzero, guarding against vacuously true equations.

#include "uqfm/checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "uqfm/matalg.hpp"
#include "uqfm/render.hpp"
#include "uqfm/reps.hpp"
#include "uqfm/spectral.hpp"

namespace uqfm {
namespace {

// ---------------------------------------------------------------------------
// Probe: accumulates the first failure of a check body.
// ---------------------------------------------------------------------------

template <class X>
inline constexpr bool is_mat_v = false;
template <class R>
inline constexpr bool is_mat_v<Mat<R>> = true;

struct Probe {
  CheckResult res{CheckStatus::PASS, ""};

  bool ok() const { return res.status == CheckStatus::PASS; }

  void fail(const std::string& what) {
    if (!ok()) return;
    res.status = CheckStatus::FAIL;
    res.residual = what;
  }

  /// Require x == 0; on failure record the first nonzero entry.
  template <class X>
  void zero(const std::string& what, const X& x) {
    if (!ok()) return;
    if constexpr (is_mat_v<X>) {
      const std::string s = first_nonzero_entry(x);
      if (!s.empty()) fail(what + ": " + s);
    } else {
      if (!is_zero(x)) fail(what + ": " + render(x));
    }
  }

  /// Require x != 0 (used by mutation traps and strictness assertions).
  template <class X>
  void nonzero(const std::string& what, const X& x) {
    if (!ok()) return;
    bool z;
    if constexpr (is_mat_v<X>)
      z = x.is_zero();
    else
      z = is_zero(x);
    if (z) fail(what + ": residual unexpectedly vanishes");
  }

  template <class A>
  void equal(const std::string& what, const A& a, const A& b) {
    zero(what, a - b);
  }

  void truth(const std::string& what, bool v) {
    if (!v) fail(what);
  }
};

// ---------------------------------------------------------------------------
// Model runners: symbolic always, numeric where the body supports it.
// ---------------------------------------------------------------------------

template <class C>
struct Tag {
  using type = C;
};

template <class F>
CheckResult run_both(F body) {
  Probe ps;
  body(Tag<RatQ>{}, ps);
  if (!ps.ok()) {
    ps.res.residual = "symbolic: " + ps.res.residual;
    return ps.res;
  }
  Probe pn;
  body(Tag<Rat>{}, pn);
  if (!pn.ok()) pn.res.residual = "numeric: " + pn.res.residual;
  return pn.res;
}

template <class F>
CheckResult run_symbolic(F body) {
  Probe p;
  body(Tag<RatQ>{}, p);
  if (!p.ok()) p.res.residual = "symbolic: " + p.res.residual;
  return p.res;
}

// ---------------------------------------------------------------------------
// Shared small helpers.
// ---------------------------------------------------------------------------

template <class C>
C qd() {
  return CoefOps<C>::q_pow(1) - CoefOps<C>::q_pow(-1);
}

template <class R>
Mat<R> three_leg(const Mat<R>& m, const std::vector<int>& legs) {
  return tensor_place(m, legs, {2, 2, 2});
}

template <class C>
AlgElem<C, Pres::SL2> narrowed(const AlgElem<C, Pres::GL2>& x) {
  auto r = narrow(to_sl2h(x));
  if (!r)
    throw std::runtime_error(
        "restriction to the one-Cartan subalgebra failed");
  return *r;
}

template <class C>
Mat<AlgElem<C, Pres::SL2>> narrow_mat(const Mat<AlgElem<C, Pres::GL2>>& m) {
  return m.template map<AlgElem<C, Pres::SL2>>(
      [](const AlgElem<C, Pres::GL2>& x) { return narrowed<C>(x); });
}

template <class T>
const T& require_value(const std::optional<T>& o) {
  if (!o)
    throw std::runtime_error(
        "tensor restriction to the one-Cartan subalgebra failed");
  return *o;
}

/// mu (id (x) S) of the formal-word coproduct, evaluated in normal form.
template <class C>
AlgElem<C, Pres::SL2> eq_fold_right(const EqElem<C>& x) {
  using Asl = AlgElem<C, Pres::SL2>;
  Asl acc = Asl::zero();
  for (const auto& [key, c] : eq_coproduct(x).t)
    acc += c * (phi(EqElem<C>::from_word(key.first)) *
                phi(eq_antipode(EqElem<C>::from_word(key.second))));
  return acc;
}

/// mu (S (x) id) of the formal-word coproduct, evaluated in normal form.
template <class C>
AlgElem<C, Pres::SL2> eq_fold_left(const EqElem<C>& x) {
  using Asl = AlgElem<C, Pres::SL2>;
  Asl acc = Asl::zero();
  for (const auto& [key, c] : eq_coproduct(x).t)
    acc += c * (phi(eq_antipode(EqElem<C>::from_word(key.first))) *
                phi(EqElem<C>::from_word(key.second)));
  return acc;
}

/// (rho (x) id) of the opposite formal-word coproduct.
template <class C>
Mat<AlgElem<C, Pres::SL2>> rho_op_eq(const EqElem<C>& w) {
  Mat<AlgElem<C, Pres::SL2>> r(2, 2);
  for (const auto& [key, c] : eq_coproduct(w).t) {
    const Mat<C> m = rho_fund_eq(EqElem<C>::from_word(key.second));
    const AlgElem<C, Pres::SL2> a = phi(EqElem<C>::from_word(key.first));
    for (const auto& [ij, v] : m.t) r.add(ij.first, ij.second, a.scaled(c * v));
  }
  return r;
}

template <class C, class R>
Mat<R> smul(const C& c, const Mat<R>& m) {
  if constexpr (std::is_same_v<C, R>)
    return m.scaled(c);
  else
    return m.template map<R>([&](const R& x) { return x.scaled(c); });
}

/// tr(D a b) for 2x2 operator matrices a, b over the coefficient model C.
template <class C, class R>
R qtrace(const Mat<R>& a, const Mat<R>& b) {
  return (lift_mat<R>(mat_D<C>()) * a * b).trace();
}

// Spectral-layer helpers.

template <class T, class C>
Mat<Lpoly<T>> lift_coef_lmat(const Mat<Lpoly<C>>& m) {
  return map_lmat<T>(m, [](const C& c) { return T::from_coef(c); });
}

/// Entrywise embedding of a constant scalar matrix into scalar Laurent form.
template <class C>
Mat<Lpoly<C>> scalar_lmat(const Mat<C>& m) {
  Mat<Lpoly<C>> r(m.rows, m.cols);
  for (const auto& [ij, v] : m.t)
    r.set(ij.first, ij.second, Lpoly<C>::constant(v));
  return r;
}

/// uq A - u^{-1} B, the decomposition combination of two constant operators.
template <class C, class T>
Mat<Lpoly<T>> spectral_combo(const Mat<T>& a, const Mat<T>& b) {
  Mat<Lpoly<T>> r(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      Lpoly<T> e;
      e.add_term(1, 0, a.get(i, j).scaled(CoefOps<C>::q_pow(1)));
      e.add_term(-1, 0, -b.get(i, j));
      if (!e.is_zero()) r.set(i, j, e);
    }
  return r;
}

/// Scale entry (i,j) by p^{g_i + h_j} (a diagonal gauge on both sides).
template <class C, class T>
Mat<Lpoly<T>> p_gauge(const Mat<Lpoly<T>>& m, const std::array<int, 2>& g,
                      const std::array<int, 2>& h) {
  Mat<Lpoly<T>> r(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!m.get(i, j).is_zero())
        r.set(i, j, p_scale<C>(m.get(i, j), g[i] + h[j]));
  return r;
}

template <class C>
Mat<Lpoly<AlgElem<C, Pres::SL2>>> phi_lmat(const Mat<Lpoly<EqElem<C>>>& m) {
  return map_lmat<AlgElem<C, Pres::SL2>>(
      m, [](const EqElem<C>& c) { return phi(c); });
}

// ---------------------------------------------------------------------------
// Deterministic random sampling for associativity checks.
// ---------------------------------------------------------------------------

constexpr unsigned kSampleSeed = 0x5eed2026u;
constexpr int kAssocTriples = 100;

template <class C, Pres P>
AlgElem<C, P> sample_alg(std::mt19937& rng) {
  using A = AlgElem<C, P>;
  using Ops = CoefOps<C>;
  A r;
  const int terms = 1 + int(rng() % 3u);
  for (int t = 0; t < terms; ++t) {
    const int deg = int(rng() % 4u);  // total degree in F, E at most 3
    const int f = deg == 0 ? 0 : int(rng() % unsigned(deg + 1));
    const int e = deg - f;
    const int k = int(rng() % 7u) - 3;
    long coef = long(rng() % 9u) - 4;
    if (coef == 0) coef = 1;
    Mono m = kUnitMono;
    m[0] = f;
    m[3] = e;
    if constexpr (P == Pres::GL2) {
      m[1] = k;
      m[2] = int(rng() % 7u) - 3;
    } else if constexpr (P == Pres::SL2) {
      m[1] = 2 * k;
    } else {
      m[1] = k;
    }
    r += A::from_mono(m, Ops::from_int(coef) * Ops::p_pow(int(rng() % 3u)));
  }
  return r;
}

template <class C>
AElem<C> sample_word(std::mt19937& rng) {
  using W = AElem<C>;
  using Ops = CoefOps<C>;
  W r;
  const int terms = 1 + int(rng() % 2u);
  for (int t = 0; t < terms; ++t) {
    const int len = int(rng() % 4u);  // words of length at most 3
    std::string w;
    for (int i = 0; i < len; ++i) w += char('0' + rng() % 4u);
    long coef = long(rng() % 9u) - 4;
    if (coef == 0) coef = 1;
    r += W(FreeElem<C>::from_word(w, Ops::from_int(coef)));
  }
  return r;
}

template <class C, Pres P>
void check_assoc_alg(Probe& p) {
  std::mt19937 rng(kSampleSeed);
  for (int t = 0; t < kAssocTriples && p.ok(); ++t) {
    const auto a = sample_alg<C, P>(rng);
    const auto b = sample_alg<C, P>(rng);
    const auto c = sample_alg<C, P>(rng);
    p.zero("associativity on sampled triple " + std::to_string(t),
           (a * b) * c - a * (b * c));
  }
}

// ---------------------------------------------------------------------------
// Registration helper.
// ---------------------------------------------------------------------------

void add(std::vector<CheckDef>& v, const char* id, const char* anchor,
         const char* suite, const char* desc,
         std::function<CheckResult(const CheckOptions&)> run) {
  v.push_back(CheckDef{id, anchor, suite, desc, std::move(run)});
}

// ---------------------------------------------------------------------------
// Suite: frt (two-Cartan exchange presentation and its scalar matrices).
// ---------------------------------------------------------------------------

void add_frt(std::vector<CheckDef>& v) {
  add(v, "pres.gl2.relations", "(def:uqgl)", "frt",
      "Defining relations of the two-Cartan algebra hold in the ordered "
      "normal form.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using A = AlgElem<C, Pres::GL2>;
          const A E = A::gen_e(), F = A::gen_f();
          const A K1 = A::k12(1, 0), K2 = A::k12(0, 1);
          const C q = Ops::q_pow(1), qi = Ops::q_pow(-1);
          p.equal("K1 E conjugation", K1 * E, q * (E * K1));
          p.equal("K1 F conjugation", K1 * F, qi * (F * K1));
          p.equal("K2 E conjugation", K2 * E, qi * (E * K2));
          p.equal("K2 F conjugation", K2 * F, q * (F * K2));
          p.equal("Cartan commutativity", K1 * K2, K2 * K1);
          p.equal("Cartan inverses", A::k12(1, 0) * A::k12(-1, 0), A::one());
          const A cart =
              (Ops::one() / (q - qi)) * (A::k12(1, -1) - A::k12(-1, 1));
          p.equal("E F commutator", E * F - F * E, cart);
        });
      });

  add(v, "pres.gl2.assoc", "(def:uqgl)", "frt",
      "Associativity of the straightening product on 100 sampled "
      "degree-at-most-3 triples (fixed seed).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          check_assoc_alg<C, Pres::GL2>(p);
        });
      });

  add(v, "frt.r.ybe", "(YB0)", "frt",
      "Constant R-matrix: Yang-Baxter equation on three legs and two-sided "
      "inverses for R and the diagonal companion.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto R = mat_R<C>();
          const auto I4 = mat_identity<C>(4);
          p.zero("Yang-Baxter residual",
                 three_leg(R, {0, 1}) * three_leg(R, {0, 2}) *
                         three_leg(R, {1, 2}) -
                     three_leg(R, {1, 2}) * three_leg(R, {0, 2}) *
                         three_leg(R, {0, 1}));
          p.zero("R right inverse", R * mat_R_inv<C>() - I4);
          p.zero("R left inverse", mat_R_inv<C>() * R - I4);
          p.zero("diagonal companion inverse",
                 mat_R0<C>() * mat_R0_inv<C>() - I4);
        });
      });

  add(v, "hecke.tl", "Hecke braid relation", "frt",
      "Hecke element U = PR - q: quadratic relation, braid idempotency "
      "U12 U23 U12 = U12, and the braiding shift R - R21^{-1} = (q-q^{-1})P.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const auto U = mat_U<C>();
          p.zero("quadratic relation",
                 U * U + U.scaled(Ops::q_pow(1) + Ops::q_pow(-1)));
          const auto u12 = three_leg(U, {0, 1});
          const auto u23 = three_leg(U, {1, 2});
          p.zero("braid idempotency", u12 * u23 * u12 - u12);
          p.zero("braiding shift",
                 mat_R<C>() - mat_R21_inv<C>() - mat_P<C>().scaled(qd<C>()));
        });
      });

  add(v, "frt.rll.pp", "(frt1)", "frt",
      "Same-sign exchange relation for the upper triangular Lax operator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual",
                 exchange_residual(mat_R<C>(), mat_identity<C>(4),
                                   lop_plus<C, Pres::GL2>(),
                                   lop_plus<C, Pres::GL2>()));
        });
      });

  add(v, "frt.rll.mm", "(frt2)", "frt",
      "Same-sign exchange relation for the lower triangular Lax operator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual",
                 exchange_residual(mat_R<C>(), mat_identity<C>(4),
                                   lop_minus<C, Pres::GL2>(),
                                   lop_minus<C, Pres::GL2>()));
        });
      });

  add(v, "frt.rll.pm", "(frt3)", "frt",
      "Mixed exchange relation (upper then lower Lax operator).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual",
                 exchange_residual(mat_R<C>(), mat_identity<C>(4),
                                   lop_plus<C, Pres::GL2>(),
                                   lop_minus<C, Pres::GL2>()));
        });
      });

  add(v, "frt.rll.mp", "(frt4)", "frt",
      "Mixed exchange relation with the reversed braiding (lower then upper "
      "Lax operator, R21^{-1}).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual",
                 exchange_residual(mat_R21_inv<C>(), mat_identity<C>(4),
                                   lop_minus<C, Pres::GL2>(),
                                   lop_plus<C, Pres::GL2>()));
        });
      });

  add(v, "frt.invrtt", "(invRTT1)", "frt",
      "Exchange relations of the inverse Lax operators with the transposed "
      "braiding R21.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto R21 = mat_R21<C>();
          const auto I4 = mat_identity<C>(4);
          const auto lpi = lop_plus_inv<C, Pres::GL2>();
          const auto lmi = lop_minus_inv<C, Pres::GL2>();
          p.zero("inverse upper pair", exchange_residual(R21, I4, lpi, lpi));
          p.zero("inverse lower pair", exchange_residual(R21, I4, lmi, lmi));
          p.zero("inverse mixed pair", exchange_residual(R21, I4, lmi, lpi));
        });
      });

  add(v, "frt.lop.inverses", "(Lpm)", "frt",
      "Stated inverses of the triangular Lax operators are two-sided; their "
      "diagonal entries are mutually inverse.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using A = AlgElem<C, Pres::GL2>;
          const auto I2 = Mat<A>::identity(2, A::one());
          const auto lp = lop_plus<C, Pres::GL2>();
          const auto lm = lop_minus<C, Pres::GL2>();
          p.zero("upper right inverse", lp * lop_plus_inv<C, Pres::GL2>() - I2);
          p.zero("upper left inverse", lop_plus_inv<C, Pres::GL2>() * lp - I2);
          p.zero("lower right inverse",
                 lm * lop_minus_inv<C, Pres::GL2>() - I2);
          p.zero("lower left inverse",
                 lop_minus_inv<C, Pres::GL2>() * lm - I2);
          for (int i = 0; i < 2 && p.ok(); ++i) {
            p.equal("diagonal product +-", lp.get(i, i) * lm.get(i, i),
                    A::one());
            p.equal("diagonal product -+", lm.get(i, i) * lp.get(i, i),
                    A::one());
          }
        });
      });

  add(v, "frt.lop.sl2h", "(Kdemi)", "frt",
      "The half-power specialization of the Lax pair satisfies the same "
      "exchange relations and inverse identities.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using A = AlgElem<C, Pres::SL2H>;
          const auto R = mat_R<C>();
          const auto I4 = mat_identity<C>(4);
          const auto lph = lop_plus<C, Pres::SL2H>();
          const auto lmh = lop_minus<C, Pres::SL2H>();
          p.zero("same-sign exchange", exchange_residual(R, I4, lph, lph));
          p.zero("mixed exchange", exchange_residual(R, I4, lph, lmh));
          const auto I2 = Mat<A>::identity(2, A::one());
          p.zero("upper inverse", lph * lop_plus_inv<C, Pres::SL2H>() - I2);
          p.zero("lower inverse", lmh * lop_minus_inv<C, Pres::SL2H>() - I2);
        });
      });

  add(v, "frt.qdet.omega1", "(qdet1)", "frt",
      "Braided trace of the same-sign Lax pair equals -(q+q^{-1}) times the "
      "grouplike central element.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const auto det1 =
              braid_product(mat_U<C>(), lop_plus<C, Pres::GL2>(),
                            mat_identity<C>(4), lop_plus<C, Pres::GL2>())
                  .trace();
          p.equal("determinant value", det1,
                  omega1_gl2<C>().scaled(Ops::zero() - Ops::q_pow(1) -
                                         Ops::q_pow(-1)));
        });
      });

  add(v, "frt.qdet.omega2", "(qdet2)", "frt",
      "Braided trace of the mixed Lax pair equals -(q-q^{-1})^2 times the "
      "quadratic central element.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto det2 =
              braid_product(mat_U<C>(), lop_plus<C, Pres::GL2>(),
                            mat_identity<C>(4), lop_minus<C, Pres::GL2>())
                  .trace();
          p.equal("determinant value", det2,
                  omega2_gl2<C>().scaled(CoefOps<C>::zero() -
                                         qd<C>() * qd<C>()));
        });
      });

  add(v, "frt.center.omega1", "(Centgl21c)", "frt",
      "The grouplike central element commutes with every generator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using A = AlgElem<C, Pres::GL2>;
          const auto O1 = omega1_gl2<C>();
          for (const A& g : {A::gen_e(), A::gen_f(), A::k12(1, 0),
                             A::k12(0, 1)}) {
            if (!p.ok()) break;
            p.zero("commutator with generator", O1 * g - g * O1);
          }
        });
      });

  add(v, "frt.center.omega2", "(Centgl22c)", "frt",
      "The quadratic central element commutes with every generator; its EF "
      "and FE normal forms agree.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using A = AlgElem<C, Pres::GL2>;
          const auto O2 = omega2_gl2<C>();
          for (const A& g : {A::gen_e(), A::gen_f(), A::k12(1, 0),
                             A::k12(0, 1)}) {
            if (!p.ok()) break;
            p.zero("commutator with generator", O2 * g - g * O2);
          }
          const C q = Ops::q_pow(1), qi = Ops::q_pow(-1);
          const C d2 = (q - qi) * (q - qi);
          A fe_form = (q / d2) * A::k12(1, -1) + (qi / d2) * A::k12(-1, 1);
          fe_form += A::gen_f() * A::gen_e();
          p.equal("reordered normal form", O2, fe_form);
        });
      });

  add(v, "frt.mutation", "(frt3)", "frt",
      "Mutation traps: corrupting R breaks the Yang-Baxter equation, "
      "corrupting U breaks its quadratic relation, zeroing the Lax "
      "off-diagonal entry breaks the mixed exchange relation.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          auto rb = mat_R<C>();
          rb.set(1, 2, Ops::one());
          p.nonzero("corrupted Yang-Baxter residual",
                    three_leg(rb, {0, 1}) * three_leg(rb, {0, 2}) *
                            three_leg(rb, {1, 2}) -
                        three_leg(rb, {1, 2}) * three_leg(rb, {0, 2}) *
                            three_leg(rb, {0, 1}));
          auto ub = mat_U<C>();
          ub.set(1, 1, Ops::q_pow(1));
          p.nonzero("corrupted quadratic relation",
                    ub * ub + ub.scaled(Ops::q_pow(1) + Ops::q_pow(-1)));
          auto lb = lop_plus<C, Pres::GL2>();
          lb.set(0, 1, AlgElem<C, Pres::GL2>::zero());
          p.nonzero("corrupted mixed exchange",
                    exchange_residual(mat_R<C>(), mat_identity<C>(4), lb,
                                      lop_minus<C, Pres::GL2>()));
        });
      });
}

// ---------------------------------------------------------------------------
// Suite: fm-gl2 (one-parameter exchange family over the two-Cartan algebra).
// ---------------------------------------------------------------------------

void add_fm_gl2(std::vector<CheckDef>& v) {
  add(v, "fm.gl2.factorization", "(solKexp)", "fm-gl2",
      "The one-parameter operator family factors through the reduced "
      "diagonal Lax operators (parameter kept symbolic).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using A = AlgElem<C, Pres::GL2>;
          const auto k0 =
              lift_mat<A>(mat_K0<C>(CoefOps<C>::sym(Var::al)));
          p.zero("plus factorization",
                 lop0_minus_bar<C>() * k0 * lop_plus<C, Pres::GL2>() -
                     kop_alpha_plus<C>());
          p.zero("minus factorization",
                 lop0_plus<C>() * k0 * lop_minus<C, Pres::GL2>() -
                     kop_alpha_minus<C>());
        });
      });

  add(v, "fm.gl2.exchange.pp", "(FMKKgl)", "fm-gl2",
      "Same-sign exchange equation for the plus family member.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual",
                 exchange_residual(mat_R<C>(), mat_R0<C>(),
                                   kop_alpha_plus<C>(), kop_alpha_plus<C>()));
        });
      });

  add(v, "fm.gl2.exchange.mm", "(FMKKgl)", "fm-gl2",
      "Same-sign exchange equation for the minus family member.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual",
                 exchange_residual(mat_R<C>(), mat_R0<C>(),
                                   kop_alpha_minus<C>(),
                                   kop_alpha_minus<C>()));
        });
      });

  add(v, "fm.gl2.exchange.pm", "(FMKKpgl)", "fm-gl2",
      "Mixed exchange equation between the plus and minus family members.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual",
                 exchange_residual(mat_R<C>(), mat_R0<C>(),
                                   kop_alpha_plus<C>(),
                                   kop_alpha_minus<C>()));
        });
      });

  add(v, "fm.gl2.premises", "Lemma 3.2", "fm-gl2",
      "Premises of the factorization lemma: the seed exchange equation for "
      "the constant unipotent matrix and all reduced-Lax exchange and "
      "crossing relations.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using A = AlgElem<C, Pres::GL2>;
          const auto R = mat_R<C>();
          const auto R0 = mat_R0<C>();
          const auto I4 = mat_identity<C>(4);
          const auto k0 =
              lift_mat<A>(mat_K0<C>(CoefOps<C>::sym(Var::al)));
          p.zero("seed exchange", exchange_residual(R, R0, k0, k0));
          const auto l0p = lop0_plus<C>();
          const auto l0mb = lop0_minus_bar<C>();
          const auto lp = lop_plus<C, Pres::GL2>();
          const auto lm = lop_minus<C, Pres::GL2>();
          p.zero("reduced plus exchange", exchange_residual(R, I4, l0p, l0p));
          p.zero("reduced minus exchange",
                 exchange_residual(R, I4, l0mb, l0mb));
          p.zero("crossing 0-/+", cross_residual(l0mb, R0, lp));
          p.zero("crossing +/0-", cross_residual(lp, R0, l0mb));
          p.zero("crossing 0+/-", cross_residual(l0p, R0, lm));
          p.zero("crossing -/0+", cross_residual(lm, R0, l0p));
          p.zero("crossing 0-/-", cross_residual(l0mb, R0, lm));
          p.zero("crossing -/0-", cross_residual(lm, R0, l0mb));
        });
      });

  add(v, "fm.gl2.mutation", "(FMKKpgl)", "fm-gl2",
      "Mutation trap: flipping the sign of the upper-right family entry "
      "breaks the mixed exchange equation.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using A = AlgElem<C, Pres::GL2>;
          auto bad = kop_alpha_plus<C>();
          bad.set(0, 1, A::zero() - bad.get(0, 1));
          p.nonzero("corrupted mixed exchange",
                    exchange_residual(mat_R<C>(), mat_R0<C>(), bad,
                                      kop_alpha_minus<C>()));
        });
      });
}

// ---------------------------------------------------------------------------
// Suite: fm-sl2 (one-Cartan presentations and exchange equations).
// ---------------------------------------------------------------------------

void add_fm_sl2(std::vector<CheckDef>& v) {
  add(v, "pres.sl2.relations", "(def:uq)", "fm-sl2",
      "Defining relations of the one-Cartan algebra hold in normal form, "
      "including an independently hand-derived straightening of E^2 F^2.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using A = AlgElem<C, Pres::SL2>;
          const A E = A::gen_e(), F = A::gen_f(), K = A::k_pow(1);
          const C q = Ops::q_pow(1), qi = Ops::q_pow(-1);
          p.equal("K E conjugation", K * E, Ops::q_pow(2) * (E * K));
          p.equal("K F conjugation", K * F, Ops::q_pow(-2) * (F * K));
          p.equal("Cartan inverses", A::k_pow(1) * A::k_pow(-1), A::one());
          const A cart =
              (Ops::one() / (q - qi)) * (A::k_pow(1) - A::k_pow(-1));
          p.equal("E F commutator", E * F - F * E, cart);
          const C q2 = Ops::q_pow(2), qm2 = Ops::q_pow(-2);
          const C d = q - qi;
          const C br2sq = q2 + Ops::from_int(2) + qm2;
          A rhs = F.pow(2) * E.pow(2);
          rhs += (br2sq / d) *
                 (qm2 * (F * A::k_pow(1) * E) - q2 * (F * A::k_pow(-1) * E));
          rhs += ((Ops::one() + qm2) / (d * d)) * A::k_pow(2);
          rhs += ((Ops::one() + q2) / (d * d)) * A::k_pow(-2);
          rhs -= (br2sq / (d * d)) * A::one();
          p.equal("E^2 F^2 straightening oracle", E.pow(2) * F.pow(2), rhs);
        });
      });

  add(v, "pres.sl2.assoc", "(def:uq)", "fm-sl2",
      "Associativity of the straightening product on 100 sampled "
      "degree-at-most-3 triples (fixed seed).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          check_assoc_alg<C, Pres::SL2>(p);
        });
      });

  add(v, "pres.sl2h.relations", "(Kdemi)", "fm-sl2",
      "Half-power extension: conjugation relations, inverses, and the "
      "substitution homomorphism from the two-Cartan algebra.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using Ah = AlgElem<C, Pres::SL2H>;
          const Ah Kh = Ah::k_half_pow(1);
          p.equal("half-power E conjugation", Kh * Ah::gen_e(),
                  Ops::q_pow(1) * (Ah::gen_e() * Kh));
          p.equal("half-power F conjugation", Kh * Ah::gen_f(),
                  Ops::q_pow(-1) * (Ah::gen_f() * Kh));
          p.equal("half-power inverse", Kh * Ah::k_half_pow(-1), Ah::one());
          std::mt19937 rng(kSampleSeed);
          const auto a = sample_alg<C, Pres::GL2>(rng);
          const auto b = sample_alg<C, Pres::GL2>(rng);
          p.equal("substitution is multiplicative", to_sl2h(a * b),
                  to_sl2h(a) * to_sl2h(b));
          p.truth("grouplike center maps to one",
                  to_sl2h(omega1_gl2<C>()).is_one());
          auto img = narrow(to_sl2h(omega2_gl2<C>()));
          p.truth("quadratic center restricts", img.has_value());
          if (img) p.equal("restricted center", *img, omega_sl2<C>());
          p.truth("strict half powers do not restrict",
                  narrow(Ah::k_half_pow(1)) == std::nullopt);
          p.equal("widening is a section", widen(omega_sl2<C>()),
                  to_sl2h(omega2_gl2<C>()));
        });
      });

  add(v, "pres.sl2h.assoc", "(Kdemi)", "fm-sl2",
      "Associativity of the half-power straightening product on 100 sampled "
      "triples (fixed seed).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          check_assoc_alg<C, Pres::SL2H>(p);
        });
      });

  add(v, "pres.eq.phi", "(iso1)", "fm-sl2",
      "The word-to-operator homomorphism kills the three cyclic relations "
      "and the inverse relation, and is onto (E and F are recovered).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using E = EqElem<C>;
          using A = AlgElem<C, Pres::SL2>;
          const C q = Ops::q_pow(1), qi = Ops::q_pow(-1);
          const C d = q - qi;
          auto rel = [&](const E& a, const E& b) {
            return (Ops::one() / d) * (q * (a * b) - qi * (b * a)) - E::one();
          };
          p.zero("first cyclic relation", phi(rel(E::X(), E::Y())));
          p.zero("second cyclic relation", phi(rel(E::Y(), E::Z())));
          p.zero("third cyclic relation", phi(rel(E::Z(), E::X())));
          p.zero("inverse relation", phi(E::X() * E::Xi() - E::one()));
          p.equal("word-level inverse", E::X() * E::Xi(), E::one());
          p.equal("word-level inverse (reversed)", E::Xi() * E::X(),
                  E::one());
          const A F = (Ops::one() / d) * (phi(E::Y()) - A::k_pow(-1));
          p.equal("lowering generator recovered", F, A::gen_f());
          const A Eimg = (Ops::zero() - qi / d) *
                         (A::k_pow(1) * (phi(E::Z()) - A::k_pow(-1)));
          p.equal("raising generator recovered", Eimg, A::gen_e());
        });
      });

  add(v, "pres.eq.casimir", "(Cente)", "fm-sl2",
      "The six-term central word maps to (q-q^{-1})^2 times the Casimir "
      "element, is rotation invariant, and its image is central.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using E = EqElem<C>;
          const C d2 = qd<C>() * qd<C>();
          p.equal("image of the central word", phi(omega_eq<C>()),
                  omega_sl2<C>().scaled(d2));
          p.equal("rotation invariance", phi(rotate_r(omega_eq<C>())),
                  phi(omega_eq<C>()));
          for (const auto& g : {E::X(), E::Y(), E::Z()}) {
            if (!p.ok()) break;
            const auto go = phi(g), om = phi(omega_eq<C>());
            p.zero("centrality of the image", go * om - om * go);
          }
        });
      });

  add(v, "fm.sl2.chevalley.specialize", "(notK)", "fm-sl2",
      "Setting the family parameter to zero and restricting to one Cartan "
      "generator yields the triangular operator pair.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          p.zero("plus restriction",
                 narrow_mat<C>(kop_alpha_plus<C>(Ops::zero())) -
                     kop_c_plus<C>());
          p.zero("minus restriction",
                 narrow_mat<C>(kop_alpha_minus<C>(Ops::zero())) -
                     kop_c_minus<C>());
        });
      });

  add(v, "fm.sl2.chevalley.pp", "(FMpp)", "fm-sl2",
      "Same-sign exchange equation for the upper triangular operator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual",
                 exchange_residual(mat_R<C>(), mat_R0<C>(), kop_c_plus<C>(),
                                   kop_c_plus<C>()));
        });
      });

  add(v, "fm.sl2.chevalley.mm", "(FMpp)", "fm-sl2",
      "Same-sign exchange equation for the lower triangular operator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual",
                 exchange_residual(mat_R<C>(), mat_R0<C>(), kop_c_minus<C>(),
                                   kop_c_minus<C>()));
        });
      });

  add(v, "fm.sl2.chevalley.pm", "(FMpm)", "fm-sl2",
      "Mixed exchange equation between the triangular operator pair.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual",
                 exchange_residual(mat_R<C>(), mat_R0<C>(), kop_c_plus<C>(),
                                   kop_c_minus<C>()));
        });
      });

  add(v, "fm.sl2.chevalley.rminus", "(RmKKpp)", "fm-sl2",
      "Reversed-braiding consequences.  The same-sign display's right side "
      "must carry the same-sign pair (the printed mixed pair fails); the "
      "mixed consequence holds as printed.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto R21i = mat_R21_inv<C>();
          const auto R0 = mat_R0<C>();
          const auto kp = kop_c_plus<C>();
          const auto km = kop_c_minus<C>();
          p.zero("reversed same-sign (plus)",
                 exchange_residual(R21i, R0, kp, kp));
          p.zero("reversed same-sign (minus)",
                 exchange_residual(R21i, R0, km, km));
          p.zero("reversed mixed", exchange_residual(R21i, R0, km, kp));
        });
      });

  add(v, "fm.sl2.chevalley.inverses", "(Kopc)", "fm-sl2",
      "Stated inverse operators are two-sided and satisfy the transposed "
      "exchange equations.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using A = AlgElem<C, Pres::SL2>;
          const auto I2 = Mat<A>::identity(2, A::one());
          const auto kp = kop_c_plus<C>();
          const auto km = kop_c_minus<C>();
          const auto kpi = kop_c_plus_inv<C>();
          const auto kmi = kop_c_minus_inv<C>();
          p.zero("plus right inverse", kp * kpi - I2);
          p.zero("plus left inverse", kpi * kp - I2);
          p.zero("minus right inverse", km * kmi - I2);
          p.zero("minus left inverse", kmi * km - I2);
          const auto R21 = mat_R21<C>();
          const auto R0i = mat_R0_inv<C>();
          p.zero("inverse same-sign (plus)",
                 exchange_residual(R21, R0i, kpi, kpi));
          p.zero("inverse same-sign (minus)",
                 exchange_residual(R21, R0i, kmi, kmi));
          p.zero("inverse mixed", exchange_residual(R21, R0i, kmi, kpi));
        });
      });

  add(v, "fm.sl2.chevalley.bis", "(Kopcbis)", "fm-sl2",
      "Variant pair with the inverted diagonal companion.  The minus "
      "operator's lower-left entry is -q(q-q^{-1})E: the displayed extra "
      "K^{-1} factor fails the mixed equation (see the mutation check).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using A = AlgElem<C, Pres::SL2>;
          const auto R = mat_R<C>();
          const auto R0i = mat_R0_inv<C>();
          const auto kpb = kop_c_plus_bis<C>();
          const auto kmb = kop_c_minus_bis<C>();
          p.zero("same-sign (plus)", exchange_residual(R, R0i, kpb, kpb));
          p.zero("same-sign (minus)", exchange_residual(R, R0i, kmb, kmb));
          p.zero("mixed", exchange_residual(R, R0i, kpb, kmb));
          const auto I2 = Mat<A>::identity(2, A::one());
          p.zero("minus right inverse",
                 kmb * kop_c_minus_bis_inv<C>() - I2);
          p.zero("minus left inverse",
                 kop_c_minus_bis_inv<C>() * kmb - I2);
        });
      });

  add(v, "fm.sl2.equitable.pp", "Theorem 3.4", "fm-sl2",
      "Same-sign exchange equation for the upper word operator, modulo the "
      "defining relations (residual vanishes under the homomorphism).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual (image)",
                 phi_mat(exchange_residual(mat_R<C>(), mat_R0<C>(),
                                           kop_e_plus<C>(),
                                           kop_e_plus<C>())));
        });
      });

  add(v, "fm.sl2.equitable.mm", "Theorem 3.4", "fm-sl2",
      "Same-sign exchange equation for the lower word operator, modulo the "
      "defining relations.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual (image)",
                 phi_mat(exchange_residual(mat_R<C>(), mat_R0<C>(),
                                           kop_e_minus<C>(),
                                           kop_e_minus<C>())));
        });
      });

  add(v, "fm.sl2.equitable.pm", "Theorem 3.4", "fm-sl2",
      "Mixed exchange equation for the word operator pair, modulo the "
      "defining relations.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("exchange residual (image)",
                 phi_mat(exchange_residual(mat_R<C>(), mat_R0<C>(),
                                           kop_e_plus<C>(),
                                           kop_e_minus<C>())));
        });
      });

  add(v, "fm.sl2.equitable.free", "Theorem 3.4", "fm-sl2",
      "The word-level residuals are nonzero before imposing the relations: "
      "the exchange equations encode the presentation, not a formal "
      "identity.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.nonzero("free same-sign residual",
                    exchange_residual(mat_R<C>(), mat_R0<C>(),
                                      kop_e_plus<C>(), kop_e_plus<C>()));
          p.nonzero("free mixed residual",
                    exchange_residual(mat_R<C>(), mat_R0<C>(),
                                      kop_e_plus<C>(), kop_e_minus<C>()));
        });
      });

  add(v, "fm.sl2.equitable.inverses", "(Kope)", "fm-sl2",
      "Word-operator inverses are two-sided already at the level of formal "
      "words.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using E = EqElem<C>;
          const auto I2 = Mat<E>::identity(2, E::one());
          const auto kp = kop_e_plus<C>();
          const auto km = kop_e_minus<C>();
          p.zero("plus right inverse", kp * kop_e_plus_inv<C>() - I2);
          p.zero("plus left inverse", kop_e_plus_inv<C>() * kp - I2);
          p.zero("minus right inverse", km * kop_e_minus_inv<C>() - I2);
          p.zero("minus left inverse", kop_e_minus_inv<C>() * km - I2);
        });
      });

  add(v, "fm.sl2.equitable.bis", "(Kopebis)", "fm-sl2",
      "Variant word pair with the inverted diagonal companion, modulo the "
      "defining relations; inverses are two-sided.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using E = EqElem<C>;
          const auto R = mat_R<C>();
          const auto R0i = mat_R0_inv<C>();
          const auto kpb = kop_e_plus_bis<C>();
          const auto kmb = kop_e_minus_bis<C>();
          p.zero("same-sign (plus)",
                 phi_mat(exchange_residual(R, R0i, kpb, kpb)));
          p.zero("same-sign (minus)",
                 phi_mat(exchange_residual(R, R0i, kmb, kmb)));
          p.zero("mixed", phi_mat(exchange_residual(R, R0i, kpb, kmb)));
          const auto I2 = Mat<E>::identity(2, E::one());
          p.zero("minus right inverse",
                 kmb * kop_e_minus_bis_inv<C>() - I2);
          p.zero("minus left inverse",
                 kop_e_minus_bis_inv<C>() * kmb - I2);
        });
      });

  add(v, "fm.sl2.borel", "(FMBorelBBXX)", "fm-sl2",
      "Rotated word operators on the two-generator subalgebra satisfy the "
      "same-sign and crossed exchange equations modulo the relations.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto R = mat_R<C>();
          const auto R0 = mat_R0<C>();
          const auto kb = kop_borel<C>();
          const auto kx = kop_x<C>();
          p.zero("two-generator pair",
                 phi_mat(exchange_residual(R, R0, kb, kb)));
          p.zero("unipotent pair", phi_mat(exchange_residual(R, R0, kx, kx)));
          p.zero("crossed pair", phi_mat(exchange_residual(R, R0, kb, kx)));
        });
      });

  add(v, "fm.sl2.qdet.chevalley", "(qdetFM)", "fm-sl2",
      "Braided trace of the triangular pair equals -q^{-1}(q-q^{-1})^2 "
      "times the Casimir element.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const auto det = braid_product(mat_U<C>(), kop_c_plus<C>(),
                                         mat_R0<C>(), kop_c_minus<C>())
                               .trace();
          p.equal("determinant value", det,
                  omega_sl2<C>().scaled(Ops::zero() - Ops::q_pow(-1) *
                                                          qd<C>() * qd<C>()));
        });
      });

  add(v, "fm.sl2.qdet.equitable", "(qdetFM)", "fm-sl2",
      "Braided trace of the word pair equals -q^{-1} times the six-term "
      "central word, under the homomorphism.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const auto det = braid_product(mat_U<C>(), kop_e_plus<C>(),
                                         mat_R0<C>(), kop_e_minus<C>())
                               .trace();
          p.equal("determinant image", phi(det),
                  phi(omega_eq<C>()).scaled(Ops::zero() - Ops::q_pow(-1)));
          p.equal("Casimir form", phi(det),
                  omega_sl2<C>().scaled(Ops::zero() - Ops::q_pow(-1) *
                                                          qd<C>() * qd<C>()));
        });
      });

  add(v, "fm.sl2.qtrace.chevalley", "quantum trace", "fm-sl2",
      "Weighted trace tr(D K+ (K-)^{-1}) equals (q-q^{-1})^2 times the "
      "Casimir for both the original and the variant pair.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const C d2 = qd<C>() * qd<C>();
          p.equal("original pair",
                  qtrace<C>(kop_c_plus<C>(), kop_c_minus_inv<C>()),
                  omega_sl2<C>().scaled(d2));
          p.equal("variant pair",
                  qtrace<C>(kop_c_plus_bis<C>(), kop_c_minus_bis_inv<C>()),
                  omega_sl2<C>().scaled(d2));
        });
      });

  add(v, "fm.sl2.qtrace.equitable", "quantum trace", "fm-sl2",
      "The word-pair weighted trace equals the six-term central word "
      "exactly; the variant pair agrees only modulo the relations.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const C d2 = qd<C>() * qd<C>();
          const auto t3 = qtrace<C>(kop_e_plus<C>(), kop_e_minus_inv<C>());
          p.equal("word-level identity", t3, omega_eq<C>());
          p.equal("image is the Casimir", phi(t3),
                  omega_sl2<C>().scaled(d2));
          const auto t4 =
              qtrace<C>(kop_e_plus_bis<C>(), kop_e_minus_bis_inv<C>());
          p.nonzero("variant trace differs freely", t4 - omega_eq<C>());
          p.equal("variant image is the Casimir", phi(t4),
                  omega_sl2<C>().scaled(d2));
        });
      });

  add(v, "fm.sl2.center.casimir", "(Centc)", "fm-sl2",
      "The Casimir element commutes with every generator, its EF and FE "
      "normal forms agree, and it is fixed by the Cartan flip.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using A = AlgElem<C, Pres::SL2>;
          const auto Oc = omega_sl2<C>();
          for (const A& g : {A::gen_e(), A::gen_f(), A::k_pow(1)}) {
            if (!p.ok()) break;
            p.zero("commutator with generator", Oc * g - g * Oc);
          }
          const C q = Ops::q_pow(1), qi = Ops::q_pow(-1);
          const C d2 = (q - qi) * (q - qi);
          A fe_form = (q / d2) * A::k_pow(1) + (qi / d2) * A::k_pow(-1);
          fe_form += A::gen_f() * A::gen_e();
          p.equal("reordered normal form", Oc, fe_form);
          p.equal("Cartan-flip invariance", theta(Oc), Oc);
        });
      });

  add(v, "fm.sl2.mutation.chevalley", "(FMpm)", "fm-sl2",
      "Mutation trap: flipping the sign of the upper-right entry breaks the "
      "mixed exchange equation (the like-sign equation would survive, since "
      "rescaling F is a triangular automorphism).",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          auto bad = kop_c_plus<C>();
          bad.set(0, 1, -bad.get(0, 1));
          p.nonzero("corrupted mixed exchange",
                    exchange_residual(mat_R<C>(), mat_R0<C>(), bad,
                                      kop_c_minus<C>()));
        });
      });

  add(v, "fm.sl2.mutation.equitable", "Theorem 3.4", "fm-sl2",
      "Mutation trap: dropping the constant from the upper-right word entry "
      "leaves a nonzero residual even after imposing the relations.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          auto bad = kop_e_plus<C>();
          bad.set(0, 1, EqElem<C>::Y());
          p.nonzero("corrupted same-sign exchange",
                    phi_mat(exchange_residual(mat_R<C>(), mat_R0<C>(), bad,
                                              bad)));
        });
      });

  add(v, "fm.sl2.mutation.borel", "(FMBorelBBXX)", "fm-sl2",
      "Mutation trap: dropping the constant from the rotated operator's "
      "upper-right entry breaks its same-sign exchange equation.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using E = EqElem<C>;
          auto bad = kop_borel<C>();
          bad.set(0, 1, E::Y() * E::Z());
          p.nonzero("corrupted same-sign exchange",
                    phi_mat(exchange_residual(mat_R<C>(), mat_R0<C>(), bad,
                                              bad)));
        });
      });

  add(v, "fm.sl2.mutation.bis", "(Kopcbis)", "fm-sl2",
      "Documented display correction: the variant minus operator printed "
      "with lower-left entry -q(q-q^{-1})K^{-1}E fails the mixed exchange "
      "equation; the implemented entry -q(q-q^{-1})E passes.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using A = AlgElem<C, Pres::SL2>;
          auto bad = kop_c_minus_bis<C>();
          bad.set(1, 0, (A::k_pow(-1) * A::gen_e())
                            .scaled(Ops::zero() - Ops::q_pow(1) * qd<C>()));
          p.nonzero("printed variant fails",
                    exchange_residual(mat_R<C>(), mat_R0_inv<C>(),
                                      kop_c_plus_bis<C>(), bad));
        });
      });
}

// ---------------------------------------------------------------------------
// Suite: hopf (coproduct, counit, antipode at element and operator level).
// ---------------------------------------------------------------------------

template <class C, Pres P>
std::vector<AlgElem<C, P>> hopf_generators() {
  using A = AlgElem<C, P>;
  if constexpr (P == Pres::GL2)
    return {A::gen_f(), A::gen_e(), A::k12(1, 0), A::k12(0, 1),
            A::k12(-1, -1)};
  else if constexpr (P == Pres::SL2)
    return {A::gen_f(), A::gen_e(), A::k_pow(1), A::k_pow(-1)};
  else
    return {A::gen_f(), A::gen_e(), A::k_half_pow(1), A::k_half_pow(-1)};
}

template <class C, Pres P>
void check_hopf_axioms(Probe& p) {
  using H = Hopf<C, P>;
  using A = AlgElem<C, P>;
  for (const A& g : hopf_generators<C, P>()) {
    if (!p.ok()) return;
    p.truth("coassociativity", H::coassoc_left(g) == H::coassoc_right(g));
    const A eps1 = H::counit(g) * A::one();
    p.equal("antipode fold (left)", H::antipode_fold_left(g), eps1);
    p.equal("antipode fold (right)", H::antipode_fold_right(g), eps1);
    p.equal("counit fold (left)", H::counit_fold_left(g), g);
    p.equal("counit fold (right)", H::counit_fold_right(g), g);
  }
}

void add_hopf(std::vector<CheckDef>& v) {
  add(v, "hopf.gl2.axioms", "(cpgl2)", "hopf",
      "Coassociativity, counit and antipode axioms on the two-Cartan "
      "generators.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          check_hopf_axioms<C, Pres::GL2>(p);
        });
      });

  add(v, "hopf.sl2.axioms", "(copc)", "hopf",
      "Coassociativity, counit and antipode axioms on the one-Cartan "
      "generators.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          check_hopf_axioms<C, Pres::SL2>(p);
        });
      });

  add(v, "hopf.sl2h.axioms", "(copc)", "hopf",
      "Coassociativity, counit and antipode axioms on the half-power "
      "generators.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          check_hopf_axioms<C, Pres::SL2H>(p);
        });
      });

  add(v, "hopf.maps.algebra", "(cpgl2)", "hopf",
      "The coproduct and counit are algebra maps and the antipode is an "
      "antihomomorphism, on composite elements.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using H = Hopf<C, Pres::GL2>;
          using A = AlgElem<C, Pres::GL2>;
          const A a = A::gen_e() * A::k12(1, -1) + A::gen_f();
          const A b = A::gen_f().pow(2) * A::k12(0, 1) - A::gen_e();
          p.equal("coproduct multiplicative", H::coproduct(a * b),
                  H::coproduct(a) * H::coproduct(b));
          p.equal("antipode antimultiplicative", H::antipode(a * b),
                  H::antipode(b) * H::antipode(a));
          p.equal("counit multiplicative", H::counit(a * b),
                  H::counit(a) * H::counit(b));
          using Hh = Hopf<C, Pres::SL2H>;
          using Ah = AlgElem<C, Pres::SL2H>;
          const Ah x = Ah::gen_f() * Ah::k_half_pow(1) + Ah::gen_e();
          const Ah y = Ah::k_half_pow(-3) * Ah::gen_e() - Ah::one();
          p.equal("half-power coproduct multiplicative", Hh::coproduct(x * y),
                  Hh::coproduct(x) * Hh::coproduct(y));
          p.equal("half-power antipode antimultiplicative",
                  Hh::antipode(x * y), Hh::antipode(y) * Hh::antipode(x));
        });
      });

  add(v, "hopf.sl2.relations", "(copc)", "hopf",
      "The coproduct images of the generators satisfy the defining "
      "relations in the tensor square.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using H = Hopf<C, Pres::SL2>;
          using A = AlgElem<C, Pres::SL2>;
          using T = TensorElem<C, Pres::SL2>;
          const auto dE = H::coproduct(A::gen_e());
          const auto dF = H::coproduct(A::gen_f());
          const auto dK = H::coproduct(A::k_pow(1));
          const auto dKi = H::coproduct(A::k_pow(-1));
          p.equal("Cartan inverses", dK * dKi, T::one());
          p.equal("K E conjugation", dK * dE, Ops::q_pow(2) * (dE * dK));
          const C d = qd<C>();
          p.equal("commutator relation", dE * dF - dF * dE,
                  (Ops::one() / d) * (dK - dKi));
        });
      });

  add(v, "hopf.theta", "(auto)", "hopf",
      "The Cartan flip is an involutive algebra automorphism fixing the "
      "Casimir element.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using A = AlgElem<C, Pres::SL2>;
          const A a = A::gen_e() * A::k_pow(2) + A::gen_f().pow(2);
          const A b = A::k_pow(-1) * A::gen_f() - A::gen_e();
          p.equal("involution", theta(theta(a)), a);
          p.equal("multiplicativity", theta(a * b), theta(a) * theta(b));
          p.equal("Casimir fixed", theta(omega_sl2<C>()), omega_sl2<C>());
        });
      });

  add(v, "hopf.eq.axioms", "(cope)", "hopf",
      "Word-level counit, antipode and coassociativity axioms for the "
      "cyclic generators; the antipode axiom on a product closes through "
      "the homomorphism.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using E = EqElem<C>;
          for (const E& g : {E::X(), E::Xi(), E::Y(), E::Z()}) {
            if (!p.ok()) break;
            E left, right;
            for (const auto& [k, c] : eq_coproduct(g).t) {
              left +=
                  (c * eq_counit(E::from_word(k.first))) * E::from_word(k.second);
              right +=
                  (c * eq_counit(E::from_word(k.second))) * E::from_word(k.first);
            }
            p.equal("counit fold (left)", left, g);
            p.equal("counit fold (right)", right, g);
            E fold;
            for (const auto& [k, c] : eq_coproduct(g).t)
              fold += c * (eq_antipode(E::from_word(k.first)) *
                           E::from_word(k.second));
            p.equal("antipode fold", fold, eq_counit(g) * E::one());
            std::map<std::tuple<std::string, std::string, std::string>, C> l3,
                r3;
            for (const auto& [k, c] : eq_coproduct(g).t) {
              for (const auto& [k1, c1] : eq_coproduct(E::from_word(k.first)).t) {
                auto key = std::make_tuple(k1.first, k1.second, k.second);
                l3[key] += c * c1;
                if (is_zero(l3[key])) l3.erase(key);
              }
              for (const auto& [k2, c2] :
                   eq_coproduct(E::from_word(k.second)).t) {
                auto key = std::make_tuple(k.first, k2.first, k2.second);
                r3[key] += c * c2;
                if (is_zero(r3[key])) r3.erase(key);
              }
            }
            p.truth("coassociativity at the word level", l3 == r3);
          }
          const E yx = E::Y() * E::X();
          E fold;
          for (const auto& [k, c] : eq_coproduct(yx).t)
            fold += c * (eq_antipode(E::from_word(k.first)) *
                         E::from_word(k.second));
          p.equal("antipode fold on a product (image)", phi(fold),
                  eq_counit(yx) * AlgElem<C, Pres::SL2>::one());
        });
      });

  add(v, "hopf.eq.phi", "(iso1)", "hopf",
      "The word-to-operator homomorphism is a coalgebra map and commutes "
      "with the antipode.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using E = EqElem<C>;
          using H = Hopf<C, Pres::SL2>;
          for (const E& w :
               {E::X(), E::Xi(), E::Y(), E::Z(), E::Y() * E::Z()}) {
            if (!p.ok()) break;
            p.equal("coproduct compatibility", H::coproduct(phi(w)),
                    phi_tensor(eq_coproduct(w)));
            p.equal("counit compatibility", H::counit(phi(w)), eq_counit(w));
            p.equal("antipode compatibility", H::antipode(phi(w)),
                    phi(eq_antipode(w)));
          }
        });
      });

  add(v, "hopf.lop", "(ruleFRT)", "hopf",
      "Matrix coproduct, counit and antipode of the Lax operators: "
      "entrywise coproduct is the matrix product rule, the counit is the "
      "identity pattern, the antipode is the stated inverse.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using H = Hopf<C, Pres::GL2>;
          const auto lp = lop_plus<C, Pres::GL2>();
          const auto lm = lop_minus<C, Pres::GL2>();
          for (const auto* l : {&lp, &lm}) {
            if (!p.ok()) break;
            const auto cop = matrix_coproduct(*l);
            for (int i = 0; i < 2 && p.ok(); ++i)
              for (int j = 0; j < 2 && p.ok(); ++j) {
                p.equal("entrywise coproduct", H::coproduct(l->get(i, j)),
                        cop.get(i, j));
                p.equal("entrywise counit", H::counit(l->get(i, j)),
                        i == j ? Ops::one() : Ops::zero());
              }
          }
          for (int i = 0; i < 2 && p.ok(); ++i)
            for (int j = 0; j < 2 && p.ok(); ++j) {
              p.equal("upper antipode", H::antipode(lp.get(i, j)),
                      lop_plus_inv<C, Pres::GL2>().get(i, j));
              p.equal("lower antipode", H::antipode(lm.get(i, j)),
                      lop_minus_inv<C, Pres::GL2>().get(i, j));
            }
        });
      });

  add(v, "hopf.kpm.coproduct", "Lemma 3.3", "hopf",
      "Entrywise coproduct of the one-parameter operator family equals the "
      "dressed bracket; fixed-entry oracles pin each entry, and the dressed "
      "operators satisfy the exchange equations over the tensor square.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using H = Hopf<C, Pres::GL2>;
          using A = AlgElem<C, Pres::GL2>;
          using T = TensorElem<C, Pres::GL2>;
          const C al = Ops::sym(Var::al);
          const C d = qd<C>();
          const auto kp = kop_alpha_plus<C>();
          const auto km = kop_alpha_minus<C>();
          const auto brp =
              dress_bracket(lop0_minus_bar<C>(), kp, lop_plus<C, Pres::GL2>());
          const auto brm =
              dress_bracket(lop0_plus<C>(), km, lop_minus<C, Pres::GL2>());
          for (int i = 0; i < 2 && p.ok(); ++i)
            for (int j = 0; j < 2 && p.ok(); ++j) {
              p.equal("plus entry coproduct", H::coproduct(kp.get(i, j)),
                      brp.get(i, j));
              p.equal("minus entry coproduct", H::coproduct(km.get(i, j)),
                      brm.get(i, j));
            }
          const A w = A::k12(1, -1), wi = A::k12(-1, 1);
          p.equal("oracle (0,0)", brp.get(0, 0), T::simple(w, w));
          p.equal("oracle (1,0)", brp.get(1, 0),
                  T::simple(A::one(), A::one()).scaled(al));
          p.equal("oracle (0,1)", brp.get(0, 1),
                  T::simple(w, (w * A::gen_f()).scaled(d)) +
                      T::simple((w * A::gen_f()).scaled(d), A::one()));
          p.equal("oracle (1,1)", brp.get(1, 1),
                  T::simple(wi + A::gen_f().scaled(al * d) - A::from_coef(al),
                            wi) +
                      T::simple(A::one(),
                                wi.scaled(al) + A::gen_f().scaled(al * d)));
          p.equal("minus oracle (0,0)", brm.get(0, 0), T::one());
          p.equal("minus oracle (1,1)", brm.get(1, 1), T::one());
          p.equal("minus oracle (0,1)", brm.get(0, 1), T::zero());
          const A low =
              wi.scaled(al) - (wi * A::gen_e()).scaled(Ops::q_pow(1) * d);
          p.equal("minus oracle (1,0)", brm.get(1, 0),
                  T::simple(low - A::from_coef(al), wi) +
                      T::simple(A::one(), low));
          const auto R = mat_R<C>();
          const auto R0 = mat_R0<C>();
          p.zero("dressed same-sign (plus)",
                 exchange_residual(R, R0, brp, brp));
          p.zero("dressed same-sign (minus)",
                 exchange_residual(R, R0, brm, brm));
          p.zero("dressed mixed", exchange_residual(R, R0, brp, brm));
        });
      });

  add(v, "hopf.kpm.counit", "(cuKpmgl)", "hopf",
      "Entrywise counit of the operator family is the unipotent pattern at "
      "the family parameter.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using H = Hopf<C, Pres::GL2>;
          const auto k0 = mat_K0<C>(Ops::sym(Var::al));
          const auto kp = kop_alpha_plus<C>();
          const auto km = kop_alpha_minus<C>();
          for (int i = 0; i < 2 && p.ok(); ++i)
            for (int j = 0; j < 2 && p.ok(); ++j) {
              p.equal("plus entry counit", H::counit(kp.get(i, j)),
                      k0.get(i, j));
              p.equal("minus entry counit", H::counit(km.get(i, j)),
                      k0.get(i, j));
            }
        });
      });

  add(v, "hopf.kpm.antipode", "(aKpmgl)", "hopf",
      "Antipode compatibility folds hold entrywise for both family members.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using H = Hopf<C, Pres::GL2>;
          using A = AlgElem<C, Pres::GL2>;
          const auto kp = kop_alpha_plus<C>();
          const auto km = kop_alpha_minus<C>();
          for (int i = 0; i < 2 && p.ok(); ++i)
            for (int j = 0; j < 2 && p.ok(); ++j)
              for (const auto* k : {&kp, &km}) {
                if (!p.ok()) break;
                const A e = A::from_coef(H::counit(k->get(i, j)));
                p.equal("antipode fold (left)",
                        H::antipode_fold_left(k->get(i, j)), e);
                p.equal("antipode fold (right)",
                        H::antipode_fold_right(k->get(i, j)), e);
              }
        });
      });

  add(v, "hopf.kc.coproduct", "(DeltaKcpm)", "hopf",
      "One-Cartan coproduct of the triangular operators equals the dressed "
      "bracket at parameter zero, restricted to one Cartan generator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using H = Hopf<C, Pres::SL2>;
          const auto kp = kop_c_plus<C>();
          const auto km = kop_c_minus<C>();
          const auto brp =
              dress_bracket(lop0_minus_bar<C>(), kop_alpha_plus<C>(Ops::zero()),
                            lop_plus<C, Pres::GL2>());
          const auto brm =
              dress_bracket(lop0_plus<C>(), kop_alpha_minus<C>(Ops::zero()),
                            lop_minus<C, Pres::GL2>());
          for (int i = 0; i < 2 && p.ok(); ++i)
            for (int j = 0; j < 2 && p.ok(); ++j) {
              p.equal("plus entry coproduct", H::coproduct(kp.get(i, j)),
                      require_value(narrow_tensor(brp.get(i, j))));
              p.equal("minus entry coproduct", H::coproduct(km.get(i, j)),
                      require_value(narrow_tensor(brm.get(i, j))));
            }
        });
      });

  add(v, "hopf.kc.counit", "(cuKcepm)", "hopf",
      "Entrywise counit of the triangular operators is the unipotent "
      "pattern at zero (the identity matrix).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using H = Hopf<C, Pres::SL2>;
          const auto kp = kop_c_plus<C>();
          const auto km = kop_c_minus<C>();
          for (int i = 0; i < 2 && p.ok(); ++i)
            for (int j = 0; j < 2 && p.ok(); ++j) {
              const C e = (i == j) ? Ops::one() : Ops::zero();
              p.equal("plus entry counit", H::counit(kp.get(i, j)), e);
              p.equal("minus entry counit", H::counit(km.get(i, j)), e);
            }
        });
      });

  add(v, "hopf.kc.antipode", "(aKpmsl)", "hopf",
      "Antipode compatibility folds hold entrywise for the triangular "
      "operator pair.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using H = Hopf<C, Pres::SL2>;
          using A = AlgElem<C, Pres::SL2>;
          const auto kp = kop_c_plus<C>();
          const auto km = kop_c_minus<C>();
          for (int i = 0; i < 2 && p.ok(); ++i)
            for (int j = 0; j < 2 && p.ok(); ++j)
              for (const auto* k : {&kp, &km}) {
                if (!p.ok()) break;
                const A e = A::from_coef(H::counit(k->get(i, j)));
                p.equal("antipode fold (left)",
                        H::antipode_fold_left(k->get(i, j)), e);
                p.equal("antipode fold (right)",
                        H::antipode_fold_right(k->get(i, j)), e);
              }
        });
      });

  add(v, "hopf.ke.coproduct", "(DeltaKepm)", "hopf",
      "Word coproduct of the word operators, pushed through the "
      "homomorphism on both legs, equals the dressed bracket at parameter "
      "one restricted to one Cartan generator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const auto kp = kop_e_plus<C>();
          const auto km = kop_e_minus<C>();
          const auto brp =
              dress_bracket(lop0_minus_bar<C>(), kop_alpha_plus<C>(Ops::one()),
                            lop_plus<C, Pres::GL2>());
          const auto brm =
              dress_bracket(lop0_plus<C>(), kop_alpha_minus<C>(Ops::one()),
                            lop_minus<C, Pres::GL2>());
          for (int i = 0; i < 2 && p.ok(); ++i)
            for (int j = 0; j < 2 && p.ok(); ++j) {
              p.equal("plus entry coproduct",
                      phi_tensor(eq_coproduct(kp.get(i, j))),
                      require_value(narrow_tensor(brp.get(i, j))));
              p.equal("minus entry coproduct",
                      phi_tensor(eq_coproduct(km.get(i, j))),
                      require_value(narrow_tensor(brm.get(i, j))));
            }
        });
      });

  add(v, "hopf.ke.counit", "(cuKcepm)", "hopf",
      "Entrywise word counit of the word operators is the unipotent "
      "pattern at one.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const auto k01 = mat_K0<C>(Ops::one());
          const auto kp = kop_e_plus<C>();
          const auto km = kop_e_minus<C>();
          for (int i = 0; i < 2 && p.ok(); ++i)
            for (int j = 0; j < 2 && p.ok(); ++j) {
              p.equal("plus entry counit", eq_counit(kp.get(i, j)),
                      k01.get(i, j));
              p.equal("minus entry counit", eq_counit(km.get(i, j)),
                      k01.get(i, j));
            }
        });
      });

  add(v, "hopf.ke.antipode", "(aKpmsl)", "hopf",
      "Antipode compatibility folds hold entrywise for the word operator "
      "pair, evaluated through the homomorphism.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using A = AlgElem<C, Pres::SL2>;
          const auto kp = kop_e_plus<C>();
          const auto km = kop_e_minus<C>();
          for (int i = 0; i < 2 && p.ok(); ++i)
            for (int j = 0; j < 2 && p.ok(); ++j)
              for (const auto* k : {&kp, &km}) {
                if (!p.ok()) break;
                const A e = A::from_coef(eq_counit(k->get(i, j)));
                p.equal("antipode fold (left)", eq_fold_left(k->get(i, j)), e);
                p.equal("antipode fold (right)", eq_fold_right(k->get(i, j)),
                        e);
              }
        });
      });
}

// ---------------------------------------------------------------------------
// Suite: intertwine (twisted coproducts and intertwining relations).
// ---------------------------------------------------------------------------

void add_intertwine(std::vector<CheckDef>& v) {
  add(v, "twist.c.relations", "(dc1)", "intertwine",
      "The twisted coproduct images of the one-Cartan generators satisfy "
      "the defining relations.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using A = AlgElem<C, Pres::SL2>;
          const C d = qd<C>();
          const auto I2 = Mat<A>::identity(2, A::one());
          const auto tk = twist_c_k<C>(1);
          const auto tki = twist_c_k<C>(-1);
          const auto te = twist_c_e<C>();
          const auto tf = twist_c_f<C>();
          p.zero("Cartan inverse (right)", tk * tki - I2);
          p.zero("Cartan inverse (left)", tki * tk - I2);
          p.zero("K E conjugation",
                 tk * te - smul(Ops::q_pow(2), te * tk));
          p.zero("K F conjugation",
                 tk * tf - smul(Ops::q_pow(-2), tf * tk));
          p.zero("commutator relation",
                 te * tf - tf * te - smul(Ops::one() / d, tk - tki));
        });
      });

  add(v, "twist.c.intertwine", "Section 3.4", "intertwine",
      "Both triangular operators intertwine the twisted coproduct with the "
      "opposite coproduct on every generator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using H = Hopf<C, Pres::SL2>;
          using A = AlgElem<C, Pres::SL2>;
          const auto kc_p = kop_c_plus<C>();
          const auto kc_m = kop_c_minus<C>();
          const std::pair<Mat<A>, A> gens[] = {
              {twist_c_k<C>(1), A::k_pow(1)},
              {twist_c_k<C>(-1), A::k_pow(-1)},
              {twist_c_e<C>(), A::gen_e()},
              {twist_c_f<C>(), A::gen_f()},
          };
          for (const auto& [img, x] : gens) {
            if (!p.ok()) break;
            const auto rhs = rho_otimes_id(H::coproduct_op(x));
            p.zero("upper intertwining", img * kc_p - kc_p * rhs);
            p.zero("lower intertwining", img * kc_m - kc_m * rhs);
          }
        });
      });

  add(v, "twist.e.relations", "(de1)", "intertwine",
      "The twisted coproduct images of the cyclic generators satisfy the "
      "three cyclic relations and the inverse relation.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using A = AlgElem<C, Pres::SL2>;
          const C d = qd<C>();
          const auto I2 = Mat<A>::identity(2, A::one());
          const auto ux = twist_e_x<C>(1);
          const auto uxi = twist_e_x<C>(-1);
          const auto uy = twist_e_y<C>();
          const auto uz = twist_e_z<C>();
          p.zero("inverse (right)", ux * uxi - I2);
          p.zero("inverse (left)", uxi * ux - I2);
          auto qcomm = [&](const Mat<A>& a, const Mat<A>& b) {
            return smul(Ops::q_pow(1), a * b) - smul(Ops::q_pow(-1), b * a) -
                   smul(d, I2);
          };
          p.zero("first cyclic relation", qcomm(ux, uy));
          p.zero("second cyclic relation", qcomm(uy, uz));
          p.zero("third cyclic relation", qcomm(uz, ux));
        });
      });

  add(v, "twist.e.intertwine", "Section 3.4", "intertwine",
      "Both word operators intertwine the twisted coproduct with the "
      "opposite word coproduct on every cyclic generator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using E = EqElem<C>;
          using A = AlgElem<C, Pres::SL2>;
          const auto ke_p = phi_mat(kop_e_plus<C>());
          const auto ke_m = phi_mat(kop_e_minus<C>());
          const std::pair<Mat<A>, E> gens[] = {
              {twist_e_x<C>(1), E::X()},
              {twist_e_x<C>(-1), E::Xi()},
              {twist_e_y<C>(), E::Y()},
              {twist_e_z<C>(), E::Z()},
          };
          for (const auto& [img, w] : gens) {
            if (!p.ok()) break;
            const auto rhs = rho_op_eq<C>(w);
            p.zero("upper intertwining", img * ke_p - ke_p * rhs);
            p.zero("lower intertwining", img * ke_m - ke_m * rhs);
          }
        });
      });

  add(v, "twist.b.relations", "Section 3.4", "intertwine",
      "Both coactions on the two-generator subalgebra preserve its "
      "defining relation.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using A = AlgElem<C, Pres::SL2>;
          const C d = qd<C>();
          const auto I2 = Mat<A>::identity(2, A::one());
          p.zero("straight coaction relation",
                 smul(Ops::q_pow(1), coact_b_y<C>() * coact_b_z<C>()) -
                     smul(Ops::q_pow(-1), coact_b_z<C>() * coact_b_y<C>()) -
                     smul(d, I2));
          p.zero("twisted coaction relation",
                 smul(Ops::q_pow(1), twist_b_y<C>() * twist_b_z<C>()) -
                     smul(Ops::q_pow(-1), twist_b_z<C>() * twist_b_y<C>()) -
                     smul(d, I2));
        });
      });

  add(v, "twist.b.intertwine", "Section 3.4", "intertwine",
      "The rotated word operator intertwines the twisted coaction with the "
      "straight one on both generators.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto kb = phi_mat(kop_borel<C>());
          p.zero("first generator",
                 twist_b_y<C>() * kb - kb * coact_b_y<C>());
          p.zero("second generator",
                 twist_b_z<C>() * kb - kb * coact_b_z<C>());
        });
      });

  add(v, "twist.lop.intertwine", "Section 3.4", "intertwine",
      "The half-power Lax operators intertwine the coproduct with the "
      "opposite coproduct on every generator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using H = Hopf<C, Pres::SL2H>;
          using A = AlgElem<C, Pres::SL2H>;
          const auto lp = lop_plus<C, Pres::SL2H>();
          const auto lm = lop_minus<C, Pres::SL2H>();
          const A gens[] = {A::k_half_pow(1), A::k_half_pow(-1), A::gen_e(),
                            A::gen_f()};
          for (const A& x : gens) {
            if (!p.ok()) break;
            const auto lhs = rho_otimes_id(H::coproduct(x));
            const auto rhs = rho_otimes_id(H::coproduct_op(x));
            p.zero("upper intertwining", lhs * lp - lp * rhs);
            p.zero("lower intertwining", lhs * lm - lm * rhs);
          }
        });
      });
}

// ---------------------------------------------------------------------------
// Suite: constant-k (constant matrices in finite-dimensional modules).
// ---------------------------------------------------------------------------

void add_constant_k(std::vector<CheckDef>& v) {
  add(v, "kmat.rfroml", "(RfromL)", "constant-k",
      "The braiding matrix factors through the Lax operators in the "
      "two-dimensional module: R = q^{1/2} rho(L+) and R21^{-1} = q^{-1/2} "
      "rho(L-).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          p.zero("upper factorization",
                 rho_fund_mat(lop_plus<C, Pres::SL2H>()).scaled(Ops::p_pow(1)) -
                     mat_R<C>());
          p.zero("lower factorization",
                 rho_fund_mat(lop_minus<C, Pres::SL2H>())
                         .scaled(Ops::p_pow(-1)) -
                     mat_R21_inv<C>());
        });
      });

  add(v, "kmat.kc.display", "(Kpmc)", "constant-k",
      "Images of the triangular operators in the two-dimensional module "
      "are braided products: rho(K+) = R0 R and rho(K-) = q R0 R21^{-1}.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          p.zero("plus image",
                 rho_fund_mat(kop_c_plus<C>()) - mat_R0<C>() * mat_R<C>());
          p.zero("minus image",
                 rho_fund_mat(kop_c_minus<C>()) -
                     (mat_R0<C>() * mat_R21_inv<C>()).scaled(Ops::q_pow(1)));
        });
      });

  add(v, "kmat.ke.display", "(Kemat)", "constant-k",
      "Fixed 4x4 oracles for the word operator pair in the combined "
      "auxiliary and two-dimensional module.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const C q1 = Ops::q_pow(1), qm = Ops::q_pow(-1);
          const C d = qd<C>();
          Mat<C> ke_p_ref(4, 4);
          ke_p_ref.set(0, 0, q1);
          ke_p_ref.set(1, 1, qm);
          ke_p_ref.set(1, 2, qm * d);
          ke_p_ref.set(2, 0, Ops::one());
          ke_p_ref.set(2, 2, qm);
          ke_p_ref.set(3, 1, Ops::one());
          ke_p_ref.set(3, 2, d);
          ke_p_ref.set(3, 3, q1);
          p.zero("plus display",
                 rho_fund_eq_mat(kop_e_plus<C>()) - ke_p_ref);
          Mat<C> ke_m_ref = mat_identity<C>(4);
          ke_m_ref.set(2, 0, qm);
          ke_m_ref.set(2, 1, Ops::zero() - d);
          ke_m_ref.set(3, 1, q1);
          p.zero("minus display",
                 rho_fund_eq_mat(kop_e_minus<C>()) - ke_m_ref);
        });
      });

  add(v, "kmat.kborel.display", "(Kborelmat)", "constant-k",
      "Fixed 4x4 oracles for the rotated word operators in the combined "
      "module.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const C q1 = Ops::q_pow(1), qm = Ops::q_pow(-1);
          const C d = qd<C>();
          Mat<C> kb_ref(4, 4);
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
          p.zero("rotated display",
                 rho_fund_eq_mat(kop_borel<C>()) - kb_ref);
          Mat<C> kx_ref = mat_identity<C>(4);
          kx_ref.set(2, 0, q1);
          kx_ref.set(3, 1, qm);
          p.zero("unipotent display", rho_fund_eq_mat(kop_x<C>()) - kx_ref);
        });
      });

  add(v, "kmat.v0", "(K0alpha)", "constant-k",
      "In the one-dimensional module every word operator collapses to the "
      "unipotent pattern at one; evaluating words at one is the word "
      "counit.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const auto re0 = make_rep<C>(0, RepFlavor::equitable_ycol);
          Mat<C> low1(2, 2);
          low1.set(0, 0, Ops::one());
          low1.set(1, 0, Ops::one());
          low1.set(1, 1, Ops::one());
          const auto k01 = mat_K0<C>(Ops::one());
          const Mat<EqElem<C>> word_ops[] = {kop_e_plus<C>(), kop_e_minus<C>(),
                                             kop_borel<C>(), kop_x<C>()};
          for (const auto& k : word_ops) {
            if (!p.ok()) break;
            p.zero("one-dimensional image", rep_mat(k, re0) - low1);
            const auto img = k.template map<C>(
                [](const EqElem<C>& w) { return eq_counit(w); });
            p.zero("counit image", img - k01);
          }
        });
      });

  add(v, "kmat.fm3", "(FMscal)", "constant-k",
      "Three-leg constant exchange equation for every operator pair and "
      "every selected module (auxiliary legs two-dimensional, quantum leg "
      "of module dimension).",
      [](const CheckOptions& opt) {
        return run_both([&opt](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto R = mat_R<C>();
          const auto R0 = mat_R0<C>();
          for (int two_s : opt.spins) {
            if (!p.ok()) break;
            const std::string sp = " [2s=" + std::to_string(two_s) + "]";
            const auto rc = make_rep<C>(two_s, RepFlavor::chevalley);
            const auto re = make_rep<C>(two_s, RepFlavor::equitable_ycol);
            const int n = rc.dim;
            const auto cp = rep_mat(kop_c_plus<C>(), rc);
            const auto cm = rep_mat(kop_c_minus<C>(), rc);
            p.zero("triangular pp" + sp, fm3_residual(R, R0, cp, cp, n));
            p.zero("triangular mm" + sp, fm3_residual(R, R0, cm, cm, n));
            p.zero("triangular pm" + sp, fm3_residual(R, R0, cp, cm, n));
            const auto ep = rep_mat(kop_e_plus<C>(), re);
            const auto em = rep_mat(kop_e_minus<C>(), re);
            const auto kb = rep_mat(kop_borel<C>(), re);
            const auto kx = rep_mat(kop_x<C>(), re);
            p.zero("word pp" + sp, fm3_residual(R, R0, ep, ep, n));
            p.zero("word mm" + sp, fm3_residual(R, R0, em, em, n));
            p.zero("word pm" + sp, fm3_residual(R, R0, ep, em, n));
            p.zero("rotated bb" + sp, fm3_residual(R, R0, kb, kb, n));
            p.zero("rotated xx" + sp, fm3_residual(R, R0, kx, kx, n));
            p.zero("rotated bx" + sp, fm3_residual(R, R0, kb, kx, n));
            const auto ap = rep_mat(kop_alpha_plus<C>(), rc);
            const auto am = rep_mat(kop_alpha_minus<C>(), rc);
            p.zero("family pp" + sp, fm3_residual(R, R0, ap, ap, n));
            p.zero("family pm" + sp, fm3_residual(R, R0, ap, am, n));
          }
        });
      });

  add(v, "kmat.mutation", "(FMscal)", "constant-k",
      "Mutation trap: shifting one module entry of the plus matrix breaks "
      "the three-leg exchange equation.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const auto good = make_rep<C>(1, RepFlavor::chevalley);
          auto cp = rep_mat(kop_c_plus<C>(), good);
          cp.set(0, 1, cp.get(0, 1) + Ops::one());
          p.nonzero("corrupted exchange",
                    fm3_residual(mat_R<C>(), mat_R0<C>(), cp,
                                 rep_mat(kop_c_minus<C>(), good), good.dim));
        });
      });
}

// ---------------------------------------------------------------------------
// Suite: reps (finite-dimensional module data).
// ---------------------------------------------------------------------------

void add_reps(std::vector<CheckDef>& v) {
  add(v, "rep.relations", "(repec)", "reps",
      "Module matrices satisfy the defining relations of both presentations "
      "for every selected module.",
      [](const CheckOptions& opt) {
        return run_both([&opt](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const C d = qd<C>();
          for (int two_s : opt.spins) {
            if (!p.ok()) break;
            const std::string sp = " [2s=" + std::to_string(two_s) + "]";
            const auto rc = make_rep<C>(two_s, RepFlavor::chevalley);
            const auto I = Mat<C>::identity(rc.dim, Ops::one());
            p.zero("Cartan inverse" + sp, rc.k * rc.ki - I);
            p.zero("half-power inverse" + sp, rc.khalf * rc.khalfi - I);
            p.zero("half-power square" + sp, rc.khalf * rc.khalf - rc.k);
            p.zero("K E conjugation" + sp,
                   rc.k * rc.e - smul(Ops::q_pow(2), rc.e * rc.k));
            p.zero("K F conjugation" + sp,
                   rc.k * rc.f - smul(Ops::q_pow(-2), rc.f * rc.k));
            p.zero("commutator relation" + sp,
                   rc.e * rc.f - rc.f * rc.e -
                       smul(Ops::one() / d, rc.k - rc.ki));
            const auto re = make_rep<C>(two_s, RepFlavor::equitable_ycol);
            p.zero("inverse (right)" + sp, re.x * re.xi - I);
            p.zero("inverse (left)" + sp, re.xi * re.x - I);
            auto qcomm = [&](const Mat<C>& a, const Mat<C>& b) {
              return smul(Ops::one() / d,
                          smul(Ops::q_pow(1), a * b) -
                              smul(Ops::q_pow(-1), b * a)) -
                     I;
            };
            p.zero("first cyclic relation" + sp, qcomm(re.x, re.y));
            p.zero("second cyclic relation" + sp, qcomm(re.y, re.z));
            p.zero("third cyclic relation" + sp, qcomm(re.z, re.x));
          }
        });
      });

  add(v, "rep.spinhalf", "(repec)", "reps",
      "The two-dimensional module matches the printed matrices for both "
      "generator families, and the one-dimensional module is trivial.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const C d = qd<C>();
          const auto rc = make_rep<C>(1, RepFlavor::chevalley);
          Mat<C> kref(2, 2), eref(2, 2), fref(2, 2);
          kref.set(0, 0, Ops::q_pow(1));
          kref.set(1, 1, Ops::q_pow(-1));
          eref.set(0, 1, Ops::one());
          fref.set(1, 0, Ops::one());
          p.zero("Cartan matrix", rc.k - kref);
          p.zero("raising matrix", rc.e - eref);
          p.zero("lowering matrix", rc.f - fref);
          const auto re = make_rep<C>(1, RepFlavor::equitable_ycol);
          Mat<C> yref(2, 2), zref(2, 2);
          yref.set(0, 0, Ops::q_pow(-1));
          yref.set(1, 0, d);
          yref.set(1, 1, Ops::q_pow(1));
          zref.set(0, 0, Ops::q_pow(-1));
          zref.set(0, 1, Ops::zero() - d);
          zref.set(1, 1, Ops::q_pow(1));
          p.zero("first cyclic matrix", re.x - kref);
          p.zero("second cyclic matrix", re.y - yref);
          p.zero("third cyclic matrix", re.z - zref);
          const auto r0c = make_rep<C>(0, RepFlavor::chevalley);
          const auto r0e = make_rep<C>(0, RepFlavor::equitable_ycol);
          const auto one1 = Mat<C>::identity(1, Ops::one());
          p.zero("trivial Cartan", r0c.k - one1);
          p.truth("trivial raising", r0c.e.is_zero());
          p.truth("trivial lowering", r0c.f.is_zero());
          p.zero("trivial cyclic (x)", r0e.x - one1);
          p.zero("trivial cyclic (y)", r0e.y - one1);
          p.zero("trivial cyclic (z)", r0e.z - one1);
        });
      });

  add(v, "rep.evaluation", "(repec)", "reps",
      "Element evaluation is a homomorphism on the relations, and flavor "
      "or spin misuse is rejected.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using A = AlgElem<C, Pres::SL2>;
          const C d = qd<C>();
          const auto rc = make_rep<C>(1, RepFlavor::chevalley);
          p.zero("unit image",
                 eval_rep(A::one(), rc) - Mat<C>::identity(2, Ops::one()));
          const A comm = A::gen_e() * A::gen_f() - A::gen_f() * A::gen_e();
          const A kdiff =
              (A::k_pow(1) - A::k_pow(-1)).scaled(Ops::one() / d);
          Mat<C> diag1m1(2, 2);
          diag1m1.set(0, 0, Ops::one());
          diag1m1.set(1, 1, Ops::zero() - Ops::one());
          p.zero("commutator image", eval_rep(comm, rc) - diag1m1);
          p.zero("relation image", eval_rep(comm, rc) - eval_rep(kdiff, rc));
          const auto re = make_rep<C>(1, RepFlavor::equitable_ycol);
          try {
            (void)eval_rep(EqElem<C>::Y(), rc);
            p.fail("word evaluated against the wrong generator family");
          } catch (const std::invalid_argument&) {
          }
          try {
            (void)eval_rep(A::gen_e(), re);
            p.fail("element evaluated against the wrong generator family");
          } catch (const std::invalid_argument&) {
          }
          try {
            (void)make_rep<C>(-1, RepFlavor::chevalley);
            p.fail("negative module size accepted");
          } catch (const std::invalid_argument&) {
          }
        });
      });

  add(v, "rep.casimir", "(Centc)", "reps",
      "Central elements act as the expected scalars in every selected "
      "module: (q^{2s+1}+q^{-2s-1})/(q-q^{-1})^2 for the Casimir.",
      [](const CheckOptions& opt) {
        return run_both([&opt](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const C d2 = qd<C>() * qd<C>();
          for (int two_s : opt.spins) {
            if (!p.ok()) break;
            const std::string sp = " [2s=" + std::to_string(two_s) + "]";
            const auto rc = make_rep<C>(two_s, RepFlavor::chevalley);
            const C scalar =
                (Ops::q_pow(two_s + 1) + Ops::q_pow(-two_s - 1)) / d2;
            auto ident = [&](const C& c) {
              return Mat<C>::identity(rc.dim, Ops::one()).scaled(c);
            };
            p.zero("Casimir scalar" + sp,
                   eval_rep(omega_sl2<C>(), rc) - ident(scalar));
            p.zero("grouplike center scalar" + sp,
                   eval_rep(omega1_gl2<C>(), rc) - ident(Ops::one()));
            p.zero("quadratic center scalar" + sp,
                   eval_rep(omega2_gl2<C>(), rc) - ident(scalar));
            const auto re = make_rep<C>(two_s, RepFlavor::equitable_ycol);
            p.zero("central word scalar" + sp,
                   eval_rep(omega_eq<C>(), re) - ident(scalar * d2));
          }
        });
      });

  add(v, "rep.mutation", "(repec)", "reps",
      "Mutation trap: shifting one raising-matrix entry breaks the "
      "commutator relation.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          auto rc = make_rep<C>(2, RepFlavor::chevalley);
          rc.e.set(0, 1, Ops::one());  // true entry is the q-integer [2]
          p.nonzero("corrupted commutator relation",
                    rc.e * rc.f - rc.f * rc.e -
                        smul(Ops::one() / qd<C>(), rc.k - rc.ki));
        });
      });
}

// ---------------------------------------------------------------------------
// Suite: spectral (parameter-dependent operators).
// ---------------------------------------------------------------------------

void add_spectral(std::vector<CheckDef>& v) {
  add(v, "pres.worda.relations", "(wg1)", "spectral",
      "Defining relations of the four-generator word algebra hold in the "
      "rewritten normal form, including the derived commutator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using W = AElem<C>;
          const W W0 = W::gen(0), W1 = W::gen(1), Z1 = W::gen(2),
                  Zt = W::gen(3);
          const C kp = Ops::sym(Var::kp), km = Ops::sym(Var::km);
          const C ep = Ops::sym(Var::ep), em = Ops::sym(Var::em);
          auto comm = [](const W& a, const W& b) { return a * b - b * a; };
          auto qcomm = [](const W& a, const W& b) {
            return Ops::q_pow(1) * (a * b) - Ops::q_pow(-1) * (b * a);
          };
          p.equal("generator commutator", comm(W0, W1), kp * Zt - km * Z1);
          p.equal("first braided relation", qcomm(W0, Z1),
                  (Ops::zero() - kp * ep) * W::one());
          p.equal("second braided relation", qcomm(Zt, W0),
                  (Ops::zero() - km * ep) * W::one());
          p.equal("third braided relation", qcomm(W1, Zt),
                  (Ops::zero() - km * em) * W::one());
          p.equal("fourth braided relation", qcomm(Z1, W1),
                  (Ops::zero() - kp * em) * W::one());
          p.equal("derived commutator", comm(Z1, Zt),
                  qd<C>() * (ep * W1 - em * W0));
        });
      });

  add(v, "pres.worda.assoc", "(wg1)", "spectral",
      "Associativity of the rewriting product on 100 sampled word triples "
      "(fixed seed); WARN if the rewriting budget is exhausted.",
      [](const CheckOptions&) -> CheckResult {
        try {
          return run_both([](auto tag, Probe& p) {
            using C = typename decltype(tag)::type;
            std::mt19937 rng(kSampleSeed);
            for (int t = 0; t < kAssocTriples && p.ok(); ++t) {
              const auto a = sample_word<C>(rng);
              const auto b = sample_word<C>(rng);
              const auto c = sample_word<C>(rng);
              p.zero("associativity on sampled triple " + std::to_string(t),
                     (a * b) * c - a * (b * c));
            }
          });
        } catch (const RewriteBudgetExceeded&) {
          return {CheckStatus::WARN,
                  "word rewriting budget exhausted; associativity sample "
                  "incomplete"};
        }
      });

  add(v, "pres.worda.center", "(gam0)", "spectral",
      "Both quadratic central words commute with every generator.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using W = AElem<C>;
          const auto G0 = gamma0_a<C>();
          const auto G1 = gamma1_a<C>();
          for (int i = 0; i < 4 && p.ok(); ++i) {
            p.zero("first central word vs generator " + std::to_string(i),
                   G0 * W::gen(i) - W::gen(i) * G0);
            p.zero("second central word vs generator " + std::to_string(i),
                   G1 * W::gen(i) - W::gen(i) * G1);
          }
        });
      });

  add(v, "spectral.r.ybe", "(YB)", "spectral",
      "Parameter-dependent braiding matrix: Yang-Baxter equation in two "
      "parameters, collapse at the unit parameter, and flip symmetry.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto r_uv = mat_r_spec<C>(1, -1);
          const auto r_u = mat_r_spec<C>(1, 0);
          const auto r_v = mat_r_spec<C>(0, 1);
          p.zero("collapse at the unit parameter",
                 mat_r_spec<C>(0, 0) - scalar_lmat(mat_P<C>().scaled(qd<C>())));
          const auto pl = scalar_lmat(mat_P<C>());
          p.zero("flip symmetry", pl * r_u * pl - r_u);
          const std::vector<int> dims{2, 2, 2};
          const auto r12 = tensor_place(r_uv, {0, 1}, dims);
          const auto r13 = tensor_place(r_u, {0, 2}, dims);
          const auto r23 = tensor_place(r_v, {1, 2}, dims);
          p.zero("Yang-Baxter residual",
                 r12 * r13 * r23 - r23 * r13 * r12);
        });
      });

  add(v, "spectral.lax.rll", "(YBA1)", "spectral",
      "Exchange relations of the parameter-dependent Lax operator, the "
      "terminating diagonal operator, and their mixed relation with the "
      "constant diagonal matrix.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ah = AlgElem<C, Pres::SL2H>;
          const auto r_uv = lift_coef_lmat<Ah>(mat_r_spec<C>(1, -1));
          const auto id4 =
              Mat<Lpoly<Ah>>::identity(4, Lpoly<Ah>::constant(Ah::one()));
          const auto lax = lax_u<C>();
          const auto lax0 = lax0_u<C>();
          p.zero("operator pair", re_residual(r_uv, id4, lax, to_v_mat(lax)));
          p.zero("diagonal pair",
                 re_residual(r_uv, id4, lax0, to_v_mat(lax0)));
          const auto r0 = lift_lmat<Ah>(mat_R0<C>());
          p.zero("mixed constant relation",
                 re_residual(r0, id4, lax0, to_v_mat(lax)));
        });
      });

  add(v, "spectral.lax.qdet", "det_q(L(u)), Section 4.1", "spectral",
      "Sklyanin determinant of the Lax pencil equals the derived value "
      "q u^2 + q^{-1} u^{-2} - (q-q^{-1})^2 Casimir; the printed display "
      "carries u^{+2} on its second term (suspected typo) and that variant "
      "is refuted.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using Ah = AlgElem<C, Pres::SL2H>;
          const auto lax = lax_u<C>();
          const auto id4 =
              Mat<Lpoly<Ah>>::identity(4, Lpoly<Ah>::constant(Ah::one()));
          const auto det = sklyanin_det<C>(lax, id4, lax);
          Lpoly<Ah> want = Lpoly<Ah>::term(2, 0, Ah::one().scaled(Ops::q_pow(1)));
          want.add_term(-2, 0, Ah::one().scaled(Ops::q_pow(-1)));
          want -= Lpoly<Ah>::constant(
              widen(omega_sl2<C>()).scaled(qd<C>() * qd<C>()));
          p.equal("derived determinant", det, want);
          Lpoly<Ah> swapped =
              Lpoly<Ah>::term(2, 0, Ah::one().scaled(Ops::q_pow(-1)));
          swapped.add_term(-2, 0, Ah::one().scaled(Ops::q_pow(1)));
          swapped -= Lpoly<Ah>::constant(
              widen(omega_sl2<C>()).scaled(qd<C>() * qd<C>()));
          p.nonzero("swapped prefactors refuted", det - swapped);
        });
      });

  add(v, "spectral.lemma41", "Lemma 4.1", "spectral",
      "The general parameter-dependent operator solves the exchange "
      "equation in the quotient, and the free residual coefficients span "
      "exactly the six defining relations (generic structure constants).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Wa = AElem<C>;
          const auto kg = kop_g_u<C, AElem>();
          const auto r_uv = lift_coef_lmat<Wa>(mat_r_spec<C>(1, -1));
          const auto r0 = lift_lmat<Wa>(mat_R0<C>());
          p.zero("exchange residual in the quotient",
                 re_residual(r_uv, r0, kg, to_v_mat(kg)));
          if constexpr (std::is_same_v<C, RatQ>) {
            using Wf = FreeElem<C>;
            const auto kgf = kop_g_u<C, FreeElem>();
            const auto r_uv_f = lift_coef_lmat<Wf>(mat_r_spec<C>(1, -1));
            const auto r0_f = lift_lmat<Wf>(mat_R0<C>());
            const auto res = re_residual(r_uv_f, r0_f, kgf, to_v_mat(kgf));
            p.nonzero("free residual", res);
            std::vector<Wf> coeffs;
            for (int i = 0; i < 4; ++i)
              for (int j = 0; j < 4; ++j)
                for (const auto& [d, c] : res.get(i, j).t)
                  coeffs.push_back(c);
            const auto relators = word_relators<C>();
            FreeSpan<C> rel_span;
            for (const auto& r : relators)
              p.truth("relators are independent", rel_span.add(r));
            p.truth("relator span has rank six", rel_span.rank() == 6);
            FreeSpan<C> coef_span;
            for (const auto& c : coeffs) {
              if (!p.ok()) break;
              p.truth("residual coefficient lies in the relator span",
                      rel_span.contains(c));
              coef_span.add(c);
            }
            p.truth("residual coefficients span rank six",
                    coef_span.rank() == 6);
            for (const auto& r : relators) {
              if (!p.ok()) break;
              p.truth("every relator is recovered", coef_span.contains(r));
            }
            p.truth("a bare word is not in the relator span",
                    !rel_span.contains(Wf::from_word("01")));
          }
        });
      });

  add(v, "spectral.gamma.expansion", "(gamma)", "spectral",
      "Generating-function expansion: q^2(q-q^{-1})^2 times the computed "
      "trace equals the displayed four-term combination (the display "
      "omits the overall (q^2-1)^2 factor, which is asserted necessary).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using Wa = AElem<C>;
          const auto kg = kop_g_u<C, AElem>();
          const auto r0 = lift_lmat<Wa>(mat_R0<C>());
          const auto gamma = sklyanin_det<C>(kg, r0, kg);
          const C kp = Ops::sym(Var::kp), km = Ops::sym(Var::km);
          const C ep = Ops::sym(Var::ep), em = Ops::sym(Var::em);
          const C d2 = qd<C>() * qd<C>();
          Lpoly<Wa> want =
              Lpoly<Wa>::term(2, 0, gamma0_a<C>().scaled(Ops::q_pow(4)));
          want.add_term(0, 0,
                        gamma1_a<C>().scaled(Ops::zero() - d2 * Ops::q_pow(2)));
          want.add_term(4, 0,
                        Wa::from_coef(Ops::zero() - kp * km * Ops::q_pow(6)));
          want.add_term(-2, 0, Wa::from_coef(d2 * ep * em));
          const C norm = Ops::q_pow(2) * d2;
          Lpoly<Wa> scaled;
          for (const auto& [d, c] : gamma.t)
            scaled.add_term(d.first, d.second, c.scaled(norm));
          p.equal("normalized expansion", scaled, want);
          p.nonzero("unnormalized display refuted", gamma - want);
        });
      });

  add(v, "spectral.gamma.central", "(gamma)", "spectral",
      "The generating function commutes with every entry of the operator "
      "at a second parameter; WARN if the rewriting budget is exhausted.",
      [](const CheckOptions&) -> CheckResult {
        try {
          return run_both([](auto tag, Probe& p) {
            using C = typename decltype(tag)::type;
            using Wa = AElem<C>;
            const auto kg = kop_g_u<C, AElem>();
            const auto r0 = lift_lmat<Wa>(mat_R0<C>());
            const auto gamma = sklyanin_det<C>(kg, r0, kg);
            const auto kv = to_v_mat(kg);
            for (int i = 0; i < 2 && p.ok(); ++i)
              for (int j = 0; j < 2 && p.ok(); ++j)
                p.zero("commutator with entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ")",
                       gamma * kv.get(i, j) - kv.get(i, j) * gamma);
          });
        } catch (const RewriteBudgetExceeded&) {
          return {CheckStatus::WARN,
                  "word rewriting budget exhausted; centrality check "
                  "incomplete"};
        }
      });

  add(v, "spectral.table1.chevalley", "Table 1", "spectral",
      "First specialization column: the six relators map to zero, the "
      "general operator specializes to the displayed triangular-family "
      "operator, the central words take the tabulated values, and the "
      "specialized generating function matches the direct computation.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Asl = AlgElem<C, Pres::SL2>;
          using Wa = AElem<C>;
          const auto relators = word_relators<C>();
          const auto img = spec_images_c<C>();
          auto cmap = [](const C& c) { return subst_consts(c, spec_consts_c()); };
          for (const auto& r : relators) {
            if (!p.ok()) break;
            p.zero("relator image", subst_words(r, img, cmap));
          }
          p.truth("operator specialization",
                  subst_words_mat(kop_g_u<C, FreeElem>(), img, cmap) ==
                      kop_c_u<C>());
          const C d2 = qd<C>() * qd<C>();
          p.equal("first central value",
                  subst_words(gamma0_a<C>().v, img, cmap),
                  Asl::one().scaled(d2));
          p.equal("second central value",
                  subst_words(gamma1_a<C>().v, img, cmap),
                  omega_sl2<C>().scaled(d2));
          const auto r0w = lift_lmat<Wa>(mat_R0<C>());
          const auto gamma_sym =
              sklyanin_det<C>(kop_g_u<C, AElem>(), r0w, kop_g_u<C, AElem>());
          Lpoly<Asl> gamma_spec;
          for (const auto& [d, c] : gamma_sym.t)
            gamma_spec.add_term(d.first, d.second,
                                subst_words(c.v, img, cmap));
          const auto r0c = lift_lmat<Asl>(mat_R0<C>());
          p.equal("specialized generating function", gamma_spec,
                  sklyanin_det<C>(kop_c_u<C>(), r0c, kop_c_u<C>()));
        });
      });

  add(v, "spectral.table1.equitable", "Table 1", "spectral",
      "Second specialization column: relators vanish through the "
      "homomorphism, the general operator specializes to the displayed "
      "word operator, its rotation gives the third displayed operator, and "
      "the central words take the tabulated values.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Asl = AlgElem<C, Pres::SL2>;
          using Eq = EqElem<C>;
          const auto relators = word_relators<C>();
          const auto img = spec_images_e<C>();
          auto cmap = [](const C& c) { return subst_consts(c, spec_consts_e()); };
          for (const auto& r : relators) {
            if (!p.ok()) break;
            p.zero("relator image", phi(subst_words(r, img, cmap)));
          }
          p.truth("operator specialization",
                  subst_words_mat(kop_g_u<C, FreeElem>(), img, cmap) ==
                      kop_e_u<C>());
          const auto rot = map_lmat<Eq>(
              kop_e_u<C>(), [](const Eq& c) { return rotate_r(c); });
          p.truth("rotated operator", rot == kop_bx_u<C>());
          const C d2 = qd<C>() * qd<C>();
          p.equal("first central value",
                  phi(subst_words(gamma0_a<C>().v, img, cmap)),
                  Asl::one().scaled(d2));
          p.equal("second central value",
                  phi(subst_words(gamma1_a<C>().v, img, cmap)),
                  phi(omega_eq<C>()));
        });
      });

  add(v, "spectral.table1.flip", "Table 1", "spectral",
      "Third specialization column: the six relators map to zero and the "
      "central words take the flipped tabulated values.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using Asl = AlgElem<C, Pres::SL2>;
          const auto relators = word_relators<C>();
          const auto img = spec_images_cp<C>();
          auto cmap = [](const C& c) {
            return subst_consts(c, spec_consts_cp());
          };
          for (const auto& r : relators) {
            if (!p.ok()) break;
            p.zero("relator image", subst_words(r, img, cmap));
          }
          const C d2 = qd<C>() * qd<C>();
          p.equal("first central value",
                  subst_words(gamma0_a<C>().v, img, cmap),
                  omega_sl2<C>().scaled(d2));
          p.equal("second central value",
                  subst_words(gamma1_a<C>().v, img, cmap),
                  Asl::one().scaled(Ops::one() / d2));
        });
      });

  add(v, "spectral.kc.re", "(Kc)", "spectral",
      "The specialized triangular-family operator and the flipped "
      "specialization both solve the parameter-dependent exchange "
      "equation exactly.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Asl = AlgElem<C, Pres::SL2>;
          const auto r_sl = lift_coef_lmat<Asl>(mat_r_spec<C>(1, -1));
          const auto r0_sl = lift_lmat<Asl>(mat_R0<C>());
          const auto kc = kop_c_u<C>();
          p.zero("exchange residual",
                 re_residual(r_sl, r0_sl, kc, to_v_mat(kc)));
          if constexpr (std::is_same_v<C, RatQ>) {
            const auto img = spec_images_cp<C>();
            auto cmap = [](const C& c) {
              return subst_consts(c, spec_consts_cp());
            };
            const auto kcp =
                subst_words_mat(kop_g_u<C, FreeElem>(), img, cmap);
            p.zero("flipped-specialization residual",
                   re_residual(r_sl, r0_sl, kcp, to_v_mat(kcp)));
          }
        });
      });

  add(v, "spectral.ke.re", "(Ke)", "spectral",
      "The word-operator solution holds in the quotient (residual vanishes "
      "through the homomorphism) but not freely.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Eq = EqElem<C>;
          const auto r_eq = lift_coef_lmat<Eq>(mat_r_spec<C>(1, -1));
          const auto r0_eq = lift_lmat<Eq>(mat_R0<C>());
          const auto ke = kop_e_u<C>();
          const auto res = re_residual(r_eq, r0_eq, ke, to_v_mat(ke));
          p.nonzero("free residual", res);
          p.zero("residual image", phi_lmat<C>(res));
        });
      });

  add(v, "spectral.kbx.re", "(KBXu)", "spectral",
      "The rotated word-operator solution holds in the quotient but not "
      "freely.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Eq = EqElem<C>;
          const auto r_eq = lift_coef_lmat<Eq>(mat_r_spec<C>(1, -1));
          const auto r0_eq = lift_lmat<Eq>(mat_R0<C>());
          const auto kbx = kop_bx_u<C>();
          const auto res = re_residual(r_eq, r0_eq, kbx, to_v_mat(kbx));
          p.nonzero("free residual", res);
          p.zero("residual image", phi_lmat<C>(res));
        });
      });

  add(v, "spectral.k0.re", "(K0)", "spectral",
      "The constant seed operator between the two parameter gauges solves "
      "the exchange equation.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Asl = AlgElem<C, Pres::SL2>;
          const auto r_sl = lift_coef_lmat<Asl>(mat_r_spec<C>(1, -1));
          const auto r0_sl = lift_lmat<Asl>(mat_R0<C>());
          const auto k0 = lift_coef_lmat<Asl>(kop0_ec_u<C>());
          p.zero("exchange residual",
                 re_residual(r_sl, r0_sl, k0, to_v_mat(k0)));
        });
      });

  add(v, "spectral.dressing", "(isoK)", "spectral",
      "Dressing the seed operator with the Lax pair reproduces the image "
      "of the word operator after the argument shift u -> u q^{1/2} and "
      "the diagonal gauge diag(1,q^{1/2}) . diag(q^{1/2},1); the plain "
      "product differs.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ah = AlgElem<C, Pres::SL2H>;
          using Eq = EqElem<C>;
          const auto k0 = lift_coef_lmat<Ah>(kop0_ec_u<C>());
          const auto product = lax0_u<C>() * k0 * lax_u<C>();
          const auto target = map_lmat<Ah>(
              kop_e_u<C>(), [](const Eq& c) { return widen(phi(c)); });
          const auto dressed =
              p_gauge<C>(shift_u<C>(product, 1), {0, 1}, {1, 0});
          p.zero("normalized dressing", dressed - target);
          p.nonzero("plain product differs", product - target);
        });
      });

  add(v, "spectral.decomposition.chevalley", "Section 4.2", "spectral",
      "Weight conjugation at shifted argument decomposes the "
      "triangular-family operator into uq K+ - u^{-1} K- exactly; the "
      "unshifted conjugation does not.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto kc_ns = m_conj<C>(kop_c_u<C>(), -2);
          const auto combo =
              spectral_combo<C>(kop_c_plus<C>(), kop_c_minus<C>());
          p.zero("decomposition", kc_ns - combo);
          p.nonzero("unshifted conjugation differs",
                    m_conj<C>(kop_c_u<C>(), 0) - combo);
        });
      });

  add(v, "spectral.decomposition.equitable", "Section 4.2", "spectral",
      "The word-operator decomposition uq K+ - u^{-1} K- holds through the "
      "homomorphism but not freely.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto ke_ns = m_conj<C>(kop_e_u<C>(), 0);
          const auto combo =
              spectral_combo<C>(kop_e_plus<C>(), kop_e_minus<C>());
          p.nonzero("free difference", ke_ns - combo);
          p.zero("difference image", phi_lmat<C>(ke_ns - combo));
        });
      });

  add(v, "spectral.decomposition.rens", "(REns)", "spectral",
      "Both decomposed pairs satisfy the exchange equation with the "
      "non-symmetric braiding matrix.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Asl = AlgElem<C, Pres::SL2>;
          const auto rns = lift_coef_lmat<Asl>(mat_r_ns<C>(1, -1));
          const auto r0 = lift_lmat<Asl>(mat_R0<C>());
          const auto combo_c =
              spectral_combo<C>(kop_c_plus<C>(), kop_c_minus<C>());
          p.zero("triangular pair",
                 re_residual(rns, r0, combo_c, to_v_mat(combo_c)));
          const auto combo_e = spectral_combo<C>(phi_mat(kop_e_plus<C>()),
                                                 phi_mat(kop_e_minus<C>()));
          p.zero("word pair",
                 re_residual(rns, r0, combo_e, to_v_mat(combo_e)));
        });
      });

  add(v, "spectral.decomposition.remaining", "(REns)", "spectral",
      "The seventh constant relation extracted from the non-symmetric "
      "exchange equation holds for both pairs, with both sides "
      "individually nonzero.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto R = mat_R<C>();
          const auto R0 = mat_R0<C>();
          const auto R21i = mat_R21_inv<C>();
          const auto lhs_c =
              exchange_residual(R, R0, kop_c_minus<C>(), kop_c_plus<C>());
          const auto rhs_c =
              exchange_residual(R21i, R0, kop_c_plus<C>(), kop_c_minus<C>());
          p.zero("triangular relation", lhs_c - rhs_c);
          p.nonzero("triangular sides nonzero", lhs_c);
          const auto ep = phi_mat(kop_e_plus<C>());
          const auto em = phi_mat(kop_e_minus<C>());
          const auto lhs_e = exchange_residual(R, R0, em, ep);
          const auto rhs_e = exchange_residual(R21i, R0, ep, em);
          p.zero("word relation", lhs_e - rhs_e);
          p.nonzero("word sides nonzero", lhs_e);
        });
      });

  add(v, "spectral.r.reconstruction", "(simil)", "spectral",
      "The symmetric braiding matrix is recovered from the non-symmetric "
      "one by undoing the two-leg weight scaling (the display's "
      "conjugation runs in the inverse direction); half-integer weights "
      "are rejected.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          p.zero("reconstruction",
                 leg_scale<C>(mat_r_ns<C>(1, -1), {1, 1, -1, -1},
                              {1, -1, 1, -1}) -
                     mat_r_spec<C>(1, -1));
          try {
            (void)leg_scale<C>(mat_r_ns<C>(1, -1), {1, 0, -1, -1},
                               {1, -1, 1, -1});
            p.fail("fractional weight scaling accepted");
          } catch (const std::domain_error&) {
          }
        });
      });

  add(v, "spectral.lns.split", "Section 4.2", "spectral",
      "After the argument shift u -> u q^{1/2} and the diagonal gauge "
      "diag(1,q).(.)diag(1,q^{-1}), the conjugated Lax operator splits as "
      "u q^{1/2} L+ - u^{-1} q^{-1/2} L- (the printed split has u^{-1/2} "
      "where u^{-1} is derived).",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using Ah = AlgElem<C, Pres::SL2H>;
          const auto lns = p_gauge<C>(
              shift_u<C>(m_conj<C>(lax_u<C>(), 0), 1), {0, 2}, {0, -2});
          const auto lp = lop_plus<C, Pres::SL2H>();
          const auto lm = lop_minus<C, Pres::SL2H>();
          Mat<Lpoly<Ah>> combo(2, 2);
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
              Lpoly<Ah> e;
              e.add_term(1, 0, lp.get(i, j).scaled(Ops::p_pow(1)));
              e.add_term(-1, 0, -lm.get(i, j).scaled(Ops::p_pow(-1)));
              if (!e.is_zero()) combo.set(i, j, e);
            }
          p.zero("split", lns - combo);
        });
      });

  add(v, "spectral.rep.displays", "(Kcmatu)", "spectral",
      "Parameter-dependent operators in the two-dimensional module match "
      "the printed 4x4 matrices, and both word operators collapse to the "
      "same lower-triangular matrix in the one-dimensional module.",
      [](const CheckOptions&) {
        return run_both([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          const auto rep_c = make_rep<C>(1, RepFlavor::chevalley);
          const auto rep_e = make_rep<C>(1, RepFlavor::equitable_ycol);
          auto T1 = [](int du, const C& c) { return Lpoly<C>::term(du, 0, c); };
          auto D = [&](int k) {
            Lpoly<C> e = T1(1, Ops::q_pow(k));
            e.add_term(-1, 0, Ops::zero() - Ops::one());
            return e;
          };
          const Lpoly<C> uu =
              T1(1, Ops::one()) + T1(-1, Ops::zero() - Ops::one());
          Mat<Lpoly<C>> kc_ref(4, 4);
          kc_ref.set(0, 0, D(2));
          kc_ref.set(3, 3, D(2));
          kc_ref.set(1, 1, uu);
          kc_ref.set(2, 2, uu);
          kc_ref.set(1, 2, Lpoly<C>::constant(Ops::q_pow(1) * qd<C>()));
          kc_ref.set(2, 1, Lpoly<C>::constant(Ops::q_pow(-1) * qd<C>()));
          p.zero("triangular display",
                 rep_mat_u(kop_c_u<C>(), rep_c) - kc_ref);
          Mat<Lpoly<C>> ke_ref(4, 4);
          ke_ref.set(0, 0, D(2));
          ke_ref.set(3, 3, D(2));
          ke_ref.set(1, 1, uu);
          ke_ref.set(2, 2, uu);
          ke_ref.set(1, 2, Lpoly<C>::constant(qd<C>()));
          ke_ref.set(2, 1, Lpoly<C>::constant(qd<C>()));
          ke_ref.set(2, 0, T1(2, Ops::q_pow(1)) +
                               Lpoly<C>::constant(Ops::zero() - Ops::q_pow(-1)));
          ke_ref.set(3, 1, T1(2, Ops::q_pow(1)) +
                               Lpoly<C>::constant(Ops::zero() - Ops::q_pow(1)));
          ke_ref.set(3, 2, T1(1, Ops::q_pow(1) * qd<C>()));
          p.zero("word display", rep_mat_u(kop_e_u<C>(), rep_e) - ke_ref);
          Mat<Lpoly<C>> kbx_ref(4, 4);
          kbx_ref.set(0, 0, uu);
          kbx_ref.set(0, 2,
                      Lpoly<C>::constant(Ops::q_pow(-1) - Ops::q_pow(1)));
          kbx_ref.set(0, 3,
                      Lpoly<C>::constant(Ops::q_pow(-1) - Ops::q_pow(1)));
          kbx_ref.set(1, 0, T1(1, Ops::q_pow(2) - Ops::one()));
          kbx_ref.set(1, 1, D(2));
          kbx_ref.set(1, 2, Lpoly<C>::constant(qd<C>()));
          kbx_ref.set(1, 3, Lpoly<C>::constant(qd<C>()));
          kbx_ref.set(2, 0, T1(2, Ops::q_pow(1)) +
                                Lpoly<C>::constant(Ops::zero() - Ops::q_pow(1)));
          kbx_ref.set(2, 2, uu);
          kbx_ref.set(2, 3, T1(1, Ops::one() - Ops::q_pow(2)));
          kbx_ref.set(3, 1, T1(2, Ops::q_pow(1)) +
                                Lpoly<C>::constant(Ops::zero() - Ops::q_pow(-1)));
          kbx_ref.set(3, 3, D(2));
          p.zero("rotated display",
                 rep_mat_u(kop_bx_u<C>(), rep_e) - kbx_ref);
          const auto rep0 = make_rep<C>(0, RepFlavor::equitable_ycol);
          Mat<Lpoly<C>> ref0(2, 2);
          ref0.set(0, 0, D(1));
          ref0.set(1, 1, D(1));
          ref0.set(1, 0,
                   T1(2, Ops::q_pow(1)) +
                       Lpoly<C>::constant(Ops::zero() - Ops::one()));
          p.zero("one-dimensional word display",
                 rep_mat_u(kop_e_u<C>(), rep0) - ref0);
          p.zero("one-dimensional rotated display",
                 rep_mat_u(kop_bx_u<C>(), rep0) - ref0);
        });
      });

  add(v, "spectral.rep.exchange", "(FMscalu)", "spectral",
      "The parameter-dependent exchange equation holds in every selected "
      "module for all three specialized operators.",
      [](const CheckOptions& opt) {
        return run_both([&opt](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          const auto s = mat_r_spec<C>(1, -1);
          const auto t0 = scalar_lmat(mat_R0<C>());
          for (int two_s : opt.spins) {
            if (!p.ok()) break;
            const std::string sp = " [2s=" + std::to_string(two_s) + "]";
            const auto rep_c = make_rep<C>(two_s, RepFlavor::chevalley);
            const auto rep_e = make_rep<C>(two_s, RepFlavor::equitable_ycol);
            const int dim = two_s + 1;
            const char* names[] = {"triangular", "word", "rotated"};
            const Mat<Lpoly<C>> ks[] = {rep_mat_u(kop_c_u<C>(), rep_c),
                                        rep_mat_u(kop_e_u<C>(), rep_e),
                                        rep_mat_u(kop_bx_u<C>(), rep_e)};
            for (int t = 0; t < 3 && p.ok(); ++t)
              p.zero(std::string(names[t]) + sp,
                     fm3_residual(s, t0, ks[t], to_v_mat(ks[t]), dim));
          }
        });
      });

  add(v, "spectral.mutation", "(RE)", "spectral",
      "Mutation traps: corrupting the braiding matrix breaks the "
      "Yang-Baxter equation; rescaling a Lax entry breaks its exchange "
      "relation; rescaling an operator entry breaks the exchange "
      "equation; shifting a module entry breaks the module-level "
      "equation.",
      [](const CheckOptions&) {
        return run_symbolic([](auto tag, Probe& p) {
          using C = typename decltype(tag)::type;
          using Ops = CoefOps<C>;
          using Ah = AlgElem<C, Pres::SL2H>;
          using Asl = AlgElem<C, Pres::SL2>;
          const std::vector<int> dims{2, 2, 2};
          auto bad_r = mat_r_spec<C>(1, -1);
          bad_r.set(1, 2, Lpoly<C>::constant(Ops::one()));
          const auto b12 = tensor_place(bad_r, {0, 1}, dims);
          const auto r13 = tensor_place(mat_r_spec<C>(1, 0), {0, 2}, dims);
          const auto r23 = tensor_place(mat_r_spec<C>(0, 1), {1, 2}, dims);
          p.nonzero("corrupted Yang-Baxter residual",
                    b12 * r13 * r23 - r23 * r13 * b12);
          auto bad_l = lax_u<C>();
          bad_l.set(1, 0, p_scale<C>(bad_l.get(1, 0), 2));
          const auto r_uv = lift_coef_lmat<Ah>(mat_r_spec<C>(1, -1));
          const auto id4 =
              Mat<Lpoly<Ah>>::identity(4, Lpoly<Ah>::constant(Ah::one()));
          p.nonzero("corrupted Lax exchange",
                    re_residual(r_uv, id4, bad_l, to_v_mat(bad_l)));
          auto bad_k = kop_c_u<C>();
          bad_k.set(0, 1, p_scale<C>(bad_k.get(0, 1), 2));
          const auto r_sl = lift_coef_lmat<Asl>(mat_r_spec<C>(1, -1));
          const auto r0_sl = lift_lmat<Asl>(mat_R0<C>());
          p.nonzero("corrupted operator exchange",
                    re_residual(r_sl, r0_sl, bad_k, to_v_mat(bad_k)));
          const auto rep = make_rep<C>(1, RepFlavor::chevalley);
          auto bad_m = rep_mat_u(kop_c_u<C>(), rep);
          bad_m.set(0, 0, bad_m.get(0, 0) + Lpoly<C>::constant(Ops::one()));
          p.nonzero("corrupted module exchange",
                    fm3_residual(mat_r_spec<C>(1, -1), scalar_lmat(mat_R0<C>()),
                                 bad_m, to_v_mat(bad_m), 2));
        });
      });
}

}  // namespace

// ---------------------------------------------------------------------------
// Registry access and the runner.
// ---------------------------------------------------------------------------

const std::vector<CheckDef>& all_checks() {
  static const std::vector<CheckDef> checks = [] {
    std::vector<CheckDef> v;
    add_frt(v);
    add_fm_gl2(v);
    add_fm_sl2(v);
    add_hopf(v);
    add_intertwine(v);
    add_constant_k(v);
    add_reps(v);
    add_spectral(v);
    std::sort(v.begin(), v.end(),
              [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
    return v;
  }();
  return checks;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "frt",        "fm-gl2", "fm-sl2",   "hopf", "intertwine",
      "constant-k", "reps",   "spectral", "all"};
  return names;
}

std::vector<CheckRecord> run_checks(
    const std::vector<std::string>& suites, const CheckOptions& opt,
    bool fail_fast, const std::function<void(const CheckRecord&)>& progress) {
  numeric_context().p = opt.q_half;
  const bool all =
      suites.empty() ||
      std::find(suites.begin(), suites.end(), "all") != suites.end();
  std::vector<CheckRecord> out;
  for (const CheckDef& def : all_checks()) {
    if (!all && std::find(suites.begin(), suites.end(), def.suite) ==
                    suites.end())
      continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = def.run(opt);
    } catch (const std::exception& e) {
      res = {CheckStatus::FAIL, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    out.push_back(CheckRecord{def.id, def.anchor, to_cstr(res.status),
                              res.residual, static_cast<long long>(ms)});
    if (progress) progress(out.back());
    if (fail_fast && res.status == CheckStatus::FAIL) break;
  }
  return out;
}

}  // namespace uqfm
