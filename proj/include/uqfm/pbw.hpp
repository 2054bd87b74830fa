#pragma once
/// \file pbw.hpp
/// Exact noncommutative algebra elements in PBW normal form.
///
/// Three monomial presentations share one straightening engine:
///   GL2  -- generators E, F, K1^{±1}, K2^{±1}; basis F^a K1^b K2^c E^d
///   SL2  -- generators E, F, K^{±1};           basis F^a K^b E^d
///   SL2H -- SL2 extended by K^{±1/2}
/// K-exponents of SL2/SL2H are stored doubled so that half powers remain
/// integers; SL2 elements keep them even.
///
/// A fourth algebra (four generators W0, W1, Z1, Zt1 subject to q-commutator
/// relations) has no PBW basis theorem available here, so its elements are
/// linear combinations of words reduced by a terminating rewriting pass.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uqfm/coeff.hpp"

namespace uqfm {

enum class Pres { GL2, SL2, SL2H };

/// PBW monomial exponents.
///   GL2:       [f, k1, k2, e]
///   SL2/SL2H:  [f, m, 0, e] with m the doubled exponent of K (K^{m/2})
using Mono = std::array<int, 4>;

inline constexpr Mono kUnitMono{0, 0, 0, 0};

template <class C, Pres P>
class AlgElem {
  using Ops = CoefOps<C>;

 public:
  std::map<Mono, C> t;

  AlgElem() = default;

  static AlgElem zero() { return AlgElem(); }
  static AlgElem one() { return from_mono(kUnitMono); }
  static AlgElem from_coef(const C& c) {
    AlgElem r;
    r.add_term(kUnitMono, c);
    return r;
  }
  static AlgElem from_mono(const Mono& m, const C& c = Ops::one()) {
    AlgElem r;
    r.add_term(m, c);
    return r;
  }
  static AlgElem gen_f(int a = 1) { return from_mono({a, 0, 0, 0}); }
  static AlgElem gen_e(int d = 1) { return from_mono({0, 0, 0, d}); }
  /// K1^{b} K2^{c} (GL2 only).
  static AlgElem k12(int b, int c) {
    static_assert(P == Pres::GL2, "k12 is a GL2 factory");
    return from_mono({0, b, c, 0});
  }
  /// K^{m/2} with doubled exponent m (SL2 requires m even).
  static AlgElem k_half_pow(int m) {
    static_assert(P != Pres::GL2, "k_half_pow is an SL2/SL2H factory");
    if (P == Pres::SL2 && (m % 2) != 0)
      throw std::invalid_argument("SL2 element: odd half-power of K");
    return from_mono({0, m, 0, 0});
  }
  static AlgElem k_pow(int e) { return k_half_pow(2 * e); }

  bool is_zero() const { return t.empty(); }
  bool is_one() const {
    return t.size() == 1 && t.begin()->first == kUnitMono &&
           Ops::is_zero(t.begin()->second - Ops::one());
  }

  bool operator==(const AlgElem& o) const { return t == o.t; }
  bool operator!=(const AlgElem& o) const { return !(*this == o); }

  AlgElem& operator+=(const AlgElem& o) {
    for (const auto& [m, c] : o.t) add_term(m, c);
    return *this;
  }
  AlgElem& operator-=(const AlgElem& o) {
    for (const auto& [m, c] : o.t) add_term(m, Ops::zero() - c);
    return *this;
  }
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator-(const AlgElem& a) {
    AlgElem r;
    for (const auto& [m, c] : a.t) r.t.emplace(m, Ops::zero() - c);
    return r;
  }
  AlgElem scaled(const C& c) const {
    AlgElem r;
    if (Ops::is_zero(c)) return r;
    for (const auto& [m, cc] : t) r.add_term(m, c * cc);
    return r;
  }
  friend AlgElem operator*(const C& c, const AlgElem& a) { return a.scaled(c); }

  friend AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    AlgElem r;
    for (const auto& [ma, ca] : a.t)
      for (const auto& [mb, cb] : b.t) {
        const C c = ca * cb;
        for (const auto& [m, cc] : mono_mul(ma, mb).t) r.add_term(m, c * cc);
      }
    return r;
  }
  AlgElem& operator*=(const AlgElem& o) { return *this = *this * o; }

  AlgElem pow(int n) const {
    if (n < 0) throw std::invalid_argument("AlgElem::pow: negative exponent");
    AlgElem r = one();
    AlgElem base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) r *= base;
      if (n > 1) base *= base;
    }
    return r;
  }

  void add_term(const Mono& m, const C& c) {
    if (Ops::is_zero(c)) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, c);
    } else {
      it->second += c;
      if (Ops::is_zero(it->second)) t.erase(it);
    }
  }

  /// Product of two PBW monomials, straightened back to normal form.
  static AlgElem mono_mul(const Mono& a, const Mono& b) {
    AlgElem r;
    const AlgElem& mid = ef_table(a[3], b[0]);
    for (const auto& [m, c] : mid.t) {
      // a.K moved right past F^{m[0]}, then E^{m[3]} moved right past b.K.
      C s = k_past_f(a, m[0]) * e_past_k(m[3], b);
      Mono out{a[0] + m[0], a[1] + m[1] + b[1], a[2] + m[2] + b[2],
               m[3] + b[3]};
      r.add_term(out, s * c);
    }
    return r;
  }

 private:
  /// Scalar from K1^{k1}K2^{k2} F^n = s F^n K1^{k1}K2^{k2}
  /// (resp. K^{m/2} F^n = s F^n K^{m/2}).
  static C k_past_f(const Mono& kmono, int n) {
    if (n == 0) return Ops::one();
    if constexpr (P == Pres::GL2)
      return Ops::q_pow(long(n) * (kmono[2] - kmono[1]));
    else
      return Ops::p_pow(-2L * n * kmono[1]);
  }
  /// Scalar from E^n K1^{k1}K2^{k2} = s K1^{k1}K2^{k2} E^n (resp. K^{m/2}).
  static C e_past_k(int n, const Mono& kmono) {
    if (n == 0) return Ops::one();
    if constexpr (P == Pres::GL2)
      return Ops::q_pow(long(n) * (kmono[2] - kmono[1]));
    else
      return Ops::p_pow(-2L * n * kmono[1]);
  }

  /// Cartan part of [E, F]: (K1K2^{-1} - K1^{-1}K2)/(q-q^{-1}) for GL2,
  /// (K - K^{-1})/(q-q^{-1}) for SL2/SL2H.
  static AlgElem ef_cartan(long fshift) {
    const C inv = Ops::one() / (Ops::q_pow(1) - Ops::q_pow(-1));
    AlgElem r;
    if constexpr (P == Pres::GL2) {
      r.add_term({0, 1, -1, 0}, Ops::q_pow(-2 * fshift) * inv);
      r.add_term({0, -1, 1, 0}, Ops::zero() - Ops::q_pow(2 * fshift) * inv);
    } else {
      r.add_term({0, 2, 0, 0}, Ops::q_pow(-2 * fshift) * inv);
      r.add_term({0, -2, 0, 0}, Ops::zero() - Ops::q_pow(2 * fshift) * inv);
    }
    return r;
  }

  /// Memoized normal form of E^e F^f.
  static const AlgElem& ef_table(int e, int f) {
    static std::map<std::pair<int, int>, AlgElem> memo;
    auto it = memo.find({e, f});
    if (it != memo.end()) return it->second;
    AlgElem r;
    if (e == 0) {
      r = gen_f(f);
    } else if (f == 0) {
      r = gen_e(e);
    } else if (e == 1) {
      // E F^f = F (E F^{f-1}) + cartan(f-1) F^{f-1}, with the Cartan factor
      // already commuted to the right of F^{f-1}.
      r = gen_f(1) * ef_table(1, f - 1);
      for (const auto& [m, c] : ef_cartan(f - 1).t) {
        Mono out = m;
        out[0] += f - 1;
        r.add_term(out, c);
      }
    } else {
      r = premul_e(ef_table(e - 1, f));
    }
    return memo.emplace(std::make_pair(e, f), std::move(r)).first->second;
  }

  /// E * x for x already in normal form.
  static AlgElem premul_e(const AlgElem& x) {
    AlgElem r;
    for (const auto& [m, c] : x.t) {
      const AlgElem& ef = ef_table(1, m[0]);
      for (const auto& [n, cc] : ef.t) {
        C s = e_past_k(n[3], m);
        Mono out{n[0], n[1] + m[1], n[2] + m[2], n[3] + m[3]};
        r.add_term(out, c * cc * s);
      }
    }
    return r;
  }
};

template <class C, Pres P>
bool is_zero(const AlgElem<C, P>& a) {
  return a.is_zero();
}

// ---------------------------------------------------------------------------
// Presentation conversions
// ---------------------------------------------------------------------------

/// Image of a GL2 element under K1 -> K^{1/2}, K2 -> K^{-1/2} (monomial-wise;
/// the map is an algebra homomorphism onto the half-integer extension).
template <class C>
AlgElem<C, Pres::SL2H> to_sl2h(const AlgElem<C, Pres::GL2>& x) {
  AlgElem<C, Pres::SL2H> r;
  for (const auto& [m, c] : x.t) r.add_term({m[0], m[1] - m[2], 0, m[3]}, c);
  return r;
}

/// SL2 -> SL2H inclusion.
template <class C>
AlgElem<C, Pres::SL2H> widen(const AlgElem<C, Pres::SL2>& x) {
  AlgElem<C, Pres::SL2H> r;
  r.t = x.t;
  return r;
}

/// SL2H -> SL2, defined only when every K-exponent is even.
template <class C>
std::optional<AlgElem<C, Pres::SL2>> narrow(const AlgElem<C, Pres::SL2H>& x) {
  AlgElem<C, Pres::SL2> r;
  for (const auto& [m, c] : x.t) {
    if (m[1] % 2 != 0) return std::nullopt;
    r.add_term(m, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Central elements
// ---------------------------------------------------------------------------

/// K1 K2 (GL2 center).
template <class C>
AlgElem<C, Pres::GL2> omega1_gl2() {
  return AlgElem<C, Pres::GL2>::k12(1, 1);
}

/// (q^{-1}K1K2^{-1} + qK1^{-1}K2)/(q-q^{-1})^2 + EF (GL2 center).
template <class C>
AlgElem<C, Pres::GL2> omega2_gl2() {
  using A = AlgElem<C, Pres::GL2>;
  using Ops = CoefOps<C>;
  const C qq = Ops::q_pow(1) - Ops::q_pow(-1);
  const C d = qq * qq;
  A r = (Ops::q_pow(-1) / d) * A::k12(1, -1) + (Ops::q_pow(1) / d) * A::k12(-1, 1);
  r += A::gen_e() * A::gen_f();
  return r;
}

/// (q^{-1}K + qK^{-1})/(q-q^{-1})^2 + EF (Casimir of SL2).
template <class C, Pres P = Pres::SL2>
AlgElem<C, P> omega_sl2() {
  using A = AlgElem<C, P>;
  using Ops = CoefOps<C>;
  const C qq = Ops::q_pow(1) - Ops::q_pow(-1);
  const C d = qq * qq;
  A r = (Ops::q_pow(-1) / d) * A::k_pow(1) + (Ops::q_pow(1) / d) * A::k_pow(-1);
  r += A::gen_e() * A::gen_f();
  return r;
}

// ---------------------------------------------------------------------------
// Word algebra with q-commutator relations (generators W0, W1, Z1, Zt1)
// ---------------------------------------------------------------------------

/// Free associative algebra on letters '0' (W0), '1' (W1), '2' (Z1),
/// '3' (Zt1); multiplication is concatenation.  Also the substrate for the
/// rewriting-based normal form below and for free-span certificates.
template <class C>
class FreeElem {
  using Ops = CoefOps<C>;

 public:
  std::map<std::string, C> t;

  FreeElem() = default;
  static FreeElem zero() { return FreeElem(); }
  static FreeElem one() { return from_word(""); }
  static FreeElem from_coef(const C& c) {
    FreeElem r;
    r.add_term("", c);
    return r;
  }
  static FreeElem from_word(const std::string& w, const C& c = Ops::one()) {
    FreeElem r;
    r.add_term(w, c);
    return r;
  }
  static FreeElem gen(int i) { return from_word(std::string(1, char('0' + i))); }

  bool is_zero() const { return t.empty(); }
  bool operator==(const FreeElem& o) const { return t == o.t; }
  bool operator!=(const FreeElem& o) const { return !(*this == o); }

  FreeElem& operator+=(const FreeElem& o) {
    for (const auto& [w, c] : o.t) add_term(w, c);
    return *this;
  }
  FreeElem& operator-=(const FreeElem& o) {
    for (const auto& [w, c] : o.t) add_term(w, Ops::zero() - c);
    return *this;
  }
  friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
  friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }
  friend FreeElem operator-(const FreeElem& a) {
    FreeElem r;
    for (const auto& [w, c] : a.t) r.t.emplace(w, Ops::zero() - c);
    return r;
  }
  FreeElem scaled(const C& c) const {
    FreeElem r;
    if (Ops::is_zero(c)) return r;
    for (const auto& [w, cc] : t) r.add_term(w, c * cc);
    return r;
  }
  friend FreeElem operator*(const C& c, const FreeElem& a) { return a.scaled(c); }
  friend FreeElem operator*(const FreeElem& a, const FreeElem& b) {
    FreeElem r;
    for (const auto& [wa, ca] : a.t)
      for (const auto& [wb, cb] : b.t) r.add_term(wa + wb, ca * cb);
    return r;
  }
  FreeElem& operator*=(const FreeElem& o) { return *this = *this * o; }

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
bool is_zero(const FreeElem<C>& a) {
  return a.is_zero();
}

/// One rewriting rule: the out-of-order two-letter word `lhs` is replaced by
/// the linear combination `rhs`.
template <class C>
struct RewriteRule {
  std::string lhs;
  std::vector<std::pair<std::string, C>> rhs;
};

/// The six reduction rules orienting the defining relations toward the order
/// W0 < W1 < Z1 < Zt1.  Bit i of a rule mask enables rules[i].
template <class C>
const std::vector<RewriteRule<C>>& word_rules() {
  using Ops = CoefOps<C>;
  static const std::vector<RewriteRule<C>> rules = [] {
    const C q = Ops::q_pow(1), qi = Ops::q_pow(-1);
    const C kp = Ops::sym(Var::kp), km = Ops::sym(Var::km);
    const C ep = Ops::sym(Var::ep), em = Ops::sym(Var::em);
    const C qq = q - qi;
    std::vector<RewriteRule<C>> r;
    // [W0,W1] = kp Zt1 - km Z1
    r.push_back({"10", {{"01", Ops::one()}, {"3", Ops::zero() - kp}, {"2", km}}});
    // [W0,Z1]_q = -kp ep
    r.push_back({"20", {{"02", Ops::q_pow(2)}, {"", q * kp * ep}}});
    // [Zt1,W0]_q = -km ep
    r.push_back({"30", {{"03", Ops::q_pow(-2)}, {"", Ops::zero() - qi * km * ep}}});
    // [Z1,W1]_q = -kp em
    r.push_back({"21", {{"12", Ops::q_pow(-2)}, {"", Ops::zero() - qi * kp * em}}});
    // [W1,Zt1]_q = -km em
    r.push_back({"31", {{"13", Ops::q_pow(2)}, {"", q * km * em}}});
    // [Z1,Zt1] = (q-q^{-1})(ep W1 - em W0)
    r.push_back({"32", {{"23", Ops::one()},
                        {"1", Ops::zero() - qq * ep},
                        {"0", qq * em}}});
    return r;
  }();
  return rules;
}

inline constexpr unsigned kAllWordRules = 0x3f;
inline constexpr long kWordBudget = 1'000'000;

/// Thrown when the rewriting budget is exhausted before a normal form is
/// reached; callers downgrade the affected check instead of failing hard.
struct RewriteBudgetExceeded : std::runtime_error {
  RewriteBudgetExceeded() : std::runtime_error("word rewriting budget exceeded") {}
};

/// Leftmost-innermost reduction of a word-algebra element by the enabled
/// rules.  Every step applies a defining relation, so the result represents
/// the same element of the quotient algebra.
template <class C>
FreeElem<C> word_normal_form(const FreeElem<C>& x,
                             unsigned rule_mask = kAllWordRules,
                             long budget = kWordBudget) {
  const auto& rules = word_rules<C>();
  FreeElem<C> out;
  std::vector<std::pair<std::string, C>> work(x.t.begin(), x.t.end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t pos = std::string::npos;
    int rule = -1;
    for (std::size_t i = 0; i + 1 < w.size() && rule < 0; ++i) {
      for (std::size_t j = 0; j < rules.size(); ++j) {
        if (!(rule_mask & (1u << j))) continue;
        if (w[i] == rules[j].lhs[0] && w[i + 1] == rules[j].lhs[1]) {
          pos = i;
          rule = int(j);
          break;
        }
      }
    }
    if (rule < 0) {
      out.add_term(w, c);
      continue;
    }
    if (--budget < 0) throw RewriteBudgetExceeded();
    const std::string pre = w.substr(0, pos);
    const std::string post = w.substr(pos + 2);
    for (const auto& [mid, rc] : rules[rule].rhs)
      work.emplace_back(pre + mid + post, c * rc);
  }
  return out;
}

/// Element of the q-commutator word algebra, kept in rewritten normal form.
template <class C>
class AElem {
  using Ops = CoefOps<C>;

 public:
  FreeElem<C> v;

  AElem() = default;
  explicit AElem(FreeElem<C> raw) : v(word_normal_form(raw)) {}

  static AElem zero() { return AElem(); }
  static AElem one() { return AElem(FreeElem<C>::one()); }
  static AElem from_coef(const C& c) { return AElem(FreeElem<C>::from_coef(c)); }
  /// Generator: 0 = W0, 1 = W1, 2 = Z1, 3 = Zt1.
  static AElem gen(int i) { return AElem(FreeElem<C>::gen(i)); }

  bool is_zero() const { return v.is_zero(); }
  bool operator==(const AElem& o) const { return v == o.v; }
  bool operator!=(const AElem& o) const { return !(*this == o); }

  friend AElem operator+(const AElem& a, const AElem& b) {
    AElem r;
    r.v = a.v + b.v;  // normal forms are closed under addition
    return r;
  }
  friend AElem operator-(const AElem& a, const AElem& b) {
    AElem r;
    r.v = a.v - b.v;
    return r;
  }
  friend AElem operator-(const AElem& a) {
    AElem r;
    r.v = -a.v;
    return r;
  }
  AElem scaled(const C& c) const {
    AElem r;
    r.v = v.scaled(c);
    return r;
  }
  friend AElem operator*(const C& c, const AElem& a) { return a.scaled(c); }
  friend AElem operator*(const AElem& a, const AElem& b) {
    return AElem(a.v * b.v);
  }
  AElem& operator+=(const AElem& o) { return *this = *this + o; }
  AElem& operator-=(const AElem& o) { return *this = *this - o; }
  AElem& operator*=(const AElem& o) { return *this = *this * o; }
};

template <class C>
bool is_zero(const AElem<C>& a) {
  return a.is_zero();
}

/// Gamma_0 = ((q-q^{-1})^2 (W0W1 + W1W0) - (q^2-q^{-2})(kp Zt1 + km Z1)) / 2.
template <class C>
AElem<C> gamma0_a() {
  using Ops = CoefOps<C>;
  const C qq = Ops::q_pow(1) - Ops::q_pow(-1);
  const C q2 = Ops::q_pow(2) - Ops::q_pow(-2);
  const C half = Ops::one() / Ops::from_int(2);
  const AElem<C> W0 = AElem<C>::gen(0), W1 = AElem<C>::gen(1);
  const AElem<C> Z1 = AElem<C>::gen(2), Zt = AElem<C>::gen(3);
  AElem<C> r = (qq * qq) * (W0 * W1 + W1 * W0);
  r -= q2 * (Ops::sym(Var::kp) * Zt + Ops::sym(Var::km) * Z1);
  return half * r;
}

/// Gamma_1 = (Z1 Zt1 + Zt1 Z1 + (q+q^{-1})(ep W1 + em W0)) / 2.
template <class C>
AElem<C> gamma1_a() {
  using Ops = CoefOps<C>;
  const C qp = Ops::q_pow(1) + Ops::q_pow(-1);
  const C half = Ops::one() / Ops::from_int(2);
  const AElem<C> W0 = AElem<C>::gen(0), W1 = AElem<C>::gen(1);
  const AElem<C> Z1 = AElem<C>::gen(2), Zt = AElem<C>::gen(3);
  AElem<C> r = Z1 * Zt + Zt * Z1;
  r += qp * (Ops::sym(Var::ep) * W1 + Ops::sym(Var::em) * W0);
  return half * r;
}

/// The six defining relations of the word algebra as free-algebra elements
/// (each is zero in the quotient).  Same orientation and order as the
/// rewriting rules in word_rules().
template <class C>
std::vector<FreeElem<C>> word_relators() {
  using Ops = CoefOps<C>;
  using F = FreeElem<C>;
  const C q = Ops::q_pow(1), qi = Ops::q_pow(-1);
  const C kp = Ops::sym(Var::kp), km = Ops::sym(Var::km);
  const C ep = Ops::sym(Var::ep), em = Ops::sym(Var::em);
  const C qq = q - qi;
  std::vector<F> r;
  // W0 W1 - W1 W0 - kp Zt1 + km Z1
  r.push_back(F::from_word("01") - F::from_word("10") - kp * F::from_word("3") +
              km * F::from_word("2"));
  // q W0 Z1 - q^-1 Z1 W0 + kp ep
  r.push_back(q * F::from_word("02") - qi * F::from_word("20") +
              (kp * ep) * F::one());
  // q Zt1 W0 - q^-1 W0 Zt1 + km ep
  r.push_back(q * F::from_word("30") - qi * F::from_word("03") +
              (km * ep) * F::one());
  // q Z1 W1 - q^-1 W1 Z1 + kp em
  r.push_back(q * F::from_word("21") - qi * F::from_word("12") +
              (kp * em) * F::one());
  // q W1 Zt1 - q^-1 Zt1 W1 + km em
  r.push_back(q * F::from_word("13") - qi * F::from_word("31") +
              (km * em) * F::one());
  // Z1 Zt1 - Zt1 Z1 - (q-q^-1)(ep W1 - em W0)
  r.push_back(F::from_word("23") - F::from_word("32") -
              (qq * ep) * F::from_word("1") + (qq * em) * F::from_word("0"));
  return r;
}

/// Incremental row echelon over the word basis of the free algebra, used to
/// compare C-linear spans of free-algebra elements.  C must be a field.
///
/// Each basis vector keeps a distinct pivot word (its largest word in map
/// order); reduction eliminates pivot words and only introduces strictly
/// smaller words, so it terminates.
template <class C>
class FreeSpan {
  using Ops = CoefOps<C>;

 public:
  /// Fully reduce x modulo the current basis.
  FreeElem<C> reduce(FreeElem<C> x) const {
    bool again = true;
    while (again) {
      again = false;
      for (const auto& b : basis_) {
        const auto& [pivot, lead] = *b.t.rbegin();
        auto it = x.t.find(pivot);
        if (it == x.t.end()) continue;
        x -= b.scaled(it->second / lead);
        again = true;
      }
    }
    return x;
  }

  /// Add a generator; returns true if it enlarged the span.
  bool add(const FreeElem<C>& g) {
    FreeElem<C> r = reduce(g);
    if (r.is_zero()) return false;
    basis_.push_back(std::move(r));
    return true;
  }

  bool contains(const FreeElem<C>& g) const { return reduce(g).is_zero(); }
  std::size_t rank() const { return basis_.size(); }

 private:
  std::vector<FreeElem<C>> basis_;
};

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

template <Pres P>
std::string mono_to_string(const Mono& m) {
  std::string s;
  auto app = [&s](const std::string& f) {
    if (!s.empty()) s += "*";
    s += f;
  };
  if (m[0] != 0) app("F" + (m[0] == 1 ? "" : "^" + std::to_string(m[0])));
  if constexpr (P == Pres::GL2) {
    if (m[1] != 0) app("K1" + (m[1] == 1 ? "" : "^" + std::to_string(m[1])));
    if (m[2] != 0) app("K2" + (m[2] == 1 ? "" : "^" + std::to_string(m[2])));
  } else {
    if (m[1] != 0) {
      if (m[1] % 2 == 0)
        app("K" + (m[1] == 2 ? "" : "^" + std::to_string(m[1] / 2)));
      else
        app("Kh" + (m[1] == 1 ? "" : "^" + std::to_string(m[1])));
    }
  }
  if (m[3] != 0) app("E" + (m[3] == 1 ? "" : "^" + std::to_string(m[3])));
  if (s.empty()) s = "1";
  return s;
}

template <class C, Pres P>
std::string to_string(const AlgElem<C, P>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : a.t) {
    std::string cs = to_string(c);
    if (!s.empty() && cs[0] != '-') s += "+";
    const bool sum = cs.find('+') != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    if (sum) cs = "(" + cs + ")";
    if (m == kUnitMono) {
      s += cs;
    } else if (cs == "1") {
      s += mono_to_string<P>(m);
    } else if (cs == "-1") {
      s += "-" + mono_to_string<P>(m);
    } else {
      s += cs + "*" + mono_to_string<P>(m);
    }
  }
  return s;
}

inline std::string word_to_string(const std::string& w) {
  static const char* names[4] = {"W0", "W1", "Z1", "Zt1"};
  if (w.empty()) return "1";
  std::string s;
  for (char ch : w) {
    if (!s.empty()) s += "*";
    s += names[ch - '0'];
  }
  return s;
}

template <class C>
std::string to_string(const FreeElem<C>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : a.t) {
    std::string cs = to_string(c);
    if (!s.empty() && cs[0] != '-') s += "+";
    const bool sum = cs.find('+') != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    if (sum) cs = "(" + cs + ")";
    if (w.empty()) {
      s += cs;
    } else if (cs == "1") {
      s += word_to_string(w);
    } else if (cs == "-1") {
      s += "-" + word_to_string(w);
    } else {
      s += cs + "*" + word_to_string(w);
    }
  }
  return s;
}

template <class C>
std::string to_string(const AElem<C>& a) {
  return to_string(a.v);
}

}  // namespace uqfm
