#pragma once
/// \file scalars.hpp
/// Exact scalar arithmetic for the kernel: arbitrary-precision integers and
/// rationals, sparse multivariate polynomials over the integers, and the
/// fraction field built on them.
///
/// The polynomial ring uses six fixed variables:
///   p  -- square root of the deformation parameter, q = p^2
///   kp, km, ep, em -- the structure constants k_+, k_-, eps_+, eps_-
///   al -- the lower-left entry of the constant seed K-matrix
///
/// Working with p instead of q keeps every exponent integral: expressions in
/// q^{1/2} (spin matrix entries, half Cartan powers) stay polynomial.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace uqfm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline constexpr int kNumVars = 6;

enum class Var : int { p = 0, kp = 1, km = 2, ep = 3, em = 4, al = 5 };

inline constexpr std::array<const char*, kNumVars> kVarNames{"p", "kp", "km",
                                                             "ep", "em", "al"};

/// Exponent vector of one monomial; all entries are >= 0.
using Expo = std::array<std::int32_t, kNumVars>;

inline constexpr Expo kZeroExpo{0, 0, 0, 0, 0, 0};

/// Sparse multivariate polynomial with Int coefficients.
///
/// Invariant: no stored coefficient is zero.  Keys are compared
/// lexicographically (std::array order), which doubles as the term order for
/// division and printing.
class Mpoly {
 public:
  std::map<Expo, Int> t;

  Mpoly() = default;
  explicit Mpoly(const Int& c) {
    if (c != 0) t.emplace(kZeroExpo, c);
  }
  explicit Mpoly(long c) : Mpoly(Int(c)) {}

  static Mpoly monomial(const Int& c, const Expo& e) {
    Mpoly r;
    if (c != 0) r.t.emplace(e, c);
    return r;
  }
  static Mpoly variable(Var v, int power = 1) {
    if (power < 0) throw std::invalid_argument("Mpoly: negative exponent");
    Expo e = kZeroExpo;
    e[static_cast<int>(v)] = power;
    return monomial(1, e);
  }

  bool is_zero() const { return t.empty(); }
  bool is_one() const {
    return t.size() == 1 && t.begin()->first == kZeroExpo &&
           t.begin()->second == 1;
  }
  /// True when the polynomial has at most one term.
  bool is_monomial() const { return t.size() <= 1; }

  bool operator==(const Mpoly& o) const { return t == o.t; }
  bool operator!=(const Mpoly& o) const { return !(*this == o); }
  /// Arbitrary total order so Mpoly can key containers.
  bool operator<(const Mpoly& o) const { return t < o.t; }

  Mpoly& operator+=(const Mpoly& o) {
    for (const auto& [e, c] : o.t) add_term(e, c);
    return *this;
  }
  Mpoly& operator-=(const Mpoly& o) {
    for (const auto& [e, c] : o.t) add_term(e, -c);
    return *this;
  }
  friend Mpoly operator+(Mpoly a, const Mpoly& b) { return a += b; }
  friend Mpoly operator-(Mpoly a, const Mpoly& b) { return a -= b; }
  friend Mpoly operator-(const Mpoly& a) {
    Mpoly r;
    for (const auto& [e, c] : a.t) r.t.emplace(e, -c);
    return r;
  }
  friend Mpoly operator*(const Mpoly& a, const Mpoly& b) {
    Mpoly r;
    for (const auto& [ea, ca] : a.t)
      for (const auto& [eb, cb] : b.t) {
        Expo e;
        for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Mpoly& operator*=(const Mpoly& o) { return *this = *this * o; }

  Mpoly pow(int n) const {
    if (n < 0) throw std::invalid_argument("Mpoly::pow: negative exponent");
    Mpoly r(1);
    Mpoly base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) r *= base;
      if (n > 1) base *= base;
    }
    return r;
  }

  /// Leading (lexicographically largest) term; polynomial must be nonzero.
  const std::pair<const Expo, Int>& leading() const {
    if (t.empty()) throw std::logic_error("Mpoly::leading on zero");
    return *t.rbegin();
  }

  /// gcd of all integer coefficients, with the sign of the leading term.
  Int content() const {
    Int g = 0;
    for (const auto& [e, c] : t) {
      g = gcd(g, c);
      if (g == 1) break;
    }
    if (!t.empty() && leading().second < 0) g = -g;
    return g;
  }

  /// Largest exponent of variable v appearing in any term (0 for zero poly).
  int degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : t) d = std::max(d, int(e[static_cast<int>(v)]));
    return d;
  }

  void add_term(const Expo& e, const Int& c) {
    if (c == 0) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
};

inline bool is_zero(const Mpoly& a) { return a.is_zero(); }

/// Exact division; throws std::logic_error when b does not divide a.
inline Mpoly divexact(const Mpoly& a, const Mpoly& b) {
  if (b.is_zero()) throw std::logic_error("divexact: division by zero");
  Mpoly q;
  Mpoly r = a;
  const auto& [eb, cb] = b.leading();
  while (!r.is_zero()) {
    const auto& [er, cr] = r.leading();
    Expo e;
    for (int i = 0; i < kNumVars; ++i) {
      e[i] = er[i] - eb[i];
      if (e[i] < 0) throw std::logic_error("divexact: not divisible");
    }
    if (cr % cb != 0) throw std::logic_error("divexact: not divisible");
    Mpoly term = Mpoly::monomial(cr / cb, e);
    q += term;
    r -= term * b;
  }
  return q;
}

/// Divide every coefficient of a univariate-in-v view by an Mpoly.
namespace detail {

/// View of a polynomial as univariate in variable v: degree -> coefficient
/// (coefficient polynomials do not contain v).
inline std::map<int, Mpoly> uni_view(const Mpoly& a, Var v) {
  std::map<int, Mpoly> r;
  const int iv = static_cast<int>(v);
  for (const auto& [e, c] : a.t) {
    Expo rest = e;
    const int d = rest[iv];
    rest[iv] = 0;
    r[d].add_term(rest, c);
  }
  return r;
}

inline Mpoly from_uni(const std::map<int, Mpoly>& u, Var v) {
  Mpoly r;
  const int iv = static_cast<int>(v);
  for (const auto& [d, coef] : u)
    for (const auto& [e, c] : coef.t) {
      Expo e2 = e;
      e2[iv] = d;
      r.add_term(e2, c);
    }
  return r;
}

}  // namespace detail

Mpoly gcd(const Mpoly& a, const Mpoly& b);

namespace detail {

/// gcd of the coefficients of the univariate view (the content w.r.t. v).
inline Mpoly uni_content(const std::map<int, Mpoly>& u) {
  Mpoly g;
  for (const auto& [d, coef] : u) {
    g = uqfm::gcd(g, coef);
    if (g.is_one()) break;
  }
  return g;
}

/// Pseudo-remainder of univariate views (Knuth 4.6.1, primitive PRS step).
inline std::map<int, Mpoly> uni_prem(std::map<int, Mpoly> r,
                                     const std::map<int, Mpoly>& d) {
  const int dd = d.rbegin()->first;
  const Mpoly& lcd = d.rbegin()->second;
  while (!r.empty() && r.rbegin()->first >= dd) {
    const int dr = r.rbegin()->first;
    const Mpoly lcr = r.rbegin()->second;
    std::map<int, Mpoly> nr;
    for (auto& [e, c] : r) {
      if (e == dr) continue;
      nr[e] = lcd * c;
    }
    for (const auto& [e, c] : d) {
      if (e == dd) continue;
      auto& slot = nr[e + dr - dd];
      slot -= lcr * c;
      if (slot.is_zero()) nr.erase(e + dr - dd);
    }
    r = std::move(nr);
  }
  return r;
}

}  // namespace detail

/// Polynomial gcd, normalized so the leading coefficient is positive.
/// Integer content and a primitive polynomial-remainder sequence in the
/// lowest variable common to both arguments.
inline Mpoly gcd(const Mpoly& a, const Mpoly& b) {
  if (a.is_zero() && b.is_zero()) return Mpoly();
  if (a.is_zero() || b.is_zero()) {
    Mpoly r = a.is_zero() ? b : a;
    Int c = r.content();
    return divexact(r, Mpoly(c < 0 ? Int(-1) : Int(1)));
  }
  // Monomial fast path: exponent-wise minimum and integer coefficient gcd.
  if (a.is_monomial() || b.is_monomial()) {
    const Mpoly& m = a.is_monomial() ? a : b;
    const Mpoly& f = a.is_monomial() ? b : a;
    Expo e = m.t.begin()->first;
    Int c = m.t.begin()->second;
    for (const auto& [ef, cf] : f.t) {
      for (int i = 0; i < kNumVars; ++i) e[i] = std::min(e[i], ef[i]);
      c = gcd(c, cf);
    }
    if (c < 0) c = -c;
    return Mpoly::monomial(c, e);
  }
  // Pick the lowest variable occurring in either argument as main variable.
  int main = -1;
  for (int i = 0; i < kNumVars && main < 0; ++i)
    if (a.degree(static_cast<Var>(i)) > 0 || b.degree(static_cast<Var>(i)) > 0)
      main = i;
  if (main < 0) {  // both constant
    Int g = gcd(a.t.begin()->second, b.t.begin()->second);
    if (g < 0) g = -g;
    return Mpoly(g);
  }
  const Var v = static_cast<Var>(main);
  if (a.degree(v) == 0 || b.degree(v) == 0) {
    // v occurs in only one argument: it cannot appear in the gcd, so reduce
    // that argument to its content w.r.t. v.
    const Mpoly& with = a.degree(v) > 0 ? a : b;
    const Mpoly& without = a.degree(v) > 0 ? b : a;
    return gcd(detail::uni_content(detail::uni_view(with, v)), without);
  }
  auto ua = detail::uni_view(a, v);
  auto ub = detail::uni_view(b, v);
  const Mpoly ca = detail::uni_content(ua);
  const Mpoly cb = detail::uni_content(ub);
  const Mpoly cg = gcd(ca, cb);
  // Primitive parts.
  for (auto& [d, c] : ua) c = divexact(c, ca);
  for (auto& [d, c] : ub) c = divexact(c, cb);
  auto* r0 = &ua;
  auto* r1 = &ub;
  if (r0->rbegin()->first < r1->rbegin()->first) std::swap(r0, r1);
  std::map<int, Mpoly> tmp;
  while (true) {
    tmp = detail::uni_prem(*r0, *r1);
    if (tmp.empty()) break;
    if (tmp.rbegin()->first == 0) return cg;  // gcd free of v
    const Mpoly c = detail::uni_content(tmp);
    for (auto& [d, cc] : tmp) cc = divexact(cc, c);
    *r0 = std::move(*r1);
    *r1 = std::move(tmp);
  }
  Mpoly g = detail::from_uni(*r1, v);
  const Mpoly c1 = detail::uni_content(*r1);
  g = divexact(g, c1);
  g = cg * g;
  if (g.leading().second < 0) g = -g;
  return g;
}

/// Fraction num/den of integer polynomials in canonical form:
/// gcd(num, den) = 1, leading coefficient of den positive, zero == 0/1.
class RatQ {
 public:
  Mpoly num, den;

  RatQ() : num(), den(1) {}
  explicit RatQ(const Int& c) : num(c), den(1) {}
  explicit RatQ(long c) : num(c), den(1) {}
  explicit RatQ(const Rat& r)
      : num(numerator(r)), den(denominator(r)) {}
  RatQ(Mpoly n, Mpoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

  static RatQ from_poly(Mpoly p) { return RatQ(std::move(p), Mpoly(1)); }
  static RatQ variable(Var v, int power = 1) {
    if (power >= 0) return from_poly(Mpoly::variable(v, power));
    return RatQ(Mpoly(1), Mpoly::variable(v, -power));
  }
  /// p^e with e of either sign.
  static RatQ p_pow(long e) { return variable(Var::p, static_cast<int>(e)); }
  /// q^e = p^{2e}.
  static RatQ q_pow(long e) { return p_pow(2 * e); }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num.is_one() && den.is_one(); }

  bool operator==(const RatQ& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatQ& o) const { return !(*this == o); }
  bool operator<(const RatQ& o) const {
    return num < o.num || (num == o.num && den < o.den);
  }

  friend RatQ operator+(const RatQ& a, const RatQ& b) {
    return RatQ(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatQ operator-(const RatQ& a, const RatQ& b) {
    return RatQ(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatQ operator-(const RatQ& a) {
    RatQ r = a;
    r.num = -r.num;
    return r;
  }
  friend RatQ operator*(const RatQ& a, const RatQ& b) {
    return RatQ(a.num * b.num, a.den * b.den);
  }
  friend RatQ operator/(const RatQ& a, const RatQ& b) {
    if (b.is_zero()) throw std::logic_error("RatQ: division by zero");
    return RatQ(a.num * b.den, a.den * b.num);
  }
  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
  RatQ& operator/=(const RatQ& o) { return *this = *this / o; }

  RatQ pow(int n) const {
    if (n >= 0) return RatQ(num.pow(n), den.pow(n));
    return RatQ(den.pow(-n), num.pow(-n));
  }

 private:
  void reduce() {
    if (den.is_zero()) throw std::logic_error("RatQ: zero denominator");
    if (num.is_zero()) {
      den = Mpoly(1);
      return;
    }
    if (!den.is_one()) {
      Mpoly g = uqfm::gcd(num, den);
      if (!g.is_one()) {
        num = divexact(num, g);
        den = divexact(den, g);
      }
      // Common integer factor is not caught when the polynomial gcd is 1.
      Int ic = gcd(num.content(), den.content());
      if (ic < 0) ic = -ic;
      if (ic > 1) {
        num = divexact(num, Mpoly(ic));
        den = divexact(den, Mpoly(ic));
      }
    }
    if (den.leading().second < 0) {
      num = -num;
      den = -den;
    }
  }
};

inline bool is_zero(const RatQ& a) { return a.is_zero(); }
inline bool is_zero(const Rat& a) { return a == 0; }
inline bool is_zero(const Int& a) { return a == 0; }

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

inline std::string to_string(const Int& c) { return c.str(); }
inline std::string to_string(const Rat& c) {
  std::string s = numerator(c).str();
  if (denominator(c) != 1) s += "/" + denominator(c).str();
  return s;
}

/// Terms in descending lex order, e.g. "p^4-2*p^2*kp+1".
inline std::string to_string(const Mpoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) {
    const auto& [e, c] = *it;
    Int ab = c < 0 ? Int(-c) : c;
    s += (c < 0) ? "-" : (s.empty() ? "" : "+");
    std::string factors;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += kVarNames[i];
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      s += ab.str();
    } else {
      if (ab != 1) s += ab.str() + "*";
      s += factors;
    }
  }
  return s;
}

inline std::string to_string(const RatQ& a) {
  if (a.den.is_one()) return to_string(a.num);
  const bool pn = a.num.t.size() > 1;
  const bool pd = a.den.t.size() > 1;
  std::string s = pn ? "(" + to_string(a.num) + ")" : to_string(a.num);
  s += "/";
  s += pd ? "(" + to_string(a.den) + ")" : to_string(a.den);
  return s;
}

}  // namespace uqfm
