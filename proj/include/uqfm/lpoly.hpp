#pragma once
/// \file lpoly.hpp
/// Laurent polynomials in the two spectral parameters u and v, with
/// coefficients in an arbitrary (possibly noncommutative) ring T.

#include <map>
#include <string>
#include <utility>

namespace uqfm {

template <class T>
class Lpoly {
 public:
  /// (degree in u, degree in v) -> coefficient; no zero coefficients stored.
  std::map<std::pair<int, int>, T> t;

  Lpoly() = default;

  static Lpoly constant(const T& c) { return term(0, 0, c); }
  static Lpoly term(int du, int dv, const T& c) {
    Lpoly r;
    r.add_term(du, dv, c);
    return r;
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const Lpoly& o) const { return t == o.t; }
  bool operator!=(const Lpoly& o) const { return !(*this == o); }

  Lpoly& operator+=(const Lpoly& o) {
    for (const auto& [d, c] : o.t) add_term(d.first, d.second, c);
    return *this;
  }
  Lpoly& operator-=(const Lpoly& o) {
    for (const auto& [d, c] : o.t) add_term(d.first, d.second, -c);
    return *this;
  }
  friend Lpoly operator+(Lpoly a, const Lpoly& b) { return a += b; }
  friend Lpoly operator-(Lpoly a, const Lpoly& b) { return a -= b; }
  friend Lpoly operator-(const Lpoly& a) {
    Lpoly r;
    for (const auto& [d, c] : a.t) r.t.emplace(d, -c);
    return r;
  }
  friend Lpoly operator*(const Lpoly& a, const Lpoly& b) {
    Lpoly r;
    for (const auto& [da, ca] : a.t)
      for (const auto& [db, cb] : b.t)
        r.add_term(da.first + db.first, da.second + db.second, ca * cb);
    return r;
  }
  Lpoly& operator*=(const Lpoly& o) { return *this = *this * o; }

  void add_term(int du, int dv, const T& c) {
    using uqfm::is_zero;
    if (is_zero(c)) return;
    auto it = t.find({du, dv});
    if (it == t.end()) {
      t.emplace(std::make_pair(du, dv), c);
    } else {
      it->second += c;
      if (is_zero(it->second)) t.erase(it);
    }
  }
};

template <class T>
bool is_zero(const Lpoly<T>& a) {
  return a.is_zero();
}

template <class T>
std::string to_string(const Lpoly<T>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [d, c] : a.t) {
    if (!s.empty()) s += " + ";
    std::string mono;
    if (d.first != 0)
      mono += "u^" + std::to_string(d.first);
    if (d.second != 0)
      mono += (mono.empty() ? "" : "*") + std::string("v^") +
              std::to_string(d.second);
    std::string cs = to_string(c);
    if (mono.empty())
      s += cs;
    else
      s += "(" + cs + ")*" + mono;
  }
  return s;
}

}  // namespace uqfm
