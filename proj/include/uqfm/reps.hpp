#pragma once
/// \file reps.hpp
/// Exact (2s+1)-dimensional modules V^(s) in the two printed bases, the
/// evaluation of algebra elements and operator matrices in them, and the
/// three-space exchange residual used by the matrix-level checks.

#include <stdexcept>
#include <vector>

#include "uqfm/eqexpr.hpp"
#include "uqfm/lpoly.hpp"
#include "uqfm/mat.hpp"
#include "uqfm/matalg.hpp"

namespace uqfm {

enum class RepFlavor { chevalley, equitable_ycol };

/// One finite-dimensional module, basis index i = 0..2s (top-left to
/// bottom-right).  The flavor selects which generator family carries the
/// matrices; elements of the other presentation are rejected rather than
/// silently converted, so the two bases stay independent witnesses.
template <class C>
struct Rep {
  int two_s = 0;
  RepFlavor flavor = RepFlavor::chevalley;
  int dim = 1;
  // chevalley flavor: K, K^{-1}, K^{1/2}, K^{-1/2}, E, F.
  Mat<C> k, ki, khalf, khalfi, e, f;
  // equitable_ycol flavor: X, X^{-1}, Y, Z.
  Mat<C> x, xi, y, z;
};

namespace detail {

/// [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}, written as a power sum so no
/// division by q - q^{-1} is ever performed.
template <class C>
C q_int(int n) {
  using Ops = CoefOps<C>;
  C r = Ops::zero();
  for (int t = 0; t < n; ++t) r += Ops::q_pow(n - 1 - 2 * t);
  return r;
}

}  // namespace detail

template <class C>
Rep<C> make_rep(int two_s, RepFlavor flavor) {
  if (two_s < 0) throw std::invalid_argument("make_rep: negative twoS");
  using Ops = CoefOps<C>;
  Rep<C> rep;
  rep.two_s = two_s;
  rep.flavor = flavor;
  const int n = two_s + 1;
  rep.dim = n;
  if (flavor == RepFlavor::chevalley) {
    rep.k = Mat<C>(n, n);
    rep.ki = Mat<C>(n, n);
    rep.khalf = Mat<C>(n, n);
    rep.khalfi = Mat<C>(n, n);
    rep.e = Mat<C>(n, n);
    rep.f = Mat<C>(n, n);
    for (int i = 0; i < n; ++i) {
      rep.k.set(i, i, Ops::q_pow(two_s - 2 * i));
      rep.ki.set(i, i, Ops::q_pow(2 * i - two_s));
      rep.khalf.set(i, i, Ops::p_pow(two_s - 2 * i));
      rep.khalfi.set(i, i, Ops::p_pow(2 * i - two_s));
    }
    for (int i = 1; i < n; ++i) {
      rep.e.set(i - 1, i, detail::q_int<C>(two_s - i + 1));
      rep.f.set(i, i - 1, detail::q_int<C>(i));
    }
  } else {
    rep.x = Mat<C>(n, n);
    rep.xi = Mat<C>(n, n);
    rep.y = Mat<C>(n, n);
    rep.z = Mat<C>(n, n);
    for (int i = 0; i < n; ++i) {
      rep.x.set(i, i, Ops::q_pow(two_s - 2 * i));
      rep.xi.set(i, i, Ops::q_pow(2 * i - two_s));
      rep.y.set(i, i, Ops::q_pow(2 * i - two_s));
      rep.z.set(i, i, Ops::q_pow(2 * i - two_s));
    }
    for (int i = 1; i < n; ++i) {
      rep.y.set(i, i - 1, Ops::q_pow(two_s) - Ops::q_pow(2 * i - 2 - two_s));
      rep.z.set(i - 1, i, Ops::q_pow(-two_s) - Ops::q_pow(2 * i - two_s));
    }
  }
  return rep;
}

/// Evaluate an element of any Cartan-weight presentation in a chevalley
/// module.  Two-Cartan elements factor through K1 -> K^{1/2}, K2 -> K^{-1/2}.
template <class C, Pres P>
Mat<C> eval_rep(const AlgElem<C, P>& elem, const Rep<C>& rep) {
  if (rep.flavor != RepFlavor::chevalley)
    throw std::invalid_argument("eval_rep: flavor mismatch");
  GenImages<Mat<C>> g;
  g.unit = Mat<C>::identity(rep.dim, CoefOps<C>::one());
  g.e = rep.e;
  g.f = rep.f;
  if constexpr (P == Pres::GL2) {
    g.k1 = rep.khalf;
    g.k1i = rep.khalfi;
    g.k2 = rep.khalfi;
    g.k2i = rep.khalf;
  } else if constexpr (P == Pres::SL2) {
    g.k1 = rep.k;
    g.k1i = rep.ki;
  } else {
    g.k1 = rep.khalf;
    g.k1i = rep.khalfi;
  }
  const int n = rep.dim;
  Mat<C> out = eval_elem(elem, g, [n](const C& c) {
    return Mat<C>::identity(n, CoefOps<C>::one()).scaled(c);
  });
  if (out.rows == 0) out = Mat<C>(n, n);
  return out;
}

/// Evaluate a formal word element in an equitable module.
template <class C>
Mat<C> eval_rep(const EqElem<C>& elem, const Rep<C>& rep) {
  if (rep.flavor != RepFlavor::equitable_ycol)
    throw std::invalid_argument("eval_rep: flavor mismatch");
  const Mat<C> unit = Mat<C>::identity(rep.dim, CoefOps<C>::one());
  Mat<C> sum(rep.dim, rep.dim);
  for (const auto& [word, c] : elem.t) {
    Mat<C> term = unit.scaled(c);
    for (char ch : word) {
      switch (ch) {
        case 'X': term = term * rep.x; break;
        case 'x': term = term * rep.xi; break;
        case 'Y': term = term * rep.y; break;
        case 'Z': term = term * rep.z; break;
        default: throw std::logic_error("eval_rep: unknown letter");
      }
    }
    sum += term;
  }
  return sum;
}

/// Flatten an operator matrix over the module, auxiliary indices outermost:
/// out(dim*i + r, dim*j + c) = eval(m(i,j))(r,c).
template <class C, class Elem>
Mat<C> rep_mat(const Mat<Elem>& m, const Rep<C>& rep) {
  const int n = rep.dim;
  Mat<C> r(m.rows * n, m.cols * n);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const Mat<C> b = eval_rep(m.get(i, j), rep);
      for (const auto& [rc, v] : b.t)
        r.add(n * i + rc.first, n * j + rc.second, v);
    }
  return r;
}

/// Same flattening for spectral operator matrices: Laurent coefficients are
/// evaluated entrywise, keeping the u/v exponents.
template <class C, class Elem>
Mat<Lpoly<C>> rep_mat_u(const Mat<Lpoly<Elem>>& m, const Rep<C>& rep) {
  const int n = rep.dim;
  Mat<Lpoly<C>> r(m.rows * n, m.cols * n);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      for (const auto& [deg, coef] : m.get(i, j).t) {
        const Mat<C> b = eval_rep(coef, rep);
        for (const auto& [rc, v] : b.t)
          r.add(n * i + rc.first, n * j + rc.second,
                Lpoly<C>::term(deg.first, deg.second, v));
      }
  return r;
}

/// Three-space exchange residual on aux (x) aux (x) module:
///   S12 K13 T12 K23 - K23 T12 K13 S12
/// with S, T acting on the two auxiliary spaces and each K of size 2*dim.
/// The scalar ring is generic so the same residual serves the constant case
/// and the spectral case (Laurent entries, K13 in u, K23 in v).
template <class R>
Mat<R> fm3_residual(const Mat<R>& s, const Mat<R>& t0, const Mat<R>& k1,
                    const Mat<R>& k2, int dim) {
  if (k1.rows != 2 * dim || k2.rows != 2 * dim)
    throw std::logic_error("fm3_residual: size mismatch");
  const std::vector<int> dims{2, 2, dim};
  const auto s12 = tensor_place(s, {0, 1}, dims);
  const auto t12 = tensor_place(t0, {0, 1}, dims);
  const auto k13 = tensor_place(k1, {0, 2}, dims);
  const auto k23 = tensor_place(k2, {1, 2}, dims);
  return s12 * k13 * t12 * k23 - k23 * t12 * k13 * s12;
}

}  // namespace uqfm
