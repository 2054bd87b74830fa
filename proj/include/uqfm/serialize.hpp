#pragma once
/// \file serialize.hpp
/// Exact JSON serialization for evaluated matrices, plus the registry of
/// exportable named objects.
///
/// Schema (one matrix per file):
///   {
///     "name": "KBX_u", "twoS": 1, "dim": 2, "variables": ["p", "u", "v"],
///     "entries": [[ [ {"u":1,"v":0,"num":[{"c":"1","e":[2,0,0,0,0,0]}],
///                      "den":[{"c":"1","e":[0,0,0,0,0,0]}]} , ... ] , ... ]]
///   }
/// entries[i][j] is the Laurent expansion of the (i,j) entry: one object per
/// u^a v^b term, whose coefficient is a reduced fraction of integer
/// polynomials in the six internal variables (p = q^{1/2}, k+, k-, e+, e-,
/// alpha), each polynomial a list of {integer-string, exponent-vector}
/// monomials.  Serialization is canonical (ordered maps throughout), so
/// export -> import -> export reproduces the file byte for byte.

#include <json.hpp>
#include <string>
#include <vector>

#include "uqfm/matalg.hpp"
#include "uqfm/reps.hpp"
#include "uqfm/spectral.hpp"

namespace uqfm {

using OrderedJson = nlohmann::ordered_json;

struct UnknownName : std::runtime_error {
  explicit UnknownName(const std::string& what) : std::runtime_error(what) {}
};

inline OrderedJson mpoly_to_json(const Mpoly& a) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [e, c] : a.t) {
    OrderedJson t;
    t["c"] = c.str();
    t["e"] = e;
    terms.push_back(std::move(t));
  }
  return terms;
}

inline Mpoly mpoly_from_json(const OrderedJson& j) {
  Mpoly a;
  for (const auto& t : j) {
    Expo e{};
    const auto& ev = t.at("e");
    if (ev.size() != static_cast<size_t>(kNumVars))
      throw std::runtime_error("matrix JSON: exponent vector of wrong size");
    for (int i = 0; i < kNumVars; ++i) e[i] = ev[i].get<std::int32_t>();
    a += Mpoly::monomial(Int(t.at("c").get<std::string>()), e);
  }
  return a;
}

inline OrderedJson matrix_to_json(const std::string& name, int two_s,
                                  const Mat<Lpoly<RatQ>>& m) {
  OrderedJson j;
  j["name"] = name;
  j["twoS"] = two_s;
  j["dim"] = two_s + 1;
  j["variables"] = {"p", "u", "v"};
  OrderedJson rows = OrderedJson::array();
  for (int i = 0; i < m.rows; ++i) {
    OrderedJson row = OrderedJson::array();
    for (int k = 0; k < m.cols; ++k) {
      OrderedJson entry = OrderedJson::array();
      for (const auto& [d, c] : m.get(i, k).t) {
        OrderedJson term;
        term["u"] = d.first;
        term["v"] = d.second;
        term["num"] = mpoly_to_json(c.num);
        term["den"] = mpoly_to_json(c.den);
        entry.push_back(std::move(term));
      }
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

inline Mat<Lpoly<RatQ>> matrix_from_json(const OrderedJson& j) {
  const auto& rows = j.at("entries");
  const int nr = static_cast<int>(rows.size());
  const int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat<Lpoly<RatQ>> m(nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc)
      throw std::runtime_error("matrix JSON: ragged entry grid");
    for (int k = 0; k < nc; ++k) {
      Lpoly<RatQ> x;
      for (const auto& term : rows[i][k]) {
        RatQ c(mpoly_from_json(term.at("num")),
               mpoly_from_json(term.at("den")));
        x.add_term(term.at("u").get<int>(), term.at("v").get<int>(), c);
      }
      if (!x.is_zero()) m.set(i, k, x);
    }
  }
  return m;
}

namespace detail {

inline Mat<Lpoly<RatQ>> lift_const(const Mat<RatQ>& m) {
  return m.template map<Lpoly<RatQ>>(
      [](const RatQ& c) { return Lpoly<RatQ>::constant(c); });
}

}  // namespace detail

/// Exportable object names.  Constants ignore the spin; operator matrices
/// are evaluated in the spin-s module (dimension twoS+1) and laid out in
/// aux-outer blocks: entry (n*i + r, n*j + c) is row r, column c of the
/// module-level block rho(K_{ij}).
inline const std::vector<std::string>& export_object_names() {
  static const std::vector<std::string> names{
      "R",    "R-inv", "R21", "R21-inv", "P",     "U",    "R0",
      "R0-inv", "D",   "L+",  "L-",      "Kc+",   "Kc-",  "Ke+",
      "Ke-",  "KB",    "KX",  "R_u",     "L_u",   "Kc_u", "Ke_u",
      "KBX_u"};
  return names;
}

inline Mat<Lpoly<RatQ>> export_object(const std::string& name, int two_s) {
  using C = RatQ;
  if (two_s < 0) throw UnknownName("spin out of range: twoS must be >= 0");
  // Spin-independent scalar matrices on the auxiliary legs.
  if (name == "R") return detail::lift_const(mat_R<C>());
  if (name == "R-inv") return detail::lift_const(mat_R_inv<C>());
  if (name == "R21") return detail::lift_const(mat_R21<C>());
  if (name == "R21-inv") return detail::lift_const(mat_R21_inv<C>());
  if (name == "P") return detail::lift_const(mat_P<C>());
  if (name == "U") return detail::lift_const(mat_U<C>());
  if (name == "R0") return detail::lift_const(mat_R0<C>());
  if (name == "R0-inv") return detail::lift_const(mat_R0_inv<C>());
  if (name == "D") return detail::lift_const(mat_D<C>());
  if (name == "R_u") return mat_r_spec<C>(1, -1);
  // Operator-valued matrices evaluated in the spin-s module.
  const auto chev = make_rep<C>(two_s, RepFlavor::chevalley);
  const auto eqr = make_rep<C>(two_s, RepFlavor::equitable_ycol);
  if (name == "L+") return detail::lift_const(rep_mat(lop_plus<C, Pres::SL2H>(), chev));
  if (name == "L-") return detail::lift_const(rep_mat(lop_minus<C, Pres::SL2H>(), chev));
  if (name == "Kc+") return detail::lift_const(rep_mat(kop_c_plus<C>(), chev));
  if (name == "Kc-") return detail::lift_const(rep_mat(kop_c_minus<C>(), chev));
  if (name == "Ke+") return detail::lift_const(rep_mat(kop_e_plus<C>(), eqr));
  if (name == "Ke-") return detail::lift_const(rep_mat(kop_e_minus<C>(), eqr));
  if (name == "KB") return detail::lift_const(rep_mat(kop_borel<C>(), eqr));
  if (name == "KX") return detail::lift_const(rep_mat(kop_x<C>(), eqr));
  if (name == "L_u") return rep_mat_u(lax_u<C>(), chev);
  if (name == "Kc_u") return rep_mat_u(kop_c_u<C>(), chev);
  if (name == "Ke_u") return rep_mat_u(kop_e_u<C>(), eqr);
  if (name == "KBX_u") return rep_mat_u(kop_bx_u<C>(), eqr);
  std::string known;
  for (const auto& n : export_object_names()) known += " " + n;
  throw UnknownName("unknown object '" + name + "'; known objects:" + known);
}

}  // namespace uqfm
