#include "trijac/algebra.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "trijac/errors.hpp"
#include "trijac/kernels.hpp"
#include "trijac/triangle.hpp"

namespace trijac {

namespace {

Exec exec_of(bool parallel) { return parallel ? Exec::Parallel : Exec::Serial; }

Rational quot(const Rational& num, const Rational& den, const char* where) {
  if (sgn(den) == 0) throw DegenerateDenominator(std::string("vanishing denominator in ") + where);
  return num / den;
}

template <class Op>
Op comm(const Op& a, const Op& b) { return a * b - b * a; }

template <class Op>
Op acomm(const Op& a, const Op& b) { return a * b + b * a; }

template <class Op>
struct RelationDef {
  std::string id;
  std::string description;
  std::function<Op(const Realization<Op>&)> residual;
};

// All relations of the algebra as residual operators (zero when the relation holds).
template <class Op>
std::vector<RelationDef<Op>> relation_list(const TriParams<Rational>& p) {
  using R = Realization<Op>;
  const Rational a = p.a, b = p.b, c = p.c, s = p.sum();
  const Rational s1s3 = (s + 1) * (s + 3);
  std::vector<RelationDef<Op>> out;
  auto def = [&](std::string id, std::string desc, std::function<Op(const R&)> f) {
    out.push_back({std::move(id), std::move(desc), std::move(f)});
  };
  auto Q = [](const R& r) { return r.X1 + r.X3 - r.I; };

  def("[L,L1]", "[L,L1] = 0", [](const R& r) { return comm(r.L, r.L1); });
  def("[L,L3]", "[L,L3] = 0", [](const R& r) { return comm(r.L, r.L3); });
  def("[L1,X1]", "[L1,X1] = 0", [](const R& r) { return comm(r.L1, r.X1); });
  def("[L3,X3]", "[L3,X3] = 0", [](const R& r) { return comm(r.L3, r.X3); });
  def("[X1,X3]", "[X1,X3] = 0", [](const R& r) { return comm(r.X1, r.X3); });

  def("LX1.L", "[[L,X1],L] = 2{X1,L} - 2L + 2L1 - (s+1)(s+3)X1 + (s+1)(a+1)",
      [=](const R& r) {
        return comm(comm(r.L, r.X1), r.L) -
               (acomm(r.X1, r.L) * Rational(2) - r.L * Rational(2) + r.L1 * Rational(2) -
                r.X1 * s1s3 + r.I * Rational((s + 1) * (a + 1)));
      });
  def("LX1.L1", "[[L,X1],L1] = 0", [](const R& r) { return comm(comm(r.L, r.X1), r.L1); });
  def("LX1.L3", "[[L,X1],L3] = {X1,L+L3} + {X3-1,L-L1} - (s+1)(a+1)(X1+X3-1) - (s+1)(b+1)X1",
      [=](const R& r) {
        return comm(comm(r.L, r.X1), r.L3) -
               (acomm(r.X1, r.L + r.L3) + acomm(r.X3 - r.I, r.L - r.L1) -
                Q(r) * Rational((s + 1) * (a + 1)) - r.X1 * Rational((s + 1) * (b + 1)));
      });
  def("LX1.X1", "[[L,X1],X1] = -2X1^2 + 2X1", [](const R& r) {
    return comm(comm(r.L, r.X1), r.X1) - (r.X1 * r.X1 * Rational(-2) + r.X1 * Rational(2));
  });
  def("LX1.X3", "[[L,X1],X3] = -2X1X3", [](const R& r) {
    return comm(comm(r.L, r.X1), r.X3) + r.X1 * r.X3 * Rational(2);
  });
  def("LX3.L", "[[L,X3],L] = 2{X3,L} - 2L + 2L3 - (s+1)(s+3)X3 + (s+1)(c+1)",
      [=](const R& r) {
        return comm(comm(r.L, r.X3), r.L) -
               (acomm(r.X3, r.L) * Rational(2) - r.L * Rational(2) + r.L3 * Rational(2) -
                r.X3 * s1s3 + r.I * Rational((s + 1) * (c + 1)));
      });
  def("LX3.L1", "[[L,X3],L1] = {X1-1,L-L3} + {X3,L+L1} - (s+1)(c+1)(X1+X3-1) - (s+1)(b+1)X3",
      [=](const R& r) {
        return comm(comm(r.L, r.X3), r.L1) -
               (acomm(r.X1 - r.I, r.L - r.L3) + acomm(r.X3, r.L + r.L1) -
                Q(r) * Rational((s + 1) * (c + 1)) - r.X3 * Rational((s + 1) * (b + 1)));
      });
  def("LX3.L3", "[[L,X3],L3] = 0", [](const R& r) { return comm(comm(r.L, r.X3), r.L3); });
  def("LX3.X1", "[[L,X3],X1] = [[L,X1],X3]", [](const R& r) {
    return comm(comm(r.L, r.X3), r.X1) - comm(comm(r.L, r.X1), r.X3);
  });
  def("LX3.X3", "[[L,X3],X3] = -2X3^2 + 2X3", [](const R& r) {
    return comm(comm(r.L, r.X3), r.X3) - (r.X3 * r.X3 * Rational(-2) + r.X3 * Rational(2));
  });
  def("L1L3.L", "[[L1,L3],L] = 0", [](const R& r) { return comm(comm(r.L1, r.L3), r.L); });
  def("L1L3.L1",
      "[[L1,L3],L1] = 2{L1,L3} + 2L1^2 - 2L1L + (b+c)(b+1)(L-L1-L3) - (b+c)(c+1)L3 - (b-c)(a+1)L1",
      [=](const R& r) {
        return comm(comm(r.L1, r.L3), r.L1) -
               (acomm(r.L1, r.L3) * Rational(2) + r.L1 * r.L1 * Rational(2) -
                r.L1 * r.L * Rational(2) + (r.L - r.L1 - r.L3) * Rational((b + c) * (b + 1)) -
                r.L3 * Rational((b + c) * (c + 1)) - r.L1 * Rational((b - c) * (a + 1)));
      });
  def("L1L3.L3",
      "[[L1,L3],L3] = -2{L1,L3} - 2L3^2 + 2L3L - (a+b)(b+1)(L-L1-L3) + (a+b)(a+1)L1 + (b-a)(c+1)L3",
      [=](const R& r) {
        return comm(comm(r.L1, r.L3), r.L3) -
               (acomm(r.L1, r.L3) * Rational(-2) - r.L3 * r.L3 * Rational(2) +
                r.L3 * r.L * Rational(2) - (r.L - r.L1 - r.L3) * Rational((a + b) * (b + 1)) +
                r.L1 * Rational((a + b) * (a + 1)) + r.L3 * Rational((b - a) * (c + 1)));
      });
  def("L1L3.X1",
      "[[L1,L3],X1] = -{X1-1,L-L1-L3} - {X3,L-L1} + (a+1)(b+1)X3 + (a+1)(c+1)(X1+X3-1)",
      [=](const R& r) {
        return comm(comm(r.L1, r.L3), r.X1) -
               (-acomm(r.X1 - r.I, r.L - r.L1 - r.L3) - acomm(r.X3, r.L - r.L1) +
                r.X3 * Rational((a + 1) * (b + 1)) + Q(r) * Rational((a + 1) * (c + 1)));
      });
  def("L1L3.X3",
      "[[L1,L3],X3] = {X1,L-L3} + {X3-1,L-L1-L3} - (c+1)(a+1)(X1+X3-1) - (c+1)(b+1)X1",
      [=](const R& r) {
        return comm(comm(r.L1, r.L3), r.X3) -
               (acomm(r.X1, r.L - r.L3) + acomm(r.X3 - r.I, r.L - r.L1 - r.L3) -
                Q(r) * Rational((c + 1) * (a + 1)) - r.X1 * Rational((c + 1) * (b + 1)));
      });
  def("L1X3.L", "[[L1,X3],L] = [[L,X3],L1]", [](const R& r) {
    return comm(comm(r.L1, r.X3), r.L) - comm(comm(r.L, r.X3), r.L1);
  });
  def("L1X3.L1", "[[L1,X3],L1] = 2{X3,L1} + {X1,L1} - 2L1 - (b+c)(b+c+2)X3 + (b+c)(c+1)(1-X1)",
      [=](const R& r) {
        return comm(comm(r.L1, r.X3), r.L1) -
               (acomm(r.X3, r.L1) * Rational(2) + acomm(r.X1, r.L1) - r.L1 * Rational(2) -
                r.X3 * Rational((b + c) * (b + c + 2)) + (r.I - r.X1) * Rational((b + c) * (c + 1)));
      });
  def("L1X3.L3", "[[L1,X3],L3] = [[L1,L3],X3]", [](const R& r) {
    return comm(comm(r.L1, r.X3), r.L3) - comm(comm(r.L1, r.L3), r.X3);
  });
  def("L1X3.X1", "[[L1,X3],X1] = 0", [](const R& r) { return comm(comm(r.L1, r.X3), r.X1); });
  def("L1X3.X3", "[[L1,X3],X3] = -2X3^2 + 2(1-X1)X3", [](const R& r) {
    return comm(comm(r.L1, r.X3), r.X3) -
           (r.X3 * r.X3 * Rational(-2) + (r.I - r.X1) * r.X3 * Rational(2));
  });
  def("L3X1.L", "[[L3,X1],L] = [[L,X1],L3]", [](const R& r) {
    return comm(comm(r.L3, r.X1), r.L) - comm(comm(r.L, r.X1), r.L3);
  });
  def("L3X1.L1", "[[L3,X1],L1] = -[[L1,L3],X1]", [](const R& r) {
    return comm(comm(r.L3, r.X1), r.L1) + comm(comm(r.L1, r.L3), r.X1);
  });
  def("L3X1.L3", "[[L3,X1],L3] = {2X1+X3-1,L3} - (a+b)(a+1)(X1+X3-1) - (a+b)(b+1)X1",
      [=](const R& r) {
        return comm(comm(r.L3, r.X1), r.L3) -
               (acomm(r.X1 * Rational(2) + r.X3 - r.I, r.L3) -
                Q(r) * Rational((a + b) * (a + 1)) - r.X1 * Rational((a + b) * (b + 1)));
      });
  def("L3X1.X1", "[[L3,X1],X1] = -2X1(X1+X3-1)", [=](const R& r) {
    return comm(comm(r.L3, r.X1), r.X1) + r.X1 * Q(r) * Rational(2);
  });
  def("L3X1.X3", "[[L3,X1],X3] = 0", [](const R& r) { return comm(comm(r.L3, r.X1), r.X3); });
  def("identity", "[L1,X3] - [L,X3] = [L,X1] - [L3,X1]", [](const R& r) {
    return (comm(r.L1, r.X3) - comm(r.L, r.X3)) - (comm(r.L, r.X1) - comm(r.L3, r.X1));
  });
  def("LX1.LX3.a", "[[L,X1],[L,X3]] = 2[L1,X3] - 2[L,X3] + 2[L,X3]X1 - 2[L,X1]X3",
      [](const R& r) {
        const Op lx1 = comm(r.L, r.X1), lx3 = comm(r.L, r.X3);
        return comm(lx1, lx3) - (comm(r.L1, r.X3) * Rational(2) - lx3 * Rational(2) +
                                 lx3 * r.X1 * Rational(2) - lx1 * r.X3 * Rational(2));
      });
  def("LX1.LX3.b", "[[L,X1],[L,X3]] = 2[L,X1] - 2[L3,X1] + 2[L,X3]X1 - 2[L,X1]X3",
      [](const R& r) {
        const Op lx1 = comm(r.L, r.X1), lx3 = comm(r.L, r.X3);
        return comm(lx1, lx3) - (lx1 * Rational(2) - comm(r.L3, r.X1) * Rational(2) +
                                 lx3 * r.X1 * Rational(2) - lx1 * r.X3 * Rational(2));
      });

  // Relations among L1, L2, X1, X2 obtained from the coordinate reflection.
  def("[L2,X2]", "[L2,X2] = 0", [](const R& r) { return comm(r.L2, r.X2); });
  def("L1X2.L1", "[[L1,X2],L1] = 2{X2,L1} + {X1,L1} - 2L1 - (b+c)(b+c+2)X2 + (b+c)(b+1)(1-X1)",
      [=](const R& r) {
        return comm(comm(r.L1, r.X2), r.L1) -
               (acomm(r.X2, r.L1) * Rational(2) + acomm(r.X1, r.L1) - r.L1 * Rational(2) -
                r.X2 * Rational((b + c) * (b + c + 2)) + (r.I - r.X1) * Rational((b + c) * (b + 1)));
      });
  def("L1X2.X2", "[[L1,X2],X2] = -2X2^2 + 2(1-X1)X2", [](const R& r) {
    return comm(comm(r.L1, r.X2), r.X2) -
           (r.X2 * r.X2 * Rational(-2) + (r.I - r.X1) * r.X2 * Rational(2));
  });
  def("L2X1.L2", "[[L2,X1],L2] = {2X1+X2-1,L2} - (a+c)(a+1)(X1+X2-1) - (a+c)(c+1)X1",
      [=](const R& r) {
        return comm(comm(r.L2, r.X1), r.L2) -
               (acomm(r.X1 * Rational(2) + r.X2 - r.I, r.L2) -
                (r.X1 + r.X2 - r.I) * Rational((a + c) * (a + 1)) -
                r.X1 * Rational((a + c) * (c + 1)));
      });
  def("L2X1.X1", "[[L2,X1],X1] = -2X1(X1+X2-1)", [](const R& r) {
    return comm(comm(r.L2, r.X1), r.X1) + r.X1 * (r.X1 + r.X2 - r.I) * Rational(2);
  });
  def("LX2.L", "[[L,X2],L] = 2{X2,L} - 2L + 2L2 - (s+1)(s+3)X2 + (s+1)(b+1)",
      [=](const R& r) {
        return comm(comm(r.L, r.X2), r.L) -
               (acomm(r.X2, r.L) * Rational(2) - r.L * Rational(2) + r.L2 * Rational(2) -
                r.X2 * s1s3 + r.I * Rational((s + 1) * (b + 1)));
      });
  def("LX2.X2", "[[L,X2],X2] = -2X2^2 + 2X2", [](const R& r) {
    return comm(comm(r.L, r.X2), r.X2) - (r.X2 * r.X2 * Rational(-2) + r.X2 * Rational(2));
  });
  def("L1L2.L1",
      "[[L1,L2],L1] = 2{L1,L2} + 2L1^2 - 2L1L + (b+c)(c+1)(L-L1-L2) - (b+c)(b+1)L2 - (c-b)(a+1)L1",
      [=](const R& r) {
        return comm(comm(r.L1, r.L2), r.L1) -
               (acomm(r.L1, r.L2) * Rational(2) + r.L1 * r.L1 * Rational(2) -
                r.L1 * r.L * Rational(2) + (r.L - r.L1 - r.L2) * Rational((b + c) * (c + 1)) -
                r.L2 * Rational((b + c) * (b + 1)) - r.L1 * Rational((c - b) * (a + 1)));
      });
  def("L1L2.L2",
      "[[L1,L2],L2] = -2{L1,L2} - 2L2^2 + 2L2L - (a+c)(c+1)(L-L1-L2) + (a+c)(a+1)L1 + (c-a)(b+1)L2",
      [=](const R& r) {
        return comm(comm(r.L1, r.L2), r.L2) -
               (acomm(r.L1, r.L2) * Rational(-2) - r.L2 * r.L2 * Rational(2) +
                r.L2 * r.L * Rational(2) - (r.L - r.L1 - r.L2) * Rational((a + c) * (c + 1)) +
                r.L1 * Rational((a + c) * (a + 1)) + r.L2 * Rational((c - a) * (b + 1)));
      });
  return out;
}

std::size_t residual_size(const PolyDiffOp& op) { return op.monomial_count(); }

template <class Op, class Count>
std::vector<RelationReport> run_relations(const std::vector<RelationDef<Op>>& defs,
                                          const Realization<Op>& r, bool parallel, Count count) {
  std::vector<RelationReport> out(defs.size());
  parallel_for(defs.size(), exec_of(parallel), [&](std::size_t i) {
    const Op res = defs[i].residual(r);
    const std::size_t nz = count(res);
    out[i] = {defs[i].id, defs[i].description, nz == 0, static_cast<double>(nz),
              nz == 0 ? "exact" : std::to_string(nz) + " nonzero residual terms"};
  });
  return out;
}

RelationReport exact_report(std::string id, std::string desc, std::size_t nz, std::string scope) {
  std::string detail = nz == 0 ? "exact" : std::to_string(nz) + " nonzero residual terms";
  if (!scope.empty()) detail += " (" + scope + ")";
  return {std::move(id), std::move(desc), nz == 0, static_cast<double>(nz), std::move(detail)};
}

// Applies the residual operator to each polynomial; counts surviving monomials.
std::size_t annihilates(const PolyDiffOp& res, const std::vector<BivarPoly>& polys) {
  std::size_t nz = 0;
  for (const auto& f : polys) nz += res.apply(f).size();
  return nz;
}

std::vector<BivarPoly> family_at_k(D3Element g, int k, int nmax, const TriParams<Rational>& p) {
  std::vector<BivarPoly> out;
  for (int n = k; n <= nmax; ++n) out.push_back(tri_family_poly(g, {n, k}, p));
  return out;
}

}  // namespace

DiffRealization build_diff_realization(const TriParams<Rational>& p) {
  const Rational a = p.a, b = p.b, c = p.c, s = p.sum();
  const BivarPoly one(Rational(1));
  const BivarPoly x = BivarPoly::x(), y = BivarPoly::y();
  DiffRealization r;
  r.I = PolyDiffOp::identity();
  r.X1 = PolyDiffOp::multiply(x);
  r.X3 = PolyDiffOp::multiply(one - x - y);
  r.X2 = PolyDiffOp::multiply(y);

  r.L1 = PolyDiffOp::term(0, 1, (one - x) * Rational(b + 1) - y * Rational(b + c + 2)) +
         PolyDiffOp::term(0, 2, y * (one - x - y));

  const BivarPoly u = y * Rational(a + 1) - x * Rational(b + 1);
  const BivarPoly xy = x * y;
  r.L3 = PolyDiffOp::term(1, 0, u) + PolyDiffOp::term(0, 1, -u) + PolyDiffOp::term(2, 0, xy) +
         PolyDiffOp::term(0, 2, xy) + PolyDiffOp::term(1, 1, xy * Rational(-2));

  r.L = PolyDiffOp::term(2, 0, x * (one - x)) + PolyDiffOp::term(0, 2, y * (one - y)) +
        PolyDiffOp::term(1, 1, xy * Rational(-2)) +
        PolyDiffOp::term(1, 0, one * Rational(a + 1) - x * Rational(s + 3)) +
        PolyDiffOp::term(0, 1, one * Rational(b + 1) - y * Rational(s + 3));
  r.L2 = r.L - r.L1 - r.L3;
  return r;
}

LatticeRealization build_lattice_realization(int N, const TriParams<Rational>& p) {
  const Rational a = p.a, b = p.b, c = p.c, s = p.sum(), bc = p.b + p.c;
  LatticeRealization r;
  r.I = LatticeOp::identity(N);
  r.X1 = LatticeOp(N);
  r.X3 = LatticeOp(N);
  r.L1 = LatticeOp(N);
  r.L3 = LatticeOp(N);
  r.L = LatticeOp(N);
  const Rational half(1, 2);

  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Rational nn(n), kk(k);
      // Only coefficients whose target label exists are formed, so removable
      // edge singularities never reach a division.
      auto want = [&](int n2, int k2) { return r.I.in_range(n2, k2); };
      const Rational dn1 = 2 * nn + s + 1, dn2 = 2 * nn + s + 2, dn3 = 2 * nn + s + 3;
      const Rational dk0 = 2 * kk + bc, dk1 = 2 * kk + bc + 1, dk2 = 2 * kk + bc + 2;

      r.L.add(n, k, n, k, Rational(-nn * (nn + s + 2)));
      r.L1.add(n, k, n, k, Rational(-kk * (kk + bc + 1)));

      // X1
      Rational x1up, x1mid, x1down;
      if (want(n + 1, k)) x1up = quot(-(nn - kk + 1) * (nn + kk + s + 2), dn2 * dn3, "X1");
      x1mid = half * (1 - quot((2 * kk + s + 1) * (2 * kk - a + b + c + 1), dn1 * dn3, "X1"));
      if (want(n - 1, k)) x1down = quot(-(nn - kk + a) * (nn + kk + bc + 1), dn1 * dn2, "X1");
      r.X1.add(n, k, n + 1, k, x1up);
      r.X1.add(n, k, n, k, x1mid);
      r.X1.add(n, k, n - 1, k, x1down);

      // X3 = (1 - X1)/2 + terms changing k
      r.X3.add(n, k, n + 1, k, -x1up / 2);
      r.X3.add(n, k, n, k, half - x1mid / 2);
      r.X3.add(n, k, n - 1, k, -x1down / 2);
      const Rational up = (kk + 1) * (kk + bc + 1);
      const Rational dn = (kk + b) * (kk + c);
      const Rational cb = c * c - b * b;
      if (want(n + 1, k + 1))
        r.X3.add(n, k, n + 1, k + 1,
                 quot(up * (nn + kk + s + 2) * (nn + kk + s + 3), dk1 * dk2 * dn2 * dn3, "X3"));
      if (want(n, k + 1))
        r.X3.add(n, k, n, k + 1,
                 quot(2 * up * (nn - kk + a) * (nn + kk + s + 2), dk1 * dk2 * dn1 * dn3, "X3"));
      if (want(n - 1, k + 1))
        r.X3.add(n, k, n - 1, k + 1,
                 quot(up * (nn - kk + a - 1) * (nn - kk + a), dk1 * dk2 * dn1 * dn2, "X3"));
      if (sgn(cb) != 0) {
        if (want(n + 1, k))
          r.X3.add(n, k, n + 1, k,
                   quot(cb * (nn - kk + 1) * (nn + kk + s + 2), 2 * dk0 * dk2 * dn2 * dn3, "X3"));
        r.X3.add(n, k, n, k,
                 cb / 4 *
                     (quot(1, dk0 * dk2, "X3") + quot(1, dn1 * dn3, "X3") +
                      quot(1 - a * a, dk0 * dk2 * dn1 * dn3, "X3")));
        if (want(n - 1, k))
          r.X3.add(n, k, n - 1, k,
                   quot(cb * (nn - kk + a) * (nn + kk + bc + 1), 2 * dk0 * dk2 * dn1 * dn2, "X3"));
      }
      if (want(n + 1, k - 1))
        r.X3.add(n, k, n + 1, k - 1,
                 quot(dn * (nn - kk + 1) * (nn - kk + 2), dk0 * dk1 * dn2 * dn3, "X3"));
      if (want(n, k - 1))
        r.X3.add(n, k, n, k - 1,
                 quot(2 * dn * (nn - kk + 1) * (nn + kk + bc + 1), dk0 * dk1 * dn1 * dn3, "X3"));
      if (want(n - 1, k - 1))
        r.X3.add(n, k, n - 1, k - 1,
                 quot(dn * (nn + kk + bc) * (nn + kk + bc + 1), dk0 * dk1 * dn1 * dn2, "X3"));

      // L3
      if (want(n, k - 1))
        r.L3.add(n, k, n, k - 1, quot(dn * (nn - kk + 1) * (nn + kk + bc + 1), dk0 * dk1, "L3"));
      if (want(n, k + 1))
        r.L3.add(n, k, n, k + 1, quot(up * (nn - kk + a) * (nn + kk + s + 2), dk1 * dk2, "L3"));
      Rational diag = (kk - nn) * (nn - kk + a + b + 1);
      if (k > 0) diag -= quot(kk * (kk + c) * (nn - kk + 1) * (nn - kk + a + 1), dk0, "L3");
      if (k < n) diag += quot((kk + 1) * (kk + c + 1) * (nn - kk) * (nn - kk + a), dk2, "L3");
      r.L3.add(n, k, n, k, diag);
    }
  }
  r.X2 = r.I - r.X1 - r.X3;
  r.L2 = r.L - r.L1 - r.L3;
  return r;
}

std::vector<RelationReport> verify_appendix_a(const TriParams<Rational>& p, bool parallel) {
  const DiffRealization r = build_diff_realization(p);
  return run_relations(relation_list<PolyDiffOp>(p), r, parallel,
                       [](const PolyDiffOp& op) { return residual_size(op); });
}

std::vector<RelationReport> verify_appendix_a_lattice(int N, const TriParams<Rational>& p,
                                                      bool parallel) {
  const LatticeRealization r = build_lattice_realization(N + 3, p);
  auto out = run_relations(relation_list<LatticeOp>(p), r, parallel,
                           [N](const LatticeOp& op) { return op.nonzero_count(N); });
  for (auto& rep : out) rep.detail += " on rows n <= " + std::to_string(N);
  return out;
}

std::vector<RelationReport> verify_printed_variants(const TriParams<Rational>& p, int nmax) {
  const Rational a = p.a, b = p.b, c = p.c, s = p.sum();
  const DiffRealization r = build_diff_realization(p);
  std::vector<RelationReport> out;

  const PolyDiffOp printed =
      comm(comm(r.L1, r.L2), r.L1) -
      (acomm(r.L1, r.L2) * Rational(2) + r.L1 * r.L1 * Rational(2) - r.L1 * r.L * Rational(2) +
       (r.L - r.L1 - r.L2) * Rational((b + c) * (c + 1)) - r.L2 * Rational((b + c) * (c + 1)) -
       r.L1 * Rational((c - b) * (a + 1)));
  out.push_back(exact_report("L1L2.L1-printed",
                             "[[L1,L2],L1] with -(b+c)(c+1)L2 in place of -(b+c)(b+1)L2",
                             printed.monomial_count(), ""));

  const PolyDiffOp lx1 = comm(r.L, r.X1), lx3 = comm(r.L, r.X3);
  const PolyDiffOp swapped = comm(lx1, lx3) - (lx1 * Rational(2) - comm(r.L3, r.X1) * Rational(2) +
                                               lx1 * r.X3 * Rational(2) - lx3 * r.X1 * Rational(2));
  out.push_back(exact_report("LX1.LX3.b-printed",
                             "[[L,X1],[L,X3]] with +2[L,X1]X3 - 2[L,X3]X1 as the ordered tail",
                             swapped.monomial_count(), ""));

  std::size_t nz = 0;
  for (int k = 1; k <= nmax; ++k) {
    const PolyDiffOp K1 = r.L + r.I * Rational(k * (k + s));
    const auto res = rank1_residuals(K1, r.X2, b, Rational(2 * k + a + c + 1), r.I);
    nz += annihilates(res.first, family_at_k(D3Element::sigma, k, nmax, p));
  }
  out.push_back(exact_report("CL2-printed-shift",
                             "rank-one relations for (L + k(k+a+b+c), X2) on the sigma family",
                             nz, "k = 1.." + std::to_string(nmax)));
  return out;
}

std::vector<RelationReport> verify_rank1_subalgebras(const TriParams<Rational>& p, int nmax,
                                                     bool parallel) {
  const Rational a = p.a, b = p.b, c = p.c, s = p.sum();
  const DiffRealization d = build_diff_realization(p);
  const LatticeRealization lt = build_lattice_realization(nmax + 3, p);
  const LatticeRealization lb = build_lattice_realization(nmax, p);
  const std::string rows = "rows n <= " + std::to_string(nmax);

  using Task = std::function<RelationReport()>;
  std::vector<Task> tasks;

  struct Cleared {
    std::string id, desc;
    std::function<std::array<PolyDiffOp, 3>(const DiffRealization&)> dops;
    std::function<std::array<LatticeOp, 3>(const LatticeRealization&)> lops;
    Rational alpha, beta;
  };
  const std::vector<Cleared> cleared = {
      {"CX1", "(L1, X3/(X1-1)) rank-one Jacobi, alpha=b, beta=c",
       [](const DiffRealization& r) {
         return std::array{r.L1, r.X3 + r.X1 - r.I, r.X1 - r.I};
       },
       [](const LatticeRealization& r) {
         return std::array{r.L1, r.X3 + r.X1 - r.I, r.X1 - r.I};
       },
       b, c},
      {"CX3", "(L3, X1/(X3-1)) rank-one Jacobi, alpha=b, beta=a",
       [](const DiffRealization& r) {
         return std::array{r.L3, r.X1 + r.X3 - r.I, r.X3 - r.I};
       },
       [](const LatticeRealization& r) {
         return std::array{r.L3, r.X1 + r.X3 - r.I, r.X3 - r.I};
       },
       b, a},
      {"CX1-L1X2", "(L1, X3/(1-X1)) rank-one Jacobi, alpha=c, beta=b",
       [](const DiffRealization& r) { return std::array{r.L1, r.X3, r.I - r.X1}; },
       [](const LatticeRealization& r) { return std::array{r.L1, r.X3, r.I - r.X1}; }, c, b},
      {"CX2-L2X1", "(L2, X3/(1-X2)) rank-one Jacobi, alpha=c, beta=a",
       [](const DiffRealization& r) { return std::array{r.L2, r.X3, r.I - r.X2}; },
       [](const LatticeRealization& r) { return std::array{r.L2, r.X3, r.I - r.X2}; }, c, a},
  };
  for (const auto& cl : cleared) {
    tasks.push_back([&d, cl] {
      auto ops = cl.dops(d);
      auto res = rank1_cleared_residuals(ops[0], ops[1], ops[2], cl.alpha, cl.beta);
      return exact_report(cl.id, cl.desc + " (differential)",
                          res.first.monomial_count() + res.second.monomial_count(), "");
    });
    tasks.push_back([&lt, cl, nmax, rows] {
      auto ops = cl.lops(lt);
      auto res = rank1_cleared_residuals(ops[0], ops[1], ops[2], cl.alpha, cl.beta);
      return exact_report(cl.id + "-lattice", cl.desc + " (lattice)",
                          res.first.nonzero_count(nmax) + res.second.nonzero_count(nmax), rows);
    });
  }

  // Centralizers of X1, X3, X2 inside the L-eigenspaces: K1 = L + k(k+s+2).
  struct Eigen1 {
    std::string id, desc;
    D3Element family;
    int which;  // 1: X1, 3: X3, 2: X2
    std::function<Rational(int)> alpha, beta;
  };
  const std::vector<Eigen1> eig = {
      {"CL1", "(L + k(k+s+2), X1) rank-one Jacobi on the e family, alpha=a, beta=2k+b+c+1",
       D3Element::e, 1, [a](int) { return a; },
       [b, c](int k) { return Rational(2 * k + b + c + 1); }},
      {"CL3", "(L + k(k+s+2), X3) rank-one Jacobi on the pi family, alpha=c, beta=2k+a+b+1",
       D3Element::pi, 3, [c](int) { return c; },
       [a, b](int k) { return Rational(2 * k + a + b + 1); }},
      {"CL2", "(L + k(k+s+2), X2) rank-one Jacobi on the sigma family, alpha=b, beta=2k+a+c+1",
       D3Element::sigma, 2, [b](int) { return b; },
       [a, c](int k) { return Rational(2 * k + a + c + 1); }},
  };
  for (const auto& e : eig) {
    tasks.push_back([&d, &p, e, nmax, s] {
      const PolyDiffOp& K2 = e.which == 1 ? d.X1 : (e.which == 3 ? d.X3 : d.X2);
      std::size_t nz = 0;
      for (int k = 0; k <= nmax; ++k) {
        const PolyDiffOp K1 = d.L + d.I * Rational(k * (k + s + 2));
        auto res = rank1_residuals(K1, K2, e.alpha(k), e.beta(k), d.I);
        const auto polys = family_at_k(e.family, k, nmax, p);
        nz += annihilates(res.first, polys) + annihilates(res.second, polys);
      }
      return exact_report(e.id, e.desc, nz, "degrees n <= " + std::to_string(nmax));
    });
  }
  tasks.push_back([&lt, nmax, a, b, c, s, rows] {
    std::size_t nz = 0;
    for (int k = 0; k <= nmax; ++k) {
      const LatticeOp K1 = lt.L + lt.I * Rational(k * (k + s + 2));
      auto res = rank1_residuals(K1, lt.X1, a, Rational(2 * k + b + c + 1), lt.I);
      nz += res.first.nonzero_count(nmax, k) + res.second.nonzero_count(nmax, k);
    }
    return exact_report("CL1-lattice", "(L + k(k+s+2), X1) rank-one Jacobi on the rows of fixed k",
                        nz, rows);
  });

  // Racah subalgebras on the blocks of fixed n.
  struct RacahBlock {
    std::string id, desc;
    bool sigma;  // (L1,L2) instead of (L1,L3)
  };
  for (const RacahBlock& blk : {RacahBlock{"CL-L1L3", "(L1, L3) Racah algebra on each block of fixed n", false},
                               RacahBlock{"CL-L1L2", "(L1, L2) Racah algebra on each block of fixed n", true}}) {
    tasks.push_back([&lb, blk, nmax, a, b, c, s] {
      std::size_t nz = 0, mismatch = 0;
      const Rational p1 = blk.sigma ? c : b;  // b <-> c for the sigma pair
      const Rational p2 = blk.sigma ? b : c;
      for (int n = 0; n <= nmax; ++n) {
        const Rational Lv = -Rational(n) * (n + s + 2);
        RacahStructure<Rational> st;
        st.xi = -(p1 + p2) * (p1 + 1) - (p1 - p2) * (a + 1) - 2 * Lv;
        st.eta1 = -(b + c) * (b + c + 2);
        st.eta2 = -(a + p1) * (a + p1 + 2);
        st.zeta1 = (b + c) * (p1 + 1) * Lv;
        st.zeta2 = (a + p1) * (p1 + 1) * Lv;
        const LatticeOp& K2 = blk.sigma ? lb.L2 : lb.L3;
        auto res = racah_relation_residuals(lb.L1, K2, st, lb.I);
        nz += res.first.nonzero_count(nmax, -1, n) + res.second.nonzero_count(nmax, -1, n);

        RacahParams<Rational> rp;
        rp.alpha = p1;
        rp.beta = p2;
        rp.gamma = Rational(-n - 1);
        rp.delta = n + 1 + a + p1;
        rp.N = n;
        const auto rs = racah_structure(rp);
        if (rs.xi != st.xi || rs.eta1 != st.eta1 || rs.eta2 != st.eta2 || rs.zeta1 != st.zeta1 ||
            rs.zeta2 != st.zeta2)
          ++mismatch;
      }
      RelationReport rep = exact_report(blk.id, blk.desc, nz + mismatch, "n <= " + std::to_string(nmax));
      if (mismatch) rep.detail += "; structure constants differ from the Racah parameters at " +
                                  std::to_string(mismatch) + " blocks";
      else rep.detail += "; structure constants match the Racah parameters";
      return rep;
    });
  }

  // Eigenvalue relations of the other families.
  tasks.push_back([&d, &p, nmax, a, b, c, s] {
    std::size_t nz = 0;
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; k <= n; ++k) {
        const BivarPoly fp = tri_family_poly(D3Element::pi, {n, k}, p);
        const BivarPoly fs = tri_family_poly(D3Element::sigma, {n, k}, p);
        const Rational Lv = -Rational(n) * (n + s + 2);
        nz += (d.L3.apply(fp) - fp * Rational(-k * (k + a + b + 1))).size();
        nz += (d.L.apply(fp) - fp * Lv).size();
        nz += (d.L2.apply(fs) - fs * Rational(-k * (k + a + c + 1))).size();
        nz += (d.L.apply(fs) - fs * Lv).size();
      }
    return exact_report("family-eigen",
                        "L3 and L2 diagonal on the pi and sigma families; L diagonal on both", nz,
                        "n <= " + std::to_string(nmax));
  });

  std::vector<RelationReport> out(tasks.size());
  parallel_for(tasks.size(), exec_of(parallel), [&](std::size_t i) { out[i] = tasks[i](); });
  return out;
}

std::vector<RelationReport> verify_intertwining(int nmax, const TriParams<Rational>& p, bool parallel) {
  const DiffRealization d = build_diff_realization(p);
  const LatticeRealization lt = build_lattice_realization(nmax + 1, p);
  const int dim = (nmax + 2) * (nmax + 3) / 2;
  std::vector<BivarPoly> J(static_cast<std::size_t>(dim));
  parallel_for(J.size(), exec_of(parallel),
               [&](std::size_t i) { J[i] = tri_poly(LatticeOp::label(static_cast<int>(i)), p); });

  const std::array<std::pair<const char*, std::pair<const PolyDiffOp*, const LatticeOp*>>, 5> gens = {{
      {"X1", {&d.X1, &lt.X1}}, {"X3", {&d.X3, &lt.X3}}, {"L1", {&d.L1, &lt.L1}},
      {"L3", {&d.L3, &lt.L3}}, {"L", {&d.L, &lt.L}},
  }};
  const int nlab = (nmax + 1) * (nmax + 2) / 2;
  std::vector<std::size_t> bad(gens.size() * static_cast<std::size_t>(nlab), 0);
  parallel_for(bad.size(), exec_of(parallel), [&](std::size_t t) {
    const std::size_t g = t / static_cast<std::size_t>(nlab);
    const int i = static_cast<int>(t % static_cast<std::size_t>(nlab));
    const auto& [dop, lop] = gens[g].second;
    BivarPoly rhs;
    for (const auto& [j, coef] : lop->row(i)) rhs += J[static_cast<std::size_t>(j)] * coef;
    bad[t] = (dop->apply(J[static_cast<std::size_t>(i)]) - rhs).size();
  });

  std::vector<RelationReport> out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::size_t nz = 0, labels = 0;
    for (int i = 0; i < nlab; ++i) {
      const std::size_t v = bad[g * static_cast<std::size_t>(nlab) + static_cast<std::size_t>(i)];
      nz += v;
      labels += v ? 1 : 0;
    }
    const std::string name = gens[g].first;
    RelationReport rep = exact_report(
        "intertwine-" + name, name + " J_{n,k} equals the lattice combination of J_{n',k'}", nz,
        "n <= " + std::to_string(nmax) + ", coefficients acting on unnormalized J, labels outside 0<=k<=n read as zero");
    if (labels) rep.detail += "; " + std::to_string(labels) + " labels fail";
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<RelationReport> verify_hermiticity(int N, const TriParams<double>& p,
                                               const QuadratureRule& quad, double tol) {
  const TriParams<Rational> pr = to_rational(p);
  const LatticeRealization lt = build_lattice_realization(N + 1, pr);
  const DiffRealization d = build_diff_realization(pr);
  const int dim = (N + 1) * (N + 2) / 2;

  std::vector<double> h(static_cast<std::size_t>(dim));
  std::vector<BivarPoly> J(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    const TriIndex idx = LatticeOp::label(i);
    h[static_cast<std::size_t>(i)] = tri_norm<double>(idx, p);
    J[static_cast<std::size_t>(i)] = tri_poly(idx, pr);
  }
  const Eigen::MatrixXd VJ = tabulate_polys(J, quad, Exec::Parallel);

  const std::array<std::pair<const char*, std::pair<const PolyDiffOp*, const LatticeOp*>>, 5> gens = {{
      {"X1", {&d.X1, &lt.X1}}, {"X3", {&d.X3, &lt.X3}}, {"L1", {&d.L1, &lt.L1}},
      {"L3", {&d.L3, &lt.L3}}, {"L", {&d.L, &lt.L}},
  }};
  std::vector<RelationReport> out;
  for (const auto& [name, ops] : gens) {
    // Lattice: <phi_j, W phi_i> = W[i,j] sqrt(h_j / h_i).
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (const auto& [j, coef] : ops.second->row(i))
        if (j < dim)
          M(j, i) = coef.get_d() * std::sqrt(h[static_cast<std::size_t>(j)] / h[static_cast<std::size_t>(i)]);
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    const double asym = (M - M.transpose()).cwiseAbs().maxCoeff() / scale;
    std::ostringstream det;
    det << "max relative asymmetry " << asym << ", n <= " << N;
    out.push_back({std::string("hermitian-lattice-") + name,
                   std::string(name) + " symmetric in the orthonormal basis (lattice)", asym <= tol,
                   asym, det.str()});

    // Gram matrix of the differential operator under the quadrature rule.
    std::vector<BivarPoly> WJ(J.size());
    parallel_for(J.size(), Exec::Parallel, [&](std::size_t i) { WJ[i] = ops.first->apply(J[i]); });
    const Eigen::MatrixXd VW = tabulate_polys(WJ, quad, Exec::Parallel);
    Eigen::MatrixXd G = weighted_gram(VJ, VW, quad.weights, Exec::Parallel);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        G(i, j) /= std::sqrt(h[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j)]);
    const double gscale = std::max(1.0, G.cwiseAbs().maxCoeff());
    const double gasym = (G - G.transpose()).cwiseAbs().maxCoeff() / gscale;
    std::ostringstream gdet;
    gdet << "max relative asymmetry " << gasym << ", " << quad.size() << " nodes";
    out.push_back({std::string("hermitian-gram-") + name,
                   std::string(name) + " symmetric under the weighted inner product (quadrature)",
                   gasym <= tol, gasym, gdet.str()});
  }
  return out;
}

std::vector<RelationReport> verify_jacobi_identity(const TriParams<Rational>& p) {
  const DiffRealization d = build_diff_realization(p);
  const std::array<std::pair<const char*, const PolyDiffOp*>, 5> g = {
      {{"X1", &d.X1}, {"X3", &d.X3}, {"L1", &d.L1}, {"L3", &d.L3}, {"L", &d.L}}};
  std::vector<RelationReport> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k) {
        const PolyDiffOp &A = *g[i].second, &B = *g[j].second, &C = *g[k].second;
        const PolyDiffOp res = comm(comm(A, B), C) + comm(comm(B, C), A) + comm(comm(C, A), B);
        const std::string id = std::string("jacobi-") + g[i].first + "," + g[j].first + "," + g[k].first;
        out.push_back(exact_report(id, "Jacobi identity for the commutator", res.monomial_count(), ""));
      }
  return out;
}

}  // namespace trijac
