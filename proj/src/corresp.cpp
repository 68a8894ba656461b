#include "semibrace/corresp.hpp"

#include <algorithm>
#include <string>

namespace semibrace {

namespace {

// Abstract product table of a closed holomorph set, indexed by position in
// the (sorted) element list. Fails when some product leaves the set.
Result<CayleyTable> abstract_table(const Holomorph& hol,
                                   const HolomorphSet& h) {
  const int k = static_cast<int>(h.size());
  std::vector<int> table(k * k, -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto p = hol.product(h[i], h[j]);
      if (!p.ok()) return p.error();
      auto it = std::lower_bound(h.begin(), h.end(), *p);
      if (it == h.end() || !(*it == *p))
        return fail(Fail::not_closed, {h[i].point, h[j].point},
                    "product of elements over " +
                        hol.add().name(h[i].point) + " and " +
                        hol.add().name(h[j].point) + " leaves the set");
      table[i * k + j] = static_cast<int>(it - h.begin());
    }
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i)
    names[i] = "(" + std::to_string(h[i].endo) + "," +
               hol.add().name(h[i].point) + ")";
  return validate_magma(k, std::move(names), std::move(table));
}

}  // namespace

Result<GoodSubsemigroup> is_good_subsemigroup(const Holomorph& hol,
                                              const HolomorphSet& h_in) {
  const HolomorphSet h = make_holomorph_set(h_in);
  auto table = abstract_table(hol, h);
  if (!table.ok()) return table.error();
  const int n = hol.carrier_size();

  // (G1) second projection bijective onto S; checked first so a set that
  // closure forced to carry two elements over one point reports (G1)
  ElemSet points = 0;
  for (const auto& e : h) {
    if (set_contains(points, e.point))
      return fail(Fail::g1_fails, {e.point},
                  "two elements project to " + hol.add().name(e.point));
    points = set_insert(points, e.point);
  }
  if (static_cast<int>(h.size()) != n)
    return fail(Fail::g1_fails, {},
                "projection misses part of the carrier");

  auto inv_r = von_neumann_inverses(*table);
  if (!inv_r.ok()) {
    Diag d = inv_r.error();
    return fail(Fail::not_inverse_sub, d.witness, d.str());
  }
  const InverseSemigroup& hs = *inv_r;

  // (G2) (f,x)^-1 = (g,y) forces (f, f(-y)) in H
  for (size_t i = 0; i < h.size(); ++i) {
    const auto& fx = h[i];
    const auto& gy = h[hs.inv[static_cast<int>(i)]];
    const EndoMap& f = hol.endos().at(fx.endo);
    HolomorphElement wanted{fx.endo, f(hol.add().neg(gy.point))};
    if (!holomorph_set_contains(h, wanted))
      return fail(Fail::g2_fails, {fx.point},
                  "(f, f(-y)) missing for the element over " +
                      hol.add().name(fx.point));
  }

  // (G3) -x + x + f(y) = f(y)
  for (const auto& fx : h) {
    const EndoMap& f = hol.endos().at(fx.endo);
    const int x0 = hol.add().zero_part(fx.point);
    for (int y = 0; y < n; ++y)
      if (hol.add().at(x0, f(y)) != f(y))
        return fail(Fail::g3_fails, {fx.point, y},
                    "-x+x+f(y) != f(y) over " + hol.add().name(fx.point));
  }

  // (G4) with an additive identity 0: f(0) = -x + x
  if (auto id0 = identity_element(hol.add().base.base)) {
    for (const auto& fx : h) {
      const EndoMap& f = hol.endos().at(fx.endo);
      if (f(*id0) != hol.add().zero_part(fx.point))
        return fail(Fail::g4_fails, {fx.point},
                    "f(0) != -x+x over " + hol.add().name(fx.point));
    }
  }

  GoodSubsemigroup out;
  out.elems = h;
  out.kind = is_clifford(hs) ? SubKind::clifford : SubKind::inverse;
  return out;
}

Result<WeakBrace> brace_from_good(const Holomorph& hol,
                                  const GoodSubsemigroup& g) {
  const int n = hol.carrier_size();
  std::vector<int> endo_over(n, -1);
  for (const auto& e : g.elems) endo_over[e.point] = e.endo;
  std::vector<int> mul(n * n);
  for (int a = 0; a < n; ++a) {
    const EndoMap& f = hol.endos().at(endo_over[a]);
    for (int b = 0; b < n; ++b) mul[a * n + b] = hol.add().at(a, f(b));
  }
  auto mul_t = validate_magma(n, hol.add().base.base.names, std::move(mul));
  if (!mul_t.ok()) return mul_t.error();
  auto brace = check_weak_brace(hol.add().base.base, *mul_t);
  if (!brace.ok())
    return fail(Fail::internal_implication, brace.error().witness,
                "good subsemigroup induced an invalid brace: " +
                    brace.error().str());
  // the projection is an isomorphism onto (S, o)
  for (const auto& u : g.elems)
    for (const auto& v : g.elems) {
      auto p = hol.product(u, v);
      if (!p.ok()) return p.error();
      if (p->point != brace->times(u.point, v.point) ||
          p->endo != endo_over[p->point])
        return fail(Fail::internal_implication, {u.point, v.point},
                    "projection is not a multiplicative isomorphism");
    }
  // Clifford subsemigroups produce dual braces and conversely
  if ((g.kind == SubKind::clifford) != is_dual(*brace).dual)
    return fail(Fail::internal_implication, {},
                "kind disagrees with duality of the induced brace");
  return brace;
}

Result<GoodSubsemigroup> good_from_brace(const Holomorph& hol,
                                         const WeakBrace& b) {
  const int n = b.n();
  HolomorphSet h;
  for (int a = 0; a < n; ++a) {
    int idx = hol.endos().index_of(b.lambda_row(a));
    if (idx == -1)
      return fail(Fail::lambda_not_endo, {a},
                  "lambda_" + b.name(a) +
                      " is missing from the endomorphism list");
    h.push_back({idx, a});
  }
  auto good = is_good_subsemigroup(hol, make_holomorph_set(std::move(h)));
  if (!good.ok())
    return fail(Fail::internal_implication, good.error().witness,
                "the lambda graph of a brace must be good: " +
                    good.error().str());
  const bool dual = is_dual(b).dual;
  if ((good->kind == SubKind::clifford) != dual)
    return fail(Fail::internal_implication, {},
                "kind disagrees with duality of the source brace");
  return good;
}

Result<GammaFunction> is_gamma_function(const Holomorph& hol,
                                        const std::vector<int>& endo_of) {
  const CliffordStructure& s = hol.add();
  const int n = s.n();
  const EndoList& endos = hol.endos();
  auto gm = [&](int x) -> const EndoMap& { return endos.at(endo_of[x]); };

  // (F1) gamma_x gamma_y = gamma_{x + gamma_x(y)}
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int z = s.at(x, gm(x)(y));
      const int comp = endos.compose(endo_of[x], endo_of[y]);
      if (comp != endo_of[z])
        return fail(Fail::f1_fails, {x, y},
                    "gamma_x gamma_y != gamma_{x+gamma_x(y)} at " +
                        s.base.base.tuple_str({x, y}));
    }
  // (F1) gamma_{x0}(x) = x
  for (int x = 0; x < n; ++x)
    if (gm(s.zero_part(x))(x) != x)
      return fail(Fail::f1_fails, {x},
                  "gamma_{x0}(x) != x at " + s.name(x));
  // (F1) x0 + gamma_x(y) = gamma_x(y)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (s.at(s.zero_part(x), gm(x)(y)) != gm(x)(y))
        return fail(Fail::f1_fails, {x, y},
                    "x0 + gamma_x(y) != gamma_x(y) at " +
                        s.base.base.tuple_str({x, y}));
  // (F2)
  for (int x = 0; x < n; ++x)
    if (gm(x)(x) == s.zero_part(x) && x != s.zero_part(x))
      return fail(Fail::f2_fails, {x},
                  "gamma_x(x) = x0 for non-idempotent " + s.name(x));
  // (F3), recording every witness
  std::vector<std::vector<int>> witnesses(n);
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w)
      if (gm(x)(w) == s.neg(x) && gm(w)(x) == s.neg(w))
        witnesses[x].push_back(w);
    if (witnesses[x].empty())
      return fail(Fail::f3_fails, {x}, "no inverse witness for " + s.name(x));
  }
  // (F4)
  for (int e : set_elements(s.base.idempotents))
    for (int f : set_elements(s.base.idempotents))
      if (gm(e)(f) != s.at(e, f))
        return fail(Fail::f4_fails, {e, f},
                    "gamma_e(f) != e+f at " + s.base.base.tuple_str({e, f}));

  GammaFunction out;
  out.endo_of = endo_of;
  out.f3_witnesses = std::move(witnesses);
  out.dual = check_dual_gamma(hol, endo_of).ok();
  return out;
}

Diag check_dual_gamma(const Holomorph& hol, const std::vector<int>& endo_of) {
  const CliffordStructure& s = hol.add();
  const int n = s.n();
  const EndoList& endos = hol.endos();
  auto gm = [&](int x) -> const EndoMap& { return endos.at(endo_of[x]); };

  // (D1) gamma_x maps H_x into H_x bijectively; containment is tested
  // before bijectivity rather than presupposed
  for (int x = 0; x < n; ++x) {
    const int cls = s.h_class[x];
    ElemSet image = 0;
    for (int y : s.h_classes[cls]) {
      const int v = gm(x)(y);
      if (s.h_class[v] != cls)
        return fail(Fail::d1_fails, {x, y},
                    "gamma_x(H_x) not contained in H_x at " +
                        s.base.base.tuple_str({x, y}));
      if (set_contains(image, v))
        return fail(Fail::d1_fails, {x, y},
                    "gamma_x not injective on H_x at " + s.name(x));
      image = set_insert(image, v);
    }
  }
  // (D2)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int z = s.at(x, gm(x)(y));
      if (endos.compose(endo_of[x], endo_of[y]) != endo_of[z])
        return fail(Fail::d2_fails, {x, y});
      if (s.at(s.zero_part(x), gm(x)(y)) != gm(x)(y))
        return fail(Fail::d2_fails, {x, y});
    }
  // (D3)
  for (int e : set_elements(s.base.idempotents))
    for (int f : set_elements(s.base.idempotents))
      if (gm(e)(f) != s.at(e, f)) return fail(Fail::d3_fails, {e, f});
  return ok_diag();
}

Result<WeakBrace> brace_from_gamma(const Holomorph& hol,
                                   const GammaFunction& g) {
  const CliffordStructure& s = hol.add();
  const int n = s.n();
  std::vector<int> mul(n * n);
  for (int x = 0; x < n; ++x) {
    const EndoMap& gx = hol.endos().at(g.endo_of[x]);
    for (int y = 0; y < n; ++y) mul[x * n + y] = s.at(x, gx(y));
  }
  auto mul_t = validate_magma(n, s.base.base.names, std::move(mul));
  if (!mul_t.ok()) return mul_t.error();
  auto brace = check_weak_brace(s.base.base, *mul_t);
  if (!brace.ok())
    return fail(Fail::internal_implication, brace.error().witness,
                "Gamma function induced an invalid brace: " +
                    brace.error().str());
  if (is_dual(*brace).dual != g.dual)
    return fail(Fail::internal_implication, {},
                "dual flag disagrees with the induced brace");
  // every (F3) witness collapses to the multiplicative inverse
  for (int x = 0; x < n; ++x)
    for (int w : g.f3_witnesses[x])
      if (w != brace->minv(x))
        return fail(Fail::internal_implication, {x, w},
                    "an (F3) witness is not the multiplicative inverse");
  return brace;
}

Result<GammaFunction> gamma_from_brace(const Holomorph& hol,
                                       const WeakBrace& b) {
  const int n = b.n();
  std::vector<int> endo_of(n);
  for (int a = 0; a < n; ++a) {
    endo_of[a] = hol.endos().index_of(b.lambda_row(a));
    if (endo_of[a] == -1)
      return fail(Fail::lambda_not_endo, {a},
                  "lambda_" + b.name(a) +
                      " is missing from the endomorphism list");
  }
  auto gamma = is_gamma_function(hol, endo_of);
  if (!gamma.ok())
    return fail(Fail::internal_implication, gamma.error().witness,
                "the lambda map of a brace must be a Gamma function: " +
                    gamma.error().str());
  if (gamma->dual != is_dual(b).dual)
    return fail(Fail::internal_implication, {},
                "dual flag disagrees with the source brace");
  return gamma;
}

Result<AffineStructure> is_affine_structure(const InverseSemigroup& mul,
                                            const std::vector<int>& diamond) {
  const int n = mul.n();
  if (static_cast<int>(diamond.size()) != n * n)
    return fail(Fail::dimension_mismatch, {}, "diamond table size mismatch");
  for (int v : diamond)
    if (v < 0 || v >= n) return fail(Fail::index_out_of_range, {v});
  AffineStructure d{diamond, n};
  // (A1)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (d.at(mul.at(a, b), c) != d.at(b, d.at(a, c)))
          return fail(Fail::a1_fails, {a, b, c},
                      "(ab)<>c != b<>(a<>c) at " +
                          mul.base.tuple_str({a, b, c}));
  // (A2)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int ab = d.at(a, b);
        const int lhs = d.at(a, mul.at(b, d.at(b, c)));
        const int rhs = mul.at(ab, d.at(ab, d.at(a, c)));
        if (lhs != rhs)
          return fail(Fail::a2_fails, {a, b, c},
                      "a<>(b(b<>c)) != (a<>b)((a<>b)<>(a<>c)) at " +
                          mul.base.tuple_str({a, b, c}));
      }
  // (A3)
  for (int e : set_elements(mul.idempotents))
    for (int a = 0; a < n; ++a) {
      if (d.at(e, a) != mul.at(e, a))
        return fail(Fail::a3_fails, {e, a},
                    "e<>a != ea at " + mul.base.tuple_str({e, a}));
      if (d.at(a, e) != mul.at(mul.at(mul.neg(a), e), a))
        return fail(Fail::a3_fails, {a, e},
                    "a<>e != a^-1 e a at " + mul.base.tuple_str({a, e}));
    }
  return d;
}

Result<WeakBrace> brace_from_affine(const InverseSemigroup& mul,
                                    const AffineStructure& d) {
  const int n = mul.n();
  std::vector<int> add(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) add[x * n + y] = mul.at(x, d.at(x, y));
  auto add_t = validate_magma(n, mul.base.names, std::move(add));
  if (!add_t.ok()) return add_t.error();
  auto brace = check_weak_brace(*add_t, mul.base);
  if (!brace.ok())
    return fail(Fail::internal_implication, brace.error().witness,
                "affine structure induced an invalid brace: " +
                    brace.error().str());
  if (is_dual(*brace).dual != is_clifford(mul))
    return fail(Fail::internal_implication, {},
                "dual iff the multiplication is Clifford");
  for (int a = 0; a < n; ++a)
    if (brace->neg(a) != d.at(mul.neg(a), mul.neg(a)))
      return fail(Fail::internal_implication, {a},
                  "-a != a^-1 <> a^-1");
  return brace;
}

Diag check_affine_identities(const InverseSemigroup& mul,
                             const AffineStructure& d) {
  const int n = mul.n();
  auto plus = [&](int x, int y) { return mul.at(x, d.at(x, y)); };
  for (int a = 0; a < n; ++a) {
    if (d.at(mul.at(a, mul.neg(a)), a) != a)
      return fail(Fail::internal_implication, {a}, "(a a^-1) <> a != a");
    for (int b = 0; b < n; ++b)
      if (d.at(a, b) != mul.at(mul.neg(a), plus(a, b)))
        return fail(Fail::internal_implication, {a, b},
                    "a <> b != a^-1(a+b)");
  }
  for (int e : set_elements(mul.idempotents))
    for (int a = 0; a < n; ++a)
      if (plus(e, a) != mul.at(e, a) || plus(a, e) != mul.at(e, a))
        return fail(Fail::internal_implication, {e, a},
                    "e+a = a+e = ea fails");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (d.at(a, plus(b, c)) != plus(d.at(a, b), d.at(a, c)))
          return fail(Fail::internal_implication, {a, b, c},
                      "a <> (b+c) != (a<>b) + (a<>c)");
  return ok_diag();
}

Result<AffineStructure> affine_from_brace(const WeakBrace& b) {
  const int n = b.n();
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const int via_add = b.times(b.minv(a), b.plus(a, c));
      const int via_lambda = b.lam(b.minv(a), c);
      if (via_add != via_lambda)
        return fail(Fail::internal_implication, {a, c},
                    "a^-1(a+b) != lambda_{a^-1}(b)");
      table[a * n + c] = via_add;
    }
  return is_affine_structure(b.mul, table);
}

}  // namespace semibrace
