#include "semibrace/classes.hpp"

#include <algorithm>
#include <string>

namespace semibrace {

namespace {

Diag dual_consequence(const WeakBrace& b, const char* which) {
  DualCheck d = is_dual(b);
  if (!d.dual)
    return fail(Fail::internal_implication, d.detail.witness,
                std::string(which) + " brace must be dual: " +
                    d.detail.str());
  if (!d.detail.ok()) return d.detail;
  return ok_diag();
}

}  // namespace

ClassifyResult is_symmetric(const WeakBrace& b) {
  ClassifyResult out;
  const int n = b.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (b.times(x, b.plus(y, z)) !=
            b.plus(b.plus(b.times(x, y), b.neg(x)), b.times(x, z))) {
          out.witness = fail(Fail::distributivity_fails, {x, y, z},
                             "x(y+z) != xy-x+xz at " +
                                 b.add.base.base.tuple_str({x, y, z}));
          return out;
        }
        if (b.plus(x, b.times(y, z)) !=
            b.times(b.times(b.plus(x, y), b.minv(x)), b.plus(x, z))) {
          out.witness = fail(Fail::distributivity_fails, {x, y, z},
                             "x+yz != (x+y)x^-1(x+z) at " +
                                 b.add.base.base.tuple_str({x, y, z}));
          return out;
        }
      }
  out.holds = true;
  for (int x = 0; x < n; ++x) {
    if (b.plus(b.neg(x), x) != b.times(x, b.minv(x)) ||
        b.plus(x, b.neg(x)) != b.times(b.minv(x), x)) {
      out.implication = fail(Fail::internal_implication, {x},
                             "-x+x = xx^-1 and x-x = x^-1x must follow");
      return out;
    }
  }
  out.implication = dual_consequence(b, "a symmetric");
  return out;
}

ClassifyResult is_lambda_homomorphic(const WeakBrace& b) {
  ClassifyResult out;
  const int n = b.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = b.plus(x, y);
      for (int z = 0; z < n; ++z)
        if (b.lam(x, b.lam(y, z)) != b.lam(xy, z)) {
          out.witness =
              fail(Fail::distributivity_fails, {x, y, z},
                   "lambda_x lambda_y != lambda_{x+y} at " +
                       b.add.base.base.tuple_str({x, y, z}));
          return out;
        }
    }
  out.holds = true;
  out.implication = dual_consequence(b, "a lambda-homomorphic");
  return out;
}

ClassifyResult is_lambda_anti_homomorphic(const WeakBrace& b) {
  ClassifyResult out;
  const int n = b.n();
  Diag two_map;  // first failure of lambda_y lambda_x = lambda_{x+y}
  for (int x = 0; x < n && two_map.ok(); ++x)
    for (int y = 0; y < n && two_map.ok(); ++y) {
      const int xy = b.plus(x, y);
      for (int z = 0; z < n; ++z)
        if (b.lam(y, b.lam(x, z)) != b.lam(xy, z)) {
          two_map = fail(Fail::distributivity_fails, {x, y, z},
                         "lambda_y lambda_x != lambda_{x+y} at " +
                             b.add.base.base.tuple_str({x, y, z}));
          break;
        }
    }
  Diag one_axiom;  // first failure of y(-x+xz) = -x+(x+y)z
  for (int x = 0; x < n && one_axiom.ok(); ++x)
    for (int y = 0; y < n && one_axiom.ok(); ++y)
      for (int z = 0; z < n; ++z)
        if (b.times(y, b.lam(x, z)) !=
            b.plus(b.neg(x), b.times(b.plus(x, y), z))) {
          one_axiom = fail(Fail::distributivity_fails, {x, y, z},
                           "y(-x+xz) != -x+(x+y)z at " +
                               b.add.base.base.tuple_str({x, y, z}));
          break;
        }
  if (two_map.ok() != one_axiom.ok()) {
    out.holds = two_map.ok();
    out.implication =
        fail(Fail::internal_implication, {},
             "the two anti-homomorphic formulations must agree");
    return out;
  }
  if (!two_map.ok()) {
    out.witness = two_map;
    return out;
  }
  out.holds = true;
  out.implication = dual_consequence(b, "a lambda-anti-homomorphic");
  return out;
}

// -------------------------------------------------------------------
// strong semilattices
// -------------------------------------------------------------------

namespace {

bool is_skew(const WeakBrace& b) {
  // both operations groups: one idempotent each suffices for validated
  // inverse semigroups
  return set_elements(b.add.base.idempotents).size() == 1 &&
         set_elements(b.mul.idempotents).size() == 1;
}

Diag spec_cond(const std::string& what) {
  return fail(Fail::spec_invalid, {}, what);
}

}  // namespace

Diag check_semilattice_spec(const SemilatticeSpec& spec) {
  const CayleyTable& y = spec.meet;
  const int k = y.n;
  if (!is_commutative(y) || !is_associative(y))
    return spec_cond("Y is not a commutative associative table");
  for (int a = 0; a < k; ++a)
    if (y.at(a, a) != a) return spec_cond("Y is not idempotent");
  if (static_cast<int>(spec.components.size()) != k)
    return spec_cond("one component required per element of Y");
  if (static_cast<int>(spec.homs.size()) != k)
    return spec_cond("hom table must be Y-indexed");
  for (int a = 0; a < k; ++a) {
    if (!is_skew(spec.components[a]))
      return spec_cond("component " + y.name(a) + " is not a skew brace");
    if (static_cast<int>(spec.homs[a].size()) != k)
      return spec_cond("hom table must be Y-indexed");
  }
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) {
      const bool comparable = y.at(a, c) == c;
      const auto& hom = spec.homs[a][c];
      if (!comparable) {
        if (!hom.empty())
          return spec_cond("hom " + y.name(a) + "->" + y.name(c) +
                           " declared for incomparable pair");
        continue;
      }
      const WeakBrace& src = spec.components[a];
      const WeakBrace& dst = spec.components[c];
      if (static_cast<int>(hom.size()) != src.n())
        return spec_cond("hom " + y.name(a) + "->" + y.name(c) +
                         " missing or wrong size");
      for (int v : hom)
        if (v < 0 || v >= dst.n())
          return spec_cond("hom " + y.name(a) + "->" + y.name(c) +
                           " maps outside the target component");
      for (int u = 0; u < src.n(); ++u)
        for (int v = 0; v < src.n(); ++v) {
          if (hom[src.plus(u, v)] != dst.plus(hom[u], hom[v]))
            return spec_cond("hom " + y.name(a) + "->" + y.name(c) +
                             " does not preserve addition");
          if (hom[src.times(u, v)] != dst.times(hom[u], hom[v]))
            return spec_cond("hom " + y.name(a) + "->" + y.name(c) +
                             " does not preserve multiplication");
        }
      if (a == c)
        for (int u = 0; u < src.n(); ++u)
          if (hom[u] != u)
            return spec_cond("condition (1): hom " + y.name(a) + "->" +
                             y.name(a) + " is not the identity");
    }
  // condition (2): hom[b][c] o hom[a][b] = hom[a][c] for a >= b >= c
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) {
      if (y.at(a, c) != c) continue;
      for (int m = 0; m < k; ++m) {
        if (y.at(a, m) != m || y.at(m, c) != c) continue;
        for (int u = 0; u < spec.components[a].n(); ++u)
          if (spec.homs[m][c][spec.homs[a][m][u]] != spec.homs[a][c][u])
            return spec_cond("condition (2): homs through " + y.name(m) +
                             " do not compose from " + y.name(a) + " to " +
                             y.name(c));
      }
    }
  return ok_diag();
}

Result<WeakBrace> compose_semilattice(const SemilatticeSpec& spec) {
  if (Diag d = check_semilattice_spec(spec); !d.ok()) return d;
  const CayleyTable& y = spec.meet;
  const int k = y.n;
  // carrier: Y order, then component order; qualified names
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> slot;  // global index -> (component, local)
  std::vector<std::vector<int>> global(k);
  for (int a = 0; a < k; ++a) {
    const WeakBrace& comp = spec.components[a];
    global[a].resize(comp.n());
    for (int u = 0; u < comp.n(); ++u) {
      global[a][u] = static_cast<int>(names.size());
      names.push_back(y.name(a) + "." + comp.name(u));
      slot.push_back({a, u});
    }
  }
  const int n = static_cast<int>(names.size());
  std::vector<int> add(n * n), mul(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [a, u] = slot[i];
      auto [c, v] = slot[j];
      const int m = y.at(a, c);
      const int uu = spec.homs[a][m][u];
      const int vv = spec.homs[c][m][v];
      add[i * n + j] = global[m][spec.components[m].plus(uu, vv)];
      mul[i * n + j] = global[m][spec.components[m].times(uu, vv)];
    }
  auto add_t = validate_magma(n, names, std::move(add));
  if (!add_t.ok()) return add_t.error();
  auto mul_t = validate_magma(n, names, std::move(mul));
  if (!mul_t.ok()) return mul_t.error();
  auto brace = check_weak_brace(*add_t, *mul_t);
  if (!brace.ok())
    return fail(Fail::internal_implication, brace.error().witness,
                "strong semilattice composite must be a weak brace: " +
                    brace.error().str());
  if (!is_dual(*brace).dual)
    return fail(Fail::internal_implication, {},
                "strong semilattice composite must be dual");
  return brace;
}

Result<SemilatticeSpec> decompose_semilattice(const WeakBrace& b) {
  DualCheck dual = is_dual(b);
  if (!dual.dual)
    return fail(Fail::not_dual, dual.detail.witness, dual.detail.str());
  SemilatticeSpec spec;
  const std::vector<int> idems = set_elements(b.add.base.idempotents);
  const int k = static_cast<int>(idems.size());
  std::vector<int> y_index(b.n(), -1);
  for (int i = 0; i < k; ++i) y_index[idems[i]] = i;

  // Y = E(S) under e ^ f = e + f
  std::vector<std::string> y_names(k);
  std::vector<int> meet(k * k);
  for (int i = 0; i < k; ++i) {
    y_names[i] = b.name(idems[i]);
    for (int j = 0; j < k; ++j)
      meet[i * k + j] = y_index[b.plus(idems[i], idems[j])];
  }
  auto meet_t = validate_magma(k, std::move(y_names), std::move(meet));
  if (!meet_t.ok()) return meet_t.error();
  spec.meet = *meet_t;

  // components: the subgroups H_e with both operations restricted
  std::vector<std::vector<int>> members(k);
  std::vector<std::vector<int>> local(k, std::vector<int>(b.n(), -1));
  for (int x = 0; x < b.n(); ++x) {
    const int cls = y_index[b.add.zero_part(x)];
    local[cls][x] = static_cast<int>(members[cls].size());
    members[cls].push_back(x);
  }
  for (int i = 0; i < k; ++i) {
    const int cn = static_cast<int>(members[i].size());
    std::vector<std::string> cnames(cn);
    std::vector<int> cadd(cn * cn), cmul(cn * cn);
    for (int u = 0; u < cn; ++u) {
      cnames[u] = b.name(members[i][u]);
      for (int v = 0; v < cn; ++v) {
        const int sum = b.plus(members[i][u], members[i][v]);
        const int prod = b.times(members[i][u], members[i][v]);
        if (local[i][sum] == -1 || local[i][prod] == -1)
          return fail(Fail::internal_implication, {members[i][u]},
                      "component not closed under both operations");
        cadd[u * cn + v] = local[i][sum];
        cmul[u * cn + v] = local[i][prod];
      }
    }
    auto cadd_t = validate_magma(cn, cnames, std::move(cadd));
    if (!cadd_t.ok()) return cadd_t.error();
    auto cmul_t = validate_magma(cn, cnames, std::move(cmul));
    if (!cmul_t.ok()) return cmul_t.error();
    auto comp = check_weak_brace(*cadd_t, *cmul_t);
    if (!comp.ok())
      return fail(Fail::internal_implication, comp.error().witness,
                  "decomposition component is not a brace: " +
                      comp.error().str());
    if (!is_skew(*comp))
      return fail(Fail::internal_implication, {idems[i]},
                  "decomposition component is not a skew brace");
    spec.components.push_back(std::move(comp).value());
  }

  // homs x -> f + x for e >= f
  spec.homs.assign(k, std::vector<std::vector<int>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (spec.meet.at(i, j) != j) continue;
      std::vector<int> hom(members[i].size());
      for (size_t u = 0; u < members[i].size(); ++u) {
        const int img = b.plus(idems[j], members[i][u]);
        if (local[j][img] == -1)
          return fail(Fail::internal_implication, {members[i][u]},
                      "f + x left its component");
        hom[u] = local[j][img];
      }
      spec.homs[i][j] = std::move(hom);
    }

  if (Diag d = check_semilattice_spec(spec); !d.ok())
    return fail(Fail::internal_implication, d.witness,
                "decomposition spec invalid: " + d.str());
  auto recomposed = compose_semilattice(spec);
  if (!recomposed.ok()) return recomposed.error();
  if (Diag d = check_recomposition(b, *recomposed); !d.ok()) return d;
  return spec;
}

Diag check_recomposition(const WeakBrace& original,
                         const WeakBrace& composed) {
  const int n = original.n();
  if (composed.n() != n)
    return fail(Fail::internal_implication, {}, "carrier size changed");
  // compose(decompose(original)) lays the carrier out class by class,
  // classes ordered by ascending idempotent, members ascending; recover
  // that mapping directly instead of parsing qualified names
  std::vector<int> to_composed(n, -1);
  int next = 0;
  for (int e : set_elements(original.add.base.idempotents))
    for (int x = 0; x < n; ++x)
      if (original.add.zero_part(x) == e) {
        const std::string expected =
            original.name(e) + "." + original.name(x);
        if (composed.name(next) != expected)
          return fail(Fail::internal_implication, {x},
                      "expected element '" + expected + "', found '" +
                          composed.name(next) + "'");
        to_composed[x] = next++;
      }
  if (next != n)
    return fail(Fail::internal_implication, {}, "elements lost");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (composed.plus(to_composed[u], to_composed[v]) !=
          to_composed[original.plus(u, v)])
        return fail(Fail::internal_implication, {u, v},
                    "recomposed addition differs");
      if (composed.times(to_composed[u], to_composed[v]) !=
          to_composed[original.times(u, v)])
        return fail(Fail::internal_implication, {u, v},
                    "recomposed multiplication differs");
    }
  return ok_diag();
}

}  // namespace semibrace
