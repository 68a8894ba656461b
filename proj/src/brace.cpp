#include "semibrace/brace.hpp"

namespace semibrace {

namespace {

Diag weak1_at(const InverseSemigroup& add, const InverseSemigroup& mul, int x,
              int y, int z) {
  const int lhs = mul.at(x, add.at(y, z));
  const int rhs = add.at(add.at(mul.at(x, y), add.neg(x)), mul.at(x, z));
  if (lhs == rhs) return ok_diag();
  return fail(Fail::distributivity_fails, {x, y, z},
              "x(y+z) != xy-x+xz at " +
                  add.base.tuple_str({x, y, z}));
}

}  // namespace

Diag check_axiom_weak1(const InverseSemigroup& add,
                       const InverseSemigroup& mul) {
  const int n = add.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (Diag d = weak1_at(add, mul, x, y, z); !d.ok()) return d;
  return ok_diag();
}

Diag check_axiom_weak2(const InverseSemigroup& add,
                       const InverseSemigroup& mul) {
  const int n = add.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int nx = add.neg(x);
        const int lhs = add.at(nx, mul.at(x, add.at(y, z)));
        const int rhs = add.at(
            add.at(add.at(nx, mul.at(x, y)), nx), mul.at(x, z));
        if (lhs != rhs)
          return fail(Fail::distributivity_fails, {x, y, z},
                      "-x+x(y+z) != -x+xy-x+xz at " +
                          add.base.tuple_str({x, y, z}));
      }
  return ok_diag();
}

Diag check_axiom_weak3(const InverseSemigroup& add,
                       const InverseSemigroup& mul) {
  const int n = add.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int xy = mul.at(x, y);
        const int lhs = add.at(add.neg(xy), mul.at(xy, z));
        const int rhs = add.at(
            add.neg(x),
            mul.at(x, add.at(add.neg(y), mul.at(y, z))));
        if (lhs != rhs)
          return fail(Fail::distributivity_fails, {x, y, z},
                      "-(xy)+xyz != -x+x(-y+yz) at " +
                          add.base.tuple_str({x, y, z}));
      }
  return ok_diag();
}

Result<WeakBrace> check_weak_brace(const CayleyTable& add_t,
                                   const CayleyTable& mul_t) {
  if (add_t.n != mul_t.n || add_t.names != mul_t.names)
    return fail(Fail::dimension_mismatch, {},
                "addition and multiplication must share one carrier");
  auto add_r = von_neumann_inverses(add_t);
  if (!add_r.ok()) {
    Diag d = add_r.error();
    return fail(Fail::add_not_inverse, d.witness, d.str());
  }
  auto mul_r = von_neumann_inverses(mul_t);
  if (!mul_r.ok()) {
    Diag d = mul_r.error();
    return fail(Fail::mul_not_inverse, d.witness, d.str());
  }
  const InverseSemigroup& add = *add_r;
  const InverseSemigroup& mul = *mul_r;
  if (Diag d = check_axiom_weak1(add, mul); !d.ok()) return d;
  const int n = add.n();
  for (int x = 0; x < n; ++x)
    if (mul.at(x, mul.neg(x)) != add.at(add.neg(x), x))
      return fail(Fail::inverse_axiom_fails, {x},
                  "x x^-1 != -x + x at " + add.name(x));

  // consequences of the axioms, verified rather than trusted
  if (idempotent_set(add) != idempotent_set(mul))
    return fail(Fail::internal_implication, {}, "E(S,+) != E(S,.)");
  auto cliff = build_clifford(add);
  if (!cliff.ok())
    return fail(Fail::internal_implication, cliff.error().witness,
                "addition of a weak brace must be Clifford: " +
                    cliff.error().str());

  WeakBrace b;
  b.add = std::move(cliff).value();
  b.mul = mul;
  b.lambda.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int y = 0; y < n; ++y)
      b.lambda[a * n + y] = add.at(add.neg(a), mul.at(a, y));
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (b.lam(a, add.at(x, y)) != add.at(b.lam(a, x), b.lam(a, y)))
          return fail(Fail::lambda_not_endo, {a, x, y},
                      "lambda_" + add.name(a) + " is not additive");
    for (int y = 0; y < n; ++y)
      if (mul.at(a, y) != add.at(a, b.lam(a, y)))
        return fail(Fail::internal_implication, {a, y},
                    "ab != a + lambda_a(b)");
  }
  if (!lambda_is_mul_homomorphism(b))
    return fail(Fail::internal_implication, {},
                "lambda is not multiplicative");
  return b;
}

Result<EndoMap> lambda_of(const WeakBrace& b, int a) {
  EndoMap m{b.lambda_row(a)};
  const int n = b.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m(b.plus(x, y)) != b.plus(m(x), m(y)))
        return fail(Fail::lambda_not_endo, {a, x, y});
  return m;
}

bool lambda_is_mul_homomorphism(const WeakBrace& b) {
  const int n = b.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = b.times(x, y);
      for (int z = 0; z < n; ++z)
        if (b.lam(xy, z) != b.lam(x, b.lam(y, z))) return false;
    }
  return true;
}

DualCheck is_dual(const WeakBrace& b) {
  DualCheck out;
  if (Diag d = check_clifford(b.mul); !d.ok()) {
    out.dual = false;
    out.detail = d;
    return out;
  }
  out.dual = true;
  // lambda_a restricted to H_a permutes H_a
  const int n = b.n();
  for (int a = 0; a < n; ++a) {
    const int cls = b.add.h_class[a];
    ElemSet image = 0;
    for (int x : b.add.h_classes[cls]) {
      const int y = b.lam(a, x);
      if (b.add.h_class[y] != cls) {
        out.detail = fail(Fail::internal_implication, {a, x},
                          "lambda_a does not preserve H_a");
        return out;
      }
      if (set_contains(image, y)) {
        out.detail = fail(Fail::internal_implication, {a, x},
                          "lambda_a not injective on H_a");
        return out;
      }
      image = set_insert(image, y);
    }
  }
  return out;
}

Diag check_brace_identities(const WeakBrace& b) {
  const int n = b.n();
  for (int e : set_elements(b.add.base.idempotents))
    for (int a = 0; a < n; ++a) {
      if (b.times(e, a) != b.plus(e, a) || b.plus(e, a) != b.plus(a, e))
        return fail(Fail::internal_implication, {e, a},
                    "ea = e+a = a+e fails");
    }
  for (int a = 0; a < n; ++a) {
    const int a0 = b.add.zero_part(a);
    if (b.plus(a0, a) != a || b.plus(a, a0) != a)
      return fail(Fail::internal_implication, {a}, "a0+a = a+a0 = a fails");
    if (b.add.zero_part(b.neg(a)) != a0 || b.plus(a0, a0) != a0 ||
        b.neg(a0) != a0 || b.plus(a, b.neg(a)) != a0 ||
        b.plus(b.neg(a), a) != a0)
      return fail(Fail::internal_implication, {a}, "zero part identities fail");
    for (int c = 0; c < n; ++c)
      if (b.plus(a0, b.add.zero_part(c)) != b.add.zero_part(b.plus(a, c)))
        return fail(Fail::internal_implication, {a, c}, "a0+b0 != (a+b)0");
  }
  return ok_diag();
}

Diag check_dual_brace_identities(const WeakBrace& b) {
  const int n = b.n();
  for (int x = 0; x < n; ++x) {
    const int x0 = b.add.zero_part(x);
    if (b.times(x, b.minv(x)) != x0 || b.times(b.minv(x), x) != x0)
      return fail(Fail::internal_implication, {x}, "x0 != xx^-1 = x^-1x");
    if (b.times(x0, x) != x || b.times(x, x0) != x)
      return fail(Fail::internal_implication, {x}, "a = a0 a = a a0 fails");
    if (b.add.zero_part(b.minv(x)) != x0)
      return fail(Fail::internal_implication, {x}, "(a^-1)0 != a0");
  }
  for (int a = 0; a < n; ++a)
    for (int e : set_elements(b.add.base.idempotents))
      if (b.times(a, e) != b.plus(a, e) || b.plus(a, e) != b.plus(e, a))
        return fail(Fail::internal_implication, {a, e},
                    "ae = a+e = e+a fails");
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const int p = b.add.zero_part(b.times(a, c));
      if (p != b.times(b.add.zero_part(a), b.add.zero_part(c)) ||
          p != b.plus(b.add.zero_part(a), b.add.zero_part(c)))
        return fail(Fail::internal_implication, {a, c},
                    "(ab)0 != a0 b0 = a0+b0");
    }
  return ok_diag();
}

Diag check_identity_correspondence(const WeakBrace& b) {
  auto add_id = identity_element(b.add.base.base);
  auto mul_id = identity_element(b.mul.base);
  if (add_id.has_value() != mul_id.has_value())
    return fail(Fail::internal_implication, {},
                "one operation has an identity, the other does not");
  if (add_id && *add_id != *mul_id)
    return fail(Fail::internal_implication, {*add_id, *mul_id},
                "additive and multiplicative identities differ");
  return ok_diag();
}

}  // namespace semibrace
