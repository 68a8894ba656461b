#include "semibrace/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace semibrace {

const char* to_string(Route r) {
  switch (r) {
    case Route::good: return "good";
    case Route::gamma: return "gamma";
    case Route::affine: return "affine";
    case Route::oracle: return "oracle";
  }
  return "?";
}

namespace {

struct Budget {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> pruned{0};
  std::atomic<std::uint64_t> leaves{0};
  std::atomic<bool> aborted{false};
  std::uint64_t limit = 0;

  // true when the search must stop
  bool tick() {
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > limit) {
      aborted.store(true, std::memory_order_relaxed);
    }
    return aborted.load(std::memory_order_relaxed);
  }
};

// ------------------------------------------------------------------
// gamma / good routes: assignments x -> endomorphism index with the
// composition constraint endo[x + f_x(y)] = endo[x] o endo[y] propagated
// eagerly, exactly the reasoning used to pin elements by hand.
// ------------------------------------------------------------------

struct AssignmentSearch {
  const CliffordStructure& s;
  const EndoList& endos;
  bool good_route;
  Budget* budget;

  int n = 0, m = 0;
  std::vector<std::vector<char>> unary;  // [x][endo] allowed
  std::vector<int> order;                // idempotents first

  std::vector<int> assign;
  std::vector<int> trail;
  std::vector<std::vector<int>> found;
  Diag internal;

  AssignmentSearch(const CliffordStructure& s_, const EndoList& endos_,
                   bool good_route_, Budget* budget_)
      : s(s_), endos(endos_), good_route(good_route_), budget(budget_) {
    n = s.n();
    m = endos.size();
    auto id0 = identity_element(s.base.base);
    unary.assign(n, std::vector<char>(m, 1));
    for (int x = 0; x < n; ++x) {
      const int x0 = s.zero_part(x);
      for (int e = 0; e < m; ++e) {
        const EndoMap& f = endos.at(e);
        bool ok = true;
        // shared image condition: x0 + f(y) = f(y)  ((G3), third part of (F1))
        for (int y = 0; y < n && ok; ++y) ok = s.at(x0, f(y)) == f(y);
        if (ok && good_route && id0) ok = f(*id0) == x0;  // (G4)
        if (ok && !good_route && s.base.idem(x)) {
          // (F4) pins gamma_e on idempotents, gamma_{x0}(x) = x on H_e
          for (int g : set_elements(s.base.idempotents))
            if (f(g) != s.at(x, g)) { ok = false; break; }
          if (ok)
            for (int y : s.h_classes[s.h_class[x]])
              if (f(y) != y) { ok = false; break; }
        }
        unary[x][e] = ok ? 1 : 0;
      }
    }
    for (int x = 0; x < n; ++x)
      if (s.base.idem(x)) order.push_back(x);
    for (int x = 0; x < n; ++x)
      if (!s.base.idem(x)) order.push_back(x);
    assign.assign(n, -1);
  }

  bool propagate(int x0, int e0) {
    std::vector<std::pair<int, int>> queue{{x0, e0}};
    while (!queue.empty()) {
      auto [u, g] = queue.back();
      queue.pop_back();
      if (assign[u] != -1) {
        if (assign[u] != g) return false;
        continue;
      }
      if (!unary[u][g]) return false;
      assign[u] = g;
      trail.push_back(u);
      for (int v = 0; v < n; ++v) {
        if (assign[v] == -1) continue;
        const int zu = s.at(u, endos.at(assign[u])(v));
        const int cu = endos.compose(assign[u], assign[v]);
        if (cu == -1) return false;
        queue.push_back({zu, cu});
        const int zv = s.at(v, endos.at(assign[v])(u));
        const int cv = endos.compose(assign[v], assign[u]);
        if (cv == -1) return false;
        queue.push_back({zv, cv});
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      assign[trail.back()] = -1;
      trail.pop_back();
    }
  }

  void leaf() {
    budget->leaves.fetch_add(1, std::memory_order_relaxed);
    Holomorph hol(s, endos);
    if (good_route) {
      HolomorphSet h;
      for (int x = 0; x < n; ++x) h.push_back({assign[x], x});
      if (is_good_subsemigroup(hol, make_holomorph_set(std::move(h))).ok())
        found.push_back(assign);
      return;
    }
    auto gamma = is_gamma_function(hol, assign);
    const bool dual_ok = check_dual_gamma(hol, assign).ok();
    if (!gamma.ok()) {
      if (dual_ok && internal.ok())
        internal = fail(Fail::internal_implication, gamma.error().witness,
                        "dual Gamma candidate fails the Gamma conditions: " +
                            gamma.error().str());
      return;
    }
    found.push_back(assign);
  }

  void dfs(size_t pos) {
    if (budget->aborted.load(std::memory_order_relaxed)) return;
    while (pos < order.size() && assign[order[pos]] != -1) ++pos;
    if (pos == order.size()) {
      leaf();
      return;
    }
    const int x = order[pos];
    for (int e = 0; e < m; ++e) {
      if (!unary[x][e]) continue;
      if (budget->tick()) return;
      const size_t mark = trail.size();
      if (propagate(x, e)) {
        dfs(pos + 1);
      } else {
        budget->pruned.fetch_add(1, std::memory_order_relaxed);
      }
      undo(mark);
    }
  }
};

Result<std::vector<std::vector<int>>> run_assignment_search(
    const CliffordStructure& s, const EndoList& endos, bool good_route,
    const SearchOptions& opt, SearchStats* stats) {
  Budget budget;
  budget.limit = opt.budget;
  const auto start = std::chrono::steady_clock::now();

  const int jobs = std::max(1, opt.jobs);
  std::vector<AssignmentSearch> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back(s, endos, good_route, &budget);

  // split the candidate list of the first branch variable across workers
  const int first = workers[0].order.empty() ? -1 : workers[0].order[0];
  auto run_worker = [&](int w) {
    AssignmentSearch& as = workers[w];
    if (first == -1) {
      if (w == 0) as.leaf();
      return;
    }
    int rank = 0;
    for (int e = 0; e < as.m; ++e) {
      if (!as.unary[first][e]) continue;
      if (rank++ % jobs != w) continue;
      if (budget.tick()) return;
      const size_t mark = as.trail.size();
      if (as.propagate(first, e)) {
        as.dfs(0);
      } else {
        budget.pruned.fetch_add(1, std::memory_order_relaxed);
      }
      as.undo(mark);
    }
  };
  if (jobs == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(run_worker, w);
    for (auto& t : threads) t.join();
  }

  stats->nodes = budget.nodes.load();
  stats->pruned = budget.pruned.load();
  stats->leaves = budget.leaves.load();
  stats->complete = !budget.aborted.load();
  stats->wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  std::vector<std::vector<int>> found;
  for (auto& w : workers) {
    if (!w.internal.ok()) return w.internal;
    found.insert(found.end(), w.found.begin(), w.found.end());
  }
  if (!stats->complete)
    return fail(Fail::budget_exceeded, {},
                "node budget " + std::to_string(opt.budget) + " exhausted");
  std::sort(found.begin(), found.end());
  return found;
}

Result<EndoList> endos_for(const CliffordStructure& add,
                           const SearchOptions& opt) {
  return enumerate_endomorphisms(add.base, opt.max_carrier_endo);
}

}  // namespace

Result<EnumerationReport> enumerate_gamma_functions(
    const CliffordStructure& add, const SearchOptions& opt) {
  auto endos = endos_for(add, opt);
  if (!endos.ok()) return endos.error();
  EnumerationReport report;
  report.route = Route::gamma;
  report.carrier = add.base.base;
  report.endos = *endos;
  auto found =
      run_assignment_search(add, report.endos, false, opt, &report.stats);
  if (!found.ok()) return found.error();
  Holomorph hol(add, report.endos);
  std::vector<std::pair<std::vector<int>, int>> keyed;
  for (size_t i = 0; i < found->size(); ++i) {
    auto gamma = is_gamma_function(hol, (*found)[i]);
    if (!gamma.ok()) return gamma.error();
    auto brace = brace_from_gamma(hol, *gamma);
    if (!brace.ok()) return brace.error();
    report.gammas.push_back(std::move(gamma).value());
    report.braces.push_back(std::move(brace).value());
    keyed.push_back({report.braces.back().mul.base.table, (int)i});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<GammaFunction> gs;
  std::vector<WeakBrace> bs;
  for (auto& [key, i] : keyed) {
    gs.push_back(std::move(report.gammas[i]));
    bs.push_back(std::move(report.braces[i]));
  }
  report.gammas = std::move(gs);
  report.braces = std::move(bs);
  return report;
}

Result<EnumerationReport> enumerate_good_subsemigroups(
    const CliffordStructure& add, const SearchOptions& opt) {
  auto endos = endos_for(add, opt);
  if (!endos.ok()) return endos.error();
  EnumerationReport report;
  report.route = Route::good;
  report.carrier = add.base.base;
  report.endos = *endos;
  auto found =
      run_assignment_search(add, report.endos, true, opt, &report.stats);
  if (!found.ok()) return found.error();
  Holomorph hol(add, report.endos);
  std::vector<std::pair<std::vector<int>, int>> keyed;
  for (size_t i = 0; i < found->size(); ++i) {
    HolomorphSet h;
    for (int x = 0; x < add.n(); ++x)
      h.push_back({(*found)[i][x], x});
    auto good = is_good_subsemigroup(hol, make_holomorph_set(std::move(h)));
    if (!good.ok()) return good.error();
    auto brace = brace_from_good(hol, *good);
    if (!brace.ok()) return brace.error();
    report.goods.push_back(std::move(good).value());
    report.braces.push_back(std::move(brace).value());
    keyed.push_back({report.braces.back().mul.base.table, (int)i});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<GoodSubsemigroup> gs;
  std::vector<WeakBrace> bs;
  for (auto& [key, i] : keyed) {
    gs.push_back(std::move(report.goods[i]));
    bs.push_back(std::move(report.braces[i]));
  }
  report.goods = std::move(gs);
  report.braces = std::move(bs);
  return report;
}

// ------------------------------------------------------------------
// affine route
// ------------------------------------------------------------------

namespace {

struct AffineSearch {
  const InverseSemigroup& mul;
  Budget* budget;
  int n;
  std::vector<int> cell;                  // -1 unknown
  std::vector<std::vector<char>> domain;  // [cell][value]
  std::vector<int> free_cells;
  std::vector<std::vector<int>> found;
  bool infeasible = false;

  explicit AffineSearch(const InverseSemigroup& mul_, Budget* budget_)
      : mul(mul_), budget(budget_), n(mul_.n()) {
    cell.assign(n * n, -1);
    auto pin = [&](int i, int j, int v) {
      int& c = cell[i * n + j];
      if (c != -1 && c != v) infeasible = true;
      c = v;
    };
    // (A3) pins idempotent rows and columns
    for (int e : set_elements(mul.idempotents)) {
      for (int a = 0; a < n; ++a) {
        pin(e, a, mul.at(e, a));
        pin(a, e, mul.at(mul.at(mul.neg(a), e), a));
      }
    }
    domain.assign(n * n, std::vector<char>(n, 1));
    for (int x = 0; x < n; ++x) {
      // (a a^-1)(a^-1 <> b) = a^-1 <> b cuts every cell of row x = a^-1
      const int ee = mul.at(mul.neg(x), x);
      for (int b = 0; b < n; ++b)
        for (int v = 0; v < n; ++v)
          if (mul.at(ee, v) != v) domain[x * n + b][v] = 0;
    }
    for (int c = 0; c < n * n; ++c) {
      if (cell[c] != -1) {
        if (!domain[c][cell[c]]) infeasible = true;
        continue;
      }
      free_cells.push_back(c);
    }
  }

  int dia(int i, int j) const { return cell[i * n + j]; }

  // partial (A1)/(A2) over all triples, skipping unknowns
  bool consistent() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const int lhs1 = dia(mul.at(a, b), c);
          const int q = dia(a, c);
          const int rhs1 = q == -1 ? -1 : dia(b, q);
          if (lhs1 != -1 && rhs1 != -1 && lhs1 != rhs1) return false;
          const int t1 = dia(b, c);
          const int lhs2 = t1 == -1 ? -1 : dia(a, mul.at(b, t1));
          const int r1 = dia(a, b);
          const int r2 = dia(a, c);
          const int r3 = (r1 == -1 || r2 == -1) ? -1 : dia(r1, r2);
          const int rhs2 = r3 == -1 ? -1 : mul.at(r1, r3);
          if (lhs2 != -1 && rhs2 != -1 && lhs2 != rhs2) return false;
        }
    return true;
  }

  void dfs(size_t pos) {
    if (budget->aborted.load(std::memory_order_relaxed)) return;
    if (pos == free_cells.size()) {
      budget->leaves.fetch_add(1, std::memory_order_relaxed);
      if (is_affine_structure(mul, cell).ok()) found.push_back(cell);
      return;
    }
    const int c = free_cells[pos];
    for (int v = 0; v < n; ++v) {
      if (!domain[c][v]) continue;
      if (budget->tick()) return;
      cell[c] = v;
      if (consistent()) {
        dfs(pos + 1);
      } else {
        budget->pruned.fetch_add(1, std::memory_order_relaxed);
      }
      cell[c] = -1;
    }
  }
};

}  // namespace

Result<EnumerationReport> enumerate_affine_structures(
    const InverseSemigroup& mul, const SearchOptions& opt) {
  EnumerationReport report;
  report.route = Route::affine;
  report.carrier = mul.base;
  Budget budget;
  budget.limit = opt.budget;
  const auto start = std::chrono::steady_clock::now();

  const int jobs = std::max(1, opt.jobs);
  std::vector<AffineSearch> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) workers.emplace_back(mul, &budget);

  if (!workers[0].infeasible) {
    auto run_worker = [&](int w) {
      AffineSearch& as = workers[w];
      if (as.free_cells.empty()) {
        if (w == 0) as.dfs(0);
        return;
      }
      const int c = as.free_cells[0];
      int rank = 0;
      for (int v = 0; v < as.n; ++v) {
        if (!as.domain[c][v]) continue;
        if (rank++ % jobs != w) continue;
        if (budget.tick()) return;
        as.cell[c] = v;
        if (as.consistent()) {
          as.dfs(1);
        } else {
          budget.pruned.fetch_add(1, std::memory_order_relaxed);
        }
        as.cell[c] = -1;
      }
    };
    if (jobs == 1) {
      run_worker(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(run_worker, w);
      for (auto& t : threads) t.join();
    }
  }

  report.stats.nodes = budget.nodes.load();
  report.stats.pruned = budget.pruned.load();
  report.stats.leaves = budget.leaves.load();
  report.stats.complete = !budget.aborted.load();
  report.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!report.stats.complete)
    return fail(Fail::budget_exceeded, {},
                "node budget " + std::to_string(opt.budget) + " exhausted");

  std::vector<std::vector<int>> tables;
  for (auto& w : workers)
    tables.insert(tables.end(), w.found.begin(), w.found.end());
  std::sort(tables.begin(), tables.end());
  for (const auto& t : tables) {
    auto d = is_affine_structure(mul, t);
    if (!d.ok()) return d.error();
    auto brace = brace_from_affine(mul, *d);
    if (!brace.ok()) return brace.error();
    report.affines.push_back(std::move(d).value());
    report.braces.push_back(std::move(brace).value());
  }
  // canonical order: by the induced (varied) addition table
  std::vector<int> idx(report.braces.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    return report.braces[i].add.base.base.table <
           report.braces[j].add.base.base.table;
  });
  std::vector<AffineStructure> ds;
  std::vector<WeakBrace> bs;
  for (int i : idx) {
    ds.push_back(std::move(report.affines[i]));
    bs.push_back(std::move(report.braces[i]));
  }
  report.affines = std::move(ds);
  report.braces = std::move(bs);
  return report;
}

// ------------------------------------------------------------------
// definition-only oracle
// ------------------------------------------------------------------

namespace {

struct OracleSearch {
  const InverseSemigroup& fixed;
  OracleSide side;
  Budget* budget;
  int n;
  std::vector<int> cell;
  std::vector<std::vector<int>> found;

  OracleSearch(const InverseSemigroup& fixed_, OracleSide side_,
               Budget* budget_)
      : fixed(fixed_), side(side_), budget(budget_), n(fixed_.n()) {
    cell.assign(n * n, -1);
  }

  int tab(int i, int j) const { return cell[i * n + j]; }

  bool assoc_partial() const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int p = tab(x, y);
        for (int z = 0; z < n; ++z) {
          const int l = p == -1 ? -1 : tab(p, z);
          const int q = tab(y, z);
          const int r = q == -1 ? -1 : tab(x, q);
          if (l != -1 && r != -1 && l != r) return false;
        }
      }
    return true;
  }

  void leaf() {
    budget->leaves.fetch_add(1, std::memory_order_relaxed);
    auto table = validate_magma(n, fixed.base.names, cell);
    if (!table.ok()) return;
    auto varied = von_neumann_inverses(*table);
    if (!varied.ok()) return;
    const InverseSemigroup& add =
        side == OracleSide::second_op_mul ? fixed : *varied;
    const InverseSemigroup& mul =
        side == OracleSide::second_op_mul ? *varied : fixed;
    if (!check_axiom_weak1(add, mul).ok()) return;
    for (int x = 0; x < n; ++x)
      if (mul.at(x, mul.neg(x)) != add.at(add.neg(x), x)) return;
    found.push_back(cell);
  }

  void dfs(int pos) {
    if (budget->aborted.load(std::memory_order_relaxed)) return;
    if (pos == n * n) {
      leaf();
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (budget->tick()) return;
      cell[pos] = v;
      if (assoc_partial()) {
        dfs(pos + 1);
      } else {
        budget->pruned.fetch_add(1, std::memory_order_relaxed);
      }
      cell[pos] = -1;
    }
  }
};

}  // namespace

Result<EnumerationReport> oracle_enumerate_braces(
    const InverseSemigroup& fixed, OracleSide side, const SearchOptions& opt) {
  const int n = fixed.n();
  if (n > 4)
    return fail(Fail::carrier_too_large, {},
                "oracle is exhaustive only up to n = 4");
  EnumerationReport report;
  report.route = Route::oracle;
  report.carrier = fixed.base;
  Budget budget;
  budget.limit = opt.budget;
  const auto start = std::chrono::steady_clock::now();

  const int jobs = std::max(1, opt.jobs);
  std::vector<OracleSearch> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) workers.emplace_back(fixed, side, &budget);
  auto run_worker = [&](int w) {
    OracleSearch& os = workers[w];
    for (int v = 0; v < n; ++v) {
      if (v % jobs != w) continue;
      if (budget.tick()) return;
      os.cell[0] = v;
      os.dfs(1);
      os.cell[0] = -1;
    }
  };
  if (jobs == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(run_worker, w);
    for (auto& t : threads) t.join();
  }

  report.stats.nodes = budget.nodes.load();
  report.stats.pruned = budget.pruned.load();
  report.stats.leaves = budget.leaves.load();
  report.stats.complete = !budget.aborted.load();
  report.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  // the oracle is best-effort at n = 4: an exhausted budget yields an
  // explicitly incomplete report rather than an error
  std::vector<std::vector<int>> tables;
  for (auto& w : workers)
    tables.insert(tables.end(), w.found.begin(), w.found.end());
  std::sort(tables.begin(), tables.end());
  for (const auto& t : tables) {
    auto table = validate_magma(n, fixed.base.names, t);
    if (!table.ok()) return table.error();
    auto brace = side == OracleSide::second_op_mul
                     ? check_weak_brace(fixed.base, *table)
                     : check_weak_brace(*table, fixed.base);
    if (!brace.ok()) return brace.error();
    report.braces.push_back(std::move(brace).value());
  }
  return report;
}

// ------------------------------------------------------------------
// isomorphism classes
// ------------------------------------------------------------------

namespace {

bool braces_isomorphic(const WeakBrace& a, const WeakBrace& b) {
  const int n = a.n();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        ok = p[a.plus(u, v)] == b.plus(p[u], p[v]) &&
             p[a.times(u, v)] == b.times(p[u], p[v]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<std::vector<int>> partition_from(const std::vector<int>& rep) {
  std::vector<std::vector<int>> out;
  std::vector<int> seen(rep.size(), -1);
  for (size_t i = 0; i < rep.size(); ++i) {
    int root = static_cast<int>(i);
    while (rep[root] != root) root = rep[root];
    if (seen[root] == -1) {
      seen[root] = static_cast<int>(out.size());
      out.push_back({});
    }
    out[seen[root]].push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

Result<std::vector<std::vector<int>>> isomorphism_classes(
    const std::vector<WeakBrace>& braces) {
  if (braces.empty()) return std::vector<std::vector<int>>{};
  const int n = braces[0].n();
  if (n > 8)
    return fail(Fail::carrier_too_large, {},
                "bijection scan bounded to n <= 8");
  for (const auto& b : braces)
    if (b.n() != n)
      return fail(Fail::dimension_mismatch, {},
                  "braces must share one carrier size");
  const int k = static_cast<int>(braces.size());
  std::vector<int> rep(k);
  std::iota(rep.begin(), rep.end(), 0);
  auto root = [&](int i) {
    while (rep[i] != i) i = rep[i];
    return i;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (root(i) == root(j)) continue;
      if (braces_isomorphic(braces[i], braces[j])) rep[root(j)] = root(i);
    }
  auto classes = partition_from(rep);

  // cross-check against holomorph conjugacy when every brace shares one
  // addition that has an identity
  bool same_add = true;
  for (const auto& b : braces)
    same_add = same_add && b.add.base.base == braces[0].add.base.base;
  if (same_add && identity_element(braces[0].add.base.base).has_value()) {
    auto endos = enumerate_endomorphisms(braces[0].add.base);
    if (endos.ok()) {
      Holomorph hol(braces[0].add, *endos);
      std::vector<GoodSubsemigroup> goods;
      for (const auto& b : braces) {
        auto g = good_from_brace(hol, b);
        if (!g.ok()) return g.error();
        goods.push_back(std::move(g).value());
      }
      std::vector<int> crep(k);
      std::iota(crep.begin(), crep.end(), 0);
      auto croot = [&](int i) {
        while (crep[i] != i) i = crep[i];
        return i;
      };
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          if (croot(i) == croot(j)) continue;
          auto conj =
              hol.conjugating_automorphism(goods[i].elems, goods[j].elems);
          if (!conj.ok()) return conj.error();
          if (conj->has_value()) crep[croot(j)] = croot(i);
        }
      if (partition_from(crep) != classes)
        return fail(Fail::internal_implication, {},
                    "isomorphism classes disagree with conjugacy classes");
    }
  }
  return classes;
}

}  // namespace semibrace
