#include "semibrace/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace semibrace {

namespace {

const std::vector<std::string> kOpLabels = {"add", "mul", "diamond"};

bool known_label(const std::string& s) {
  for (const auto& l : kOpLabels)
    if (l == s) return true;
  return false;
}

std::vector<std::string> significant_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    size_t j = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(i, j - i + 1));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Diag parse_fail(const std::string& what) {
  return fail(Fail::parse_error, {}, what);
}

}  // namespace

std::string read_text_file(const std::string& path, bool* ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *ok = false;
    return {};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  *ok = true;
  return buf.str();
}

Result<TableFile> parse_table_file(const std::string& text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) return parse_fail("empty file");
  auto head = tokens(lines[0]);
  if (head.empty() || head[0] != "elements:")
    return parse_fail("expected 'elements:' line first");
  TableFile f;
  f.names.assign(head.begin() + 1, head.end());
  const int n = static_cast<int>(f.names.size());
  if (n == 0) return parse_fail("no elements declared");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (index.count(f.names[i]))
      return parse_fail("duplicate element name '" + f.names[i] + "'");
    index[f.names[i]] = i;
  }
  size_t pos = 1;
  while (pos < lines.size()) {
    auto t = tokens(lines[pos]);
    if (t.size() != 2 || t[0] != "op" || t[1].back() != ':')
      return parse_fail("expected 'op <label>:' at line '" + lines[pos] + "'");
    std::string label = t[1].substr(0, t[1].size() - 1);
    if (!known_label(label))
      return parse_fail("unknown op label '" + label + "'");
    if (f.ops.count(label)) return parse_fail("duplicate op '" + label + "'");
    ++pos;
    std::vector<int> table;
    table.reserve(n * n);
    for (int r = 0; r < n; ++r, ++pos) {
      if (pos >= lines.size())
        return parse_fail("op '" + label + "' is missing rows");
      auto row = tokens(lines[pos]);
      if (static_cast<int>(row.size()) != n)
        return parse_fail("op '" + label + "' row " + std::to_string(r + 1) +
                          " has " + std::to_string(row.size()) +
                          " entries, expected " + std::to_string(n));
      for (const auto& cell : row) {
        auto it = index.find(cell);
        if (it == index.end())
          return parse_fail("undeclared element '" + cell + "' in op '" +
                            label + "'");
        table.push_back(it->second);
      }
    }
    f.ops[label] = std::move(table);
  }
  if (f.ops.empty()) return parse_fail("no op blocks");
  return f;
}

Result<TableFile> load_table_file(const std::string& path) {
  bool ok = false;
  std::string text = read_text_file(path, &ok);
  if (!ok) return parse_fail("cannot read '" + path + "'");
  auto parsed = parse_table_file(text);
  if (!parsed.ok())
    return parse_fail(path + ": " + parsed.error().detail);
  return parsed;
}

std::string emit_table_file(const TableFile& f) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& name : f.names) out << ' ' << name;
  out << '\n';
  const int n = static_cast<int>(f.names.size());
  for (const auto& label : kOpLabels) {
    auto it = f.ops.find(label);
    if (it == f.ops.end()) continue;
    out << "op " << label << ":\n";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j) out << ' ';
        out << f.names[it->second[i * n + j]];
      }
      out << '\n';
    }
  }
  return out.str();
}

Result<CayleyTable> table_from(const TableFile& f, const std::string& label) {
  auto it = f.ops.find(label);
  if (it == f.ops.end())
    return parse_fail("file has no '" + label + "' block");
  return validate_magma(static_cast<int>(f.names.size()), f.names, it->second);
}

TableFile table_file_from(const CayleyTable& t, const std::string& label) {
  TableFile f;
  f.names = t.names;
  f.ops[label] = t.table;
  return f;
}

Result<SemilatticeFileData> parse_semilattice_file(const std::string& text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) return parse_fail("empty file");
  auto head = tokens(lines[0]);
  if (head.empty() || head[0] != "elements:")
    return parse_fail("expected 'elements:' line first");
  SemilatticeFileData d;
  d.y_names.assign(head.begin() + 1, head.end());
  const int k = static_cast<int>(d.y_names.size());
  if (k == 0) return parse_fail("no semilattice elements declared");
  std::map<std::string, int> index;
  for (int i = 0; i < k; ++i) index[d.y_names[i]] = i;
  size_t pos = 1;
  if (pos >= lines.size() || tokens(lines[pos]) != tokens("op meet:"))
    return parse_fail("expected 'op meet:' block");
  ++pos;
  for (int r = 0; r < k; ++r, ++pos) {
    if (pos >= lines.size()) return parse_fail("meet block missing rows");
    auto row = tokens(lines[pos]);
    if (static_cast<int>(row.size()) != k)
      return parse_fail("meet row " + std::to_string(r + 1) + " malformed");
    for (const auto& cell : row) {
      auto it = index.find(cell);
      if (it == index.end())
        return parse_fail("undeclared semilattice element '" + cell + "'");
      d.meet.push_back(it->second);
    }
  }
  while (pos < lines.size()) {
    auto t = tokens(lines[pos]);
    if (t.size() == 3 && t[0] == "component" && t[1].back() == ':') {
      std::string y = t[1].substr(0, t[1].size() - 1);
      if (!index.count(y))
        return parse_fail("component for unknown element '" + y + "'");
      if (d.component_paths.count(y))
        return parse_fail("duplicate component for '" + y + "'");
      d.component_paths[y] = t[2];
      ++pos;
      continue;
    }
    if (t.size() == 4 && t[0] == "hom" && t[2] == "->" && t[3].back() == ':') {
      std::string a = t[1], b = t[3].substr(0, t[3].size() - 1);
      if (!index.count(a) || !index.count(b))
        return parse_fail("hom between unknown elements");
      auto key = std::make_pair(a, b);
      if (d.homs.count(key))
        return parse_fail("duplicate hom " + a + " -> " + b);
      std::vector<std::pair<std::string, std::string>> maps;
      ++pos;
      while (pos < lines.size()) {
        auto m = tokens(lines[pos]);
        if (m.size() != 3 || m[1] != "->") break;
        maps.push_back({m[0], m[2]});
        ++pos;
      }
      if (maps.empty()) return parse_fail("hom " + a + " -> " + b + " empty");
      d.homs[key] = std::move(maps);
      continue;
    }
    return parse_fail("unexpected line '" + lines[pos] + "'");
  }
  for (const auto& y : d.y_names)
    if (!d.component_paths.count(y))
      return parse_fail("no component declared for '" + y + "'");
  return d;
}

namespace {

std::string dirname_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".")
                                    : path.substr(0, slash);
}

}  // namespace

Result<SemilatticeSpec> load_semilattice_spec(const std::string& path) {
  bool ok = false;
  std::string text = read_text_file(path, &ok);
  if (!ok) return parse_fail("cannot read '" + path + "'");
  auto data = parse_semilattice_file(text);
  if (!data.ok()) return parse_fail(path + ": " + data.error().detail);
  const std::string dir = dirname_of(path);
  const int k = static_cast<int>(data->y_names.size());

  SemilatticeSpec spec;
  auto meet = validate_magma(k, data->y_names, data->meet);
  if (!meet.ok()) return meet.error();
  spec.meet = *meet;

  std::vector<std::map<std::string, int>> elem_index(k);
  for (int i = 0; i < k; ++i) {
    auto comp_file = load_table_file(
        dir + "/" + data->component_paths.at(data->y_names[i]));
    if (!comp_file.ok()) return comp_file.error();
    auto add = table_from(*comp_file, "add");
    auto mul = table_from(*comp_file, "mul");
    if (!add.ok()) return add.error();
    if (!mul.ok()) return mul.error();
    auto brace = check_weak_brace(*add, *mul);
    if (!brace.ok())
      return fail(Fail::spec_invalid, brace.error().witness,
                  "component " + data->y_names[i] + " is not a brace: " +
                      brace.error().str());
    for (int u = 0; u < brace->n(); ++u) elem_index[i][brace->name(u)] = u;
    spec.components.push_back(std::move(brace).value());
  }

  spec.homs.assign(k, std::vector<std::vector<int>>(k));
  for (int i = 0; i < k; ++i) spec.homs[i][i] = [&] {
    std::vector<int> id(spec.components[i].n());
    for (size_t u = 0; u < id.size(); ++u) id[u] = static_cast<int>(u);
    return id;
  }();
  for (const auto& [key, maps] : data->homs) {
    int a = -1, b = -1;
    for (int i = 0; i < k; ++i) {
      if (data->y_names[i] == key.first) a = i;
      if (data->y_names[i] == key.second) b = i;
    }
    std::vector<int> hom(spec.components[a].n(), -1);
    for (const auto& [src, dst] : maps) {
      auto si = elem_index[a].find(src);
      auto di = elem_index[b].find(dst);
      if (si == elem_index[a].end())
        return fail(Fail::spec_invalid, {},
                    "hom " + key.first + " -> " + key.second +
                        " maps unknown element '" + src + "'");
      if (di == elem_index[b].end())
        return fail(Fail::spec_invalid, {},
                    "hom " + key.first + " -> " + key.second +
                        " targets unknown element '" + dst + "'");
      if (hom[si->second] != -1)
        return fail(Fail::spec_invalid, {},
                    "hom " + key.first + " -> " + key.second +
                        " maps '" + src + "' twice");
      hom[si->second] = di->second;
    }
    for (int v : hom)
      if (v == -1)
        return fail(Fail::spec_invalid, {},
                    "hom " + key.first + " -> " + key.second +
                        " is not total");
    spec.homs[a][b] = std::move(hom);
  }
  return spec;
}

// -------------------------------------------------------------------
// report renderings
// -------------------------------------------------------------------

namespace {

int count_dual(const EnumerationReport& r) {
  int dual = 0;
  for (const auto& b : r.braces)
    if (check_clifford(b.mul).ok()) ++dual;
  return dual;
}

nlohmann::json table_json(const CayleyTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < t.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < t.n; ++j) row.push_back(t.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json flat_json(const std::vector<int>& table, int n) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) row.push_back(table[i * n + j]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string report_summary(const EnumerationReport& r) {
  std::ostringstream out;
  const size_t c = r.braces.size();
  switch (r.route) {
    case Route::gamma:
      out << c << " Gamma function" << (c == 1 ? "" : "s") << " ("
          << count_dual(r) << " dual)";
      break;
    case Route::good: {
      int cliff = 0;
      for (const auto& g : r.goods)
        if (g.kind == SubKind::clifford) ++cliff;
      out << c << " good inverse subsemigroup" << (c == 1 ? "" : "s") << " ("
          << cliff << " Clifford)";
      break;
    }
    case Route::affine:
      out << c << " affine structure" << (c == 1 ? "" : "s");
      break;
    case Route::oracle:
      out << c << " brace" << (c == 1 ? "" : "s") << " (" << count_dual(r)
          << " dual)";
      break;
  }
  if (!r.stats.complete) out << " [best-effort incomplete]";
  out << '\n';
  return out.str();
}

std::string report_tables(const EnumerationReport& r) {
  std::ostringstream out;
  out << report_summary(r);
  for (size_t i = 0; i < r.braces.size(); ++i) {
    const WeakBrace& b = r.braces[i];
    out << "# result " << (i + 1)
        << (check_clifford(b.mul).ok() ? " (dual)" : " (not dual)") << '\n';
    TableFile f;
    f.names = b.add.base.base.names;
    f.ops["add"] = b.add.base.base.table;
    f.ops["mul"] = b.mul.base.table;
    if (r.route == Route::affine)
      f.ops["diamond"] = r.affines[i].table;
    out << emit_table_file(f);
  }
  return out.str();
}

std::string report_json(const EnumerationReport& r) {
  nlohmann::json j;
  j["route"] = to_string(r.route);
  j["complete"] = r.stats.complete;
  j["count"] = r.braces.size();
  j["dual_count"] = count_dual(r);
  j["carrier"] = {{"names", r.carrier.names}, {"table", table_json(r.carrier)}};
  nlohmann::json results = nlohmann::json::array();
  for (size_t i = 0; i < r.braces.size(); ++i) {
    const WeakBrace& b = r.braces[i];
    nlohmann::json item;
    item["add"] = table_json(b.add.base.base);
    item["mul"] = table_json(b.mul.base);
    item["dual"] = check_clifford(b.mul).ok();
    if (r.route == Route::gamma) {
      nlohmann::json maps = nlohmann::json::array();
      for (int x = 0; x < b.n(); ++x)
        maps.push_back(r.endos.at(r.gammas[i].endo_of[x]).img);
      item["gamma"] = maps;
    }
    if (r.route == Route::good) {
      nlohmann::json elems = nlohmann::json::array();
      for (const auto& e : r.goods[i].elems)
        elems.push_back({{"endo", r.endos.at(e.endo).img},
                         {"point", e.point}});
      item["subsemigroup"] = elems;
      item["kind"] =
          r.goods[i].kind == SubKind::clifford ? "clifford" : "inverse";
    }
    if (r.route == Route::affine)
      item["diamond"] = flat_json(r.affines[i].table, b.n());
    results.push_back(item);
  }
  j["results"] = results;
  return j.dump(2) + "\n";
}

}  // namespace semibrace
