#include "semibrace/endo.hpp"

#include <algorithm>
#include <string>

namespace semibrace {

namespace {

std::string img_key(const std::vector<int>& img) {
  std::string key;
  key.reserve(img.size());
  for (int v : img) key.push_back(static_cast<char>(v));
  return key;
}

}  // namespace

bool EndoMap::is_bijective() const {
  std::vector<char> seen(img.size(), 0);
  for (int v : img) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

EndoList::EndoList(std::vector<EndoMap> maps) : maps_(std::move(maps)) {
  std::sort(maps_.begin(), maps_.end(),
            [](const EndoMap& a, const EndoMap& b) { return a.img < b.img; });
  for (int i = 0; i < size(); ++i) index_[img_key(maps_[i].img)] = i;
  if (!maps_.empty()) {
    std::vector<int> id(maps_[0].img.size());
    for (size_t x = 0; x < id.size(); ++x) id[x] = static_cast<int>(x);
    identity_ = index_of(id);
  }
}

int EndoList::index_of(const std::vector<int>& img) const {
  auto it = index_.find(img_key(img));
  return it == index_.end() ? -1 : it->second;
}

int EndoList::compose(int i, int j) const {
  const auto& f = maps_[i].img;
  const auto& g = maps_[j].img;
  std::vector<int> fg(f.size());
  for (size_t x = 0; x < f.size(); ++x) fg[x] = f[g[x]];
  return index_of(fg);
}

Result<EndoList> enumerate_endomorphisms(const InverseSemigroup& s,
                                         int max_carrier) {
  const int n = s.n();
  if (n > max_carrier)
    return fail(Fail::carrier_too_large, {},
                "endomorphism enumeration bounded to n <= " +
                    std::to_string(max_carrier));
  // constraints img[t(x,y)] = img[x] + img[y] that become checkable once
  // position k is decided, i.e. max(x, y, t(x,y)) == k
  std::vector<std::vector<std::pair<int, int>>> checks(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      checks[std::max({x, y, s.at(x, y)})].push_back({x, y});

  std::vector<EndoMap> found;
  std::vector<int> img(n, -1);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      found.push_back(EndoMap{img});
      return;
    }
    for (int v = 0; v < n; ++v) {
      img[k] = v;
      bool ok = true;
      for (auto [x, y] : checks[k])
        if (img[s.at(x, y)] != s.at(img[x], img[y])) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
    }
    img[k] = -1;
  };
  rec(rec, 0);
  return EndoList(std::move(found));
}

Result<std::vector<EndoMap>> enumerate_automorphisms(const InverseSemigroup& s,
                                                     int max_carrier) {
  auto endos = enumerate_endomorphisms(s, max_carrier);
  if (!endos.ok()) return endos.error();
  std::vector<EndoMap> auts;
  for (const EndoMap& m : endos->maps())
    if (m.is_bijective()) auts.push_back(m);
  // group structure: identity present, closed, inverses present
  EndoList list(auts);
  if (list.identity_index() == -1)
    return fail(Fail::internal_implication, {}, "identity automorphism lost");
  for (int i = 0; i < list.size(); ++i) {
    bool has_inverse = false;
    for (int j = 0; j < list.size(); ++j) {
      int c = list.compose(i, j);
      if (c == -1)
        return fail(Fail::internal_implication, {},
                    "automorphisms not closed under composition");
      if (c == list.identity_index()) has_inverse = true;
    }
    if (!has_inverse)
      return fail(Fail::internal_implication, {},
                  "automorphism without inverse");
  }
  return list.maps();
}

HolomorphSet make_holomorph_set(HolomorphSet elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

bool holomorph_set_contains(const HolomorphSet& set, HolomorphElement e) {
  return std::binary_search(set.begin(), set.end(), e);
}

Result<HolomorphElement> Holomorph::product(HolomorphElement u,
                                            HolomorphElement v) const {
  int c = endos_->compose(u.endo, v.endo);
  if (c == -1)
    return fail(Fail::endo_not_in_list, {u.point, v.point},
                "composition escapes the enumerated endomorphism list");
  int point = add_->at(u.point, endos_->at(u.endo)(v.point));
  return HolomorphElement{c, point};
}

Result<HolomorphSet> Holomorph::closure(HolomorphSet seed) const {
  HolomorphSet out = make_holomorph_set(std::move(seed));
  bool grew = true;
  while (grew) {
    grew = false;
    HolomorphSet fresh;
    for (const auto& u : out)
      for (const auto& v : out) {
        auto p = product(u, v);
        if (!p.ok()) return p.error();
        if (!holomorph_set_contains(out, *p)) fresh.push_back(*p);
      }
    if (!fresh.empty()) {
      out.insert(out.end(), fresh.begin(), fresh.end());
      out = make_holomorph_set(std::move(out));
      grew = true;
    }
  }
  return out;
}

Diag Holomorph::check_product_associative() const {
  const int n = carrier_size();
  const int total = endos_->size() * n;
  auto id_of = [&](HolomorphElement e) { return e.endo * n + e.point; };
  std::vector<int> prod(total * total);
  for (int e = 0; e < endos_->size(); ++e)
    for (int x = 0; x < n; ++x)
      for (int g = 0; g < endos_->size(); ++g)
        for (int y = 0; y < n; ++y) {
          auto p = product({e, x}, {g, y});
          if (!p.ok()) return p.error();
          prod[(e * n + x) * total + id_of({g, y})] = id_of(*p);
        }
  for (int u = 0; u < total; ++u)
    for (int v = 0; v < total; ++v) {
      const int uv = prod[u * total + v];
      for (int w = 0; w < total; ++w)
        if (prod[uv * total + w] != prod[u * total + prod[v * total + w]])
          return fail(Fail::internal_implication, {u % n, v % n, w % n},
                      "holomorph product not associative");
    }
  return ok_diag();
}

Result<std::optional<EndoMap>> Holomorph::conjugating_automorphism(
    const HolomorphSet& h, const HolomorphSet& k) const {
  auto id0 = identity_element(add_->base.base);
  if (!id0)
    return fail(Fail::no_identity, {},
                "conjugacy requires an additive identity");
  auto auts = enumerate_automorphisms(add_->base);
  if (!auts.ok()) return auts.error();
  const HolomorphSet k_sorted = make_holomorph_set(k);
  for (const EndoMap& psi : *auts) {
    const int ipsi = endos_->index_of(psi.img);
    std::vector<int> inv_img(psi.img.size());
    for (size_t x = 0; x < psi.img.size(); ++x) inv_img[psi.img[x]] = static_cast<int>(x);
    const int ipsi_inv = endos_->index_of(inv_img);
    if (ipsi == -1 || ipsi_inv == -1)
      return fail(Fail::endo_not_in_list, {},
                  "automorphism missing from endomorphism list");
    // (psi,0)(f,x)(psi^-1,0) = (psi f psi^-1, psi(x) + psi(f(0)))
    HolomorphSet image;
    for (const auto& [fe, x] : h) {
      int c = endos_->compose(endos_->compose(ipsi, fe), ipsi_inv);
      if (c == -1)
        return fail(Fail::endo_not_in_list, {x},
                    "conjugated endomorphism missing");
      const EndoMap& f = endos_->at(fe);
      image.push_back({c, add_->at(psi(x), psi(f(*id0)))});
    }
    if (make_holomorph_set(std::move(image)) == k_sorted)
      return std::optional<EndoMap>(psi);
  }
  return std::optional<EndoMap>(std::nullopt);
}

}  // namespace semibrace
