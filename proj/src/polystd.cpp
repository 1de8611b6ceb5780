#include "stdpairs/polystd.hpp"
#include "stdpairs/errors.hpp"

#include <algorithm>

namespace stdpairs {

namespace {

// No generator divides root + N^sigma.
bool admissible(const std::vector<IntVec> &gens, const IntVec &root,
                const std::vector<std::size_t> &sigma) {
  for (const auto &g : gens) {
    bool divides = true;
    for (std::size_t i = 0; i < g.size() && divides; ++i)
      if (g[i] > root[i] &&
          !std::binary_search(sigma.begin(), sigma.end(), i))
        divides = false;
    if (divides)
      return false;
  }
  return true;
}

// Splits on the first variable x occurring in a generator. With m the
// largest x-exponent, pairs containing x come from the ideal with x set to
// 1; pairs with x-exponent e < m come from the slice ideal generated by
// generators of x-degree <= e, and survive unless they are admissible for
// the x = 1 ideal (then raising x would not leave the standard set).
std::vector<PolyPair> split(std::vector<IntVec> gens,
                            const std::vector<std::size_t> &vars,
                            std::size_t k) {
  gens = minimal_elements(std::move(gens));
  if (gens.empty())
    return {{IntVec(k, 0), vars}};
  if (is_zero(gens.front()))
    return {};
  std::size_t x = k;
  for (auto v : vars)
    if (std::any_of(gens.begin(), gens.end(),
                    [&](const IntVec &g) { return g[v] > 0; })) {
      x = v;
      break;
    }
  std::vector<std::size_t> rest;
  for (auto v : vars)
    if (v != x)
      rest.push_back(v);
  Int m = 0;
  for (const auto &g : gens)
    m = std::max(m, g[x]);

  auto drop_x = [x](IntVec g) {
    g[x] = 0;
    return g;
  };
  std::vector<IntVec> top;
  for (const auto &g : gens)
    top.push_back(drop_x(g));

  std::vector<PolyPair> out;
  for (auto p : split(top, rest, k)) {
    p.sigma.insert(std::lower_bound(p.sigma.begin(), p.sigma.end(), x), x);
    out.push_back(std::move(p));
  }
  for (Int e = 0; e < m; ++e) {
    std::vector<IntVec> slice;
    for (const auto &g : gens)
      if (g[x] <= e)
        slice.push_back(drop_x(g));
    for (auto p : split(slice, rest, k)) {
      if (admissible(top, p.root, p.sigma))
        continue;
      p.root[x] = e;
      out.push_back(std::move(p));
    }
  }
  return out;
}

} // namespace

std::vector<PolyPair> poly_standard_pairs(std::vector<IntVec> generators,
                                          std::size_t k) {
  for (const auto &g : generators) {
    if (g.size() != k)
      throw Error(ErrorKind::InvalidArgument,
                  "generator length differs from the number of variables");
    if (std::any_of(g.begin(), g.end(), [](Int v) { return v < 0; }))
      throw Error(ErrorKind::InvalidArgument, "negative exponent");
  }
  std::vector<std::size_t> vars(k);
  for (std::size_t i = 0; i < k; ++i)
    vars[i] = i;
  auto out = split(std::move(generators), vars, k);
  std::sort(out.begin(), out.end(), [](const PolyPair &a, const PolyPair &b) {
    if (a.sigma != b.sigma)
      return a.sigma < b.sigma;
    return a.root < b.root;
  });
  return out;
}

} // namespace stdpairs
