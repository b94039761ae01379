#include "chowrn/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "chowrn/error.hpp"

namespace chowrn {

namespace {

Matroid labeled(Matroid m, std::string label) {
  m.set_label(std::move(label));
  return m;
}

Matroid sum(std::initializer_list<Matroid> parts) {
  auto it = parts.begin();
  Matroid out = *it;
  for (++it; it != parts.end(); ++it) out = Matroid::direct_sum(out, *it);
  return out;
}

// Bases of the rank-r matroid on [n] whose non-bases are exactly the listed r-subsets.
Matroid all_but(int n, int r, std::initializer_list<std::vector<int>> non_bases) {
  std::set<Subset> excluded;
  for (const auto& nb : non_bases) excluded.insert(subset_from_elements(nb, n));
  std::vector<Subset> bases;
  for (Subset s = 0; s <= full_set(n); ++s)
    if (cardinality(s) == r && !excluded.count(s)) bases.push_back(s);
  return Matroid::from_bases(n, bases);
}

Matroid k4() {
  // Edges 1..6 are ab, bc, cd, da, ac, bd, so the triangles are {1,2,5}, {1,4,6}, {2,3,6}, {3,4,5}.
  const std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {2, 4}};
  return labeled(Matroid::graphic(4, edges), "MK4");
}

int parse_int(const std::string& text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(ErrorKind::kInvalidInput, "not an integer: '" + text + "'");
  return value;
}

}  // namespace

Matroid fano_minus() {
  return labeled(all_but(7, 3, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}}), "F7-");
}

Matroid builtin(const std::string& name) {
  if (name.rfind("uniform:", 0) == 0) {
    const auto colon = name.find(':', 8);
    if (colon == std::string::npos) fail(ErrorKind::kInvalidInput, "expected uniform:R:N");
    const int r = parse_int(name.substr(8, colon - 8));
    const int n = parse_int(name.substr(colon + 1));
    return labeled(Matroid::uniform(r, n), "U" + std::to_string(r) + std::to_string(n));
  }
  if (name == "mk4") return k4();
  if (name == "m1") return labeled(all_but(4, 2, {{1, 2}}), "M1");
  if (name == "m2") return labeled(all_but(5, 3, {{1, 2, 3}, {3, 4, 5}}), "M2");
  if (name == "m3") return labeled(all_but(6, 2, {{1, 2}, {3, 4}, {5, 6}}), "M3");
  if (name == "m4") return labeled(all_but(6, 4, {{1, 2, 5, 6}, {1, 3, 5, 6}, {1, 4, 5, 6}, {2, 3, 5, 6}, {2, 4, 5, 6}, {3, 4, 5, 6}}), "M4");
  if (name == "fano_minus") return fano_minus();
  fail(ErrorKind::kInvalidInput, "unknown builtin matroid '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"uniform:R:N", "mk4", "m1", "m2", "m3", "m4", "fano_minus"};
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = [] {
    std::vector<Table1Row> out;
    auto U = [](int r, int n) { return Matroid::uniform(r, n); };
    auto add = [&](std::string label, Matroid m, std::vector<std::size_t> hf) {
      m.set_label(label);
      out.push_back({std::move(label), std::move(m), std::move(hf)});
    };
    auto uniform_rows = [&](int n, std::vector<std::size_t> hf) {
      for (int r = 0; r <= n; ++r) add("U" + std::to_string(r) + std::to_string(n), U(r, n), hf);
    };

    uniform_rows(1, {1});

    uniform_rows(2, {1, 1});
    add("U01+U11", sum({U(0, 1), U(1, 1)}), {1, 1});

    uniform_rows(3, {1, 2, 1});
    add("U01+U12", sum({U(0, 1), U(1, 2)}), {1, 3, 1});
    add("U01+U01+U11", sum({U(0, 1), U(0, 1), U(1, 1)}), {1, 3, 1});
    add("U01+U11+U11", sum({U(0, 1), U(1, 1), U(1, 1)}), {1, 3, 1});
    add("U11+U12", sum({U(1, 1), U(1, 2)}), {1, 3, 1});

    uniform_rows(4, {1, 3, 3, 1});
    add("U01+U13", sum({U(0, 1), U(1, 3)}), {1, 4, 5, 1});
    add("U01+U01+U12", sum({U(0, 1), U(0, 1), U(1, 2)}), {1, 5, 6, 1});
    add("U01+U01+U01+U11", sum({U(0, 1), U(0, 1), U(0, 1), U(1, 1)}), {1, 5, 5, 1});
    add("M1", builtin("m1"), {1, 4, 5, 1});
    add("U12+U12", sum({U(1, 2), U(1, 2)}), {1, 4, 4, 1});
    add("U01+U23", sum({U(0, 1), U(2, 3)}), {1, 5, 5, 1});
    add("U11+U13", sum({U(1, 1), U(1, 3)}), {1, 5, 5, 1});
    add("U01+U11+U12", sum({U(0, 1), U(1, 1), U(1, 2)}), {1, 6, 8, 1});
    add("U01+U01+U11+U11", sum({U(0, 1), U(0, 1), U(1, 1), U(1, 1)}), {1, 6, 6, 1});
    add("U11+U23", sum({U(1, 1), U(2, 3)}), {1, 4, 5, 1});
    add("U11+U11+U12", sum({U(1, 1), U(1, 1), U(1, 2)}), {1, 5, 6, 1});
    add("U01+U11+U11+U11", sum({U(0, 1), U(1, 1), U(1, 1), U(1, 1)}), {1, 5, 5, 1});

    uniform_rows(5, {1, 4, 6, 4, 1});
    add("U01+U01+U13", sum({U(0, 1), U(0, 1), U(1, 3)}), {1, 6, 12, 9, 1});
    add("U01+U01+U01+U12", sum({U(0, 1), U(0, 1), U(0, 1), U(1, 2)}), {1, 7, 14, 9, 1});
    add("U01+U01+U01+U01+U11", sum({U(0, 1), U(0, 1), U(0, 1), U(0, 1), U(1, 1)}), {1, 7, 12, 7, 1});
    add("M2", builtin("m2"), {1, 5, 9, 7, 1});
    add("U01+U24", sum({U(0, 1), U(2, 4)}), {1, 6, 11, 7, 1});
    add("U01+U11+U23", sum({U(0, 1), U(1, 1), U(2, 3)}), {1, 8, 18, 12, 1});
    add("U11+U34", sum({U(1, 1), U(3, 4)}), {1, 5, 9, 7, 1});

    uniform_rows(6, {1, 5, 10, 10, 5, 1});
    // The printed row stops at 28,12; the top degree is always 1.
    add("U01+U01+U01+U01+U12", sum({U(0, 1), U(0, 1), U(0, 1), U(0, 1), U(1, 2)}), {1, 9, 25, 28, 12, 1});
    // Reference value as published. Direct computation gives R^4 = 8 here (the published row repeats U11+U45).
    add("M3", builtin("m3"), {1, 6, 14, 16, 9, 1});
    add("MK4", builtin("mk4"), {1, 6, 14, 16, 8, 1});
    add("U01+U11+U24", sum({U(0, 1), U(1, 1), U(2, 4)}), {1, 10, 32, 39, 16, 1});
    add("M4", builtin("m4"), {1, 8, 22, 25, 11, 1});
    add("U23+U23", sum({U(2, 3), U(2, 3)}), {1, 7, 18, 20, 8, 1});
    add("U11+U45", sum({U(1, 1), U(4, 5)}), {1, 6, 14, 16, 9, 1});

    add("F7-", fano_minus(), {1, 7, 20, 30, 25, 11, 1});
    return out;
  }();
  return rows;
}

std::vector<Matroid> all_matroids(int n) {
  if (n < 1 || n > 6) fail(ErrorKind::kSizeCap, "matroid enumeration is limited to 1 <= n <= 6");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Permutation> perms;
  do perms.push_back(order);
  while (std::next_permutation(order.begin(), order.end()));

  std::map<std::pair<int, std::vector<Subset>>, Matroid> classes;
  for (int r = 0; r <= n; ++r) {
    std::vector<Subset> candidates;
    for (Subset s = 0; s <= full_set(n); ++s)
      if (cardinality(s) == r) candidates.push_back(s);
    const std::size_t families = std::size_t{1} << candidates.size();
    for (std::size_t pick = 1; pick < families; ++pick) {
      std::vector<Subset> bases;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if ((pick >> i) & 1) bases.push_back(candidates[i]);
      // Canonical form: lexicographically least sorted basis list over all relabelings.
      std::vector<Subset> best;
      for (const auto& sigma : perms) {
        std::vector<Subset> image;
        for (Subset b : bases) image.push_back(permute(sigma, b));
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = std::move(image);
      }
      if (best != bases) continue;  // only the canonical representative of each class is tried
      std::pair key{r, best};
      if (classes.count(key)) continue;
      try {
        Matroid m = Matroid::from_bases(n, best);
        m.set_label("n" + std::to_string(n) + "r" + std::to_string(r) + "#" + std::to_string(classes.size()));
        classes.emplace(std::move(key), std::move(m));
      } catch (const Error&) {
      }
    }
  }
  std::vector<Matroid> out;
  int index = 0;
  int current_rank = -1;
  for (auto& [key, m] : classes) {
    if (key.first != current_rank) {
      current_rank = key.first;
      index = 0;
    }
    m.set_label("n" + std::to_string(n) + "r" + std::to_string(key.first) + "-" + std::to_string(index++));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matroid> corpus() {
  std::vector<Matroid> out;
  for (int n = 1; n <= 5; ++n)
    for (auto& m : all_matroids(n)) out.push_back(std::move(m));
  out.push_back(builtin("mk4"));
  return out;
}

}  // namespace chowrn
