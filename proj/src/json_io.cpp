#include "chowrn/json_io.hpp"

#include <map>

#include "chowrn/error.hpp"

namespace chowrn {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::kInvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(ErrorKind::kInvalidInput, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const char* what) {
  if (!v.is_array()) fail(ErrorKind::kInvalidInput, std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) fail(ErrorKind::kInvalidInput, std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Subset subset_from_json(const json& v, int n) {
  const auto elements = int_list(v, "subset");
  for (int e : elements)
    if (e < 1 || e > n) fail(ErrorKind::kInvalidInput, "element " + std::to_string(e) + " outside [1.." + std::to_string(n) + "]");
  return subset_from_elements(elements, n);
}

}  // namespace

json subset_to_json(Subset s) { return elements_of(s); }

Matroid matroid_from_json(const json& j) {
  const std::string type = field(j, "type").is_string() ? field(j, "type").get<std::string>() : "";
  Matroid m = [&] {
    if (type == "uniform") return Matroid::uniform(int_field(j, "r"), int_field(j, "n"));
    if (type == "bases") {
      const int n = int_field(j, "n");
      if (n < 1 || n > max_ground_set())
        fail(n < 1 ? ErrorKind::kInvalidInput : ErrorKind::kSizeCap, "ground set size " + std::to_string(n) + " not supported");
      const json& list = field(j, "bases");
      if (!list.is_array()) fail(ErrorKind::kInvalidInput, "'bases' must be an array");
      std::vector<Subset> bases;
      for (const auto& b : list) bases.push_back(subset_from_json(b, n));
      return Matroid::from_bases(n, bases);
    }
    if (type == "graphic") {
      const int v = int_field(j, "vertices");
      const json& list = field(j, "edges");
      if (!list.is_array()) fail(ErrorKind::kInvalidInput, "'edges' must be an array");
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : list) {
        const auto ends = int_list(e, "edge");
        if (ends.size() != 2) fail(ErrorKind::kInvalidInput, "an edge has exactly two endpoints");
        edges.emplace_back(ends[0], ends[1]);
      }
      return Matroid::graphic(v, edges);
    }
    if (type == "direct_sum") {
      const json& parts = field(j, "parts");
      if (!parts.is_array() || parts.empty()) fail(ErrorKind::kInvalidInput, "'parts' must be a nonempty array");
      Matroid out = matroid_from_json(parts.front());
      for (std::size_t i = 1; i < parts.size(); ++i) out = Matroid::direct_sum(out, matroid_from_json(parts[i]));
      return out;
    }
    fail(ErrorKind::kInvalidInput, "unknown matroid type '" + type + "'");
  }();
  if (j.contains("label") && j.at("label").is_string()) m.set_label(j.at("label").get<std::string>());
  return m;
}

Matroid matroid_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return matroid_from_json(j);
}

json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (Subset b : m.bases()) bases.push_back(subset_to_json(b));
  json out{{"type", "bases"}, {"n", m.size()}, {"bases", bases}};
  if (!m.label().empty()) out["label"] = m.label();
  return out;
}

json chow_element_to_json(const ChowElement& a) {
  json terms = json::array();
  for (const auto& [mono, c] : a.terms()) {
    json chain = json::array(), powers = json::array();
    for (int i = 0; i < mono.length(); ++i) {
      chain.push_back(subset_to_json(mono.set(i)));
      powers.push_back(mono.power(i));
    }
    terms.push_back({{"chain", chain}, {"powers", powers}, {"coeff", to_string(c)}});
  }
  const auto d = a.degree();
  return {{"degree", d ? json(*d) : json(nullptr)}, {"terms", terms}};
}

ChowElement chow_element_from_json(const json& j, const RingPtr& ring) {
  ChowElement out(ring);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) fail(ErrorKind::kInvalidInput, "'terms' must be an array");
  for (const auto& t : terms) {
    const json& chain = field(t, "chain");
    const auto powers = int_list(field(t, "powers"), "powers");
    if (!chain.is_array() || chain.size() != powers.size())
      fail(ErrorKind::kInvalidInput, "'chain' and 'powers' must have equal length");
    std::vector<std::pair<Subset, int>> factors;
    for (std::size_t i = 0; i < powers.size(); ++i) {
      if (powers[i] < 1) fail(ErrorKind::kInvalidInput, "powers must be positive");
      const Subset s = subset_from_json(chain[i], ring->size());
      if (!ring->is_generator(s)) fail(ErrorKind::kContextMismatch, "x" + format_subset(s) + " is not a generator");
      factors.emplace_back(s, powers[i]);
    }
    auto mono = ChainMonomial::from_factors(factors);
    if (!mono) fail(ErrorKind::kInvalidInput, "term subsets do not form a chain");
    const json& c = field(t, "coeff");
    Integer coeff;
    try {
      coeff = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long long>());
    } catch (const std::exception&) {
      fail(ErrorKind::kInvalidInput, "coefficient is not an integer");
    }
    out.add_term(*mono, coeff);
  }
  return out;
}

json chern_shape_summary(const ChowElement& a, const Matroid& m, ChernSide side) {
  std::map<std::tuple<std::vector<int>, std::vector<int>, Integer>, std::size_t> groups;
  for (const auto& [mono, c] : a.terms()) {
    std::vector<int> levels, powers;
    for (int i = 0; i < mono.length(); ++i) {
      levels.push_back(side == ChernSide::kSub ? m.rank(mono.set(i)) : m.nullity(mono.set(i)));
      powers.push_back(mono.power(i));
    }
    ++groups[{levels, powers, c}];
  }
  json out = json::array();
  for (const auto& [key, count] : groups) {
    const auto& [levels, powers, c] = key;
    out.push_back({{"levels", levels}, {"powers", powers}, {"coeff", to_string(c)}, {"terms", count}});
  }
  return out;
}

json csm_to_json(const MinkowskiWeight& w, int k) {
  json weights = json::array();
  for (const auto& [chain, value] : w.weights) {
    json c = json::array();
    for (Subset f : chain) c.push_back(subset_to_json(f));
    // Weights are small in practice; fall back to a string if one ever leaves the 64-bit range.
    json v = (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
                 ? json(static_cast<long long>(value))
                 : json(to_string(value));
    weights.push_back({{"chain", c}, {"w", v}});
  }
  return {{"k", k}, {"weights", weights}};
}

json census_to_json(const RelationCensus& c) {
  auto pairs = [](const std::vector<std::pair<int, int>>& v) {
    json out = json::array();
    for (auto [i, j] : v) out.push_back({i, j});
    return out;
  };
  return {{"vanishing", pairs(c.vanishing)},
          {"predicted_vanishing", pairs(c.predicted_vanishing)},
          {"generators", c.generator_count},
          {"rank", c.rank},
          {"expected_rank", c.expected_rank},
          {"free_plus_loops", c.free_plus_loops},
          {"weighted_relation_holds", c.weighted_relation_holds},
          {"consistent", c.consistent()}};
}

json z_polynomial_to_json(const ZPolynomial& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"exponents", it->first}, {"coeff", to_string(it->second)}});
  return {{"n", p.variables()}, {"terms", terms}, {"text", p.to_string()}};
}

std::string hilbert_csv_row(const std::string& label, const std::vector<std::size_t>& values) {
  std::string out = label;
  for (auto v : values) out += "," + std::to_string(v);
  return out;
}

}  // namespace chowrn
