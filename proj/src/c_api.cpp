#include "chowrn/chowrn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "chowrn/corpus.hpp"
#include "chowrn/error.hpp"
#include "chowrn/json_io.hpp"
#include "chowrn/rank_nullity.hpp"
#include "chowrn/tautological.hpp"
#include "chowrn/uniform.hpp"

struct chowrn_matroid {
  chowrn::Matroid matroid;
};

namespace {

thread_local std::string last_error;

chowrn_status status_of(chowrn::ErrorKind kind) {
  switch (kind) {
    case chowrn::ErrorKind::kInvalidInput: return CHOWRN_ERR_INVALID_INPUT;
    case chowrn::ErrorKind::kOutOfRange: return CHOWRN_ERR_OUT_OF_RANGE;
    case chowrn::ErrorKind::kSizeCap: return CHOWRN_ERR_SIZE_CAP;
    case chowrn::ErrorKind::kContextMismatch: return CHOWRN_ERR_CONTEXT;
    case chowrn::ErrorKind::kUnsupported: return CHOWRN_ERR_UNSUPPORTED;
  }
  return CHOWRN_ERR_INTERNAL;
}

template <typename F>
chowrn_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CHOWRN_OK;
  } catch (const chowrn::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CHOWRN_ERR_SIZE_CAP;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CHOWRN_ERR_INTERNAL;
  }
}

chowrn_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return CHOWRN_ERR_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

chowrn::ChernSide side_of(chowrn_bundle bundle) {
  if (bundle == CHOWRN_BUNDLE_S) return chowrn::ChernSide::kSub;
  if (bundle == CHOWRN_BUNDLE_Q) return chowrn::ChernSide::kQuot;
  chowrn::fail(chowrn::ErrorKind::kInvalidInput, "bundle must be S or Q");
}

void copy_values(const std::vector<std::size_t>& v, size_t* values, size_t capacity, size_t* length) {
  for (std::size_t i = 0; i < v.size() && i < capacity; ++i) values[i] = v[i];
  if (length) *length = v.size();
}

}  // namespace

extern "C" {

const char* chowrn_version(void) { return "1.0.0"; }

const char* chowrn_last_error(void) { return last_error.c_str(); }

const char* chowrn_status_name(chowrn_status status) {
  switch (status) {
    case CHOWRN_OK: return "ok";
    case CHOWRN_ERR_INVALID_INPUT: return "invalid input";
    case CHOWRN_ERR_OUT_OF_RANGE: return "out of range";
    case CHOWRN_ERR_SIZE_CAP: return "size cap exceeded";
    case CHOWRN_ERR_CONTEXT: return "context mismatch";
    case CHOWRN_ERR_UNSUPPORTED: return "unsupported";
    case CHOWRN_ERR_NULL_ARGUMENT: return "null argument";
    case CHOWRN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void chowrn_string_free(char* s) { std::free(s); }

chowrn_status chowrn_set_max_ground_set(int n) {
  return guarded([&] { chowrn::set_max_ground_set(n); });
}

int chowrn_max_ground_set(void) { return chowrn::max_ground_set(); }

chowrn_status chowrn_matroid_from_json(const char* json, chowrn_matroid** out) {
  if (!json || !out) return null_argument("json/out");
  return guarded([&] { *out = new chowrn_matroid{chowrn::matroid_from_json_text(json)}; });
}

chowrn_status chowrn_matroid_builtin(const char* name, chowrn_matroid** out) {
  if (!name || !out) return null_argument("name/out");
  return guarded([&] { *out = new chowrn_matroid{chowrn::builtin(name)}; });
}

void chowrn_matroid_free(chowrn_matroid* m) { delete m; }

chowrn_status chowrn_matroid_size(const chowrn_matroid* m, int* n) {
  if (!m || !n) return null_argument("matroid/n");
  *n = m->matroid.size();
  return CHOWRN_OK;
}

chowrn_status chowrn_matroid_rank(const chowrn_matroid* m, int* rank) {
  if (!m || !rank) return null_argument("matroid/rank");
  *rank = m->matroid.rank();
  return CHOWRN_OK;
}

chowrn_status chowrn_matroid_label(const chowrn_matroid* m, char** label) {
  if (!m || !label) return null_argument("matroid/label");
  return guarded([&] { *label = copy_string(m->matroid.label()); });
}

chowrn_status chowrn_matroid_to_json(const chowrn_matroid* m, char** json) {
  if (!m || !json) return null_argument("matroid/json");
  return guarded([&] { *json = copy_string(chowrn::matroid_to_json(m->matroid).dump()); });
}

chowrn_status chowrn_hilbert(const chowrn_matroid* m, size_t* values, size_t capacity, size_t* length) {
  if (!m || (!values && capacity > 0)) return null_argument("matroid/values");
  return guarded([&] { copy_values(chowrn::rn_hilbert(m->matroid), values, capacity, length); });
}

chowrn_status chowrn_chern(const chowrn_matroid* m, chowrn_bundle bundle, int k, int raw, char** json) {
  if (!m || !json) return null_argument("matroid/json");
  return guarded([&] {
    const auto side = side_of(bundle);
    const auto raw_class = chowrn::chern_closed_form(m->matroid, side, k);
    chowrn::json out{{"bundle", side == chowrn::ChernSide::kSub ? "S" : "Q"}, {"k", k}, {"raw", raw != 0}};
    if (raw) {
      out["element"] = chowrn::chow_element_to_json(raw_class);
      out["shapes"] = chowrn::chern_shape_summary(raw_class, m->matroid, side);
    } else {
      out["element"] = chowrn::chow_element_to_json(chowrn::normal_form(raw_class));
    }
    *json = copy_string(out.dump());
  });
}

chowrn_status chowrn_chern_cross_check(const chowrn_matroid* m, chowrn_bundle bundle, int k, int* agree) {
  if (!m || !agree) return null_argument("matroid/agree");
  return guarded([&] {
    const auto side = side_of(bundle);
    const auto a = chowrn::normal_form(chowrn::chern_closed_form(m->matroid, side, k));
    const auto b = chowrn::normal_form(chowrn::chern_product_oracle(m->matroid, side, k));
    const auto c = chowrn::normal_form(chowrn::substitute_y(chowrn::chern_y_expansion(m->matroid, side, k), m->matroid));
    *agree = (a == b && a == c) ? 1 : 0;
  });
}

chowrn_status chowrn_csm(const chowrn_matroid* m, int k, char** json, int* balanced) {
  if (!m || !json) return null_argument("matroid/json");
  return guarded([&] {
    const auto w = chowrn::csm_weights(m->matroid, k);
    if (balanced) *balanced = w.dimension >= 1 ? chowrn::balancing_check(w) : 1;
    *json = copy_string(chowrn::csm_to_json(w, k).dump());
  });
}

chowrn_status chowrn_census(const chowrn_matroid* m, char** json, int* consistent) {
  if (!m || !json) return null_argument("matroid/json");
  return guarded([&] {
    const auto c = chowrn::degree1_relation_census(m->matroid);
    if (consistent) *consistent = c.consistent();
    *json = copy_string(chowrn::census_to_json(c).dump());
  });
}

chowrn_status chowrn_lefschetz(const chowrn_matroid* m, int* injective) {
  if (!m || !injective) return null_argument("matroid/injective");
  return guarded([&] { *injective = chowrn::lefschetz_check(m->matroid) ? 1 : 0; });
}

chowrn_status chowrn_basis(int n, int degree, char** json) {
  if (!json) return null_argument("json");
  return guarded([&] {
    const auto basis = chowrn::standard_basis(n);
    if (degree >= n) chowrn::fail(chowrn::ErrorKind::kOutOfRange, "degree outside 0..n-1");
    chowrn::json degrees = chowrn::json::array();
    for (int d = 0; d < n; ++d) {
      if (degree >= 0 && d != degree) continue;
      chowrn::json monomials = chowrn::json::array();
      for (const auto& e : basis.by_degree[d])
        monomials.push_back({{"monomial", chowrn::format_z_monomial(e)},
                             {"exponents", e},
                             {"subset", chowrn::subset_to_json(chowrn::subset_bijection_inverse(e))}});
      degrees.push_back({{"degree", d},
                         {"count", basis.by_degree[d].size()},
                         {"expected", chowrn::to_string(chowrn::binomial(n - 1, d))},
                         {"monomials", monomials}});
    }
    *json = copy_string(chowrn::json{{"n", n}, {"degrees", degrees}}.dump());
  });
}

chowrn_status chowrn_gb_check(int n, char** json, int* all_ok) {
  if (!json) return null_argument("json");
  return guarded([&] {
    const auto report = chowrn::gb_check(n);
    chowrn::json generators = chowrn::json::array();
    for (const auto& g : report.generators) {
      generators.push_back({{"a", g.a},
                            {"b", g.b},
                            {"leading_term", chowrn::format_z_monomial(chowrn::groebner_leading_term(n, g.a, g.b))},
                            {"leading_term_ok", g.leading_term_ok},
                            {"vanishes", g.vanishes}});
    }
    chowrn::json counts = chowrn::json::array();
    for (std::size_t d = 0; d < report.standard_counts.size(); ++d)
      counts.push_back({{"degree", d},
                        {"standard", report.standard_counts[d]},
                        {"expected", chowrn::to_string(chowrn::binomial(n - 1, static_cast<long>(d)))}});
    chowrn::json out{{"n", n},
                     {"generators", generators},
                     {"standard_counts", counts},
                     {"standard_matches_complement", report.standard_matches_complement},
                     {"independent", report.independent},
                     {"ok", report.ok()}};
    if (all_ok) *all_ok = report.ok();
    *json = copy_string(out.dump());
  });
}

size_t chowrn_table1_size(void) {
  try {
    return chowrn::table1().size();
  } catch (...) {
    return 0;
  }
}

chowrn_status chowrn_table1_row(size_t index, chowrn_matroid** matroid, size_t* expected, size_t capacity,
                                size_t* length) {
  if (!expected && capacity > 0) return null_argument("expected");
  return guarded([&] {
    const auto& rows = chowrn::table1();
    if (index >= rows.size()) chowrn::fail(chowrn::ErrorKind::kOutOfRange, "table row index out of range");
    if (matroid) *matroid = new chowrn_matroid{rows[index].matroid};
    copy_values(rows[index].hilbert, expected, capacity, length);
  });
}

}  // extern "C"
