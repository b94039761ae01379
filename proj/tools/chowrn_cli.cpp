// chowrn: command-line front end over the C API.
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowrn/chowrn.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2, kSizeCap = 3 };

struct CliError {
  int code;
  std::string message;
};

int exit_code(chowrn_status s) {
  if (s == CHOWRN_OK) return kOk;
  if (s == CHOWRN_ERR_SIZE_CAP) return kSizeCap;
  if (s == CHOWRN_ERR_INTERNAL) return kMismatch;
  return kInputError;
}

void check(chowrn_status s) {
  if (s != CHOWRN_OK) throw CliError{exit_code(s), std::string(chowrn_status_name(s)) + ": " + chowrn_last_error()};
}

struct MatroidDeleter {
  void operator()(chowrn_matroid* m) const { chowrn_matroid_free(m); }
};
using MatroidHandle = std::unique_ptr<chowrn_matroid, MatroidDeleter>;

std::string take(char* s) {
  std::string out(s ? s : "");
  chowrn_string_free(s);
  return out;
}

struct Source {
  std::string builtin;
  std::string file;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* b = cmd->add_option("--builtin", src.builtin, "uniform:R:N, mk4, m1..m4, fano_minus");
  auto* f = cmd->add_option("--matroid", src.file, "matroid JSON file");
  b->excludes(f);
}

MatroidHandle load(const Source& src) {
  chowrn_matroid* m = nullptr;
  if (!src.builtin.empty()) {
    check(chowrn_matroid_builtin(src.builtin.c_str(), &m));
  } else if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw CliError{kInputError, "cannot read " + src.file};
    std::stringstream buffer;
    buffer << in.rdbuf();
    check(chowrn_matroid_from_json(buffer.str().c_str(), &m));
  } else {
    throw CliError{kInputError, "give --builtin NAME or --matroid FILE"};
  }
  return MatroidHandle(m);
}

std::string label_of(const chowrn_matroid* m) {
  char* s = nullptr;
  check(chowrn_matroid_label(m, &s));
  return take(s);
}

std::vector<std::size_t> hilbert_of(const chowrn_matroid* m) {
  std::vector<std::size_t> v(16);
  std::size_t len = 0;
  check(chowrn_hilbert(m, v.data(), v.size(), &len));
  v.resize(len);
  return v;
}

std::string joined(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

bool unimodal(const std::vector<std::size_t>& v) {
  std::size_t i = 1;
  while (i < v.size() && v[i] >= v[i - 1]) ++i;
  while (i < v.size() && v[i] <= v[i - 1]) ++i;
  return i >= v.size();
}

bool log_concave(const std::vector<std::size_t>& v) {
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (static_cast<unsigned long long>(v[i]) * v[i] < static_cast<unsigned long long>(v[i - 1]) * v[i + 1]) return false;
  return true;
}

std::string subset_text(const json& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i].get<int>());
  return out + "}";
}

std::string element_text(const json& element) {
  const auto& terms = element.at("terms");
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    std::string coeff = t.at("coeff").get<std::string>();
    const bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < t.at("chain").size(); ++i) {
      if (!mono.empty()) mono += "*";
      mono += "x" + subset_text(t.at("chain")[i]);
      const int p = t.at("powers")[i].get<int>();
      if (p > 1) mono += "^" + std::to_string(p);
    }
    if (mono.empty()) {
      out += coeff;
    } else {
      out += (coeff == "1" ? "" : coeff + "*") + mono;
    }
  }
  return out;
}

struct Global {
  std::string format = "pretty";
  int max_n = 0;
  int jobs = 1;
};

int cmd_hilbert(const Global& g, const Source& src, bool table) {
  if (!table) {
    auto m = load(src);
    const auto hf = hilbert_of(m.get());
    const std::string label = label_of(m.get());
    if (g.format == "json") {
      std::cout << json{{"label", label}, {"hilbert", hf}, {"unimodal", unimodal(hf)}, {"log_concave", log_concave(hf)}}.dump()
                << "\n";
    } else if (g.format == "csv") {
      std::cout << label << "," << joined(hf) << "\n";
    } else {
      std::cout << joined(hf) << "\n";
    }
    return kOk;
  }

  const std::size_t rows = chowrn_table1_size();
  struct Row {
    std::string label;
    std::vector<std::size_t> expected, computed;
    int status = kOk;
    std::string error;
  };
  std::vector<Row> results(rows);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows; i = next++) {
      Row& row = results[i];
      try {
        chowrn_matroid* raw = nullptr;
        row.expected.resize(16);
        std::size_t len = 0;
        check(chowrn_table1_row(i, &raw, row.expected.data(), row.expected.size(), &len));
        MatroidHandle m(raw);
        row.expected.resize(len);
        row.label = label_of(m.get());
        row.computed = hilbert_of(m.get());
        if (row.computed != row.expected) row.status = kMismatch;
      } catch (const CliError& e) {
        row.status = e.code;
        row.error = e.message;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, g.jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int status = kOk;
  std::size_t matched = 0;
  json out = json::array();
  for (const auto& row : results) {
    status = std::max(status, row.status);
    if (row.status == kOk) ++matched;
    if (g.format == "json") {
      out.push_back({{"label", row.label}, {"computed", row.computed}, {"expected", row.expected}, {"match", row.status == kOk}});
    } else if (g.format == "csv") {
      std::cout << row.label << "," << joined(row.computed) << "\n";
    } else {
      std::printf("%-22s %-24s %s\n", row.label.c_str(), ("(" + joined(row.computed) + ")").c_str(),
                  row.status == kOk ? "ok" : ("MISMATCH expected (" + joined(row.expected) + ")" + row.error).c_str());
    }
  }
  if (g.format == "json") {
    std::cout << json{{"rows", out}, {"matched", matched}, {"total", rows}}.dump() << "\n";
  } else if (g.format == "pretty") {
    std::printf("%zu/%zu rows match\n", matched, rows);
  }
  if (status == kMismatch && g.format == "csv") std::cerr << rows - matched << " rows differ from the reference values\n";
  return status;
}

int cmd_chern(const Global& g, const Source& src, const std::string& bundle, int k, bool raw, bool cross) {
  auto m = load(src);
  chowrn_bundle b;
  if (bundle == "S") {
    b = CHOWRN_BUNDLE_S;
  } else if (bundle == "Q") {
    b = CHOWRN_BUNDLE_Q;
  } else {
    throw CliError{kInputError, "--bundle must be S or Q"};
  }
  char* text = nullptr;
  check(chowrn_chern(m.get(), b, k, raw ? 1 : 0, &text));
  json result = json::parse(take(text));
  int agree = 1;
  if (cross) {
    check(chowrn_chern_cross_check(m.get(), b, k, &agree));
    result["routes_agree"] = agree == 1;
  }
  if (g.format == "json") {
    std::cout << result.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "chain,powers,coeff\n";
    for (const auto& t : result["element"]["terms"]) {
      std::string chain, powers;
      for (std::size_t i = 0; i < t["chain"].size(); ++i) {
        chain += (i ? " " : "") + subset_text(t["chain"][i]);
        powers += (i ? " " : "") + std::to_string(t["powers"][i].get<int>());
      }
      std::cout << chain << "," << powers << "," << t["coeff"].get<std::string>() << "\n";
    }
  } else {
    std::cout << "c_" << k << "(" << bundle << "_M) = " << element_text(result["element"]) << "\n";
    if (raw) {
      const char* what = bundle == "S" ? "ranks" : "nullities";
      for (const auto& s : result["shapes"]) {
        std::vector<std::size_t> levels, powers;
        for (const auto& x : s["levels"]) levels.push_back(x.get<std::size_t>());
        for (const auto& x : s["powers"]) powers.push_back(x.get<std::size_t>());
        std::cout << "  " << what << " (" << joined(levels) << ") powers (" << joined(powers)
                  << "): coefficient " << s["coeff"].get<std::string>() << " on " << s["terms"].get<std::size_t>()
                  << " chains\n";
      }
    }
    if (cross) std::cout << (agree ? "3 routes agree" : "routes DISAGREE") << "\n";
  }
  return agree ? kOk : kMismatch;
}

int cmd_csm(const Global& g, const Source& src, int k) {
  auto m = load(src);
  char* text = nullptr;
  int balanced = 0;
  check(chowrn_csm(m.get(), k, &text, &balanced));
  json result = json::parse(take(text));
  if (g.format == "json") {
    result["balanced"] = balanced == 1;
    std::cout << result.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "chain,w\n";
    for (const auto& w : result["weights"]) {
      std::string chain;
      for (std::size_t i = 0; i < w["chain"].size(); ++i) chain += (i ? " " : "") + subset_text(w["chain"][i]);
      std::cout << chain << "," << w["w"].dump() << "\n";
    }
  } else {
    for (const auto& w : result["weights"]) {
      std::string chain;
      for (std::size_t i = 0; i < w["chain"].size(); ++i) chain += (i ? " < " : "") + subset_text(w["chain"][i]);
      std::cout << (chain.empty() ? "(vertex)" : chain) << ": " << w["w"].dump() << "\n";
    }
    std::cout << (balanced ? "balanced" : "NOT balanced") << "\n";
  }
  return balanced ? kOk : kMismatch;
}

int cmd_gbcheck(const Global& g, int n) {
  char* text = nullptr;
  int ok = 0;
  check(chowrn_gb_check(n, &text, &ok));
  json result = json::parse(take(text));
  if (g.format == "csv") {
    std::cout << "a,b,leading_term,leading_term_ok,vanishes\n";
    for (const auto& x : result["generators"])
      std::cout << x["a"] << "," << x["b"] << "," << x["leading_term"].get<std::string>() << ","
                << x["leading_term_ok"] << "," << x["vanishes"] << "\n";
  } else {
    std::cout << (g.format == "json" ? result.dump() : result.dump(2)) << "\n";
  }
  return ok ? kOk : kMismatch;
}

int cmd_basis(const Global& g, int n, const std::string& degree) {
  int d = -1;
  if (degree != "all") {
    try {
      std::size_t used = 0;
      d = std::stoi(degree, &used);
      if (used != degree.size() || d < 0) throw std::invalid_argument("degree");
    } catch (const std::exception&) {
      throw CliError{kInputError, "--degree must be 'all' or a nonnegative integer"};
    }
  }
  char* text = nullptr;
  check(chowrn_basis(n, d, &text));
  json result = json::parse(take(text));
  if (g.format == "json") {
    std::cout << result.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "degree,monomial,subset\n";
    for (const auto& level : result["degrees"])
      for (const auto& m : level["monomials"])
        std::cout << level["degree"] << "," << m["monomial"].get<std::string>() << ","
                  << subset_text(m["subset"]) << "\n";
  } else {
    std::size_t total = 0;
    for (const auto& level : result["degrees"]) {
      std::cout << "degree " << level["degree"] << " (" << level["count"] << "):";
      for (const auto& m : level["monomials"]) std::cout << " " << m["monomial"].get<std::string>();
      std::cout << "\n";
      total += level["count"].get<std::size_t>();
    }
    std::cout << total << " monomials\n";
  }
  return kOk;
}

int cmd_census(const Global& g, const Source& src) {
  auto m = load(src);
  char* text = nullptr;
  int consistent = 0;
  check(chowrn_census(m.get(), &text, &consistent));
  json result = json::parse(take(text));
  if (g.format == "json") {
    std::cout << result.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "label,generators,rank,expected_rank,free_plus_loops,consistent\n"
              << label_of(m.get()) << "," << result["generators"] << "," << result["rank"] << ","
              << result["expected_rank"] << "," << result["free_plus_loops"] << "," << result["consistent"] << "\n";
  } else {
    auto pairs = [](const json& v) {
      std::string s;
      for (const auto& p : v) s += (s.empty() ? "" : " ") + std::string("y") + std::to_string(p[0].get<int>()) + "," + std::to_string(p[1].get<int>());
      return s.empty() ? std::string("none") : s;
    };
    std::cout << "vanishing:  " << pairs(result["vanishing"]) << "\n"
              << "predicted:  " << pairs(result["predicted_vanishing"]) << "\n"
              << "generators: " << result["generators"] << ", degree-1 rank " << result["rank"] << " (expected "
              << result["expected_rank"] << (result["free_plus_loops"].get<bool>() ? ", free plus loops" : "") << ")\n"
              << "sum (i+j) y_ij = 0: " << (result["weighted_relation_holds"].get<bool>() ? "yes" : "no") << "\n"
              << (consistent ? "consistent" : "INCONSISTENT") << "\n";
  }
  return consistent ? kOk : kMismatch;
}

int cmd_lefschetz(const Global& g, const Source& src) {
  auto m = load(src);
  int injective = 0;
  check(chowrn_lefschetz(m.get(), &injective));
  const auto hf = hilbert_of(m.get());
  if (g.format == "json") {
    std::cout << json{{"label", label_of(m.get())}, {"injective", injective == 1}, {"hilbert", hf}}.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << label_of(m.get()) << "," << injective << "\n";
  } else {
    std::cout << "HF (" << joined(hf) << "); multiplication by the ample class is "
              << (injective ? "injective" : "NOT injective") << " up to the middle degree\n";
  }
  return injective ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-nullity rings and tautological classes of matroids"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--max-n", g.max_n, "ground-set size cap");
  app.add_option("--jobs", g.jobs, "worker threads for table rows")->check(CLI::Range(1, 256));

  Source src;
  bool table = false, raw = false, cross = false;
  std::string bundle = "S", degree = "all";
  int k = 0, n = 0;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the rank-nullity ring");
  add_source(hilbert, src);
  hilbert->add_flag("--table1", table, "reproduce the reference table and diff against it");

  auto* chern = app.add_subcommand("chern", "Chern classes of the tautological bundles");
  add_source(chern, src);
  chern->add_option("--bundle", bundle, "S or Q")->check(CLI::IsMember({"S", "Q"}));
  chern->add_option("-k", k, "degree")->required();
  chern->add_flag("--raw", raw, "closed-form chain sum instead of normal form");
  chern->add_flag("--cross-check", cross, "compare all three formulas");

  auto* csm = app.add_subcommand("csm", "csm weights on the Bergman fan");
  add_source(csm, src);
  csm->add_option("-k", k, "use ch_k; the weights are csm_{rank-1-k}")->required();

  auto* gb = app.add_subcommand("gb-check", "verify the Groebner basis of the uniform case");
  gb->add_option("-n", n, "ground-set size")->required();

  auto* basis = app.add_subcommand("basis", "standard monomial basis of the uniform case");
  basis->add_option("-n", n, "ground-set size")->required();
  basis->add_option("--degree", degree, "a degree or 'all'");

  auto* census = app.add_subcommand("census", "degree-1 relations among the rank-nullity generators");
  add_source(census, src);
  auto* lefschetz = app.add_subcommand("lefschetz", "injectivity of the Lefschetz map");
  add_source(lefschetz, src);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (g.max_n > 0) check(chowrn_set_max_ground_set(g.max_n));
    if (hilbert->parsed()) {
      if (table && (!src.builtin.empty() || !src.file.empty()))
        throw CliError{kInputError, "--table1 takes no matroid"};
      return cmd_hilbert(g, src, table);
    }
    if (chern->parsed()) return cmd_chern(g, src, bundle, k, raw, cross);
    if (csm->parsed()) return cmd_csm(g, src, k);
    if (gb->parsed()) return cmd_gbcheck(g, n);
    if (basis->parsed()) return cmd_basis(g, n, degree);
    if (census->parsed()) return cmd_census(g, src);
    if (lefschetz->parsed()) return cmd_lefschetz(g, src);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
