// permprop: command line front end for the permutation statistics library.
// Subcommands: stats, count, moments, sample, decay, spherical, census.
// Exit codes: 0 ok, 2 bad input, 3 cap exceeded, 4 failed precondition.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permprop/bigint.hpp"
#include "permprop/blocks.hpp"
#include "permprop/enumerate.hpp"
#include "permprop/errors.hpp"
#include "permprop/joint_table.hpp"
#include "permprop/moments.hpp"
#include "permprop/montecarlo.hpp"
#include "permprop/permutation.hpp"
#include "permprop/rng.hpp"
#include "permprop/spherical.hpp"
#include "permprop/version.hpp"

using json = nlohmann::ordered_json;
using namespace permprop;

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitPrecondition = 4;

struct Options {
  std::string format;  // json | csv | plain ("" = per-command default)
  std::string out_path;
  int threads = 0;  // 0 = resolve from env / hardware
  std::optional<int> cap_override;
};

std::vector<int> parse_index_set(const std::string& text) {
  std::vector<int> values;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    size_t pos = 0;
    const long v = std::stol(token, &pos);
    if (pos != token.size()) {
      throw std::invalid_argument("bad token '" + token + "' in index set");
    }
    values.push_back(static_cast<int>(v));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return values;
}

int resolve_threads(const Options& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("PERMPROP_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int table_cap(const Options& options) {
  return options.cap_override.value_or(kJointTableCap);
}

void emit(const Options& options, const std::string& text) {
  if (options.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(options.out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file " + options.out_path);
  }
  file << text;
}

std::string version_comment() {
  return std::string("# permprop ") + kVersion + "\n";
}

std::string render_json(const json& payload) { return payload.dump(2) + "\n"; }

template <class Int>
std::string join(const std::vector<Int>& values, char sep) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(values[i]);
  }
  return out;
}

std::string rational_string(const BigRat& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

// ---- stats ----------------------------------------------------------------

int run_stats(const Options& options, const std::string& perm_text,
              bool descent_diagnostic) {
  const Permutation w = Permutation::parse(perm_text);
  const DescentProfile descents = left_descent_set(w);
  const std::int64_t ell = inversion_number(w);
  const std::int64_t x = statistic_x(w);

  const std::string format = options.format.empty() ? "json" : options.format;
  if (format == "json") {
    json payload;
    payload["version"] = kVersion;
    payload["n"] = w.degree();
    payload["oneline"] = w.str();
    payload["ell"] = ell;
    payload["J"] = descents.positions;
    payload["d"] = descents.count();
    payload["X"] = x;
    payload["proper"] = is_proper(w);
    if (descent_diagnostic) {
      payload["J_prefix_scan_variant"] = left_descents_prefix_scan(w).positions;
    }
    emit(options, render_json(payload));
  } else if (format == "csv") {
    std::ostringstream out;
    out << version_comment() << "oneline,ell,J,d,X,proper\n";
    out << join(std::vector<std::int32_t>(w.word().begin(), w.word().end()), ' ')
        << ',' << ell << ',' << join(descents.positions, ';') << ','
        << descents.count() << ',' << x << ','
        << (is_proper(w) ? "true" : "false") << '\n';
    emit(options, out.str());
  } else {
    std::ostringstream out;
    out << "permprop " << kVersion << "\n"
        << "w      = " << w.str() << "\n"
        << "ell    = " << ell << "\n"
        << "J      = {" << join(descents.positions, ',') << "}\n"
        << "d      = " << descents.count() << "\n"
        << "X      = " << x << "\n"
        << "proper = " << (is_proper(w) ? "true" : "false") << "\n";
    if (descent_diagnostic) {
      out << "J (prefix-scan variant) = {"
          << join(left_descents_prefix_scan(w).positions, ',') << "}\n";
    }
    emit(options, out.str());
  }
  return 0;
}

// ---- count ----------------------------------------------------------------

int run_count(const Options& options, int n, const std::string& method,
              bool upto) {
  std::vector<json> rows;
  const int first = upto ? 1 : n;
  for (int degree = first; degree <= n; ++degree) {
    BigInt proper;
    if (method == "brute") {
      proper = count_proper(brute_force_joint_table(degree));
    } else {
      proper = count_proper(degree, table_cap(options));
    }
    const BigInt total = factorial(degree);
    json row;
    row["n"] = degree;
    row["proper_count"] = proper.str();
    row["total"] = total.str();
    row["ratio_decimal_string"] = decimal_string(BigRat(proper, total), 12);
    rows.push_back(std::move(row));
  }

  const std::string format = options.format.empty() ? "json" : options.format;
  if (format == "json") {
    json payload;
    payload["version"] = kVersion;
    payload["method"] = method;
    payload["census"] = rows;
    emit(options, render_json(payload));
  } else if (format == "csv") {
    std::ostringstream out;
    out << version_comment() << "n,proper_count,total,ratio\n";
    for (const auto& row : rows) {
      out << row["n"].get<int>() << ',' << row["proper_count"].get<std::string>()
          << ',' << row["total"].get<std::string>() << ','
          << row["ratio_decimal_string"].get<std::string>() << '\n';
    }
    emit(options, out.str());
  } else {
    std::ostringstream out;
    out << "permprop " << kVersion << " (" << method << ")\n";
    for (const auto& row : rows) {
      out << "n=" << row["n"].get<int>() << "  proper "
          << row["proper_count"].get<std::string>() << " of "
          << row["total"].get<std::string>() << "  ratio "
          << row["ratio_decimal_string"].get<std::string>() << "\n";
    }
    emit(options, out.str());
  }
  return 0;
}

// ---- moments ----------------------------------------------------------------

int run_moments(const Options& options, int n) {
  const ExactMoments moments = exact_moments(n, table_cap(options));
  const BigRat formula = formula_ex(n);
  const BigRat formula_d2 = formula_ed2(n);
  const BigRat bound = chebyshev_bound(moments);

  const std::string format = options.format.empty() ? "json" : options.format;
  if (format == "json") {
    json payload;
    payload["version"] = kVersion;
    payload["n"] = n;
    payload["E_L"] = rational_string(moments.E_L);
    payload["E_D"] = rational_string(moments.E_D);
    payload["E_D2"] = rational_string(moments.E_D2);
    payload["formula_ED2"] = rational_string(formula_d2);
    payload["E_X"] = rational_string(moments.E_X);
    payload["formula_EX"] = rational_string(formula);
    payload["E_X2"] = rational_string(moments.E_X2);
    payload["Var_X"] = rational_string(moments.Var_X);
    payload["chebyshev_bound"] = rational_string(bound);
    payload["match"] = moments.E_X == formula && moments.E_D2 == formula_d2;
    emit(options, render_json(payload));
  } else {
    std::ostringstream out;
    out << "permprop " << kVersion << "\n"
        << "n      = " << n << "\n"
        << "E[L]   = " << moments.E_L << " = " << decimal_string(moments.E_L, 6)
        << "\n"
        << "E[D]   = " << moments.E_D << "\n"
        << "E[D^2] = " << moments.E_D2 << "  (formula " << formula_d2 << ")\n"
        << "E[X]   = " << moments.E_X << "  (formula " << formula << ")\n"
        << "E[X^2] = " << moments.E_X2 << "\n"
        << "Var X  = " << moments.Var_X << "\n"
        << "chebyshev_bound = " << decimal_string(bound, 6) << "\n"
        << "match  = "
        << ((moments.E_X == formula && moments.E_D2 == formula_d2) ? "true"
                                                                   : "false")
        << "\n";
    emit(options, out.str());
  }
  return 0;
}

// ---- sample / decay ---------------------------------------------------------

std::string montecarlo_output(const Options& options,
                              const std::vector<SampleReport>& reports) {
  const std::string format = options.format.empty() ? "csv" : options.format;
  if (format == "json") {
    json rows = json::array();
    for (const auto& report : reports) {
      const MomentSummary& s = report.summary;
      json row;
      row["version"] = kVersion;
      row["n"] = s.n;
      row["samples"] = s.samples;
      row["seed"] = s.seed;
      row["mean_X"] = decimal_string(s.mean_x(), 9);
      row["se_mean"] = s.se_mean();
      if (report.formula_ex_value) {
        row["formula_EX"] = decimal_string(*report.formula_ex_value, 9);
      }
      row["m2_X"] = decimal_string(s.second_moment_x(), 9);
      row["ratio_to_n4_over_64"] = decimal_string(s.ratio_to_n4_over_64(), 9);
      row["proper_rate"] = decimal_string(s.proper_rate(), 9);
      row["se_rate"] = s.se_rate();
      if (report.exact_rate) {
        row["exact_rate"] = decimal_string(*report.exact_rate, 9);
      }
      if (report.chebyshev) {
        row["chebyshev_bound"] = decimal_string(*report.chebyshev, 9);
      }
      rows.push_back(std::move(row));
    }
    return render_json(rows);
  }
  std::ostringstream out;
  out << version_comment();
  write_montecarlo_csv(out, reports);
  return out.str();
}

int run_sample(const Options& options, int n, std::uint64_t samples,
               std::uint64_t seed) {
  const auto summary =
      estimate_moments(n, samples, seed, resolve_threads(options));
  const std::vector<SampleReport> reports{annotate(summary, table_cap(options))};
  emit(options, montecarlo_output(options, reports));
  return 0;
}

int run_decay(const Options& options, const std::vector<int>& ns,
              std::uint64_t samples, std::uint64_t seed) {
  const auto reports = decay_experiment(ns, samples, seed,
                                        resolve_threads(options),
                                        table_cap(options));
  emit(options, montecarlo_output(options, reports));
  return 0;
}

// ---- spherical / census -----------------------------------------------------

int run_spherical(const Options& options, const std::string& perm_text,
                  const std::optional<std::string>& i_text, bool fast) {
  const Permutation w = Permutation::parse(perm_text);
  std::vector<int> I;
  if (i_text) {
    I = parse_index_set(*i_text);
  } else {
    const auto J = left_descent_set(w).positions;
    I.assign(J.begin(), J.end());
  }
  const SearchMode mode = fast ? SearchMode::fast : SearchMode::verification;
  const auto witness = witness_word(w, I, mode);

  const std::string format = options.format.empty() ? "json" : options.format;
  if (format == "json") {
    json payload;
    payload["version"] = kVersion;
    payload["oneline"] = w.str();
    payload["I"] = I;
    payload["J"] = left_descent_set(w).positions;
    payload["spherical"] = witness.has_value();
    payload["witness"] = witness ? join(witness->letters, ';') : "";
    payload["proper"] = is_proper(w);
    emit(options, render_json(payload));
  } else {
    std::ostringstream out;
    out << "permprop " << kVersion << "\n"
        << "w = " << w.str() << ", I = {" << join(I, ',') << "}\n"
        << "spherical = " << (witness ? "true" : "false") << "\n";
    if (witness) out << "witness = " << join(witness->letters, ';') << "\n";
    emit(options, out.str());
  }
  return 0;
}

int run_census(const Options& options, int n) {
  const int cap = options.cap_override.value_or(kCensusCap);
  const auto rows = spherical_census(n, cap);
  std::ostringstream out;
  out << version_comment();
  write_census_csv(out, rows);
  emit(options, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation properness and sphericality toolkit"};
  app.set_version_flag("--version", std::string("permprop ") + kVersion);
  app.require_subcommand(1);

  Options options;
  app.add_option("--format", options.format, "json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--out", options.out_path, "write output to this file");
  app.add_option("--threads", options.threads,
                 "worker threads (default: PERMPROP_THREADS or hardware)");
  int cap_override = 0;
  auto* cap_flag = app.add_option("--cap-override", cap_override,
                                  "raise a guarded size cap");

  std::string perm_text, i_text, method = "dp";
  int n = 0;
  bool upto = false, fast = false, descent_diagnostic = false;
  bool have_i = false;
  std::uint64_t samples = 10000, seed = 42;
  std::string ns_text;

  auto* stats = app.add_subcommand("stats", "statistics of one permutation");
  stats->add_option("--perm", perm_text, "one-line notation")->required();
  stats->add_flag("--descent-diagnostic", descent_diagnostic,
                  "also print the prefix-scan descent variant");

  auto* count = app.add_subcommand("count", "exact proper-permutation census");
  count->add_option("--n", n, "degree")->required();
  count->add_option("--method", method, "dp or brute")
      ->check(CLI::IsMember({"dp", "brute"}));
  count->add_flag("--upto", upto, "emit all degrees 1..n");

  auto* moments = app.add_subcommand("moments", "exact moments vs closed forms");
  moments->add_option("--n", n, "degree")->required();

  auto* sample = app.add_subcommand("sample", "Monte Carlo moment estimates");
  sample->add_option("--n", n, "degree")->required();
  sample->add_option("--samples", samples, "sample count (>= 2)");
  sample->add_option("--seed", seed, "generator seed");

  auto* decay = app.add_subcommand("decay", "properness decay experiment");
  decay->add_option("--ns", ns_text, "ascending degrees, e.g. 20,40,80")
      ->required();
  decay->add_option("--samples", samples, "samples per degree");
  decay->add_option("--seed", seed, "generator seed");

  auto* spherical = app.add_subcommand("spherical", "decide I-sphericality");
  spherical->add_option("--perm", perm_text, "one-line notation")->required();
  auto* i_option =
      spherical->add_option("--I", i_text, "subset of J(w); defaults to J(w)");
  spherical->add_flag("--fast", fast, "allow the properness pre-filter");

  auto* census = app.add_subcommand("census", "sphericality census of S_n");
  census->add_option("--n", n, "degree")->required();

  // let --format/--out/--threads/--cap-override appear after the subcommand
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (cap_flag->count() > 0) options.cap_override = cap_override;
  have_i = i_option->count() > 0;

  try {
    if (stats->parsed()) return run_stats(options, perm_text, descent_diagnostic);
    if (count->parsed()) return run_count(options, n, method, upto);
    if (moments->parsed()) return run_moments(options, n);
    if (sample->parsed()) return run_sample(options, n, samples, seed);
    if (decay->parsed()) {
      std::vector<int> ns;
      for (int v : parse_index_set(ns_text)) ns.push_back(v);
      return run_decay(options, ns, samples, seed);
    }
    if (spherical->parsed()) {
      return run_spherical(options, perm_text,
                           have_i ? std::optional<std::string>(i_text)
                                  : std::nullopt,
                           fast);
    }
    if (census->parsed()) return run_census(options, n);
  } catch (const cap_error& e) {
    std::cerr << "permprop: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const precondition_error& e) {
    std::cerr << "permprop: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "permprop: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "permprop: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
