#include "hodge/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "hodge/combinatorics.hpp"
#include "hodge/dvv.hpp"
#include "hodge/hurwitz.hpp"
#include "hodge/lambert.hpp"
#include "hodge/partition.hpp"
#include "hodge/recursion.hpp"
#include "hodge/xi_basis.hpp"

namespace hodge::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string cache_path;
  std::uint64_t budget = kDefaultOracleBudget;
  unsigned threads = 0;
  std::string format = "json";
};

/// Usage problems found after parsing (bad numeric ranges and the like).
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

unsigned worker_count(const RunConfig &cfg) {
  if (cfg.threads)
    return cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Loads the cache file if one is configured and present.
void open_cache(HodgeCache &cache, const RunConfig &cfg, std::ostream &err) {
  if (!cfg.cache_path.empty() && std::filesystem::exists(cfg.cache_path)) {
    cache.load(cfg.cache_path);
    err << "cache: loaded " << cache.snapshot().size() << " entries from " << cfg.cache_path << "\n";
  }
}

void close_cache(const HodgeCache &cache, const RunConfig &cfg, std::ostream &err) {
  if (cfg.cache_path.empty())
    return;
  err << "cache: computed " << cache.recursion_count() << " polynomials\n";
  cache.save(cfg.cache_path);
}

json rational_json(const Rational &r) { return r.to_string(); }

json n_json(const std::vector<unsigned> &n) { return json(n); }

std::string n_text(const std::vector<unsigned> &n, const char *sep) {
  std::string s;
  for (std::size_t k = 0; k < n.size(); ++k)
    s += (k ? sep : "") + std::to_string(n[k]);
  return s;
}

std::string float17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Top-level fields one per line; array elements one per line, compact.
void write_json(const json &doc, std::ostream &out) {
  out << "{";
  bool first = true;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    out << (first ? "\n " : ",\n ") << json(it.key()).dump() << ": ";
    first = false;
    if (it->is_array() && !it->empty()) {
      out << "[";
      for (std::size_t k = 0; k < it->size(); ++k)
        out << (k ? ",\n  " : "\n  ") << (*it)[k].dump();
      out << "\n ]";
    } else {
      out << it->dump();
    }
  }
  out << "\n}\n";
}

/// Sorted tuples n with |n| = total.
std::vector<std::vector<unsigned>> sorted_tuples(std::size_t ell, unsigned total) {
  std::vector<std::vector<unsigned>> out;
  for (auto &n : compositions(ell, total))
    if (std::is_sorted(n.begin(), n.end()))
      out.push_back(std::move(n));
  return out;
}

struct IntegralRow {
  int g;
  int ell;
  std::vector<unsigned> n;
  int j;
  Rational value;
};

/// Every <tau_n lambda_j>_{g,l} with n sorted and 0 <= j <= g.
std::vector<IntegralRow> integral_rows(const HodgeTable &table, const std::vector<HodgeKey> &keys) {
  std::vector<IntegralRow> rows;
  for (HodgeKey k : keys) {
    const int dim = 3 * k.g - 3 + k.ell;
    for (int j = 0; j <= k.g && j <= dim; ++j)
      for (auto &n : sorted_tuples(k.ell, static_cast<unsigned>(dim - j)))
        rows.push_back({k.g, k.ell, n, j, table.get(k.g, n, j)});
  }
  return rows;
}

void emit_rows(const std::vector<IntegralRow> &rows, const std::string &format, std::ostream &out) {
  if (format == "csv") {
    out << "g,ell,n,j,value\n";
    for (const auto &r : rows)
      out << r.g << ',' << r.ell << ",\"" << n_text(r.n, ",") << "\"," << r.j << ','
          << r.value.to_string() << "\n";
  } else if (format == "text") {
    for (const auto &r : rows)
      out << "g=" << r.g << " ell=" << r.ell << " n=(" << n_text(r.n, ",") << ") j=" << r.j << " "
          << r.value.to_string() << "\n";
  } else {
    json entries = json::array();
    for (const auto &r : rows)
      entries.push_back(
          {{"g", r.g}, {"ell", r.ell}, {"n", n_json(r.n)}, {"j", r.j}, {"value", rational_json(r.value)}});
    write_json(json{{"entries", entries}}, out);
  }
}

void fill_keys(HodgeCache &cache, const std::vector<HodgeKey> &keys, const RunConfig &cfg) {
  int max_euler = 0;
  for (HodgeKey k : keys)
    max_euler = std::max(max_euler, k.euler());
  // Level-parallel fill below the top level; the remaining keys on demand.
  if (max_euler > 1)
    cache.fill(max_euler - 1, worker_count(cfg));
  for (HodgeKey k : keys)
    cache.get(k);
}

/// Overall status of a verification: failures dominate infeasible items.
int verdict(std::size_t failed, std::size_t infeasible) {
  if (failed)
    return kCheckFailed;
  if (infeasible)
    return kInfeasible;
  return kOk;
}

json report(const char *check, json items, std::size_t failed, std::size_t infeasible) {
  return {{"check", check},
          {"passed", failed == 0 && infeasible == 0},
          {"failed", failed},
          {"infeasible", infeasible},
          {"items", std::move(items)}};
}

json mismatches_json(const std::vector<Mismatch> &ms) {
  json arr = json::array();
  for (const auto &m : ms)
    arr.push_back({{"what", m.what}, {"expected", rational_json(m.expected)}, {"actual", rational_json(m.actual)}});
  return arr;
}

json partition_json(const Partition &mu) { return json(mu.parts()); }

// Commands.

int cmd_xi(int n, std::ostream &out) {
  out << xi(n).to_string() << "\n";
  return kOk;
}

int cmd_hodge(int g, int ell, bool poly, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const HodgeKey key{g, ell};
  if (!key.stable())
    throw UsageError("hodge: (g, l) must satisfy 2g - 2 + l > 0");
  HodgeCache cache;
  open_cache(cache, cfg, err);
  fill_keys(cache, {key}, cfg);
  if (poly)
    out << cache.get(key).to_string() << "\n";
  else
    emit_rows(integral_rows(extract_hodge(g, ell, cache.get(key)), {key}), cfg.format, out);
  close_cache(cache, cfg, err);
  return kOk;
}

int cmd_psi(int g, const std::vector<unsigned> &n, std::ostream &out) {
  json j{{"g", g}, {"n", n_json(n)}, {"value", rational_json(psi_intersection(g, n))}};
  out << j.dump() << "\n";
  return kOk;
}

int cmd_hurwitz(int g, const std::vector<int> &parts, const std::string &source, const RunConfig &cfg,
                std::ostream &out, std::ostream &err) {
  const Partition mu(parts);
  rh_count(g, mu);
  OracleOptions options{cfg.budget, cfg.threads};
  HurwitzValue h;
  const bool closed_ok = g == 0 && mu.length() <= 2;
  if (source == "closed" || (source == "auto" && closed_ok)) {
    h = hurwitz_closed_form(g, mu);
  } else if (source == "elsv") {
    HodgeCache cache;
    open_cache(cache, cfg, err);
    std::vector<HodgeKey> keys;
    const HodgeKey key{g, static_cast<int>(mu.length())};
    if (key.stable()) {
      keys.push_back(key);
      fill_keys(cache, keys, cfg);
    }
    h = elsv_evaluate(g, mu, build_hodge_table(cache, keys));
    close_cache(cache, cfg, err);
  } else {
    h = hurwitz_oracle(g, mu, options);
  }
  json j{{"g", g}, {"mu", partition_json(mu)}, {"h", rational_json(h.value)},
         {"provenance", to_string(h.provenance)}};
  out << j.dump() << "\n";
  return kOk;
}

int cmd_table(int max_euler, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  HodgeCache cache;
  open_cache(cache, cfg, err);
  cache.fill(max_euler, worker_count(cfg));
  const auto keys = stable_keys(max_euler);
  emit_rows(integral_rows(build_hodge_table(cache, keys), keys), cfg.format, out);
  close_cache(cache, cfg, err);
  return kOk;
}

int cmd_verify_caj(int gmax, int dmax, int rmax, const std::string &counting, const RunConfig &cfg,
                   std::ostream &out) {
  OracleCache oracle(OracleOptions{cfg.budget, cfg.threads});
  const SplitCounting mode = counting == "multiset" ? SplitCounting::multiset : SplitCounting::labeled;
  json items = json::array();
  std::size_t failed = 0, infeasible = 0;
  for (int g = 0; g <= gmax; ++g)
    for (int d = 1; d <= dmax; ++d)
      for (const auto &mu : enumerate_partitions(d)) {
        const int r = rh_count(g, mu);
        if (rmax >= 0 && r > rmax)
          continue;
        const CajReport rep = cut_and_join_verify(g, mu, oracle.lookup(), mode);
        json item{{"g", g}, {"mu", partition_json(mu)}, {"r", r}};
        if (!rep.feasible) {
          ++infeasible;
          item["status"] = "infeasible";
          item["missing"] = rep.missing;
        } else {
          item["status"] = rep.holds ? "pass" : "fail";
          item["lhs"] = rational_json(rep.lhs);
          item["rhs"] = rational_json(rep.rhs);
          failed += !rep.holds;
        }
        items.push_back(std::move(item));
      }
  write_json(report("caj", std::move(items), failed, infeasible), out);
  return verdict(failed, infeasible);
}

int cmd_verify_dvv(int max_euler, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  HodgeCache cache;
  open_cache(cache, cfg, err);
  cache.fill(max_euler, worker_count(cfg));
  PsiTable psi;
  json items = json::array();
  std::size_t failed = 0;
  for (HodgeKey k : stable_keys(max_euler)) {
    const auto ms = check_top_degree(k.g, k.ell, cache.get(k), psi);
    failed += !ms.empty();
    items.push_back({{"g", k.g}, {"ell", k.ell}, {"status", ms.empty() ? "pass" : "fail"},
                     {"mismatches", mismatches_json(ms)}});
  }
  close_cache(cache, cfg, err);
  write_json(report("dvv", std::move(items), failed, 0), out);
  return verdict(failed, 0);
}

int cmd_verify_lambda_g(int gmax, int lmax, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  std::vector<HodgeKey> keys;
  for (int g = 1; g <= gmax; ++g)
    for (int ell = 1; ell <= lmax; ++ell)
      keys.push_back({g, ell});
  HodgeCache cache;
  open_cache(cache, cfg, err);
  fill_keys(cache, keys, cfg);
  const HodgeTable table = build_hodge_table(cache, keys);
  const BSeries b = b_coefficients(gmax);
  json items = json::array();
  std::size_t failed = 0;
  for (HodgeKey k : keys) {
    const auto ms = check_lambda_g(k.g, k.ell, table, b);
    failed += !ms.empty();
    items.push_back({{"g", k.g}, {"ell", k.ell}, {"b_g", rational_json(b[k.g])},
                     {"status", ms.empty() ? "pass" : "fail"}, {"mismatches", mismatches_json(ms)}});
  }
  close_cache(cache, cfg, err);
  write_json(report("lambda-g", std::move(items), failed, 0), out);
  return verdict(failed, 0);
}

int cmd_verify_cross(int dmax, int rmax, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  struct Item {
    int g;
    Partition mu;
  };
  std::vector<Item> todo;
  std::set<HodgeKey> needed;
  for (int d = 1; d <= dmax; ++d)
    for (const auto &mu : enumerate_partitions(d))
      for (int g = 0; rh_count(g, mu) <= rmax; ++g) {
        todo.push_back({g, mu});
        HodgeKey key{g, static_cast<int>(mu.length())};
        if (key.stable())
          needed.insert(key);
      }
  std::sort(todo.begin(), todo.end(), [](const Item &a, const Item &b) {
    return std::pair(a.g, a.mu) < std::pair(b.g, b.mu);
  });
  const std::vector<HodgeKey> keys(needed.begin(), needed.end());
  HodgeCache cache;
  open_cache(cache, cfg, err);
  fill_keys(cache, keys, cfg);
  const HodgeTable table = build_hodge_table(cache, keys);
  close_cache(cache, cfg, err);

  OracleOptions options{cfg.budget, cfg.threads};
  json items = json::array();
  std::size_t failed = 0, infeasible = 0;
  for (const auto &[g, mu] : todo) {
    const Rational elsv = elsv_evaluate(g, mu, table).value;
    json item{{"g", g}, {"mu", partition_json(mu)}, {"elsv", rational_json(elsv)}};
    try {
      const Rational oracle = hurwitz_oracle(g, mu, options).value;
      item["oracle"] = rational_json(oracle);
      item["status"] = oracle == elsv ? "pass" : "fail";
      failed += oracle != elsv;
    } catch (const OracleInfeasible &) {
      item["status"] = "infeasible";
      ++infeasible;
    }
    items.push_back(std::move(item));
  }
  write_json(report("cross", std::move(items), failed, infeasible), out);
  return verdict(failed, infeasible);
}

int cmd_verify_dual(int max_euler, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  HodgeCache poly(RecursionForm::polynomial), lap(RecursionForm::laplace);
  open_cache(poly, cfg, err);
  poly.fill(max_euler, worker_count(cfg));
  lap.fill(max_euler, worker_count(cfg));
  json items = json::array();
  std::size_t failed = 0;
  for (HodgeKey k : stable_keys(max_euler)) {
    const bool same = poly.get(k) == lap.get(k);
    failed += !same;
    items.push_back({{"g", k.g}, {"ell", k.ell}, {"terms", poly.get(k).size()},
                     {"status", same ? "pass" : "fail"}});
  }
  close_cache(poly, cfg, err);
  write_json(report("dual", std::move(items), failed, 0), out);
  return verdict(failed, 0);
}

int cmd_verify_lambert(int n_max, const std::vector<double> &ws, double tol, std::ostream &out) {
  namespace lw = hodge::lambert;
  for (double w : ws)
    if (!(w > 0))
      throw UsageError("verify lambert: every w must be positive");
  // Floats are written by hand to keep 17 significant digits.
  std::ostringstream items;
  std::size_t failed = 0, count = 0;
  auto item = [&](const std::string &what, const std::string &at, double error, double limit) {
    const bool ok = error < limit;
    failed += !ok;
    items << (count++ ? ",\n  " : "\n  ") << "{\"check\":\"" << what << "\"," << at
          << ",\"error\":" << float17(error) << ",\"limit\":" << float17(limit)
          << ",\"status\":\"" << (ok ? "pass" : "fail") << "\"}";
  };
  auto at_w = [](double w) { return "\"w\":" + float17(w); };
  for (double w : ws) {
    const int K = lw::terms_for(n_max + 1, w, 1e-14);
    const auto p = lw::LambertPoint::from_w(w, K);
    item("curve", at_w(w), p.curve_residual(), 1e-10);
    item("xi_minus_one", at_w(w), std::abs(lw::xi_minus_one(p.t) - p.y), 1e-12);
    item("w_of_t", at_w(w), std::abs(lw::w_of_t(p.t) - w), 1e-10);
    for (int n = 0; n <= n_max; ++n) {
      const std::string at = at_w(w) + ",\"n\":" + std::to_string(n);
      item("xi_series", at, lw::xi_series_check(n, w, K), tol);
      if (n <= 3)
        item("derivative", at, lw::derivative_check(n, w, 1e-5, K), 1e-6);
    }
    const auto h01 = lw::h01_series(w, K);
    item("h01", at_w(w), std::abs(h01.value - lw::h01_closed(p.t, 0.5)), tol);
  }
  for (std::size_t k = 0; k + 1 < ws.size(); ++k) {
    const double w1 = ws[k], w2 = ws[k + 1];
    if (w1 == w2)
      continue;
    const int K = std::max(lw::terms_for(0, w1, 1e-14), lw::terms_for(0, w2, 1e-14));
    const auto p1 = lw::LambertPoint::from_w(w1, K), p2 = lw::LambertPoint::from_w(w2, K);
    const double closed = lw::h02_closed(p1, p2);
    item("h02", "\"w1\":" + float17(w1) + ",\"w2\":" + float17(w2),
         std::abs(lw::h02_series(w1, w2, K) - closed) / std::abs(closed), tol);
  }
  out << "{\n \"check\": \"lambert\",\n \"passed\": " << (failed ? "false" : "true")
      << ",\n \"failed\": " << failed << ",\n \"infeasible\": 0,\n \"items\": [" << items.str()
      << "\n ]\n}\n";
  return verdict(failed, 0);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Hodge integrals and Hurwitz numbers from the polynomial recursion", "hodge"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--cache", cfg.cache_path, "JSON cache file for Hodge polynomials");
  app.add_option("--budget", cfg.budget, "Leaf budget for the Hurwitz oracle")
      ->check(CLI::Range(std::uint64_t{1000}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  app.add_option("--format", cfg.format, "Output format for tables")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.fallthrough();

  std::function<int()> action;

  int xi_n = 0;
  auto *xi_cmd = app.add_subcommand("xi", "Print the polynomial xi_n(t)");
  xi_cmd->add_option("n", xi_n)->required()->check(CLI::NonNegativeNumber);
  xi_cmd->callback([&] { action = [&] { return cmd_xi(xi_n, out); }; });

  int hg = 0, hl = 0;
  bool hpoly = false;
  auto *hodge_cmd = app.add_subcommand("hodge", "Hodge integrals of one (g, l)");
  hodge_cmd->add_option("g", hg)->required()->check(CLI::NonNegativeNumber);
  hodge_cmd->add_option("l", hl)->required()->check(CLI::PositiveNumber);
  hodge_cmd->add_flag("--poly", hpoly, "Print the polynomial instead of the integrals");
  hodge_cmd->callback([&] { action = [&] { return cmd_hodge(hg, hl, hpoly, cfg, out, err); }; });

  int pg = 0;
  std::vector<unsigned> pn;
  auto *psi_cmd = app.add_subcommand("psi", "psi-class intersection number");
  psi_cmd->add_option("g", pg)->required()->check(CLI::NonNegativeNumber);
  psi_cmd->add_option("n", pn)->required();
  psi_cmd->callback([&] { action = [&] { return cmd_psi(pg, pn, out); }; });

  int hwg = 0;
  std::vector<int> hmu;
  std::string source = "auto";
  auto *hw_cmd = app.add_subcommand("hurwitz", "Simple Hurwitz number h_{g,mu}");
  hw_cmd->add_option("g", hwg)->required()->check(CLI::NonNegativeNumber);
  hw_cmd->add_option("mu", hmu)->required()->check(CLI::PositiveNumber);
  hw_cmd->add_option("--source", source, "auto, oracle, closed or elsv")
      ->check(CLI::IsMember({"auto", "oracle", "closed", "elsv"}));
  hw_cmd->callback([&] { action = [&] { return cmd_hurwitz(hwg, hmu, source, cfg, out, err); }; });

  int table_euler = 0;
  auto *table_cmd = app.add_subcommand("table", "All Hodge integrals up to 2g-2+l <= N");
  table_cmd->add_option("--max-euler", table_euler)->required()->check(CLI::PositiveNumber);
  table_cmd->callback([&] { action = [&] { return cmd_table(table_euler, cfg, out, err); }; });

  auto *verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);

  int caj_g = 1, caj_d = 4, caj_r = -1;
  std::string counting = "labeled";
  auto *caj = verify->add_subcommand("caj", "Cut-and-join identity on oracle values");
  caj->add_option("--gmax", caj_g)->check(CLI::NonNegativeNumber);
  caj->add_option("--dmax", caj_d)->check(CLI::PositiveNumber);
  caj->add_option("--rmax", caj_r, "Skip (g, mu) with more branch points");
  caj->add_option("--split-counting", counting)->check(CLI::IsMember({"labeled", "multiset"}));
  caj->callback([&] { action = [&] { return cmd_verify_caj(caj_g, caj_d, caj_r, counting, cfg, out); }; });

  int dvv_euler = 4;
  auto *dvv = verify->add_subcommand("dvv", "Top-degree coefficients against DVV");
  dvv->add_option("--max-euler", dvv_euler)->check(CLI::PositiveNumber);
  dvv->callback([&] { action = [&] { return cmd_verify_dvv(dvv_euler, cfg, out, err); }; });

  int lg_g = 2, lg_l = 3;
  auto *lg = verify->add_subcommand("lambda-g", "Lowest-degree coefficients against the lambda_g formula");
  lg->add_option("--gmax", lg_g)->check(CLI::PositiveNumber);
  lg->add_option("--lmax", lg_l)->check(CLI::PositiveNumber);
  lg->callback([&] { action = [&] { return cmd_verify_lambda_g(lg_g, lg_l, cfg, out, err); }; });

  int lam_n = 4;
  std::vector<double> lam_w{0.5, 1.0, 2.0};
  double lam_tol = 1e-8;
  auto *lam = verify->add_subcommand("lambert", "Series identities on the Lambert curve");
  lam->add_option("--n-max", lam_n)->check(CLI::NonNegativeNumber);
  lam->add_option("--w", lam_w)->delimiter(',');
  lam->add_option("--tol", lam_tol)->check(CLI::PositiveNumber);
  lam->callback([&] { action = [&] { return cmd_verify_lambert(lam_n, lam_w, lam_tol, out); }; });

  int cross_d = 4, cross_r = 7;
  auto *cross = verify->add_subcommand("cross", "ELSV from the recursion against the oracle");
  cross->add_option("--dmax", cross_d)->check(CLI::PositiveNumber);
  cross->add_option("--rmax", cross_r)->check(CLI::NonNegativeNumber);
  cross->callback([&] { action = [&] { return cmd_verify_cross(cross_d, cross_r, cfg, out, err); }; });

  int dual_euler = 4;
  auto *dual = verify->add_subcommand("dual", "Both recursion forms coefficient by coefficient");
  dual->add_option("--max-euler", dual_euler)->check(CLI::PositiveNumber);
  dual->callback([&] { action = [&] { return cmd_verify_dual(dual_euler, cfg, out, err); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OracleInfeasible &e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const NonPolynomialError &e) {
    err << "invariant violated: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

} // namespace hodge::cli
