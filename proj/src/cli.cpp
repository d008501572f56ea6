#include "treegf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <sstream>

#include "treegf/limits.hpp"
#include "treegf/motzkin.hpp"
#include "treegf/oracle.hpp"
#include "treegf/sampler.hpp"
#include "treegf/schroeder.hpp"

namespace treegf {
namespace cli {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kDecimalDigits = 12;

std::string format_scientific(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

std::string format_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

ordered_json quad_json(const QuadExt& q) {
  return ordered_json{{"rational_part", q.rational_part().to_string()},
                      {"sqrt2_coefficient", q.sqrt2_coefficient().to_string()},
                      {"decimal", q.to_decimal(kDecimalDigits)}};
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump() << "\n"; }

TreeFamily family_from_string(const std::string& name) {
  if (name == "schroeder") return TreeFamily::schroeder;
  if (name == "motzkin") return TreeFamily::motzkin;
  throw CLI::ValidationError("--family", "unknown family: " + name);
}

UniSeries named_series(const std::string& family, const std::string& kind, int k, int order) {
  if (family == "schroeder") {
    if (kind == "trees") return schroeder::tree_series(order);
    if (kind == "vertices") return schroeder::vertex_series(order);
    if (kind == "leaves") return schroeder::subtree_series(1, order);
    if (kind == "context") return schroeder::context_series(order);
    if (kind == "subtree") return schroeder::subtree_series(k, order);
    if (kind == "balanced") return schroeder::balanced_series(k, order);
  } else {
    if (kind == "trees") return motzkin::tree_series(order);
    if (kind == "context") return motzkin::context_series(order);
    if (kind == "subtree") return motzkin::subtree_series(k, order);
  }
  throw CLI::ValidationError("--kind", "unknown series kind for " + family + ": " + kind);
}

int cmd_series(const std::string& family, const std::string& kind, int k, int order,
               const std::string& format, std::ostream& out) {
  const UniSeries s = named_series(family, kind, k, order);
  if (format == "csv") {
    out << "family,kind,n,coefficient\n";
    for (int n = 0; n <= s.order(); ++n)
      out << family << "," << kind << "," << n << "," << s.coeff(n).to_string() << "\n";
    return 0;
  }
  ordered_json j;
  j["family"] = family;
  j["kind"] = kind;
  if (kind == "subtree" || kind == "balanced") j["k"] = k;
  j["order"] = order;
  ordered_json coeffs = ordered_json::array();
  for (int n = 0; n <= s.order(); ++n) coeffs.push_back(s.coeff(n).to_string());
  j["coefficients"] = std::move(coeffs);
  emit(out, j);
  return 0;
}

int cmd_rk(int k, const std::string& format, std::ostream& out) {
  const Polynomial r = schroeder::subtree_root_poly(k);
  if (format == "csv") {
    out << "k,n,coefficient\n";
    for (int n = 0; n <= std::max(0, r.degree()); ++n)
      out << k << "," << n << "," << r.coeff(n).to_string() << "\n";
    return 0;
  }
  ordered_json j;
  j["k"] = k;
  j["polynomial"] = r.to_string();
  ordered_json coeffs = ordered_json::array();
  for (int n = 0; n <= std::max(0, r.degree()); ++n) coeffs.push_back(r.coeff(n).to_string());
  j["coefficients"] = std::move(coeffs);
  emit(out, j);
  return 0;
}

int cmd_table(const std::string& which, bool limit_mode, int at_n, int k_max,
              const std::string& format, std::ostream& out) {
  const bool balanced = which == "balanced";
  const int k_lo = balanced ? 0 : 1;
  struct Row {
    int k;
    bool is_limit;
    QuadExt limit;
    BigRational finite;
  };
  std::vector<Row> rows;
  if (limit_mode) {
    std::vector<QuadExt> subtree_probs;
    if (!balanced) subtree_probs = limits::subtree_limit_probabilities(k_max);
    for (int k = k_lo; k <= k_max; ++k)
      rows.push_back(
          {k, true, balanced ? limits::limit_balanced_probability(k) : subtree_probs[k], {}});
  } else {
    const UniSeries context = schroeder::context_series(at_n);
    const UniSeries vertices = schroeder::tree_series(at_n) * context;
    const BigRational v_n = vertices.coeff(at_n);
    if (v_n.is_zero()) throw CLI::ValidationError("--at-n", "zero vertex count");
    for (int k = k_lo; k <= k_max; ++k) {
      const UniSeries numer =
          balanced ? schroeder::balanced_root_gf(k).to_series(at_n) * context
                   : schroeder::subtree_root_poly(k).to_series(at_n) * context;
      rows.push_back({k, false, {}, numer.coeff(at_n) / v_n});
    }
  }

  if (format == "csv") {
    if (limit_mode) {
      out << "table,k,rational_part,sqrt2_coefficient,decimal\n";
      for (const Row& r : rows)
        out << which << "," << r.k << "," << r.limit.rational_part().to_string() << ","
            << r.limit.sqrt2_coefficient().to_string() << "," << r.limit.to_decimal(kDecimalDigits)
            << "\n";
    } else {
      out << "table,n,k,numerator,denominator,decimal\n";
      for (const Row& r : rows)
        out << which << "," << at_n << "," << r.k << "," << r.finite.numerator().get_str() << ","
            << r.finite.denominator().get_str() << "," << r.finite.to_decimal(kDecimalDigits)
            << "\n";
    }
    return 0;
  }
  ordered_json j;
  j["table"] = which;
  j["mode"] = limit_mode ? "limit" : "at-n";
  if (!limit_mode) j["n"] = at_n;
  j["k_max"] = k_max;
  ordered_json jrows = ordered_json::array();
  for (const Row& r : rows) {
    ordered_json row;
    row["k"] = r.k;
    if (limit_mode) {
      row["rational_part"] = r.limit.rational_part().to_string();
      row["sqrt2_coefficient"] = r.limit.sqrt2_coefficient().to_string();
      row["decimal"] = r.limit.to_decimal(kDecimalDigits);
    } else {
      row["numerator"] = r.finite.numerator().get_str();
      row["denominator"] = r.finite.denominator().get_str();
      row["decimal"] = r.finite.to_decimal(kDecimalDigits);
    }
    jrows.push_back(std::move(row));
  }
  j["rows"] = std::move(jrows);
  emit(out, j);
  return 0;
}

int cmd_verify(const std::string& family, int n_max, const std::string& format,
               std::ostream& out) {
  const std::vector<VerifyCheck> checks = run_verification(family, n_max);
  bool all_ok = true;
  for (const VerifyCheck& c : checks) all_ok = all_ok && c.ok;
  if (format == "csv") {
    out << "check,ok,detail\n";
    for (const VerifyCheck& c : checks)
      out << c.name << "," << (c.ok ? "pass" : "FAIL") << "," << c.detail << "\n";
  } else {
    ordered_json j;
    j["family"] = family;
    j["n_max"] = n_max;
    ordered_json rows = ordered_json::array();
    for (const VerifyCheck& c : checks) {
      ordered_json row;
      row["name"] = c.name;
      row["ok"] = c.ok;
      if (!c.detail.empty()) row["detail"] = c.detail;
      rows.push_back(std::move(row));
    }
    j["checks"] = std::move(rows);
    j["ok"] = all_ok;
    emit(out, j);
  }
  return all_ok ? 0 : 1;
}

int cmd_sample(int leaves, long count, std::uint64_t seed, const std::string& stat,
               const std::string& format, std::ostream& out) {
  const sampler::StatisticSpec spec = sampler::StatisticSpec::parse(stat);
  const sampler::MonteCarloResult res = sampler::monte_carlo_census(leaves, count, seed, spec);
  if (format == "csv") {
    out << "n,trials,seed,stat,stat_sum,vertex_sum,estimate,std_error\n";
    out << res.n << "," << res.trials << "," << res.seed << "," << spec.to_string() << ","
        << res.stat_sum.get_str() << "," << res.vertex_sum.get_str() << ","
        << res.estimate.to_decimal(kDecimalDigits) << "," << format_scientific(res.std_error)
        << "\n";
    return 0;
  }
  ordered_json j;
  j["n"] = res.n;
  j["trials"] = res.trials;
  j["seed"] = res.seed;
  j["stat"] = spec.to_string();
  j["stat_sum"] = res.stat_sum.get_str();
  j["vertex_sum"] = res.vertex_sum.get_str();
  j["estimate"] = res.estimate.to_decimal(kDecimalDigits);
  j["std_error"] = format_scientific(res.std_error);
  emit(out, j);
  return 0;
}

int cmd_convergence(const std::string& stat, const std::vector<int>& n_list,
                    const std::string& format, std::ostream& out) {
  const limits::ConvergenceTable table = limits::convergence_table(stat, n_list);
  if (format == "csv") {
    out << "stat,n,finite,abs_diff\n";
    for (const auto& pt : table.points)
      out << stat << "," << pt.n << "," << pt.finite.to_decimal(kDecimalDigits) << ","
          << pt.abs_diff.to_decimal(kDecimalDigits) << "\n";
    return 0;
  }
  ordered_json j;
  j["stat"] = stat;
  j["limit_decimal"] = table.limit.to_decimal(kDecimalDigits);
  ordered_json rows = ordered_json::array();
  for (const auto& pt : table.points) {
    ordered_json row;
    row["n"] = pt.n;
    row["numerator"] = pt.finite.numerator().get_str();
    row["denominator"] = pt.finite.denominator().get_str();
    row["decimal"] = pt.finite.to_decimal(kDecimalDigits);
    row["abs_diff"] = pt.abs_diff.to_decimal(kDecimalDigits);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  emit(out, j);
  return 0;
}

int cmd_asym(const std::string& which, int n, const std::string& format, std::ostream& out) {
  const schroeder::AsymptoticKind kind = schroeder::asymptotic_kind_from_string(which);
  const std::string estimate = schroeder::asymptotic_estimate(kind, n);

  const UniSeries s = schroeder::tree_series(n);
  mpz_class exact;
  if (kind == schroeder::AsymptoticKind::trees) {
    exact = s.coeff(n).numerator();
  } else if (kind == schroeder::AsymptoticKind::leaves) {
    exact = mpz_class(n) * s.coeff(n).numerator();
  } else {
    exact = (s * schroeder::context_series(n)).coeff(n).numerator();
  }
  const double ratio = schroeder::asymptotic_ratio(kind, n, exact);

  if (format == "csv") {
    out << "which,n,estimate,exact,ratio\n";
    out << which << "," << n << "," << estimate << "," << exact.get_str() << ","
        << format_fixed6(ratio) << "\n";
    return 0;
  }
  ordered_json j;
  j["which"] = which;
  j["n"] = n;
  j["estimate"] = estimate;
  j["exact"] = exact.get_str();
  j["ratio"] = format_fixed6(ratio);
  emit(out, j);
  return 0;
}

int cmd_discrepancy(const std::string& table, const std::string& format, std::ostream& out) {
  const limits::DiscrepancyReport report = limits::discrepancy_report(table);
  if (format == "csv") {
    out << "table,k,computed_decimal,paper,ratio_decimal\n";
    for (const auto& row : report.rows) {
      out << report.table << "," << row.k << "," << row.computed.to_decimal(kDecimalDigits) << ","
          << row.printed << ",";
      if (row.ratio) out << row.ratio->to_decimal(6);
      out << "\n";
    }
    return 0;
  }
  ordered_json j;
  j["table"] = report.table;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["k"] = row.k;
    r["computed"] = quad_json(row.computed);
    r["paper"] = row.printed;
    if (report.table == "leaf" && row.closed_form) {
      r["paper_closed_form"] = quad_json(*row.closed_form);
      r["ratio"] = ordered_json{{"rational_part", row.ratio->rational_part().to_string()},
                                {"sqrt2_coefficient", row.ratio->sqrt2_coefficient().to_string()}};
    }
    if (row.ratio)
      r["ratio_decimal"] = row.ratio->to_decimal(6);
    else
      r["ratio_decimal"] = nullptr;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  emit(out, j);
  return 0;
}

int cmd_census(const std::string& family, int n, const std::string& stat,
               const std::string& format, std::ostream& out) {
  const TreeFamily fam = family_from_string(family);
  if (stat == "balanced" && fam != TreeFamily::schroeder)
    throw CLI::ValidationError("--stat", "balanced census is Schroeder-only");
  const CensusTable table =
      stat == "balanced" ? balanced_census(n) : subtree_census(fam, n);
  if (format == "csv") {
    out << "family,n,statistic,k,count\n";
    out << table.to_csv();
    return 0;
  }
  ordered_json j;
  j["family"] = family;
  j["n"] = n;
  j["statistic"] = table.statistic;
  ordered_json rows = ordered_json::array();
  for (const auto& [k, c] : table.counts) {
    ordered_json row;
    row["k"] = k;
    row["count"] = std::to_string(c);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["total_trees"] = std::to_string(table.total_trees);
  j["total_vertices"] = std::to_string(table.total_vertices);
  emit(out, j);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generating functions, censuses and limit tables for Schroeder and "
               "Motzkin trees"};
  app.name("treegf");
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // series
  auto* series = app.add_subcommand("series", "Exact series coefficients");
  std::string se_family = "schroeder", se_kind = "trees";
  int se_k = 1, se_order = 10;
  series->add_option("--family", se_family)->check(CLI::IsMember({"schroeder", "motzkin"}));
  series->add_option("--kind", se_kind,
                     "trees|vertices|leaves|context|subtree|balanced (motzkin: trees|context|subtree)");
  series->add_option("--k", se_k, "Statistic value for subtree/balanced kinds");
  series->add_option("--order", se_order)->check(CLI::PositiveNumber);

  // rk
  auto* rk = app.add_subcommand("rk", "Trees-with-k-vertices polynomial R_k(x)");
  int rk_k = 1;
  rk->add_option("--k", rk_k)->required()->check(CLI::PositiveNumber);

  // table
  auto* table = app.add_subcommand("table", "Limit or finite-n probability tables");
  std::string tb_which;
  bool tb_limit = false;
  int tb_at_n = 0, tb_k_max = 7;
  table->add_option("which", tb_which, "subtree or balanced")
      ->required()
      ->check(CLI::IsMember({"subtree", "balanced"}));
  table->add_flag("--limit", tb_limit, "Exact limit probabilities");
  table->add_option("--at-n", tb_at_n, "Finite-n probabilities at this size")
      ->check(CLI::PositiveNumber);
  table->add_option("--k-max", tb_k_max)->check(CLI::NonNegativeNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-validate series against enumeration");
  std::string vf_family = "both";
  int vf_n_max = 7;
  verify->add_option("--family", vf_family)
      ->check(CLI::IsMember({"schroeder", "motzkin", "both"}));
  verify->add_option("--n-max", vf_n_max)->check(CLI::PositiveNumber);

  // sample
  auto* sample = app.add_subcommand("sample", "Uniform random trees, Monte Carlo census");
  int sm_leaves = 0;
  long sm_count = 1;
  std::uint64_t sm_seed = 0;
  std::string sm_stat = "leaf";
  sample->add_option("--leaves", sm_leaves)->required()->check(CLI::PositiveNumber);
  sample->add_option("--count", sm_count)->check(CLI::PositiveNumber);
  sample->add_option("--seed", sm_seed)->capture_default_str();
  sample->add_option("--stat", sm_stat, "leaf, subtree:K or balanced:K");

  // convergence
  auto* convergence = app.add_subcommand("convergence", "Finite-n probabilities vs the limit");
  std::string cv_stat = "subtree:1";
  std::string cv_n_list = "100,200,500,1000";
  convergence->add_option("--stat", cv_stat)->capture_default_str();
  convergence->add_option("--n-list", cv_n_list, "Comma-separated sizes")->capture_default_str();

  // asym
  auto* asym = app.add_subcommand("asym", "Closed asymptotic formula vs the exact count");
  std::string as_which = "trees";
  int as_n = 100;
  asym->add_option("--which", as_which)->check(CLI::IsMember({"trees", "leaves", "vertices"}));
  asym->add_option("--n", as_n)->check(CLI::Range(2, 1 << 20));

  // discrepancy
  auto* discrepancy = app.add_subcommand("discrepancy", "Audit of the published limit tables");
  std::string dc_table = "subtree";
  discrepancy->add_option("--table", dc_table)
      ->check(CLI::IsMember({"subtree", "balanced", "leaf"}));

  // census
  auto* census = app.add_subcommand("census", "Exhaustive statistic census");
  std::string cs_family = "schroeder", cs_stat = "subtree";
  int cs_n = 3;
  census->add_option("--family", cs_family)->check(CLI::IsMember({"schroeder", "motzkin"}));
  census->add_option("--n", cs_n)->check(CLI::PositiveNumber);
  census->add_option("--stat", cs_stat)->check(CLI::IsMember({"subtree", "balanced"}));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("treegf");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (series->parsed()) return cmd_series(se_family, se_kind, se_k, se_order, format, out);
    if (rk->parsed()) return cmd_rk(rk_k, format, out);
    if (table->parsed()) {
      if (tb_limit == (tb_at_n > 0))
        throw CLI::ValidationError("table", "choose exactly one of --limit / --at-n");
      return cmd_table(tb_which, tb_limit, tb_at_n, tb_k_max, format, out);
    }
    if (verify->parsed()) return cmd_verify(vf_family, vf_n_max, format, out);
    if (sample->parsed()) return cmd_sample(sm_leaves, sm_count, sm_seed, sm_stat, format, out);
    if (convergence->parsed()) {
      std::vector<int> ns;
      std::stringstream ss(cv_n_list);
      std::string item;
      while (std::getline(ss, item, ',')) ns.push_back(std::stoi(item));
      return cmd_convergence(cv_stat, ns, format, out);
    }
    if (asym->parsed()) return cmd_asym(as_which, as_n, format, out);
    if (discrepancy->parsed()) return cmd_discrepancy(dc_table, format, out);
    if (census->parsed()) return cmd_census(cs_family, cs_n, cs_stat, format, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n" << app.help();
  return 2;
}

}  // namespace cli
}  // namespace treegf
