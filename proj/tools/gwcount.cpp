// gwcount: exact counts of lines and conics in projective space through
// generic linear-space constraints, with floor-diagram enumeration,
// maximality verification, closed-form tables, and reducible-conic queries.

#include <gw/conics.hpp>
#include <gw/diagrams.hpp>
#include <gw/lines.hpp>
#include <gw/multisets.hpp>
#include <gw/schubert.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using gw::CountValue;
using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

struct CommonOpts {
  int degree = 1;
  int dim = 2;
  std::vector<int> codims;
  std::string format = "text";
  std::string cache_path;
};

std::string default_cache_path() {
  const char* env = std::getenv("GWCOUNT_CACHE");
  return env ? env : "";
}

void add_query_flags(CLI::App* cmd, CommonOpts* opts, bool need_degree = true) {
  if (need_degree)
    cmd->add_option("--degree", opts->degree, "curve degree (1 or 2)")->required();
  cmd->add_option("--dim", opts->dim, "ambient projective dimension n")->required();
  cmd->add_option("--codims", opts->codims,
                  "comma-separated constraint codimensions")
      ->required()
      ->delimiter(',');
  cmd->add_option("--format", opts->format, "output format: json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--cache", opts->cache_path, "memo cache file path");
}

void load_cache(const CommonOpts& opts) {
  std::string path = opts.cache_path.empty() ? default_cache_path() : opts.cache_path;
  if (!path.empty()) gw::load_cache_file(path, gw::global_memo());
}

void save_cache(const CommonOpts& opts) {
  std::string path = opts.cache_path.empty() ? default_cache_path() : opts.cache_path;
  if (!path.empty()) gw::save_cache_file(path, gw::global_memo());
}

ordered_json query_record(const CommonOpts& opts, const gw::NormalizedQuery& q) {
  ordered_json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["query"] = {{"degree", opts.degree}, {"dim", opts.dim}, {"codims", opts.codims}};
  rec["status"] = q.countable() ? "Countable" : "ZeroByConvention";
  rec["dropped_hyperplanes"] = q.dropped_hyperplanes;
  return rec;
}

void emit(const ordered_json& rec, const std::string& format) {
  if (format == "json") {
    std::cout << rec.dump() << '\n';
    return;
  }
  // text / csv fall back to a flat key=value rendering for scalar records
  for (const auto& [key, value] : rec.items()) {
    if (format == "csv")
      std::cout << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    else
      std::cout << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

CountValue run_count(const CommonOpts& opts) {
  return opts.degree == 1 ? gw::count_lines(opts.dim, opts.codims)
                          : gw::count_conics(opts.dim, opts.codims);
}

int cmd_count(const CommonOpts& opts, bool self_check) {
  load_cache(opts);
  gw::NormalizedQuery q = gw::validate_query(opts.degree, opts.dim, opts.codims);
  CountValue result = run_count(opts);
  ordered_json rec = query_record(opts, q);
  rec["result"] = gw::to_decimal(result);
  if (self_check) {
    // Recompute through the diagram path; a mismatch is an internal error.
    CountValue via_diagrams = gw::tally_floor_diagrams(opts.degree, opts.dim, opts.codims).solutions;
    rec["self_check"] = gw::to_decimal(via_diagrams);
    if (via_diagrams != result) {
      emit(rec, opts.format);
      std::cerr << "error: self-check mismatch: " << result << " vs "
                << via_diagrams << '\n';
      return kExitMismatch;
    }
  }
  emit(rec, opts.format);
  save_cache(opts);
  return kExitOk;
}

int cmd_enumerate(const CommonOpts& opts, bool group_by_shape, long limit) {
  load_cache(opts);
  gw::NormalizedQuery q = gw::validate_query(opts.degree, opts.dim, opts.codims);
  auto diagrams = gw::enumerate_floor_diagrams(opts.degree, opts.dim, opts.codims);
  CountValue total = 0;
  for (const auto& d : diagrams) total += gw::solution_count(d);

  ordered_json rec = query_record(opts, q);
  rec["diagram_count"] = diagrams.size();
  rec["total_solutions"] = gw::to_decimal(total);
  if (group_by_shape) {
    ordered_json families = ordered_json::array();
    for (const auto& g : gw::family_breakdown(diagrams)) {
      families.push_back({{"signature", g.signature},
                          {"diagrams", g.diagram_count},
                          {"solutions_each", gw::to_decimal(g.per_diagram_solutions)}});
    }
    rec["families"] = std::move(families);
  } else {
    ordered_json list = ordered_json::array();
    long shown = 0;
    for (const auto& d : diagrams) {
      if (limit >= 0 && shown >= limit) break;
      list.push_back({{"diagram", gw::serialize_diagram(d)},
                      {"solutions", gw::to_decimal(gw::solution_count(d))}});
      ++shown;
    }
    rec["diagrams"] = std::move(list);
  }

  if (opts.format == "json") {
    std::cout << rec.dump() << '\n';
  } else {
    std::cout << "status = " << rec["status"].get<std::string>() << '\n';
    if (group_by_shape) {
      for (const auto& f : rec["families"])
        std::cout << f["diagrams"].get<long>() << " x "
                  << f["solutions_each"].get<std::string>() << " solutions  "
                  << f["signature"].get<std::string>() << '\n';
    } else {
      for (const auto& d : rec["diagrams"])
        std::cout << d["solutions"].get<std::string>() << "  "
                  << d["diagram"].get<std::string>() << '\n';
    }
    std::cout << "diagrams = " << diagrams.size() << '\n';
    std::cout << "total = " << gw::to_decimal(total) << '\n';
  }
  save_cache(opts);
  return kExitOk;
}

int cmd_verify(const CommonOpts& opts, bool with_oracle, bool with_closed_form,
               bool all_multisets) {
  load_cache(opts);
  bool ok = true;
  ordered_json rec;
  rec["schema_version"] = kSchemaVersion;

  auto verify_one = [&](const std::vector<int>& codims) {
    gw::MaximalityReport report =
        gw::verify_maximality(opts.degree, opts.dim, codims);
    ordered_json entry;
    entry["codims"] = codims;
    entry["maximality"] = {{"invariant", gw::to_decimal(report.invariant)},
                           {"distinct_solutions", gw::to_decimal(report.distinct_solutions)},
                           {"real_lower_bound", gw::to_decimal(report.real_lower_bound)},
                           {"maximal", report.maximal}};
    if (!report.maximal) ok = false;
    if (with_oracle && opts.degree == 1) {
      CountValue oracle = gw::oracle_line_count(opts.dim, codims);
      entry["oracle"] = gw::to_decimal(oracle);
      if (oracle != report.invariant) ok = false;
    }
    if (with_closed_form && opts.degree == 1) {
      // Applicable when the multiset is two special codims plus codim-2 fillers.
      std::vector<int> sorted = codims;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      while (sorted.size() > 2 && sorted.back() == 2) sorted.pop_back();
      if (sorted.size() == 2 && sorted[0] >= 2 && sorted[0] <= opts.dim &&
          sorted[1] >= 2) {
        CountValue cf = gw::closed_form_kl(opts.dim, sorted[0], sorted[1]);
        entry["closed_form"] = gw::to_decimal(cf);
        if (cf != report.invariant) ok = false;
      }
    }
    return entry;
  };

  if (all_multisets) {
    ordered_json entries = ordered_json::array();
    for (const auto& ms : gw::countable_multisets(opts.degree, opts.dim))
      entries.push_back(verify_one(ms));
    rec["query"] = {{"degree", opts.degree}, {"dim", opts.dim}, {"codims", "all"}};
    rec["checks"] = std::move(entries);
  } else {
    gw::NormalizedQuery q = gw::validate_query(opts.degree, opts.dim, opts.codims);
    rec = query_record(opts, q);
    rec.update(verify_one(opts.codims));
    rec.erase("codims");
  }
  rec["agreement"] = ok;

  if (opts.format == "json")
    std::cout << rec.dump() << '\n';
  else
    emit(rec, opts.format);
  save_cache(opts);
  if (!ok) {
    std::cerr << "error: verification mismatch (values printed above)\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_table(const std::string& kind, int max_n, bool check,
              const std::string& format) {
  const char sep = format == "csv" ? ',' : '\t';
  bool ok = true;
  if (kind == "catalan") {
    for (int m = 1; m <= max_n; ++m) {
      std::cout << m << sep << gw::to_decimal(gw::catalan(m)) << '\n';
      if (check && gw::catalan(m) != gw::closed_form_cnl(m + 1, 2)) ok = false;
    }
  } else if (kind == "cnl") {
    for (int n = 2; n <= max_n; ++n) {
      std::cout << n;
      for (int l = 2; l <= n; ++l) {
        CountValue v = gw::closed_form_cnl(n, l);
        std::cout << sep << gw::to_decimal(v);
        if (check) {
          std::vector<int> codims{l};
          codims.insert(codims.end(), 2 * n - 1 - l, 2);
          if (gw::count_lines(n, codims) != v) ok = false;
        }
      }
      std::cout << '\n';
    }
  } else {  // kl
    for (int n = 2; n <= max_n; ++n) {
      for (int k = 2; k <= n; ++k) {
        std::cout << n << sep << k;
        for (int l = 2; l <= n; ++l) {
          CountValue v = gw::closed_form_kl(n, k, l);
          std::cout << sep << gw::to_decimal(v);
          if (check) {
            std::vector<int> codims{k, l};
            codims.insert(codims.end(), 2 * n - k - l, 2);
            if (gw::count_lines(n, codims) != v) ok = false;
          }
        }
        std::cout << '\n';
      }
    }
  }
  if (!ok) {
    std::cerr << "error: table cross-check against the recursion failed\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_reducible(int dim, int l0, const std::vector<int>& list1,
                  const std::vector<int>& list2, const std::string& method,
                  int k0, const std::string& format,
                  const std::string& cache_path) {
  if (!cache_path.empty()) gw::load_cache_file(cache_path, gw::global_memo());
  ordered_json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["query"] = {{"dim", dim}, {"l0", l0}, {"list1", list1}, {"list2", list2},
                  {"k0", k0}, {"method", method}};

  long balance = l0;
  for (int c : list1) balance += c - 1;
  for (int c : list2) balance += c - 1;
  rec["status"] = balance == 3L * dim - 2 ? "Countable" : "ZeroByConvention";

  CountValue product, tropical;
  bool mismatch = false;
  if (method == "product" || method == "both") {
    product = gw::count_reducible_product(dim, l0, list1, list2);
    rec["product"] = gw::to_decimal(product);
  }
  if (method == "tropical" || method == "both") {
    tropical = gw::count_reducible_tropical({dim, l0, list1, list2, k0});
    rec["tropical"] = gw::to_decimal(tropical);
  }
  if (method == "both" && product != tropical) mismatch = true;
  rec["result"] = gw::to_decimal(method == "tropical" ? tropical : product);

  if (format == "json")
    std::cout << rec.dump() << '\n';
  else
    emit(rec, format);
  if (!cache_path.empty()) gw::save_cache_file(cache_path, gw::global_memo());
  if (mismatch) {
    std::cerr << "error: product and tropical counts disagree: " << product
              << " vs " << tropical << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact line and conic counts in projective space via floor decomposition"};
  app.require_subcommand(1);

  CommonOpts count_opts, enum_opts, verify_opts;
  bool self_check = false;
  auto* count = app.add_subcommand("count", "compute an invariant");
  add_query_flags(count, &count_opts);
  count->add_flag("--self-check", self_check,
                  "cross-check the result through diagram enumeration");

  bool group_by_shape = false;
  long limit = -1;
  std::string group_by;
  auto* enumerate = app.add_subcommand("enumerate", "list floor diagrams");
  add_query_flags(enumerate, &enum_opts);
  enumerate->add_option("--group-by", group_by, "group diagrams (shape)")
      ->check(CLI::IsMember({"shape"}));
  enumerate->add_option("--limit", limit, "emit at most K diagrams");

  bool with_oracle = false, with_closed_form = false, all_multisets = false;
  auto* verify = app.add_subcommand("verify", "verify maximality and oracles");
  verify->add_option("--degree", verify_opts.degree, "curve degree (1 or 2)")->required();
  verify->add_option("--dim", verify_opts.dim, "ambient projective dimension n")->required();
  auto* codims_opt =
      verify->add_option("--codims", verify_opts.codims,
                         "comma-separated constraint codimensions")
          ->delimiter(',');
  verify->add_option("--format", verify_opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  verify->add_option("--cache", verify_opts.cache_path, "memo cache file path");
  verify->add_flag("--oracle", with_oracle, "cross-check degree-1 counts via Pieri");
  verify->add_flag("--closed-form", with_closed_form,
                   "cross-check against the closed forms where applicable");
  verify->add_flag("--all", all_multisets,
                   "sweep every countable codim multiset for this degree and dimension");

  std::string kind = "cnl", table_format = "text";
  int max_n = 5;
  bool table_check = false;
  auto* table = app.add_subcommand("table", "emit closed-form tables");
  table->add_option("--kind", kind, "cnl, catalan, or kl")
      ->check(CLI::IsMember({"cnl", "catalan", "kl"}))
      ->capture_default_str();
  table->add_option("--max-n", max_n, "largest dimension / index")->required();
  table->add_flag("--check", table_check, "cross-check entries against the recursion");
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"csv", "text"}))
      ->capture_default_str();

  int red_dim = 2, red_l0 = 0, red_k0 = 0;
  std::vector<int> red_list1, red_list2;
  std::string red_method = "both", red_format = "text", red_cache;
  auto* reducible = app.add_subcommand("reducible", "count reducible conics");
  reducible->add_option("--dim", red_dim, "ambient projective dimension n")->required();
  reducible->add_option("--l0", red_l0, "codimension of the node constraint")->required();
  reducible->add_option("--list1", red_list1, "codims met by the first line")
      ->required()
      ->delimiter(',');
  reducible->add_option("--list2", red_list2, "codims met by the second line")
      ->required()
      ->delimiter(',');
  reducible->add_option("--method", red_method, "product, tropical, or both")
      ->check(CLI::IsMember({"product", "tropical", "both"}))
      ->capture_default_str();
  reducible->add_option("--k0", red_k0, "placement index of the node constraint");
  reducible->add_option("--format", red_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  reducible->add_option("--cache", red_cache, "memo cache file path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return cmd_count(count_opts, self_check);
    if (enumerate->parsed())
      return cmd_enumerate(enum_opts, group_by == "shape", limit);
    if (verify->parsed()) {
      if (!all_multisets && codims_opt->count() == 0) {
        std::cerr << "error: verify needs --codims or --all\n";
        return kExitInput;
      }
      return cmd_verify(verify_opts, with_oracle, with_closed_form, all_multisets);
    }
    if (table->parsed()) return cmd_table(kind, max_n, table_check, table_format);
    if (reducible->parsed())
      return cmd_reducible(red_dim, red_l0, red_list1, red_list2, red_method,
                           red_k0, red_format, red_cache);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitInput;
}
