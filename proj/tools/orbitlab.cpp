// orbitlab — exact-arithmetic toolkit for orbits of fixed-density binary
// words: enumeration, base-2 orbit tables, majorization posets, and
// brute-force verification sweeps. All outputs are deterministic; big
// integers are printed as decimal strings.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "orbitlab/report.hpp"

namespace {

using namespace orbitlab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;  // in-hypothesis failure or structural discovery

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << text;
}

unsigned default_workers() {
  if (const char* env = std::getenv("ORBITLAB_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

// Distributes work(i) for i in [0, count) over a small pool; results must be
// written to pre-sized slots so output order stays independent of scheduling.
template <typename Work>
void run_indexed(std::size_t count, unsigned workers, Work&& work) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(workers, count);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct VerifyOptions {
  std::string theorem;
  unsigned p = 0, q = 0;        // 0 = unset
  unsigned p_max = 0, q_max = 12;
  unsigned grid = 6;
  unsigned workers = default_workers();
  std::string format = "json";
  std::string out;
};

std::vector<std::pair<unsigned, unsigned>> make_pairs(const VerifyOptions& opt) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  const unsigned q_lo = opt.q ? opt.q : 2;
  const unsigned q_hi = opt.q ? opt.q : opt.q_max;
  for (unsigned q = q_lo; q <= q_hi; ++q) {
    unsigned p_hi = opt.p ? opt.p : (q - 1);
    if (!opt.p && opt.p_max) p_hi = std::min(p_hi, opt.p_max);
    for (unsigned p = opt.p ? opt.p : 1; p <= p_hi && p < q; ++p) pairs.emplace_back(p, q);
  }
  if (pairs.empty()) throw CLI::ValidationError("verify", "empty (p, q) range");
  return pairs;
}

TheoremReport run_theorem(const std::string& id, unsigned p, unsigned q) {
  if (id == "t1") return verify_theorem1(p, q);
  if (id == "t2") return verify_theorem2(p, q);
  if (id == "t4") return verify_theorem4(p, q);
  if (id == "t5") return verify_theorem5(p, q);
  if (id == "t6") return verify_theorem6(p, q);
  return verify_conjecture3(p, q);
}

int verify_theorem_sweep(const VerifyOptions& opt) {
  const auto pairs = make_pairs(opt);
  std::vector<TheoremReport> reports(pairs.size());
  std::vector<double> seconds(pairs.size(), 0.0);
  run_indexed(pairs.size(), opt.workers, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    reports[i] = run_theorem(opt.theorem, pairs[i].first, pairs[i].second);
    seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });

  std::ostringstream out;
  if (opt.format == "csv") {
    out << "p,q,theorem,holds,orbits,seconds\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      out << pairs[i].first << "," << pairs[i].second << "," << reports[i].theorem << ","
          << (reports[i].holds ? "true" : "false") << "," << reports[i].orbits_checked << ","
          << std::fixed << std::setprecision(3) << seconds[i] << "\n";
    }
  } else {
    for (const TheoremReport& r : reports) out << theorem_report_json(r).dump() << "\n";
  }
  write_output(out.str(), opt.out);

  const bool conjecture = opt.theorem == "c3";
  for (const TheoremReport& r : reports) {
    if (!conjecture && r.checked && r.in_hypothesis && !r.holds) return kExitViolation;
  }
  return kExitOk;
}

int verify_lemma_sweep(const VerifyOptions& opt) {
  std::ostringstream json_out;
  std::ostringstream csv_out;
  csv_out << "lemma,item,cases,vacuous,failures,seconds\n";
  bool any_failure = false;

  const unsigned q_hi = opt.q ? opt.q : opt.q_max;
  for (int item = 1; item <= 11; ++item) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t cases = 0, failures = 0;
    for (unsigned q = std::max(lemma3_min_q(item), opt.q ? opt.q : 2u); q <= q_hi; ++q) {
      std::vector<unsigned> ps{0};
      if (lemma3_requires_p(item)) {
        ps.clear();
        for (unsigned p = 1; p < q; ++p) {
          if ((item == 2 && p <= q - p) || (item == 3 && p > q - p)) ps.push_back(p);
        }
      }
      for (unsigned p : ps) {
        const Lemma3Values values = check_lemma3_values(item, q, p);
        ++cases;
        if (!values.holds) ++failures;
        json_out << lemma3_report_json(item, q, p, values).dump() << "\n";
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    csv_out << "3," << item << "," << cases << ",0," << failures << "," << std::fixed
            << std::setprecision(3) << secs << "\n";
    any_failure = any_failure || failures > 0;
  }

  for (int lemma = 4; lemma <= 5; ++lemma) {
    for (int item = 1; item <= 9; ++item) {
      const auto start = std::chrono::steady_clock::now();
      std::size_t cases = 0, vacuous = 0, failures = 0;
      const auto params_list =
          lemma == 4 ? lemma4_param_grid(item, opt.grid) : lemma5_param_grid(item, opt.grid);
      for (const Lemma45Params& params : params_list) {
        const LemmaCheck check = lemma == 4 ? check_lemma4_all(item, params)
                                            : check_lemma5_all(item, params);
        ++cases;
        if (check.outcome == LemmaOutcome::vacuous) ++vacuous;
        if (check.outcome == LemmaOutcome::fails) ++failures;
        json_out << lemma45_report_json(lemma, item, params, check).dump() << "\n";
      }
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      csv_out << lemma << "," << item << "," << cases << "," << vacuous << "," << failures << ","
              << std::fixed << std::setprecision(3) << secs << "\n";
      any_failure = any_failure || failures > 0;
    }
  }

  write_output(opt.format == "csv" ? csv_out.str() : json_out.str(), opt.out);
  return any_failure ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for orbits of fixed-density binary words"};
  app.require_subcommand(1);

  unsigned p = 0, q = 0;
  std::string format, kind, out_path;
  bool rounded = false, plot = false;

  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list orbit representatives with base-2 orbits");
  cmd_enumerate->add_option("--p", p, "number of ones")->required();
  cmd_enumerate->add_option("--q", q, "word length")->required();
  cmd_enumerate->add_option("--format", format, "csv|json")->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_enumerate->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* cmd_table = app.add_subcommand("table", "per-orbit base-2 values with partial sums or products");
  cmd_table->add_option("--p", p)->required();
  cmd_table->add_option("--q", q)->required();
  cmd_table->add_option("--kind", kind, "sums|products")->required()
      ->check(CLI::IsMember({"sums", "products"}));
  cmd_table->add_flag("--rounded", rounded, "two-significant-figure mantissa/exponent presentation (products only)");
  cmd_table->add_option("--format", format, "csv|json")->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_table->add_option("--out", out_path);

  CLI::App* cmd_poset = app.add_subcommand("poset", "majorization partial order as a DOT digraph of covering edges");
  cmd_poset->add_option("--p", p)->required();
  cmd_poset->add_option("--q", q)->required();
  cmd_poset->add_option("--kind", kind, "sum|product")->required()
      ->check(CLI::IsMember({"sum", "product"}));
  cmd_poset->add_option("--format", format, "dot")->default_val("dot")->check(CLI::IsMember({"dot"}));
  cmd_poset->add_option("--out", out_path);

  CLI::App* cmd_lexiprod = app.add_subcommand("lexiprod", "lexicographic-to-product rank permutation and balance classes");
  cmd_lexiprod->add_option("--p", p)->required();
  cmd_lexiprod->add_option("--q", q)->required();
  cmd_lexiprod->add_option("--format", format, "csv|json")->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_lexiprod->add_flag("--plot", plot, "two-column staircase data (csv only)");
  cmd_lexiprod->add_option("--out", out_path);

  VerifyOptions vopt;
  CLI::App* cmd_verify = app.add_subcommand("verify", "brute-force verification sweeps; JSON report per case");
  cmd_verify->add_option("theorem", vopt.theorem, "t1|t2|t4|t5|t6|c3|lemmas")->required()
      ->check(CLI::IsMember({"t1", "t2", "t4", "t5", "t6", "c3", "lemmas"}));
  cmd_verify->add_option("--p", vopt.p, "fix p");
  cmd_verify->add_option("--q", vopt.q, "fix q");
  cmd_verify->add_option("--p-max", vopt.p_max, "cap p (default q-1)");
  cmd_verify->add_option("--q-max", vopt.q_max, "sweep q up to this bound")->default_val(12);
  cmd_verify->add_option("--grid", vopt.grid, "parameter bound for lemma sweeps")->default_val(6);
  cmd_verify->add_option("--workers", vopt.workers, "parallel workers, one (p,q) pair each (env ORBITLAB_WORKERS)");
  cmd_verify->add_option("--format", vopt.format, "json|csv (csv = sweep summary)")->default_val("json")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_verify->add_option("--out", vopt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cmd_enumerate->parsed()) {
      write_output(format == "json" ? enumerate_json(p, q).dump(2) + "\n" : enumerate_csv(p, q),
                   out_path);
      return kExitOk;
    }
    if (cmd_table->parsed()) {
      const TableKind table_kind = kind == "sums" ? TableKind::sums : TableKind::products;
      if (rounded && table_kind != TableKind::products) {
        std::cerr << "--rounded applies only to --kind products\n";
        return kExitUsage;
      }
      std::string text;
      if (format == "json")
        text = table_json(p, q, table_kind, rounded).dump(2) + "\n";
      else
        text = rounded ? rounded_products_csv(p, q) : table_csv(p, q, table_kind);
      write_output(text, out_path);
      return kExitOk;
    }
    if (cmd_poset->parsed()) {
      const PosetKind poset_kind = kind == "sum" ? PosetKind::sum : PosetKind::product;
      write_output(poset_dot(build_poset(p, q, poset_kind)), out_path);
      return kExitOk;
    }
    if (cmd_lexiprod->parsed()) {
      if (plot && format != "csv") {
        std::cerr << "--plot produces csv only\n";
        return kExitUsage;
      }
      const LexiProdPermutation perm = lexiprod_permutation(p, q);
      std::string text;
      if (plot)
        text = lexiprod_plot_csv(perm);
      else
        text = format == "json" ? lexiprod_json(perm).dump(2) + "\n" : lexiprod_csv(perm);
      write_output(text, out_path);
      return kExitOk;
    }
    if (cmd_verify->parsed())
      return vopt.theorem == "lemmas" ? verify_lemma_sweep(vopt) : verify_theorem_sweep(vopt);
  } catch (const ProfileCollision& e) {
    std::cerr << "structural discovery: " << e.what() << "\n";
    return kExitViolation;
  } catch (const DuplicateProduct& e) {
    std::cerr << "structural discovery: " << e.what() << "\n";
    return kExitViolation;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
