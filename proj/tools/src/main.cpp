#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "strata_cli/commands.hpp"

using namespace strata;
using namespace strata::cli;

namespace {

struct Raw {
  std::string space;
  std::size_t k = 0;
  std::string primes = "3,5";
  std::uint64_t budget = 100'000'000;
  unsigned workers = 0;
  std::string format = "json";
  std::string out;
  std::string in;
};

std::string render(const ReportBundle& b, const std::string& format) {
  if (format == "dot") return render_dot(b);
  if (format == "csv") return render_csv(b);
  return render_json(b);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

ReportBundle read_report(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::stringstream ss;
  ss << f.rdbuf();
  return bundle_from_json(Json::parse(ss.str()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strata: orbit strata of Grassmannians in sums of bilinear spaces over F_p"};
  app.require_subcommand(1);
  Raw raw;
  Options opts;

  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry commands[] = {
      {"labels", "List the label set Omega_k with dimensions and component groups"},
      {"classify", "Label the row space of --rows"},
      {"count", "Point counts per label, interpolated polynomials, degree law"},
      {"paving", "Affine paving of Gr_k^iso of a single factor"},
      {"resolve", "Resolution tower of --label and its point count"},
      {"fibers", "Fibers of the resolution of --label over every stratum"},
      {"closure", "Experimental closure order on Omega_k (poset)"},
      {"verify", "Run a property suite; nonzero exit on any failed check"},
  };
  std::map<std::string, CLI::Option*> k_flags;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--space", raw.space, "Factor list, e.g. Sp2+O3+O4")->required();
    k_flags[c.name] = sub->add_option("--k", raw.k, "Subspace dimension");
    sub->add_option("--primes", raw.primes, "Comma-separated odd primes")->capture_default_str();
    sub->add_option("--budget", raw.budget, "Maximum number of enumerated objects")->capture_default_str();
    sub->add_option("--workers", raw.workers, "Worker threads (0: one per core)")->capture_default_str();
    sub->add_option("--format", raw.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", raw.out, "Output file (default stdout)");
    sub->add_option("--label", opts.label, "Label such as '((1,0),(0,0p))'");
    if (std::string(c.name) == "classify") sub->add_option("--rows", opts.rows, "Rows '1,0,1,0;0,1,0,0'");
    if (std::string(c.name) == "paving") sub->add_option("--flag", opts.flag, "Flag 'rows|rows'");
    if (std::string(c.name) == "labels") sub->add_flag("--counts", opts.counts, "Add point counts per prime");
    if (std::string(c.name) == "verify") {
      sub->add_option("--suite", opts.suite, "partition|degrees|paving|towers|fibers|closure|all")
          ->capture_default_str();
    }
  }
  CLI::App* exp = app.add_subcommand("export", "Convert a saved JSON report to json, dot or csv");
  exp->add_option("--in", raw.in, "Report written by --format json")->required();
  exp->add_option("--format", raw.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "csv"}))
      ->capture_default_str();
  exp->add_option("--out", raw.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (sub == exp) {
      emit(render(read_report(raw.in), raw.format), raw.out);
      return kPass;
    }
    opts.command = sub->get_name();
    opts.space = SpaceSpec::parse(raw.space);
    if (k_flags[opts.command]->count() > 0) opts.k = raw.k;
    opts.primes = parse_primes(raw.primes);
    opts.budget = raw.budget;
    opts.workers = raw.workers;
    ReportBundle b = run(opts);
    emit(render(b, raw.format), raw.out);
    for (const auto& c : b.checks) {
      if (!c.pass) std::cerr << "FAIL " << c.name << ": " << c.detail << "\n  rerun: " << c.reproduce << "\n";
    }
    return b.all_pass() ? kPass : kCheckFailed;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return kBudgetRefused;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
