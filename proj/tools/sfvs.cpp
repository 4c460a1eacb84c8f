#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sfvs/generators.hpp"
#include "sfvs/io.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/pipeline.hpp"
#include "sfvs/verify.hpp"

using namespace sfvs;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// The exact search branches on short S-cycles, so vertex count is not what
// limits it; kernels of desk-scale inputs easily pass the library default.
const SolverLimits kCliLimits{1000, 6};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PairInstance read_file(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return parse_instance(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string join(const std::set<Vertex>& vs) {
  std::ostringstream os;
  bool first = true;
  for (Vertex v : vs) {
    os << (first ? "" : " ") << v;
    first = false;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernelization for subset feedback vertex set"};
  app.require_subcommand(1);

  std::string input, output, report_path;
  std::uint64_t seed = 1;
  std::string stage = "full", provider = "exact";
  auto* kern = app.add_subcommand("kernelize", "Shrink an instance to an equivalent kernel");
  kern->add_option("input", input, "Instance file, - for stdin")->required();
  kern->add_option("-o,--output", output, "Kernel file (default stdout)");
  kern->add_option("--report", report_path, "Report file (default stderr)");
  kern->add_option("--seed", seed, "Seed for the randomized matroid stage");
  kern->add_option("--stage", stage, "rules, matroid or full")
      ->check(CLI::IsMember({"rules", "matroid", "full"}));
  kern->add_option("--provider", provider, "Feasible solution for the rules: exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));

  std::optional<int> max_k;
  auto* solve = app.add_subcommand("solve", "Exact answer with a witness");
  solve->add_option("input", input, "Instance file, - for stdin")->required();
  solve->add_option("--max-k", max_k, "Largest solution size searched (default: the budget)");

  GenParams gp;
  std::string model = "gnm";
  auto* gen = app.add_subcommand("gen", "Random instance");
  gen->add_option("--n", gp.n, "Vertices")->check(CLI::NonNegativeNumber);
  gen->add_option("--m", gp.m, "Edges (gnm only)")->check(CLI::NonNegativeNumber);
  gen->add_option("--s", gp.s, "S-edges (gnm) or pendant S-edges (bubble-forest)")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--k", gp.k, "Budget");
  gen->add_option("--seed", gp.seed, "Seed");
  gen->add_option("--model", model, "gnm or bubble-forest")->check(CLI::IsMember({"gnm", "bubble-forest"}));
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  VerifyParams vp;
  auto* verify = app.add_subcommand("verify", "Seeded equivalence and bound sweep");
  verify->add_option("--trials", vp.trials, "Number of trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", vp.n_max, "Largest generated vertex count")->check(CLI::NonNegativeNumber);
  verify->add_option("--k-max", vp.k_max, "Largest budget")->check(CLI::Range(0, 5));
  verify->add_option("--seed", vp.seed, "Seed");

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
    if (*kern) {
      PairInstance inst = read_file(input);
      PipelineOptions opt;
      opt.seed = seed;
      opt.stage = stage == "rules" ? Stage::Rules : stage == "matroid" ? Stage::Matroid : Stage::Full;
      opt.provider = provider == "greedy" ? Provider::Greedy : Provider::Exact;
      PipelineResult res = kernelize(inst, opt);
      write_text(output, instance_to_string({res.output, {}}, res.origin));
      if (report_path.empty())
        std::cerr << res.report.text();
      else
        write_text(report_path, res.report.text());
      return kOk;
    }
    if (*solve) {
      PairInstance inst = read_file(input);
      int limit = max_k.value_or(inst.base.budget);
      if (limit < 0) {
        std::cout << "answer=NO\nbudget=" << limit << '\n';
        return kOk;
      }
      SolveResult r = solve_exact(inst, limit, kCliLimits);
      if (r.feasible)
        std::cout << "answer=YES\nsize=" << r.optimum << "\nwitness=" << join(r.witness.deleted) << '\n';
      else
        std::cout << "answer=NO\nbudget=" << limit << '\n';
      return kOk;
    }
    if (*gen) {
      gp.model = model == "gnm" ? GenModel::Gnm : GenModel::BubbleForest;
      Generated g = generate(gp);
      std::ostringstream os;
      write_instance(os, g.instance);
      os << "# model " << model << " motif " << g.motif << '\n';
      if (!g.planted_z.empty()) os << "# planted z " << join(g.planted_z) << '\n';
      write_text(output, os.str());
      return kOk;
    }
    if (*verify) {
      VerifySummary sum = run_verify(vp);
      std::cout << sum.text();
      return sum.ok() ? kOk : kVerifyFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
