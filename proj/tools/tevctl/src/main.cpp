#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace tevctl;

  CLI::App app{"Tevelev degrees of P^r blown up at points"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "plain"};

  auto* compute = app.add_subcommand("compute", "Compute one Tevelev degree");
  int r = 0, g = 0;
  std::int64_t d = 0;
  std::string k_list;
  std::optional<std::int64_t> n;
  std::string kind = "both", engine = "auto", format = "json";
  compute->add_option("--r", r, "dimension of P^r")->required();
  compute->add_option("--g", g, "genus")->required();
  compute->add_option("--d", d, "degree along H")->required();
  compute->add_option("--k", k_list, "comma-separated exceptional multiplicities (empty for P^r)")->required();
  compute->add_option("--n", n, "marked points; solved from the dimension constraint if omitted");
  compute->add_option("--kind", kind)->check(CLI::IsMember({"tev", "vtev", "both"}));
  compute->add_option("--engine", engine)->check(CLI::IsMember({"auto", "grr", "closed", "residue", "qh"}));
  compute->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* batch = app.add_subcommand("batch", "Evaluate newline-delimited JSON records");
  BatchOptions batch_opts;
  batch->add_option("--input", batch_opts.input, "input file")->required();
  batch->add_option("--output", batch_opts.output, "output file (default: standard output)");
  batch->add_option("--parallel", batch_opts.parallel, "worker threads")->check(CLI::PositiveNumber);

  auto* cross = app.add_subcommand("crosscheck", "Compare every applicable engine over a grid");
  CrosscheckOptions cross_opts;
  std::string cross_format = "plain";
  cross->add_option("--grid", cross_opts.grid, "preset: l1-small, genus0-small, r2l2, qh-lemma");
  cross->add_option("--r-range", cross_opts.r, "lo:hi");
  cross->add_option("--g-range", cross_opts.g, "lo:hi");
  cross->add_option("--ell-range", cross_opts.ell, "lo:hi");
  cross->add_option("--k-range", cross_opts.k, "lo:hi, applied to every k_i");
  cross->add_option("--d-range", cross_opts.d, "lo:hi");
  cross->add_option("--engines", cross_opts.engines, "engine subset")->delimiter(',');
  cross->add_option("--format", cross_format)->check(CLI::IsMember(formats));
  cross->add_option("--parallel", cross_opts.parallel, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (compute->parsed()) {
    ComputeRequest req;
    req.r = r;
    req.g = g;
    req.d = d;
    req.n = n;
    req.kind = *kind_from_name(kind);
    req.engine = *engine_choice_from_name(engine);
    try {
      req.k = parse_k_list(k_list);
    } catch (const std::exception& e) {
      std::cerr << "tevctl: " << e.what() << "\n";
      return kUsage;
    }
    return cmd_compute(req, *format_from_name(format), std::cout, std::cerr);
  }
  if (batch->parsed()) return cmd_batch(batch_opts, std::cout, std::cerr);
  cross_opts.format = *format_from_name(cross_format);
  return cmd_crosscheck(cross_opts, std::cout, std::cerr);
}
