#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

namespace {

using gtm::cli::json;

gtm::BigInt parse_big(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw gtm::invalid_argument(what + " must be a non-negative decimal integer");
  return gtm::BigInt(text);
}

std::vector<gtm::BigInt> parse_value_map(const std::string& text) {
  std::vector<gtm::BigInt> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_big(item, "--map entry"));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Thue-Morse sequences: generation, periodicity, stammering, "
               "k-kernels and associated constants"};
  app.footer(gtm::cli::exit_code_help);
  app.require_subcommand(1);

  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit wall_time_ms from JSON reports");

  std::string spec_path;
  std::uint64_t start = 0, stride = 1;

  // gen
  auto* gen = app.add_subcommand("gen", "Print a(N), a(N+l), ... by digit counting and/or morphism");
  std::string mode = "digit";
  std::size_t count = 16;
  bool gen_json = false;
  gen->add_option("spec", spec_path, "Spec file")->required();
  gen->add_option("--mode", mode, "digit | morphic | both")
      ->check(CLI::IsMember({"digit", "morphic", "both"}));
  gen->add_option("--count", count, "Number of terms");
  gen->add_option("--N", start, "Start index N");
  gen->add_option("--l", stride, "Stride l")->check(CLI::PositiveNumber);
  gen->add_flag("--json", gen_json, "Emit a JSON run report");

  // classify
  auto* classify = app.add_subcommand("classify", "Decide ultimate periodicity of the sequence");
  classify->add_option("spec", spec_path, "Spec file")->required();

  // aenp
  auto* aenp = app.add_subcommand("aenp", "Scan equally spaced subsequences for periodic windows");
  std::uint64_t max_start = 8, max_stride = 8;
  std::size_t horizon = 4096;
  unsigned jobs = 1;
  aenp->add_option("spec", spec_path, "Spec file")->required();
  aenp->add_option("--max-N", max_start, "Largest start index N");
  aenp->add_option("--max-l", max_stride, "Largest stride l")->check(CLI::PositiveNumber);
  aenp->add_option("--horizon", horizon, "Window length per subsequence");
  aenp->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  // stammer
  auto* stammer = app.add_subcommand("stammer", "Build and verify stammering witnesses");
  std::uint64_t m_first = 0;
  std::optional<std::uint64_t> m_last;
  stammer->add_option("spec", spec_path, "Spec file")->required();
  stammer->add_option("--N", start, "Start index N");
  stammer->add_option("--l", stride, "Stride l")->check(CLI::PositiveNumber);
  stammer->add_option("--m", m_first, "Construction level m")->required();
  stammer->add_option("--m-last", m_last, "Last level of a witness family (default: --m)");

  // kernel
  auto* kernel = app.add_subcommand("kernel", "Explore the k-kernel and emit its automaton");
  std::size_t max_states = 4096;
  kernel->add_option("spec", spec_path, "Spec file")->required();
  kernel->add_option("--max-states", max_states, "State cap before reporting inconclusive");

  // eval
  auto* eval = app.add_subcommand("eval", "Enclose sum a(N+nl) beta^(-n-1) in a rational interval");
  std::uint64_t beta = 0, digits = 20;
  eval->add_option("spec", spec_path, "Spec file")->required();
  eval->add_option("--N", start, "Start index N");
  eval->add_option("--l", stride, "Stride l")->check(CLI::PositiveNumber);
  eval->add_option("--beta", beta, "Integer base beta >= L (default L)");
  eval->add_option("--digits", digits, "Decimal digits")->check(CLI::PositiveNumber);

  // cf
  auto* cf = app.add_subcommand("cf", "Convergents of [0: rho(a(N)), rho(a(N+l)), ...]");
  std::size_t depth = 20;
  std::string value_map;
  cf->add_option("spec", spec_path, "Spec file")->required();
  cf->add_option("--N", start, "Start index N");
  cf->add_option("--l", stride, "Stride l")->check(CLI::PositiveNumber);
  cf->add_option("--depth", depth, "Number of partial quotients after a_0 = 0");
  cf->add_option("--map", value_map, "Comma-separated rho(0),...,rho(L-1) (default j+1)");

  // gap
  auto* gap = app.add_subcommand("gap", "Multiple x*l = k^w (1 + k^(t+1) M) with leading digit 1");
  std::string gap_l;
  std::uint32_t gap_k = 2;
  std::uint64_t gap_t = 0;
  std::optional<std::uint64_t> gap_t2;
  gap->add_option("l", gap_l, "Positive integer l")->required();
  gap->add_option("k", gap_k, "Base k >= 2")->required();
  gap->add_option("t", gap_t, "Gap threshold t >= 0")->required();
  gap->add_option("--t2", gap_t2, "Second threshold t' (shared leading exponent)");

  // expand
  auto* expand_cmd = app.add_subcommand("expand", "Base-k expansion of n");
  std::string expand_n;
  std::uint32_t expand_k = 2;
  expand_cmd->add_option("n", expand_n, "Non-negative integer")->required();
  expand_cmd->add_option("k", expand_k, "Base k >= 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : gtm::cli::exit_failure;
  }

  try {
    const auto began = std::chrono::steady_clock::now();
    const std::size_t budget = gtm::cli::term_budget_from_env();
    auto emit = [&](const std::string& command, json parameters, json payload) {
      std::optional<double> wall_ms;
      if (!no_timing)
        wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - began).count();
      std::cout << gtm::cli::make_report(command, std::move(parameters), std::move(payload), wall_ms).dump(2)
                << "\n";
    };
    auto load = [&] { return gtm::io::load_spec_file(spec_path); };
    auto spec_params = [&](const gtm::io::SpecFile& file) {
      return gtm::io::spec_to_json(file.spec, file.name);
    };

    if (*gen) {
      const auto file = load();
      const auto gen_mode = mode == "morphic" ? gtm::cli::GenMode::morphic
                            : mode == "both"  ? gtm::cli::GenMode::both
                                              : gtm::cli::GenMode::digit;
      const auto result = gtm::cli::run_gen(file.spec, gen_mode, start, stride, count, budget);
      if (gen_json) {
        emit("gen",
             {{"spec", spec_params(file)}, {"mode", mode}, {"N", start}, {"l", stride}, {"count", count}},
             gtm::cli::gen_payload(result));
      } else {
        std::cout << gtm::cli::render_gen(result) << "\n";
      }
      return result.agree.value_or(true) ? 0 : gtm::cli::exit_failure;
    }
    if (*classify) {
      const auto file = load();
      emit("classify", {{"spec", spec_params(file)}}, gtm::cli::classify_payload(file.spec));
    } else if (*aenp) {
      const auto file = load();
      emit("aenp",
           {{"spec", spec_params(file)}, {"max_N", max_start}, {"max_l", max_stride}, {"horizon", horizon}},
           gtm::cli::aenp_payload(file.spec, max_start, max_stride, horizon, jobs));
    } else if (*stammer) {
      const auto file = load();
      const std::uint64_t last = m_last.value_or(m_first);
      emit("stammer",
           {{"spec", spec_params(file)}, {"N", start}, {"l", stride}, {"m", m_first}, {"m_last", last}},
           gtm::cli::stammer_payload(file.spec, start, stride, m_first, last, budget));
    } else if (*kernel) {
      const auto file = load();
      emit("kernel", {{"spec", spec_params(file)}, {"max_states", max_states}},
           gtm::cli::kernel_payload(file.spec, max_states));
    } else if (*eval) {
      const auto file = load();
      const std::uint64_t b = beta == 0 ? file.spec.modulus() : beta;
      emit("eval",
           {{"spec", spec_params(file)}, {"N", start}, {"l", stride}, {"beta", b}, {"digits", digits}},
           gtm::cli::eval_payload(file.spec, start, stride, b, digits, budget));
    } else if (*cf) {
      const auto file = load();
      const auto map = value_map.empty() ? gtm::default_value_map(file.spec.modulus())
                                         : parse_value_map(value_map);
      json map_json = json::array();
      for (const auto& v : map) map_json.push_back(v.str());
      emit("cf",
           {{"spec", spec_params(file)}, {"N", start}, {"l", stride}, {"depth", depth}, {"map", map_json}},
           gtm::cli::cf_payload(file.spec, start, stride, depth, map, budget));
    } else if (*gap) {
      const auto l = parse_big(gap_l, "l");
      json params{{"l", gap_l}, {"k", gap_k}, {"t", gap_t}};
      if (gap_t2) params["t2"] = *gap_t2;
      emit("gap", params, gtm::cli::gap_payload(l, gap_k, gap_t, gap_t2));
    } else if (*expand_cmd) {
      emit("expand", {{"n", expand_n}, {"k", expand_k}},
           gtm::cli::expand_payload(parse_big(expand_n, "n"), expand_k));
    }
    return gtm::cli::exit_ok;
  } catch (const std::exception& e) {
    std::cerr << "gtm: " << e.what() << "\n";
    return gtm::cli::exit_code_for(e);
  }
}
