#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "dropk/core.hpp"
#include "dropk/format.hpp"
#include "dropk/greedy.hpp"
#include "dropk/linear.hpp"
#include "dropk/oracle.hpp"
#include "dropk/utf8.hpp"
#include "dropk/verify.hpp"

namespace dropk::cli {
namespace {

using Text = Seq<char32_t>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const RunConfig& config) {
  if (config.file) {
    std::ifstream in(*config.file, std::ios::binary);
    if (!in) throw UsageError("cannot open input file: " + *config.file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!text.empty() && text.back() == '\n') {
      text.pop_back();
      if (!text.empty() && text.back() == '\r') text.pop_back();
    }
    return text;
  }
  if (config.input) return *config.input;
  throw UsageError("an input sequence or --file is required");
}

Text load_text(const RunConfig& config) {
  try {
    return decode_utf8(read_input(config));
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

void require_k_fits(std::size_t k, std::size_t n) {
  if (k > n) {
    throw UsageError("cannot drop more elements than present (k=" + std::to_string(k) +
                     ", length=" + std::to_string(n) + ")");
  }
}

std::string quote(const Text& xs) { return "\"" + encode_utf8(xs) + "\""; }

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::naive:
      return "naive";
    case Algo::greedy:
      return "greedy";
    case Algo::linear:
      return "linear";
  }
  return "?";
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Text xs = load_text(config);
    require_k_fits(config.k, xs.size());
    Text result;
    switch (config.algo) {
      case Algo::naive:
        if (xs.size() > kNaiveMaxLength || config.k > kNaiveMaxK) {
          throw UsageError("naive engine limited to length <= " +
                           std::to_string(kNaiveMaxLength) + " and k <= " +
                           std::to_string(kNaiveMaxK));
        }
        result = solve_naive(config.k, xs);
        break;
      case Algo::greedy:
        result = solve_greedy(config.k, xs);
        break;
      case Algo::linear:
        result = solve_linear(config.k, xs);
        break;
    }
    out << encode_utf8(result) << '\n';
    return kExitOk;
  });
}

int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Text xs = load_text(config);
    require_k_fits(config.k, xs.size());
    const Text result = gsolve(config.k, Text{}, xs, [&out](const ZipperEvent<char32_t>& e) {
      const Text acc(e.state.acc.begin(), e.state.acc.end());
      const Text rest(e.state.rest.begin(), e.state.rest.end());
      out << "k=" << e.state.remaining_k << " acc=" << quote(acc) << " rest=" << quote(rest)
          << ' ';
      switch (e.action) {
        case ZipperAction::push:
          out << "PUSH '" << encode_utf8(rest.front()) << "'";
          break;
        case ZipperAction::pop:
          out << "POP '" << encode_utf8(acc.back()) << "' (k->" << e.state.remaining_k - 1
              << ")";
          break;
        case ZipperAction::finish:
          out << "FINISH";
          break;
      }
      out << '\n';
    });
    out << encode_utf8(result) << '\n';
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.max_len < 1 || config.max_len > kVerifyMaxLength) {
      throw UsageError("--max-len must be between 1 and " + std::to_string(kVerifyMaxLength));
    }
    Text alphabet;
    try {
      alphabet = decode_utf8(config.alphabet);
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
    if (alphabet.empty()) throw UsageError("--alphabet must not be empty");
    if (std::set<char32_t>(alphabet.begin(), alphabet.end()).size() != alphabet.size()) {
      throw UsageError("--alphabet characters must be distinct");
    }

    const std::size_t game_len = std::min(config.max_len, kGameMaxLength);
    const std::size_t tail_len = std::min(config.max_len - 1, kMonoAuxMaxTail);

    const VerifyReport reports[] = {
        verify_engine_equivalence(config.max_len, alphabet),
        verify_greedy_condition(game_len, alphabet),
        verify_mono_aux(tail_len, alphabet),
        verify_delfoot_tie(game_len, alphabet),
    };
    std::uint64_t violations = 0;
    for (const auto& r : reports) {
      out << r;
      violations += r.violations;
    }

    const Text xs = decode_utf8("1934");
    const Text ys = decode_utf8("4234");
    const auto counter = find_better_global_violation(xs, ys);
    out << "check: better-global\n";
    if (counter) {
      out << "counterexample confirmed: xs=" << quote(xs) << " ys=" << quote(ys)
          << " drop=" << quote(counter->from_xs) << " best=" << quote(counter->best_from_ys)
          << '\n';
    } else {
      out << "counterexample NOT confirmed\n";
    }

    out << "summary\n"
        << "violations: " << violations << '\n';
    return violations == 0 && counter ? kExitOk : kExitViolation;
  });
}

std::vector<BenchRecord> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> digit(0, 9);

  auto timed = [](auto&& body) {
    const auto start = Clock::now();
    body();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(ns.count()));
  };

  std::vector<BenchRecord> records;
  for (std::size_t n : sizes) {
    Seq<char> xs(n);
    for (auto& c : xs) c = static_cast<char>('0' + digit(rng));
    const std::size_t k = n / 2;

    if (n <= kNaiveMaxLength && k <= kNaiveMaxK) {
      BenchRecord r{"naive", n, k, 0, 0};
      r.wall_nanos = timed([&] {
        const auto cands = candidates(k, xs);
        r.steps = cands.size();
        (void)max_lex(cands);
      });
      records.push_back(r);
    }
    if (n <= kGreedyBenchMaxLength) {
      BenchRecord r{"greedy", n, k, 0, 0};
      std::size_t scanned = 0;
      r.wall_nanos = timed([&] { (void)solve_greedy(k, xs, &scanned); });
      r.steps = scanned;
      records.push_back(r);
    }
    BenchRecord r{"linear", n, k, 0, 0};
    std::size_t steps = 0;
    r.wall_nanos = timed([&] {
      (void)gsolve(k, Seq<char>{}, xs, [&steps](const ZipperEvent<char>&) { ++steps; });
    });
    r.steps = steps;
    records.push_back(r);
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "algo,n,k,wall_nanos,steps\n";
  for (const auto& r : records) {
    out << r.algo << ',' << r.n << ',' << r.k << ',' << r.wall_nanos << ',' << r.steps << '\n';
  }
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.sizes.empty()) throw UsageError("--sizes is required");
    if (std::find(config.sizes.begin(), config.sizes.end(), 0u) != config.sizes.end()) {
      throw UsageError("--sizes must be positive");
    }
    const auto records = run_bench(config.sizes, config.seed);
    for (const auto& r : records) {
      if (r.algo == "linear" && r.steps > r.n + r.k + 1) {
        err << "error: linear step bound exceeded at n=" << r.n << '\n';
        return kExitViolation;
      }
    }
    write_csv(out, records);
    return kExitOk;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Drop k elements to leave the lexicographically largest remainder"};
  app.require_subcommand(1);
  RunConfig config;

  const std::map<std::string, Algo> algos{
      {"naive", Algo::naive}, {"greedy", Algo::greedy}, {"linear", Algo::linear}};

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Input sequence (UTF-8)");
    sub->add_option("--file", config.file, "Read the input from a file")
        ->check(CLI::ExistingFile);
  };

  auto* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("-k,--k", config.k, "Number of elements to drop")->required();
  solve->add_option("--algo", config.algo, "Engine: naive, greedy or linear")
      ->transform(CLI::CheckedTransformer(algos, CLI::ignore_case));
  add_input(solve);

  auto* trace = app.add_subcommand("trace", "Print each step of the linear engine");
  trace->add_option("-k,--k", config.k, "Number of elements to drop")->required();
  add_input(trace);

  auto* verify = app.add_subcommand("verify", "Run the exhaustive verification sweeps");
  verify->add_option("--max-len", config.max_len, "Longest sequence to enumerate")->required();
  verify->add_option("--alphabet", config.alphabet, "Distinct characters to enumerate over")
      ->required();

  auto* bench = app.add_subcommand("bench", "Time the engines on random digit strings");
  bench->add_option("--sizes", config.sizes, "Comma-separated input lengths")
      ->required()
      ->delimiter(',');
  bench->add_option("--seed", config.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (solve->parsed()) return cmd_solve(config, out, err);
  if (trace->parsed()) return cmd_trace(config, out, err);
  if (verify->parsed()) return cmd_verify(config, out, err);
  return cmd_bench(config, out, err);
}

}  // namespace dropk::cli
