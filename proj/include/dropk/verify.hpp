#pragma once

// Exhaustive small-scale sweeps tying the engines and the greedy-condition
// game together. Inputs are sharded into contiguous blocks across worker
// threads and merged in block order, so the reported counterexample is
// always the first one in enumeration order.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dropk/core.hpp"
#include "dropk/format.hpp"
#include "dropk/greedy.hpp"
#include "dropk/greedy_condition.hpp"
#include "dropk/linear.hpp"
#include "dropk/oracle.hpp"
#include "dropk/report.hpp"

namespace dropk {

/// Every sequence over `alphabet` with min_len <= length <= max_len,
/// shorter first, each length in lexicographic order of alphabet positions.
template <Token T>
std::vector<Seq<T>> all_sequences(const Seq<T>& alphabet, std::size_t min_len,
                                  std::size_t max_len) {
  std::vector<Seq<T>> out;
  if (alphabet.empty()) {
    if (min_len == 0) out.emplace_back();
    return out;
  }
  for (std::size_t len = min_len; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      Seq<T> s;
      s.reserve(len);
      for (auto d : digits) s.push_back(alphabet[d]);
      out.push_back(std::move(s));
      std::size_t pos = len;
      while (pos > 0 && ++digits[pos - 1] == alphabet.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return out;
}

/// Runs `check(item, report)` over every item, sharded across `workers`
/// threads (0 picks the hardware concurrency).
template <class Item, class Check>
VerifyReport sweep(std::string name, const std::vector<Item>& items, Check check,
                   unsigned workers = 0) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(1, items.size())));

  std::vector<VerifyReport> partial(workers);
  auto run_block = [&](unsigned w) {
    const std::size_t begin = items.size() * w / workers;
    const std::size_t end = items.size() * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) check(items[i], partial[w]);
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
  }

  VerifyReport total;
  total.check = std::move(name);
  for (const auto& p : partial) total.merge(p);
  return total;
}

/// Exhaustive engine agreement: naive = greedy = linear for every k.
/// The naive engine deduplicates per level, which leaves its maximum
/// unchanged.
template <Token T>
VerifyReport verify_engine_equivalence(std::size_t max_len, const Seq<T>& alphabet,
                                       unsigned workers = 0) {
  const auto inputs = all_sequences(alphabet, 0, max_len);
  return sweep(
      "engine-equivalence", inputs,
      [](const Seq<T>& xs, VerifyReport& r) {
        for (std::size_t k = 0; k <= xs.size(); ++k) {
          const auto naive = solve_naive(k, xs, Dedup::yes);
          const auto greedy = solve_greedy(k, xs);
          const auto linear = solve_linear(k, xs);
          r.record(naive == greedy && greedy == linear, [&] {
            return "k=" + std::to_string(k) + " xs=\"" + show(xs) + "\" naive=\"" + show(naive) +
                   "\" greedy=\"" + show(greedy) + "\" linear=\"" + show(linear) + "\"";
          });
        }
      },
      workers);
}

/// The greedy-condition game over every sequence, every 1+k and every
/// adversary plan: `alter` must satisfy mono and unfoot, and independently
/// the adversary's result must lie below the best continuation after
/// gstep (the existential form, decided by exhaustive search).
template <Token T>
VerifyReport verify_greedy_condition(std::size_t max_len, const Seq<T>& alphabet,
                                     unsigned workers = 0) {
  const auto inputs = all_sequences(alphabet, 1, max_len);
  return sweep(
      "greedy-condition", inputs,
      [](const Seq<T>& xs, VerifyReport& r) {
        const auto ft = foot_witness(xs);
        const auto after_gstep = gstep(xs);
        for (std::size_t deletions = 1; deletions <= xs.size(); ++deletions) {
          const auto best_after_gstep = solve_naive(deletions - 1, after_gstep, Dedup::yes);
          for (const auto& plan : enumerate_plans(deletions, xs.size())) {
            const auto g = play(xs, plan, ft);
            const bool exists = lex_le(g.adversary_result, best_after_gstep);
            r.record(g.mono_ok && g.unfoot_ok && exists, [&] {
              std::ostringstream os;
              os << "xs=\"" << show(xs) << "\" plan=" << plan.letters()
                 << " altered=" << alter(plan, ft).letters() << " mono=" << g.mono_ok
                 << " unfoot=" << g.unfoot_ok << " exists=" << exists;
              return os.str();
            });
          }
        }
      },
      workers);
}

/// monoAux: for every tail with 1 <= |tail| <= max_tail_len and every
/// x >= head(tail) drawn from the alphabet.
template <Token T>
VerifyReport verify_mono_aux(std::size_t max_tail_len, const Seq<T>& alphabet,
                             unsigned workers = 0) {
  const auto tails = all_sequences(alphabet, 1, max_tail_len);
  return sweep(
      "mono-aux", tails,
      [&alphabet](const Seq<T>& tail, VerifyReport& r) {
        const auto ft = foot_witness(tail);
        for (const T& x : alphabet) {
          if (x < tail.front()) continue;
          r.record(check_mono_aux(x, tail, ft), [&] {
            return "x='" + show(x) + "' tail=\"" + show(tail) + "\"";
          });
        }
      },
      workers);
}

/// Deleting the witnessed foot agrees with gstep.
template <Token T>
VerifyReport verify_delfoot_tie(std::size_t max_len, const Seq<T>& alphabet,
                                unsigned workers = 0) {
  const auto inputs = all_sequences(alphabet, 1, max_len);
  return sweep(
      "delfoot-gstep", inputs,
      [](const Seq<T>& xs, VerifyReport& r) {
        r.record(apply_plan(xs, delfoot(foot_witness(xs))) == gstep(xs),
                 [&] { return "xs=\"" + show(xs) + "\""; });
      },
      workers);
}

}  // namespace dropk
