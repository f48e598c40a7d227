#pragma once

// Executable form of the exchange argument behind the greedy step.
//
// An adversary picks 1+k positions of xs to delete. `alter` rewrites that
// plan into one that deletes the same number of positions, deletes the hill
// foot, and leaves a result no worse than the adversary's. The checkers
// below evaluate those two properties on concrete inputs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dropk/core.hpp"
#include "dropk/greedy.hpp"

namespace dropk {

enum class PlanAction : std::uint8_t { keep, del };

/// Per-position keep/delete instructions for a sequence of a fixed length.
/// The terminal marker is implicit at actions().size().
class DelPlan {
 public:
  DelPlan() = default;
  explicit DelPlan(std::vector<PlanAction> actions)
      : actions_(std::move(actions)),
        deletions_(static_cast<std::size_t>(
            std::count(actions_.begin(), actions_.end(), PlanAction::del))) {}

  /// Parses 'k'/'d' letters, e.g. "kdkdk".
  static DelPlan parse(std::string_view letters) {
    std::vector<PlanAction> actions;
    actions.reserve(letters.size());
    for (char c : letters) {
      if (c == 'k') {
        actions.push_back(PlanAction::keep);
      } else if (c == 'd') {
        actions.push_back(PlanAction::del);
      } else {
        throw PreconditionError("plan letters must be 'k' or 'd'");
      }
    }
    return DelPlan(std::move(actions));
  }

  const std::vector<PlanAction>& actions() const { return actions_; }
  std::size_t deletions() const { return deletions_; }
  std::size_t base_length() const { return actions_.size(); }

  std::string letters() const {
    std::string out;
    out.reserve(actions_.size());
    for (auto a : actions_) out.push_back(a == PlanAction::keep ? 'k' : 'd');
    return out;
  }

  friend bool operator==(const DelPlan&, const DelPlan&) = default;

 private:
  std::vector<PlanAction> actions_;
  std::size_t deletions_ = 0;
};

/// Carries out a plan.
template <Token T>
Seq<T> apply_plan(const Seq<T>& xs, const DelPlan& plan) {
  if (plan.base_length() != xs.size()) {
    throw PreconditionError("plan length does not match sequence length");
  }
  Seq<T> out;
  out.reserve(xs.size() - plan.deletions());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (plan.actions()[i] == PlanAction::keep) out.push_back(xs[i]);
  }
  return out;
}

inline bool is_del(std::size_t i, const DelPlan& plan) {
  if (i >= plan.base_length()) throw PreconditionError("position outside plan");
  return plan.actions()[i] == PlanAction::del;
}

/// Evidence that `index` is the hill foot of some sequence of length
/// `target_length`. Only obtainable through a validity check against a
/// concrete sequence, or by peeling a `next` step off an existing witness.
class FootWitness {
 public:
  std::size_t index() const { return index_; }
  std::size_t target_length() const { return target_length_; }

  /// Checks the three witness clauses against xs:
  ///   last: xs is a singleton and index is 0;
  ///   this: index is 0 and xs[0] < xs[1];
  ///   next: xs[0] >= xs[1] and index-1 is the foot of the tail.
  template <Token T>
  static bool valid_for(const Seq<T>& xs, std::size_t index) {
    std::size_t j = 0;
    for (;;) {
      if (j >= xs.size()) return false;
      if (j + 1 == xs.size()) return index == j;          // last
      if (index == j) return xs[j] < xs[j + 1];           // this
      if (xs[j] < xs[j + 1]) return false;                // next needs x >= y
      ++j;
    }
  }

  template <Token T>
  static FootWitness make(const Seq<T>& xs, std::size_t index) {
    if (!valid_for(xs, index)) throw PreconditionError("index is not the hill foot");
    return FootWitness(index, xs.size());
  }

  /// The witness for the tail under a `next` clause.
  FootWitness tail() const {
    if (index_ == 0) throw PreconditionError("foot witness has no next step");
    return FootWitness(index_ - 1, target_length_ - 1);
  }

  friend bool operator==(const FootWitness&, const FootWitness&) = default;

 private:
  FootWitness(std::size_t index, std::size_t target_length)
      : index_(index), target_length_(target_length) {}

  std::size_t index_ = 0;
  std::size_t target_length_ = 0;
};

template <Token T>
FootWitness foot_witness(const Seq<T>& xs) {
  return FootWitness::make(xs, hill_foot(xs).index);
}

/// Plan deleting exactly the witnessed foot.
inline DelPlan delfoot(const FootWitness& w) {
  std::vector<PlanAction> actions(w.target_length(), PlanAction::keep);
  actions[w.index()] = PlanAction::del;
  return DelPlan(std::move(actions));
}

/// Given a plan deleting 1+k of m+1 positions, some plan deleting k of m.
/// Which one is irrelevant to the argument; this deletes the first k.
inline DelPlan delete_any(const DelPlan& plan) {
  if (plan.base_length() == 0 || plan.deletions() == 0) {
    throw PreconditionError("delete_any needs a plan with at least one deletion");
  }
  const std::size_t m = plan.base_length() - 1;
  const std::size_t k = plan.deletions() - 1;
  if (k > m) throw PreconditionError("cannot delete more positions than present");
  std::vector<PlanAction> actions(m, PlanAction::keep);
  std::fill_n(actions.begin(), k, PlanAction::del);
  return DelPlan(std::move(actions));
}

/// Rewrites an adversary plan so that it deletes the foot and its result
/// weakly dominates the adversary's. Walks the plan position by position:
///
///   keep, before foot        -> keep, continue
///   keep, at foot (x < y)    -> del, keep, then any k deletions of the rest
///   del,  at last position   -> del
///   del,  at foot (x < y)    -> unchanged
///   del,  before foot, k = 0 -> keep, then delete only the foot
///   del,  before foot, k > 0 -> del, continue
inline DelPlan alter(const DelPlan& plan, const FootWitness& witness) {
  if (plan.base_length() != witness.target_length()) {
    throw PreconditionError("plan and witness target different lengths");
  }
  if (plan.deletions() == 0) throw PreconditionError("alter needs at least one deletion");
  if (witness.index() >= witness.target_length()) {
    throw PreconditionError("witness index beyond sequence");
  }

  const auto& in = plan.actions();
  const std::size_t n = in.size();
  std::vector<PlanAction> out;
  out.reserve(n);
  std::size_t budget = plan.deletions();  // 1 + k for the current suffix
  FootWitness ft = witness;

  for (std::size_t j = 0;; ++j) {
    const bool at_foot = ft.index() == 0;
    if (!at_foot) {
      if (in[j] == PlanAction::keep) {
        out.push_back(PlanAction::keep);
        ft = ft.tail();
        continue;
      }
      if (budget == 1) {
        out.push_back(PlanAction::keep);
        auto rest = delfoot(ft.tail()).actions();
        out.insert(out.end(), rest.begin(), rest.end());
        break;
      }
      out.push_back(PlanAction::del);
      --budget;
      ft = ft.tail();
      continue;
    }

    if (j + 1 == n) {
      // singleton suffix with budget >= 1: the adversary must delete it
      if (in[j] != PlanAction::del) throw PreconditionError("plan deletes too few positions");
      out.push_back(PlanAction::del);
      break;
    }
    if (in[j] == PlanAction::keep) {
      out.push_back(PlanAction::del);
      out.push_back(PlanAction::keep);
      const DelPlan tail(std::vector<PlanAction>(in.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                                                 in.end()));
      const auto rest = delete_any(tail).actions();
      out.insert(out.end(), rest.begin(), rest.end());
    } else {
      out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(j), in.end());
    }
    break;
  }
  return DelPlan(std::move(out));
}

template <Token T>
struct GameOutcome {
  Seq<T> adversary_result;
  Seq<T> our_result;
  bool mono_ok = false;
  bool unfoot_ok = false;
};

template <Token T>
GameOutcome<T> play(const Seq<T>& xs, const DelPlan& plan, const FootWitness& witness) {
  if (witness.target_length() != xs.size()) {
    throw PreconditionError("witness does not target this sequence");
  }
  const DelPlan ours = alter(plan, witness);
  GameOutcome<T> g;
  g.adversary_result = apply_plan(xs, plan);
  g.our_result = apply_plan(xs, ours);
  g.mono_ok = lex_le(g.adversary_result, g.our_result);
  g.unfoot_ok = is_del(witness.index(), ours);
  return g;
}

/// The altered plan's result is no worse than the adversary's.
template <Token T>
bool check_mono(const Seq<T>& xs, const DelPlan& plan, const FootWitness& witness) {
  return play(xs, plan, witness).mono_ok;
}

/// The altered plan deletes the foot.
template <Token T>
bool check_unfoot(const Seq<T>& xs, const DelPlan& plan, const FootWitness& witness) {
  return play(xs, plan, witness).unfoot_ok;
}

/// For x >= head(tail): tail ⊴ x : (tail without its foot).
template <Token T>
bool check_mono_aux(const T& x, const Seq<T>& tail, const FootWitness& witness) {
  if (tail.empty()) throw PreconditionError("monoAux needs a nonempty tail");
  if (x < tail.front()) throw PreconditionError("monoAux needs x >= head of tail");
  Seq<T> rhs{x};
  const auto rest = apply_plan(tail, delfoot(witness));
  rhs.insert(rhs.end(), rest.begin(), rest.end());
  return lex_le(tail, rhs);
}

/// All C(n, k) plans deleting k of n positions, keep-before-del order.
inline std::vector<DelPlan> enumerate_plans(std::size_t k, std::size_t n) {
  if (k > n) throw PreconditionError("cannot delete more positions than present");
  std::vector<PlanAction> actions(n, PlanAction::keep);
  std::fill_n(actions.end() - static_cast<std::ptrdiff_t>(k), k, PlanAction::del);
  std::vector<DelPlan> out;
  do {
    out.emplace_back(actions);
  } while (std::next_permutation(actions.begin(), actions.end()));
  return out;
}

}  // namespace dropk
