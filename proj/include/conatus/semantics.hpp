#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conatus/circumstance.hpp"
#include "conatus/formula.hpp"

namespace conatus {

/// Default bound on |atoms| for any enumeration-based query.
inline constexpr std::size_t kDefaultAtomCap = 20;

/// Which enumeration kernel runs underneath entails/equivalent/satisfiable.
///
/// Serial is the reference implementation: a plain loop over assignments.
/// Parallel is the OpenMP kernel; it splits the assignment range into blocks
/// and reduces to the minimal hit index, so both backends return identical
/// results (including witnesses) on every input. Auto picks Parallel only
/// when the row count is large enough to pay for the fork.
enum class EnumMode { Auto, Serial, Parallel };

struct EnumOptions {
  std::size_t cap = kDefaultAtomCap;
  EnumMode mode = EnumMode::Auto;
};

/// Classical truth-functional evaluation. Every atom of `f` must be present
/// in `c` (UnknownAtomError otherwise).
bool evaluate(const Formula& f, const Circumstance& c);

struct EntailmentResult {
  bool holds;
  /// When !holds: the minimal circumstance (in lexicographic atom order,
  /// false before true) satisfying f1 but not f2.
  std::optional<Circumstance> counterexample;
};

/// True iff every circumstance over atoms(f1) union atoms(f2) that satisfies
/// f1 also satisfies f2. Atoms present in only one formula range freely.
/// Decided by exhaustive enumeration; throws CapExceededError when the
/// combined atom count exceeds opts.cap.
EntailmentResult entails_witness(const Formula& f1, const Formula& f2,
                                 const EnumOptions& opts = {});
bool entails(const Formula& f1, const Formula& f2, const EnumOptions& opts = {});

/// Both entailment directions from one scan over the shared universe.
/// Row-for-row identical to two entails_witness calls, at half the cost;
/// this is what the pairwise comparison sweeps sit on.
struct MutualEntailment {
  EntailmentResult forward;   // f1 entails f2
  EntailmentResult backward;  // f2 entails f1
};
MutualEntailment mutual_entailment(const Formula& f1, const Formula& f2,
                                   const EnumOptions& opts = {});

/// entails in both directions.
bool equivalent(const Formula& f1, const Formula& f2, const EnumOptions& opts = {});

/// True iff some circumstance over atoms(f) satisfies f.
bool satisfiable(const Formula& f, const EnumOptions& opts = {});

/// Minimal satisfying circumstance of f, if any.
std::optional<Circumstance> find_model(const Formula& f, const EnumOptions& opts = {});

}  // namespace conatus
