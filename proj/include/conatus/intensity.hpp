#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conatus/tendency.hpp"

namespace conatus {

enum class Verdict { Stronger, Weaker, Equal, Incomparable };

/// Outcome of one intensity comparison. Witnesses are present for
/// Stronger/Weaker/Incomparable and are the minimal separating circumstance
/// over the union of both condition vocabularies:
///   Stronger     - satisfies the left condition, falsifies the right;
///   Weaker       - satisfies the right condition, falsifies the left;
///   Incomparable - satisfies the left condition, falsifies the right
///                  (swap the arguments to exhibit the other direction).
struct IntensityRelation {
  Verdict verdict;
  std::optional<Circumstance> witness;
};

/// The strict intensity order: e1 is stronger than e2 when every
/// circumstance firing e2 also fires e1 and not vice versa, i.e. e1's
/// condition is the easier one to meet. Qualities are ignored; tendencies
/// of different quality compare on their conditions alone.
IntensityRelation compare(const ActionTendency& e1, const ActionTendency& e2,
                          const EnumOptions& opts = {});

/// Fixed text form: "a > b (witness: ...)", "a < b (witness: ...)",
/// "a = b", "a || b (witness: ...)".
std::string render(const IntensityRelation& rel, const std::string& left,
                   const std::string& right);

/// The action produced by executing a firing tendency, or nothing when the
/// condition does not hold.
std::optional<ActionName> satisfy(const ActionTendency& t, const Circumstance& c);

/// Law check over a tendency set. The inclusion semantics makes the strict
/// order laws theorems, so any recorded violation signals an implementation
/// bug rather than a property of the input.
struct OrderReport {
  struct IrreflexiveViolation {
    std::string id;
    std::string detail;
  };
  struct AntisymmetryViolation {
    std::string first;
    std::string second;
    std::string detail;
  };
  struct TransitivityViolation {
    std::array<std::string, 3> ids;
    std::string detail;
  };

  std::size_t pairs_checked = 0;
  std::vector<IrreflexiveViolation> irreflexive_violations;
  std::vector<AntisymmetryViolation> antisymmetry_violations;
  std::vector<TransitivityViolation> transitivity_violations;

  bool clean() const {
    return irreflexive_violations.empty() && antisymmetry_violations.empty() &&
           transitivity_violations.empty();
  }
  std::string to_string() const;
};

/// Checks irreflexivity (compare(e,e) must not be Stronger), antisymmetry
/// (no ordered pair is Stronger both ways) and transitivity of Stronger
/// over all pairs and triples drawn from ts.
OrderReport verify_order_laws(std::span<const ActionTendency> ts,
                              const EnumOptions& opts = {});

}  // namespace conatus
