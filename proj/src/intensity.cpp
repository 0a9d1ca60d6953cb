#include "conatus/intensity.hpp"

#include <cstdint>
#include <utility>

namespace conatus {

IntensityRelation compare(const ActionTendency& e1, const ActionTendency& e2,
                          const EnumOptions& opts) {
  // e1 > e2 iff sat(e2.condition) is a strict subset of sat(e1.condition),
  // i.e. the right condition entails the left and not conversely.
  MutualEntailment both = mutual_entailment(e1.condition, e2.condition, opts);
  EntailmentResult& left_in_right = both.forward;
  EntailmentResult& right_in_left = both.backward;
  if (left_in_right.holds && right_in_left.holds) {
    return {Verdict::Equal, std::nullopt};
  }
  if (right_in_left.holds) {
    return {Verdict::Stronger, std::move(left_in_right.counterexample)};
  }
  if (left_in_right.holds) {
    return {Verdict::Weaker, std::move(right_in_left.counterexample)};
  }
  return {Verdict::Incomparable, std::move(left_in_right.counterexample)};
}

std::string render(const IntensityRelation& rel, const std::string& left,
                   const std::string& right) {
  std::string op;
  switch (rel.verdict) {
    case Verdict::Stronger:
      op = " > ";
      break;
    case Verdict::Weaker:
      op = " < ";
      break;
    case Verdict::Equal:
      op = " = ";
      break;
    case Verdict::Incomparable:
      op = " || ";
      break;
  }
  std::string out = left + op + right;
  if (rel.witness) out += " (witness: " + rel.witness->to_string() + ")";
  return out;
}

std::optional<ActionName> satisfy(const ActionTendency& t, const Circumstance& c) {
  if (fires(t, c)) return t.quality;
  return std::nullopt;
}

std::string OrderReport::to_string() const {
  std::string out = "pairs checked: " + std::to_string(pairs_checked) + "\n";
  out += "irreflexivity violations: " + std::to_string(irreflexive_violations.size()) + "\n";
  for (const auto& v : irreflexive_violations) out += "  " + v.id + ": " + v.detail + "\n";
  out += "antisymmetry violations: " + std::to_string(antisymmetry_violations.size()) + "\n";
  for (const auto& v : antisymmetry_violations) {
    out += "  (" + v.first + ", " + v.second + "): " + v.detail + "\n";
  }
  out += "transitivity violations: " + std::to_string(transitivity_violations.size()) + "\n";
  for (const auto& v : transitivity_violations) {
    out += "  (" + v.ids[0] + ", " + v.ids[1] + ", " + v.ids[2] + "): " + v.detail + "\n";
  }
  out += clean() ? "strict partial order: yes\n" : "strict partial order: NO\n";
  return out;
}

OrderReport verify_order_laws(std::span<const ActionTendency> ts, const EnumOptions& opts) {
  OrderReport report;
  const std::size_t n = ts.size();
  report.pairs_checked = n * n;
  if (n == 0) return report;

  // Full verdict matrix, diagonal included. Each cell is independent, so the
  // matrix fills in parallel; the law scan below is a cheap serial pass.
  std::vector<Verdict> verdicts(n * n, Verdict::Equal);
  std::vector<std::string> witnesses(n * n);
  const auto total = static_cast<std::int64_t>(n * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (total > 16)
#endif
  for (std::int64_t cell = 0; cell < total; ++cell) {
    const std::size_t i = static_cast<std::size_t>(cell) / n;
    const std::size_t j = static_cast<std::size_t>(cell) % n;
    const IntensityRelation rel = compare(ts[i], ts[j], opts);
    verdicts[cell] = rel.verdict;
    if (rel.witness) witnesses[cell] = rel.witness->to_string();
  }

  const auto at = [&](std::size_t i, std::size_t j) { return verdicts[i * n + j]; };
  const auto wit = [&](std::size_t i, std::size_t j) { return witnesses[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) == Verdict::Stronger) {
      report.irreflexive_violations.push_back(
          {ts[i].id, "compare(e,e) = Stronger, witness " + wit(i, i)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (at(i, j) == Verdict::Stronger && at(j, i) == Verdict::Stronger) {
        report.antisymmetry_violations.push_back(
            {ts[i].id, ts[j].id, "Stronger in both directions"});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) != Verdict::Stronger) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (at(j, k) == Verdict::Stronger && at(i, k) != Verdict::Stronger) {
          report.transitivity_violations.push_back(
              {{ts[i].id, ts[j].id, ts[k].id},
               "chain Stronger/Stronger but compare(first, third) differs"});
        }
      }
    }
  }
  return report;
}

}  // namespace conatus
