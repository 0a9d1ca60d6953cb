#include "conatus/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "conatus/errors.hpp"

namespace conatus {

namespace {

// Flat postfix program for evaluating one formula against a packed
// assignment. Compiled once per query, evaluated once per row.
struct Compiled {
  enum Op : std::uint8_t { PushTrue, PushFalse, PushAtom, NotOp, AndOp, OrOp, ImpOp };
  struct Instr {
    Op op;
    std::uint32_t bit;  // PushAtom only
  };
  std::vector<Instr> code;
  std::size_t stack_size = 0;

  bool eval(std::uint64_t row, std::vector<std::uint8_t>& stack) const {
    std::size_t top = 0;
    for (const Instr& ins : code) {
      switch (ins.op) {
        case PushTrue:
          stack[top++] = 1;
          break;
        case PushFalse:
          stack[top++] = 0;
          break;
        case PushAtom:
          stack[top++] = static_cast<std::uint8_t>((row >> ins.bit) & 1u);
          break;
        case NotOp:
          stack[top - 1] ^= 1u;
          break;
        case AndOp:
          --top;
          stack[top - 1] &= stack[top];
          break;
        case OrOp:
          --top;
          stack[top - 1] |= stack[top];
          break;
        case ImpOp:
          --top;
          stack[top - 1] = static_cast<std::uint8_t>((stack[top - 1] ^ 1u) | stack[top]);
          break;
      }
    }
    return stack[0] != 0;
  }
};

// Assignment layout: atoms sorted lexicographically; the first atom occupies
// the most significant bit. Row indices therefore enumerate assignments in
// lexicographic order with false before true, and "minimal row" is a stable,
// documented witness choice.
struct Universe {
  std::vector<std::string> atoms;  // sorted

  explicit Universe(const std::set<std::string>& names)
      : atoms(names.begin(), names.end()) {}

  std::uint32_t bit_of(const std::string& name) const {
    const auto it = std::lower_bound(atoms.begin(), atoms.end(), name);
    return static_cast<std::uint32_t>(atoms.size() - 1 -
                                      static_cast<std::size_t>(it - atoms.begin()));
  }

  std::uint64_t rows() const { return std::uint64_t{1} << atoms.size(); }

  Circumstance circumstance(std::uint64_t row) const {
    std::map<std::string, bool> values;
    const std::size_t n = atoms.size();
    for (std::size_t k = 0; k < n; ++k) {
      values.emplace(atoms[k], ((row >> (n - 1 - k)) & 1u) != 0);
    }
    return Circumstance(std::move(values));
  }
};

void compile_into(const Formula& f, const Universe& uni, Compiled& out, std::size_t depth) {
  out.stack_size = std::max(out.stack_size, depth + 1);
  switch (f.kind()) {
    case Formula::Kind::True:
      out.code.push_back({Compiled::PushTrue, 0});
      return;
    case Formula::Kind::False:
      out.code.push_back({Compiled::PushFalse, 0});
      return;
    case Formula::Kind::Atom:
      out.code.push_back({Compiled::PushAtom, uni.bit_of(f.atom_name())});
      return;
    case Formula::Kind::Not:
      compile_into(f.child(), uni, out, depth);
      out.code.push_back({Compiled::NotOp, 0});
      return;
    case Formula::Kind::And:
      compile_into(f.lhs(), uni, out, depth);
      compile_into(f.rhs(), uni, out, depth + 1);
      out.code.push_back({Compiled::AndOp, 0});
      return;
    case Formula::Kind::Or:
      compile_into(f.lhs(), uni, out, depth);
      compile_into(f.rhs(), uni, out, depth + 1);
      out.code.push_back({Compiled::OrOp, 0});
      return;
    case Formula::Kind::Implies:
      compile_into(f.lhs(), uni, out, depth);
      compile_into(f.rhs(), uni, out, depth + 1);
      out.code.push_back({Compiled::ImpOp, 0});
      return;
  }
}

Compiled compile(const Formula& f, const Universe& uni) {
  Compiled out;
  compile_into(f, uni, out, 0);
  return out;
}

void check_cap(std::size_t atom_count, const EnumOptions& opts) {
  if (atom_count > opts.cap) throw CapExceededError(atom_count, opts.cap);
}

constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 14;
constexpr std::int64_t kBlock = std::int64_t{1} << 16;

bool use_parallel(std::int64_t rows, const EnumOptions& opts) {
#ifdef _OPENMP
  switch (opts.mode) {
    case EnumMode::Serial:
      return false;
    case EnumMode::Parallel:
      return true;
    case EnumMode::Auto:
      return rows >= kParallelThreshold && omp_get_max_threads() > 1;
  }
  return false;
#else
  (void)rows;
  (void)opts;
  return false;
#endif
}

// Minimal row index in [0, rows) where pred holds, or rows if none.
// The serial path is the reference; the parallel path scans fixed-size
// blocks and min-reduces inside each block, which preserves the result
// bit for bit while still allowing an early exit between blocks.
template <typename Pred>
std::int64_t find_first_serial(std::int64_t rows, const Pred& pred) {
  for (std::int64_t row = 0; row < rows; ++row) {
    if (pred(row)) return row;
  }
  return rows;
}

#ifdef _OPENMP
template <typename Pred>
std::int64_t find_first_parallel(std::int64_t rows, const Pred& pred) {
  for (std::int64_t lo = 0; lo < rows; lo += kBlock) {
    const std::int64_t hi = std::min(rows, lo + kBlock);
    std::int64_t best = rows;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (std::int64_t row = lo; row < hi; ++row) {
      if (row < best && pred(row)) best = row;
    }
    if (best < rows) return best;
  }
  return rows;
}
#endif

}  // namespace

bool evaluate(const Formula& f, const Circumstance& c) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      return c.value(f.atom_name());
    case Formula::Kind::Not:
      return !evaluate(f.child(), c);
    case Formula::Kind::And:
      return evaluate(f.lhs(), c) && evaluate(f.rhs(), c);
    case Formula::Kind::Or:
      return evaluate(f.lhs(), c) || evaluate(f.rhs(), c);
    case Formula::Kind::Implies:
      return !evaluate(f.lhs(), c) || evaluate(f.rhs(), c);
  }
  return false;  // unreachable
}

EntailmentResult entails_witness(const Formula& f1, const Formula& f2,
                                 const EnumOptions& opts) {
  std::set<std::string> names = f1.atoms();
  const auto rhs_atoms = f2.atoms();
  names.insert(rhs_atoms.begin(), rhs_atoms.end());
  check_cap(names.size(), opts);

  const Universe uni(names);
  const Compiled lhs = compile(f1, uni);
  const Compiled rhs = compile(f2, uni);
  const auto rows = static_cast<std::int64_t>(uni.rows());

  const std::int64_t hit = [&] {
#ifdef _OPENMP
    if (use_parallel(rows, opts)) {
      return find_first_parallel(rows, [&](std::int64_t row) {
        thread_local std::vector<std::uint8_t> stack;
        if (stack.size() < lhs.stack_size + rhs.stack_size) {
          stack.resize(lhs.stack_size + rhs.stack_size);
        }
        const auto r = static_cast<std::uint64_t>(row);
        return lhs.eval(r, stack) && !rhs.eval(r, stack);
      });
    }
#endif
    std::vector<std::uint8_t> stack(std::max(lhs.stack_size, rhs.stack_size));
    return find_first_serial(rows, [&](std::int64_t row) {
      const auto r = static_cast<std::uint64_t>(row);
      return lhs.eval(r, stack) && !rhs.eval(r, stack);
    });
  }();

  if (hit == rows) return {true, std::nullopt};
  return {false, uni.circumstance(static_cast<std::uint64_t>(hit))};
}

bool entails(const Formula& f1, const Formula& f2, const EnumOptions& opts) {
  return entails_witness(f1, f2, opts).holds;
}

MutualEntailment mutual_entailment(const Formula& f1, const Formula& f2,
                                   const EnumOptions& opts) {
  std::set<std::string> names = f1.atoms();
  const auto rhs_atoms = f2.atoms();
  names.insert(rhs_atoms.begin(), rhs_atoms.end());
  check_cap(names.size(), opts);

  const Universe uni(names);
  const Compiled lhs = compile(f1, uni);
  const Compiled rhs = compile(f2, uni);
  const auto rows = static_cast<std::int64_t>(uni.rows());

  // Minimal row violating each direction, found in a single pass.
  std::int64_t fwd_hit = rows;
  std::int64_t bwd_hit = rows;

#ifdef _OPENMP
  if (use_parallel(rows, opts)) {
    for (std::int64_t lo = 0; lo < rows && (fwd_hit == rows || bwd_hit == rows);
         lo += kBlock) {
      const std::int64_t hi = std::min(rows, lo + kBlock);
      std::int64_t fwd_best = rows;
      std::int64_t bwd_best = rows;
#pragma omp parallel for reduction(min : fwd_best, bwd_best) schedule(static)
      for (std::int64_t row = lo; row < hi; ++row) {
        thread_local std::vector<std::uint8_t> stack;
        if (stack.size() < lhs.stack_size + rhs.stack_size) {
          stack.resize(lhs.stack_size + rhs.stack_size);
        }
        const auto r = static_cast<std::uint64_t>(row);
        const bool v1 = lhs.eval(r, stack);
        const bool v2 = rhs.eval(r, stack);
        if (v1 && !v2 && row < fwd_best) fwd_best = row;
        if (v2 && !v1 && row < bwd_best) bwd_best = row;
      }
      if (fwd_hit == rows) fwd_hit = fwd_best;
      if (bwd_hit == rows) bwd_hit = bwd_best;
    }
  } else
#endif
  {
    std::vector<std::uint8_t> stack(std::max(lhs.stack_size, rhs.stack_size));
    for (std::int64_t row = 0; row < rows; ++row) {
      const auto r = static_cast<std::uint64_t>(row);
      const bool v1 = lhs.eval(r, stack);
      const bool v2 = rhs.eval(r, stack);
      if (v1 != v2) {
        if (v1 && fwd_hit == rows) fwd_hit = row;
        if (v2 && bwd_hit == rows) bwd_hit = row;
        if (fwd_hit != rows && bwd_hit != rows) break;
      }
    }
  }

  MutualEntailment out;
  out.forward.holds = fwd_hit == rows;
  out.backward.holds = bwd_hit == rows;
  if (!out.forward.holds) {
    out.forward.counterexample = uni.circumstance(static_cast<std::uint64_t>(fwd_hit));
  }
  if (!out.backward.holds) {
    out.backward.counterexample = uni.circumstance(static_cast<std::uint64_t>(bwd_hit));
  }
  return out;
}

bool equivalent(const Formula& f1, const Formula& f2, const EnumOptions& opts) {
  const MutualEntailment both = mutual_entailment(f1, f2, opts);
  return both.forward.holds && both.backward.holds;
}

std::optional<Circumstance> find_model(const Formula& f, const EnumOptions& opts) {
  check_cap(f.atoms().size(), opts);
  const Universe uni(f.atoms());
  const Compiled prog = compile(f, uni);
  const auto rows = static_cast<std::int64_t>(uni.rows());

  const std::int64_t hit = [&] {
#ifdef _OPENMP
    if (use_parallel(rows, opts)) {
      return find_first_parallel(rows, [&](std::int64_t row) {
        thread_local std::vector<std::uint8_t> stack;
        if (stack.size() < prog.stack_size) stack.resize(prog.stack_size);
        return prog.eval(static_cast<std::uint64_t>(row), stack);
      });
    }
#endif
    std::vector<std::uint8_t> stack(prog.stack_size);
    return find_first_serial(rows, [&](std::int64_t row) {
      return prog.eval(static_cast<std::uint64_t>(row), stack);
    });
  }();

  if (hit == rows) return std::nullopt;
  return uni.circumstance(static_cast<std::uint64_t>(hit));
}

bool satisfiable(const Formula& f, const EnumOptions& opts) {
  return find_model(f, opts).has_value();
}

}  // namespace conatus
