#ifndef PTM_MV_LOGIC_HPP
#define PTM_MV_LOGIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ptm/channel.hpp"
#include "ptm/types.hpp"

namespace ptm::mv {

/// Truth table of a k-argument gate over {0,1,2,3}. Row index is the
/// big-endian base-4 composition of the arguments.
class ClassicalGate {
 public:
  ClassicalGate(int arity, std::vector<int> table);
  int arity() const { return arity_; }
  const std::vector<int>& table() const { return table_; }
  int eval(const std::vector<int>& args) const;

  static ClassicalGate identity();          // x
  static ClassicalGate lukasiewicz_not();   // ~x = 3 - x
  static ClassicalGate cyclic_shift();      // x + 1 mod 4
  static ClassicalGate indicator(int k);    // I_k
  static ClassicalGate constant(int v, int arity = 1);
  static ClassicalGate possibility();       // diamond
  static ClassicalGate necessity();         // box
  static ClassicalGate min_gate();          // x1 ^ x2
  static ClassicalGate max_gate();          // x1 v x2
  static ClassicalGate sheffer_webb();      // V4 = max + 1 mod 4

 private:
  int arity_;
  std::vector<int> table_;
};

/// Expression tree over the elementary 4-valued connectives.
class LogicExpr {
 public:
  enum class Op {
    Var,
    Const,
    Not,
    Shift,
    Indicator,
    Possibility,
    Necessity,
    Min,
    Max,
    Sheffer
  };

  static LogicExpr var(int index);
  static LogicExpr constant(int value);
  static LogicExpr lukasiewicz_not(LogicExpr e);
  static LogicExpr shift(LogicExpr e);
  static LogicExpr indicator(int k, LogicExpr e);
  static LogicExpr possibility(LogicExpr e);
  static LogicExpr necessity(LogicExpr e);
  static LogicExpr min(LogicExpr a, LogicExpr b);
  static LogicExpr max(LogicExpr a, LogicExpr b);
  static LogicExpr sheffer(LogicExpr a, LogicExpr b);

  int eval(const std::vector<int>& args) const;
  int arity() const;  // 1 + largest variable index, at least 1
  std::string str() const;
  Op op() const { return op_; }

 private:
  LogicExpr() = default;
  static LogicExpr make(Op op, int value, std::vector<LogicExpr> children);
  Op op_ = Op::Const;
  int value_ = 0;  // variable index, constant value, or indicator level
  std::vector<LogicExpr> children_;
};

int eval(const ClassicalGate& g, const std::vector<int>& args);
int eval(const LogicExpr& e, const std::vector<int>& args);

struct LawResult {
  std::string name;
  bool holds;
  std::string counterexample;  // empty when the law holds
};

struct LawReport {
  std::vector<LawResult> results;
  const LawResult& find(const std::string& name) const;
};

/// Exhaustively checks the algebraic laws of min/max/~ and the two negative
/// claims for the cyclic shift (which fail, with witnesses).
LawReport check_laws();

/// Disjunctive normal form: max over all input tuples of
/// I_{k1}(x1) ^ ... ^ I_{kn}(xn) ^ g(k1..kn). Evaluates identically to g.
LogicExpr dnf_synthesize(const ClassicalGate& g);

struct UniversalTargetResult {
  std::string name;
  bool reached;
  int depth;  // rounds needed, -1 when not reached
};

struct UniversalSetReport {
  std::string set_name;
  bool all_unary_reached;
  int unary_reached_count;  // out of 256
  std::vector<UniversalTargetResult> targets;
  bool budget_exhausted;  // some goal unreached within budget; not a disproof
  bool search_capped;     // a search hit the depth or size cap
  int rounds_used;
  std::size_t functions_generated;
  const UniversalTargetResult& find(const std::string& name) const;
};

struct UniversalityBudget {
  int max_depth = 6;
  std::size_t max_functions = 100000;
};

/// Bounded-depth composition closure for one generating set.
/// `set_name` is one of "full", "shift-or", "sheffer-webb", "min-max".
UniversalSetReport verify_universal_set(const std::string& set_name,
                                        const UniversalityBudget& budget = {});

/// Runs the three classically known universal sets.
std::vector<UniversalSetReport> verify_universal_sets(
    const UniversalityBudget& budget = {});

/// Transfer gate realizing an arbitrary map mu -> target(mu) on the
/// generalized computational states of n ququats: E|mu] = |target(mu)].
TransferGate computational_map_gate(QubitCount n,
                                    const std::vector<int>& target);

/// Quantum realization of a single-argument classical gate.
TransferGate classical_to_quantum(const ClassicalGate& g);

/// Two-ququat gate |x1,x2] -> |x1 v x2, x1 ^ x2].
TransferGate minmax_gate();

/// Two-ququat gate |x1,x2] -> |V4(x1,x2), ~V4(x1,x2)].
TransferGate sheffer_webb_gate();

}  // namespace ptm::mv

#endif  // PTM_MV_LOGIC_HPP
