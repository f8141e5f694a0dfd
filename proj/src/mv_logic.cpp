#include "ptm/mv_logic.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace ptm::mv {

namespace {

int pow4(int k) { return 1 << (2 * k); }

void check_value(int v) {
  if (v < 0 || v > 3) throw std::out_of_range("logic value out of range");
}

}  // namespace

ClassicalGate::ClassicalGate(int arity, std::vector<int> table)
    : arity_(arity), table_(std::move(table)) {
  if (arity_ < 1) throw std::invalid_argument("ClassicalGate: arity >= 1");
  if (int(table_.size()) != pow4(arity_))
    throw std::invalid_argument("ClassicalGate: table length must be 4^k");
  for (int v : table_) check_value(v);
}

int ClassicalGate::eval(const std::vector<int>& args) const {
  if (int(args.size()) != arity_)
    throw std::invalid_argument("ClassicalGate: arity mismatch");
  int idx = 0;
  for (int a : args) {
    check_value(a);
    idx = 4 * idx + a;
  }
  return table_[idx];
}

ClassicalGate ClassicalGate::identity() { return {1, {0, 1, 2, 3}}; }

ClassicalGate ClassicalGate::lukasiewicz_not() { return {1, {3, 2, 1, 0}}; }

ClassicalGate ClassicalGate::cyclic_shift() { return {1, {1, 2, 3, 0}}; }

ClassicalGate ClassicalGate::indicator(int k) {
  check_value(k);
  std::vector<int> t(4, 0);
  t[k] = 3;
  return {1, std::move(t)};
}

ClassicalGate ClassicalGate::constant(int v, int arity) {
  check_value(v);
  return {arity, std::vector<int>(pow4(arity), v)};
}

ClassicalGate ClassicalGate::possibility() { return {1, {0, 3, 3, 3}}; }

ClassicalGate ClassicalGate::necessity() { return {1, {0, 0, 0, 3}}; }

ClassicalGate ClassicalGate::min_gate() {
  std::vector<int> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[4 * a + b] = std::min(a, b);
  return {2, std::move(t)};
}

ClassicalGate ClassicalGate::max_gate() {
  std::vector<int> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[4 * a + b] = std::max(a, b);
  return {2, std::move(t)};
}

ClassicalGate ClassicalGate::sheffer_webb() {
  std::vector<int> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[4 * a + b] = (std::max(a, b) + 1) % 4;
  return {2, std::move(t)};
}

LogicExpr LogicExpr::var(int index) {
  if (index < 0) throw std::out_of_range("LogicExpr: variable index");
  LogicExpr e;
  e.op_ = Op::Var;
  e.value_ = index;
  return e;
}

LogicExpr LogicExpr::constant(int value) {
  check_value(value);
  LogicExpr e;
  e.op_ = Op::Const;
  e.value_ = value;
  return e;
}

LogicExpr LogicExpr::make(Op op, int value, std::vector<LogicExpr> children) {
  LogicExpr e;
  e.op_ = op;
  e.value_ = value;
  e.children_ = std::move(children);
  return e;
}

LogicExpr LogicExpr::lukasiewicz_not(LogicExpr e) {
  return make(Op::Not, 0, {std::move(e)});
}
LogicExpr LogicExpr::shift(LogicExpr e) {
  return make(Op::Shift, 0, {std::move(e)});
}
LogicExpr LogicExpr::indicator(int k, LogicExpr e) {
  check_value(k);
  return make(Op::Indicator, k, {std::move(e)});
}
LogicExpr LogicExpr::possibility(LogicExpr e) {
  return make(Op::Possibility, 0, {std::move(e)});
}
LogicExpr LogicExpr::necessity(LogicExpr e) {
  return make(Op::Necessity, 0, {std::move(e)});
}
LogicExpr LogicExpr::min(LogicExpr a, LogicExpr b) {
  return make(Op::Min, 0, {std::move(a), std::move(b)});
}
LogicExpr LogicExpr::max(LogicExpr a, LogicExpr b) {
  return make(Op::Max, 0, {std::move(a), std::move(b)});
}
LogicExpr LogicExpr::sheffer(LogicExpr a, LogicExpr b) {
  return make(Op::Sheffer, 0, {std::move(a), std::move(b)});
}

int LogicExpr::eval(const std::vector<int>& args) const {
  switch (op_) {
    case Op::Var:
      if (value_ >= int(args.size()))
        throw std::invalid_argument("LogicExpr: missing argument");
      check_value(args[value_]);
      return args[value_];
    case Op::Const:
      return value_;
    case Op::Not:
      return 3 - children_[0].eval(args);
    case Op::Shift:
      return (children_[0].eval(args) + 1) % 4;
    case Op::Indicator:
      return children_[0].eval(args) == value_ ? 3 : 0;
    case Op::Possibility:
      return children_[0].eval(args) == 0 ? 0 : 3;
    case Op::Necessity:
      return children_[0].eval(args) == 3 ? 3 : 0;
    case Op::Min:
      return std::min(children_[0].eval(args), children_[1].eval(args));
    case Op::Max:
      return std::max(children_[0].eval(args), children_[1].eval(args));
    case Op::Sheffer:
      return (std::max(children_[0].eval(args), children_[1].eval(args)) + 1) %
             4;
  }
  throw std::logic_error("LogicExpr: bad op");
}

int LogicExpr::arity() const {
  int max_var = -1;
  if (op_ == Op::Var) max_var = value_;
  for (const auto& c : children_) max_var = std::max(max_var, c.arity() - 1);
  return max_var + 1 < 1 ? 1 : max_var + 1;
}

std::string LogicExpr::str() const {
  switch (op_) {
    case Op::Var:
      return "x" + std::to_string(value_ + 1);
    case Op::Const:
      return std::to_string(value_);
    case Op::Not:
      return "~" + children_[0].str();
    case Op::Shift:
      return "shift(" + children_[0].str() + ")";
    case Op::Indicator:
      return "I" + std::to_string(value_) + "(" + children_[0].str() + ")";
    case Op::Possibility:
      return "diamond(" + children_[0].str() + ")";
    case Op::Necessity:
      return "box(" + children_[0].str() + ")";
    case Op::Min:
      return "(" + children_[0].str() + " ^ " + children_[1].str() + ")";
    case Op::Max:
      return "(" + children_[0].str() + " v " + children_[1].str() + ")";
    case Op::Sheffer:
      return "V4(" + children_[0].str() + ", " + children_[1].str() + ")";
  }
  return "?";
}

int eval(const ClassicalGate& g, const std::vector<int>& args) {
  return g.eval(args);
}
int eval(const LogicExpr& e, const std::vector<int>& args) {
  return e.eval(args);
}

const LawResult& LawReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return r;
  throw std::out_of_range("LawReport: no law named " + name);
}

const UniversalTargetResult& UniversalSetReport::find(
    const std::string& name) const {
  for (const auto& t : targets)
    if (t.name == name) return t;
  throw std::out_of_range("UniversalSetReport: no target named " + name);
}

namespace {

std::string tuple_str(const std::vector<int>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

LawResult check_law(const std::string& name, int arity,
                    const std::function<bool(const std::vector<int>&)>& holds) {
  std::vector<int> xs(arity, 0);
  const int total = pow4(arity);
  for (int idx = 0; idx < total; ++idx) {
    int v = idx;
    for (int i = arity - 1; i >= 0; --i) {
      xs[i] = v & 3;
      v >>= 2;
    }
    if (!holds(xs)) return {name, false, tuple_str(xs)};
  }
  return {name, true, ""};
}

}  // namespace

LawReport check_laws() {
  auto mn = [](int a, int b) { return std::min(a, b); };
  auto mx = [](int a, int b) { return std::max(a, b); };
  auto neg = [](int a) { return 3 - a; };
  auto shift = [](int a) { return (a + 1) % 4; };
  LawReport report;
  auto add = [&](LawResult r) { report.results.push_back(std::move(r)); };

  add(check_law("commutativity-min", 2, [&](const std::vector<int>& x) {
    return mn(x[0], x[1]) == mn(x[1], x[0]);
  }));
  add(check_law("commutativity-max", 2, [&](const std::vector<int>& x) {
    return mx(x[0], x[1]) == mx(x[1], x[0]);
  }));
  add(check_law("associativity-min", 3, [&](const std::vector<int>& x) {
    return mn(mn(x[0], x[1]), x[2]) == mn(x[0], mn(x[1], x[2]));
  }));
  add(check_law("associativity-max", 3, [&](const std::vector<int>& x) {
    return mx(mx(x[0], x[1]), x[2]) == mx(x[0], mx(x[1], x[2]));
  }));
  add(check_law("distributivity-max-over-min", 3,
                [&](const std::vector<int>& x) {
                  return mx(x[0], mn(x[1], x[2])) ==
                         mn(mx(x[0], x[1]), mx(x[0], x[2]));
                }));
  add(check_law("distributivity-min-over-max", 3,
                [&](const std::vector<int>& x) {
                  return mn(x[0], mx(x[1], x[2])) ==
                         mx(mn(x[0], x[1]), mn(x[0], x[2]));
                }));
  add(check_law("double-negation", 1, [&](const std::vector<int>& x) {
    return neg(neg(x[0])) == x[0];
  }));
  add(check_law("de-morgan-negation", 2, [&](const std::vector<int>& x) {
    return neg(mn(x[0], x[1])) == mx(neg(x[0]), neg(x[1]));
  }));
  // The two claims that fail for the cyclic shift; recorded with witnesses.
  add(check_law("double-shift", 1, [&](const std::vector<int>& x) {
    return shift(shift(x[0])) == x[0];
  }));
  add(check_law("de-morgan-shift", 2, [&](const std::vector<int>& x) {
    return shift(mn(x[0], x[1])) == mx(shift(x[0]), shift(x[1]));
  }));
  return report;
}

LogicExpr dnf_synthesize(const ClassicalGate& g) {
  const int k = g.arity();
  const int total = pow4(k);
  LogicExpr result = LogicExpr::constant(0);
  bool first = true;
  for (int idx = 0; idx < total; ++idx) {
    std::vector<int> tuple(k);
    int v = idx;
    for (int i = k - 1; i >= 0; --i) {
      tuple[i] = v & 3;
      v >>= 2;
    }
    LogicExpr term = LogicExpr::constant(g.eval(tuple));
    for (int i = k - 1; i >= 0; --i)
      term = LogicExpr::min(LogicExpr::indicator(tuple[i], LogicExpr::var(i)),
                            std::move(term));
    result = first ? std::move(term)
                   : LogicExpr::max(std::move(result), std::move(term));
    first = false;
  }
  return result;
}

namespace {

// Functions of a fixed arity are packed two bits per table entry, so a
// unary table fits in 8 bits and a binary one in 32.
using PackedFn = std::uint32_t;

PackedFn pack(const std::vector<int>& table) {
  PackedFn f = 0;
  for (std::size_t i = 0; i < table.size(); ++i)
    f |= PackedFn(table[i]) << (2 * i);
  return f;
}

int packed_at(PackedFn f, int i) { return (f >> (2 * i)) & 3; }

struct SetDefinition {
  std::vector<std::vector<int>> unary_ops;   // truth tables
  std::vector<std::vector<int>> binary_ops;  // 16-entry tables
  std::vector<int> constants;
};

SetDefinition named_set(const std::string& name) {
  const auto min_t = ClassicalGate::min_gate().table();
  const auto max_t = ClassicalGate::max_gate().table();
  const auto v4_t = ClassicalGate::sheffer_webb().table();
  if (name == "full") {
    SetDefinition def;
    def.constants = {0, 1, 2, 3};
    for (int k = 0; k < 4; ++k)
      def.unary_ops.push_back(ClassicalGate::indicator(k).table());
    def.binary_ops = {min_t, max_t};
    return def;
  }
  if (name == "shift-or")
    return {{ClassicalGate::cyclic_shift().table()}, {max_t}, {}};
  if (name == "sheffer-webb") return {{}, {v4_t}, {}};
  if (name == "min-max") return {{}, {min_t, max_t}, {}};
  throw std::invalid_argument("unknown universal set: " + name);
}

// Closure of the generating set inside the space of arity-`k` functions,
// starting from the projections and any constants in the set. A round
// applies the set's connectives across the reached functions and also
// composes reached unary functions onto reached functions at the root
// (compositions of compositions are still compositions over the set).
// Pairs first reached in the same round combine one round later.
struct ClosureSpace {
  int entries;  // 4^k table entries
  std::unordered_map<PackedFn, int> depth;  // function -> round reached
  std::vector<PackedFn> frontier;
  bool capped = false;  // hit the size or depth budget before saturating
  int rounds = 0;

  void seed(PackedFn f) {
    if (depth.emplace(f, 0).second) frontier.push_back(f);
  }

  // `unary_pool` holds 4-entry tables already derived from the set, used as
  // outer compositions. Each newly reached function immediately spawns its
  // pool composites (one layer; the pool is composition-closed, so chains
  // of pool steps add nothing).
  void close(const SetDefinition& def, const UniversalityBudget& budget,
             const std::vector<PackedFn>* unary_pool = nullptr) {
    std::vector<PackedFn> all(frontier);
    std::vector<PackedFn> next;

    // Pool composites of the seeds themselves (e.g. u(x1) for every derived
    // unary u) count as depth 0.
    if (unary_pool) {
      const std::vector<PackedFn> seeds = frontier;
      for (PackedFn f : seeds)
        for (PackedFn u : *unary_pool) {
          PackedFn g = 0;
          for (int i = 0; i < entries; ++i)
            g |= PackedFn(packed_at(u, packed_at(f, i))) << (2 * i);
          if (depth.size() >= budget.max_functions) {
            capped = true;
            break;
          }
          if (depth.emplace(g, 0).second) {
            frontier.push_back(g);
            all.push_back(g);
          }
        }
    }

    auto emit = [&](PackedFn f, bool from_pool) {
      if (capped) return;
      if (depth.size() >= budget.max_functions) {
        capped = true;
        return;
      }
      if (!depth.emplace(f, rounds).second) return;
      next.push_back(f);
      if (from_pool || !unary_pool) return;
      for (PackedFn u : *unary_pool) {
        if (capped) return;
        PackedFn g = 0;
        for (int i = 0; i < entries; ++i)
          g |= PackedFn(packed_at(u, packed_at(f, i))) << (2 * i);
        if (depth.size() >= budget.max_functions) {
          capped = true;
          return;
        }
        if (depth.emplace(g, rounds).second) next.push_back(g);
      }
    };

    while (!frontier.empty() && rounds < budget.max_depth && !capped) {
      ++rounds;
      next.clear();
      for (PackedFn f : frontier) {
        for (const auto& op : def.unary_ops) {
          PackedFn g = 0;
          for (int i = 0; i < entries; ++i)
            g |= PackedFn(op[packed_at(f, i)]) << (2 * i);
          emit(g, false);
        }
        if (capped) break;
      }
      // Composition of reached arity-1 functions, for the arity-1 closure.
      if (entries == 4 && !unary_pool) {
        for (PackedFn a : frontier) {
          for (PackedFn b : all) {
            PackedFn g = 0, h = 0;
            for (int i = 0; i < entries; ++i) {
              g |= PackedFn(packed_at(a, packed_at(b, i))) << (2 * i);
              h |= PackedFn(packed_at(b, packed_at(a, i))) << (2 * i);
            }
            emit(g, false);
            emit(h, false);
          }
          if (capped) break;
        }
      }
      for (const auto& op : def.binary_ops) {
        for (PackedFn a : frontier) {
          for (PackedFn b : all) {
            PackedFn g = 0, h = 0;
            for (int i = 0; i < entries; ++i) {
              const int va = packed_at(a, i), vb = packed_at(b, i);
              g |= PackedFn(op[4 * va + vb]) << (2 * i);
              h |= PackedFn(op[4 * vb + va]) << (2 * i);
            }
            emit(g, false);
            emit(h, false);
          }
          if (capped) break;
        }
        if (capped) break;
      }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
      next = {};
    }
    if (!frontier.empty() && rounds >= budget.max_depth) capped = true;
  }
};

}  // namespace

UniversalSetReport verify_universal_set(const std::string& set_name,
                                        const UniversalityBudget& budget) {
  const SetDefinition def = named_set(set_name);
  UniversalSetReport report;
  report.set_name = set_name;

  // Arity-1 closure: atoms are the identity and the set's constants.
  ClosureSpace unary{4};
  unary.seed(pack({0, 1, 2, 3}));
  for (int c : def.constants) unary.seed(pack(std::vector<int>(4, c)));
  unary.close(def, budget);
  report.unary_reached_count = int(unary.depth.size());
  report.all_unary_reached = unary.depth.size() == 256;

  // Arity-2 closure: atoms are the two projections and constants. Unary
  // functions already derived from the set serve as outer compositions.
  std::vector<PackedFn> unary_pool;
  unary_pool.reserve(unary.depth.size());
  for (const auto& [fn, d] : unary.depth) unary_pool.push_back(fn);
  std::sort(unary_pool.begin(), unary_pool.end());
  ClosureSpace binary{16};
  std::vector<int> proj1(16), proj2(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      proj1[4 * a + b] = a;
      proj2[4 * a + b] = b;
    }
  binary.seed(pack(proj1));
  binary.seed(pack(proj2));
  for (int c : def.constants) binary.seed(pack(std::vector<int>(16, c)));
  binary.close(def, budget, &unary_pool);

  auto add_unary_target = [&](const std::string& name,
                              const std::vector<int>& table) {
    auto it = unary.depth.find(pack(table));
    report.targets.push_back(
        {name, it != unary.depth.end(), it != unary.depth.end() ? it->second : -1});
  };
  auto add_binary_target = [&](const std::string& name,
                               const std::vector<int>& table) {
    auto it = binary.depth.find(pack(table));
    report.targets.push_back(
        {name, it != binary.depth.end(), it != binary.depth.end() ? it->second : -1});
  };
  add_unary_target("~x", ClassicalGate::lukasiewicz_not().table());
  add_unary_target("shift", ClassicalGate::cyclic_shift().table());
  for (int k = 0; k < 4; ++k)
    add_unary_target("I" + std::to_string(k),
                     ClassicalGate::indicator(k).table());
  for (int c = 0; c < 4; ++c)
    add_unary_target("const" + std::to_string(c),
                     ClassicalGate::constant(c).table());
  add_binary_target("min", ClassicalGate::min_gate().table());
  add_binary_target("max", ClassicalGate::max_gate().table());
  add_binary_target("V4", ClassicalGate::sheffer_webb().table());

  // "Budget exhausted" means some goal was not reached within the budget;
  // it is reported, never treated as a disproof. search_capped records
  // whether the searches saturated or ran into the caps.
  report.budget_exhausted =
      !report.all_unary_reached ||
      std::any_of(report.targets.begin(), report.targets.end(),
                  [](const auto& t) { return !t.reached; });
  report.search_capped = unary.capped || binary.capped;
  report.rounds_used = std::max(unary.rounds, binary.rounds);
  report.functions_generated = unary.depth.size() + binary.depth.size();
  return report;
}

std::vector<UniversalSetReport> verify_universal_sets(
    const UniversalityBudget& budget) {
  return {verify_universal_set("full", budget),
          verify_universal_set("shift-or", budget),
          verify_universal_set("sheffer-webb", budget)};
}

TransferGate computational_map_gate(QubitCount n,
                                    const std::vector<int>& target) {
  const int dim = n.operator_dim();
  if (int(target.size()) != dim)
    throw std::invalid_argument("computational_map_gate: need 4^n targets");
  for (int t : target)
    if (t < 0 || t >= dim)
      throw std::out_of_range("computational_map_gate: target out of range");
  // Unique matrix with E|mu] = |target(mu)] on the computational states:
  //   E|0)  = |0) + |t(0)) (1 - delta_{t(0),0})
  //   E|mu) = |t(mu)) (1 - delta_{t(mu),0}) - |t(0)) (1 - delta_{t(0),0}).
  RMat m = RMat::Zero(dim, dim);
  m(0, 0) = 1.0;
  if (target[0] != 0) m(target[0], 0) += 1.0;
  for (int mu = 1; mu < dim; ++mu) {
    if (target[mu] != 0) m(target[mu], mu) += 1.0;
    if (target[0] != 0) m(target[0], mu) -= 1.0;
  }
  return {n, std::move(m), GateClass::TracePreserving};
}

TransferGate classical_to_quantum(const ClassicalGate& g) {
  if (g.arity() != 1)
    throw std::invalid_argument(
        "classical_to_quantum: single-argument gates only");
  return computational_map_gate(QubitCount(1), g.table());
}

TransferGate minmax_gate() {
  std::vector<int> target(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      target[4 * a + b] = 4 * std::max(a, b) + std::min(a, b);
  return computational_map_gate(QubitCount(2), target);
}

TransferGate sheffer_webb_gate() {
  std::vector<int> target(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const int v = (std::max(a, b) + 1) % 4;
      target[4 * a + b] = 4 * v + (3 - v);
    }
  return computational_map_gate(QubitCount(2), target);
}

}  // namespace ptm::mv
