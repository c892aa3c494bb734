#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pmvc/constraint.hpp"
#include "pmvc/decision_diagram.hpp"
#include "pmvc/graph.hpp"

namespace pmvc {

inline constexpr int kRed = 1;
inline constexpr int kBlue = 2;

// 3-CNF over variables 1..variables. A literal is +x or -x.
struct CnfFormula {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

// Throws InputError on a zero or out-of-range literal.
void validate_cnf(const CnfFormula& f);

// DIMACS "p cnf" input. Clauses shorter than three literals are padded by
// repeating their last literal; longer or empty clauses are rejected.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

// assignment[x-1] is the value of variable x.
bool evaluate_cnf(const CnfFormula& f, const std::vector<bool>& assignment);

struct ClauseGadget {
  int u = 0;
  std::array<int, 3> v{};  // one vertex per literal
  std::array<int, 2> w{};  // dummies
};

struct GadgetMap {
  std::vector<ClauseGadget> clauses;
  std::vector<std::vector<int>> classes;  // classes[x-1]: literal vertices of variable x
};

struct Sat3Reduction {
  Graph graph;
  DecisionDiagram dd{2, true};
  GadgetMap map;
};

// Six vertices per clause: u joined to each literal vertex by a red edge for
// a positive literal or a blue edge for a negative one, and both dummies
// joined to every literal vertex by one red and one blue edge. The diagram
// forces each variable's literal vertices to share a color.
Sat3Reduction sat3_to_dd(const CnfFormula& f);

// Variable x is true iff its literal vertices inherit red. Variables without
// literal vertices decode to false. Throws InputError when a class is mixed.
std::vector<bool> decode_assignment(const PerfectMatching& p, const GadgetMap& map, const Graph& g);

// Matching built from a satisfying assignment: each u takes its first true
// literal, the dummies take the other two in the color of their variable.
// Throws InputError when the assignment does not satisfy the formula.
PerfectMatching encode_assignment(const CnfFormula& f, const std::vector<bool>& assignment, const GadgetMap& map,
                                  const Graph& g);

struct XpmReduction {
  Graph graph;
  SymmetricConstraint constraint;
};

// Exactly k red edges <=> exactly 2k red vertices. Requires d = 2 and only
// monochromatic edges; throws InputError otherwise.
XpmReduction xpm_to_sym(const Graph& g, int k);

nlohmann::json gadget_map_to_json(const GadgetMap& map);
GadgetMap gadget_map_from_json(const nlohmann::json& j);

}  // namespace pmvc
