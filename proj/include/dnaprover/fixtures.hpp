#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnaprover/logic.hpp"
#include "dnaprover/process.hpp"
#include "dnaprover/strand_graph.hpp"

namespace dnaprover::fixtures {

/// {P | ~Q | R, ~U | V | ~R, Q, ~V, ~P, U}
ClauseSet clause_set_s();

/// Hairpin toehold exchange with two invaders.
Process hairpin();

/// Toehold-mediated four-way strand exchange, initial state.
Process fourway();

/// The strand program compiled from clause_set_s().
Process theorem();

/// One step of a scripted process-level reduction together with the graph
/// rule family it corresponds to.
struct ProcessStep {
  std::string label;
  GraphRule graph_rule;
  std::function<Process(const Process&)> apply;
};

/// RB(x), R3(y1 -> y2), RB(y3), R3(z1 -> z2), then the anchored bond u.
std::vector<ProcessStep> hairpin_script();

/// Both toeholds bind, the middle bonds swap across the junction, then the
/// two original toehold bonds come apart.
std::vector<ProcessStep> fourway_script();

/// Five RB steps binding Q, V, R, P and U, as in the worked example.
std::vector<ProcessStep> theorem_script();

/// Fixture names accepted by the CLI: S, hairpin, fourway, theorem.
std::vector<std::string> names();

/// Process of a named process fixture (hairpin, fourway, theorem; S maps to
/// theorem). nullopt for an unknown name.
std::optional<Process> process_named(std::string_view name);

/// Script of a named process fixture, empty if it has none.
std::vector<ProcessStep> script_named(std::string_view name);

}  // namespace dnaprover::fixtures
