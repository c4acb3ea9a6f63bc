#include "dnaprover/fixtures.hpp"

#include "dnaprover/compiler.hpp"

namespace dnaprover::fixtures {

ClauseSet clause_set_s() {
  return parse_clause_text("P ~Q R\n~U V ~R\nQ\n~V\n~P\nU\n");
}

Process hairpin() {
  return parse_process("<t^ p> | <r* q* p*> | <p!y1 q!z1 r q*!z1 p*!y1 t^*>");
}

Process fourway() {
  return parse_process(
      "<a^!i b!j1 c^*> | <d^* b*!j1 a^*!i> | <c^ b*!j2 e^!k> | <e^*!k b!j2 d^>");
}

Process theorem() { return compile(clause_set_s(), default_codebook()).process; }

namespace {

ProcessStep rb(std::string label, Site a, Site b, std::string bond,
               GraphRule family = GraphRule::kGB) {
  return {std::move(label), family,
          [a, b, bond](const Process& p) { return apply_rb(p, a, b, bond); }};
}

}  // namespace

std::vector<ProcessStep> hairpin_script() {
  return {
      rb("RB(x)", {1, 1}, {3, 6}, "x"),
      {"R3(y1->y2)", GraphRule::kG3,
       [](const Process& p) { return apply_r3(p, {1, 2}, "y1", "y2"); }},
      rb("RB(y3)", {2, 3}, {3, 1}, "y3"),
      {"R3(z1->z2)", GraphRule::kG3,
       [](const Process& p) { return apply_r3(p, {2, 2}, "z1", "z2"); }},
      // r at (3,3) is already free here, so the last step is a plain anchored bind.
      rb("R3(->u)", {2, 1}, {3, 3}, "u"),
  };
}

std::vector<ProcessStep> fourway_script() {
  return {
      rb("RB(c)", {1, 3}, {3, 1}, "c"),
      rb("RB(d)", {2, 1}, {4, 3}, "d"),
      {"RM(j1,j2)", GraphRule::kGM,
       [](const Process& p) { return apply_rm(p, {"j1", "j2"}); }},
      {"RU(i)", GraphRule::kGU, [](const Process& p) { return apply_ru(p, "i"); }},
      {"RU(k)", GraphRule::kGU, [](const Process& p) { return apply_ru(p, "k"); }},
  };
}

std::vector<ProcessStep> theorem_script() {
  // Strands: <P Q* R> <U* V R*> <Q> <V*> <P*> <U>
  return {
      rb("RB(i)", {1, 2}, {3, 1}, "i"),
      rb("RB(j)", {2, 2}, {4, 1}, "j"),
      rb("RB(k)", {1, 3}, {2, 3}, "k"),
      rb("RB(l)", {1, 1}, {5, 1}, "l"),
      rb("RB(m)", {2, 1}, {6, 1}, "m"),
  };
}

std::vector<std::string> names() { return {"S", "hairpin", "fourway", "theorem"}; }

std::optional<Process> process_named(std::string_view name) {
  if (name == "hairpin") return hairpin();
  if (name == "fourway") return fourway();
  if (name == "theorem" || name == "S") return theorem();
  return std::nullopt;
}

std::vector<ProcessStep> script_named(std::string_view name) {
  if (name == "hairpin") return hairpin_script();
  if (name == "fourway") return fourway_script();
  if (name == "theorem" || name == "S") return theorem_script();
  return {};
}

}  // namespace dnaprover::fixtures
