#include <set>

#include "dnaprover/error.hpp"
#include "dnaprover/process.hpp"

namespace dnaprover {
namespace {

DomainOccurrence& at(std::vector<Strand>& strands, const Site& s) {
  return strands[s.vertex - 1][s.position - 1];
}

std::string pick_id(const Process& p, std::string_view requested) {
  if (requested.empty()) return p.fresh_bond_id();
  if (p.has_bond(requested)) throw RuleError("bond id " + std::string(requested) + " already in use");
  return std::string(requested);
}

}  // namespace

Process apply_rb(const Process& p, const Site& d1, const Site& d2, std::string_view bond,
                 const HiddenTest& hidden) {
  const auto& a = p.at(d1);
  const auto& b = p.at(d2);
  if (d1 == d2) throw RuleError("RB: an occurrence cannot bind itself");
  if (!a.is_free() || !b.is_free())
    throw RuleError("RB: occurrence " + to_string(a.is_free() ? d2 : d1) + " is already bound");
  if (!complementary(a.type(), b.type()))
    throw RuleError("RB: " + to_string(a.type()) + " and " + to_string(b.type()) +
                    " are not complementary");
  const std::string id = pick_id(p, bond);
  std::vector<Strand> strands = p.strands();
  at(strands, d1).bond = id;
  at(strands, d2).bond = id;
  Process next(std::move(strands));
  if (hidden(next, id)) throw RuleError("RB: bond " + id + " would be hidden");
  return next;
}

Process apply_ru(const Process& p, std::string_view x) {
  const SitePair ends = p.endpoints(x);
  if (!p.at(ends.first).toehold) throw RuleError("RU: bond " + std::string(x) + " is not a toehold");
  if (is_anchored(x, p)) throw RuleError("RU: bond " + std::string(x) + " is anchored");
  std::vector<Strand> strands = p.strands();
  at(strands, ends.first).bond.reset();
  at(strands, ends.second).bond.reset();
  return Process(std::move(strands));
}

Process apply_r3(const Process& p, const Site& free_d, std::string_view x,
                 std::string_view new_bond) {
  const auto& invader = p.at(free_d);
  if (!invader.is_free()) throw RuleError("R3: occurrence " + to_string(free_d) + " is bound");
  const SitePair ends = p.endpoints(x);
  const auto& first = p.at(ends.first);
  const auto& second = p.at(ends.second);
  Site incumbent;
  if (first.type() == invader.type()) {
    incumbent = ends.first;
  } else if (second.type() == invader.type()) {
    incumbent = ends.second;
  } else {
    throw RuleError("R3: bond " + std::string(x) + " does not hold a " +
                    to_string(invader.type()) + " occurrence");
  }
  const Site partner = ends.other(incumbent);

  std::string id;
  if (new_bond.empty()) {
    id = p.fresh_bond_id();
  } else if (new_bond != x && p.has_bond(new_bond)) {
    throw RuleError("R3: bond id " + std::string(new_bond) + " already in use");
  } else {
    id = std::string(new_bond);
  }

  std::vector<Strand> strands = p.strands();
  at(strands, incumbent).bond.reset();
  at(strands, free_d).bond = id;
  at(strands, partner).bond = id;
  Process next(std::move(strands));
  if (!is_anchored(id, next))
    throw RuleError("R3: displacing bond " + std::string(x) + " leaves the new bond unanchored");
  return next;
}

Process apply_rm(const Process& p, const std::vector<std::string>& ring) {
  if (ring.size() < 2) throw RuleError("RM: a ring needs at least two bonds");
  if (std::set<std::string>(ring.begin(), ring.end()).size() != ring.size())
    throw RuleError("RM: ring repeats a bond");

  // Complemented end of each ring bond; the uncomplemented end keeps its id.
  std::vector<Site> starred(ring.size());
  std::string name;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const SitePair ends = p.endpoints(ring[k]);
    const auto& a = p.at(ends.first);
    if (k == 0) name = a.name;
    if (a.name != name)
      throw RuleError("RM: ring is not closed, bond " + ring[k] + " is on domain " + a.name +
                      " instead of " + name);
    starred[k] = a.complemented ? ends.first : ends.second;
  }

  std::vector<Strand> strands = p.strands();
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const std::size_t prev = (k + ring.size() - 1) % ring.size();
    at(strands, starred[prev]).bond = ring[k];
  }
  Process next(std::move(strands));
  for (const auto& id : ring) {
    if (!is_anchored(id, next)) throw RuleError("RM: rotated bond " + id + " is not anchored");
  }
  return next;
}

}  // namespace dnaprover
