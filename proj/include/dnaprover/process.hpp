#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnaprover/site.hpp"

namespace dnaprover {

/// A domain with its bond stripped: what `tp` keeps of an occurrence.
struct Domain {
  std::string name;
  bool complemented = false;  // the * flag
  bool toehold = false;       // the ^ flag

  friend auto operator<=>(const Domain&, const Domain&) = default;
  friend bool operator==(const Domain&, const Domain&) = default;
};

/// `name`, `name^`, `name*` or `name^*`.
std::string to_string(const Domain& d);

/// Same name and toehold flag, opposite complement flag.
bool complementary(const Domain& a, const Domain& b);

struct DomainOccurrence {
  std::string name;
  bool complemented = false;
  bool toehold = false;
  std::optional<std::string> bond;

  Domain type() const { return {name, complemented, toehold}; }
  bool is_free() const { return !bond.has_value(); }

  friend bool operator==(const DomainOccurrence&, const DomainOccurrence&) = default;
};

/// Complementary occurrence: complement flag toggled, bond cleared.
DomainOccurrence comp(const DomainOccurrence& d);

/// `name^*!bond`
std::string to_string(const DomainOccurrence& d);

/// Ordered 5' to 3'.
using Strand = std::vector<DomainOccurrence>;

/// A multiset of strands whose bonds are well formed: every bond names
/// exactly two occurrences of complementary domains, and toehold flags agree
/// across all occurrences of a name. Construction validates and throws
/// WellFormednessError; every Process value is well formed.
class Process {
 public:
  Process() = default;
  explicit Process(std::vector<Strand> strands);

  const std::vector<Strand>& strands() const { return strands_; }
  std::size_t strand_count() const { return strands_.size(); }
  std::size_t domain_count() const;

  bool contains(const Site& s) const;
  /// Throws RuleError for a locator outside the process.
  const DomainOccurrence& at(const Site& s) const;

  /// Bond ids in order of first use (strand by strand, 5' to 3').
  const std::vector<std::string>& bonds() const { return bond_order_; }
  std::size_t bond_count() const { return bond_order_.size(); }
  bool has_bond(std::string_view id) const;
  /// Throws RuleError for an unknown bond.
  SitePair endpoints(std::string_view id) const;

  /// Smallest `x<k>` not already used as a bond id.
  std::string fresh_bond_id() const;

 private:
  std::vector<Strand> strands_;
  std::vector<std::string> bond_order_;
  std::map<std::string, SitePair, std::less<>> bond_sites_;
};

/// Empty string when the strands form a well-formed process, otherwise the
/// first violation found.
std::string check_well_formed(const std::vector<Strand>& strands);

/// `<t^ p> | <r* q* p*>`; `⟨ ⟩` are accepted for `< >`. Throws ParseError or
/// WellFormednessError.
Process parse_process(std::string_view text);

/// Strands in order, original bond names.
std::string to_string(const Process& p);

/// Strands in order, bonds renamed b1, b2, ... by first use.
std::string canonical_string(const Process& p);

/// Equal up to strand reordering and bond renaming.
bool alpha_equivalent(const Process& a, const Process& b);

// ---------------------------------------------------------------------------
// Bond predicates
// ---------------------------------------------------------------------------

/// Bonds lying next to x on the same pair of strands in antiparallel
/// alignment.
std::vector<std::string> adjacent_bonds(std::string_view x, const Process& p);

/// Whether bond x has an end inside a closed loop.
using HiddenTest = std::function<bool(const Process&, std::string_view bond)>;

/// Default hidden test: nothing is ever hidden.
bool never_hidden(const Process&, std::string_view);

bool is_anchored(std::string_view x, const Process& p);

// ---------------------------------------------------------------------------
// Reduction rules. Each returns the rewritten process or throws RuleError.
// Premises that mention the result are checked on a tentative rewrite.
// ---------------------------------------------------------------------------

/// (RB) Binds two free complementary occurrences with a new bond. The bond
/// is named `bond` if given, else fresh_bond_id().
Process apply_rb(const Process& p, const Site& d1, const Site& d2, std::string_view bond = {},
                 const HiddenTest& hidden = never_hidden);

/// (RU) Unbinds a toehold bond that is not anchored.
Process apply_ru(const Process& p, std::string_view x);

/// (R3) The free occurrence `free_d` takes over the partner of bond x from
/// the bound occurrence of the same domain, which becomes free. The migrated
/// bond gets a new id and must be anchored afterwards.
Process apply_r3(const Process& p, const Site& free_d, std::string_view x,
                 std::string_view new_bond = {});

/// (RM) Rotates a ring of bonds j1..jN on one domain: afterwards the
/// uncomplemented end of each j_k pairs with the complemented end of
/// j_{k-1} (cyclically) and keeps the id j_k. Every new bond must be
/// anchored. Requires N >= 2.
Process apply_rm(const Process& p, const std::vector<std::string>& ring);

}  // namespace dnaprover
