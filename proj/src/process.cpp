#include "dnaprover/process.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "dnaprover/error.hpp"

namespace dnaprover {

std::string to_string(const Site& s) {
  return "(" + std::to_string(s.vertex) + "," + std::to_string(s.position) + ")";
}

std::string to_string(const SitePair& e) {
  return "{" + to_string(e.first) + "," + to_string(e.second) + "}";
}

std::string to_string(const Domain& d) {
  std::string out = d.name;
  if (d.toehold) out += '^';
  if (d.complemented) out += '*';
  return out;
}

bool complementary(const Domain& a, const Domain& b) {
  return a.name == b.name && a.toehold == b.toehold && a.complemented != b.complemented;
}

DomainOccurrence comp(const DomainOccurrence& d) {
  return {d.name, !d.complemented, d.toehold, std::nullopt};
}

std::string to_string(const DomainOccurrence& d) {
  std::string out = to_string(d.type());
  if (d.bond) out += "!" + *d.bond;
  return out;
}

// ---------------------------------------------------------------------------
// Process
// ---------------------------------------------------------------------------

std::string check_well_formed(const std::vector<Strand>& strands) {
  std::map<std::string, std::vector<Site>> uses;
  std::vector<std::string> order;
  std::map<std::string, bool> toehold_of;
  for (std::size_t v = 0; v < strands.size(); ++v) {
    if (strands[v].empty()) return "strand " + std::to_string(v + 1) + " is empty";
    for (std::size_t n = 0; n < strands[v].size(); ++n) {
      const auto& d = strands[v][n];
      if (d.name.empty()) return "empty domain name";
      auto [it, inserted] = toehold_of.emplace(d.name, d.toehold);
      if (!inserted && it->second != d.toehold)
        return "domain " + d.name + " is a toehold in some occurrences only";
      if (!d.bond) continue;
      auto& sites = uses[*d.bond];
      if (sites.empty()) order.push_back(*d.bond);
      sites.push_back({v + 1, n + 1});
    }
  }
  for (const auto& id : order) {
    const auto& sites = uses[id];
    if (sites.size() != 2)
      return "bond " + id + " appears " + std::to_string(sites.size()) + " times";
    const auto& a = strands[sites[0].vertex - 1][sites[0].position - 1];
    const auto& b = strands[sites[1].vertex - 1][sites[1].position - 1];
    if (!complementary(a.type(), b.type()))
      return "bond " + id + " joins non-complementary domains " + to_string(a.type()) + " and " +
             to_string(b.type());
  }
  return {};
}

Process::Process(std::vector<Strand> strands) : strands_(std::move(strands)) {
  if (auto problem = check_well_formed(strands_); !problem.empty())
    throw WellFormednessError(problem);
  std::map<std::string, Site, std::less<>> first_end;
  for (std::size_t v = 0; v < strands_.size(); ++v) {
    for (std::size_t n = 0; n < strands_[v].size(); ++n) {
      const auto& bond = strands_[v][n].bond;
      if (!bond) continue;
      const Site here{v + 1, n + 1};
      auto it = first_end.find(*bond);
      if (it == first_end.end()) {
        first_end.emplace(*bond, here);
        bond_order_.push_back(*bond);
      } else {
        bond_sites_.emplace(*bond, SitePair(it->second, here));
      }
    }
  }
}

std::size_t Process::domain_count() const {
  return std::accumulate(strands_.begin(), strands_.end(), std::size_t{0},
                         [](std::size_t acc, const Strand& s) { return acc + s.size(); });
}

bool Process::contains(const Site& s) const {
  return s.vertex >= 1 && s.vertex <= strands_.size() && s.position >= 1 &&
         s.position <= strands_[s.vertex - 1].size();
}

const DomainOccurrence& Process::at(const Site& s) const {
  if (!contains(s)) throw RuleError("no domain at " + to_string(s));
  return strands_[s.vertex - 1][s.position - 1];
}

bool Process::has_bond(std::string_view id) const { return bond_sites_.count(id) > 0; }

SitePair Process::endpoints(std::string_view id) const {
  auto it = bond_sites_.find(id);
  if (it == bond_sites_.end()) throw RuleError("unknown bond " + std::string(id));
  return it->second;
}

std::string Process::fresh_bond_id() const {
  for (std::size_t k = 1;; ++k) {
    std::string id = "x" + std::to_string(k);
    if (!has_bond(id)) return id;
  }
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ProcessParser {
 public:
  explicit ProcessParser(std::string_view text) : text_(text) {}

  Process parse() {
    std::vector<Strand> strands;
    skip_space();
    if (pos_ == text_.size()) return Process{};
    for (;;) {
      strands.push_back(strand());
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '|') throw ParseError("expected '|' between strands", pos_);
      ++pos_;
    }
    return Process(std::move(strands));
  }

 private:
  Strand strand() {
    skip_space();
    if (!eat("<") && !eat("⟨")) throw ParseError("expected '<' opening a strand", pos_);
    Strand s;
    for (;;) {
      skip_space();
      if (eat(">") || eat("⟩")) break;
      if (pos_ == text_.size()) throw ParseError("unterminated strand", pos_);
      s.push_back(domain());
    }
    if (s.empty()) throw ParseError("strand with no domains", pos_);
    return s;
  }

  DomainOccurrence domain() {
    DomainOccurrence d;
    d.name = ident("domain name");
    for (;;) {
      if (eat("^")) {
        d.toehold = true;
      } else if (eat("*")) {
        d.complemented = true;
      } else {
        break;
      }
    }
    if (eat("!")) d.bond = ident("bond id");
    return d;
  }

  std::string ident(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return std::string(text_.substr(start, pos_ - start));
  }

  bool eat(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Serializes strands in the given order with bonds renamed by first use.
std::string serialize(const Process& p, const std::vector<std::size_t>& order) {
  std::map<std::string, std::size_t> rename;
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += " | ";
    out += '<';
    bool first = true;
    for (const auto& d : p.strands()[order[i]]) {
      if (!first) out += ' ';
      first = false;
      out += to_string(d.type());
      if (d.bond) {
        auto [it, inserted] = rename.emplace(*d.bond, rename.size() + 1);
        out += "!b" + std::to_string(it->second);
      }
    }
    out += '>';
  }
  return out;
}

std::string type_key(const Strand& s) {
  std::string out;
  for (const auto& d : s) out += to_string(d.type()) + ' ';
  return out;
}

// Smallest serialization over all strand orders that keep strands sorted by
// type; strands of equal type are permuted exhaustively.
std::string canonical_key(const Process& p) {
  std::vector<std::size_t> order(p.strand_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return type_key(p.strands()[a]) < type_key(p.strands()[b]);
  });
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && type_key(p.strands()[order[i]]) == type_key(p.strands()[order[j]]))
      ++j;
    if (j - i > 1) groups.emplace_back(i, j);
    i = j;
  }
  std::string best = serialize(p, order);
  std::function<void(std::size_t)> permute = [&](std::size_t g) {
    if (g == groups.size()) {
      best = std::min(best, serialize(p, order));
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(groups[g].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(groups[g].second);
    std::sort(first, last);
    do {
      permute(g + 1);
    } while (std::next_permutation(first, last));
  };
  permute(0);
  return best;
}

}  // namespace

Process parse_process(std::string_view text) { return ProcessParser(text).parse(); }

std::string to_string(const Process& p) {
  std::string out;
  for (std::size_t i = 0; i < p.strand_count(); ++i) {
    if (i) out += " | ";
    out += '<';
    bool first = true;
    for (const auto& d : p.strands()[i]) {
      if (!first) out += ' ';
      first = false;
      out += to_string(d);
    }
    out += '>';
  }
  return out;
}

std::string canonical_string(const Process& p) {
  std::vector<std::size_t> order(p.strand_count());
  std::iota(order.begin(), order.end(), 0);
  return serialize(p, order);
}

bool alpha_equivalent(const Process& a, const Process& b) {
  if (a.strand_count() != b.strand_count() || a.bond_count() != b.bond_count() ||
      a.domain_count() != b.domain_count())
    return false;
  return canonical_key(a) == canonical_key(b);
}

// ---------------------------------------------------------------------------
// Bond predicates
// ---------------------------------------------------------------------------

std::vector<std::string> adjacent_bonds(std::string_view x, const Process& p) {
  const SitePair ends = p.endpoints(x);
  std::vector<std::string> out;
  for (const auto& id : p.bonds()) {
    if (id == x) continue;
    if (antiparallel_adjacent(ends, p.endpoints(id))) out.push_back(id);
  }
  return out;
}

bool never_hidden(const Process&, std::string_view) { return false; }

bool is_anchored(std::string_view x, const Process& p) { return !adjacent_bonds(x, p).empty(); }

}  // namespace dnaprover
