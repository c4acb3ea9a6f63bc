#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dnaprover/logic.hpp"
#include "dnaprover/process.hpp"
#include "dnaprover/strand_graph.hpp"

namespace dnaprover {

/// Reverse order, A<->T, C<->G. Throws CodebookError on any other character.
std::string reverse_complement(std::string_view seq);

/// Maps each variable to its sense strand (5' to 3'). A negated literal is
/// encoded by the reverse complement of its variable's code.
class Codebook {
 public:
  using CodeMap = std::map<std::string, std::string, std::less<>>;

  Codebook() = default;
  /// Validates equal lengths, the {A,C,G,T} alphabet, and that no code
  /// equals another code or any code's reverse complement.
  explicit Codebook(CodeMap sense);

  const CodeMap& sense() const { return sense_; }
  std::size_t code_length() const;
  bool has(std::string_view variable) const;
  /// Throws CodebookError for an unknown variable.
  std::string lookup(const Literal& l) const;

  friend bool operator==(const Codebook&, const Codebook&) = default;

 private:
  CodeMap sense_;
};

/// The five 10-mers for P, Q, R, U, V used in the worked example.
Codebook default_codebook();

/// Random codes of the given length, seeded deterministically, such that
/// every two sequences drawn from the codes and their reverse complements
/// are at Hamming distance >= min_distance (a code is not compared with its
/// own reverse complement, but must differ from it). Throws CodebookError
/// when the bounded search fails.
Codebook generate_codebook(const std::vector<std::string>& variables, std::size_t length,
                           std::size_t min_distance, std::uint64_t seed);

/// `VAR SEQUENCE` per line, `#` comments.
Codebook parse_codebook(std::string_view text);
std::string format_codebook(const Codebook& cb);

struct CompiledClause {
  Clause clause;
  Strand strand;
  std::string bases;  // 5' to 3'
};

struct CompiledProgram {
  Process process;
  std::vector<CompiledClause> clauses;
};

/// One strand per clause in clause-set order, one long domain per literal in
/// clause text order; negative literals are complemented domains. Throws
/// CodebookError when a variable has no code.
CompiledProgram compile(const ClauseSet& s, const Codebook& cb);

/// `>clause k: {P, ~Q, R}` header lines followed by the base string.
std::string format_fasta(const CompiledProgram& program);

enum class HybridizationOutcome { kUnsat, kSatisfiable };

struct HybridizationVerdict {
  HybridizationOutcome outcome = HybridizationOutcome::kSatisfiable;
  /// Unsat: shortest trace to an all-bound state. Satisfiable: trace to a
  /// terminal state with the most current edges.
  Trace witness;
  /// Free sites of the witness's final state; empty iff Unsat.
  std::vector<Site> free_sites;
  std::size_t states_explored = 0;
};

struct HybridizationBounds {
  std::size_t max_states = 100'000;
  std::size_t max_depth = 64;
  std::size_t max_ring = 4;
};

/// Explores the strand graph of p looking for a state with every site bound.
/// Throws LimitExceeded when the bounds cut the search short without such a
/// state.
HybridizationVerdict hybridization_verdict(const Process& p, const HybridizationBounds& bounds = {});

}  // namespace dnaprover
