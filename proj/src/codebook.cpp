#include <cctype>
#include <random>
#include <sstream>

#include "dnaprover/compiler.hpp"
#include "dnaprover/error.hpp"

namespace dnaprover {

std::string reverse_complement(std::string_view seq) {
  std::string out(seq.rbegin(), seq.rend());
  for (char& c : out) {
    switch (c) {
      case 'A': c = 'T'; break;
      case 'T': c = 'A'; break;
      case 'C': c = 'G'; break;
      case 'G': c = 'C'; break;
      default: throw CodebookError(std::string("invalid base '") + c + "'");
    }
  }
  return out;
}

Codebook::Codebook(CodeMap sense) : sense_(std::move(sense)) {
  std::map<std::string, std::string> owner;  // sequence -> variable
  std::size_t length = 0;
  for (const auto& [var, code] : sense_) {
    if (code.empty()) throw CodebookError("empty code for " + var);
    if (length == 0) length = code.size();
    if (code.size() != length)
      throw CodebookError("code for " + var + " has length " + std::to_string(code.size()) +
                          ", expected " + std::to_string(length));
    const std::string rc = reverse_complement(code);
    if (rc == code) throw CodebookError("code for " + var + " is its own reverse complement");
    for (const auto& seq : {code, rc}) {
      auto [it, inserted] = owner.emplace(seq, var);
      if (!inserted)
        throw CodebookError("codes for " + it->second + " and " + var + " collide");
    }
  }
}

std::size_t Codebook::code_length() const {
  return sense_.empty() ? 0 : sense_.begin()->second.size();
}

bool Codebook::has(std::string_view variable) const { return sense_.find(variable) != sense_.end(); }

std::string Codebook::lookup(const Literal& l) const {
  auto it = sense_.find(l.variable);
  if (it == sense_.end()) throw CodebookError("no code for variable " + l.variable);
  return l.negated ? reverse_complement(it->second) : it->second;
}

Codebook default_codebook() {
  return Codebook({{"P", "ACGTAGTCAC"},
                   {"Q", "CAGTCAATTC"},
                   {"R", "TCAGTCGAAT"},
                   {"U", "CTAGGTCCAT"},
                   {"V", "GATCGTGCAT"}});
}

namespace {

std::size_t hamming(const std::string& a, const std::string& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

constexpr std::size_t kAttemptsPerCode = 20'000;

}  // namespace

Codebook generate_codebook(const std::vector<std::string>& variables, std::size_t length,
                           std::size_t min_distance, std::uint64_t seed) {
  if (length < 4) throw CodebookError("code length must be at least 4");
  if (min_distance < 1) throw CodebookError("minimum distance must be at least 1");
  static constexpr char kBases[] = {'A', 'C', 'G', 'T'};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 3);

  Codebook::CodeMap codes;
  std::vector<std::string> pool;  // accepted codes and their reverse complements
  for (const auto& var : variables) {
    if (codes.count(var)) continue;
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kAttemptsPerCode && !placed; ++attempt) {
      std::string cand(length, 'A');
      for (char& c : cand) c = kBases[pick(rng)];
      const std::string rc = reverse_complement(cand);
      if (cand == rc) continue;
      bool ok = true;
      for (const auto& other : pool) {
        if (hamming(cand, other) < min_distance || hamming(rc, other) < min_distance) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      codes.emplace(var, cand);
      pool.push_back(cand);
      pool.push_back(rc);
      placed = true;
    }
    if (!placed)
      throw CodebookError("no code of length " + std::to_string(length) + " at distance " +
                          std::to_string(min_distance) + " left for " + var + " after " +
                          std::to_string(kAttemptsPerCode) + " attempts");
  }
  return Codebook(std::move(codes));
}

Codebook parse_codebook(std::string_view text) {
  Codebook::CodeMap codes;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string var, seq, extra;
    if (!(fields >> var)) continue;
    if (!(fields >> seq) || (fields >> extra))
      throw ParseError("codebook line " + std::to_string(lineno) + ": expected 'VAR SEQUENCE'");
    for (char& c : seq) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (!codes.emplace(var, seq).second)
      throw ParseError("codebook line " + std::to_string(lineno) + ": duplicate variable " + var);
  }
  return Codebook(std::move(codes));
}

std::string format_codebook(const Codebook& cb) {
  std::string out;
  for (const auto& [var, code] : cb.sense()) out += var + " " + code + "\n";
  return out;
}

}  // namespace dnaprover
