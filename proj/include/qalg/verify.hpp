#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/resolution.hpp"

namespace qalg {

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Cutoffs {
  std::size_t algebra = kDefaultCutoff;
  std::size_t enveloping = kDefaultEnvelopingCutoff;
  std::size_t env_cap = kDefaultEnvelopingCap;
};

/** Random algebras above this dimension skip statements over A^e. */
constexpr std::size_t kRandomEnvelopingDim = 8;

using Witness = std::vector<std::pair<std::string, std::string>>;

struct ReportEntry {
  std::string id;
  std::string anchor;
  Status status = Status::Inconclusive;
  Witness witness;
  std::size_t cutoff = 0;
  double ms = 0;
  bool operator==(const ReportEntry&) const = default;
};

struct AlgebraSummary {
  std::string name;
  std::size_t dim = 0;
  std::string field;
  bool operator==(const AlgebraSummary&) const = default;
};

struct VerificationReport {
  AlgebraSummary algebra;
  std::vector<ReportEntry> entries;
  std::size_t count(Status s) const;
  bool operator==(const VerificationReport&) const = default;
};

struct StatementInfo {
  std::string id;
  /** Formula the statement checks. */
  std::string anchor;
  /** Needs computations over A^e. */
  bool enveloping = false;
  /** Empty for statements about every algebra, else the fixture name it belongs to. */
  std::string fixture;
};

const std::vector<StatementInfo>& statement_registry();
/** Whether the statement produces an entry for an algebra of this name. */
bool statement_applies(const StatementInfo& s, const std::string& algebra_name);
/** "all" or a comma separated list of ids; throws PreconditionError on unknown ids. */
std::vector<std::string> parse_statement_list(const std::string& spec);

/**
 * Evaluates the statements on one algebra. Statements that do not apply to the
 * algebra are skipped. Resource caps turn an entry inconclusive.
 */
VerificationReport verify_statements(const AlgebraPtr& a, const std::vector<std::string>& ids,
                                     const Cutoffs& cutoffs = {});

}  // namespace qalg
