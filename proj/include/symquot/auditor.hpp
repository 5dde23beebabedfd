#pragma once

#include "symquot/circle_quotient.hpp"
#include "symquot/molien.hpp"
#include "symquot/u2_catalog.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace symquot {

enum class Obstruction {
  no_pseudoreflection,
  quadratic_dim_mismatch,
  ratio_violation,
  typeI_stratum_integrality,
  hilbert_series_mismatch,
};
std::string to_string(Obstruction o);

/// Why a candidate group cannot match the weight vector. `witness` holds the
/// exact values behind the decision, rationals as "p/q".
struct ExclusionCertificate {
  DuValSpec candidate;
  Obstruction obstruction = Obstruction::hilbert_series_mismatch;
  std::map<std::string, std::string> witness;
};

struct CandidateResult {
  DuValSpec candidate;
  std::optional<ExclusionCertificate> certificate;  // empty: the candidate survived every test
};

enum class Verdict {
  excluded_by_predicate,
  excluded_all_candidates,
  dimension_two_orbifold,
  point,
  not_applicable,
  counterexample_candidate,
};
std::string to_string(Verdict v);

struct ReductionStep {
  WeightVector parent;
  OrbitTypeNode node;   // the codimension-one node followed
  WeightVector child;   // closure of that node, made effective
};

struct ReductionChain {
  std::vector<ReductionStep> steps;
  std::optional<WeightVector> terminal;  // set when an n = 3 vector with a codimension-one node is reached
  std::string failure;
};

/// First descent through codimension-one nodes down to n = 3 (depth first,
/// nodes in lattice order). A normalized vector with one negative weight and
/// n >= 3 is required; throws std::invalid_argument otherwise.
ReductionChain reduce_to_n3(const WeightVector& a);

/// Every descent; chains ending at the same terminal are all listed.
std::vector<ReductionChain> all_reductions(const WeightVector& a);

struct N3Audit {
  WeightVector vector;
  PredicateRecord predicates;
  std::optional<GammaData> gamma;
  std::vector<CandidateResult> candidates;
  Verdict verdict = Verdict::not_applicable;
};

struct AuditReport {
  WeightVector input;
  WeightVector normalized;
  NormalizationLog log;
  PredicateRecord predicates;
  std::optional<Rational> gamma0;
  std::vector<ReductionChain> chains;
  std::vector<N3Audit> terminals;
  Verdict verdict = Verdict::not_applicable;
  std::int64_t cyclic_order = 0;  // N for dimension_two_orbifold
  std::vector<std::string> notes;
};

/// Data about one candidate group that does not depend on the weight vector.
struct CandidateInfo {
  DuValSpec spec;
  std::size_t order = 0;
  std::size_t pseudoreflection_count = 0;
  std::vector<unsigned> primitive_orders;
  Integer quadratic_dimension;
  FiniteGamma gamma;
};

/// Thread-safe memo of candidate data and Molien series, keyed by spec.
class CandidateCache {
 public:
  std::shared_ptr<const CandidateInfo> info(const DuValSpec& spec);
  std::shared_ptr<const RationalFunction> molien(const DuValSpec& spec);
  std::vector<DuValSpec> specs_of_order(std::int64_t order);

 private:
  std::mutex mu_;
  std::map<DuValSpec, std::shared_ptr<const CandidateInfo>> info_;
  std::map<DuValSpec, std::shared_ptr<const RationalFunction>> molien_;
  std::map<std::int64_t, std::vector<DuValSpec>> specs_;
};

CandidateInfo candidate_info(const FiniteU2Group& g);

/// First applicable obstruction for one candidate, or nothing if it survives.
/// `a` is a normalized generic n = 3 vector with one negative weight.
std::optional<ExclusionCertificate> exclude_candidate(const WeightVector& a, const DuValSpec& spec,
                                                      CandidateCache* cache = nullptr);

/// Re-runs the certificate's own test from the spec and the weight vector.
bool revalidate(const ExclusionCertificate& cert, const WeightVector& a);

/// Whether the on-shell series of `a` and the Molien series of the candidate differ.
bool series_differ(const WeightVector& a, const DuValSpec& spec);

N3Audit audit_n3(const WeightVector& a, CandidateCache* cache = nullptr);
AuditReport audit(const WeightVector& a, CandidateCache* cache = nullptr);

struct ScanRow {
  WeightVector weights;
  Rational gamma0;
  PredicateRecord predicates;
  Verdict verdict = Verdict::not_applicable;
  std::string first_obstruction;
  AuditReport report;
};

/// Normalized vectors (-a1, a2, ..., an) with 1 <= a_i <= alpha_max, positive
/// weights increasing, gcd 1, and for n = 3 all alphas distinct.
/// Lexicographic in (a1, a2, ...).
std::vector<WeightVector> scan_vectors(std::size_t n, std::int64_t alpha_max);

/// Audits every scan vector using `jobs` threads; rows keep scan order.
std::vector<ScanRow> scan(std::size_t n, std::int64_t alpha_max, unsigned jobs = 1);

/// Counts of obstructions over the candidates, e.g. "no_pseudoreflection:3 ratio_violation:1".
std::string obstruction_summary(const std::vector<CandidateResult>& candidates);

struct ArgumentCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The finite scans behind the n = 3 case analysis, over alphas up to `bound`.
std::vector<ArgumentCheck> verify_paper_arguments(std::int64_t bound = 100);

}  // namespace symquot
