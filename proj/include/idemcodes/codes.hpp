#pragma once

#include "idemcodes/idempotents.hpp"

namespace idemcodes {

struct CodeProvenance {
  std::string group_spec;
  std::string ordering_hash;
  std::vector<int> H, K;           // element index sets of the pair
  std::vector<i64> class_residues;
  int idempotent_index = -1;
  std::string method;
  std::string idempotent_note;
};

/// Linear code as the left ideal FG e under the fixed element ordering.
struct LinearCode {
  FieldCtxPtr field;
  int length = 0;
  FMatrix genmat;  // k x n, reduced row echelon form, rows sorted by pivot
  int k = 0;
  i64 d = 0;           // minimum distance; 0 when k = 0
  bool d_exact = true; // false when the enumeration budget truncated the scan
  std::vector<i64> weights;  // length n+1 when computed
  CodeProvenance prov;
};

enum class DistMethod { exhaustive, gray };

/// Row-reduces the |G| x |G| matrix with g-th row the coefficients of g*e.
LinearCode code_from_idempotent(const Group& G, FieldCtxPtr field, const AlgElem& e);

/// Exact minimum weight over all nonzero codewords. `gray` walks the message
/// space in reflected Gray order updating one scaled row per step;
/// `exhaustive` recomputes each word. When s^k exceeds the budget the best
/// bound found is returned with *exact = false.
i64 minimum_distance(const LinearCode& c, DistMethod method, i64 budget, int threads,
                     bool* exact = nullptr);

/// Counts per Hamming weight (length n+1); throws BudgetExceeded when the
/// message space is larger than the budget.
std::vector<i64> weight_distribution(const LinearCode& c, i64 budget, int threads);

/// Header "n k s" then k rows of base-field coordinate groups.
std::string export_genmat(const LinearCode& c);

std::string ordering_hash(const Group& G);

/// Exhaustive survey of the minimal left ideals of a trivial-twisting
/// component. Every minimal left ideal of FG e_C is a right translate
/// (coordinate permutation) of FG f for a rank-1 idempotent f of the corner
/// FE eps = M_n(F_{s^{o/n}}), so enumerating one f per line of the matrix
/// algebra covers all attainable code parameters of the component.
struct IdealSurveyRow {
  int k = 0;
  i64 d = 0;
  i64 count = 0;      // minimal ideals (up to translation) with this (k, d)
  i64 repr_line = 0;  // deterministic witness line index
};

struct IdealSurvey {
  i64 lines = 0;
  std::vector<IdealSurveyRow> rows;  // sorted by d descending
};

IdealSurvey survey_minimal_ideals(const ShodaCtx& ctx, SspPtr pair, const CyclotomicClass& cls,
                                  i64 budget, int threads);

/// Rank-1 corner idempotent for one survey line (the witness generator of
/// the corresponding minimal left ideal).
AlgElem minimal_ideal_idempotent(const ShodaCtx& ctx, SspPtr pair, const CyclotomicClass& cls,
                                 i64 line);

/// all_components: one code per component. all_idempotents: every member of
/// every constructed primitive set (both constructions when applicable).
/// all_minimal_ideals: additionally the exhaustive per-component survey,
/// materializing one witness code per distinct (k, d).
enum class SearchStrategy { all_components, all_idempotents, all_minimal_ideals };

struct ComponentCodes {
  SspPtr pair;
  CyclotomicClass cls;
  i64 matrix_size = 1;
  i64 field_order = 1;
  bool supported = false;
  std::string skip_reason;
  std::vector<PrimSet> sets;
  std::vector<LinearCode> codes;
  IdealSurvey survey;  // populated under all_minimal_ideals
  std::string survey_skip_reason;
};

struct CodeSearchReport {
  std::vector<ComponentCodes> components;
  bool any_supported = false;
};

/// Runs the whole pipeline: Wedderburn components (including alias pairs
/// determining the same component), primitive idempotent sets for every
/// supported construction, and one code per idempotent. Failures are
/// recorded per component, never aborting the report. with_codes = false
/// stops after the idempotent sets.
CodeSearchReport code_search(const ShodaCtx& ctx, SearchStrategy strategy, i64 budget,
                             int threads, bool with_weights, bool with_codes = true);

}  // namespace idemcodes
