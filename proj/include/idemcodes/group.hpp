#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idemcodes/error.hpp"
#include "idemcodes/numutil.hpp"

namespace idemcodes {

/// Finite group on a fixed canonical element ordering {0..n-1}, identity at 0.
/// The ordering is the codeword coordinate order and never changes.
struct Group {
  int n = 0;
  std::vector<int> table;           // n*n row-major Cayley table
  std::vector<int> inverse;         // two-sided inverses
  std::vector<std::string> labels;  // display names (words in generators)
  std::vector<int> gens;            // generator indices
  std::string spec;                 // canonical spec string

  int mul(int a, int b) const { return table[a * n + b]; }
  int inv(int a) const { return inverse[a]; }
  /// a^g = g^-1 a g.
  int conj(int a, int g) const { return mul(mul(inverse[g], a), g); }
  int element_order(int a) const;
  bool is_abelian() const;

  /// Exhaustive check of the group axioms with identity at index 0.
  void validate() const;
};

using GroupPtr = std::shared_ptr<const Group>;

/// <a,b | a^m = b^n = 1, ba = a^r b>; element a^i b^j has index j*m + i.
Group group_metacyclic(i64 m, i64 n, i64 r);
/// Cyclic group of order m (single generator "a").
Group group_cyclic(i64 m);
/// Direct product with lexicographic ordering, A index major. Generator
/// letters of B are renamed to stay distinct from A's.
Group group_direct(const Group& A, const Group& B);
/// Group from an n*n whitespace-separated 0-based Cayley table; the table is
/// validated and must have its identity at index 0.
Group group_from_cayley(const std::vector<std::vector<int>>& table, const std::string& spec);

struct Subgroup {
  const Group* parent = nullptr;
  std::vector<int> elems;           // sorted
  std::vector<std::uint64_t> mask;  // membership bitset

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int g) const { return (mask[g >> 6] >> (g & 63)) & 1; }
  bool contains_all(const Subgroup& other) const;
  bool is_abelian() const;

  bool operator==(const Subgroup& o) const { return parent == o.parent && elems == o.elems; }
  bool operator<(const Subgroup& o) const {
    if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
    return elems < o.elems;
  }
};

Subgroup subgroup_from_elements(const Group& G, std::vector<int> elems);
Subgroup generated_subgroup(const Group& G, const std::vector<int>& gens);
Subgroup trivial_subgroup(const Group& G);
Subgroup full_subgroup(const Group& G);
Subgroup conjugate_subgroup(const Subgroup& S, int g);

/// All subgroups by closure-BFS (cyclic seeds, then single-element joins),
/// deduplicated and sorted by (order, element set). Bound guards the search.
std::vector<Subgroup> subgroups(const Group& G, int bound = 200);

Subgroup normalizer(const Group& G, const Subgroup& K);
Subgroup centralizer(const Group& G, const std::vector<int>& elems);
Subgroup centralizer(const Group& G, const Subgroup& S);
Subgroup commutator_subgroup(const Group& G);
Subgroup center(const Group& G);

/// Projection N -> N/K for K normal in N, with coset representatives chosen
/// as the smallest element index (which also fixes the section).
struct QuotientMap {
  const Group* parent = nullptr;  // group containing N and K
  Subgroup source;                // N
  Subgroup kernel;                // K
  GroupPtr quotient;
  std::vector<int> proj;     // parent index -> quotient index (-1 outside N)
  std::vector<int> section;  // quotient index -> representative parent index

  int project(int g) const {
    require(proj[g] >= 0, errc::bad_parameters, "element outside quotient source");
    return proj[g];
  }
  int lift(int q) const { return section[q]; }
};

QuotientMap quotient(const Subgroup& N, const Subgroup& K);

/// Image of S <= source in the quotient group.
Subgroup image_subgroup(const QuotientMap& qm, const Subgroup& S);
/// Preimage in the source of a subgroup of the quotient group.
Subgroup preimage_subgroup(const QuotientMap& qm, const Subgroup& Sq);

/// Smallest-index representatives of the right cosets Hg, increasing;
/// the first element is the identity.
std::vector<int> transversal(const Group& G, const Subgroup& H);

/// p-part and p'-part of a nilpotent group: elements of p-power order and of
/// order coprime to p. Throws NotNilpotent when these are not subgroups.
std::pair<Subgroup, Subgroup> primary_decomposition(const Group& Q, i64 p = 2);

/// Witness generator (smallest-index element of maximal order) when cyclic.
std::optional<int> cyclic_witness(const Group& Q);
inline bool is_cyclic(const Group& Q) { return cyclic_witness(Q).has_value(); }
std::optional<int> cyclic_witness(const Subgroup& S);

bool is_nilpotent(const Group& G);

/// For cyclic Q: the subgroups <g^(|Q|/p)>, one per prime p dividing |Q|.
std::vector<Subgroup> minimal_prime_subgroups(const Group& Q);

/// Greedy minimal generating sequence (ascending element scan).
std::vector<int> greedy_generators(const Group& G);

}  // namespace idemcodes
