#ifndef MCGFORGE_RELATIONS_HPP
#define MCGFORGE_RELATIONS_HPP

#include "mcgforge/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mcgforge {

// (n, d, M_1..M_n, N_1..N_n): the operands of the relation system
//   N_j M_i = 0 <=> i != j,  M_j N_i = 0 <=> i != j,  M_j M_i = 0 for all i, j.
struct MatrixFamily {
    int n = 0;
    int d = 0;
    std::vector<ExactMatrix> m;
    std::vector<ExactMatrix> nn;

    void validate() const;  // throws on shape violations
};

enum class RelationKind { NM, MN, MM };
enum class ViolationReason { ShouldBeZero, ShouldBeNonzero };

struct RelationViolation {
    RelationKind kind;
    int i, j;   // the product checked is kind(j, i): N_j M_i, M_j N_i, M_j M_i
    ViolationReason reason;
};

struct RelationVerdict {
    bool holds = false;
    std::vector<RelationViolation> violations;
};

std::string kind_name(RelationKind k);
std::string reason_name(ViolationReason r);

// Checks all three relation groups exactly, including the nonvanishing
// branch at i = j.
RelationVerdict check_nm_relations(const MatrixFamily& f);

struct NaiveBoundReport {
    bool precondition_ok;       // the N_j M_i pattern holds
    int range_sum;              // dim sum_i range M_i
    bool bound_holds;           // range_sum >= n
};

// Lemma-level check: families satisfying the N_j M_i pattern have
// dim sum_i range M_i >= n.
NaiveBoundReport check_naive_bound(const MatrixFamily& f);

struct DimInfBoundReport {
    bool precondition_ok;       // full relation system holds, all members nonzero
    int lhs;                    // dim sum_i (range M_i + range N_i)
    int rhs;                    // 3n - d
    bool bound_holds;           // lhs >= rhs
    bool two_d_ge_3n;
};

DimInfBoundReport check_dim_inf_bound(const MatrixFamily& f);

// Block-based valid family (requires d >= 2n), conjugated by a seeded
// random unimodular matrix to avoid structural bias.
MatrixFamily random_valid_family(int n, int d, std::uint64_t seed);

struct WitnessResult {
    bool found = false;
    MatrixFamily family;        // verified by check_nm_relations before reporting
    int best_d = 0;
    int floor_d = 0;            // ceil(3n/2), the proven lower bound
    bool meets_floor = false;
    long candidates_tried = 0;
};

// Deterministic seeded search over structured and randomized candidates for
// the smallest d <= d_max admitting a family that passes check_nm_relations.
WitnessResult witness_search(int n, int d_max, std::uint64_t seed);

} // namespace mcgforge

#endif
