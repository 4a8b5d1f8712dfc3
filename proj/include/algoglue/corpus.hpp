#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "algoglue/algorithms.hpp"
#include "algoglue/glueing.hpp"

namespace algoglue::corpus {

/// Euclid with the remainder step as one label, over naturals (x, y).
/// Four states: begin, ifl, ifr, end.
SemanticAlgorithm gcd_A();
/// Euclid with the remainder computed by an inner subtraction loop.
SemanticAlgorithm gcd_B();
/// gcd_A whose step label is the free label "rem".
SemanticAlgorithm gcd_A_free();
/// The subtraction loop x >= y ? x -= y : swap, from r0 to r3.
SemanticAlgorithm remainder_sub();
/// gcd_A over the Euclidean theory with frame (x, y, z).
LogicalAlgorithm gcd_logical();

inline const std::vector<std::string> kGcdProgramVars = {"x", "y", "w"};
/// One program per gcd_A label over naturals[x,y,w] using only read0, readS,
/// succ and pred. The step program is a counter machine with scratch w = 0.
ProgramLabelling gcd_programs();
ModelOfComputation gcd_program_model();

inline constexpr const char* kSortBoth = "sort(a);sort(b)";

/// Free: one edge labelled sort(a);sort(b). AB / BA: two consecutive edges.
enum class SortOrder { Free, AB, BA };

/// Mergesort over lists with frame (x, a, b, y); sorts x in place. Lists of
/// length <= 1 are returned directly. `lists` defaults to lists_of_naturals().
SemanticAlgorithm mergesort(SortOrder order = SortOrder::Free, StructurePtr lists = nullptr);
/// The merge loop from `sorted` to `end`: x := y + merge(a, b).
SemanticAlgorithm merge_algorithm(StructurePtr lists = nullptr);
/// Mergesort with the merge loop collapsed into one `merge` label whose
/// meaning is the map computed by merge_algorithm().
SemanticAlgorithm mergesort_outer(StructurePtr lists = nullptr, std::size_t budget = 100000);
/// Two-edge chain refining sort(a);sort(b) in the given order.
SemanticAlgorithm sort_chain(SortOrder order, StructurePtr lists = nullptr);

/// The map computed by unfold(mergesort(AB), "sort", depth) on x.
StructuralMap mergesort_map(int depth, std::size_t budget);

}  // namespace algoglue::corpus
