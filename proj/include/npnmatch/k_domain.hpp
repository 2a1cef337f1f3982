/*!
  \file k_domain.hpp
  \brief K-sensitivity domains and their hypercube invariants.

  The domain of level k collects all input words with local sensitivity
  exactly k (optionally restricted to one output polarity).  Two invariants
  of the induced hypercube subgraph are kept: the number of edges, and the
  sum of pairwise Hamming distances together with the unordered pair count.
  Average Hamming distance is the exact rational hamming_sum / pair_count,
  compared by cross-multiplication.
*/

#pragma once

#include "truth_table.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace npnmatch {

enum class polarity : uint8_t
{
  all,
  onset,
  offset
};

struct k_domain
{
  uint32_t k = 0;
  polarity pol = polarity::all;
  std::vector<word_index> members; /*!< ascending */
  uint64_t edge_count = 0;         /*!< member pairs at Hamming distance 1 */
  uint64_t hamming_sum = 0;        /*!< sum of h(x,y) over unordered pairs */
  uint64_t pair_count = 0;         /*!< |members| choose 2 */
};

/*! \brief Hamming distance between two input words. */
inline uint32_t hamming( word_index x, word_index y )
{
  return static_cast<uint32_t>( std::popcount( x ^ y ) );
}

/*! \brief Builds the K-sensitivity domain of \p tt at level \p k. */
k_domain compute_k_domain( truth_table const& tt, uint32_t k, polarity pol );

enum class k_comparison : uint8_t
{
  indistinguished,
  differ_member_count,
  differ_edge_count,
  differ_hamming
};

/*! \brief Compares the invariants of two domains at the same level.

  Distinguished domains cannot belong to transform-related functions.  The
  domains may come from opposite polarities of their functions (the pipeline
  pairs onset with offset when an output negation is in play).

  \throws std::invalid_argument when the levels differ.
*/
k_comparison compare_k_invariants( k_domain const& a, k_domain const& b );

inline bool distinguished( k_comparison c )
{
  return c != k_comparison::indistinguished;
}

} // namespace npnmatch
