/*!
  \file canonical.hpp
  \brief Exact NPN canonical forms and equivalence with witness transforms.

  The canonical form of f is the lexicographically smallest truth table, in
  text order, over all 2^(n+1) n! transforms of f.  Two functions are
  NPN-equivalent iff their canonical tables are bit-identical.
*/

#pragma once

#include "truth_table.hpp"

#include <optional>

namespace npnmatch {

/*! Practical arity cap for canonicalization. */
inline constexpr uint32_t canonical_arity_cap = 16;

/*! Arity cap of the exhaustive oracle (2^6 * 5! = 7680 transforms at n=5). */
inline constexpr uint32_t brute_force_arity_cap = 5;

struct canonical_form
{
  truth_table canon;
  npn_transform witness; /*!< maps the input function onto canon */
};

/*! \brief Computes the canonical form.

  Searches signed variable orders depth-first, most significant index bit
  first.  Candidate branches are ordered and pruned with a per-block lower
  bound (each block's bits sorted zeros-first), which keeps the search exact
  while tied and symmetric orderings collapse early.  Both output polarities
  are explored, minority minterm count first.

  \throws std::invalid_argument when the arity exceeds the cap.
*/
canonical_form canonicalize( truth_table const& tt );

/*! \brief Witness transform mapping \p f onto \p g, if NPN-equivalent. */
std::optional<npn_transform> exact_equivalent( truth_table const& f, truth_table const& g );

/*! \brief Oracle: plain enumeration of all transforms; small arities only. */
std::optional<npn_transform> brute_force_equivalent( truth_table const& f, truth_table const& g );

} // namespace npnmatch
