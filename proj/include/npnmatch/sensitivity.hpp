/*!
  \file sensitivity.hpp
  \brief Local and function sensitivity, sensitivity histograms.

  The profile of a function holds its sensitivity s, the offset/onset
  restrictions s0/s1, the exact sum of local sensitivities, and the
  sensitivity histograms (one count per sensitivity value, equivalent to the
  sorted multiset of all local sensitivities).  Average sensitivity is the
  pair (sens_sum, 2^n) and is always compared exactly, never as a float.
*/

#pragma once

#include "truth_table.hpp"

#include <array>
#include <cstdint>

namespace npnmatch {

/*! Word granularity of the packed sensitivity scan. */
enum class scan_width : uint8_t
{
  w32,
  w64
};

struct sensitivity_profile
{
  uint32_t arity = 0;
  uint64_t onset_count = 0;

  uint32_t s = 0;  /*!< max local sensitivity over all words */
  uint32_t s0 = 0; /*!< max over offset words; 0 when the offset is empty */
  uint32_t s1 = 0; /*!< max over onset words; 0 when the onset is empty */

  uint64_t sens_sum = 0; /*!< exact sum of local sensitivities */

  /* Histograms: index k counts words with local sensitivity k.  Entries
   * beyond arity are zero. */
  std::array<uint64_t, max_arity + 1> osv{};
  std::array<uint64_t, max_arity + 1> osv0{};
  std::array<uint64_t, max_arity + 1> osv1{};

  bool operator==( sensitivity_profile const& other ) const = default;

  /*! Average sensitivity for display; equality tests use sens_sum. */
  double average() const
  {
    return static_cast<double>( sens_sum ) / static_cast<double>( uint64_t( 1 ) << arity );
  }

  /*! \brief The profile of the output-complemented function.

    Local sensitivities are unchanged; only the polarity labels swap.
  */
  sensitivity_profile complemented() const;
};

/*! \brief Number of input positions whose flip changes the output at \p w. */
uint32_t local_sensitivity( truth_table const& tt, word_index w );

/*! \brief Full profile via the packed-word scan.

  Processes the table one machine word at a time, deriving for each variable
  the neighbor-difference mask and accumulating per-word counts into
  bit-sliced counters, so all 32/64 words of a lane are handled together.
*/
sensitivity_profile compute_profile( truth_table const& tt, scan_width width = scan_width::w64 );

/*! \brief Testing oracle: evaluates the definitions bit by bit.

  Shares no packed-scan code with compute_profile.
*/
sensitivity_profile naive_profile( truth_table const& tt );

} // namespace npnmatch
