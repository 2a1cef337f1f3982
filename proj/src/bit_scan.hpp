/* Internal helper: lane-wise sensitivity scan shared by the profile and
 * K-domain computations.  Not installed. */

#pragma once

#include "npnmatch/truth_table.hpp"

#include <array>
#include <cstdint>

namespace npnmatch::detail {

template <typename W>
inline constexpr std::array<W, 6> lane_var_mask();

template <>
inline constexpr std::array<uint64_t, 6> lane_var_mask<uint64_t>()
{
  return {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
          0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
}

template <>
inline constexpr std::array<uint32_t, 6> lane_var_mask<uint32_t>()
{
  return {0xAAAAAAAAu, 0xCCCCCCCCu, 0xF0F0F0F0u, 0xFF00FF00u, 0xFFFF0000u, 0u};
}

/* Visits the table in lanes of W; for each lane the callback receives the
 * base input index, the lane's function bits, a validity mask, and five
 * bit-sliced planes encoding each input's local sensitivity (planes[p] bit j
 * is bit p of s(f, base + j)).  Sensitivities fit in 5 bits since n <= 20. */
template <typename W, typename Visitor>
void scan_sensitivity_lanes( truth_table const& tt, Visitor&& visit )
{
  constexpr uint32_t lane_bits = sizeof( W ) * 8;
  constexpr uint32_t lane_log = lane_bits == 64 ? 6 : 5;
  constexpr auto masks = lane_var_mask<W>();

  uint32_t const n = tt.arity();
  uint64_t const bits = tt.num_bits();
  uint64_t const lanes = bits > lane_bits ? bits / lane_bits : 1;
  auto const words = tt.words();

  auto fetch = [&]( uint64_t lane ) -> W {
    if constexpr ( lane_bits == 64 )
    {
      return words[lane];
    }
    else
    {
      return static_cast<W>( words[lane >> 1] >> ( ( lane & 1 ) * 32 ) );
    }
  };

  W const valid = bits >= lane_bits ? ~W( 0 ) : static_cast<W>( ( W( 1 ) << bits ) - 1 );

  for ( uint64_t lane = 0; lane < lanes; ++lane )
  {
    W const x = fetch( lane );
    std::array<W, 5> planes{};
    for ( uint32_t v = 0; v < n; ++v )
    {
      W diff;
      if ( v < lane_log )
      {
        W const m = masks[v];
        uint32_t const shift = 1u << v;
        diff = x ^ static_cast<W>( ( ( x & m ) >> shift ) | ( ( x & ~m ) << shift ) );
      }
      else
      {
        diff = x ^ fetch( lane ^ ( uint64_t( 1 ) << ( v - lane_log ) ) );
      }
      /* planes += diff (bit-sliced ripple add of a 1-bit addend) */
      W carry = diff;
      for ( auto& plane : planes )
      {
        W const prev = plane;
        plane = prev ^ carry;
        carry = prev & carry;
        if ( !carry )
          break;
      }
    }
    visit( lane * lane_bits, x, valid, planes );
  }
}

/* Mask of lane positions whose bit-sliced count equals k. */
template <typename W>
inline W count_mask( std::array<W, 5> const& planes, uint32_t k, W valid )
{
  W m = valid;
  for ( uint32_t p = 0; p < 5; ++p )
  {
    m &= ( ( k >> p ) & 1u ) ? planes[p] : static_cast<W>( ~planes[p] );
  }
  return m;
}

} // namespace npnmatch::detail
