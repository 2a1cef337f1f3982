#include "npnmatch/k_domain.hpp"

#include "bit_scan.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace npnmatch {

k_domain compute_k_domain( truth_table const& tt, uint32_t k, polarity pol )
{
  uint32_t const n = tt.arity();
  if ( k > n )
  {
    throw std::invalid_argument( "sensitivity level exceeds arity" );
  }

  k_domain dom;
  dom.k = k;
  dom.pol = pol;

  detail::scan_sensitivity_lanes<uint64_t>(
      tt, [&]( uint64_t base, uint64_t lane, uint64_t valid, std::array<uint64_t, 5> const& planes ) {
        uint64_t mk = detail::count_mask( planes, k, valid );
        if ( pol == polarity::onset )
        {
          mk &= lane;
        }
        else if ( pol == polarity::offset )
        {
          mk &= ~lane;
        }
        while ( mk )
        {
          auto const b = std::countr_zero( mk );
          dom.members.push_back( static_cast<word_index>( base + b ) );
          mk &= mk - 1;
        }
      } );

  auto const m = dom.members.size();
  dom.pair_count = m < 2 ? 0 : uint64_t( m ) * ( m - 1 ) / 2;

  /* Edges: probe each member's n neighbors in the sorted member list. */
  for ( auto const w : dom.members )
  {
    for ( uint32_t v = 0; v < n; ++v )
    {
      word_index const nb = w ^ ( word_index( 1 ) << v );
      if ( nb > w && std::binary_search( dom.members.begin(), dom.members.end(), nb ) )
      {
        ++dom.edge_count;
      }
    }
  }

  /* Pairwise Hamming sum, one bit position at a time: a position set in c of
   * the m members contributes c*(m-c) crossing pairs. */
  for ( uint32_t v = 0; v < n; ++v )
  {
    uint64_t c = 0;
    for ( auto const w : dom.members )
    {
      c += ( w >> v ) & 1u;
    }
    dom.hamming_sum += c * ( m - c );
  }

  return dom;
}

k_comparison compare_k_invariants( k_domain const& a, k_domain const& b )
{
  if ( a.k != b.k )
  {
    throw std::invalid_argument( "comparing domains of different sensitivity levels" );
  }
  if ( a.members.size() != b.members.size() )
  {
    return k_comparison::differ_member_count;
  }
  if ( a.edge_count != b.edge_count )
  {
    return k_comparison::differ_edge_count;
  }
  /* Exact rational comparison of hamming_sum / pair_count. */
  using wide = unsigned __int128;
  if ( wide( a.hamming_sum ) * b.pair_count != wide( b.hamming_sum ) * a.pair_count )
  {
    return k_comparison::differ_hamming;
  }
  return k_comparison::indistinguished;
}

} // namespace npnmatch
