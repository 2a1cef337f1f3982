#include "npnmatch/sensitivity.hpp"

#include "bit_scan.hpp"

#include <bit>

namespace npnmatch {

namespace {

template <typename W>
void accumulate_histograms( truth_table const& tt, sensitivity_profile& p )
{
  uint32_t const n = tt.arity();
  detail::scan_sensitivity_lanes<W>(
      tt, [&]( uint64_t, W lane, W valid, std::array<W, 5> const& planes ) {
        for ( uint32_t k = 0; k <= n; ++k )
        {
          W const mk = detail::count_mask( planes, k, valid );
          if ( mk )
          {
            p.osv[k] += std::popcount( mk );
            p.osv1[k] += std::popcount( static_cast<W>( mk & lane ) );
          }
        }
      } );
}

void finalize_profile( sensitivity_profile& p )
{
  for ( uint32_t k = 0; k <= p.arity; ++k )
  {
    p.osv0[k] = p.osv[k] - p.osv1[k];
    p.sens_sum += uint64_t( k ) * p.osv[k];
    p.onset_count += p.osv1[k];
    if ( p.osv[k] )
      p.s = k;
    if ( p.osv0[k] )
      p.s0 = k;
    if ( p.osv1[k] )
      p.s1 = k;
  }
}

} // namespace

sensitivity_profile sensitivity_profile::complemented() const
{
  sensitivity_profile p = *this;
  std::swap( p.s0, p.s1 );
  std::swap( p.osv0, p.osv1 );
  p.onset_count = ( uint64_t( 1 ) << arity ) - onset_count;
  return p;
}

uint32_t local_sensitivity( truth_table const& tt, word_index w )
{
  uint32_t const n = tt.arity();
  bool const out = evaluate( tt, w );
  uint32_t s = 0;
  for ( uint32_t v = 0; v < n; ++v )
  {
    s += out != evaluate( tt, w ^ ( word_index( 1 ) << v ) );
  }
  return s;
}

sensitivity_profile compute_profile( truth_table const& tt, scan_width width )
{
  sensitivity_profile p;
  p.arity = tt.arity();
  if ( width == scan_width::w64 )
  {
    accumulate_histograms<uint64_t>( tt, p );
  }
  else
  {
    accumulate_histograms<uint32_t>( tt, p );
  }
  finalize_profile( p );
  return p;
}

sensitivity_profile naive_profile( truth_table const& tt )
{
  sensitivity_profile p;
  p.arity = tt.arity();
  uint64_t const bits = tt.num_bits();
  for ( uint64_t w = 0; w < bits; ++w )
  {
    auto const wi = static_cast<word_index>( w );
    uint32_t const s = local_sensitivity( tt, wi );
    ++p.osv[s];
    if ( evaluate( tt, wi ) )
    {
      ++p.osv1[s];
    }
  }
  finalize_profile( p );
  return p;
}

} // namespace npnmatch
