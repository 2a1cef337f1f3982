/* Shared helpers for building tables in tests. */

#pragma once

#include <npnmatch/generator.hpp>
#include <npnmatch/truth_table.hpp>

#include <functional>

namespace npnmatch::testing {

/* Builds a table from a per-word predicate; the independent construction
 * route used wherever tests need a function without going through parse. */
inline truth_table from_function( uint32_t n, std::function<bool( word_index )> const& f )
{
  truth_table tt( n );
  for ( word_index w = 0; w < tt.num_bits(); ++w )
  {
    tt.set_bit( w, f( w ) );
  }
  return tt;
}

inline truth_table and_n( uint32_t n )
{
  return from_function( n, [&]( word_index w ) { return w == ( word_index( 1 ) << n ) - 1; } );
}

inline truth_table parity_n( uint32_t n )
{
  return from_function( n, []( word_index w ) { return __builtin_popcount( w ) & 1; } );
}

inline truth_table constant( uint32_t n, bool value )
{
  return from_function( n, [&]( word_index ) { return value; } );
}

/* f = x1 x2 + x3 and g = !x1 + x2 !x3, an NPN-equivalent pair related by
 * reversing the variables and negating the outer two. */
inline truth_table fig2_f()
{
  return from_function( 3, []( word_index w ) {
    bool const x1 = w & 1, x2 = w & 2, x3 = w & 4;
    return ( x1 && x2 ) || x3;
  } );
}

inline truth_table fig2_g()
{
  return from_function( 3, []( word_index w ) {
    bool const x1 = w & 1, x2 = w & 2, x3 = w & 4;
    return !x1 || ( x2 && !x3 );
  } );
}

/* Two two-minterm functions whose onset sensitivity vectors agree but whose
 * level-3 onset domains have different average Hamming distance: onset
 * {100, 111} (distance 2) versus the antipodal onset {000, 111}. */
inline truth_table diagonal_pair_rep()
{
  return from_function( 3, []( word_index w ) { return w == 1 || w == 7; } );
}

inline truth_table antipodal_pair_rep()
{
  return from_function( 3, []( word_index w ) { return w == 0 || w == 7; } );
}

inline truth_table random_table_seeded( uint32_t n, uint64_t seed )
{
  seeded_rng rng( seed );
  return random_table( n, rng );
}

} // namespace npnmatch::testing
