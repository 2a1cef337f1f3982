#include <npnmatch/canonical.hpp>

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

using namespace npnmatch;
using namespace npnmatch::testing;

namespace {

/* Reference minimum over the whole transform group, found by enumeration. */
truth_table exhaustive_min( truth_table const& f )
{
  uint32_t const n = f.arity();
  npn_transform t = identity_transform( n );
  std::vector<uint8_t> perm = t.perm;
  truth_table best;
  bool have = false;
  do
  {
    t.perm = perm;
    for ( word_index m = 0; m < ( word_index( 1 ) << n ); ++m )
    {
      t.input_neg = m;
      for ( int o = 0; o < 2; ++o )
      {
        t.output_neg = o != 0;
        auto g = apply_transform( f, t );
        if ( !have || text_order_less( g, best ) )
        {
          best = std::move( g );
          have = true;
        }
      }
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
  return best;
}

} // namespace

TEST_SUITE_BEGIN( "canonical" );

TEST_CASE( "one class for AND-like functions" )
{
  auto const and3 = and_n( 3 );
  auto nand3 = and3;
  complement( nand3 );
  auto const or3 = from_function( 3, []( word_index w ) { return w != 0; } );

  auto const c1 = canonicalize( and3 ).canon;
  auto const c2 = canonicalize( nand3 ).canon;
  auto const c3 = canonicalize( or3 ).canon;
  CHECK( c1 == c2 );
  CHECK( c1 == c3 );
}

TEST_CASE( "constants collapse to the zero table" )
{
  auto const c0 = canonicalize( constant( 4, false ) );
  auto const c1 = canonicalize( constant( 4, true ) );
  CHECK( c0.canon == constant( 4, false ) );
  CHECK( c1.canon == constant( 4, false ) );
  CHECK( apply_transform( constant( 4, true ), c1.witness ) == c1.canon );
}

TEST_CASE( "canonical table matches exhaustive enumeration" )
{
  for ( auto const& tt : {and_n( 3 ), parity_n( 3 ), fig2_f(), fig2_g(), constant( 2, true )} )
  {
    CHECK( canonicalize( tt ).canon == exhaustive_min( tt ) );
  }
  seeded_rng rng( 909 );
  for ( uint32_t n : {1u, 2u, 3u, 4u} )
  {
    for ( int iter = 0; iter < ( n == 4 ? 25 : 50 ); ++iter )
    {
      auto const tt = random_table( n, rng );
      CHECK( canonicalize( tt ).canon == exhaustive_min( tt ) );
    }
  }
  /* word-sized blocks take the sharpened bound path */
  for ( uint32_t n : {6u, 7u} )
  {
    for ( int iter = 0; iter < ( n == 6 ? 5 : 2 ); ++iter )
    {
      auto const tt = random_table( n, rng );
      CHECK( canonicalize( tt ).canon == exhaustive_min( tt ) );
    }
  }
}

TEST_CASE( "witness maps the input onto its canon" )
{
  seeded_rng rng( 910 );
  for ( uint32_t n : {1u, 3u, 5u, 7u} )
  {
    for ( int iter = 0; iter < 20; ++iter )
    {
      auto const tt = random_table( n, rng );
      auto const cf = canonicalize( tt );
      CHECK( apply_transform( tt, cf.witness ) == cf.canon );
    }
  }
}

TEST_CASE( "canonicalization is idempotent and transform-invariant" )
{
  seeded_rng rng( 911 );
  for ( uint32_t n : {2u, 4u, 6u} )
  {
    for ( int iter = 0; iter < 20; ++iter )
    {
      auto const tt = random_table( n, rng );
      auto const canon = canonicalize( tt ).canon;
      CHECK( canonicalize( canon ).canon == canon );
      CHECK( canonicalize( apply_transform( tt, random_transform( n, rng ) ) ).canon == canon );
    }
  }
}

TEST_CASE( "256 three-variable functions form 14 classes" )
{
  std::unordered_set<truth_table, truth_table_hash> canons;
  for ( uint32_t bits = 0; bits < 256; ++bits )
  {
    truth_table tt( 3 );
    tt.words()[0] = bits;
    canons.insert( canonicalize( tt ).canon );
  }
  CHECK( canons.size() == 14 );
}

TEST_CASE( "witness for the worked equivalent pair" )
{
  auto const w = exact_equivalent( fig2_f(), fig2_g() );
  REQUIRE( w.has_value() );
  CHECK( apply_transform( fig2_f(), *w ) == fig2_g() );
}

TEST_CASE( "identity pair and distinct classes" )
{
  auto const self = exact_equivalent( fig2_f(), fig2_f() );
  REQUIRE( self.has_value() );
  CHECK( apply_transform( fig2_f(), *self ) == fig2_f() );

  CHECK_FALSE( exact_equivalent( and_n( 3 ), parity_n( 3 ) ).has_value() );
}

TEST_CASE( "agreement with the brute-force oracle" )
{
  seeded_rng rng( 912 );
  for ( int iter = 0; iter < 60; ++iter )
  {
    auto const f = random_table( 3, rng );
    auto const g = rng.below( 2 ) ? apply_transform( f, random_transform( 3, rng ) )
                                  : random_table( 3, rng );
    auto const exact = exact_equivalent( f, g );
    auto const brute = brute_force_equivalent( f, g );
    CHECK( exact.has_value() == brute.has_value() );
    if ( brute )
    {
      CHECK( apply_transform( f, *brute ) == g );
    }
    if ( exact )
    {
      CHECK( apply_transform( f, *exact ) == g );
    }
  }
}

TEST_CASE( "planted equivalences are always found" )
{
  seeded_rng rng( 913 );
  for ( uint32_t n : {2u, 4u, 5u} )
  {
    for ( int iter = 0; iter < 15; ++iter )
    {
      auto const f = random_table( n, rng );
      auto const g = apply_transform( f, random_transform( n, rng ) );
      auto const w = brute_force_equivalent( f, g );
      REQUIRE( w.has_value() );
      CHECK( apply_transform( f, *w ) == g );
      CHECK( exact_equivalent( f, g ).has_value() );
    }
  }
}

TEST_CASE( "arity caps and mismatches" )
{
  CHECK_THROWS_AS( brute_force_equivalent( random_table_seeded( 6, 1 ),
                                           random_table_seeded( 6, 2 ) ),
                   std::invalid_argument );
  CHECK_THROWS_AS( exact_equivalent( and_n( 3 ), and_n( 4 ) ), std::invalid_argument );
}

TEST_SUITE_END();
