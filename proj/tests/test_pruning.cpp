#include <npnmatch/pruning.hpp>

#include <npnmatch/canonical.hpp>

#include "test_helpers.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace npnmatch;
using namespace npnmatch::testing;

namespace {

truth_table or_n( uint32_t n )
{
  return from_function( n, []( word_index w ) { return w != 0; } );
}

} // namespace

TEST_SUITE_BEGIN( "pruning" );

TEST_CASE( "a profile never mismatches itself" )
{
  auto const p = compute_profile( fig2_f() );
  for ( auto pol : {polarity::all, polarity::onset, polarity::offset} )
  {
    CHECK_FALSE( basic_prune( p, p, pol ).is_mismatch() );
  }
  CHECK_FALSE( polarity_basic_prune( p, p, polarity_rule::minority ).is_mismatch() );
}

TEST_CASE( "raw onset comparison separates an output-negated pair, the minority rule does not" )
{
  /* AND3 and OR3 are equivalent only through an output negation. */
  auto const pa = compute_profile( and_n( 3 ) );
  auto const po = compute_profile( or_n( 3 ) );
  CHECK( basic_prune( pa, po, polarity::onset ).is_mismatch() );
  CHECK_FALSE( polarity_basic_prune( pa, po, polarity_rule::minority ).is_mismatch() );
  CHECK_FALSE( basic_prune( pa, po, polarity::all ).is_mismatch() );
}

TEST_CASE( "the two-minterm pair mismatches on the unrestricted histogram" )
{
  auto const pd = compute_profile( diagonal_pair_rep() );
  auto const pe = compute_profile( antipodal_pair_rep() );
  auto const v = basic_prune( pd, pe, polarity::all );
  REQUIRE( v.is_mismatch() );
  CHECK( *v.reason == reject_reason::osv );

  /* but their onset views agree */
  CHECK_FALSE( basic_prune( pd, pe, polarity::onset ).is_mismatch() );
}

TEST_CASE( "advanced pruning separates the two-minterm pair through distances" )
{
  auto const f = diagonal_pair_rep();
  auto const g = antipodal_pair_rep();
  auto const pf = compute_profile( f );
  auto const pg = compute_profile( g );
  prune_config cfg;
  cfg.rule = polarity_rule::onset_only;

  advanced_prune_stats stats;
  auto const v = advanced_prune( f, g, pf, pg, cfg, polarity::onset, &stats );
  REQUIRE( v.is_mismatch() );
  CHECK( *v.reason == reject_reason::hamming );
  CHECK( stats.domains_built_f == 1 );
  CHECK( stats.domains_built_g == 1 );

  CHECK( polarity_advanced_prune( f, g, pf, pg, cfg ).is_mismatch() );
}

TEST_CASE( "pruning never rejects a transform-related pair" )
{
  seeded_rng rng( 606 );
  prune_config cfg;
  for ( uint32_t n : {1u, 3u, 5u, 6u} )
  {
    for ( int iter = 0; iter < 40; ++iter )
    {
      auto const f = random_table( n, rng );
      auto const g = apply_transform( f, random_transform( n, rng ) );
      auto const pf = compute_profile( f );
      auto const pg = compute_profile( g );
      CHECK_FALSE( polarity_basic_prune( pf, pg, polarity_rule::minority ).is_mismatch() );
      for ( int max_iter : {1, 2, 3} )
      {
        cfg.max_iter = max_iter;
        CHECK_FALSE( polarity_advanced_prune( f, g, pf, pg, cfg ).is_mismatch() );
      }
    }
  }
}

TEST_CASE( "PN-restricted rules never reject a PN-related pair" )
{
  seeded_rng rng( 607 );
  prune_config cfg;
  for ( int iter = 0; iter < 40; ++iter )
  {
    auto const f = random_table( 5, rng );
    auto t = random_transform( 5, rng );
    t.output_neg = false;
    auto const g = apply_transform( f, t );
    auto const pf = compute_profile( f );
    auto const pg = compute_profile( g );
    for ( auto rule : {polarity_rule::onset_only, polarity_rule::offset_only} )
    {
      cfg.rule = rule;
      CHECK_FALSE( polarity_basic_prune( pf, pg, rule ).is_mismatch() );
      CHECK_FALSE( polarity_advanced_prune( f, g, pf, pg, cfg ).is_mismatch() );
    }
  }
}

TEST_CASE( "sampled soundness against the exact matcher" )
{
  seeded_rng rng( 608 );
  prune_config cfg;
  std::vector<truth_table> pool;
  for ( int i = 0; i < 40; ++i )
  {
    pool.push_back( random_table( 3, rng ) );
  }
  for ( auto const& f : pool )
  {
    for ( auto const& g : pool )
    {
      auto const pf = compute_profile( f );
      auto const pg = compute_profile( g );
      bool const pruned = polarity_basic_prune( pf, pg, polarity_rule::minority ).is_mismatch() ||
                          polarity_advanced_prune( f, g, pf, pg, cfg ).is_mismatch();
      if ( pruned )
      {
        CHECK_FALSE( brute_force_equivalent( f, g ).has_value() );
      }
    }
  }
}

TEST_CASE( "verdicts are deterministic" )
{
  auto const pf = compute_profile( diagonal_pair_rep() );
  auto const pg = compute_profile( antipodal_pair_rep() );
  auto const v1 = polarity_basic_prune( pf, pg, polarity_rule::minority );
  auto const v2 = polarity_basic_prune( pf, pg, polarity_rule::minority );
  CHECK( v1.is_mismatch() == v2.is_mismatch() );
  CHECK( v1.reason == v2.reason );
}

TEST_CASE( "arity mismatch is rejected" )
{
  auto const p3 = compute_profile( and_n( 3 ) );
  auto const p4 = compute_profile( and_n( 4 ) );
  CHECK_THROWS_AS( basic_prune( p3, p4, polarity::all ), std::invalid_argument );
  CHECK_THROWS_AS( polarity_basic_prune( p3, p4, polarity_rule::minority ),
                   std::invalid_argument );
}

TEST_SUITE_END();
