#include <npnmatch/generator.hpp>

#include <npnmatch/matcher.hpp>

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace npnmatch;
using namespace npnmatch::testing;

TEST_SUITE_BEGIN( "generator" );

TEST_CASE( "same seed, same stream" )
{
  gen_spec spec;
  spec.n = 6;
  spec.count = 50;
  spec.seed = 42;
  CHECK( gen_group1( spec ) == gen_group1( spec ) );

  spec.mode = gen_mode::group2;
  spec.n = 4;
  spec.class_count = 5;
  auto const a = gen_group2( spec );
  auto const b = gen_group2( spec );
  REQUIRE( a.size() == b.size() );
  for ( size_t i = 0; i < a.size(); ++i )
  {
    CHECK( a[i].tt == b[i].tt );
    CHECK( a[i].class_id == b[i].class_id );
  }
}

TEST_CASE( "first draws of the fixed engine are stable" )
{
  /* mt19937_64's output sequence is pinned by the standard; this guards the
   * cross-platform reproducibility of every seeded workload. */
  seeded_rng rng( 5489u );
  CHECK( rng.next() == 14514284786278117030ull );
  CHECK( rng.next() == 4620546740167642908ull );
}

TEST_CASE( "generated tables keep pad bits clear" )
{
  gen_spec spec;
  spec.n = 3;
  spec.count = 20;
  spec.seed = 7;
  for ( auto const& tt : gen_group1( spec ) )
  {
    CHECK( tt.arity() == 3 );
    CHECK( ( tt.words().back() & ~tt.last_word_mask() ) == 0 );
  }
}

TEST_CASE( "random three-variable functions span many classes" )
{
  gen_spec spec;
  spec.n = 3;
  spec.count = 256;
  spec.seed = 1;
  auto fns = gen_group1( spec );
  auto const part = classify( fns );
  CHECK( part.classes.size() >= 8 );
  CHECK( part.classes.size() <= 14 );
}

TEST_CASE( "minterm counts concentrate around half" )
{
  gen_spec spec;
  spec.n = 8;
  spec.count = 10000;
  spec.seed = 99;
  double sum = 0;
  for ( auto const& tt : gen_group1( spec ) )
  {
    sum += static_cast<double>( minterm_count( tt ) );
  }
  double const mean = sum / spec.count;
  /* per-function sd is 8; the mean of 10^4 draws sits within 3 sigma */
  double const sigma = 8.0 / std::sqrt( static_cast<double>( spec.count ) );
  CHECK( std::abs( mean - 128.0 ) < 3 * sigma );
}

TEST_CASE( "single planted class gives pairwise equivalent functions" )
{
  gen_spec spec;
  spec.mode = gen_mode::group2;
  spec.n = 4;
  spec.count = 12;
  spec.class_count = 1;
  spec.seed = 3;
  auto const fns = gen_group2( spec );
  match_session session;
  for ( size_t i = 1; i < fns.size(); ++i )
  {
    CHECK( fns[i].class_id == 0 );
    CHECK( session.match( fns[0].tt, fns[i].tt ).equivalent );
  }
}

TEST_CASE( "classification recovers the planted classes exactly" )
{
  gen_spec spec;
  spec.mode = gen_mode::group2;
  spec.n = 4;
  spec.count = 60;
  spec.class_count = 7;
  spec.seed = 11;
  auto const labeled = gen_group2( spec );

  std::vector<truth_table> fns;
  for ( auto const& lf : labeled )
  {
    fns.push_back( lf.tt );
  }
  auto const part = classify( fns );
  CHECK( part.classes.size() == spec.class_count );

  /* planted labels and recovered buckets agree as partitions */
  for ( size_t i = 0; i < fns.size(); ++i )
  {
    for ( size_t j = i + 1; j < fns.size(); ++j )
    {
      CHECK( ( labeled[i].class_id == labeled[j].class_id ) ==
             ( part.class_of[i] == part.class_of[j] ) );
    }
  }
}

TEST_CASE( "invalid specs are rejected" )
{
  gen_spec spec;
  spec.mode = gen_mode::group2;
  spec.n = 4;
  spec.count = 5;
  spec.class_count = 10;
  CHECK_THROWS_AS( gen_group2( spec ), std::invalid_argument );

  /* two variables admit only four classes */
  spec.n = 2;
  spec.count = 200;
  spec.class_count = 100;
  CHECK_THROWS_AS( gen_group2( spec ), std::invalid_argument );
}

TEST_SUITE_END();
