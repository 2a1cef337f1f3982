#include "npnmatch/generator.hpp"

#include "npnmatch/canonical.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace npnmatch {

truth_table random_table( uint32_t n, seeded_rng& rng )
{
  truth_table tt( n );
  auto words = tt.words();
  for ( auto& w : words )
  {
    w = rng.next();
  }
  words.back() &= tt.last_word_mask();
  return tt;
}

npn_transform random_transform( uint32_t n, seeded_rng& rng )
{
  npn_transform t = identity_transform( n );
  for ( uint32_t i = n - 1; i > 0; --i )
  {
    auto const j = static_cast<uint32_t>( rng.below( i + 1 ) );
    std::swap( t.perm[i], t.perm[j] );
  }
  t.input_neg = static_cast<word_index>( rng.next() & ( ( uint64_t( 1 ) << n ) - 1 ) );
  t.output_neg = ( rng.next() & 1 ) != 0;
  return t;
}

std::vector<truth_table> gen_group1( gen_spec const& spec )
{
  seeded_rng rng( spec.seed );
  std::vector<truth_table> out;
  out.reserve( spec.count );
  for ( uint32_t i = 0; i < spec.count; ++i )
  {
    out.push_back( random_table( spec.n, rng ) );
  }
  return out;
}

std::vector<labeled_function> gen_group2( gen_spec const& spec )
{
  if ( spec.class_count == 0 || spec.class_count > spec.count )
  {
    throw std::invalid_argument( "group2 requires 1 <= class_count <= count" );
  }
  if ( spec.n > canonical_arity_cap )
  {
    throw std::invalid_argument( "group2 arity beyond canonicalization cap" );
  }

  seeded_rng rng( spec.seed );

  /* Base functions, resampled on NPN collision so the class count is exact. */
  std::vector<truth_table> bases;
  std::unordered_set<truth_table, truth_table_hash> seen;
  uint64_t attempts = 0;
  uint64_t const max_attempts = 200ull * spec.class_count + 1000;
  while ( bases.size() < spec.class_count )
  {
    if ( ++attempts > max_attempts )
    {
      throw std::invalid_argument( "class_count not reachable at this arity" );
    }
    auto candidate = random_table( spec.n, rng );
    if ( seen.insert( canonicalize( candidate ).canon ).second )
    {
      bases.push_back( std::move( candidate ) );
    }
  }

  std::vector<labeled_function> out;
  out.reserve( spec.count );
  for ( uint32_t i = 0; i < spec.count; ++i )
  {
    /* Cover every class once, then draw uniformly. */
    auto const id = i < spec.class_count ? i : static_cast<uint32_t>( rng.below( spec.class_count ) );
    out.push_back( {apply_transform( bases[id], random_transform( spec.n, rng ) ), id} );
  }
  return out;
}

} // namespace npnmatch
