#include "npnmatch/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace npnmatch {

namespace {

/* Lower bound on every completion of a partial variable assignment: the
 * block partition is already fixed, so sorting each block's bits zeros-first
 * bounds any shared ordering of the remaining variables from below. */
void block_lower_bound_into( truth_table const& t, uint32_t block_bits, truth_table& lb )
{
  auto const src = t.words();
  auto dst = lb.words();
  uint64_t const block_size = uint64_t( 1 ) << block_bits;

  if ( block_size >= 64 )
  {
    size_t const words_per_block = block_size / 64;
    for ( size_t b = 0; b < src.size(); b += words_per_block )
    {
      uint64_t ones = 0;
      for ( size_t j = 0; j < words_per_block; ++j )
      {
        ones += std::popcount( src[b + j] );
      }
      uint64_t const zeros = block_size - ones;
      for ( size_t j = 0; j < words_per_block; ++j )
      {
        uint64_t const lo = j * 64;
        if ( lo + 64 <= zeros )
        {
          dst[b + j] = 0;
        }
        else if ( lo >= zeros )
        {
          dst[b + j] = ~uint64_t( 0 );
        }
        else
        {
          dst[b + j] = ~uint64_t( 0 ) << ( zeros - lo );
        }
      }
    }
  }
  else
  {
    uint64_t const seg_mask = ( uint64_t( 1 ) << block_size ) - 1;
    uint64_t const valid = t.last_word_mask();
    for ( size_t i = 0; i < src.size(); ++i )
    {
      uint64_t w = 0;
      for ( uint32_t off = 0; off < 64; off += block_size )
      {
        if ( ( ( valid >> off ) & 1u ) == 0 )
        {
          break; /* pad region of a partial word */
        }
        auto const ones = static_cast<uint32_t>( std::popcount( ( src[i] >> off ) & seg_mask ) );
        if ( ones )
        {
          w |= ( ( seg_mask << ( block_size - ones ) ) & seg_mask ) << off;
        }
      }
      dst[i] = w;
    }
  }
}

/* Exact maximum number of leading zeros any variable ordering and negation
 * of the given subcube can produce.  The subcube of the block is described
 * by a word-index predicate plus an in-word bit pattern; free variables are
 * relative to the block.  A shared budget keeps adversarial inputs from
 * stalling the search; exhausting it returns an overestimate, which merely
 * disables the refinement. */
struct zero_prefix_probe
{
  std::span<uint64_t const> words;
  constexpr static std::array<uint64_t, 6> var_mask = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

  bool all_zero( uint64_t fix_mask, uint64_t fix_val, uint64_t pattern ) const
  {
    for ( size_t w = 0; w < words.size(); ++w )
    {
      if ( ( w & fix_mask ) == fix_val && ( words[w] & pattern ) )
      {
        return false;
      }
    }
    return true;
  }

  uint64_t run( std::array<uint8_t, max_arity>& free_vars, uint32_t free_count,
                uint64_t fix_mask, uint64_t fix_val, uint64_t pattern, int& budget ) const
  {
    uint64_t const size = uint64_t( 1 ) << free_count;
    if ( --budget < 0 )
    {
      return size; /* give up: overestimate disables the refinement */
    }
    if ( all_zero( fix_mask, fix_val, pattern ) )
    {
      return size;
    }
    if ( free_count == 0 )
    {
      return 0;
    }

    uint64_t const half = size / 2;
    uint64_t best = 0;
    /* A zero half places the ones entirely in the upper half; anything else
     * cannot reach `half`, so zero halves dominate when one exists. */
    bool have_zero_half = false;
    for ( uint32_t i = 0; i < free_count; ++i )
    {
      uint8_t const v = free_vars[i];
      for ( int s = 0; s < 2; ++s )
      {
        uint64_t sub_mask = fix_mask, sub_val = fix_val, sub_pattern = pattern;
        if ( v < 6 )
        {
          sub_pattern &= s ? var_mask[v] : ~var_mask[v];
        }
        else
        {
          sub_mask |= uint64_t( 1 ) << ( v - 6 );
          if ( s )
          {
            sub_val |= uint64_t( 1 ) << ( v - 6 );
          }
        }
        if ( !all_zero( sub_mask, sub_val, sub_pattern ) )
        {
          continue;
        }
        have_zero_half = true;
        /* recurse into the opposite half with v consumed */
        uint64_t opp_mask = fix_mask, opp_val = fix_val, opp_pattern = pattern;
        if ( v < 6 )
        {
          opp_pattern &= s ? ~var_mask[v] : var_mask[v];
        }
        else
        {
          opp_mask |= uint64_t( 1 ) << ( v - 6 );
          if ( !s )
          {
            opp_val |= uint64_t( 1 ) << ( v - 6 );
          }
        }
        std::swap( free_vars[i], free_vars[free_count - 1] );
        best = std::max( best,
                         half + run( free_vars, free_count - 1, opp_mask, opp_val, opp_pattern,
                                     budget ) );
        std::swap( free_vars[i], free_vars[free_count - 1] );
        if ( best >= size )
        {
          return best;
        }
        if ( budget < 0 )
        {
          return size; /* unexplored branches remain: stay an overestimate */
        }
      }
    }
    if ( have_zero_half )
    {
      return best;
    }

    /* No zero half anywhere: the prefix stays inside one half. */
    for ( uint32_t i = 0; i < free_count && best + 1 < half; ++i )
    {
      uint8_t const v = free_vars[i];
      for ( int s = 0; s < 2; ++s )
      {
        uint64_t sub_mask = fix_mask, sub_val = fix_val, sub_pattern = pattern;
        if ( v < 6 )
        {
          sub_pattern &= s ? var_mask[v] : ~var_mask[v];
        }
        else
        {
          sub_mask |= uint64_t( 1 ) << ( v - 6 );
          if ( s )
          {
            sub_val |= uint64_t( 1 ) << ( v - 6 );
          }
        }
        std::swap( free_vars[i], free_vars[free_count - 1] );
        best = std::max( best,
                         run( free_vars, free_count - 1, sub_mask, sub_val, sub_pattern, budget ) );
        std::swap( free_vars[i], free_vars[free_count - 1] );
        if ( budget < 0 )
        {
          return size; /* unexplored branches remain: stay an overestimate */
        }
      }
    }
    return best;
  }
};

/* Largest leading-zero run over all orderings of the table's first block. */
uint64_t max_zero_prefix( truth_table const& t, uint32_t block_bits, int budget )
{
  zero_prefix_probe probe;
  size_t const block_words = size_t( 1 ) << ( block_bits - 6 );
  probe.words = t.words().subspan( 0, block_words );
  std::array<uint8_t, max_arity> free_vars{};
  std::iota( free_vars.begin(), free_vars.begin() + block_bits, uint8_t( 0 ) );
  return probe.run( free_vars, block_bits, 0, 0, ~uint64_t( 0 ), budget );
}

/* Sharpening for large first blocks: the sorted bound pretends all zeros can
 * lead, but no completion can start with more zeros than the block's exact
 * maximum run, so a mandatory one goes right after it. */
void refine_first_block_bound( truth_table const& t, uint32_t block_bits, truth_table& bound )
{
  if ( block_bits < 6 )
  {
    return;
  }
  size_t const block_words = size_t( 1 ) << ( block_bits - 6 );
  uint64_t ones = 0;
  for ( size_t j = 0; j < block_words; ++j )
  {
    ones += std::popcount( t.words()[j] );
  }
  uint64_t const zeros = ( uint64_t( 1 ) << block_bits ) - ones;
  int budget = 512;
  uint64_t const reach = max_zero_prefix( t, block_bits, budget );
  if ( reach >= zeros )
  {
    return;
  }
  auto w = bound.words();
  for ( size_t j = 0; j < block_words; ++j )
  {
    w[j] = 0;
  }
  w[reach >> 6] = uint64_t( 1 ) << ( reach & 63u );
}

struct candidate_slot
{
  truth_table table;
  truth_table bound;
  uint8_t source_pos = 0;
  bool sign = false;
};

struct search_state
{
  uint32_t n = 0;
  bool have_best = false;
  truth_table best;
  npn_transform best_witness;
  /* one candidate arena per depth, so recursion never reallocates */
  std::vector<std::vector<candidate_slot>> scratch;
  std::vector<std::vector<uint8_t>> order;
};

void search( search_state& st, truth_table const& t, npn_transform const& acc, uint32_t depth )
{
  uint32_t const n = st.n;
  if ( depth == n )
  {
    if ( !st.have_best || text_order_less( t, st.best ) )
    {
      st.best = t;
      st.best_witness = acc;
      st.have_best = true;
    }
    return;
  }

  /* Place the next most significant index variable. */
  uint32_t const target = n - 1 - depth;
  auto& slots = st.scratch[depth];
  auto& order = st.order[depth];

  for ( uint32_t p = 0; p <= target; ++p )
  {
    for ( int sign = 0; sign < 2; ++sign )
    {
      auto& slot = slots[2 * p + sign];
      slot.table = t;
      slot.source_pos = static_cast<uint8_t>( p );
      slot.sign = sign != 0;
      if ( sign )
      {
        flip_variable( slot.table, p );
      }
      if ( p != target )
      {
        swap_variables( slot.table, p, target );
      }
      block_lower_bound_into( slot.table, target, slot.bound );
      refine_first_block_bound( slot.table, target, slot.bound );
    }
  }

  uint32_t const count = 2 * ( target + 1 );
  order.resize( count );
  std::iota( order.begin(), order.end(), uint8_t( 0 ) );
  std::sort( order.begin(), order.end(), [&]( uint8_t a, uint8_t b ) {
    return text_order_less( slots[a].bound, slots[b].bound );
  } );

  for ( uint32_t rank = 0; rank < count; ++rank )
  {
    auto const& slot = slots[order[rank]];
    if ( st.have_best && !text_order_less( slot.bound, st.best ) )
    {
      break; /* bounds are sorted; nothing further can improve */
    }
    /* accumulate the step transform only for explored children */
    npn_transform step = identity_transform( n );
    if ( slot.sign )
    {
      step.input_neg = word_index( 1 ) << slot.source_pos;
    }
    if ( slot.source_pos != target )
    {
      npn_transform swap_step = identity_transform( n );
      std::swap( swap_step.perm[slot.source_pos], swap_step.perm[target] );
      step = compose( swap_step, step );
    }
    search( st, slot.table, compose( step, acc ), depth + 1 );
  }
}

} // namespace

canonical_form canonicalize( truth_table const& tt )
{
  uint32_t const n = tt.arity();
  if ( n < 1 || n > canonical_arity_cap )
  {
    throw std::invalid_argument( "arity beyond canonicalization cap" );
  }

  search_state st;
  st.n = n;
  st.scratch.resize( n );
  st.order.resize( n );
  for ( uint32_t depth = 0; depth < n; ++depth )
  {
    auto& slots = st.scratch[depth];
    slots.resize( 2 * ( n - depth ) );
    for ( auto& slot : slots )
    {
      slot.table = truth_table( n );
      slot.bound = truth_table( n );
    }
  }

  uint64_t const ones = minterm_count( tt );
  int const first = 2 * ones <= tt.num_bits() ? 0 : 1;
  truth_table root_bound( n );
  for ( int o : {first, 1 - first} )
  {
    truth_table start = tt;
    npn_transform acc = identity_transform( n );
    if ( o )
    {
      complement( start );
      acc.output_neg = true;
    }
    if ( st.have_best )
    {
      block_lower_bound_into( start, n, root_bound );
      refine_first_block_bound( start, n, root_bound );
      if ( !text_order_less( root_bound, st.best ) )
      {
        continue;
      }
    }
    search( st, start, acc, 0 );
  }

  return {st.best, st.best_witness};
}

std::optional<npn_transform> exact_equivalent( truth_table const& f, truth_table const& g )
{
  if ( f.arity() != g.arity() )
  {
    throw std::invalid_argument( "arity mismatch" );
  }
  auto const cf = canonicalize( f );
  auto const cg = canonicalize( g );
  if ( cf.canon != cg.canon )
  {
    return std::nullopt;
  }
  /* f --cf--> canon --inverse(cg)--> g */
  return compose( inverse( cg.witness ), cf.witness );
}

std::optional<npn_transform> brute_force_equivalent( truth_table const& f, truth_table const& g )
{
  if ( f.arity() != g.arity() )
  {
    throw std::invalid_argument( "arity mismatch" );
  }
  uint32_t const n = f.arity();
  if ( n > brute_force_arity_cap )
  {
    throw std::invalid_argument( "arity beyond brute-force oracle cap" );
  }

  npn_transform t = identity_transform( n );
  std::vector<uint8_t> perm = t.perm;
  do
  {
    t.perm = perm;
    for ( word_index m = 0; m < ( word_index( 1 ) << n ); ++m )
    {
      t.input_neg = m;
      for ( int o = 0; o < 2; ++o )
      {
        t.output_neg = o != 0;
        if ( apply_transform( f, t ) == g )
        {
          return t;
        }
      }
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );

  return std::nullopt;
}

} // namespace npnmatch
