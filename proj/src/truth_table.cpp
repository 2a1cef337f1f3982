#include "npnmatch/truth_table.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace npnmatch {

namespace {

/* Projection masks: bit set where the index has variable v = 1, v < 6. */
constexpr std::array<uint64_t, 6> var_mask = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

uint32_t arity_from_bit_count( size_t bits )
{
  if ( bits < 2 || !std::has_single_bit( bits ) )
  {
    throw std::invalid_argument( "truth table length must be a power of two >= 2" );
  }
  auto const n = static_cast<uint32_t>( std::countr_zero( bits ) );
  if ( n > max_arity )
  {
    throw std::invalid_argument( "arity exceeds supported maximum" );
  }
  return n;
}

int hex_digit_value( char c )
{
  if ( c >= '0' && c <= '9' )
    return c - '0';
  if ( c >= 'a' && c <= 'f' )
    return c - 'a' + 10;
  if ( c >= 'A' && c <= 'F' )
    return c - 'A' + 10;
  return -1;
}

char hex_digit( int v )
{
  return v < 10 ? static_cast<char>( '0' + v ) : static_cast<char>( 'a' + v - 10 );
}

} // namespace

truth_table::truth_table( uint32_t n ) : n_( n )
{
  if ( n < 1 || n > max_arity )
  {
    throw std::invalid_argument( "arity out of range" );
  }
  words_.assign( n >= 6 ? ( size_t( 1 ) << ( n - 6 ) ) : 1, 0 );
}

npn_transform identity_transform( uint32_t n )
{
  npn_transform t;
  t.perm.resize( n );
  std::iota( t.perm.begin(), t.perm.end(), uint8_t( 0 ) );
  return t;
}

word_index permute_word( word_index w, std::span<uint8_t const> perm )
{
  word_index r = 0;
  for ( size_t i = 0; i < perm.size(); ++i )
  {
    r |= ( ( w >> perm[i] ) & 1u ) << i;
  }
  return r;
}

npn_transform compose( npn_transform const& second, npn_transform const& first )
{
  assert( first.arity() == second.arity() );
  auto const n = first.arity();

  /* g2(x) = o2^o1 ^ f(G1(G2(x ^ m2) ^ m1)) with gather G_p(w)_i = w_{p[i]};
   * the combined gather permutation is p12[i] = p2[p1[i]] and the folded mask
   * is m2 ^ Q(m1) with Q(w)_i = w_{p1[p12^-1[i]]}. */
  npn_transform t;
  t.perm.resize( n );
  for ( uint32_t i = 0; i < n; ++i )
  {
    t.perm[i] = second.perm[first.perm[i]];
  }
  std::vector<uint8_t> inv_perm( n );
  for ( uint32_t i = 0; i < n; ++i )
  {
    inv_perm[t.perm[i]] = static_cast<uint8_t>( i );
  }
  word_index q_m1 = 0;
  for ( uint32_t j = 0; j < n; ++j )
  {
    q_m1 |= ( ( first.input_neg >> first.perm[inv_perm[j]] ) & 1u ) << j;
  }
  t.input_neg = second.input_neg ^ q_m1;
  t.output_neg = first.output_neg ^ second.output_neg;
  return t;
}

npn_transform inverse( npn_transform const& t )
{
  auto const n = t.arity();
  npn_transform r;
  r.perm.resize( n );
  for ( uint32_t i = 0; i < n; ++i )
  {
    r.perm[t.perm[i]] = static_cast<uint8_t>( i );
  }
  /* inverse mask = P(m): bit i = m_{perm[i]}. */
  r.input_neg = permute_word( t.input_neg, t.perm );
  r.output_neg = t.output_neg;
  return r;
}

truth_table parse_truth_table( std::string_view text, table_format format )
{
  if ( format == table_format::binary )
  {
    auto const n = arity_from_bit_count( text.size() );
    truth_table tt( n );
    for ( size_t p = 0; p < text.size(); ++p )
    {
      char const c = text[p];
      if ( c != '0' && c != '1' )
      {
        throw std::invalid_argument( "illegal character in binary truth table" );
      }
      if ( c == '1' )
      {
        tt.set_bit( static_cast<word_index>( p ), true );
      }
    }
    return tt;
  }

  auto const n = arity_from_bit_count( text.size() * 4 );
  if ( n < 2 )
  {
    throw std::invalid_argument( "hex truth tables require arity >= 2" );
  }
  truth_table tt( n );
  for ( size_t p = 0; p < text.size(); ++p )
  {
    int const v = hex_digit_value( text[p] );
    if ( v < 0 )
    {
      throw std::invalid_argument( "illegal character in hex truth table" );
    }
    for ( int j = 0; j < 4; ++j )
    {
      if ( ( v >> ( 3 - j ) ) & 1 )
      {
        tt.set_bit( static_cast<word_index>( 4 * p + j ), true );
      }
    }
  }
  return tt;
}

std::string to_binary_string( truth_table const& tt )
{
  std::string s( tt.num_bits(), '0' );
  for ( uint64_t i = 0; i < tt.num_bits(); ++i )
  {
    if ( tt.bit( static_cast<word_index>( i ) ) )
    {
      s[i] = '1';
    }
  }
  return s;
}

std::string to_hex_string( truth_table const& tt )
{
  if ( tt.arity() < 2 )
  {
    throw std::invalid_argument( "hex rendering requires arity >= 2" );
  }
  std::string s( tt.num_bits() / 4, '0' );
  for ( size_t p = 0; p < s.size(); ++p )
  {
    int v = 0;
    for ( int j = 0; j < 4; ++j )
    {
      v |= tt.bit( static_cast<word_index>( 4 * p + j ) ) << ( 3 - j );
    }
    s[p] = hex_digit( v );
  }
  return s;
}

std::string to_string( truth_table const& tt, table_format format )
{
  return format == table_format::binary ? to_binary_string( tt ) : to_hex_string( tt );
}

bool evaluate( truth_table const& tt, word_index w )
{
  if ( w >= tt.num_bits() )
  {
    throw std::out_of_range( "input word out of range" );
  }
  return tt.bit( w );
}

uint64_t minterm_count( truth_table const& tt )
{
  uint64_t count = 0;
  for ( uint64_t w : tt.words() )
  {
    count += std::popcount( w );
  }
  return count;
}

void flip_variable( truth_table& tt, uint32_t var )
{
  assert( var < tt.arity() );
  auto words = tt.words();
  if ( var < 6 )
  {
    uint64_t const m = var_mask[var];
    uint32_t const shift = 1u << var;
    for ( auto& w : words )
    {
      w = ( ( w & m ) >> shift ) | ( ( w & ~m ) << shift );
    }
    words.back() &= tt.last_word_mask();
  }
  else
  {
    size_t const stride = size_t( 1 ) << ( var - 6 );
    for ( size_t i = 0; i < words.size(); ++i )
    {
      if ( !( i & stride ) )
      {
        std::swap( words[i], words[i | stride] );
      }
    }
  }
}

void swap_variables( truth_table& tt, uint32_t var_a, uint32_t var_b )
{
  assert( var_a < tt.arity() && var_b < tt.arity() );
  if ( var_a == var_b )
  {
    return;
  }
  auto const a = std::min( var_a, var_b );
  auto const b = std::max( var_a, var_b );
  auto words = tt.words();

  if ( b < 6 )
  {
    /* Exchange positions (a=1,b=0) with (a=0,b=1): distance 2^b - 2^a. */
    uint64_t const lo = var_mask[a] & ~var_mask[b];
    uint64_t const hi = ~var_mask[a] & var_mask[b];
    uint32_t const shift = ( 1u << b ) - ( 1u << a );
    for ( auto& w : words )
    {
      w = ( w & ~( lo | hi ) ) | ( ( w & lo ) << shift ) | ( ( w & hi ) >> shift );
    }
  }
  else if ( a >= 6 )
  {
    size_t const sa = size_t( 1 ) << ( a - 6 );
    size_t const sb = size_t( 1 ) << ( b - 6 );
    for ( size_t i = 0; i < words.size(); ++i )
    {
      if ( ( i & sa ) && !( i & sb ) )
      {
        std::swap( words[i], words[( i ^ sa ) | sb] );
      }
    }
  }
  else
  {
    /* a within a word, b across words: exchange the a=1 half of the low word
     * with the a=0 half of its partner. */
    uint64_t const m = var_mask[a];
    uint32_t const shift = 1u << a;
    size_t const sb = size_t( 1 ) << ( b - 6 );
    for ( size_t i = 0; i < words.size(); ++i )
    {
      if ( !( i & sb ) )
      {
        uint64_t const w_lo = words[i];
        uint64_t const w_hi = words[i | sb];
        words[i] = ( w_lo & ~m ) | ( ( w_hi & ~m ) << shift );
        words[i | sb] = ( w_hi & m ) | ( ( w_lo & m ) >> shift );
      }
    }
  }
}

void complement( truth_table& tt )
{
  auto words = tt.words();
  for ( auto& w : words )
  {
    w = ~w;
  }
  words.back() &= tt.last_word_mask();
}

truth_table apply_transform( truth_table const& tt, npn_transform const& t )
{
  if ( t.arity() != tt.arity() )
  {
    throw std::invalid_argument( "transform arity mismatch" );
  }
  auto const n = tt.arity();
  truth_table result = tt;

  /* g(x) = o ^ f(P(x ^ m)): realize P as a sequence of transpositions first;
   * the negation mask applies in the permuted frame, so flips come after.
   * Variable v of the table must end up at position perm[v], so position i
   * receives the variable that perm maps to i. */
  std::vector<uint8_t> inv_perm( n );
  for ( uint32_t i = 0; i < n; ++i )
  {
    inv_perm[t.perm[i]] = static_cast<uint8_t>( i );
  }
  std::vector<uint8_t> pos( n );    /* current position of original variable */
  std::vector<uint8_t> var_at( n ); /* original variable at each position */
  std::iota( pos.begin(), pos.end(), uint8_t( 0 ) );
  std::iota( var_at.begin(), var_at.end(), uint8_t( 0 ) );
  for ( uint32_t i = 0; i < n; ++i )
  {
    uint8_t const want = inv_perm[i];
    uint8_t const from = pos[want];
    if ( from != i )
    {
      swap_variables( result, from, i );
      uint8_t const displaced = var_at[i];
      std::swap( var_at[i], var_at[from] );
      pos[displaced] = from;
      pos[want] = static_cast<uint8_t>( i );
    }
  }

  for ( uint32_t v = 0; v < n; ++v )
  {
    if ( ( t.input_neg >> v ) & 1u )
    {
      flip_variable( result, v );
    }
  }

  if ( t.output_neg )
  {
    complement( result );
  }
  return result;
}

int text_order_compare( truth_table const& a, truth_table const& b )
{
  assert( a.arity() == b.arity() );
  auto const wa = a.words();
  auto const wb = b.words();
  for ( size_t i = 0; i < wa.size(); ++i )
  {
    uint64_t const d = wa[i] ^ wb[i];
    if ( d )
    {
      auto const bit = std::countr_zero( d );
      return ( ( wa[i] >> bit ) & 1u ) ? 1 : -1;
    }
  }
  return 0;
}

} // namespace npnmatch
