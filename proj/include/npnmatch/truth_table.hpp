/*!
  \file truth_table.hpp
  \brief Packed truth tables of n-variable Boolean functions and NPN transforms.

  A function f on n variables is stored as 2^n bits packed into 64-bit words.
  Bit i of the table is f evaluated on the input assignment whose binary code
  is i, with variable x1 mapped to the least-significant bit of the index.
  Pad bits beyond 2^n are kept zero.
*/

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace npnmatch {

/*! Largest supported arity: tables up to 2^20 bits (1 Mi-word at 64-bit packing). */
inline constexpr uint32_t max_arity = 20;

/*! An input assignment, interpreted as (x1,...,xn) with x1 in the low bit. */
using word_index = uint32_t;

enum class table_format : uint8_t
{
  binary,
  hex
};

class truth_table
{
public:
  truth_table() = default;

  /*! \brief Constructs the constant-0 function on \p n variables. */
  explicit truth_table( uint32_t n );

  uint32_t arity() const { return n_; }
  uint64_t num_bits() const { return uint64_t( 1 ) << n_; }
  uint64_t num_words() const { return words_.size(); }

  bool bit( word_index i ) const
  {
    return ( words_[i >> 6] >> ( i & 63u ) ) & 1u;
  }

  void set_bit( word_index i, bool value )
  {
    uint64_t const mask = uint64_t( 1 ) << ( i & 63u );
    if ( value )
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::span<uint64_t const> words() const { return words_; }
  std::span<uint64_t> words() { return words_; }

  /*! Mask of valid bits in the last (possibly partial) word. */
  uint64_t last_word_mask() const
  {
    return n_ >= 6 ? ~uint64_t( 0 ) : ( uint64_t( 1 ) << num_bits() ) - 1;
  }

  bool operator==( truth_table const& other ) const = default;

private:
  uint32_t n_ = 0;
  std::vector<uint64_t> words_;
};

/*! \brief An element of the NPN transform group acting on n-variable functions.

  Applying t = (perm, input_neg, output_neg) to f yields g with

    g(x) = output_neg XOR f( y ),  y_i = (x XOR input_neg)_{perm[i]}

  i.e. input i of f is fed from (optionally negated) variable perm[i] of g.
  All indices are 0-based.
*/
struct npn_transform
{
  std::vector<uint8_t> perm;
  uint32_t input_neg = 0;
  bool output_neg = false;

  uint32_t arity() const { return static_cast<uint32_t>( perm.size() ); }

  bool operator==( npn_transform const& other ) const = default;
};

/*! \brief The identity transform on \p n variables. */
npn_transform identity_transform( uint32_t n );

/*! \brief Transform equal to applying \p first, then \p second. */
npn_transform compose( npn_transform const& second, npn_transform const& first );

/*! \brief The group inverse: compose(inverse(t), t) is the identity. */
npn_transform inverse( npn_transform const& t );

/*! Applies a permutation to an input word: result bit i = bit perm[i] of w. */
word_index permute_word( word_index w, std::span<uint8_t const> perm );

/*! \brief Parses a truth table from text.

  Text position p (0-based, left to right) carries the value at input index p;
  the leftmost character is f(0...0).  Hex characters cover four consecutive
  indices each, leftmost index in the high bit of the nibble.

  \throws std::invalid_argument on bad length, illegal characters, or arity
          beyond ::max_arity.
*/
truth_table parse_truth_table( std::string_view text, table_format format );

std::string to_binary_string( truth_table const& tt );

/*! Hex rendering; requires arity >= 2. */
std::string to_hex_string( truth_table const& tt );

std::string to_string( truth_table const& tt, table_format format );

/*! \brief Returns bit \p w of \p tt, i.e. f evaluated on assignment \p w. */
bool evaluate( truth_table const& tt, word_index w );

/*! \brief Number of onset minterms |f|. */
uint64_t minterm_count( truth_table const& tt );

/* In-place table operations; these are the masked shift/XOR primitives that
 * general transforms decompose into. */
void flip_variable( truth_table& tt, uint32_t var );
void swap_variables( truth_table& tt, uint32_t var_a, uint32_t var_b );
void complement( truth_table& tt );

/*! \brief Applies an NPN transform, returning the transformed function.

  \throws std::invalid_argument when arities disagree.
*/
truth_table apply_transform( truth_table const& tt, npn_transform const& t );

/*! \brief Three-way comparison in text order.

  Position 0 (the leftmost rendered character) is most significant, so this
  agrees with lexicographic comparison of the rendered strings.
  Returns negative / zero / positive.
*/
int text_order_compare( truth_table const& a, truth_table const& b );

inline bool text_order_less( truth_table const& a, truth_table const& b )
{
  return text_order_compare( a, b ) < 0;
}

struct truth_table_hash
{
  size_t operator()( truth_table const& tt ) const
  {
    uint64_t h = 0xcbf29ce484222325ull ^ tt.arity();
    for ( uint64_t w : tt.words() )
    {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<size_t>( h );
  }
};

} // namespace npnmatch
