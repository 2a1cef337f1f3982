/*!
  \file generator.hpp
  \brief Seeded workload generators: random functions and planted NPN classes.
*/

#pragma once

#include "truth_table.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace npnmatch {

/*! \brief Deterministic random source.

  Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
  derives bounded draws by rejection, so streams are reproducible across
  platforms and standard libraries.
*/
class seeded_rng
{
public:
  explicit seeded_rng( uint64_t seed ) : engine_( seed ) {}

  uint64_t next() { return engine_(); }

  /*! Uniform draw from [0, bound); bound must be positive. */
  uint64_t below( uint64_t bound )
  {
    uint64_t const min = ( 0 - bound ) % bound;
    uint64_t r;
    do
    {
      r = next();
    } while ( r < min );
    return r % bound;
  }

  /*! Uniform draw from [0, 1). */
  double unit() { return static_cast<double>( next() >> 11 ) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

enum class gen_mode : uint8_t
{
  group1, /*!< fully random functions */
  group2  /*!< random transforms of a fixed set of base functions */
};

struct gen_spec
{
  uint32_t n = 5;
  uint32_t count = 100;
  gen_mode mode = gen_mode::group1;
  uint32_t class_count = 100;           /*!< group2: number of planted classes */
  double equivalent_pair_fraction = 0.15; /*!< pair workloads (see bench) */
  uint64_t seed = 1;
};

/*! \brief A uniformly random table: 2^n independent fair bits. */
truth_table random_table( uint32_t n, seeded_rng& rng );

/*! \brief A uniformly random NPN transform (Fisher-Yates permutation,
    uniform negation mask, fair output flip). */
npn_transform random_transform( uint32_t n, seeded_rng& rng );

/*! \brief Group 1: \p spec.count independent random functions. */
std::vector<truth_table> gen_group1( gen_spec const& spec );

struct labeled_function
{
  truth_table tt;
  uint32_t class_id;
};

/*! \brief Group 2: random NPN transforms of class_count planted bases.

  Bases are resampled until pairwise non-equivalent (checked by canonical
  form), so exactly class_count distinct classes are planted; every class
  receives at least one member.

  \throws std::invalid_argument when class_count exceeds count or the arity
          cannot supply enough distinct classes.
*/
std::vector<labeled_function> gen_group2( gen_spec const& spec );

} // namespace npnmatch
