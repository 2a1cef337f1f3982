#include "npnmatch/pruning.hpp"

#include <stdexcept>

namespace npnmatch {

namespace {

struct profile_view
{
  uint32_t s;
  std::array<uint64_t, max_arity + 1> const* hist;
};

profile_view select_view( sensitivity_profile const& p, polarity pol )
{
  switch ( pol )
  {
  case polarity::onset:
    return {p.s1, &p.osv1};
  case polarity::offset:
    return {p.s0, &p.osv0};
  default:
    return {p.s, &p.osv};
  }
}

uint64_t hist_sum( std::array<uint64_t, max_arity + 1> const& hist, uint32_t n )
{
  uint64_t sum = 0;
  for ( uint32_t k = 0; k <= n; ++k )
  {
    sum += uint64_t( k ) * hist[k];
  }
  return sum;
}

void check_arity( uint32_t a, uint32_t b )
{
  if ( a != b )
  {
    throw std::invalid_argument( "pruning profiles of different arity" );
  }
}

/* The pipeline's polarity-selected pass compares only the scalar signatures
 * of the chosen polarity (max and exact sum); the histogram comparison is
 * left to the unrestricted pass that follows.  Matches the published
 * collision counts, which a joint histogram comparison undershoots by more
 * than an order of magnitude. */
prune_verdict scalar_prune( sensitivity_profile const& pf, sensitivity_profile const& pg,
                            polarity pol_f, polarity pol_g )
{
  auto const vf = select_view( pf, pol_f );
  auto const vg = select_view( pg, pol_g );
  if ( vf.s != vg.s )
  {
    return prune_verdict::mismatch( reject_reason::sensitivity );
  }
  if ( hist_sum( *vf.hist, pf.arity ) != hist_sum( *vg.hist, pg.arity ) )
  {
    return prune_verdict::mismatch( reject_reason::average );
  }
  return prune_verdict::unknown();
}

polarity opposite( polarity pol )
{
  return pol == polarity::onset ? polarity::offset : polarity::onset;
}

/* Advanced comparison with an independent polarity per side; the public
 * single-polarity entry point and the crossed output-negation pairing both
 * reduce to this. */
prune_verdict advanced_prune_sides( truth_table const& f, truth_table const& g,
                                    sensitivity_profile const& pf, sensitivity_profile const& pg,
                                    prune_config const& cfg, polarity pol_f, polarity pol_g,
                                    advanced_prune_stats* stats )
{
  check_arity( f.arity(), g.arity() );
  auto const view = select_view( pf, pol_f );
  uint32_t const n = pf.arity;

  /* Both sides must enumerate the same level sequence; when the histograms
   * already disagree the pair is separable without building any domain. */
  if ( *view.hist != *select_view( pg, pol_g ).hist )
  {
    return prune_verdict::mismatch( reject_reason::osv );
  }

  int iterations = 0;
  for ( int k = static_cast<int>( n ); k >= 0 && iterations < cfg.max_iter; --k )
  {
    if ( ( *view.hist )[k] == 0 )
    {
      continue;
    }
    ++iterations;
    auto const df = compute_k_domain( f, static_cast<uint32_t>( k ), pol_f );
    if ( stats )
    {
      ++stats->domains_built_f;
    }
    auto const dg = compute_k_domain( g, static_cast<uint32_t>( k ), pol_g );
    if ( stats )
    {
      ++stats->domains_built_g;
    }
    switch ( compare_k_invariants( df, dg ) )
    {
    case k_comparison::differ_member_count:
      return prune_verdict::mismatch( reject_reason::osv );
    case k_comparison::differ_edge_count:
      return prune_verdict::mismatch( reject_reason::edge_count );
    case k_comparison::differ_hamming:
      return prune_verdict::mismatch( reject_reason::hamming );
    case k_comparison::indistinguished:
      break;
    }
  }
  return prune_verdict::unknown();
}

} // namespace

char const* to_string( reject_reason r )
{
  switch ( r )
  {
  case reject_reason::minterm:
    return "minterm";
  case reject_reason::sensitivity:
    return "s";
  case reject_reason::average:
    return "average";
  case reject_reason::osv:
    return "osv";
  case reject_reason::edge_count:
    return "edge_count";
  case reject_reason::hamming:
    return "hamming";
  }
  return "?";
}

prune_verdict basic_prune( sensitivity_profile const& pf, sensitivity_profile const& pg,
                           polarity pol )
{
  check_arity( pf.arity, pg.arity );
  auto const vf = select_view( pf, pol );
  auto const vg = select_view( pg, pol );

  if ( vf.s != vg.s )
  {
    return prune_verdict::mismatch( reject_reason::sensitivity );
  }
  if ( hist_sum( *vf.hist, pf.arity ) != hist_sum( *vg.hist, pg.arity ) )
  {
    return prune_verdict::mismatch( reject_reason::average );
  }
  if ( *vf.hist != *vg.hist )
  {
    return prune_verdict::mismatch( reject_reason::osv );
  }
  return prune_verdict::unknown();
}

prune_verdict advanced_prune( truth_table const& f, truth_table const& g,
                              sensitivity_profile const& pf, sensitivity_profile const& pg,
                              prune_config const& cfg, polarity pol,
                              advanced_prune_stats* stats )
{
  return advanced_prune_sides( f, g, pf, pg, cfg, pol, pol, stats );
}

prune_verdict polarity_basic_prune( sensitivity_profile const& pf, sensitivity_profile const& pg,
                                    polarity_rule rule )
{
  check_arity( pf.arity, pg.arity );
  if ( rule == polarity_rule::onset_only )
  {
    return basic_prune( pf, pg, polarity::onset );
  }
  if ( rule == polarity_rule::offset_only )
  {
    return basic_prune( pf, pg, polarity::offset );
  }

  uint64_t const total = uint64_t( 1 ) << pf.arity;
  uint64_t const half = total / 2;
  bool const aligned = pf.onset_count == pg.onset_count;
  bool const crossed = pf.onset_count == total - pg.onset_count;

  if ( !aligned && !crossed )
  {
    return prune_verdict::mismatch( reject_reason::minterm );
  }

  if ( aligned && crossed )
  {
    /* Balanced: equivalence may hold with or without output negation, so
     * reject only when both pairings mismatch. */
    auto const direct = scalar_prune( pf, pg, polarity::onset, polarity::onset );
    if ( direct.is_mismatch() )
    {
      auto const negated = scalar_prune( pf, pg, polarity::onset, polarity::offset );
      if ( negated.is_mismatch() )
      {
        return direct;
      }
    }
  }
  else
  {
    /* Counts may force an output negation, in which case f's minority side
     * pairs with the opposite side of g. */
    auto const pol_f = pf.onset_count < half ? polarity::onset : polarity::offset;
    auto const pol_g = aligned ? pol_f : opposite( pol_f );
    if ( auto const v = scalar_prune( pf, pg, pol_f, pol_g ); v.is_mismatch() )
    {
      return v;
    }
  }

  /* Unrestricted signatures are invariant under output negation. */
  return basic_prune( pf, pg, polarity::all );
}

prune_verdict polarity_advanced_prune( truth_table const& f, truth_table const& g,
                                       sensitivity_profile const& pf,
                                       sensitivity_profile const& pg, prune_config const& cfg )
{
  check_arity( pf.arity, pg.arity );
  if ( cfg.rule == polarity_rule::onset_only )
  {
    return advanced_prune( f, g, pf, pg, cfg, polarity::onset );
  }
  if ( cfg.rule == polarity_rule::offset_only )
  {
    return advanced_prune( f, g, pf, pg, cfg, polarity::offset );
  }

  uint64_t const total = uint64_t( 1 ) << pf.arity;
  uint64_t const half = total / 2;
  bool const aligned = pf.onset_count == pg.onset_count;
  bool const crossed = pf.onset_count == total - pg.onset_count;

  if ( !aligned && !crossed )
  {
    return prune_verdict::mismatch( reject_reason::minterm );
  }

  if ( aligned && crossed )
  {
    auto const direct = advanced_prune_sides( f, g, pf, pg, cfg, polarity::onset, polarity::onset, nullptr );
    if ( direct.is_mismatch() )
    {
      auto const negated =
          advanced_prune_sides( f, g, pf, pg, cfg, polarity::onset, polarity::offset, nullptr );
      if ( negated.is_mismatch() )
      {
        return direct;
      }
    }
  }
  else
  {
    auto const pol_f = pf.onset_count < half ? polarity::onset : polarity::offset;
    auto const pol_g = aligned ? pol_f : opposite( pol_f );
    if ( auto const v = advanced_prune_sides( f, g, pf, pg, cfg, pol_f, pol_g, nullptr );
         v.is_mismatch() )
    {
      return v;
    }
  }

  return advanced_prune_sides( f, g, pf, pg, cfg, polarity::all, polarity::all, nullptr );
}

} // namespace npnmatch
