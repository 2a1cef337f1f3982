#include "npnmatch/matcher.hpp"

#include <chrono>
#include <stdexcept>

namespace npnmatch {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since( clock_type::time_point start )
{
  return std::chrono::duration<double>( clock_type::now() - start ).count();
}

} // namespace

char const* to_string( match_phase p )
{
  switch ( p )
  {
  case match_phase::p1:
    return "P1";
  case match_phase::p2:
    return "P2";
  case match_phase::p3:
    return "P3";
  case match_phase::p4:
    return "P4";
  }
  return "?";
}

sensitivity_profile const& match_session::profile_of( truth_table const& tt )
{
  auto it = profiles_.find( tt );
  if ( it == profiles_.end() )
  {
    it = profiles_.emplace( tt, compute_profile( tt, width_ ) ).first;
  }
  return it->second;
}

canonical_form const& match_session::canon_of( truth_table const& tt )
{
  auto it = canons_.find( tt );
  if ( it == canons_.end() )
  {
    it = canons_.emplace( tt, canonicalize( tt ) ).first;
  }
  return it->second;
}

match_outcome match_session::match( truth_table const& f, truth_table const& g )
{
  if ( f.arity() != g.arity() )
  {
    throw std::invalid_argument( "matching functions of different arity" );
  }

  match_outcome out;

  if ( mode_ == pipeline_mode::full )
  {
    /* Phase 1: minterm signature, both output polarities. */
    auto t0 = clock_type::now();
    uint64_t const cf = minterm_count( f );
    uint64_t const cg = minterm_count( g );
    bool const p1_pass = cf == cg || cf == f.num_bits() - cg;
    out.phase_seconds[0] = seconds_since( t0 );
    if ( !p1_pass )
    {
      out.resolved_phase = match_phase::p1;
      out.reject = reject_reason::minterm;
      return out;
    }

    /* Phase 2: basic sensitivity signatures. */
    t0 = clock_type::now();
    sensitivity_profile local_pf, local_pg;
    if ( !cache_ )
    {
      local_pf = compute_profile( f, width_ );
      local_pg = compute_profile( g, width_ );
    }
    auto const& pf = cache_ ? profile_of( f ) : local_pf;
    auto const& pg = cache_ ? profile_of( g ) : local_pg;
    auto const v2 = polarity_basic_prune( pf, pg, cfg_.rule );
    out.phase_seconds[1] = seconds_since( t0 );
    if ( v2.is_mismatch() )
    {
      out.resolved_phase = match_phase::p2;
      out.reject = v2.reason;
      return out;
    }
    out.collided_after_p2 = true;

    /* Phase 3 (optional): advanced sensitivity signatures. */
    if ( cfg_.use_advanced )
    {
      t0 = clock_type::now();
      auto const v3 = polarity_advanced_prune( f, g, pf, pg, cfg_ );
      out.phase_seconds[2] = seconds_since( t0 );
      if ( v3.is_mismatch() )
      {
        out.resolved_phase = match_phase::p3;
        out.reject = v3.reason;
        return out;
      }
    }
    out.collided_after_p3 = true;
  }
  else
  {
    out.collided_after_p2 = true;
    out.collided_after_p3 = true;
  }

  /* Phase 4: exact decision via canonical forms. */
  auto t0 = clock_type::now();
  canonical_form local_cf, local_cg;
  if ( !cache_ )
  {
    local_cf = canonicalize( f );
    local_cg = canonicalize( g );
  }
  auto const& cf4 = cache_ ? canon_of( f ) : local_cf;
  auto const& cg4 = cache_ ? canon_of( g ) : local_cg;
  out.resolved_phase = match_phase::p4;
  if ( cf4.canon == cg4.canon )
  {
    out.equivalent = true;
    out.witness = compose( inverse( cg4.witness ), cf4.witness );
  }
  out.phase_seconds[3] = seconds_since( t0 );
  return out;
}

match_outcome match_pair( truth_table const& f, truth_table const& g, prune_config const& cfg )
{
  match_session session( cfg );
  return session.match( f, g );
}

class_partition classify( std::vector<truth_table> const& functions, prune_config const& cfg )
{
  class_partition part;
  if ( functions.empty() )
  {
    return part;
  }

  uint32_t const n = functions.front().arity();
  for ( auto const& f : functions )
  {
    if ( f.arity() != n )
    {
      throw std::invalid_argument( "classify requires uniform arity" );
    }
  }

  match_session session( cfg );
  std::unordered_map<truth_table, size_t, truth_table_hash> canon_to_class;
  part.class_of.resize( functions.size() );
  part.to_canon.reserve( functions.size() );

  for ( size_t i = 0; i < functions.size(); ++i )
  {
    auto const& cf = session.canon_of( functions[i] );
    auto [it, inserted] = canon_to_class.emplace( cf.canon, part.classes.size() );
    if ( inserted )
    {
      part.classes.push_back( {cf.canon, {}} );
    }
    part.classes[it->second].members.push_back( i );
    part.class_of[i] = it->second;
    part.to_canon.push_back( cf.witness );
  }

  /* Probe a bounded sample of cross-class representative pairs. */
  constexpr uint64_t probe_cap = 2000;
  for ( size_t a = 0; a < part.classes.size() && part.stats.pairs < probe_cap; ++a )
  {
    for ( size_t b = a + 1; b < part.classes.size() && part.stats.pairs < probe_cap; ++b )
    {
      auto const out = session.match( functions[part.classes[a].members.front()],
                                      functions[part.classes[b].members.front()] );
      ++part.stats.pairs;
      ++part.stats.rejected_at[static_cast<size_t>( out.resolved_phase )];
    }
  }

  return part;
}

} // namespace npnmatch
