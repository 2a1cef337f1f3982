#include "npnmatch/bench.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace npnmatch {

namespace {

using clock_type = std::chrono::steady_clock;

struct pair_workload
{
  std::vector<truth_table> pool;
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
};

pair_workload build_workload( bench_config const& cfg, uint32_t n, uint64_t seed )
{
  pair_workload w;
  if ( cfg.mode == gen_mode::group1 )
  {
    gen_spec spec;
    spec.n = n;
    spec.mode = gen_mode::group1;
    spec.count = static_cast<uint32_t>( 2 * cfg.pairs );
    spec.seed = seed;
    w.pool = gen_group1( spec );
    w.pairs.reserve( cfg.pairs );
    for ( uint64_t i = 0; i < cfg.pairs; ++i )
    {
      w.pairs.emplace_back( static_cast<uint32_t>( 2 * i ), static_cast<uint32_t>( 2 * i + 1 ) );
    }
    return w;
  }

  gen_spec spec;
  spec.n = n;
  spec.mode = gen_mode::group2;
  spec.class_count = cfg.class_count;
  spec.count = static_cast<uint32_t>(
      std::min<uint64_t>( 2 * cfg.pairs, std::max<uint64_t>( 4ull * cfg.class_count, 2000 ) ) );
  spec.seed = seed;
  auto labeled = gen_group2( spec );

  std::vector<std::vector<uint32_t>> members( cfg.class_count );
  w.pool.reserve( labeled.size() );
  for ( uint32_t i = 0; i < labeled.size(); ++i )
  {
    members[labeled[i].class_id].push_back( i );
    w.pool.push_back( std::move( labeled[i].tt ) );
  }
  std::vector<uint32_t> eligible; /* classes with at least two members */
  for ( uint32_t c = 0; c < members.size(); ++c )
  {
    if ( members[c].size() >= 2 )
    {
      eligible.push_back( c );
    }
  }
  if ( eligible.empty() )
  {
    throw std::invalid_argument( "group2 pool too small for equivalent pairs" );
  }

  seeded_rng rng( seed ^ 0x9e3779b97f4a7c15ull );
  w.pairs.reserve( cfg.pairs );
  for ( uint64_t i = 0; i < cfg.pairs; ++i )
  {
    if ( rng.unit() < cfg.eq_fraction )
    {
      auto const& m = members[eligible[rng.below( eligible.size() )]];
      auto const a = rng.below( m.size() );
      auto b = rng.below( m.size() - 1 );
      if ( b >= a )
      {
        ++b;
      }
      w.pairs.emplace_back( m[a], m[b] );
    }
    else
    {
      w.pairs.emplace_back( static_cast<uint32_t>( rng.below( w.pool.size() ) ),
                            static_cast<uint32_t>( rng.below( w.pool.size() ) ) );
    }
  }
  return w;
}

struct stream_result
{
  uint64_t equivalent = 0;
  uint64_t coll_p2 = 0;
  uint64_t coll_p3 = 0;
  std::array<double, 4> phase_seconds{};
  double total_seconds = 0;
};

stream_result run_stream( pair_workload const& w, prune_config const& pc, scan_width width,
                          pipeline_mode mode, bool cache )
{
  stream_result r;
  match_session session( pc, width, mode, cache );
  auto const start = clock_type::now();
  for ( auto const& [a, b] : w.pairs )
  {
    auto const out = session.match( w.pool[a], w.pool[b] );
    r.equivalent += out.equivalent;
    r.coll_p2 += out.collided_after_p2;
    r.coll_p3 += out.collided_after_p3;
    for ( size_t p = 0; p < 4; ++p )
    {
      r.phase_seconds[p] += out.phase_seconds[p];
    }
  }
  r.total_seconds = std::chrono::duration<double>( clock_type::now() - start ).count();
  return r;
}

double mean_ms( std::vector<double> const& seconds )
{
  double sum = 0;
  for ( double s : seconds )
  {
    sum += s;
  }
  return 1e3 * sum / static_cast<double>( seconds.size() );
}

double median_ms( std::vector<double> seconds )
{
  std::sort( seconds.begin(), seconds.end() );
  size_t const m = seconds.size() / 2;
  double const v = seconds.size() % 2 ? seconds[m] : 0.5 * ( seconds[m - 1] + seconds[m] );
  return 1e3 * v;
}

} // namespace

bench_report run_bench( bench_config const& cfg )
{
  bench_report report;
  for ( auto const n : cfg.arities )
  {
    uint64_t const seed = cfg.seed * 1000003ull + n;
    auto const w = build_workload( cfg, n, seed );
    bool const cache = cfg.mode == gen_mode::group2;

    bench_row row;
    row.n = n;
    row.matchings = w.pairs.size();

    /* Collision accounting and per-phase times come from the configured run;
     * a second series with phase 3 toggled fills the other total column. */
    prune_config primary = cfg.prune;
    prune_config secondary = cfg.prune;
    secondary.use_advanced = !primary.use_advanced;

    std::vector<double> primary_totals, secondary_totals, p4_only;
    for ( uint32_t rep = 0; rep < cfg.repeat; ++rep )
    {
      auto const res = run_stream( w, primary, cfg.width, pipeline_mode::full, cache );
      if ( rep == 0 )
      {
        row.equivalent_pairs = res.equivalent;
        row.coll_after_p2 = res.coll_p2;
        row.coll_after_p3 = res.coll_p3;
      }
      else
      {
        assert( res.coll_p2 == row.coll_after_p2 && res.coll_p3 == row.coll_after_p3 );
      }
      primary_totals.push_back( res.total_seconds );
      for ( size_t p = 0; p < 4; ++p )
      {
        row.phase_ms[p] += 1e3 * res.phase_seconds[p] / cfg.repeat;
      }
    }
    for ( uint32_t rep = 0; rep < cfg.repeat; ++rep )
    {
      secondary_totals.push_back(
          run_stream( w, secondary, cfg.width, pipeline_mode::full, cache ).total_seconds );
    }
    if ( cfg.ablate_phase4_only )
    {
      for ( uint32_t rep = 0; rep < cfg.repeat; ++rep )
      {
        p4_only.push_back(
            run_stream( w, secondary, cfg.width, pipeline_mode::phase4_only, cache ).total_seconds );
      }
      row.phase4_only_mean_ms = mean_ms( p4_only );
    }

    auto const& with_p3 = primary.use_advanced ? primary_totals : secondary_totals;
    auto const& without_p3 = primary.use_advanced ? secondary_totals : primary_totals;
    row.with_p3_mean_ms = mean_ms( with_p3 );
    row.with_p3_median_ms = median_ms( with_p3 );
    row.without_p3_mean_ms = mean_ms( without_p3 );
    row.without_p3_median_ms = median_ms( without_p3 );
    report.rows.push_back( row );
  }
  return report;
}

void bench_report::print_human( std::ostream& os ) const
{
  os << std::setw( 4 ) << "n" << std::setw( 10 ) << "pairs" << std::setw( 8 ) << "eq"
     << std::setw( 10 ) << "coll.P2" << std::setw( 10 ) << "coll.P3" << std::setw( 10 ) << "t1(ms)"
     << std::setw( 10 ) << "t2(ms)" << std::setw( 10 ) << "t3(ms)" << std::setw( 12 ) << "t4(ms)"
     << std::setw( 12 ) << "w/P3(ms)" << std::setw( 12 ) << "w/o P3(ms)";
  if ( !rows.empty() && rows.front().phase4_only_mean_ms > 0 )
  {
    os << std::setw( 12 ) << "P4only(ms)";
  }
  os << '\n';
  for ( auto const& r : rows )
  {
    os << std::setw( 4 ) << r.n << std::setw( 10 ) << r.matchings << std::setw( 8 )
       << r.equivalent_pairs << std::setw( 10 ) << r.coll_after_p2 << std::setw( 10 )
       << r.coll_after_p3 << std::fixed << std::setprecision( 2 ) << std::setw( 10 )
       << r.phase_ms[0] << std::setw( 10 ) << r.phase_ms[1] << std::setw( 10 ) << r.phase_ms[2]
       << std::setw( 12 ) << r.phase_ms[3] << std::setw( 12 ) << r.with_p3_mean_ms
       << std::setw( 12 ) << r.without_p3_mean_ms;
    if ( r.phase4_only_mean_ms > 0 )
    {
      os << std::setw( 12 ) << r.phase4_only_mean_ms;
    }
    os << '\n';
    os.unsetf( std::ios::fixed );
  }
}

void bench_report::print_machine( std::ostream& os ) const
{
  for ( auto const& r : rows )
  {
    os << "row n=" << r.n << " matchings=" << r.matchings << " eq=" << r.equivalent_pairs
       << " coll_after_p2=" << r.coll_after_p2 << " coll_after_p3=" << r.coll_after_p3 << '\n';
    os << std::fixed << std::setprecision( 3 );
    os << "time n=" << r.n << " t1_ms=" << r.phase_ms[0] << " t2_ms=" << r.phase_ms[1]
       << " t3_ms=" << r.phase_ms[2] << " t4_ms=" << r.phase_ms[3]
       << " total_w_p3_mean_ms=" << r.with_p3_mean_ms
       << " total_w_p3_median_ms=" << r.with_p3_median_ms
       << " total_wo_p3_mean_ms=" << r.without_p3_mean_ms
       << " total_wo_p3_median_ms=" << r.without_p3_median_ms;
    if ( r.phase4_only_mean_ms > 0 )
    {
      os << " p4_only_mean_ms=" << r.phase4_only_mean_ms;
    }
    os << '\n';
    os.unsetf( std::ios::fixed );
  }
}

} // namespace npnmatch
