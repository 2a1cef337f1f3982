/* Command-line front end: match two functions, classify a file, generate
 * workloads, run the benchmark harness. */

#include <npnmatch/bench.hpp>
#include <npnmatch/io.hpp>
#include <npnmatch/matcher.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace npnmatch;

std::string show_transform( npn_transform const& t )
{
  std::string s = "perm=";
  for ( uint32_t i = 0; i < t.arity(); ++i )
  {
    if ( i )
    {
      s += ',';
    }
    s += std::to_string( t.perm[i] + 1 );
  }
  s += " input_neg=";
  for ( uint32_t i = 0; i < t.arity(); ++i )
  {
    s += ( ( t.input_neg >> i ) & 1u ) ? '1' : '0';
  }
  s += " output_neg=";
  s += t.output_neg ? '1' : '0';
  return s;
}

std::optional<table_format> parse_format_flag( std::string const& fmt )
{
  if ( fmt == "binary" )
  {
    return table_format::binary;
  }
  if ( fmt == "hex" )
  {
    return table_format::hex;
  }
  return std::nullopt;
}

polarity_rule parse_rule( std::string const& rule )
{
  if ( rule == "onset" )
  {
    return polarity_rule::onset_only;
  }
  if ( rule == "offset" )
  {
    return polarity_rule::offset_only;
  }
  return polarity_rule::minority;
}

struct common_opts
{
  std::string format;
  bool no_phase3 = false;
  int max_iter = 3;
  int compress = 64;
  std::string rule = "minority";

  prune_config to_prune_config() const
  {
    prune_config cfg;
    cfg.use_advanced = !no_phase3;
    cfg.max_iter = max_iter;
    cfg.rule = parse_rule( rule );
    return cfg;
  }

  scan_width to_width() const { return compress == 32 ? scan_width::w32 : scan_width::w64; }
};

void add_prune_flags( CLI::App* cmd, common_opts& opts )
{
  cmd->add_flag( "--no-phase3", opts.no_phase3, "disable advanced signature pruning" );
  cmd->add_option( "--max-iter", opts.max_iter, "sensitivity levels examined by phase 3" )
      ->check( CLI::PositiveNumber );
  cmd->add_option( "--compress", opts.compress, "scan word width" )
      ->check( CLI::IsMember( {32, 64} ) );
  cmd->add_option( "--rule", opts.rule, "polarity rule: minority|onset|offset" )
      ->check( CLI::IsMember( {"minority", "onset", "offset"} ) );
}

int run_match( std::vector<std::string> const& files, common_opts const& opts )
{
  truth_table f, g;
  auto const forced = parse_format_flag( opts.format );
  if ( files.size() == 1 )
  {
    auto const file = load_function_file( files[0], forced );
    if ( file.functions.size() != 2 )
    {
      throw std::invalid_argument( "expected exactly two truth tables in " + files[0] );
    }
    f = file.functions[0];
    g = file.functions[1];
  }
  else
  {
    f = load_function_file( files[0], forced ).functions.front();
    g = load_function_file( files[1], forced ).functions.front();
  }

  match_session session( opts.to_prune_config(), opts.to_width() );
  auto const out = session.match( f, g );
  if ( out.equivalent )
  {
    std::cout << "EQUIVALENT " << show_transform( *out.witness ) << '\n';
    return 0;
  }
  std::cout << "NOT-EQUIVALENT phase=" << to_string( out.resolved_phase );
  if ( out.reject )
  {
    std::cout << " reason=" << to_string( *out.reject );
  }
  std::cout << '\n';
  return 1;
}

int run_classify( std::string const& path, common_opts const& opts )
{
  auto const file = load_function_file( path, parse_format_flag( opts.format ) );
  auto const part = classify( file.functions, opts.to_prune_config() );
  for ( size_t i = 0; i < file.functions.size(); ++i )
  {
    auto const& canon = part.classes[part.class_of[i]].canon;
    std::cout << i << ' ' << part.class_of[i] << ' '
              << ( canon.arity() >= 2 ? to_hex_string( canon ) : to_binary_string( canon ) )
              << '\n';
  }
  std::cout << "classes=" << part.classes.size() << '\n';
  return 0;
}

struct gen_opts
{
  uint32_t n = 5;
  uint32_t count = 100;
  std::string mode = "group1";
  uint32_t classes = 100;
  uint64_t seed = 1;
  std::string out;
  std::string sidecar;
  std::string format;
  bool header = false;
};

int run_gen( gen_opts const& o )
{
  gen_spec spec;
  spec.n = o.n;
  spec.count = o.count;
  spec.class_count = o.classes;
  spec.seed = o.seed;
  spec.mode = o.mode == "group2" ? gen_mode::group2 : gen_mode::group1;

  table_format fmt = o.n >= 8 ? table_format::hex : table_format::binary;
  if ( auto const forced = parse_format_flag( o.format ) )
  {
    fmt = *forced;
  }

  std::vector<truth_table> functions;
  std::vector<uint32_t> ids;
  if ( spec.mode == gen_mode::group1 )
  {
    functions = gen_group1( spec );
  }
  else
  {
    for ( auto& lf : gen_group2( spec ) )
    {
      functions.push_back( std::move( lf.tt ) );
      ids.push_back( lf.class_id );
    }
  }

  save_function_file( o.out, functions, fmt, o.header );
  if ( !o.sidecar.empty() )
  {
    if ( spec.mode != gen_mode::group2 )
    {
      throw std::invalid_argument( "sidecar applies to group2 only" );
    }
    save_class_sidecar( o.sidecar, ids );
  }
  std::cout << "generated n=" << o.n << " count=" << o.count << " mode=" << o.mode
            << " seed=" << o.seed << " file=" << o.out << '\n';
  return 0;
}

struct bench_opts
{
  std::vector<uint32_t> ns{5};
  uint64_t pairs = 10000;
  std::string mode = "group1";
  uint32_t classes = 100;
  double eq_fraction = 0.15;
  uint32_t repeat = 10;
  uint64_t seed = 1;
  bool ablate = false;
  common_opts common;
};

int run_bench_cmd( bench_opts const& o )
{
  bench_config cfg;
  cfg.arities = o.ns;
  cfg.pairs = o.pairs;
  cfg.mode = o.mode == "group2" ? gen_mode::group2 : gen_mode::group1;
  cfg.class_count = o.classes;
  cfg.eq_fraction = o.eq_fraction;
  cfg.repeat = o.repeat;
  cfg.seed = o.seed;
  cfg.prune = o.common.to_prune_config();
  cfg.width = o.common.to_width();
  cfg.ablate_phase4_only = o.ablate;

  auto const report = run_bench( cfg );
  report.print_human( std::cout );
  std::cout << '\n';
  report.print_machine( std::cout );
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{"NPN Boolean matching with sensitivity signature pruning"};
  app.require_subcommand( 1 );

  /* match */
  auto* match_cmd = app.add_subcommand( "match", "decide NPN equivalence of two functions" );
  std::vector<std::string> match_files;
  common_opts match_opts;
  match_cmd->add_option( "files", match_files, "two files, or one file with two lines" )
      ->expected( 1, 2 )
      ->required();
  match_cmd->add_option( "--format", match_opts.format, "binary|hex (default: inferred)" );
  add_prune_flags( match_cmd, match_opts );

  /* classify */
  auto* classify_cmd = app.add_subcommand( "classify", "bucket a file of functions by NPN class" );
  std::string classify_path;
  common_opts classify_opts;
  classify_cmd->add_option( "file", classify_path )->required();
  classify_cmd->add_option( "--format", classify_opts.format, "binary|hex (default: inferred)" );
  add_prune_flags( classify_cmd, classify_opts );

  /* gen */
  auto* gen_cmd = app.add_subcommand( "gen", "generate a workload file" );
  gen_opts gen_o;
  gen_cmd->add_option( "--n", gen_o.n, "arity" )->required()->check( CLI::Range( 1, 20 ) );
  gen_cmd->add_option( "--count", gen_o.count, "number of functions" )->required();
  gen_cmd->add_option( "--mode", gen_o.mode )->check( CLI::IsMember( {"group1", "group2"} ) );
  gen_cmd->add_option( "--classes", gen_o.classes, "group2 class count" );
  gen_cmd->add_option( "--seed", gen_o.seed );
  gen_cmd->add_option( "--out", gen_o.out, "output file" )->required();
  gen_cmd->add_option( "--sidecar", gen_o.sidecar, "class-id listing (group2)" );
  gen_cmd->add_option( "--format", gen_o.format, "binary|hex (default: hex for n>=8)" );
  gen_cmd->add_flag( "--header", gen_o.header, "emit the n=/format= header line" );

  /* bench */
  auto* bench_cmd = app.add_subcommand( "bench", "collision and runtime report" );
  bench_opts bench_o;
  bench_cmd->add_option( "--ns", bench_o.ns, "arities" )->delimiter( ',' );
  bench_cmd->add_option( "--pairs", bench_o.pairs, "matchings per arity" );
  bench_cmd->add_option( "--mode", bench_o.mode )->check( CLI::IsMember( {"group1", "group2"} ) );
  bench_cmd->add_option( "--classes", bench_o.classes, "group2 class count" );
  bench_cmd->add_option( "--eq-fraction", bench_o.eq_fraction, "group2 equivalent-pair rate" );
  bench_cmd->add_option( "--repeat", bench_o.repeat, "timing repetitions" );
  bench_cmd->add_option( "--seed", bench_o.seed );
  bench_cmd->add_flag( "--ablate-p4", bench_o.ablate, "also time a phase-4-only run" );
  add_prune_flags( bench_cmd, bench_o.common );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return 2;
  }

  try
  {
    if ( match_cmd->parsed() )
    {
      return run_match( match_files, match_opts );
    }
    if ( classify_cmd->parsed() )
    {
      return run_classify( classify_path, classify_opts );
    }
    if ( gen_cmd->parsed() )
    {
      return run_gen( gen_o );
    }
    if ( bench_cmd->parsed() )
    {
      return run_bench_cmd( bench_o );
    }
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
