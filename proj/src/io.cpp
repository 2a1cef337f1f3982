#include "npnmatch/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace npnmatch {

namespace {

void strip_cr( std::string& line )
{
  if ( !line.empty() && line.back() == '\r' )
  {
    line.pop_back();
  }
}

bool parse_header( std::string const& line, uint32_t& n, table_format& fmt )
{
  if ( line.rfind( "n=", 0 ) != 0 )
  {
    return false;
  }
  std::istringstream ss( line );
  std::string tok;
  uint32_t arity = 0;
  std::string format;
  while ( ss >> tok )
  {
    if ( tok.rfind( "n=", 0 ) == 0 )
    {
      try
      {
        arity = static_cast<uint32_t>( std::stoul( tok.substr( 2 ) ) );
      }
      catch ( std::exception const& )
      {
        throw std::invalid_argument( "malformed header line: " + line );
      }
    }
    else if ( tok.rfind( "format=", 0 ) == 0 )
    {
      format = tok.substr( 7 );
    }
  }
  if ( arity == 0 || ( format != "binary" && format != "hex" ) )
  {
    throw std::invalid_argument( "malformed header line: " + line );
  }
  n = arity;
  fmt = format == "binary" ? table_format::binary : table_format::hex;
  return true;
}

bool binary_only( std::string const& line )
{
  return std::all_of( line.begin(), line.end(), []( char c ) { return c == '0' || c == '1'; } );
}

} // namespace

function_file load_function_file( std::string const& path,
                                  std::optional<table_format> forced_format )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw std::runtime_error( "cannot open " + path );
  }

  std::vector<std::string> lines;
  std::string line;
  std::optional<uint32_t> header_arity;
  std::optional<table_format> header_format;
  bool first = true;
  while ( std::getline( in, line ) )
  {
    strip_cr( line );
    if ( line.empty() )
    {
      continue;
    }
    if ( first )
    {
      first = false;
      uint32_t n = 0;
      table_format fmt{};
      if ( parse_header( line, n, fmt ) )
      {
        header_arity = n;
        header_format = fmt;
        continue;
      }
    }
    lines.push_back( line );
  }
  if ( lines.empty() )
  {
    throw std::invalid_argument( "no truth tables in " + path );
  }

  table_format fmt;
  if ( forced_format )
  {
    fmt = *forced_format;
  }
  else if ( header_format )
  {
    fmt = *header_format;
  }
  else
  {
    fmt = std::all_of( lines.begin(), lines.end(), binary_only ) ? table_format::binary
                                                                 : table_format::hex;
  }

  function_file out;
  out.format = fmt;
  for ( auto const& l : lines )
  {
    auto tt = parse_truth_table( l, fmt );
    if ( out.functions.empty() )
    {
      out.arity = tt.arity();
      if ( header_arity && *header_arity != out.arity )
      {
        throw std::invalid_argument( "header arity disagrees with line length" );
      }
    }
    else if ( tt.arity() != out.arity )
    {
      throw std::invalid_argument( "mixed arity in " + path );
    }
    out.functions.push_back( std::move( tt ) );
  }
  return out;
}

void save_function_file( std::string const& path, std::vector<truth_table> const& functions,
                         table_format format, bool header )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw std::runtime_error( "cannot write " + path );
  }
  if ( header && !functions.empty() )
  {
    out << "n=" << functions.front().arity() << " format="
        << ( format == table_format::binary ? "binary" : "hex" ) << '\n';
  }
  for ( auto const& tt : functions )
  {
    out << to_string( tt, format ) << '\n';
  }
}

std::vector<uint32_t> load_class_sidecar( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw std::runtime_error( "cannot open " + path );
  }
  std::vector<uint32_t> ids;
  std::string line;
  while ( std::getline( in, line ) )
  {
    strip_cr( line );
    if ( !line.empty() )
    {
      ids.push_back( static_cast<uint32_t>( std::stoul( line ) ) );
    }
  }
  return ids;
}

void save_class_sidecar( std::string const& path, std::vector<uint32_t> const& ids )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw std::runtime_error( "cannot write " + path );
  }
  for ( auto id : ids )
  {
    out << id << '\n';
  }
}

} // namespace npnmatch
