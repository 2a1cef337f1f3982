/*!
  \file io.hpp
  \brief Truth-table text files: one function per line, binary or hex.

  An optional first line `n=<arity> format=<binary|hex>` pins the layout;
  otherwise the arity is inferred from the line length and the format from
  the character set (any non-binary character selects hex).
*/

#pragma once

#include "truth_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace npnmatch {

struct function_file
{
  uint32_t arity = 0;
  table_format format = table_format::binary;
  std::vector<truth_table> functions;
};

/*! \throws std::runtime_error on I/O failure, std::invalid_argument on
    malformed lines or mixed arity. */
function_file load_function_file( std::string const& path,
                                  std::optional<table_format> forced_format = {} );

void save_function_file( std::string const& path, std::vector<truth_table> const& functions,
                         table_format format, bool header = false );

/*! Sidecar class-id listing: one integer per line. */
std::vector<uint32_t> load_class_sidecar( std::string const& path );
void save_class_sidecar( std::string const& path, std::vector<uint32_t> const& ids );

} // namespace npnmatch
