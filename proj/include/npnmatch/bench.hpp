/*!
  \file bench.hpp
  \brief Benchmark harness: collision counting and per-phase timing over
         generated pair workloads.
*/

#pragma once

#include "generator.hpp"
#include "matcher.hpp"

#include <iosfwd>
#include <vector>

namespace npnmatch {

struct bench_config
{
  std::vector<uint32_t> arities{5};
  uint64_t pairs = 10000;
  gen_mode mode = gen_mode::group1;
  uint32_t class_count = 100;  /*!< group2 pools */
  double eq_fraction = 0.15;   /*!< group2 pair streams */
  uint32_t repeat = 10;
  uint64_t seed = 1;
  prune_config prune;
  scan_width width = scan_width::w64;
  bool ablate_phase4_only = false; /*!< also time a pruning-free run */
};

struct bench_row
{
  uint32_t n = 0;
  uint64_t matchings = 0;
  uint64_t equivalent_pairs = 0;
  uint64_t coll_after_p2 = 0;
  uint64_t coll_after_p3 = 0;
  std::array<double, 4> phase_ms{}; /*!< cumulative, mean over repeats */
  double with_p3_mean_ms = 0;
  double with_p3_median_ms = 0;
  double without_p3_mean_ms = 0;
  double without_p3_median_ms = 0;
  double phase4_only_mean_ms = 0; /*!< 0 unless the ablation ran */
};

struct bench_report
{
  std::vector<bench_row> rows;

  void print_human( std::ostream& os ) const;

  /*! Line-oriented key=value output; counts on `row` lines, timings on
      `time` lines, so deterministic fields are byte-stable across runs. */
  void print_machine( std::ostream& os ) const;
};

bench_report run_bench( bench_config const& cfg );

} // namespace npnmatch
