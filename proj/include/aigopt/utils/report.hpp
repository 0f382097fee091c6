/* aigopt: And-Inverter Graph optimization toolkit
 * Copyright (C) 2026
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file report.hpp
  \brief Valid-iteration overlap analysis and CSV emission (RFC 4180)
*/

#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdint>
#include <string>
#include <vector>

#include "../algorithms/passes.hpp"

namespace aigopt
{

/*! \brief Set algebra over valid-iteration root sets of two runs. */
struct overlap_result
{
  std::vector<uint32_t> only_a;
  std::vector<uint32_t> only_b;
  std::vector<uint32_t> both;
};

inline overlap_result overlap( std::vector<uint32_t> roots_a, std::vector<uint32_t> roots_b )
{
  std::sort( roots_a.begin(), roots_a.end() );
  roots_a.erase( std::unique( roots_a.begin(), roots_a.end() ), roots_a.end() );
  std::sort( roots_b.begin(), roots_b.end() );
  roots_b.erase( std::unique( roots_b.begin(), roots_b.end() ), roots_b.end() );
  overlap_result r;
  std::set_difference( roots_a.begin(), roots_a.end(), roots_b.begin(), roots_b.end(),
                       std::back_inserter( r.only_a ) );
  std::set_difference( roots_b.begin(), roots_b.end(), roots_a.begin(), roots_a.end(),
                       std::back_inserter( r.only_b ) );
  std::set_intersection( roots_a.begin(), roots_a.end(), roots_b.begin(), roots_b.end(),
                         std::back_inserter( r.both ) );
  return r;
}

struct report_row
{
  std::string design;
  std::string pass;
  uint32_t nodes_before{ 0 };
  uint32_t nodes_after{ 0 };
  uint32_t depth_before{ 0 };
  uint32_t depth_after{ 0 };
  uint64_t valid_rw{ 0 };
  uint64_t valid_rs{ 0 };
  uint64_t valid_rf{ 0 };
  uint64_t total_iters{ 0 };
  double wall_ms{ 0.0 };
};

inline report_row make_row( std::string design, pass_stats const& stats )
{
  report_row row;
  row.design = std::move( design );
  row.pass = stats.pass_name;
  row.nodes_before = stats.nodes_before;
  row.nodes_after = stats.nodes_after;
  row.depth_before = stats.depth_before;
  row.depth_after = stats.depth_after;
  row.valid_rw = stats.valid( op_kind::rw );
  row.valid_rs = stats.valid( op_kind::rs );
  row.valid_rf = stats.valid( op_kind::rf );
  row.total_iters = stats.total_iterations;
  row.wall_ms = stats.wall_ms;
  return row;
}

namespace detail
{

inline std::string csv_quote( std::string const& field )
{
  if ( field.find_first_of( ",\"\r\n" ) == std::string::npos )
  {
    return field;
  }
  std::string quoted = "\"";
  for ( char c : field )
  {
    quoted += c;
    if ( c == '"' )
    {
      quoted += '"';
    }
  }
  quoted += '"';
  return quoted;
}

} // namespace detail

/*! \brief CSV with a fixed schema; reduction_pct derives from the node columns. */
inline std::string emit_csv( std::vector<report_row> const& rows )
{
  std::string out = "design,pass,nodes_before,nodes_after,reduction_pct,depth_before,depth_after,"
                    "valid_rw,valid_rs,valid_rf,total_iters,wall_ms\r\n";
  char buffer[64];
  for ( auto const& r : rows )
  {
    double pct = r.nodes_before == 0
                     ? 0.0
                     : 100.0 * ( static_cast<double>( r.nodes_before ) - static_cast<double>( r.nodes_after ) ) /
                           static_cast<double>( r.nodes_before );
    out += detail::csv_quote( r.design );
    out += ',';
    out += detail::csv_quote( r.pass );
    std::snprintf( buffer, sizeof buffer, ",%u,%u,%.2f,%u,%u", r.nodes_before, r.nodes_after, pct,
                   r.depth_before, r.depth_after );
    out += buffer;
    std::snprintf( buffer, sizeof buffer, ",%llu,%llu,%llu,%llu,%.3f",
                   static_cast<unsigned long long>( r.valid_rw ),
                   static_cast<unsigned long long>( r.valid_rs ),
                   static_cast<unsigned long long>( r.valid_rf ),
                   static_cast<unsigned long long>( r.total_iters ), r.wall_ms );
    out += buffer;
    out += "\r\n";
  }
  return out;
}

} // namespace aigopt
