#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ivdg/domination.hpp"
#include "ivdg/graph.hpp"
#include "ivdg/interval.hpp"
#include "ivdg/kernel.hpp"
#include "ivdg/point_point.hpp"
#include "ivdg/vertex_order.hpp"

// Text formats. Blank lines are ignored; tokens are whitespace separated.
//
//   digraph <n>          then  <u> <v>               (u == v is a loop)
//   intervals <n>        then  <v> <lS> <rS> <lT> <rT>   (integers, p/q, decimals)
//   bigraph <a> <b>      then  A <i> <l> <r>  /  B <j> <l> <r>
//   weights <n>          then  <v> <w>
//   subdivision <n> <k> <m>  then  <i> <j> <u^1> ... <u^k>
//   ordering / vertex set: one line of space-separated ids (may be empty)
namespace ivdg::io {

using Instance = std::variant<Digraph, IntervalRep, IntervalBigraphRep>;

Digraph parse_digraph(std::string_view text);
IntervalRep parse_intervals(std::string_view text);
IntervalBigraphRep parse_bigraph(std::string_view text);
std::vector<Weight> parse_weights(std::string_view text);
std::vector<Vertex> parse_vertex_list(std::string_view text);
Ordering parse_ordering(std::string_view text);
SubdivisionMap parse_subdivision(std::string_view text);
/// Dispatches on the header keyword.
Instance parse_instance(std::string_view text);

std::string emit(const Digraph& g);
std::string emit(const IntervalRep& rep);
std::string emit(const IntervalBigraphRep& rep);
std::string emit_weights(std::span<const Weight> weights);
std::string emit_vertex_list(std::span<const Vertex> vertices);
std::string emit(const Ordering& ord);
std::string emit(const SubdivisionMap& map);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ivdg::io
