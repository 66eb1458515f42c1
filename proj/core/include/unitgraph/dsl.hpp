#pragma once

#include <string_view>

#include "unitgraph/descriptor.hpp"

namespace unitgraph {

/// Parses a ring expression:
///
///   ring  := atom ( 'x' atom )*
///   atom  := 'Z' NAT | 'GF(' NAT ')' | 'M' NAT '(' ring ')' | 'GA(' field ',' group ')' | '(' ring ')'
///   field := 'GF(' NAT ')' | 'Z' PRIME
///   group := 'C' NAT | 'D4' | 'Q8'
///
/// Whitespace is ignored between tokens. Nested products are flattened into
/// one Product node. Throws ParseError carrying the offending offset.
RingDescriptor parse_ring_expr(std::string_view text);

}  // namespace unitgraph
